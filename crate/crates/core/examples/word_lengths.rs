//! Word lengths of single elements by bidirectional search, without
//! enumerating the whole group.

use altdiam::gensets::{a4_alpha_beta, a4_genset, a5_power_genset, A5Letters};
use altdiam::{word_length, Perm, PowerElement};

fn main() {
    let g = a4_genset(6).unwrap();
    let (alpha, beta) = a4_alpha_beta();
    for (name, p) in [
        ("alpha", alpha),
        ("beta", beta.clone()),
        ("beta^2", beta.pow(2)),
    ] {
        let x = PowerElement::slot_embed(&p, 3, 6).unwrap();
        println!(
            "A_4^6: {name} in slot 3 has length {}",
            word_length(&x, &g).unwrap()
        );
    }

    let l = A5Letters::new();
    let g = a5_power_genset(6).unwrap();
    let id = Perm::identity(5);
    let x = PowerElement::new(vec![
        l.a.clone(),
        id.clone(),
        l.b.clone(),
        id.clone(),
        l.c.clone(),
        id,
    ])
    .unwrap();
    println!("A_5^6: {x} has length {}", word_length(&x, &g).unwrap());
}

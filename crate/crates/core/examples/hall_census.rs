//! Generating pairs of `A_5` up to automorphism, the 19 listed
//! representatives, and the column test that certifies `C_1` to `C_8`.

use altdiam::gensets::{a5_bases19, a5_bases19_genset, a5_power_genset};
use altdiam::hall::{a5_transversal, census_a5};
use altdiam::hall_check;

fn main() {
    let c = census_a5();
    println!(
        "{} generating pairs, {} classes by counting, {} by canonical forms",
        c.pair_count, c.class_count, c.orbit_count
    );
    let t = a5_transversal(&a5_bases19());
    println!("class sizes of the listed pairs: {:?}", t.class_sizes);
    println!("complete transversal: {}", t.is_complete());
    println!(
        "bases19 generates A_5^19: {}",
        hall_check(&a5_bases19_genset()).unwrap().verdict
    );
    for k in 1..=8 {
        let h = hall_check(&a5_power_genset(k).unwrap()).unwrap();
        println!("C{k} generates A_5^{k}: {}", h.verdict);
    }
}

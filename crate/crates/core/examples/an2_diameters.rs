//! The two-element sets `{(x,y),(y,x)}` of `A_n^2`: power identities, the
//! column test, and exact diameters for `n <= 7` next to `n! - 4`.

use altdiam::gensets::an2_genset;
use altdiam::perm::FACTORIALS;
use altdiam::verify::an2_identities;
use altdiam::{hall_check, DiameterEngine};

#[allow(clippy::needless_range_loop)]
fn main() {
    let engine = DiameterEngine::new();
    for n in 5..=9 {
        let g = an2_genset(n).unwrap();
        let gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
        println!("n={n}: {}", gens.join(", "));
        for (identity, holds) in an2_identities(n).unwrap() {
            println!("  {identity}: {holds}");
        }
        match hall_check(&g) {
            Ok(h) => println!("  column test: {}", h.verdict),
            Err(e) => println!("  column test: {e}"),
        }
        if n <= 7 {
            let r = engine.diameter_bfs(&g).unwrap();
            println!(
                "  diameter {} over {} states (n!-4 = {})",
                r.diameter,
                r.reached,
                FACTORIALS[n] - 4
            );
        }
    }
}

//! `A_5^k` over `C_k`: exact diameters for `k <= 4` (pass `5` as the first
//! argument to include `A_5^5`, which needs about 3 GB and a few minutes),
//! and the bound obtained from the odd-slot and even-slot projections.

use altdiam::gensets::a5_power_genset;
use altdiam::verify::{reconstruct_chain, CHAIN_CLAIMS};
use altdiam::DiameterEngine;

fn main() {
    let max_k: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let engine = DiameterEngine::new();
    println!("exact search");
    for k in 1..=max_k {
        let g = a5_power_genset(k).unwrap();
        match engine.diameter_bfs(&g) {
            Ok(r) => println!(
                "  k={k}: diameter {:>3} (58k = {:>3}), {} states, {:.2}s",
                r.diameter,
                58 * k,
                r.reached,
                r.elapsed_secs
            ),
            Err(e) => println!("  k={k}: {e}"),
        }
    }
    println!("projection bound: cost x (odd-slot diameter + even-slot diameter)");
    for (k, claimed) in CHAIN_CLAIMS {
        let c = reconstruct_chain(&engine, k)
            .unwrap()
            .expect("both projections exist");
        println!(
            "  k={k}: {} x ({} + {}) = {} (stated {claimed})",
            c.cost, c.odd_diameter, c.even_diameter, c.bound
        );
    }
}

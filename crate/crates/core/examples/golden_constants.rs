//! Diameters of four small Cayley graphs of `A_5` and `A_5^2` under both
//! word conventions. Only the directed one reproduces 10, 18, 9, 20.

use altdiam::verify::{golden_constants, GOLDEN_CLAIMS};
use altdiam::DiameterEngine;

fn main() {
    let g = golden_constants(&DiameterEngine::new(), false).expect("small searches");
    println!(
        "{:<20} {:>8} {:>9} {:>11}",
        "generating set", "claimed", "directed", "undirected"
    );
    for (i, claimed) in GOLDEN_CLAIMS.iter().enumerate() {
        println!(
            "{:<20} {:>8} {:>9} {:>11}",
            g.names[i], claimed, g.directed[i], g.undirected[i]
        );
    }
    match g.resolved {
        Some(c) => println!("all four match under the {c} convention"),
        None => println!("no single convention matches all four"),
    }
}

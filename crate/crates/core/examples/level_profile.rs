//! Level sizes of a breadth-first search written as `d,count` CSV, for any
//! builtin selector. Usage: `level_profile [SELECTOR] [PATH]`.

use altdiam::diameter::level_profile_csv;
use altdiam::gensets::builtin;
use altdiam::DiameterEngine;

fn main() {
    let mut args = std::env::args().skip(1);
    let selector = args.next().unwrap_or_else(|| "a5-power:3".into());
    let path = args.next().unwrap_or_else(|| "levels.csv".into());
    let g = builtin(&selector).expect("known builtin");
    let r = DiameterEngine::new()
        .diameter_bfs(&g)
        .expect("search fits the default budget");
    level_profile_csv(&r, &path).unwrap();
    let widest = r
        .level_sizes
        .iter()
        .enumerate()
        .max_by_key(|(_, c)| **c)
        .unwrap();
    println!(
        "{selector}: diameter {}, widest level {} with {} elements, written to {path}",
        r.diameter, widest.0, widest.1
    );
}

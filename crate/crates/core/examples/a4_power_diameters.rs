//! Exact diameters of `A_4^n` over the size-`n` coprime generating set,
//! against the linear bound `10n`, with the per-slot word lengths behind it.

use altdiam::verify::check_a4_power;
use altdiam::DiameterEngine;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let engine = DiameterEngine::new();
    println!("n  bound  diameter  states      l(alpha) l(beta) l(beta^2) max l(g)  secs");
    for n in 2..=max_n {
        let c = check_a4_power(&engine, n).expect("search fits the default budget");
        println!(
            "{n:<2} {:<6} {:<9} {:<11} {:<8} {:<7} {:<9} {:<9} {:.2}",
            c.bound.claimed_bound,
            c.report.diameter,
            c.report.reached,
            c.slots.alpha,
            c.slots.beta,
            c.slots.beta_squared,
            c.slots.any,
            c.report.elapsed_secs
        );
    }
}

//! A set of any prescribed rational elasticity q >= 1.
//!
//! `cargo run --release --example elasticity -- 11/4`

use powmon::constructors::certify_elasticity;
use powmon::{Factorizer, Rational, Result};

fn main() -> Result<()> {
    let f = Factorizer::new();
    let targets: Vec<Rational> = match std::env::args().nth(1) {
        Some(q) => vec![q.parse()?],
        None => ["1", "3/2", "2", "5/2", "7/3", "4/3"]
            .iter()
            .map(|q| q.parse())
            .collect::<Result<_>>()?,
    };
    for q in targets {
        let c = certify_elasticity(&f, q)?;
        println!(
            "q = {q}: |W| = {}, L = {}, rho = {} ({})",
            c.set.len(),
            c.length_set,
            c.rho,
            c.method
        );
    }
    Ok(())
}

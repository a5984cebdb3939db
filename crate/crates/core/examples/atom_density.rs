//! Fraction of subsets of [0, m] containing 0 that are atoms.

use powmon::{Factorizer, FinSet, Result};

fn main() -> Result<()> {
    let f = Factorizer::new();
    for m in 1..=14u64 {
        let mut atoms = 0u64;
        for bits in 0u64..1 << m {
            let elems = (0..=m)
                .filter(|&x| x == 0 || bits >> (x - 1) & 1 == 1)
                .collect();
            if f.is_atom(&FinSet::new(elems)?)? {
                atoms += 1;
            }
        }
        let total = 1u64 << m;
        println!(
            "m = {m:>2}: {atoms:>5} / {total:>5} = {:.4}",
            atoms as f64 / total as f64
        );
    }
    Ok(())
}

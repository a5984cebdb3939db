//! Separated sums add length sets.

use powmon::constructors::{build_family, compose_sum, from_generators, generator_length_set};
use powmon::{Factorizer, FinSet, Result};

fn main() -> Result<()> {
    let f = Factorizer::new();
    let s1 = build_family(1, None)?.top().clone();
    let s2 = build_family(2, None)?.top().clone();

    let w = compose_sum(&f, &s1, &s2)?;
    println!(
        "L(S_1) = {}, L(S_2) = {}",
        f.length_set(&s1)?,
        f.length_set(&s2)?
    );
    println!("L(S_1 + 7 S_2) = {}", f.length_set(&w)?);

    if let Err(e) = compose_sum(&f, &FinSet::parse("{0,1,2,3}")?, &FinSet::pair(1)) {
        println!("{{0,1,2,3}}: {e}");
    }

    for (c, ns) in [
        (0, vec![]),
        (2, vec![]),
        (1, vec![3]),
        (0, vec![3, 4]),
        (2, vec![5]),
    ] {
        let w = from_generators(c, &ns)?;
        println!(
            "c = {c}, n = {ns:?}: |W| = {}, L = {} (expected {})",
            w.len(),
            f.length_set(&w)?,
            generator_length_set(c, &ns)
        );
    }
    Ok(())
}

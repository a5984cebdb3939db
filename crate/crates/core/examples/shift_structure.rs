//! Factorizations of x + {0, n} once n > 2 max(x).

use powmon::constructors::{predicted_length_set, shift_structure, verify_shift};
use powmon::fixtures::{interval_seed, INTERVAL_SHIFT};
use powmon::{Factorizer, FinSet, Result};

fn main() -> Result<()> {
    let f = Factorizer::new();
    let x = interval_seed();
    let st = shift_structure(&f, &x, INTERVAL_SHIFT)?;
    println!(
        "{} triples, divisors with a relatively prime pair:",
        st.m_triples.len()
    );
    for a in &st.n_set {
        println!("  {a}  L = {}", f.length_set(a)?);
    }
    println!(
        "predicted L(x + {{0,{INTERVAL_SHIFT}}}) = {}",
        predicted_length_set(&f, &st)?
    );
    print!("{}", verify_shift(&f, &x, INTERVAL_SHIFT)?);

    let small = FinSet::parse("{0,1,2}")?;
    print!("{}", verify_shift(&f, &small, 5)?);
    Ok(())
}

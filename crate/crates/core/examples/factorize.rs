//! Divisors, atoms, factorizations and length sets.

use powmon::fixtures::interval_seed;
use powmon::{Factorizer, FinSet, Result};

fn main() -> Result<()> {
    let f = Factorizer::new();

    let a = FinSet::parse("{0,1,2,3}")?;
    println!("divisors of {a}:");
    for d in f.divisors(&a)? {
        println!("  {d}");
    }
    for z in f.factorizations(&a)? {
        println!("{a} = {z}");
    }
    println!(
        "L = {}, rho = {}",
        f.length_set(&a)?,
        f.elasticity_of_set(&a)?
    );

    let x = interval_seed();
    println!("\n{x}");
    println!("atom divisors:");
    for u in f.atom_divisors(&x)? {
        println!("  {u}");
    }
    for z in f.factorizations(&x)? {
        println!("  {z}");
    }
    println!("L = {}", f.length_set(&x)?);

    // A tiny budget fails loudly instead of returning a partial answer.
    let tight = Factorizer::with_budget(5);
    println!("\nwith budget 5: {:?}", tight.factorizations(&x).err());
    Ok(())
}

//! Parsing, sumsets, dilation and gcd.

use powmon::{FinSet, Result};

fn main() -> Result<()> {
    let a: FinSet = "{0,1,4,5}".parse()?;
    let b = FinSet::parse("{3, 0}")?;
    println!("{a} + {b} = {}", a.sumset(&b)?);

    let c = FinSet::parse("{0,1,2}")?;
    println!("3 * {c} = {}", c.dilate(3)?);
    println!("gcd{{0,4,10}} = {}", FinSet::parse("{0,4,10}")?.gcd());

    // {0} is the identity
    assert_eq!(a.sumset(&FinSet::zero())?, a);

    match FinSet::parse("{1,2}") {
        Err(e) => println!("{{1,2}} rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    println!("{}", serde_json::to_string(&a).unwrap());
    Ok(())
}

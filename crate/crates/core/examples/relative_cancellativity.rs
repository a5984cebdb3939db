//! Relative cancellativity, relative primality and separated sums.

use powmon::cancellativity::{
    are_relatively_prime, gcd_criterion, relcanc_witness, verify_separated_sum,
};
use powmon::fixtures::boundary_sets;
use powmon::{Factorizer, FinSet, Result};

fn main() -> Result<()> {
    let f = Factorizer::new();
    let s = boundary_sets();

    for (name, set) in [
        ("A", &s.a),
        ("B", &s.b),
        ("C", &s.c),
        ("D", &s.d),
        ("E", &s.e),
    ] {
        match relcanc_witness(&f, set)? {
            None => println!("{name} = {set}: relatively cancellative"),
            Some(w) => println!("{name} = {set}: {} + {} = {} + {}", w.b, w.c, w.b, w.d),
        }
    }

    let (p, q) = (FinSet::parse("{0,1}")?, FinSet::parse("{0,1,2}")?);
    println!(
        "\n{p} and {q} relatively prime: {}",
        are_relatively_prime(&f, &p, &q)?
    );
    let s1 = FinSet::parse("{0,1,3,4,5,7,8}")?;
    println!("gcd criterion on {s1}: {}", gcd_criterion(&f, &s1)?);

    let report = verify_separated_sum(&f, &s.c, &FinSet::parse("{0,3}")?)?;
    println!("\n{}", serde_json::to_string_pretty(&report).unwrap());

    for (x, y) in [(&s.a, &s.b), (&s.c, &s.d), (&s.c, &s.e)] {
        if let Err(e) = verify_separated_sum(&f, x, y) {
            println!("{x} + {y}: {e}");
        }
    }
    Ok(())
}

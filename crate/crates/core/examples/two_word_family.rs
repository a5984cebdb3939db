//! Sets with exactly two factorizations, of lengths 2 and i + 2.
//!
//! `cargo run --release --example two_word_family -- 4`

use powmon::constructors::{build_family, verify_family};
use powmon::{Factorizer, Result};

fn main() -> Result<()> {
    let top: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("index"))
        .unwrap_or(3);
    let f = Factorizer::new();
    let fam = build_family(top, None)?;
    for i in 1..=top {
        let s = &fam.s[i];
        println!(
            "S_{i}: n_{i} = {}, |S| = {}, max = {}, L = {}",
            fam.n[i - 1],
            s.len(),
            s.max_element(),
            f.length_set(s)?
        );
    }
    println!();
    print!("{}", verify_family(&f, &fam)?);

    // Any sequence growing fast enough works too.
    let custom = build_family(2, Some(&[7, 50]))?;
    println!("\nn = [7, 50]: S_2 = {}", custom.top());
    println!("passed: {}", verify_family(&f, &custom)?.passed());
    Ok(())
}

//! Sets whose length set is {k, k+1, k+2}.

use powmon::constructors::interval_three;
use powmon::{Factorizer, Result};

fn main() -> Result<()> {
    let f = Factorizer::new();
    for k in 2..=7 {
        let w = interval_three(k)?;
        println!(
            "k = {k}: |W| = {:>4}, max = {:>5}, L = {}",
            w.len(),
            w.max_element(),
            f.length_set(&w)?
        );
    }
    Ok(())
}

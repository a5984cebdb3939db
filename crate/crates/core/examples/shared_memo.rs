//! Several threads factorizing with one shared memo table.

use std::thread;

use powmon::constructors::interval_three;
use powmon::factorizer::DEFAULT_BUDGET;
use powmon::{Factorizer, SharedMemo};

fn main() {
    let memo = SharedMemo::new();
    let handles: Vec<_> = (2..=6)
        .map(|k| {
            let memo = memo.clone();
            thread::spawn(move || {
                let f = Factorizer::with_shared_memo(DEFAULT_BUDGET, memo);
                let w = interval_three(k).unwrap();
                (k, f.length_set(&w).unwrap())
            })
        })
        .collect();
    for h in handles {
        let (k, l) = h.join().unwrap();
        println!("interval_three({k}) has L = {l}");
    }
}

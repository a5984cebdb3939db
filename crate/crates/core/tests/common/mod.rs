#![allow(dead_code)]

pub mod oracle;

use powmon::FinSet;

pub fn s(t: &str) -> FinSet {
    t.parse().unwrap()
}

// The longest common prefix of two distinct factor occurrences is at most
// M, the largest length of two consecutive ICFL factors.

use std::error::Error;

use icfl::alphabet::Word;
use icfl::suffixes::{verify_lcp_bound, verify_lcp_bound_with, LcpBoundOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["dabadabdabdadac", "aaaaaaaaaaaabbab"] {
        let r = verify_lcp_bound(&Word::from_bytes(text))?;
        println!(
            "{text}: M = {}, max lcp {} ({}, {} pairs)",
            r.m,
            r.max_observed_lcp,
            r.method.name(),
            r.pairs
        );
    }

    // long words fall back to seeded sampling of suffix pairs
    let long: String = "abaab".repeat(1200);
    let opts = LcpBoundOptions {
        samples: 20_000,
        ..LcpBoundOptions::default()
    };
    let r = verify_lcp_bound_with(&Word::from_bytes(&long), &opts)?;
    println!("(abaab)^1200: M = {}, max lcp {} ({})", r.m, r.max_observed_lcp, r.method.name());

    match verify_lcp_bound(&Word::from_bytes("dcba")) {
        Err(e) => println!("dcba: {e}"),
        Ok(r) => println!("dcba: M = {}", r.m),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

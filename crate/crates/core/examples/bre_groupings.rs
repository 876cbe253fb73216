// Bounded right extensions, prefix chains of CFL_in and the groupings they
// admit.

use std::error::Error;

use icfl::alphabet::{Order, Word};
use icfl::icfl::{bre, enumerate_groupings, icfl, is_grouping, pmci_chains};
use icfl::lyndon::cfl;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Word::from_bytes("dabadabdabdadac");
    if let Some(d) = bre(&w)? {
        println!("bre of {w}: p = {}, p̄ = {}, r = {:?}", d.p, d.p_bar, d.r.to_string());
        println!("  z = {} is the shortest prefix that is not inverse Lyndon", d.z);
    }

    let base = cfl(&w, Order::Inverse)?;
    let chains: Vec<String> = pmci_chains(&base)?.iter().map(|c| c.to_string()).collect();
    println!("CFL_in = {base}, chains {}", chains.join(" "));

    let f = icfl(&w)?;
    let witness = is_grouping(&f, &base)?.ok_or("ICFL should group CFL_in")?;
    println!("ICFL = {f}, boundaries {:?}", witness.boundaries);

    println!("all groupings of CFL_in:");
    for g in enumerate_groupings(&base)? {
        let mark = if g.cuts() == f.cuts() { "  <- ICFL" } else { "" };
        println!("  {g}{mark}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

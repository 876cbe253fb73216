// Lyndon, anti-Lyndon and inverse Lyndon factorizations of a few words,
// including one under a custom alphabet order.

use std::error::Error;
use std::sync::Arc;

use icfl::alphabet::{Order, OrderedAlphabet, Word};
use icfl::icfl::{icfl, icfl_with_steps};
use icfl::lyndon::cfl;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["dabadabdabdadac", "aaaaaaaaaaaabbab", "banana"] {
        let w = Word::from_bytes(text);
        println!("{w}");
        println!("  CFL     {}", cfl(&w, Order::Normal)?);
        println!("  CFL_in  {}", cfl(&w, Order::Inverse)?);
        let (f, steps) = icfl_with_steps(&w)?;
        println!("  ICFL    {f}");
        for step in steps {
            println!(
                "    at {}: p has length {}, r has length {}, {:?}",
                step.start, step.p_len, step.r_len, step.case
            );
        }
    }

    // under d < c < b < a the Lyndon and anti-Lyndon roles swap
    let reversed = Arc::new(OrderedAlphabet::from_symbols(b"dcba")?);
    let w = Word::new(&reversed, b"dabadabdabdadac")?;
    println!("{w} with d < c < b < a");
    println!("  CFL     {}", cfl(&w, Order::Normal)?);
    println!("  ICFL    {}", icfl(&w)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

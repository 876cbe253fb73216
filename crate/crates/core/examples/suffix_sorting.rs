// Local suffixes of a factor range sort like the global suffixes they
// extend, for CFL under the usual order and for ICFL under the inverse one.

use std::error::Error;

use icfl::alphabet::{Order, Word};
use icfl::icfl::icfl;
use icfl::lyndon::cfl;
use icfl::suffixes::{
    actual_global_order, check_cfl_compatibility, check_icfl_inverse_compatibility, predict_global_order, FactorRange,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Word::from_bytes("dabadabdabdadac");

    let f = cfl(&w, Order::Normal)?;
    let violations = FactorRange::all(&f)
        .filter(|r| !check_cfl_compatibility(r).map(|c| c.holds()).unwrap_or(false))
        .count();
    println!("CFL {f}: {violations} incompatible ranges");

    let f = icfl(&w)?;
    let violations = FactorRange::all(&f)
        .filter(|r| !check_icfl_inverse_compatibility(r).map(|c| c.holds()).unwrap_or(false))
        .count();
    println!("ICFL {f}: {violations} incompatible ranges under the inverse order");

    let range = FactorRange::new(&f, 2, 3)?;
    for (a, b) in [(5, 8), (9, 8)] {
        let (j1, j2) = (range.suffix(a)?, range.suffix(b)?);
        println!(
            "suf({a}) = {}, suf({b}) = {}: predicted {:?}, actual {:?}",
            j1.local(),
            j2.local(),
            predict_global_order(&j1, &j2)?,
            actual_global_order(&j1, &j2)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

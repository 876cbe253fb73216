// Border arrays and the border properties of ICFL and CFL_in.

use std::error::Error;

use icfl::alphabet::{Order, Word};
use icfl::borders::{border_array, bre_alignment, check_border_not_prefix, check_chain_border_suffix};
use icfl::icfl::{icfl, pmci_chains};
use icfl::lyndon::cfl;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Word::from_bytes("abaababaab");
    let b = border_array(&w)?;
    println!("{w}: longest border {}, all borders {:?}", b.longest(), b.borders());

    let w = Word::from_bytes("dabadabdabdadac");
    let f = icfl(&w)?;
    match check_border_not_prefix(&f)?.witness() {
        None => println!("ICFL {f}: no border of m_i is a prefix of m_(i+1)"),
        Some(v) => println!("ICFL {f}: border {} of m_{} breaks the rule", v.border, v.factor_index),
    }

    let base = cfl(&w, Order::Inverse)?;
    for chain in pmci_chains(&base)? {
        let ok = check_chain_border_suffix(&base, chain)?.holds();
        println!("chain {chain} of {base}: borders aligned with factors: {ok}");
    }

    if let Some(a) = bre_alignment(&w)? {
        println!(
            "p spans {} CFL_in factor(s) in {} run(s); ℓ_g = {}, b = {}",
            a.factors,
            a.runs,
            a.ell_g,
            a.b as char
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

// CFL of factors of a word, and of the overlap between two words.

use std::error::Error;

use icfl::alphabet::Word;
use icfl::overlap::{analyze_overlap, cfl_of_factor, classify_factor, overlap_lengths, shared_factor_signature};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Word::from_bytes("banana");
    for (s, e) in [(3, 4), (1, 3), (2, 5)] {
        let occ = classify_factor(&w, s, e)?;
        print!("{w}[{s}, {e}] = {}: {:?}", occ.factor(), occ.class);
        match cfl_of_factor(&occ) {
            Ok(f) => println!(" -> CFL = {f}"),
            Err(_) => println!(),
        }
    }
    let sig: Vec<String> = shared_factor_signature(&w)?.iter().map(|(f, n)| format!("{f}^{n}")).collect();
    println!("signature {}", sig.join(" "));

    for (a, b) in [("aba", "bab"), ("aba", "baa"), ("aababa", "bababb")] {
        let (a, b) = (Word::from_bytes(a), Word::from_bytes(b));
        for len in overlap_lengths(&a, &b)? {
            let r = analyze_overlap(&a, &b, len)?;
            let case = r.case().map(|c| format!("case {}", c.number()));
            println!(
                "{a} / {b}, overlap {}: {}",
                r.overlap,
                case.or(r.degenerate.map(|d| format!("{d:?}"))).unwrap_or_else(|| "no case".into())
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

//! Lyndon and anti-Lyndon words, prenecklaces, and Duval's factorization.
//!
//! Everything here is driven by one incremental scan: a prefix `z` of a word
//! is a prenecklace with period `p` (the length of its longest Lyndon
//! prefix), and appending a symbol `b` either keeps the period (`b` equals
//! the symbol one period back), resets it to the new length (`b` is larger),
//! or breaks the prenecklace property (`b` is smaller). Running the scan with
//! the inverse key order gives anti-prenecklaces, which are exactly the
//! inverse Lyndon words.

use crate::alphabet::{dispatch_order, Order, SymbolOrder, Word};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};

/// Outcome of scanning a rank slice for its longest prenecklace prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct PrenecklaceScan {
    /// Length of the longest prefix that is a prenecklace.
    pub accepted: usize,
    /// Period of that prefix: the length of its longest Lyndon prefix.
    pub period: usize,
}

#[inline]
pub(crate) fn scan_prenecklace<O: SymbolOrder>(s: &[u8]) -> PrenecklaceScan {
    if s.is_empty() {
        return PrenecklaceScan {
            accepted: 0,
            period: 0,
        };
    }
    let mut period = 1;
    let mut j = 1;
    while j < s.len() {
        let next = O::key(s[j]);
        let back = O::key(s[j - period]);
        if next > back {
            period = j + 1;
        } else if next < back {
            break;
        }
        j += 1;
    }
    PrenecklaceScan {
        accepted: j,
        period,
    }
}

fn is_lyndon_generic<O: SymbolOrder>(s: &[u8]) -> bool {
    let scan = scan_prenecklace::<O>(s);
    !s.is_empty() && scan.accepted == s.len() && scan.period == s.len()
}

pub(crate) fn is_lyndon_ranks(s: &[u8], order: Order) -> bool {
    dispatch_order!(order, is_lyndon_generic(s))
}

fn is_prenecklace_generic<O: SymbolOrder>(s: &[u8]) -> bool {
    scan_prenecklace::<O>(s).accepted == s.len()
}

pub(crate) fn is_inverse_lyndon_ranks(s: &[u8]) -> bool {
    !s.is_empty() && is_prenecklace_generic::<crate::alphabet::Descending>(s)
}

/// Factor lengths of the Lyndon factorization, by Duval's algorithm.
fn duval_lengths<O: SymbolOrder>(s: &[u8], out: &mut Vec<usize>) {
    let mut i = 0;
    while i < s.len() {
        let scan = scan_prenecklace::<O>(&s[i..]);
        let reps = scan.accepted / scan.period;
        out.extend((1..=reps).map(|k| i + k * scan.period));
        i += reps * scan.period;
    }
}

/// Whether `w` is a Lyndon word (`Normal`) or an anti-Lyndon word
/// (`Inverse`): strictly smaller than each proper nonempty suffix.
pub fn is_lyndon(w: &Word, order: Order) -> Result<bool> {
    w.require_nonempty()?;
    Ok(is_lyndon_ranks(w.ranks(), order))
}

/// Whether every proper nonempty suffix of `w` is `≺ w`.
pub fn is_inverse_lyndon(w: &Word) -> Result<bool> {
    w.require_nonempty()?;
    Ok(is_inverse_lyndon_ranks(w.ranks()))
}

/// Whether `w` is a prefix of a power of a Lyndon word for `order`. The empty
/// word counts as a prenecklace.
pub fn is_prenecklace(w: &Word, order: Order) -> bool {
    dispatch_order!(order, is_prenecklace_generic(w.ranks()))
}

/// The Lyndon factorization of `w` (`CFL` for `Normal`, `CFL_in` for
/// `Inverse`), computed in linear time with constant extra space.
pub fn cfl(w: &Word, order: Order) -> Result<Factorization> {
    w.require_nonempty()?;
    let mut ends = Vec::new();
    dispatch_order!(order, duval_lengths(w.ranks(), &mut ends));
    let kind = match order {
        Order::Normal => FactorizationKind::Cfl,
        Order::Inverse => FactorizationKind::CflIn,
    };
    Factorization::from_ends(w.clone(), ends, kind)
}

/// The longest prefix of `w` that is Lyndon for `order`; this is always
/// the first factor of `cfl(w, order)`.
pub fn longest_lyndon_prefix(w: &Word, order: Order) -> Result<Word> {
    w.require_nonempty()?;
    let scan = dispatch_order!(order, scan_prenecklace(w.ranks()));
    Ok(w.slice(0, scan.period))
}

/// `w = base^repetitions · residue` with `base` Lyndon and `residue` a
/// proper prefix of `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesquipowerForm {
    pub base: Word,
    pub repetitions: usize,
    pub residue: Word,
}

impl SesquipowerForm {
    pub fn reconstruct(&self) -> Word {
        let mut ranks = Vec::with_capacity(self.base.len() * self.repetitions + self.residue.len());
        for _ in 0..self.repetitions {
            ranks.extend_from_slice(self.base.ranks());
        }
        ranks.extend_from_slice(self.residue.ranks());
        Word::from_ranks(self.base.alphabet().clone(), ranks)
    }
}

/// Writes a nonempty prenecklace as a sesquipower of a Lyndon word, with
/// the largest possible exponent.
pub fn sesquipower_form(w: &Word, order: Order) -> Result<SesquipowerForm> {
    w.require_nonempty()?;
    let scan = dispatch_order!(order, scan_prenecklace(w.ranks()));
    if scan.accepted != w.len() {
        return Err(Error::NotPrenecklace);
    }
    let reps = w.len() / scan.period;
    Ok(SesquipowerForm {
        base: w.slice(0, scan.period),
        repetitions: reps,
        residue: w.slice(reps * scan.period, w.len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_bytes(s)
    }

    fn factors(f: &Factorization) -> Vec<String> {
        f.factors().map(|x| x.to_string()).collect()
    }

    #[test]
    fn lyndon_predicates() {
        assert_eq!(is_lyndon(&w("aabab"), Order::Normal), Ok(true));
        assert_eq!(is_lyndon(&w("abab"), Order::Normal), Ok(false));
        assert_eq!(is_lyndon(&w("bab"), Order::Inverse), Ok(false));
        assert_eq!(is_lyndon(&w("a"), Order::Normal), Ok(true));
        assert_eq!(is_lyndon(&w("aababaabb"), Order::Normal), Ok(true));
        assert_eq!(is_lyndon(&w(""), Order::Normal), Err(Error::EmptyWord));
    }

    #[test]
    fn inverse_lyndon_predicate() {
        for s in ["a", "b", "aaaaa", "bbba", "baaab", "bbaba", "bbababbaa", "bab"] {
            assert_eq!(is_inverse_lyndon(&w(s)), Ok(true), "{s}");
        }
        assert_eq!(is_inverse_lyndon(&w("aaba")), Ok(false));
        assert_eq!(is_inverse_lyndon(&w("aabba")), Ok(false));
        assert_eq!(is_inverse_lyndon(&w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn cfl_examples() {
        assert_eq!(factors(&cfl(&w("aababaabb"), Order::Normal).unwrap()), ["aababaabb"]);
        assert_eq!(
            factors(&cfl(&w("dabadabdabdadac"), Order::Inverse).unwrap()),
            ["daba", "dab", "dab", "dadac"]
        );
        let mut expected = vec!["a"; 12];
        expected.extend(["bba", "b"]);
        assert_eq!(factors(&cfl(&w("aaaaaaaaaaaabbab"), Order::Inverse).unwrap()), expected);
        assert_eq!(factors(&cfl(&w("banana"), Order::Normal).unwrap()), ["b", "an", "an", "a"]);
        assert_eq!(
            factors(&cfl(&w("bbbbabracadabra"), Order::Normal).unwrap()),
            ["b", "b", "b", "b", "abracad", "abr", "a"]
        );
        assert_eq!(cfl(&w(""), Order::Normal).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn cfl_kinds_certify() {
        let f = cfl(&w("dabadabdabdadac"), Order::Inverse).unwrap();
        assert_eq!(f.kind(), FactorizationKind::CflIn);
        f.certify().unwrap();
        cfl(&w("mississippi"), Order::Normal).unwrap().certify().unwrap();
    }

    #[test]
    fn longest_prefix_examples() {
        assert_eq!(longest_lyndon_prefix(&w("abab"), Order::Normal).unwrap(), w("ab"));
        assert_eq!(longest_lyndon_prefix(&w("aabab"), Order::Normal).unwrap(), w("aabab"));
        assert_eq!(longest_lyndon_prefix(&w("bbab"), Order::Inverse).unwrap(), w("bba"));
    }

    #[test]
    fn prenecklace_examples() {
        assert!(is_prenecklace(&w("aabaa"), Order::Normal));
        assert!(is_prenecklace(&w("bbaba"), Order::Inverse));
        assert!(!is_prenecklace(&w("ba"), Order::Normal));
        assert!(is_prenecklace(&w(""), Order::Normal));
    }

    #[test]
    fn sesquipower_examples() {
        let s = sesquipower_form(&w("aabaa"), Order::Normal).unwrap();
        assert_eq!((s.base.to_string(), s.repetitions, s.residue.to_string()), ("aab".into(), 1, "aa".into()));
        let s = sesquipower_form(&w("aabab"), Order::Normal).unwrap();
        assert_eq!((s.base, s.repetitions, s.residue.len()), (w("aabab"), 1, 0));
        let s = sesquipower_form(&w("dabdabda"), Order::Inverse).unwrap();
        assert_eq!((s.base.to_string(), s.repetitions, s.residue.to_string()), ("dab".into(), 2, "da".into()));
        assert_eq!(s.reconstruct(), w("dabdabda"));
        assert_eq!(sesquipower_form(&w("ba"), Order::Normal).unwrap_err(), Error::NotPrenecklace);
    }
}

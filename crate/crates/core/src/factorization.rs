//! Factorizations of a word into contiguous nonempty factors.

use std::fmt;

use crate::alphabet::{compare_ranks, ll_slices, Order, Word};
use crate::error::{Error, Result};
use crate::lyndon;

/// Which construction produced a factorization, and therefore which
/// invariants it is expected to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorizationKind {
    /// Lyndon factorization under `≺`.
    Cfl,
    /// Lyndon factorization under `≺_in` (anti-Lyndon factors).
    CflIn,
    /// Canonical inverse Lyndon factorization.
    Icfl,
    /// A grouping of a `CFL_in` factorization.
    Grouping,
}

impl FactorizationKind {
    pub fn name(self) -> &'static str {
        match self {
            FactorizationKind::Cfl => "cfl",
            FactorizationKind::CflIn => "cfl-in",
            FactorizationKind::Icfl => "icfl",
            FactorizationKind::Grouping => "grouping",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "cfl" => FactorizationKind::Cfl,
            "cfl-in" => FactorizationKind::CflIn,
            "icfl" => FactorizationKind::Icfl,
            "grouping" => FactorizationKind::Grouping,
            _ => return None,
        })
    }
}

impl fmt::Display for FactorizationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorizationKind::Cfl => "CFL",
            FactorizationKind::CflIn => "CFL_in",
            FactorizationKind::Icfl => "ICFL",
            FactorizationKind::Grouping => "grouping",
        })
    }
}

/// A maximal run `ℓ^n` of equal consecutive factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub factor: Word,
    pub exponent: usize,
    /// 1-indexed factor index of the first copy.
    pub first_index: usize,
}

/// An ordered list of nonempty factors whose concatenation is `word`.
///
/// Factor indices and positions are 1-indexed; spans are inclusive.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    word: Word,
    // zero-based exclusive end offsets, strictly increasing, last == |word|
    ends: Vec<usize>,
    kind: FactorizationKind,
}

impl Factorization {
    /// Builds a factorization from factor lengths.
    pub fn from_lengths(word: Word, lengths: &[usize], kind: FactorizationKind) -> Result<Self> {
        let mut ends = Vec::with_capacity(lengths.len());
        let mut acc = 0usize;
        for &len in lengths {
            if len == 0 {
                return Err(Error::InvalidFactorization("empty factor".into()));
            }
            acc += len;
            ends.push(acc);
        }
        Self::from_ends(word, ends, kind)
    }

    /// Builds a factorization from the 1-indexed last position of each
    /// factor; the final entry must be `|word|`.
    pub fn from_cuts(word: Word, cuts: &[usize], kind: FactorizationKind) -> Result<Self> {
        Self::from_ends(word, cuts.to_vec(), kind)
    }

    /// Builds a factorization whose factors are the given words, which must
    /// share one alphabet.
    pub fn from_factors(factors: &[Word], kind: FactorizationKind) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::InvalidFactorization("no factors".into()))?;
        let mut ranks = Vec::new();
        let mut lengths = Vec::with_capacity(factors.len());
        for f in factors {
            first.check_alphabet(f)?;
            ranks.extend_from_slice(f.ranks());
            lengths.push(f.len());
        }
        let word = Word::from_ranks(first.alphabet().clone(), ranks);
        Self::from_lengths(word, &lengths, kind)
    }

    pub(crate) fn from_ends(word: Word, ends: Vec<usize>, kind: FactorizationKind) -> Result<Self> {
        word.require_nonempty()?;
        let mut prev = 0;
        for &e in &ends {
            if e <= prev {
                return Err(Error::InvalidFactorization(format!(
                    "cut {e} does not increase past {prev}"
                )));
            }
            prev = e;
        }
        if prev != word.len() {
            return Err(Error::InvalidFactorization(format!(
                "factors cover {prev} of {} symbols",
                word.len()
            )));
        }
        Ok(Self { word, ends, kind })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn kind(&self) -> FactorizationKind {
        self.kind
    }

    /// The same cuts under a different kind tag.
    pub fn with_kind(&self, kind: FactorizationKind) -> Factorization {
        Factorization {
            kind,
            ..self.clone()
        }
    }

    pub(crate) fn require_kind(&self, expected: FactorizationKind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected,
                found: self.kind,
            })
        }
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    /// 1-indexed last position of each factor.
    pub fn cuts(&self) -> &[usize] {
        &self.ends
    }

    fn bounds0(&self, i: usize) -> (usize, usize) {
        let start = if i == 0 { 0 } else { self.ends[i - 1] };
        (start, self.ends[i])
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            Err(Error::OutOfRange(format!("factor {i} of {}", self.len())))
        } else {
            Ok(())
        }
    }

    /// `(first, last)` positions of factor `i`, 1-indexed and inclusive.
    pub fn span(&self, i: usize) -> Result<(usize, usize)> {
        self.check_index(i)?;
        let (s, e) = self.bounds0(i - 1);
        Ok((s + 1, e))
    }

    pub fn spans(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).map(|i| {
            let (s, e) = self.bounds0(i);
            (s + 1, e)
        })
    }

    pub fn lengths(&self) -> Vec<usize> {
        (0..self.len())
            .map(|i| {
                let (s, e) = self.bounds0(i);
                e - s
            })
            .collect()
    }

    /// Factor `i` (1-indexed).
    pub fn factor(&self, i: usize) -> Result<Word> {
        self.check_index(i)?;
        Ok(self.factor0(i - 1))
    }

    pub(crate) fn factor0(&self, i: usize) -> Word {
        let (s, e) = self.bounds0(i);
        self.word.slice(s, e)
    }

    pub(crate) fn factor_ranks0(&self, i: usize) -> &[u8] {
        let (s, e) = self.bounds0(i);
        &self.word.ranks()[s..e]
    }

    pub fn factors(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).map(|i| self.factor0(i))
    }

    /// The product `m_i ⋯ m_j` of a factor range.
    pub fn product(&self, i: usize, j: usize) -> Result<Word> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i > j {
            return Err(Error::OutOfRange(format!("factor range {i}..{j}")));
        }
        let (s, _) = self.bounds0(i - 1);
        let (_, e) = self.bounds0(j - 1);
        Ok(self.word.slice(s, e))
    }

    /// Index of the factor containing 1-indexed position `pos`.
    pub fn factor_at(&self, pos: usize) -> Result<usize> {
        if pos == 0 || pos > self.word.len() {
            return Err(Error::OutOfRange(format!("position {pos}")));
        }
        Ok(self.ends.partition_point(|&e| e < pos) + 1)
    }

    /// Exponent-compressed form `(ℓ_1^{n_1}, …, ℓ_r^{n_r})`.
    pub fn runs(&self) -> Vec<Run> {
        let mut runs: Vec<Run> = Vec::new();
        for i in 0..self.len() {
            let f = self.factor0(i);
            match runs.last_mut() {
                Some(run) if run.factor == f => run.exponent += 1,
                _ => runs.push(Run {
                    factor: f,
                    exponent: 1,
                    first_index: i + 1,
                }),
            }
        }
        runs
    }

    /// Checks the invariants implied by the kind tag. Success is the
    /// factorization's validity certificate; ICFL canonicity itself is not
    /// decidable from the factors alone and is not checked here.
    pub fn certify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidFactorization(format!("{}: {msg}", self.kind)));
        match self.kind {
            FactorizationKind::Cfl | FactorizationKind::CflIn => {
                let order = if self.kind == FactorizationKind::Cfl {
                    Order::Normal
                } else {
                    Order::Inverse
                };
                for i in 0..self.len() {
                    if !lyndon::is_lyndon_ranks(self.factor_ranks0(i), order) {
                        return fail(format!("factor {} is not Lyndon for {order:?}", i + 1));
                    }
                    if i > 0
                        && compare_ranks(self.factor_ranks0(i - 1), self.factor_ranks0(i), order)
                            == std::cmp::Ordering::Less
                    {
                        return fail(format!("factors {} and {} increase", i, i + 1));
                    }
                }
            }
            FactorizationKind::Icfl | FactorizationKind::Grouping => {
                for i in 0..self.len() {
                    if !lyndon::is_inverse_lyndon_ranks(self.factor_ranks0(i)) {
                        return fail(format!("factor {} is not inverse Lyndon", i + 1));
                    }
                    if i > 0 && !ll_slices(self.factor_ranks0(i - 1), self.factor_ranks0(i)) {
                        return fail(format!("factor {} ≪ factor {} fails", i, i + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, factor) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{factor}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cuts_spans_and_runs() {
        let w = Word::from_bytes("dabadabdabdadac");
        let f = Factorization::from_lengths(w.clone(), &[4, 3, 3, 5], FactorizationKind::CflIn).unwrap();
        assert_eq!(f.cuts(), &[4, 7, 10, 15]);
        assert_eq!(f.spans().collect::<Vec<_>>(), vec![(1, 4), (5, 7), (8, 10), (11, 15)]);
        assert_eq!(f.factor(2).unwrap(), Word::from_bytes("dab"));
        assert_eq!(f.product(2, 3).unwrap(), Word::from_bytes("dabdab"));
        assert_eq!(f.factor_at(7), Ok(2));
        assert_eq!(f.factor_at(8), Ok(3));
        let runs = f.runs();
        assert_eq!(runs.len(), 3);
        assert_eq!((runs[1].exponent, runs[1].first_index), (2, 2));
        f.certify().unwrap();
        assert_eq!(f.to_string(), "daba | dab | dab | dadac");
    }

    #[test]
    fn rejects_bad_cuts() {
        let w = Word::from_bytes("abc");
        assert!(Factorization::from_lengths(w.clone(), &[1, 0, 2], FactorizationKind::Cfl).is_err());
        assert!(Factorization::from_lengths(w.clone(), &[1, 1], FactorizationKind::Cfl).is_err());
        assert!(Factorization::from_cuts(w.clone(), &[2, 2, 3], FactorizationKind::Cfl).is_err());
        assert!(Factorization::from_lengths(Word::from_bytes(""), &[], FactorizationKind::Cfl).is_err());
    }

    #[test]
    fn certify_catches_wrong_kind() {
        let w = Word::from_bytes("banana");
        let f = Factorization::from_lengths(w, &[1, 2, 2, 1], FactorizationKind::Cfl).unwrap();
        f.certify().unwrap();
        assert!(f.with_kind(FactorizationKind::Icfl).certify().is_err());
        let bad = Factorization::from_lengths(Word::from_bytes("ab"), &[1, 1], FactorizationKind::Cfl).unwrap();
        assert!(bad.certify().is_err());
    }
}

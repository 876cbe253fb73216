//! Borders and the border/prefix exclusion properties of inverse Lyndon
//! factorizations.
//!
//! A border of `w` is a word that is both a proper prefix and a suffix of
//! `w`. Borders are handled as lengths throughout; a [`Word`] is only built
//! when a counterexample has to be reported.

use crate::alphabet::{lcp_len_slices, prefix_relation_slices, Order, PrefixRelation, Word};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};
use crate::icfl::{bre, pmci_chains, BreDecomposition, ChainSpan};
use crate::lyndon::cfl;

/// Longest-border lengths for every prefix of a word (the classical
/// failure function).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderArray {
    word: Word,
    // table[i] = longest border of the prefix of length i
    table: Vec<usize>,
}

pub(crate) fn failure_table(s: &[u8]) -> Vec<usize> {
    let mut table = vec![0; s.len() + 1];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = table[k];
        }
        if s[i] == s[k] {
            k += 1;
        }
        table[i + 1] = k;
    }
    table
}

/// Border lengths of `s`, longest first.
pub(crate) fn border_lengths(table: &[usize]) -> impl Iterator<Item = usize> + '_ {
    let mut k = table[table.len() - 1];
    std::iter::from_fn(move || {
        if k == 0 {
            return None;
        }
        let out = k;
        k = table[k];
        Some(out)
    })
}

/// Computes the border array of a nonempty word in linear time.
pub fn border_array(w: &Word) -> Result<BorderArray> {
    w.require_nonempty()?;
    Ok(BorderArray {
        word: w.clone(),
        table: failure_table(w.ranks()),
    })
}

impl BorderArray {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Length of the longest border of the prefix of length `i`, for
    /// `1 ≤ i ≤ |w|`.
    pub fn get(&self, i: usize) -> Result<usize> {
        if i == 0 || i >= self.table.len() {
            return Err(Error::OutOfRange(format!("prefix length {i} of {}", self.word.len())));
        }
        Ok(self.table[i])
    }

    /// Length of the border of the whole word.
    pub fn longest(&self) -> usize {
        self.table[self.table.len() - 1]
    }

    /// Lengths of all nonempty borders of the word, longest first.
    pub fn borders(&self) -> Vec<usize> {
        border_lengths(&self.table).collect()
    }

    pub fn is_unbordered(&self) -> bool {
        self.longest() == 0
    }
}

/// Outcome of a property check: either it holds or a witness is returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<W> {
    Holds,
    Violated(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Violated(w) => Some(w),
        }
    }
}

/// A nonempty border of `m_i` that is also a prefix of `m_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderPrefixViolation {
    pub factor_index: usize,
    pub border: Word,
}

/// Checks that no nonempty border of `m_i` is a prefix of `m_{i+1}`.
///
/// A border of `m_i` is a prefix of `m_i`, so it is a prefix of `m_{i+1}`
/// exactly when it is no longer than `lcp(m_i, m_{i+1})`. Only the shortest
/// nonempty border needs testing, and it is the reported witness.
pub fn check_border_not_prefix(f: &Factorization) -> Result<Check<BorderPrefixViolation>> {
    f.require_kind(FactorizationKind::Icfl)?;
    for i in 1..f.len() {
        let (cur, next) = (f.factor_ranks0(i - 1), f.factor_ranks0(i));
        let table = failure_table(cur);
        let Some(shortest) = border_lengths(&table).last() else {
            continue;
        };
        if shortest <= lcp_len_slices(cur, next) {
            return Ok(Check::Violated(BorderPrefixViolation {
                factor_index: i,
                border: f.factor0(i - 1).slice(0, shortest),
            }));
        }
    }
    Ok(Check::Holds)
}

/// A border of a chain product that does not start at a factor boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainBorderViolation {
    pub span: ChainSpan,
    pub border: Word,
}

fn check_chain(f: &Factorization, span: ChainSpan) -> Result<()> {
    if span.start_index == 0 || span.end_index > f.len() || span.start_index > span.end_index {
        return Err(Error::OutOfRange(format!("chain {span} of {} factors", f.len())));
    }
    for i in span.start_index..span.end_index {
        if !f.factor_ranks0(i - 1).starts_with(f.factor_ranks0(i)) {
            return Err(Error::InvalidArgument(format!(
                "factor {} is not a prefix of factor {i}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Checks that every nonempty border of `ℓ_r ⋯ ℓ_s` is `ℓ_{t+1} ⋯ ℓ_s` for
/// some `r ≤ t < s`, for a non-increasing chain `ℓ_r, …, ℓ_s` of a
/// `CFL_in` factorization.
pub fn check_chain_border_suffix(f: &Factorization, span: ChainSpan) -> Result<Check<ChainBorderViolation>> {
    f.require_kind(FactorizationKind::CflIn)?;
    check_chain(f, span)?;
    let (start, _) = f.span(span.start_index)?;
    let (_, end) = f.span(span.end_index)?;
    let y = &f.word().ranks()[start - 1..end];
    // lengths of ℓ_{t+1} ⋯ ℓ_s for r ≤ t < s
    let suffix_lengths: Vec<usize> = (span.start_index..span.end_index)
        .map(|t| end - f.cuts()[t - 1])
        .collect();
    let table = failure_table(y);
    for len in border_lengths(&table) {
        if !suffix_lengths.contains(&len) {
            return Ok(Check::Violated(ChainBorderViolation {
                span,
                border: f.word().slice(end - len, end),
            }));
        }
    }
    Ok(Check::Holds)
}

/// Checks that every nonempty border of `p` is prefix-incomparable with
/// `p̄`. Returns the first offending border.
pub fn check_bre_border_incomparable(d: &BreDecomposition) -> Check<Word> {
    let table = failure_table(d.p.ranks());
    for len in border_lengths(&table) {
        let z = &d.p.ranks()[..len];
        if prefix_relation_slices(z, d.p_bar.ranks()) != PrefixRelation::Incomparable {
            return Check::Violated(d.p.slice(0, len));
        }
    }
    Check::Holds
}

/// How the bounded right extension of `w` sits on `CFL_in(w)`:
/// `p = ℓ_1^{n_1} ⋯ ℓ_g^{n_g}` inside the first prefix chain, and
/// `ℓ_g = u_g a_g v'_g`, `p̄ = u_g b` with `a_g < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreAlignment {
    /// Number of distinct runs `ℓ_j^{n_j}` making up `p`.
    pub runs: usize,
    /// Number of `CFL_in` factors making up `p`.
    pub factors: usize,
    pub ell_g: Word,
    pub u_g: Word,
    pub a_g: u8,
    pub b: u8,
}

/// Recovers the alignment of the bounded right extension of `w` with
/// `CFL_in(w)`, or `None` when `w` is an inverse Lyndon word. Fails with
/// [`Error::Invariant`] if `p` does not decompose as described on
/// [`BreAlignment`].
pub fn bre_alignment(w: &Word) -> Result<Option<BreAlignment>> {
    let Some(d) = bre(w)? else {
        return Ok(None);
    };
    let base = cfl(w, Order::Inverse)?;
    let fail = |msg: &str| Err(Error::Invariant(format!("{w}: {msg}")));
    let Some(pos) = base.cuts().iter().position(|&c| c == d.p.len()) else {
        return fail("p does not end at a CFL_in cut");
    };
    let factors = pos + 1;
    if factors < base.len() && base.factor_ranks0(factors) == base.factor_ranks0(pos) {
        return fail("p splits a run of equal CFL_in factors");
    }
    let first_chain = pmci_chains(&base)?[0];
    if factors > first_chain.end_index {
        return fail("p leaves the first prefix chain");
    }
    let runs = base.runs().iter().filter(|r| r.first_index <= factors).count();
    let ell_g = base.factor0(pos);
    let u_len = d.r.len();
    if u_len >= ell_g.len() || !ell_g.ranks().starts_with(d.r.ranks()) {
        return fail("p̄ minus its last symbol is not a proper prefix of ℓ_g");
    }
    let a_g = ell_g.ranks()[u_len];
    let b_rank = d.p_bar.ranks()[u_len];
    if a_g >= b_rank {
        return fail("the symbol of ℓ_g after u_g is not smaller than b");
    }
    Ok(Some(BreAlignment {
        runs,
        factors,
        u_g: ell_g.slice(0, u_len),
        a_g: ell_g.symbol(u_len + 1)?,
        ell_g,
        b: d.b,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icfl::icfl;
    use crate::oracle::naive_borders;

    fn w(s: &str) -> Word {
        Word::from_bytes(s)
    }

    #[test]
    fn border_array_examples() {
        let b = border_array(&w("bab")).unwrap();
        assert_eq!(b.borders(), vec![1]);
        assert!(border_array(&w("aabab")).unwrap().is_unbordered());
        let b = border_array(&w("abaab")).unwrap();
        assert_eq!(b.longest(), 2);
        assert_eq!(b.get(3).unwrap(), 1);
        assert!(b.get(0).is_err() && b.get(6).is_err());
        assert_eq!(border_array(&w("")).unwrap_err(), Error::EmptyWord);
        assert_eq!(border_array(&w("aaa")).unwrap().borders(), vec![2, 1]);
    }

    #[test]
    fn border_array_matches_oracle() {
        for n in 1..=12u32 {
            for code in 0..(1u32 << n) {
                let bytes: Vec<u8> = (0..n).map(|i| b"ab"[(code >> i & 1) as usize]).collect();
                let word = Word::from_bytes(&bytes);
                assert_eq!(border_array(&word).unwrap().borders(), naive_borders(&word), "{word}");
            }
        }
    }

    #[test]
    fn border_not_prefix_examples() {
        let f = icfl(&w("dabadabdabdadac")).unwrap();
        assert!(check_border_not_prefix(&f).unwrap().holds());
        assert!(check_border_not_prefix(&icfl(&w("bbababbaa")).unwrap()).unwrap().holds());

        let fake = Factorization::from_lengths(w("abaab"), &[3, 2], FactorizationKind::Icfl).unwrap();
        let check = check_border_not_prefix(&fake).unwrap();
        let v = check.witness().unwrap();
        assert_eq!((v.factor_index, v.border.clone()), (1, w("a")));

        let wrong = cfl(&w("ab"), Order::Normal).unwrap();
        assert!(check_border_not_prefix(&wrong).is_err());
    }

    #[test]
    fn chain_border_examples() {
        let f = cfl(&w("dabadabdabdadac"), Order::Inverse).unwrap();
        let chains = pmci_chains(&f).unwrap();
        assert!(check_chain_border_suffix(&f, chains[0]).unwrap().holds());
        assert!(check_chain_border_suffix(&f, chains[1]).unwrap().holds());

        let f = cfl(&w("aaab"), Order::Inverse).unwrap();
        let span = ChainSpan { start_index: 1, end_index: 3 };
        assert!(check_chain_border_suffix(&f, span).unwrap().holds());

        let not_chain = ChainSpan { start_index: 3, end_index: 4 };
        let f = cfl(&w("dabadabdabdadac"), Order::Inverse).unwrap();
        assert!(matches!(check_chain_border_suffix(&f, not_chain), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn chain_border_detects_misaligned_border() {
        // hand-tagged, so the border "ab" does not start at a factor boundary
        let f = Factorization::from_lengths(w("abaab"), &[5], FactorizationKind::CflIn).unwrap();
        let span = ChainSpan { start_index: 1, end_index: 1 };
        let v = check_chain_border_suffix(&f, span).unwrap();
        assert_eq!(v.witness().unwrap().border, w("ab"));
    }

    #[test]
    fn bre_border_examples() {
        let d = bre(&w("dabadabdabdadac")).unwrap().unwrap();
        assert!(check_bre_border_incomparable(&d).holds());

        let mut fake = bre(&w("dabadabdabdadac")).unwrap().unwrap();
        fake.p = w("dad");
        fake.p_bar = w("dab");
        assert_eq!(check_bre_border_incomparable(&fake), Check::Violated(w("d")));
    }

    #[test]
    fn bre_alignment_examples() {
        let a = bre_alignment(&w("dabadabdabdadac")).unwrap().unwrap();
        assert_eq!((a.runs, a.factors, a.ell_g.clone(), a.u_g.clone()), (1, 1, w("daba"), w("dab")));
        assert_eq!((a.a_g, a.b), (b'a', b'd'));

        let a = bre_alignment(&w("aaaaaaaaaaaabbab")).unwrap().unwrap();
        assert_eq!((a.runs, a.factors, a.ell_g, a.u_g.len()), (1, 12, w("a"), 0));
        assert_eq!(bre_alignment(&w("bbaba")).unwrap(), None);
    }
}

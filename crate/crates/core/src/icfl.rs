//! Bounded right extensions and the canonical inverse Lyndon factorization.
//!
//! For a word `w` that is not inverse Lyndon, let `z` be its shortest prefix
//! that is not inverse Lyndon. Then `z = p·p̄` where `p = r·a·s`,
//! `p̄ = r·b`, `a < b`, and `r` is as short as possible. The pair
//! `(p, p̄)` is the bounded right extension of `w`.
//!
//! `ICFL(w)` is defined recursively: with `w = p·v` and
//! `ICFL(v) = (m'_1, …, m'_k)`, either `p̄` is a prefix of `m'_1` and `p`
//! becomes a factor of its own, or `m'_1` is a prefix of `r` and `p` is
//! glued onto `m'_1`. [`icfl`] first walks left to right collecting the
//! successive extensions, then resolves the recursion right to left, so
//! neither the call stack nor the running time grows beyond linear.

use std::fmt;

use crate::alphabet::{lcp_len_slices, ll_slices, Descending, Word};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};
use crate::lyndon::{is_inverse_lyndon_ranks, scan_prenecklace};

/// The bounded right extension of a word together with its split
/// `z = p·p̄`, `p = r·a·s`, `p̄ = r·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreDecomposition {
    pub p: Word,
    pub p_bar: Word,
    pub r: Word,
    pub s: Word,
    pub a: u8,
    pub b: u8,
    /// The shortest prefix that is not an inverse Lyndon word.
    pub z: Word,
}

/// Offsets of a bounded right extension inside a rank slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct BreCut {
    pub p_len: usize,
    pub r_len: usize,
}

/// Finds the bounded right extension of `s`, reusing `fail` as scratch for
/// the border table of `z` minus its last symbol.
///
/// The anti-prenecklace scan stops at the first symbol `b` that breaks the
/// inverse Lyndon property; `r` is then the shortest border `x` of
/// `z' = z[..|z|-1]` (the empty word included) whose following symbol in
/// `z` is smaller than `b`.
pub(crate) fn bre_cut(s: &[u8], fail: &mut Vec<usize>) -> Option<BreCut> {
    let scan = scan_prenecklace::<Descending>(s);
    if scan.accepted == s.len() {
        return None;
    }
    let m = scan.accepted;
    let z_prime = &s[..m];
    let b = s[m];

    // fail[i] = longest proper border of z'[..i]
    fail.clear();
    fail.resize(m + 1, 0);
    let mut k = 0;
    for i in 1..m {
        while k > 0 && z_prime[i] != z_prime[k] {
            k = fail[k];
        }
        if z_prime[i] == z_prime[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }

    let mut best = None;
    let mut border = fail[m];
    loop {
        if s[border] < b {
            best = Some(border);
        }
        if border == 0 {
            break;
        }
        border = fail[border];
    }
    let r_len = best.expect("the symbol one period back is smaller than b");
    let p_len = m - r_len;
    debug_assert!(p_len > r_len);
    Some(BreCut { p_len, r_len })
}

/// The bounded right extension of `w`, or `None` exactly when `w` is an
/// inverse Lyndon word.
pub fn bre(w: &Word) -> Result<Option<BreDecomposition>> {
    w.require_nonempty()?;
    let mut scratch = Vec::new();
    let Some(cut) = bre_cut(w.ranks(), &mut scratch) else {
        return Ok(None);
    };
    let (p_len, r_len) = (cut.p_len, cut.r_len);
    let z_len = p_len + r_len + 1;
    Ok(Some(BreDecomposition {
        p: w.slice(0, p_len),
        p_bar: w.slice(p_len, z_len),
        r: w.slice(0, r_len),
        s: w.slice(r_len + 1, p_len),
        a: w.symbol(r_len + 1)?,
        b: w.symbol(z_len)?,
        z: w.slice(0, z_len),
    }))
}

/// Which branch of the recursive definition a step took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcflCase {
    /// `p̄` is a prefix of `m'_1`: `p` is emitted as a factor.
    Split,
    /// `m'_1` is a prefix of `r`: `p` is prepended to `m'_1`.
    Merge,
}

/// One resolved step of the recursion, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IcflStep {
    /// 1-indexed position where this step's `p` starts.
    pub start: usize,
    pub p_len: usize,
    pub r_len: usize,
    /// Length of `m'_1` when the step was resolved.
    pub next_factor_len: usize,
    pub case: IcflCase,
}

fn icfl_impl(s: &[u8], mut trace: Option<&mut Vec<IcflStep>>) -> Vec<usize> {
    let mut pending: Vec<(usize, BreCut)> = Vec::new();
    let mut scratch = Vec::new();
    let mut q = 0;
    while let Some(cut) = bre_cut(&s[q..], &mut scratch) {
        pending.push((q, cut));
        q += cut.p_len;
    }

    // starts of the factors, built right to left
    let mut starts = vec![q];
    let mut first_len = s.len() - q;
    for &(start, cut) in pending.iter().rev() {
        // p̄ and m'_1 are both prefixes of v, so prefix comparability
        // reduces to comparing lengths.
        let case = if cut.r_len < first_len {
            IcflCase::Split
        } else {
            IcflCase::Merge
        };
        if let Some(t) = trace.as_deref_mut() {
            t.push(IcflStep {
                start: start + 1,
                p_len: cut.p_len,
                r_len: cut.r_len,
                next_factor_len: first_len,
                case,
            });
        }
        match case {
            IcflCase::Split => {
                starts.push(start);
                first_len = cut.p_len;
            }
            IcflCase::Merge => {
                *starts.last_mut().expect("at least one factor") = start;
                first_len += cut.p_len;
            }
        }
    }
    starts.reverse();
    let mut ends: Vec<usize> = starts[1..].to_vec();
    ends.push(s.len());
    ends
}

/// The canonical inverse Lyndon factorization `ICFL(w)`.
pub fn icfl(w: &Word) -> Result<Factorization> {
    w.require_nonempty()?;
    let ends = icfl_impl(w.ranks(), None);
    Factorization::from_ends(w.clone(), ends, FactorizationKind::Icfl)
}

/// `ICFL(w)` together with the resolved recursion steps, leftmost first.
pub fn icfl_with_steps(w: &Word) -> Result<(Factorization, Vec<IcflStep>)> {
    w.require_nonempty()?;
    let mut steps = Vec::new();
    let ends = icfl_impl(w.ranks(), Some(&mut steps));
    steps.reverse();
    Ok((Factorization::from_ends(w.clone(), ends, FactorizationKind::Icfl)?, steps))
}

/// A maximal run `ℓ_start ≥_p … ≥_p ℓ_end` of consecutive `CFL_in` factors,
/// each a prefix of its predecessor. Indices are 1-indexed and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainSpan {
    pub start_index: usize,
    pub end_index: usize,
}

impl ChainSpan {
    pub fn len(&self) -> usize {
        self.end_index + 1 - self.start_index
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.start_index <= i && i <= self.end_index
    }
}

impl fmt::Display for ChainSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start_index, self.end_index)
    }
}

/// Partitions the factors of a `CFL_in` factorization into maximal
/// non-increasing chains for the prefix order (singletons included).
pub fn pmci_chains(f: &Factorization) -> Result<Vec<ChainSpan>> {
    f.require_kind(FactorizationKind::CflIn)?;
    let mut spans = Vec::new();
    let mut start = 0;
    for i in 1..=f.len() {
        let continues = i < f.len() && f.factor_ranks0(i - 1).starts_with(f.factor_ranks0(i));
        if !continues {
            spans.push(ChainSpan {
                start_index: start + 1,
                end_index: i,
            });
            start = i;
        }
    }
    Ok(spans)
}

/// Boundary indices `0 = i_0 < i_1 < … < i_k = h` mapping each grouped
/// factor `m_j` to the `CFL_in` factors `ℓ_{i_{j-1}+1} ⋯ ℓ_{i_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupingWitness {
    pub boundaries: Vec<usize>,
}

fn group_is_valid(base: &Factorization, from: usize, to: usize) -> bool {
    let (s, _) = base.span(from).expect("index checked");
    let (_, e) = base.span(to).expect("index checked");
    is_inverse_lyndon_ranks(&base.word().ranks()[s - 1..e])
}

/// Whether `candidate` is obtained from `base = CFL_in(w)` by replacing each
/// chain of [`pmci_chains`] with a grouping of it. Returns the boundary
/// witness on success.
pub fn is_grouping(candidate: &Factorization, base: &Factorization) -> Result<Option<GroupingWitness>> {
    base.require_kind(FactorizationKind::CflIn)?;
    if candidate.word() != base.word() {
        return Err(Error::WordMismatch);
    }
    let chains = pmci_chains(base)?;

    // each candidate cut must be a base cut
    let mut boundaries = vec![0];
    let base_cuts = base.cuts();
    let mut bi = 0;
    for &cut in candidate.cuts() {
        while bi < base_cuts.len() && base_cuts[bi] < cut {
            bi += 1;
        }
        if bi == base_cuts.len() || base_cuts[bi] != cut {
            return Ok(None);
        }
        boundaries.push(bi + 1);
    }

    let chain_of = |i: usize| chains.iter().position(|c| c.contains(i)).expect("chains cover");
    let ranks = candidate.word().ranks();
    for j in 1..boundaries.len() {
        let (from, to) = (boundaries[j - 1] + 1, boundaries[j]);
        if chain_of(from) != chain_of(to) || !group_is_valid(base, from, to) {
            return Ok(None);
        }
        if j > 1 && chain_of(boundaries[j - 2] + 1) == chain_of(from) {
            let (ps, _) = base.span(boundaries[j - 2] + 1)?;
            let (s, _) = base.span(from)?;
            let (_, e) = base.span(to)?;
            if !ll_slices(&ranks[ps - 1..s - 1], &ranks[s - 1..e]) {
                return Ok(None);
            }
        }
    }
    Ok(Some(GroupingWitness { boundaries }))
}

/// Largest number of factors in one prefix chain accepted by
/// [`enumerate_groupings`].
pub const GROUPING_ENUMERATION_LIMIT: usize = 20;

/// Every grouping of `base = CFL_in(w)`, by exhaustive search over the
/// split points of each chain. Exponential in the chain length, so chains
/// are limited to [`GROUPING_ENUMERATION_LIMIT`] factors.
pub fn enumerate_groupings(base: &Factorization) -> Result<Vec<Factorization>> {
    base.require_kind(FactorizationKind::CflIn)?;
    let chains = pmci_chains(base)?;
    if chains.iter().any(|c| c.len() > GROUPING_ENUMERATION_LIMIT) {
        return Err(Error::InvalidArgument(format!(
            "grouping enumeration is limited to chains of {GROUPING_ENUMERATION_LIMIT} factors"
        )));
    }
    let ranks = base.word().ranks();

    // per chain, every valid list of group end indices
    let mut per_chain: Vec<Vec<Vec<usize>>> = Vec::new();
    for chain in &chains {
        let inner = chain.len() - 1;
        let mut options = Vec::new();
        for mask in 0u32..(1 << inner) {
            let mut ends: Vec<usize> = (0..inner)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| chain.start_index + b)
                .collect();
            ends.push(chain.end_index);
            let mut from = chain.start_index;
            let mut prev: Option<(usize, usize)> = None;
            let mut ok = true;
            for &to in &ends {
                if !group_is_valid(base, from, to) {
                    ok = false;
                    break;
                }
                let (s, _) = base.span(from)?;
                let (_, e) = base.span(to)?;
                if let Some((ps, pe)) = prev {
                    if !ll_slices(&ranks[ps..pe], &ranks[s - 1..e]) {
                        ok = false;
                        break;
                    }
                }
                prev = Some((s - 1, e));
                from = to + 1;
            }
            if ok {
                options.push(ends);
            }
        }
        per_chain.push(options);
    }

    let mut results = vec![Vec::new()];
    for options in &per_chain {
        let mut next = Vec::new();
        for prefix in &results {
            for opt in options {
                let mut v: Vec<usize> = prefix.clone();
                v.extend_from_slice(opt);
                next.push(v);
            }
        }
        results = next;
    }
    results
        .into_iter()
        .map(|ends| {
            let cuts: Vec<usize> = ends.iter().map(|&i| base.cuts()[i - 1]).collect();
            Factorization::from_cuts(base.word().clone(), &cuts, FactorizationKind::Grouping)
        })
        .collect()
}

/// `x = r·a·…`, `y = r·b·…` with `a ≠ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub r: Word,
    pub a: u8,
    pub b: u8,
}

/// The mismatch decomposition of two words, or `None` when one is a prefix
/// of the other.
pub fn mismatch(x: &Word, y: &Word) -> Result<Option<Mismatch>> {
    x.check_alphabet(y)?;
    let l = lcp_len_slices(x.ranks(), y.ranks());
    if l == x.len() || l == y.len() {
        return Ok(None);
    }
    Ok(Some(Mismatch {
        r: x.slice(0, l),
        a: x.symbol(l + 1)?,
        b: y.symbol(l + 1)?,
    }))
}

/// Mismatch decomposition `m_h = r_h a_h s_h`, `m_j = r_h b_h t_h` of two
/// factors of an ICFL factorization, `h < j`.
pub fn factor_mismatch(f: &Factorization, h: usize, j: usize) -> Result<Mismatch> {
    f.require_kind(FactorizationKind::Icfl)?;
    if h >= j {
        return Err(Error::OutOfRange(format!("factor pair ({h}, {j}) must satisfy h < j")));
    }
    let (mh, mj) = (f.factor(h)?, f.factor(j)?);
    let m = mismatch(&mh, &mj)?
        .ok_or_else(|| Error::Invariant(format!("factors {h} and {j} are prefix-comparable")))?;
    if f.word().alphabet().rank(m.a) >= f.word().alphabet().rank(m.b) {
        return Err(Error::Invariant(format!("factors {h} and {j} are not ≪-ordered")));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Order;
    use crate::lyndon::cfl;
    use crate::oracle;

    fn w(s: &str) -> Word {
        Word::from_bytes(s)
    }

    fn strs(f: &Factorization) -> Vec<String> {
        f.factors().map(|x| x.to_string()).collect()
    }

    #[test]
    fn bre_examples() {
        let d = bre(&w("dabadabdabdadac")).unwrap().unwrap();
        assert_eq!(d.z, w("dabadabd"));
        assert_eq!((d.p, d.p_bar, d.r, d.s.len()), (w("daba"), w("dabd"), w("dab"), 0));
        assert_eq!((d.a, d.b), (b'a', b'd'));

        let d = bre(&w("aaaaaaaaaaaabbab")).unwrap().unwrap();
        assert_eq!(d.z, w("aaaaaaaaaaaab"));
        assert_eq!((d.p, d.p_bar, d.r.len()), (w("aaaaaaaaaaaa"), w("b"), 0));
        assert_eq!((d.s, d.a, d.b), (w("aaaaaaaaaaa"), b'a', b'b'));

        assert_eq!(bre(&w("bbaba")).unwrap(), None);
        assert_eq!(bre(&w("")).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn icfl_examples() {
        assert_eq!(strs(&icfl(&w("aaaaaaaaaaaabbab")).unwrap()), ["aaaaaaaaaaaa", "bbab"]);
        assert_eq!(strs(&icfl(&w("dabadabdabdadac")).unwrap()), ["daba", "dabdab", "dadac"]);
        assert_eq!(strs(&icfl(&w("bbababbaa")).unwrap()), ["bbababbaa"]);
        assert_eq!(icfl(&w("")).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn icfl_steps_record_both_cases() {
        let (f, steps) = icfl_with_steps(&w("dabadabdabdadac")).unwrap();
        assert_eq!(strs(&f), ["daba", "dabdab", "dadac"]);
        let cases: Vec<_> = steps.iter().map(|s| (s.start, s.case)).collect();
        assert_eq!(cases, vec![(1, IcflCase::Split), (5, IcflCase::Split)]);

        let (f, steps) = icfl_with_steps(&w("baababb")).unwrap();
        assert_eq!(strs(&f), ["baaba", "bb"]);
        let cases: Vec<_> = steps.iter().map(|s| (s.start, s.case)).collect();
        assert_eq!(cases, vec![(1, IcflCase::Merge), (4, IcflCase::Split)]);
    }

    #[test]
    fn icfl_handles_long_inputs_without_recursion() {
        let text: Vec<u8> = (0..200_000u32).map(|i| b"ab"[(i * 7 % 13 % 2) as usize]).collect();
        let word = w(std::str::from_utf8(&text).unwrap());
        let f = icfl(&word).unwrap();
        f.certify().unwrap();
    }

    #[test]
    fn chains_examples() {
        let spans = |s: &str| -> Vec<(usize, usize)> {
            pmci_chains(&cfl(&w(s), Order::Inverse).unwrap())
                .unwrap()
                .iter()
                .map(|c| (c.start_index, c.end_index))
                .collect()
        };
        assert_eq!(spans("dabadabdabdadac"), vec![(1, 3), (4, 4)]);
        assert_eq!(spans("bba"), vec![(1, 1)]);
        assert_eq!(spans("aaaaaaaaaaaabbab"), vec![(1, 12), (13, 14)]);
        let wrong = cfl(&w("ab"), Order::Normal).unwrap();
        assert!(matches!(pmci_chains(&wrong), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn grouping_examples() {
        let word = w("dabadabdabdadac");
        let base = cfl(&word, Order::Inverse).unwrap();
        let witness = is_grouping(&icfl(&word).unwrap(), &base).unwrap().unwrap();
        assert_eq!(witness.boundaries, vec![0, 1, 3, 4]);
        assert!(is_grouping(&base, &base).unwrap().is_none(), "(dab, dab) is not ≪-ordered");

        let bad = Factorization::from_lengths(word.clone(), &[3, 12], FactorizationKind::Grouping).unwrap();
        assert_eq!(is_grouping(&bad, &base).unwrap(), None);

        // all-singleton chains whose factors are pairwise ≪
        let word = w("abc");
        let base = cfl(&word, Order::Inverse).unwrap();
        assert_eq!(strs(&base), ["a", "b", "c"]);
        assert_eq!(is_grouping(&base, &base).unwrap().unwrap().boundaries, vec![0, 1, 2, 3]);

        let other = icfl(&w("abd")).unwrap();
        assert_eq!(is_grouping(&other, &base).unwrap_err(), Error::WordMismatch);
    }

    #[test]
    fn enumerate_groupings_of_example() {
        let word = w("dabadabdabda");
        let base = cfl(&word, Order::Inverse).unwrap();
        let all = enumerate_groupings(&base).unwrap();
        let ic = icfl(&word).unwrap();
        assert!(all.iter().any(|g| g.cuts() == ic.cuts()));
        for g in &all {
            assert!(is_grouping(g, &base).unwrap().is_some());
        }
        let example = cfl(&w("dabadabdabdadac"), Order::Inverse).unwrap();
        assert_eq!(enumerate_groupings(&example).unwrap().len(), 1);
        let long = cfl(&w(&"a".repeat(GROUPING_ENUMERATION_LIMIT + 1)), Order::Inverse).unwrap();
        assert!(enumerate_groupings(&long).is_err());
    }

    #[test]
    fn mismatch_accessor() {
        let f = icfl(&w("dabadabdabdadac")).unwrap();
        let m = factor_mismatch(&f, 1, 2).unwrap();
        assert_eq!((m.r, m.a, m.b), (w("dab"), b'a', b'd'));
        let m = factor_mismatch(&f, 2, 3).unwrap();
        assert_eq!((m.r, m.a, m.b), (w("da"), b'b', b'd'));
        assert!(factor_mismatch(&f, 2, 2).is_err());
        assert_eq!(mismatch(&w("ab"), &w("abc")).unwrap(), None);
    }

    #[test]
    fn bre_matches_oracle_on_small_words() {
        for n in 1..=10u32 {
            for code in 0..(1u32 << n) {
                let bytes: Vec<u8> = (0..n).map(|i| if code >> i & 1 == 1 { b'b' } else { b'a' }).collect();
                let word = Word::from_bytes(&bytes);
                let fast = bre(&word).unwrap().map(|d| (d.p.len(), d.r.len()));
                assert_eq!(fast, oracle::naive_bre_lengths(word.ranks()), "{word}");
            }
        }
    }
}

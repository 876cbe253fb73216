//! Local and global suffixes of factor ranges, suffix-sorting
//! compatibility, and the LCP bound `M` of an inverse Lyndon factorization.
//!
//! For a range `u = m_i ⋯ m_h` of a factorization of `w`, the local suffix
//! at position `j` is `suf_u(j) = w[j, last(u)]` and the global suffix is
//! `suf(j) = w[j, |w|]`. Sorting is compatible on `u` when local and global
//! suffixes of `u` come out in the same relative order.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{compare_ranks, lcp_len_slices, Order, Word};
use crate::borders::Check;
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};
use crate::icfl::{factor_mismatch, icfl};

/// A contiguous range `m_first ⋯ m_last` of factors, 1-indexed and
/// inclusive.
#[derive(Debug, Clone, Copy)]
pub struct FactorRange<'a> {
    factorization: &'a Factorization,
    first: usize,
    last: usize,
}

impl<'a> FactorRange<'a> {
    pub fn new(factorization: &'a Factorization, first: usize, last: usize) -> Result<Self> {
        if first == 0 || first > last || last > factorization.len() {
            return Err(Error::OutOfRange(format!(
                "factor range [{first}, {last}] of {}",
                factorization.len()
            )));
        }
        Ok(Self {
            factorization,
            first,
            last,
        })
    }

    /// The range covering every factor.
    pub fn whole(factorization: &'a Factorization) -> Self {
        Self {
            factorization,
            first: 1,
            last: factorization.len(),
        }
    }

    pub fn factorization(&self) -> &'a Factorization {
        self.factorization
    }

    pub fn word(&self) -> &'a Word {
        self.factorization.word()
    }

    pub fn first_factor(&self) -> usize {
        self.first
    }

    pub fn last_factor(&self) -> usize {
        self.last
    }

    /// Position of the first symbol of `u` in `w`.
    pub fn first_position(&self) -> usize {
        self.factorization.span(self.first).expect("validated range").0
    }

    /// Position of the last symbol of `u` in `w`.
    pub fn last_position(&self) -> usize {
        self.factorization.span(self.last).expect("validated range").1
    }

    /// Whether the range stops before the last factor of the factorization.
    pub fn ends_early(&self) -> bool {
        self.last < self.factorization.len()
    }

    /// Every range of a factorization, ordered by start then end.
    pub fn all(factorization: &'a Factorization) -> impl Iterator<Item = FactorRange<'a>> + 'a {
        let k = factorization.len();
        (1..=k).flat_map(move |first| {
            (first..=k).map(move |last| FactorRange {
                factorization,
                first,
                last,
            })
        })
    }

    fn same_as(&self, other: &FactorRange<'_>) -> bool {
        std::ptr::eq(self.factorization, other.factorization) && self.first == other.first && self.last == other.last
    }

    pub fn suffix(&self, position: usize) -> Result<SuffixRef<'a>> {
        SuffixRef::new(*self, position)
    }
}

/// A position `j` inside a [`FactorRange`], standing for both `suf_u(j)`
/// and `suf(j)`.
#[derive(Debug, Clone, Copy)]
pub struct SuffixRef<'a> {
    range: FactorRange<'a>,
    position: usize,
}

impl<'a> SuffixRef<'a> {
    pub fn new(range: FactorRange<'a>, position: usize) -> Result<Self> {
        if position < range.first_position() || position > range.last_position() {
            return Err(Error::OutOfRange(format!(
                "position {position} outside [{}, {}]",
                range.first_position(),
                range.last_position()
            )));
        }
        Ok(Self { range, position })
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn range(&self) -> FactorRange<'a> {
        self.range
    }

    fn local_ranks(&self) -> &'a [u8] {
        &self.range.word().ranks()[self.position - 1..self.range.last_position()]
    }

    fn global_ranks(&self) -> &'a [u8] {
        &self.range.word().ranks()[self.position - 1..]
    }

    /// `suf_u(j) = w[j, last(u)]`.
    pub fn local(&self) -> Word {
        self.range.word().slice(self.position - 1, self.range.last_position())
    }

    /// `suf(j) = w[j, |w|]`.
    pub fn global(&self) -> Word {
        self.range.word().slice(self.position - 1, self.range.word().len())
    }
}

/// Two positions whose local and global suffixes sort differently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompatibilityViolation {
    pub first_factor: usize,
    pub last_factor: usize,
    pub i: usize,
    pub j: usize,
}

fn check_compatibility(range: &FactorRange<'_>, order: Order) -> Check<CompatibilityViolation> {
    let s = range.word().ranks();
    let (first, last) = (range.first_position(), range.last_position());
    for i in first..=last {
        for j in i + 1..=last {
            let local = compare_ranks(&s[i - 1..last], &s[j - 1..last], order) == Ordering::Less;
            let global = compare_ranks(&s[i - 1..], &s[j - 1..], order) == Ordering::Less;
            if local != global {
                return Check::Violated(CompatibilityViolation {
                    first_factor: range.first_factor(),
                    last_factor: range.last_factor(),
                    i,
                    j,
                });
            }
        }
    }
    Check::Holds
}

/// Whether sorting the local suffixes of a range of `CFL(w)` under `≺`
/// agrees with sorting the corresponding global suffixes.
pub fn check_cfl_compatibility(range: &FactorRange<'_>) -> Result<Check<CompatibilityViolation>> {
    range.factorization().require_kind(FactorizationKind::Cfl)?;
    Ok(check_compatibility(range, Order::Normal))
}

/// Whether sorting the local suffixes of a range of `ICFL(w)` under `≺_in`
/// agrees with sorting the corresponding global suffixes under `≺_in`.
pub fn check_icfl_inverse_compatibility(range: &FactorRange<'_>) -> Result<Check<CompatibilityViolation>> {
    range.factorization().require_kind(FactorizationKind::Icfl)?;
    Ok(check_compatibility(range, Order::Inverse))
}

/// Predicted relative order of two global suffixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalOrder {
    /// `suf(j1) ≺ suf(j2)`.
    J1BeforeJ2,
    /// `suf(j2) ≺ suf(j1)`.
    J2BeforeJ1,
}

/// Predicts the order of `suf(j1)` and `suf(j2)` under `≺` from the local
/// suffixes of a range of `ICFL(w)`, given `suf_u(j1) ≺ suf_u(j2)`.
///
/// The order flips exactly when `suf_u(j1)` is a proper prefix of
/// `suf_u(j2)` and the range stops before `m_k`.
pub fn predict_global_order(j1: &SuffixRef<'_>, j2: &SuffixRef<'_>) -> Result<GlobalOrder> {
    if !j1.range.same_as(&j2.range) {
        return Err(Error::InvalidArgument("suffixes belong to different ranges".into()));
    }
    j1.range.factorization().require_kind(FactorizationKind::Icfl)?;
    let (x, y) = (j1.local_ranks(), j2.local_ranks());
    match compare_ranks(x, y, Order::Normal) {
        Ordering::Less => {}
        Ordering::Equal => return Err(Error::InvalidArgument("local suffixes are equal".into())),
        Ordering::Greater => {
            return Err(Error::InvalidArgument("local suffixes must satisfy suf_u(j1) ≺ suf_u(j2)".into()))
        }
    }
    if y.starts_with(x) && j1.range.ends_early() {
        Ok(GlobalOrder::J2BeforeJ1)
    } else {
        Ok(GlobalOrder::J1BeforeJ2)
    }
}

/// The actual order of the two global suffixes, for comparison with
/// [`predict_global_order`].
pub fn actual_global_order(j1: &SuffixRef<'_>, j2: &SuffixRef<'_>) -> GlobalOrder {
    match compare_ranks(j1.global_ranks(), j2.global_ranks(), Order::Normal) {
        Ordering::Greater => GlobalOrder::J2BeforeJ1,
        _ => GlobalOrder::J1BeforeJ2,
    }
}

fn adjacent_argmax(f: &Factorization) -> Result<(usize, usize)> {
    f.require_kind(FactorizationKind::Icfl)?;
    if f.len() < 2 {
        return Err(Error::InverseLyndonWord);
    }
    let lengths = f.lengths();
    let mut best = (1, 0);
    for i in 1..lengths.len() {
        let len = lengths[i - 1] + lengths[i];
        if len > best.1 {
            best = (i, len);
        }
    }
    Ok(best)
}

/// `M = max |m_i m_{i+1}|` over consecutive factors of `ICFL(w)`. Undefined
/// for a single factor.
pub fn max_adjacent_length(f: &Factorization) -> Result<usize> {
    adjacent_argmax(f).map(|(_, m)| m)
}

/// How the factor pairs of [`LcpBoundReport`] were enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcpMethod {
    /// Every pair of factor occurrences with distinct starts.
    Exhaustive,
    /// Every pair of distinct suffixes; each factor pair is dominated by
    /// the suffixes that extend it.
    SuffixPairs,
    /// Uniformly sampled pairs of distinct suffixes.
    Sampled,
}

impl LcpMethod {
    pub fn name(self) -> &'static str {
        match self {
            LcpMethod::Exhaustive => "exhaustive",
            LcpMethod::SuffixPairs => "suffix-pairs",
            LcpMethod::Sampled => "sampled",
        }
    }
}

/// Two occurrences `w[start, end]`, 1-indexed and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OccurrencePair {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpBoundReport {
    pub m: usize,
    /// Index `i` of the first adjacent pair with `|m_i m_{i+1}| = M`.
    pub argmax_pair: usize,
    pub max_observed_lcp: usize,
    /// A pair of occurrences attaining `max_observed_lcp`.
    pub witness: Option<OccurrencePair>,
    pub method: LcpMethod,
    /// Number of pairs examined.
    pub pairs: u64,
}

impl LcpBoundReport {
    pub fn holds(&self) -> bool {
        self.max_observed_lcp <= self.m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcpBoundOptions {
    /// Largest length enumerated pair by pair over all factor occurrences.
    pub exhaustive_limit: usize,
    /// Largest length for which every suffix pair is compared.
    pub suffix_pair_limit: usize,
    pub samples: u64,
    pub seed: u64,
}

impl Default for LcpBoundOptions {
    fn default() -> Self {
        Self {
            exhaustive_limit: 64,
            suffix_pair_limit: 4096,
            samples: 1 << 20,
            seed: 0x1cf1,
        }
    }
}

/// Checks `LCP(u, v) ≤ M` for pairs of proper factors of `w` occurring at
/// distinct positions, with default options.
pub fn verify_lcp_bound(w: &Word) -> Result<LcpBoundReport> {
    verify_lcp_bound_with(w, &LcpBoundOptions::default())
}

pub fn verify_lcp_bound_with(w: &Word, opts: &LcpBoundOptions) -> Result<LcpBoundReport> {
    lcp_bound_report(&icfl(w)?, opts)
}

/// [`verify_lcp_bound_with`] on a given inverse Lyndon factorization.
pub fn lcp_bound_report(f: &Factorization, opts: &LcpBoundOptions) -> Result<LcpBoundReport> {
    let (argmax_pair, m) = adjacent_argmax(f)?;
    let s = f.word().ranks();
    let n = s.len();
    let mut best: Option<(usize, OccurrencePair)> = None;
    let mut pairs = 0u64;
    let mut record = |lcp: usize, pair: OccurrencePair| {
        if best.is_none_or(|(b, _)| lcp > b) {
            best = Some((lcp, pair));
        }
    };

    let method = if n <= opts.exhaustive_limit {
        // factor occurrences w[i, j], excluding w itself
        for i in 1..=n {
            for i2 in i + 1..=n {
                for j in i..=n {
                    if i == 1 && j == n {
                        continue;
                    }
                    for j2 in i2..=n {
                        pairs += 1;
                        let lcp = lcp_len_slices(&s[i - 1..j], &s[i2 - 1..j2]);
                        record(
                            lcp,
                            OccurrencePair {
                                first: (i, j),
                                second: (i2, j2),
                            },
                        );
                    }
                }
            }
        }
        LcpMethod::Exhaustive
    } else {
        let suffix_pair = |i: usize, i2: usize| {
            let lcp = lcp_len_slices(&s[i - 1..], &s[i2 - 1..]);
            (
                lcp,
                OccurrencePair {
                    first: (i, i + lcp.max(1) - 1),
                    second: (i2, i2 + lcp.max(1) - 1),
                },
            )
        };
        if n <= opts.suffix_pair_limit {
            for i in 1..=n {
                for i2 in i + 1..=n {
                    pairs += 1;
                    let (lcp, pair) = suffix_pair(i, i2);
                    record(lcp, pair);
                }
            }
            LcpMethod::SuffixPairs
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.samples {
                let i = rng.gen_range(1..=n);
                let mut i2 = rng.gen_range(1..n);
                if i2 >= i {
                    i2 += 1;
                }
                pairs += 1;
                let (lcp, pair) = suffix_pair(i.min(i2), i.max(i2));
                record(lcp, pair);
            }
            LcpMethod::Sampled
        }
    };
    // the whole word is excluded, so the lcp of two suffixes is attained
    // by proper factors
    let (max_observed_lcp, witness) = match best {
        Some((lcp, pair)) => (lcp, Some(pair)),
        None => (0, None),
    };
    Ok(LcpBoundReport {
        m,
        argmax_pair,
        max_observed_lcp,
        witness: if max_observed_lcp == 0 { None } else { witness },
        method,
        pairs,
    })
}

/// `lcp(x·r, y·r)` for two different nonempty suffixes `x`, `y` of
/// `m_{i-1}`, where `r = lcp(m_{i-1}, m_i)`. Fails with
/// [`Error::Invariant`] if it differs from `lcp(x_w, y_w)`.
///
/// `x_len` and `y_len` are the lengths of the two suffixes.
pub fn lcp_adjacent_suffix_reduction(f: &Factorization, i: usize, x_len: usize, y_len: usize) -> Result<Word> {
    f.require_kind(FactorizationKind::Icfl)?;
    if i < 2 || i > f.len() {
        return Err(Error::OutOfRange(format!("factor index {i} must lie in [2, {}]", f.len())));
    }
    let prev = f.factor(i - 1)?;
    if x_len == 0 || y_len == 0 || x_len > prev.len() || y_len > prev.len() {
        return Err(Error::OutOfRange(format!(
            "suffix lengths ({x_len}, {y_len}) of a factor of length {}",
            prev.len()
        )));
    }
    if x_len == y_len {
        return Err(Error::InvalidArgument("x and y must be different suffixes".into()));
    }
    let r = factor_mismatch(f, i - 1, i)?.r;
    let x = prev.slice(prev.len() - x_len, prev.len());
    let y = prev.slice(prev.len() - y_len, prev.len());
    let xr = x.concat(&r)?;
    let yr = y.concat(&r)?;
    let local = lcp_len_slices(xr.ranks(), yr.ranks());

    let (_, end) = f.span(i - 1)?;
    let s = f.word().ranks();
    let global = lcp_len_slices(&s[end - x_len..], &s[end - y_len..]);
    if local != global {
        return Err(Error::Invariant(format!(
            "lcp(xr, yr) has length {local} but lcp(x_w, y_w) has length {global}"
        )));
    }
    Ok(xr.slice(0, local))
}

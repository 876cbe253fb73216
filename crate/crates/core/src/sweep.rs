//! Exhaustive property sweeps over all words on a small alphabet.
//!
//! Each suite checks one family of properties on every word over the first
//! `K` letters `a, b, c, …` up to a length cap, comparing fast paths with
//! [`crate::oracle`] and evaluating theorem statements directly. Words are
//! distributed over a rayon pool; the reported counterexample is always the
//! earliest one in (length, lexicographic) order, so output does not depend
//! on scheduling.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::alphabet::{compare_ranks, lcp_len_slices, lex_compare, ll_compare, prefix_relation, Order, PrefixRelation, Word};
use crate::borders::{bre_alignment, check_border_not_prefix, check_bre_border_incomparable, check_chain_border_suffix, border_array};
use crate::error::Result;
use crate::factorization::{Factorization, FactorizationKind};
use crate::icfl::{bre, enumerate_groupings, factor_mismatch, icfl, is_grouping, pmci_chains};
use crate::lyndon::{cfl, is_inverse_lyndon, is_lyndon, is_prenecklace, longest_lyndon_prefix, sesquipower_form};
use crate::oracle;
use crate::overlap::{analyze_overlap, cfl_of_factor, classify_factor, overlap_lengths, FactorClass};
use crate::suffixes::{
    actual_global_order, check_cfl_compatibility, check_icfl_inverse_compatibility, lcp_adjacent_suffix_reduction,
    lcp_bound_report, max_adjacent_length, predict_global_order, FactorRange, LcpBoundOptions,
};

/// A function producing the inverse Lyndon factorization checked by the
/// suites. Swapping it out lets tests confirm that the suites catch a
/// broken implementation.
pub type IcflProvider = fn(&Word) -> Result<Factorization>;

/// A deliberately broken provider: `ICFL(w)` with the last symbol split
/// off into a factor of its own.
pub fn corrupted_icfl(w: &Word) -> Result<Factorization> {
    let f = icfl(w)?;
    let mut lengths = f.lengths();
    let last = lengths.pop().expect("nonempty factorization");
    if last > 1 {
        lengths.push(last - 1);
        lengths.push(1);
    } else {
        lengths.push(last);
    }
    Factorization::from_lengths(w.clone(), &lengths, FactorizationKind::Icfl)
}

/// The `idx`-th word of length `n` over the first `k` letters, in
/// lexicographic order.
pub fn word_at(k: usize, n: usize, mut idx: u64) -> Word {
    let mut bytes = vec![b'a'; n];
    for slot in bytes.iter_mut().rev() {
        *slot = b'a' + (idx % k as u64) as u8;
        idx /= k as u64;
    }
    Word::from_bytes(&bytes)
}

/// Every word of length `1..=max_len` over the first `k` letters, shortest
/// first.
pub fn all_words(k: usize, max_len: usize) -> impl Iterator<Item = Word> {
    (1..=max_len).flat_map(move |n| (0..(k as u64).pow(n as u32)).map(move |i| word_at(k, n, i)))
}

struct Ctx {
    k: usize,
    max_len: usize,
    icfl: IcflProvider,
}

/// Per-word result: number of individual checks and suite-specific
/// counters.
#[derive(Default, Clone, Copy)]
struct Tally {
    checks: u64,
    counters: [u64; 4],
}

/// A failed word, keeping whatever was counted before the failure.
struct Failure {
    tally: Tally,
    message: String,
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Self {
            tally: Tally::default(),
            message,
        }
    }
}

type CheckResult = std::result::Result<Tally, Failure>;
type WordCheck = fn(&Word, &Ctx) -> CheckResult;

struct Suite {
    name: &'static str,
    description: &'static str,
    /// Default length cap for alphabets of size 2, 3 and larger.
    caps: [usize; 3],
    /// Lengths beyond this are refused regardless of configuration.
    hard_cap: Option<usize>,
    counters: &'static [&'static str],
    check: WordCheck,
}

const SUITES: &[Suite] = &[
    Suite {
        name: "order",
        description: "lexicographic order is total; inverse order swaps incomparable pairs; ≪ excludes reversal",
        caps: [6, 4, 3],
        hard_cap: Some(7),
        counters: &[],
        check: check_order,
    },
    Suite {
        name: "cfl",
        description: "Duval matches the greedy longest-Lyndon-prefix oracle in both orders",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_cfl,
    },
    Suite {
        name: "lyndon-props",
        description: "prenecklaces, sesquipowers, unbordered Lyndon words, inverse Lyndon characterizations",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_lyndon_props,
    },
    Suite {
        name: "icfl",
        description: "ICFL and bounded right extensions match the literal recursive definition",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_icfl,
    },
    Suite {
        name: "icfl-structure",
        description: "ICFL factors are inverse Lyndon, consecutive factors satisfy ≪, ICFL groups CFL_in",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_icfl_structure,
    },
    Suite {
        name: "unique-grouping",
        description: "an inverse Lyndon word is unbordered or one prefix chain, and (w) is its only grouping",
        caps: [12, 8, 6],
        hard_cap: None,
        counters: &["inverse Lyndon words"],
        check: check_unique_grouping,
    },
    Suite {
        name: "factor-occurrence",
        description: "m_i and r_{i-1} b_{i-1} never occur in m_1 ⋯ m_{i-1}; common prefixes of m_i, m_j prefix m_h",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_factor_occurrence,
    },
    Suite {
        name: "border-prefix",
        description: "no nonempty border of m_i is a prefix of m_{i+1}",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_border_prefix,
    },
    Suite {
        name: "chain-borders",
        description: "borders of a CFL_in prefix chain start at factor boundaries",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_chain_borders,
    },
    Suite {
        name: "bre-borders",
        description: "borders of p are incomparable with p̄; p is a run product of leading CFL_in factors",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &[],
        check: check_bre_borders,
    },
    Suite {
        name: "compat-cfl",
        description: "local/global suffix sorting agrees on every range of CFL(w)",
        caps: [12, 8, 5],
        hard_cap: None,
        counters: &[],
        check: check_compat_cfl,
    },
    Suite {
        name: "compat-icfl",
        description: "local/global suffix sorting under the inverse order agrees on every range of ICFL(w)",
        caps: [12, 8, 5],
        hard_cap: None,
        counters: &[],
        check: check_compat_icfl,
    },
    Suite {
        name: "predict",
        description: "the predicted global order of two suffixes matches the actual one",
        caps: [12, 8, 5],
        hard_cap: None,
        counters: &["single-factor ranges"],
        check: check_predict,
    },
    Suite {
        name: "lcp-bound",
        description: "LCP of proper factors at distinct positions is at most M",
        caps: [14, 9, 6],
        hard_cap: None,
        counters: &["words with k ≥ 2"],
        check: check_lcp_bound,
    },
    Suite {
        name: "lcp-suffix",
        description: "suffix-pair lcp reductions and the bound for suffixes of m_{i-1}, m_{j-1}",
        caps: [12, 8, 5],
        hard_cap: None,
        counters: &[
            "adjacent reductions",
            "pairs with 1 < i < j ≤ k",
            "pairs from any two factors",
            "of which above M",
        ],
        check: check_lcp_suffix,
    },
    Suite {
        name: "overlap-assembly",
        description: "CFL of every non-simple factor assembles from CFL(w)",
        caps: [10, 7, 5],
        hard_cap: None,
        counters: &["non-simple occurrences"],
        check: check_overlap_assembly,
    },
    Suite {
        name: "overlap-cases",
        description: "every non-simple overlap of two words matches one of the three cases",
        caps: [8, 5, 4],
        hard_cap: Some(10),
        counters: &[
            "non-simple overlaps",
            "ambiguous",
            "uncovered",
            "uncovered, but a shared run reaches an end of CFL(y)",
        ],
        check: check_overlap_cases,
    },
];

/// Names of all suites, in execution order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// `(name, description)` of every suite.
pub fn suite_descriptions() -> Vec<(&'static str, &'static str)> {
    SUITES.iter().map(|s| (s.name, s.description)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub alphabet_size: usize,
    /// Overrides every suite's default length cap (still subject to hard
    /// caps).
    pub max_len: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            alphabet_size: 2,
            max_len: None,
        }
    }
}

/// The earliest word on which a suite failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub word: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub alphabet_size: usize,
    pub max_len: usize,
    pub words: u64,
    pub checks: u64,
    /// Number of words on which the suite failed.
    pub failures: u64,
    pub counterexample: Option<Counterexample>,
    pub counters: Vec<(&'static str, u64)>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<17} {} K={} n≤{} words={} checks={} failures={}",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.alphabet_size,
            self.max_len,
            self.words,
            self.checks,
            self.failures
        )?;
        for (name, value) in &self.counters {
            write!(f, "\n    {name}: {value}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n    first counterexample: {}: {}", c.word, c.message)?;
        }
        Ok(())
    }
}

/// Runs the property suites.
#[derive(Clone, Copy)]
pub struct Sweep {
    config: SweepConfig,
    icfl: IcflProvider,
}

impl Sweep {
    pub fn new(config: SweepConfig) -> Self {
        Self { config, icfl }
    }

    /// Replaces the inverse Lyndon factorization under test.
    pub fn with_icfl(mut self, provider: IcflProvider) -> Self {
        self.icfl = provider;
        self
    }

    /// Runs one suite by name; `None` if no suite has that name.
    pub fn run(&self, name: &str) -> Option<SuiteOutcome> {
        SUITES.iter().find(|s| s.name == name).map(|s| self.run_suite(s))
    }

    pub fn run_all(&self) -> Vec<SuiteOutcome> {
        SUITES.iter().map(|s| self.run_suite(s)).collect()
    }

    fn run_suite(&self, suite: &Suite) -> SuiteOutcome {
        let k = self.config.alphabet_size.max(1);
        let default = suite.caps[k.saturating_sub(2).min(2)];
        let mut max_len = self.config.max_len.unwrap_or(default);
        if let Some(hard) = suite.hard_cap {
            max_len = max_len.min(hard);
        }
        let ctx = Ctx {
            k,
            max_len,
            icfl: self.icfl,
        };

        let mut outcome = SuiteOutcome {
            suite: suite.name,
            alphabet_size: k,
            max_len,
            words: 0,
            checks: 0,
            failures: 0,
            counterexample: None,
            counters: suite.counters.iter().map(|&c| (c, 0)).collect(),
        };
        for n in 1..=max_len {
            let total = (k as u64).pow(n as u32);
            let (tally, failures, first) = (0..total)
                .into_par_iter()
                .map(|idx| {
                    let w = word_at(k, n, idx);
                    match (suite.check)(&w, &ctx) {
                        Ok(t) => (t, 0u64, None),
                        Err(e) => (e.tally, 1, Some((idx, w.to_string(), e.message))),
                    }
                })
                .reduce(
                    || (Tally::default(), 0, None),
                    |a, b| {
                        let mut t = a.0;
                        t.checks += b.0.checks;
                        for (x, y) in t.counters.iter_mut().zip(b.0.counters) {
                            *x += y;
                        }
                        let first = match (a.2, b.2) {
                            (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                            (x, y) => x.or(y),
                        };
                        (t, a.1 + b.1, first)
                    },
                );
            outcome.words += total;
            outcome.checks += tally.checks;
            outcome.failures += failures;
            for (slot, value) in outcome.counters.iter_mut().zip(tally.counters) {
                slot.1 += value;
            }
            if outcome.counterexample.is_none() {
                outcome.counterexample = first.map(|(_, word, message)| Counterexample { word, message });
            }
        }
        outcome
    }
}

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, Failure> {
    Err(Failure::from(msg.into()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str(e: crate::error::Error) -> String {
    e.to_string()
}

fn strs(f: &Factorization) -> String {
    f.to_string()
}

fn check_order(x: &Word, ctx: &Ctx) -> CheckResult {
    let others: Vec<Word> = all_words(ctx.k, x.len().max(1)).collect();
    let mut t = Tally::default();
    for y in &others {
        let xy = lex_compare(x, y, Order::Normal).map_err(err_str)?;
        let yx = lex_compare(y, x, Order::Normal).map_err(err_str)?;
        ensure(xy == yx.reverse(), || format!("{x} vs {y} is not antisymmetric"))?;
        ensure((xy == Ordering::Equal) == (x == y), || format!("{x} and {y} compare equal"))?;
        let rel = prefix_relation(x, y).map_err(err_str)?;
        if rel == PrefixRelation::Incomparable {
            let inv = lex_compare(y, x, Order::Inverse).map_err(err_str)?;
            ensure((xy == Ordering::Less) == (inv == Ordering::Less), || {
                format!("inverse order does not swap {x} and {y}")
            })?;
            if xy == Ordering::Less {
                ensure(ll_compare(x, y).map_err(err_str)?, || format!("{x} ≪ {y} fails"))?;
            }
        }
        if ll_compare(x, y).map_err(err_str)? {
            ensure(yx != Ordering::Less, || format!("{x} ≪ {y} but {y} ≺ {x}"))?;
        }
        t.checks += 1;
        if xy != Ordering::Less {
            continue;
        }
        for z in &others {
            if lex_compare(y, z, Order::Normal).map_err(err_str)? == Ordering::Less {
                ensure(lex_compare(x, z, Order::Normal).map_err(err_str)? == Ordering::Less, || {
                    format!("{x} ≺ {y} ≺ {z} is not transitive")
                })?;
                t.checks += 1;
            }
        }
    }
    Ok(t)
}

fn check_cfl(w: &Word, _: &Ctx) -> CheckResult {
    for order in [Order::Normal, Order::Inverse] {
        let fast = cfl(w, order).map_err(err_str)?;
        let naive = oracle::naive_cfl(w, order).map_err(err_str)?;
        ensure(fast.cuts() == naive.cuts(), || {
            format!("{order:?}: fast {} vs oracle {}", strs(&fast), strs(&naive))
        })?;
        fast.certify().map_err(err_str)?;
    }
    Ok(Tally {
        checks: 2,
        ..Tally::default()
    })
}

fn check_lyndon_props(w: &Word, _: &Ctx) -> CheckResult {
    let mut t = Tally::default();
    for order in [Order::Normal, Order::Inverse] {
        let lyn = is_lyndon(w, order).map_err(err_str)?;
        ensure(lyn == oracle::naive_is_lyndon(w, order).map_err(err_str)?, || {
            format!("{order:?}: is_lyndon disagrees with the oracle")
        })?;
        ensure(is_prenecklace(w, order) == oracle::naive_is_prenecklace(w, order), || {
            format!("{order:?}: is_prenecklace disagrees with the oracle")
        })?;
        if lyn {
            ensure(border_array(w).map_err(err_str)?.is_unbordered(), || format!("{order:?}: Lyndon word is bordered"))?;
            ensure(oracle::naive_is_primitive(w).map_err(err_str)?, || format!("{order:?}: Lyndon word is not primitive"))?;
        }
        match (sesquipower_form(w, order), oracle::naive_sesquipower(w, order)) {
            (Ok(s), Ok((base, k, residue))) => {
                ensure(s.base == base && s.repetitions == k && s.residue == residue, || {
                    format!("{order:?}: sesquipower form disagrees with the oracle")
                })?;
                ensure(s.reconstruct() == *w, || format!("{order:?}: sesquipower does not reconstruct"))?;
            }
            (Err(_), Err(_)) => {}
            _ => return fail(format!("{order:?}: sesquipower existence disagrees with the oracle")),
        }

        let f = cfl(w, order).map_err(err_str)?;
        let first = longest_lyndon_prefix(w, order).map_err(err_str)?;
        ensure(first == f.factor(1).map_err(err_str)?, || format!("{order:?}: longest Lyndon prefix is not ℓ_1"))?;
        for i in 1..=f.len() {
            for j in i + 1..=f.len() {
                let product = f.product(i, j).map_err(err_str)?;
                let sub = cfl(&product, order).map_err(err_str)?;
                let expected: Vec<usize> = (i..=j).map(|t| f.span(t).unwrap().1 + 1 - f.span(i).unwrap().0).collect();
                ensure(sub.cuts() == expected, || format!("{order:?}: CFL(ℓ_{i} ⋯ ℓ_{j}) is not (ℓ_{i}, …, ℓ_{j})"))?;
                t.checks += 1;
            }
        }
        if order == Order::Normal {
            let smallest = oracle::naive_suffix_sort(w, order).map_err(err_str)?[0];
            let (last_start, _) = f.span(f.len()).map_err(err_str)?;
            ensure(smallest == last_start, || "the last Lyndon factor is not the smallest suffix".to_string())?;
        }
        t.checks += 4;
    }

    let inv = is_inverse_lyndon(w).map_err(err_str)?;
    ensure(inv == oracle::naive_is_inverse_lyndon(w).map_err(err_str)?, || {
        "is_inverse_lyndon disagrees with the oracle".to_string()
    })?;
    ensure(inv == is_prenecklace(w, Order::Inverse), || "inverse Lyndon ≠ anti-prenecklace".to_string())?;
    let anti = is_lyndon(w, Order::Inverse).map_err(err_str)?;
    let unbordered = border_array(w).map_err(err_str)?.is_unbordered();
    ensure(anti == (inv && unbordered), || "anti-Lyndon ≠ unbordered inverse Lyndon".to_string())?;
    if inv {
        for l in 1..w.len() {
            ensure(is_inverse_lyndon(&w.prefix(l).map_err(err_str)?).map_err(err_str)?, || {
                format!("prefix of length {l} of an inverse Lyndon word is not inverse Lyndon")
            })?;
        }
    }
    if anti {
        for i in 2..=w.len() {
            let v = w.suffix(i).map_err(err_str)?;
            ensure(ll_compare(&v, w).map_err(err_str)?, || format!("suffix {v} of an anti-Lyndon word is not ≪ it"))?;
        }
    }
    t.checks += 4;
    Ok(t)
}

fn check_icfl(w: &Word, ctx: &Ctx) -> CheckResult {
    let fast = (ctx.icfl)(w).map_err(err_str)?;
    let naive = oracle::naive_icfl(w).map_err(err_str)?;
    ensure(fast.cuts() == naive.cuts(), || format!("fast {} vs oracle {}", strs(&fast), strs(&naive)))?;
    let b = bre(w).map_err(err_str)?;
    let nb = oracle::naive_bre(w).map_err(err_str)?;
    match (&b, &nb) {
        (None, None) => {}
        (Some(d), Some((p, p_bar, r))) => {
            ensure(d.p == *p && d.p_bar == *p_bar && d.r == *r, || {
                format!("bre ({}, {}) vs oracle ({p}, {p_bar})", d.p, d.p_bar)
            })?;
            ensure(d.z == d.p.concat(&d.p_bar).unwrap(), || "z ≠ p p̄".to_string())?;
            ensure(d.p.len() == d.r.len() + 1 + d.s.len(), || "p ≠ r a s".to_string())?;
            ensure(is_inverse_lyndon(&d.p).map_err(err_str)?, || "p is not inverse Lyndon".to_string())?;
            ensure(ll_compare(&d.p, &d.p_bar).map_err(err_str)?, || "p ≪ p̄ fails".to_string())?;
        }
        _ => return fail("bre existence disagrees with the oracle"),
    }
    ensure(b.is_none() == is_inverse_lyndon(w).map_err(err_str)?, || "bre absent iff inverse Lyndon fails".to_string())?;
    Ok(Tally {
        checks: 2,
        ..Tally::default()
    })
}

fn check_icfl_structure(w: &Word, ctx: &Ctx) -> CheckResult {
    let f = (ctx.icfl)(w).map_err(err_str)?;
    f.certify().map_err(|e| format!("{}: {e}", strs(&f)))?;
    let base = cfl(w, Order::Inverse).map_err(err_str)?;
    let witness = is_grouping(&f, &base).map_err(err_str)?;
    ensure(witness.is_some(), || format!("{} is not a grouping of {}", strs(&f), strs(&base)))?;
    Ok(Tally {
        checks: 2,
        ..Tally::default()
    })
}

fn check_unique_grouping(w: &Word, ctx: &Ctx) -> CheckResult {
    if !is_inverse_lyndon(w).map_err(err_str)? {
        return Ok(Tally::default());
    }
    let base = cfl(w, Order::Inverse).map_err(err_str)?;
    let chains = pmci_chains(&base).map_err(err_str)?;
    let unbordered = border_array(w).map_err(err_str)?.is_unbordered();
    ensure(unbordered || chains.len() == 1, || {
        format!("bordered inverse Lyndon word with {} prefix chains", chains.len())
    })?;
    let groupings = enumerate_groupings(&base).map_err(err_str)?;
    ensure(groupings.len() == 1 && groupings[0].len() == 1, || {
        format!("{} groupings of {}", groupings.len(), strs(&base))
    })?;
    let f = (ctx.icfl)(w).map_err(err_str)?;
    ensure(f.len() == 1, || format!("ICFL of an inverse Lyndon word is {}", strs(&f)))?;
    Ok(Tally {
        checks: 3,
        counters: [1, 0, 0, 0],
    })
}

fn contains(text: &[u8], pattern: &[u8]) -> bool {
    pattern.len() <= text.len() && text.windows(pattern.len()).any(|win| win == pattern)
}

fn check_factor_occurrence(w: &Word, ctx: &Ctx) -> CheckResult {
    let f = (ctx.icfl)(w).map_err(err_str)?;
    let s = w.ranks();
    let mut t = Tally::default();
    for i in 2..=f.len() {
        let (start, end) = f.span(i).map_err(err_str)?;
        let prefix = &s[..start - 1];
        ensure(!contains(prefix, &s[start - 1..end]), || format!("m_{i} occurs in m_1 ⋯ m_{}", i - 1))?;
        let m = factor_mismatch(&f, i - 1, i).map_err(err_str)?;
        let mut rb = m.r.ranks().to_vec();
        rb.push(s[start - 1 + m.r.len()]);
        ensure(!contains(prefix, &rb), || format!("r_{0} b_{0} occurs in m_1 ⋯ m_{0}", i - 1))?;
        t.checks += 2;
    }
    for i in 1..=f.len() {
        for j in i + 2..=f.len() {
            let (mi, mj) = (f.factor(i).unwrap(), f.factor(j).unwrap());
            let r = lcp_len_slices(mi.ranks(), mj.ranks());
            for h in i + 1..j {
                let mh = f.factor(h).unwrap();
                ensure(mh.ranks().starts_with(&mi.ranks()[..r]), || {
                    format!("common prefix of m_{i} and m_{j} is not a prefix of m_{h}")
                })?;
                t.checks += 1;
            }
        }
    }
    Ok(t)
}

fn check_border_prefix(w: &Word, ctx: &Ctx) -> CheckResult {
    let f = (ctx.icfl)(w).map_err(err_str)?;
    if let Some(v) = check_border_not_prefix(&f).map_err(err_str)?.witness() {
        return fail(format!(
            "in {}, border {} of m_{} is a prefix of m_{}",
            strs(&f),
            v.border,
            v.factor_index,
            v.factor_index + 1
        ));
    }
    Ok(Tally {
        checks: 1,
        ..Tally::default()
    })
}

fn check_chain_borders(w: &Word, _: &Ctx) -> CheckResult {
    let f = cfl(w, Order::Inverse).map_err(err_str)?;
    let mut t = Tally::default();
    for span in pmci_chains(&f).map_err(err_str)? {
        for r in span.start_index..=span.end_index {
            for s in r..=span.end_index {
                let sub = crate::icfl::ChainSpan {
                    start_index: r,
                    end_index: s,
                };
                if let Some(v) = check_chain_border_suffix(&f, sub).map_err(err_str)?.witness() {
                    return fail(format!("border {} of chain {sub} is misaligned", v.border));
                }
                t.checks += 1;
            }
        }
    }
    Ok(t)
}

fn check_bre_borders(w: &Word, _: &Ctx) -> CheckResult {
    let Some(d) = bre(w).map_err(err_str)? else {
        return Ok(Tally::default());
    };
    if let Some(z) = check_bre_border_incomparable(&d).witness() {
        return fail(format!("border {z} of p = {} is comparable with p̄ = {}", d.p, d.p_bar));
    }
    bre_alignment(w).map_err(err_str)?;
    Ok(Tally {
        checks: 2,
        ..Tally::default()
    })
}

fn check_compat_cfl(w: &Word, _: &Ctx) -> CheckResult {
    let f = cfl(w, Order::Normal).map_err(err_str)?;
    let mut t = Tally::default();
    for range in FactorRange::all(&f) {
        if let Some(v) = check_cfl_compatibility(&range).map_err(err_str)?.witness() {
            return fail(format!("range [{}, {}] positions {} and {}", v.first_factor, v.last_factor, v.i, v.j));
        }
        t.checks += 1;
    }
    Ok(t)
}

fn check_compat_icfl(w: &Word, ctx: &Ctx) -> CheckResult {
    let f = (ctx.icfl)(w).map_err(err_str)?;
    let mut t = Tally::default();
    for range in FactorRange::all(&f) {
        if let Some(v) = check_icfl_inverse_compatibility(&range).map_err(err_str)?.witness() {
            return fail(format!(
                "{}: range [{}, {}] positions {} and {}",
                strs(&f),
                v.first_factor,
                v.last_factor,
                v.i,
                v.j
            ));
        }
        t.checks += 1;
    }
    Ok(t)
}

fn check_predict(w: &Word, ctx: &Ctx) -> CheckResult {
    let f = (ctx.icfl)(w).map_err(err_str)?;
    let s = w.ranks();
    let mut t = Tally::default();
    for range in FactorRange::all(&f) {
        let (first, last) = (range.first_position(), range.last_position());
        for a in first..=last {
            for b in first..=last {
                if a == b || compare_ranks(&s[a - 1..last], &s[b - 1..last], Order::Normal) != Ordering::Less {
                    continue;
                }
                let (j1, j2) = (range.suffix(a).unwrap(), range.suffix(b).unwrap());
                let predicted = predict_global_order(&j1, &j2).map_err(err_str)?;
                let actual = actual_global_order(&j1, &j2);
                ensure(predicted == actual, || {
                    format!(
                        "{}: range [{}, {}], j1={a}, j2={b}: predicted {predicted:?}, actual {actual:?}",
                        strs(&f),
                        range.first_factor(),
                        range.last_factor()
                    )
                })?;
                t.checks += 1;
                if range.first_factor() == range.last_factor() {
                    t.counters[0] += 1;
                }
            }
        }
    }
    Ok(t)
}

fn check_lcp_bound(w: &Word, ctx: &Ctx) -> CheckResult {
    let f = (ctx.icfl)(w).map_err(err_str)?;
    if f.len() < 2 {
        return Ok(Tally::default());
    }
    let report = lcp_bound_report(&f, &LcpBoundOptions::default()).map_err(err_str)?;
    if !report.holds() {
        let pair = report.witness.expect("a violation has a witness");
        return fail(format!(
            "{}: LCP {} > M = {} for w[{}, {}] and w[{}, {}]",
            strs(&f),
            report.max_observed_lcp,
            report.m,
            pair.first.0,
            pair.first.1,
            pair.second.0,
            pair.second.1
        ));
    }
    Ok(Tally {
        checks: report.pairs,
        counters: [1, 0, 0, 0],
    })
}

fn check_lcp_suffix(w: &Word, ctx: &Ctx) -> CheckResult {
    let f = (ctx.icfl)(w).map_err(err_str)?;
    let k = f.len();
    if k < 2 {
        return Ok(Tally::default());
    }
    let m = max_adjacent_length(&f).map_err(err_str)?;
    let s = w.ranks();
    let spans: Vec<(usize, usize)> = f.spans().collect();
    let mut t = Tally::default();

    for i in 2..=k {
        let len = spans[i - 2].1 + 1 - spans[i - 2].0;
        for x in 1..=len {
            for y in 1..=len {
                if x != y {
                    lcp_adjacent_suffix_reduction(&f, i, x, y).map_err(err_str)?;
                    t.checks += 1;
                    t.counters[0] += 1;
                }
            }
        }
    }

    // x a suffix of m_{i-1}, y a suffix of m_{j-1}, 1 < i < j ≤ k
    for i in 2..=k {
        for j in i + 1..=k {
            let (xi_start, xi_end) = spans[i - 2];
            let (yj_start, yj_end) = spans[j - 2];
            let mj_end = spans[j - 1].1;
            for xs in xi_start..=xi_end {
                for ys in yj_start..=yj_end {
                    let lcp = lcp_len_slices(&s[xs - 1..], &s[ys - 1..]);
                    // y m_j = w[ys, last(m_j)]
                    ensure(lcp <= mj_end + 1 - ys, || {
                        format!("{}: lcp(x_w, y_w) at {xs}, {ys} is not a prefix of y m_{j}", strs(&f))
                    })?;
                    ensure(lcp <= m, || format!("{}: lcp at {xs}, {ys} exceeds M = {m}", strs(&f)))?;
                    t.checks += 1;
                    t.counters[1] += 1;
                }
            }
        }
    }

    // wider: suffixes of any two factors m_a, m_b with a ≤ b, the last included
    for a in 1..=k {
        for b in a..=k {
            for xs in spans[a - 1].0..=spans[a - 1].1 {
                for ys in spans[b - 1].0..=spans[b - 1].1 {
                    if xs >= ys {
                        continue;
                    }
                    t.counters[2] += 1;
                    if lcp_len_slices(&s[xs - 1..], &s[ys - 1..]) > m {
                        t.counters[3] += 1;
                    }
                }
            }
        }
    }
    Ok(t)
}

fn check_overlap_assembly(w: &Word, _: &Ctx) -> CheckResult {
    let mut t = Tally::default();
    let n = w.len();
    for start in 1..=n {
        for end in start..=n {
            if start == 1 && end == n {
                continue;
            }
            let occ = classify_factor(w, start, end).map_err(err_str)?;
            if occ.class == FactorClass::Simple {
                continue;
            }
            cfl_of_factor(&occ).map_err(|e| format!("w[{start}, {end}]: {e}"))?;
            t.checks += 1;
            t.counters[0] += 1;
        }
    }
    Ok(t)
}

fn check_overlap_cases(w: &Word, ctx: &Ctx) -> CheckResult {
    let mut t = Tally::default();
    let mut first_uncovered: Option<String> = None;
    for w2 in all_words(ctx.k, ctx.max_len) {
        for len in overlap_lengths(w, &w2).map_err(err_str)? {
            let report = analyze_overlap(w, &w2, len).map_err(err_str)?;
            if report.degenerate.is_some() {
                continue;
            }
            t.checks += 1;
            t.counters[0] += 1;
            if report.ambiguous {
                t.counters[1] += 1;
            }
            if report.uncovered() {
                t.counters[2] += 1;
                if report.boundary_covered {
                    t.counters[3] += 1;
                }
                first_uncovered.get_or_insert_with(|| {
                    format!(
                        "w' = {w2}, y = {} with CFL(y) = ({}) matches none of the cases",
                        report.overlap,
                        report.overlap_cfl.factors().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                    )
                });
            }
        }
    }
    match first_uncovered {
        Some(message) => Err(Failure { tally: t, message }),
        None => Ok(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration() {
        assert_eq!(word_at(2, 3, 0), Word::from_bytes("aaa"));
        assert_eq!(word_at(2, 3, 6), Word::from_bytes("bba"));
        assert_eq!(word_at(3, 2, 5), Word::from_bytes("bc"));
        assert_eq!(all_words(2, 3).count(), 14);
    }

    #[test]
    fn small_sweeps_pass() {
        let sweep = Sweep::new(SweepConfig {
            alphabet_size: 2,
            max_len: Some(7),
        });
        for name in suite_names() {
            if name == "overlap-cases" {
                continue;
            }
            let outcome = sweep.run(name).unwrap();
            assert!(outcome.passed(), "{outcome}");
            assert!(outcome.words > 0);
        }
        assert!(sweep.run("nope").is_none());
    }

    #[test]
    fn corrupted_provider_is_caught() {
        let sweep = Sweep::new(SweepConfig {
            alphabet_size: 2,
            max_len: Some(8),
        })
        .with_icfl(corrupted_icfl);
        let outcome = sweep.run("icfl").unwrap();
        assert!(!outcome.passed());
        assert!(outcome.counterexample.is_some());
    }
}

//! Lyndon factorizations of factors of a word, and of the overlap of two
//! words.
//!
//! With `CFL(w) = (ℓ_1, …, ℓ_k)`, a proper factor `x` of `w` is simple when
//! every occurrence of `x` lies inside a single `ℓ_j`. An occurrence that is
//! not inside a single factor either covers whole factors `ℓ_i ⋯ ℓ_j`, or
//! straddles as `ℓ''_i ℓ_{i+1} ⋯ ℓ_{j-1} ℓ'_j` with `ℓ''_i` a suffix of
//! `ℓ_i` and `ℓ'_j` a prefix of `ℓ_j`. In the straddling case `CFL(x)` is
//! assembled from `CFL(ℓ''_i)`, the interior factors and `CFL(ℓ'_j)`.

use std::collections::BTreeMap;

use crate::alphabet::{Order, Word};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};
use crate::lyndon::cfl;

/// How an occurrence `w[start, end]` sits on `CFL(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorClass {
    /// Every occurrence of the factor lies inside one Lyndon factor.
    Simple,
    /// The occurrence is exactly `ℓ_first ⋯ ℓ_last`.
    NonSimpleAligned { first: usize, last: usize },
    /// The occurrence is `ℓ''_i ℓ_{i+1} ⋯ ℓ_{j-1} ℓ'_j`.
    NonSimpleStraddling(AssociatedSequence),
}

/// The sequence `ℓ''_i, ℓ_{i+1}, …, ℓ_{j-1}, ℓ'_j` of a straddling
/// occurrence. `head` is a nonempty suffix of `ℓ_i` and `tail` a nonempty
/// prefix of `ℓ_j`; they are not both whole factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedSequence {
    pub i: usize,
    pub j: usize,
    pub head: Word,
    pub tail: Word,
    /// The straddling occurrence, 1-indexed and inclusive. It differs from
    /// the queried one when that lies inside a single factor.
    pub start: usize,
    pub end: usize,
}

/// A factor occurrence of `w` together with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorOccurrence {
    pub word: Word,
    pub start: usize,
    pub end: usize,
    pub cfl: Factorization,
    pub class: FactorClass,
}

impl FactorOccurrence {
    /// The factor `w[start, end]`.
    pub fn factor(&self) -> Word {
        self.word.slice(self.start - 1, self.end)
    }
}

fn straddles(f: &Factorization, start: usize, end: usize) -> bool {
    f.factor_at(start).ok() != f.factor_at(end).ok()
}

fn occurrences<'a>(text: &'a [u8], pattern: &'a [u8]) -> impl Iterator<Item = usize> + 'a {
    (0..=text.len() - pattern.len())
        .filter(move |&i| text[i..i + pattern.len()] == pattern[..])
        .map(|i| i + 1)
}

/// Classifies the occurrence `w[start, end]` of a proper factor of `w`.
pub fn classify_factor(w: &Word, start: usize, end: usize) -> Result<FactorOccurrence> {
    w.require_nonempty()?;
    if start == 0 || start > end || end > w.len() {
        return Err(Error::OutOfRange(format!("factor [{start}, {end}] of a word of length {}", w.len())));
    }
    if start == 1 && end == w.len() {
        return Err(Error::InvalidArgument("the whole word is not a proper factor".into()));
    }
    let f = cfl(w, Order::Normal)?;
    let s = w.ranks();
    let len = end + 1 - start;

    let class = if straddles(&f, start, end) {
        straddling_class(&f, start, end)
    } else {
        match occurrences(s, &s[start - 1..end]).find(|&p| straddles(&f, p, p + len - 1)) {
            None => FactorClass::Simple,
            Some(p) => straddling_class(&f, p, p + len - 1),
        }
    };
    Ok(FactorOccurrence {
        word: w.clone(),
        start,
        end,
        cfl: f,
        class,
    })
}

fn straddling_class(f: &Factorization, start: usize, end: usize) -> FactorClass {
    let i = f.factor_at(start).expect("position in range");
    let j = f.factor_at(end).expect("position in range");
    let (first_i, _) = f.span(i).expect("index in range");
    let (_, last_i) = f.span(i).expect("index in range");
    let (first_j, last_j) = f.span(j).expect("index in range");
    if start == first_i && end == last_j {
        return FactorClass::NonSimpleAligned { first: i, last: j };
    }
    let w = f.word();
    FactorClass::NonSimpleStraddling(AssociatedSequence {
        i,
        j,
        head: w.slice(start - 1, last_i),
        tail: w.slice(first_j - 1, end),
        start,
        end,
    })
}

/// `CFL(x)` for a non-simple occurrence, assembled from the factorization
/// of `w`: `(ℓ_i, …, ℓ_j)` for an aligned occurrence and
/// `(CFL(ℓ''_i), ℓ_{i+1}, …, ℓ_{j-1}, CFL(ℓ'_j))` for a straddling one.
/// Fails with [`Error::Invariant`] if the result differs from computing
/// `CFL(x)` directly.
pub fn cfl_of_factor(occ: &FactorOccurrence) -> Result<Factorization> {
    let f = &occ.cfl;
    let factors: Vec<Word> = match &occ.class {
        FactorClass::Simple => {
            return Err(Error::InvalidArgument("a simple factor has no associated sequence".into()))
        }
        FactorClass::NonSimpleAligned { first, last } => (*first..=*last).map(|t| f.factor0(t - 1)).collect(),
        FactorClass::NonSimpleStraddling(seq) => {
            let mut out: Vec<Word> = cfl(&seq.head, Order::Normal)?.factors().collect();
            out.extend((seq.i + 1..seq.j).map(|t| f.factor0(t - 1)));
            out.extend(cfl(&seq.tail, Order::Normal)?.factors());
            out
        }
    };
    let assembled = Factorization::from_factors(&factors, FactorizationKind::Cfl)?;
    let direct = cfl(assembled.word(), Order::Normal)?;
    if assembled.cuts() != direct.cuts() {
        return Err(Error::Invariant(format!(
            "assembled factorization {assembled} differs from {direct}"
        )));
    }
    Ok(assembled)
}

/// The multiset of Lyndon factors of `w`, sorted by factor.
pub fn shared_factor_signature(w: &Word) -> Result<Vec<(Word, usize)>> {
    let f = cfl(w, Order::Normal)?;
    let mut counts: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for (s, e) in f.spans() {
        *counts.entry(w.ranks()[s - 1..e].to_vec()).or_default() += 1;
    }
    // rank vectors sort like the words themselves
    Ok(counts
        .into_iter()
        .map(|(ranks, n)| (Word::from_ranks(w.alphabet().clone(), ranks), n))
        .collect())
}

/// The three shapes `CFL(y)` of an overlap can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OverlapCase {
    /// `CFL(y) = (f_1, …, f_{j-1}, ℓ_{i+1}, …, ℓ_k)`.
    AlignedBoth,
    /// `CFL(y) = (f_1, …, f_{j'-1}, ℓ_{i+1}, …, ℓ_k)` with
    /// `f_{j'+r} = ℓ_{i+1+r}`.
    SharedRightRun,
    /// `CFL(y) = (f_1, …, f_{j-1}, ℓ_{i'+1}, …, ℓ_k)` with
    /// `ℓ_{i'-r} = f_{j-r-1}`.
    SharedLeftRun,
}

impl OverlapCase {
    pub fn number(self) -> usize {
        match self {
            OverlapCase::AlignedBoth => 1,
            OverlapCase::SharedRightRun => 2,
            OverlapCase::SharedLeftRun => 3,
        }
    }
}

/// Why an overlap falls outside the lemma's hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degenerate {
    /// `y` is a proper suffix of `ℓ_k`.
    SimpleSuffix,
    /// `y` is a proper prefix of `f_1`.
    SimplePrefix,
    Both,
    /// `y` is all of `w` or all of `w'`, hence not a proper suffix or prefix.
    WholeWord,
}

/// One way `CFL(y)` matches a case, with the indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseMatch {
    pub case: OverlapCase,
    pub i: usize,
    pub j: usize,
    /// `j'` for case 2, `i'` for case 3.
    pub pivot: Option<usize>,
    /// Pairs `(index into CFL(w'), index into CFL(w))` of factors asserted
    /// equal by the case.
    pub shared: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapReport {
    pub overlap: Word,
    pub overlap_cfl: Factorization,
    pub degenerate: Option<Degenerate>,
    /// Preferred case among those that hold: (1) over (2) over (3).
    pub chosen: Option<CaseMatch>,
    /// Every case that holds for some admissible `i`, `j`.
    pub matching: Vec<OverlapCase>,
    pub ambiguous: bool,
    /// Whether some case holds when `i` and `j` range freely over
    /// `1 ≤ i < k`, `1 < j ≤ h`, not only over the decompositions of `y`.
    pub loosely_covered: bool,
    /// Whether case (2) with `j' = 1` or case (3) with `i' = k` holds, i.e.
    /// the shared run reaches the end of `CFL(y)` on one side.
    pub boundary_covered: bool,
}

impl OverlapReport {
    pub fn case(&self) -> Option<OverlapCase> {
        self.chosen.as_ref().map(|c| c.case)
    }

    /// Non-degenerate and yet no case holds.
    pub fn uncovered(&self) -> bool {
        self.degenerate.is_none() && self.chosen.is_none()
    }
}

/// Every length `L` for which the last `L` symbols of `w` equal the first
/// `L` symbols of `w2`, increasing.
pub fn overlap_lengths(w: &Word, w2: &Word) -> Result<Vec<usize>> {
    w.check_alphabet(w2)?;
    let (a, b) = (w.ranks(), w2.ranks());
    Ok((1..=a.len().min(b.len())).filter(|&l| a[a.len() - l..] == b[..l]).collect())
}

fn case_matches(c: &[&[u8]], ell: &[&[u8]], f: &[&[u8]], i: usize, j: usize, out: &mut Vec<CaseMatch>) {
    let k = ell.len();
    let h = f.len();
    // ℓ_{t} is ell[t - 1], f_{t} is f[t - 1]
    let fits = |front: usize, back_from: usize| {
        // c == f_1..f_front ++ ℓ_{back_from}..ℓ_k
        let back = k + 1 - back_from;
        c.len() == front + back
            && (0..front).all(|t| c[t] == f[t])
            && (0..back).all(|t| c[front + t] == ell[back_from - 1 + t])
    };
    if fits(j - 1, i + 1) {
        out.push(CaseMatch {
            case: OverlapCase::AlignedBoth,
            i,
            j,
            pivot: None,
            shared: Vec::new(),
        });
    }
    for jp in 2..j {
        let runs_equal = (0..j - jp).all(|r| jp + r <= h && i + 1 + r <= k && f[jp + r - 1] == ell[i + r]);
        if runs_equal && fits(jp - 1, i + 1) {
            out.push(CaseMatch {
                case: OverlapCase::SharedRightRun,
                i,
                j,
                pivot: Some(jp),
                shared: (0..j - jp).map(|r| (jp + r, i + 1 + r)).collect(),
            });
        }
    }
    for ip in i + 1..k {
        let runs_equal = (0..ip - i).all(|r| j >= r + 2 && ell[ip - r - 1] == f[j - r - 2]);
        if runs_equal && fits(j - 1, ip + 1) {
            out.push(CaseMatch {
                case: OverlapCase::SharedLeftRun,
                i,
                j,
                pivot: Some(ip),
                shared: (0..ip - i).map(|r| (j - r - 1, ip - r)).collect(),
            });
        }
    }
}

fn boundary_case(c: &[&[u8]], ell: &[&[u8]], f: &[&[u8]], i: usize, j: usize) -> bool {
    let (k, h) = (ell.len(), f.len());
    // CFL(y) = (ℓ_{i+1}, …, ℓ_k) with f_{1+r} = ℓ_{i+1+r}
    let right = c.len() == k - i
        && (0..k - i).all(|t| c[t] == ell[i + t])
        && (0..j - 1).all(|r| r < h && i + r < k && f[r] == ell[i + r]);
    // CFL(y) = (f_1, …, f_{j-1}) with ℓ_{k-r} = f_{j-r-1}
    let left = c.len() == j - 1
        && (0..j - 1).all(|t| c[t] == f[t])
        && (0..k - i).all(|r| j >= r + 2 && ell[k - r - 1] == f[j - r - 2]);
    right || left
}

/// Analyzes the overlap `y` of length `overlap_len` between a suffix of `w`
/// and a prefix of `w2`, matching `CFL(y)` against the three cases.
///
/// The indices `i` and `j` range over the decompositions
/// `y = ℓ''_i ℓ_{i+1} ⋯ ℓ_k = f_1 ⋯ f_{j-1} f'_j` with `1 ≤ i < k`,
/// `1 < j ≤ h`, where `ℓ''_i` and `f'_j` may be empty or whole factors.
/// Fails with [`Error::Invariant`] if the two assembled forms of `CFL(y)`
/// disagree with the direct factorization.
pub fn analyze_overlap(w: &Word, w2: &Word, overlap_len: usize) -> Result<OverlapReport> {
    w.require_nonempty()?;
    w2.require_nonempty()?;
    w.check_alphabet(w2)?;
    if overlap_len == 0 || overlap_len > w.len().min(w2.len()) {
        return Err(Error::InvalidArgument(format!(
            "overlap length {overlap_len} must lie in [1, {}]",
            w.len().min(w2.len())
        )));
    }
    let y = w.slice(w.len() - overlap_len, w.len());
    if y.ranks() != &w2.ranks()[..overlap_len] {
        return Err(Error::InvalidArgument(format!(
            "the last {overlap_len} symbols of the first word differ from the first {overlap_len} of the second"
        )));
    }
    let lw = cfl(w, Order::Normal)?;
    let lf = cfl(w2, Order::Normal)?;
    let cy = cfl(&y, Order::Normal)?;

    let ell: Vec<&[u8]> = (0..lw.len()).map(|t| lw.factor_ranks0(t)).collect();
    let f: Vec<&[u8]> = (0..lf.len()).map(|t| lf.factor_ranks0(t)).collect();
    let c: Vec<&[u8]> = (0..cy.len()).map(|t| cy.factor_ranks0(t)).collect();
    let (k, h) = (ell.len(), f.len());

    let simple_suffix = overlap_len < ell[k - 1].len();
    let simple_prefix = overlap_len < f[0].len();
    let whole = overlap_len == w.len() || overlap_len == w2.len();
    let degenerate = match (simple_suffix, simple_prefix) {
        _ if whole => Some(Degenerate::WholeWord),
        (false, false) => None,
        (true, false) => Some(Degenerate::SimpleSuffix),
        (false, true) => Some(Degenerate::SimplePrefix),
        (true, true) => Some(Degenerate::Both),
    };
    let mut report = OverlapReport {
        overlap: y.clone(),
        overlap_cfl: cy.clone(),
        degenerate,
        chosen: None,
        matching: Vec::new(),
        ambiguous: false,
        loosely_covered: false,
        boundary_covered: false,
    };
    if degenerate.is_some() {
        return Ok(report);
    }

    // decompositions on the w side: y starts at 0-based offset `ys` of w
    let ys = w.len() - overlap_len;
    let start_factor = lw.factor_at(ys + 1)?;
    let mut is: Vec<usize> = Vec::new();
    if start_factor < k {
        is.push(start_factor);
    }
    if lw.span(start_factor)?.0 == ys + 1 && start_factor > 1 {
        is.push(start_factor - 1);
    }
    // decompositions on the w' side: y ends at 1-indexed position overlap_len
    let end_factor = lf.factor_at(overlap_len)?;
    let mut js: Vec<usize> = Vec::new();
    if end_factor > 1 {
        js.push(end_factor);
    }
    if lf.span(end_factor)?.1 == overlap_len && end_factor < h {
        js.push(end_factor + 1);
    }

    for &i in &is {
        let head = &w.ranks()[ys..lw.cuts()[i - 1]];
        let mut from_w: Vec<Vec<u8>> = if head.is_empty() {
            Vec::new()
        } else {
            let hw = Word::from_ranks(w.alphabet().clone(), head.to_vec());
            cfl(&hw, Order::Normal)?.factors().map(|x| x.ranks().to_vec()).collect()
        };
        from_w.extend(ell[i..].iter().map(|x| x.to_vec()));
        check_assembly(&c, &from_w)?;
    }
    for &j in &js {
        let start_j = if j == 1 { 0 } else { lf.cuts()[j - 2] };
        let tail = &w2.ranks()[start_j..overlap_len];
        let mut from_w2: Vec<Vec<u8>> = f[..j - 1].iter().map(|x| x.to_vec()).collect();
        if !tail.is_empty() {
            let tw = Word::from_ranks(w.alphabet().clone(), tail.to_vec());
            from_w2.extend(cfl(&tw, Order::Normal)?.factors().map(|x| x.ranks().to_vec()));
        }
        check_assembly(&c, &from_w2)?;
    }

    let mut found = Vec::new();
    for &i in &is {
        for &j in &js {
            case_matches(&c, &ell, &f, i, j, &mut found);
        }
    }
    let mut loose = Vec::new();
    for i in 1..k {
        for j in 2..=h {
            case_matches(&c, &ell, &f, i, j, &mut loose);
        }
    }
    report.loosely_covered = !loose.is_empty();
    report.boundary_covered = is
        .iter()
        .any(|&i| js.iter().any(|&j| boundary_case(&c, &ell, &f, i, j)));
    let mut matching: Vec<OverlapCase> = found.iter().map(|m| m.case).collect();
    matching.sort();
    matching.dedup();
    report.ambiguous = matching.len() > 1;
    report.matching = matching;
    report.chosen = found.into_iter().min_by_key(|m| m.case);
    Ok(report)
}

fn check_assembly(direct: &[&[u8]], assembled: &[Vec<u8>]) -> Result<()> {
    let same = direct.len() == assembled.len() && direct.iter().zip(assembled).all(|(a, b)| *a == &b[..]);
    if same {
        Ok(())
    } else {
        Err(Error::Invariant("assembled CFL of the overlap differs from the direct one".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_bytes(s)
    }

    fn strs(f: &Factorization) -> Vec<String> {
        f.factors().map(|x| x.to_string()).collect()
    }

    #[test]
    fn classify_examples() {
        // CFL(banana) = (b, an, an, a)
        let word = w("banana");
        assert_eq!(classify_factor(&word, 2, 2).unwrap().class, FactorClass::Simple);
        assert_eq!(classify_factor(&word, 2, 3).unwrap().class, FactorClass::Simple);
        let occ = classify_factor(&word, 3, 4).unwrap();
        let FactorClass::NonSimpleStraddling(seq) = &occ.class else {
            panic!("expected straddling, got {:?}", occ.class)
        };
        assert_eq!((seq.i, seq.j, seq.head.clone(), seq.tail.clone()), (2, 3, w("n"), w("a")));
        assert_eq!(occ.factor(), w("na"));
        assert_eq!(
            classify_factor(&word, 1, 3).unwrap().class,
            FactorClass::NonSimpleAligned { first: 1, last: 2 }
        );
        assert!(classify_factor(&word, 1, 6).is_err());
        assert!(classify_factor(&word, 0, 2).is_err());
        assert!(classify_factor(&word, 4, 7).is_err());
    }

    #[test]
    fn witness_moves_to_a_straddling_occurrence() {
        // "aa" lies inside ℓ_1 at [1, 2] but straddles ℓ_2 ℓ_3 at [4, 5]
        let word = w("aabaa");
        assert_eq!(strs(&cfl(&word, Order::Normal).unwrap()), ["aab", "a", "a"]);
        let occ = classify_factor(&word, 1, 2).unwrap();
        assert_eq!(occ.class, FactorClass::NonSimpleAligned { first: 2, last: 3 });
        let occ = classify_factor(&word, 1, 1).unwrap();
        assert_eq!(occ.class, FactorClass::Simple);
    }

    #[test]
    fn cfl_of_factor_examples() {
        let word = w("banana");
        let occ = classify_factor(&word, 2, 6).unwrap();
        assert_eq!(occ.class, FactorClass::NonSimpleAligned { first: 2, last: 4 });
        assert_eq!(strs(&cfl_of_factor(&occ).unwrap()), ["an", "an", "a"]);
        let occ = classify_factor(&word, 3, 6).unwrap();
        assert_eq!(strs(&cfl_of_factor(&occ).unwrap()), ["n", "an", "a"]);
        assert!(cfl_of_factor(&classify_factor(&word, 2, 2).unwrap()).is_err());
    }

    #[test]
    fn signature_examples() {
        let sig = shared_factor_signature(&w("banana")).unwrap();
        let sig: Vec<(String, usize)> = sig.into_iter().map(|(x, n)| (x.to_string(), n)).collect();
        assert_eq!(sig, vec![("a".into(), 1), ("an".into(), 2), ("b".into(), 1)]);
        assert_eq!(shared_factor_signature(&w("aabab")).unwrap(), vec![(w("aabab"), 1)]);
        assert_eq!(shared_factor_signature(&w("aaaa")).unwrap(), vec![(w("a"), 4)]);
        assert!(shared_factor_signature(&w("")).is_err());
    }

    #[test]
    fn overlap_cases() {
        let r = analyze_overlap(&w("ba"), &w("ba"), 2).unwrap();
        assert_eq!(r.degenerate, Some(Degenerate::WholeWord));
        let r = analyze_overlap(&w("aba"), &w("bab"), 2).unwrap();
        assert_eq!(r.case(), Some(OverlapCase::AlignedBoth));
        assert!(!r.ambiguous);
        let r = analyze_overlap(&w("aba"), &w("baa"), 2).unwrap();
        assert_eq!(r.matching, [OverlapCase::AlignedBoth, OverlapCase::SharedRightRun]);
        assert!(r.ambiguous);
        let r = analyze_overlap(&w("aaaa"), &w("aaaa"), 3).unwrap();
        assert_eq!(r.case(), Some(OverlapCase::SharedRightRun));
        let r = analyze_overlap(&w("aa"), &w("aa"), 1).unwrap();
        assert!(r.uncovered());
        assert!(r.boundary_covered);

        let r = analyze_overlap(&w("aababa"), &w("bababb"), 4).unwrap();
        assert_eq!(strs(&r.overlap_cfl), ["b", "ab", "a"]);
        assert!(r.uncovered());
        assert!(!r.loosely_covered);
        assert!(!r.boundary_covered);

        let r = analyze_overlap(&w("ab"), &w("bb"), 1).unwrap();
        assert_eq!(r.degenerate, Some(Degenerate::SimpleSuffix));
        let r = analyze_overlap(&w("ba"), &w("ab"), 1).unwrap();
        assert_eq!(r.degenerate, Some(Degenerate::SimplePrefix));
        assert_eq!(r.case(), None);
        assert!(analyze_overlap(&w("ab"), &w("ab"), 1).is_err());
        assert!(analyze_overlap(&w("ab"), &w("ab"), 3).is_err());
        assert_eq!(overlap_lengths(&w("abab"), &w("abba")).unwrap(), vec![2]);
    }
}

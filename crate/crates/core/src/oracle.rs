//! Brute-force reference implementations.
//!
//! Nothing in this module calls the fast paths it is meant to check: words
//! are compared through `Ord` on owned key vectors, predicates are evaluated
//! by quantifying directly over suffixes, prefixes and splits, and the
//! inverse Lyndon factorization follows its recursive definition literally.

use crate::alphabet::{Order, Word};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, FactorizationKind};

/// Sort keys for `w` under `order`, compared with the standard `Ord` on
/// vectors (which is lexicographic with proper prefixes first).
fn keys(w: &[u8], order: Order) -> Vec<u8> {
    match order {
        Order::Normal => w.to_vec(),
        Order::Inverse => w.iter().map(|&r| 255 - r).collect(),
    }
}

fn less(x: &[u8], y: &[u8], order: Order) -> bool {
    keys(x, order) < keys(y, order)
}

fn naive_lyndon_slice(s: &[u8], order: Order) -> bool {
    !s.is_empty() && (1..s.len()).all(|i| less(s, &s[i..], order))
}

fn naive_inverse_lyndon_slice(s: &[u8]) -> bool {
    !s.is_empty() && (1..s.len()).all(|i| less(&s[i..], s, Order::Normal))
}

/// Lyndon test by comparing against every proper suffix.
pub fn naive_is_lyndon(w: &Word, order: Order) -> Result<bool> {
    w.require_nonempty()?;
    Ok(naive_lyndon_slice(w.ranks(), order))
}

/// Inverse Lyndon test by comparing every proper suffix against `w`.
pub fn naive_is_inverse_lyndon(w: &Word) -> Result<bool> {
    w.require_nonempty()?;
    Ok(naive_inverse_lyndon_slice(w.ranks()))
}

/// Primitivity by trying every proper divisor of `|w|` as a period.
pub fn naive_is_primitive(w: &Word) -> Result<bool> {
    w.require_nonempty()?;
    let s = w.ranks();
    let n = s.len();
    Ok(!(1..n).any(|d| n.is_multiple_of(d) && s.chunks(d).all(|c| c == &s[..d])))
}

/// All borders of `w` (lengths, decreasing), by testing every split.
pub fn naive_borders(w: &Word) -> Vec<usize> {
    let s = w.ranks();
    (1..s.len()).rev().filter(|&l| s[..l] == s[s.len() - l..]).collect()
}

/// Prenecklace test by searching every Lyndon prefix as a candidate base.
pub fn naive_is_prenecklace(w: &Word, order: Order) -> bool {
    let s = w.ranks();
    if s.is_empty() {
        return true;
    }
    (1..=s.len()).any(|p| naive_lyndon_slice(&s[..p], order) && (p..s.len()).all(|i| s[i] == s[i - p]))
}

/// Sesquipower decomposition by enumerating every `(base, exponent)` split.
pub fn naive_sesquipower(w: &Word, order: Order) -> Result<(Word, usize, Word)> {
    w.require_nonempty()?;
    let s = w.ranks();
    let mut best: Option<(usize, usize)> = None;
    for p in 1..=s.len() {
        if !naive_lyndon_slice(&s[..p], order) {
            continue;
        }
        for k in 1..=s.len() / p {
            let rest = s.len() - k * p;
            let fits = (0..k).all(|c| s[c * p..(c + 1) * p] == s[..p]) && rest < p && s[k * p..] == s[..rest];
            if fits && best.is_none_or(|(_, bk)| k > bk) {
                best = Some((p, k));
            }
        }
    }
    let (p, k) = best.ok_or(Error::NotPrenecklace)?;
    Ok((w.factor(1, p)?, k, w.factor(k * p + 1, s.len())?))
}

/// Lyndon factorization as the greedy sequence of longest Lyndon prefixes.
pub fn naive_cfl(w: &Word, order: Order) -> Result<Factorization> {
    w.require_nonempty()?;
    let s = w.ranks();
    let mut lengths = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let len = (1..=s.len() - i)
            .rev()
            .find(|&l| naive_lyndon_slice(&s[i..i + l], order))
            .expect("a single symbol is Lyndon");
        lengths.push(len);
        i += len;
    }
    let kind = match order {
        Order::Normal => FactorizationKind::Cfl,
        Order::Inverse => FactorizationKind::CflIn,
    };
    Factorization::from_lengths(w.clone(), &lengths, kind)
}

/// Bounded right extension found by brute force: `(|p|, |r|)`.
///
/// Scans prefixes for the shortest one that is not inverse Lyndon, then
/// tries every split `z = r a s r b` with `a < b`, shortest `r` first.
pub fn naive_bre_lengths(s: &[u8]) -> Option<(usize, usize)> {
    let z_len = (1..=s.len()).find(|&l| !naive_inverse_lyndon_slice(&s[..l]))?;
    let z = &s[..z_len];
    let b = z[z_len - 1];
    for r_len in 0..z_len {
        if 2 * r_len + 2 > z_len {
            break;
        }
        let p_len = z_len - r_len - 1;
        if z[..r_len] == z[p_len..p_len + r_len] && z[r_len] < b {
            return Some((p_len, r_len));
        }
    }
    panic!("a shortest non-inverse-Lyndon prefix always splits as r a s r b");
}

/// `(p, p̄, r)` of the bounded right extension of `w`, or `None` when `w`
/// is an inverse Lyndon word.
pub fn naive_bre(w: &Word) -> Result<Option<(Word, Word, Word)>> {
    w.require_nonempty()?;
    Ok(naive_bre_lengths(w.ranks()).map(|(p, r)| {
        (
            w.factor(1, p).unwrap(),
            w.factor(p + 1, p + r + 1).unwrap(),
            w.factor(1, r).unwrap(),
        )
    }))
}

fn naive_icfl_lengths(s: &[u8]) -> Vec<usize> {
    let Some((p_len, r_len)) = naive_bre_lengths(s) else {
        return vec![s.len()];
    };
    let v = &s[p_len..];
    let mut rest = naive_icfl_lengths(v);
    let first = &v[..rest[0]];
    let p_bar = &v[..r_len + 1];
    let r = &s[..r_len];
    if first.starts_with(p_bar) {
        rest.insert(0, p_len);
    } else if r.starts_with(first) {
        rest[0] += p_len;
    } else {
        panic!("neither recursive case of the inverse Lyndon factorization applies");
    }
    rest
}

/// The canonical inverse Lyndon factorization by literal recursion.
pub fn naive_icfl(w: &Word) -> Result<Factorization> {
    w.require_nonempty()?;
    Factorization::from_lengths(w.clone(), &naive_icfl_lengths(w.ranks()), FactorizationKind::Icfl)
}

/// 1-indexed starting positions of the suffixes of `w` in increasing order.
pub fn naive_suffix_sort(w: &Word, order: Order) -> Result<Vec<usize>> {
    w.require_nonempty()?;
    let s = w.ranks();
    let mut positions: Vec<usize> = (0..s.len()).collect();
    positions.sort_by(|&i, &j| keys(&s[i..], order).cmp(&keys(&s[j..], order)));
    Ok(positions.into_iter().map(|p| p + 1).collect())
}

/// Every 1-indexed start at which `pattern` occurs in `text`.
pub fn naive_occurrences(text: &Word, pattern: &Word) -> Vec<usize> {
    let (t, p) = (text.ranks(), pattern.ranks());
    if p.is_empty() || p.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - p.len()).filter(|&i| &t[i..i + p.len()] == p).map(|i| i + 1).collect()
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
    fn naive_predicates() {
        assert_eq!(naive_is_lyndon(&w("aabab"), Order::Normal), Ok(true));
        assert_eq!(naive_is_lyndon(&w("a"), Order::Inverse), Ok(true));
        assert_eq!(naive_is_primitive(&w("abab")), Ok(false));
        assert_eq!(naive_is_primitive(&w("a")), Ok(true));
        assert_eq!(naive_is_primitive(&w("aab")), Ok(true));
        assert_eq!(naive_is_primitive(&w("aaa")), Ok(false));
        assert!(naive_is_prenecklace(&w("aabaa"), Order::Normal));
        assert!(!naive_is_prenecklace(&w("ba"), Order::Normal));
        assert!(naive_is_prenecklace(&w("bbaba"), Order::Inverse));
        assert_eq!(naive_borders(&w("abaab")), vec![2]);
        assert_eq!(naive_borders(&w("aaa")), vec![2, 1]);
    }

    #[test]
    fn naive_cfl_examples() {
        assert_eq!(strs(&naive_cfl(&w("banana"), Order::Normal).unwrap()), ["b", "an", "an", "a"]);
        assert_eq!(strs(&naive_cfl(&w("aabab"), Order::Normal).unwrap()), ["aabab"]);
        assert_eq!(
            strs(&naive_cfl(&w("dabadabdabdadac"), Order::Inverse).unwrap()),
            ["daba", "dab", "dab", "dadac"]
        );
    }

    #[test]
    fn naive_icfl_examples() {
        assert_eq!(strs(&naive_icfl(&w("aaaaaaaaaaaabbab")).unwrap()), ["aaaaaaaaaaaa", "bbab"]);
        assert_eq!(strs(&naive_icfl(&w("dabadabdabdadac")).unwrap()), ["daba", "dabdab", "dadac"]);
        assert_eq!(strs(&naive_icfl(&w("bbababbaa")).unwrap()), ["bbababbaa"]);
    }

    #[test]
    fn naive_bre_examples() {
        let (p, p_bar, r) = naive_bre(&w("dabadabdabdadac")).unwrap().unwrap();
        assert_eq!((p.to_string(), p_bar.to_string(), r.to_string()), ("daba".into(), "dabd".into(), "dab".into()));
        let (p, p_bar, r) = naive_bre(&w("aaaaaaaaaaaabbab")).unwrap().unwrap();
        assert_eq!((p.len(), p_bar.to_string(), r.len()), (12, "b".into(), 0));
        assert_eq!(naive_bre(&w("bbaba")).unwrap(), None);
    }

    #[test]
    fn suffix_sort_examples() {
        assert_eq!(naive_suffix_sort(&w("banana"), Order::Normal).unwrap(), vec![6, 4, 2, 1, 5, 3]);
        assert_eq!(naive_suffix_sort(&w("x"), Order::Normal).unwrap(), vec![1]);
        // incomparable suffixes swap; prefix-related ones keep the shorter first
        let inv = naive_suffix_sort(&w("banana"), Order::Inverse).unwrap();
        assert_eq!(inv, vec![5, 3, 1, 6, 4, 2]);
    }
}

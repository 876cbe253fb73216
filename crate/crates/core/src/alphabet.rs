//! Ordered alphabets, words, and the comparison relations built on them.
//!
//! Symbols are byte codes. An [`OrderedAlphabet`] fixes a total order `<` on
//! its symbols; the inverse order `<_in` simply reverses it. Every [`Word`]
//! stores the *ranks* of its symbols, so comparing two words under either
//! order is a comparison of rank keys.
//!
//! Positions in the public API are 1-indexed and factor bounds are
//! inclusive, so `w.factor(i, j)` is the word `w[i, j]`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Which of the two lexicographic orders a comparison uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// The lexicographic order `≺` induced by the alphabet order.
    Normal,
    /// The inverse lexicographic order `≺_in`.
    Inverse,
}

impl Order {
    pub fn inverse(self) -> Order {
        match self {
            Order::Normal => Order::Inverse,
            Order::Inverse => Order::Normal,
        }
    }
}

/// Maps a symbol rank to a sort key. The two implementations are the only
/// place where the normal and inverse orders differ.
pub(crate) trait SymbolOrder {
    fn key(rank: u8) -> u8;
}

pub(crate) struct Ascending;
pub(crate) struct Descending;

impl SymbolOrder for Ascending {
    #[inline(always)]
    fn key(rank: u8) -> u8 {
        rank
    }
}

impl SymbolOrder for Descending {
    #[inline(always)]
    fn key(rank: u8) -> u8 {
        !rank
    }
}

/// Calls a function generic over [`SymbolOrder`] with the key type selected
/// by a runtime [`Order`].
macro_rules! dispatch_order {
    ($order:expr, $func:ident ( $($arg:expr),* $(,)? )) => {
        match $order {
            $crate::alphabet::Order::Normal => $func::<$crate::alphabet::Ascending>($($arg),*),
            $crate::alphabet::Order::Inverse => $func::<$crate::alphabet::Descending>($($arg),*),
        }
    };
}
pub(crate) use dispatch_order;

const ABSENT: u16 = u16::MAX;

/// A finite set of byte symbols with a total order on it.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedAlphabet {
    symbols: Vec<u8>,
    ranks: [u16; 256],
}

impl OrderedAlphabet {
    /// All 256 byte values in numeric order.
    pub fn bytes() -> Self {
        let symbols: Vec<u8> = (0..=255).collect();
        Self::from_symbols(&symbols).expect("byte alphabet is a permutation")
    }

    /// An alphabet containing exactly `symbols`, ordered from smallest to
    /// largest as listed.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut ranks = [ABSENT; 256];
        for (rank, &sym) in symbols.iter().enumerate() {
            if ranks[sym as usize] != ABSENT {
                return Err(Error::DuplicateSymbol(sym));
            }
            ranks[sym as usize] = rank as u16;
        }
        Ok(Self {
            symbols: symbols.to_vec(),
            ranks,
        })
    }

    /// The full byte alphabet where the `listed` symbols come first, in the
    /// given order, followed by every unlisted byte in numeric order.
    pub fn with_priority(listed: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        let mut symbols = Vec::with_capacity(256);
        for &sym in listed {
            if std::mem::replace(&mut seen[sym as usize], true) {
                return Err(Error::DuplicateSymbol(sym));
            }
            symbols.push(sym);
        }
        symbols.extend((0..=255u8).filter(|&b| !seen[b as usize]));
        Self::from_symbols(&symbols)
    }

    /// The process-wide shared byte alphabet used by [`Word::from_bytes`].
    pub fn shared_bytes() -> Arc<Self> {
        static BYTES: OnceLock<Arc<OrderedAlphabet>> = OnceLock::new();
        BYTES.get_or_init(|| Arc::new(OrderedAlphabet::bytes())).clone()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbols from smallest to largest.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.ranks[symbol as usize] != ABSENT
    }

    /// Position of `symbol` in the order `<`.
    pub fn rank(&self, symbol: u8) -> Option<usize> {
        match self.ranks[symbol as usize] {
            ABSENT => None,
            r => Some(r as usize),
        }
    }

    /// Position of `symbol` in the inverse order `<_in`.
    pub fn inverse_rank(&self, symbol: u8) -> Option<usize> {
        self.rank(symbol).map(|r| self.len() - 1 - r)
    }

    pub fn symbol(&self, rank: usize) -> Option<u8> {
        self.symbols.get(rank).copied()
    }

    /// Compares two symbols under `order`.
    pub fn compare_symbols(&self, a: u8, b: u8, order: Order) -> Result<Ordering> {
        let ra = self.rank(a).ok_or(Error::UnknownSymbol(a))?;
        let rb = self.rank(b).ok_or(Error::UnknownSymbol(b))?;
        Ok(match order {
            Order::Normal => ra.cmp(&rb),
            Order::Inverse => rb.cmp(&ra),
        })
    }
}

impl fmt::Debug for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: String = self
            .symbols
            .iter()
            .take(16)
            .flat_map(|b| std::ascii::escape_default(*b))
            .map(char::from)
            .collect();
        write!(f, "OrderedAlphabet({} symbols: {shown}", self.len())?;
        if self.len() > 16 {
            f.write_str("…")?;
        }
        f.write_str(")")
    }
}

/// An immutable sequence of symbols over an [`OrderedAlphabet`].
///
/// Cloning and slicing are cheap: factors share the underlying storage.
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<OrderedAlphabet>,
    ranks: Arc<[u8]>,
    start: usize,
    end: usize,
}

impl Word {
    /// Builds a word over `alphabet`; fails on symbols outside it.
    pub fn new(alphabet: &Arc<OrderedAlphabet>, symbols: &[u8]) -> Result<Self> {
        let ranks = symbols
            .iter()
            .map(|&s| alphabet.rank(s).map(|r| r as u8).ok_or(Error::UnknownSymbol(s)))
            .collect::<Result<Vec<u8>>>()?;
        Ok(Self::from_ranks(alphabet.clone(), ranks))
    }

    /// A word over the shared numeric byte alphabet.
    pub fn from_bytes(symbols: impl AsRef<[u8]>) -> Self {
        Self::new(&OrderedAlphabet::shared_bytes(), symbols.as_ref())
            .expect("every byte belongs to the byte alphabet")
    }

    pub fn empty(alphabet: &Arc<OrderedAlphabet>) -> Self {
        Self::from_ranks(alphabet.clone(), Vec::new())
    }

    pub(crate) fn from_ranks(alphabet: Arc<OrderedAlphabet>, ranks: Vec<u8>) -> Self {
        let end = ranks.len();
        Self {
            alphabet,
            ranks: ranks.into(),
            start: 0,
            end,
        }
    }

    pub fn alphabet(&self) -> &Arc<OrderedAlphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    /// Symbol ranks under the normal order.
    pub fn ranks(&self) -> &[u8] {
        &self.ranks[self.start..self.end]
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.ranks()
            .iter()
            .map(|&r| self.alphabet.symbols[r as usize])
            .collect()
    }

    /// The symbol at 1-indexed position `i`.
    pub fn symbol(&self, i: usize) -> Result<u8> {
        if i == 0 || i > self.len() {
            return Err(Error::OutOfRange(format!("position {i} in a word of length {}", self.len())));
        }
        Ok(self.alphabet.symbols[self.ranks()[i - 1] as usize])
    }

    /// The factor `w[i, j]`, 1-indexed and inclusive. `j = i - 1` yields the
    /// empty word.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || j > self.len() || i > j + 1 {
            return Err(Error::OutOfRange(format!(
                "factor [{i}, {j}] of a word of length {}",
                self.len()
            )));
        }
        Ok(self.slice(i - 1, j))
    }

    /// The prefix of length `len`.
    pub fn prefix(&self, len: usize) -> Result<Word> {
        self.factor(1, len)
    }

    /// The suffix `w[i, |w|]`.
    pub fn suffix(&self, i: usize) -> Result<Word> {
        self.factor(i, self.len())
    }

    /// Zero-based half-open slice; callers guarantee bounds.
    pub(crate) fn slice(&self, from: usize, to: usize) -> Word {
        debug_assert!(from <= to && to <= self.len());
        Word {
            alphabet: self.alphabet.clone(),
            ranks: self.ranks.clone(),
            start: self.start + from,
            end: self.start + to,
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.check_alphabet(other)?;
        let mut ranks = Vec::with_capacity(self.len() + other.len());
        ranks.extend_from_slice(self.ranks());
        ranks.extend_from_slice(other.ranks());
        Ok(Word::from_ranks(self.alphabet.clone(), ranks))
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || *self.alphabet == *other.alphabet
    }

    pub(crate) fn check_alphabet(&self, other: &Word) -> Result<()> {
        if self.same_alphabet(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(())
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.ranks().starts_with(self.ranks())
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.ranks().ends_with(self.ranks())
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.same_alphabet(other) && self.ranks() == other.ranks()
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ranks().hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bytes().escape_ascii())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// How two words relate under the prefix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrefixRelation {
    /// The left word is a proper prefix of the right one.
    ProperPrefixOfLeft,
    /// The right word is a proper prefix of the left one.
    ProperPrefixOfRight,
    Equal,
    /// Neither word is a prefix of the other.
    Incomparable,
}

#[inline]
pub(crate) fn lcp_len_slices(x: &[u8], y: &[u8]) -> usize {
    x.iter().zip(y).take_while(|(a, b)| a == b).count()
}

#[inline]
pub(crate) fn compare_slices<O: SymbolOrder>(x: &[u8], y: &[u8]) -> Ordering {
    let l = lcp_len_slices(x, y);
    match (x.get(l), y.get(l)) {
        (Some(&a), Some(&b)) => O::key(a).cmp(&O::key(b)),
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

pub(crate) fn compare_ranks(x: &[u8], y: &[u8], order: Order) -> Ordering {
    dispatch_order!(order, compare_slices(x, y))
}

pub(crate) fn prefix_relation_slices(x: &[u8], y: &[u8]) -> PrefixRelation {
    let l = lcp_len_slices(x, y);
    match (l == x.len(), l == y.len()) {
        (true, true) => PrefixRelation::Equal,
        (true, false) => PrefixRelation::ProperPrefixOfLeft,
        (false, true) => PrefixRelation::ProperPrefixOfRight,
        (false, false) => PrefixRelation::Incomparable,
    }
}

/// `x ≪ y` on rank slices: `x ≺ y` with a genuine mismatch.
pub(crate) fn ll_slices(x: &[u8], y: &[u8]) -> bool {
    let l = lcp_len_slices(x, y);
    matches!((x.get(l), y.get(l)), (Some(a), Some(b)) if a < b)
}

/// Lexicographic comparison under `order`; a proper prefix is smaller.
pub fn lex_compare(x: &Word, y: &Word, order: Order) -> Result<Ordering> {
    x.check_alphabet(y)?;
    Ok(compare_ranks(x.ranks(), y.ranks(), order))
}

/// The relation `x ≪ y`: `x ≺ y` and `x` is not a proper prefix of `y`.
pub fn ll_compare(x: &Word, y: &Word) -> Result<bool> {
    x.check_alphabet(y)?;
    x.require_nonempty()?;
    y.require_nonempty()?;
    Ok(ll_slices(x.ranks(), y.ranks()))
}

pub fn prefix_relation(x: &Word, y: &Word) -> Result<PrefixRelation> {
    x.check_alphabet(y)?;
    Ok(prefix_relation_slices(x.ranks(), y.ranks()))
}

/// The longest common prefix of `x` and `y`.
pub fn lcp(x: &Word, y: &Word) -> Result<Word> {
    x.check_alphabet(y)?;
    Ok(x.slice(0, lcp_len_slices(x.ranks(), y.ranks())))
}

/// `|lcp(x, y)|`.
pub fn lcp_len(x: &Word, y: &Word) -> Result<usize> {
    x.check_alphabet(y)?;
    Ok(lcp_len_slices(x.ranks(), y.ranks()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from_bytes(s)
    }

    #[test]
    fn compare_examples() {
        assert_eq!(lex_compare(&w("dab"), &w("dabd"), Order::Normal), Ok(Ordering::Less));
        assert_eq!(lex_compare(&w("dabda"), &w("dac"), Order::Normal), Ok(Ordering::Less));
        assert_eq!(lex_compare(&w("dab"), &w("dabd"), Order::Inverse), Ok(Ordering::Less));
        assert_eq!(lex_compare(&w("dac"), &w("dabda"), Order::Inverse), Ok(Ordering::Less));
        assert_eq!(lex_compare(&w("aab"), &w("aba"), Order::Normal), Ok(Ordering::Less));
        let x = w("abracadabra");
        assert_eq!(lex_compare(&x, &x, Order::Normal), Ok(Ordering::Equal));
        assert_eq!(lex_compare(&x, &x, Order::Inverse), Ok(Ordering::Equal));
    }

    #[test]
    fn ll_examples() {
        assert_eq!(ll_compare(&w("aabba"), &w("ba")), Ok(true));
        assert_eq!(ll_compare(&w("a"), &w("ab")), Ok(false));
        assert_eq!(ll_compare(&w("daba"), &w("dabdab")), Ok(true));
        assert_eq!(ll_compare(&w(""), &w("ab")), Err(Error::EmptyWord));
    }

    #[test]
    fn prefix_relation_examples() {
        assert_eq!(prefix_relation(&w("dab"), &w("dabdab")), Ok(PrefixRelation::ProperPrefixOfLeft));
        assert_eq!(prefix_relation(&w("ab"), &w("ba")), Ok(PrefixRelation::Incomparable));
        assert_eq!(prefix_relation(&w("bba"), &w("b")), Ok(PrefixRelation::ProperPrefixOfRight));
        assert_eq!(prefix_relation(&w("ab"), &w("ab")), Ok(PrefixRelation::Equal));
    }

    #[test]
    fn lcp_examples() {
        assert_eq!(lcp(&w("dabdab"), &w("dabdadac")).unwrap(), w("dabda"));
        assert_eq!(lcp(&w("xyz"), &w("xyz")).unwrap(), w("xyz"));
        assert!(lcp(&w("ab"), &w("ba")).unwrap().is_empty());
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let custom = Arc::new(OrderedAlphabet::from_symbols(b"ba").unwrap());
        let x = Word::new(&custom, b"ab").unwrap();
        assert_eq!(lex_compare(&x, &w("ab"), Order::Normal), Err(Error::AlphabetMismatch));
        assert_eq!(Word::new(&custom, b"abc").unwrap_err(), Error::UnknownSymbol(b'c'));
    }

    #[test]
    fn custom_order_and_inverse_rank() {
        let alpha = OrderedAlphabet::with_priority(b"dcba").unwrap();
        assert_eq!(alpha.len(), 256);
        assert_eq!(alpha.rank(b'd'), Some(0));
        assert_eq!(alpha.rank(b'a'), Some(3));
        assert_eq!(alpha.rank(0), Some(4));
        for sym in 0..=255u8 {
            let r = alpha.rank(sym).unwrap();
            assert_eq!(alpha.inverse_rank(sym), Some(255 - r));
            assert_eq!(alpha.symbol(r), Some(sym));
        }
        assert_eq!(
            OrderedAlphabet::with_priority(b"aba").unwrap_err(),
            Error::DuplicateSymbol(b'a')
        );
        let alpha = Arc::new(alpha);
        let x = Word::new(&alpha, b"ab").unwrap();
        let y = Word::new(&alpha, b"ba").unwrap();
        assert_eq!(lex_compare(&y, &x, Order::Normal), Ok(Ordering::Less));
    }

    #[test]
    fn factor_positions_are_one_indexed() {
        let x = w("dabadabdabdadac");
        assert_eq!(x.factor(5, 10).unwrap(), w("dabdab"));
        assert_eq!(x.symbol(1), Ok(b'd'));
        assert!(x.factor(3, 2).unwrap().is_empty());
        assert!(x.factor(0, 2).is_err());
        assert!(x.factor(2, 16).is_err());
        assert_eq!(x.suffix(12).unwrap(), w("adac"));
        assert_eq!(x.factor(5, 10).unwrap().factor(4, 6).unwrap(), w("dab"));
    }

    #[test]
    fn empty_word_is_distinct() {
        let e = w("");
        assert!(e.is_empty());
        assert_ne!(e, w("a"));
        assert_eq!(lex_compare(&e, &w("a"), Order::Normal), Ok(Ordering::Less));
        assert_eq!(lex_compare(&e, &w("a"), Order::Inverse), Ok(Ordering::Less));
    }

    fn binary_word(max: usize) -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(prop_oneof![Just(b'a'), Just(b'b')], 0..max)
    }

    proptest! {
        #[test]
        fn proplexord_left_cancellation(x in binary_word(8), y in binary_word(8), z in binary_word(8)) {
            let (x, y, z) = (w_bytes(&x), w_bytes(&y), w_bytes(&z));
            let zx = z.concat(&x).unwrap();
            let zy = z.concat(&y).unwrap();
            prop_assert_eq!(lex_compare(&x, &y, Order::Normal), lex_compare(&zx, &zy, Order::Normal));
        }

        #[test]
        fn ll_survives_extension(x in binary_word(8), y in binary_word(8), u in binary_word(6), v in binary_word(6)) {
            let (x, y, u, v) = (w_bytes(&x), w_bytes(&y), w_bytes(&u), w_bytes(&v));
            prop_assume!(!x.is_empty() && !y.is_empty());
            if ll_compare(&x, &y).unwrap() {
                prop_assert!(ll_compare(&x.concat(&u).unwrap(), &y.concat(&v).unwrap()).unwrap());
                prop_assert_ne!(lex_compare(&y, &x, Order::Normal).unwrap(), Ordering::Less);
            }
        }

        #[test]
        fn incomparable_words_swap_under_inverse(x in binary_word(8), y in binary_word(8)) {
            let (x, y) = (w_bytes(&x), w_bytes(&y));
            if prefix_relation(&x, &y).unwrap() == PrefixRelation::Incomparable {
                let normal = lex_compare(&x, &y, Order::Normal).unwrap() == Ordering::Less;
                let inverse = lex_compare(&y, &x, Order::Inverse).unwrap() == Ordering::Less;
                prop_assert_eq!(normal, inverse);
                if normal {
                    prop_assert!(ll_compare(&x, &y).unwrap());
                }
            }
        }

        #[test]
        fn bytes_round_trip(bytes in prop::collection::vec(any::<u8>(), 0..32)) {
            prop_assert_eq!(Word::from_bytes(&bytes).to_bytes(), bytes);
        }
    }

    fn w_bytes(b: &[u8]) -> Word {
        Word::from_bytes(b)
    }
}

//! Generators, alphabets, and words of the free monoid.
//!
//! A word is a flat sequence of generator ids. All ordering questions go
//! through [`Alphabet::compare`], which implements the degree-lexicographic
//! order: shorter words come first, and equal-length words are compared
//! position by position using generator precedence.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};

/// A single generator: a dense internal id plus the name used for parsing
/// and printing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub id: u8,
    pub name: String,
}

/// An ordered set of generators together with a total precedence on them.
///
/// Ids are dense and 0-based. Precedence is stored as a rank table so that
/// word comparison is a table lookup per symbol; for every built-in preset
/// the listing order is the precedence order and the table is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
    rank_of: Vec<u8>,
    by_name: HashMap<String, u8>,
}

impl Alphabet {
    /// Builds an alphabet whose precedence is the listing order
    /// (`names[0]` is the least generator).
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let order: Vec<u8> = (0..names.len()).map(|i| i as u8).collect();
        Self::with_precedence(names, &order)
    }

    /// Builds an alphabet with an explicit precedence: `order[k]` is the id
    /// of the generator with rank `k` (rank 0 = least).
    pub fn with_precedence<S: AsRef<str>>(names: &[S], order: &[u8]) -> Result<Self> {
        if names.len() > 255 {
            return Err(Error::AlphabetTooLarge(names.len()));
        }
        let n = names.len();
        let mut by_name = HashMap::with_capacity(n);
        let mut gens = Vec::with_capacity(n);
        for (id, name) in names.iter().enumerate() {
            let name = name.as_ref().to_owned();
            if by_name.insert(name.clone(), id as u8).is_some() {
                return Err(Error::DuplicateGenerator(name));
            }
            gens.push(Generator { id: id as u8, name });
        }
        if order.len() != n {
            return Err(Error::BadPrecedence { expected: n });
        }
        let mut rank_of = vec![u8::MAX; n];
        for (rank, &id) in order.iter().enumerate() {
            if (id as usize) >= n || rank_of[id as usize] != u8::MAX {
                return Err(Error::BadPrecedence { expected: n });
            }
            rank_of[id as usize] = rank as u8;
        }
        Ok(Alphabet { gens, rank_of, by_name })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn name(&self, id: u8) -> &str {
        &self.gens[id as usize].name
    }

    pub fn id_of(&self, name: &str) -> Option<u8> {
        self.by_name.get(name).copied()
    }

    pub fn rank(&self, id: u8) -> u8 {
        self.rank_of[id as usize]
    }

    /// Generator ids listed in ascending precedence.
    pub fn ids_by_rank(&self) -> Vec<u8> {
        let mut ids: Vec<u8> = (0..self.gens.len() as u8).collect();
        ids.sort_by_key(|&id| self.rank_of[id as usize]);
        ids
    }

    /// Degree-lexicographic comparison: degree first, then left-to-right by
    /// generator precedence.
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        match a.len().cmp(&b.len()) {
            Ordering::Equal => {}
            other => return other,
        }
        for (&x, &y) in a.syms().iter().zip(b.syms()) {
            match self.rank_of[x as usize].cmp(&self.rank_of[y as usize]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Checks that every symbol of `w` belongs to this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &s in w.syms() {
            if (s as usize) >= self.gens.len() {
                return Err(Error::SymbolOutOfRange(s));
            }
        }
        Ok(())
    }

    /// Renders a word as whitespace-separated generator names; the empty
    /// word prints as `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_owned();
        }
        let mut out = String::new();
        for (k, &s) in w.syms().iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(self.name(s));
        }
        out
    }

    /// Parses a whitespace-separated word; the single token `1` denotes the
    /// empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() == 1 && tokens[0] == "1" {
            return Ok(Word::empty());
        }
        let mut syms = Vec::with_capacity(tokens.len());
        for t in tokens {
            match self.id_of(t) {
                Some(id) => syms.push(id),
                None => return Err(Error::UnknownGenerator(t.to_owned())),
            }
        }
        Ok(Word::from_syms(syms))
    }
}

/// A word of the free monoid over some alphabet, stored as generator ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    syms: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { syms: Vec::new() }
    }

    pub fn from_syms(syms: Vec<u8>) -> Self {
        Word { syms }
    }

    pub fn single(s: u8) -> Self {
        Word { syms: vec![s] }
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn syms(&self) -> &[u8] {
        &self.syms
    }

    pub fn push(&mut self, s: u8) {
        self.syms.push(s);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.syms.extend_from_slice(&other.syms);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut syms = Vec::with_capacity(self.len() + other.len());
        syms.extend_from_slice(&self.syms);
        syms.extend_from_slice(&other.syms);
        Word { syms }
    }

    /// Concatenation `a · self · b`.
    pub fn in_context(&self, a: &[u8], b: &[u8]) -> Word {
        let mut syms = Vec::with_capacity(a.len() + self.len() + b.len());
        syms.extend_from_slice(a);
        syms.extend_from_slice(&self.syms);
        syms.extend_from_slice(b);
        Word { syms }
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word { syms: self.syms[start..end].to_vec() }
    }

    pub fn reversed(&self) -> Word {
        let mut syms = self.syms.clone();
        syms.reverse();
        Word { syms }
    }

    /// Start offsets of every occurrence of `pat` in `self`.
    pub fn occurrences(&self, pat: &Word) -> Vec<usize> {
        if pat.is_empty() || pat.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - pat.len())
            .filter(|&s| &self.syms[s..s + pat.len()] == pat.syms())
            .collect()
    }

    /// True when the final `t` symbols of `self` equal the first `t` of
    /// `other`.
    pub fn suffix_matches_prefix(&self, other: &Word, t: usize) -> bool {
        t <= self.len()
            && t <= other.len()
            && self.syms[self.len() - t..] == other.syms[..t]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering::*;

    fn abc() -> Alphabet {
        Alphabet::new(&["x1", "x2", "x3"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        a.parse_word(s).unwrap()
    }

    #[test]
    fn deglex_short_words_first() {
        let a = abc();
        let chain = ["1", "x1", "x2", "x3", "x1 x1", "x1 x2", "x1 x3", "x2 x1", "x2 x2", "x2 x3"];
        for pair in chain.windows(2) {
            let (u, v) = (w(&a, pair[0]), w(&a, pair[1]));
            assert_eq!(a.compare(&u, &v), Less, "{} < {}", pair[0], pair[1]);
            assert_eq!(a.compare(&v, &u), Greater);
        }
    }

    #[test]
    fn deglex_degree_dominates_precedence() {
        let a = abc();
        assert_eq!(a.compare(&w(&a, "x3"), &w(&a, "x1 x1")), Less);
        assert_eq!(a.compare(&w(&a, "x2 x1 x2"), &w(&a, "x1 x2 x1")), Greater);
    }

    #[test]
    fn deglex_is_a_congruence_under_concatenation() {
        let a = abc();
        let u = w(&a, "x1 x2");
        let v = w(&a, "x2 x1");
        assert_eq!(a.compare(&u, &v), Less);
        let ctx_l = w(&a, "x3 x1");
        let ctx_r = w(&a, "x2");
        let cu = u.in_context(ctx_l.syms(), ctx_r.syms());
        let cv = v.in_context(ctx_l.syms(), ctx_r.syms());
        assert_eq!(a.compare(&cu, &cv), Less);
    }

    #[test]
    fn explicit_precedence_overrides_listing_order() {
        let a = Alphabet::with_precedence(&["a", "b"], &[1, 0]).unwrap();
        let u = a.parse_word("a").unwrap();
        let v = a.parse_word("b").unwrap();
        assert_eq!(a.compare(&u, &v), Greater);
    }

    #[test]
    fn parse_and_format_round_trip() {
        let a = abc();
        for text in ["1", "x1", "x2 x1 x2", "x3 x3 x1"] {
            let parsed = w(&a, text);
            assert_eq!(a.format_word(&parsed), text);
        }
        assert!(a.parse_word("x9").is_err());
    }

    #[test]
    fn occurrences_and_overlaps() {
        let a = abc();
        let text = w(&a, "x1 x2 x1 x2");
        assert_eq!(text.occurrences(&w(&a, "x2 x1 x2")), vec![1]);
        assert_eq!(text.occurrences(&w(&a, "x1 x2")), vec![0, 2]);
        let lead = w(&a, "x2 x1 x2");
        let sq = w(&a, "x2 x2");
        assert!(lead.suffix_matches_prefix(&sq, 1));
        assert!(!lead.suffix_matches_prefix(&sq, 2));
    }

    #[test]
    fn duplicate_names_are_rejected() {
        assert!(Alphabet::new(&["a", "a"]).is_err());
    }
}

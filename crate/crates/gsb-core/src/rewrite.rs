//! Reduction of words and polynomials modulo a basis.
//!
//! The reducer always picks the deg-lex-greatest reducible word of the
//! polynomial, then the leftmost occurrence inside it, breaking ties at the
//! same start by the smallest basis-element index. Binomial bases get a
//! word-level fast path ([`Basis::nf_word`]) that rewrites a single word in
//! place and re-uses the automaton states of the untouched prefix after
//! each replacement.

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::poly::{Poly, Rule};
use crate::word::{Alphabet, Word};

/// One redex: basis element `elem` matches at `w[start..start + len]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub start: usize,
    pub len: usize,
    pub elem: usize,
}

/// Factor-matching index over the leading words of a basis.
#[derive(Debug, Clone)]
pub struct LeadIndex {
    automaton: Automaton,
    /// Basis element owning each pattern; duplicated leading words resolve
    /// to the smallest element index.
    elem_of_pat: Vec<usize>,
}

impl LeadIndex {
    pub fn build(leads: &[(Word, usize)], n_syms: usize) -> Result<Self> {
        let mut seen: std::collections::HashMap<&Word, usize> = Default::default();
        let mut patterns: Vec<Word> = Vec::new();
        let mut elem_of_pat: Vec<usize> = Vec::new();
        for (w, elem) in leads {
            if w.is_empty() {
                return Err(Error::EmptyLeadingWord);
            }
            match seen.get(w) {
                Some(&pat) => {
                    if *elem < elem_of_pat[pat] {
                        elem_of_pat[pat] = *elem;
                    }
                }
                None => {
                    seen.insert(w, patterns.len());
                    patterns.push(w.clone());
                    elem_of_pat.push(*elem);
                }
            }
        }
        Ok(LeadIndex { automaton: Automaton::build(&patterns, n_syms), elem_of_pat })
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    pub fn max_pattern_len(&self) -> usize {
        self.automaton.max_pat_len()
    }

    /// Leftmost occurrence in `w`, ties at the same start broken by the
    /// smallest element index. Scanning continues just long enough past the
    /// first hit to rule out an even earlier-starting longer pattern.
    pub fn find(&self, w: &[u8]) -> Option<Occurrence> {
        let max_len = self.automaton.max_pat_len();
        let mut best: Option<Occurrence> = None;
        let mut state = 0u32;
        for (pos, &c) in w.iter().enumerate() {
            state = self.automaton.step(state, c);
            if self.automaton.is_terminal(state) {
                for pat in self.automaton.matches_at(state) {
                    let len = self.automaton.pat_len(pat);
                    let start = pos + 1 - len;
                    let elem = self.elem_of_pat[pat];
                    let better = match best {
                        None => true,
                        Some(b) => (start, elem) < (b.start, b.elem),
                    };
                    if better {
                        best = Some(Occurrence { start, len, elem });
                    }
                }
            }
            if let Some(b) = best {
                if pos + 1 - b.start >= max_len {
                    break;
                }
            }
        }
        best
    }

    /// Every occurrence of every pattern in `w`.
    pub fn find_all(&self, w: &[u8]) -> Vec<Occurrence> {
        let mut out = Vec::new();
        let mut state = 0u32;
        for (pos, &c) in w.iter().enumerate() {
            state = self.automaton.step(state, c);
            if self.automaton.is_terminal(state) {
                for pat in self.automaton.matches_at(state) {
                    let len = self.automaton.pat_len(pat);
                    out.push(Occurrence {
                        start: pos + 1 - len,
                        len,
                        elem: self.elem_of_pat[pat],
                    });
                }
            }
        }
        out.sort_by_key(|o| (o.start, o.elem));
        out
    }
}

/// A set of monic basis elements over one alphabet, with the factor index
/// and (when every element is binomial) the word-level rule table.
#[derive(Debug, Clone)]
pub struct Basis {
    alphabet: Alphabet,
    elements: Vec<Poly>,
    index: LeadIndex,
    rules: Option<Vec<Rule>>,
    verified: bool,
}

impl Basis {
    /// Normalizes the elements (monic, nonzero, leading words nonempty) and
    /// builds the index.
    pub fn new(alphabet: Alphabet, elements: Vec<Poly>) -> Result<Self> {
        let mut elems = Vec::with_capacity(elements.len());
        for p in elements {
            if p.is_zero() {
                return Err(Error::ZeroElement);
            }
            let p = p.make_monic()?;
            alphabet.check_word(&p.leading().unwrap().word)?;
            elems.push(p);
        }
        let leads: Vec<(Word, usize)> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.leading().unwrap().word.clone(), i))
            .collect();
        let index = LeadIndex::build(&leads, alphabet.len())?;
        let rules = elems.iter().map(Poly::as_rule).collect::<Result<Vec<_>>>().ok();
        Ok(Basis { alphabet, elements: elems, index, rules, verified: false })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index(&self) -> &LeadIndex {
        &self.index
    }

    /// Word-level rules; present only when every element is a unit
    /// binomial.
    pub fn rules(&self) -> Result<&[Rule]> {
        self.rules.as_deref().ok_or(Error::NotBinomial)
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.elements.iter().map(|p| p.leading().unwrap().word.clone()).collect()
    }

    /// Whether composition closure has been checked for this basis.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub(crate) fn set_verified(&mut self, v: bool) {
        self.verified = v;
    }

    /// One reduction step on the deg-lex-greatest reducible word of `p`,
    /// or `None` when `p` is in normal form.
    pub fn reduce_once(&self, p: &Poly) -> Option<Poly> {
        for term in p.terms() {
            if let Some(occ) = self.index.find(term.word.syms()) {
                let g = &self.elements[occ.elem];
                let a = &term.word.syms()[..occ.start];
                let b = &term.word.syms()[occ.start + occ.len..];
                let subtrahend = g.in_context(a, b).scale(&term.coeff);
                return Some(p.sub(&subtrahend, &self.alphabet));
            }
        }
        None
    }

    /// Full normal form of a polynomial.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut cur = p.clone();
        while let Some(next) = self.reduce_once(&cur) {
            cur = next;
        }
        cur
    }

    /// Word-level normal form; requires a binomial basis.
    pub fn nf_word(&self, w: &Word) -> Result<Word> {
        let rules = self.rules()?;
        Ok(nf_syms(&self.index, rules, w.syms()))
    }

    /// Normal form computed with an arbitrary redex choice at every step;
    /// `choose` receives the nonempty occurrence list. Used to confirm that
    /// the fixed strategy is inessential on closed bases.
    pub fn nf_word_with_choice(
        &self,
        w: &Word,
        mut choose: impl FnMut(&[Occurrence]) -> usize,
    ) -> Result<Word> {
        let rules = self.rules()?;
        let mut word = w.clone();
        loop {
            let occs = self.index.find_all(word.syms());
            if occs.is_empty() {
                return Ok(word);
            }
            let occ = occs[choose(&occs).min(occs.len() - 1)];
            let mut syms = word.syms().to_vec();
            syms.splice(occ.start..occ.start + occ.len, rules[occ.elem].rhs.syms().iter().copied());
            word = Word::from_syms(syms);
        }
    }
}

/// Word-level normal form against an explicit index over `rules` leading
/// words; the index may cover only a prefix of `rules` (completion grows
/// the rule list between batched index rebuilds). Re-uses the automaton
/// states of the untouched prefix after each replacement.
pub(crate) fn nf_syms(index: &LeadIndex, rules: &[Rule], start: &[u8]) -> Word {
    let automaton = index.automaton();
    let max_len = automaton.max_pat_len();
    let mut word: Vec<u8> = start.to_vec();
    // states[k] is the automaton state after consuming word[..k].
    let mut states: Vec<u32> = Vec::with_capacity(word.len() + 1);
    states.push(0);
    let mut pos = 0usize;
    loop {
        let mut best: Option<Occurrence> = None;
        let mut scan = pos;
        while scan < word.len() {
            let s = automaton.step(states[scan], word[scan]);
            states.push(s);
            scan += 1;
            if automaton.is_terminal(s) {
                for pat in automaton.matches_at(s) {
                    let len = automaton.pat_len(pat);
                    let st = scan - len;
                    let elem = index.elem_of_pat[pat];
                    let better = match best {
                        None => true,
                        Some(b) => (st, elem) < (b.start, b.elem),
                    };
                    if better {
                        best = Some(Occurrence { start: st, len, elem });
                    }
                }
            }
            if let Some(b) = best {
                if scan - b.start >= max_len {
                    break;
                }
            }
        }
        match best {
            None => return Word::from_syms(word),
            Some(occ) => {
                let rhs = &rules[occ.elem].rhs;
                word.splice(occ.start..occ.start + occ.len, rhs.syms().iter().copied());
                states.truncate(occ.start + 1);
                pos = occ.start;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(names: &[&str], elems: &[(&str, &str)]) -> Basis {
        let a = Alphabet::new(names).unwrap();
        let polys = elems
            .iter()
            .map(|(l, r)| {
                Poly::word_difference(&a.parse_word(l).unwrap(), &a.parse_word(r).unwrap(), &a)
            })
            .collect();
        Basis::new(a, polys).unwrap()
    }

    fn w(b: &Basis, s: &str) -> Word {
        b.alphabet().parse_word(s).unwrap()
    }

    fn g2() -> Basis {
        basis(
            &["x1", "x2"],
            &[
                ("x1 x1", "1"),
                ("x2 x2", "1"),
                ("x2 x1 x2 x1 x2 x1", "x1 x2 x1 x2 x1 x2"),
            ],
        )
    }

    #[test]
    fn index_reports_matches_and_misses() {
        let b = basis(
            &["x1", "x2"],
            &[
                ("x1 x1", "1"),
                ("x2 x2", "1"),
                ("x2 x1 x2", "x1 x2 x1"),
                ("x1 x2 x1 x2", "x2 x1"),
            ],
        );
        assert!(b.index().find(w(&b, "x1 x2 x1 x2").syms()).is_some());
        assert!(b.index().find(w(&b, "x1 x2 x1").syms()).is_none());
        let both = b.index().find_all(w(&b, "x1 x1 x2 x2").syms());
        assert_eq!(both.len(), 2);
        assert_eq!((both[0].elem, both[1].elem), (0, 1));
    }

    #[test]
    fn reduce_once_takes_the_leftmost_redex() {
        let b = basis(&["x1", "x2"], &[("x2 x2", "1"), ("x2 x1 x2", "x1 x2 x1")]);
        let p = Poly::monomial(num::BigRational::from_integer(1.into()), w(&b, "x2 x1 x2 x2"));
        let once = b.reduce_once(&p).unwrap();
        assert_eq!(once.leading().unwrap().word, w(&b, "x1 x2 x1 x2"));
    }

    #[test]
    fn ties_at_the_same_start_prefer_the_earlier_element() {
        // Both leading words match at position 0; only the element order
        // differs between the two bases.
        let b = basis(&["x1", "x2"], &[("x1 x2 x1", "1"), ("x1 x2", "x1 x1")]);
        let occ = b.index().find(w(&b, "x1 x2 x1").syms()).unwrap();
        assert_eq!(occ.elem, 0);
        assert_eq!(occ.start, 0);
        assert_eq!(occ.len, 3);

        let b = basis(&["x1", "x2"], &[("x1 x2", "x1 x1"), ("x1 x2 x1", "1")]);
        let occ = b.index().find(w(&b, "x1 x2 x1").syms()).unwrap();
        assert_eq!(occ.elem, 0);
        assert_eq!(occ.len, 2);
    }

    #[test]
    fn an_earlier_start_beats_a_smaller_element_index() {
        let b = basis(&["x1", "x2"], &[("x2 x1", "x1 x2"), ("x1 x2 x1", "1")]);
        let occ = b.index().find(w(&b, "x1 x2 x1").syms()).unwrap();
        assert_eq!((occ.start, occ.elem, occ.len), (0, 1, 3));
    }

    #[test]
    fn a_longer_pattern_starting_earlier_wins() {
        let b = basis(&["a", "b", "c", "d"], &[("b c", "1"), ("a b c d", "1")]);
        let occ = b.index().find(w(&b, "a b c d").syms()).unwrap();
        assert_eq!((occ.start, occ.elem), (0, 1));
    }

    #[test]
    fn g2_normal_forms() {
        let b = g2();
        // The long-element braid rewrites into the mirror word.
        assert_eq!(
            b.nf_word(&w(&b, "x2 x1 x2 x1 x2 x1")).unwrap(),
            w(&b, "x1 x2 x1 x2 x1 x2")
        );
        // Squares cancel anywhere.
        assert_eq!(b.nf_word(&w(&b, "x1 x1 x2 x2")).unwrap(), Word::empty());
        assert_eq!(
            b.nf_word(&w(&b, "x1 x2 x1 x2 x1 x2 x1")).unwrap(),
            w(&b, "x2 x1 x2 x1 x2")
        );
    }

    #[test]
    fn word_and_poly_paths_agree() {
        let b = g2();
        for text in ["x2 x1 x2 x1 x2 x1 x1 x2", "x1 x1", "x2 x1 x1 x2", "x2 x2 x2"] {
            let word = w(&b, text);
            let nf = b.nf_word(&word).unwrap();
            let p = Poly::monomial(num::BigRational::from_integer(1.into()), word);
            let pnf = b.normal_form(&p);
            if nf.is_empty() {
                assert_eq!(pnf.leading().unwrap().word, Word::empty());
            } else {
                assert_eq!(pnf.leading().unwrap().word, nf);
            }
        }
    }

    #[test]
    fn congruence_under_concatenation() {
        let b = g2();
        let u = w(&b, "x2 x1 x2 x1");
        let v = w(&b, "x1 x1 x2");
        let uv_nf = b.nf_word(&u.concat(&v)).unwrap();
        let nfu_nfv = b
            .nf_word(&b.nf_word(&u).unwrap().concat(&b.nf_word(&v).unwrap()))
            .unwrap();
        assert_eq!(uv_nf, nfu_nfv);
    }

    #[test]
    fn random_strategies_agree_on_a_closed_basis() {
        let b = g2();
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let len = rng.gen_range(0..30);
            let syms: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
            let word = Word::from_syms(syms);
            let fixed = b.nf_word(&word).unwrap();
            let random = b
                .nf_word_with_choice(&word, |occs| rng.gen_range(0..occs.len()))
                .unwrap();
            assert_eq!(fixed, random);
        }
    }

    #[test]
    fn zero_and_irreducible_polynomials_are_fixed_points() {
        let b = g2();
        assert!(b.reduce_once(&Poly::zero()).is_none());
        let p = Poly::word_difference(&w(&b, "x1 x2"), &w(&b, "x2 x1"), b.alphabet());
        assert!(b.reduce_once(&p).is_none());
        assert_eq!(b.normal_form(&p), p);
    }

    #[test]
    fn empty_leading_word_is_rejected() {
        let a = Alphabet::new(&["x1"]).unwrap();
        let unit = Poly::word_difference(&Word::empty(), &a.parse_word("x1").unwrap(), &a);
        // leading word of `x1 - 1` is x1, fine; a bare constant is not.
        assert!(Basis::new(a.clone(), vec![unit]).is_ok());
        let constant = Poly::monomial(num::BigRational::from_integer(2.into()), Word::empty());
        assert!(matches!(
            Basis::new(a, vec![constant]),
            Err(Error::EmptyLeadingWord)
        ));
    }
}

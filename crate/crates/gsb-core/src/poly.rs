//! Polynomials of the free associative algebra with exact rational
//! coefficients.
//!
//! Terms are kept sorted strictly descending in the degree-lexicographic
//! order, so the leading term is always `terms[0]`. The zero polynomial is
//! the empty term list. Constructors and arithmetic take the alphabet
//! explicitly because the term order depends on generator precedence.

use std::cmp::Ordering;

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// One coefficient–word pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub word: Word,
}

/// A free-algebra polynomial in normalized form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

/// A rewriting rule `lhs -> rhs` extracted from a monic binomial
/// `lhs - rhs` with `rhs` strictly below `lhs` in deg-lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

impl Rule {
    pub fn to_poly(&self) -> Poly {
        Poly {
            terms: vec![
                Term { coeff: BigRational::one(), word: self.lhs.clone() },
                Term { coeff: -BigRational::one(), word: self.rhs.clone() },
            ],
        }
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn monomial(coeff: BigRational, word: Word) -> Self {
        if coeff.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![Term { coeff, word }] }
        }
    }

    /// The difference `u - v` of two words, normalized.
    pub fn word_difference(u: &Word, v: &Word, alphabet: &Alphabet) -> Self {
        Poly::from_terms(
            vec![
                Term { coeff: BigRational::one(), word: u.clone() },
                Term { coeff: -BigRational::one(), word: v.clone() },
            ],
            alphabet,
        )
    }

    /// Normalizes an arbitrary term list: sorts descending, merges equal
    /// words, and drops zero coefficients.
    pub fn from_terms(mut terms: Vec<Term>, alphabet: &Alphabet) -> Self {
        terms.sort_by(|s, t| alphabet.compare(&t.word, &s.word));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.word == t.word => {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t);
                    }
                }
            }
        }
        Poly { terms: out }
    }

    pub fn leading(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroLeading)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|t| &t.word)
    }

    /// Merge-adds two normalized polynomials.
    pub fn add(&self, other: &Poly, alphabet: &Alphabet) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match alphabet.compare(&a.word, &b.word) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term { coeff: c, word: a.word.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly, alphabet: &Alphabet) -> Poly {
        self.add(&other.neg(), alphabet)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: -t.coeff.clone(), word: t.word.clone() })
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: &t.coeff * c, word: t.word.clone() })
                .collect(),
        }
    }

    /// The two-sided product `a · self · b` by plain words. Multiplying by
    /// words preserves the term order, so no re-sort is needed.
    pub fn in_context(&self, a: &[u8], b: &[u8]) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.clone(), word: t.word.in_context(a, b) })
                .collect(),
        }
    }

    /// Divides by the leading coefficient; errors on zero.
    pub fn make_monic(&self) -> Result<Poly> {
        let lead = self.leading()?;
        if lead.coeff.is_one() {
            return Ok(self.clone());
        }
        let inv = BigRational::one() / lead.coeff.clone();
        Ok(self.scale(&inv))
    }

    /// Extracts a word-level rule from a monic binomial `lhs - rhs`.
    /// Two-term polynomials with other coefficients, or with more terms,
    /// are rejected.
    pub fn as_rule(&self) -> Result<Rule> {
        if self.terms.len() != 2 {
            return Err(Error::NotBinomial);
        }
        let (hi, lo) = (&self.terms[0], &self.terms[1]);
        if !hi.coeff.is_one() || !(-lo.coeff.clone()).is_one() {
            return Err(Error::NotBinomial);
        }
        Ok(Rule { lhs: hi.word.clone(), rhs: lo.word.clone() })
    }

    /// Renders the polynomial in the text form used by basis files:
    /// terms descending, coefficients elided when ±1, the empty word
    /// spelled `1`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if k == 0 {
                if neg {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = abs.is_one();
            if !unit {
                out.push_str(&abs.to_string());
                if !t.word.is_empty() {
                    out.push(' ');
                }
            }
            if t.word.is_empty() {
                if unit {
                    out.push('1');
                }
            } else {
                out.push_str(&alphabet.format_word(&t.word));
            }
        }
        out
    }

    /// Parses the format produced by [`Poly::format`].
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Poly> {
        let mut terms: Vec<Term> = Vec::new();
        let mut sign = BigRational::one();
        let mut coeff: Option<BigRational> = None;
        let mut word: Vec<u8> = Vec::new();
        let mut saw_any = false;
        let flush = |sign: &BigRational,
                         coeff: &mut Option<BigRational>,
                         word: &mut Vec<u8>,
                         saw_any: bool,
                         terms: &mut Vec<Term>|
         -> Result<()> {
            if !saw_any {
                return Ok(());
            }
            let c = coeff.take().unwrap_or_else(BigRational::one);
            terms.push(Term {
                coeff: sign * c,
                word: Word::from_syms(std::mem::take(word)),
            });
            Ok(())
        };
        if text.trim() == "0" {
            return Ok(Poly::zero());
        }
        for tok in text.split_whitespace() {
            match tok {
                "+" | "-" => {
                    flush(&sign, &mut coeff, &mut word, saw_any, &mut terms)?;
                    saw_any = false;
                    sign = if tok == "-" { -BigRational::one() } else { BigRational::one() };
                }
                "1" if coeff.is_none() && word.is_empty() => {
                    // A bare `1` token is the empty word.
                    saw_any = true;
                }
                _ => {
                    if let Some(id) = alphabet.id_of(tok) {
                        word.push(id);
                        saw_any = true;
                    } else if coeff.is_none() && word.is_empty() {
                        let c: BigRational = tok.parse().map_err(|_| Error::Parse {
                            line: 0,
                            msg: format!("unrecognized token `{tok}`"),
                        })?;
                        coeff = Some(c);
                        saw_any = true;
                    } else {
                        return Err(Error::Parse {
                            line: 0,
                            msg: format!("unrecognized token `{tok}`"),
                        });
                    }
                }
            }
        }
        flush(&sign, &mut coeff, &mut word, saw_any, &mut terms)?;
        Ok(Poly::from_terms(terms, alphabet))
    }
}

impl Alphabet {
    pub fn format_poly(&self, p: &Poly) -> String {
        p.format(self)
    }

    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        Poly::parse(text, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(&["x1", "x2"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        a.parse_word(s).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn normalize_sorts_merges_and_cancels() {
        let a = ab();
        let p = Poly::from_terms(
            vec![
                Term { coeff: q(1), word: w(&a, "x1 x2") },
                Term { coeff: q(2), word: w(&a, "x2 x1 x2") },
                Term { coeff: q(-1), word: w(&a, "x1 x2") },
                Term { coeff: q(3), word: w(&a, "1") },
            ],
            &a,
        );
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.leading().unwrap().word, w(&a, "x2 x1 x2"));
        assert_eq!(p.format(&a), "2 x2 x1 x2 + 3");
    }

    #[test]
    fn zero_polynomial_has_no_leading_term() {
        let a = ab();
        let p = Poly::word_difference(&w(&a, "x1 x2"), &w(&a, "x1 x2"), &a);
        assert!(p.is_zero());
        assert!(p.leading().is_err());
        assert!(p.make_monic().is_err());
    }

    #[test]
    fn make_monic_rescales_every_term() {
        let a = ab();
        let p = Poly::from_terms(
            vec![
                Term { coeff: q(2), word: w(&a, "x2 x1") },
                Term { coeff: q(-3), word: w(&a, "x1") },
            ],
            &a,
        );
        let m = p.make_monic().unwrap();
        assert!(m.leading().unwrap().coeff.is_one());
        assert_eq!(m.format(&a), "x2 x1 - 3/2 x1");
    }

    #[test]
    fn as_rule_accepts_monic_unit_binomials_only() {
        let a = ab();
        let braid = Poly::word_difference(&w(&a, "x2 x1 x2"), &w(&a, "x1 x2 x1"), &a);
        let r = braid.as_rule().unwrap();
        assert_eq!(r.lhs, w(&a, "x2 x1 x2"));
        assert_eq!(r.rhs, w(&a, "x1 x2 x1"));

        let square = Poly::word_difference(&w(&a, "x1 x1"), &Word::empty(), &a);
        assert_eq!(square.as_rule().unwrap().rhs, Word::empty());

        let scaled = square.scale(&q(2));
        assert!(scaled.as_rule().is_err());
        let mono = Poly::monomial(q(1), w(&a, "x1"));
        assert!(mono.as_rule().is_err());
    }

    #[test]
    fn orientation_follows_the_order_not_the_input() {
        let a = ab();
        let p = Poly::word_difference(&w(&a, "x2 x1"), &w(&a, "x1 x2 x1"), &a);
        let m = p.make_monic().unwrap();
        let r = m.as_rule().unwrap();
        assert_eq!(r.lhs, w(&a, "x1 x2 x1"));
        assert_eq!(r.rhs, w(&a, "x2 x1"));
    }

    #[test]
    fn format_parse_round_trip() {
        let a = ab();
        let texts = ["x2 x1 x2 - x1 x2 x1", "x1 x1 - 1", "2 x2 x1 x2 + 3", "- x1 + 1/2", "0"];
        for t in texts {
            let p = Poly::parse(t, &a).unwrap();
            assert_eq!(p.format(&a), t, "round-trip of `{t}`");
        }
    }

    #[test]
    fn context_product_preserves_normal_form() {
        let a = ab();
        let p = Poly::word_difference(&w(&a, "x2 x1 x2"), &w(&a, "x1 x2 x1"), &a);
        let ctx = p.in_context(w(&a, "x2").syms(), w(&a, "x1").syms());
        assert_eq!(ctx.leading().unwrap().word, w(&a, "x2 x2 x1 x2 x1"));
        let back = Poly::from_terms(ctx.terms().to_vec(), &a);
        assert_eq!(ctx, back);
    }
}

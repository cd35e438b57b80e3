//! Counting and enumerating irreducible words.
//!
//! The irreducible words of a rewriting system are exactly the words
//! avoiding every leading word as a factor, so they form a regular
//! language: the complement of `Σ* F Σ*` for the finite factor set `F`.
//! This module compiles that language into a small deterministic automaton
//! over the live (non-absorbed) states, counts accepted words per length by
//! dynamic programming, and streams them in shortlex order.  For a closed
//! basis of a group presentation the count per length is the growth series
//! of the group and the total (when finite) is the group order.

use std::collections::HashMap;

use num::{BigUint, Zero};

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::rewrite::Basis;
use crate::word::{Alphabet, Word};

/// Deterministic automaton whose states are the live states of the
/// factor-matching machine: a word is accepted (never leaves the live part)
/// exactly when it contains no forbidden factor.
#[derive(Debug, Clone)]
pub struct AvoidanceAutomaton {
    n_syms: usize,
    /// `trans[s * n_syms + c]`: successor of live state `s` on symbol `c`,
    /// or `DEAD` when the step would complete a forbidden factor.
    trans: Vec<u32>,
    n_states: usize,
}

const DEAD: u32 = u32::MAX;

impl AvoidanceAutomaton {
    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_syms(&self) -> usize {
        self.n_syms
    }

    /// Successor of `state` on `sym`, or `None` when the extension is no
    /// longer factor-free.
    pub fn step(&self, state: u32, sym: u8) -> Option<u32> {
        let t = self.trans[state as usize * self.n_syms + sym as usize];
        (t != DEAD).then_some(t)
    }

    /// Whether the live-state graph has a directed cycle, i.e. whether the
    /// accepted language is infinite.
    pub fn has_cycle(&self) -> bool {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; self.n_states];
        let mut stack: Vec<(u32, usize)> = Vec::new();
        for root in 0..self.n_states as u32 {
            if color[root as usize] != WHITE {
                continue;
            }
            color[root as usize] = GRAY;
            stack.push((root, 0));
            while let Some(&mut (s, ref mut next)) = stack.last_mut() {
                if *next == self.n_syms {
                    color[s as usize] = BLACK;
                    stack.pop();
                    continue;
                }
                let c = *next as u8;
                *next += 1;
                if let Some(t) = self.step(s, c) {
                    match color[t as usize] {
                        GRAY => return true,
                        WHITE => {
                            color[t as usize] = GRAY;
                            stack.push((t, 0));
                        }
                        _ => {}
                    }
                }
            }
        }
        false
    }
}

/// Builds the factor-avoidance automaton for a set of forbidden words.
///
/// An empty forbidden set is allowed (everything is accepted); an empty
/// forbidden *word* is not, since it would reject every word including the
/// empty one.
pub fn build_avoidance(forbidden: &[Word], alphabet: &Alphabet) -> Result<AvoidanceAutomaton> {
    for w in forbidden {
        if w.is_empty() {
            return Err(Error::EmptyLeadingWord);
        }
        alphabet.check_word(w)?;
    }
    let n_syms = alphabet.len();
    let ac = Automaton::build(forbidden, n_syms);
    // Re-index the live (non-terminal) states reachable from the root.
    // Terminal states absorb: any continuation still contains the matched
    // factor, so they all collapse into one dead sink.
    let mut live_of: HashMap<u32, u32> = HashMap::new();
    let mut order: Vec<u32> = Vec::new();
    if !ac.is_terminal(0) {
        live_of.insert(0, 0);
        order.push(0);
    }
    let mut head = 0usize;
    while head < order.len() {
        let s = order[head];
        head += 1;
        for c in 0..n_syms as u8 {
            let t = ac.step(s, c);
            if ac.is_terminal(t) || live_of.contains_key(&t) {
                continue;
            }
            live_of.insert(t, order.len() as u32);
            order.push(t);
        }
    }
    let n_states = order.len();
    let mut trans = vec![DEAD; n_states * n_syms];
    for (i, &s) in order.iter().enumerate() {
        for c in 0..n_syms as u8 {
            let t = ac.step(s, c);
            if !ac.is_terminal(t) {
                trans[i * n_syms + c as usize] = live_of[&t];
            }
        }
    }
    Ok(AvoidanceAutomaton { n_syms, trans, n_states })
}

fn basis_automaton(basis: &Basis) -> Result<AvoidanceAutomaton> {
    build_avoidance(&basis.leading_words(), basis.alphabet())
}

/// Word counts per length for a factor-avoidance language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSeries {
    /// `counts[l]` = number of accepted words of length `l`.
    pub counts: Vec<BigUint>,
    /// True when the language is finite (live-state graph acyclic).
    pub finite: bool,
    /// Sum of all counts; present exactly when finite.
    pub total: Option<BigUint>,
}

impl GrowthSeries {
    /// Largest length with a nonzero count (`None` for the empty series,
    /// which cannot arise from a live automaton).
    pub fn max_length(&self) -> Option<usize> {
        self.counts.iter().rposition(|c| !c.is_zero())
    }
}

/// Fallback horizon when counting an infinite language without an explicit
/// length bound.
pub const DEFAULT_HORIZON: usize = 40;

/// Counts accepted words per length by iterating a per-state count vector,
/// so memory stays proportional to the state count.
///
/// With `max_length = None` the series is completed automatically: for a
/// finite language it runs until the counts vanish, for an infinite one it
/// stops at [`DEFAULT_HORIZON`].  An explicit `max_length` fixes the length
/// of `counts` to `max_length + 1`; for a finite language whose words end
/// before that, the total is still the full sum.
pub fn count_by_length(aut: &AvoidanceAutomaton, max_length: Option<usize>) -> GrowthSeries {
    let finite = !aut.has_cycle();
    let horizon = match max_length {
        Some(l) => l,
        None if finite => usize::MAX,
        None => DEFAULT_HORIZON,
    };
    let mut per_state: Vec<BigUint> = vec![BigUint::zero(); aut.n_states()];
    if aut.n_states() > 0 {
        per_state[0] = BigUint::from(1u8);
    }
    let step = |ps: &[BigUint]| {
        let mut next: Vec<BigUint> = vec![BigUint::zero(); aut.n_states()];
        for (s, cnt) in ps.iter().enumerate() {
            if cnt.is_zero() {
                continue;
            }
            for c in 0..aut.n_syms() as u8 {
                if let Some(t) = aut.step(s as u32, c) {
                    next[t as usize] += cnt;
                }
            }
        }
        next
    };
    let mut counts: Vec<BigUint> = Vec::new();
    let mut total = BigUint::zero();
    loop {
        let level: BigUint = per_state.iter().sum();
        // A zero level can never be followed by a nonzero one, so a finite
        // run is complete here.
        if finite && level.is_zero() {
            break;
        }
        total += &level;
        counts.push(level);
        if counts.len() > horizon {
            break;
        }
        per_state = step(&per_state);
    }
    if finite && counts.len() > horizon {
        // Bounded below the natural end of a finite series: the remaining
        // lengths still belong in the total, just not in `counts`.
        loop {
            per_state = step(&per_state);
            let level: BigUint = per_state.iter().sum();
            if level.is_zero() {
                break;
            }
            total += &level;
        }
    }
    if let Some(l) = max_length {
        counts.resize(l + 1, BigUint::zero());
    }
    GrowthSeries { counts, finite, total: finite.then_some(total) }
}

/// The order of the monoid/group presented by a closed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigUint),
    Infinite,
}

/// Counts the irreducible words of `basis`; by the diamond property of a
/// closed basis this is the order of the presented group.
///
/// On an unverified basis the count is only an upper bound on nothing in
/// particular, so the call is refused unless `force` is set.
pub fn group_order(basis: &Basis, force: bool) -> Result<GroupOrder> {
    if !basis.is_verified() && !force {
        return Err(Error::UnverifiedBasis);
    }
    let aut = basis_automaton(basis)?;
    let series = count_by_length(&aut, None);
    Ok(match series.total {
        Some(t) => GroupOrder::Finite(t),
        None => GroupOrder::Infinite,
    })
}

/// Streams the irreducible words of `basis` of length at most
/// `up_to_length`, in shortlex order (length-major, then symbol order).
pub fn enumerate_normal_forms(
    basis: &Basis,
    up_to_length: usize,
) -> Result<impl Iterator<Item = Word>> {
    let aut = basis_automaton(basis)?;
    Ok(NormalFormIter {
        aut,
        up_to_length,
        len: 0,
        buffer: Vec::new(),
        buffered_len: None,
    })
}

struct NormalFormIter {
    aut: AvoidanceAutomaton,
    up_to_length: usize,
    len: usize,
    buffer: Vec<Word>,
    buffered_len: Option<usize>,
}

impl NormalFormIter {
    fn fill(&mut self, len: usize) {
        self.buffer.clear();
        if self.aut.n_states() == 0 {
            self.buffered_len = Some(len);
            return;
        }
        // Depth-first walk of the live graph in symbol order; every path of
        // the target length is an accepted word, so no pruning is needed.
        let mut syms: Vec<u8> = Vec::with_capacity(len);
        let mut states: Vec<u32> = vec![0];
        let mut choice: Vec<u8> = vec![0];
        while let Some(&c) = choice.last() {
            if syms.len() == len {
                self.buffer.push(Word::from_syms(syms.clone()));
                choice.pop();
                states.pop();
                syms.pop();
                if let Some(top) = choice.last_mut() {
                    *top += 1;
                }
                continue;
            }
            if c as usize == self.aut.n_syms() {
                choice.pop();
                states.pop();
                syms.pop();
                if let Some(top) = choice.last_mut() {
                    *top += 1;
                }
                continue;
            }
            match self.aut.step(*states.last().unwrap(), c) {
                Some(t) => {
                    syms.push(c);
                    states.push(t);
                    choice.push(0);
                }
                None => *choice.last_mut().unwrap() += 1,
            }
        }
        self.buffered_len = Some(len);
    }
}

impl Iterator for NormalFormIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if self.len > self.up_to_length {
                return None;
            }
            if self.buffered_len != Some(self.len) {
                let len = self.len;
                self.fill(len);
                self.buffer.reverse();
            }
            match self.buffer.pop() {
                Some(w) => return Some(w),
                None => self.len += 1,
            }
        }
    }
}

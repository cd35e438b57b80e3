//! Multi-pattern matching over generator sequences.
//!
//! A single failure-link automaton serves two consumers: the rewrite index,
//! which needs every pattern occurrence during scanning, and the
//! normal-form counter, which needs the explicit state graph of words
//! avoiding all patterns. States are dense and transitions are stored as a
//! flat `state × alphabet` table, which is compact here because alphabets
//! never exceed a few dozen symbols.

use crate::word::Word;

pub const NO_LINK: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct Automaton {
    n_syms: usize,
    /// Fully resolved transition function, `next[state * n_syms + sym]`.
    next: Vec<u32>,
    depth: Vec<u32>,
    /// Pattern index terminating exactly at this state, or -1.
    pat_at: Vec<i32>,
    /// Nearest proper-suffix state that terminates a pattern.
    match_link: Vec<u32>,
    pat_lens: Vec<u32>,
    max_pat_len: usize,
}

impl Automaton {
    /// Builds the automaton for a set of distinct, nonempty patterns.
    pub fn build(patterns: &[Word], n_syms: usize) -> Self {
        debug_assert!(patterns.iter().all(|p| !p.is_empty()));
        // Goto trie.
        let mut goto: Vec<Vec<u32>> = vec![vec![NO_LINK; n_syms]];
        let mut depth: Vec<u32> = vec![0];
        let mut pat_at: Vec<i32> = vec![-1];
        for (idx, pat) in patterns.iter().enumerate() {
            let mut s = 0usize;
            for &c in pat.syms() {
                let slot = goto[s][c as usize];
                s = if slot == NO_LINK {
                    goto.push(vec![NO_LINK; n_syms]);
                    depth.push(depth[s] + 1);
                    pat_at.push(-1);
                    let t = goto.len() - 1;
                    goto[s][c as usize] = t as u32;
                    t
                } else {
                    slot as usize
                };
            }
            debug_assert_eq!(pat_at[s], -1, "duplicate pattern at index {idx}");
            pat_at[s] = idx as i32;
        }

        // Failure links by breadth-first traversal, then resolve the full
        // transition table in place.
        let n_states = goto.len();
        let mut fail = vec![0u32; n_states];
        let mut match_link = vec![NO_LINK; n_states];
        let mut queue = std::collections::VecDeque::new();
        for c in 0..n_syms {
            let t = goto[0][c];
            if t == NO_LINK {
                goto[0][c] = 0;
            } else {
                fail[t as usize] = 0;
                queue.push_back(t as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            let f = fail[s] as usize;
            match_link[s] = if pat_at[f] >= 0 { f as u32 } else { match_link[f] };
            for c in 0..n_syms {
                let t = goto[s][c];
                if t == NO_LINK {
                    goto[s][c] = goto[f][c];
                } else {
                    fail[t as usize] = goto[f][c];
                    queue.push_back(t as usize);
                }
            }
        }

        let mut next = Vec::with_capacity(n_states * n_syms);
        for row in &goto {
            next.extend_from_slice(row);
        }
        Automaton {
            n_syms,
            next,
            depth,
            pat_at,
            match_link,
            pat_lens: patterns.iter().map(|p| p.len() as u32).collect(),
            max_pat_len: patterns.iter().map(|p| p.len()).max().unwrap_or(0),
        }
    }

    pub fn n_states(&self) -> usize {
        self.depth.len()
    }

    pub fn n_syms(&self) -> usize {
        self.n_syms
    }

    pub fn max_pat_len(&self) -> usize {
        self.max_pat_len
    }

    pub fn pat_len(&self, idx: usize) -> usize {
        self.pat_lens[idx] as usize
    }

    #[inline]
    pub fn step(&self, state: u32, sym: u8) -> u32 {
        self.next[state as usize * self.n_syms + sym as usize]
    }

    /// True when reaching this state completes some pattern, either exactly
    /// or as a suffix.
    #[inline]
    pub fn is_terminal(&self, state: u32) -> bool {
        self.pat_at[state as usize] >= 0 || self.match_link[state as usize] != NO_LINK
    }

    /// Patterns ending at the current scan position, longest first.
    pub fn matches_at(&self, state: u32) -> MatchesAt<'_> {
        MatchesAt { automaton: self, state, own_done: false }
    }
}

pub struct MatchesAt<'a> {
    automaton: &'a Automaton,
    state: u32,
    own_done: bool,
}

impl Iterator for MatchesAt<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let a = self.automaton;
        loop {
            if self.state == NO_LINK {
                return None;
            }
            let s = self.state as usize;
            if !self.own_done {
                self.own_done = true;
                if a.pat_at[s] >= 0 {
                    return Some(a.pat_at[s] as usize);
                }
            } else {
                self.state = a.match_link[s];
                self.own_done = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn scan(a: &Automaton, w: &Word) -> Vec<(usize, usize)> {
        // (pattern, end-exclusive), sorted; matches sharing an end position
        // stream out longest-first, which is noise here
        let mut out = Vec::new();
        let mut s = 0u32;
        for (pos, &c) in w.syms().iter().enumerate() {
            s = a.step(s, c);
            for pat in a.matches_at(s) {
                out.push((pat, pos + 1));
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn finds_all_overlapping_occurrences() {
        let ab = Alphabet::new(&["x1", "x2"]).unwrap();
        let pats = vec![
            ab.parse_word("x1 x1").unwrap(),
            ab.parse_word("x2 x2").unwrap(),
            ab.parse_word("x2 x1 x2").unwrap(),
            ab.parse_word("x1 x2 x1 x2").unwrap(),
        ];
        let a = Automaton::build(&pats, 2);
        let hits = scan(&a, &ab.parse_word("x1 x1 x2 x2").unwrap());
        assert_eq!(hits, vec![(0, 2), (1, 4)]);

        let hits = scan(&a, &ab.parse_word("x1 x2 x1 x2").unwrap());
        assert_eq!(hits, vec![(2, 4), (3, 4)]);

        let hits = scan(&a, &ab.parse_word("x1 x2 x1").unwrap());
        assert!(hits.is_empty());
    }

    #[test]
    fn suffix_matches_are_reported_through_links() {
        let ab = Alphabet::new(&["a", "b"]).unwrap();
        let pats = vec![ab.parse_word("a b a").unwrap(), ab.parse_word("b a").unwrap()];
        let a = Automaton::build(&pats, 2);
        let hits = scan(&a, &ab.parse_word("a a b a").unwrap());
        assert_eq!(hits, vec![(0, 4), (1, 4)]);
    }

    #[test]
    fn terminal_states_absorb_suffix_hits() {
        let ab = Alphabet::new(&["a", "b"]).unwrap();
        let pats = vec![ab.parse_word("a a").unwrap()];
        let a = Automaton::build(&pats, 2);
        let mut s = 0u32;
        for &c in ab.parse_word("b a a").unwrap().syms() {
            s = a.step(s, c);
        }
        assert!(a.is_terminal(s));
    }
}

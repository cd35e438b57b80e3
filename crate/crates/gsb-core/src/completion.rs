//! Composition analysis and Shirshov completion.
//!
//! A basis is closed when every composition of every ordered pair of
//! elements reduces to zero. Completion saturates round by round: all
//! compositions among the current elements are reduced against the frozen
//! round-start basis, and the nonzero survivors are then swept in deg-lex
//! order of leading word, each re-reduced against the basis plus the
//! survivors accepted before it and adjoined only if still nonzero. The
//! sweep keeps one round's haul from drowning in its own consequences —
//! without it the E-series runs explode into six-figure element counts.
//! The loop repeats until a full round accepts nothing or a limit is hit.
//! Interreduction runs once at the end.
//!
//! Presentations of groups are binomial, so the driver normally works on
//! word pairs; the polynomial path handles arbitrary coefficients and
//! doubles as an independent cross-check of the word path.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{Poly, Rule};
use crate::rewrite::Basis;
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionKind {
    /// Proper overlap: a suffix of one leading word is a prefix of the
    /// other, with neither containing the other at that alignment.
    Intersection,
    /// One leading word occurs as a factor of the other.
    Inclusion,
}

/// One composition of an ordered pair `(f, g)`.
#[derive(Debug, Clone)]
pub struct CompositionCandidate {
    pub kind: CompositionKind,
    /// The ambiguous word both reductions act on: `lw(f)·b = a·lw(g)` for
    /// intersections, `lw(f) = a·lw(g)·b` for inclusions.
    pub overlap: Word,
    pub a: Word,
    pub b: Word,
    pub value: Poly,
}

/// Compositions of the ordered pair `(f, g)`; both polynomials must be
/// monic and nonzero. Pass `f` and `g` in both orders to see the full
/// composition set — the two orders are genuinely different.
pub fn compositions(f: &Poly, g: &Poly, alphabet: &Alphabet) -> Result<Vec<CompositionCandidate>> {
    compositions_impl(f, g, f == g, alphabet)
}

fn compositions_impl(
    f: &Poly,
    g: &Poly,
    same_element: bool,
    alphabet: &Alphabet,
) -> Result<Vec<CompositionCandidate>> {
    let f = &f.make_monic()?;
    let g = &g.make_monic()?;
    let fw = &f.leading()?.word.clone();
    let gw = &g.leading()?.word.clone();
    let mut out = Vec::new();
    let top = fw.len().min(gw.len());
    for t in 1..top {
        if fw.suffix_matches_prefix(gw, t) {
            let a = fw.subword(0, fw.len() - t);
            let b = gw.subword(t, gw.len());
            let value = f
                .in_context(&[], b.syms())
                .sub(&g.in_context(a.syms(), &[]), alphabet);
            out.push(CompositionCandidate {
                kind: CompositionKind::Intersection,
                overlap: fw.concat(&b),
                a,
                b,
                value,
            });
        }
    }
    for s in fw.occurrences(gw) {
        let a = fw.subword(0, s);
        let b = fw.subword(s + gw.len(), fw.len());
        if same_element && a.is_empty() && b.is_empty() {
            continue;
        }
        let value = f.sub(&g.in_context(a.syms(), b.syms()), alphabet);
        out.push(CompositionCandidate {
            kind: CompositionKind::Inclusion,
            overlap: fw.clone(),
            a,
            b,
            value,
        });
    }
    Ok(out)
}

/// Word pairs whose normal forms must agree, one per composition of the
/// ordered rule pair. Equivalent to [`compositions`] on the corresponding
/// binomials: the candidate value is always `v - u` for the returned
/// `(u, v)`.
fn rule_candidates(f: &Rule, g: &Rule, same_element: bool, out: &mut Vec<(Word, Word)>) {
    let (fw, gw) = (&f.lhs, &g.lhs);
    let top = fw.len().min(gw.len());
    for t in 1..top {
        if fw.suffix_matches_prefix(gw, t) {
            let a = &fw.syms()[..fw.len() - t];
            let b = &gw.syms()[t..];
            out.push((f.rhs.in_context(&[], b), g.rhs.in_context(a, &[])));
        }
    }
    for s in fw.occurrences(gw) {
        let a = &fw.syms()[..s];
        let b = &fw.syms()[s + gw.len()..];
        if same_element && a.is_empty() && b.is_empty() {
            continue;
        }
        out.push((f.rhs.clone(), g.rhs.in_context(a, b)));
    }
}

/// A composition that failed to reduce to zero.
#[derive(Debug, Clone)]
pub struct Witness {
    pub left: usize,
    pub right: usize,
    pub kind: CompositionKind,
    pub overlap: Word,
    pub normal_form: Poly,
}

#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub closed: bool,
    pub pairs: usize,
    pub candidates: usize,
    pub witnesses: Vec<Witness>,
}

/// Reduces every composition of every ordered pair (including each element
/// against itself) and reports the survivors.
pub fn is_gs_basis(basis: &Basis) -> ClosureReport {
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let per_pair: Vec<(usize, Vec<Witness>)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut witnesses = Vec::new();
            let mut checked = 0usize;
            match basis.rules() {
                Ok(rules) => {
                    let mut cands = Vec::new();
                    rule_candidates(&rules[i], &rules[j], i == j, &mut cands);
                    let kinds = candidate_kinds(&rules[i].lhs, &rules[j].lhs, i == j);
                    for ((u, v), (kind, overlap)) in cands.into_iter().zip(kinds) {
                        checked += 1;
                        let nu = basis.nf_word(&u).expect("binomial basis");
                        let nv = basis.nf_word(&v).expect("binomial basis");
                        if nu != nv {
                            witnesses.push(Witness {
                                left: i,
                                right: j,
                                kind,
                                overlap,
                                normal_form: Poly::word_difference(&nv, &nu, basis.alphabet()),
                            });
                        }
                    }
                }
                Err(_) => {
                    let cands = compositions_impl(
                        &basis.elements()[i],
                        &basis.elements()[j],
                        i == j,
                        basis.alphabet(),
                    )
                    .expect("monic basis elements");
                    for cand in cands {
                        checked += 1;
                        let nf = basis.normal_form(&cand.value);
                        if !nf.is_zero() {
                            witnesses.push(Witness {
                                left: i,
                                right: j,
                                kind: cand.kind,
                                overlap: cand.overlap,
                                normal_form: nf,
                            });
                        }
                    }
                }
            }
            (checked, witnesses)
        })
        .collect();
    let mut report = ClosureReport {
        closed: true,
        pairs: pairs.len(),
        candidates: 0,
        witnesses: Vec::new(),
    };
    for (checked, ws) in per_pair {
        report.candidates += checked;
        if !ws.is_empty() {
            report.closed = false;
            report.witnesses.extend(ws);
        }
    }
    report
}

/// The (kind, overlap) metadata in the same order `rule_candidates` emits
/// pairs.
fn candidate_kinds(fw: &Word, gw: &Word, same_element: bool) -> Vec<(CompositionKind, Word)> {
    let mut out = Vec::new();
    let top = fw.len().min(gw.len());
    for t in 1..top {
        if fw.suffix_matches_prefix(gw, t) {
            out.push((
                CompositionKind::Intersection,
                fw.concat(&gw.subword(t, gw.len())),
            ));
        }
    }
    for s in fw.occurrences(gw) {
        let whole = s == 0 && s + gw.len() == fw.len();
        if same_element && whole {
            continue;
        }
        out.push((CompositionKind::Inclusion, fw.clone()));
    }
    out
}

/// Runs the closure check and records the outcome on the basis.
pub fn verify(basis: &mut Basis) -> ClosureReport {
    let report = is_gs_basis(basis);
    basis.set_verified(report.closed);
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Emitted elements whose leading word exceeds this degree are dropped
    /// and the run is marked truncated.
    pub max_degree: Option<usize>,
    pub max_rounds: Option<usize>,
    pub max_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: Some(64), max_rounds: None, max_elements: 500_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    Truncated { reason: String },
}

#[derive(Debug)]
pub struct CompletionReport {
    pub basis: Basis,
    pub status: CompletionStatus,
    pub rounds: usize,
    /// Elements adjoined during saturation, in insertion order (before
    /// interreduction).
    pub added: Vec<Poly>,
    pub added_per_round: Vec<usize>,
    pub max_degree_reached: usize,
}

impl CompletionReport {
    pub fn is_complete(&self) -> bool {
        matches!(self.status, CompletionStatus::Complete)
    }
}

/// End-of-round snapshot handed to a completion progress callback. The
/// element list is the full current set (initial + adjoined), suitable for
/// checkpointing.
pub struct RoundEvent<'a> {
    pub round: usize,
    pub elements: &'a [Poly],
    pub added_this_round: usize,
    /// Composition candidates evaluated this round (pre-deduplication).
    pub candidates: usize,
    pub max_degree_reached: usize,
}

pub type Progress<'a> = &'a mut dyn FnMut(&RoundEvent<'_>);

/// Shirshov completion of an initial element list.
pub fn shirshov_complete(
    initial: Vec<Poly>,
    alphabet: &Alphabet,
    limits: &Limits,
) -> Result<CompletionReport> {
    shirshov_complete_with(initial, alphabet, limits, None)
}

/// [`shirshov_complete`] with an observer invoked after every round.
pub fn shirshov_complete_with(
    initial: Vec<Poly>,
    alphabet: &Alphabet,
    limits: &Limits,
    progress: Option<Progress<'_>>,
) -> Result<CompletionReport> {
    let mut elems: Vec<Poly> = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for p in initial {
        if p.is_zero() {
            return Err(Error::ZeroElement);
        }
        let p = p.make_monic()?;
        if p.leading()?.word.is_empty() {
            return Err(Error::EmptyLeadingWord);
        }
        if seen.insert(poly_fingerprint(&p)) {
            elems.push(p);
        }
    }
    let binomial = elems.iter().all(|p| p.as_rule().is_ok());
    if binomial {
        complete_rules(elems, alphabet, limits, progress)
    } else {
        complete_polys(elems, alphabet, limits, progress)
    }
}

fn poly_fingerprint(p: &Poly) -> Vec<u8> {
    let mut out = Vec::new();
    for t in p.terms() {
        out.extend_from_slice(t.coeff.to_string().as_bytes());
        out.push(b'|');
        out.extend_from_slice(t.word.syms());
        out.push(b';');
    }
    out
}

/// Accepted-rule count between rebuilds of the in-round reduction index.
const INDEX_REBUILD_BATCH: usize = 64;

fn index_over(rules: &[Rule], alphabet: &Alphabet) -> Result<crate::rewrite::LeadIndex> {
    let leads: Vec<(Word, usize)> =
        rules.iter().enumerate().map(|(i, r)| (r.lhs.clone(), i)).collect();
    crate::rewrite::LeadIndex::build(&leads, alphabet.len())
}

fn complete_rules(
    elems: Vec<Poly>,
    alphabet: &Alphabet,
    limits: &Limits,
    mut progress: Option<Progress<'_>>,
) -> Result<CompletionReport> {
    let mut rules: Vec<Rule> = elems.iter().map(|p| p.as_rule().unwrap()).collect();
    let mut known: HashSet<Rule>;
    let mut rounds = 0usize;
    let mut added: Vec<Poly> = Vec::new();
    let mut added_per_round = Vec::new();
    let mut max_degree_reached = rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
    let mut truncated: Option<String> = None;

    loop {
        rounds += 1;
        // Interreducing up front keeps each round's pair matrix quadratic
        // in the basis that matters, not in the debris of earlier rounds:
        // without this the deep exceptional runs balloon into tens of
        // thousands of mutually redundant elements. A dropped rule stays
        // droppable — it reduces to zero through whatever displaced it —
        // and the membership set is rebuilt so that anything genuinely
        // irreducible later is free to re-enter.
        rules = interreduce_rules(rules, alphabet)?;
        known = rules.iter().cloned().collect();
        let snapshot = Basis::new(
            alphabet.clone(),
            rules.iter().map(Rule::to_poly).collect(),
        )?;
        let n = rules.len();

        // Candidates are evaluated as they are generated — one row of the
        // pair matrix at a time — so a round's memory stays proportional to
        // the survivors, not to the candidate count. Survivor order is
        // canonicalized below, so chunking does not affect the result.
        let per_row: Vec<(usize, Vec<Rule>)> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut scratch = Vec::new();
                let mut row_seen: HashSet<(Word, Word)> = HashSet::new();
                let mut survivors: Vec<Rule> = Vec::new();
                let mut checked = 0usize;
                for j in 0..n {
                    scratch.clear();
                    rule_candidates(&rules[i], &rules[j], i == j, &mut scratch);
                    for (u, v) in scratch.drain(..) {
                        if u == v {
                            continue;
                        }
                        checked += 1;
                        if !row_seen.insert(order_pair(&u, &v)) {
                            continue;
                        }
                        let nu = snapshot.nf_word(&u).expect("binomial basis");
                        let nv = snapshot.nf_word(&v).expect("binomial basis");
                        if nu != nv {
                            survivors.push(orient(nu, nv, alphabet));
                        }
                    }
                }
                (checked, survivors)
            })
            .collect();

        let mut candidates = 0usize;
        let mut fresh: Vec<Rule> = Vec::new();
        let mut fresh_seen: HashSet<Rule> = HashSet::new();
        for (checked, survivors) in per_row {
            candidates += checked;
            for rule in survivors {
                if !known.contains(&rule) && fresh_seen.insert(rule.clone()) {
                    fresh.push(rule);
                }
            }
        }
        drop(fresh_seen);
        fresh.sort_by(|a, b| {
            alphabet
                .compare(&a.lhs, &b.lhs)
                .then_with(|| alphabet.compare(&a.rhs, &b.rhs))
        });

        // Acceptance sweep, smallest leading word first: each survivor is
        // re-reduced against the basis plus the survivors accepted before
        // it, so one small new rule silences the crowd of its own
        // consequences inside the same round. The index over the combined
        // rule list is rebuilt in batches.
        let mut combined = rules;
        let mut combined_index = snapshot.index().clone();
        let mut unindexed = 0usize;
        let mut added_this_round = 0usize;
        for rule in fresh {
            let nl = crate::rewrite::nf_syms(&combined_index, &combined, rule.lhs.syms());
            let nr = crate::rewrite::nf_syms(&combined_index, &combined, rule.rhs.syms());
            if nl == nr {
                continue;
            }
            let r = orient(nl, nr, alphabet);
            if known.contains(&r) {
                continue;
            }
            if let Some(limit) = limits.max_degree {
                if r.lhs.len() > limit {
                    truncated.get_or_insert_with(|| "max_degree".to_owned());
                    continue;
                }
            }
            max_degree_reached = max_degree_reached.max(r.lhs.len());
            known.insert(r.clone());
            added.push(r.to_poly());
            combined.push(r);
            added_this_round += 1;
            unindexed += 1;
            if unindexed >= INDEX_REBUILD_BATCH {
                combined_index = index_over(&combined, alphabet)?;
                unindexed = 0;
            }
        }
        rules = combined;
        added_per_round.push(added_this_round);

        if let Some(cb) = progress.as_mut() {
            let elements: Vec<Poly> = rules.iter().map(Rule::to_poly).collect();
            cb(&RoundEvent {
                round: rounds,
                elements: &elements,
                added_this_round,
                candidates,
                max_degree_reached,
            });
        }
        if added_this_round == 0 {
            break;
        }
        if rules.len() > limits.max_elements {
            truncated.get_or_insert_with(|| "max_elements".to_owned());
            break;
        }
        if let Some(max_rounds) = limits.max_rounds {
            if rounds >= max_rounds {
                truncated.get_or_insert_with(|| "max_rounds".to_owned());
                break;
            }
        }
    }

    let reduced = interreduce_rules(rules, alphabet)?;
    let mut basis = Basis::new(
        alphabet.clone(),
        reduced.iter().map(Rule::to_poly).collect(),
    )?;
    let status = match truncated {
        None => {
            let recheck = is_gs_basis(&basis);
            assert!(
                recheck.closed,
                "saturation finished but the reduced basis is not closed"
            );
            basis.set_verified(true);
            CompletionStatus::Complete
        }
        Some(reason) => CompletionStatus::Truncated { reason },
    };
    Ok(CompletionReport { basis, status, rounds, added, added_per_round, max_degree_reached })
}

fn order_pair(u: &Word, v: &Word) -> (Word, Word) {
    let key = |w: &Word| (w.len(), w.syms().to_vec());
    if key(u) <= key(v) {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    }
}

fn orient(u: Word, v: Word, alphabet: &Alphabet) -> Rule {
    match alphabet.compare(&u, &v) {
        std::cmp::Ordering::Greater => Rule { lhs: u, rhs: v },
        _ => Rule { lhs: v, rhs: u },
    }
}

fn complete_polys(
    mut elems: Vec<Poly>,
    alphabet: &Alphabet,
    limits: &Limits,
    mut progress: Option<Progress<'_>>,
) -> Result<CompletionReport> {
    let mut known: HashSet<Vec<u8>>;
    let mut rounds = 0usize;
    let mut added: Vec<Poly> = Vec::new();
    let mut added_per_round = Vec::new();
    let mut max_degree_reached = elems
        .iter()
        .map(|p| p.leading().unwrap().word.len())
        .max()
        .unwrap_or(0);
    let mut truncated: Option<String> = None;

    loop {
        rounds += 1;
        let reduced = interreduce(&Basis::new(alphabet.clone(), elems.clone())?)?;
        elems = reduced.elements().to_vec();
        known = elems.iter().map(poly_fingerprint).collect();
        let snapshot = Basis::new(alphabet.clone(), elems.clone())?;
        let n = elems.len();
        let mut candidates = 0usize;
        let mut fresh: Vec<Poly> = Vec::new();
        let mut fresh_seen: HashSet<Vec<u8>> = HashSet::new();
        for i in 0..n {
            for j in 0..n {
                let cands = compositions_impl(&elems[i], &elems[j], i == j, alphabet)?;
                for cand in cands {
                    candidates += 1;
                    let nf = snapshot.normal_form(&cand.value);
                    if nf.is_zero() {
                        continue;
                    }
                    let monic = nf.make_monic()?;
                    let fp = poly_fingerprint(&monic);
                    if !known.contains(&fp) && fresh_seen.insert(fp) {
                        fresh.push(monic);
                    }
                }
            }
        }
        drop(fresh_seen);
        fresh.sort_by(|a, b| {
            alphabet.compare(
                &a.leading().unwrap().word,
                &b.leading().unwrap().word,
            )
        });

        // Same acceptance sweep as the rule path: smallest leading word
        // first, re-reduced against the round-start set plus this round's
        // earlier acceptances (reducer rebuilt in batches).
        let mut reducer = snapshot;
        let mut unindexed = 0usize;
        let mut added_this_round = 0usize;
        for p in fresh {
            let nf = reducer.normal_form(&p);
            if nf.is_zero() {
                continue;
            }
            let monic = nf.make_monic()?;
            if let Some(limit) = limits.max_degree {
                if monic.leading()?.word.len() > limit {
                    truncated.get_or_insert_with(|| "max_degree".to_owned());
                    continue;
                }
            }
            let fp = poly_fingerprint(&monic);
            if known.contains(&fp) {
                continue;
            }
            max_degree_reached = max_degree_reached.max(monic.leading()?.word.len());
            known.insert(fp);
            added.push(monic.clone());
            elems.push(monic);
            added_this_round += 1;
            unindexed += 1;
            if unindexed >= INDEX_REBUILD_BATCH {
                reducer = Basis::new(alphabet.clone(), elems.clone())?;
                unindexed = 0;
            }
        }
        added_per_round.push(added_this_round);
        if let Some(cb) = progress.as_mut() {
            cb(&RoundEvent {
                round: rounds,
                elements: &elems,
                added_this_round,
                candidates,
                max_degree_reached,
            });
        }
        if added_this_round == 0 {
            break;
        }
        if elems.len() > limits.max_elements {
            truncated.get_or_insert_with(|| "max_elements".to_owned());
            break;
        }
        if let Some(max_rounds) = limits.max_rounds {
            if rounds >= max_rounds {
                truncated.get_or_insert_with(|| "max_rounds".to_owned());
                break;
            }
        }
    }

    let basis = Basis::new(alphabet.clone(), elems)?;
    let mut basis = interreduce(&basis)?;
    let status = match truncated {
        None => {
            let recheck = is_gs_basis(&basis);
            assert!(
                recheck.closed,
                "saturation finished but the reduced basis is not closed"
            );
            basis.set_verified(true);
            CompletionStatus::Complete
        }
        Some(reason) => CompletionStatus::Truncated { reason },
    };
    Ok(CompletionReport { basis, status, rounds, added, added_per_round, max_degree_reached })
}

/// Interreduction: keeps only elements with factor-minimal leading words
/// and rewrites every tail to normal form modulo the kept set. On a closed
/// basis the result is the unique reduced basis.
pub fn interreduce(basis: &Basis) -> Result<Basis> {
    if let Ok(rules) = basis.rules() {
        let reduced = interreduce_rules(rules.to_vec(), basis.alphabet())?;
        let mut out = Basis::new(
            basis.alphabet().clone(),
            reduced.iter().map(Rule::to_poly).collect(),
        )?;
        out.set_verified(basis.is_verified());
        return Ok(out);
    }

    let alphabet = basis.alphabet();
    let mut keep: Vec<usize> = Vec::new();
    for (i, p) in basis.elements().iter().enumerate() {
        let lead = &p.leading()?.word;
        let covered = basis.index().find_all(lead.syms()).into_iter().any(|occ| {
            occ.len < lead.len() || (occ.len == lead.len() && occ.elem != i)
        });
        if !covered {
            keep.push(i);
        }
    }
    let kept: Vec<Poly> = keep.iter().map(|&i| basis.elements()[i].clone()).collect();
    let stage = Basis::new(alphabet.clone(), kept.clone())?;
    let mut out: Vec<Poly> = Vec::new();
    let mut seen = HashSet::new();
    for p in &kept {
        let lead = p.leading()?.clone();
        let tail = p.sub(&Poly::monomial(lead.coeff.clone(), lead.word.clone()), alphabet);
        let reduced_tail = stage.normal_form(&tail);
        let q = Poly::monomial(lead.coeff, lead.word).add(&reduced_tail, alphabet);
        if seen.insert(poly_fingerprint(&q)) {
            out.push(q);
        }
    }
    out.sort_by(|a, b| {
        alphabet.compare(&a.leading().unwrap().word, &b.leading().unwrap().word)
    });
    let mut reduced = Basis::new(alphabet.clone(), out)?;
    reduced.set_verified(basis.is_verified());
    Ok(reduced)
}

fn interreduce_rules(rules: Vec<Rule>, alphabet: &Alphabet) -> Result<Vec<Rule>> {
    if rules.is_empty() {
        return Ok(rules);
    }
    let stage = Basis::new(alphabet.clone(), rules.iter().map(Rule::to_poly).collect())?;
    let mut keep: Vec<usize> = Vec::new();
    for (i, r) in rules.iter().enumerate() {
        let covered = stage.index().find_all(r.lhs.syms()).into_iter().any(|occ| {
            occ.len < r.lhs.len() || (occ.len == r.lhs.len() && occ.elem != i)
        });
        if !covered {
            keep.push(i);
        }
    }
    let kept: Vec<Rule> = keep.into_iter().map(|i| rules[i].clone()).collect();
    let stage = Basis::new(alphabet.clone(), kept.iter().map(Rule::to_poly).collect())?;
    let mut out: Vec<Rule> = Vec::new();
    let mut seen = HashSet::new();
    for r in &kept {
        let rhs = stage.nf_word(&r.rhs)?;
        let rule = Rule { lhs: r.lhs.clone(), rhs };
        if seen.insert(rule.clone()) {
            out.push(rule);
        }
    }
    out.sort_by(|a, b| alphabet.compare(&a.lhs, &b.lhs));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alphabet2() -> Alphabet {
        Alphabet::new(&["x1", "x2"]).unwrap()
    }

    fn pw(a: &Alphabet, l: &str, r: &str) -> Poly {
        Poly::word_difference(&a.parse_word(l).unwrap(), &a.parse_word(r).unwrap(), a)
    }

    fn a2_initial(a: &Alphabet) -> Vec<Poly> {
        vec![
            pw(a, "x1 x1", "1"),
            pw(a, "x2 x2", "1"),
            pw(a, "x2 x1 x2", "x1 x2 x1"),
        ]
    }

    #[test]
    fn composition_of_braid_with_square() {
        let a = alphabet2();
        let braid = pw(&a, "x2 x1 x2", "x1 x2 x1");
        let square = pw(&a, "x2 x2", "1");
        let cands = compositions(&braid, &square, &a).unwrap();
        assert_eq!(cands.len(), 1);
        let c = &cands[0];
        assert_eq!(c.kind, CompositionKind::Intersection);
        assert_eq!(c.overlap, a.parse_word("x2 x1 x2 x2").unwrap());
        let expected = pw(&a, "x2 x1", "x1 x2 x1 x2");
        assert_eq!(c.value, expected);
    }

    #[test]
    fn self_composition_skips_the_trivial_inclusion() {
        let a = alphabet2();
        let braid = pw(&a, "x2 x1 x2", "x1 x2 x1");
        let cands = compositions(&braid, &braid, &a).unwrap();
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].kind, CompositionKind::Intersection);
        assert_eq!(cands[0].overlap, a.parse_word("x2 x1 x2 x1 x2").unwrap());
    }

    #[test]
    fn inclusion_composition_subtracts_in_context() {
        let a = alphabet2();
        let big = pw(&a, "x1 x2 x1 x2", "x2 x1");
        let braid = pw(&a, "x2 x1 x2", "x1 x2 x1");
        let cands = compositions(&big, &braid, &a).unwrap();
        // The trailing x2 also overlaps the braid's head, so an
        // intersection rides along with the inclusion.
        assert_eq!(cands.len(), 2);
        assert_eq!(cands[0].kind, CompositionKind::Intersection);
        let c = &cands[1];
        assert_eq!(c.kind, CompositionKind::Inclusion);
        assert_eq!(c.a, a.parse_word("x1").unwrap());
        assert!(c.b.is_empty());
        assert_eq!(c.value, pw(&a, "x1 x1 x2 x1", "x2 x1"));
    }

    #[test]
    fn ordered_pairs_differ() {
        let a = alphabet2();
        let braid = pw(&a, "x2 x1 x2", "x1 x2 x1");
        let square = pw(&a, "x1 x1", "1");
        // Braid ends in x2, the x1 square starts with x1: no composition
        // either way round.
        assert!(compositions(&braid, &square, &a).unwrap().is_empty());
        assert!(compositions(&square, &braid, &a).unwrap().is_empty());
        // The x2 square does overlap the braid on one side only.
        let square2 = pw(&a, "x2 x2", "1");
        assert_eq!(compositions(&square2, &braid, &a).unwrap().len(), 1);
        assert_eq!(compositions(&braid, &square2, &a).unwrap().len(), 1);
    }

    #[test]
    fn dihedral_a2_is_already_closed() {
        let a = alphabet2();
        let basis = Basis::new(a.clone(), a2_initial(&a)).unwrap();
        let report = is_gs_basis(&basis);
        assert!(report.closed, "witnesses: {:?}", report.witnesses);
    }

    #[test]
    fn completion_of_a2_is_a_fixed_point() {
        let a = alphabet2();
        let report = shirshov_complete(a2_initial(&a), &a, &Limits::default()).unwrap();
        assert!(report.is_complete());
        assert_eq!(report.basis.len(), 3);
        assert!(report.basis.is_verified());
        assert_eq!(report.rounds, 1);
    }

    #[test]
    fn g2_initial_relations_are_already_a_basis() {
        let a = alphabet2();
        let initial = vec![
            pw(&a, "x1 x1", "1"),
            pw(&a, "x2 x2", "1"),
            pw(&a, "x2 x1 x2 x1 x2 x1", "x1 x2 x1 x2 x1 x2"),
        ];
        let report = shirshov_complete(initial.clone(), &a, &Limits::default()).unwrap();
        assert!(report.is_complete());
        assert_eq!(report.basis.len(), 3);
        let leads = report.basis.leading_words();
        assert_eq!(leads[2], a.parse_word("x2 x1 x2 x1 x2 x1").unwrap());
    }

    #[test]
    fn infinite_dihedral_completes_but_grows_forever() {
        let a = alphabet2();
        let initial = vec![pw(&a, "x1 x1", "1"), pw(&a, "x2 x2", "1")];
        let report = shirshov_complete(initial, &a, &Limits::default()).unwrap();
        assert!(report.is_complete());
        assert_eq!(report.basis.len(), 2);
    }

    #[test]
    fn round_limit_truncates() {
        let a = Alphabet::new(&["x1", "x2", "x3"]).unwrap();
        // A3 needs more than one round to close.
        let initial = vec![
            pw(&a, "x1 x1", "1"),
            pw(&a, "x2 x2", "1"),
            pw(&a, "x3 x3", "1"),
            pw(&a, "x2 x1 x2", "x1 x2 x1"),
            pw(&a, "x3 x2 x3", "x2 x3 x2"),
            pw(&a, "x3 x1", "x1 x3"),
        ];
        let limited = Limits { max_rounds: Some(1), ..Limits::default() };
        let report = shirshov_complete(initial.clone(), &a, &limited).unwrap();
        assert!(matches!(
            report.status,
            CompletionStatus::Truncated { ref reason } if reason == "max_rounds"
        ));

        let full = shirshov_complete(initial, &a, &Limits::default()).unwrap();
        assert!(full.is_complete());
        assert_eq!(full.basis.len(), 7);
        let expect = a.parse_word("x3 x2 x1 x3").unwrap();
        assert!(full.basis.leading_words().contains(&expect));
    }

    #[test]
    fn interreduce_drops_covered_leads_and_reduces_tails() {
        let a = alphabet2();
        let mut elems = a2_initial(&a);
        // Redundant: lead contains the braid lead as a factor.
        elems.push(pw(&a, "x1 x2 x1 x2", "x2 x1"));
        // Tail not in normal form.
        elems.push(pw(&a, "x2 x1 x2", "x1 x1 x1 x2 x1"));
        let basis = Basis::new(a.clone(), elems).unwrap();
        let reduced = interreduce(&basis).unwrap();
        assert_eq!(reduced.len(), 3);
        let braid = reduced
            .elements()
            .iter()
            .find(|p| p.leading().unwrap().word.len() == 3)
            .unwrap();
        assert_eq!(
            braid.as_rule().unwrap().rhs,
            a.parse_word("x1 x2 x1").unwrap()
        );
    }

    #[test]
    fn polynomial_path_handles_rational_coefficients() {
        let a = alphabet2();
        // x2·x1 = 2·x1·x2 plus x2² = x1: compositions force 1/2 coefficients.
        let two = num::BigRational::from_integer(2.into());
        let q_plane = Poly::from_terms(
            vec![
                crate::poly::Term { coeff: num::BigRational::from_integer(1.into()), word: a.parse_word("x2 x1").unwrap() },
                crate::poly::Term { coeff: -two, word: a.parse_word("x1 x2").unwrap() },
            ],
            &a,
        );
        let squares = pw(&a, "x2 x2", "x1");
        let report =
            shirshov_complete(vec![q_plane, squares], &a, &Limits::default()).unwrap();
        assert!(report.is_complete());
        let closure = is_gs_basis(&report.basis);
        assert!(closure.closed);
        // All leading coefficients stay 1 after completion.
        for p in report.basis.elements() {
            assert!(p.leading().unwrap().coeff.is_integer());
        }
    }
}

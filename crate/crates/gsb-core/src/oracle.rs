//! Independent ground truth for the Coxeter presets: crystallographic root
//! systems, the reflection action as permutations of roots, exact group
//! orders through a stabilizer chain, and randomized cross-checking of the
//! rewriting engine against the permutation representation.
//!
//! Nothing here touches the rewriting machinery's internals — orders and
//! word-problem answers are derived purely from integer root coordinates,
//! so agreement with the normal-form side is meaningful evidence.

use std::collections::{HashMap, VecDeque};

use num::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coxeter::{builtin_preset, CoxeterMatrix, PresetType};
use crate::error::{Error, Result};
use crate::growth::enumerate_normal_forms;
use crate::rewrite::Basis;
use crate::word::Word;

/// Integer Cartan matrix for a crystallographic Coxeter matrix.
///
/// Off-diagonal entries per edge label: `m = 2 → (0, 0)`, `m = 3 → (-1,
/// -1)`, `m = 4 → (-1, -2)`, `m = 6 → (-1, -3)`, with the larger magnitude
/// assigned to the higher-indexed side.  Any consistent assignment gives a
/// group-isomorphic permutation action; fixing one keeps root counts
/// reproducible.
pub fn cartan_matrix(matrix: &CoxeterMatrix) -> Result<Vec<Vec<i64>>> {
    let n = matrix.n();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        for j in (i + 1)..n {
            let (lo_hi, hi_lo) = match matrix.get(i, j) {
                Some(2) => (0, 0),
                Some(3) => (-1, -1),
                Some(4) => (-1, -2),
                Some(6) => (-1, -3),
                m => {
                    let label =
                        m.map_or_else(|| "infinity".to_string(), |v| v.to_string());
                    return Err(Error::BadMatrix(format!(
                        "edge ({i},{j}) has non-crystallographic label {label}"
                    )));
                }
            };
            c[i][j] = lo_hi;
            c[j][i] = hi_lo;
        }
    }
    Ok(c)
}

/// A finite crystallographic root system in simple-root coordinates,
/// together with the action of each simple reflection as a permutation of
/// the root list.
#[derive(Debug, Clone)]
pub struct RootSystem {
    rank: usize,
    roots: Vec<Vec<i64>>,
    reflections: Vec<Vec<u32>>,
}

const ROOT_CLOSURE_CAP: usize = 100_000;

impl RootSystem {
    /// Closes the simple roots under all simple reflections
    /// (`s_i(v) = v - <v, i> a_i` with the integer Cartan pairing) and
    /// freezes the result in a deterministic order.  Diverging closure —
    /// an infinite Weyl group — is reported as an error.
    pub fn new(matrix: &CoxeterMatrix) -> Result<Self> {
        let cartan = cartan_matrix(matrix)?;
        let rank = matrix.n();
        let reflect = |i: usize, v: &[i64]| -> Vec<i64> {
            let pairing: i64 = (0..rank).map(|j| cartan[i][j] * v[j]).sum();
            let mut out = v.to_vec();
            out[i] -= pairing;
            out
        };
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            index.insert(v.clone(), roots.len());
            queue.push_back(roots.len());
            roots.push(v);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..rank {
                let image = reflect(i, &roots[r].clone());
                if !index.contains_key(&image) {
                    if roots.len() >= ROOT_CLOSURE_CAP {
                        return Err(Error::BadMatrix(
                            "root closure does not terminate (infinite Weyl group?)"
                                .to_string(),
                        ));
                    }
                    index.insert(image.clone(), roots.len());
                    queue.push_back(roots.len());
                    roots.push(image);
                }
            }
        }
        roots.sort();
        let index: HashMap<&Vec<i64>, u32> =
            roots.iter().enumerate().map(|(k, v)| (v, k as u32)).collect();
        let mut reflections = Vec::with_capacity(rank);
        for i in 0..rank {
            let perm: Vec<u32> = roots.iter().map(|v| index[&reflect(i, v)]).collect();
            reflections.push(perm);
        }
        Ok(RootSystem { rank, roots, reflections })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// The permutation of root indices induced by the `i`-th simple
    /// reflection.
    pub fn reflection(&self, i: usize) -> &[u32] {
        &self.reflections[i]
    }

    pub fn generator_perms(&self) -> Vec<Vec<u32>> {
        self.reflections.clone()
    }
}

/// Builds the root system of a builtin diagram preset.
pub fn root_system(ty: PresetType) -> Result<RootSystem> {
    RootSystem::new(&builtin_preset(ty)?.matrix)
}

fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &v)| v as usize == i)
}

fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    q.iter().map(|&i| p[i as usize]).collect()
}

fn inverse(p: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as u32;
    }
    out
}

/// Image of a word under the permutation representation: the composition
/// of the generator permutations in word order (empty word → identity).
pub fn word_to_perm(w: &Word, perms: &[Vec<u32>], degree: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0..degree as u32).collect();
    for &s in w.syms() {
        out = compose(&out, &perms[s as usize]);
    }
    out
}

struct Level {
    base: usize,
    gens: Vec<Vec<u32>>,
    /// `transversal[p]` maps `base` to `p`.
    transversal: HashMap<usize, Vec<u32>>,
    orbit_order: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let identity: Vec<u32> = (0..degree as u32).collect();
        Level {
            base,
            gens: Vec::new(),
            transversal: HashMap::from([(base, identity)]),
            orbit_order: vec![base],
        }
    }
}

/// A permutation group given by generators, with the stabilizer chain that
/// certifies its order.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Vec<u32>>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// Deterministic incremental stabilizer-chain construction.  Base
    /// points are chosen as the smallest point moved by the first
    /// generator that needs a new level, so repeated runs agree exactly.
    pub fn from_generators(degree: usize, generators: &[Vec<u32>]) -> Self {
        let mut group =
            PermGroup { degree, generators: generators.to_vec(), levels: Vec::new() };
        for g in generators {
            assert_eq!(g.len(), degree, "generator degree mismatch");
            group.add_generator(0, g.clone());
        }
        group
    }

    fn is_member_from(&self, from: usize, g: &[u32]) -> bool {
        let mut cur = g.to_vec();
        for level in &self.levels[from..] {
            if is_identity(&cur) {
                return true;
            }
            match level.transversal.get(&(cur[level.base] as usize)) {
                Some(u) => cur = compose(&inverse(u), &cur),
                None => return false,
            }
        }
        is_identity(&cur)
    }

    /// Installs `g` — known to stabilize the bases of all levels above
    /// `l` — as a generator of level `l`'s group, unless the chain already
    /// accounts for it.
    fn add_generator(&mut self, l: usize, g: Vec<u32>) {
        if is_identity(&g) || self.is_member_from(l, &g) {
            return;
        }
        if l == self.levels.len() {
            let base = g
                .iter()
                .enumerate()
                .find(|&(i, &v)| v as usize != i)
                .map(|(i, _)| i)
                .expect("non-identity permutation moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        self.integrate(l, g);
    }

    fn integrate(&mut self, l: usize, g: Vec<u32>) {
        if self.levels[l].gens.contains(&g) {
            return;
        }
        let gi = self.levels[l].gens.len();
        self.levels[l].gens.push(g);
        let mut queue: VecDeque<(usize, usize)> = self.levels[l]
            .orbit_order
            .iter()
            .map(|&p| (p, gi))
            .collect();
        while let Some((p, gi)) = queue.pop_front() {
            enum Outcome {
                NewPoint(usize, Vec<u32>),
                Schreier(Vec<u32>),
            }
            let outcome = {
                let level = &self.levels[l];
                let s = &level.gens[gi];
                let u_p = &level.transversal[&p];
                let q = s[p] as usize;
                match level.transversal.get(&q) {
                    None => Outcome::NewPoint(q, compose(s, u_p)),
                    Some(u_q) => {
                        Outcome::Schreier(compose(&inverse(u_q), &compose(s, u_p)))
                    }
                }
            };
            match outcome {
                Outcome::NewPoint(q, u_q) => {
                    let level = &mut self.levels[l];
                    level.transversal.insert(q, u_q);
                    level.orbit_order.push(q);
                    for gj in 0..level.gens.len() {
                        queue.push_back((q, gj));
                    }
                }
                Outcome::Schreier(h) => {
                    if !is_identity(&h) {
                        self.add_generator(l + 1, h);
                    }
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Base points of the stabilizer chain, in chain order.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Exact group order: the product of the chain's orbit sizes.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u8);
        for level in &self.levels {
            order *= BigUint::from(level.orbit_order.len());
        }
        order
    }

    /// Membership through the chain: true iff the permutation sifts to the
    /// identity.
    pub fn contains(&self, p: &[u32]) -> bool {
        self.is_member_from(0, p)
    }
}

/// Order of the group generated by `generators`, acting on
/// `0..degree`.
pub fn schreier_sims_order(degree: usize, generators: &[Vec<u32>]) -> BigUint {
    PermGroup::from_generators(degree, generators).order()
}

/// Root system, generator permutations, and stabilizer chain for one
/// builtin preset, bundled for reuse.
pub struct CoxeterOracle {
    pub preset_type: PresetType,
    pub roots: RootSystem,
    perms: Vec<Vec<u32>>,
    group: PermGroup,
}

impl CoxeterOracle {
    pub fn for_preset(ty: PresetType) -> Result<Self> {
        let roots = root_system(ty)?;
        let perms = roots.generator_perms();
        let group = PermGroup::from_generators(roots.n_roots(), &perms);
        Ok(CoxeterOracle { preset_type: ty, roots, perms, group })
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    pub fn n_roots(&self) -> usize {
        self.roots.n_roots()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn perms(&self) -> &[Vec<u32>] {
        &self.perms
    }

    pub fn word_perm(&self, w: &Word) -> Vec<u32> {
        word_to_perm(w, &self.perms, self.roots.n_roots())
    }
}

/// One failed comparison from [`cross_check`].
#[derive(Debug, Clone)]
pub struct MismatchWitness {
    pub left: Word,
    pub right: Word,
    pub perms_equal: bool,
    pub nfs_equal: bool,
}

/// Result of cross-checking a rewriting basis against the permutation
/// representation.
#[derive(Debug, Clone, Default)]
pub struct CrossCheckReport {
    pub samples: usize,
    pub mismatches: Vec<MismatchWitness>,
    /// Normal forms whose length differs from the Cayley-graph distance of
    /// their permutation image (exhaustive small-preset check only).
    pub length_violations: Vec<(Word, usize)>,
    /// Number of elements covered by the exhaustive minimal-length check,
    /// when it ran.
    pub lengths_checked: Option<usize>,
}

impl CrossCheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.length_violations.is_empty()
    }
}

const SAMPLE_MAX_LEN: usize = 40;
const SHARD_SIZE: usize = 64;

fn random_word(rng: &mut ChaCha8Rng, n_syms: usize) -> Word {
    let len = rng.gen_range(0..=SAMPLE_MAX_LEN);
    Word::from_syms((0..len).map(|_| rng.gen_range(0..n_syms) as u8).collect())
}

/// A word representing the same group element as `w`: random involution
/// squares spliced in at random positions.
fn equivalent_word(rng: &mut ChaCha8Rng, w: &Word, n_syms: usize) -> Word {
    let mut syms = w.syms().to_vec();
    let insertions = rng.gen_range(1..=3usize);
    for _ in 0..insertions {
        if syms.len() + 2 > SAMPLE_MAX_LEN {
            break;
        }
        let pos = rng.gen_range(0..=syms.len());
        let s = rng.gen_range(0..n_syms) as u8;
        syms.splice(pos..pos, [s, s]);
    }
    Word::from_syms(syms)
}

/// Compares the word problem answered two independent ways: for seeded
/// random pairs `(u, v)`, the permutation images agree exactly when the
/// normal forms agree.  Half the pairs are constructed to represent the
/// same element so both directions of the equivalence get exercised.  On
/// the two smallest presets the full Cayley graph is additionally walked to
/// confirm that every normal form has minimal length among all words for
/// its element.
///
/// Samples are processed in fixed-size shards, each with an RNG seeded
/// deterministically from `seed`, so the outcome is independent of thread
/// scheduling.
pub fn cross_check(
    ty: PresetType,
    basis: &Basis,
    sample_count: usize,
    seed: u64,
) -> Result<CrossCheckReport> {
    if !basis.is_verified() {
        return Err(Error::UnverifiedBasis);
    }
    let oracle = CoxeterOracle::for_preset(ty)?;
    if basis.alphabet().len() != oracle.roots.rank() {
        return Err(Error::BadMatrix(format!(
            "basis alphabet has {} generators, preset {} has rank {}",
            basis.alphabet().len(),
            ty,
            oracle.roots.rank()
        )));
    }
    let n_syms = basis.alphabet().len();
    let n_shards = sample_count.div_ceil(SHARD_SIZE);
    let shard_results: Vec<Vec<MismatchWitness>> = (0..n_shards)
        .into_par_iter()
        .map(|shard| {
            let mut rng = ChaCha8Rng::seed_from_u64(
                seed.wrapping_add((shard as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            );
            let lo = shard * SHARD_SIZE;
            let hi = (lo + SHARD_SIZE).min(sample_count);
            let mut bad = Vec::new();
            for k in lo..hi {
                let u = random_word(&mut rng, n_syms);
                let v = if k % 2 == 0 {
                    random_word(&mut rng, n_syms)
                } else {
                    equivalent_word(&mut rng, &u, n_syms)
                };
                let perms_equal = oracle.word_perm(&u) == oracle.word_perm(&v);
                let nfs_equal = match (basis.nf_word(&u), basis.nf_word(&v)) {
                    (Ok(nu), Ok(nv)) => nu == nv,
                    _ => false,
                };
                if perms_equal != nfs_equal {
                    bad.push(MismatchWitness { left: u, right: v, perms_equal, nfs_equal });
                }
            }
            bad
        })
        .collect();
    let mut report = CrossCheckReport {
        samples: sample_count,
        mismatches: shard_results.into_iter().flatten().collect(),
        ..CrossCheckReport::default()
    };
    if matches!(ty, PresetType::G2 | PresetType::F4) {
        let (checked, violations) = exhaustive_length_check(&oracle, basis)?;
        report.lengths_checked = Some(checked);
        report.length_violations = violations;
    }
    Ok(report)
}

/// BFS distances over the Cayley graph of the permutation image, compared
/// against the length of every normal form.
fn exhaustive_length_check(
    oracle: &CoxeterOracle,
    basis: &Basis,
) -> Result<(usize, Vec<(Word, usize)>)> {
    let identity: Vec<u32> = (0..oracle.n_roots() as u32).collect();
    let mut dist: HashMap<Vec<u32>, usize> = HashMap::new();
    dist.insert(identity.clone(), 0);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for g in oracle.perms() {
            let next = compose(&p, g);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    let mut checked = 0usize;
    let mut violations = Vec::new();
    let max_len = dist.values().max().copied().unwrap_or(0);
    for w in enumerate_normal_forms(basis, max_len)? {
        let d = dist[&oracle.word_perm(&w)];
        checked += 1;
        if d != w.len() {
            violations.push((w, d));
        }
    }
    Ok((checked, violations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::{shirshov_complete, verify, Limits};
    use crate::coxeter::alt;
    use crate::poly::Poly;
    use crate::word::Alphabet;

    fn preset_orders() -> Vec<(PresetType, u64, usize)> {
        vec![
            (PresetType::A(2), 6, 6),
            (PresetType::A(3), 24, 12),
            (PresetType::B(3), 48, 18),
            (PresetType::D(4), 192, 24),
            (PresetType::G2, 12, 12),
            (PresetType::F4, 1152, 48),
            (PresetType::E6, 51840, 72),
        ]
    }

    #[test]
    fn root_closures_have_the_classical_sizes() {
        for (ty, _, n_roots) in preset_orders() {
            let rs = root_system(ty).unwrap();
            assert_eq!(rs.n_roots(), n_roots, "{ty}");
        }
    }

    #[test]
    fn large_root_closures_have_the_classical_sizes() {
        assert_eq!(root_system(PresetType::E7).unwrap().n_roots(), 126);
        assert_eq!(root_system(PresetType::E8).unwrap().n_roots(), 240);
    }

    #[test]
    fn root_systems_contain_plus_minus_simple_roots_and_are_stable() {
        let rs = root_system(PresetType::B(3)).unwrap();
        for i in 0..3 {
            let mut plus = vec![0i64; 3];
            plus[i] = 1;
            let minus: Vec<i64> = plus.iter().map(|x| -x).collect();
            assert!(rs.roots().contains(&plus));
            assert!(rs.roots().contains(&minus));
        }
        // Reapplying every reflection permutes the fixed list.
        for i in 0..3 {
            let perm = rs.reflection(i);
            let mut seen = vec![false; rs.n_roots()];
            for &t in perm {
                assert!(!seen[t as usize]);
                seen[t as usize] = true;
            }
        }
    }

    #[test]
    fn non_crystallographic_labels_are_rejected() {
        let m = CoxeterMatrix::from_edges(2, &[(0, 1, 5)]).unwrap();
        assert!(matches!(RootSystem::new(&m), Err(Error::BadMatrix(_))));
        let inf = CoxeterMatrix::from_edges(2, &[(0, 1, 0)]);
        // An explicit infinite label is rejected by the Cartan translation
        // when the matrix itself admits it.
        if let Ok(inf) = inf {
            assert!(RootSystem::new(&inf).is_err());
        }
    }

    #[test]
    fn generator_permutations_are_involutions_and_satisfy_the_relations() {
        for (ty, _, _) in preset_orders() {
            let preset = builtin_preset(ty).unwrap();
            let rs = RootSystem::new(&preset.matrix).unwrap();
            let n = rs.rank();
            let degree = rs.n_roots();
            let perms = rs.generator_perms();
            for p in &perms {
                assert!(is_identity(&compose(p, p)), "{ty}: reflection not an involution");
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let m = preset.matrix.get(i, j).unwrap();
                    let left = word_to_perm(&alt(i as u8, j as u8, m), &perms, degree);
                    let right = word_to_perm(&alt(j as u8, i as u8, m), &perms, degree);
                    assert_eq!(left, right, "{ty}: braid ({i},{j}) broken");
                }
            }
        }
    }

    #[test]
    fn word_to_perm_is_a_homomorphism() {
        let rs = root_system(PresetType::A(3)).unwrap();
        let perms = rs.generator_perms();
        let d = rs.n_roots();
        assert!(is_identity(&word_to_perm(&Word::empty(), &perms, d)));
        let u = Word::from_syms(vec![0, 1, 2, 1]);
        let v = Word::from_syms(vec![2, 0, 1]);
        let uv = u.concat(&v);
        assert_eq!(
            word_to_perm(&uv, &perms, d),
            compose(&word_to_perm(&u, &perms, d), &word_to_perm(&v, &perms, d))
        );
    }

    #[test]
    fn single_transposition_generates_order_two() {
        let order = schreier_sims_order(4, &[vec![1, 0, 2, 3]]);
        assert_eq!(order, BigUint::from(2u8));
    }

    #[test]
    fn empty_and_identity_generators_give_the_trivial_group() {
        assert_eq!(schreier_sims_order(5, &[]), BigUint::from(1u8));
        let id: Vec<u32> = (0..5).collect();
        assert_eq!(schreier_sims_order(5, &[id]), BigUint::from(1u8));
    }

    #[test]
    fn symmetric_and_cyclic_groups_have_known_orders() {
        // S4 from adjacent transpositions.
        let gens = vec![vec![1, 0, 2, 3], vec![0, 2, 1, 3], vec![0, 1, 3, 2]];
        assert_eq!(schreier_sims_order(4, &gens), BigUint::from(24u8));
        // C6 from a single 6-cycle.
        let six: Vec<u32> = (0..6).map(|i| (i + 1) % 6).collect();
        assert_eq!(schreier_sims_order(6, &[six]), BigUint::from(6u8));
    }

    #[test]
    fn preset_orders_match_the_stabilizer_chain() {
        for (ty, order, _) in preset_orders() {
            let oracle = CoxeterOracle::for_preset(ty).unwrap();
            assert_eq!(oracle.order(), BigUint::from(order), "{ty}");
        }
    }

    #[test]
    fn e_series_orders_match_the_stabilizer_chain() {
        let e7 = CoxeterOracle::for_preset(PresetType::E7).unwrap();
        assert_eq!(e7.order(), BigUint::from(2_903_040u64));
        let e8 = CoxeterOracle::for_preset(PresetType::E8).unwrap();
        assert_eq!(e8.order(), BigUint::from(696_729_600u64));
    }

    #[test]
    fn chain_membership_agrees_with_generated_elements() {
        let rs = root_system(PresetType::A(2)).unwrap();
        let perms = rs.generator_perms();
        let group = PermGroup::from_generators(rs.n_roots(), &perms);
        // All products of generators are members.
        let w = word_to_perm(&Word::from_syms(vec![0, 1, 0]), &perms, rs.n_roots());
        assert!(group.contains(&w));
        // A bare transposition of two roots fixes the other four, which no
        // nontrivial element of this action does.
        let mut foreign: Vec<u32> = (0..rs.n_roots() as u32).collect();
        foreign.swap(0, 1);
        assert!(!group.contains(&foreign));
    }

    fn completed_basis(ty: PresetType) -> Basis {
        let pres = builtin_preset(ty).unwrap().presentation().unwrap();
        let report = shirshov_complete(pres.relations, &pres.alphabet, &Limits::default()).unwrap();
        let mut basis = report.basis;
        assert!(verify(&mut basis).closed);
        basis
    }

    #[test]
    fn cross_check_refuses_unverified_bases() {
        let a = Alphabet::new(&["x1", "x2"]).unwrap();
        let elems: Vec<Poly> = ["x1 x1 - 1", "x2 x2 - 1", "x2 x1 x2 x1 x2 x1 - x1 x2 x1 x2 x1 x2"]
            .iter()
            .map(|s| a.parse_poly(s).unwrap())
            .collect();
        let basis = Basis::new(a, elems).unwrap();
        assert!(matches!(
            cross_check(PresetType::G2, &basis, 10, 1),
            Err(Error::UnverifiedBasis)
        ));
    }

    #[test]
    fn g2_cross_check_is_clean_and_exhaustively_length_true() {
        let basis = completed_basis(PresetType::G2);
        let report = cross_check(PresetType::G2, &basis, 400, 42).unwrap();
        assert!(report.ok(), "mismatches: {:?}", report.mismatches);
        assert_eq!(report.samples, 400);
        assert_eq!(report.lengths_checked, Some(12));
    }

    #[test]
    fn cross_check_is_deterministic_in_the_seed() {
        let basis = completed_basis(PresetType::A(3));
        let r1 = cross_check(PresetType::A(3), &basis, 200, 7).unwrap();
        let r2 = cross_check(PresetType::A(3), &basis, 200, 7).unwrap();
        assert!(r1.ok() && r2.ok());
        assert_eq!(r1.samples, r2.samples);
    }

    #[test]
    fn all_normal_forms_map_to_distinct_permutations() {
        let basis = completed_basis(PresetType::B(3));
        let oracle = CoxeterOracle::for_preset(PresetType::B(3)).unwrap();
        let mut images = std::collections::HashSet::new();
        let mut count = 0usize;
        for w in enumerate_normal_forms(&basis, 9).unwrap() {
            assert!(images.insert(oracle.word_perm(&w)));
            count += 1;
        }
        assert_eq!(count, 48);
    }
}

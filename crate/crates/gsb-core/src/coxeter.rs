//! Coxeter matrices, built-in diagram presets with their generator
//! markings, and presentation construction oriented for deg-lex.
//!
//! Generator precedence is the marking order (ascending index in the
//! built-in presets), and every pair relation is written with the
//! alternation starting from the precedence-greater generator on the left,
//! which makes it the leading word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::word::{Alphabet, Word};

/// Symmetric matrix of pairwise orders; `None` is an infinite entry (no
/// relation between the pair).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadMatrix("matrix must be square and nonempty".into()));
        }
        for i in 0..n {
            if rows[i][i] != Some(1) {
                return Err(Error::BadCoxeterEntry);
            }
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::BadMatrix(format!(
                        "entries ({i},{j}) and ({j},{i}) disagree"
                    )));
                }
                if let Some(m) = rows[i][j] {
                    if m < 2 {
                        return Err(Error::BadCoxeterEntry);
                    }
                }
            }
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(CoxeterMatrix { n, entries })
    }

    /// All off-diagonal entries default to 2 except the listed edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut rows = vec![vec![Some(2); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for &(i, j, m) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::BadMatrix(format!("bad edge ({i},{j})")));
            }
            rows[i][j] = Some(m);
            rows[j][i] = Some(m);
        }
        CoxeterMatrix::new(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresetType {
    A(usize),
    B(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for PresetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetType::A(n) => write!(f, "A{n}"),
            PresetType::B(n) => write!(f, "B{n}"),
            PresetType::D(n) => write!(f, "D{n}"),
            PresetType::G2 => write!(f, "G2"),
            PresetType::F4 => write!(f, "F4"),
            PresetType::E6 => write!(f, "E6"),
            PresetType::E7 => write!(f, "E7"),
            PresetType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for PresetType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.len().min(1));
        let rank: Option<usize> = tail.parse().ok();
        let t = match (head.to_ascii_uppercase().as_str(), rank) {
            ("A", Some(n)) if n >= 1 => PresetType::A(n),
            ("B", Some(n)) if n >= 2 => PresetType::B(n),
            ("D", Some(n)) if n >= 4 => PresetType::D(n),
            ("G", Some(2)) => PresetType::G2,
            ("F", Some(4)) => PresetType::F4,
            ("E", Some(6)) => PresetType::E6,
            ("E", Some(7)) => PresetType::E7,
            ("E", Some(8)) => PresetType::E8,
            _ => return Err(Error::UnknownPreset(s.to_owned())),
        };
        Ok(t)
    }
}

impl PresetType {
    pub fn rank(&self) -> usize {
        match self {
            PresetType::A(n) | PresetType::B(n) | PresetType::D(n) => *n,
            PresetType::G2 => 2,
            PresetType::F4 => 4,
            PresetType::E6 => 6,
            PresetType::E7 => 7,
            PresetType::E8 => 8,
        }
    }

    /// Lowest generator index in the display marking (E-series counts
    /// down from x6; everything else starts at x1).
    pub fn low_index(&self) -> i32 {
        match self {
            PresetType::E6 => 1,
            PresetType::E7 => 0,
            PresetType::E8 => -1,
            _ => 1,
        }
    }
}

/// A diagram together with its generator marking; marking order is
/// precedence order.
#[derive(Debug, Clone)]
pub struct DiagramPreset {
    pub type_name: PresetType,
    pub matrix: CoxeterMatrix,
    pub marking: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<Poly>,
}

impl DiagramPreset {
    pub fn presentation(&self) -> Result<Presentation> {
        presentation_from_matrix(&self.matrix, &self.marking)
    }
}

fn names(lo: i32, hi: i32) -> Vec<String> {
    (lo..=hi).map(|i| format!("x{i}")).collect()
}

pub fn builtin_preset(t: PresetType) -> Result<DiagramPreset> {
    let (matrix, marking) = match t {
        PresetType::A(n) => {
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect();
            (CoxeterMatrix::from_edges(n, &edges)?, names(1, n as i32))
        }
        PresetType::B(n) => {
            let mut edges = vec![(0, 1, 4)];
            edges.extend((1..n - 1).map(|i| (i, i + 1, 3)));
            (CoxeterMatrix::from_edges(n, &edges)?, names(1, n as i32))
        }
        PresetType::D(n) => {
            let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, 3)).collect();
            edges.push((n - 3, n - 1, 3));
            (CoxeterMatrix::from_edges(n, &edges)?, names(1, n as i32))
        }
        PresetType::G2 => (CoxeterMatrix::from_edges(2, &[(0, 1, 6)])?, names(1, 2)),
        PresetType::F4 => (
            CoxeterMatrix::from_edges(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)])?,
            names(1, 4),
        ),
        PresetType::E6 | PresetType::E7 | PresetType::E8 => {
            let lo = t.low_index();
            let pos = |i: i32| (i - lo) as usize;
            let mut edges: Vec<_> = (lo..=3).map(|i| (pos(i), pos(i + 1), 3)).collect();
            edges.push((pos(3), pos(5), 3));
            edges.push((pos(4), pos(6), 3));
            (CoxeterMatrix::from_edges(t.rank(), &edges)?, names(lo, 6))
        }
    };
    Ok(DiagramPreset { type_name: t, matrix, marking })
}

/// The strictly alternating word `a b a b …` of length `m`.
pub fn alt(a: u8, b: u8, m: u32) -> Word {
    let syms = (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect();
    Word::from_syms(syms)
}

/// Squares first (ascending precedence), then one relation per pair with a
/// finite entry, ordered by greater generator descending then lesser
/// descending; each pair relation is the alternation difference with the
/// precedence-greater generator leading.
pub fn presentation_from_matrix<S: AsRef<str>>(
    matrix: &CoxeterMatrix,
    marking: &[S],
) -> Result<Presentation> {
    if marking.len() != matrix.n() {
        return Err(Error::BadMatrix(format!(
            "marking lists {} generators for a {}x{} matrix",
            marking.len(),
            matrix.n(),
            matrix.n()
        )));
    }
    let alphabet = Alphabet::new(marking)?;
    let n = matrix.n();
    let mut relations = Vec::new();
    for i in 0..n {
        let g = i as u8;
        relations.push(Poly::word_difference(
            &alt(g, g, 2),
            &Word::empty(),
            &alphabet,
        ));
    }
    for hi in (0..n).rev() {
        for lo in (0..hi).rev() {
            let Some(m) = matrix.get(hi, lo) else { continue };
            relations.push(Poly::word_difference(
                &alt(hi as u8, lo as u8, m),
                &alt(lo as u8, hi as u8, m),
                &alphabet,
            ));
        }
    }
    Ok(Presentation { alphabet, relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_set(p: &Presentation) -> Vec<String> {
        let mut v: Vec<String> = p.relations.iter().map(|r| p.alphabet.format_poly(r)).collect();
        v.sort();
        v
    }

    fn expect_set(p: &Presentation, printed: &[&str]) {
        let mut want: Vec<String> = printed
            .iter()
            .map(|s| {
                let parsed = p.alphabet.parse_poly(s).unwrap();
                p.alphabet.format_poly(&parsed)
            })
            .collect();
        want.sort();
        assert_eq!(rel_set(p), want);
    }

    #[test]
    fn g2_preset_relations() {
        let pre = builtin_preset(PresetType::G2).unwrap().presentation().unwrap();
        assert_eq!(pre.relations.len(), 3);
        expect_set(
            &pre,
            &[
                "x1 x1 - 1",
                "x2 x2 - 1",
                "x2 x1 x2 x1 x2 x1 - x1 x2 x1 x2 x1 x2",
            ],
        );
    }

    #[test]
    fn f4_preset_matches_its_printed_list() {
        let pre = builtin_preset(PresetType::F4).unwrap().presentation().unwrap();
        assert_eq!(pre.relations.len(), 10);
        expect_set(
            &pre,
            &[
                "x1 x1 - 1",
                "x2 x2 - 1",
                "x3 x3 - 1",
                "x4 x4 - 1",
                "x4 x3 x4 - x3 x4 x3",
                "x4 x2 - x2 x4",
                "x4 x1 - x1 x4",
                "x3 x2 x3 x2 - x2 x3 x2 x3",
                "x3 x1 - x1 x3",
                "x2 x1 x2 - x1 x2 x1",
            ],
        );
        // The printed order interleaves squares and pair relations; ours is
        // squares first, then pairs with the greater generator descending.
        let formatted: Vec<String> =
            pre.relations.iter().map(|r| pre.alphabet.format_poly(r)).collect();
        assert_eq!(formatted[4], "x4 x3 x4 - x3 x4 x3");
        assert_eq!(formatted[9], "x2 x1 x2 - x1 x2 x1");
    }

    #[test]
    fn e6_preset_has_the_printed_relation_set() {
        let pre = builtin_preset(PresetType::E6).unwrap().presentation().unwrap();
        assert_eq!(pre.relations.len(), 21);
        let all = rel_set(&pre);
        for printed in [
            "x2 x1 x2 - x1 x2 x1",
            "x3 x2 x3 - x2 x3 x2",
            "x4 x3 x4 - x3 x4 x3",
            "x3 x1 - x1 x3",
            "x4 x1 - x1 x4",
            "x4 x2 - x2 x4",
            "x5 x1 - x1 x5",
            "x5 x2 - x2 x5",
            "x5 x4 - x4 x5",
            "x5 x3 x5 - x3 x5 x3",
            "x6 x6 - 1",
            "x6 x4 x6 - x4 x6 x4",
            "x6 x1 - x1 x6",
            "x6 x2 - x2 x6",
            "x6 x3 - x3 x6",
            "x6 x5 - x5 x6",
        ] {
            let want = pre.alphabet.format_poly(&pre.alphabet.parse_poly(printed).unwrap());
            assert!(all.contains(&want), "missing relation {printed}");
        }
    }

    #[test]
    fn e7_and_e8_presets_have_full_pair_coverage() {
        for (t, n_rel) in [(PresetType::E7, 28), (PresetType::E8, 36)] {
            let preset = builtin_preset(t).unwrap();
            let pre = preset.presentation().unwrap();
            assert_eq!(pre.relations.len(), n_rel);
            assert_eq!(preset.marking[0], format!("x{}", t.low_index()));
            assert_eq!(*preset.marking.last().unwrap(), "x6");
        }
    }

    #[test]
    fn e8_braid_partners_read_off_the_diagram() {
        let preset = builtin_preset(PresetType::E8).unwrap();
        let braid_partners = |name: &str| -> Vec<String> {
            let p = preset.marking.iter().position(|m| m == name).unwrap();
            (0..preset.matrix.n())
                .filter(|&q| preset.matrix.get(p, q) == Some(3))
                .map(|q| preset.marking[q].clone())
                .collect()
        };
        assert_eq!(braid_partners("x-1"), vec!["x0"]);
        assert_eq!(braid_partners("x3"), vec!["x2", "x4", "x5"]);
        assert_eq!(braid_partners("x4"), vec!["x3", "x6"]);
        assert_eq!(braid_partners("x5"), vec!["x3"]);
        assert_eq!(braid_partners("x6"), vec!["x4"]);
    }

    #[test]
    fn alternation_orientation_is_uniform_in_m() {
        let ab = Alphabet::new(&["x1", "x2"]).unwrap();
        for m in 2..=8 {
            let hi_first = alt(1, 0, m);
            let lo_first = alt(0, 1, m);
            assert_eq!(hi_first.len() as u32, m);
            assert_eq!(
                ab.compare(&hi_first, &lo_first),
                std::cmp::Ordering::Greater
            );
        }
    }

    #[test]
    fn infinite_entries_contribute_no_relation() {
        let m = CoxeterMatrix::new(vec![
            vec![Some(1), None],
            vec![None, Some(1)],
        ])
        .unwrap();
        let pre = presentation_from_matrix(&m, &["x1", "x2"]).unwrap();
        assert_eq!(pre.relations.len(), 2);
    }

    #[test]
    fn matrix_validation() {
        assert!(matches!(
            CoxeterMatrix::new(vec![
                vec![Some(1), Some(3)],
                vec![Some(2), Some(1)],
            ]),
            Err(Error::BadMatrix(_))
        ));
        assert!(matches!(
            CoxeterMatrix::new(vec![
                vec![Some(2), Some(3)],
                vec![Some(3), Some(1)],
            ]),
            Err(Error::BadCoxeterEntry)
        ));
        assert!(matches!(
            CoxeterMatrix::new(vec![
                vec![Some(1), Some(1)],
                vec![Some(1), Some(1)],
            ]),
            Err(Error::BadCoxeterEntry)
        ));
    }

    #[test]
    fn preset_names_parse() {
        assert_eq!("A2".parse::<PresetType>().unwrap(), PresetType::A(2));
        assert_eq!("b3".parse::<PresetType>().unwrap(), PresetType::B(3));
        assert_eq!("D4".parse::<PresetType>().unwrap(), PresetType::D(4));
        assert_eq!("E8".parse::<PresetType>().unwrap(), PresetType::E8);
        assert!("E9".parse::<PresetType>().is_err());
        assert!("D3".parse::<PresetType>().is_err());
        assert!("B1".parse::<PresetType>().is_err());
        assert!("H3".parse::<PresetType>().is_err());
    }

    #[test]
    fn a2_preset_is_the_symmetric_group_presentation() {
        let pre = builtin_preset(PresetType::A(2)).unwrap().presentation().unwrap();
        expect_set(&pre, &["x1 x1 - 1", "x2 x2 - 1", "x2 x1 x2 - x1 x2 x1"]);
    }
}

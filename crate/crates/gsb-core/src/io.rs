//! Text formats: presentation files, Coxeter-matrix JSON, and the
//! canonical basis file that serves as the diff target for verification.
//!
//! The basis format is fully canonical — header line naming the alphabet in
//! precedence order, then one element per line sorted ascending by leading
//! word — so two equal bases always serialize to identical bytes.

use std::path::Path;

use serde::Deserialize;

use crate::coxeter::{CoxeterMatrix, Presentation};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rewrite::Basis;
use crate::word::Alphabet;

/// Renders a basis in the canonical file format.
pub fn format_basis_file(basis: &Basis) -> String {
    let alphabet = basis.alphabet();
    let names: Vec<&str> = alphabet
        .ids_by_rank()
        .into_iter()
        .map(|id| alphabet.name(id))
        .collect();
    let mut elements: Vec<&Poly> = basis.elements().iter().collect();
    elements.sort_by(|p, q| {
        alphabet.compare(p.leading_word().unwrap(), q.leading_word().unwrap())
    });
    let mut out = format!("alphabet: {}\n", names.join(" "));
    for p in elements {
        out.push_str(&p.format(alphabet));
        out.push('\n');
    }
    out
}

/// Parses the canonical basis format.  The result is *not* marked
/// verified — closure must be re-established, never trusted from a file.
pub fn parse_basis_file(text: &str) -> Result<Basis> {
    let mut lines = text.lines().enumerate();
    let (alphabet, header_line) = loop {
        let Some((k, line)) = lines.next() else {
            return Err(Error::Parse { line: 1, msg: "missing alphabet header".into() });
        };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(names) = line.strip_prefix("alphabet:") else {
            return Err(Error::Parse {
                line: k + 1,
                msg: "expected `alphabet: <names>` header".into(),
            });
        };
        let names: Vec<&str> = names.split_whitespace().collect();
        break (Alphabet::new(&names)?, k + 1);
    };
    let _ = header_line;
    let mut elements = Vec::new();
    for (k, line) in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = alphabet
            .parse_poly(line)
            .map_err(|e| Error::Parse { line: k + 1, msg: e.to_string() })?;
        elements.push(p);
    }
    Basis::new(alphabet, elements)
}

pub fn write_basis_file(path: &Path, basis: &Basis) -> Result<()> {
    Ok(std::fs::write(path, format_basis_file(basis))?)
}

pub fn read_basis_file(path: &Path) -> Result<Basis> {
    parse_basis_file(&std::fs::read_to_string(path)?)
}

/// Renders a presentation: generator header plus one `u = v` line per
/// relation.  Only unit-binomial relations have this shape; anything else
/// is rejected.
pub fn format_presentation(p: &Presentation) -> Result<String> {
    let names: Vec<&str> = p
        .alphabet
        .ids_by_rank()
        .into_iter()
        .map(|id| p.alphabet.name(id))
        .collect();
    let mut out = format!("generators: {}\n", names.join(" "));
    for rel in &p.relations {
        let rule = rel.as_rule()?;
        out.push_str(&format!(
            "{} = {}\n",
            p.alphabet.format_word(&rule.lhs),
            p.alphabet.format_word(&rule.rhs)
        ));
    }
    Ok(out)
}

/// Parses the presentation text format: a `generators:` header (names in
/// ascending precedence) followed by `u = v` lines; blank lines and
/// `#`-comments are skipped.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relations = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match &alphabet {
            None => {
                let Some(names) = line.strip_prefix("generators:") else {
                    return Err(Error::Parse {
                        line: k + 1,
                        msg: "expected `generators: <names>` header".into(),
                    });
                };
                let names: Vec<&str> = names.split_whitespace().collect();
                if names.is_empty() {
                    return Err(Error::Parse {
                        line: k + 1,
                        msg: "empty generator list".into(),
                    });
                }
                alphabet = Some(Alphabet::new(&names)?);
            }
            Some(a) => {
                let Some((left, right)) = line.split_once('=') else {
                    return Err(Error::Parse {
                        line: k + 1,
                        msg: "expected `u = v` relation".into(),
                    });
                };
                let u = a
                    .parse_word(left.trim())
                    .map_err(|e| Error::Parse { line: k + 1, msg: e.to_string() })?;
                let v = a
                    .parse_word(right.trim())
                    .map_err(|e| Error::Parse { line: k + 1, msg: e.to_string() })?;
                let p = Poly::word_difference(&u, &v, a);
                if p.is_zero() {
                    return Err(Error::Parse {
                        line: k + 1,
                        msg: "relation equates a word with itself".into(),
                    });
                }
                relations.push(p);
            }
        }
    }
    let Some(alphabet) = alphabet else {
        return Err(Error::Parse { line: 1, msg: "missing `generators:` header".into() });
    };
    Ok(Presentation { alphabet, relations })
}

#[derive(Deserialize)]
struct MatrixFile {
    n: usize,
    matrix: Vec<Vec<Option<u32>>>,
    #[serde(default)]
    marking: Option<Vec<String>>,
}

/// Parses the JSON presentation alternative: `{"n": …, "matrix": [[…]],
/// "marking": […]}`.  Matrix entries `null` or `0` mean no relation
/// (infinite order); `marking` defaults to `x1 … xn`.
pub fn parse_matrix_json(text: &str) -> Result<(CoxeterMatrix, Vec<String>)> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    if file.matrix.len() != file.n {
        return Err(Error::BadMatrix(format!(
            "declared n = {} but matrix has {} rows",
            file.n,
            file.matrix.len()
        )));
    }
    let rows: Vec<Vec<Option<u32>>> = file
        .matrix
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.filter(|&m| m != 0)).collect())
        .collect();
    let matrix = CoxeterMatrix::new(rows)?;
    let marking = match file.marking {
        Some(m) => {
            if m.len() != file.n {
                return Err(Error::BadMatrix(format!(
                    "marking has {} entries for rank {}",
                    m.len(),
                    file.n
                )));
            }
            m
        }
        None => (1..=file.n).map(|i| format!("x{i}")).collect(),
    };
    Ok((matrix, marking))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{builtin_preset, presentation_from_matrix, PresetType};

    #[test]
    fn basis_file_round_trips_and_is_sorted() {
        let a = Alphabet::new(&["x1", "x2"]).unwrap();
        // Deliberately out of canonical order.
        let elems = vec![
            a.parse_poly("x2 x1 x2 - x1 x2 x1").unwrap(),
            a.parse_poly("x1 x1 - 1").unwrap(),
            a.parse_poly("x2 x2 - 1").unwrap(),
        ];
        let basis = Basis::new(a, elems).unwrap();
        let text = format_basis_file(&basis);
        assert_eq!(
            text,
            "alphabet: x1 x2\nx1 x1 - 1\nx2 x2 - 1\nx2 x1 x2 - x1 x2 x1\n"
        );
        let back = parse_basis_file(&text).unwrap();
        assert_eq!(back.len(), 3);
        assert!(!back.is_verified());
        assert_eq!(format_basis_file(&back), text);
    }

    #[test]
    fn basis_parse_reports_line_numbers() {
        let bad = "alphabet: x1 x2\nx1 x1 - 1\nx3 - 1\n";
        match parse_basis_file(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_basis_file("x1 x1 - 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn presentation_round_trip_preserves_relations() {
        let pres = builtin_preset(PresetType::G2).unwrap().presentation().unwrap();
        let text = format_presentation(&pres).unwrap();
        assert!(text.starts_with("generators: x1 x2\n"));
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back.relations, pres.relations);
    }

    #[test]
    fn presentation_parser_skips_comments_and_blanks() {
        let text = "# a comment\n\ngenerators: a b\n\na a = 1\n# another\nb a b = a b a\n";
        let pres = parse_presentation(text).unwrap();
        assert_eq!(pres.relations.len(), 2);
        assert_eq!(pres.alphabet.len(), 2);
    }

    #[test]
    fn presentation_parser_flags_bad_lines() {
        match parse_presentation("generators: a b\na a 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_presentation("a = b\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_presentation("generators: a\na = a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn matrix_json_accepts_null_and_zero_as_infinite() {
        let text = r#"{"n": 2, "matrix": [[1, 0], [null, 1]], "marking": ["s", "t"]}"#;
        let (matrix, marking) = parse_matrix_json(text).unwrap();
        assert_eq!(matrix.get(0, 1), None);
        assert_eq!(marking, vec!["s".to_string(), "t".to_string()]);
        // The infinite entry yields a presentation with only the squares.
        let pres = presentation_from_matrix(&matrix, &marking).unwrap();
        assert_eq!(pres.relations.len(), 2);
    }

    #[test]
    fn matrix_json_round_trips_a_preset() {
        let preset = builtin_preset(PresetType::F4).unwrap();
        let rows = preset.matrix.rows();
        let json = serde_json::json!({
            "n": 4,
            "matrix": rows,
            "marking": preset.marking,
        });
        let (matrix, marking) = parse_matrix_json(&json.to_string()).unwrap();
        assert_eq!(matrix.rows(), preset.matrix.rows());
        assert_eq!(marking, preset.marking);
    }

    #[test]
    fn matrix_json_validates_shape() {
        assert!(matches!(
            parse_matrix_json(r#"{"n": 3, "matrix": [[1]]}"#),
            Err(Error::BadMatrix(_))
        ));
        assert!(matches!(
            parse_matrix_json(r#"{"n": 1, "matrix": [[1]], "marking": ["a", "b"]}"#),
            Err(Error::BadMatrix(_))
        ));
        assert!(matches!(parse_matrix_json("not json"), Err(Error::Parse { .. })));
    }
}

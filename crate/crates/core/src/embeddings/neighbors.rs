use crate::error::{Error, Result};
use crate::representations::TermMatrix;

/// Cosine similarity; 0 when either vector is zero.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let (mut ab, mut aa, mut bb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        ab += x * y;
        aa += x * x;
        bb += y * y;
    }
    if aa == 0.0 || bb == 0.0 {
        0.0
    } else {
        ab / (aa.sqrt() * bb.sqrt())
    }
}

/// The `k` terms most cosine-similar to `term`, excluding itself.
/// Equal similarities are ordered lexicographically.
pub fn nearest_neighbors(tm: &TermMatrix, term: &str, k: usize) -> Result<Vec<(String, f64)>> {
    let query = tm
        .terms()
        .iter()
        .position(|t| t == term)
        .ok_or_else(|| Error::UnknownTerm(term.to_string()))?;
    let q = tm.row_dense(query);
    let mut scored: Vec<(String, f64)> = tm
        .terms()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != query)
        .map(|(i, t)| (t.clone(), cosine(&q, &tm.row_dense(i))))
        .collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    scored.truncate(k);
    Ok(scored)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::RepKind;

    fn matrix(rows: &[(&str, [f64; 2])]) -> TermMatrix {
        TermMatrix::dense(
            RepKind::Embedding,
            rows.iter().map(|(t, _)| t.to_string()).collect(),
            2,
            rows.iter().flat_map(|(_, v)| *v).collect(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn identical_vector_first() {
        let m = matrix(&[("a", [1.0, 2.0]), ("c", [2.0, -1.0]), ("b", [1.0, 2.0])]);
        let nn = nearest_neighbors(&m, "a", 5).unwrap();
        assert_eq!(nn[0].0, "b");
        assert!((nn[0].1 - 1.0).abs() < 1e-15);
        assert_eq!(nn.len(), 2);
    }

    #[test]
    fn hand_computed_ranking() {
        let m = matrix(&[("q", [1.0, 0.0]), ("near", [3.0, 1.0]), ("far", [-1.0, 1.0]), ("mid", [1.0, 1.0])]);
        let nn = nearest_neighbors(&m, "q", 3).unwrap();
        let names: Vec<&str> = nn.iter().map(|(t, _)| t.as_str()).collect();
        assert_eq!(names, ["near", "mid", "far"]);
        assert!((nn[0].1 - 3.0 / 10f64.sqrt()).abs() < 1e-15);
        assert!((nn[1].1 - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((nn[2].1 + 1.0 / 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn ties_are_lexicographic() {
        let m = matrix(&[("q", [1.0, 0.0]), ("b", [2.0, 0.0]), ("a", [5.0, 0.0])]);
        let nn = nearest_neighbors(&m, "q", 1).unwrap();
        assert_eq!(nn[0].0, "a");
    }

    #[test]
    fn unknown_term() {
        let m = matrix(&[("q", [1.0, 0.0])]);
        assert!(matches!(nearest_neighbors(&m, "zz", 1), Err(Error::UnknownTerm(_))));
    }
}

//! Structural observations about g' across shapes: where it stops being
//! diagonal, and where its inverse stops having entries in {-1, 0, +1}.
//! Only identity coefficients are needed, so these scans are cheap.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::projectors::IrrepBundle;
use crate::tableaux::{partitions, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GShape {
    pub n: usize,
    pub partition: Partition,
    pub dim: usize,
    pub diagonal: bool,
    pub inverse_reduced: bool,
    pub inverse_max_abs: String,
}

/// Every shape with `n <= max_n`, ordered by `n` and then partition order.
pub fn survey(max_n: usize) -> Result<Vec<GShape>> {
    let shapes: Vec<Partition> = (1..=max_n).flat_map(partitions).collect();
    shapes
        .par_iter()
        .map(|shape| {
            let b = IrrepBundle::new(shape)?;
            Ok(GShape {
                n: shape.size(),
                partition: shape.clone(),
                dim: b.dim(),
                diagonal: b.g_reduced().is_diagonal(),
                inverse_reduced: b.g_reduced_inverse().is_reduced(),
                inverse_max_abs: b.g_reduced_inverse().max_abs_entry().to_string(),
            })
        })
        .collect()
}

pub fn first_non_diagonal(survey: &[GShape]) -> Option<&GShape> {
    survey.iter().find(|s| !s.diagonal)
}

pub fn first_non_reduced_inverse(survey: &[GShape]) -> Option<&GShape> {
    survey.iter().find(|s| !s.inverse_reduced)
}

/// A published observation checked against computation. `holds == false`
/// is a finding about the claim, not a failure of the engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub statement: String,
    pub holds: bool,
    pub detail: String,
}

fn describe(s: Option<&GShape>) -> String {
    s.map_or_else(|| "none".to_string(), |s| format!("n={} ({})", s.n, s.partition))
}

/// Evaluates the g-matrix claims that fit within `max_n`.
pub fn g_claims(max_n: usize) -> Result<Vec<Claim>> {
    let all = survey(max_n)?;
    let mut claims = Vec::new();

    let small: Vec<&GShape> = all.iter().filter(|s| s.n < 4).collect();
    claims.push(Claim {
        name: "diagonal_below_4".into(),
        statement: "g' is diagonal for every partition of n < 4".into(),
        holds: small.iter().all(|s| s.diagonal),
        detail: format!("{} shapes checked", small.len()),
    });

    if max_n >= 4 {
        let four: Vec<&GShape> = all.iter().filter(|s| s.n == 4).collect();
        let off: Vec<String> = four.iter().filter(|s| !s.diagonal).map(|s| s.partition.to_string()).collect();
        claims.push(Claim {
            name: "diagonal_at_4".into(),
            statement: "g' is diagonal for every partition of n = 4 (measured)".into(),
            holds: off.is_empty(),
            detail: if off.is_empty() {
                format!("all {} partitions of 4 have diagonal g'", four.len())
            } else {
                format!("non-diagonal at {}", off.join("; "))
            },
        });
    }

    if max_n >= 5 {
        let first = first_non_diagonal(&all);
        claims.push(Claim {
            name: "first_non_diagonal".into(),
            statement: "the first non-diagonal g' occurs at n = 5, partition (3,2)".into(),
            holds: first.is_some_and(|s| s.n == 5 && s.partition.parts() == [3, 2]),
            detail: format!("first non-diagonal: {}", describe(first)),
        });
    }

    if max_n >= 7 {
        let first = first_non_reduced_inverse(&all);
        let target = all
            .iter()
            .find(|s| s.n == 7 && s.partition.parts() == [3, 2, 2]);
        claims.push(Claim {
            name: "first_non_reduced_inverse".into(),
            statement: "the first g'^{-1} with an entry outside {-1,0,+1} occurs at n = 7, partition (3,2,2)"
                .into(),
            holds: first.is_some_and(|s| s.n == 7 && s.partition.parts() == [3, 2, 2]),
            detail: format!(
                "first non-reduced inverse: {}; (3,2,2) max |entry| = {}",
                describe(first),
                target.map_or("-".into(), |t| t.inverse_max_abs.clone())
            ),
        });
    }
    Ok(claims)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_survey() {
        let s = survey(4).unwrap();
        assert_eq!(s.len(), 1 + 2 + 3 + 5);
        assert!(s.iter().filter(|x| x.n < 4).all(|x| x.diagonal));
        assert!(s.iter().all(|x| x.inverse_reduced));
    }

    #[test]
    fn five_claims() {
        let claims = g_claims(5).unwrap();
        let names: Vec<&str> = claims.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["diagonal_below_4", "diagonal_at_4", "first_non_diagonal"]);
        assert!(claims[0].holds);
        assert!(claims[2].holds, "{:?}", claims[2]);
    }
}

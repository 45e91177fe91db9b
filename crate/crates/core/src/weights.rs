//! Weightings of tree edges and path steps, and their total weights.
//!
//! Totals come in two flavors. The `total_*` functions sum over the full
//! enumeration and serve as ground truth; the `*_dp` functions run a
//! transfer-matrix recurrence over heights and must agree with them exactly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijection::{classify_edges, EdgeCategory};
use crate::enumeration::{motzkin_paths, plane_trees, two_motzkin_paths};
use crate::error::{Error, Result};
use crate::identities::catalan;
use crate::path::{MotzkinPath, MotzkinStep, TwoMotzkinPath, TwoMotzkinStep};
use crate::poly::{binomial, Poly};
use crate::tree::PlaneTree;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase", deny_unknown_fields)]
pub struct EdgeWeighting {
    pub non_terminal_interior: Poly,
    pub non_terminal_exterior: Poly,
    pub terminal_interior: Poly,
    pub terminal_exterior: Poly,
    pub critical: Poly,
}

impl EdgeWeighting {
    pub fn uniform(w: Poly) -> Self {
        EdgeWeighting {
            non_terminal_interior: w.clone(),
            non_terminal_exterior: w.clone(),
            terminal_interior: w.clone(),
            terminal_exterior: w,
            critical: Poly::one(),
        }
    }

    pub fn get(&self, c: EdgeCategory) -> &Poly {
        match c {
            EdgeCategory::NonTerminalInterior => &self.non_terminal_interior,
            EdgeCategory::NonTerminalExterior => &self.non_terminal_exterior,
            EdgeCategory::TerminalInterior => &self.terminal_interior,
            EdgeCategory::TerminalExterior => &self.terminal_exterior,
            EdgeCategory::Critical => &self.critical,
        }
    }

    /// Step weights carrying each non-critical category's weight to its step.
    pub fn transported(&self) -> StepWeighting {
        StepWeighting {
            up: self.non_terminal_interior.clone(),
            down: self.terminal_exterior.clone(),
            straight_level: self.non_terminal_exterior.clone(),
            wavy_level: self.terminal_interior.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase", deny_unknown_fields)]
pub struct StepWeighting {
    pub up: Poly,
    pub down: Poly,
    pub straight_level: Poly,
    pub wavy_level: Poly,
}

impl StepWeighting {
    pub fn uniform(w: Poly) -> Self {
        StepWeighting {
            up: w.clone(),
            down: w.clone(),
            straight_level: w.clone(),
            wavy_level: w,
        }
    }

    pub fn get(&self, s: TwoMotzkinStep) -> &Poly {
        match s {
            TwoMotzkinStep::Up => &self.up,
            TwoMotzkinStep::Down => &self.down,
            TwoMotzkinStep::StraightLevel => &self.straight_level,
            TwoMotzkinStep::WavyLevel => &self.wavy_level,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase", deny_unknown_fields)]
pub struct MotzkinWeighting {
    pub up: Poly,
    pub down: Poly,
    pub level: Poly,
}

impl MotzkinWeighting {
    pub fn get(&self, s: MotzkinStep) -> &Poly {
        match s {
            MotzkinStep::Up => &self.up,
            MotzkinStep::Down => &self.down,
            MotzkinStep::Level => &self.level,
        }
    }
}

fn x_squared() -> Poly {
    Poly::monomial(1, 2)
}

fn one_plus_x_squared() -> Poly {
    Poly::from_i64s(&[1, 2, 1])
}

/// Terminal non-critical edges weigh `x`, everything else `1`.
pub fn theorem1_edge_weights() -> EdgeWeighting {
    EdgeWeighting {
        non_terminal_interior: Poly::one(),
        non_terminal_exterior: Poly::one(),
        terminal_interior: Poly::x(),
        terminal_exterior: Poly::x(),
        critical: Poly::one(),
    }
}

/// Down and wavy steps weigh `x`, up and straight steps `1`.
pub fn theorem1_step_weights() -> StepWeighting {
    StepWeighting {
        up: Poly::one(),
        down: Poly::x(),
        straight_level: Poly::one(),
        wavy_level: Poly::x(),
    }
}

/// Terminal non-critical edges weigh `x^2`, non-terminal edges `(1+x)^2`,
/// the critical edge `1`.
pub fn theorem2_edge_weights() -> EdgeWeighting {
    EdgeWeighting {
        non_terminal_interior: one_plus_x_squared(),
        non_terminal_exterior: one_plus_x_squared(),
        terminal_interior: x_squared(),
        terminal_exterior: x_squared(),
        critical: Poly::one(),
    }
}

pub fn theorem2_step_weights() -> StepWeighting {
    StepWeighting {
        up: one_plus_x_squared(),
        down: x_squared(),
        straight_level: one_plus_x_squared(),
        wavy_level: x_squared(),
    }
}

pub fn tree_weight(t: &PlaneTree, w: &EdgeWeighting) -> Result<Poly> {
    Ok(classify_edges(t)?
        .into_iter()
        .map(|e| w.get(e.category).clone())
        .product())
}

pub fn path_weight(p: &TwoMotzkinPath, w: &StepWeighting) -> Poly {
    p.steps().iter().map(|&s| w.get(s).clone()).product()
}

pub fn motzkin_path_weight(p: &MotzkinPath, w: &MotzkinWeighting) -> Poly {
    p.steps().iter().map(|&s| w.get(s).clone()).product()
}

fn par_sum<I, F>(items: I, f: F) -> Poly
where
    I: Iterator + Send,
    I::Item: Send,
    F: Fn(I::Item) -> Poly + Sync + Send,
{
    items.par_bridge().map(f).reduce(Poly::zero, |a, b| &a + &b)
}

/// Sum of `tree_weight` over every tree with `n >= 1` edges.
pub fn total_tree_weight(n: usize, w: &EdgeWeighting) -> Result<Poly> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    Ok(par_sum(plane_trees(n), |t| {
        tree_weight(&t, w).expect("n >= 1 edges")
    }))
}

/// Sum of `path_weight` over every 2-Motzkin path of length `m`.
pub fn total_path_weight(m: usize, w: &StepWeighting) -> Poly {
    par_sum(two_motzkin_paths(m), |p| path_weight(&p, w))
}

/// Sum over every Motzkin path of length `m`.
pub fn total_motzkin_weight(m: usize, w: &MotzkinWeighting) -> Poly {
    par_sum(motzkin_paths(m), |p| motzkin_path_weight(&p, w))
}

/// Transfer matrix over heights `0..=m/2`: `row[h]` is the weight of all
/// valid prefixes ending at height `h`.
fn height_dp(m: usize, up: &Poly, down: &Poly, level: &Poly) -> Poly {
    let cap = m / 2;
    let mut row = vec![Poly::zero(); cap + 1];
    row[0] = Poly::one();
    for i in 0..m {
        let reach = cap.min(m - i - 1);
        let mut next = vec![Poly::zero(); cap + 1];
        for (h, acc) in row.iter().enumerate() {
            if acc.is_zero() {
                continue;
            }
            if h < reach {
                next[h + 1] += &(acc * up);
            }
            if h > 0 && h - 1 <= reach {
                next[h - 1] += &(acc * down);
            }
            if h <= reach {
                next[h] += &(acc * level);
            }
        }
        row = next;
    }
    row.swap_remove(0)
}

pub fn total_path_weight_dp(m: usize, w: &StepWeighting) -> Poly {
    height_dp(m, &w.up, &w.down, &(&w.straight_level + &w.wavy_level))
}

pub fn total_motzkin_weight_dp(m: usize, w: &MotzkinWeighting) -> Poly {
    height_dp(m, &w.up, &w.down, &w.level)
}

/// Tree total through the bijection: the critical edge times the path total
/// of length `n - 1` under the transported step weights.
pub fn total_tree_weight_dp(n: usize, w: &EdgeWeighting) -> Result<Poly> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    Ok(&w.critical * &total_path_weight_dp(n - 1, &w.transported()))
}

/// Replaces the two level kinds by one level step carrying their sum.
pub fn merge_levels(w: &StepWeighting) -> MotzkinWeighting {
    MotzkinWeighting {
        up: w.up.clone(),
        down: w.down.clone(),
        level: &w.straight_level + &w.wavy_level,
    }
}

/// Swaps in new up/down weights with the same product. Every closed path has
/// as many up steps as down steps, so path totals are unchanged.
pub fn rebalance_up_down(w: &StepWeighting, new_up: Poly, new_down: Poly) -> Result<StepWeighting> {
    let expected = &w.up * &w.down;
    let found = &new_up * &new_down;
    if expected != found {
        return Err(Error::ProductMismatch { expected, found });
    }
    Ok(StepWeighting {
        up: new_up,
        down: new_down,
        ..w.clone()
    })
}

/// `x(1+x)`, the balanced up/down weight for the second weighting.
pub fn balanced_up_down_weight() -> Poly {
    Poly::from_i64s(&[0, 1, 1])
}

/// Motzkin total of length `m` when up, down and both "real" level kinds
/// weigh `g` and a level position may instead hold a dotted step of weight 1.
///
/// Choosing which `k` positions are not dotted leaves a 2-Motzkin path of
/// length `k` with all steps of weight `g`:
/// `sum_k C(m, k) * g^k * C_{k+1}`.
pub fn dotted_step_total(m: usize, g: &Poly) -> Poly {
    (0..=m)
        .map(|k| {
            let count = &binomial(m as u64, k as i64) * &catalan(k as u64 + 1);
            &Poly::constant(count) * &g.pow(k as u32)
        })
        .sum()
}

/// The Motzkin weighting that `dotted_step_total` sums over.
pub fn dotted_weighting(g: &Poly) -> MotzkinWeighting {
    MotzkinWeighting {
        up: g.clone(),
        down: g.clone(),
        level: &Poly::one() + &(&Poly::constant(2) * g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    fn p(s: &str) -> TwoMotzkinPath {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn builtin_weightings() {
        let e1 = theorem1_edge_weights();
        assert_eq!(e1.terminal_interior, Poly::x());
        assert_eq!(e1.critical, Poly::one());
        assert_eq!(theorem1_step_weights().up, Poly::one());

        let e2 = theorem2_edge_weights();
        assert_eq!(e2.non_terminal_interior, poly("1 + 2*x + x^2"));
        assert_eq!(e2.critical, Poly::one());
        assert_eq!(theorem2_step_weights().down, poly("x^2"));

        assert_eq!(e1.transported(), theorem1_step_weights());
        assert_eq!(e2.transported(), theorem2_step_weights());
    }

    #[test]
    fn tree_weight_examples() {
        let w = theorem1_edge_weights();
        assert_eq!(tree_weight(&t("(())"), &w).unwrap(), Poly::one());
        assert_eq!(tree_weight(&t("()()"), &w).unwrap(), Poly::x());
        let custom = EdgeWeighting {
            critical: poly("3 + x"),
            ..EdgeWeighting::uniform(poly("5"))
        };
        assert_eq!(tree_weight(&t("()"), &custom).unwrap(), poly("3 + x"));
        assert_eq!(tree_weight(&PlaneTree::empty(), &w), Err(Error::EmptyTree));
    }

    #[test]
    fn path_weight_examples() {
        assert_eq!(path_weight(&p("W"), &theorem1_step_weights()), Poly::x());
        assert_eq!(
            path_weight(&p("UD"), &theorem2_step_weights()),
            &poly("1 + 2*x + x^2") * &poly("x^2")
        );
        assert_eq!(
            path_weight(&p(""), &StepWeighting::uniform(poly("7x"))),
            Poly::one()
        );
    }

    #[test]
    fn totals_examples() {
        assert_eq!(
            total_tree_weight(2, &theorem1_edge_weights()).unwrap(),
            poly("1 + x")
        );
        assert_eq!(
            total_path_weight(1, &theorem1_step_weights()),
            poly("1 + x")
        );
        assert_eq!(
            total_tree_weight(2, &theorem2_edge_weights()).unwrap(),
            poly("1 + 2*x + 2*x^2")
        );
        assert_eq!(
            total_tree_weight(0, &theorem1_edge_weights()),
            Err(Error::EmptyTree)
        );
    }

    #[test]
    fn merge_examples() {
        assert_eq!(
            merge_levels(&theorem2_step_weights()).level,
            poly("1 + 2*x + 2*x^2")
        );
        assert_eq!(merge_levels(&theorem1_step_weights()).level, poly("1 + x"));
        assert_eq!(
            merge_levels(&StepWeighting::uniform(Poly::one())).level,
            Poly::constant(2)
        );
    }

    #[test]
    fn rebalance_examples() {
        let w2 = theorem2_step_weights();
        let g = balanced_up_down_weight();
        let r = rebalance_up_down(&w2, g.clone(), g.clone()).unwrap();
        assert_eq!(r.up, poly("x + x^2"));
        assert_eq!(r.straight_level, w2.straight_level);

        let err = rebalance_up_down(&w2, Poly::x(), Poly::x()).unwrap_err();
        assert_eq!(
            err,
            Error::ProductMismatch {
                expected: &w2.up * &w2.down,
                found: poly("x^2"),
            }
        );

        let same = rebalance_up_down(&w2, w2.up.clone(), w2.down.clone()).unwrap();
        assert_eq!(same, w2);
    }

    #[test]
    fn motzkin_total_examples() {
        let merged2 = merge_levels(&theorem2_step_weights());
        assert_eq!(total_motzkin_weight(1, &merged2), poly("1 + 2*x + 2*x^2"));
        assert_eq!(total_motzkin_weight(0, &merged2), Poly::one());
        let w = MotzkinWeighting {
            up: Poly::x(),
            down: Poly::x(),
            level: poly("1 + x"),
        };
        assert_eq!(total_motzkin_weight(2, &w), poly("1 + 2*x + 2*x^2"));
    }

    #[test]
    fn dp_matches_enumeration() {
        let weightings = [
            theorem1_step_weights(),
            theorem2_step_weights(),
            StepWeighting {
                up: poly("2 - x"),
                down: poly("x^3 + 1"),
                straight_level: poly("-1"),
                wavy_level: poly("4x"),
            },
        ];
        for w in &weightings {
            for m in 0..=8 {
                assert_eq!(total_path_weight_dp(m, w), total_path_weight(m, w), "m={m}");
                let merged = merge_levels(w);
                assert_eq!(
                    total_motzkin_weight_dp(m, &merged),
                    total_motzkin_weight(m, &merged)
                );
            }
        }
        for n in 1..=8 {
            for w in [theorem1_edge_weights(), theorem2_edge_weights()] {
                assert_eq!(
                    total_tree_weight_dp(n, &w).unwrap(),
                    total_tree_weight(n, &w).unwrap()
                );
            }
        }
    }

    #[test]
    fn dotted_total_small() {
        // m = 1: C(1,0)*C_1 + C(1,1)*g*C_2 = 1 + 2g
        let g = balanced_up_down_weight();
        assert_eq!(dotted_step_total(1, &g), poly("1 + 2*x + 2*x^2"));
        assert_eq!(dotted_step_total(0, &g), Poly::one());
        assert_eq!(dotted_weighting(&g).level, poly("1 + 2*x + 2*x^2"));
    }

    #[test]
    fn custom_weighting_json() {
        let w: StepWeighting = serde_json::from_str(
            r#"{"Up": "1", "Down": "x", "StraightLevel": "1", "WavyLevel": "x"}"#,
        )
        .unwrap();
        assert_eq!(w, theorem1_step_weights());
        assert!(serde_json::from_str::<StepWeighting>(r#"{"Up": "1", "Down": "x"}"#).is_err());
        assert!(serde_json::from_str::<StepWeighting>(
            r#"{"Up": "1", "Down": "x", "StraightLevel": "1", "WavyLevel": "x +"}"#
        )
        .is_err());
    }
}

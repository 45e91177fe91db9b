//! Catalan and Narayana numbers, the polynomial families built from them,
//! and exact checks of the identities relating them.
//!
//! Every check compares two closed forms as canonical polynomials. When an
//! oracle is requested, the same quantity is also computed by exhaustive
//! enumeration and compared against the left-hand side.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{multiple_dyck_paths, plane_trees};
use crate::poly::{binomial, Poly};
use crate::weights::{theorem1_edge_weights, theorem2_edge_weights, total_tree_weight};

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    let central = binomial(2 * n, n as i64);
    let (q, r) = (&central / (n + 1), &central % (n + 1));
    assert!(r.is_zero(), "C(2n,n) not divisible by n+1 for n={n}");
    q
}

/// `C(n, k) C(n, k-1) / n`; zero outside `1 <= k <= n`.
pub fn narayana(n: u64, k: i64) -> BigInt {
    assert!(n >= 1, "Narayana numbers need n >= 1");
    let scaled = binomial(n, k) * binomial(n, k - 1);
    let (q, r) = (&scaled / n, &scaled % n);
    assert!(r.is_zero(), "inexact Narayana division at n={n}, k={k}");
    q
}

fn narayana_terms(n: u64) -> impl Iterator<Item = (u64, BigInt)> {
    (1..=n).map(move |k| (k, narayana(n, k as i64)))
}

fn one_plus_x() -> Poly {
    Poly::from_i64s(&[1, 1])
}

fn one_minus_x() -> Poly {
    Poly::from_i64s(&[1, -1])
}

/// `sum_k N(n, k) t^(n-k)`.
pub fn narayana_poly(n: u64) -> Poly {
    narayana_terms(n)
        .map(|(k, c)| Poly::monomial(c, (n - k) as usize))
        .sum()
}

/// `d_n`, the number of multiple Dyck paths of semilength `n`; `d_0 = 1`.
pub fn multiple_dyck_count(n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    narayana_poly(n).eval(&BigInt::from(4))
}

/// `sum_{k <= (n-1)/2} C_k C(n-1, 2k) t^k (1+t)^(n-2k-1)`, the common
/// right-hand side of the Narayana-polynomial expansion and of the first
/// weighted identity.
fn catalan_expansion(n: u64) -> Poly {
    (0..=(n - 1) / 2)
        .map(|k| {
            let c = catalan(k) * binomial(n - 1, 2 * k as i64);
            &Poly::monomial(c, k as usize) * &one_plus_x().pow((n - 2 * k - 1) as u32)
        })
        .sum()
}

/// `sum_{k=0}^{n-1} C_{k+1} C(n-1, k) x^k (1+x)^k`.
fn shifted_catalan_expansion(n: u64) -> Poly {
    let base = &Poly::x() * &one_plus_x();
    (0..n)
        .map(|k| {
            let c = catalan(k + 1) * binomial(n - 1, k as i64);
            &Poly::constant(c) * &base.pow(k as u32)
        })
        .sum()
}

/// Closed form `sum_k N(n,k) x^(2k) (1+x)^(2n-2k)` of the run-count
/// polynomial of multiple Dyck paths.
pub fn p_poly(n: u64) -> Poly {
    let sq = one_plus_x().pow(2);
    narayana_terms(n)
        .map(|(k, c)| &Poly::monomial(c, 2 * k as usize) * &sq.pow((n - k) as u32))
        .sum()
}

/// `x^(2n) N_n((1+x)^2 / x^2)` with the denominator cleared term by term.
pub fn p_poly_via_narayana(n: u64) -> Poly {
    let num = one_plus_x().pow(2);
    let den = Poly::monomial(1, 2);
    narayana_poly(n).substitute_fraction(&num, &den, n as u32)
}

/// `sum x^(number of runs)` over every multiple Dyck path of semilength `n`.
pub fn p_poly_oracle(n: u64) -> Poly {
    let mut by_runs: Vec<u64> = Vec::new();
    for path in multiple_dyck_paths(n as usize) {
        let j = path.run_count();
        if by_runs.len() <= j {
            by_runs.resize(j + 1, 0);
        }
        by_runs[j] += 1;
    }
    Poly::from_coeffs(by_runs.into_iter().map(BigInt::from).collect())
}

/// `sum_{k=0}^{n-1} (-1)^k C_{k+1} C(n-1, k) x^k (1-x)^k`.
pub fn r_poly(n: u64) -> Poly {
    let base = &Poly::x() * &one_minus_x();
    (0..n)
        .map(|k| {
            let mut c = catalan(k + 1) * binomial(n - 1, k as i64);
            if k % 2 == 1 {
                c = -c;
            }
            &Poly::constant(c) * &base.pow(k as u32)
        })
        .sum()
}

/// `lambda_{n,j}`: multiple Dyck paths of semilength `n` with `j` runs.
pub fn lambda_table(n: u64) -> BTreeMap<usize, BigInt> {
    p_poly(n)
        .into_coeffs()
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// `4^(n-1) p(1/4)` for a polynomial of degree at most `n - 1`.
pub fn eval_at_quarter_cleared(p: &Poly, n: u64) -> BigInt {
    let cleared = p.substitute_fraction(&Poly::one(), &Poly::constant(4), (n - 1) as u32);
    assert!(cleared.degree().unwrap_or(0) == 0);
    cleared.coeff(0)
}

/// Number of `n`-edge trees with each leaf count, as `sum t^(n - leaves)`.
pub fn leaf_census_poly(n: u64) -> Poly {
    let mut counts = vec![0u64; n as usize + 1];
    for t in plane_trees(n as usize) {
        counts[n as usize - t.leaf_count()] += 1;
    }
    Poly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityId {
    #[serde(rename = "eq1")]
    Eq1,
    #[serde(rename = "eq2")]
    Eq2,
    #[serde(rename = "eq3")]
    Eq3,
    #[serde(rename = "thm1")]
    Thm1,
    #[serde(rename = "thm2")]
    Thm2,
    #[serde(rename = "eq7")]
    Eq7,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::Eq1,
        IdentityId::Eq2,
        IdentityId::Eq3,
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Eq7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq2 => "eq2",
            IdentityId::Eq3 => "eq3",
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Eq7 => "eq7",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub n: u64,
    pub lhs: Poly,
    pub rhs: Poly,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_equal: Option<bool>,
}

impl IdentityReport {
    fn new(identity: IdentityId, n: u64, lhs: Poly, rhs: Poly, oracle: Option<Poly>) -> Self {
        let equal = lhs == rhs;
        let oracle_equal = oracle.as_ref().map(|o| *o == lhs);
        IdentityReport {
            identity,
            n,
            lhs,
            rhs,
            equal,
            oracle,
            oracle_equal,
        }
    }

    /// Both sides agree, and the oracle too if one was computed.
    pub fn passed(&self) -> bool {
        self.equal && self.oracle_equal != Some(false)
    }

    /// First coefficient where the check fails: `(label, exponent, left, right)`.
    pub fn first_mismatch(&self) -> Option<(&'static str, usize, BigInt, BigInt)> {
        if let Some((e, a, b)) = self.lhs.first_difference(&self.rhs) {
            return Some(("rhs", e, a, b));
        }
        let oracle = self.oracle.as_ref()?;
        self.lhs
            .first_difference(oracle)
            .map(|(e, a, b)| ("oracle", e, a, b))
    }
}

/// `sum N(n,k) 4^(n-k)` against `sum C_k C(n-1,2k) 4^k 5^(n-2k-1)`; the oracle
/// counts multiple Dyck paths.
pub fn verify_eq1(n: u64, with_oracle: bool) -> IdentityReport {
    assert!(n >= 1);
    let four = BigInt::from(4);
    let lhs: BigInt = narayana_terms(n)
        .map(|(k, c)| c * four.pow((n - k) as u32))
        .sum();
    let rhs: BigInt = (0..=(n - 1) / 2)
        .map(|k| {
            catalan(k)
                * binomial(n - 1, 2 * k as i64)
                * four.pow(k as u32)
                * BigInt::from(5).pow((n - 2 * k - 1) as u32)
        })
        .sum();
    assert_eq!(lhs, narayana_poly(n).eval(&four), "d_n differs from N_n(4)");
    let oracle =
        with_oracle.then(|| Poly::constant(multiple_dyck_paths(n as usize).count() as u64));
    IdentityReport::new(IdentityId::Eq1, n, lhs.into(), rhs.into(), oracle)
}

/// `N_n(t)` against its Catalan expansion; the oracle is the leaf census.
pub fn verify_eq3(n: u64, with_oracle: bool) -> IdentityReport {
    assert!(n >= 1);
    let oracle = with_oracle.then(|| leaf_census_poly(n));
    IdentityReport::new(
        IdentityId::Eq3,
        n,
        narayana_poly(n),
        catalan_expansion(n),
        oracle,
    )
}

/// `sum N(n,k) x^(k-1)` against `sum C_k C(n-1,2k) x^k (1+x)^(n-2k-1)`; the
/// oracle sums the first weighting over all trees.
pub fn verify_theorem1(n: u64, with_oracle: bool) -> IdentityReport {
    assert!(n >= 1);
    let lhs = narayana_terms(n)
        .map(|(k, c)| Poly::monomial(c, (k - 1) as usize))
        .sum();
    let oracle = with_oracle
        .then(|| total_tree_weight(n as usize, &theorem1_edge_weights()).expect("n >= 1"));
    IdentityReport::new(IdentityId::Thm1, n, lhs, catalan_expansion(n), oracle)
}

/// `sum N(n,k) x^(2k-2) (1+x)^(2n-2k)` against
/// `sum C_{k+1} C(n-1,k) x^k (1+x)^k`; the oracle sums the second weighting
/// over all trees.
pub fn verify_theorem2(n: u64, with_oracle: bool) -> IdentityReport {
    assert!(n >= 1);
    let sq = one_plus_x().pow(2);
    let lhs = narayana_terms(n)
        .map(|(k, c)| &Poly::monomial(c, 2 * (k - 1) as usize) * &sq.pow((n - k) as u32))
        .sum();
    let oracle = with_oracle
        .then(|| total_tree_weight(n as usize, &theorem2_edge_weights()).expect("n >= 1"));
    IdentityReport::new(
        IdentityId::Thm2,
        n,
        lhs,
        shifted_catalan_expansion(n),
        oracle,
    )
}

/// The literal form with `x^(2k)` on the left and an `x^2` prefactor on the
/// right; the left side is the run-count polynomial, so the oracle enumerates
/// multiple Dyck paths.
pub fn verify_eq2(n: u64, with_oracle: bool) -> IdentityReport {
    assert!(n >= 1);
    let rhs = shifted_catalan_expansion(n).shift(2);
    let oracle = with_oracle.then(|| p_poly_oracle(n));
    IdentityReport::new(IdentityId::Eq2, n, p_poly(n), rhs, oracle)
}

/// `P_n(x)` against `x^2 R_n(-x)`.
pub fn verify_eq7(n: u64, with_oracle: bool) -> IdentityReport {
    assert!(n >= 1);
    let rhs = r_poly(n).substitute_neg().shift(2);
    let oracle = with_oracle.then(|| p_poly_oracle(n));
    IdentityReport::new(IdentityId::Eq7, n, p_poly(n), rhs, oracle)
}

pub fn verify(id: IdentityId, n: u64, with_oracle: bool) -> IdentityReport {
    match id {
        IdentityId::Eq1 => verify_eq1(n, with_oracle),
        IdentityId::Eq2 => verify_eq2(n, with_oracle),
        IdentityId::Eq3 => verify_eq3(n, with_oracle),
        IdentityId::Thm1 => verify_theorem1(n, with_oracle),
        IdentityId::Thm2 => verify_theorem2(n, with_oracle),
        IdentityId::Eq7 => verify_eq7(n, with_oracle),
    }
}

/// Reports for `n = 1..=n_max` in ascending order, with oracles for
/// `n <= oracle_max`. Work for different `n` runs in parallel.
pub fn verify_range(id: IdentityId, n_max: u64, oracle_max: u64) -> Vec<IdentityReport> {
    (1..=n_max)
        .into_par_iter()
        .map(|n| verify(id, n, n <= oracle_max))
        .collect()
}

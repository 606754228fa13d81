//! Closed-form extremal bounds, each tagged with how far it can be trusted.
//!
//! Rational formulas are evaluated exactly; only the Kruskal–Katona bound in
//! Lovász form is a floating-point value.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::vertex_set::{binomial, checked_binomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Upper,
    Lower,
    Exact,
    /// An upper bound that holds only under the stated condition.
    ConditionalUpper,
    /// A lower bound that holds only under the stated condition.
    ConditionalLower,
}

impl BoundKind {
    pub fn is_conditional(self) -> bool {
        matches!(self, BoundKind::ConditionalUpper | BoundKind::ConditionalLower)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
            BoundKind::Exact => "exact",
            BoundKind::ConditionalUpper => "conditional upper",
            BoundKind::ConditionalLower => "conditional lower",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Rational(BigRational),
    Real(f64),
}

impl BoundValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundValue::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            BoundValue::Real(x) => *x,
        }
    }

    /// The exact value, when the bound is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            BoundValue::Rational(q) => Some(q),
            BoundValue::Real(_) => None,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            BoundValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            BoundValue::Real(x) => write!(f, "{x:.9}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub name: String,
    pub value: BoundValue,
    pub kind: BoundKind,
    pub validity_note: String,
}

impl BoundReport {
    fn rational(name: &str, value: BigRational, kind: BoundKind, note: &str) -> Self {
        BoundReport {
            name: name.to_string(),
            value: BoundValue::Rational(value),
            kind,
            validity_note: note.to_string(),
        }
    }
}

fn int(x: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn frac(num: BigRational, den: u64) -> BigRational {
    num / BigRational::from_integer(BigInt::from(den))
}

fn check_ell(ell: usize) -> Result<()> {
    if ell == 0 {
        return invalid("path length ell must be at least 1");
    }
    Ok(())
}

/// `(ℓ-1)n/2`, the maximum size of a graph without a path of `ℓ` edges.
pub fn erdos_gallai(n: usize, ell: usize) -> Result<BoundReport> {
    check_ell(ell)?;
    Ok(BoundReport::rational(
        "erdos_gallai",
        frac(int(((ell - 1) * n) as u128), 2),
        BoundKind::Upper,
        "graphs without a path of ell edges; all n",
    ))
}

/// `ex(n, P_ℓ) = (ℓ-1)n/2 - ρ(ℓ-ρ)/2` where `n ≡ ρ (mod ℓ)`.
pub fn faudree_schelp(n: usize, ell: usize) -> Result<BoundReport> {
    check_ell(ell)?;
    let rho = n % ell;
    let value = frac(int(((ell - 1) * n) as u128) - int((rho * (ell - rho)) as u128), 2);
    Ok(BoundReport::rational(
        "faudree_schelp",
        value,
        BoundKind::Exact,
        "exact for all n; extremal graphs are disjoint cliques K_ell plus K_rho, and for odd ell also other structures",
    ))
}

/// `(ℓ-1)/r · C(n, r-1)`, conjectured for tight trees with `ℓ` edges.
pub fn kalai_bound(n: usize, r: usize, ell: usize) -> Result<BoundReport> {
    check_ell(ell)?;
    check_r(r)?;
    let value = frac(int((ell as u128 - 1) * binomial(n as u64, r as u64 - 1)), r as u64);
    let (kind, note) = if r == 2 {
        (
            BoundKind::Upper,
            "trees with ell edges; for graphs this is the Erdős–Sós bound for paths, proven",
        )
    } else {
        (
            BoundKind::ConditionalUpper,
            "conjectural for r >= 3 (tight trees with ell edges)",
        )
    };
    Ok(BoundReport::rational("kalai", value, kind, note))
}

/// `(ℓ-1) · C(n, r-1)`: a family with more edges than `(ℓ-1)|∂G|`
/// contains every tight tree with `ℓ` edges.
pub fn greedy_bound(n: usize, r: usize, ell: usize) -> Result<BoundReport> {
    check_ell(ell)?;
    check_r(r)?;
    Ok(BoundReport::rational(
        "greedy",
        int((ell as u128 - 1) * binomial(n as u64, r as u64 - 1)),
        BoundKind::Upper,
        "tight trees with ell edges; all n",
    ))
}

fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        return invalid("uniformity r must be at least 1");
    }
    Ok(())
}

/// `C(y, k)` for real `y` as `y(y-1)...(y-k+1)/k!`.
pub fn real_binomial(y: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (y - i as f64) / (i + 1) as f64;
    }
    acc
}

/// Lovász form of Kruskal–Katona: a `k`-uniform family with `m = C(y, k)`
/// members (`y ≥ k` real) has at least `C(y, k-1)` sets in its shadow.
///
/// `y` is found by bisection on `[k-1, ∞)`, where `C(·, k)` is increasing,
/// until the bracket stops shrinking in floating point. Integer `y` is
/// detected exactly, so the bound is exact on `m = C(y₀, k)`.
pub fn kk_shadow_bound(m: u128, k: usize) -> f64 {
    if m == 0 || k == 0 {
        return 0.0;
    }
    if k == 1 {
        return 1.0;
    }
    let target = m as f64;
    let mut lo = (k - 1) as f64;
    let mut hi = k as f64;
    while real_binomial(hi, k) < target {
        lo = hi;
        hi *= 2.0;
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if real_binomial(mid, k) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let y0 = hi.round();
    if (y0 - hi).abs() < 1e-6 && y0 < 1e15 && checked_binomial(y0 as u64, k as u64) == Some(m) {
        return binomial(y0 as u64, k as u64 - 1) as f64;
    }
    real_binomial(hi, k - 1)
}

pub fn kk_shadow_report(m: u128, k: usize) -> BoundReport {
    BoundReport {
        name: "kruskal_katona".into(),
        value: BoundValue::Real(kk_shadow_bound(m, k)),
        kind: BoundKind::Lower,
        validity_note: "lower bound on the (k-1)-shadow of any k-uniform family with m members".into(),
    }
}

/// `(σ-1) · C(n-σ+1, r-1) = |Ψ¹_{σ-1}(n, r)|`.
pub fn crosscut_lower(n: usize, r: usize, sigma: usize) -> Result<BoundReport> {
    check_r(r)?;
    if sigma == 0 {
        return invalid("sigma must be at least 1");
    }
    let value = if n + 1 < sigma {
        0
    } else {
        (sigma as u128 - 1) * binomial((n + 1 - sigma) as u64, r as u64 - 1)
    };
    Ok(BoundReport::rational(
        "crosscut_lower",
        int(value),
        BoundKind::Lower,
        "size of the crosscut construction; free of every pattern with crosscut number sigma",
    ))
}

/// `C(n, r) - C(n-τ+1, r) = |Ψ_{τ-1}(n, r)|`.
pub fn psi_lower(n: usize, r: usize, tau: usize) -> Result<BoundReport> {
    check_r(r)?;
    if tau == 0 {
        return invalid("tau must be at least 1");
    }
    let rest = (n + 1).saturating_sub(tau) as u64;
    let value = binomial(n as u64, r as u64) - binomial(rest, r as u64);
    Ok(BoundReport::rational(
        "psi_lower",
        int(value),
        BoundKind::Lower,
        "size of the cover construction; free of every pattern with cover number tau",
    ))
}

/// Known bounds for the tight path with `ℓ` edges: `(lower, upper)`.
pub fn tight_path_bounds(n: usize, r: usize, ell: usize) -> Result<(BoundReport, BoundReport)> {
    check_ell(ell)?;
    check_r(r)?;
    let shadow = int(binomial(n as u64, r as u64 - 1));
    let lower = BoundReport::rational(
        "tight_path_lower",
        frac(shadow.clone() * int(ell as u128 - 1), r as u64),
        BoundKind::ConditionalLower,
        "requires design existence",
    );
    let upper_value = if r.is_multiple_of(2) {
        frac(shadow * int(ell as u128 - 1), 2)
    } else {
        frac(shadow * int((ell + (ell - 1) / r) as u128), 2)
    };
    let upper = BoundReport::rational("tight_path_upper", upper_value, BoundKind::Upper, "all n");
    Ok((lower, upper))
}

/// Transfers a graph bound to `r`-graphs (`r` even) by averaging over
/// partitions of `[n]` into `r/2`-sets: `ex_graph / C(⌊2n/r⌋, 2) · C(n, r)`.
pub fn frankl_half_bound(n: usize, r: usize, ex_graph_value: u128) -> Result<BoundReport> {
    if r == 0 || r % 2 == 1 {
        return invalid(format!("the half-half transfer needs even r, got r={r}"));
    }
    let parts = (2 * n / r) as u64;
    let pairs = binomial(parts, 2);
    if pairs == 0 {
        return invalid("fewer than two parts in the partition");
    }
    let value = int(ex_graph_value) * int(binomial(n as u64, r as u64)) / int(pairs);
    let (kind, note) = if n.is_multiple_of(r / 2) {
        (
            BoundKind::Upper,
            "asymptotic transfer, a=b=r/2; rigorous here since r/2 divides n",
        )
    } else {
        (
            BoundKind::ConditionalUpper,
            "asymptotic transfer, a=b=r/2; r/2 does not divide n, leftover vertices are ignored",
        )
    };
    Ok(BoundReport::rational("frankl_half", value, kind, note))
}

/// `(λ-1)/r · C(n, r-1)`, the size of a Steiner `(n, r, r-1, λ-1)` system.
pub fn steiner_lower(n: usize, r: usize, lambda: usize) -> Result<BoundReport> {
    check_r(r)?;
    if lambda < 2 {
        return invalid("lambda must be at least 2");
    }
    Ok(BoundReport::rational(
        "steiner_lower",
        frac(int((lambda as u128 - 1) * binomial(n as u64, r as u64 - 1)), r as u64),
        BoundKind::ConditionalLower,
        "holds only for n admitting an (n,r,r-1,lambda-1) design",
    ))
}

/// Integer value of an exact rational bound; `None` for non-integers.
pub fn integer_value(report: &BoundReport) -> Option<u128> {
    let q = report.value.as_rational()?;
    if !q.is_integer() || q < &BigRational::zero() {
        return None;
    }
    q.to_integer().to_u128()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(r: &BoundReport) -> f64 {
        r.value.to_f64()
    }

    #[test]
    fn graph_path_values() {
        assert_eq!(val(&erdos_gallai(6, 3).unwrap()), 6.0);
        assert_eq!(val(&erdos_gallai(7, 3).unwrap()), 7.0);
        assert_eq!(val(&faudree_schelp(7, 3).unwrap()), 6.0);
        assert_eq!(val(&faudree_schelp(7, 4).unwrap()), 9.0);
        assert_eq!(val(&faudree_schelp(6, 3).unwrap()), 6.0);
        assert!(erdos_gallai(5, 0).is_err());
    }

    #[test]
    fn faudree_schelp_below_erdos_gallai() {
        for n in 1..=60 {
            for ell in 1..=12 {
                let fs = faudree_schelp(n, ell).unwrap().value;
                let eg = erdos_gallai(n, ell).unwrap().value;
                let (fs, eg) = (fs.as_rational().unwrap().clone(), eg.as_rational().unwrap().clone());
                assert!(fs.is_integer());
                assert!(fs <= eg);
                assert_eq!(fs == eg, n % ell == 0, "n={n} ell={ell}");
            }
        }
    }

    #[test]
    fn hypergraph_formulas() {
        assert_eq!(val(&kalai_bound(7, 3, 2).unwrap()), 7.0);
        assert_eq!(val(&kalai_bound(10, 3, 3).unwrap()), 30.0);
        assert_eq!(kalai_bound(9, 2, 4).unwrap().value, erdos_gallai(9, 4).unwrap().value);
        assert!(kalai_bound(9, 3, 4).unwrap().kind.is_conditional());
        assert_eq!(val(&greedy_bound(7, 3, 2).unwrap()), 21.0);
        assert_eq!(val(&greedy_bound(9, 4, 1).unwrap()), 0.0);
        assert_eq!(val(&crosscut_lower(6, 3, 3).unwrap()), 12.0);
        assert_eq!(val(&crosscut_lower(9, 3, 1).unwrap()), 0.0);
        assert_eq!(val(&psi_lower(6, 3, 3).unwrap()), 16.0);
        assert_eq!(val(&psi_lower(9, 3, 1).unwrap()), 0.0);
    }

    #[test]
    fn tight_path_values() {
        let (lo, hi) = tight_path_bounds(10, 4, 3).unwrap();
        assert_eq!((val(&lo), val(&hi)), (60.0, 120.0));
        assert_eq!(lo.validity_note, "requires design existence");
        let (_, hi) = tight_path_bounds(10, 3, 4).unwrap();
        assert_eq!(val(&hi), 112.5);
        let (_, hi) = tight_path_bounds(11, 2, 5).unwrap();
        assert_eq!(hi.value, erdos_gallai(11, 5).unwrap().value);
    }

    #[test]
    fn half_transfer() {
        assert_eq!(val(&frankl_half_bound(9, 2, 6).unwrap()), 6.0);
        assert_eq!(val(&frankl_half_bound(12, 4, 6).unwrap()), 198.0);
        assert!(frankl_half_bound(12, 3, 6).is_err());
        assert!(val(&frankl_half_bound(12, 4, 7).unwrap()) > 198.0);
    }

    #[test]
    fn steiner_values() {
        assert_eq!(val(&steiner_lower(7, 3, 2).unwrap()), 7.0);
        assert_eq!(val(&steiner_lower(9, 3, 2).unwrap()), 12.0);
        assert_eq!(
            steiner_lower(11, 3, 2).unwrap().value,
            kalai_bound(11, 3, 2).unwrap().value
        );
    }

    #[test]
    fn kk_examples() {
        assert_eq!(kk_shadow_bound(4, 3), 6.0);
        assert_eq!(kk_shadow_bound(10, 3), 10.0);
        assert_eq!(kk_shadow_bound(0, 3), 0.0);
        let b = kk_shadow_bound(5, 3);
        assert!((b - 6.78).abs() < 0.01, "{b}");
    }
}

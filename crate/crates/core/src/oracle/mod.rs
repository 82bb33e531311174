//! Floating-point oracle over the roots.
//!
//! Everything here is computed from numerically located roots and is
//! independent of the invariant formulas in [`crate::invariants`]; the two
//! are compared coefficient by coefficient.

pub mod binary;
pub mod deltas;
pub mod i_invariants;
pub mod roots;
pub mod symmetric;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use binary::{gl2_transform, transform_pairs, BinaryQuintic, Matrix2};
pub use deltas::{
    antisymmetric_deltas, delta_values, dij, pentagon_products, sylow_generator, tilde_delta, DeltaVector,
    PentagonProducts, ProjectivePair, PENTAGON_PAIRS,
};
pub use i_invariants::invariants_i;
pub use roots::{find_roots, RootQuintet};
pub use symmetric::{elementary_symmetric, elementary_symmetric_all};

use crate::error::{Error, Result};
use crate::invariants::{resolvent_sextic, MonicQuintic};
use crate::poly::UniPoly;
use crate::rational::{denominator_lcm, to_f64, Rational};

pub type ComplexVal = Complex64;

/// Tolerances used by the cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Allowed relative deviation between exact and numeric resolvent coefficients.
    pub tol: f64,
    /// Relative window for calling a numeric value rational.
    pub rational_window: f64,
    /// Largest denominator considered by the rational-proximity test.
    pub max_den: u64,
    /// Root-finder stopping tolerance.
    pub root_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { tol: 1e-6, rational_window: 1e-9, max_den: 1_000_000, root_tol: 1e-15 }
    }
}

/// Coefficients `d1..d6` of `prod (x - delta_i)` (real parts), or an error
/// when some imaginary part exceeds `1e-6` relative.
pub fn numeric_resolvent(roots: &RootQuintet) -> Result<[f64; 6]> {
    let deltas = delta_values(roots)?;
    let e = deltas.symmetric_functions();
    let mut out = [0.0; 6];
    for r in 0..6 {
        // prod (x - t_i) has coefficient (-1)^r e_r on x^(6-r)
        let c = if r % 2 == 0 { -e[r] } else { e[r] };
        let scale = symmetric_magnitude(&deltas, r + 1);
        if c.im.abs() > 1e-6 * (1.0 + c.re.abs()).max(1e-9 * scale) {
            return Err(Error::DegenerateRoots {
                separation: format!("imaginary part {} in coefficient d{}", c.im, r + 1),
            });
        }
        out[r] = c.re;
    }
    Ok(out)
}

/// `e_r(|delta_1|, ..., |delta_6|)`, the size of the terms summed in `e_r`.
fn symmetric_magnitude(deltas: &DeltaVector, r: usize) -> f64 {
    let abs: Vec<Complex64> = deltas.delta.iter().map(|d| Complex64::new(d.norm(), 0.0)).collect();
    elementary_symmetric(&abs, r).re
}

/// Relative deviation `|exact - numeric| / |exact|`; when the exact value is
/// zero the deviation is measured against the size of the summed terms.
pub fn relative_deviation(exact: &Rational, numeric: f64, term_scale: f64) -> f64 {
    let e = to_f64(exact);
    let denom = if e == 0.0 { term_scale.max(1.0) } else { e.abs() };
    (e - numeric).abs() / denom
}

/// The rational with the smallest denominator (at most `max_den`) within
/// `window * (1 + |x|)` of `x`, via continued-fraction convergents.
pub fn rational_proximity(x: f64, window: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let allowed = window * (1.0 + x.abs());
    let floor = x.floor();
    let a0 = BigInt::from_f64(floor)?;
    let mut frac_part = x - floor;
    // convergents h/k
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    let max_den = BigInt::from(max_den);
    for _ in 0..64 {
        let approx = Rational::new(h.clone(), k.clone());
        if (to_f64(&approx) - x).abs() <= allowed {
            return Some(approx);
        }
        if frac_part <= f64::EPSILON {
            return None;
        }
        let inv = 1.0 / frac_part;
        let a = inv.floor();
        frac_part = inv - a;
        let a = BigInt::from_f64(a)?;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if k_next > max_den {
            return None;
        }
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    None
}

/// `prod_{i<j} (a_i - a_j)^2`.
pub fn numeric_discriminant(roots: &[Complex64; 5]) -> Complex64 {
    let mut d = Complex64::one();
    for i in 0..5 {
        for j in i + 1..5 {
            d *= (roots[i] - roots[j]).powu(2);
        }
    }
    d
}

/// Result of evaluating the resolvent-discriminant factorization numerically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscriminantRelation {
    /// `log10 |R|` with `R = disc_g / (P^4 disc_f I2^2 I3 I4^2)`; `None` when
    /// not finite.
    pub log10_abs_ratio: Option<f64>,
    /// `R` itself when it fits in a double.
    pub ratio: Option<(f64, f64)>,
    pub log10_abs_disc_g: Option<f64>,
    /// Resolvent roots separated by more than `1e-6` of their magnitude.
    pub disc_g_nonzero: bool,
    /// `min |theta_i - theta_j| / max |theta_i|`.
    pub relative_separation: f64,
}

/// Evaluates the factorization in log space (the resolvent discriminant has
/// degree 300 in the roots).
pub fn discriminant_relation_check(roots: &RootQuintet) -> Result<DiscriminantRelation> {
    let a = &roots.roots;
    let thetas = delta_values(roots)?;
    let mut log_g = Complex64::zero();
    for i in 0..6 {
        for j in i + 1..6 {
            log_g += (thetas.delta[i] - thetas.delta[j]).powu(2).ln();
        }
    }
    let p = (a[0] - a[1]) * (a[2] - a[3]) * (a[3] - a[4]) * (a[2] - a[4]);
    let (i2, i3, i4) = invariants_i(a);
    let log_den = 4.0 * p.ln() + numeric_discriminant(a).ln() + 2.0 * i2.ln() + i3.ln() + 2.0 * i4.ln();
    let log_r = log_g - log_den;
    let ln10 = std::f64::consts::LN_10;
    let ratio = log_r.exp();
    let relative_separation = thetas.min_pairwise_distance() / thetas.max_norm();
    Ok(DiscriminantRelation {
        log10_abs_ratio: log_r.re.is_finite().then_some(log_r.re / ln10),
        ratio: ratio.is_finite().then_some((ratio.re, ratio.im)),
        log10_abs_disc_g: log_g.re.is_finite().then_some(log_g.re / ln10),
        disc_g_nonzero: log_g.re.is_finite() && relative_separation > 1e-6,
        relative_separation,
    })
}

/// Outcome of checking the exact pipeline against the numeric one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub roots: Vec<(f64, f64)>,
    pub residual: f64,
    pub backward_error: f64,
    pub numeric_resolvent: [f64; 6],
    /// Per coefficient `d1..d6`.
    pub relative_deviations: [f64; 6],
    pub max_relative_deviation: f64,
    /// Resolvent roots that passed the rational-proximity test.
    pub numeric_rational_deltas: Vec<String>,
    pub exact_has_rational_root: bool,
    pub numeric_has_rational_root: bool,
    pub rational_root_bits_agree: bool,
    pub within_tolerance: bool,
    pub discriminant_relation: DiscriminantRelation,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.within_tolerance && self.rational_root_bits_agree
    }
}

/// Denominator bound for the resolvent roots: with `L` the lcm of the monic
/// coefficients' denominators, `L^10 theta` is an algebraic integer.
pub fn resolvent_denominator_bound(q: &MonicQuintic) -> BigInt {
    denominator_lcm(q.b.iter()).pow(10)
}

/// Runs the numeric oracle on `p` and compares it with the exact resolvent.
pub fn cross_check(p: &UniPoly, config: &OracleConfig) -> Result<CrossCheck> {
    let roots = find_roots(p, config.root_tol)?;
    let exact = resolvent_sextic(p)?;
    let numeric = numeric_resolvent(&roots)?;
    let thetas = delta_values(&roots)?;
    let mut relative_deviations = [0.0; 6];
    for r in 0..6 {
        relative_deviations[r] = relative_deviation(&exact.d[r], numeric[r], symmetric_magnitude(&thetas, r + 1));
    }
    let max_relative_deviation = relative_deviations.iter().cloned().fold(0.0, f64::max);

    let q = MonicQuintic::from_poly(p)?;
    let den_bound = resolvent_denominator_bound(&q);
    let max_den = den_bound.to_u64().map_or(config.max_den, |b| b.min(config.max_den));
    let numeric_rational: Vec<Rational> = thetas
        .delta
        .iter()
        .filter(|t| t.im.abs() <= config.rational_window * (1.0 + t.norm()))
        .filter_map(|t| rational_proximity(t.re, config.rational_window, max_den))
        .collect();
    let exact_has_rational_root = !exact.poly.rational_roots()?.is_empty();
    let numeric_has_rational_root = !numeric_rational.is_empty();
    Ok(CrossCheck {
        roots: roots.roots.iter().map(|z| (z.re, z.im)).collect(),
        residual: roots.residual,
        backward_error: roots.backward_error,
        numeric_resolvent: numeric,
        relative_deviations,
        max_relative_deviation,
        numeric_rational_deltas: numeric_rational.iter().map(|r| r.to_string()).collect(),
        exact_has_rational_root,
        numeric_has_rational_root,
        rational_root_bits_agree: exact_has_rational_root == numeric_has_rational_root,
        within_tolerance: max_relative_deviation <= config.tol,
        discriminant_relation: discriminant_relation_check(&roots)?,
    })
}

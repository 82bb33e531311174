use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{discriminant, expect_degree, UniPoly};
use crate::rational::to_f64;

pub const MAX_ITERATIONS: usize = 500;

/// Five complex roots in canonical order (by real part, then imaginary part).
#[derive(Clone, Debug, PartialEq)]
pub struct RootQuintet {
    pub roots: [Complex64; 5],
    /// `max |p(a_i)|` for the polynomial the roots were computed from.
    pub residual: f64,
    /// `max |p(a_i)| / sum |c_k| |a_i|^k`, the normwise backward error.
    pub backward_error: f64,
}

impl RootQuintet {
    /// Wraps roots supplied directly, e.g. from a closed form.
    pub fn from_roots(roots: [Complex64; 5]) -> Self {
        let mut roots = roots;
        sort_canonical(&mut roots);
        RootQuintet { roots, residual: 0.0, backward_error: 0.0 }
    }

    /// Roots reordered as `a'_i = a_{perm[i]}` (0-based).
    pub fn permuted(&self, perm: [usize; 5]) -> [Complex64; 5] {
        perm.map(|i| self.roots[i])
    }
}

fn sort_canonical(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

pub fn to_complex_coeffs(p: &UniPoly) -> Vec<Complex64> {
    p.coeffs().iter().map(|c| Complex64::new(to_f64(c), 0.0)).collect()
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
}

fn at_rounding_level(coeffs: &[Complex64], z: Complex64) -> bool {
    let n = coeffs.len() as f64;
    let magnitude = coeffs.iter().rev().fold(0.0, |acc, c| acc * z.norm() + c.norm());
    horner(coeffs, z).norm() <= 4.0 * n * f64::EPSILON * magnitude
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    for &c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

/// Durand-Kerner iteration for all roots of a polynomial with complex
/// coefficients (ascending powers), followed by two Newton polishing steps.
///
/// Stops once every correction is below `tol * (1 + |z|)`, or once every
/// residual is at the rounding level of its Horner evaluation (clustered roots
/// never reach the step criterion).
pub fn durand_kerner(coeffs: &[Complex64], tol: f64, max_iterations: usize) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lc = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lc).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    // guesses on a circle, rotated off the real axis
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, angle)
        })
        .collect();
    let mut converged = false;
    for _ in 0..max_iterations {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = horner(&monic, z[i]) / denom;
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < tol || z.iter().all(|&zi| at_rounding_level(&monic, zi)) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { iterations: max_iterations });
    }
    for zi in z.iter_mut() {
        for _ in 0..2 {
            let (v, d) = horner_with_derivative(&monic, *zi);
            let step = v / d;
            if step.is_finite() && !d.is_zero() {
                let candidate = *zi - step;
                if horner(&monic, candidate).norm() <= v.norm() {
                    *zi = candidate;
                }
            }
        }
    }
    Ok(z)
}

/// The five roots of a squarefree quintic.
pub fn find_roots(p: &UniPoly, tol: f64) -> Result<RootQuintet> {
    expect_degree(p, 5)?;
    if discriminant(p)?.is_zero() {
        return Err(Error::RepeatedRoots);
    }
    let coeffs = to_complex_coeffs(p);
    let found = durand_kerner(&coeffs, tol, MAX_ITERATIONS)?;
    let mut roots: [Complex64; 5] = found.try_into().expect("five roots");
    sort_canonical(&mut roots);
    let mut residual = 0.0f64;
    let mut backward_error = 0.0f64;
    for r in &roots {
        let v = horner(&coeffs, *r).norm();
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm() * r.norm().powi(k as i32))
            .sum();
        residual = residual.max(v);
        backward_error = backward_error.max(v / scale);
    }
    Ok(RootQuintet { roots, residual, backward_error })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn fifth_roots_of_unity() {
        let q = find_roots(&UniPoly::from_ints(&[-1, 0, 0, 0, 0, 1]), 1e-15).unwrap();
        for k in 0..5 {
            let expected = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 5.0);
            assert!(q.roots.iter().any(|r| close(*r, expected, 1e-10)), "{expected}");
        }
    }

    #[test]
    fn fifth_roots_of_two() {
        let q = find_roots(&UniPoly::from_ints(&[-2, 0, 0, 0, 0, 1]), 1e-15).unwrap();
        let r = 2f64.powf(0.2);
        for k in 0..5 {
            let expected = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / 5.0);
            assert!(q.roots.iter().any(|z| close(*z, expected, 1e-10)));
        }
        // canonical order
        assert!(q.roots.windows(2).all(|w| w[0].re <= w[1].re));
    }

    #[test]
    fn re_expansion_matches_input() {
        let p = UniPoly::from_ints(&[-11, 7, 5, -2, 3, 1]);
        let q = find_roots(&p, 1e-15).unwrap();
        let mut prod = vec![Complex64::new(1.0, 0.0)];
        for r in q.roots {
            let mut next = vec![Complex64::zero(); prod.len() + 1];
            for (i, c) in prod.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            prod = next;
        }
        for (c, e) in prod.iter().zip(to_complex_coeffs(&p)) {
            assert!((c - e).norm() <= 1e-8 * (1.0 + e.norm()), "{c} vs {e}");
        }
    }

    #[test]
    fn repeated_roots_rejected() {
        let p = UniPoly::from_ints(&[0, 0, 1, 0, 0, 1]);
        assert_eq!(find_roots(&p, 1e-14), Err(Error::RepeatedRoots));
    }

    #[test]
    fn iteration_cap_reports_no_convergence() {
        let coeffs = to_complex_coeffs(&UniPoly::from_ints(&[-11, 7, 5, -2, 3, 1]));
        assert_eq!(durand_kerner(&coeffs, 0.0, 3), Err(Error::NoConvergence { iterations: 3 }));
    }
}

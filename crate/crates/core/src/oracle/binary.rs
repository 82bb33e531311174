//! Binary quintic forms and the `GL2` substitution action.

use num_complex::Complex64;
use num_traits::Zero;

use super::deltas::ProjectivePair;
use super::roots::durand_kerner;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Matrix2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        use crate::rational::rat;
        Matrix2::new(rat(a), rat(b), rat(c), rat(d))
    }

    pub fn identity() -> Self {
        Matrix2::from_ints(1, 0, 0, 1)
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

/// `sum_k coeffs[k] x^k y^(5-k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuintic {
    pub coeffs: [Rational; 6],
}

impl BinaryQuintic {
    /// Homogenizes a polynomial of degree at most 5.
    pub fn from_poly(p: &UniPoly) -> Self {
        BinaryQuintic { coeffs: std::array::from_fn(|k| p.coeff(k)) }
    }

    /// `f(x, 1)`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.to_vec())
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut term = c.clone();
            for _ in 0..k {
                term *= x;
            }
            for _ in k..5 {
                term *= y;
            }
            acc += term;
        }
        acc
    }

    /// Linear factors `beta_i x - gamma_i y` whose product is this form,
    /// from numeric roots of `f(x, 1)`. A lowered degree contributes factors
    /// `y`, i.e. pairs `(gamma, beta) = (-1, 0)`.
    pub fn projective_pairs(&self, tol: f64) -> Result<[ProjectivePair; 5]> {
        let affine = self.dehomogenize();
        let m = affine.degree().ok_or(Error::ZeroPolynomial)?;
        let coeffs: Vec<Complex64> = affine.coeffs().iter().map(|c| Complex64::new(to_f64(c), 0.0)).collect();
        let roots = durand_kerner(&coeffs, tol, super::roots::MAX_ITERATIONS)?;
        let lead = Complex64::new(to_f64(affine.leading().expect("nonzero")), 0.0);
        let at_infinity = ProjectivePair { gamma: Complex64::new(-1.0, 0.0), beta: Complex64::zero() };
        let mut pairs = [at_infinity; 5];
        for (i, r) in roots.into_iter().enumerate() {
            pairs[i] = ProjectivePair::affine(r);
        }
        if m == 0 {
            pairs[0] = at_infinity.scaled(lead);
        } else {
            pairs[0] = pairs[0].scaled(lead);
        }
        Ok(pairs)
    }
}

/// `f(a x + b y, c x + d y)`, expanded exactly.
pub fn gl2_transform(f: &BinaryQuintic, m: &Matrix2) -> Result<BinaryQuintic> {
    if m.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    // bivariate forms as coefficient vectors indexed by the power of x
    let lin_x = [m.b.clone(), m.a.clone()]; // a x + b y
    let lin_y = [m.d.clone(), m.c.clone()]; // c x + d y
    let mul = |p: &[Rational], q: &[Rational]| {
        let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    };
    let mut out = vec![Rational::zero(); 6];
    for (k, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = vec![c.clone()];
        for _ in 0..k {
            term = mul(&term, &lin_x);
        }
        for _ in k..5 {
            term = mul(&term, &lin_y);
        }
        for (o, t) in out.iter_mut().zip(term) {
            *o += t;
        }
    }
    Ok(BinaryQuintic { coeffs: std::array::from_fn(|k| out[k].clone()) })
}

/// Pairs of `f^M` from pairs of `f`: `beta' = a beta - c gamma`,
/// `gamma' = d gamma - b beta`.
pub fn transform_pairs(pairs: &[ProjectivePair; 5], m: &Matrix2) -> [ProjectivePair; 5] {
    let [a, b, c, d] = [&m.a, &m.b, &m.c, &m.d].map(|x| Complex64::new(to_f64(x), 0.0));
    pairs.map(|p| ProjectivePair { gamma: d * p.gamma - b * p.beta, beta: a * p.beta - c * p.gamma })
}

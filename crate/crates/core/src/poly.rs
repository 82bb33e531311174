//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{positive_divisors, Rational};

/// A polynomial with coefficients stored by ascending power.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree` is the index of the last entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Builds a polynomial from integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `p(x + t)` by Horner composition.
    pub fn shift(&self, t: &Rational) -> Self {
        let x_plus_t = UniPoly::new(vec![t.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            &(&acc * &x_plus_t) + &UniPoly::constant(c.clone())
        })
    }

    /// `p(lambda * x)`.
    pub fn scale_argument(&self, lambda: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow *= lambda;
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let d_lc = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d_deg] / &d_lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic().unwrap_or_default()
    }

    /// Clears denominators and removes the content: returns integer
    /// coefficients with gcd 1 and a positive leading entry.
    pub fn primitive_integer_coeffs(&self) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().expect("nonzero").is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Ok(ints.into_iter().map(|c| c / &content * &sign).collect())
    }

    fn from_big_ints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// Every rational root, ascending, without duplicates.
    ///
    /// The primitive integer polynomial `a x^n + ...` is turned into the monic
    /// integer polynomial `a^(n-1) p(y / a)`, whose rational roots are integers.
    /// Those are located by Sturm-count bisection over half-integer endpoints.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        let ints = self.primitive_integer_coeffs()?;
        let n = ints.len() - 1;
        if n == 0 {
            return Ok(Vec::new());
        }
        let lead = ints[n].clone();
        let monic_ints = monicize(&ints);
        let h = UniPoly::from_big_ints(monic_ints);
        let squarefree = h.div_rem(&h.gcd(&h.derivative()))?.0;
        let mut roots: Vec<Rational> = integer_roots_of_monic(&squarefree)
            .into_iter()
            .map(|y| Rational::new(y, lead.clone()))
            .collect();
        roots.sort();
        roots.dedup();
        debug_assert!(roots.iter().all(|r| self.eval(r).is_zero()));
        Ok(roots)
    }

    /// A factor of degree 1 or 2 over the rationals, if one exists.
    ///
    /// Only meaningful for degree <= 5, where any proper factorization has a
    /// factor of degree at most 2.
    pub fn low_degree_factor(&self) -> Result<Option<UniPoly>> {
        if let Some(r) = self.rational_roots()?.first() {
            return Ok(Some(UniPoly::linear_root(r)));
        }
        let ints = self.primitive_integer_coeffs()?;
        let n = ints.len() - 1;
        if n < 4 {
            return Ok(None);
        }
        let lead = ints[n].clone();
        let h = UniPoly::from_big_ints(monicize(&ints));
        let found = monic_integer_quadratic_factor(&h);
        Ok(found.map(|(s, t)| {
            // y^2 + s y + t with y = lead * x
            let l = Rational::from_integer(lead.clone());
            UniPoly::new(vec![
                Rational::from_integer(t) / (&l * &l),
                Rational::from_integer(s) / &l,
                Rational::one(),
            ])
        }))
    }

    pub fn is_irreducible_quintic(&self) -> Result<bool> {
        expect_degree(self, 5)?;
        Ok(self.low_degree_factor()?.is_none())
    }
}

pub(crate) fn expect_degree(p: &UniPoly, expected: usize) -> Result<()> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(d) if d != expected => Err(Error::WrongDegree { expected, found: d }),
        Some(_) => Ok(()),
    }
}

/// `a^(n-1) p(y / a)` for primitive integer `p` with leading coefficient `a`.
fn monicize(ints: &[BigInt]) -> Vec<BigInt> {
    let n = ints.len() - 1;
    let lead = &ints[n];
    let mut out = vec![BigInt::zero(); n + 1];
    let mut pow = BigInt::one();
    for i in (0..n).rev() {
        out[i] = &ints[i] * &pow;
        pow *= lead;
    }
    out[n] = BigInt::one();
    out
}

/// Fujiwara bound `2 max |a_(n-k) / a_n|^(1/k)`, rounded up: every complex
/// root has modulus below it.
fn root_bound(h: &UniPoly) -> BigInt {
    let n = h.degree().unwrap_or(0);
    let lc = h.leading().cloned().unwrap_or_else(Rational::one).abs();
    let mut max = BigInt::zero();
    for k in 1..=n {
        let mut a = h.coeffs[n - k].abs() / &lc;
        if k == n {
            a /= Rational::from_integer(BigInt::from(2));
        }
        let ceil = a.ceil().to_integer();
        let mut r = ceil.nth_root(k as u32);
        if r.pow(k as u32) < ceil {
            r += 1;
        }
        max = max.max(r);
    }
    BigInt::from(2) * max + 1
}

/// Positive rescaling of `p` to coprime integer coefficients; signs at every
/// point are unchanged.
fn integer_rescale(p: &UniPoly) -> Vec<BigInt> {
    let mut ints = p.primitive_integer_coeffs().expect("nonzero");
    if p.leading().is_some_and(|l| l.is_negative()) {
        ints.iter_mut().for_each(|c| *c = -&*c);
    }
    ints
}

fn sturm_sequence(h: &UniPoly) -> Vec<Vec<BigInt>> {
    let mut seq = vec![h.clone(), h.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[k - 2].div_rem(&seq[k - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        let r = UniPoly::from_big_ints(integer_rescale(&-&r));
        seq.push(r);
    }
    seq.iter().map(integer_rescale).collect()
}

/// Sign of `2^d p(num / 2)` for integer coefficients `p` of degree `d`.
fn sign_at_half(p: &[BigInt], num: &BigInt) -> i8 {
    let d = p.len() - 1;
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        acc = acc * num + (&p[i] << (d - i));
    }
    if acc.is_zero() { 0 } else if acc.is_positive() { 1 } else { -1 }
}

fn sign_changes(seq: &[Vec<BigInt>], num: &BigInt) -> usize {
    let signs: Vec<i8> = seq.iter().map(|p| sign_at_half(p, num)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Integer roots of a monic squarefree integer polynomial.
fn integer_roots_of_monic(h: &UniPoly) -> Vec<BigInt> {
    match h.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => {
            let r = -h.coeff(0);
            return if r.is_integer() { vec![r.to_integer()] } else { Vec::new() };
        }
        _ => {}
    }
    let seq = sturm_sequence(h);
    let half = |k: &BigInt| BigInt::from(2) * k + 1;
    let bound = root_bound(h);
    // Each interval (lo + 1/2, hi + 1/2) holds the integers lo+1 ..= hi; the
    // endpoints are never roots since rational roots of h are integers.
    let mut stack = vec![(-&bound - 1, bound.clone())];
    let mut roots = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let v_lo = sign_changes(&seq, &half(&lo));
        let v_hi = sign_changes(&seq, &half(&hi));
        if v_lo <= v_hi {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if h.eval(&Rational::from_integer(hi.clone())).is_zero() {
                roots.push(hi);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    positive_divisors(n)
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .collect()
}

/// Searches for `y^2 + s y + t` dividing the monic integer polynomial `h`,
/// which must have no integer roots.
fn monic_integer_quadratic_factor(h: &UniPoly) -> Option<(BigInt, BigInt)> {
    match certified_quadratic_candidates(h) {
        Some(candidates) => candidates.into_iter().find(|(s, t)| {
            let q = UniPoly::from_big_ints(vec![t.clone(), s.clone(), BigInt::one()]);
            h.div_rem(&q).expect("nonzero").1.is_zero()
        }),
        None => quadratic_factor_by_divisors(h),
    }
}

const MAX_CANDIDATES: usize = 256;

/// Integer pairs `(s, t)` containing every monic quadratic factor of `h`.
///
/// Floating-point roots `z_i` with Weierstrass corrections `W_i` give disks
/// `|z - z_i| <= 2 n |W_i|` (evaluation error included), each holding exactly
/// one root once they are pairwise disjoint. A factor `y^2 + s y + t` pairs two
/// roots, so `-s` and `t` lie in the sum and product of two disks. `None`
/// when the disks overlap or the candidate set is too large.
fn certified_quadratic_candidates(h: &UniPoly) -> Option<Vec<(BigInt, BigInt)>> {
    use num_complex::Complex64;
    let n = h.degree()?;
    let c: Vec<f64> = h.coeffs.iter().map(crate::rational::to_f64).collect();
    if c.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let cc: Vec<Complex64> = c.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let z = crate::oracle::roots::durand_kerner(&cc, 1e-15, 2000).ok()?;
    let eps = f64::EPSILON;
    let mut radius = vec![0.0; n];
    for i in 0..n {
        let mut value = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0;
        for k in (0..=n).rev() {
            value = value * z[i] + cc[k];
            magnitude = magnitude * z[i].norm() + c[k].abs();
        }
        let mut denom = 1.0;
        for j in 0..n {
            if j != i {
                denom *= (z[i] - z[j]).norm();
            }
        }
        let err = value.norm() + 4.0 * (n as f64 + 1.0) * eps * magnitude;
        radius[i] = 2.0 * n as f64 * err / denom * (1.0 + 1e-6);
        if !radius[i].is_finite() {
            return None;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if (z[i] - z[j]).norm() <= radius[i] + radius[j] {
                return None;
            }
        }
    }
    let integers_near = |center: Complex64, r: f64| -> Option<Vec<BigInt>> {
        let r = r + 8.0 * eps * center.norm();
        if center.im.abs() > r {
            return Some(Vec::new());
        }
        if 2.0 * r > MAX_CANDIDATES as f64 {
            return None;
        }
        let lo = num_traits::FromPrimitive::from_f64((center.re - r).ceil())?;
        let hi: BigInt = num_traits::FromPrimitive::from_f64((center.re + r).floor())?;
        let mut out = Vec::new();
        let mut k: BigInt = lo;
        while k <= hi {
            out.push(k.clone());
            k += 1;
        }
        Some(out)
    };
    let mut candidates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ss = integers_near(-(z[i] + z[j]), radius[i] + radius[j])?;
            let rt = z[i].norm() * radius[j] + z[j].norm() * radius[i] + radius[i] * radius[j];
            let ts = integers_near(z[i] * z[j], rt)?;
            for s in &ss {
                for t in &ts {
                    candidates.push((s.clone(), t.clone()));
                }
            }
            if candidates.len() > MAX_CANDIDATES {
                return None;
            }
        }
    }
    Some(candidates)
}

/// Exhaustive variant of the quadratic search. Uses `t | h(0)`,
/// `1 + s + t | h(1)` and `1 - s + t | h(-1)`, with `|s| <= 2R` and
/// `|t| <= R^2` for the root bound `R`.
pub(crate) fn quadratic_factor_by_divisors(h: &UniPoly) -> Option<(BigInt, BigInt)> {
    let at = |k: i64| h.eval(&Rational::from_integer(k.into())).to_integer();
    let (h0, h1, hm1) = (at(0), at(1), at(-1));
    if h0.is_zero() || h1.is_zero() || hm1.is_zero() {
        return None;
    }
    let bound = root_bound(h);
    let s_max = &bound * 2;
    let t_max = &bound * &bound;
    let d1 = signed_divisors(&h1);
    for t in signed_divisors(&h0) {
        if t.abs() > t_max {
            continue;
        }
        for d in &d1 {
            let s: BigInt = d - BigInt::one() - &t;
            if s.abs() > s_max {
                continue;
            }
            let at_minus_one = BigInt::one() - &s + &t;
            if at_minus_one.is_zero() || !(&hm1 % &at_minus_one).is_zero() {
                continue;
            }
            let q = UniPoly::from_big_ints(vec![t.clone(), s.clone(), BigInt::one()]);
            if h.div_rem(&q).expect("nonzero").1.is_zero() {
                return Some((s, t));
            }
        }
    }
    None
}

/// `Res(p, q) = lc(p)^deg(q) * prod q(a_i)` over the roots `a_i` of `p`,
/// i.e. the determinant of the Sylvester matrix with the rows of `p` first.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rational> {
    let m = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n = q.degree().ok_or(Error::ZeroPolynomial)?;
    let size = m + n;
    if size == 0 {
        return Ok(Rational::one());
    }
    let mut rows = vec![vec![Rational::zero(); size]; size];
    // Row entries run from the highest power down.
    for i in 0..n {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    Ok(determinant(rows))
}

/// Determinant by rational Gaussian elimination with row swaps.
pub(crate) fn determinant(mut rows: Vec<Vec<Rational>>) -> Rational {
    let size = rows.len();
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let pivot_val = rows[col][col].clone();
        det *= &pivot_val;
        for r in col + 1..size {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot_val;
            for c in col..size {
                let sub = &factor * &rows[col][c];
                rows[r][c] -= sub;
            }
        }
    }
    det
}

/// `(-1)^(n(n-1)/2) Res(p, p') / lc(p)`; for monic `p` this is
/// `prod_{i<j} (a_i - a_j)^2`.
pub fn discriminant(p: &UniPoly) -> Result<Rational> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::WrongDegree { expected: 2, found: n });
    }
    let res = resultant(p, &p.derivative())?;
    let lc = p.leading().expect("nonzero");
    let sign = if (n * (n - 1) / 2) % 2 == 0 { Rational::one() } else { -Rational::one() };
    Ok(sign * res / lc)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

/// Canonical text form, readable back by [`crate::cli::parse_polynomial`]:
/// `x^5 - 2`, `3/2x^5 + x`, `-x^2 + 1/3`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

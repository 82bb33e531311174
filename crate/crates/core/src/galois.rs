//! Galois group classification of irreducible rational quintics.
//!
//! The decision combines two facts: the group lies in `A5` exactly when the
//! discriminant is a rational square, and it lies in a conjugate of the
//! Frobenius group `F5` exactly when the resolvent sextic has a rational
//! root that is a simple root. Together they separate `{C5, D5}`, `F5`, `A5`
//! and `S5`; the first two are not told apart.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{resolvent_sextic, ResolventSextic};
use crate::poly::{discriminant, expect_degree, UniPoly};
use crate::rational::{is_perfect_square, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupLabel {
    #[serde(rename = "C5_or_D5")]
    C5OrD5,
    F5,
    A5,
    S5,
}

impl GroupLabel {
    pub fn is_solvable(self) -> bool {
        matches!(self, GroupLabel::C5OrD5 | GroupLabel::F5)
    }

    pub fn in_alternating_group(self) -> bool {
        matches!(self, GroupLabel::C5OrD5 | GroupLabel::A5)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GroupLabel::C5OrD5 => "C5_or_D5",
            GroupLabel::F5 => "F5",
            GroupLabel::A5 => "A5",
            GroupLabel::S5 => "S5",
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A resolvent sextic together with its rational roots, split by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventTest {
    pub resolvent: ResolventSextic,
    pub rational_roots: Vec<Rational>,
    pub simple_rational_roots: Vec<Rational>,
}

impl ResolventTest {
    pub fn of(p: &UniPoly) -> Result<Self> {
        let resolvent = resolvent_sextic(p)?;
        let rational_roots = resolvent.poly.rational_roots()?;
        let deriv = resolvent.poly.derivative();
        let simple_rational_roots = rational_roots
            .iter()
            .filter(|r| !deriv.eval(r).is_zero())
            .cloned()
            .collect();
        Ok(ResolventTest { resolvent, rational_roots, simple_rational_roots })
    }

    /// True when the rational-root test decides the question on its own:
    /// either there is no rational root, or one of them is simple.
    pub fn is_conclusive(&self) -> bool {
        self.rational_roots.is_empty() || !self.simple_rational_roots.is_empty()
    }
}

/// The quintic satisfied by `a^2 + c a` as `a` runs over the roots of the
/// input, used when the input's resolvent has only multiple rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TschirnhausStep {
    pub c: Rational,
    pub quintic: UniPoly,
    pub test: ResolventTest,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub discriminant: Rational,
    pub disc_is_square: bool,
    /// Resolvent of the input quintic.
    pub resolvent: ResolventSextic,
    pub resolvent_rational_roots: Vec<Rational>,
    /// The subset of `resolvent_rational_roots` that are simple roots.
    pub simple_input_roots: Vec<Rational>,
    /// Present only when the input's resolvent was inconclusive.
    pub transform: Option<TschirnhausStep>,
}

impl Evidence {
    /// Simple rational roots of the resolvent that decided the verdict.
    pub fn certifying_roots(&self) -> &[Rational] {
        match &self.transform {
            Some(step) => &step.test.simple_rational_roots,
            None => self.simple_input_roots.as_slice(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisVerdict {
    pub group: GroupLabel,
    pub solvable: bool,
    pub evidence: Evidence,
}

/// `y^2 + c y` transform of a monic-normalized quintic, computed exactly from
/// power sums.
pub fn tschirnhaus(p: &UniPoly, c: &Rational) -> Result<UniPoly> {
    expect_degree(p, 5)?;
    let monic = p.monic()?;
    // elementary symmetric functions e_1..e_5 of the roots
    let e: Vec<Rational> = (1..=5)
        .map(|k| if k % 2 == 0 { monic.coeff(5 - k) } else { -monic.coeff(5 - k) })
        .collect();
    let power_sums = newton_power_sums(&e, 10);
    // q_k = sum_j C(k, j) c^(k-j) p_{k+j}
    let mut q = vec![rat(5)];
    for k in 1..=5usize {
        let mut acc = Rational::zero();
        for j in 0..=k {
            let mut c_pow = Rational::one();
            for _ in 0..(k - j) {
                c_pow *= c;
            }
            acc += rat(binomial(k, j)) * c_pow * &power_sums[k + j];
        }
        q.push(acc);
    }
    let elementary = newton_elementary(&q, 5);
    let mut coeffs = vec![Rational::zero(); 6];
    coeffs[5] = Rational::one();
    for k in 1..=5 {
        let ek = &elementary[k];
        coeffs[5 - k] = if k % 2 == 0 { ek.clone() } else { -ek };
    }
    Ok(UniPoly::new(coeffs))
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Power sums `p_0..p_max` from elementary symmetric `e_1..e_n`.
fn newton_power_sums(e: &[Rational], max: usize) -> Vec<Rational> {
    let n = e.len();
    let e_at = |i: usize| if i >= 1 && i <= n { e[i - 1].clone() } else { Rational::zero() };
    let mut p = vec![rat(n as i64)];
    for k in 1..=max {
        let mut acc = Rational::zero();
        for i in 1..k {
            let term = e_at(i) * &p[k - i];
            if i % 2 == 1 { acc += term } else { acc -= term }
        }
        let last = e_at(k) * rat(k as i64);
        if k % 2 == 1 { acc += last } else { acc -= last }
        p.push(acc);
    }
    p
}

/// Elementary symmetric `e_0..e_n` from power sums `p_0..p_n`.
fn newton_elementary(p: &[Rational], n: usize) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for k in 1..=n {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 { acc += term } else { acc -= term }
        }
        e.push(acc / rat(k as i64));
    }
    e
}

const TSCHIRNHAUS_ATTEMPTS: i64 = 40;

/// Classifies the Galois group of an irreducible quintic with nonzero
/// discriminant.
pub fn classify(p: &UniPoly) -> Result<GaloisVerdict> {
    expect_degree(p, 5)?;
    let disc = discriminant(p)?;
    if disc.is_zero() {
        return Err(Error::RepeatedRoots);
    }
    if let Some(factor) = p.low_degree_factor()? {
        return Err(Error::ReduciblePolynomial { factor: factor.to_string() });
    }
    let disc_is_square = is_perfect_square(&disc).is_some();
    let input_test = ResolventTest::of(p)?;

    let mut transform = None;
    if !input_test.is_conclusive() {
        transform = Some(find_conclusive_transform(p)?);
    }
    let decisive = transform.as_ref().map_or(&input_test, |s| &s.test);
    let in_f5 = !decisive.simple_rational_roots.is_empty();
    let group = match (in_f5, disc_is_square) {
        (true, true) => GroupLabel::C5OrD5,
        (true, false) => GroupLabel::F5,
        (false, true) => GroupLabel::A5,
        (false, false) => GroupLabel::S5,
    };
    Ok(GaloisVerdict {
        group,
        solvable: group.is_solvable(),
        evidence: Evidence {
            discriminant: disc,
            disc_is_square,
            simple_input_roots: input_test.simple_rational_roots,
            resolvent: input_test.resolvent,
            resolvent_rational_roots: input_test.rational_roots,
            transform,
        },
    })
}

fn find_conclusive_transform(p: &UniPoly) -> Result<TschirnhausStep> {
    let candidates = (1..=TSCHIRNHAUS_ATTEMPTS).flat_map(|k| [k, -k]);
    for c in std::iter::once(0).chain(candidates).map(rat) {
        let quintic = tschirnhaus(p, &c)?;
        if discriminant(&quintic)?.is_zero() {
            continue;
        }
        let test = ResolventTest::of(&quintic)?;
        if test.is_conclusive() {
            return Ok(TschirnhausStep { c, quintic, test });
        }
    }
    Err(Error::Inconclusive)
}

pub fn is_solvable(p: &UniPoly) -> Result<bool> {
    Ok(classify(p)?.solvable)
}

/// A simple rational root of the deciding resolvent, when the quintic is
/// solvable.
pub fn solvability_certificate(p: &UniPoly) -> Result<Option<Rational>> {
    Ok(classify(p)?.evidence.certifying_roots().first().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn named_classifications() {
        let cases = [
            (p(&[-2, 0, 0, 0, 0, 1]), GroupLabel::F5),
            (p(&[1, -1, 0, 0, 0, 1]), GroupLabel::S5),
            (p(&[1, 3, -3, -4, 1, 1]), GroupLabel::C5OrD5),
            (p(&[16, 20, 0, 0, 0, 1]), GroupLabel::A5),
        ];
        for (f, g) in cases {
            let v = classify(&f).unwrap();
            assert_eq!(v.group, g, "{f}");
            assert_eq!(v.solvable, g.is_solvable());
            assert_eq!(v.evidence.disc_is_square, g.in_alternating_group());
            assert!(v.evidence.transform.is_none());
        }
    }

    #[test]
    fn certificates() {
        assert_eq!(solvability_certificate(&p(&[-2, 0, 0, 0, 0, 1])).unwrap(), Some(rat(2500)));
        assert_eq!(solvability_certificate(&p(&[1, 3, -3, -4, 1, 1])).unwrap(), Some(rat(-242)));
        assert_eq!(solvability_certificate(&p(&[1, -1, 0, 0, 0, 1])).unwrap(), None);
    }

    #[test]
    fn x5_minus_2_has_a_multiple_rational_root() {
        let v = classify(&p(&[-2, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(v.evidence.resolvent_rational_roots, vec![rat(500), rat(2500)]);
        assert_eq!(v.evidence.simple_input_roots, vec![rat(2500)]);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(classify(&p(&[0, -1, 0, 0, 0, 1])), Err(Error::ReduciblePolynomial { .. })));
        assert!(matches!(classify(&p(&[0, 0, 1, 0, 0, 1])), Err(Error::RepeatedRoots)));
        assert!(matches!(classify(&p(&[-2, 0, 0, 0, 1])), Err(Error::WrongDegree { expected: 5, found: 4 })));
        assert!(matches!(classify(&UniPoly::zero()), Err(Error::ZeroPolynomial)));
        // (x^2 + 1)(x^3 + x + 1) has no rational root
        let f = &p(&[1, 0, 1]) * &p(&[1, 1, 0, 1]);
        assert!(matches!(classify(&f), Err(Error::ReduciblePolynomial { .. })));
    }

    #[test]
    fn tschirnhaus_with_zero_shift_squares_the_roots() {
        // roots of x^5 - 2 squared are the roots of x^5 - 4
        assert_eq!(tschirnhaus(&p(&[-2, 0, 0, 0, 0, 1]), &rat(0)).unwrap(), p(&[-4, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn tschirnhaus_matches_numeric_roots() {
        let f = p(&[1, 3, -3, -4, 1, 1]);
        let c = frac(-3, 2);
        let q = tschirnhaus(&f, &c).unwrap();
        let roots = crate::oracle::find_roots(&f, 1e-15).unwrap();
        let cf = crate::rational::to_f64(&c);
        for a in roots.roots {
            let y = a * a + a * cf;
            let value = crate::oracle::roots::to_complex_coeffs(&q)
                .iter()
                .rev()
                .fold(num_complex::Complex64::new(0.0, 0.0), |acc, k| acc * y + k);
            assert!(value.norm() < 1e-8 * (1.0 + y.norm().powi(5)), "{value}");
        }
    }

    #[test]
    fn transformed_quintics_keep_their_group() {
        for f in [p(&[-2, 0, 0, 0, 0, 1]), p(&[1, -1, 0, 0, 0, 1]), p(&[1, 3, -3, -4, 1, 1]), p(&[16, 20, 0, 0, 0, 1])] {
            let g = classify(&f).unwrap().group;
            for c in [-3, 1, 2] {
                let q = tschirnhaus(&f, &rat(c)).unwrap();
                assert_eq!(classify(&q).unwrap().group, g, "{f} c={c}");
            }
        }
    }

    #[test]
    fn forced_transform_is_conclusive_and_agrees() {
        let f = p(&[-2, 0, 0, 0, 0, 1]);
        let step = find_conclusive_transform(&f).unwrap();
        assert!(step.test.is_conclusive());
        assert!(!discriminant(&step.quintic).unwrap().is_zero());
        assert!(!step.test.simple_rational_roots.is_empty());
    }

    #[test]
    fn labels() {
        assert_eq!(GroupLabel::C5OrD5.to_string(), "C5_or_D5");
        assert_eq!(serde_json::to_string(&GroupLabel::C5OrD5).unwrap(), "\"C5_or_D5\"");
        assert!(GroupLabel::F5.is_solvable() && !GroupLabel::A5.is_solvable());
    }
}

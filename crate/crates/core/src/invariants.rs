//! Exact invariants of a monic quintic and its resolvent sextic.
//!
//! The coefficients `b1..b5` are those of `x^5 + b1 x^4 + b2 x^3 + b3 x^2 +
//! b4 x + b5`, so `b_i` has isobaric weight `i`. The auxiliary quantities
//! `A, B, C` have weights 4, 5, 6, and `D, E, F, G` are the coefficients of
//! a cubic form in `(u, v)` obtained from a 3x3 determinant whose entries are
//! linear in `u` and `v`. From them come the degree 4, 8 and 12 invariants
//! `J4, J8, J12`, and the resolvent sextic `g(x) = x^6 + d1 x^5 + ... + d6`
//! is a polynomial in the `J`s.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::poly::{expect_degree, UniPoly};
use crate::rational::{rat, Rational};

/// `x^5 + b1 x^4 + b2 x^3 + b3 x^2 + b4 x + b5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicQuintic {
    pub b: [Rational; 5],
}

impl MonicQuintic {
    pub fn new(b1: Rational, b2: Rational, b3: Rational, b4: Rational, b5: Rational) -> Self {
        MonicQuintic { b: [b1, b2, b3, b4, b5] }
    }

    pub fn from_ints(b: [i64; 5]) -> Self {
        MonicQuintic { b: b.map(rat) }
    }

    /// Normalizes a degree-5 polynomial by its leading coefficient.
    pub fn from_poly(p: &UniPoly) -> Result<Self> {
        expect_degree(p, 5)?;
        let lc = p.leading().expect("degree 5").clone();
        Ok(MonicQuintic {
            b: std::array::from_fn(|i| p.coeff(4 - i) / &lc),
        })
    }

    pub fn to_poly(&self) -> UniPoly {
        let mut coeffs: Vec<Rational> = self.b.iter().rev().cloned().collect();
        coeffs.push(Rational::one());
        UniPoly::new(coeffs)
    }

    fn bi(&self, i: usize) -> &Rational {
        &self.b[i - 1]
    }

    pub fn abc(&self) -> (Rational, Rational, Rational) {
        let (b1, b2, b3, b4, b5) = (self.bi(1), self.bi(2), self.bi(3), self.bi(4), self.bi(5));
        let hundred = rat(100);
        let a = (rat(20) * b4 - rat(8) * b1 * b3 + rat(3) * b2 * b2) / &hundred;
        let b = (rat(100) * b5 - rat(12) * b1 * b4 + rat(2) * b2 * b3) / &hundred;
        let c = (rat(20) * b1 * b5 - rat(8) * b2 * b4 + rat(3) * b3 * b3) / &hundred;
        (a, b, c)
    }

    /// The 3x3 matrix of linear forms `(u-coefficient, v-coefficient)`.
    pub fn cubic_matrix(&self) -> [[LinearForm; 3]; 3] {
        let (b1, b2, b3, b4, b5) = (self.bi(1), self.bi(2), self.bi(3), self.bi(4), self.bi(5));
        let lf = |u: Rational, v: Rational| LinearForm { u, v };
        let two = rat(2);
        let m01 = lf(&two * b1, b2.clone());
        let m02 = lf(b2.clone(), b3.clone());
        let m12 = lf(b3.clone(), &two * b4);
        [
            [lf(rat(10), &two * b1), m01.clone(), m02.clone()],
            [m01, m02.clone(), m12.clone()],
            [m02, m12, lf(&two * b4, rat(10) * b5)],
        ]
    }

    /// `(D, E, F, G)` with `det(M(u, v)) / 1000 = D u^3 + E u^2 v + F u v^2 + G v^3`.
    pub fn defg(&self) -> [Rational; 4] {
        let m = self.cubic_matrix();
        let term = |i: usize, j: usize, k: usize| m[0][i].mul(&m[1][j]).mul_linear(&m[2][k]);
        let mut acc = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (perm, sign) in [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
            ([1, 0, 2], -1),
        ] {
            let t = term(perm[0], perm[1], perm[2]);
            for (a, c) in acc.iter_mut().zip(t) {
                if sign > 0 {
                    *a += c;
                } else {
                    *a -= c;
                }
            }
        }
        acc.map(|c| c / rat(1000))
    }

    pub fn aux(&self) -> AuxQuantities {
        let (a, b, c) = self.abc();
        let [d, e, f, g] = self.defg();
        AuxQuantities { a, b, c, d, e, f, g }
    }

    pub fn j_invariants(&self) -> JInvariants {
        self.aux().j_invariants()
    }

    pub fn resolvent(&self) -> ResolventSextic {
        self.j_invariants().resolvent()
    }

    /// `p(x + t)`, renormalized.
    pub fn shift(&self, t: &Rational) -> MonicQuintic {
        MonicQuintic::from_poly(&self.to_poly().shift(t)).expect("degree preserved")
    }
}

/// `u * U + v * V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub u: Rational,
    pub v: Rational,
}

impl LinearForm {
    fn mul(&self, other: &LinearForm) -> [Rational; 3] {
        [
            &self.u * &other.u,
            &self.u * &other.v + &self.v * &other.u,
            &self.v * &other.v,
        ]
    }
}

trait QuadraticTimesLinear {
    fn mul_linear(&self, l: &LinearForm) -> [Rational; 4];
}

impl QuadraticTimesLinear for [Rational; 3] {
    fn mul_linear(&self, l: &LinearForm) -> [Rational; 4] {
        [
            &self[0] * &l.u,
            &self[0] * &l.v + &self[1] * &l.u,
            &self[1] * &l.v + &self[2] * &l.u,
            &self[2] * &l.v,
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxQuantities {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
}

impl AuxQuantities {
    pub fn is_zero(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.g]
            .iter()
            .all(|x| x.is_zero())
    }

    pub fn j_invariants(&self) -> JInvariants {
        let AuxQuantities { a, b, c, d, e, f, g } = self;
        let p = rat(3) * e * g - f * f; // 3EG - F^2
        let q = rat(9) * d * g - e * f; // 9DG - EF
        let r = rat(3) * f * d - e * e; // 3FD - E^2
        let j4 = rat(125) * (b * b - rat(4) * a * c);
        let j8 = rat(32 * 15_625) * (rat(2) * a * &p - b * &q + rat(2) * c * &r);
        let j12_scale = Rational::new(-BigInt::from(1024i64 * 1_953_125), BigInt::from(3));
        let j12 = j12_scale * (rat(4) * &p * &r - &q * &q);
        JInvariants { j4, j8, j12 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JInvariants {
    pub j4: Rational,
    pub j8: Rational,
    pub j12: Rational,
}

impl JInvariants {
    pub fn new(j4: Rational, j8: Rational, j12: Rational) -> Self {
        JInvariants { j4, j8, j12 }
    }

    /// Coefficients `d1..d6` as polynomials in `J4, J8, J12`.
    pub fn resolvent(&self) -> ResolventSextic {
        let JInvariants { j4, j8, j12 } = self;
        let j4_2 = j4 * j4;
        let j4_3 = &j4_2 * j4;
        let j4_4 = &j4_3 * j4;
        let j8_2 = j8 * j8;
        let d1 = rat(-10) * j4;
        let d2 = rat(35) * &j4_2 + rat(10) * j8;
        let d3 = rat(-60) * &j4_3 - rat(30) * j4 * j8 - rat(10) * j12;
        let d4 = rat(55) * &j4_4 + rat(30) * &j4_2 * j8 + rat(25) * &j8_2 + rat(50) * j4 * j12;
        let d5 = rat(-26) * &j4_4 * j4
            - rat(10) * &j4_3 * j8
            - rat(44) * j4 * &j8_2
            - rat(59) * &j4_2 * j12
            - rat(14) * j8 * j12;
        let d6 = rat(5) * &j4_4 * &j4_2
            + rat(20) * &j4_2 * &j8_2
            + rat(20) * &j4_3 * j12
            + rat(20) * j4 * j8 * j12
            + rat(25) * j12 * j12;
        ResolventSextic::from_coeffs([d1, d2, d3, d4, d5, d6])
    }
}

/// `g(x) = x^6 + d1 x^5 + d2 x^4 + d3 x^3 + d4 x^2 + d5 x + d6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventSextic {
    pub d: [Rational; 6],
    pub poly: UniPoly,
}

impl ResolventSextic {
    pub fn from_coeffs(d: [Rational; 6]) -> Self {
        let mut coeffs: Vec<Rational> = d.iter().rev().cloned().collect();
        coeffs.push(Rational::one());
        ResolventSextic { poly: UniPoly::new(coeffs), d }
    }
}

pub fn to_monic(p: &UniPoly) -> Result<MonicQuintic> {
    MonicQuintic::from_poly(p)
}

pub fn resolvent_coeffs(j: &JInvariants) -> ResolventSextic {
    j.resolvent()
}

/// The resolvent sextic of a degree-5 polynomial; invariant under scaling
/// the input.
pub fn resolvent_sextic(p: &UniPoly) -> Result<ResolventSextic> {
    Ok(to_monic(p)?.resolvent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::determinant;
    use crate::rational::frac;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn to_monic_examples() {
        let q = to_monic(&UniPoly::from_ints(&[-4, 0, 0, 0, 0, 2])).unwrap();
        assert_eq!(q.b.to_vec(), ints(&[0, 0, 0, 0, -2]));
        let q = to_monic(&UniPoly::from_ints(&[0, 0, 0, 0, 1, 1])).unwrap();
        assert_eq!(q.b.to_vec(), ints(&[1, 0, 0, 0, 0]));
        let q = to_monic(&UniPoly::from_ints(&[0, 3, 0, 0, 0, 3])).unwrap();
        assert_eq!(q.b.to_vec(), ints(&[0, 0, 0, 1, 0]));
        assert!(to_monic(&UniPoly::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn abc_examples() {
        let zero = MonicQuintic::from_ints([0; 5]);
        assert_eq!(zero.abc(), (rat(0), rat(0), rat(0)));
        let q = MonicQuintic::from_ints([0, 0, 0, 1, 0]);
        assert_eq!(q.abc(), (frac(1, 5), rat(0), rat(0)));
        let q = MonicQuintic::from_ints([0, 0, 0, 0, 1]);
        assert_eq!(q.abc(), (rat(0), rat(1), rat(0)));
    }

    #[test]
    fn defg_degenerate_examples() {
        assert!(MonicQuintic::from_ints([0; 5]).defg().iter().all(Zero::is_zero));
        assert!(MonicQuintic::from_ints([0, 0, 0, 0, 1]).defg().iter().all(Zero::is_zero));
        // x^5 + x: rows (10u, 0, 0), (0, 0, 2v), (0, 2v, 2u); det = -40 u v^2
        let d = MonicQuintic::from_ints([0, 0, 0, 1, 0]).defg();
        assert_eq!(d.to_vec(), vec![rat(0), rat(0), frac(-1, 25), rat(0)]);
    }

    /// Recovers the cubic form from numeric determinants at four points.
    fn defg_by_interpolation(q: &MonicQuintic) -> [Rational; 4] {
        let m = q.cubic_matrix();
        let det_at = |u: i64, v: i64| {
            let rows = m
                .iter()
                .map(|row| row.iter().map(|l| &l.u * rat(u) + &l.v * rat(v)).collect())
                .collect();
            determinant(rows) / rat(1000)
        };
        let (p10, p01, p11, p1m) = (det_at(1, 0), det_at(0, 1), det_at(1, 1), det_at(1, -1));
        let d = p10.clone();
        let g = p01.clone();
        // p11 = D + E + F + G, p1m = D - E + F - G
        let e_plus_g = (&p11 - &p1m) / rat(2);
        let d_plus_f = (&p11 + &p1m) / rat(2);
        [d.clone(), &e_plus_g - &g, &d_plus_f - &d, g]
    }

    proptest::proptest! {
        #[test]
        fn defg_matches_interpolated_determinant(b in proptest::array::uniform5(-30i64..30)) {
            let q = MonicQuintic::from_ints(b);
            proptest::prop_assert_eq!(q.defg(), defg_by_interpolation(&q));
        }

        #[test]
        fn resolvent_is_shift_invariant(b in proptest::array::uniform5(-12i64..12), tn in -9i64..9, td in 1i64..6) {
            let q = MonicQuintic::from_ints(b);
            let t = frac(tn, td);
            proptest::prop_assert_eq!(q.shift(&t).resolvent(), q.resolvent());
        }

        #[test]
        fn root_scaling_is_weighted(b in proptest::array::uniform5(-12i64..12), ln in 1i64..5, ld in 1i64..5) {
            // roots a_i / lambda: b_i -> b_i / lambda^i, d_r -> d_r / lambda^(10 r)
            let lambda = frac(ln, ld);
            let q = MonicQuintic::from_ints(b);
            let mut pow = Rational::one();
            let scaled = MonicQuintic {
                b: std::array::from_fn(|i| {
                    pow /= &lambda;
                    &q.b[i] * &pow
                }),
            };
            let (g, h) = (q.resolvent(), scaled.resolvent());
            let mut weight = Rational::one();
            for r in 0..6 {
                for _ in 0..10 {
                    weight /= &lambda;
                }
                proptest::prop_assert_eq!(&h.d[r], &(&g.d[r] * &weight));
            }
        }
    }

    #[test]
    fn resolvent_coeffs_spot_values() {
        let g = resolvent_coeffs(&JInvariants::new(rat(0), rat(0), rat(0)));
        assert!(g.d.iter().all(Zero::is_zero));
        assert_eq!(g.poly, UniPoly::monomial(rat(1), 6));
        let g = resolvent_coeffs(&JInvariants::new(rat(1), rat(0), rat(0)));
        assert_eq!(g.d.to_vec(), ints(&[-10, 35, -60, 55, -26, 5]));
        let g = resolvent_coeffs(&JInvariants::new(rat(0), rat(1), rat(0)));
        assert_eq!(g.d.to_vec(), ints(&[0, 10, 0, 25, 0, 0]));
        let g = resolvent_coeffs(&JInvariants::new(rat(0), rat(0), rat(1)));
        assert_eq!(g.d.to_vec(), ints(&[0, 0, -10, 0, 0, 25]));
        assert_eq!(g.poly.coeffs(), &ints(&[25, 0, 0, -10, 0, 0, 1])[..]);
    }

    #[test]
    fn j_invariants_of_x5_plus_x() {
        let j = MonicQuintic::from_ints([0, 0, 0, 1, 0]).j_invariants();
        assert_eq!(j, JInvariants::new(rat(0), rat(-320), rat(0)));
        assert!(MonicQuintic::from_ints([0; 5]).aux().is_zero());
        assert_eq!(MonicQuintic::from_ints([0; 5]).j_invariants(), JInvariants::new(rat(0), rat(0), rat(0)));
    }

    // Frozen from the floating-point oracle (symmetric functions of the six
    // resolvent roots computed from numeric roots).
    #[test]
    fn frozen_resolvents() {
        let cases: [([i64; 5], [i64; 6]); 3] = [
            ([0, 0, 0, 0, -2], [-5000, 8_750_000, -7_500_000_000, 3_437_500_000_000, -812_500_000_000_000, 78_125_000_000_000_000]),
            ([0, 0, 0, -1, 1], [-1250, 550_075, -118_387_500, 13_580_294_375, -800_270_231_250, 19_105_486_328_125]),
            ([1, -4, -3, 3, 1], [8470, 26_719_825, 39_264_878_004, 26_974_921_585_040, 7_545_534_002_950_713, 717_928_044_888_435_634]),
        ];
        for (b, d) in cases {
            assert_eq!(MonicQuintic::from_ints(b).resolvent().d.to_vec(), ints(&d), "{b:?}");
        }
        let g = resolvent_sextic(&UniPoly::from_ints(&[-2, 0, 0, 0, 0, 1])).unwrap();
        assert!(g.poly.eval(&rat(2500)).is_zero());
    }

    #[test]
    fn input_scaling_is_irrelevant() {
        let p = UniPoly::from_ints(&[1, 3, -3, -4, 1, 1]);
        let q = p.scale(&frac(-7, 3));
        assert_eq!(resolvent_sextic(&p).unwrap(), resolvent_sextic(&q).unwrap());
    }
}

//! Pentagon products of squared root differences.
//!
//! The six 5-Sylow subgroups of `S5` correspond to six pairs of
//! complementary pentagons on the vertices `1..5`. For each pair there is a
//! product of squared differences along the edges of the pentagon (`P_i`)
//! and one along its complementary pentagram (`Q_i`). The roots of the
//! rational resolvent sextic are `theta_i = -(P_i + Q_i)`; the antisymmetric
//! combination `P_i - Q_i` is negated by the odd elements of `F5`, so its
//! symmetric functions only lie in `Q(sqrt(disc))`.

use num_complex::Complex64;

use super::roots::RootQuintet;
use super::symmetric::elementary_symmetric_all;
use crate::error::{Error, Result};

/// Vertex sequences (1-based) of each pentagon and its complementary pentagram.
pub const PENTAGON_PAIRS: [([usize; 5], [usize; 5]); 6] = [
    ([1, 2, 3, 4, 5], [1, 3, 5, 2, 4]),
    ([1, 2, 3, 5, 4], [1, 3, 4, 2, 5]),
    ([1, 2, 4, 5, 3], [1, 4, 3, 2, 5]),
    ([1, 2, 4, 3, 5], [1, 4, 5, 2, 3]),
    ([1, 2, 5, 3, 4], [1, 5, 4, 2, 3]),
    ([1, 3, 4, 5, 2], [1, 4, 2, 3, 5]),
];

/// Six values indexed like [`PENTAGON_PAIRS`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaVector {
    pub delta: [Complex64; 6],
}

impl DeltaVector {
    /// `e_1..e_6` of the six values.
    pub fn symmetric_functions(&self) -> [Complex64; 6] {
        let e = elementary_symmetric_all(&self.delta);
        std::array::from_fn(|r| e[r + 1])
    }

    pub fn max_norm(&self) -> f64 {
        self.delta.iter().map(|d| d.norm()).fold(0.0, f64::max)
    }

    pub fn min_pairwise_distance(&self) -> f64 {
        let mut min = f64::INFINITY;
        for i in 0..6 {
            for j in i + 1..6 {
                min = min.min((self.delta[i] - self.delta[j]).norm());
            }
        }
        min
    }
}

/// `P_i` and `Q_i` for every pentagon pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PentagonProducts {
    pub pentagon: [Complex64; 6],
    pub pentagram: [Complex64; 6],
}

impl PentagonProducts {
    /// `-(P_i + Q_i)`, the roots of the resolvent sextic.
    pub fn resolvent_roots(&self) -> DeltaVector {
        DeltaVector { delta: std::array::from_fn(|i| -(self.pentagon[i] + self.pentagram[i])) }
    }

    /// `P_i - Q_i`.
    pub fn antisymmetric(&self) -> DeltaVector {
        DeltaVector { delta: std::array::from_fn(|i| self.pentagon[i] - self.pentagram[i]) }
    }

    /// Builds the products from a squared-difference table `sq[i][j]` (0-based).
    fn from_squares(sq: &[[Complex64; 5]; 5]) -> Self {
        let cycle = |c: &[usize; 5]| (0..5).map(|k| sq[c[k] - 1][c[(k + 1) % 5] - 1]).product();
        PentagonProducts {
            pentagon: PENTAGON_PAIRS.map(|(p, _)| cycle(&p)),
            pentagram: PENTAGON_PAIRS.map(|(_, q)| cycle(&q)),
        }
    }
}

fn separation(points: &[Complex64; 5], diff: impl Fn(usize, usize) -> Complex64) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut scale = 0.0f64;
    for i in 0..5 {
        scale = scale.max(points[i].norm());
        for j in i + 1..5 {
            min = min.min(diff(i, j).norm());
        }
    }
    (min, scale)
}

const DEGENERACY_TOL: f64 = 1e-9;

/// `P_i`, `Q_i` over the affine roots `a_1..a_5`.
pub fn pentagon_products(roots: &[Complex64; 5]) -> Result<PentagonProducts> {
    let (min, scale) = separation(roots, |i, j| roots[i] - roots[j]);
    if min <= DEGENERACY_TOL * (1.0 + scale) {
        return Err(Error::DegenerateRoots { separation: format!("{min:e}") });
    }
    let sq = std::array::from_fn(|i| std::array::from_fn(|j| (roots[i] - roots[j]).powu(2)));
    Ok(PentagonProducts::from_squares(&sq))
}

/// The six resolvent roots `theta_i = -(P_i + Q_i)` of a root quintet.
pub fn delta_values(roots: &RootQuintet) -> Result<DeltaVector> {
    Ok(pentagon_products(&roots.roots)?.resolvent_roots())
}

/// The antisymmetric `P_i - Q_i` of a root quintet.
pub fn antisymmetric_deltas(roots: &RootQuintet) -> Result<DeltaVector> {
    Ok(pentagon_products(&roots.roots)?.antisymmetric())
}

/// A root `gamma / beta` of a binary form, as the linear factor
/// `beta x - gamma y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectivePair {
    pub gamma: Complex64,
    pub beta: Complex64,
}

impl ProjectivePair {
    pub fn affine(alpha: Complex64) -> Self {
        ProjectivePair { gamma: alpha, beta: Complex64::new(1.0, 0.0) }
    }

    pub fn scaled(self, lambda: Complex64) -> Self {
        ProjectivePair { gamma: self.gamma * lambda, beta: self.beta * lambda }
    }
}

/// `det [[gamma_i, beta_i], [gamma_j, beta_j]]`.
pub fn dij(pi: &ProjectivePair, pj: &ProjectivePair) -> Complex64 {
    pi.gamma * pj.beta - pj.gamma * pi.beta
}

/// The projective pentagon products, with `a_i - a_j` replaced by `D_ij`.
pub fn projective_pentagon_products(pairs: &[ProjectivePair; 5]) -> Result<PentagonProducts> {
    // chordal distance |D_ij| / (|p_i| |p_j|) is unchanged by rescaling a pair
    let norm = |p: &ProjectivePair| p.gamma.norm().hypot(p.beta.norm());
    let points = pairs.map(|p| p.gamma);
    let (min, _) = separation(&points, |i, j| dij(&pairs[i], &pairs[j]) / (norm(&pairs[i]) * norm(&pairs[j])));
    if min <= DEGENERACY_TOL {
        return Err(Error::DegenerateRoots { separation: format!("{min:e}") });
    }
    let sq = std::array::from_fn(|i| std::array::from_fn(|j| dij(&pairs[i], &pairs[j]).powu(2)));
    Ok(PentagonProducts::from_squares(&sq))
}

/// Projective resolvent roots `-(P~_i + Q~_i)`.
pub fn tilde_delta(pairs: &[ProjectivePair; 5]) -> Result<DeltaVector> {
    Ok(projective_pentagon_products(pairs)?.resolvent_roots())
}

/// The 5-cycle `(v1 v2 v3 v4 v5)` of the pentagon of pair `i`, as the 0-based
/// map `k -> image of k`.
pub fn sylow_generator(i: usize) -> [usize; 5] {
    let cycle = PENTAGON_PAIRS[i].0;
    let mut image = [0usize; 5];
    for k in 0..5 {
        image[cycle[k] - 1] = cycle[(k + 1) % 5] - 1;
    }
    image
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample() -> [Complex64; 5] {
        [c(1.3, 0.0), c(-0.7, 1.1), c(-0.7, -1.1), c(2.9, 0.4), c(0.1, -2.2)]
    }

    fn rel_close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
    }

    #[test]
    fn pentagon_pairs_are_complementary() {
        for (p, q) in PENTAGON_PAIRS {
            let edges = |c: [usize; 5]| {
                let mut e: Vec<(usize, usize)> = (0..5)
                    .map(|k| {
                        let (a, b) = (c[k], c[(k + 1) % 5]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                e.sort();
                e
            };
            let mut all = edges(p);
            all.extend(edges(q));
            all.sort();
            all.dedup();
            assert_eq!(all.len(), 10, "{p:?} / {q:?}");
        }
    }

    #[test]
    fn dij_basics() {
        let p = ProjectivePair { gamma: c(2.0, 1.0), beta: c(0.5, -1.0) };
        let q = ProjectivePair { gamma: c(-1.0, 0.3), beta: c(1.5, 0.0) };
        assert_eq!(dij(&p, &p), c(0.0, 0.0));
        assert_eq!(dij(&p, &q), -dij(&q, &p));
        let (a, b) = (c(3.0, 1.0), c(-2.0, 0.5));
        assert_eq!(dij(&ProjectivePair::affine(a), &ProjectivePair::affine(b)), a - b);
    }

    #[test]
    fn affine_pairs_reproduce_affine_products() {
        let roots = sample();
        let affine = pentagon_products(&roots).unwrap();
        let projective = projective_pentagon_products(&roots.map(ProjectivePair::affine)).unwrap();
        assert_eq!(affine, projective);
    }

    #[test]
    fn scaling_one_pair_scales_by_fourth_power() {
        let roots = sample();
        let mut pairs = roots.map(ProjectivePair::affine);
        let base = tilde_delta(&pairs).unwrap();
        let lambda = c(1.7, -0.4);
        pairs[2] = pairs[2].scaled(lambda);
        let scaled = tilde_delta(&pairs).unwrap();
        for i in 0..6 {
            assert!(rel_close(scaled.delta[i], base.delta[i] * lambda.powu(4), 1e-12));
        }
    }

    #[test]
    fn transposition_permutes_the_resolvent_roots() {
        let roots = sample();
        let base = pentagon_products(&roots).unwrap().resolvent_roots();
        let swapped = [roots[1], roots[0], roots[2], roots[3], roots[4]];
        let moved = pentagon_products(&swapped).unwrap().resolvent_roots();
        for d in moved.delta {
            assert!(base.delta.iter().any(|b| rel_close(*b, d, 1e-12)));
        }
    }

    #[test]
    fn each_pair_is_fixed_by_its_own_five_cycle() {
        let roots = sample();
        let base = pentagon_products(&roots).unwrap();
        for i in 0..6 {
            let g = sylow_generator(i);
            let moved = pentagon_products(&g.map(|k| roots[k])).unwrap();
            assert!(rel_close(moved.pentagon[i], base.pentagon[i], 1e-12));
            assert!(rel_close(moved.pentagram[i], base.pentagram[i], 1e-12));
        }
    }

    #[test]
    fn degenerate_roots_rejected() {
        let mut roots = sample();
        roots[3] = roots[0];
        assert!(matches!(pentagon_products(&roots), Err(Error::DegenerateRoots { .. })));
    }

    /// Exact evaluation over Z[zeta_5] (elements as integer vectors modulo
    /// 1 + z + z^2 + z^3 + z^4) for the roots of x^5 - 1.
    mod cyclotomic {
        pub type Cyc = [i64; 5];

        pub fn mul(a: &Cyc, b: &Cyc) -> Cyc {
            let mut out = [0i64; 5];
            for i in 0..5 {
                for j in 0..5 {
                    out[(i + j) % 5] += a[i] * b[j];
                }
            }
            out
        }

        pub fn sub(a: &Cyc, b: &Cyc) -> Cyc {
            std::array::from_fn(|i| a[i] - b[i])
        }

        pub fn add(a: &Cyc, b: &Cyc) -> Cyc {
            std::array::from_fn(|i| a[i] + b[i])
        }

        pub fn zeta(k: usize) -> Cyc {
            let mut z = [0i64; 5];
            z[k % 5] = 1;
            z
        }

        pub fn to_complex(a: &Cyc) -> num_complex::Complex64 {
            (0..5)
                .map(|k| num_complex::Complex64::from_polar(a[k] as f64, 2.0 * std::f64::consts::PI * k as f64 / 5.0))
                .sum()
        }
    }

    #[test]
    fn roots_of_unity_match_exact_cyclotomic_evaluation() {
        use cyclotomic::*;
        let exact_roots: [Cyc; 5] = std::array::from_fn(zeta);
        let numeric: [Complex64; 5] = std::array::from_fn(|k| {
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 5.0)
        });
        let products = pentagon_products(&numeric).unwrap();
        let cyc_product = |c: [usize; 5]| {
            (0..5).fold(zeta(0), |acc, k| {
                let d = sub(&exact_roots[c[k] - 1], &exact_roots[c[(k + 1) % 5] - 1]);
                mul(&acc, &mul(&d, &d))
            })
        };
        for (i, (p, q)) in PENTAGON_PAIRS.iter().enumerate() {
            let (ep, eq) = (cyc_product(*p), cyc_product(*q));
            let theta = to_complex(&add(&ep, &eq));
            let anti = to_complex(&sub(&ep, &eq));
            assert!(rel_close(products.resolvent_roots().delta[i], -theta, 1e-10));
            assert!(rel_close(products.antisymmetric().delta[i], anti, 1e-10));
        }
    }
}

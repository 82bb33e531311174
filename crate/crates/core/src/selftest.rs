//! Seeded random-corpus property suite behind `quintic selftest`.

use std::fmt::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::invariants::resolvent_sextic;
use crate::oracle::{cross_check, delta_values, find_roots, numeric_discriminant, OracleConfig};
use crate::poly::{discriminant, UniPoly};
use crate::rational::{frac, to_f64};

pub const DEFAULT_SEED: u64 = 0x5eed_0005;
pub const DEFAULT_COUNT: usize = 100;
pub const SEED_ENV: &str = "QUINTIC_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    pub count: usize,
    pub seed: u64,
    /// Coefficients are drawn uniformly from `[-bound, bound]`.
    pub bound: i64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { count: DEFAULT_COUNT, seed: DEFAULT_SEED, bound: 20 }
    }
}

impl SelftestConfig {
    /// Explicit seed first, then `QUINTIC_SEED`, then the default.
    pub fn resolve_seed(explicit: Option<u64>) -> u64 {
        explicit
            .or_else(|| std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()))
            .unwrap_or(DEFAULT_SEED)
    }
}

/// Monic integer quintics with nonzero discriminant, coefficients in `[-bound, bound]`.
pub fn random_quintics(seed: u64, count: usize, bound: i64) -> Vec<UniPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut c: Vec<i64> = (0..5).map(|_| rng.random_range(-bound..=bound)).collect();
        c.push(1);
        let p = UniPoly::from_ints(&c);
        if !discriminant(&p).expect("quintic").eq(&num_traits::Zero::zero()) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PropertyTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Worst observed value of the checked quantity.
    pub worst: f64,
    /// Smaller values are worse (separations rather than errors).
    pub lower_is_worse: bool,
    pub first_failure: Option<String>,
}

impl PropertyTally {
    fn new(name: &'static str) -> Self {
        PropertyTally { name, ..Default::default() }
    }

    fn lower_is_worse(name: &'static str) -> Self {
        PropertyTally { name, worst: f64::INFINITY, lower_is_worse: true, ..Default::default() }
    }

    fn record(&mut self, p: &UniPoly, ok: bool, value: f64) {
        self.worst = if self.lower_is_worse { self.worst.min(value) } else { self.worst.max(value) };
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.first_failure.get_or_insert_with(|| p.to_string());
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelftestSummary {
    pub config: SelftestConfig,
    pub properties: Vec<PropertyTally>,
}

impl SelftestSummary {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|t| t.failed == 0)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "selftest: {} quintics, seed {}, coefficients in [-{}, {}]",
            self.config.count, self.config.seed, self.config.bound, self.config.bound
        );
        for t in &self.properties {
            let status = if t.failed == 0 { "PASS" } else { "FAIL" };
            let _ = write!(s, "{status} {:<28} {:>5}/{:<5} worst {:e}", t.name, t.passed, t.passed + t.failed, t.worst);
            if let Some(f) = &t.first_failure {
                let _ = write!(s, "  first failure: {f}");
            }
            s.push('\n');
        }
        s
    }
}

fn relative(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(f64::MIN_POSITIVE)
}

pub fn run_selftest(config: &SelftestConfig) -> SelftestSummary {
    let oracle = OracleConfig::default();
    let mut keystone = PropertyTally::new("keystone d_r = s_r(theta)");
    let mut rational = PropertyTally::new("rational-root bit agreement");
    let mut distinct = PropertyTally::lower_is_worse("resolvent roots distinct");
    let mut disc = PropertyTally::new("discriminant exact=numeric");
    let mut shift = PropertyTally::new("shift invariance");
    let mut backward = PropertyTally::new("root backward error");

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x9e37_79b9_7f4a_7c15);
    for p in random_quintics(config.seed, config.count, config.bound) {
        match cross_check(&p, &oracle) {
            Ok(c) => {
                keystone.record(&p, c.within_tolerance, c.max_relative_deviation);
                rational.record(&p, c.rational_root_bits_agree, 0.0);
            }
            Err(_) => {
                keystone.record(&p, false, f64::INFINITY);
                rational.record(&p, false, 0.0);
            }
        }

        match find_roots(&p, oracle.root_tol) {
            Ok(roots) => {
                backward.record(&p, roots.backward_error <= 1e-10, roots.backward_error);
                match delta_values(&roots) {
                    Ok(t) => {
                        let ratio = t.min_pairwise_distance() / t.max_norm();
                        distinct.record(&p, ratio > 1e-6, ratio);
                    }
                    Err(_) => distinct.record(&p, false, 0.0),
                }
                let exact = Complex64::new(to_f64(&discriminant(&p).expect("quintic")), 0.0);
                let err = relative(exact, numeric_discriminant(&roots.roots));
                disc.record(&p, err <= 1e-8, err);
            }
            Err(_) => {
                backward.record(&p, false, f64::INFINITY);
                distinct.record(&p, false, 0.0);
                disc.record(&p, false, f64::INFINITY);
            }
        }

        let t = frac(rng.random_range(-30..=30), rng.random_range(1..=7));
        let same = resolvent_sextic(&p).ok() == resolvent_sextic(&p.shift(&t)).ok();
        shift.record(&p, same, 0.0);
    }

    SelftestSummary { config: *config, properties: vec![keystone, rational, distinct, disc, shift, backward] }
}

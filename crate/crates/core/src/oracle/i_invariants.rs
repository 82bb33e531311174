//! The root products `I2`, `I3`, `I4` appearing in the factorization of the
//! resolvent discriminant.
//!
//! Each is transcribed factor by factor. A term `(c, &[i, j, k])` stands for
//! `c * a_i a_j a_k` (1-based, repeated indices are powers), and every factor
//! carries the exponent it is raised to.

use num_complex::Complex64;

pub type Term = (i64, &'static [usize]);

#[derive(Debug)]
pub struct Factor {
    pub terms: &'static [Term],
    pub power: u32,
}

macro_rules! factor {
    ($power:expr; $($c:expr => [$($i:expr),*]),* $(,)?) => {
        Factor { terms: &[$(($c, &[$($i),*])),*], power: $power }
    };
}

pub static I2: [Factor; 9] = [
    factor!(1; 1 => [1,3], 1 => [1,4], -2 => [1,5], -2 => [3,4], 1 => [3,5], 1 => [4,5]),
    factor!(1; 2 => [2,3], -1 => [2,4], -1 => [2,5], -1 => [3,4], -1 => [3,5], 2 => [4,5]),
    factor!(1; 1 => [2,3], -2 => [2,4], 1 => [2,5], 1 => [3,4], -2 => [3,5], 1 => [4,5]),
    factor!(1; 2 => [1,2], -1 => [1,4], -1 => [1,5], -1 => [2,4], -1 => [2,5], 2 => [4,5]),
    factor!(1; 1 => [1,3], -2 => [1,4], 1 => [1,5], 1 => [3,4], -2 => [3,5], 1 => [4,5]),
    factor!(1; 1 => [2,3], 1 => [2,4], -2 => [2,5], -2 => [3,4], 1 => [3,5], 1 => [4,5]),
    factor!(1; 2 => [1,3], -1 => [1,4], -1 => [1,5], -1 => [3,4], -1 => [3,5], 2 => [4,5]),
    factor!(1; 2 => [1,2], -1 => [1,3], -1 => [1,5], -1 => [2,3], -1 => [2,5], 2 => [3,5]),
    factor!(1; 2 => [1,2], -1 => [1,3], -1 => [1,4], -1 => [2,3], -1 => [2,4], 2 => [3,4]),
];

pub static I3: [Factor; 9] = [
    factor!(2; 1 => [1,2,3], -1 => [1,2,5], -2 => [1,3,4], 1 => [1,3,5], 1 => [1,4,4],
        -1 => [2,3,5], -1 => [2,4,4], 2 => [2,4,5], 1 => [3,4,4], -1 => [4,4,5]),
    factor!(2; 1 => [1,2,4], -1 => [1,2,5], -1 => [1,3,3], 2 => [1,3,5], -1 => [1,4,5],
        1 => [2,3,3], -2 => [2,3,4], 1 => [2,4,5], 1 => [3,3,4], -1 => [3,3,5]),
    factor!(2; 1 => [1,2,3], -1 => [1,2,4], 1 => [1,3,4], -2 => [1,3,5], 1 => [1,5,5],
        -1 => [2,3,4], 2 => [2,4,5], -1 => [2,5,5], 1 => [3,5,5], -1 => [4,5,5]),
    factor!(2; 1 => [1,2,4], -1 => [1,2,5], 1 => [1,3,3], -2 => [1,3,4], 1 => [1,4,5],
        -1 => [2,3,3], 2 => [2,3,5], -1 => [2,4,5], 1 => [3,3,4], -1 => [3,3,5]),
    factor!(2; 1 => [1,2,3], -1 => [1,2,4], -1 => [1,3,4], 2 => [1,4,5], -1 => [1,5,5],
        1 => [2,3,4], -2 => [2,3,5], 1 => [2,5,5], 1 => [3,5,5], -1 => [4,5,5]),
    factor!(2; 1 => [1,2,3], -1 => [1,2,5], -1 => [1,3,5], -1 => [1,4,4], 2 => [1,4,5],
        -2 => [2,3,4], 1 => [2,3,5], 1 => [2,4,4], 1 => [3,4,4], -1 => [4,4,5]),
    factor!(4; 1 => [1,2,3], -2 => [1,2,4], 1 => [1,2,5], -1 => [1,3,5], 1 => [1,4,4],
        -1 => [2,3,5], 1 => [2,4,4], -1 => [3,4,4], 2 => [3,4,5], -1 => [4,4,5]),
    factor!(4; 1 => [1,2,3], 1 => [1,2,4], -2 => [1,2,5], -1 => [1,3,4], 1 => [1,5,5],
        -1 => [2,3,4], 1 => [2,5,5], 2 => [3,4,5], -1 => [3,5,5], -1 => [4,5,5]),
    factor!(4; 2 => [1,2,3], -1 => [1,2,4], -1 => [1,2,5], -1 => [1,3,3], 1 => [1,4,5],
        -1 => [2,3,3], 1 => [2,4,5], 1 => [3,3,4], 1 => [3,3,5], -2 => [3,4,5]),
];

pub static I4: [Factor; 6] = [
    factor!(1; 1 => [1,1,2,2], -2 => [1,1,2,5], 1 => [1,1,4,4], -2 => [1,1,4,5], 2 => [1,1,5,5],
        -2 => [1,2,2,4], -2 => [1,2,4,4], 8 => [1,2,4,5], -2 => [1,2,5,5], -2 => [1,4,5,5],
        2 => [2,2,4,4], -2 => [2,2,4,5], 1 => [2,2,5,5], -2 => [2,4,4,5], 1 => [4,4,5,5]),
    factor!(1; 1 => [1,1,2,2], -2 => [1,1,2,4], 1 => [1,1,3,3], -2 => [1,1,3,4], 2 => [1,1,4,4],
        -2 => [1,2,2,3], -2 => [1,2,3,3], 8 => [1,2,3,4], -2 => [1,2,4,4], -2 => [1,3,4,4],
        2 => [2,2,3,3], -2 => [2,2,3,4], 1 => [2,2,4,4], -2 => [2,3,3,4], 1 => [3,3,4,4]),
    factor!(1; 1 => [1,1,2,2], -2 => [1,1,2,3], 2 => [1,1,3,3], -2 => [1,1,3,5], 1 => [1,1,5,5],
        -2 => [1,2,2,5], -2 => [1,2,3,3], 8 => [1,2,3,5], -2 => [1,2,5,5], -2 => [1,3,3,5],
        1 => [2,2,3,3], -2 => [2,2,3,5], 2 => [2,2,5,5], -2 => [2,3,5,5], 1 => [3,3,5,5]),
    factor!(1; 1 => [1,1,2,2], -2 => [1,1,2,3], 2 => [1,1,3,3], -2 => [1,1,3,4], 1 => [1,1,4,4],
        -2 => [1,2,2,4], -2 => [1,2,3,3], 8 => [1,2,3,4], -2 => [1,2,4,4], -2 => [1,3,3,4],
        1 => [2,2,3,3], -2 => [2,2,3,4], 2 => [2,2,4,4], -2 => [2,3,4,4], 1 => [3,3,4,4]),
    factor!(1; 1 => [1,1,2,2], -2 => [1,1,2,4], 2 => [1,1,4,4], -2 => [1,1,4,5], 1 => [1,1,5,5],
        -2 => [1,2,2,5], -2 => [1,2,4,4], 8 => [1,2,4,5], -2 => [1,2,5,5], -2 => [1,4,4,5],
        1 => [2,2,4,4], -2 => [2,2,4,5], 2 => [2,2,5,5], -2 => [2,4,5,5], 1 => [4,4,5,5]),
    factor!(1; 1 => [1,1,2,2], -2 => [1,1,2,5], 1 => [1,1,3,3], -2 => [1,1,3,5], 2 => [1,1,5,5],
        -2 => [1,2,2,3], -2 => [1,2,3,3], 8 => [1,2,3,5], -2 => [1,2,5,5], -2 => [1,3,5,5],
        2 => [2,2,3,3], -2 => [2,2,3,5], 1 => [2,2,5,5], -2 => [2,3,3,5], 1 => [3,3,5,5]),
];

fn eval_factor(f: &Factor, roots: &[Complex64; 5]) -> Complex64 {
    let sum: Complex64 = f
        .terms
        .iter()
        .map(|(c, idx)| idx.iter().map(|&i| roots[i - 1]).product::<Complex64>() * *c as f64)
        .sum();
    sum.powu(f.power)
}

pub fn eval_product(factors: &[Factor], roots: &[Complex64; 5]) -> Complex64 {
    factors.iter().map(|f| eval_factor(f, roots)).product()
}

/// `(I2, I3, I4)` evaluated at the given root order.
pub fn invariants_i(roots: &[Complex64; 5]) -> (Complex64, Complex64, Complex64) {
    (eval_product(&I2, roots), eval_product(&I3, roots), eval_product(&I4, roots))
}

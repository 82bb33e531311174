//! Symmetric functions of the projective resolvent roots are unchanged by
//! unimodular substitutions `f(ax + by, cx + dy)`.

use quintic::cli::parse_polynomial;
use quintic::oracle::{gl2_transform, tilde_delta, BinaryQuintic, Matrix2};

fn main() {
    let f = BinaryQuintic::from_poly(&parse_polynomial("x^5 - x + 1").unwrap());
    let base = tilde_delta(&f.projective_pairs(1e-15).unwrap()).unwrap().symmetric_functions();
    println!("s_r for f:           {}", fmt(&base));
    for m in [Matrix2::from_ints(1, 1, 0, 1), Matrix2::from_ints(2, 1, 1, 1), Matrix2::from_ints(0, -1, 1, 3)] {
        let g = gl2_transform(&f, &m).unwrap();
        let s = tilde_delta(&g.projective_pairs(1e-15).unwrap()).unwrap().symmetric_functions();
        let worst = (0..6).map(|r| (s[r] - base[r]).norm() / base[r].norm().max(1.0)).fold(0.0, f64::max);
        println!(
            "M = [[{}, {}], [{}, {}]]: f^M = {}\n  s_r: {}  (max rel dev {worst:.1e})",
            m.a,
            m.b,
            m.c,
            m.d,
            g.dehomogenize(),
            fmt(&s)
        );
    }
}

fn fmt(s: &[num_complex::Complex64; 6]) -> String {
    s.iter().map(|v| format!("{:.6e}", v.re)).collect::<Vec<_>>().join(", ")
}

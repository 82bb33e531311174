use num_complex::Complex64;

/// All elementary symmetric polynomials `e_0..e_n` of `vals`, read off from
/// the expansion of `prod (1 + v_i z)`.
pub fn elementary_symmetric_all(vals: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(1.0, 0.0)];
    for &v in vals {
        e.push(Complex64::new(0.0, 0.0));
        for k in (1..e.len()).rev() {
            let prev = e[k - 1];
            e[k] += prev * v;
        }
    }
    e
}

/// `e_r(vals)` for `1 <= r <= vals.len()`.
pub fn elementary_symmetric(vals: &[Complex64], r: usize) -> Complex64 {
    assert!(r >= 1 && r <= vals.len(), "r = {r} out of range");
    elementary_symmetric_all(vals)[r]
}

//! Cross-checks the exact resolvent coefficients against symmetric functions
//! of the six resolvent roots built from floating-point quintic roots.

use quintic::cli::parse_polynomial;
use quintic::oracle::{cross_check, delta_values, find_roots, OracleConfig};

fn main() {
    let s = std::env::args().nth(1).unwrap_or_else(|| "x^5 + 20x + 16".to_string());
    let p = parse_polynomial(&s).expect("polynomial");
    let roots = find_roots(&p, 1e-15).expect("roots");
    println!("roots of {p}:");
    for r in roots.roots {
        println!("  {:+.12} {:+.12}i", r.re, r.im);
    }
    println!("residual {:e}, backward error {:e}", roots.residual, roots.backward_error);

    let thetas = delta_values(&roots).expect("distinct roots");
    println!("resolvent roots -(P_i + Q_i):");
    for t in thetas.delta {
        println!("  {:+.6e} {:+.3e}i", t.re, t.im);
    }

    let check = cross_check(&p, &OracleConfig::default()).expect("oracle");
    let exact = quintic::resolvent_sextic(&p).unwrap();
    println!("{:>4} {:>28} {:>28} {:>10}", "r", "exact d_r", "numeric", "rel dev");
    for r in 0..6 {
        println!(
            "{:>4} {:>28} {:>28.6e} {:>10.2e}",
            r + 1,
            exact.d[r].to_string(),
            check.numeric_resolvent[r],
            check.relative_deviations[r]
        );
    }
    println!(
        "rational resolvent root: exact {}, numeric {} {:?}; agree {}",
        check.exact_has_rational_root,
        check.numeric_has_rational_root,
        check.numeric_rational_deltas,
        check.agrees()
    );
}

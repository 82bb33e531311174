//! Exact polynomial arithmetic: resultants, discriminants, rational roots and
//! low-degree factors.

use quintic::rational::frac;
use quintic::{discriminant, resultant, UniPoly};

fn main() {
    let p = UniPoly::from_ints(&[-2, 0, 0, 0, 0, 1]);
    let q = UniPoly::from_ints(&[1, 1]);
    println!("Res({p}, {q}) = {}", resultant(&p, &q).unwrap());
    println!("disc({p}) = {}", discriminant(&p).unwrap());

    let f = &(&UniPoly::linear_root(&frac(3, 2)) * &UniPoly::linear_root(&frac(-1, 4))) * &UniPoly::from_ints(&[1, 0, 1]);
    println!("\nf = {f}");
    let roots = f.rational_roots().unwrap();
    println!("rational roots: {}", roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "));
    println!("gcd(f, f') = {}", f.gcd(&f.derivative()));

    for g in [UniPoly::from_ints(&[1, 1, 1, 2, 0, 1]), UniPoly::from_ints(&[1, -1, 0, 0, 0, 1])] {
        match g.low_degree_factor().unwrap() {
            Some(h) => println!("{g} has the factor {h}; cofactor {}", g.div_rem(&h).unwrap().0),
            None => println!("{g} is irreducible"),
        }
    }
}

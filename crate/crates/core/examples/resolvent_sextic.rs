//! The J-invariants and resolvent sextic of a monic quintic, and their
//! invariance under translation of the variable.

use quintic::invariants::MonicQuintic;
use quintic::rational::frac;

fn main() {
    let q = MonicQuintic::from_ints([1, -4, -3, 3, 1]);
    let aux = q.aux();
    println!("f(x)      = {}", q.to_poly());
    println!("A, B, C   = {}, {}, {}", aux.a, aux.b, aux.c);
    println!("D, E, F, G = {}, {}, {}, {}", aux.d, aux.e, aux.f, aux.g);
    let j = q.j_invariants();
    println!("J4, J8, J12 = {}, {}, {}", j.j4, j.j8, j.j12);
    let g = q.resolvent();
    println!("g(x)      = {}", g.poly);
    println!("rational roots of g: {:?}", g.poly.rational_roots().unwrap().iter().map(|r| r.to_string()).collect::<Vec<_>>());

    let t = frac(7, 3);
    let shifted = q.shift(&t);
    println!("\nf(x + {t}) = {}", shifted.to_poly());
    println!("same J: {}, same g: {}", shifted.j_invariants() == j, shifted.resolvent() == g);
}

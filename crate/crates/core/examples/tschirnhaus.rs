//! Tschirnhaus transforms `y = x^2 + c x` keep the Galois group; the
//! classifier falls back on them when every rational resolvent root is
//! repeated.

use quintic::galois::{classify, tschirnhaus, ResolventTest};
use quintic::rational::rat;
use quintic::UniPoly;

fn main() {
    let f = UniPoly::from_ints(&[-2, 0, 0, 0, 0, 1]);
    let base = ResolventTest::of(&f).unwrap();
    println!(
        "{f}: rational resolvent roots {:?}, simple {:?}",
        base.rational_roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        base.simple_rational_roots.iter().map(|r| r.to_string()).collect::<Vec<_>>()
    );
    for c in [0, 1, -2, 5] {
        let q = tschirnhaus(&f, &rat(c)).unwrap();
        let test = ResolventTest::of(&q).unwrap();
        println!(
            "c = {c:>2}: {:<32} group {} simple roots {:?}",
            q.to_string(),
            classify(&q).unwrap().group,
            test.simple_rational_roots.iter().map(|r| r.to_string()).collect::<Vec<_>>()
        );
    }
}

//! Parses free-form polynomial text and prints the JSON report the CLI emits.

use quintic::cli::{parse_polynomial, Report};
use quintic::classify;

fn main() {
    for s in ["3/2x^5 - 7/3 x + 1/5", "1 + 3x - 3x^3 - 4x^2 + x^4 + x^5 ", "x^5 + 2*x^^2"] {
        match parse_polynomial(s) {
            Ok(p) => {
                println!("{s:?} -> {p}");
                match classify(&p) {
                    Ok(v) => print!("{}", Report::new(&p, &v).to_json()),
                    Err(e) => println!("  {e}"),
                }
            }
            Err(e) => println!("{s:?} -> parse error {e}"),
        }
    }
}

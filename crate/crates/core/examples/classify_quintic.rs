//! Galois groups of a few quintics given on the command line (or a default set).
//!
//! cargo run --example classify_quintic -- "x^5 - 2" "x^5 - 5x + 12"

use quintic::cli::parse_polynomial;
use quintic::classify;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs: Vec<String> = if args.is_empty() {
        ["x^5 - 2", "x^5 - x + 1", "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1", "x^5 + 20x + 16", "x^5 - 5x + 12", "x^5 - x"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for s in inputs {
        let p = match parse_polynomial(&s) {
            Ok(p) => p,
            Err(e) => {
                println!("{s:<36} parse error {e}");
                continue;
            }
        };
        match classify(&p) {
            Ok(v) => {
                let why = match v.evidence.certifying_roots().first() {
                    Some(r) => format!("resolvent root {r}"),
                    None => "no rational resolvent root".to_string(),
                };
                println!(
                    "{:<36} {:<9} solvable={:<5} disc={} ({why})",
                    p.to_string(),
                    v.group.as_str(),
                    v.solvable,
                    v.evidence.discriminant
                );
            }
            Err(e) => println!("{:<36} {e}", p.to_string()),
        }
    }
}

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::galois::GaloisVerdict;
use crate::oracle::{CrossCheck, DiscriminantRelation, OracleConfig};
use crate::poly::UniPoly;

/// Machine-readable outcome of `classify` / `oracle`. Rationals are strings
/// (`"-2"`, `"3/2"`), never JSON numbers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub irreducible: bool,
    pub discriminant: String,
    pub disc_is_square: bool,
    pub j_invariants: [String; 3],
    pub resolvent_coeffs: [String; 6],
    pub resolvent_rational_roots: Vec<String>,
    pub group: String,
    pub solvable: bool,
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tschirnhaus: Option<TransformSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleSection>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformSection {
    /// `y = x^2 + c x`.
    pub c: String,
    pub quintic: String,
    pub resolvent_coeffs: [String; 6],
    pub resolvent_rational_roots: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleSection {
    pub tol: f64,
    pub rational_window: f64,
    pub max_den: u64,
    pub residual: f64,
    pub backward_error: f64,
    pub numeric_resolvent: [f64; 6],
    pub relative_deviations: [f64; 6],
    pub max_relative_deviation: f64,
    pub numeric_rational_deltas: Vec<String>,
    pub exact_has_rational_root: bool,
    pub numeric_has_rational_root: bool,
    pub agrees: bool,
    pub discriminant_relation: DiscriminantRelation,
}

impl OracleSection {
    pub fn new(config: &OracleConfig, c: &CrossCheck) -> Self {
        OracleSection {
            tol: config.tol,
            rational_window: config.rational_window,
            max_den: config.max_den,
            residual: c.residual,
            backward_error: c.backward_error,
            numeric_resolvent: c.numeric_resolvent,
            relative_deviations: c.relative_deviations,
            max_relative_deviation: c.max_relative_deviation,
            numeric_rational_deltas: c.numeric_rational_deltas.clone(),
            exact_has_rational_root: c.exact_has_rational_root,
            numeric_has_rational_root: c.numeric_has_rational_root,
            agrees: c.agrees(),
            discriminant_relation: c.discriminant_relation.clone(),
        }
    }
}

fn strings<const N: usize, T: ToString>(xs: &[T; N]) -> [String; N] {
    std::array::from_fn(|i| xs[i].to_string())
}

impl Report {
    pub fn new(p: &UniPoly, v: &GaloisVerdict) -> Self {
        let ev = &v.evidence;
        let j = crate::invariants::MonicQuintic::from_poly(p)
            .expect("classified input is a quintic")
            .j_invariants();
        Report {
            input: p.to_string(),
            irreducible: true,
            discriminant: ev.discriminant.to_string(),
            disc_is_square: ev.disc_is_square,
            j_invariants: [j.j4.to_string(), j.j8.to_string(), j.j12.to_string()],
            resolvent_coeffs: strings(&ev.resolvent.d),
            resolvent_rational_roots: ev.resolvent_rational_roots.iter().map(|r| r.to_string()).collect(),
            group: v.group.to_string(),
            solvable: v.solvable,
            certificate: ev.certifying_roots().first().map(|r| r.to_string()),
            tschirnhaus: ev.transform.as_ref().map(|t| TransformSection {
                c: t.c.to_string(),
                quintic: t.quintic.to_string(),
                resolvent_coeffs: strings(&t.test.resolvent.d),
                resolvent_rational_roots: t.test.rational_roots.iter().map(|r| r.to_string()).collect(),
            }),
            oracle: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "polynomial:        {}", self.input);
        let _ = writeln!(s, "discriminant:      {} ({})", self.discriminant, if self.disc_is_square { "square" } else { "not a square" });
        let _ = writeln!(s, "J4, J8, J12:       {}, {}, {}", self.j_invariants[0], self.j_invariants[1], self.j_invariants[2]);
        let _ = writeln!(s, "resolvent d1..d6:  {}", self.resolvent_coeffs.join(", "));
        let roots = if self.resolvent_rational_roots.is_empty() {
            "none".to_string()
        } else {
            self.resolvent_rational_roots.join(", ")
        };
        let _ = writeln!(s, "rational roots:    {roots}");
        if let Some(t) = &self.tschirnhaus {
            let _ = writeln!(s, "transform:         y = x^2 + {}x -> {}", t.c, t.quintic);
            let _ = writeln!(s, "  rational roots:  {}", t.resolvent_rational_roots.join(", "));
        }
        let _ = writeln!(s, "group:             {}", self.group);
        let _ = writeln!(s, "solvable:          {}", self.solvable);
        if let Some(c) = &self.certificate {
            let _ = writeln!(s, "certificate:       {c}");
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(s, "oracle:");
            let _ = writeln!(s, "  root residual:   {:e} (backward error {:e})", o.residual, o.backward_error);
            let _ = writeln!(s, "  max deviation:   {:e} (tolerance {:e})", o.max_relative_deviation, o.tol);
            let _ = writeln!(
                s,
                "  rational delta:  exact {}, numeric {} [{}]",
                o.exact_has_rational_root,
                o.numeric_has_rational_root,
                o.numeric_rational_deltas.join(", ")
            );
            let r = &o.discriminant_relation;
            match r.log10_abs_ratio {
                Some(v) => {
                    let _ = writeln!(s, "  log10 |R|:       {v:.6}");
                }
                None => {
                    let _ = writeln!(s, "  log10 |R|:       undefined");
                }
            }
            let _ = writeln!(s, "  disc_g nonzero:  {} (separation {:e})", r.disc_g_nonzero, r.relative_separation);
            let _ = writeln!(s, "  agrees:          {}", o.agrees);
        }
        s
    }
}

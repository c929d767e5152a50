//! Per-subject check lists.

use std::collections::BTreeMap;
use std::fmt::Display;

use bigon_core::assembly::{
    build_mt, build_surface_s, boundary_word, compute_delta_s_t, euler_of_assembly,
    expected_word, gs_class_sizes, hexagon_count, Side, SurfaceAssembly,
};
use bigon_core::fatgraph::Dart;
use bigon_core::freegroup::is_primitive;
use bigon_core::pairing::{check_no_double_parallel, check_parity};
use bigon_core::smallcases::build_annulus_case;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

/// Outcome of one subject. Timing is kept out so reports compare byte for
/// byte across runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Statements carried along without being checked.
    pub metadata: BTreeMap<String, String>,
    pub artifacts: Vec<String>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            pass: true,
            checks: Vec::new(),
            metadata: BTreeMap::new(),
            artifacts: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize) {
        let expected = serde_json::to_value(expected).unwrap_or(Value::Null);
        let actual = serde_json::to_value(actual).unwrap_or(Value::Null);
        let pass = expected == actual;
        self.pass &= pass;
        self.checks.push(Check { name: name.to_string(), expected, actual, pass });
    }

    pub fn note(&mut self, key: &str, value: impl Into<String>) {
        self.metadata.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }
}

/// Error values show up as `{"error": ...}` so the check fails visibly.
fn or_error<T: Serialize, E: Display>(r: Result<T, E>) -> Value {
    match r {
        Ok(v) => serde_json::to_value(v).unwrap_or(Value::Null),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn proper_coloring(s: &SurfaceAssembly) -> bool {
    let faces = s.gts.faces();
    s.coloring.len() == faces.len()
        && s.gts
            .edge_ids()
            .all(|e| s.coloring[faces.face_of(Dart::tail(e))] != s.coloring[faces.face_of(Dart::head(e))])
}

fn words(s: &SurfaceAssembly) -> Value {
    let b = boundary_word(s, Side::B);
    let w = boundary_word(s, Side::W);
    match (b, w) {
        (Ok(b), Ok(w)) => json!({
            "B": b.to_string(),
            "W": w.to_string(),
            "primitive": [is_primitive(&b), is_primitive(&w)],
        }),
        (Err(e), _) | (_, Err(e)) => json!({ "error": e.to_string() }),
    }
}

/// The nine invariants of `M_t` and `S` for one `t >= 4`.
pub fn verify_t(t: usize) -> VerificationReport {
    let mut r = VerificationReport::new(format!("t={t}"));
    r.note("hyperbolicity", "not checked");
    r.note("seifert_structure", "not checked");
    let mt = match build_mt(t) {
        Ok(mt) => mt,
        Err(e) => {
            r.check("build", "ok", e.to_string());
            return r;
        }
    };
    let s = match build_surface_s(&mt) {
        Ok(s) => s,
        Err(e) => {
            r.check("build", "ok", e.to_string());
            return r;
        }
    };
    r.check("faces", 3 * t - 2, s.faces.len());
    r.check("hexagons", 1, hexagon_count(&s));
    r.check("boundary_components", 2, s.boundary.len());
    r.check("euler_characteristic", 0, euler_of_assembly(&s));
    r.check("delta", json!(3), or_error(compute_delta_s_t(&s)));
    r.check("gs_class_sizes", json!([t + 2, t, t - 2]), or_error(gs_class_sizes(&s)));
    r.check("proper_coloring", true, proper_coloring(&s));
    r.check("mt_single_circuit", true, mt.boundary_is_single_circuit());
    r.check(
        "boundary_words",
        json!({
            "B": expected_word(t, Side::B).to_string(),
            "W": expected_word(t, Side::W).to_string(),
            "primitive": [false, false],
        }),
        words(&s),
    );
    r
}

/// The annulus case t = 2 or 3.
pub fn verify_small(t: usize) -> VerificationReport {
    let mut r = VerificationReport::new(format!("smallcase t={t}"));
    let c = match build_annulus_case(t) {
        Ok(c) => c,
        Err(e) => {
            r.check("build", "ok", e.to_string());
            return r;
        }
    };
    let lengths: Vec<usize> = c.pair.g2.faces().lengths();
    let expected = if t == 2 { vec![4, 4] } else { vec![3, 3, 6] };
    r.check("face_lengths", expected, lengths);
    r.check("scharlemann_faces", c.faces.len(), c.faces.iter().filter(|f| f.scharlemann).count());
    r.check("boundary_components", 2, c.boundary_components);
    r.check("delta", 2, c.delta);
    r.check("cellular", true, c.pair.g2.is_toroidal_cellular() && c.pair.g1.is_connected());
    r.check("parity", true, check_parity(&c.pair).is_ok());
    r.check("no_double_parallel", true, matches!(check_no_double_parallel(&c.pair), Ok(Ok(()))));
    r.note("seifert", c.seifert);
    if !c.realizations.is_empty() {
        let flagged = c.realizations.iter().filter(|x| x.flagged).count();
        r.note(
            "realizations",
            format!("{} found, {} flagged as not order preserving", c.realizations.len(), flagged),
        );
    }
    r
}

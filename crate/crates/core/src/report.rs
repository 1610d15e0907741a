//! Machine-readable run reports.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::descent::{self, DescentDiagram};
use crate::graph::{dual_surface, orientability, DecoratedGraph};
use crate::local::TwoPerV;
use crate::topology::{dehn_twist_record, h1_graph_manifold, pencil_localization};

/// Output of one command. Serialized with sorted keys and no timestamps, so
/// identical input and command give byte-identical reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub input_digest: String,
    pub command: String,
    pub result: Value,
    pub diagnostics: Vec<String>,
}

impl RunReport {
    pub fn new(input: &[u8], command: impl Into<String>, result: Value, diagnostics: Vec<String>) -> Self {
        RunReport {
            input_digest: digest(input),
            command: command.into(),
            result,
            diagnostics,
        }
    }

    pub fn to_json_pretty(&self) -> String {
        // round-trip through Value so every map, including nested structs, is key-sorted
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

/// Which analyses to run on a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Sections {
    pub descent: bool,
    pub pic: bool,
    pub two_periodic: bool,
    pub surface: bool,
    pub h1: bool,
    pub pencil: bool,
    pub dehn: bool,
}

impl Sections {
    pub fn all() -> Self {
        Sections {
            descent: true,
            pic: true,
            two_periodic: true,
            surface: true,
            h1: true,
            pencil: true,
            dehn: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Sections::default()
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Runs the requested analyses. A section whose preconditions fail is left
/// out of the result and reported as a diagnostic instead.
///
/// Without an explicit `diagram`, the descent diagram is assembled from the
/// graph's decorations with trivial charts.
pub fn analyze(g: &DecoratedGraph, diagram: Option<&DescentDiagram>, sections: Sections) -> (Value, Vec<String>) {
    let diagram = match diagram {
        Some(d) => Ok(d.clone()),
        None => descent::assemble(g, vec![TwoPerV::one(); g.vertices.len()]),
    };
    let mut result = Map::new();
    let mut diagnostics = Vec::new();
    let mut section = |key: &str, wanted: bool, compute: &dyn Fn() -> crate::Result<Value>| {
        if !wanted {
            return;
        }
        match compute() {
            Ok(v) => {
                result.insert(key.to_string(), v);
            }
            Err(e) => diagnostics.push(format!("{key}: {e}")),
        }
    };
    let d = || diagram.clone();
    section("descent", sections.descent, &|| d().map(|d| to_value(&d)));
    section("pic", sections.pic, &|| d()?.pic_invariants().map(|p| to_value(&p)));
    section("twoPeriodic", sections.two_periodic, &|| d()?.is_two_periodic().map(Value::Bool));
    section("surface", sections.surface, &|| {
        let mut v = to_value(&dual_surface(g)?);
        v["w1"] = to_value(&orientability(g)?.w1_on_cycles);
        Ok(v)
    });
    section("h1", sections.h1, &|| h1_graph_manifold(g).map(|h| to_value(&h)));
    section("nodalCurve", sections.pencil, &|| pencil_localization(g).map(|r| to_value(&r)));
    section("dehnTwists", sections.dehn, &|| Ok(to_value(&dehn_twist_record(g))));
    (Value::Object(result), diagnostics)
}

/// Hex SHA-256 of the input bytes.
pub fn digest(input: &[u8]) -> String {
    Sha256::digest(input).iter().map(|b| format!("{b:02x}")).collect()
}

/// Integers as JSON numbers when they fit in `i64`, as strings otherwise.
pub fn serialize_bigints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match i64::try_from(x) {
            Ok(v) => seq.serialize_element(&v)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

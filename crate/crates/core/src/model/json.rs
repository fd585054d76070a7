use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::model::{Bound, BoundPair, Coord, ExtCoord, Graph, GraphClass, Instance, Interval, ModelError, Representation};

#[derive(Serialize, Deserialize)]
struct BoundDoc {
    #[serde(rename = "L")]
    left: [Value; 2],
    #[serde(rename = "R")]
    right: [Value; 2],
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
    class: String,
    bounds: Vec<BoundDoc>,
}

fn ext_from_value(v: &Value) -> Result<ExtCoord, ModelError> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(num) => num.to_string().parse(),
        other => Err(ModelError::BadNumber(other.to_string())),
    }
}

fn bound_from_values(v: &[Value; 2]) -> Result<Bound, ModelError> {
    Bound::new(ext_from_value(&v[0])?, ext_from_value(&v[1])?)
}

fn ext_to_value(e: &ExtCoord) -> Value {
    Value::String(e.to_string())
}

pub fn instance_from_json(text: &str) -> Result<Instance, ModelError> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    let graph = Graph::from_edges(doc.n, &edges)?;
    let class: GraphClass = doc.class.parse()?;
    let bounds = doc
        .bounds
        .iter()
        .map(|b| Ok(BoundPair::new(bound_from_values(&b.left)?, bound_from_values(&b.right)?)))
        .collect::<Result<Vec<_>, ModelError>>()?;
    Instance::new(graph, bounds, class)
}

pub fn instance_to_value(inst: &Instance) -> Value {
    let doc = InstanceDoc {
        n: inst.n(),
        edges: inst.graph.edges().map(|(u, v)| [u, v]).collect(),
        class: inst.class.as_str().to_string(),
        bounds: inst
            .bounds
            .iter()
            .map(|b| BoundDoc {
                left: [ext_to_value(&b.left.lo), ext_to_value(&b.left.hi)],
                right: [ext_to_value(&b.right.lo), ext_to_value(&b.right.hi)],
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn instance_to_json(inst: &Instance) -> String {
    serde_json::to_string(&instance_to_value(inst)).expect("serializable")
}

pub fn intervals_to_value(rep: &Representation) -> Value {
    Value::Array(
        rep.intervals
            .iter()
            .map(|iv| Value::Array(vec![Value::String(iv.lo.to_string()), Value::String(iv.hi.to_string())]))
            .collect(),
    )
}

/// `{"status":"sat","intervals":[...]}`
pub fn sat_value(rep: &Representation) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("status".into(), Value::String("sat".into()));
    m.insert("intervals".into(), intervals_to_value(rep));
    Value::Object(m)
}

/// `{"status":"unsat","intervals":[],"reason":...}`
pub fn unsat_value(reason: &str, detail: Option<&str>) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("status".into(), Value::String("unsat".into()));
    m.insert("intervals".into(), Value::Array(Vec::new()));
    m.insert("reason".into(), Value::String(reason.into()));
    if let Some(d) = detail {
        m.insert("detail".into(), Value::String(d.into()));
    }
    Value::Object(m)
}

#[derive(Deserialize)]
struct RepDoc {
    status: String,
    #[serde(default)]
    intervals: Vec<[Value; 2]>,
}

/// Parses a representation document; `Ok(None)` for an unsat document.
pub fn representation_from_json(text: &str) -> Result<Option<Representation>, ModelError> {
    let doc: RepDoc = serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))?;
    match doc.status.as_str() {
        "unsat" => Ok(None),
        "sat" => {
            let mut ivs = Vec::with_capacity(doc.intervals.len());
            for pair in &doc.intervals {
                let lo = coord_from_value(&pair[0])?;
                let hi = coord_from_value(&pair[1])?;
                ivs.push(Interval { lo, hi });
            }
            Ok(Some(Representation::new(ivs)))
        }
        other => Err(ModelError::Json(format!("unknown status {:?}", other))),
    }
}

fn coord_from_value(v: &Value) -> Result<Coord, ModelError> {
    match ext_from_value(v)? {
        ExtCoord::Fin(c) => Ok(c),
        other => Err(ModelError::BadNumber(format!("representation endpoint must be finite, got {}", other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip() {
        let text = r#"{"n":3,"edges":[[0,1],[1,2]],"class":"proper-int",
            "bounds":[{"L":["-inf","1/2"],"R":["0","+inf"]},
                      {"L":[0,1],"R":["3/4","7/4"]},
                      {"L":["-inf","+inf"],"R":["-inf","+inf"]}]}"#;
        let inst = instance_from_json(text).unwrap();
        assert_eq!(inst.class, GraphClass::ProperInt);
        assert_eq!(inst.bounds[0].left.hi, ExtCoord::Fin(Coord::new(1, 2)));
        let again = instance_from_json(&instance_to_json(&inst)).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn instance_errors() {
        assert!(matches!(instance_from_json("{"), Err(ModelError::Json(_))));
        let wrong_count = r#"{"n":2,"edges":[],"class":"int","bounds":[]}"#;
        assert_eq!(instance_from_json(wrong_count).unwrap_err(), ModelError::BoundCount(0, 2));
        let bad_class = r#"{"n":0,"edges":[],"class":"unit","bounds":[]}"#;
        assert!(matches!(instance_from_json(bad_class), Err(ModelError::UnknownClass(_))));
    }

    #[test]
    fn representation_round_trip() {
        let rep = Representation::new(vec![Interval::new(Coord::new(1, 3), Coord::int(2))]);
        let text = sat_value(&rep).to_string();
        assert_eq!(text, r#"{"intervals":[["1/3","2"]],"status":"sat"}"#);
        assert_eq!(representation_from_json(&text).unwrap(), Some(rep));
        let u = unsat_value("NotChordal", None).to_string();
        assert_eq!(representation_from_json(&u).unwrap(), None);
    }
}

//! Residual reports and their JSON rendering.
//!
//! Schema (all numbers are written with 17 significant digits; non-finite
//! values become `null`):
//!
//! ```text
//! {
//!   "family": string,
//!   "params": { name: number | string, ... },
//!   "grid": { "x": {"min", "max", "count"}, "y": {"min", "max", "count"} },
//!   "scheme": { "base_step": number, "richardson_levels": integer },
//!   "entries": [ { "name", "max", "mean", "worst_point": [x, y] }, ... ],
//!   "tolerances": { name: number, ... },
//!   "applicable": bool,
//!   "notes": [ string, ... ],
//!   "pass": bool
//! }
//! ```

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::diff::fd::FdScheme;
use crate::grid::GridSpec;

/// A float written with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(format_sig17(self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

pub fn format_sig17(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Number(f64),
    Text(String),
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Number(v) => Num(*v).serialize(s),
            ParamValue::Text(t) => s.serialize_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualEntry {
    pub name: String,
    pub max: f64,
    pub mean: f64,
    pub worst_point: (f64, f64),
}

impl Serialize for ResidualEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ResidualEntry", 4)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("max", &Num(self.max))?;
        st.serialize_field("mean", &Num(self.mean))?;
        st.serialize_field("worst_point", &[Num(self.worst_point.0), Num(self.worst_point.1)])?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub family: String,
    pub params: BTreeMap<String, ParamValue>,
    pub grid: GridSpec,
    pub entries: Vec<ResidualEntry>,
    pub tolerances: BTreeMap<String, f64>,
    pub applicable: bool,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl ResidualReport {
    pub fn entry(&self, name: &str) -> Option<&ResidualEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// `max` of the named entry; panics if absent.
    pub fn max_of(&self, name: &str) -> f64 {
        self.entry(name)
            .unwrap_or_else(|| panic!("no entry `{name}` in report"))
            .max
    }

    /// Names of entries whose max exceeds their tolerance.
    pub fn failures(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| !within(e.max, self.tolerances.get(&e.name).copied()))
            .map(|e| e.name.as_str())
            .collect()
    }

    /// Recomputes `pass` from the entries and tolerances.
    pub fn recompute_pass(&mut self) {
        self.pass = self.applicable && self.failures().is_empty();
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization is infallible");
        s.push('\n');
        s
    }
}

fn within(max: f64, tol: Option<f64>) -> bool {
    match tol {
        Some(t) => max <= t,
        None => max.is_finite(),
    }
}

struct GridJson<'a>(&'a GridSpec);

impl Serialize for GridJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        for (key, axis) in [("x", &self.0.x), ("y", &self.0.y)] {
            let mut inner = BTreeMap::new();
            inner.insert("min", Num(axis.min));
            inner.insert("max", Num(axis.max));
            m.serialize_entry(key, &AxisJson(inner, axis.count))?;
        }
        m.end()
    }
}

struct AxisJson(BTreeMap<&'static str, Num>, usize);

impl Serialize for AxisJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("min", &self.0["min"])?;
        m.serialize_entry("max", &self.0["max"])?;
        m.serialize_entry("count", &self.1)?;
        m.end()
    }
}

struct SchemeJson<'a>(&'a FdScheme);

impl Serialize for SchemeJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("base_step", &Num(self.0.base_step))?;
        m.serialize_entry("richardson_levels", &self.0.richardson_levels)?;
        m.end()
    }
}

impl Serialize for ResidualReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let tolerances: BTreeMap<&str, Num> =
            self.tolerances.iter().map(|(k, v)| (k.as_str(), Num(*v))).collect();
        let mut st = s.serialize_struct("ResidualReport", 9)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("grid", &GridJson(&self.grid))?;
        st.serialize_field("scheme", &SchemeJson(&self.grid.scheme))?;
        st.serialize_field("entries", &self.entries)?;
        st.serialize_field("tolerances", &tolerances)?;
        st.serialize_field("applicable", &self.applicable)?;
        st.serialize_field("notes", &self.notes)?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

/// Running statistics for one named residual.
#[derive(Debug, Clone)]
struct Accumulator {
    name: String,
    max: f64,
    sum: f64,
    count: usize,
    worst: (f64, f64),
}

/// Collects residual samples in insertion order and produces a report.
#[derive(Debug, Clone, Default)]
pub struct ReportBuilder {
    acc: Vec<Accumulator>,
    tolerances: BTreeMap<String, f64>,
}

impl ReportBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `value` (absolute residual) at `point`. NaN counts as infinite.
    pub fn record(&mut self, name: &str, value: f64, point: (f64, f64)) {
        let v = if value.is_nan() { f64::INFINITY } else { value.abs() };
        let slot = match self.acc.iter().position(|a| a.name == name) {
            Some(i) => i,
            None => {
                self.acc.push(Accumulator {
                    name: name.to_string(),
                    max: f64::NEG_INFINITY,
                    sum: 0.0,
                    count: 0,
                    worst: point,
                });
                self.acc.len() - 1
            }
        };
        let a = &mut self.acc[slot];
        if v > a.max {
            a.max = v;
            a.worst = point;
        }
        a.sum += v;
        a.count += 1;
    }

    pub fn tolerance(&mut self, name: &str, tol: f64) {
        self.tolerances.insert(name.to_string(), tol);
    }

    pub fn max_of(&self, name: &str) -> Option<f64> {
        self.acc.iter().find(|a| a.name == name).map(|a| a.max)
    }

    pub fn finish(
        self,
        family: impl Into<String>,
        params: BTreeMap<String, ParamValue>,
        grid: GridSpec,
        applicable: bool,
        notes: Vec<String>,
    ) -> ResidualReport {
        let entries = self
            .acc
            .into_iter()
            .map(|a| ResidualEntry {
                mean: if a.count == 0 { 0.0 } else { a.sum / a.count as f64 },
                name: a.name,
                max: a.max,
                worst_point: a.worst,
            })
            .collect();
        let mut r = ResidualReport {
            family: family.into(),
            params,
            grid,
            entries,
            tolerances: self.tolerances,
            applicable,
            notes,
            pass: false,
        };
        r.recompute_pass();
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> GridSpec {
        GridSpec::parse("-1:1:3,-1:1:3", FdScheme::default()).unwrap()
    }

    #[test]
    fn statistics_and_pass() {
        let mut b = ReportBuilder::new();
        b.tolerance("a", 1.0);
        b.record("a", 0.5, (0.0, 0.0));
        b.record("a", -0.75, (1.0, 0.0));
        b.record("a", 0.25, (0.0, 1.0));
        let r = b.finish("t", BTreeMap::new(), grid(), true, vec![]);
        let e = r.entry("a").unwrap();
        assert_eq!(e.max, 0.75);
        assert_eq!(e.mean, 0.5);
        assert_eq!(e.worst_point, (1.0, 0.0));
        assert!(e.mean <= e.max);
        assert!(r.pass);

        let mut b = ReportBuilder::new();
        b.tolerance("a", 1e-3);
        b.record("a", f64::NAN, (0.0, 0.0));
        let r = b.finish("t", BTreeMap::new(), grid(), true, vec![]);
        assert!(!r.pass);
        assert_eq!(r.failures(), vec!["a"]);
    }

    #[test]
    fn json_shape() {
        let mut b = ReportBuilder::new();
        b.tolerance("metric", 1e-8);
        b.record("metric", 1.5e-10, (0.5, -0.5));
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), ParamValue::Number(1.0));
        params.insert("alpha".to_string(), ParamValue::Text("0.3*sin(y)".into()));
        let r = b.finish("thm61", params, grid(), true, vec![]);
        let json = r.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["family", "params", "grid", "scheme", "entries", "tolerances", "pass"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["entries"][0]["worst_point"][0].as_f64(), Some(0.5));
        assert!(json.contains("1.5000000000000000e-10"));
        assert!(json.contains("\"a\": 1.0000000000000000e0"));
        assert_eq!(v["grid"]["x"]["count"].as_u64(), Some(3));
    }

    #[test]
    fn non_finite_numbers_become_null() {
        let s = serde_json::to_string(&Num(f64::INFINITY)).unwrap();
        assert_eq!(s, "null");
    }
}

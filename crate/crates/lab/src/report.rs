//! Tabular reports: CSV with a `# key=value` metadata header, or the same
//! content as JSON.

use std::fmt::Write as _;

use rfh_core::integral::BoundRow;
use rfh_core::rfh::{RandomizedRft, RfhExpansion};
use rfh_core::stable::SamplePath;
use rfh_core::verify::{BoundReport, CauchyReport, ConvergenceReport};
use rfh_core::{Complex64, Result};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    Num(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => fmt_num(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// Shortest round-trip decimal; scientific notation outside `[1e-4, 1e16)`.
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-4..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }

    pub fn meta_num(&mut self, key: &str, value: f64) -> &mut Self {
        self.meta(key, fmt_num(value))
    }

    /// Flattens any serializable value into `prefix.field=value` entries.
    pub fn meta_serialized(&mut self, prefix: &str, value: &impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("report metadata serializes");
        flatten(prefix, &v, &mut self.meta);
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "# {k}={v}");
        }
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory CSV");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render)).expect("in-memory CSV");
        }
        let bytes = w.into_inner().expect("in-memory CSV");
        out.push_str(std::str::from_utf8(&bytes).expect("CSV is UTF-8"));
        out
    }

    pub fn to_json(&self) -> String {
        let mut meta = Map::new();
        for (k, v) in &self.meta {
            meta.insert(k.clone(), Value::String(v.clone()));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (c, v) in self.columns.iter().zip(row) {
                    m.insert(c.clone(), serde_json::to_value(v).expect("cell serializes"));
                }
                Value::Object(m)
            })
            .collect();
        let doc = serde_json::json!({ "meta": meta, "columns": self.columns, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_csv()
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, inner, out);
            }
        }
        Value::Array(items) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), joined.join(",")));
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Number(n) => n.as_f64().filter(|_| n.is_f64()).map_or_else(|| n.to_string(), fmt_num),
        other => other.to_string(),
    }
}

pub fn path_table(path: &SamplePath, half_width: f64, step: f64) -> Table {
    let mut t = Table::new(&["t", "dX"]);
    t.meta_num("alpha", path.alpha())
        .meta("seed", path.seed())
        .meta_num("T", half_width)
        .meta_num("h", step);
    for (time, d) in path.grid().iter().zip(path.increments()) {
        t.push(vec![(*time).into(), (*d).into()]);
    }
    t
}

pub fn bound_rows_table(rows: &[BoundRow]) -> Table {
    let mut t = Table::new(&["lemma", "f", "alpha", "a", "b", "eps_prime", "C", "bound"]);
    for r in rows {
        t.push(vec![
            r.lemma.as_str().into(),
            r.f.as_str().into(),
            r.alpha.into(),
            r.a.into(),
            r.b.into(),
            r.eps_prime.into(),
            r.c.into(),
            r.bound.into(),
        ]);
    }
    t
}

pub fn coeffs_table(coeffs: &[f64]) -> Table {
    let mut t = Table::new(&["n", "c_n"]);
    for (n, c) in coeffs.iter().enumerate() {
        t.push(vec![n.into(), (*c).into()]);
    }
    t
}

pub fn expansion_table(e: &RfhExpansion) -> Table {
    let mut t = Table::new(&["n", "c_n", "A_n", "lambda_re", "lambda_im"]);
    t.meta("order", e.order())
        .meta("eigen_mode", e.eigen_mode().label())
        .meta("scaling", e.scaling().label())
        .meta("seed", e.path_seed());
    for n in 0..=e.order() {
        let l = e.eigenvalues()[n];
        t.push(vec![n.into(), e.coeffs()[n].into(), e.random_coeffs()[n].into(), l.re.into(), l.im.into()]);
    }
    t
}

/// `n,y,S_n` for every order and `y`; an `S_n_im` column is added when any
/// partial sum has a non-zero imaginary part.
pub fn traces_table(e: &RfhExpansion, ys: &[f64]) -> Result<Table> {
    let sums: Vec<Vec<Complex64>> = ys.iter().map(|&y| e.partial_sums(y)).collect::<Result<_>>()?;
    let complex = sums.iter().flatten().any(|s| s.im != 0.0);
    let mut t = if complex {
        Table::new(&["n", "y", "S_n", "S_n_im"])
    } else {
        Table::new(&["n", "y", "S_n"])
    };
    t.meta("eigen_mode", e.eigen_mode().label())
        .meta("scaling", e.scaling().label())
        .meta("seed", e.path_seed());
    for n in 0..=e.order() {
        for (y, s) in ys.iter().zip(&sums) {
            let mut row: Vec<Cell> = vec![n.into(), (*y).into(), s[n].re.into()];
            if complex {
                row.push(s[n].im.into());
            }
            t.push(row);
        }
    }
    Ok(t)
}

pub fn convergence_table(r: &ConvergenceReport) -> Table {
    let mut t = Table::new(&[
        "n",
        "y",
        "est_prob_exceed",
        "prob_ci_halfwidth",
        "est_mean_abs_err",
        "mean_ci_halfwidth",
    ]);
    t.meta("f", &r.function)
        .meta("eigen_mode", r.eigen_mode.label())
        .meta_serialized("config", &r.config)
        .meta_num("self_check.est_prob_exceed", r.self_check.est_prob_exceed)
        .meta_num("self_check.max_abs_gap", r.self_check.max_abs_gap);
    for row in &r.rows {
        t.push(vec![
            row.n.into(),
            row.y.into(),
            row.est_prob_exceed.into(),
            row.prob_ci_halfwidth.into(),
            row.est_mean_abs_err.into(),
            row.mean_ci_halfwidth.into(),
        ]);
    }
    t
}

pub fn cauchy_table(r: &CauchyReport) -> Table {
    let mut t = Table::new(&["T", "T_prime", "mean_abs_diff", "ci_halfwidth", "exact_mean_abs_diff"]);
    t.meta("f", &r.function)
        .meta_serialized("truncations", &r.truncations)
        .meta_serialized("config", &r.config);
    for row in &r.rows {
        t.push(vec![
            row.t.into(),
            row.t_prime.into(),
            row.mean_abs_diff.into(),
            row.ci_halfwidth.into(),
            row.exact_mean_abs_diff.into(),
        ]);
    }
    t
}

pub fn bound_check_table(r: &BoundReport) -> Table {
    let mut t = Table::new(&[
        "quantity",
        "epsilon",
        "eps_prime",
        "empirical",
        "ci_halfwidth",
        "upper",
        "bound",
        "pass",
    ]);
    t.meta("f", &r.function)
        .meta_num("alpha", r.alpha)
        .meta_serialized("config", &r.config)
        .meta("all_pass", r.all_pass());
    for row in &r.rows {
        t.push(vec![
            row.quantity.as_str().into(),
            row.epsilon.into(),
            row.eps_prime.into(),
            row.empirical.into(),
            row.ci_halfwidth.into(),
            row.upper.into(),
            row.bound.into(),
            row.pass.into(),
        ]);
    }
    t
}

pub fn projection_table(curve: &[f64]) -> Table {
    let mut t = Table::new(&["n", "error"]);
    for (n, e) in curve.iter().enumerate() {
        t.push(vec![n.into(), (*e).into()]);
    }
    t
}

/// The transform, the plain truncated expansion and the round trip through
/// the conjugate eigenvalues, sampled at `ts`.
pub fn rft_table(rft: &RandomizedRft, ts: &[f64]) -> Result<Table> {
    let mut t = Table::new(&["t", "truncated", "rft_re", "rft_im", "roundtrip_re", "roundtrip_im"]);
    let (before, after) = rft.energies();
    t.meta_num("energy", before).meta_num("energy_transformed", after);
    let back = rft.inverse_coeffs(&rft.transformed_coeffs());
    for &x in ts {
        let plain = rft.truncated(x)?;
        let v = rft.eval(x)?;
        let r = rft.evaluate(&back, x)?;
        t.push(vec![x.into(), plain.into(), v.re.into(), v.im.into(), r.re.into(), r.im.into()]);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format_round_trips() {
        for x in [0.0, 1.0, -2.5, 1e-20, 8.135e105, 0.001, 123456.789, -0.0] {
            assert_eq!(fmt_num(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(fmt_num(1e-20), "1e-20");
        assert_eq!(fmt_num(0.5), "0.5");
    }

    #[test]
    fn csv_has_metadata_then_header() {
        let mut t = Table::new(&["n", "x"]);
        t.meta("seed", 42).meta_num("h", 0.001);
        t.push(vec![0usize.into(), 1.5.into()]);
        t.push(vec![1usize.into(), Cell::Empty]);
        assert_eq!(t.to_csv(), "# seed=42\n# h=0.001\nn,x\n0,1.5\n1,\n");
        let j: Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(j["rows"][0]["x"], 1.5);
        assert_eq!(j["meta"]["seed"], "42");
    }

    #[test]
    fn serialized_metadata_is_flattened() {
        #[derive(Serialize)]
        struct Inner {
            a: Vec<usize>,
            b: f64,
        }
        let mut t = Table::new(&["x"]);
        t.meta_serialized("cfg", &Inner { a: vec![1, 2], b: 1e-3 });
        assert_eq!(t.meta, vec![("cfg.a".into(), "1,2".into()), ("cfg.b".into(), "0.001".into())]);
    }
}

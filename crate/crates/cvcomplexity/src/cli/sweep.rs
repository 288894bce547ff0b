//! Parameter sweeps: a state template with one or two range-valued
//! parameters, a quantity to evaluate, and CSV assembly.
//!
//! In the sweep JSON any real-valued parameter may be replaced by
//! `{"from": a, "to": b, "steps": n, "scale": "linear" | "log"}`; complex
//! parameters expose their `re`/`im` components individually.

use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::functionals::{s_complexity, s_fisher_information, s_wehrl_entropy, Method};
use crate::quadrature::QuadratureConfig;
use crate::quantifiers::quantifier_row;
use crate::states::{validate, StateSpec};

use super::{fmt_f64, write_csv};

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "snake_case")]
pub enum RangeScale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct RangeSpec {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    #[serde(default)]
    pub scale: RangeScale,
}

impl RangeSpec {
    pub fn values(&self) -> Result<Vec<f64>> {
        if self.steps < 2 {
            return Err(Error::BadConfig("range needs steps >= 2".into()));
        }
        match self.scale {
            RangeScale::Linear => Ok((0..self.steps)
                .map(|i| {
                    self.from + (self.to - self.from) * i as f64 / (self.steps - 1) as f64
                })
                .collect()),
            RangeScale::Log => {
                if self.from <= 0.0 || self.to <= 0.0 {
                    return Err(Error::BadConfig(
                        "log scale requires positive endpoints".into(),
                    ));
                }
                let (a, b) = (self.from.ln(), self.to.ln());
                Ok((0..self.steps)
                    .map(|i| (a + (b - a) * i as f64 / (self.steps - 1) as f64).exp())
                    .collect())
            }
        }
    }
}

/// Quantity evaluated at every grid point.
#[derive(Debug, Clone, Copy, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Complexity,
    SComplexity(f64),
    Wehrl,
    Fisher,
    QuantifierRow,
}

/// Top-level sweep description (JSON).
#[derive(Debug, Clone, Deserialize)]
pub struct SweepSpec {
    pub state_template: Value,
    pub quantity: Quantity,
    #[serde(default)]
    pub config: Option<QuadratureConfig>,
}

fn is_range_object(v: &Value) -> bool {
    v.as_object()
        .map(|m| m.contains_key("from") && m.contains_key("to") && m.contains_key("steps"))
        .unwrap_or(false)
}

fn find_ranges(v: &Value, path: Vec<String>, out: &mut Vec<(Vec<String>, RangeSpec)>) -> Result<()> {
    if is_range_object(v) {
        let spec: RangeSpec = serde_json::from_value(v.clone())?;
        out.push((path, spec));
        return Ok(());
    }
    if let Value::Object(map) = v {
        for (k, child) in map {
            let mut p = path.clone();
            p.push(k.clone());
            find_ranges(child, p, out)?;
        }
    }
    Ok(())
}

fn substitute(template: &Value, path: &[String], value: f64) -> Value {
    let mut root = template.clone();
    let mut cur = &mut root;
    for key in &path[..path.len() - 1] {
        cur = cur.get_mut(key).expect("path discovered from this template");
    }
    // whole numbers stay integers so integer-typed parameters (fock k,
    // matrix dim) can be swept too
    let json_value = if value.fract() == 0.0 && value.abs() < 2f64.powi(53) && value >= 0.0 {
        Value::from(value as u64)
    } else {
        Value::from(value)
    };
    cur[path.last().unwrap().as_str()] = json_value;
    root
}

/// One expanded grid point: the swept parameter values plus the concrete spec.
#[derive(Debug, Clone)]
pub struct GridPoint {
    pub coords: Vec<f64>,
    pub spec: StateSpec,
}

/// Expand the template into the full (1-D or 2-D cartesian) grid.
pub fn expand_grid(template: &Value) -> Result<(Vec<String>, Vec<GridPoint>)> {
    let mut ranges = Vec::new();
    find_ranges(template, Vec::new(), &mut ranges)?;
    if ranges.is_empty() || ranges.len() > 2 {
        return Err(Error::BadConfig(format!(
            "sweep template must mark 1 or 2 parameters as ranges, found {}",
            ranges.len()
        )));
    }
    let names: Vec<String> = ranges.iter().map(|(p, _)| p.join(".")).collect();
    let mut points = Vec::new();
    let first_vals = ranges[0].1.values()?;
    if ranges.len() == 1 {
        for v in first_vals {
            let concrete = substitute(template, &ranges[0].0, v);
            let spec: StateSpec = serde_json::from_value(concrete)?;
            points.push(GridPoint {
                coords: vec![v],
                spec,
            });
        }
    } else {
        let second_vals = ranges[1].1.values()?;
        for a in &first_vals {
            for b in &second_vals {
                let concrete = substitute(&substitute(template, &ranges[0].0, *a), &ranges[1].0, *b);
                let spec: StateSpec = serde_json::from_value(concrete)?;
                points.push(GridPoint {
                    coords: vec![*a, *b],
                    spec,
                });
            }
        }
    }
    Ok((names, points))
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

fn evaluate(point: &GridPoint, quantity: Quantity, cfg: &QuadratureConfig) -> Result<Vec<String>> {
    let state = validate(&point.spec)?;
    let mut row: Vec<String> = point.coords.iter().map(|v| fmt_f64(*v)).collect();
    match quantity {
        Quantity::Wehrl => {
            let (s, e) = s_wehrl_entropy(&state, -1.0, cfg)?;
            row.push(fmt_f64(s));
            row.push(fmt_f64(e));
        }
        Quantity::Fisher => {
            let (i, e) = s_fisher_information(&state, -1.0, cfg)?;
            row.push(fmt_f64(i));
            row.push(fmt_f64(e));
        }
        Quantity::Complexity | Quantity::SComplexity(_) => {
            let s = match quantity {
                Quantity::SComplexity(s) => s,
                _ => -1.0,
            };
            let rep = s_complexity(&state, s, cfg)?;
            row.push(fmt_f64(rep.entropy));
            row.push(fmt_f64(rep.err_entropy));
            row.push(fmt_f64(rep.fisher));
            row.push(fmt_f64(rep.err_fisher));
            row.push(fmt_f64(rep.complexity));
            row.push(fmt_f64(rep.s));
            row.push(
                match rep.method {
                    Method::ClosedForm => "closed_form",
                    Method::Quadrature => "quadrature",
                }
                .to_string(),
            );
        }
        Quantity::QuantifierRow => {
            let q = quantifier_row(&state, cfg)?;
            row.push(fmt_f64(q.mandel_q));
            row.push(fmt_f64(q.nonclassical_depth));
            row.push(fmt_f64(q.nonclassical_depth_unfloored));
            row.push(fmt_f64(q.skew_info));
            row.push(opt(q.wigner_negativity));
            row.push(opt(q.delta_a));
            row.push(opt(q.delta_b));
        }
    }
    Ok(row)
}

fn header(names: &[String], quantity: Quantity) -> Vec<String> {
    let mut h: Vec<String> = names.to_vec();
    match quantity {
        Quantity::Wehrl => h.extend(["entropy", "err_entropy"].map(String::from)),
        Quantity::Fisher => h.extend(["fisher", "err_fisher"].map(String::from)),
        Quantity::Complexity | Quantity::SComplexity(_) => h.extend(
            [
                "entropy",
                "err_entropy",
                "fisher",
                "err_fisher",
                "complexity",
                "s",
                "method",
            ]
            .map(String::from),
        ),
        Quantity::QuantifierRow => h.extend(
            [
                "mandel_q",
                "nonclassical_depth",
                "nonclassical_depth_unfloored",
                "skew_info",
                "wigner_negativity",
                "delta_a",
                "delta_b",
            ]
            .map(String::from),
        ),
    }
    h
}

/// Run a sweep and write the CSV. Grid points evaluate in parallel; the
/// output rows keep grid order.
pub fn run_sweep(sweep: &SweepSpec, base_cfg: &QuadratureConfig, output: &Path) -> Result<()> {
    let cfg = sweep.config.unwrap_or(*base_cfg).validated()?;
    let (names, points) = expand_grid(&sweep.state_template)?;
    let rows: Vec<Result<Vec<String>>> = points
        .par_iter()
        .map(|p| evaluate(p, sweep.quantity, &cfg))
        .collect();
    let rows: Vec<Vec<String>> = rows.into_iter().collect::<Result<_>>()?;
    let header = header(&names, sweep.quantity);
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    write_csv(output, "sweep", &header_refs, &rows, &cfg)
}

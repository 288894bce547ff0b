//! Deterministic adaptive quadrature over the phase plane and its radial
//! reduction, with the measure d²α/π folded in.
//!
//! Panels carry an embedded Gauss–Kronrod 7/15 pair (tensorized for the plane
//! integrator); the panel error is the Kronrod−Gauss difference, which on the
//! smooth polynomial×Gaussian integrands of this crate overestimates the true
//! Kronrod error by orders of magnitude. Refinement always splits the panel
//! with the largest error and the oldest id, and the final reduction runs in
//! panel-creation order with compensated summation, so results are identical
//! for a fixed configuration no matter how callers are threaded.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Gauss–Kronrod 7/15 abscissae on [-1, 1], ascending.
pub(crate) const GK_NODES: [f64; 15] = [
    -0.991455371120813,
    -0.949107912342759,
    -0.864864423359769,
    -0.741531185599394,
    -0.586087235467691,
    -0.405845151377397,
    -0.207784955007898,
    0.0,
    0.207784955007898,
    0.405845151377397,
    0.586087235467691,
    0.741531185599394,
    0.864864423359769,
    0.949107912342759,
    0.991455371120813,
];

/// Kronrod-15 weights matching [`GK_NODES`].
pub(crate) const GK_WEIGHTS_K: [f64; 15] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
    0.204432940075298,
    0.190350578064785,
    0.169004726639267,
    0.140653259715525,
    0.104790010322250,
    0.063092092629979,
    0.022935322010529,
];

/// Embedded Gauss-7 weights (zero at Kronrod-only abscissae).
pub(crate) const GK_WEIGHTS_G: [f64; 15] = [
    0.0,
    0.129484966168870,
    0.0,
    0.279705391489277,
    0.0,
    0.381830050505119,
    0.0,
    0.417959183673469,
    0.0,
    0.381830050505119,
    0.0,
    0.279705391489277,
    0.0,
    0.129484966168870,
    0.0,
];

const MAX_PANELS: usize = 40_000;
/// Absolute floor entering the relative convergence criterion.
const VALUE_FLOOR: f64 = 1e-12;
/// Largest accepted radius_margin; beyond ~10σ the tail is already below
/// machine precision and wider boxes only dilute the node density.
const MAX_RADIUS_MARGIN: f64 = 24.0;

/// Initial grids track the margin so the per-node spacing (and with it the
/// chance of resolving unit-width features on the first pass) is independent
/// of the box size.
fn initial_plane_grid(margin: f64) -> usize {
    (margin.ceil() as usize).clamp(8, 48)
}

fn initial_radial_grid(margin: f64) -> usize {
    (2 * margin.ceil() as usize).clamp(16, 96)
}

/// Tuning knobs for the integration engine.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct QuadratureConfig {
    /// Half-width of the integration box in units of the distribution scale.
    pub radius_margin: f64,
    /// Requested relative accuracy of the result.
    pub target_rel_tol: f64,
    /// Maximum number of halvings applied to any single panel.
    pub max_subdivisions: u32,
    /// Positivity floor: integrand contributions with density below this are
    /// treated as exact zeros (0·ln 0 = 0 convention and its Fisher analogue).
    pub floor_eps: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            radius_margin: 8.0,
            target_rel_tol: 1e-8,
            max_subdivisions: 20,
            floor_eps: 1e-300,
        }
    }
}

impl QuadratureConfig {
    pub fn validated(self) -> Result<Self> {
        if !(self.radius_margin > 0.0 && self.radius_margin <= MAX_RADIUS_MARGIN) {
            return Err(Error::BadConfig(format!(
                "radius_margin must lie in (0, {MAX_RADIUS_MARGIN}]"
            )));
        }
        if !(self.target_rel_tol > 0.0 && self.target_rel_tol < 1.0) {
            return Err(Error::BadConfig(
                "target_rel_tol must lie in (0, 1)".into(),
            ));
        }
        if self.floor_eps.is_nan() || self.floor_eps <= 0.0 {
            return Err(Error::BadConfig("floor_eps must be > 0".into()));
        }
        Ok(self)
    }

    /// Relative tolerance override, builder style.
    pub fn with_rel_tol(mut self, tol: f64) -> Self {
        self.target_rel_tol = tol;
        self
    }

    pub fn with_radius_margin(mut self, margin: f64) -> Self {
        self.radius_margin = margin;
        self
    }
}

struct Panel {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    depth: u32,
    value: f64,
    error: f64,
    alive: bool,
}

#[derive(PartialEq)]
struct HeapEntry {
    error: f64,
    id: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // largest error first; ties broken toward the older panel
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.id.cmp(&self.id))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn eval_panel_2d<F: Fn(f64, f64) -> f64>(f: &F, p: &mut Panel) {
    let hx = 0.5 * (p.x1 - p.x0);
    let hy = 0.5 * (p.y1 - p.y0);
    let cx = 0.5 * (p.x1 + p.x0);
    let cy = 0.5 * (p.y1 + p.y0);
    let mut k = 0.0;
    let mut g = 0.0;
    for (j, ny) in GK_NODES.iter().enumerate() {
        let y = cy + hy * ny;
        let mut sk = 0.0;
        let mut sg = 0.0;
        for (i, nx) in GK_NODES.iter().enumerate() {
            let v = f(cx + hx * nx, y);
            sk += GK_WEIGHTS_K[i] * v;
            sg += GK_WEIGHTS_G[i] * v;
        }
        k += GK_WEIGHTS_K[j] * sk;
        g += GK_WEIGHTS_G[j] * sg;
    }
    let scale = hx * hy;
    p.value = k * scale;
    p.error = (k - g).abs() * scale + 4.0 * f64::EPSILON * p.value.abs();
}

fn eval_panel_1d<F: Fn(f64) -> f64>(f: &F, p: &mut Panel) {
    let h = 0.5 * (p.x1 - p.x0);
    let c = 0.5 * (p.x1 + p.x0);
    let mut k = 0.0;
    let mut g = 0.0;
    for (i, n) in GK_NODES.iter().enumerate() {
        let v = f(c + h * n);
        k += GK_WEIGHTS_K[i] * v;
        g += GK_WEIGHTS_G[i] * v;
    }
    p.value = k * h;
    p.error = (k - g).abs() * h + 4.0 * f64::EPSILON * p.value.abs();
}

/// Compensated (Kahan) sum over (value, error) pairs in slice order.
fn reduce(panels: &[Panel]) -> (f64, f64) {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut err = 0.0;
    for p in panels.iter().filter(|p| p.alive) {
        let y = p.value - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += p.error;
    }
    (sum, err)
}

fn adapt<Eval, Split>(
    mut panels: Vec<Panel>,
    cfg: &QuadratureConfig,
    eval: Eval,
    split: Split,
) -> Result<(f64, f64)>
where
    Eval: Fn(&mut Panel),
    Split: Fn(&Panel) -> Vec<Panel>,
{
    let mut run_value = 0.0;
    let mut run_error = 0.0;
    for p in panels.iter_mut() {
        eval(p);
        run_value += p.value;
        run_error += p.error;
    }
    let mut heap: BinaryHeap<HeapEntry> = panels
        .iter()
        .enumerate()
        .map(|(id, p)| HeapEntry { error: p.error, id })
        .collect();

    loop {
        if run_error <= cfg.target_rel_tol * run_value.abs().max(VALUE_FLOOR) {
            // canonical result: compensated sum in panel-creation order
            return Ok(reduce(&panels));
        }
        // refine the worst refinable panel; entries of dead panels are stale
        // and skipped, entries at max depth can never be refined again
        let mut target = None;
        while let Some(entry) = heap.pop() {
            let p = &panels[entry.id];
            if p.alive && p.depth < cfg.max_subdivisions {
                target = Some(entry.id);
                break;
            }
        }
        let give_up = target.is_none() || panels.len() + 4 > MAX_PANELS;
        if give_up {
            let (value, error) = reduce(&panels);
            return Err(Error::NoConvergence {
                err: error,
                tol: cfg.target_rel_tol * value.abs().max(VALUE_FLOOR),
                panels: panels.len(),
            });
        }
        let id = target.expect("checked above");
        let children = split(&panels[id]);
        panels[id].alive = false;
        run_value -= panels[id].value;
        run_error -= panels[id].error;
        for mut child in children {
            eval(&mut child);
            run_value += child.value;
            run_error += child.error;
            let child_id = panels.len();
            heap.push(HeapEntry {
                error: child.error,
                id: child_id,
            });
            panels.push(child);
        }
    }
}

/// ∫ f(x, y) dx dy / π over the square of half-width `radius_margin·scale`
/// centered at `center`, with an error estimate.
///
/// Deterministic for a fixed configuration: the refinement sequence and the
/// final summation order do not depend on the caller's threading.
pub fn integrate_plane<F>(
    f: F,
    center: (f64, f64),
    scale: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)>
where
    F: Fn(f64, f64) -> f64,
{
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::BadConfig("scale must be positive and finite".into()));
    }
    let half = cfg.radius_margin * scale;
    integrate_plane_box(f, center, half, cfg)
}

/// Plane integration over an explicit box half-width (internal).
pub(crate) fn integrate_plane_box<F>(
    f: F,
    center: (f64, f64),
    half: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)>
where
    F: Fn(f64, f64) -> f64,
{
    let n = initial_plane_grid(cfg.radius_margin);
    let step = 2.0 * half / n as f64;
    let mut panels = Vec::with_capacity(n * n);
    for iy in 0..n {
        for ix in 0..n {
            panels.push(Panel {
                x0: center.0 - half + ix as f64 * step,
                x1: center.0 - half + (ix + 1) as f64 * step,
                y0: center.1 - half + iy as f64 * step,
                y1: center.1 - half + (iy + 1) as f64 * step,
                depth: 0,
                value: 0.0,
                error: 0.0,
                alive: true,
            });
        }
    }
    let (v, e) = adapt(
        panels,
        cfg,
        |p| eval_panel_2d(&f, p),
        |p| {
            let mx = 0.5 * (p.x0 + p.x1);
            let my = 0.5 * (p.y0 + p.y1);
            vec![
                quad_child(p.x0, mx, p.y0, my, p.depth + 1),
                quad_child(mx, p.x1, p.y0, my, p.depth + 1),
                quad_child(p.x0, mx, my, p.y1, p.depth + 1),
                quad_child(mx, p.x1, my, p.y1, p.depth + 1),
            ]
        },
    )?;
    Ok((v / std::f64::consts::PI, e / std::f64::consts::PI))
}

fn quad_child(x0: f64, x1: f64, y0: f64, y1: f64, depth: u32) -> Panel {
    Panel {
        x0,
        x1,
        y0,
        y1,
        depth,
        value: 0.0,
        error: 0.0,
        alive: true,
    }
}

/// Radial reduction of the plane integral for fields depending on |α| only:
/// returns 2 ∫₀^R g(r) r dr with R = radius_margin·scale.
pub fn integrate_radial<G>(g: G, scale: f64, cfg: &QuadratureConfig) -> Result<(f64, f64)>
where
    G: Fn(f64) -> f64,
{
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::BadConfig("scale must be positive and finite".into()));
    }
    let radius = cfg.radius_margin * scale;
    let n = initial_radial_grid(cfg.radius_margin);
    let step = radius / n as f64;
    let mut panels = Vec::with_capacity(n);
    for i in 0..n {
        panels.push(Panel {
            x0: i as f64 * step,
            x1: (i + 1) as f64 * step,
            y0: 0.0,
            y1: 0.0,
            depth: 0,
            value: 0.0,
            error: 0.0,
            alive: true,
        });
    }
    let weighted = |r: f64| 2.0 * g(r) * r;
    adapt(
        panels,
        cfg,
        |p| eval_panel_1d(&weighted, p),
        |p| {
            let m = 0.5 * (p.x0 + p.x1);
            vec![
                Panel {
                    x0: p.x0,
                    x1: m,
                    y0: 0.0,
                    y1: 0.0,
                    depth: p.depth + 1,
                    value: 0.0,
                    error: 0.0,
                    alive: true,
                },
                Panel {
                    x0: m,
                    x1: p.x1,
                    y0: 0.0,
                    y1: 0.0,
                    depth: p.depth + 1,
                    value: 0.0,
                    error: 0.0,
                    alive: true,
                },
            ]
        },
    )
}

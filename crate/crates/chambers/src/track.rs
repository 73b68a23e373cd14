use monodromy::BraidWord;
use num_complex::Complex64;
use serde_json::Value;

use crate::error::ChamberError;
use crate::geometry::{lexicographic_order, OrientedLine, PointConfig};

/// Maximum bisection depth, both for separating crossings and for locating them.
pub const MAX_DEPTH: u32 = 40;

#[derive(Clone, Debug, PartialEq)]
pub struct TrackResult {
    pub word: BraidWord,
    /// 1-based labels in left-to-right order at the start and at the end.
    pub initial_order: Vec<usize>,
    pub final_order: Vec<usize>,
}

struct Tracker<'a, F> {
    f: &'a F,
    line: OrientedLine,
    coal_tol: f64,
    order: Vec<usize>,
    pos: Vec<usize>,
    letters: Vec<(usize, i8)>,
}

impl<F: Fn(f64) -> Vec<Complex64>> Tracker<'_, F> {
    fn value(&self, u: &[Complex64], i: usize, j: usize) -> bool {
        self.line.project(u[i] - u[j]) > 0.0
    }

    fn events(&self, a: &[Complex64], b: &[Complex64]) -> Vec<(usize, usize)> {
        let n = a.len();
        let mut ev = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.value(a, i, j) != self.value(b, i, j) {
                    ev.push((i, j));
                }
            }
        }
        ev
    }

    fn adjacent(&self, (i, j): (usize, usize)) -> bool {
        self.pos[i].abs_diff(self.pos[j]) == 1
    }

    fn process(&mut self, t0: f64, a: &[Complex64], t1: f64, b: &[Complex64], depth: u32) -> Result<(), ChamberError> {
        let ev = self.events(a, b);
        if ev.is_empty() {
            return Ok(());
        }
        if ev.len() == 1 && self.adjacent(ev[0]) {
            return self.emit(t0, t1, ev[0]);
        }
        if depth < MAX_DEPTH {
            let tm = 0.5 * (t0 + t1);
            let m = (self.f)(tm);
            self.process(t0, a, tm, &m, depth + 1)?;
            return self.process(tm, &m, t1, b, depth + 1);
        }
        let mut used = vec![false; a.len()];
        for &(i, j) in &ev {
            if used[i] || used[j] || !self.adjacent((i, j)) {
                return Err(ChamberError::Refinement(format!(
                    "crossings of rays R_{}{} and others cannot be separated near t = {t0}",
                    i + 1,
                    j + 1
                )));
            }
            used[i] = true;
            used[j] = true;
        }
        let mut ev = ev;
        ev.sort_by_key(|&(i, j)| self.pos[i].min(self.pos[j]));
        for e in ev {
            self.emit(t0, t1, e)?;
        }
        Ok(())
    }

    fn emit(&mut self, t0: f64, t1: f64, (i, j): (usize, usize)) -> Result<(), ChamberError> {
        let start = (self.f)(t0);
        let before = self.value(&start, i, j);
        let (mut lo, mut hi) = (t0, t1);
        for _ in 0..MAX_DEPTH {
            let m = 0.5 * (lo + hi);
            if self.value(&(self.f)(m), i, j) == before {
                lo = m;
            } else {
                hi = m;
            }
        }
        let u = (self.f)(0.5 * (lo + hi));
        if (u[i] - u[j]).norm() <= self.coal_tol {
            return Err(ChamberError::Refinement(format!(
                "u_{} and u_{} coalesce where their ray crosses the line",
                i + 1,
                j + 1
            )));
        }
        let p = self.pos[i].min(self.pos[j]);
        let (left, right) = (self.order[p], self.order[p + 1]);
        let w = (u[left] - u[right]) * self.line.direction();
        let sign: i8 = if w.im < 0.0 { 1 } else { -1 };
        self.letters.push((p + 1, sign));
        self.order.swap(p, p + 1);
        self.pos[left] = p + 1;
        self.pos[right] = p;
        Ok(())
    }
}

fn check_endpoint(u: &PointConfig, line: &OrientedLine, which: &str) -> Result<Vec<usize>, ChamberError> {
    let tol = u.coalescence_tol();
    for i in 0..u.n() {
        for j in i + 1..u.n() {
            if (u.u()[i] - u.u()[j]).norm() <= tol {
                return Err(ChamberError::Input(format!("u_{} and u_{} coincide at the {which} of the path", i + 1, j + 1)));
            }
        }
    }
    lexicographic_order(u, line)
        .map(|o| o.flatten())
        .map_err(|_| ChamberError::Input(format!("a Stokes ray lies on the line at the {which} of the path")))
}

/// Tracks a continuous path `t ↦ u(t)` on `[0, 1]`, first sampled at `grid`
/// (increasing, from 0 to 1) and refined by bisection where needed.
pub fn track_path<F>(f: F, grid: &[f64], line: &OrientedLine) -> Result<TrackResult, ChamberError>
where
    F: Fn(f64) -> Vec<Complex64>,
{
    if grid.is_empty() {
        return Err(ChamberError::Input("empty path".into()));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(ChamberError::Input("path parameters must increase".into()));
    }
    let first = PointConfig::new(f(grid[0]))?;
    let last = PointConfig::new(f(grid[grid.len() - 1]))?;
    let initial_order = check_endpoint(&first, line, "start")?;
    check_endpoint(&last, line, "end")?;
    let n = first.n();
    let mut pos = vec![0; n];
    let order: Vec<usize> = initial_order.iter().map(|k| k - 1).collect();
    for (p, &k) in order.iter().enumerate() {
        pos[k] = p;
    }
    let coal_tol = first.coalescence_tol();
    let mut tr = Tracker { f: &f, line: *line, coal_tol, order, pos, letters: Vec::new() };
    let mut prev = first.u().to_vec();
    for w in grid.windows(2) {
        let next = f(w[1]);
        if next.len() != n {
            return Err(ChamberError::Input("samples have different lengths".into()));
        }
        tr.process(w[0], &prev, w[1], &next, 0)?;
        prev = next;
    }
    let final_order: Vec<usize> = tr.order.iter().map(|k| k + 1).collect();
    Ok(TrackResult { word: BraidWord::new(tr.letters), initial_order, final_order })
}

/// The piecewise-linear path through `samples`, parametrized on `[0, 1]`.
pub fn piecewise_linear(samples: &[PointConfig]) -> impl Fn(f64) -> Vec<Complex64> + '_ {
    move |t| {
        let m = samples.len() - 1;
        if m == 0 {
            return samples[0].u().to_vec();
        }
        let x = (t * m as f64).clamp(0.0, m as f64);
        let k = (x.floor() as usize).min(m - 1);
        let s = x - k as f64;
        samples[k].u().iter().zip(samples[k + 1].u()).map(|(a, b)| a + (b - a) * s).collect()
    }
}

pub fn uniform_grid(samples: usize) -> Vec<f64> {
    match samples {
        0 => Vec::new(),
        1 => vec![0.0],
        m => (0..m).map(|k| k as f64 / (m - 1) as f64).collect(),
    }
}

pub fn track_samples(samples: &[PointConfig], line: &OrientedLine) -> Result<TrackResult, ChamberError> {
    if samples.is_empty() {
        return Err(ChamberError::Input("empty path".into()));
    }
    track_path(piecewise_linear(samples), &uniform_grid(samples.len()), line)
}

/// The braid word of a sampled path, one letter per crossing of the line by a Stokes ray.
pub fn track_braid(samples: &[PointConfig], line: &OrientedLine) -> Result<BraidWord, ChamberError> {
    Ok(track_samples(samples, line)?.word)
}

/// Parses `{"phi": …, "samples": [[[re, im], …], …]}`.
pub fn parse_path_json(v: &Value) -> Result<(OrientedLine, Vec<PointConfig>), ChamberError> {
    let bad = |m: &str| ChamberError::Input(m.to_string());
    let phi = v.get("phi").and_then(Value::as_f64).ok_or_else(|| bad("missing numeric phi"))?;
    let samples = v
        .get("samples")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing samples array"))?
        .iter()
        .map(|s| {
            let pts = s.as_array().ok_or_else(|| bad("each sample must be an array"))?;
            let u = pts
                .iter()
                .map(|z| match z.as_array().map(Vec::as_slice) {
                    Some([re, im]) => Ok(Complex64::new(
                        re.as_f64().ok_or_else(|| bad("non-numeric coordinate"))?,
                        im.as_f64().ok_or_else(|| bad("non-numeric coordinate"))?,
                    )),
                    _ => Err(bad("coordinates must be [re, im] pairs")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            PointConfig::new(u)
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(k) = samples.first().map(PointConfig::n) {
        if samples.iter().any(|s| s.n() != k) {
            return Err(bad("samples have different lengths"));
        }
    }
    Ok((OrientedLine::new(phi)?, samples))
}

pub fn path_to_json(line: &OrientedLine, samples: &[PointConfig]) -> Value {
    let s: Vec<Value> = samples
        .iter()
        .map(|c| Value::Array(c.u().iter().map(|z| serde_json::json!([z.re, z.im])).collect()))
        .collect();
    serde_json::json!({ "phi": line.phi(), "samples": s })
}

/// `u·e^{iθ}` for `θ` from 0 to `2π`.
pub fn full_rotation_path(u: &PointConfig, samples: usize) -> Vec<PointConfig> {
    uniform_grid(samples).into_iter().map(|t| u.rotated(std::f64::consts::TAU * t)).collect()
}

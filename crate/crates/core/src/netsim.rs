//! Growing intersected-networks: preferential attachment (each new vertex links
//! to `m` distinct vertices with probability proportional to degree), the
//! degree distributions, linear growth fits, tail exponent and kinematics.
//!
//! The hyperedge of a vertex is its closed neighbourhood, which makes the grown
//! graph exactly the intersected-network of its hyperedges.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Result};
use crate::graph::Graph;
use crate::Set;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthLaw {
    Linear,
    /// Reported as a fit of `ln v` and `ln e` against `t`.
    Exponential,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    /// Edges added per step.
    pub m: usize,
    /// Size of the initial complete graph, `m + 1` by default.
    pub m0: usize,
    pub steps: usize,
    pub seed: u64,
    #[serde(default = "linear")]
    pub growth: GrowthLaw,
}

fn linear() -> GrowthLaw {
    GrowthLaw::Linear
}

impl SimConfig {
    pub fn new(m: usize, steps: usize, seed: u64) -> Self {
        Self { m, m0: m + 1, steps, seed, growth: GrowthLaw::Linear }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return invalid("m must be at least 1");
        }
        if self.m0 < self.m || self.m0 < 2 {
            return invalid(format!("m0 = {} must be at least max(m, 2)", self.m0));
        }
        if self.steps < 1 {
            return invalid("steps must be at least 1");
        }
        Ok(())
    }
}

/// One row of the growth history.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub t: usize,
    pub v_net: usize,
    pub e_net: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetState {
    pub adj: Vec<Vec<u32>>,
    pub t: usize,
    pub e_net: usize,
    pub history: Vec<Sample>,
    /// Each vertex once per incident edge; uniform draws from it are degree-proportional.
    #[serde(skip)]
    ends: Vec<u32>,
    #[serde(skip)]
    rng: Option<ChaCha8Rng>,
}

impl NetState {
    pub fn v_net(&self) -> usize {
        self.adj.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    /// `Π_i = k_i / Σ_j k_j`.
    pub fn attachment_probabilities(&self) -> Vec<f64> {
        let total = 2.0 * self.e_net as f64;
        self.adj.iter().map(|a| a.len() as f64 / total).collect()
    }

    /// Closed neighbourhoods, one hyperedge per vertex.
    pub fn hyperedges(&self) -> Vec<Set> {
        self.adj.iter().enumerate().map(|(v, a)| a.iter().copied().chain([v as u32]).collect()).collect()
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.v_net());
        for (u, a) in self.adj.iter().enumerate() {
            for &v in a {
                if u < v as usize {
                    g.add_edge(u, v as usize).expect("simple graph");
                }
            }
        }
        g
    }

    /// Degree sum equals twice the edge count.
    pub fn degree_sum_holds(&self) -> bool {
        self.adj.iter().map(|a| a.len()).sum::<usize>() == 2 * self.e_net
    }
}

/// `K_{m0}` at time 0.
pub fn init(cfg: &SimConfig) -> Result<NetState> {
    cfg.validate()?;
    let n = cfg.m0;
    let adj: Vec<Vec<u32>> = (0..n).map(|u| (0..n as u32).filter(|&v| v as usize != u).collect()).collect();
    let ends = adj.iter().enumerate().flat_map(|(u, a)| std::iter::repeat_n(u as u32, a.len())).collect();
    let e_net = n * (n - 1) / 2;
    Ok(NetState {
        adj,
        t: 0,
        e_net,
        history: vec![Sample { t: 0, v_net: n, e_net }],
        ends,
        rng: Some(ChaCha8Rng::seed_from_u64(cfg.seed)),
    })
}

/// Adds one vertex joined to `m` distinct degree-proportionally chosen vertices.
pub fn step(s: &mut NetState, cfg: &SimConfig) -> Result<()> {
    if s.v_net() < cfg.m {
        return precondition("fewer vertices than edges per step");
    }
    let rng = s.rng.as_mut().ok_or_else(|| crate::Error::InvalidInput("state has no generator; rebuild it with init".into()))?;
    let mut targets: Vec<u32> = Vec::with_capacity(cfg.m);
    while targets.len() < cfg.m {
        let v = s.ends[rng.gen_range(0..s.ends.len())];
        if !targets.contains(&v) {
            targets.push(v);
        }
    }
    let new = s.adj.len() as u32;
    s.adj.push(targets.clone());
    for &v in &targets {
        s.adj[v as usize].push(new);
        s.ends.push(v);
        s.ends.push(new);
    }
    s.e_net += cfg.m;
    s.t += 1;
    s.history.push(Sample { t: s.t, v_net: s.adj.len(), e_net: s.e_net });
    Ok(())
}

/// `y = a t + b` by least squares.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
}

fn least_squares(xs: &[f64], ys: &[f64]) -> (LineFit, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs.iter().zip(ys).map(|(x, y)| (y - slope * x - intercept).powi(2)).sum();
    let stderr = if xs.len() > 2 { (rss / (n - 2.0) / sxx).sqrt() } else { 0.0 };
    (LineFit { slope, intercept }, stderr)
}

/// Growth fits of `v_net` and `e_net` against `t`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthFit {
    pub law: GrowthLaw,
    pub v: LineFit,
    pub e: LineFit,
}

pub fn fit_growth(history: &[Sample], law: GrowthLaw) -> Result<GrowthFit> {
    if history.len() < 2 {
        return precondition("need at least two samples");
    }
    let t: Vec<f64> = history.iter().map(|s| s.t as f64).collect();
    let f = |x: usize| match law {
        GrowthLaw::Linear => x as f64,
        GrowthLaw::Exponential => (x as f64).ln(),
    };
    let v: Vec<f64> = history.iter().map(|s| f(s.v_net)).collect();
    let e: Vec<f64> = history.iter().map(|s| f(s.e_net)).collect();
    Ok(GrowthFit { law, v: least_squares(&t, &v).0, e: least_squares(&t, &e).0 })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub config: SimConfig,
    pub fit: GrowthFit,
    /// Whether the degree sum matched `2 e_net` after every step.
    pub degree_sum_always: bool,
}

/// Runs `cfg.steps` steps from [`init`].
pub fn run(cfg: &SimConfig) -> Result<(NetState, RunSummary)> {
    let mut s = init(cfg)?;
    let mut ok = s.degree_sum_holds();
    for _ in 0..cfg.steps {
        step(&mut s, cfg)?;
        ok &= s.ends.len() == 2 * s.e_net;
    }
    ok &= s.degree_sum_holds();
    let fit = fit_growth(&s.history, cfg.growth)?;
    Ok((s, RunSummary { config: *cfg, fit, degree_sum_always: ok }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistKind {
    /// Fraction of vertices with degree `k`.
    Pk,
    /// Fraction of vertices with degree at least `k`.
    Cum,
    /// Fraction of edges whose larger end degree is at least `k`.
    Ecum,
    /// As `Ecum` with each edge weighted by that degree.
    Decum,
}

impl DistKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "pk" => Self::Pk,
            "cum" => Self::Cum,
            "ecum" => Self::Ecum,
            "decum" => Self::Decum,
            _ => return invalid(format!("unknown distribution {s:?}")),
        })
    }
}

/// Table `k -> value` over the degrees present.
pub fn distributions(s: &NetState, kind: DistKind) -> BTreeMap<usize, f64> {
    let deg = s.degrees();
    let mut vcount: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in &deg {
        *vcount.entry(d).or_default() += 1;
    }
    let mut ecount: BTreeMap<usize, usize> = BTreeMap::new();
    for (u, a) in s.adj.iter().enumerate() {
        for &v in a {
            if u < v as usize {
                *ecount.entry(deg[u].max(deg[v as usize])).or_default() += 1;
            }
        }
    }
    let (vn, en) = (s.v_net() as f64, s.e_net as f64);
    let tail = |counts: &BTreeMap<usize, usize>, weight: &dyn Fn(usize) -> f64, norm: f64| {
        let mut acc = 0.0;
        let mut out: BTreeMap<usize, f64> = BTreeMap::new();
        let keys: Vec<usize> = vcount.keys().chain(counts.keys()).copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        for &k in keys.iter().rev() {
            acc += counts.get(&k).map_or(0.0, |&c| weight(k) * c as f64);
            out.insert(k, acc / norm);
        }
        out
    };
    match kind {
        DistKind::Pk => vcount.iter().map(|(&k, &c)| (k, c as f64 / vn)).collect(),
        DistKind::Cum => tail(&vcount, &|_| 1.0, vn).into_iter().filter(|(k, _)| vcount.contains_key(k)).collect(),
        DistKind::Ecum => tail(&ecount, &|_| 1.0, en),
        DistKind::Decum => tail(&ecount, &|k| k as f64, en),
    }
}

/// `γ = 1 - slope` of the log-log tail of a cumulative table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentFit {
    pub gamma: f64,
    pub stderr: f64,
    pub points: usize,
}

pub const DEFAULT_K_MIN: usize = 5;
pub const MIN_TAIL_POINTS: usize = 5;

/// Fits `P_cum(k) ~ k^(1-γ)` over `k >= k_min`.
pub fn fit_exponent(cum: &BTreeMap<usize, f64>, k_min: usize) -> Result<ExponentFit> {
    let pts: Vec<(f64, f64)> =
        cum.iter().filter(|(&k, &v)| k >= k_min.max(1) && v > 0.0).map(|(&k, &v)| ((k as f64).ln(), v.ln())).collect();
    if pts.len() < MIN_TAIL_POINTS {
        return precondition(format!("{} tail points, need {MIN_TAIL_POINTS}", pts.len()));
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
    let (fit, stderr) = least_squares(&xs, &ys);
    Ok(ExponentFit { gamma: 1.0 - fit.slope, stderr, points: xs.len() })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Kinematics {
    pub v_velocity: f64,
    pub e_velocity: f64,
    pub velocity: f64,
    pub speed_ratio: f64,
    pub average_degree: f64,
    /// `e_net <= v_net ln v_net` at the last sample.
    pub sparse: bool,
}

/// Rates over the whole history (exact for linear growth).
pub fn kinematics(history: &[Sample]) -> Result<Kinematics> {
    let (first, last) = match (history.first(), history.last()) {
        (Some(a), Some(b)) if history.len() >= 2 && b.t > a.t => (a, b),
        _ => return precondition("need at least two samples at different times"),
    };
    let dt = (last.t - first.t) as f64;
    let dv = (last.v_net as f64 - first.v_net as f64) / dt;
    let de = (last.e_net as f64 - first.e_net as f64) / dt;
    let v = last.v_net as f64;
    Ok(Kinematics {
        v_velocity: dv,
        e_velocity: de,
        velocity: (dv * dv + de * de).sqrt(),
        speed_ratio: de / dv,
        average_degree: 2.0 * last.e_net as f64 / v,
        sparse: (last.e_net as f64) <= v * v.ln(),
    })
}

/// `t,v_net,e_net` rows with a header.
pub fn history_csv(history: &[Sample]) -> String {
    let mut out = String::from("t,v_net,e_net\n");
    for s in history {
        out.push_str(&format!("{},{},{}\n", s.t, s.v_net, s.e_net));
    }
    out
}

/// `k,value` rows with a header.
pub fn table_csv(table: &BTreeMap<usize, f64>) -> String {
    let mut out = String::from("k,value\n");
    for (k, v) in table {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}

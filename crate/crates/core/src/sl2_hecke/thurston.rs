use std::collections::VecDeque;
use std::str::FromStr;

use serde::Serialize;

use super::{generators_for, HeckeError, RealCycNumber, SL2Matrix};

/// Intersection matrix `N` of two multicurves `A = {α_i}`, `B = {β_j}` with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MulticurveData {
    /// `n × m`, `N_{ij} = i(α_i, β_j)`.
    pub n: Vec<Vec<u32>>,
    pub p: Vec<u32>,
    pub q: Vec<u32>,
}

impl MulticurveData {
    pub fn new(n: Vec<Vec<u32>>, p: Vec<u32>, q: Vec<u32>) -> Result<Self, HeckeError> {
        let rows = n.len();
        let cols = n.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || n.iter().any(|r| r.len() != cols) {
            return Err(HeckeError::BadData("N must be a nonempty rectangle".into()));
        }
        if p.len() != rows || q.len() != cols {
            return Err(HeckeError::BadData(format!(
                "multiplicities have lengths {}, {} for a {rows}x{cols} matrix",
                p.len(),
                q.len()
            )));
        }
        if p.iter().chain(&q).any(|&x| x == 0) {
            return Err(HeckeError::BadData("multiplicities must be positive".into()));
        }
        Ok(Self { n, p, q })
    }

    /// The path `α_1 – β_1 – α_2 – β_2 – …` on `k` vertices with unit multiplicities.
    pub fn type_a_path(k: usize) -> Self {
        assert!(k >= 2, "a path needs two curves");
        let (rows, cols) = (k.div_ceil(2), k / 2);
        let n = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| u32::from((2 * i).abs_diff(2 * j + 1) == 1))
                    .collect()
            })
            .collect();
        Self {
            n,
            p: vec![1; rows],
            q: vec![1; cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.n.len()
    }

    pub fn cols(&self) -> usize {
        self.n[0].len()
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        let (r, c) = (self.rows(), self.cols());
        if v < r {
            (0..c).filter(|&j| self.n[v][j] > 0).map(|j| r + j).collect()
        } else {
            (0..r).filter(|&i| self.n[i][v - r] > 0).collect()
        }
    }

    pub fn is_connected(&self) -> bool {
        let total = self.rows() + self.cols();
        let mut seen = vec![false; total];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The vertex order along the path when the graph is a type-A path with unit data.
    fn type_a_order(&self) -> Option<Vec<usize>> {
        let unit = self.p.iter().chain(&self.q).all(|&x| x == 1)
            && self.n.iter().flatten().all(|&x| x <= 1);
        let total = self.rows() + self.cols();
        let edges: usize = self.n.iter().flatten().map(|&x| x as usize).sum();
        if !unit || edges + 1 != total || !self.is_connected() {
            return None;
        }
        let degree: Vec<usize> = (0..total).map(|v| self.neighbors(v).len()).collect();
        if degree.iter().any(|&d| d > 2) {
            return None;
        }
        let start = (0..total).find(|&v| degree[v] <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = self.neighbors(cur).into_iter().find(|&w| w != prev) {
            prev = cur;
            cur = next;
            order.push(cur);
        }
        Some(order)
    }
}

impl FromStr for MulticurveData {
    type Err = HeckeError;

    /// `n m`, then `n` rows of `m` integers, then the `p` line and the `q` line.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let mut ints = |what: &str| -> Result<Vec<u32>, HeckeError> {
            let line = lines
                .next()
                .ok_or_else(|| HeckeError::BadData(format!("missing {what}")))?;
            line.split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| HeckeError::BadData(format!("bad integer '{t}' in {what}")))
                })
                .collect()
        };
        let dims = ints("dimensions")?;
        let [rows, cols] = dims[..] else {
            return Err(HeckeError::BadData("first line must be 'n m'".into()));
        };
        let mut n = Vec::with_capacity(rows as usize);
        for i in 0..rows {
            let row = ints(&format!("row {}", i + 1))?;
            if row.len() != cols as usize {
                return Err(HeckeError::BadData(format!("row {} has {} entries", i + 1, row.len())));
            }
            n.push(row);
        }
        let p = ints("p multiplicities")?;
        let q = ints("q multiplicities")?;
        Self::new(n, p, q)
    }
}

/// Thurston's parabolic pair for a binding multicurve.
#[derive(Clone, Debug, Serialize)]
pub struct ThurstonRep {
    /// Perron–Frobenius eigenvalue of `[[0, PN], [QNᵀ, 0]]`.
    pub mu: f64,
    /// `μ = 2cos(π/(n+m+1))` exactly, for type-A paths with unit multiplicities.
    pub mu_exact: Option<RealCycNumber>,
    pub v: Vec<f64>,
    pub v_prime: Vec<f64>,
    /// `max(‖PNv′ − μv‖, ‖QNᵀv − μv′‖)` with `‖(v, v′)‖ = 1`.
    pub residual: f64,
    pub t_a: [[f64; 2]; 2],
    pub t_b: [[f64; 2]; 2],
    /// `T_A`, `T_B` with exact entries, when `μ` is exact.
    pub exact: Option<(SL2Matrix, SL2Matrix)>,
}

fn pn(d: &MulticurveData, vp: &[f64]) -> Vec<f64> {
    (0..d.rows())
        .map(|i| d.p[i] as f64 * (0..d.cols()).map(|j| d.n[i][j] as f64 * vp[j]).sum::<f64>())
        .collect()
}

fn qnt(d: &MulticurveData, v: &[f64]) -> Vec<f64> {
    (0..d.cols())
        .map(|j| d.q[j] as f64 * (0..d.rows()).map(|i| d.n[i][j] as f64 * v[i]).sum::<f64>())
        .collect()
}

fn residual(d: &MulticurveData, mu: f64, v: &[f64], vp: &[f64]) -> f64 {
    let dist = |x: Vec<f64>, y: &[f64]| -> f64 {
        x.iter().zip(y).map(|(a, b)| (a - mu * b).powi(2)).sum::<f64>().sqrt()
    };
    dist(pn(d, vp), v).max(dist(qnt(d, v), vp))
}

fn normalize(v: &mut [f64], vp: &mut [f64]) {
    let s = v.iter().chain(vp.iter()).map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().chain(vp.iter_mut()).for_each(|x| *x /= s);
}

/// Power iteration on `PN·QNᵀ`, which is primitive on the `A` side when the graph is connected.
fn power_iteration(d: &MulticurveData) -> (f64, Vec<f64>, Vec<f64>) {
    let mut v = vec![1.0; d.rows()];
    let mut mu = 0.0;
    let mut vp = vec![0.0; d.cols()];
    for _ in 0..200_000 {
        let w = pn(d, &qnt(d, &v));
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        let next: Vec<f64> = w.iter().map(|x| x / norm).collect();
        let delta = next.iter().zip(&v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        v = next;
        // Rayleigh quotient for μ² = vᵀ(PNQNᵀ)v / vᵀv.
        let mu2: f64 = pn(d, &qnt(d, &v)).iter().zip(&v).map(|(a, b)| a * b).sum();
        mu = mu2.sqrt();
        vp = qnt(d, &v).iter().map(|x| x / mu).collect();
        if delta < 1e-15 {
            break;
        }
    }
    normalize(&mut v, &mut vp);
    (mu, v, vp)
}

/// `μ` and the parabolic pair `[[1, μ], [0, 1]]`, `[[1, 0], [−μ, 1]]`.
pub fn thurston_rep(data: &MulticurveData) -> Result<ThurstonRep, HeckeError> {
    if !data.is_connected() {
        return Err(HeckeError::NotPrimitive);
    }
    let (mu, mut v, mut vp, mu_exact) = match data.type_a_order() {
        Some(order) => {
            let h = order.len() + 1;
            let mu = 2.0 * (std::f64::consts::PI / h as f64).cos();
            let (mut v, mut vp) = (vec![0.0; data.rows()], vec![0.0; data.cols()]);
            for (k, &vertex) in order.iter().enumerate() {
                let s = (std::f64::consts::PI * (k + 1) as f64 / h as f64).sin();
                if vertex < data.rows() {
                    v[vertex] = s;
                } else {
                    vp[vertex - data.rows()] = s;
                }
            }
            (mu, v, vp, Some(RealCycNumber::two_cos_pi_over(h as u32)))
        }
        None => {
            let (mu, v, vp) = power_iteration(data);
            (mu, v, vp, None)
        }
    };
    normalize(&mut v, &mut vp);
    let res = residual(data, mu, &v, &vp);
    let exact = mu_exact.as_ref().map(|m| {
        let (a, b, _) = generators_for(m);
        (a, b)
    });
    Ok(ThurstonRep {
        mu,
        mu_exact,
        residual: res,
        v,
        v_prime: vp,
        t_a: [[1.0, mu], [0.0, 1.0]],
        t_b: [[1.0, 0.0], [-mu, 1.0]],
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shapes() {
        let d = MulticurveData::type_a_path(4);
        assert_eq!(d.n, vec![vec![1, 0], vec![1, 1]]);
        let d = MulticurveData::type_a_path(2);
        assert_eq!(d.n, vec![vec![1]]);
    }

    #[test]
    fn type_a_is_exact() {
        let r = thurston_rep(&MulticurveData::type_a_path(2)).unwrap();
        assert_eq!(r.mu_exact.unwrap(), RealCycNumber::from_i64(6, 1));
        for g in 1..=7 {
            let k = 2 * g;
            let r = thurston_rep(&MulticurveData::type_a_path(k)).unwrap();
            assert_eq!(r.mu_exact.unwrap(), RealCycNumber::two_cos_pi_over(k as u32 + 1));
            assert!(r.residual < 1e-12);
        }
    }

    #[test]
    fn type_b_norm_from_doubled_end() {
        for k in 2..=7 {
            let mut d = MulticurveData::type_a_path(k);
            d.p[0] = 2;
            let r = thurston_rep(&d).unwrap();
            let want = 2.0 * (std::f64::consts::PI / (2 * k) as f64).cos();
            assert!((r.mu - want).abs() < 1e-10, "k = {k}: {} vs {want}", r.mu);
            assert!(r.residual <= 1e-10);
            assert!(r.mu_exact.is_none());
        }
    }

    #[test]
    fn disconnected_rejected() {
        let d = MulticurveData::new(vec![vec![1, 0], vec![0, 1]], vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(thurston_rep(&d).unwrap_err(), HeckeError::NotPrimitive);
    }

    #[test]
    fn parse_file_format() {
        let d: MulticurveData = "2 2\n1 0\n1 1\n1 1\n1 1\n".parse().unwrap();
        assert_eq!(d, MulticurveData::type_a_path(4));
        assert!("2 2\n1 0\n1 1\n1 1\n".parse::<MulticurveData>().is_err());
    }

    #[test]
    fn generic_residual() {
        let d = MulticurveData::new(vec![vec![2, 1, 0], vec![1, 3, 1]], vec![1, 2], vec![3, 1, 1])
            .unwrap();
        let r = thurston_rep(&d).unwrap();
        assert!(r.mu > 2.0);
        assert!(r.residual <= 1e-10, "{}", r.residual);
    }
}

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

use super::qexpr::{qint_poly, QExpr};
use super::{RecouplingError, TheoryParams};
use crate::exactnum::{CycNumber, LaurentFraction};

/// `[n]` as an element of ℚ(A).
pub fn qint(n: i64) -> LaurentFraction {
    QExpr::qint(n).to_fraction()
}

/// `[n]! = [1][2]⋯[n]`, `[0]! = 1`.
pub fn qfact(n: u32) -> LaurentFraction {
    QExpr::qfact_pow(n, 1).to_fraction()
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

type Memo<K> = RwLock<HashMap<K, CycNumber>>;

/// Environment variable bounding the number of entries per specialization cache.
pub const CACHE_SIZE_ENV: &str = "TQFT_HECKE_CACHE_SIZE";

fn default_cache_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(CACHE_SIZE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(usize::MAX)
    })
}

fn memo<K: Eq + Hash + Copy>(
    cache: &Memo<K>,
    limit: usize,
    key: K,
    f: impl FnOnce() -> Result<CycNumber, RecouplingError>,
) -> Result<CycNumber, RecouplingError> {
    if let Some(v) = cache.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = f()?;
    let mut w = cache.write().unwrap();
    if w.len() < limit {
        w.entry(key).or_insert_with(|| v.clone());
    }
    Ok(v)
}

/// Recoupling theory at fixed [`TheoryParams`].
///
/// Generic values come back as [`LaurentFraction`]s; the `*_at` methods give
/// the specialization at `A = ζ_N^k`, memoized per instance. Caches are
/// filled idempotently, so sharing one instance across threads is fine.
/// Each cache holds at most [`CACHE_SIZE_ENV`] entries (unbounded by default).
pub struct Recoupling {
    params: TheoryParams,
    cache_limit: usize,
    qvals: RwLock<HashMap<u32, (CycNumber, Option<CycNumber>)>>,
    theta_cache: Memo<(u32, u32, u32)>,
    tet_cache: Memo<[u32; 6]>,
    coupling_cache: Memo<(u32, u32, u32, bool)>,
}

impl Recoupling {
    pub fn new(params: TheoryParams) -> Self {
        Self::with_cache_limit(params, default_cache_limit())
    }

    pub fn with_cache_limit(params: TheoryParams, cache_limit: usize) -> Self {
        Self {
            params,
            cache_limit,
            qvals: Default::default(),
            theta_cache: Default::default(),
            tet_cache: Default::default(),
            coupling_cache: Default::default(),
        }
    }

    pub fn params(&self) -> &TheoryParams {
        &self.params
    }

    pub fn order(&self) -> u32 {
        self.params.order()
    }

    fn check_color(&self, c: u32) -> Result<(), RecouplingError> {
        if self.params.is_color(c) {
            Ok(())
        } else {
            Err(RecouplingError::NotColor(c))
        }
    }

    fn check_triples(&self, triples: &[(u32, u32, u32)]) -> Result<(), RecouplingError> {
        for &(a, b, c) in triples {
            if !self.params.is_admissible(a, b, c) {
                return Err(RecouplingError::NotAdmissible(vec![a, b, c]));
            }
        }
        Ok(())
    }

    // ---- factored expressions ----

    pub fn delta_expr(&self, i: u32) -> QExpr {
        QExpr::qint(i as i64 + 1).scale(sign(i))
    }

    pub fn twist_expr(&self, i: u32) -> QExpr {
        QExpr::monomial(sign(i), self.params.twist().exponent(i))
    }

    /// Θ(a,b,c) without admissibility checks beyond the parity/triangle shape.
    pub fn theta_expr(&self, a: u32, b: u32, c: u32) -> QExpr {
        let x = (a + b - c) / 2;
        let y = (b + c - a) / 2;
        let z = (c + a - b) / 2;
        QExpr::monomial(sign(x + y + z), 0)
            .mul(&QExpr::qfact_pow(x + y + z + 1, 1))
            .mul(&QExpr::qfact_pow(x, 1))
            .mul(&QExpr::qfact_pow(y, 1))
            .mul(&QExpr::qfact_pow(z, 1))
            .mul(&QExpr::qfact_pow(x + y, -1))
            .mul(&QExpr::qfact_pow(y + z, -1))
            .mul(&QExpr::qfact_pow(z + x, -1))
    }

    /// Tetrahedral net with vertex triples (A,B,E), (B,C,F), (C,D,E), (A,D,F).
    pub fn tet_expr(&self, ea: u32, eb: u32, ee: u32, ec: u32, ed: u32, ef: u32) -> QExpr {
        let a = [
            (ea + eb + ee) / 2,
            (eb + ec + ef) / 2,
            (ec + ed + ee) / 2,
            (ea + ed + ef) / 2,
        ];
        let b = [
            (ea + eb + ec + ed) / 2,
            (ea + ec + ee + ef) / 2,
            (eb + ed + ee + ef) / 2,
        ];
        let mut pre = QExpr::one();
        for &ai in &a {
            for &bj in &b {
                pre = pre.mul(&QExpr::qfact_pow(bj - ai, 1));
            }
        }
        for e in [ea, eb, ec, ed, ee, ef] {
            pre = pre.mul(&QExpr::qfact_pow(e, -1));
        }
        let lo = *a.iter().max().unwrap();
        let hi = *b.iter().min().unwrap();
        let mut sum = QExpr::zero();
        for s in lo..=hi {
            let mut t = QExpr::monomial(sign(s), 0).mul(&QExpr::qfact_pow(s + 1, 1));
            for &ai in &a {
                t = t.mul(&QExpr::qfact_pow(s - ai, -1));
            }
            for &bj in &b {
                t = t.mul(&QExpr::qfact_pow(bj - s, -1));
            }
            sum = sum.add(&t);
        }
        pre.mul(&sum)
    }

    /// Kauffman–Lins `{a b i; c d j}` = Tet(a,d,i,c,b,j)·Δ_i / (Θ(a,d,i)Θ(b,c,i)).
    pub fn sixj_expr(&self, a: u32, b: u32, i: u32, c: u32, d: u32, j: u32) -> QExpr {
        self.tet_expr(a, d, i, c, b, j)
            .mul(&self.delta_expr(i))
            .mul(&self.theta_expr(a, d, i).inv_monomial().unwrap())
            .mul(&self.theta_expr(b, c, i).inv_monomial().unwrap())
    }

    fn sixj_admissible(&self, a: u32, b: u32, i: u32, c: u32, d: u32, j: u32) -> bool {
        let p = &self.params;
        p.is_admissible(a, d, i)
            && p.is_admissible(b, c, i)
            && p.is_admissible(a, b, j)
            && p.is_admissible(c, d, j)
    }

    /// `a^{i,j}_l = Σ_k Δ_k θ_iθ_jθ_k⁻¹ Θ(i,j,k)⁻¹ {i j l; j i k}`; inadmissible terms vanish.
    pub fn coupling_expr(&self, i: u32, j: u32, l: u32, bar: bool) -> QExpr {
        let tw = |c: u32| {
            let t = self.twist_expr(c);
            if bar {
                t.bar()
            } else {
                t
            }
        };
        let mut total = QExpr::zero();
        for k in self.params.colors() {
            if !self.sixj_admissible(i, j, l, j, i, k) {
                continue;
            }
            let term = self
                .delta_expr(k)
                .mul(&tw(i))
                .mul(&tw(j))
                .mul(&tw(k).inv_monomial().unwrap())
                .mul(&self.theta_expr(i, j, k).inv_monomial().unwrap())
                .mul(&self.sixj_expr(i, j, l, j, i, k));
            total = total.add(&term);
        }
        total
    }

    // ---- generic values ----

    pub fn delta(&self, i: u32) -> Result<LaurentFraction, RecouplingError> {
        self.check_color(i)?;
        Ok(self.delta_expr(i).to_fraction())
    }

    pub fn twist(&self, i: u32) -> Result<LaurentFraction, RecouplingError> {
        self.check_color(i)?;
        Ok(self.twist_expr(i).to_fraction())
    }

    pub fn theta_net(&self, a: u32, b: u32, c: u32) -> Result<LaurentFraction, RecouplingError> {
        self.check_triples(&[(a, b, c)])?;
        Ok(self.theta_expr(a, b, c).to_fraction())
    }

    pub fn tet(
        &self,
        a: u32,
        b: u32,
        e: u32,
        c: u32,
        d: u32,
        f: u32,
    ) -> Result<LaurentFraction, RecouplingError> {
        self.check_triples(&[(a, b, e), (b, c, f), (c, d, e), (a, d, f)])?;
        Ok(self.tet_expr(a, b, e, c, d, f).to_fraction())
    }

    pub fn sixj(
        &self,
        a: u32,
        b: u32,
        i: u32,
        c: u32,
        d: u32,
        j: u32,
    ) -> Result<LaurentFraction, RecouplingError> {
        self.check_triples(&[(a, d, i), (b, c, i), (a, b, j), (c, d, j)])?;
        Ok(self.sixj_expr(a, b, i, c, d, j).to_fraction())
    }

    pub fn coupling_a(&self, i: u32, j: u32, l: u32) -> LaurentFraction {
        self.coupling_expr(i, j, l, false).to_fraction()
    }

    pub fn coupling_a_bar(&self, i: u32, j: u32, l: u32) -> LaurentFraction {
        self.coupling_expr(i, j, l, true).to_fraction()
    }

    // ---- specialized values ----

    /// `([n], [n]⁻¹)` at the root; the inverse is `None` where `[n]` vanishes.
    fn qval(&self, n: u32) -> (CycNumber, Option<CycNumber>) {
        if let Some(v) = self.qvals.read().unwrap().get(&n) {
            return v.clone();
        }
        let v = qint_poly(n).eval_root(self.order(), self.params.root());
        let inv = v.inv().ok();
        let entry = (v, inv);
        self.qvals
            .write()
            .unwrap()
            .entry(n)
            .or_insert_with(|| entry.clone());
        entry
    }

    /// Specializes any factored expression at this root.
    pub fn eval(&self, e: &QExpr) -> Result<CycNumber, RecouplingError> {
        Ok(e.specialize_with(self.order(), self.params.root(), &|n| self.qval(n))?)
    }

    pub fn qint_at(&self, n: i64) -> CycNumber {
        let (v, _) = self.qval(n.unsigned_abs() as u32);
        if n < 0 {
            -v
        } else {
            v
        }
    }

    pub fn delta_at(&self, i: u32) -> CycNumber {
        self.qint_at(i as i64 + 1).scale_i64(sign(i))
    }

    pub fn twist_at(&self, i: u32) -> CycNumber {
        let e = self.params.twist().exponent(i) * self.params.root();
        CycNumber::zeta_pow(self.order(), e).scale_i64(sign(i))
    }

    pub fn theta_at(&self, a: u32, b: u32, c: u32) -> Result<CycNumber, RecouplingError> {
        self.check_triples(&[(a, b, c)])?;
        let mut key = [a, b, c];
        key.sort_unstable();
        memo(&self.theta_cache, self.cache_limit, (key[0], key[1], key[2]), || {
            self.eval(&self.theta_expr(a, b, c))
        })
    }

    pub fn tet_at(
        &self,
        a: u32,
        b: u32,
        e: u32,
        c: u32,
        d: u32,
        f: u32,
    ) -> Result<CycNumber, RecouplingError> {
        self.check_triples(&[(a, b, e), (b, c, f), (c, d, e), (a, d, f)])?;
        memo(&self.tet_cache, self.cache_limit, [a, b, e, c, d, f], || {
            self.eval(&self.tet_expr(a, b, e, c, d, f))
        })
    }

    /// Tet at the root, or zero when a vertex is inadmissible.
    pub fn tet_or_zero(&self, a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> CycNumber {
        self.tet_at(a, b, e, c, d, f)
            .unwrap_or_else(|_| CycNumber::zero(self.order()))
    }

    pub fn sixj_at(
        &self,
        a: u32,
        b: u32,
        i: u32,
        c: u32,
        d: u32,
        j: u32,
    ) -> Result<CycNumber, RecouplingError> {
        self.check_triples(&[(a, d, i), (b, c, i), (a, b, j), (c, d, j)])?;
        let t = self.tet_at(a, d, i, c, b, j)?;
        let den = &self.theta_at(a, d, i)? * &self.theta_at(b, c, i)?;
        Ok(&(&t * &self.delta_at(i)) / &den)
    }

    pub fn coupling_at(&self, i: u32, j: u32, l: u32, bar: bool) -> Result<CycNumber, RecouplingError> {
        memo(&self.coupling_cache, self.cache_limit, (i, j, l, bar), || {
            self.eval(&self.coupling_expr(i, j, l, bar))
        })
    }
}

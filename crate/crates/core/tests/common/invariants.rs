use tqft_hecke::exactnum::{specialize, CycNumber, LaurentFraction};
use tqft_hecke::recoupling::{GlobalConstants, Recoupling, TheoryParams};
use tqft_hecke::rep_genus2::{jtilde, t_genus2, verify_genus2_relations};

pub fn units(n: u32) -> Vec<i64> {
    (1..n as i64).filter(|&k| num_integer::gcd(k, n as i64) == 1).collect()
}

/// `Σ_j {a b i / c d j}{a d j / c b k} = δ_ik` for every admissible `k`.
pub fn sixj_orthogonal(th: &Recoupling, [a, b, c, d, i]: [u32; 5]) -> Result<(), String> {
    let p = th.params();
    for k in p.colors() {
        if !(p.is_admissible(a, d, k) && p.is_admissible(b, c, k)) {
            continue;
        }
        let sum: CycNumber = p
            .colors()
            .into_iter()
            .filter_map(|j| Some(&th.sixj_at(a, b, i, c, d, j).ok()? * &th.sixj_at(a, d, j, c, b, k).ok()?))
            .sum();
        if sum != CycNumber::from_i64(p.order(), i64::from(i == k)) {
            return Err(format!("row ({a} {b} {i} / {c} {d} .), k = {k}"));
        }
    }
    Ok(())
}

/// Relabelings of `Tet(a,b,e,c,d,f)` that keep its four vertex triples.
pub fn tet_symmetric(th: &Recoupling, [a, b, e, c, d, f]: [u32; 6]) -> Result<(), String> {
    let Ok(t) = th.tet_at(a, b, e, c, d, f) else { return Ok(()) };
    for (i, cols) in [
        [c, d, e, a, b, f],
        [b, a, e, d, c, f],
        [a, d, f, c, b, e],
        [b, c, f, d, a, e],
        [e, b, a, f, d, c],
    ]
    .into_iter()
    .enumerate()
    {
        let [a2, b2, e2, c2, d2, f2] = cols;
        if th.tet_at(a2, b2, e2, c2, d2, f2).ok().as_ref() != Some(&t) {
            return Err(format!("Tet{:?}, relabeling {i}", [a, b, e, c, d, f]));
        }
    }
    Ok(())
}

/// `Θ(a,a,0) = Δ_a`, and `Θ(a,b,0)` is inadmissible for `a ≠ b`.
pub fn theta_degenerations(th: &Recoupling) -> Result<(), String> {
    let cols = th.params().colors();
    for &a in &cols {
        if th.theta_at(a, a, 0).ok() != Some(th.delta_at(a)) {
            return Err(format!("Theta({a},{a},0)"));
        }
        if let Some(b) = cols.iter().find(|&&b| b != a && th.theta_at(a, b, 0).is_ok()) {
            return Err(format!("Theta({a},{b},0) admitted"));
        }
    }
    Ok(())
}

pub fn p_plus_p_minus_is_d2(th: &Recoupling) -> bool {
    let c = GlobalConstants::compute(th);
    &c.p_plus * &c.p_minus == c.d2
}

/// Matrices at root `k` are the Galois images of those at root 1, and the
/// field-independent relations hold there too.
pub fn galois_equivariant(level: u32) -> Result<(), String> {
    let n = TheoryParams::unitary(level).map_err(|e| e.to_string())?.order();
    let base = TheoryParams::with_root(level, 1).map_err(|e| e.to_string())?;
    let j1 = jtilde(base).map_err(|e| e.to_string())?;
    let t1 = t_genus2(base);
    for k in units(n) {
        let p = TheoryParams::with_root(level, k).map_err(|e| e.to_string())?;
        if jtilde(p).map_err(|e| e.to_string())? != j1.galois(k) || t_genus2(p) != t1.galois(k) {
            return Err(format!("r = {level}, k = {k}"));
        }
        let rep = verify_genus2_relations(p).map_err(|e| e.to_string())?;
        for name in ["J^2 = I", "(TJ)^5 = (P+/P-)^2 I", "J symmetric"] {
            if !rep.iter().any(|x| x.relation == name && x.pass) {
                return Err(format!("r = {level}, k = {k}: {name}"));
            }
        }
    }
    Ok(())
}

/// `f ↦ f(A⁻¹)` is an involutive ring map and specializes to complex conjugation.
pub fn bar_involution(f: &LaurentFraction, g: &LaurentFraction, n: u32, k: i64) -> Result<(), String> {
    if f.bar().bar() != *f {
        return Err("bar bar f != f".into());
    }
    if f.mul(g).bar() != f.bar().mul(&g.bar()) || f.add(g).bar() != f.bar().add(&g.bar()) {
        return Err("bar is not a ring map".into());
    }
    if let Ok(x) = specialize(f, n, k) {
        if specialize(&f.bar(), n, k).ok() != Some(x.galois(-1)) {
            return Err(format!("bar does not specialize to conjugation at zeta_{n}^{k}"));
        }
    }
    Ok(())
}

pub fn json_round_trip(x: &CycNumber) -> bool {
    let s = serde_json::to_string(x).expect("serializes");
    serde_json::from_str::<CycNumber>(&s).is_ok_and(|y| y == *x && serde_json::to_string(&y).unwrap() == s)
}

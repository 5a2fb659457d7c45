use serde_json::{json, Value};

use super::{Recoupling, RecouplingError};

/// Δ, θ, Θ, Tet and 6j at the root, as JSON tables keyed by their colors.
///
/// Tet and 6j range over every admissible labeling, which grows like `r⁶`;
/// callers pick the level.
pub fn coefficient_tables(th: &Recoupling) -> Result<Value, RecouplingError> {
    let p = th.params();
    let colors = p.colors();
    let delta: Vec<Value> = colors
        .iter()
        .map(|&i| json!({"i": i, "value": th.delta_at(i)}))
        .collect();
    let twist: Vec<Value> = colors
        .iter()
        .map(|&i| json!({"i": i, "value": th.twist_at(i)}))
        .collect();
    let mut theta = Vec::new();
    for &a in &colors {
        for &b in &colors {
            for &c in &colors {
                if a <= b && b <= c && p.is_admissible(a, b, c) {
                    theta.push(json!({"colors": [a, b, c], "value": th.theta_at(a, b, c)?}));
                }
            }
        }
    }
    let mut tet = Vec::new();
    let mut sixj = Vec::new();
    let n = colors.len();
    for idx in 0..n.pow(6) {
        let mut rest = idx;
        let mut lab = [0u32; 6];
        for slot in lab.iter_mut().rev() {
            *slot = colors[rest % n];
            rest /= n;
        }
        let [a, b, e, c, d, f] = lab;
        if p.is_admissible(a, b, e)
            && p.is_admissible(b, c, f)
            && p.is_admissible(c, d, e)
            && p.is_admissible(a, d, f)
        {
            tet.push(json!({"colors": lab, "value": th.tet_at(a, b, e, c, d, f)?}));
        }
        // {a b e; c d f}
        if p.is_admissible(a, d, e)
            && p.is_admissible(b, c, e)
            && p.is_admissible(a, b, f)
            && p.is_admissible(c, d, f)
        {
            sixj.push(json!({"colors": lab, "value": th.sixj_at(a, b, e, c, d, f)?}));
        }
    }
    Ok(json!({
        "level": p.level(),
        "order": p.order(),
        "root": p.root(),
        "twist_convention": p.twist().label(),
        "delta": delta,
        "twist": twist,
        "theta": theta,
        "tet": tet,
        "sixj": sixj,
    }))
}

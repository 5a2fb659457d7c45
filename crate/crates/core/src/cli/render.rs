use num_complex::Complex64;
use serde_json::{json, Value};

use super::Format;
use crate::exactnum::ExactMatrix;
use crate::rep_genus2::{Genus2Rep, InfiniteImageReport, JUnitary, TraceRow};

pub(super) struct Doc {
    pub json: Value,
    pub pretty: String,
    pub csv: String,
}

impl Doc {
    pub fn render(self, f: Format) -> String {
        match f {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json"),
            Format::Csv => self.csv.trim_end().to_string(),
            Format::Pretty => self.pretty.trim_end().to_string(),
        }
    }
}

/// `re` or `re±imi`, rounded to `precision` digits.
pub(super) fn complex_str(z: Complex64, precision: u32) -> String {
    let p = precision as usize;
    let tiny = 0.5 * 10f64.powi(-(precision as i32));
    let re = if z.re.abs() < tiny { 0.0 } else { z.re };
    if z.im.abs() < tiny {
        format!("{re:.p$}")
    } else {
        format!("{re:.p$}{:+.p$}i", z.im)
    }
}

fn grid_pretty(rows: &[Vec<Complex64>], precision: u32) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|&z| complex_str(z, precision)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            format!("  {}\n", line.join(" "))
        })
        .collect()
}

fn grid_csv(rows: &[Vec<Complex64>], precision: u32) -> String {
    rows.iter()
        .map(|r| {
            let line: Vec<String> = r.iter().map(|&z| complex_str(z, precision)).collect();
            format!("{}\n", line.join(","))
        })
        .collect()
}

pub(super) fn matrix_pretty(m: &ExactMatrix, precision: u32) -> String {
    grid_pretty(&m.to_complex(), precision)
}

pub(super) fn matrix_csv(m: &ExactMatrix, precision: u32) -> String {
    grid_csv(&m.to_complex(), precision)
}

fn approx_pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub(super) fn coefficients_doc(tables: Value, precision: u32) -> Doc {
    let mut pretty = format!(
        "level {}  A = zeta_{}^{}\n",
        tables["level"], tables["order"], tables["root"]
    );
    let mut csv = String::from("kind,colors,re,im\n");
    for kind in ["delta", "twist", "theta", "tet", "sixj"] {
        let rows = tables[kind].as_array().cloned().unwrap_or_default();
        pretty.push_str(&format!("{kind} ({} entries)\n", rows.len()));
        for row in rows {
            let colors = row.get("colors").or_else(|| row.get("i")).cloned().unwrap_or(Value::Null);
            let approx = &row["value"]["approx"];
            let z = Complex64::new(approx[0].as_f64().unwrap_or(f64::NAN), approx[1].as_f64().unwrap_or(f64::NAN));
            let label = colors.to_string().replace(',', " ");
            pretty.push_str(&format!("  {label:<20} {}\n", complex_str(z, precision)));
            csv.push_str(&format!("{kind},\"{label}\",{},{}\n", z.re, z.im));
        }
    }
    Doc { json: tables, pretty, csv }
}

pub(super) fn genus2_doc(rep: &Genus2Rep, raw: bool, precision: u32) -> Doc {
    let p = rep.params;
    let mut pretty = format!(
        "level {}  A = zeta_{}^{}  dim {}\nbasis (i,j,k): {}\n",
        p.level(),
        p.order(),
        p.root(),
        rep.dim(),
        rep.basis
            .iter()
            .map(|(i, j, k)| format!("({i},{j},{k})"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let mut json = json!({
        "level": p.level(),
        "order": p.order(),
        "root": p.root(),
        "basis": rep.basis.iter().map(|(i, j, k)| [i, j, k]).collect::<Vec<_>>(),
        "t": rep.tdiag,
        "t_approx": rep.twist().iter().map(|x| approx_pair(x.embed())).collect::<Vec<_>>(),
    });
    let (grid, label) = match (&rep.junitary, raw) {
        (JUnitary::Normalized(nj), false) => {
            json["j"] = serde_json::to_value(nj).expect("json");
            (nj.to_complex(), "J (unitary)".to_string())
        }
        (JUnitary::NonNormalized { reason, .. }, false) => {
            json["j_raw"] = serde_json::to_value(&rep.raw).expect("json");
            json["note"] = Value::String(reason.to_string());
            (rep.raw.to_complex(), format!("J (non-normalized; {reason})"))
        }
        (_, true) => {
            json["j_raw"] = serde_json::to_value(&rep.raw).expect("json");
            (rep.raw.to_complex(), "J (non-normalized)".to_string())
        }
    };
    json["j_approx"] = Value::Array(
        grid.iter()
            .map(|r| Value::Array(r.iter().map(|&z| approx_pair(z)).collect()))
            .collect(),
    );
    pretty.push_str(&format!("{label} =\n{}", grid_pretty(&grid, precision)));
    let t: Vec<String> = rep.twist().iter().map(|x| complex_str(x.embed(), precision)).collect();
    pretty.push_str(&format!("T = diag({})\n", t.join(", ")));
    Doc { json, pretty, csv: grid_csv(&grid, precision) }
}

pub(super) fn trace_doc(rows: &[TraceRow], precision: u32) -> Doc {
    let p = precision as usize;
    let mut pretty = format!("{:>4} {:>6} {:>14} {:>6}   A = zeta_N^k\n", "r", "d_r(2)", "tr", "tr>d");
    let mut csv = String::from("level,dim,order,root,re,im,exceeds_dim\n");
    for r in rows {
        pretty.push_str(&format!(
            "{:>4} {:>6} {:>14.p$} {:>6}   N = {}, k = {}\n",
            r.level, r.dim, r.value.re, r.exceeds_dim, r.order, r.root
        ));
        csv.push_str(&format!(
            "{},{},{},{},{:.p$},{:.p$},{}\n",
            r.level, r.dim, r.order, r.root, r.value.re, r.value.im, r.exceeds_dim
        ));
    }
    pretty.push_str("\nGalois conjugates (k: value)\n");
    for r in rows {
        let c: Vec<String> = r
            .conjugates
            .iter()
            .map(|(k, z)| format!("{k}: {}", complex_str(*z, 2.min(precision))))
            .collect();
        pretty.push_str(&format!("  r = {}: {}\n", r.level, c.join(", ")));
    }
    Doc {
        json: serde_json::to_value(rows).expect("json"),
        pretty,
        csv,
    }
}

pub(super) fn certificate_doc(rep: &InfiniteImageReport, precision: u32) -> Doc {
    let p = rep.params;
    let mut pretty = format!(
        "level {}  A = zeta_{}^{}\nverdict: {:?}\n",
        p.level(),
        p.order(),
        p.root(),
        rep.verdict
    );
    let t = &rep.trace;
    pretty.push_str(&format!(
        "trace certificate: tr = {}, max over conjugates |tr| = {:.p$} at k = {}, d = {} -> {}\n",
        complex_str(t.trace, precision),
        t.best_abs,
        t.best_root,
        t.dim,
        if t.fires { "fires" } else { "does not fire" },
        p = precision as usize
    ));
    match &rep.minpoly {
        Some(m) if m.fires => pretty.push_str(&format!(
            "minimal polynomial {} non-cyclotomic (divides the rational characteristic polynomial: {}; shares degree {} with it over Q(zeta_N))\n",
            m.factor, m.divides, m.shared_degree
        )),
        Some(_) => pretty.push_str("minimal polynomial route: every eigenvalue is a root of unity\n"),
        None => pretty.push_str("minimal polynomial route: skipped (matrix too large)\n"),
    }
    let csv = format!(
        "level,verdict,trace_fires,minpoly_fires,factor\n{},{:?},{},{},\"{}\"\n",
        p.level(),
        rep.verdict,
        t.fires,
        rep.minpoly.as_ref().is_some_and(|m| m.fires),
        rep.minpoly.as_ref().map_or(String::new(), |m| m.factor.to_string())
    );
    Doc {
        json: serde_json::to_value(rep).expect("json"),
        pretty,
        csv,
    }
}

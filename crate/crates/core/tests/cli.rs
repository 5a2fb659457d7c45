use std::process::Command as Process;

use clap::Parser;
use serde_json::Value;

use tqft_hecke::cli::{run, Cli, RunConfig, EXIT_RUNTIME, EXIT_USAGE, EXIT_VERIFICATION};
use tqft_hecke::exactnum::{CycNumber, ExactMatrix};
use tqft_hecke::recoupling::TheoryParams;
use tqft_hecke::rep_genus2::{Genus2Rep, JUnitary, NormalizedJ};

fn config(args: &str) -> RunConfig {
    let argv = std::iter::once("tqft-hecke").chain(args.split_whitespace());
    Cli::try_parse_from(argv).expect("parses").into()
}

fn json(args: &str) -> Value {
    let out = run(&config(&format!("--format json {args}"))).expect("runs");
    serde_json::from_str(&out.document).expect("valid json")
}

fn exit_code(args: &[&str]) -> i32 {
    Process::new(env!("CARGO_BIN_EXE_tqft-hecke"))
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["dims", "--levels", "3,5"]), 0);
    assert_eq!(exit_code(&["verify", "--genus", "2", "--level", "3"]), 0);
    assert_eq!(exit_code(&["infinite-image", "--level", "3"]), 0);
    assert_eq!(exit_code(&["infinite-image", "--level", "2"]), EXIT_VERIFICATION);
    assert_eq!(exit_code(&["frobnicate"]), EXIT_USAGE);
    assert_eq!(exit_code(&["genus2-matrices", "--level", "3", "--raw", "--normalized"]), EXIT_USAGE);
    assert_eq!(exit_code(&["hecke-sl2", "--q", "4"]), EXIT_USAGE);
    assert_eq!(exit_code(&["hecke-sl2", "--q", "5", "--word", "A C"]), EXIT_USAGE);
    assert_eq!(exit_code(&["spin-dims", "--level", "3"]), EXIT_USAGE);
    assert_eq!(exit_code(&["verify", "--genus", "3", "--level", "3"]), EXIT_USAGE);
    assert_eq!(exit_code(&["thurston", "--graph", "/nonexistent/graph.txt"]), EXIT_RUNTIME);
}

#[test]
fn dims_json() {
    let v = json("dims --genus 2 --levels 3,5,7,9,11,13");
    let dims: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [5, 14, 30, 55, 91, 140]);
}

#[test]
fn genus2_json_round_trips_exactly() {
    let v = json("genus2-matrices --level 3");
    let rep = Genus2Rep::new(TheoryParams::unitary(3).unwrap()).unwrap();
    let t: ExactMatrix = serde_json::from_value(v["t"].clone()).unwrap();
    assert_eq!(t, rep.tdiag);
    let j: NormalizedJ = serde_json::from_value(v["j"].clone()).unwrap();
    let JUnitary::Normalized(want) = &rep.junitary else { panic!("r = 3 is unitary") };
    assert_eq!(&j, want);

    let raw = json("genus2-matrices --level 3 --raw");
    let m: ExactMatrix = serde_json::from_value(raw["j_raw"].clone()).unwrap();
    assert_eq!(m, rep.raw);
}

#[test]
fn cyc_number_json_is_bit_exact() {
    let x = &CycNumber::zeta_pow(20, 3).scale_i64(7) + &CycNumber::from_i64(20, 1_000_000_007);
    let s = serde_json::to_string(&x).unwrap();
    let y: CycNumber = serde_json::from_str(&s).unwrap();
    assert_eq!(x, y);
    assert_eq!(serde_json::to_string(&y).unwrap(), s);
}

#[test]
fn pretty_floats_match_the_embedding() {
    let rep = Genus2Rep::new(TheoryParams::unitary(3).unwrap()).unwrap();
    let want = rep.raw.to_complex();
    for d in [3u32, 6, 9] {
        let out = run(&config(&format!("--precision {d} --format csv genus2-matrices --level 3 --raw"))).unwrap();
        for (row, line) in want.iter().zip(out.document.lines()) {
            for (z, cell) in row.iter().zip(line.split(',')) {
                let got: f64 = cell.parse().unwrap();
                assert!((got - z.re).abs() <= 10f64.powi(-(d as i32)), "{cell} vs {z} at {d} digits");
            }
        }
    }
}

#[test]
fn verification_outcome_is_reported() {
    let ok = run(&config("verify --genus 1 --level 5")).unwrap();
    assert!(ok.passed && ok.document.contains("PASS"));
    let inconclusive = run(&config("infinite-image --level 2")).unwrap();
    assert_eq!(inconclusive.exit_code(), EXIT_VERIFICATION);
}

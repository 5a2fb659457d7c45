//! Certificates that the genus-2 image is infinite.

use tqft_hecke::recoupling::TheoryParams;
use tqft_hecke::rep_genus2::infinite_image_certificate;

fn main() {
    for r in [2, 3, 4, 5] {
        let rep = infinite_image_certificate(TheoryParams::unitary(r).unwrap()).unwrap();
        let poly = rep
            .minpoly
            .as_ref()
            .filter(|m| m.fires)
            .map_or("-".to_string(), |m| m.factor.to_string());
        println!(
            "r = {r}: {:?}; trace route {} (best |tr| {:.3} vs d = {}); non-cyclotomic factor {poly}",
            rep.verdict, rep.trace.fires, rep.trace.best_abs, rep.trace.dim
        );
    }
}

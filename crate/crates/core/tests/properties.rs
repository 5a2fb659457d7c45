mod common;

use common::invariants::{
    bar_involution, galois_equivariant, json_round_trip, p_plus_p_minus_is_d2, sixj_orthogonal,
    tet_symmetric, theta_degenerations, units,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use tqft_hecke::exactnum::{
    char_poly, galois_conj_inv, specialize, CycNumber, ExactError, ExactMatrix, LaurentFraction,
    LaurentPoly, Rational,
};
use tqft_hecke::recoupling::{verlinde_dim, Recoupling, TheoryParams};
use tqft_hecke::rep_genus1::{modular_data, verify_genus1_relations};
use tqft_hecke::rep_genus2::{
    coupling_a, coupling_a_bar, enumerate_basis, verify_genus2_relations, Genus2Rep,
};
use tqft_hecke::report::all_pass;
use tqft_hecke::sl2_hecke::{
    classify, eval_word, generators_for, hecke_generators, thurston_rep, MulticurveData,
    Generator, RealCycNumber, SL2Matrix, Word, WordItem,
};
use tqft_hecke::spin::{arf, orbit_counts, spin_dims, QuadraticForm};

fn root_strategy() -> impl Strategy<Value = (u32, i64)> {
    prop::sample::select(vec![5u32, 8, 10, 12, 16, 20])
        .prop_flat_map(|n| (Just(n), prop::sample::select(units(n))))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 1..5)).prop_map(|(low, c)| {
        LaurentPoly::new(low, c.into_iter().map(|x| Rational::from_integer(BigInt::from(x))).collect())
    })
}

fn fraction() -> impl Strategy<Value = LaurentFraction> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| LaurentFraction::new(n, d).ok())
}

fn cyc(order: u32) -> impl Strategy<Value = CycNumber> {
    prop::collection::vec((-5i64..=5, 1i64..=3), order as usize).prop_map(move |c| {
        let q: Vec<Rational> = c
            .into_iter()
            .map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        CycNumber::new(order, &q)
    })
}

fn small_matrix(order: u32, n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec((-3i64..=3, 0i64..order as i64), n * n).prop_map(move |v| {
        ExactMatrix::from_fn(order, n, n, |i, j| {
            let (c, m) = v[i * n + j];
            CycNumber::zeta_pow(order, m).scale_i64(c)
        })
    })
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn specialize_is_a_ring_homomorphism(f in fraction(), g in fraction(), (n, k) in root_strategy()) {
        let sf = specialize(&f, n, k);
        let sg = specialize(&g, n, k);
        prop_assume!(sf.is_ok() && sg.is_ok());
        let (sf, sg) = (sf.unwrap(), sg.unwrap());
        match specialize(&f.mul(&g), n, k) {
            Ok(p) => prop_assert_eq!(p, &sf * &sg),
            Err(e) => prop_assert_eq!(e, ExactError::PoleAtRoot),
        }
        if let Ok(s) = specialize(&f.add(&g), n, k) {
            prop_assert_eq!(s, &sf + &sg);
        }
    }

    #[test]
    fn specialize_agrees_with_float_evaluation(f in fraction(), (n, k) in root_strategy()) {
        let a = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
        let direct = f.eval_complex(a);
        prop_assume!(direct.is_finite() && f.den().eval_complex(a).norm() > 1e-6);
        let s = specialize(&f, n, k).unwrap();
        prop_assert!(close(s.embed(), direct, 1e-10), "{} vs {}", s.embed(), direct);
    }

    #[test]
    fn conj_inv_is_an_involutive_ring_map(x in cyc(12), y in cyc(12)) {
        prop_assert_eq!(galois_conj_inv(&galois_conj_inv(&x)), x.clone());
        prop_assert_eq!(galois_conj_inv(&(&x * &y)), &galois_conj_inv(&x) * &galois_conj_inv(&y));
        prop_assert_eq!(galois_conj_inv(&(&x + &y)), &galois_conj_inv(&x) + &galois_conj_inv(&y));
    }

    #[test]
    fn block_diagonal_char_poly_factors(a in small_matrix(8, 2), b in small_matrix(8, 3)) {
        let whole = char_poly(&a.direct_sum(&b).unwrap()).unwrap();
        let prod = char_poly(&a).unwrap().mul(&char_poly(&b).unwrap());
        prop_assert_eq!(whole, prod);
    }

    #[test]
    fn theta_is_symmetric((r, (a, b, c)) in admissible_triple()) {
        let th = Recoupling::new(TheoryParams::unitary(r).unwrap());
        let t = th.theta_net(a, b, c).unwrap();
        for (x, y, z) in [(b, a, c), (c, b, a), (a, c, b), (b, c, a), (c, a, b)] {
            prop_assert_eq!(&th.theta_net(x, y, z).unwrap(), &t);
        }
    }

    #[test]
    fn recoupling_values_are_self_conjugate(
        r in 2u32..=6,
        cols in prop::collection::vec(0u32..=6, 6),
    ) {
        let th = Recoupling::new(TheoryParams::unitary(r).unwrap());
        let [a, b, e, c, d, f] = cols[..] else { unreachable!() };
        if let Ok(x) = th.tet_at(a, b, e, c, d, f) {
            prop_assert_eq!(galois_conj_inv(&x), x);
        }
        if let Ok(x) = th.sixj_at(a, b, e, c, d, f) {
            prop_assert_eq!(galois_conj_inv(&x), x);
        }
        if let Ok(x) = th.theta_at(a, b, c) {
            prop_assert_eq!(galois_conj_inv(&x), x);
        }
        if th.params().is_color(a) {
            let d = th.delta_at(a);
            prop_assert_eq!(galois_conj_inv(&d), d);
            let t = th.twist_at(a);
            prop_assert_eq!(galois_conj_inv(&t), t.inv().unwrap());
        }
    }

    #[test]
    fn tet_symmetries(r in 2u32..=7, cols in prop::collection::vec(0u32..=7, 6)) {
        let th = Recoupling::new(TheoryParams::unitary(r).unwrap());
        let cols: [u32; 6] = cols.try_into().unwrap();
        prop_assert_eq!(tet_symmetric(&th, cols), Ok(()));
    }

    #[test]
    fn sixj_orthogonality((r, row) in sixj_row()) {
        let th = Recoupling::new(TheoryParams::unitary(r).unwrap());
        prop_assert_eq!(sixj_orthogonal(&th, row), Ok(()));
    }

    #[test]
    fn bar_is_an_involutive_ring_map(f in fraction(), g in fraction(), (n, k) in root_strategy()) {
        prop_assert_eq!(bar_involution(&f, &g, n, k), Ok(()));
    }

    #[test]
    fn cyc_numbers_round_trip_through_json(x in cyc(20)) {
        prop_assert!(json_round_trip(&x));
    }

    #[test]
    fn coupling_bar_is_the_bar_of_coupling(r in 2u32..=6, i in 0u32..=6, j in 0u32..=6, l in 0u32..=6) {
        let p = TheoryParams::unitary(r).unwrap();
        prop_assume!(p.is_color(i) && p.is_color(j) && p.is_color(l));
        prop_assert_eq!(coupling_a_bar(p, i, j, l), coupling_a(p, i, j, l).bar());
    }

    #[test]
    fn arf_is_invariant_under_transvections(
        g in 1u32..=4,
        values in any::<u64>(),
        moves in prop::collection::vec(any::<u64>(), 1..12),
    ) {
        let q = QuadraticForm::new(g, values);
        let mask = (1u64 << (2 * g)) - 1;
        let moved = moves.iter().fold(q.clone(), |acc, v| acc.transvect(v & mask));
        prop_assert_eq!(arf(&moved), arf(&q));
    }

    #[test]
    fn products_keep_determinant_one(word in word_strategy(), q in prop::sample::select(vec![3u32, 5, 7, 9])) {
        let m = eval_word(&word, q).unwrap();
        prop_assert!(m.det() == RealCycNumber::from_i64(m.order(), 1));
    }

    #[test]
    fn classify_is_conjugation_invariant(
        w in word_strategy(),
        h in word_strategy(),
        q in prop::sample::select(vec![3u32, 5, 7]),
    ) {
        let m = eval_word(&w, q).unwrap();
        let c = eval_word(&h, q).unwrap();
        let conj = c.mul(&m).mul(&c.inv());
        prop_assert_eq!(classify(&conj), classify(&m));
    }
}

fn admissible_triple() -> impl Strategy<Value = (u32, (u32, u32, u32))> {
    (2u32..=8).prop_flat_map(|r| {
        let p = TheoryParams::unitary(r).unwrap();
        let cols = p.colors();
        let mut triples = Vec::new();
        for &a in &cols {
            for &b in &cols {
                for &c in &cols {
                    if p.is_admissible(a, b, c) {
                        triples.push((a, b, c));
                    }
                }
            }
        }
        (Just(r), prop::sample::select(triples))
    })
}

/// `(a, b, c, d, i)` with `(a, d, i)` and `(b, c, i)` admissible.
fn sixj_row() -> impl Strategy<Value = (u32, [u32; 5])> {
    (2u32..=7).prop_flat_map(|r| {
        let p = TheoryParams::unitary(r).unwrap();
        let cols = p.colors();
        let mut rows = Vec::new();
        for &i in &cols {
            for &a in &cols {
                for &d in &cols {
                    for &b in &cols {
                        for &c in &cols {
                            if p.is_admissible(a, d, i) && p.is_admissible(b, c, i) {
                                rows.push([a, b, c, d, i]);
                            }
                        }
                    }
                }
            }
        }
        (Just(r), prop::sample::select(rows))
    })
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec(
        (prop::sample::select(vec![Generator::A, Generator::B, Generator::J]), -3i64..=3),
        0..8,
    )
    .prop_map(|v| Word(v.into_iter().map(|(g, e)| WordItem::Gen(g, e)).collect()))
}

#[test]
fn p_plus_times_p_minus_is_d_squared() {
    for r in 1..=10 {
        assert!(p_plus_p_minus_is_d2(&Recoupling::new(TheoryParams::unitary(r).unwrap())), "r = {r}");
    }
}

#[test]
fn theta_with_a_trivial_edge_is_delta() {
    for r in 2..=8 {
        assert_eq!(theta_degenerations(&Recoupling::new(TheoryParams::unitary(r).unwrap())), Ok(()), "r = {r}");
    }
}

#[test]
fn dimension_counts() {
    for r in 1..=12 {
        let p = TheoryParams::unitary(r).unwrap();
        assert_eq!(verlinde_dim(r, 1).unwrap(), p.colors().len() as u64, "r = {r}");
        assert_eq!(verlinde_dim(r, 2).unwrap(), enumerate_basis(p).len() as u64, "r = {r}");
    }
}

#[test]
fn genus_one_relations_at_every_root() {
    for r in 1..=10 {
        let n = TheoryParams::unitary(r).unwrap().order();
        for k in units(n) {
            let p = TheoryParams::with_root(r, k).unwrap();
            let rep = verify_genus1_relations(p);
            assert!(all_pass(&rep), "r = {r}, k = {k}: {rep:?}");
            let t = modular_data(p).t;
            assert!(t.pow(2 * n).unwrap().is_identity(), "r = {r}, k = {k}");
        }
    }
}

#[test]
fn genus_two_relations_up_to_level_eight() {
    for r in 1..=8 {
        let rep = verify_genus2_relations(TheoryParams::unitary(r).unwrap()).unwrap();
        assert!(all_pass(&rep), "r = {r}: {rep:?}");
    }
}

#[test]
fn trace_double_sum_is_matrix_trace() {
    for r in 7..=9 {
        let rep = Genus2Rep::new(TheoryParams::unitary(r).unwrap()).unwrap();
        assert_eq!(rep.trace_double_sum(), rep.trace_matrix().unwrap(), "r = {r}");
    }
}

#[test]
fn genus_two_matrices_are_galois_equivariant() {
    for r in 2..=5 {
        assert_eq!(galois_equivariant(r), Ok(()));
    }
}

#[test]
fn hecke_relations_below_two() {
    for q in (3..=15).step_by(2) {
        let (a, b, _) = hecke_generators(q).unwrap();
        let ab = a.mul(&b);
        assert!(ab.pow(q as i64).is_minus_identity(), "q = {q}");
        assert!(ab.pow(2 * q as i64).is_identity(), "q = {q}");
    }
}

#[test]
fn no_torsion_in_the_free_regime() {
    let sqrt2 = &CycNumber::zeta_pow(8, 1) + &CycNumber::zeta_pow(8, -1);
    let lambdas = [
        RealCycNumber::from_i64(8, 2),
        RealCycNumber::from_i64(8, 3),
        RealCycNumber::new(&sqrt2 + &CycNumber::one(8)).unwrap(),
    ];
    for lambda in &lambdas {
        let (a, b, _) = generators_for(lambda);
        let ab = a.mul(&b);
        let mut m = SL2Matrix::identity(8);
        for e in 1..=50 {
            m = m.mul(&ab);
            assert!(!m.is_identity() && !m.is_minus_identity(), "lambda = {}, e = {e}", lambda.to_f64());
        }
    }
}

#[test]
fn thurston_path_eigenvalue_is_hecke_lambda() {
    for g in 1..=6u32 {
        let t = thurston_rep(&MulticurveData::type_a_path(2 * g as usize)).unwrap();
        let (a, _, _) = hecke_generators(2 * g + 1).unwrap();
        assert_eq!(t.mu_exact.as_ref(), Some(&a.b), "g = {g}");
    }
}

#[test]
fn spin_dimensions_sum_to_total() {
    for r in (2..=14).filter(|r| (r + 2) % 4 == 0) {
        for g in 1..=4 {
            let (even, odd) = orbit_counts(g);
            let sum = even * spin_dims(r, g, 0).unwrap() + odd * spin_dims(r, g, 1).unwrap();
            assert_eq!(sum, verlinde_dim(r, g).unwrap(), "r = {r}, g = {g}");
        }
    }
}

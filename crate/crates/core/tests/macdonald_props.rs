//! Property tests for the Macdonald layer: the deformed pairings, the
//! modified-basis expansion, and the eigenoperator calculus.

use proptest::prelude::*;
use symf::macdonald::{
    apply_eigen, expand_in_h, macdonald_h, nabla, nabla_t1, nabla_t_inv_q, qt_scalar,
    star_scalar, EigenOp,
};
use symf::plethysm::plethysm;
use symf::scalars::{q, t, Param, ParamRat};
use symf::shapes::{enumerate_partitions, Partition};
use symf::symfunc::{Basis, SymFunc};

fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(move |n| {
        let all = enumerate_partitions(n, None, None);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn arb_basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::all().to_vec())
}

/// A small random element: up to three terms of bounded degree with small
/// integer coefficients, in a random basis.
fn arb_symfunc(max_size: u32) -> impl Strategy<Value = SymFunc> {
    (
        arb_basis(),
        prop::collection::vec((arb_partition(max_size), -3i64..=3), 1..=3),
    )
        .prop_map(|(basis, entries)| {
            SymFunc::from_terms(
                basis,
                entries
                    .into_iter()
                    .map(|(mu, c)| (mu, ParamRat::from_int(c))),
            )
        })
}

/// Like [`arb_symfunc`], but over the six classical bases only.  Those basis
/// elements are free of `q` and `t`, so the whole element is too.
fn arb_parameter_free_symfunc(max_size: u32) -> impl Strategy<Value = SymFunc> {
    let classical = vec![Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::F];
    (
        prop::sample::select(classical),
        prop::collection::vec((arb_partition(max_size), -3i64..=3), 1..=3),
    )
        .prop_map(|(basis, entries)| {
            SymFunc::from_terms(
                basis,
                entries
                    .into_iter()
                    .map(|(mu, c)| (mu, ParamRat::from_int(c))),
            )
        })
}

fn arb_eigen_op() -> impl Strategy<Value = EigenOp> {
    prop_oneof![
        Just(EigenOp::Delta),
        Just(EigenOp::Nabla(1)),
        Just(EigenOp::Nabla(-1)),
        Just(EigenOp::Nabla(2)),
        Just(EigenOp::D0),
        Just(EigenOp::DeltaF(SymFunc::e(2))),
    ]
}

/// The alphabet `(1−q)(1−t)·x`, as a plethysm argument.
fn m_alphabet() -> SymFunc {
    let m = (ParamRat::one() - q()) * (ParamRat::one() - t());
    SymFunc::term(Basis::P, Partition::of(&[1]), m)
}

/// The alphabet `(1−q)/(1−t)·x`, as a plethysm argument.
fn ratio_alphabet() -> SymFunc {
    let r = (ParamRat::one() - q()) / (ParamRat::one() - t());
    SymFunc::term(Basis::P, Partition::of(&[1]), r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pairings_are_symmetric(f in arb_symfunc(5), g in arb_symfunc(5)) {
        prop_assert_eq!(qt_scalar(&f, &g), qt_scalar(&g, &f));
        prop_assert_eq!(star_scalar(&f, &g), star_scalar(&g, &f));
    }

    #[test]
    fn pairings_are_bilinear(
        f in arb_symfunc(5),
        g in arb_symfunc(5),
        h in arb_symfunc(5),
        c in -3i64..=3,
    ) {
        let scaled = g.scale(&ParamRat::from_int(c));
        prop_assert_eq!(
            qt_scalar(&f, &(&scaled + &h)),
            ParamRat::from_int(c) * qt_scalar(&f, &g) + qt_scalar(&f, &h)
        );
        prop_assert_eq!(
            star_scalar(&f, &(&scaled + &h)),
            ParamRat::from_int(c) * star_scalar(&f, &g) + star_scalar(&f, &h)
        );
    }

    #[test]
    fn pairings_reduce_to_dilated_hall_pairings(
        f in arb_symfunc(5),
        g in arb_symfunc(5),
    ) {
        // ⟨f, g⟩_{q,t} = ⟨f, g[(1−q)/(1−t)·x]⟩ and
        // ⟨f, g⟩_⋆ = ⟨f, (ωg)[(1−q)(1−t)·x]⟩ under the classical pairing.
        prop_assert_eq!(qt_scalar(&f, &g), f.hall(&plethysm(&g, &ratio_alphabet())));
        prop_assert_eq!(
            star_scalar(&f, &g),
            f.hall(&plethysm(&g.omega(), &m_alphabet()))
        );
    }

    #[test]
    fn eigen_operators_are_linear(
        op in arb_eigen_op(),
        f in arb_symfunc(4),
        g in arb_symfunc(4),
        c in -3i64..=3,
    ) {
        let scaled = f.scale(&ParamRat::from_int(c));
        prop_assert_eq!(
            apply_eigen(&op, &(&scaled + &g)),
            apply_eigen(&op, &f).scale(&ParamRat::from_int(c)) + apply_eigen(&op, &g)
        );
    }

    #[test]
    fn eigen_operators_preserve_homogeneous_degree(
        op in arb_eigen_op(),
        mu in arb_partition(4),
    ) {
        let image = apply_eigen(&op, &SymFunc::s(&mu));
        if !image.is_zero() {
            prop_assert!(image.is_homogeneous());
            prop_assert_eq!(image.degree(), Some(mu.size()));
        }
    }

    #[test]
    fn nabla_powers_compose_and_invert(f in arb_symfunc(4)) {
        let once = nabla(&f);
        prop_assert_eq!(apply_eigen(&EigenOp::Nabla(2), &f), nabla(&once));
        prop_assert_eq!(
            apply_eigen(&EigenOp::Nabla(-1), &once),
            f.convert(Basis::S)
        );
    }

    #[test]
    fn delta_subscripts_add_and_compose(
        f in arb_symfunc(3),
        g in arb_symfunc(3),
        h in arb_symfunc(4),
    ) {
        // Δ_{f+g} = Δ_f + Δ_g, and Δ_{fg} = Δ_f ∘ Δ_g because both act
        // diagonally on the modified basis.
        prop_assert_eq!(
            apply_eigen(&EigenOp::DeltaF(&f + &g), &h),
            apply_eigen(&EigenOp::DeltaF(f.clone()), &h)
                + apply_eigen(&EigenOp::DeltaF(g.clone()), &h)
        );
        prop_assert_eq!(
            apply_eigen(&EigenOp::DeltaF(&f * &g), &h),
            apply_eigen(
                &EigenOp::DeltaF(f),
                &apply_eigen(&EigenOp::DeltaF(g), &h)
            )
        );
    }

    #[test]
    fn modified_basis_expansion_reconstructs(f in arb_symfunc(4)) {
        let mut rebuilt = SymFunc::zero();
        for (mu, c) in expand_in_h(&f) {
            rebuilt = rebuilt + macdonald_h(&mu).scale(&c);
        }
        prop_assert_eq!(rebuilt, f.convert(Basis::S));
    }

    #[test]
    fn d0_complements_delta(f in arb_symfunc(4)) {
        let m = (ParamRat::one() - q()) * (ParamRat::one() - t());
        prop_assert_eq!(
            apply_eigen(&EigenOp::D0, &f),
            f.convert(Basis::S) - apply_eigen(&EigenOp::Delta, &f).scale(&m)
        );
    }

    #[test]
    fn parameter_degenerations_match_substitution(f in arb_parameter_free_symfunc(4)) {
        // The degenerate operators are linear over the coefficient field, so
        // they agree with substituting into the two-parameter image exactly
        // when the input is free of the parameters — hence the classical-basis
        // generator here (the hook-alternant basis carries `q,t` inside).
        let image = nabla(&f);
        prop_assert_eq!(
            nabla_t1(&f),
            image.substitute(&[(Param::T, ParamRat::one())]).unwrap()
        );
        prop_assert_eq!(
            nabla_t_inv_q(&f),
            image.substitute(&[(Param::T, q().pow(-1))]).unwrap()
        );
    }
}

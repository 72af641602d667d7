//! Two-alphabet plethystic identities and the Hall-duality of the π basis.
//!
//! The two-alphabet ring Λ(x) ⊗ Λ(y) is modeled here (not in the library)
//! as maps from pairs of partitions to coefficients: the pair `(λ, μ)`
//! stands for `p_λ(x) p̄_μ(y)` with the `p̄_k` fresh independent generators.

use std::collections::BTreeMap;
use symf::plethysm::{eval_scalar, plethysm};
use symf::scalars::{q, t, ParamRat};
use symf::shapes::{enumerate_partitions, Partition};
use symf::symfunc::SymFunc;

type Tensor = BTreeMap<(Partition, Partition), ParamRat>;

fn tensor_insert(map: &mut Tensor, key: (Partition, Partition), c: ParamRat) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            let sum = slot.get() + &c;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts().to_vec();
    parts.extend_from_slice(b.parts());
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted")
}

fn tensor_mul(a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for ((xl, yl), c) in a {
        for ((xr, yr), d) in b {
            tensor_insert(&mut out, (merge(xl, xr), merge(yl, yr)), c * d);
        }
    }
    out
}

/// Embeds `f` on the `x` side (`on_y = false`) or the `y` side.
fn embed(f: &SymFunc, on_y: bool) -> Tensor {
    f.p_terms()
        .into_iter()
        .map(|(mu, c)| {
            let key = if on_y {
                (Partition::empty(), mu)
            } else {
                (mu, Partition::empty())
            };
            (key, c)
        })
        .collect()
}

/// Computes `f[x ± y]`: each `p_k` becomes `p_k(x) ± p̄_k(y)`.
fn plethysm_x_pm_y(f: &SymFunc, minus: bool) -> Tensor {
    let mut total = Tensor::new();
    for (lam, c) in f.p_terms() {
        let mut term = Tensor::from([((Partition::empty(), Partition::empty()), c)]);
        for &k in lam.parts() {
            let row = Partition::new(vec![k]).expect("row");
            let mut pk = Tensor::new();
            pk.insert((row.clone(), Partition::empty()), ParamRat::one());
            let y_coeff = if minus {
                -ParamRat::one()
            } else {
                ParamRat::one()
            };
            pk.insert((Partition::empty(), row), y_coeff);
            term = tensor_mul(&term, &pk);
        }
        for (key, d) in term {
            tensor_insert(&mut total, key, d);
        }
    }
    total
}

#[test]
fn sum_of_alphabets_for_h_and_e() {
    // h_n[x+y] = Σ_k h_k(x) h_{n−k}(y), and the same with e throughout.
    for n in 1..=5u32 {
        for elementary in [false, true] {
            let single = |k: u32| -> SymFunc {
                if k == 0 {
                    SymFunc::one()
                } else if elementary {
                    SymFunc::e(k)
                } else {
                    SymFunc::h(k)
                }
            };
            let lhs = plethysm_x_pm_y(&single(n), false);
            let mut rhs = Tensor::new();
            for k in 0..=n {
                let product = tensor_mul(&embed(&single(k), false), &embed(&single(n - k), true));
                for (key, c) in product {
                    tensor_insert(&mut rhs, key, c);
                }
            }
            assert_eq!(lhs, rhs, "n={n} elementary={elementary}");
        }
    }
}

#[test]
fn difference_of_alphabets_for_h() {
    // h_n[x−y] = Σ_k (−1)^{n−k} h_k(x) e_{n−k}(y).
    for n in 1..=4u32 {
        let lhs = plethysm_x_pm_y(&SymFunc::h(n), true);
        let mut rhs = Tensor::new();
        for k in 0..=n {
            let h = if k == 0 { SymFunc::one() } else { SymFunc::h(k) };
            let e = if k == n {
                SymFunc::one()
            } else {
                SymFunc::e(n - k)
            };
            let mut product = tensor_mul(&embed(&h, false), &embed(&e, true));
            if (n - k) % 2 == 1 {
                for c in product.values_mut() {
                    *c = -&*c;
                }
            }
            for (key, c) in product {
                tensor_insert(&mut rhs, key, c);
            }
        }
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn schur_of_sum_splits_into_skews() {
    // s_λ[x+y] = Σ_{μ⊆λ} s_μ(x) s_{λ/μ}(y), with s_{λ/μ} = s_μ^⊥ s_λ.
    for n in 1..=4u32 {
        for lam in enumerate_partitions(n, None, None) {
            let target = SymFunc::s(&lam);
            let lhs = plethysm_x_pm_y(&target, false);
            let mut rhs = Tensor::new();
            for m in 0..=n {
                for mu in enumerate_partitions(m, None, None) {
                    let skew = SymFunc::s(&mu).skew(&target);
                    if skew.is_zero() {
                        continue;
                    }
                    let product = tensor_mul(&embed(&SymFunc::s(&mu), false), &embed(&skew, true));
                    for (key, c) in product {
                        tensor_insert(&mut rhs, key, c);
                    }
                }
            }
            assert_eq!(lhs, rhs, "λ={lam}");
        }
    }
}

#[test]
fn schur_of_difference_alternates_conjugate_skews() {
    // s_λ[x−y] = Σ_{ν⊆λ} (−1)^{|ν|} s_{λ/ν}(x) s_{ν'}(y).
    for n in 1..=4u32 {
        for lam in enumerate_partitions(n, None, None) {
            let target = SymFunc::s(&lam);
            let lhs = plethysm_x_pm_y(&target, true);
            let mut rhs = Tensor::new();
            for m in 0..=n {
                for nu in enumerate_partitions(m, None, None) {
                    let skew = SymFunc::s(&nu).skew(&target);
                    if skew.is_zero() {
                        continue;
                    }
                    let mut product = tensor_mul(
                        &embed(&skew, false),
                        &embed(&SymFunc::s(&nu.conjugate()), true),
                    );
                    if m % 2 == 1 {
                        for c in product.values_mut() {
                            *c = -&*c;
                        }
                    }
                    for (key, c) in product {
                        tensor_insert(&mut rhs, key, c);
                    }
                }
            }
            assert_eq!(lhs, rhs, "λ={lam}");
        }
    }
}

#[test]
fn pi_basis_is_a_twisted_elementary_family() {
    // π_n = qt/(qt−1) · e_n[x (qt−1)/qt].
    let qt = q() * t();
    let ratio = (&qt - ParamRat::one()).try_div(&qt).unwrap();
    for n in 1..=6u32 {
        let alphabet = SymFunc::p(1).scale(&ratio);
        let rhs = plethysm(&SymFunc::e(n), &alphabet)
            .scale(&ParamRat::one().try_div(&ratio).unwrap());
        assert_eq!(SymFunc::pi(n), rhs, "π_{n}");
    }
}

#[test]
fn pi_hall_dual_basis() {
    // The Hall-dual of {π_λ} is g_μ = ((qt−1)/qt)^{ℓ(μ)} f_μ[x qt/(qt−1)].
    let qt = q() * t();
    let ratio = (&qt - ParamRat::one()).try_div(&qt).unwrap();
    let inverse_ratio = ParamRat::one().try_div(&ratio).unwrap();
    for n in 1..=5u32 {
        let all = enumerate_partitions(n, None, None);
        for lam in &all {
            let pi_lam = SymFunc::gen(symf::symfunc::Basis::Pi, lam);
            for mu in &all {
                let alphabet = SymFunc::p(1).scale(&inverse_ratio);
                let dual = plethysm(&SymFunc::gen(symf::symfunc::Basis::F, mu), &alphabet)
                    .scale(&ratio.pow(mu.len() as i64));
                let inner = pi_lam.hall(&dual);
                let expected = if lam == mu {
                    ParamRat::one()
                } else {
                    ParamRat::zero()
                };
                assert_eq!(inner, expected, "⟨π_{lam}, g_{mu}⟩");
            }
        }
    }
}

#[test]
fn star_of_h_mu_has_hall_littlewood_normalization() {
    // h_μ* evaluated at 1 factors over the parts: h_μ*(1) = ∏_i h_{μ_i}*(1).
    for mu in enumerate_partitions(5, None, None) {
        let mut product = ParamRat::one();
        for &part in mu.parts() {
            let single = eval_scalar(
                &symf::plethysm::star(&SymFunc::h(part)),
                &ParamRat::one(),
            );
            product = product * single;
        }
        let h_mu = mu
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &k| acc * SymFunc::h(k));
        let whole = eval_scalar(&symf::plethysm::star(&h_mu), &ParamRat::one());
        assert_eq!(whole, product, "h_{mu}*(1)");
    }
}

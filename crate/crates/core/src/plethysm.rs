//! Plethystic calculus `f[A]`.
//!
//! Alphabets are ordinary [`SymFunc`] values: the alphabet of variables `x`
//! is `p₁`, scalar alphabets such as `1−u` or an integer `k` are degree-0
//! elements, and compound alphabets (`x/(1−q)`, `x(qt−1)/qt`, …) are scaled
//! power sums. Provides:
//!
//! * [`plethysm`] — substitution of an alphabet into a symmetric function;
//!   `p_k[A]` applies the `k`-th Adams operation to the coefficients of `A`
//!   and multiplies all power-sum indices inside `A` by `k`.
//! * [`eval_scalar`] — evaluation `f[c]` at a pure-coefficient alphabet,
//!   yielding a scalar; covers `f[n]`, `f[1+q+⋯+q^{n−1}]`, `f[1−u]`, ….
//! * [`star`] — the specialization `f ↦ f[x/(1−q)]`.
//! * [`hook_plethysm_1_minus_u`] — `s_μ[1−u]`, which vanishes unless `μ` is
//!   a hook and is always divisible by `1−u`.

use crate::scalars::{q, ParamRat};
use crate::shapes::Partition;
use crate::symfunc::{Basis, SymFunc};
use std::collections::HashMap;

/// Substitutes the alphabet `A` into `f`.
///
/// Expanding `f = Σ c_λ p_λ`, the result is `Σ c_λ ∏_i p_{λ_i}[A]`, where
/// `p_k[A]` dilates every power-sum index of `A` by `k` and applies the
/// `k`-th Adams operation (`q ↦ q^k`, …)  to its coefficients. The alphabet
/// `p₁` is the identity:
///
/// ```
/// use symf::plethysm::plethysm;
/// use symf::symfunc::SymFunc;
/// assert_eq!(plethysm(&SymFunc::p(2), &SymFunc::p(3)), SymFunc::p(6));
/// let f = SymFunc::e(3);
/// assert_eq!(plethysm(&f, &SymFunc::p(1)), f);
/// ```
pub fn plethysm(f: &SymFunc, alphabet: &SymFunc) -> SymFunc {
    let a = alphabet.p_terms();
    let mut dilations: HashMap<u32, SymFunc> = HashMap::new();
    let mut total = SymFunc::zero();
    for (lam, c) in f.p_terms() {
        let mut term = SymFunc::constant(c);
        for &k in lam.parts() {
            let dilated = dilations.entry(k).or_insert_with(|| {
                SymFunc::from_terms(
                    Basis::P,
                    a.iter().map(|(mu, d)| {
                        let parts: Vec<u32> =
                            mu.parts().iter().map(|&p| p * k).collect();
                        (Partition::new(parts).expect("scaled"), d.adams(k))
                    }),
                )
            });
            term = term * dilated.clone();
        }
        total = total + term;
    }
    total
}

/// Evaluates `f` at a pure-coefficient alphabet: `p_k[c]` is the `k`-th
/// Adams operation applied to `c`.
///
/// ```
/// use symf::plethysm::eval_scalar;
/// use symf::scalars::ParamRat;
/// use symf::symfunc::SymFunc;
/// let six = eval_scalar(&SymFunc::e(2), &ParamRat::from_int(4));
/// assert_eq!(six, ParamRat::from_int(6)); // e₂[4] = C(4,2)
/// ```
pub fn eval_scalar(f: &SymFunc, value: &ParamRat) -> ParamRat {
    let mut adams: HashMap<u32, ParamRat> = HashMap::new();
    let mut total = ParamRat::zero();
    for (lam, c) in f.p_terms() {
        let mut term = c;
        for &k in lam.parts() {
            let pk = adams.entry(k).or_insert_with(|| value.adams(k));
            term = &term * &*pk;
        }
        total = total + term;
    }
    total
}

/// The star specialization `f*(x) = f[x/(1−q)]`: every `p_k` is divided by
/// `1 − q^k`.
pub fn star(f: &SymFunc) -> SymFunc {
    let alphabet = SymFunc::p(1).scale(
        &ParamRat::one()
            .try_div(&(ParamRat::one() - q()))
            .expect("1 − q is invertible"),
    );
    plethysm(f, &alphabet)
}

/// `s_μ[1−u]`, which equals `(1−u)(−u)^k` when `μ = (n−k, 1^k)` is a hook
/// and `0` otherwise.
///
/// The value is always exactly divisible by `1−u`; the division is carried
/// out internally so that a non-exact quotient (impossible when plethysm is
/// correct) fails loudly rather than passing through.
///
/// ```
/// use symf::plethysm::hook_plethysm_1_minus_u;
/// use symf::shapes::Partition;
/// assert!(hook_plethysm_1_minus_u(&Partition::of(&[2, 2])).is_zero());
/// ```
pub fn hook_plethysm_1_minus_u(mu: &Partition) -> ParamRat {
    let one_minus_u = ParamRat::one() - crate::scalars::u();
    let value = eval_scalar(&SymFunc::s(mu), &one_minus_u);
    let quotient = value
        .divide_exact(&one_minus_u)
        .expect("s_μ[1−u] is divisible by 1−u");
    quotient * one_minus_u
}

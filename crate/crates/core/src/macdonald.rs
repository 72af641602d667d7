//! Macdonald polynomials and their diagonal eigenoperators.
//!
//! Everything here lives over the rational-function field in `q` and `t`:
//!
//! * the deformed power-sum pairings [`qt_scalar`] and [`star_scalar`];
//! * the monic orthogonal family [`macdonald_p`], triangular over monomial
//!   symmetric functions with respect to dominance;
//! * the modified family [`macdonald_h`], built degree by degree from its
//!   vanishing characterization and cached together with both change-of-basis
//!   matrices; its Schur coefficients are the `q,t`-Kostka polynomials
//!   ([`qt_kostka`]), certified to lie in `ℕ[q,t]` during construction;
//! * the diagonal operators `Δ`, `∇^r`, `Δ_f`, and `D₀` ([`apply_eigen`],
//!   [`nabla`]) acting through the `H`-expansion ([`expand_in_h`]);
//! * the `t = 1` and `t = 1/q` degenerations of `∇` ([`nabla_t1`] and
//!   [`nabla_t_inv_q`]), realized directly on the dilated bases
//!   `h_μ[x/(1−q)]` and `s_μ[x/(1−q)]`;
//! * the cell statistics [`b_stat`], [`t_stat`], [`pi_stat`], [`w_stat`].
//!
//! Per-degree data is computed on demand and memoized behind a lock, so
//! repeated operator applications at one degree cost a single construction.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::linalg;
use crate::plethysm::{eval_scalar, plethysm, star};
use crate::scalars::{q, t, Param, ParamRat};
use crate::shapes::{enumerate_partitions, Partition};
use crate::symfunc::{Basis, SymFunc};

/// The monomial `q^x t^y` attached to the cell `(x, y)`.
fn cell_monomial(x: usize, y: usize) -> ParamRat {
    ParamRat::monomial(&[(Param::Q, x as u32), (Param::T, y as u32)])
}

/// The product `M = (1 − q)(1 − t)` that scales most deformations.
fn m_factor() -> ParamRat {
    (ParamRat::one() - q()) * (ParamRat::one() - t())
}

/// The diagram generating polynomial `B_μ = Σ_{(x,y) ∈ μ} q^x t^y`.
///
/// ```
/// use symf::macdonald::b_stat;
/// use symf::scalars::{q, t, ParamRat};
/// use symf::shapes::Partition;
/// assert_eq!(b_stat(&Partition::of(&[2])), ParamRat::one() + q());
/// assert_eq!(b_stat(&Partition::of(&[1, 1])), ParamRat::one() + t());
/// ```
pub fn b_stat(mu: &Partition) -> ParamRat {
    let mut acc = ParamRat::zero();
    for (x, y) in mu.cells() {
        acc = acc + cell_monomial(x, y);
    }
    acc
}

/// The product of all cell monomials, `T_μ = q^{n(μ')} t^{n(μ)}`; this is
/// the eigenvalue of `∇` on the modified Macdonald polynomial `H_μ`.
pub fn t_stat(mu: &Partition) -> ParamRat {
    ParamRat::monomial(&[
        (Param::Q, mu.conjugate().n_stat()),
        (Param::T, mu.n_stat()),
    ])
}

/// The hook-free product `Π_μ = Π_{(x,y) ∈ μ, (x,y) ≠ (0,0)} (1 − q^x t^y)`.
pub fn pi_stat(mu: &Partition) -> ParamRat {
    let mut acc = ParamRat::one();
    for (x, y) in mu.cells() {
        if (x, y) != (0, 0) {
            acc = acc * (ParamRat::one() - cell_monomial(x, y));
        }
    }
    acc
}

/// The two-sided hook product
/// `w_μ = Π_c (q^{a(c)} − t^{ℓ(c)+1})(t^{ℓ(c)} − q^{a(c)+1})`, the squared
/// norm scale of the `H` family under the star pairing.
pub fn w_stat(mu: &Partition) -> ParamRat {
    let mut acc = ParamRat::one();
    for (x, y) in mu.cells() {
        let arm = mu.arm(x, y);
        let leg = mu.leg(x, y);
        let first = ParamRat::monomial(&[(Param::Q, arm)])
            - ParamRat::monomial(&[(Param::T, leg + 1)]);
        let second = ParamRat::monomial(&[(Param::T, leg)])
            - ParamRat::monomial(&[(Param::Q, arm + 1)]);
        acc = acc * first * second;
    }
    acc
}

/// The deformed cycle-type norm `z_λ(q,t) = z_λ · Π_i (1−q^{λ_i})/(1−t^{λ_i})`.
fn qt_z(mu: &Partition) -> ParamRat {
    let mut acc = ParamRat::from_bigint(mu.z());
    for &part in mu.parts() {
        let k = i64::from(part);
        acc = acc * (ParamRat::one() - q().pow(k)) / (ParamRat::one() - t().pow(k));
    }
    acc
}

/// The star norm `Z_λ = (−1)^{|λ|−ℓ(λ)} z_λ · Π_i (1−q^{λ_i})(1−t^{λ_i})`.
fn star_z(mu: &Partition) -> ParamRat {
    let mut acc = ParamRat::from_bigint(mu.z());
    if (mu.size() as usize - mu.len()) % 2 == 1 {
        acc = -acc;
    }
    for &part in mu.parts() {
        let k = i64::from(part);
        acc = acc * (ParamRat::one() - q().pow(k)) * (ParamRat::one() - t().pow(k));
    }
    acc
}

/// The `q,t`-deformed Hall pairing, with `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ(q,t)`;
/// the Macdonald `P` family is orthogonal for it.
///
/// ```
/// use symf::macdonald::qt_scalar;
/// use symf::scalars::{q, t, ParamRat};
/// use symf::symfunc::SymFunc;
/// let norm = qt_scalar(&SymFunc::p(1), &SymFunc::p(1));
/// assert_eq!(norm, (ParamRat::one() - q()) / (ParamRat::one() - t()));
/// ```
pub fn qt_scalar(f: &SymFunc, g: &SymFunc) -> ParamRat {
    diagonal_pairing(f, g, qt_z)
}

/// The star pairing, with `⟨p_λ, p_μ⟩ = δ_{λμ} Z_λ` where
/// `Z_λ = (−1)^{|λ|−ℓ(λ)} p_λ[(1−q)(1−t)] z_λ`; the modified Macdonald
/// family is orthogonal for it, and it reduces to the Hall pairing through
/// `⟨f, g⟩ = ⟨f, ω g[x/M]⟩_⋆` with `M = (1−q)(1−t)`.
pub fn star_scalar(f: &SymFunc, g: &SymFunc) -> ParamRat {
    diagonal_pairing(f, g, star_z)
}

fn diagonal_pairing(
    f: &SymFunc,
    g: &SymFunc,
    norm: fn(&Partition) -> ParamRat,
) -> ParamRat {
    let left = f.p_terms();
    let right = g.p_terms();
    let mut acc = ParamRat::zero();
    for (mu, a) in &left {
        if let Some(b) = right.get(mu) {
            acc = acc + a * b * norm(mu);
        }
    }
    acc
}

static P_CACHE: Lazy<Mutex<HashMap<u32, Arc<BTreeMap<Partition, SymFunc>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn p_degree(n: u32) -> Arc<BTreeMap<Partition, SymFunc>> {
    if let Some(found) = P_CACHE.lock().expect("cache lock").get(&n) {
        return Arc::clone(found);
    }
    let built = Arc::new(build_p_degree(n));
    Arc::clone(P_CACHE.lock().expect("cache lock").entry(n).or_insert(built))
}

/// Gram–Schmidt over the monomial basis: partitions are processed upward in
/// the lexicographic refinement of dominance, and each `m_μ` is corrected by
/// its projections on the already-built `P_λ` with `λ` strictly dominated
/// by `μ`. This keeps every `P_μ` monic and supported on `{ λ : λ ⪯ μ }`.
fn build_p_degree(n: u32) -> BTreeMap<Partition, SymFunc> {
    let mut built: Vec<(Partition, SymFunc, ParamRat)> = Vec::new();
    for mu in enumerate_partitions(n, None, None).into_iter().rev() {
        let mut f = SymFunc::m(&mu);
        for (lambda, p_lambda, norm) in &built {
            if mu != *lambda && mu.dominates(lambda).expect("equal sizes") {
                let coeff = qt_scalar(&f, p_lambda) / norm;
                f = f - p_lambda.scale(&coeff);
            }
        }
        let norm = qt_scalar(&f, &f);
        assert!(
            !norm.is_zero(),
            "P[{mu}] degenerated to norm zero at degree {n}"
        );
        built.push((mu, f, norm));
    }
    built.into_iter().map(|(mu, f, _)| (mu, f)).collect()
}

/// The Macdonald polynomial `P_μ(q,t)`, expressed over monomial symmetric
/// functions: the unique `qt`-orthogonal family of the form
/// `P_μ = m_μ + Σ_{λ ≺ μ} c_λ(q,t) m_λ` (sum over dominance-smaller `λ`).
///
/// Specializing recovers classical bases: `P_μ(q,q) = s_μ`,
/// `P_μ(q,1) = m_μ`, and `P_μ(1,t) = e_{μ'}`.
///
/// ```
/// use symf::macdonald::macdonald_p;
/// use symf::scalars::{q, t, ParamRat};
/// use symf::shapes::Partition;
/// use symf::symfunc::SymFunc;
/// assert_eq!(macdonald_p(&Partition::of(&[1, 1])), SymFunc::m(&Partition::of(&[1, 1])));
/// let gamma = (ParamRat::one() + q()) * (ParamRat::one() - t())
///     / (ParamRat::one() - q() * t());
/// assert_eq!(macdonald_p(&Partition::of(&[2])).coeff(&Partition::of(&[1, 1])), gamma);
/// ```
pub fn macdonald_p(mu: &Partition) -> SymFunc {
    p_degree(mu.size())
        .get(mu)
        .expect("every partition of the degree is present")
        .clone()
}

/// Per-degree data for the modified family: the partitions of the degree in
/// display order, the Schur expansion of each `H_μ`, and the inverse matrix
/// used to expand arbitrary elements in the `H` basis.
struct HDegree {
    parts: Vec<Partition>,
    h_in_s: Vec<Vec<ParamRat>>,
    expand: Vec<Vec<ParamRat>>,
}

static H_CACHE: Lazy<Mutex<HashMap<u32, Arc<HDegree>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn h_degree(n: u32) -> Arc<HDegree> {
    if let Some(found) = H_CACHE.lock().expect("cache lock").get(&n) {
        return Arc::clone(found);
    }
    let built = Arc::new(build_h_degree(n));
    Arc::clone(H_CACHE.lock().expect("cache lock").entry(n).or_insert(built))
}

/// Rows of the dilation `f ↦ f[(1−v)x]` on the Schur basis of degree `n`:
/// entry `[i][j]` is the coefficient of `s_{parts[j]}` in
/// `s_{parts[i]}[(1−v)x]`.
fn twisted_schur_rows(parts: &[Partition], v: ParamRat) -> Vec<Vec<ParamRat>> {
    let alphabet = SymFunc::term(Basis::P, Partition::of(&[1]), ParamRat::one() - v);
    parts
        .iter()
        .map(|nu| {
            let image = plethysm(&SymFunc::s(nu), &alphabet).convert(Basis::S);
            parts.iter().map(|lambda| image.coeff(lambda)).collect()
        })
        .collect()
}

/// Builds all `H_μ` of one degree from the vanishing characterization:
/// `⟨s_λ, H_μ[(1−q)x]⟩ = 0` unless `λ ⪰ μ`, `⟨s_λ, H_μ[(1−t)x]⟩ = 0`
/// unless `λ ⪰ μ'`, and the coefficient of `s_(n)` is 1. Each `H_μ` is the
/// unique solution of the resulting (overdetermined, consistent) linear
/// system on Schur coefficients.
fn build_h_degree(n: u32) -> HDegree {
    let parts = enumerate_partitions(n, None, None);
    let twist_q = twisted_schur_rows(&parts, q());
    let twist_t = twisted_schur_rows(&parts, t());
    let mut h_in_s = Vec::with_capacity(parts.len());
    for mu in &parts {
        let conj = mu.conjugate();
        let mut rows: Vec<Vec<ParamRat>> = Vec::new();
        let mut rhs: Vec<ParamRat> = Vec::new();
        for (j, lambda) in parts.iter().enumerate() {
            if !lambda.dominates(mu).expect("equal sizes") {
                rows.push((0..parts.len()).map(|i| twist_q[i][j].clone()).collect());
                rhs.push(ParamRat::zero());
            }
            if !lambda.dominates(&conj).expect("equal sizes") {
                rows.push((0..parts.len()).map(|i| twist_t[i][j].clone()).collect());
                rhs.push(ParamRat::zero());
            }
        }
        let mut leading = vec![ParamRat::zero(); parts.len()];
        leading[0] = ParamRat::one();
        rows.push(leading);
        rhs.push(ParamRat::one());
        let solution = linalg::solve_unique(&rows, &rhs).unwrap_or_else(|| {
            panic!("the vanishing conditions for H[{mu}] at degree {n} have no unique solution")
        });
        for (lambda, c) in parts.iter().zip(&solution) {
            assert!(
                c.is_nonnegative_integer_polynomial(),
                "q,t-Kostka coefficient K[{lambda},{mu}] = {c} escapes ℕ[q,t]"
            );
        }
        h_in_s.push(solution);
    }
    let transposed: Vec<Vec<ParamRat>> = (0..parts.len())
        .map(|j| (0..parts.len()).map(|i| h_in_s[i][j].clone()).collect())
        .collect();
    let expand = linalg::invert(&transposed)
        .unwrap_or_else(|| panic!("the H family at degree {n} is not a basis"));
    HDegree {
        parts,
        h_in_s,
        expand,
    }
}

/// The modified Macdonald polynomial `H_μ(q,t)` in the Schur basis.
///
/// Its coefficients are the `q,t`-Kostka polynomials; the construction
/// asserts that every one of them is a polynomial with nonnegative integer
/// coefficients and panics otherwise.
///
/// ```
/// use symf::macdonald::macdonald_h;
/// use symf::shapes::Partition;
/// assert_eq!(macdonald_h(&Partition::of(&[2])).to_string(), "s[2]+q*s[1,1]");
/// assert_eq!(macdonald_h(&Partition::of(&[1, 1])).to_string(), "s[2]+t*s[1,1]");
/// ```
pub fn macdonald_h(mu: &Partition) -> SymFunc {
    let table = h_degree(mu.size());
    let i = table
        .parts
        .iter()
        .position(|p| p == mu)
        .expect("every partition of the degree is present");
    SymFunc::from_terms(
        Basis::S,
        table
            .parts
            .iter()
            .cloned()
            .zip(table.h_in_s[i].iter().cloned()),
    )
}

/// The `q,t`-Kostka polynomial `K_{λμ}(q,t) = ⟨H_μ, s_λ⟩`; zero when the
/// two partitions have different sizes.
///
/// ```
/// use symf::macdonald::qt_kostka;
/// use symf::shapes::Partition;
/// let k = qt_kostka(&Partition::of(&[2, 1]), &Partition::of(&[2, 1]));
/// assert_eq!(k.to_string(), "q+t");
/// ```
pub fn qt_kostka(lambda: &Partition, mu: &Partition) -> ParamRat {
    if lambda.size() != mu.size() {
        return ParamRat::zero();
    }
    let table = h_degree(mu.size());
    let i = table
        .parts
        .iter()
        .position(|p| p == mu)
        .expect("every partition of the degree is present");
    let j = table
        .parts
        .iter()
        .position(|p| p == lambda)
        .expect("every partition of the degree is present");
    table.h_in_s[i][j].clone()
}

fn dot(row: &[ParamRat], v: &[ParamRat]) -> ParamRat {
    let mut acc = ParamRat::zero();
    for (a, b) in row.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc + a * b;
        }
    }
    acc
}

/// Expands `f` in the modified Macdonald basis, returning the coefficient of
/// each `H_μ` that occurs (degree by degree for inhomogeneous input).
///
/// ```
/// use symf::macdonald::{expand_in_h, macdonald_h};
/// use symf::scalars::ParamRat;
/// use symf::shapes::Partition;
/// let mu = Partition::of(&[2, 1]);
/// let expansion = expand_in_h(&macdonald_h(&mu));
/// assert_eq!(expansion.len(), 1);
/// assert_eq!(expansion[&mu], ParamRat::one());
/// ```
pub fn expand_in_h(f: &SymFunc) -> BTreeMap<Partition, ParamRat> {
    let mut out = BTreeMap::new();
    let s_form = f.convert(Basis::S);
    let Some(top) = s_form.degree() else {
        return out;
    };
    for d in 0..=top {
        let component = s_form.component(d);
        if component.is_zero() {
            continue;
        }
        let table = h_degree(d);
        let v: Vec<ParamRat> = table.parts.iter().map(|p| component.coeff(p)).collect();
        for (i, mu) in table.parts.iter().enumerate() {
            let c = dot(&table.expand[i], &v);
            if !c.is_zero() {
                out.insert(mu.clone(), c);
            }
        }
    }
    out
}

/// A diagonal operator on the modified Macdonald basis.
#[derive(Clone, Debug, PartialEq)]
pub enum EigenOp {
    /// `H_μ ↦ B_μ H_μ`, the basic Macdonald eigenoperator (equal to the
    /// subscripted variant for `f = e₁`).
    Delta,
    /// `H_μ ↦ T_μ^r H_μ`; `r = 1` is `∇`, negative `r` applies the inverse.
    Nabla(i64),
    /// `H_μ ↦ f[B_μ] H_μ`, plethystic evaluation of `f` at the diagram
    /// generating polynomial; additive and multiplicative in `f`.
    DeltaF(SymFunc),
    /// `H_μ ↦ (1 − (1−q)(1−t) B_μ) H_μ`.
    D0,
}

fn eigenvalue(op: &EigenOp, mu: &Partition) -> ParamRat {
    match op {
        EigenOp::Delta => b_stat(mu),
        EigenOp::Nabla(r) => t_stat(mu).pow(*r),
        EigenOp::DeltaF(f) => eval_scalar(f, &b_stat(mu)),
        EigenOp::D0 => ParamRat::one() - m_factor() * b_stat(mu),
    }
}

/// Applies a diagonal operator: `g` is split into homogeneous components,
/// each is expanded in the `H` basis of its degree, every `H_μ` is scaled by
/// the operator's eigenvalue, and the result is reassembled over Schur
/// functions.
///
/// ```
/// use symf::macdonald::{apply_eigen, EigenOp};
/// use symf::symfunc::SymFunc;
/// let image = apply_eigen(&EigenOp::Nabla(1), &SymFunc::e(2));
/// assert_eq!(image.to_string(), "s[2]+(q+t)*s[1,1]");
/// ```
pub fn apply_eigen(op: &EigenOp, g: &SymFunc) -> SymFunc {
    let s_form = g.convert(Basis::S);
    let Some(top) = s_form.degree() else {
        return SymFunc::zero();
    };
    let mut out: Vec<(Partition, ParamRat)> = Vec::new();
    for d in 0..=top {
        let component = s_form.component(d);
        if component.is_zero() {
            continue;
        }
        let table = h_degree(d);
        let v: Vec<ParamRat> = table.parts.iter().map(|p| component.coeff(p)).collect();
        let mut result = vec![ParamRat::zero(); table.parts.len()];
        for (i, mu) in table.parts.iter().enumerate() {
            let c = dot(&table.expand[i], &v);
            if c.is_zero() {
                continue;
            }
            let weight = c * eigenvalue(op, mu);
            for (entry, slot) in table.h_in_s[i].iter().zip(result.iter_mut()) {
                *slot += &(entry * &weight);
            }
        }
        out.extend(table.parts.iter().cloned().zip(result));
    }
    SymFunc::from_terms(Basis::S, out)
}

/// The `∇` operator, `H_μ ↦ q^{n(μ')} t^{n(μ)} H_μ`.
pub fn nabla(g: &SymFunc) -> SymFunc {
    apply_eigen(&EigenOp::Nabla(1), g)
}

fn one_minus_q_alphabet() -> SymFunc {
    SymFunc::term(Basis::P, Partition::of(&[1]), ParamRat::one() - q())
}

/// The `t = 1` degeneration of `∇`: the multiplicative operator with
/// `h_μ[x/(1−q)] ↦ q^{n(μ')} h_μ[x/(1−q)]`. It agrees with substituting
/// `t = 1` in `∇(g)` whenever `g` is free of `t`.
pub fn nabla_t1(g: &SymFunc) -> SymFunc {
    let contracted = plethysm(g, &one_minus_q_alphabet()).convert(Basis::H);
    let scaled = SymFunc::from_terms(
        Basis::H,
        contracted.terms().iter().map(|(mu, c)| {
            let weight = ParamRat::monomial(&[(Param::Q, mu.conjugate().n_stat())]);
            (mu.clone(), c * &weight)
        }),
    );
    star(&scaled)
}

/// The `t = 1/q` degeneration of `∇`: the operator with
/// `s_μ[x/(1−q)] ↦ q^{n(μ') − n(μ)} s_μ[x/(1−q)]`. It agrees with
/// substituting `t = 1/q` in `∇(g)` whenever `g` is free of `t`.
pub fn nabla_t_inv_q(g: &SymFunc) -> SymFunc {
    let contracted = plethysm(g, &one_minus_q_alphabet()).convert(Basis::S);
    let scaled = SymFunc::from_terms(
        Basis::S,
        contracted.terms().iter().map(|(mu, c)| {
            let exponent =
                i64::from(mu.conjugate().n_stat()) - i64::from(mu.n_stat());
            (mu.clone(), c * &q().pow(exponent))
        }),
    );
    star(&scaled)
}

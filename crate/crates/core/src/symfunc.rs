//! The graded ring Λ of symmetric functions over the parameter field.
//!
//! Provides:
//!
//! * [`Basis`] — the six classical bases `m, e, h, p, s, f` and the hook
//!   alternating `π` basis.
//! * [`SymFunc`] — a linear combination of basis elements indexed by
//!   partitions, with exact conversion between all bases, products, and the
//!   Hall scalar product.
//! * The involution ω, skewing `f^⊥`, the Kronecker product, Jacobi–Trudi
//!   determinants, an independent Pieri-rule product for Schur functions, and
//!   Schur-positivity testing with witnesses.
//!
//! Conversions pivot through the power sums: every basis stores per-degree
//! transition data to and from `p`, computed once and cached. Equality of two
//! [`SymFunc`] values is equality of their `p`-expansions.

use crate::linalg;
use crate::scalars::{Param, ParamRat, ScalarError};
use crate::shapes::{enumerate_partitions, Partition};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

/// The bases of Λ handled by [`SymFunc`].
///
/// `M` monomial, `E` elementary, `H` complete homogeneous, `P` power sum,
/// `S` Schur, `F` forgotten (`ω` of monomial), and `Pi` — the multiplicative
/// basis built from the hook alternating sums
/// `π_n = Σ_k (−1/qt)^{k−1} s_{(k,1^{n−k})}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    /// Monomial symmetric functions `m_μ`.
    M,
    /// Elementary symmetric functions `e_μ`.
    E,
    /// Complete homogeneous symmetric functions `h_μ`.
    H,
    /// Power sums `p_μ`.
    P,
    /// Schur functions `s_μ`.
    S,
    /// Forgotten symmetric functions `f_μ = ω m_μ`.
    F,
    /// Products `π_μ` of hook alternating sums; coefficients involve `q, t`.
    Pi,
}

impl Basis {
    /// All bases, in the order used by documentation and the CLI.
    pub fn all() -> [Basis; 7] {
        [
            Basis::M,
            Basis::E,
            Basis::H,
            Basis::P,
            Basis::S,
            Basis::F,
            Basis::Pi,
        ]
    }

    /// The short name: `m, e, h, p, s, f, pi`.
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::F => "f",
            Basis::Pi => "pi",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Basis, String> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            "f" => Ok(Basis::F),
            "pi" => Ok(Basis::Pi),
            other => Err(format!("unknown basis `{other}`")),
        }
    }
}

/// A symmetric function: a finite linear combination of basis elements
/// indexed by partitions, with [`ParamRat`] coefficients.
///
/// Values are kept canonical (no zero coefficients). Equality compares
/// `p`-expansions, so elements expressed in different bases compare as
/// mathematical equals:
///
/// ```
/// use symf::symfunc::{Basis, SymFunc};
/// let e2 = SymFunc::e(2);
/// let diff = SymFunc::h(1) * SymFunc::h(1) - SymFunc::h(2);
/// assert_eq!(e2, diff);
/// assert_eq!(e2.convert(Basis::M).to_string(), "m[1,1]");
/// ```
#[derive(Clone, Debug)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, ParamRat>,
}

fn add_into(map: &mut BTreeMap<Partition, ParamRat>, mu: Partition, c: ParamRat) {
    if c.is_zero() {
        return;
    }
    match map.entry(mu) {
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

impl SymFunc {
    /// The zero element (in the `p` basis by convention).
    pub fn zero() -> SymFunc {
        SymFunc {
            basis: Basis::P,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1.
    pub fn one() -> SymFunc {
        SymFunc::constant(ParamRat::one())
    }

    /// A constant (degree-0) element.
    pub fn constant(c: ParamRat) -> SymFunc {
        SymFunc::term(Basis::P, Partition::empty(), c)
    }

    /// The basis element `b_μ`.
    pub fn gen(basis: Basis, mu: &Partition) -> SymFunc {
        SymFunc::term(basis, mu.clone(), ParamRat::one())
    }

    /// A single term `c · b_μ`.
    pub fn term(basis: Basis, mu: Partition, c: ParamRat) -> SymFunc {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, mu, c);
        SymFunc { basis, terms }
    }

    /// Builds an element from a term list, combining duplicates and dropping
    /// zeros.
    pub fn from_terms(
        basis: Basis,
        entries: impl IntoIterator<Item = (Partition, ParamRat)>,
    ) -> SymFunc {
        let mut terms = BTreeMap::new();
        for (mu, c) in entries {
            add_into(&mut terms, mu, c);
        }
        SymFunc { basis, terms }
    }

    /// The elementary symmetric function `e_n`.
    pub fn e(n: u32) -> SymFunc {
        SymFunc::gen(Basis::E, &Partition::new(vec![n]).expect("row"))
    }

    /// The complete homogeneous symmetric function `h_n`.
    pub fn h(n: u32) -> SymFunc {
        SymFunc::gen(Basis::H, &Partition::new(vec![n]).expect("row"))
    }

    /// The power sum `p_n`.
    pub fn p(n: u32) -> SymFunc {
        SymFunc::gen(Basis::P, &Partition::new(vec![n]).expect("row"))
    }

    /// The Schur function `s_μ`.
    pub fn s(mu: &Partition) -> SymFunc {
        SymFunc::gen(Basis::S, mu)
    }

    /// The monomial symmetric function `m_μ`.
    pub fn m(mu: &Partition) -> SymFunc {
        SymFunc::gen(Basis::M, mu)
    }

    /// The hook alternating sum `π_n = Σ_k (−1/qt)^{k−1} s_{(k,1^{n−k})}`.
    pub fn pi(n: u32) -> SymFunc {
        SymFunc::gen(Basis::Pi, &Partition::new(vec![n]).expect("row"))
    }

    /// The basis this element is currently expressed in.
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// The terms, keyed by partition in display order.
    pub fn terms(&self) -> &BTreeMap<Partition, ParamRat> {
        &self.terms
    }

    /// The coefficient of `b_μ` in the current basis (zero if absent).
    pub fn coeff(&self, mu: &Partition) -> ParamRat {
        self.terms.get(mu).cloned().unwrap_or_else(ParamRat::zero)
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The largest degree appearing, or `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Whether all terms share one degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Partition::size);
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    /// The degree-`d` homogeneous component.
    pub fn component(&self, d: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.size() == d)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &ParamRat) -> SymFunc {
        if c.is_zero() {
            return SymFunc {
                basis: self.basis,
                terms: BTreeMap::new(),
            };
        }
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(mu, a)| (mu.clone(), a * c))
                .collect(),
        }
    }

    /// Applies a parameter substitution to every coefficient; errors when a
    /// coefficient has a pole at the binding.
    pub fn substitute(&self, bindings: &[(Param, ParamRat)]) -> Result<SymFunc, ScalarError> {
        let mut terms = BTreeMap::new();
        for (mu, c) in &self.terms {
            add_into(&mut terms, mu.clone(), c.substitute(bindings)?);
        }
        Ok(SymFunc {
            basis: self.basis,
            terms,
        })
    }

    /// The `p`-expansion as a term map.
    pub fn p_terms(&self) -> BTreeMap<Partition, ParamRat> {
        if self.basis == Basis::P {
            return self.terms.clone();
        }
        let mut out = BTreeMap::new();
        for (mu, c) in &self.terms {
            let table = transition(mu.size(), self.basis);
            let i = table.index[mu];
            for (j, entry) in table.to_p[i].iter().enumerate() {
                if !entry.is_zero() {
                    add_into(&mut out, table.parts[j].clone(), c * entry);
                }
            }
        }
        out
    }

    /// Converts to the target basis; the result is the same element of Λ.
    ///
    /// ```
    /// use symf::symfunc::{Basis, SymFunc};
    /// let p22 = SymFunc::p(2) * SymFunc::p(2);
    /// assert_eq!(p22.convert(Basis::M).to_string(), "m[4]+2*m[2,2]");
    /// ```
    pub fn convert(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let p_map = self.p_terms();
        if target == Basis::P {
            return SymFunc {
                basis: Basis::P,
                terms: p_map,
            };
        }
        let mut terms = BTreeMap::new();
        for (lambda, c) in &p_map {
            let table = transition(lambda.size(), target);
            let i = table.index[lambda];
            for (j, entry) in table.from_p[i].iter().enumerate() {
                if !entry.is_zero() {
                    add_into(&mut terms, table.parts[j].clone(), c * entry);
                }
            }
        }
        SymFunc {
            basis: target,
            terms,
        }
    }

    /// The Hall scalar product, determined by `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
    ///
    /// ```
    /// use symf::symfunc::SymFunc;
    /// use symf::scalars::ParamRat;
    /// let h11 = SymFunc::h(1) * SymFunc::h(1);
    /// assert_eq!(h11.hall(&h11), ParamRat::from_int(2));
    /// ```
    pub fn hall(&self, other: &SymFunc) -> ParamRat {
        let left = self.p_terms();
        let right = other.p_terms();
        let mut acc = ParamRat::zero();
        for (mu, a) in &left {
            if let Some(b) = right.get(mu) {
                let z = ParamRat::from_bigint(mu.z());
                acc = acc + a * b * z;
            }
        }
        acc
    }

    /// The involution ω: `p_d ↦ (−1)^{d−1} p_d`; sends `h_μ ↦ e_μ` and
    /// `s_μ ↦ s_{μ'}`.
    pub fn omega(&self) -> SymFunc {
        let mut terms = BTreeMap::new();
        for (mu, c) in self.p_terms() {
            let sign = (mu.size() as i64 - mu.len() as i64) % 2;
            let c = if sign == 0 { c } else { -c };
            terms.insert(mu, c);
        }
        SymFunc {
            basis: Basis::P,
            terms,
        }
    }

    /// The skewing operator `self^⊥` applied to `g`: the Hall adjoint of
    /// multiplication by `self`, realized by `p_k ↦ k ∂/∂p_k`.
    ///
    /// ```
    /// use symf::symfunc::SymFunc;
    /// let inner = SymFunc::p(2).skew(&(SymFunc::p(2) * SymFunc::p(1)));
    /// assert_eq!(inner, SymFunc::p(1) * SymFunc::constant(2.into()));
    /// ```
    pub fn skew(&self, g: &SymFunc) -> SymFunc {
        let mut out = BTreeMap::new();
        let g_terms = g.p_terms();
        for (lambda, a) in self.p_terms() {
            for (mu, b) in &g_terms {
                if let Some((rest, factor)) = remove_parts(mu, &lambda) {
                    let c = &a * b * factor;
                    add_into(&mut out, rest, c);
                }
            }
        }
        SymFunc {
            basis: Basis::P,
            terms: out,
        }
    }

    /// The Kronecker product, determined by `p_λ * p_λ = z_λ p_λ` with
    /// orthogonal cross terms; `h_n` acts as identity on Λ_n.
    pub fn kronecker(&self, other: &SymFunc) -> SymFunc {
        let left = self.p_terms();
        let right = other.p_terms();
        let mut terms = BTreeMap::new();
        for (mu, a) in &left {
            if let Some(b) = right.get(mu) {
                let z = ParamRat::from_bigint(mu.z());
                add_into(&mut terms, mu.clone(), a * b * z);
            }
        }
        SymFunc {
            basis: Basis::P,
            terms,
        }
    }

    /// Whether every Schur coefficient lies in ℕ[q,t] (nonnegative integer
    /// polynomial coefficients).
    pub fn is_schur_positive(&self) -> bool {
        self.schur_negativity_witness().is_none()
    }

    /// A witness against Schur positivity: the first (in display order)
    /// Schur term whose coefficient is not a nonnegative-integer polynomial,
    /// or `None` when the element is Schur positive.
    ///
    /// ```
    /// use symf::symfunc::SymFunc;
    /// use symf::shapes::Partition;
    /// let (mu, c) = SymFunc::p(2).schur_negativity_witness().unwrap();
    /// assert_eq!(mu, Partition::of(&[1, 1]));
    /// assert_eq!(c, (-1).into());
    /// ```
    pub fn schur_negativity_witness(&self) -> Option<(Partition, ParamRat)> {
        let in_s = self.convert(Basis::S);
        for (mu, c) in &in_s.terms {
            if !c.is_nonnegative_integer_polynomial() {
                return Some((mu.clone(), c.clone()));
            }
        }
        None
    }
}

/// Removes the parts of `lambda` from the part multiset of `mu`, returning
/// the remaining partition and the factor `∏ λ_i · (falling multiplicities)`
/// produced by the derivation `p_k ↦ k ∂/∂p_k`; `None` when `lambda ⊄ mu`
/// as a multiset.
fn remove_parts(mu: &Partition, lambda: &Partition) -> Option<(Partition, ParamRat)> {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &part in mu.parts() {
        *counts.entry(part).or_insert(0) += 1;
    }
    let mut factor = BigInt::one();
    for &part in lambda.parts() {
        let avail = counts.get_mut(&part)?;
        if *avail == 0 {
            return None;
        }
        factor *= BigInt::from(part) * BigInt::from(*avail);
        *avail -= 1;
    }
    let mut rest: Vec<u32> = Vec::new();
    for (&part, &count) in counts.iter().rev() {
        for _ in 0..count {
            rest.push(part);
        }
    }
    Some((
        Partition::new(rest).expect("sorted"),
        ParamRat::from_bigint(factor),
    ))
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

impl PartialEq for SymFunc {
    /// Mathematical equality: equal `p`-expansions.
    fn eq(&self, other: &SymFunc) -> bool {
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.p_terms() == other.p_terms()
    }
}

impl SymFunc {
    fn add_impl(&self, other: &SymFunc) -> SymFunc {
        if self.basis == other.basis {
            let mut terms = self.terms.clone();
            for (mu, c) in &other.terms {
                add_into(&mut terms, mu.clone(), c.clone());
            }
            return SymFunc {
                basis: self.basis,
                terms,
            };
        }
        let mut terms = self.p_terms();
        for (mu, c) in other.p_terms() {
            add_into(&mut terms, mu, c);
        }
        SymFunc {
            basis: Basis::P,
            terms,
        }
    }

    fn mul_impl(&self, other: &SymFunc) -> SymFunc {
        let left = self.p_terms();
        let right = other.p_terms();
        let mut terms = BTreeMap::new();
        for (lam, a) in &left {
            for (mu, b) in &right {
                let mut parts: Vec<u32> = lam.parts().to_vec();
                parts.extend_from_slice(mu.parts());
                parts.sort_unstable_by(|x, y| y.cmp(x));
                add_into(
                    &mut terms,
                    Partition::new(parts).expect("sorted"),
                    a * b,
                );
            }
        }
        SymFunc {
            basis: Basis::P,
            terms,
        }
    }
}

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.clone(), -c))
                .collect(),
        }
    }
}

impl std::ops::Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

macro_rules! forward_symfunc_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl std::ops::$trait<&SymFunc> for &SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: &SymFunc) -> SymFunc {
                self.$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: SymFunc) -> SymFunc {
                self.$impl_fn(&rhs)
            }
        }
        impl std::ops::$trait<&SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: &SymFunc) -> SymFunc {
                self.$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<SymFunc> for &SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: SymFunc) -> SymFunc {
                self.$impl_fn(&rhs)
            }
        }
    };
}

impl SymFunc {
    fn sub_impl(&self, other: &SymFunc) -> SymFunc {
        self.add_impl(&-other)
    }
}

forward_symfunc_binop!(Add, add, add_impl);
forward_symfunc_binop!(Sub, sub, sub_impl);
forward_symfunc_binop!(Mul, mul, mul_impl);

impl std::ops::Mul<&ParamRat> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &ParamRat) -> SymFunc {
        self.scale(rhs)
    }
}

impl std::ops::Mul<ParamRat> for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: ParamRat) -> SymFunc {
        self.scale(&rhs)
    }
}

// ---------------------------------------------------------------------------
// Display
// ---------------------------------------------------------------------------

/// Renders a coefficient for use as a multiplicative prefix, wrapping
/// composite expressions in parentheses.
fn render_symfunc_coeff(c: &ParamRat) -> String {
    let text = c.to_string();
    let composite = text.contains(['+', '/']) || text[1..].contains('-');
    if composite {
        format!("({text})")
    } else {
        text
    }
}

impl fmt::Display for SymFunc {
    /// Canonical text: terms `coeff*basis[parts]` joined by `+`, negative
    /// atomic coefficients folding into the sign, e.g. `(q^2+q)*s[2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mu, c) in &self.terms {
            let term = if mu.is_empty() {
                render_symfunc_coeff(c)
            } else {
                let parts: Vec<String> = mu.parts().iter().map(|p| p.to_string()).collect();
                let name = format!("{}[{}]", self.basis, parts.join(","));
                if c.is_one() {
                    name
                } else if (-c).is_one() {
                    format!("-{name}")
                } else {
                    format!("{}*{}", render_symfunc_coeff(c), name)
                }
            };
            if first {
                first = false;
            } else if !term.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&term)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Transition tables
// ---------------------------------------------------------------------------

struct Transition {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `to_p[i][j]`: coefficient of `p_{parts[j]}` in `basis_{parts[i]}`.
    to_p: Vec<Vec<ParamRat>>,
    /// `from_p[i][j]`: coefficient of `basis_{parts[j]}` in `p_{parts[i]}`.
    from_p: Vec<Vec<ParamRat>>,
}

static TRANSITIONS: Lazy<Mutex<HashMap<(u32, Basis), Arc<Transition>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn transition(d: u32, basis: Basis) -> Arc<Transition> {
    if let Some(hit) = TRANSITIONS.lock().expect("cache lock").get(&(d, basis)) {
        return Arc::clone(hit);
    }
    let table = Arc::new(build_transition(d, basis));
    TRANSITIONS
        .lock()
        .expect("cache lock")
        .entry((d, basis))
        .or_insert(table)
        .clone()
}

fn inverse_big(z: BigInt) -> ParamRat {
    ParamRat::from_rational(BigRational::new(BigInt::one(), z))
}

fn build_transition(d: u32, basis: Basis) -> Transition {
    let parts = enumerate_partitions(d, None, None);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, mu)| (mu.clone(), i))
        .collect();
    let n = parts.len();
    let dense = |map: &HashMap<Partition, ParamRat>| -> Vec<ParamRat> {
        let mut row = vec![ParamRat::zero(); n];
        for (mu, c) in map {
            row[index[mu]] = c.clone();
        }
        row
    };
    let (to_p, from_p) = match basis {
        Basis::P => {
            let id: Vec<Vec<ParamRat>> = (0..n)
                .map(|i| {
                    let mut row = vec![ParamRat::zero(); n];
                    row[i] = ParamRat::one();
                    row
                })
                .collect();
            (id.clone(), id)
        }
        Basis::H => {
            let to_p = parts
                .iter()
                .map(|mu| dense(&product_expansion(mu, h_single_in_p)))
                .collect();
            let from_p = parts
                .iter()
                .map(|lam| dense(&p_lambda_in(lam, p_single_in_h)))
                .collect();
            (to_p, from_p)
        }
        Basis::E => {
            let to_p = parts
                .iter()
                .map(|mu| dense(&product_expansion(mu, e_single_in_p)))
                .collect();
            let from_p = parts
                .iter()
                .map(|lam| dense(&p_lambda_in(lam, p_single_in_e)))
                .collect();
            (to_p, from_p)
        }
        Basis::S => {
            let mut memo = HashMap::new();
            let to_p = parts
                .iter()
                .map(|mu| {
                    let mut row = vec![ParamRat::zero(); n];
                    for (j, lam) in parts.iter().enumerate() {
                        let chi = character(mu, lam, &mut memo);
                        if chi != 0 {
                            row[j] = ParamRat::from_int(chi) * inverse_big(lam.z());
                        }
                    }
                    row
                })
                .collect();
            let from_p = parts
                .iter()
                .map(|lam| {
                    let mut row = vec![ParamRat::zero(); n];
                    for (j, mu) in parts.iter().enumerate() {
                        let chi = character(mu, lam, &mut memo);
                        if chi != 0 {
                            row[j] = ParamRat::from_int(chi);
                        }
                    }
                    row
                })
                .collect();
            (to_p, from_p)
        }
        Basis::M => {
            // m_μ = Σ_λ L_{λμ} p_λ / z_λ with L the p-in-h matrix, by the
            // duality ⟨h_λ, m_μ⟩ = δ; p_λ = Σ_μ R_{λμ} m_μ by direct
            // monomial expansion.
            let h_table = transition(d, Basis::H);
            let to_p = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| &h_table.from_p[j][i] * inverse_big(parts[j].z()))
                        .collect()
                })
                .collect();
            let from_p = parts
                .iter()
                .map(|lam| {
                    (0..n)
                        .map(|j| ParamRat::from_bigint(monomial_count(lam, &parts[j])))
                        .collect()
                })
                .collect();
            (to_p, from_p)
        }
        Basis::F => {
            // f_μ = ω m_μ: conjugate the monomial data by the sign of ω on
            // each p_λ.
            let m_table = transition(d, Basis::M);
            let sign = |lam: &Partition| -> bool { (lam.size() - lam.len() as u32) % 2 == 1 };
            let apply = |row: &[ParamRat], by_row: bool, i: usize| -> Vec<ParamRat> {
                row.iter()
                    .enumerate()
                    .map(|(j, c)| {
                        let lam = if by_row { &parts[i] } else { &parts[j] };
                        if sign(lam) {
                            -c
                        } else {
                            c.clone()
                        }
                    })
                    .collect()
            };
            let to_p = (0..n)
                .map(|i| apply(&m_table.to_p[i], false, i))
                .collect();
            let from_p = (0..n)
                .map(|i| apply(&m_table.from_p[i], true, i))
                .collect();
            (to_p, from_p)
        }
        Basis::Pi => {
            let to_p: Vec<Vec<ParamRat>> = parts
                .iter()
                .map(|mu| dense(&product_expansion(mu, pi_single_in_p)))
                .collect();
            // Solving Σ_i c_i π_{parts[i]} = p_λ: columns of the inverse of
            // the to_p matrix (as rows here).
            let matrix: Vec<Vec<ParamRat>> = (0..n)
                .map(|row| (0..n).map(|col| to_p[col][row].clone()).collect())
                .collect();
            let inv = linalg::invert(&matrix).expect("pi transition is invertible");
            let from_p = (0..n)
                .map(|lam| (0..n).map(|j| inv[j][lam].clone()).collect())
                .collect();
            (to_p, from_p)
        }
    };
    Transition {
        parts,
        index,
        to_p,
        from_p,
    }
}

/// `h_k = Σ_{λ⊢k} p_λ / z_λ`.
fn h_single_in_p(k: u32) -> HashMap<Partition, ParamRat> {
    enumerate_partitions(k, None, None)
        .into_iter()
        .map(|lam| {
            let z = inverse_big(lam.z());
            (lam, z)
        })
        .collect()
}

/// `e_k = Σ_{λ⊢k} (−1)^{k−ℓ(λ)} p_λ / z_λ`.
fn e_single_in_p(k: u32) -> HashMap<Partition, ParamRat> {
    enumerate_partitions(k, None, None)
        .into_iter()
        .map(|lam| {
            let mut c = inverse_big(lam.z());
            if (k - lam.len() as u32) % 2 == 1 {
                c = -c;
            }
            (lam, c)
        })
        .collect()
}

/// `π_k = Σ_{r=1}^{k} (−1/qt)^{r−1} s_{(r,1^{k−r})}` expanded into `p`.
fn pi_single_in_p(k: u32) -> HashMap<Partition, ParamRat> {
    if k == 0 {
        return HashMap::from([(Partition::empty(), ParamRat::one())]);
    }
    let minus_inv_qt = -(ParamRat::one()
        .try_div(&(ParamRat::monomial(&[(Param::Q, 1), (Param::T, 1)])))
        .expect("qt nonzero"));
    let mut acc = SymFunc::zero();
    let mut weight = ParamRat::one();
    for r in 1..=k {
        let mut hook = vec![r];
        hook.extend(std::iter::repeat(1).take((k - r) as usize));
        let mu = Partition::new(hook).expect("hook");
        acc = acc + SymFunc::term(Basis::S, mu, weight.clone());
        weight = &weight * &minus_inv_qt;
    }
    acc.p_terms().into_iter().collect()
}

/// The `p`-expansion of a product `∏ single(μ_i)` of one-part expansions.
fn product_expansion(
    mu: &Partition,
    single: fn(u32) -> HashMap<Partition, ParamRat>,
) -> HashMap<Partition, ParamRat> {
    let mut acc: HashMap<Partition, ParamRat> =
        HashMap::from([(Partition::empty(), ParamRat::one())]);
    for &part in mu.parts() {
        let factor = single(part);
        let mut next: HashMap<Partition, ParamRat> = HashMap::new();
        for (lam, a) in &acc {
            for (rho, b) in &factor {
                let mut parts: Vec<u32> = lam.parts().to_vec();
                parts.extend_from_slice(rho.parts());
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let key = Partition::new(parts).expect("sorted");
                let c = a * b;
                match next.entry(key) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() = slot.get() + &c;
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// The expansion of `p_λ` in a multiplicative basis, given the expansion of
/// each single `p_k` as a map from basis partitions to coefficients.
fn p_lambda_in(
    lam: &Partition,
    single: fn(u32) -> HashMap<Partition, ParamRat>,
) -> HashMap<Partition, ParamRat> {
    product_expansion(lam, single)
}

/// `p_k` in the `h` basis, by the Newton recurrence
/// `p_d = d·h_d − Σ_{r<d} p_r h_{d−r}`.
fn p_single_in_h(k: u32) -> HashMap<Partition, ParamRat> {
    fn build(k: u32, memo: &mut Vec<HashMap<Partition, ParamRat>>) {
        while memo.len() <= k as usize {
            let d = memo.len() as u32;
            if d == 0 {
                memo.push(HashMap::from([(Partition::empty(), ParamRat::one())]));
                continue;
            }
            let mut acc: HashMap<Partition, ParamRat> = HashMap::new();
            let row = Partition::new(vec![d]).expect("row");
            acc.insert(row, ParamRat::from_int(d as i64));
            for r in 1..d {
                let lower = memo[r as usize].clone();
                for (mu, c) in lower {
                    let mut parts = mu.parts().to_vec();
                    parts.push(d - r);
                    parts.sort_unstable_by(|x, y| y.cmp(x));
                    let key = Partition::new(parts).expect("sorted");
                    let c = -c;
                    match acc.entry(key) {
                        std::collections::hash_map::Entry::Vacant(slot) => {
                            slot.insert(c);
                        }
                        std::collections::hash_map::Entry::Occupied(mut slot) => {
                            *slot.get_mut() = slot.get() + &c;
                        }
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            memo.push(acc);
        }
    }
    let mut memo = Vec::new();
    build(k, &mut memo);
    memo.swap_remove(k as usize)
}

/// `p_k` in the `e` basis, via ω: if `p_k = Σ c_μ h_μ` then
/// `p_k = (−1)^{k−1} Σ c_μ e_μ`.
fn p_single_in_e(k: u32) -> HashMap<Partition, ParamRat> {
    p_single_in_h(k)
        .into_iter()
        .map(|(mu, c)| {
            let c = if k % 2 == 0 { -c } else { c };
            (mu, c)
        })
        .collect()
}

/// The symmetric group character `χ^μ_λ` by the Murnaghan–Nakayama rule,
/// computed on first-column hook lengths.
fn character(
    mu: &Partition,
    lam: &Partition,
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if lam.is_empty() {
        return i64::from(mu.is_empty());
    }
    let key = (mu.parts().to_vec(), lam.parts().to_vec());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let r = lam.part(0);
    let rest = Partition::new(lam.parts()[1..].to_vec()).expect("tail");
    let ell = mu.len() as u32;
    let beta: Vec<u32> = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + ell - 1 - i as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let crossings = beta
            .iter()
            .enumerate()
            .filter(|&(j, &other)| j != i && target < other && other < b)
            .count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(idx, &val)| val - (ell - 1 - idx as u32))
            .collect();
        let smaller = Partition::new(parts).expect("beta set is strictly decreasing");
        let sub = character(&smaller, &rest, memo);
        if crossings % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total);
    total
}

/// The coefficient of `m_μ` in `p_λ`: assignments of the parts of `λ`
/// (as distinguishable instances) to the rows of `μ` with prescribed sums.
fn monomial_count(lam: &Partition, mu: &Partition) -> BigInt {
    fn recurse(remaining: &mut BTreeMap<u32, u32>, blocks: &[u32]) -> BigInt {
        let Some((&target, rest_blocks)) = blocks.split_first() else {
            return if remaining.values().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::from(0u32)
            };
        };
        // Choose a sub-multiset of `remaining` with sum `target`, weighting
        // by the number of ways to pick the instances.
        let values: Vec<u32> = remaining.keys().copied().collect();
        fn choose(
            values: &[u32],
            idx: usize,
            target: u32,
            weight: BigInt,
            remaining: &mut BTreeMap<u32, u32>,
            rest_blocks: &[u32],
        ) -> BigInt {
            if target == 0 {
                return weight * recurse(remaining, rest_blocks);
            }
            if idx == values.len() {
                return BigInt::from(0u32);
            }
            let v = values[idx];
            let avail = remaining[&v];
            let max_take = (target / v).min(avail);
            let mut total = BigInt::from(0u32);
            for take in 0..=max_take {
                if take > 0 && v * take > target {
                    break;
                }
                let mut ways = BigInt::one();
                for k in 0..take {
                    ways *= BigInt::from(avail - k);
                }
                for k in 1..=take {
                    ways /= BigInt::from(k);
                }
                *remaining.get_mut(&v).expect("present") = avail - take;
                total += choose(
                    values,
                    idx + 1,
                    target - v * take,
                    weight.clone() * ways,
                    remaining,
                    rest_blocks,
                );
                *remaining.get_mut(&v).expect("present") = avail;
            }
            total
        }
        choose(&values, 0, target, BigInt::one(), remaining, rest_blocks)
    }
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in lam.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    recurse(&mut counts, mu.parts())
}

// ---------------------------------------------------------------------------
// Jacobi–Trudi and Pieri
// ---------------------------------------------------------------------------

/// The Jacobi–Trudi determinant: `s_μ = det(h_{μ_i+j−i})` in the `h` basis,
/// or the dual `s_{μ'} = det(e_{μ_i+j−i})` in the `e` basis, with
/// `h_k = e_k = 0` for `k < 0`.
///
/// ```
/// use symf::symfunc::{jacobi_trudi, SymFunc};
/// use symf::shapes::Partition;
/// let s21 = jacobi_trudi(&Partition::of(&[2, 1]), false);
/// assert_eq!(s21.to_string(), "-h[3]+h[2,1]");
/// assert_eq!(s21, SymFunc::s(&Partition::of(&[2, 1])));
/// ```
pub fn jacobi_trudi(mu: &Partition, dual: bool) -> SymFunc {
    let basis = if dual { Basis::E } else { Basis::H };
    let shape = if dual { mu.conjugate() } else { mu.clone() };
    let ell = shape.len();
    if ell == 0 {
        return SymFunc::one();
    }
    let mut terms: BTreeMap<Partition, ParamRat> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..ell).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut indices: Vec<u32> = Vec::with_capacity(ell);
        for (i, &j) in perm.iter().enumerate() {
            let value = shape.part(i) as i64 + j as i64 - i as i64;
            if value < 0 {
                return;
            }
            if value > 0 {
                indices.push(value as u32);
            }
        }
        indices.sort_unstable_by(|x, y| y.cmp(x));
        let key = Partition::new(indices).expect("sorted");
        let c = if sign { ParamRat::one() } else { -ParamRat::one() };
        add_into(&mut terms, key, c);
    });
    SymFunc { basis, terms }
}

/// Calls `visit(permutation, is_even)` for every permutation of `perm[k..]`.
fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], bool)) {
    fn run(perm: &mut Vec<usize>, k: usize, parity: bool, visit: &mut impl FnMut(&[usize], bool)) {
        if k + 1 >= perm.len() {
            visit(perm, parity);
            return;
        }
        run(perm, k + 1, parity, visit);
        for i in k + 1..perm.len() {
            perm.swap(k, i);
            run(perm, k + 1, !parity, visit);
            perm.swap(k, i);
        }
    }
    run(perm, k, true, visit);
}

/// The product `s_μ · s_ν` computed without power sums: `s_ν` is expanded by
/// Jacobi–Trudi into signed `h` words, and each `h_k` is applied to the
/// Schur expansion through the Pieri rule (horizontal strips).
pub fn schur_product_pieri(mu: &Partition, nu: &Partition) -> SymFunc {
    let ell = nu.len();
    if ell == 0 {
        return SymFunc::s(mu);
    }
    let mut acc: BTreeMap<Partition, ParamRat> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..ell).collect();
    permute(&mut perm, 0, &mut |perm, even| {
        let mut word: Vec<u32> = Vec::with_capacity(ell);
        for (i, &j) in perm.iter().enumerate() {
            let value = nu.part(i) as i64 + j as i64 - i as i64;
            if value < 0 {
                return;
            }
            if value > 0 {
                word.push(value as u32);
            }
        }
        let mut state: BTreeMap<Partition, ParamRat> = BTreeMap::new();
        state.insert(
            mu.clone(),
            if even {
                ParamRat::one()
            } else {
                -ParamRat::one()
            },
        );
        for &k in &word {
            let mut next: BTreeMap<Partition, ParamRat> = BTreeMap::new();
            for (lam, c) in &state {
                for bigger in horizontal_strip_extensions(lam, k) {
                    add_into(&mut next, bigger, c.clone());
                }
            }
            state = next;
        }
        for (lam, c) in state {
            add_into(&mut acc, lam, c);
        }
    });
    SymFunc {
        basis: Basis::S,
        terms: acc,
    }
}

/// All partitions `ρ ⊇ λ` with `|ρ| = |λ| + k` such that `ρ/λ` is a
/// horizontal strip (the Pieri rule for multiplication by `h_k`).
fn horizontal_strip_extensions(lam: &Partition, k: u32) -> Vec<Partition> {
    let rows = lam.len() + 1;
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(rows);
    fn recurse(
        lam: &Partition,
        row: usize,
        rows: usize,
        left: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(current.clone()).expect("interleaved"));
            }
            return;
        }
        // ρ_row ranges over [λ_row, λ_{row−1}] (unbounded above for row 0),
        // adding ρ_row − λ_row cells.
        let base = lam.part(row);
        let cap = if row == 0 {
            base + left
        } else {
            lam.part(row - 1).min(base + left)
        };
        for value in (base..=cap).rev() {
            current.push(value);
            recurse(lam, row + 1, rows, left - (value - base), current, out);
            current.pop();
        }
    }
    recurse(lam, 0, rows, k, &mut current, &mut out);
    out
}

//! Exact arithmetic in ℚ and in the rational-function field of the formal
//! parameters.
//!
//! Provides:
//!
//! * [`Param`] — the named formal parameters (`q`, `t`, `u`, plus scratch
//!   parameters used by alphabet encodings).
//! * [`ParamRat`] — a reduced ratio of sparse multivariate polynomials with
//!   arbitrary-precision rational coefficients; the coefficient field used by
//!   every other module.
//! * [`ScalarError`] — division by zero, poles under substitution, and
//!   non-exact polynomial division, reported distinctly.
//!
//! Every value is kept canonical eagerly: numerator and denominator are
//! reduced by their polynomial gcd and the denominator is an integer-primitive
//! polynomial with positive leading coefficient in degree-lexicographic
//! order. Equality of values is therefore structural equality.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Number of formal parameters a [`ParamRat`] may mention.
pub const PARAM_COUNT: usize = 14;

const PARAM_NAMES: [&str; PARAM_COUNT] = [
    "q", "t", "u", "z", "v", "w", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4",
];

/// A named formal parameter of the coefficient field.
///
/// The primary parameters are [`Param::Q`], [`Param::T`], [`Param::U`]; the
/// remaining names (`z`, `v`, `w`, `x1..x4`, `y1..y4`) are scratch parameters
/// used to encode finite alphabets and fresh variables in identities such as
/// homogeneity checks or two-alphabet addition formulas.
///
/// ```
/// use symf::scalars::Param;
/// assert_eq!(Param::Q.name(), "q");
/// assert_eq!(Param::from_name("x3"), Some(Param::x(3)));
/// assert_eq!(Param::from_name("nope"), None);
/// ```
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Param(u8);

impl Param {
    /// The parameter `q`.
    pub const Q: Param = Param(0);
    /// The parameter `t`.
    pub const T: Param = Param(1);
    /// The parameter `u`, e.g. as the alphabet `1 − u` in hook product formulas.
    pub const U: Param = Param(2);
    /// The scratch parameter `z` (fresh scalar in homogeneity tests, series variable).
    pub const Z: Param = Param(3);
    /// The scratch parameter `v`.
    pub const V: Param = Param(4);
    /// The scratch parameter `w`.
    pub const W: Param = Param(5);

    /// The finite-alphabet letter `xi`, `i ∈ 1..=4`.
    ///
    /// Panics when `i` is out of range.
    pub fn x(i: usize) -> Param {
        assert!((1..=4).contains(&i), "x{i} is not a parameter");
        Param(5 + i as u8)
    }

    /// The finite-alphabet letter `yi`, `i ∈ 1..=4`.
    ///
    /// Panics when `i` is out of range.
    pub fn y(i: usize) -> Param {
        assert!((1..=4).contains(&i), "y{i} is not a parameter");
        Param(9 + i as u8)
    }

    /// The printed name of the parameter.
    pub fn name(self) -> &'static str {
        PARAM_NAMES[self.0 as usize]
    }

    /// Looks a parameter up by its printed name.
    pub fn from_name(name: &str) -> Option<Param> {
        PARAM_NAMES
            .iter()
            .position(|&n| n == name)
            .map(|i| Param(i as u8))
    }

    /// All parameters, in rendering order (`q` first).
    pub fn all() -> impl Iterator<Item = Param> {
        (0..PARAM_COUNT as u8).map(Param)
    }

    fn index(self) -> usize {
        self.0 as usize
    }
}

/// Errors produced by scalar arithmetic.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ScalarError {
    /// Division by the zero rational function.
    #[error("division by zero")]
    DivisionByZero,
    /// A substitution made a denominator vanish.
    #[error("substitution produced a zero denominator")]
    Pole,
    /// `divide_exact` was asked for a quotient that does not exist.
    #[error("non-exact polynomial division")]
    NonExact,
    /// An operation requiring polynomials received a proper rational function.
    #[error("operand is not a polynomial")]
    NotPolynomial,
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

type Exp = [u16; PARAM_COUNT];

const ZERO_EXP: Exp = [0; PARAM_COUNT];

/// Lexicographic order with `q` the most significant parameter, so displayed
/// sums lead with the highest `q`-power.
fn lex(a: &Exp, b: &Exp) -> Ordering {
    a.cmp(b)
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Sparse multivariate polynomial over ℚ.
///
/// Terms are kept sorted in strictly decreasing lexicographic order and
/// never carry zero coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Poly {
    terms: Vec<(Exp, BigRational)>,
}

impl Poly {
    pub(crate) fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub(crate) fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub(crate) fn constant(c: BigRational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(ZERO_EXP, c)],
            }
        }
    }

    pub(crate) fn var(p: Param) -> Poly {
        let mut e = ZERO_EXP;
        e[p.index()] = 1;
        Poly {
            terms: vec![(e, BigRational::one())],
        }
    }

    fn monomial(e: Exp, c: BigRational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    fn from_map(map: HashMap<Exp, BigRational>) -> Poly {
        let mut terms: Vec<(Exp, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| lex(&b.0, &a.0));
        Poly { terms }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ZERO_EXP)
    }

    fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Leading term in the lexicographic order.
    fn lt(&self) -> (&Exp, &BigRational) {
        let (e, c) = &self.terms[0];
        (e, c)
    }

    fn add(&self, other: &Poly) -> Poly {
        // Merge two sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match lex(&other.terms[j].0, &self.terms[i].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        let mut map: HashMap<Exp, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (k, x) in eb.iter().enumerate() {
                    e[k] += x;
                }
                let c = ca * cb;
                match map.entry(e) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        Poly::from_map(map)
    }

    fn mul_term(&self, e: &Exp, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(te, tc)| {
                    let mut ne = *te;
                    for (k, x) in e.iter().enumerate() {
                        ne[k] += x;
                    }
                    (ne, tc * c)
                })
                .collect(),
        }
    }

    fn mul_scalar(&self, c: &BigRational) -> Poly {
        self.mul_term(&ZERO_EXP, c)
    }

    /// Raises every parameter to the `k`-th power.
    fn adams(&self, k: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = *e;
                    for x in ne.iter_mut() {
                        *x = (*x as u32 * k)
                            .try_into()
                            .expect("exponent overflow in adams");
                    }
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Exact polynomial quotient `self / g`, or `None` when `g ∤ self`.
    fn divide_exact(&self, g: &Poly) -> Option<Poly> {
        assert!(!g.is_zero(), "exact division by the zero polynomial");
        let mut r = self.clone();
        let mut q_terms: Vec<(Exp, BigRational)> = Vec::new();
        let (ge, gc) = (g.terms[0].0, g.terms[0].1.clone());
        while !r.is_zero() {
            let (re, rc) = r.lt();
            let mut me = *re;
            for (k, x) in ge.iter().enumerate() {
                if me[k] < *x {
                    return None;
                }
                me[k] -= x;
            }
            let mc = rc / &gc;
            r = r.sub(&g.mul_term(&me, &mc));
            q_terms.push((me, mc));
        }
        // Quotient terms were produced in strictly decreasing lexicographic order.
        Some(Poly { terms: q_terms })
    }

    /// Bitmask of parameters that occur with a positive exponent.
    fn vars_used(&self) -> u32 {
        let mut mask = 0u32;
        for (e, _) in &self.terms {
            for (k, x) in e.iter().enumerate() {
                if *x > 0 {
                    mask |= 1 << k;
                }
            }
        }
        mask
    }

    fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    /// Splits into `(rational content, integer-primitive part)` where the
    /// primitive part has integer coefficients with gcd 1 and a positive
    /// leading coefficient; `self = content × primitive`.
    fn primitive_parts(&self) -> (BigRational, Poly) {
        if self.is_zero() {
            return (BigRational::zero(), Poly::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let prim = Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c / &content))
                .collect(),
        };
        (content, prim)
    }

    /// Polynomial gcd, returned integer-primitive with positive leading
    /// coefficient; `gcd(0,0) = 0`.
    fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return if b.is_zero() {
                Poly::zero()
            } else {
                b.primitive_parts().1
            };
        }
        if b.is_zero() {
            return a.primitive_parts().1;
        }
        let (_, pa) = a.primitive_parts();
        let (_, pb) = b.primitive_parts();
        if pa == pb {
            return pa;
        }
        // Common monomial factor.
        let mono = |p: &Poly| {
            let mut m = p.terms[0].0;
            for (e, _) in &p.terms {
                for k in 0..PARAM_COUNT {
                    m[k] = m[k].min(e[k]);
                }
            }
            m
        };
        let (ma, mb) = (mono(&pa), mono(&pb));
        let mut common = ZERO_EXP;
        for k in 0..PARAM_COUNT {
            common[k] = ma[k].min(mb[k]);
        }
        let strip = |p: &Poly, m: &Exp| {
            Poly {
                terms: p
                    .terms
                    .iter()
                    .map(|(e, c)| {
                        let mut ne = *e;
                        for k in 0..PARAM_COUNT {
                            ne[k] -= m[k];
                        }
                        (ne, c.clone())
                    })
                    .collect(),
            }
        };
        let sa = strip(&pa, &ma);
        let sb = strip(&pb, &mb);
        let core = Poly::gcd_stripped(&sa, &sb);
        core.mul_term(&common, &BigRational::one())
    }

    /// Gcd of primitive polynomials whose per-variable minimum exponents are 0.
    fn gcd_stripped(a: &Poly, b: &Poly) -> Poly {
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        let shared = a.vars_used() & b.vars_used();
        if shared == 0 {
            return Poly::one();
        }
        // Fast paths: one divides the other.
        if a.terms.len() <= b.terms.len() {
            if b.divide_exact(a).is_some() {
                return a.primitive_parts().1;
            }
        } else if a.divide_exact(b).is_some() {
            return b.primitive_parts().1;
        }
        // Main variable: the shared one of least maximal degree.
        let v = (0..PARAM_COUNT)
            .filter(|k| shared & (1 << k) != 0)
            .min_by_key(|&k| a.degree_in(k).max(b.degree_in(k)))
            .expect("shared variable exists");
        let ca = a.coeffs_in(v);
        let cb = b.coeffs_in(v);
        let cont_a = Poly::content_of(&ca);
        let cont_b = Poly::content_of(&cb);
        let pa: Vec<Poly> = ca
            .iter()
            .map(|c| c.divide_exact(&cont_a).expect("content divides"))
            .collect();
        let pb: Vec<Poly> = cb
            .iter()
            .map(|c| c.divide_exact(&cont_b).expect("content divides"))
            .collect();
        let cont_gcd = Poly::gcd(&cont_a, &cont_b);
        let pp_gcd = Poly::subresultant_prs(pa, pb, v);
        let (_, pp_prim) = pp_gcd.primitive_parts();
        let cs = pp_prim.coeffs_in(v);
        let inner = Poly::content_of(&cs);
        let pp_final = pp_prim.divide_exact(&inner).expect("content divides");
        let g = cont_gcd.mul(&pp_final);
        g.primitive_parts().1
    }

    /// Coefficient list of `self` viewed as a polynomial in variable `v`;
    /// index = power of `v`, entries free of `v`.
    fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out: Vec<HashMap<Exp, BigRational>> = vec![HashMap::new(); d + 1];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            let mut ne = *e;
            ne[v] = 0;
            out[k].insert(ne, c.clone());
        }
        out.into_iter().map(Poly::from_map).collect()
    }

    fn from_coeffs(cs: &[Poly], v: usize) -> Poly {
        let mut acc = Poly::zero();
        for (k, c) in cs.iter().enumerate() {
            let mut e = ZERO_EXP;
            e[v] = k as u16;
            acc = acc.add(&c.mul_term(&e, &BigRational::one()));
        }
        acc
    }

    /// Gcd over the coefficient list (recursive multivariate gcd).
    fn content_of(cs: &[Poly]) -> Poly {
        let mut g = Poly::zero();
        for c in cs {
            g = Poly::gcd(&g, c);
            if g.as_constant().map(|c| c.is_one()) == Some(true) {
                break;
            }
        }
        g
    }

    /// Subresultant pseudo-remainder sequence on primitive inputs, main
    /// variable `v`. Only exact divisions occur inside the loop, which keeps
    /// coefficient growth polynomial instead of the exponential blowup of a
    /// naive remainder sequence.
    fn subresultant_prs(mut f: Vec<Poly>, mut g: Vec<Poly>, v: usize) -> Poly {
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        let mut lead = Poly::one();
        let mut h = Poly::one();
        loop {
            let delta = f.len() - g.len();
            let r = Poly::prem(&f, &g, delta);
            if r.iter().all(Poly::is_zero) {
                return Poly::from_coeffs(&g, v);
            }
            if r.len() == 1 {
                // Nonzero constant in `v`: the primitive parts are coprime.
                return Poly::one();
            }
            let mut divisor = lead.clone();
            for _ in 0..delta {
                divisor = divisor.mul(&h);
            }
            let next: Vec<Poly> = r
                .iter()
                .map(|c| c.divide_exact(&divisor).expect("subresultant division exact"))
                .collect();
            f = g;
            lead = f.last().expect("nonempty").clone();
            if delta >= 1 {
                // h ← lead^δ / h^{δ−1}, an exact division in the coefficient ring.
                let mut num = Poly::one();
                for _ in 0..delta {
                    num = num.mul(&lead);
                }
                let mut den = Poly::one();
                for _ in 0..delta - 1 {
                    den = den.mul(&h);
                }
                h = num.divide_exact(&den).expect("subresultant h-update exact");
            }
            g = next;
        }
    }

    /// Pseudo-remainder of `f` by `g` scaled so that
    /// `lc(g)^{δ+1}·f = q·g + r` exactly (both coefficient lists in the same
    /// main variable, `deg f ≥ deg g ≥ 1`, `δ = deg f − deg g`).
    fn prem(f: &[Poly], g: &[Poly], delta: usize) -> Vec<Poly> {
        let dg = g.len() - 1;
        let lc = &g[dg];
        let mut r: Vec<Poly> = f.to_vec();
        let mut passes = 0usize;
        loop {
            while let Some(last) = r.last() {
                if last.is_zero() {
                    r.pop();
                } else {
                    break;
                }
            }
            if r.len() <= dg {
                break;
            }
            let df = r.len() - 1;
            let lead = r[df].clone();
            for c in r.iter_mut() {
                *c = c.mul(lc);
            }
            for j in 0..=dg {
                r[df - dg + j] = r[df - dg + j].sub(&lead.mul(&g[j]));
            }
            passes += 1;
        }
        // Match the classic normalization lc^{δ+1}·f = q·g + r.
        for _ in passes..delta + 1 {
            for c in r.iter_mut() {
                *c = c.mul(lc);
            }
        }
        r
    }

    /// Evaluates with each parameter bound to a rational function (unbound
    /// parameters stay formal).
    fn substitute(&self, bindings: &[Option<ParamRat>]) -> ParamRat {
        let mut acc = ParamRat::zero();
        // Cache powers of each bound value.
        let mut powers: Vec<Vec<ParamRat>> = bindings
            .iter()
            .map(|b| {
                b.as_ref()
                    .map(|_| vec![ParamRat::one()])
                    .unwrap_or_default()
            })
            .collect();
        for (e, c) in &self.terms {
            let mut term = ParamRat::from_rational(c.clone());
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match &bindings[k] {
                    None => {
                        let mut me = ZERO_EXP;
                        me[k] = x;
                        term = &term
                            * &ParamRat::from_poly(Poly::monomial(me, BigRational::one()));
                    }
                    Some(val) => {
                        let cache = &mut powers[k];
                        while cache.len() <= x as usize {
                            let next = &cache[cache.len() - 1] * val;
                            cache.push(next);
                        }
                        term = &term * &cache[x as usize];
                    }
                }
            }
            acc = &acc + &term;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// ParamRat
// ---------------------------------------------------------------------------

/// A reduced rational function in the formal parameters over ℚ.
///
/// The canonical form divides numerator and denominator by their polynomial
/// gcd and scales so the denominator is integer-primitive with positive
/// leading coefficient (degree-lexicographic order, `q` most significant);
/// polynomials therefore have denominator exactly `1`, and equality of values
/// is `==` on the representation.
///
/// Arithmetic is available through the standard operators; `/` panics on a
/// zero divisor, while [`ParamRat::try_div`] reports it as an error.
///
/// ```
/// use symf::scalars::{q, ParamRat};
/// let ratio = (ParamRat::one() - q().pow(2)) / (ParamRat::one() - q());
/// assert_eq!(ratio, ParamRat::one() + q());
/// assert_eq!(ratio.to_string(), "q+1");
/// ```
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamRat {
    num: Poly,
    den: Poly,
}

/// The parameter `q` as a rational function.
pub fn q() -> ParamRat {
    ParamRat::var(Param::Q)
}

/// The parameter `t` as a rational function.
pub fn t() -> ParamRat {
    ParamRat::var(Param::T)
}

/// The parameter `u` as a rational function.
pub fn u() -> ParamRat {
    ParamRat::var(Param::U)
}

/// The scratch parameter `z` as a rational function.
pub fn z() -> ParamRat {
    ParamRat::var(Param::Z)
}

impl ParamRat {
    fn reduced(num: Poly, den: Poly) -> ParamRat {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return ParamRat {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let (cn, pn) = num.primitive_parts();
        let (cd, pd) = den.primitive_parts();
        let g = Poly::gcd(&pn, &pd);
        let n = pn.divide_exact(&g).expect("gcd divides numerator");
        let d = pd.divide_exact(&g).expect("gcd divides denominator");
        ParamRat {
            num: n.mul_scalar(&(cn / cd)),
            den: d,
        }
    }

    fn from_poly(p: Poly) -> ParamRat {
        ParamRat {
            num: p,
            den: Poly::one(),
        }
    }

    /// The zero function.
    pub fn zero() -> ParamRat {
        ParamRat::from_poly(Poly::zero())
    }

    /// The constant `1`.
    pub fn one() -> ParamRat {
        ParamRat::from_poly(Poly::one())
    }

    /// An integer constant.
    pub fn from_int(n: i64) -> ParamRat {
        ParamRat::from_poly(Poly::constant(BigRational::from_integer(n.into())))
    }

    /// An arbitrary rational constant.
    pub fn from_rational(c: BigRational) -> ParamRat {
        ParamRat::from_poly(Poly::constant(c))
    }

    /// A big-integer constant.
    pub fn from_bigint(n: BigInt) -> ParamRat {
        ParamRat::from_rational(BigRational::from_integer(n))
    }

    /// A single parameter.
    pub fn var(p: Param) -> ParamRat {
        ParamRat::from_poly(Poly::var(p))
    }

    /// The monomial with the given parameter exponents and coefficient 1.
    ///
    /// ```
    /// use symf::scalars::{Param, ParamRat};
    /// let m = ParamRat::monomial(&[(Param::Q, 2), (Param::T, 1)]);
    /// assert_eq!(m.to_string(), "q^2*t");
    /// ```
    pub fn monomial(exps: &[(Param, u32)]) -> ParamRat {
        let mut e = ZERO_EXP;
        for (p, k) in exps {
            e[p.index()] += u16::try_from(*k).expect("exponent fits");
        }
        ParamRat::from_poly(Poly::monomial(e, BigRational::one()))
    }

    /// Whether this is the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether this is the constant 1.
    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    /// Whether the denominator is trivial, i.e. the value is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    /// The value as a rational constant, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den == Poly::one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().and_then(|c| {
            if c.denom().is_one() {
                Some(c.numer().clone())
            } else {
                None
            }
        })
    }

    /// The terms of a polynomial value: `(sparse exponent list, coefficient)`
    /// in decreasing degree-lexicographic order. `None` for proper ratios.
    pub fn poly_terms(&self) -> Option<Vec<(Vec<(Param, u32)>, BigRational)>> {
        if !self.is_polynomial() {
            return None;
        }
        Some(
            self.num
                .terms
                .iter()
                .map(|(e, c)| {
                    let exps = e
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x > 0)
                        .map(|(k, &x)| (Param(k as u8), x as u32))
                        .collect();
                    (exps, c.clone())
                })
                .collect(),
        )
    }

    /// Whether the value is a polynomial with nonnegative integer coefficients.
    pub fn is_nonnegative_integer_polynomial(&self) -> bool {
        match self.poly_terms() {
            None => false,
            Some(terms) => terms
                .iter()
                .all(|(_, c)| c.denom().is_one() && !c.numer().is_negative()),
        }
    }

    /// Sum of the two arguments (reference form used internally).
    fn add_ref(&self, other: &ParamRat) -> ParamRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return ParamRat::reduced(self.num.add(&other.num), self.den.clone());
        }
        // Work over the lcm of the denominators to limit growth.
        let g = Poly::gcd(&self.den, &other.den);
        if g.as_constant().is_some() {
            return ParamRat::reduced(
                self.num.mul(&other.den).add(&other.num.mul(&self.den)),
                self.den.mul(&other.den),
            );
        }
        let d1g = self.den.divide_exact(&g).expect("gcd divides");
        let d2g = other.den.divide_exact(&g).expect("gcd divides");
        ParamRat::reduced(
            self.num.mul(&d2g).add(&other.num.mul(&d1g)),
            self.den.mul(&d2g),
        )
    }

    fn mul_ref(&self, other: &ParamRat) -> ParamRat {
        if self.is_zero() || other.is_zero() {
            return ParamRat::zero();
        }
        ParamRat::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Division that reports a zero divisor as an error instead of panicking.
    pub fn try_div(&self, other: &ParamRat) -> Result<ParamRat, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(ParamRat::reduced(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// The multiplicative inverse; errors on zero.
    pub fn try_inv(&self) -> Result<ParamRat, ScalarError> {
        ParamRat::one().try_div(self)
    }

    /// Integer power; negative exponents invert (panics on `0.pow(-k)`).
    pub fn pow(&self, k: i64) -> ParamRat {
        let base = if k < 0 {
            self.try_inv().expect("inverse of zero")
        } else {
            self.clone()
        };
        let mut acc = ParamRat::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Replaces every parameter `p` by `p^k` (the degree-`k` Adams action on
    /// coefficients).
    ///
    /// ```
    /// use symf::scalars::{q, t, ParamRat};
    /// assert_eq!((q() + t()).adams(2), q().pow(2) + t().pow(2));
    /// let geom = ParamRat::one() / (ParamRat::one() - q());
    /// assert_eq!(geom.adams(3), ParamRat::one() / (ParamRat::one() - q().pow(3)));
    /// assert_eq!(ParamRat::from_int(5).adams(7), ParamRat::from_int(5));
    /// ```
    pub fn adams(&self, k: u32) -> ParamRat {
        assert!(k >= 1, "adams index must be positive");
        ParamRat::reduced(self.num.adams(k), self.den.adams(k))
    }

    /// Exact substitution of parameters by rational functions.
    ///
    /// Errors with [`ScalarError::Pole`] when the denominator vanishes under
    /// the bindings (a removable singularity must be cleared with
    /// [`ParamRat::divide_exact`] first).
    ///
    /// ```
    /// use symf::scalars::{q, t, ParamRat, Param};
    /// let f = q() + t();
    /// assert_eq!(
    ///     f.substitute(&[(Param::T, ParamRat::one())]).unwrap(),
    ///     q() + ParamRat::one()
    /// );
    /// ```
    pub fn substitute(&self, bindings: &[(Param, ParamRat)]) -> Result<ParamRat, ScalarError> {
        let mut slots: [Option<ParamRat>; PARAM_COUNT] = Default::default();
        for (p, val) in bindings {
            slots[p.index()] = Some(val.clone());
        }
        let den = self.den.substitute(&slots);
        if den.is_zero() {
            return Err(ScalarError::Pole);
        }
        let num = self.num.substitute(&slots);
        num.try_div(&den)
    }

    /// Exact polynomial quotient.
    ///
    /// Both operands must be polynomials; a zero divisor and a non-exact
    /// division are reported as distinct errors.
    ///
    /// ```
    /// use symf::scalars::{q, ParamRat, ScalarError};
    /// let f = q().pow(2) - ParamRat::one();
    /// let g = q() - ParamRat::one();
    /// assert_eq!(f.divide_exact(&g).unwrap(), q() + ParamRat::one());
    /// assert_eq!(
    ///     (q().pow(2) + ParamRat::one()).divide_exact(&g),
    ///     Err(ScalarError::NonExact)
    /// );
    /// ```
    pub fn divide_exact(&self, g: &ParamRat) -> Result<ParamRat, ScalarError> {
        if !self.is_polynomial() || !g.is_polynomial() {
            return Err(ScalarError::NotPolynomial);
        }
        if g.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(ParamRat::zero());
        }
        self.num
            .divide_exact(&g.num)
            .map(ParamRat::from_poly)
            .ok_or(ScalarError::NonExact)
    }

    /// Renders with terms in increasing degree order (series style), e.g.
    /// `1+2*q+q^2+q^3`; falls back to the standard rendering for ratios.
    pub fn to_ascending_string(&self) -> String {
        if !self.is_polynomial() {
            return self.to_string();
        }
        let mut p = self.num.clone();
        p.terms.reverse();
        render_poly_ordered(&p)
    }
}

impl Default for ParamRat {
    fn default() -> Self {
        ParamRat::zero()
    }
}

// Operator impls for owned and borrowed operands.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:expr) => {
        impl $trait for &ParamRat {
            type Output = ParamRat;
            fn $method(self, rhs: &ParamRat) -> ParamRat {
                let f: fn(&ParamRat, &ParamRat) -> ParamRat = $impl_fn;
                f(self, rhs)
            }
        }
        impl $trait for ParamRat {
            type Output = ParamRat;
            fn $method(self, rhs: ParamRat) -> ParamRat {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&ParamRat> for ParamRat {
            type Output = ParamRat;
            fn $method(self, rhs: &ParamRat) -> ParamRat {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<ParamRat> for &ParamRat {
            type Output = ParamRat;
            fn $method(self, rhs: ParamRat) -> ParamRat {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&(-b)));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.try_div(b).expect("division by zero"));

impl Neg for &ParamRat {
    type Output = ParamRat;
    fn neg(self) -> ParamRat {
        ParamRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamRat {
    type Output = ParamRat;
    fn neg(self) -> ParamRat {
        -&self
    }
}

impl AddAssign<&ParamRat> for ParamRat {
    fn add_assign(&mut self, rhs: &ParamRat) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&ParamRat> for ParamRat {
    fn sub_assign(&mut self, rhs: &ParamRat) {
        *self = self.add_ref(&(-rhs));
    }
}

impl MulAssign<&ParamRat> for ParamRat {
    fn mul_assign(&mut self, rhs: &ParamRat) {
        *self = self.mul_ref(rhs);
    }
}

impl From<i64> for ParamRat {
    fn from(n: i64) -> ParamRat {
        ParamRat::from_int(n)
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn render_coeff(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render_term(e: &Exp, c: &BigRational) -> String {
    let mut factors: Vec<String> = Vec::new();
    let abs = c.abs();
    if e.iter().all(|&x| x == 0) {
        return render_coeff(&abs);
    }
    if !abs.is_one() {
        factors.push(render_coeff(&abs));
    }
    for (k, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let name = PARAM_NAMES[k];
        if x == 1 {
            factors.push(name.to_string());
        } else {
            factors.push(format!("{name}^{x}"));
        }
    }
    factors.join("*")
}

/// Renders a polynomial's terms in their stored order.
fn render_poly_ordered(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms.iter().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        out.push_str(&render_term(e, c));
    }
    out
}

/// Parenthesizes when the rendering is not a single atom.
fn parenthesize(s: String) -> String {
    let atomic = !s.contains(['+', '*', '/']) && !(s.len() > 1 && s[1..].contains('-'));
    if atomic {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for ParamRat {
    /// Canonical text: terms in decreasing degree-lexicographic order, `*`
    /// between factors, `^` for powers; ratios as `num/den` with parentheses
    /// around composite parts, e.g. `(q-t)/(1-t)` prints as
    /// `(q-t)/(t-1)`-normalized canonical form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return f.write_str(&render_poly_ordered(&self.num));
        }
        let num = parenthesize(render_poly_ordered(&self.num));
        let den = parenthesize(render_poly_ordered(&self.den));
        write!(f, "{num}/{den}")
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

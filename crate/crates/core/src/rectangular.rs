//! Lattice-path combinatorics in an `m × n` rectangle and the operator
//! calculus attached to it.
//!
//! The combinatorial side enumerates rectangular Dyck paths (partitions lying
//! inside the staircase of the rectangle) and their parking functions, with
//! four independent counting routes: direct enumeration, the area
//! `q`-polynomial, cycle-lemma style summation over `gcd`-partitions, and a
//! constant-term extraction.  The algebraic side builds the degree-raising
//! operators `Q_{mn}` as nested commutators of two generators (multiplication
//! by `p₁` and the degree-preserving Macdonald operator `D₀`) and uses them to
//! grow a homogeneous "seed" symmetric function into its family indexed by
//! slopes `(m, n) = (ad, bd)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num::{BigInt, BigRational, One, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::plethysm::plethysm;
use crate::scalars::{q, t, ParamRat};
use crate::shapes::{enumerate_partitions, Partition};
use crate::symfunc::{Basis, SymFunc};

/// Errors for rectangle-indexed constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RectangularError {
    /// The partition does not fit inside the staircase of the rectangle.
    #[error("partition {mu} does not fit inside the ({m},{n})-staircase")]
    OutsideStaircase {
        /// Width of the rectangle.
        m: u32,
        /// Height of the rectangle.
        n: u32,
        /// The offending partition.
        mu: Partition,
    },
    /// Both sides of the rectangle must be positive for path enumeration.
    #[error("the rectangle ({0},{1}) has an empty side")]
    EmptyRectangle(u32, u32),
    /// Generators and the unreachable ray `(k, 0)`, `k ≥ 2`, have no
    /// commutator splitting.
    #[error("({0},{1}) has no commutator splitting")]
    NoSplit(u32, u32),
    /// Seed directions must be coprime.
    #[error("direction ({0},{1}) is not coprime")]
    NotCoprime(u32, u32),
    /// Seed directions must point strictly upward.
    #[error("direction ({0},{1}) must have a positive second component")]
    FlatDirection(u32, u32),
    /// Seeds must be homogeneous for the family construction to be graded.
    #[error("seed must be homogeneous")]
    InhomogeneousSeed,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The staircase parts `r_k = ⌊m(n−k)/n⌋` for `k = 1..n`, zeros included.
fn staircase_parts(m: u32, n: u32) -> Vec<u32> {
    (1..=n).map(|k| m * (n - k) / n).collect()
}

/// The largest partition fitting strictly below the diagonal of the `m × n`
/// rectangle: parts `⌊m(n−k)/n⌋` for `k = 1..n` (trailing zeros dropped).
pub fn staircase(m: u32, n: u32) -> Partition {
    Partition::new(staircase_parts(m, n)).expect("staircase parts are sorted")
}

/// A north-east lattice path from `(0, n)` to `(m, 0)` staying weakly below
/// the diagonal, encoded by the partition `mu` of cells above the path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    m: u32,
    n: u32,
    mu: Partition,
}

impl DyckPath {
    /// Wraps `mu` as a path in the `m × n` rectangle, rejecting partitions
    /// that stick out of the staircase.
    pub fn new(m: u32, n: u32, mu: Partition) -> Result<DyckPath, RectangularError> {
        if m == 0 || n == 0 {
            return Err(RectangularError::EmptyRectangle(m, n));
        }
        if !staircase(m, n).contains(&mu) {
            return Err(RectangularError::OutsideStaircase { m, n, mu });
        }
        Ok(DyckPath { m, n, mu })
    }

    /// Width of the rectangle.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Height of the rectangle.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The partition of cells between the path and the diagonal staircase.
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Parts of `mu` padded with zeros to the full height `n`.
    pub fn padded(&self) -> Vec<u32> {
        let mut parts = self.mu.parts().to_vec();
        parts.resize(self.n as usize, 0);
        parts
    }

    /// Number of cells between the path and the staircase.
    pub fn area(&self) -> u32 {
        staircase_parts(self.m, self.n).iter().sum::<u32>() - self.mu.size()
    }

    /// Run lengths of equal values in the padded part list: the heights of
    /// the maximal vertical segments of the path, read top to bottom.
    pub fn risers(&self) -> Vec<u32> {
        let padded = self.padded();
        let mut runs = Vec::new();
        for value in padded {
            match runs.last_mut() {
                Some((v, count)) if *v == value => *count += 1,
                _ => runs.push((value, 1u32)),
            }
        }
        runs.into_iter().map(|(_, count)| count).collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}x{}", self.mu, self.m, self.n)
    }
}

/// All paths of the `m × n` rectangle, by increasing cell count of `mu`.
pub fn dyck_paths(m: u32, n: u32) -> Vec<DyckPath> {
    let stair = staircase(m, n);
    let mut out = Vec::new();
    for size in 0..=stair.size() {
        for mu in enumerate_partitions(size, Some(&stair), None) {
            out.push(DyckPath { m, n, mu });
        }
    }
    out
}

/// Area generating polynomial `Σ_paths q^{area}`.
pub fn cat_q(m: u32, n: u32) -> ParamRat {
    let mut total = ParamRat::zero();
    for path in dyck_paths(m, n) {
        total = total + q().pow(i64::from(path.area()));
    }
    total
}

/// Number of paths in the `m × n` rectangle, by direct enumeration.
pub fn cat_count(m: u32, n: u32) -> BigInt {
    BigInt::from(dyck_paths(m, n).len())
}

/// Area generating polynomial extracted as the constant term of
/// `Ω(z)/z_{mn} · ∏_i 1/(1 − q z_{i+1}/z_i)` over variables `z_0..z_m`,
/// where `Ω(z) = ∏_k 1/(1−z_k)` and `z_{mn} = ∏_k z_{r_k}` runs over the
/// staircase parts (zeros included).
///
/// Taking the constant term in each `z_j` forces the geometric exponent
/// `a_j ≥ 0` of `1/(1−z_j)` to balance the ladder exponents, leaving a sum of
/// `q^{c_1+…+c_{m−1}}` over integer vectors with `c_m = 0` and
/// `c_i ≤ c_{i+1} + e_i`, with `e_i` the multiplicity of `i` among the
/// staircase parts.  That sum is evaluated by a backward scan.
pub fn cat_q_constant_term(m: u32, n: u32) -> ParamRat {
    let mut multiplicity = vec![0u32; m as usize + 1];
    for r in staircase_parts(m, n) {
        multiplicity[r as usize] += 1;
    }
    // states: value of c_i ↦ polynomial summing q^{c_i + … + c_{m−1}}.
    let mut states: HashMap<u32, ParamRat> = HashMap::new();
    states.insert(0, ParamRat::one());
    for i in (1..m).rev() {
        let mut next: HashMap<u32, ParamRat> = HashMap::new();
        for (value, weight) in states {
            for c in 0..=(value + multiplicity[i as usize]) {
                let entry = next.entry(c).or_insert_with(ParamRat::zero);
                *entry = &*entry + &(&weight * &q().pow(i64::from(c)));
            }
        }
        states = next;
    }
    let mut total = ParamRat::zero();
    for weight in states.values() {
        total = total + weight.clone();
    }
    total
}

fn big_factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn big_binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    big_factorial(n) / (big_factorial(k) * big_factorial(n - k))
}

fn assert_integer(value: BigRational, label: &str) -> BigInt {
    assert!(
        value.denom().is_one() || value.numer().is_zero(),
        "{label} produced the non-integer {value}"
    );
    value.to_integer()
}

/// Path count by the cycle-lemma summation: with `d = gcd(m,n)` and
/// `(a, b) = (m/d, n/d)`, the count is
/// `Σ_{μ⊢d} (1/z_μ) ∏_{k∈μ} binom(ak+bk, ak)/(a+b)`.
pub fn bizley_cat(m: u32, n: u32) -> BigInt {
    let d = gcd(m, n);
    let (a, b) = (m / d, n / d);
    let mut total = BigRational::zero();
    for mu in enumerate_partitions(d, None, None) {
        let mut term = BigRational::new(BigInt::one(), mu.z());
        for &k in mu.parts() {
            term *= BigRational::new(big_binomial(a * k + b * k, a * k), BigInt::from(a + b));
        }
        total += term;
    }
    assert_integer(total, "path summation")
}

/// Parking-function count by the cycle-lemma summation:
/// `Σ_{μ⊢d} (1/z_μ) · n!/∏_{k∈μ}(kb)! · ∏_{k∈μ} (ka)^{kb}/a`.
pub fn bizley_park(m: u32, n: u32) -> BigInt {
    let d = gcd(m, n);
    let (a, b) = (m / d, n / d);
    let mut total = BigRational::zero();
    for mu in enumerate_partitions(d, None, None) {
        let mut term = BigRational::new(big_factorial(n), mu.z());
        for &k in mu.parts() {
            term /= BigRational::from_integer(big_factorial(k * b));
            term *= BigRational::new(BigInt::from(k * a).pow(k * b), BigInt::from(a));
        }
        total += term;
    }
    assert_integer(total, "parking summation")
}

/// A path together with a labelling of its `n` vertical steps by `1..n`,
/// increasing up each vertical segment; encoded by the word whose `i`-th
/// letter is the column of the step labelled `i`.  The valid words are
/// exactly the distinct rearrangements of the padded part list of `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingFunction {
    path: DyckPath,
    word: Vec<u32>,
}

impl ParkingFunction {
    /// The underlying path.
    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// Column of each labelled vertical step, in label order.
    pub fn word(&self) -> &[u32] {
        &self.word
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.m <= 10 {
            for letter in &self.word {
                write!(f, "{letter}")?;
            }
        } else {
            let text: Vec<String> = self.word.iter().map(u32::to_string).collect();
            write!(f, "{}", text.join(","))?;
        }
        write!(f, " on {}", self.path.mu)
    }
}

fn multiset_words(remaining: &mut Vec<(u32, u32)>, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining.iter().all(|&(_, count)| count == 0) {
        out.push(prefix.clone());
        return;
    }
    for i in 0..remaining.len() {
        if remaining[i].1 == 0 {
            continue;
        }
        remaining[i].1 -= 1;
        prefix.push(remaining[i].0);
        multiset_words(remaining, prefix, out);
        prefix.pop();
        remaining[i].1 += 1;
    }
}

/// All labellings of one path, in lexicographic word order.
pub fn parking_enumerate(path: &DyckPath) -> Vec<ParkingFunction> {
    let mut counts: Vec<(u32, u32)> = Vec::new();
    let mut padded = path.padded();
    padded.reverse();
    for value in padded {
        match counts.last_mut() {
            Some((v, count)) if *v == value => *count += 1,
            _ => counts.push((value, 1)),
        }
    }
    let mut words = Vec::new();
    multiset_words(&mut counts, &mut Vec::new(), &mut words);
    words
        .into_iter()
        .map(|word| ParkingFunction {
            path: path.clone(),
            word,
        })
        .collect()
}

/// Number of labellings of one path: the multinomial `n!/∏ risers!`.
pub fn parking_count_per_path(path: &DyckPath) -> BigInt {
    let mut count = big_factorial(path.n);
    for run in path.risers() {
        count /= big_factorial(run);
    }
    count
}

/// Total number of labelled paths of the rectangle.
pub fn parking_count(m: u32, n: u32) -> BigInt {
    dyck_paths(m, n)
        .iter()
        .map(parking_count_per_path)
        .sum()
}

/// The affine rank `mn − nx − my` of the cell `(x, y)`: zero exactly on the
/// diagonal through `(m, 0)` and `(0, n)`, positive below it.
pub fn rank(m: u32, n: u32, x: u32, y: u32) -> i64 {
    i64::from(m) * i64::from(n) - i64::from(n) * i64::from(x) - i64::from(m) * i64::from(y)
}

/// All decompositions `(m,n) = (r,s) + (u,v)` with `rv − su = gcd(m,n)` and
/// nonnegative entries; there are exactly `gcd(m,n)` of them, with `(r,s)`
/// running over the lattice points just below the segment to `(m,n)`.
pub fn splits(m: u32, n: u32) -> Vec<((u32, u32), (u32, u32))> {
    let g = gcd(m, n);
    let mut out = Vec::new();
    for r in 1..=m {
        let rn = r * n;
        if rn >= g && (rn - g) % m == 0 {
            let s = (rn - g) / m;
            out.push(((r, s), (m - r, n - s)));
        }
    }
    out
}

/// The canonical decomposition: among the `gcd(m,n)` valid ones, the pair
/// whose below-diagonal component `(r,s)` has the largest first coordinate.
pub fn split(m: u32, n: u32) -> Result<((u32, u32), (u32, u32)), RectangularError> {
    if m == 0 || n == 0 {
        return Err(RectangularError::NoSplit(m, n));
    }
    splits(m, n)
        .into_iter()
        .last()
        .ok_or(RectangularError::NoSplit(m, n))
}

/// A commutator word over the two generators, applied to symmetric functions
/// with one `1/((1−q)(1−t))` factor per bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
enum OpWord {
    /// Multiplication by `p₁`.
    P1,
    /// The degree-preserving Macdonald operator.
    D0,
    /// Multiplication by the hook alternant `π_k`.
    Pi(u32),
    Bracket(Box<OpWord>, Box<OpWord>),
}

impl OpWord {
    fn brackets(&self) -> u32 {
        match self {
            OpWord::P1 | OpWord::D0 | OpWord::Pi(_) => 0,
            OpWord::Bracket(a, b) => 1 + a.brackets() + b.brackets(),
        }
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpWord::P1 => write!(f, "p1"),
            OpWord::D0 => write!(f, "D0"),
            OpWord::Pi(k) => write!(f, "pi_{k}"),
            OpWord::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// A degree-graded operator of the commutator algebra generated by
/// multiplication by `p₁` (grading `(0,1)`) and `D₀` (grading `(1,0)`);
/// gradings add under brackets, and each bracket carries a `1/M` factor with
/// `M = (1−q)(1−t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhaOperator {
    grading: (u32, u32),
    word: OpWord,
}

static WORD_CACHE: Lazy<Mutex<HashMap<(u32, u32), EhaOperator>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

static APPLY_CACHE: Lazy<Mutex<HashMap<(String, String), SymFunc>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The operator `Q_{mn}`: a generator when `(m,n)` is `(0,k)` or `(1,0)`,
/// otherwise `(1/M)[Q_{uv}, Q_{rs}]` for the canonical split
/// `(m,n) = (r,s) + (u,v)`.
///
/// # Panics
/// On the unreachable inputs `(0,0)` and `(k,0)` with `k ≥ 2`, which have no
/// generator and no splitting.
pub fn q_operator(m: u32, n: u32) -> EhaOperator {
    if let Some(found) = WORD_CACHE.lock().unwrap().get(&(m, n)) {
        return found.clone();
    }
    let word = match (m, n) {
        (0, 1) => OpWord::P1,
        (1, 0) => OpWord::D0,
        (0, k) if k >= 2 => OpWord::Pi(k),
        _ => {
            let ((r, s), (u, v)) = split(m, n)
                .unwrap_or_else(|e| panic!("no operator at grading ({m},{n}): {e}"));
            let above = q_operator(u, v);
            let below = q_operator(r, s);
            OpWord::Bracket(Box::new(above.word), Box::new(below.word))
        }
    };
    let op = EhaOperator {
        grading: (m, n),
        word,
    };
    WORD_CACHE
        .lock()
        .unwrap()
        .insert((m, n), op.clone());
    op
}

impl EhaOperator {
    /// The `(m, n)` grading: applications raise degree by `n`.
    pub fn grading(&self) -> (u32, u32) {
        self.grading
    }

    /// Applies the operator, expanding brackets as commutators.
    pub fn apply(&self, g: &SymFunc) -> SymFunc {
        apply_word(&self.word, g)
    }
}

impl fmt::Display for EhaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.word.brackets() {
            0 => write!(f, "{}", self.word),
            1 => write!(f, "(1/M){}", self.word),
            k => write!(f, "(1/M^{k}){}", self.word),
        }
    }
}

fn apply_word(word: &OpWord, g: &SymFunc) -> SymFunc {
    match word {
        OpWord::P1 => &SymFunc::p(1) * g,
        OpWord::Pi(k) => &SymFunc::pi(*k) * g,
        OpWord::D0 => d_zero(g),
        OpWord::Bracket(a, b) => {
            let key = (word.to_string(), g.to_string());
            if let Some(found) = APPLY_CACHE.lock().unwrap().get(&key) {
                return found.clone();
            }
            let ab = apply_word(a, &apply_word(b, g));
            let ba = apply_word(b, &apply_word(a, g));
            let m_inv = ((ParamRat::one() - q()) * (ParamRat::one() - t()))
                .try_inv()
                .expect("M is invertible");
            let value = (ab - ba).scale(&m_inv);
            APPLY_CACHE.lock().unwrap().insert(key, value.clone());
            value
        }
    }
}

/// The degree-preserving Macdonald operator, realized plethystically: it is
/// the constant-in-`z` part of `F[x + M/z] · Σ_j (−z)^j e_j(x)`, which on a
/// power-sum product expands as
/// `p_λ ↦ Σ_{S ⊆ parts(λ)} (−1)^{|S|} (∏_{k∈S} (1−q^k)(1−t^k)) e_{|S|} p_{λ∖S}`
/// with `|S|` the sum of the selected parts.
pub fn d_zero(g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lambda, coeff) in g.p_terms() {
        let parts = lambda.parts();
        for mask in 0u32..(1u32 << parts.len()) {
            let mut weight = coeff.clone();
            let mut kept = Vec::new();
            let mut degree = 0u32;
            for (i, &k) in parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    degree += k;
                    let factor = (ParamRat::one() - q().pow(i64::from(k)))
                        * (ParamRat::one() - t().pow(i64::from(k)));
                    weight = weight * factor;
                } else {
                    kept.push(k);
                }
            }
            if degree % 2 == 1 {
                weight = -weight;
            }
            let rest = SymFunc::term(Basis::P, Partition::of(&kept), weight);
            out = out + rest * SymFunc::e(degree);
        }
    }
    out
}

/// Grows a homogeneous seed `g` of degree `d` into the member of its family
/// at `(m, n) = (ad, bd)`: expand `g = Σ c_μ π_μ`, then apply the commuting
/// product `Q_{(aμ₁,bμ₁)} ⋯ Q_{(aμ_k,bμ_k)}` to `1` under each coefficient.
pub fn seed_family(g: &SymFunc, a: u32, b: u32) -> Result<SymFunc, RectangularError> {
    if b == 0 {
        return Err(RectangularError::FlatDirection(a, b));
    }
    if gcd(a, b) != 1 {
        return Err(RectangularError::NotCoprime(a, b));
    }
    if !g.is_homogeneous() {
        return Err(RectangularError::InhomogeneousSeed);
    }
    let mut out = SymFunc::zero();
    for (mu, coeff) in g.convert(Basis::Pi).terms() {
        let mut value = SymFunc::one();
        for &k in mu.parts() {
            value = q_operator(a * k, b * k).apply(&value);
        }
        out = out + value.scale(coeff);
    }
    Ok(out)
}

/// Direct sum of the vertical-strip skew Schur functions `s_{(μ+1ⁿ)/μ}` over
/// all paths of the rectangle, optionally weighted by `q^{area}`.
fn strip_sum_impl(m: u32, n: u32, weighted: bool) -> SymFunc {
    let mut total = SymFunc::zero();
    for path in dyck_paths(m, n) {
        let outer: Vec<u32> = path.padded().iter().map(|&part| part + 1).collect();
        let skew = SymFunc::s(path.mu()).skew(&SymFunc::s(&Partition::of(&outer)));
        if weighted {
            total = total + skew.scale(&q().pow(i64::from(path.area())));
        } else {
            total = total + skew;
        }
    }
    total
}

/// `Σ_{μ⊆δ_{mn}} s_{(μ+1ⁿ)/μ}`, by direct enumeration.
pub fn strip_schur_sum(m: u32, n: u32) -> SymFunc {
    strip_sum_impl(m, n, false)
}

/// `Σ_{μ⊆δ_{mn}} q^{area(μ)} s_{(μ+1ⁿ)/μ}`, by direct enumeration.
pub fn strip_schur_sum_q(m: u32, n: u32) -> SymFunc {
    strip_sum_impl(m, n, true)
}

/// The closed form of the unweighted strip sum: with `d = gcd(m,n)` and
/// `(a,b) = (m/d, n/d)`, `Σ_{μ⊢d} (1/z_μ) ∏_{k∈μ} (1/a) e_{kb}[ka·x]`;
/// for coprime sides it collapses to `(1/a) e_b[a·x]`.
pub fn strip_schur_formula(m: u32, n: u32) -> SymFunc {
    let d = gcd(m, n);
    let (a, b) = (m / d, n / d);
    let mut total = SymFunc::zero();
    for mu in enumerate_partitions(d, None, None) {
        let mut value = SymFunc::one();
        for &k in mu.parts() {
            let alphabet = SymFunc::term(
                Basis::P,
                Partition::of(&[1]),
                ParamRat::from_int(i64::from(k * a)),
            );
            value = value * plethysm(&SymFunc::e(k * b), &alphabet);
        }
        let scale = ParamRat::from_rational(BigRational::new(
            BigInt::one(),
            mu.z() * BigInt::from(a).pow(mu.len() as u32),
        ));
        total = total + value.scale(&scale);
    }
    total
}

//! Partitions, Ferrers and skew diagrams, tableaux, RSK, and the charge
//! machinery.
//!
//! Provides:
//!
//! * [`Partition`] — weakly decreasing positive parts; conjugation, cell
//!   statistics (arm/leg/hook), dominance, `z_μ`, `n(μ)`, corners, and
//!   enumeration in decreasing lexicographic order.
//! * [`SkewShape`] and [`Tableau`] — diagram differences and their fillings,
//!   with semi-standard/standard validation, reading words, and content.
//! * [`Biword`] — lexicographic two-row arrays, with inversion.
//! * Row insertion, RSK and its inverse, word insertion.
//! * Charge/cocharge via tableau minimization, Kostka and Kostka–Foulkes
//!   numbers, hook-length counts `f^μ` and their `q`-refinement.
//! * `q`-binomials, sub-partition generating polynomials, and the square
//!   `q`-Catalan recursion.
//!
//! Conventions are Cartesian ("French"): cells are `(x, y)` with `x` the
//! column and `y` the row, both zero-based, rows drawn bottom-up.

use crate::scalars::{Param, ParamRat};
use num::bigint::BigInt;
use num::One;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Errors produced by shape and tableau operations.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ShapeError {
    /// A part sequence that is not weakly decreasing.
    #[error("parts are not weakly decreasing")]
    NotAPartition,
    /// Two partitions were required to have the same size.
    #[error("partitions have different sizes")]
    SizeMismatch,
    /// The inner shape of a skew diagram is not contained in the outer shape.
    #[error("inner shape not contained in outer shape")]
    NotContained,
    /// Row lengths do not match the prescribed shape.
    #[error("filling does not match its shape")]
    ShapeMismatch,
    /// A tableau that must be semi-standard is not.
    #[error("tableau is not semi-standard")]
    NotSemistandard,
    /// A two-row array that is not in lexicographic order.
    #[error("biword is not lexicographic")]
    NotLexicographic,
    /// Charge requires the content to be a partition.
    #[error("tableau content is not a partition")]
    NonPartitionContent,
    /// A partition string that cannot be parsed.
    #[error("malformed partition text")]
    Unparseable,
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty sequence is the partition of 0, printed `0`. Partitions with all
/// parts ≤ 9 print as digit words (`4321`), larger ones as bracketed lists
/// (`[12,5,2]`); [`FromStr`] accepts both.
///
/// The derived order ([`Ord`]) sorts by size and then by decreasing
/// lexicographic order of parts — the display order `4, 31, 22, 211, 1111`
/// used for matrices — so iterating a `BTreeMap` keyed by partitions visits
/// them in display order. Dominance is the separate, partial
/// [`Partition::dominates`].
///
/// ```
/// use symf::shapes::Partition;
/// let mu = Partition::of(&[4, 4, 2, 1]);
/// assert_eq!(mu.conjugate(), Partition::of(&[4, 3, 2, 2]));
/// assert_eq!(mu.to_string(), "4421");
/// assert_eq!(mu.size(), 11);
/// ```
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping zero parts; errors when the remaining
    /// parts are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Partition, ShapeError> {
        let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotAPartition);
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a literal slice; panics on invalid input.
    /// Intended for fixed partitions written in source code.
    pub fn of(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("literal partition is valid")
    }

    /// The parts, weakly decreasing, without zeros.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (zero-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The size `|μ|`, the number of cells.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The length `ℓ(μ)`, the number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: `μ'_j = #{i : μ_i ≥ j}`.
    ///
    /// ```
    /// use symf::shapes::Partition;
    /// let mu = Partition::of(&[9, 8, 8, 8, 6, 3, 2, 1]);
    /// assert_eq!(mu.conjugate(), Partition::of(&[8, 7, 6, 5, 5, 5, 4, 4, 1]));
    /// ```
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j as u32).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All cells `(x, y)` of the diagram, row by row bottom-up.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (y, &row) in self.parts.iter().enumerate() {
            for x in 0..row as usize {
                out.push((x, y));
            }
        }
        out
    }

    /// The arm of cell `(x, y)`: number of cells strictly to its right.
    pub fn arm(&self, x: usize, y: usize) -> u32 {
        self.part(y) - x as u32 - 1
    }

    /// The leg of cell `(x, y)`: number of cells strictly above it.
    pub fn leg(&self, x: usize, y: usize) -> u32 {
        self.conjugate().part(x) - y as u32 - 1
    }

    /// The hook length of cell `(x, y)`: arm + leg + 1.
    ///
    /// ```
    /// use symf::shapes::Partition;
    /// let mu = Partition::of(&[9, 8, 8, 8, 6, 3, 2, 1]);
    /// assert_eq!(mu.hook(3, 1), 8);
    /// ```
    pub fn hook(&self, x: usize, y: usize) -> u32 {
        let conj = self.conjugate();
        self.part(y) + conj.part(x) - x as u32 - y as u32 - 1
    }

    /// The multiset of all hook lengths, in cell order.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|(x, y)| self.part(y) + conj.part(x) - x as u32 - y as u32 - 1)
            .collect()
    }

    /// `z_μ = ∏ i^{d_i} d_i!` over the part multiplicities `d_i`.
    ///
    /// ```
    /// use symf::shapes::Partition;
    /// assert_eq!(Partition::of(&[2, 2, 1, 1]).z(), 16u32.into());
    /// assert_eq!(Partition::empty().z(), 1u32.into());
    /// ```
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u32;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            for _ in 0..mult {
                z *= BigInt::from(part);
            }
            z *= factorial(mult);
        }
        z
    }

    /// `n(μ) = Σ_{(x,y)∈μ} y`, the sum of row indices over all cells.
    pub fn n_stat(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(y, &row)| y as u32 * row)
            .sum()
    }

    /// Whether every cell of `other` lies in `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.parts[i] <= self.part(i))
    }

    /// Dominance: whether `self ⪰ other`, i.e. every prefix sum of `other`
    /// is at most the corresponding prefix sum of `self`.
    ///
    /// Errors when the sizes differ (dominance compares partitions of the
    /// same integer).
    ///
    /// ```
    /// use symf::shapes::Partition;
    /// let p42 = Partition::of(&[4, 2]);
    /// let p411 = Partition::of(&[4, 1, 1]);
    /// let p33 = Partition::of(&[3, 3]);
    /// assert!(p42.dominates(&p411).unwrap());
    /// assert!(!p33.dominates(&p411).unwrap() && !p411.dominates(&p33).unwrap());
    /// ```
    pub fn dominates(&self, other: &Partition) -> Result<bool, ShapeError> {
        if self.size() != other.size() {
            return Err(ShapeError::SizeMismatch);
        }
        let mut sum_self = 0u32;
        let mut sum_other = 0u32;
        for i in 0..self.len().max(other.len()) {
            sum_self += self.part(i);
            sum_other += other.part(i);
            if sum_other > sum_self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The corners: cells whose removal leaves a partition.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if self.parts[i] > self.part(i + 1) {
                out.push((self.parts[i] as usize - 1, i));
            }
        }
        out
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "[{}]", body.join(","))
        }
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Partition, ShapeError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Partition::empty());
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let parts: Result<Vec<u32>, _> =
                inner.split(',').map(|p| p.trim().parse::<u32>()).collect();
            return Partition::new(parts.map_err(|_| ShapeError::Unparseable)?);
        }
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(ShapeError::Unparseable);
        }
        Partition::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    /// Display order: by size, then decreasing lexicographic on parts.
    fn cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

/// All partitions of `n`, in decreasing lexicographic order, optionally
/// restricted to sub-partitions of `outer` and/or to at most `max_len` parts.
///
/// ```
/// use symf::shapes::{enumerate_partitions, Partition};
/// let names: Vec<String> = enumerate_partitions(6, None, None)
///     .iter()
///     .map(|p| p.to_string())
///     .collect();
/// assert_eq!(
///     names,
///     ["6", "51", "42", "411", "33", "321", "3111", "222", "2211", "21111", "111111"]
/// );
/// assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
/// ```
pub fn enumerate_partitions(
    n: u32,
    outer: Option<&Partition>,
    max_len: Option<usize>,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn recurse(
        remaining: u32,
        max_part: u32,
        outer: Option<&Partition>,
        max_len: Option<usize>,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        if let Some(limit) = max_len {
            if current.len() >= limit {
                return;
            }
        }
        let mut cap = max_part.min(remaining);
        if let Some(shape) = outer {
            cap = cap.min(shape.part(current.len()));
        }
        for next in (1..=cap).rev() {
            current.push(next);
            recurse(remaining - next, next, outer, max_len, current, out);
            current.pop();
        }
    }
    recurse(n, n.max(1), outer, max_len, &mut current, &mut out);
    out
}

/// The Gaussian binomial `[n choose k]_q` as a polynomial in `q`;
/// out-of-range `(n, k)` gives 0.
///
/// ```
/// use symf::shapes::q_binomial;
/// use symf::scalars::{q, ParamRat};
/// assert_eq!(q_binomial(2, 1), ParamRat::one() + q());
/// assert_eq!(q_binomial(4, 2).to_ascending_string(), "1+q+2*q^2+q^3+q^4");
/// assert_eq!(q_binomial(3, 5), ParamRat::zero());
/// ```
pub fn q_binomial(n: u32, k: u32) -> ParamRat {
    if k > n {
        return ParamRat::zero();
    }
    let mut num = ParamRat::one();
    let mut den = ParamRat::one();
    for i in 1..=k {
        num = num * q_int(n - k + i);
        den = den * q_int(i);
    }
    num.divide_exact(&den).expect("q-binomial is polynomial")
}

/// The `q`-integer `[n]_q = 1 + q + … + q^{n−1}`.
pub fn q_int(n: u32) -> ParamRat {
    (0..n)
        .map(|k| ParamRat::monomial(&[(Param::Q, k)]))
        .fold(ParamRat::zero(), |acc, m| acc + m)
}

/// The `q`-factorial `[n]_q!`.
pub fn q_factorial(n: u32) -> ParamRat {
    (1..=n).fold(ParamRat::one(), |acc, k| acc * q_int(k))
}

/// Generating polynomial `Σ_{ν ⊆ μ} q^{|ν|}` of sub-partitions by size.
///
/// ```
/// use symf::shapes::{subpartition_poly, Partition};
/// assert_eq!(
///     subpartition_poly(&Partition::of(&[2, 1])).to_ascending_string(),
///     "1+q+2*q^2+q^3"
/// );
/// ```
pub fn subpartition_poly(mu: &Partition) -> ParamRat {
    // f(i, cap): sub-partitions using rows i.. with first part ≤ cap.
    fn f(
        mu: &Partition,
        i: usize,
        cap: u32,
        memo: &mut std::collections::HashMap<(usize, u32), ParamRat>,
    ) -> ParamRat {
        if i >= mu.len() {
            return ParamRat::one();
        }
        let cap = cap.min(mu.part(i));
        if let Some(hit) = memo.get(&(i, cap)) {
            return hit.clone();
        }
        let mut acc = ParamRat::zero();
        for a in 0..=cap {
            acc = acc + ParamRat::monomial(&[(Param::Q, a)]) * f(mu, i + 1, a, memo);
        }
        memo.insert((i, cap), acc.clone());
        acc
    }
    f(mu, 0, u32::MAX, &mut std::collections::HashMap::new())
}

/// The square `q`-Catalan polynomial `𝒞_n(q) = Σ_{μ ⊆ δ_n} q^{|μ|}` with
/// `δ_n = (n−1, …, 2, 1)`, computed by the first-return recursion
/// `𝒞_n = Σ_j q^{j(n−j)} 𝒞_{j−1} 𝒞_{n−j}`.
///
/// ```
/// use symf::shapes::q_catalan_square;
/// use symf::scalars::ParamRat;
/// assert_eq!(q_catalan_square(0), ParamRat::one());
/// assert_eq!(q_catalan_square(2).to_ascending_string(), "1+q");
/// ```
pub fn q_catalan_square(n: u32) -> ParamRat {
    let mut table: Vec<ParamRat> = vec![ParamRat::one()];
    for m in 1..=n {
        let mut acc = ParamRat::zero();
        for j in 1..=m {
            let weight = ParamRat::monomial(&[(Param::Q, j * (m - j))]);
            acc = acc + weight * &table[(j - 1) as usize] * &table[(m - j) as usize];
        }
        table.push(acc);
    }
    table.pop().expect("table nonempty")
}

// ---------------------------------------------------------------------------
// Skew shapes and tableaux
// ---------------------------------------------------------------------------

/// A skew diagram `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Builds `outer/inner`, checking containment.
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight (non-skew) shape.
    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    /// The outer partition.
    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// The inner partition.
    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Whether the inner shape is empty.
    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// The cells `(x, y)` of the difference, row by row bottom-up.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.outer.len() {
            for x in self.inner.part(y) as usize..self.outer.part(y) as usize {
                out.push((x, y));
            }
        }
        out
    }
}

/// A filling of a (skew) shape with positive integers.
///
/// Rows are stored bottom-up; `rows()[y][k]` sits at column
/// `inner_y + k`. Printed as bottom-up row lists, e.g. `[[1,3],[2]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// The empty tableau.
    pub fn new_empty() -> Tableau {
        Tableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    /// Builds a tableau over an explicit shape; row lengths must match.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Tableau, ShapeError> {
        if rows.len() != shape.outer.len() {
            return Err(ShapeError::ShapeMismatch);
        }
        for (y, row) in rows.iter().enumerate() {
            let expected = shape.outer.part(y) - shape.inner.part(y);
            if row.len() != expected as usize {
                return Err(ShapeError::ShapeMismatch);
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds a straight-shape tableau from bottom-up rows.
    ///
    /// ```
    /// use symf::shapes::Tableau;
    /// let tau = Tableau::from_rows(vec![vec![1, 3, 4, 6], vec![2, 5, 8], vec![7]]).unwrap();
    /// assert_eq!(tau.reading_word(), vec![7, 2, 5, 8, 1, 3, 4, 6]);
    /// assert!(tau.is_standard());
    /// ```
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Tableau, ShapeError> {
        let parts: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let outer = Partition::new(parts).map_err(|_| ShapeError::ShapeMismatch)?;
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// The underlying shape.
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Bottom-up rows of entries.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    /// The entry at cell `(x, y)`, if the cell is in the shape.
    pub fn entry(&self, x: usize, y: usize) -> Option<u32> {
        let inner = self.shape.inner.part(y) as usize;
        if y < self.rows.len() && x >= inner {
            self.rows[y].get(x - inner).copied()
        } else {
            None
        }
    }

    /// The content `γ(τ)`: multiplicity of each value `1, 2, …` up to the
    /// largest entry.
    pub fn content(&self) -> Vec<u32> {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for row in &self.rows {
            for &v in row {
                counts[v as usize - 1] += 1;
            }
        }
        counts
    }

    /// Whether rows weakly increase left-to-right and columns strictly
    /// increase bottom-to-top.
    pub fn is_semistandard(&self) -> bool {
        for y in 0..self.rows.len() {
            for (k, &v) in self.rows[y].iter().enumerate() {
                let x = self.shape.inner.part(y) as usize + k;
                if k > 0 && self.rows[y][k - 1] > v {
                    return false;
                }
                if y > 0 {
                    if let Some(below) = self.entry(x, y - 1) {
                        if below >= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether the tableau is standard: semi-standard and a bijection onto
    /// `{1, …, n}`.
    pub fn is_standard(&self) -> bool {
        if !self.is_semistandard() {
            return false;
        }
        let content = self.content();
        content.len() as u32 == self.size() && content.iter().all(|&c| c == 1)
    }

    /// The reading word: rows top to bottom, each read left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", body.join(","))
    }
}

// ---------------------------------------------------------------------------
// SSYT enumeration, Kostka numbers
// ---------------------------------------------------------------------------

/// Which fillings [`ssyt`] should enumerate.
#[derive(Clone, Copy, Debug)]
pub enum SsytFilter<'a> {
    /// Fixed content: entry `i+1` must occur exactly `content[i]` times.
    Content(&'a [u32]),
    /// All semi-standard fillings with entries at most this bound.
    MaxEntry(u32),
}

/// All semi-standard tableaux of a shape, by fixed content or bounded
/// entries, in lexicographic order of reading words.
///
/// ```
/// use symf::shapes::{ssyt, Partition, SkewShape, SsytFilter};
/// let shape = SkewShape::straight(Partition::of(&[3, 2, 1]));
/// assert_eq!(ssyt(&shape, SsytFilter::Content(&[2, 2, 1, 1])).len(), 4);
/// let single = SkewShape::straight(Partition::of(&[1]));
/// assert_eq!(ssyt(&single, SsytFilter::MaxEntry(3)).len(), 3);
/// ```
pub fn ssyt(shape: &SkewShape, filter: SsytFilter) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut budget: Vec<u32> = match filter {
        SsytFilter::Content(content) => content.to_vec(),
        SsytFilter::MaxEntry(k) => vec![shape.size(); k as usize],
    };
    if let SsytFilter::Content(content) = filter {
        if content.iter().sum::<u32>() != shape.size() {
            return Vec::new();
        }
    }
    let mut rows: Vec<Vec<u32>> = (0..shape.outer.len())
        .map(|y| Vec::with_capacity((shape.outer.part(y) - shape.inner.part(y)) as usize))
        .collect();
    let mut out = Vec::new();
    fn recurse(
        shape: &SkewShape,
        cells: &[(usize, usize)],
        idx: usize,
        budget: &mut [u32],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            let tableau = Tableau::new(shape.clone(), rows.clone()).expect("shape matches");
            out.push(tableau);
            return;
        }
        let (x, y) = cells[idx];
        let inner = shape.inner.part(y) as usize;
        let mut low = 1u32;
        if x > inner {
            if let Some(&left) = rows[y].last() {
                low = low.max(left);
            }
        }
        if y > 0 {
            let inner_below = shape.inner.part(y - 1) as usize;
            if x >= inner_below && x < shape.outer.part(y - 1) as usize {
                low = low.max(rows[y - 1][x - inner_below] + 1);
            }
        }
        for v in low..=budget.len() as u32 {
            if budget[v as usize - 1] == 0 {
                continue;
            }
            budget[v as usize - 1] -= 1;
            rows[y].push(v);
            recurse(shape, cells, idx + 1, budget, rows, out);
            rows[y].pop();
            budget[v as usize - 1] += 1;
        }
    }
    recurse(shape, &cells, 0, &mut budget, &mut rows, &mut out);
    out.sort_by(|a, b| a.reading_word().cmp(&b.reading_word()));
    out
}

/// The Kostka number `K_{λμ}`: semi-standard tableaux of shape `λ` and
/// content `μ`.
///
/// ```
/// use symf::shapes::{kostka, Partition};
/// assert_eq!(
///     kostka(&Partition::of(&[3, 1]), &Partition::of(&[2, 1, 1])).unwrap(),
///     2
/// );
/// ```
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64, ShapeError> {
    if lambda.size() != mu.size() {
        return Err(ShapeError::SizeMismatch);
    }
    Ok(ssyt(
        &SkewShape::straight(lambda.clone()),
        SsytFilter::Content(mu.parts()),
    )
    .len() as u64)
}

/// The number of standard tableaux of shape `μ` via the hook length formula
/// `f^μ = n!/∏ 𝔥(c)`.
///
/// ```
/// use symf::shapes::{hook_count, Partition};
/// assert_eq!(hook_count(&Partition::of(&[3, 2, 1])), 16u32.into());
/// assert_eq!(hook_count(&Partition::of(&[5])), 1u32.into());
/// ```
pub fn hook_count(mu: &Partition) -> BigInt {
    let mut num = factorial(mu.size());
    for h in mu.hooks() {
        num /= BigInt::from(h);
    }
    num
}

/// The cocharge `q`-refinement `f^μ(q) = q^{n(μ)} [n]_q!/∏ [𝔥(c)]_q`, a
/// polynomial whose value at `q = 1` is `f^μ`.
pub fn hook_count_q(mu: &Partition) -> ParamRat {
    let mut num = ParamRat::monomial(&[(Param::Q, mu.n_stat())]) * q_factorial(mu.size());
    let mut den = ParamRat::one();
    for h in mu.hooks() {
        den = den * q_int(h);
    }
    num = num.divide_exact(&den).expect("hook quotient is polynomial");
    num
}

// ---------------------------------------------------------------------------
// Charge and cocharge
// ---------------------------------------------------------------------------

/// The minimization `𝔪(τ)` of a semi-standard tableau on a straight shape
/// with partition content.
///
/// The reading word is split into standard subwords: each starts at the
/// leftmost unused 1 and repeatedly picks up the next value at the first
/// unused position to the right, wrapping around when none remains. Within
/// a subword, counters stay constant while moving rightward in the word and
/// rise by 1 on each wrap to the left; for a standard tableau this is the
/// single sweep through values `1..n` that rises exactly at the reading
/// descents.
///
/// ```
/// use symf::shapes::{minimize, Tableau};
/// let tau = Tableau::from_rows(vec![vec![1, 2, 6, 7], vec![3, 4, 8], vec![5, 9]]).unwrap();
/// let m = minimize(&tau).unwrap();
/// assert_eq!(m.rows(), &[vec![0, 0, 2, 2], vec![1, 1, 3], vec![2, 4]]);
/// ```
pub fn minimize(tau: &Tableau) -> Result<Tableau, ShapeError> {
    if !tau.shape().is_straight() || !tau.is_semistandard() {
        return Err(ShapeError::NotSemistandard);
    }
    Partition::new(tau.content()).map_err(|_| ShapeError::NonPartitionContent)?;
    // The reading word with cell coordinates: rows top to bottom.
    let mut seq: Vec<(usize, usize, u32)> = Vec::new();
    for (y, row) in tau.rows().iter().enumerate().rev() {
        for (x, &v) in row.iter().enumerate() {
            seq.push((x, y, v));
        }
    }
    let n = seq.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut rows: Vec<Vec<u32>> = tau.rows().iter().map(|r| vec![0; r.len()]).collect();
    while remaining > 0 {
        let start = (0..n)
            .find(|&p| !used[p] && seq[p].2 == 1)
            .expect("partition content provides a 1");
        used[start] = true;
        remaining -= 1;
        let (sx, sy, _) = seq[start];
        rows[sy][sx] = 0;
        let mut counter = 0u32;
        let mut pos = start;
        let mut value = 2u32;
        loop {
            let next = (pos + 1..n)
                .find(|&p| !used[p] && seq[p].2 == value)
                .or_else(|| (0..pos).find(|&p| !used[p] && seq[p].2 == value));
            let Some(p) = next else { break };
            used[p] = true;
            remaining -= 1;
            if p < pos {
                counter += 1;
            }
            let (x, y, _) = seq[p];
            rows[y][x] = counter;
            pos = p;
            value += 1;
        }
    }
    Ok(Tableau {
        shape: tau.shape().clone(),
        rows,
    })
}

/// The cocharge: sum of the entries of the minimization.
///
/// ```
/// use symf::shapes::{cocharge, Tableau};
/// let tau = Tableau::from_rows(vec![vec![1, 2, 6, 7], vec![3, 4, 8], vec![5, 9]]).unwrap();
/// assert_eq!(cocharge(&tau).unwrap(), 15);
/// ```
pub fn cocharge(tau: &Tableau) -> Result<u32, ShapeError> {
    Ok(minimize(tau)?.rows().iter().flatten().sum())
}

/// The charge `n(μ) − cocharge(τ)` where `μ` is the (partition) content of
/// `τ`; errors when the content is not weakly decreasing.
pub fn charge(tau: &Tableau) -> Result<u32, ShapeError> {
    let content = Partition::new(tau.content()).map_err(|_| ShapeError::NonPartitionContent)?;
    Ok(content.n_stat() - cocharge(tau)?)
}

/// The Kostka–Foulkes polynomial `K_{λμ}(q) = Σ_τ q^{charge(τ)}` over
/// semi-standard tableaux of shape `λ` and content `μ`.
///
/// ```
/// use symf::shapes::{kostka_foulkes, Partition};
/// let k = kostka_foulkes(&Partition::of(&[3, 1]), &Partition::of(&[1, 1, 1, 1])).unwrap();
/// assert_eq!(k.to_string(), "q^5+q^4+q^3");
/// ```
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<ParamRat, ShapeError> {
    if lambda.size() != mu.size() {
        return Err(ShapeError::SizeMismatch);
    }
    let mut acc = ParamRat::zero();
    for tau in ssyt(
        &SkewShape::straight(lambda.clone()),
        SsytFilter::Content(mu.parts()),
    ) {
        acc = acc + ParamRat::monomial(&[(Param::Q, charge(&tau)?)]);
    }
    Ok(acc)
}

/// The denominator `∏_{λ⊢n} Σ_{μ⊢n} K_{λμ}` of the probability that a
/// uniformly-random-per-row choice lands on a standard filling; the sequence
/// starts 1, 2, 9, 560, 480480.
///
/// ```
/// use symf::shapes::bpr_denominator;
/// assert_eq!(bpr_denominator(1), 1u32.into());
/// assert_eq!(bpr_denominator(4), 560u32.into());
/// ```
pub fn bpr_denominator(n: u32) -> BigInt {
    let all = enumerate_partitions(n, None, None);
    let mut product = BigInt::one();
    for lambda in &all {
        let mut row_sum = BigInt::from(0u32);
        for mu in &all {
            row_sum += BigInt::from(kostka(lambda, mu).expect("equal sizes"));
        }
        product *= row_sum;
    }
    product
}

// ---------------------------------------------------------------------------
// Biwords and RSK
// ---------------------------------------------------------------------------

/// A lexicographic two-row array: pairs `(top_i, bottom_i)` with
/// `top_i < top_{i+1}`, or `top_i = top_{i+1}` and `bottom_i ≤ bottom_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Biword {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Biword {
    /// Builds a biword, validating equal lengths and lexicographic order.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Biword, ShapeError> {
        if top.len() != bottom.len() {
            return Err(ShapeError::NotLexicographic);
        }
        for i in 1..top.len() {
            let ordered = top[i - 1] < top[i]
                || (top[i - 1] == top[i] && bottom[i - 1] <= bottom[i]);
            if !ordered {
                return Err(ShapeError::NotLexicographic);
            }
        }
        Ok(Biword { top, bottom })
    }

    /// The biword of a plain word: top row `1, 2, …, n`.
    pub fn from_word(word: &[u32]) -> Biword {
        Biword {
            top: (1..=word.len() as u32).collect(),
            bottom: word.to_vec(),
        }
    }

    /// Top row (the `b_i`).
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    /// Bottom row (the `a_i`).
    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.top.len()
    }

    /// Whether the biword is empty.
    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// The inverse biword: swap the rows and re-sort lexicographically.
    ///
    /// ```
    /// use symf::shapes::Biword;
    /// let w = Biword::new(
    ///     vec![1, 1, 1, 2, 2, 3, 3, 4, 4, 4],
    ///     vec![3, 4, 5, 1, 4, 1, 4, 1, 2, 2],
    /// )
    /// .unwrap();
    /// let inv = w.inverse();
    /// assert_eq!(inv.top(), &[1, 1, 1, 2, 2, 3, 4, 4, 4, 5]);
    /// assert_eq!(inv.bottom(), &[2, 3, 4, 4, 4, 1, 1, 2, 3, 1]);
    /// ```
    pub fn inverse(&self) -> Biword {
        let mut pairs: Vec<(u32, u32)> = self
            .bottom
            .iter()
            .zip(&self.top)
            .map(|(&a, &b)| (a, b))
            .collect();
        pairs.sort();
        Biword {
            top: pairs.iter().map(|&(a, _)| a).collect(),
            bottom: pairs.iter().map(|&(_, b)| b).collect(),
        }
    }
}

/// Row-inserts `a` into a semi-standard tableau, returning the new tableau
/// and the corner cell where the shape grew.
///
/// ```
/// use symf::shapes::{insert, Tableau};
/// let (tau, corner) = insert(&Tableau::new_empty(), 5);
/// assert_eq!(tau.rows(), &[vec![5]]);
/// assert_eq!(corner, (0, 0));
/// ```
pub fn insert(tau: &Tableau, a: u32) -> (Tableau, (usize, usize)) {
    debug_assert!(tau.shape().is_straight());
    let mut rows = tau.rows().to_vec();
    let mut carry = a;
    let mut y = 0;
    loop {
        if y == rows.len() {
            rows.push(vec![carry]);
            break;
        }
        // Leftmost entry strictly larger than the carried value.
        match rows[y].iter().position(|&x| x > carry) {
            None => {
                rows[y].push(carry);
                break;
            }
            Some(pos) => {
                std::mem::swap(&mut rows[y][pos], &mut carry);
                y += 1;
            }
        }
    }
    let corner = (rows[y].len() - 1, y);
    let tableau = Tableau::from_rows(rows).expect("insertion preserves shape");
    (tableau, corner)
}

/// Inserts the letters of a word left to right into the given tableau.
pub fn insert_word_into(tau: &Tableau, word: &[u32]) -> Tableau {
    word.iter().fold(tau.clone(), |t, &a| insert(&t, a).0)
}

/// Builds the insertion tableau of a word: `(ε ← w)`.
///
/// ```
/// use symf::shapes::{insert_word, reading_word, Tableau};
/// let tau = Tableau::from_rows(vec![vec![1, 1, 2], vec![2, 3], vec![4]]).unwrap();
/// assert_eq!(insert_word(&reading_word(&tau)), tau);
/// ```
pub fn insert_word(word: &[u32]) -> Tableau {
    insert_word_into(&Tableau::new_empty(), word)
}

/// The reading word of a tableau (rows top to bottom, left to right).
pub fn reading_word(tau: &Tableau) -> Vec<u32> {
    tau.reading_word()
}

/// The RSK correspondence: maps a lexicographic biword to a pair `(P, Q)` of
/// same-shape semi-standard tableaux (insertion and recording).
///
/// ```
/// use symf::shapes::{rsk, Biword, Tableau};
/// let (p, q) = rsk(&Biword::from_word(&[2, 3, 1]));
/// assert_eq!(p, Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap());
/// assert_eq!(q, Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap());
/// ```
pub fn rsk(w: &Biword) -> (Tableau, Tableau) {
    let mut p = Tableau::new_empty();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for (&b, &a) in w.top().iter().zip(w.bottom()) {
        let (next, (_, y)) = insert(&p, a);
        p = next;
        if y == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[y].push(b);
    }
    let q = Tableau::from_rows(q_rows).expect("recording tableau matches shape");
    (p, q)
}

/// The inverse of RSK: recovers the biword from an insertion/recording pair.
///
/// Errors when the tableaux have different shapes or are not semi-standard.
pub fn unrsk(p: &Tableau, q: &Tableau) -> Result<Biword, ShapeError> {
    if p.shape() != q.shape() {
        return Err(ShapeError::ShapeMismatch);
    }
    if !p.shape().is_straight() {
        return Err(ShapeError::ShapeMismatch);
    }
    if !p.is_semistandard() || !q.is_semistandard() {
        return Err(ShapeError::NotSemistandard);
    }
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    while !p_rows.is_empty() {
        // Rightmost cell holding the maximum recording entry; equal maxima
        // occupy distinct columns, so the largest column is unique.
        let b = *q_rows.iter().flatten().max().expect("nonempty");
        let (mut x, mut y) = (0usize, 0usize);
        let mut found = false;
        for (ry, row) in q_rows.iter().enumerate() {
            if let Some(rx) = row.iter().rposition(|&v| v == b) {
                if !found || rx > x {
                    x = rx;
                    y = ry;
                    found = true;
                }
            }
        }
        debug_assert!(found && x + 1 == q_rows[y].len());
        // `(x, y)` is a corner; reverse the bump path from it.
        q_rows[y].pop();
        let mut carry = p_rows[y].pop().expect("same shape");
        if q_rows[y].is_empty() {
            q_rows.pop();
            p_rows.pop();
        }
        for r in (0..y).rev() {
            let pos = p_rows[r]
                .iter()
                .rposition(|&v| v < carry)
                .expect("reverse bump target exists");
            std::mem::swap(&mut p_rows[r][pos], &mut carry);
        }
        pairs.push((b, carry));
    }
    pairs.reverse();
    Biword::new(
        pairs.iter().map(|&(b, _)| b).collect(),
        pairs.iter().map(|&(_, a)| a).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q, ParamRat};

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            Partition::of(&[4, 4, 2, 1]).conjugate(),
            Partition::of(&[4, 3, 2, 2])
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_multiset_of_321() {
        let mu = Partition::of(&[3, 2, 1]);
        assert_eq!(mu.hooks(), vec![5, 3, 1, 3, 1, 1]);
        assert_eq!(mu.hooks().iter().product::<u32>(), 45);
        let single = Partition::of(&[1]);
        assert_eq!((single.arm(0, 0), single.leg(0, 0), single.hook(0, 0)), (0, 0, 1));
    }

    #[test]
    fn hook_sum_identity() {
        for n in 0..=8 {
            for mu in enumerate_partitions(n, None, None) {
                let total: u32 = mu.hooks().iter().sum();
                assert_eq!(
                    total,
                    mu.n_stat() + mu.conjugate().n_stat() + mu.size(),
                    "hook sum fails for {mu}"
                );
            }
        }
    }

    #[test]
    fn empty_partition_statistics() {
        let zero = Partition::empty();
        assert_eq!(zero.size(), 0);
        assert_eq!(zero.len(), 0);
        assert_eq!(zero.z(), BigInt::one());
        assert_eq!(zero.n_stat(), 0);
        assert_eq!(zero.to_string(), "0");
    }

    #[test]
    fn dominance_examples() {
        let p42 = Partition::of(&[4, 2]);
        let p411 = Partition::of(&[4, 1, 1]);
        assert!(p42.dominates(&p411).unwrap());
        assert!(!p411.dominates(&p42).unwrap());
        assert!(p42.dominates(&p42).unwrap());
        assert_eq!(
            p42.dominates(&Partition::of(&[3])),
            Err(ShapeError::SizeMismatch)
        );
    }

    #[test]
    fn corners_of_4421() {
        assert_eq!(
            Partition::of(&[4, 4, 2, 1]).corners(),
            vec![(3, 1), (1, 2), (0, 3)]
        );
    }

    #[test]
    fn enumerate_inside_staircase() {
        let delta5 = Partition::of(&[4, 3, 2, 1]);
        let inside: Vec<Partition> = enumerate_partitions(5, Some(&delta5), None);
        let expected = ["41", "32", "311", "221", "2111"]
            .map(|s| s.parse::<Partition>().unwrap());
        assert_eq!(inside, expected);
    }

    #[test]
    fn q_binomial_rectangle_identity() {
        for n in 0..=5u32 {
            for k in 0..=5u32 {
                // Σ_{μ ⊆ n^k} q^{|μ|} = qbinom(n+k, k).
                let rect = Partition::new(vec![n; k as usize]).unwrap();
                assert_eq!(subpartition_poly(&rect), q_binomial(n + k, k));
            }
        }
    }

    #[test]
    fn q_catalan_matches_staircase_and_counts() {
        for n in 0..=6u32 {
            let stair =
                Partition::new((1..n).rev().collect()).unwrap();
            assert_eq!(q_catalan_square(n), subpartition_poly(&stair));
        }
        let at_one = q_catalan_square(4)
            .substitute(&[(Param::Q, ParamRat::one())])
            .unwrap();
        assert_eq!(at_one, ParamRat::from_int(14));
    }

    #[test]
    fn subpartition_poly_conjugation_symmetric() {
        for n in 0..=7 {
            for mu in enumerate_partitions(n, None, None) {
                assert_eq!(subpartition_poly(&mu), subpartition_poly(&mu.conjugate()));
            }
        }
    }

    #[test]
    fn ssyt_shape_321_content_2211() {
        let found = ssyt(
            &SkewShape::straight(Partition::of(&[3, 2, 1])),
            SsytFilter::Content(&[2, 2, 1, 1]),
        );
        let expected = [
            vec![vec![1, 1, 2], vec![2, 3], vec![4]],
            vec![vec![1, 1, 2], vec![2, 4], vec![3]],
            vec![vec![1, 1, 3], vec![2, 2], vec![4]],
            vec![vec![1, 1, 4], vec![2, 2], vec![3]],
        ];
        let got: Vec<Vec<Vec<u32>>> = found.iter().map(|t| t.rows().to_vec()).collect();
        let mut expected: Vec<Vec<Vec<u32>>> = expected.to_vec();
        expected.sort_by(|a, b| {
            let rw = |rows: &Vec<Vec<u32>>| -> Vec<u32> {
                rows.iter().rev().flatten().copied().collect()
            };
            rw(a).cmp(&rw(b))
        });
        assert_eq!(got, expected);
    }

    #[test]
    fn standard_count_matches_hooks() {
        for n in 0..=6 {
            let content = vec![1u32; n as usize];
            for mu in enumerate_partitions(n, None, None) {
                let count = ssyt(
                    &SkewShape::straight(mu.clone()),
                    SsytFilter::Content(&content),
                )
                .len();
                assert_eq!(BigInt::from(count), hook_count(&mu), "f^{mu} mismatch");
            }
        }
    }

    #[test]
    fn kostka_n4_matrix() {
        let order = ["4", "31", "22", "211", "1111"].map(|s| s.parse::<Partition>().unwrap());
        let expected: [[u64; 5]; 5] = [
            [1, 1, 1, 1, 1],
            [0, 1, 1, 2, 3],
            [0, 0, 1, 1, 2],
            [0, 0, 0, 1, 3],
            [0, 0, 0, 0, 1],
        ];
        for (i, lambda) in order.iter().enumerate() {
            for (j, mu) in order.iter().enumerate() {
                assert_eq!(
                    kostka(lambda, mu).unwrap(),
                    expected[i][j],
                    "K_{{{lambda},{mu}}}"
                );
            }
        }
    }

    #[test]
    fn charge_machinery_on_minimization_figure() {
        let tau =
            Tableau::from_rows(vec![vec![1, 2, 6, 7], vec![3, 4, 8], vec![5, 9]]).unwrap();
        let m = minimize(&tau).unwrap();
        assert_eq!(m.rows(), &[vec![0, 0, 2, 2], vec![1, 1, 3], vec![2, 4]]);
        assert_eq!(cocharge(&tau).unwrap(), 15);
    }

    #[test]
    fn cocharge_extremes() {
        // Row tableau: cocharge 0.
        let row = Tableau::from_rows(vec![vec![1, 2, 3, 4, 5]]).unwrap();
        assert_eq!(cocharge(&row).unwrap(), 0);
        // Content = shape tableau: cocharge n(λ).
        for n in 1..=6 {
            for lambda in enumerate_partitions(n, None, None) {
                let rows: Vec<Vec<u32>> = lambda
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(y, &len)| vec![y as u32 + 1; len as usize])
                    .collect();
                let tau = Tableau::from_rows(rows).unwrap();
                assert_eq!(cocharge(&tau).unwrap(), lambda.n_stat());
            }
        }
    }

    #[test]
    fn cocharge_refined_hook_formula() {
        for n in 1..=6 {
            let content = vec![1u32; n as usize];
            for mu in enumerate_partitions(n, None, None) {
                let mut acc = ParamRat::zero();
                for tau in ssyt(
                    &SkewShape::straight(mu.clone()),
                    SsytFilter::Content(&content),
                ) {
                    acc = acc
                        + ParamRat::monomial(&[(Param::Q, cocharge(&tau).unwrap())]);
                }
                assert_eq!(acc, hook_count_q(&mu), "f^{mu}(q) mismatch");
            }
        }
    }

    #[test]
    fn hook_count_q_at_one() {
        for n in 1..=7 {
            for mu in enumerate_partitions(n, None, None) {
                let value = hook_count_q(&mu)
                    .substitute(&[(Param::Q, ParamRat::one())])
                    .unwrap();
                assert_eq!(value.as_integer().unwrap(), hook_count(&mu));
            }
        }
    }

    #[test]
    fn q_kostka_n4_matrix() {
        let order = ["4", "31", "22", "211", "1111"].map(|s| s.parse::<Partition>().unwrap());
        let qn = |k: u32| ParamRat::monomial(&[(Param::Q, k)]);
        let expected: [[ParamRat; 5]; 5] = [
            [ParamRat::one(), q(), qn(2), qn(3), qn(6)],
            [
                ParamRat::zero(),
                ParamRat::one(),
                q(),
                qn(2) + q(),
                qn(5) + qn(4) + qn(3),
            ],
            [
                ParamRat::zero(),
                ParamRat::zero(),
                ParamRat::one(),
                q(),
                qn(4) + qn(2),
            ],
            [
                ParamRat::zero(),
                ParamRat::zero(),
                ParamRat::zero(),
                ParamRat::one(),
                qn(3) + qn(2) + q(),
            ],
            [
                ParamRat::zero(),
                ParamRat::zero(),
                ParamRat::zero(),
                ParamRat::zero(),
                ParamRat::one(),
            ],
        ];
        for (i, lambda) in order.iter().enumerate() {
            for (j, mu) in order.iter().enumerate() {
                assert_eq!(
                    kostka_foulkes(lambda, mu).unwrap(),
                    expected[i][j],
                    "K_{{{lambda},{mu}}}(q)"
                );
            }
        }
    }

    #[test]
    fn bpr_denominator_sequence() {
        let expected: [u64; 5] = [1, 2, 9, 560, 480480];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(bpr_denominator(i as u32 + 1), BigInt::from(want));
        }
    }

    #[test]
    fn insertion_display_from_rsk_section() {
        let p = Tableau::from_rows(vec![
            vec![1, 1, 1, 2, 3, 3],
            vec![2, 3, 3],
            vec![3, 5, 5],
        ])
        .unwrap();
        let (next, corner) = insert(&p, 1);
        assert_eq!(
            next.rows(),
            &[
                vec![1, 1, 1, 1, 3, 3],
                vec![2, 2, 3],
                vec![3, 3, 5],
                vec![5]
            ]
        );
        assert_eq!(corner, (0, 3));
    }

    #[test]
    fn insert_appends_when_largest() {
        let tau = Tableau::from_rows(vec![vec![1, 2, 4]]).unwrap();
        let (next, corner) = insert(&tau, 4);
        assert_eq!(next.rows(), &[vec![1, 2, 4, 4]]);
        assert_eq!(corner, (3, 0));
    }

    #[test]
    fn word_insertion_exercise() {
        let start = Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        let result = insert_word_into(&start, &[2, 1, 1, 3, 2, 4, 1, 2]);
        assert_eq!(
            result.rows(),
            &[vec![1, 1, 1, 1, 2], vec![2, 2, 2, 4], vec![3, 3]]
        );
    }

    #[test]
    fn reading_word_insertion_roundtrip() {
        for n in 1..=5 {
            for mu in enumerate_partitions(n, None, None) {
                for tau in ssyt(&SkewShape::straight(mu.clone()), SsytFilter::MaxEntry(3)) {
                    assert_eq!(insert_word(&tau.reading_word()), tau);
                }
            }
        }
    }

    #[test]
    fn rsk_inverse_pair_from_paper() {
        let w = Biword::new(
            vec![1, 1, 1, 2, 2, 3, 3, 4, 4, 4],
            vec![3, 4, 5, 1, 4, 1, 4, 1, 2, 2],
        )
        .unwrap();
        let (p, q_tab) = rsk(&w);
        let (pi, qi) = rsk(&w.inverse());
        assert_eq!(pi, q_tab);
        assert_eq!(qi, p);
        assert_eq!(unrsk(&p, &q_tab).unwrap(), w);
    }

    #[test]
    fn rsk_roundtrip_small_permutations() {
        fn permutations(n: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for rest in permutations(n - 1) {
                for pos in 0..=rest.len() {
                    let mut word = rest.clone();
                    word.insert(pos, n);
                    out.push(word);
                }
            }
            out
        }
        for word in permutations(4) {
            let w = Biword::from_word(&word);
            let (p, q_tab) = rsk(&w);
            assert!(p.is_standard() && q_tab.is_standard());
            assert_eq!(unrsk(&p, &q_tab).unwrap(), w);
        }
    }

    #[test]
    fn biword_validation() {
        assert_eq!(
            Biword::new(vec![2, 1], vec![1, 1]),
            Err(ShapeError::NotLexicographic)
        );
        assert_eq!(
            Biword::new(vec![1, 1], vec![2, 1]),
            Err(ShapeError::NotLexicographic)
        );
        assert!(Biword::new(vec![], vec![]).unwrap().is_empty());
    }

    #[test]
    fn partition_parsing_roundtrip() {
        for text in ["0", "4321", "222", "[12,5,2]"] {
            let p: Partition = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!("43a".parse::<Partition>().is_err());
        assert!("34".parse::<Partition>().is_err());
    }

    #[test]
    fn display_order_matches_paper() {
        let mut all = enumerate_partitions(4, None, None);
        all.sort();
        let names: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["4", "31", "22", "211", "1111"]);
    }
}

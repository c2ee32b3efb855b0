//! sl(n) over the rationals together with the flag determined by a highest
//! weight.
//!
//! Matrix indices in the public API are 1-based, matching the usual `E_ij`
//! notation for matrix units.

use std::fmt;
use std::ops::Range;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{CoordinateSystem, SparseVector};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("dimension mismatch: {0}x{0} against {1}x{1}")]
    DimensionMismatch(usize, usize),
    #[error("element is not block-upper-triangular for the flag")]
    NotParabolic,
    #[error("element is not diagonal")]
    NotDiagonal,
    #[error("element has nonzero trace {0}")]
    NotTraceless(Rational),
    #[error("matrix is singular")]
    Singular,
    #[error("base change does not preserve the flag")]
    NotFlagCompatible,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("dimension n = {0} must be at least 2")]
    DimensionTooSmall(usize),
    #[error("weight has no parts")]
    Empty,
    #[error("malformed weight pair `{0}` (expected `n_i:l_i`)")]
    Malformed(String),
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("indices must be strictly increasing")]
    NotIncreasing,
    #[error("coefficient of omega_{0} must be at least 1")]
    ZeroCoefficient(usize),
}

/// A dominant weight `λ = Σ l_i ω_{n_i}` of sl(n) with every `l_i ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightSpec {
    n: usize,
    parts: Vec<(usize, u32)>,
}

impl WeightSpec {
    pub fn new(n: usize, parts: Vec<(usize, u32)>) -> Result<Self, WeightError> {
        if n < 2 {
            return Err(WeightError::DimensionTooSmall(n));
        }
        if parts.is_empty() {
            return Err(WeightError::Empty);
        }
        let mut prev = 0;
        for &(index, coeff) in &parts {
            if index == 0 || index >= n {
                return Err(WeightError::IndexOutOfRange { index, max: n - 1 });
            }
            if index <= prev {
                return Err(WeightError::NotIncreasing);
            }
            if coeff == 0 {
                return Err(WeightError::ZeroCoefficient(index));
            }
            prev = index;
        }
        Ok(WeightSpec { n, parts })
    }

    /// Parses the `n_i:l_i,...` grammar, e.g. `1:1,2:1` for `ω_1 + ω_2`.
    pub fn parse(n: usize, text: &str) -> Result<Self, WeightError> {
        let mut parts = Vec::new();
        for pair in text.split(',') {
            let malformed = || WeightError::Malformed(pair.to_string());
            let (a, b) = pair.split_once(':').ok_or_else(malformed)?;
            let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
            if !digits(a) || !digits(b) {
                return Err(malformed());
            }
            let index = a.parse().map_err(|_| malformed())?;
            let coeff = b.parse().map_err(|_| malformed())?;
            parts.push((index, coeff));
        }
        WeightSpec::new(n, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[(usize, u32)] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `m(λ)`, the least coefficient.
    pub fn min_coefficient(&self) -> u32 {
        self.parts.iter().map(|&(_, l)| l).min().unwrap_or(0)
    }

    /// Coefficient of `ω_i` (zero when `i` is not one of the `n_j`).
    pub fn coefficient(&self, i: usize) -> u32 {
        self.parts
            .iter()
            .find(|&&(index, _)| index == i)
            .map_or(0, |&(_, l)| l)
    }

    /// Coordinates `a_1, …, a_n` of λ against `L_1, …, L_n`.
    pub fn l_coordinates(&self) -> Vec<u32> {
        (1..=self.n)
            .map(|i| {
                self.parts
                    .iter()
                    .filter(|&&(index, _)| index >= i)
                    .map(|&(_, l)| l)
                    .sum()
            })
            .collect()
    }

    /// The `n_i:l_i,...` form accepted by [`WeightSpec::parse`].
    pub fn to_pairs_string(&self) -> String {
        self.parts
            .iter()
            .map(|(i, l)| format!("{i}:{l}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .parts
            .iter()
            .map(|&(i, l)| {
                if l == 1 {
                    format!("w{i}")
                } else {
                    format!("{l}w{i}")
                }
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// The coordinate flag `E_1 ⊂ … ⊂ E_k ⊂ E` with `dim E_i = n_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlagSpec {
    n: usize,
    bounds: Vec<usize>,
    blocks: Vec<usize>,
}

impl FlagSpec {
    pub fn new(n: usize, bounds: Vec<usize>) -> Self {
        assert!(
            bounds.windows(2).all(|w| w[0] < w[1]),
            "bounds must increase"
        );
        assert!(
            bounds.iter().all(|&b| 1 <= b && b < n),
            "bounds out of range"
        );
        let mut blocks = Vec::with_capacity(bounds.len() + 1);
        let mut prev = 0;
        for &b in &bounds {
            blocks.push(b - prev);
            prev = b;
        }
        blocks.push(n - prev);
        FlagSpec { n, bounds, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    /// Block sizes `d_1, …, d_{k+1}`.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// 1-based index of the diagonal block containing row/column `i` (1-based).
    pub fn block(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.n, "index {i} out of range");
        1 + self.bounds.iter().filter(|&&b| b < i).count()
    }

    /// Row/column range (1-based, half-open) of block `b`.
    pub fn block_range(&self, b: usize) -> Range<usize> {
        let start = if b == 1 { 1 } else { self.bounds[b - 2] + 1 };
        let end = if b <= self.bounds.len() {
            self.bounds[b - 1] + 1
        } else {
            self.n + 1
        };
        start..end
    }

    /// `D = Σ_l d_l (n − n_l)`, the dimension of the complementary algebra.
    pub fn complementary_dimension(&self) -> usize {
        self.bounds
            .iter()
            .zip(&self.blocks)
            .map(|(&b, &d)| d * (self.n - b))
            .sum()
    }

    pub fn is_block_upper(&self, x: &Matrix) -> bool {
        x.nonzero_entries()
            .all(|(i, j, _)| self.block(i) <= self.block(j))
    }

    pub fn is_strictly_block_lower(&self, x: &Matrix) -> bool {
        x.nonzero_entries()
            .all(|(i, j, _)| self.block(i) > self.block(j))
    }
}

pub fn flag_from_weight(w: &WeightSpec) -> FlagSpec {
    FlagSpec::new(w.n(), w.parts().iter().map(|&(i, _)| i).collect())
}

/// A dense `n × n` rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

/// Elements of sl(n) (and gl(n)) are plain matrices.
pub type LieElement = Matrix;

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 1..=n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zero(n);
        m.set(i, j, Rational::one());
        m
    }

    /// `H_i = E_ii − E_{i+1,i+1}`.
    pub fn cartan(n: usize, i: usize) -> Self {
        let mut m = Matrix::zero(n);
        m.set(i, i, Rational::one());
        m.set(i + 1, i + 1, -Rational::one());
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Matrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m.set(i + 1, j + 1, Rational::from(x));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    /// `(i, j, x_ij)` for every nonzero entry, row-major, 1-based.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (k / n + 1, k % n + 1, x))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (1..=self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzero_entries().all(|(i, j, _)| i == j)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Self, LieError> {
        self.check_dim(other)?;
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Self, LieError> {
        self.check_dim(other)?;
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Self, LieError> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Matrix::zero(n);
        for (i, k, a) in self.nonzero_entries() {
            for j in 1..=n {
                let b = other.get(k, j);
                if !b.is_zero() {
                    out.entries[(i - 1) * n + (j - 1)] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zero(self.n);
        for (i, j, x) in self.nonzero_entries() {
            t.set(j, i, x.clone());
        }
        t
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self, LieError> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 1..=n {
            let pivot = (col..=n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(LieError::Singular)?;
            if pivot != col {
                for j in 1..=n {
                    a.entries
                        .swap((pivot - 1) * n + j - 1, (col - 1) * n + j - 1);
                    inv.entries
                        .swap((pivot - 1) * n + j - 1, (col - 1) * n + j - 1);
                }
            }
            let p = a.get(col, col).recip();
            for j in 1..=n {
                let x = a.get(col, j) * &p;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p;
                inv.set(col, j, y);
            }
            for r in 1..=n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 1..=n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &(&f * inv.get(col, j));
                    inv.set(r, j, y);
                }
            }
        }
        Ok(inv)
    }

    /// Image of the basis vector `e_j` (1-based), as `(i, x_ij)` pairs.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &Rational)> {
        (1..=self.n)
            .map(move |i| (i, self.get(i, j)))
            .filter(|(_, x)| !x.is_zero())
    }

    /// Coordinates in the `n²` matrix-entry labels `(i, j)`.
    pub fn to_sparse(&self) -> SparseVector<(usize, usize)> {
        self.nonzero_entries()
            .map(|(i, j, x)| ((i, j), x.clone()))
            .collect()
    }

    fn check_dim(&self, other: &Matrix) -> Result<(), LieError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(LieError::DimensionMismatch(self.n, other.n))
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 1..=self.n {
            if i > 1 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// The commutator `xy − yx`.
pub fn bracket(x: &Matrix, y: &Matrix) -> Result<Matrix, LieError> {
    x.mul(y)?.sub(&y.mul(x)?)
}

/// Which part of the flag-adapted basis an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    /// Member of the complementary algebra `n(E•)`.
    Complementary,
    /// `H_i = E_ii − E_{i+1,i+1}`.
    Cartan,
    /// Off-diagonal member of the stabilizer algebra `p(E•)`.
    Upper,
}

/// The complementary basis: `E_ji` with `n_{l−1} < i ≤ n_l < j`, grouped by
/// `l`, then ordered by `(i, j)`.
pub fn complementary_basis(flag: &FlagSpec) -> Vec<Matrix> {
    let n = flag.n();
    let mut out = Vec::new();
    let mut prev = 0;
    for &bound in flag.bounds() {
        for i in prev + 1..=bound {
            for j in bound + 1..=n {
                out.push(Matrix::unit(n, j, i));
            }
        }
        prev = bound;
    }
    out
}

/// `H_1..H_{n−1}` followed by the off-diagonal block-upper units in
/// lexicographic `(i, j)` order.
pub fn parabolic_basis(flag: &FlagSpec) -> Vec<(Role, Matrix)> {
    let n = flag.n();
    let mut out: Vec<(Role, Matrix)> = (1..n)
        .map(|i| (Role::Cartan, Matrix::cartan(n, i)))
        .collect();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && flag.block(i) <= flag.block(j) {
                out.push((Role::Upper, Matrix::unit(n, i, j)));
            }
        }
    }
    out
}

/// An ordered basis of sl(n) split as complementary members (first) and
/// stabilizer members, with its structure constants.
#[derive(Clone)]
pub struct LieBasis {
    flag: FlagSpec,
    elements: Vec<Matrix>,
    roles: Vec<Role>,
    complementary: usize,
    coordinates: CoordinateSystem<(usize, usize)>,
    // structure[a][b] = coordinates of [x_a, x_b]
    structure: Vec<Vec<SparseVector<usize>>>,
}

impl LieBasis {
    /// The standard flag-adapted basis of sl(n).
    pub fn flag_adapted(flag: &FlagSpec) -> Self {
        let mut elements = complementary_basis(flag);
        let complementary = elements.len();
        let mut roles = vec![Role::Complementary; complementary];
        for (role, x) in parabolic_basis(flag) {
            roles.push(role);
            elements.push(x);
        }
        LieBasis::from_parts(flag.clone(), elements, roles).expect("standard basis is independent")
    }

    fn from_parts(
        flag: FlagSpec,
        elements: Vec<Matrix>,
        roles: Vec<Role>,
    ) -> Result<Self, LieError> {
        let n = flag.n();
        debug_assert_eq!(elements.len(), n * n - 1);
        let complementary = roles.iter().filter(|&&r| r == Role::Complementary).count();
        let family: Vec<_> = elements.iter().map(Matrix::to_sparse).collect();
        let coordinates = CoordinateSystem::new(&family).map_err(|_| LieError::Singular)?;
        let structure = elements
            .iter()
            .map(|x| {
                elements
                    .iter()
                    .map(|y| {
                        let z = bracket(x, y).expect("same dimension");
                        coordinates
                            .coordinates(&z.to_sparse())
                            .expect("brackets are traceless")
                    })
                    .collect()
            })
            .collect();
        Ok(LieBasis {
            flag,
            elements,
            roles,
            complementary,
            coordinates,
            structure,
        })
    }

    /// The basis transported by the change of basis `e_i ↦ M e_i` of `E`,
    /// i.e. every member conjugated to `M x M⁻¹`. `M` must preserve the flag.
    pub fn conjugated(&self, m: &Matrix) -> Result<Self, LieError> {
        if m.n() != self.n() {
            return Err(LieError::DimensionMismatch(m.n(), self.n()));
        }
        if !self.flag.is_block_upper(m) {
            return Err(LieError::NotFlagCompatible);
        }
        let inv = m.inverse()?;
        let elements = self
            .elements
            .iter()
            .map(|x| m.mul(x)?.mul(&inv))
            .collect::<Result<Vec<_>, _>>()?;
        LieBasis::from_parts(self.flag.clone(), elements, self.roles.clone())
    }

    pub fn n(&self) -> usize {
        self.flag.n()
    }

    pub fn flag(&self) -> &FlagSpec {
        &self.flag
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, a: usize) -> &Matrix {
        &self.elements[a]
    }

    pub fn role(&self, a: usize) -> Role {
        self.roles[a]
    }

    /// `D`, the number of complementary members.
    pub fn complementary_count(&self) -> usize {
        self.complementary
    }

    /// Positions `0..D` (0-based).
    pub fn complementary_range(&self) -> Range<usize> {
        0..self.complementary
    }

    pub fn parabolic_range(&self) -> Range<usize> {
        self.complementary..self.elements.len()
    }

    /// Expansion of an arbitrary traceless matrix in this basis.
    pub fn coordinates(&self, x: &Matrix) -> Option<SparseVector<usize>> {
        self.coordinates.coordinates(&x.to_sparse())
    }

    /// Coordinates of `[x_a, x_b]`.
    pub fn bracket_coordinates(&self, a: usize, b: usize) -> &SparseVector<usize> {
        &self.structure[a][b]
    }

    /// Position of a basis member equal to `x`, if any.
    pub fn position(&self, x: &Matrix) -> Option<usize> {
        self.elements.iter().position(|y| y == x)
    }
}

impl fmt::Debug for LieBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieBasis")
            .field("flag", &self.flag)
            .field("complementary", &self.complementary)
            .field("elements", &self.elements)
            .finish()
    }
}

/// The character `ρ_v` of the stabilizer algebra, by the block-trace formula
/// `Σ_i l_i (tr A_1 + … + tr A_i)`.
pub fn rho_v(w: &WeightSpec, x: &Matrix) -> Result<Rational, LieError> {
    if x.n() != w.n() {
        return Err(LieError::DimensionMismatch(x.n(), w.n()));
    }
    let flag = flag_from_weight(w);
    if !flag.is_block_upper(x) {
        return Err(LieError::NotParabolic);
    }
    let trace = x.trace();
    if !trace.is_zero() {
        return Err(LieError::NotTraceless(trace));
    }
    let block_traces: Vec<Rational> = (1..=flag.blocks().len())
        .map(|b| flag.block_range(b).map(|r| x.get(r, r).clone()).sum())
        .collect();
    let mut total = Rational::zero();
    for (i, &(_, l)) in w.parts().iter().enumerate() {
        let partial: Rational = block_traces[..=i].iter().sum();
        total += Rational::from(l as i64) * partial;
    }
    Ok(total)
}

/// `λ(x)` for diagonal `x`, with `ω_i = L_1 + … + L_i`.
pub fn weight_eval(w: &WeightSpec, x: &Matrix) -> Result<Rational, LieError> {
    if x.n() != w.n() {
        return Err(LieError::DimensionMismatch(x.n(), w.n()));
    }
    if !x.is_diagonal() {
        return Err(LieError::NotDiagonal);
    }
    let trace = x.trace();
    if !trace.is_zero() {
        return Err(LieError::NotTraceless(trace));
    }
    Ok(w.l_coordinates()
        .iter()
        .enumerate()
        .map(|(r, &a)| Rational::from(a as i64) * x.get(r + 1, r + 1))
        .sum())
}

/// `m_{β_i} = λ(H_{β_i}) + 1` for `i = 1..n−1`.
pub fn m_beta(w: &WeightSpec) -> Vec<u32> {
    let n = w.n();
    (1..n)
        .map(|i| {
            let value =
                weight_eval(w, &Matrix::cartan(n, i)).expect("H_i is diagonal") + Rational::one();
            value.to_i64().expect("integral weight") as u32
        })
        .collect()
}

/// `l_j + 1` when `i = n_j`, otherwise 1.
pub fn m_beta_closed_form(w: &WeightSpec) -> Vec<u32> {
    (1..w.n()).map(|i| w.coefficient(i) + 1).collect()
}

/// A random invertible block-upper-triangular matrix with small integer
/// entries, i.e. a change of basis of `E` compatible with the flag.
pub fn random_flag_base_change<R: Rng + ?Sized>(flag: &FlagSpec, rng: &mut R) -> Matrix {
    let n = flag.n();
    loop {
        let mut m = Matrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                if flag.block(i) <= flag.block(j) {
                    m.set(i, j, Rational::from(rng.gen_range(-3..=3)));
                }
            }
        }
        if m.inverse().is_ok() {
            return m;
        }
    }
}

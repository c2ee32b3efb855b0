//! The universal enveloping algebra U(sl(n)) in PBW coordinates.
//!
//! Monomials are exponent vectors over an ordered [`LieBasis`]; the product
//! of two normal-form elements is renormalized by straightening adjacent
//! out-of-order pairs with `x_b x_a = x_a x_b − [x_a, x_b]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::Mutex;

use crate::lie::{rho_v, LieBasis, LieError, WeightSpec};
use crate::linalg::SparseVector;
use crate::rational::Rational;

/// An ordered monomial `x_1^{e_1} ⋯ x_M^{e_M}`.
///
/// Ordered by degree, then lexicographically with larger leading exponents
/// first, so `1 < x_1 < x_2 < … < x_1² < x_1x_2 < …`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl PbwMonomial {
    pub fn one(len: usize) -> Self {
        PbwMonomial {
            exponents: vec![0; len],
            degree: 0,
        }
    }

    pub fn generator(len: usize, a: usize) -> Self {
        let mut m = Self::one(len);
        m.exponents[a] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        PbwMonomial { exponents, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of basis positions.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// The monomial as a word of basis positions, in written order.
    pub fn word(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .flat_map(|(a, &e)| std::iter::repeat_n(a, e as usize))
            .collect()
    }

    pub fn first_index(&self) -> Option<usize> {
        self.exponents.iter().position(|&e| e > 0)
    }

    pub fn last_index(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&e| e > 0)
    }

    /// Whether every nonzero exponent lies in `range`.
    pub fn supported_in(&self, range: &Range<usize>) -> bool {
        self.exponents
            .iter()
            .enumerate()
            .all(|(a, &e)| e == 0 || range.contains(&a))
    }

    pub fn with_incremented(&self, a: usize) -> Self {
        let mut m = self.clone();
        m.exponents[a] += 1;
        m.degree += 1;
        m
    }

    pub fn with_decremented(&self, a: usize) -> Self {
        assert!(self.exponents[a] > 0, "exponent already zero");
        let mut m = self.clone();
        m.exponents[a] -= 1;
        m.degree -= 1;
        m
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (a, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "x{}", a + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of U(g) in PBW normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct UElement {
    len: usize,
    terms: SparseVector<PbwMonomial>,
}

impl UElement {
    pub fn zero(len: usize) -> Self {
        UElement {
            len,
            terms: SparseVector::new(),
        }
    }

    /// The unit `1_g`.
    pub fn one(len: usize) -> Self {
        Self::monomial(PbwMonomial::one(len))
    }

    pub fn scalar(len: usize, c: Rational) -> Self {
        Self::from_terms(len, [(PbwMonomial::one(len), c)])
    }

    pub fn generator(len: usize, a: usize) -> Self {
        Self::monomial(PbwMonomial::generator(len, a))
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        UElement {
            len: m.len(),
            terms: SparseVector::unit(m),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, Rational)>>(
        len: usize,
        terms: I,
    ) -> Self {
        let terms = SparseVector::from_terms(terms);
        debug_assert!(terms.labels().all(|m| m.len() == len));
        UElement { len, terms }
    }

    /// Number of generators of the ambient algebra (not the number of terms).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn terms(&self) -> &SparseVector<PbwMonomial> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rational {
        self.terms.coeff(m)
    }

    /// Filtration degree; 0 for the zero element.
    pub fn degree(&self) -> u32 {
        self.terms
            .labels()
            .map(PbwMonomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// The homogeneous component of top degree.
    pub fn top_part(&self) -> UElement {
        let d = self.degree();
        UElement::from_terms(
            self.len,
            self.iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn add(&self, other: &UElement) -> UElement {
        UElement {
            len: self.len,
            terms: &self.terms + &other.terms,
        }
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        UElement {
            len: self.len,
            terms: &self.terms - &other.terms,
        }
    }

    pub fn scaled(&self, c: &Rational) -> UElement {
        UElement {
            len: self.len,
            terms: self.terms.scaled(c),
        }
    }

    pub fn add_scaled(&mut self, other: &UElement, c: &Rational) {
        self.terms.add_scaled(&other.terms, c);
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter() {
            let (sign, abs) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (abs.is_one(), m.is_one()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{m}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs} {m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// U(g) relative to a fixed ordered basis, with a memo table for the
/// products `monomial · x_c`.
pub struct Enveloping {
    basis: LieBasis,
    memo: Mutex<HashMap<(PbwMonomial, usize), SparseVector<PbwMonomial>>>,
}

impl Enveloping {
    pub fn new(basis: LieBasis) -> Self {
        Enveloping {
            basis,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn basis(&self) -> &LieBasis {
        &self.basis
    }

    /// Number of PBW generators `M = n² − 1`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn one(&self) -> UElement {
        UElement::one(self.rank())
    }

    pub fn generator(&self, a: usize) -> UElement {
        UElement::generator(self.rank(), a)
    }

    /// Normal form of the product `a · b`.
    pub fn multiply(&self, a: &UElement, b: &UElement) -> UElement {
        let len = self.rank();
        let mut out = SparseVector::new();
        for (mb, cb) in b.iter() {
            let mut partial = a.terms.clone();
            for letter in mb.word() {
                partial = self.times_generator(&partial, letter);
            }
            out.add_scaled(&partial, cb);
        }
        UElement { len, terms: out }
    }

    /// Normal form of `u · x_c`.
    pub fn multiply_generator(&self, u: &UElement, c: usize) -> UElement {
        UElement {
            len: self.rank(),
            terms: self.times_generator(&u.terms, c),
        }
    }

    fn times_generator(
        &self,
        u: &SparseVector<PbwMonomial>,
        c: usize,
    ) -> SparseVector<PbwMonomial> {
        let mut out = SparseVector::new();
        for (m, coeff) in u.iter() {
            out.add_scaled(&self.monomial_times_generator(m, c), coeff);
        }
        out
    }

    fn monomial_times_generator(&self, m: &PbwMonomial, c: usize) -> SparseVector<PbwMonomial> {
        let last = match m.last_index() {
            Some(last) if last > c => last,
            _ => return SparseVector::unit(m.with_incremented(c)),
        };
        if let Some(hit) = self.memo.lock().unwrap().get(&(m.clone(), c)) {
            return hit.clone();
        }
        // m = m'·x_last and x_last x_c = x_c x_last + [x_last, x_c].
        let head = m.with_decremented(last);
        let swapped = self.monomial_times_generator(&head, c);
        let mut out = self.times_generator(&swapped, last);
        for (d, coeff) in self.basis.bracket_coordinates(last, c).iter() {
            out.add_scaled(&self.monomial_times_generator(&head, *d), coeff);
        }
        self.memo
            .lock()
            .unwrap()
            .insert((m.clone(), c), out.clone());
        out
    }

    /// The degree-≤1 element of U(g) given by a Lie algebra element's
    /// coordinates.
    pub fn embed_coordinates(&self, coords: &SparseVector<usize>) -> UElement {
        let len = self.rank();
        UElement::from_terms(
            len,
            coords
                .iter()
                .map(|(a, c)| (PbwMonomial::generator(len, *a), c.clone())),
        )
    }

    /// The spanning family `{ m · (y − ρ_v(y)·1) }` of the degree-≤l part
    /// of the left ideal generated by the character, with `m` running over
    /// monomials of degree `≤ l − 1` and `y` over the stabilizer members.
    pub fn char_generators(&self, w: &WeightSpec, l: u32) -> Result<Vec<UElement>, LieError> {
        assert!(l >= 1, "character generators need l >= 1");
        let len = self.rank();
        let shifted: Vec<UElement> = self
            .basis
            .parabolic_range()
            .map(|y| {
                let rho = rho_v(w, self.basis.element(y))?;
                Ok(self.generator(y).sub(&UElement::scalar(len, rho)))
            })
            .collect::<Result<_, LieError>>()?;
        let mut out = Vec::new();
        for m in enumerate_monomials(len, l - 1, None) {
            let m = UElement::monomial(m);
            for s in &shifted {
                out.push(self.multiply(&m, s));
            }
        }
        Ok(out)
    }
}

/// All monomials of total degree `≤ l` supported on `restrict_to` (default:
/// every position), in graded-lex order.
pub fn enumerate_monomials(
    len: usize,
    l: u32,
    restrict_to: Option<Range<usize>>,
) -> Vec<PbwMonomial> {
    let range = restrict_to.unwrap_or(0..len);
    assert!(range.end <= len, "range exceeds basis size");
    let positions: Vec<usize> = range.collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; len];
    fill(&positions, 0, l, &mut exps, &mut out);
    out.sort();
    out
}

fn fill(
    positions: &[usize],
    at: usize,
    budget: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<PbwMonomial>,
) {
    if at == positions.len() {
        out.push(PbwMonomial::from_exponents(exps.clone()));
        return;
    }
    for e in 0..=budget {
        exps[positions[at]] = e;
        fill(positions, at + 1, budget - e, exps, out);
    }
    exps[positions[at]] = 0;
}

/// Positions of the monomials of degree `≤ l` in graded-lex order, used as
/// integer coordinate labels for U_l(g).
pub struct MonomialIndex {
    monomials: Vec<PbwMonomial>,
    positions: HashMap<PbwMonomial, usize>,
}

impl MonomialIndex {
    pub fn new(len: usize, l: u32) -> Self {
        let monomials = enumerate_monomials(len, l, None);
        let positions = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialIndex {
            monomials,
            positions,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[PbwMonomial] {
        &self.monomials
    }

    pub fn position(&self, m: &PbwMonomial) -> Option<usize> {
        self.positions.get(m).copied()
    }

    /// Coordinates of `u`; panics if `u` has a term of too high degree.
    pub fn coordinates(&self, u: &UElement) -> SparseVector<usize> {
        u.iter()
            .map(|(m, c)| {
                let p = self
                    .position(m)
                    .unwrap_or_else(|| panic!("monomial {m} exceeds the indexed degree"));
                (p, c.clone())
            })
            .collect()
    }
}

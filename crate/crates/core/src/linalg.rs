//! Sparse exact linear algebra over arbitrary ordered label sets.
//!
//! Vectors are finite maps from labels to nonzero rationals. Subspaces are
//! kept in reduced row-echelon form, pivoting on the least label carrying a
//! nonzero coefficient, so identical inputs always give identical rows.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;

/// A finitely supported vector with coordinates indexed by `L`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVector<L: Ord> {
    entries: BTreeMap<L, Rational>,
}

impl<L: Ord> Default for SparseVector<L> {
    fn default() -> Self {
        SparseVector {
            entries: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone> SparseVector<L> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from `(label, coefficient)` pairs, summing repeated
    /// labels and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (L, Rational)>>(terms: I) -> Self {
        let mut v = Self::new();
        for (l, c) in terms {
            v.add_term(l, &c);
        }
        v
    }

    pub fn unit(label: L) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(label, Rational::one());
        SparseVector { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of stored (nonzero) entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &L) -> Option<&Rational> {
        self.entries.get(label)
    }

    /// Coefficient at `label`, zero when absent.
    pub fn coeff(&self, label: &L) -> Rational {
        self.entries
            .get(label)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &Rational)> {
        self.entries.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.entries.keys()
    }

    /// The least label with nonzero coefficient.
    pub fn leading(&self) -> Option<(&L, &Rational)> {
        self.entries.iter().next()
    }

    /// `self[label] += c`.
    pub fn add_term(&mut self, label: L, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(label) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SparseVector<L>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (l, x) in &other.entries {
            self.add_term(l.clone(), &(x * c));
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVector {
            entries: self
                .entries
                .iter()
                .map(|(l, x)| (l.clone(), x * c))
                .collect(),
        }
    }

    pub fn scale_in_place(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for x in self.entries.values_mut() {
            *x *= c;
        }
    }

    /// Relabels every coordinate through `f`, merging collisions.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> SparseVector<M> {
        SparseVector::from_terms(self.entries.iter().map(|(l, c)| (f(l), c.clone())))
    }

    pub fn into_entries(self) -> BTreeMap<L, Rational> {
        self.entries
    }
}

impl<L: Ord + Clone> std::ops::Add for &SparseVector<L> {
    type Output = SparseVector<L>;
    fn add(self, rhs: &SparseVector<L>) -> SparseVector<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<L: Ord + Clone> std::ops::Sub for &SparseVector<L> {
    type Output = SparseVector<L>;
    fn sub(self, rhs: &SparseVector<L>) -> SparseVector<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<L: Ord + Clone> FromIterator<(L, Rational)> for SparseVector<L> {
    fn from_iter<I: IntoIterator<Item = (L, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for SparseVector<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// A linear subspace stored as reduced row-echelon rows keyed by pivot.
///
/// Every row has coefficient 1 at its pivot and 0 at every other pivot.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<L: Ord> {
    rows: BTreeMap<L, SparseVector<L>>,
}

impl<L: Ord> Default for Subspace<L> {
    fn default() -> Self {
        Subspace {
            rows: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone> Subspace<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Echelon rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVector<L>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &L> {
        self.rows.keys()
    }

    /// The remainder of `v` after eliminating every pivot of `self`.
    pub fn reduce(&self, v: &SparseVector<L>) -> SparseVector<L> {
        let mut r = v.clone();
        self.reduce_in_place(&mut r);
        r
    }

    fn reduce_in_place(&self, v: &mut SparseVector<L>) {
        // Rows vanish on each other's pivots, so the coefficients of `v` at
        // pivots are untouched by the eliminations and one pass suffices.
        let hits: Vec<(L, Rational)> = if v.len() < self.rows.len() {
            v.iter()
                .filter(|(l, _)| self.rows.contains_key(*l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect()
        } else {
            self.rows
                .keys()
                .filter_map(|p| v.get(p).map(|c| (p.clone(), c.clone())))
                .collect()
        };
        for (p, c) in hits {
            v.add_scaled(&self.rows[&p], &-c);
        }
    }

    pub fn contains(&self, v: &SparseVector<L>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVector<L>) -> bool {
        let mut r = self.reduce(v);
        let (pivot, lead) = match r.leading() {
            None => return false,
            Some((p, c)) => (p.clone(), c.clone()),
        };
        r.scale_in_place(&lead.recip());
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn extend<'a, I>(&mut self, vectors: I)
    where
        I: IntoIterator<Item = &'a SparseVector<L>>,
        L: 'a,
    {
        for v in vectors {
            self.insert(v);
        }
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace<L>) -> Subspace<L> {
        let mut s = self.clone();
        s.extend(other.rows());
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace<L>) -> bool {
        self.rows().all(|r| other.contains(r))
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for Subspace<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.values()).finish()
    }
}

/// Reduced echelon basis of the span of `vectors`.
pub fn span<'a, L, I>(vectors: I) -> Subspace<L>
where
    L: Ord + Clone + 'a,
    I: IntoIterator<Item = &'a SparseVector<L>>,
{
    let mut s = Subspace::new();
    s.extend(vectors);
    s
}

pub fn contains<L: Ord + Clone>(s: &Subspace<L>, v: &SparseVector<L>) -> bool {
    s.contains(v)
}

/// `dim(s1 ∩ s2) = dim s1 + dim s2 - dim(s1 + s2)`.
pub fn intersection_dimension<L: Ord + Clone>(s1: &Subspace<L>, s2: &Subspace<L>) -> usize {
    s1.dimension() + s2.dimension() - s1.sum(s2).dimension()
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Clone)]
pub struct CoordinateSystem<L: Ord> {
    size: usize,
    // pivot -> (echelon row, the row as a combination of the family)
    rows: BTreeMap<L, (SparseVector<L>, SparseVector<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("family member {0} is linearly dependent on its predecessors")]
pub struct DependentFamily(pub usize);

impl<L: Ord + Clone> CoordinateSystem<L> {
    pub fn new(family: &[SparseVector<L>]) -> Result<Self, DependentFamily> {
        let mut cs = CoordinateSystem {
            size: family.len(),
            rows: BTreeMap::new(),
        };
        for (i, b) in family.iter().enumerate() {
            let (mut r, mut comb) = cs.reduce(b);
            comb.scale_in_place(&-Rational::one());
            comb.add_term(i, &Rational::one());
            let (pivot, lead) = match r.leading() {
                None => return Err(DependentFamily(i)),
                Some((p, c)) => (p.clone(), c.clone()),
            };
            let inv = lead.recip();
            r.scale_in_place(&inv);
            comb.scale_in_place(&inv);
            for (row, row_comb) in cs.rows.values_mut() {
                if let Some(c) = row.get(&pivot).cloned() {
                    row.add_scaled(&r, &-&c);
                    row_comb.add_scaled(&comb, &-c);
                }
            }
            cs.rows.insert(pivot, (r, comb));
        }
        Ok(cs)
    }

    /// Returns the remainder and the combination of family members removed.
    fn reduce(&self, v: &SparseVector<L>) -> (SparseVector<L>, SparseVector<usize>) {
        let mut r = v.clone();
        let mut comb = SparseVector::new();
        let hits: Vec<(L, Rational)> = v
            .iter()
            .filter(|(l, _)| self.rows.contains_key(*l))
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        for (p, c) in hits {
            let (row, row_comb) = &self.rows[&p];
            r.add_scaled(row, &-&c);
            comb.add_scaled(row_comb, &c);
        }
        (r, comb)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Sparse coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVector<L>) -> Option<SparseVector<usize>> {
        let (r, comb) = self.reduce(v);
        r.is_zero().then_some(comb)
    }
}

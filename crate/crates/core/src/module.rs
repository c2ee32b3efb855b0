//! The sl(n)-module `W = Sym^{l_1}(Λ^{n_1}E) ⊗ … ⊗ Sym^{l_k}(Λ^{n_k}E)`,
//! its highest weight vector `v = w_1^{l_1} ⊗ … ⊗ w_k^{l_k}` and the
//! canonical filtration `U_l(g)v`.
//!
//! Basis of `Λ^m E`: increasing index subsets, sorting a wedge word costs the
//! sign of the permutation. Basis of `Sym^l`: multisets of such subsets, with
//! no multinomial normalization, so every action coefficient is an integer.

use std::fmt;

use num_traits::ToPrimitive;

use crate::binomial;
use crate::enveloping::{PbwMonomial, UElement};
use crate::lie::{rho_v, weight_eval, LieBasis, LieError, Matrix, Role, WeightSpec};
use crate::linalg::{SparseVector, Subspace};
use crate::rational::Rational;

/// A basis vector of `W`: component `i` is a size-`l_i` multiset of
/// increasing `n_i`-subsets of `{1..n}`, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WBasisLabel {
    components: Vec<Vec<Vec<u8>>>,
}

impl WBasisLabel {
    pub fn new(mut components: Vec<Vec<Vec<u8>>>) -> Self {
        for multiset in &mut components {
            for subset in multiset.iter_mut() {
                subset.sort_unstable();
            }
            multiset.sort();
        }
        WBasisLabel { components }
    }

    pub fn components(&self) -> &[Vec<Vec<u8>>] {
        &self.components
    }
}

/// `e1^e2` for wedges, `.` between symmetric factors, ` | ` between tensor
/// factors.
impl fmt::Display for WBasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|multiset| {
                multiset
                    .iter()
                    .map(|subset| {
                        subset
                            .iter()
                            .map(|i| format!("e{i}"))
                            .collect::<Vec<_>>()
                            .join("^")
                    })
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        write!(f, "{}", comps.join(" | "))
    }
}

impl fmt::Debug for WBasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type ModuleVector = SparseVector<WBasisLabel>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("canonical filtration did not stabilize within {0} steps")]
    NoStabilization(usize),
}

/// `W(l, n)` for a fixed weight.
#[derive(Debug, Clone)]
pub struct WModule {
    weight: WeightSpec,
}

impl WModule {
    pub fn new(weight: &WeightSpec) -> Self {
        WModule {
            weight: weight.clone(),
        }
    }

    pub fn weight(&self) -> &WeightSpec {
        &self.weight
    }

    /// `dim W = Π_i binom(binom(n, n_i) + l_i − 1, l_i)`.
    pub fn dimension(&self) -> usize {
        let n = self.weight.n();
        self.weight
            .parts()
            .iter()
            .map(|&(ni, li)| {
                let li = li as usize;
                binomial(binomial(n, ni) + li - 1, li)
            })
            .product()
    }

    /// Every basis label of `W`, sorted.
    pub fn basis_labels(&self) -> Vec<WBasisLabel> {
        let n = self.weight.n() as u8;
        let mut labels = vec![Vec::new()];
        for &(ni, li) in self.weight.parts() {
            let subsets = subsets_of_size(n, ni as u8);
            let multisets = multisets_of_size(subsets.len(), li as usize);
            let mut next = Vec::with_capacity(labels.len() * multisets.len());
            for prefix in &labels {
                for ms in &multisets {
                    let mut comps: Vec<Vec<Vec<u8>>> = prefix.clone();
                    comps.push(ms.iter().map(|&k| subsets[k].clone()).collect());
                    next.push(comps);
                }
            }
            labels = next;
        }
        let mut out: Vec<_> = labels.into_iter().map(WBasisLabel::new).collect();
        out.sort();
        out
    }

    pub fn highest_weight_vector(&self) -> ModuleVector {
        let components = self
            .weight
            .parts()
            .iter()
            .map(|&(ni, li)| vec![(1..=ni as u8).collect::<Vec<_>>(); li as usize])
            .collect();
        SparseVector::unit(WBasisLabel { components })
    }

    /// The derivation action of `x` on `m`.
    pub fn act(&self, x: &Matrix, m: &ModuleVector) -> Result<ModuleVector, LieError> {
        if x.n() != self.weight.n() {
            return Err(LieError::DimensionMismatch(x.n(), self.weight.n()));
        }
        let mut out = SparseVector::new();
        for (label, c) in m.iter() {
            out.add_scaled(&act_on_label(x, label), c);
        }
        Ok(out)
    }

    /// Applies `x_1^{e_1} ⋯ x_M^{e_M}` to `m`, rightmost factor first.
    pub fn act_monomial(
        &self,
        basis: &LieBasis,
        p: &PbwMonomial,
        m: &ModuleVector,
    ) -> Result<ModuleVector, LieError> {
        let mut cur = m.clone();
        for (a, &e) in p.exponents().iter().enumerate().rev() {
            for _ in 0..e {
                if cur.is_zero() {
                    return Ok(cur);
                }
                cur = self.act(basis.element(a), &cur)?;
            }
        }
        Ok(cur)
    }

    /// Applies an element of U(g) in PBW form.
    pub fn act_element(
        &self,
        basis: &LieBasis,
        u: &UElement,
        m: &ModuleVector,
    ) -> Result<ModuleVector, LieError> {
        let mut out = SparseVector::new();
        for (p, c) in u.iter() {
            out.add_scaled(&self.act_monomial(basis, p, m)?, c);
        }
        Ok(out)
    }

    /// `U_l(g)v` for `l = 0..=l_max`, built layer by layer: each layer adds
    /// the images under every basis member of the vectors that were new in
    /// the previous layer.
    pub fn canonical_filtration(
        &self,
        basis: &LieBasis,
        l_max: usize,
    ) -> Result<Vec<Subspace<WBasisLabel>>, LieError> {
        let v = self.highest_weight_vector();
        let mut current = Subspace::new();
        current.insert(&v);
        let mut frontier = vec![v];
        let mut layers = vec![current.clone()];
        for _ in 0..l_max {
            let mut next_frontier = Vec::new();
            for u in &frontier {
                for x in basis.elements() {
                    let image = self.act(x, u)?;
                    if current.insert(&image) {
                        next_frontier.push(image);
                    }
                }
            }
            frontier = next_frontier;
            layers.push(current.clone());
        }
        Ok(layers)
    }

    /// `V_λ = U(g)v`, the first layer of the canonical filtration that stops
    /// growing. Returns the subspace and the layer index where it stabilized.
    pub fn generate_irreducible(
        &self,
        basis: &LieBasis,
    ) -> Result<(Subspace<WBasisLabel>, usize), ModuleError> {
        let bound = self.dimension();
        let v = self.highest_weight_vector();
        let mut current = Subspace::new();
        current.insert(&v);
        let mut frontier = vec![v];
        for l in 0..=bound {
            let mut next_frontier = Vec::new();
            for u in &frontier {
                for x in basis.elements() {
                    let image = self.act(x, u)?;
                    if current.insert(&image) {
                        next_frontier.push(image);
                    }
                }
            }
            if next_frontier.is_empty() {
                return Ok((current, l));
            }
            frontier = next_frontier;
        }
        Err(ModuleError::NoStabilization(bound))
    }

    /// Checks that `v` is a highest weight vector: every strictly upper
    /// matrix unit kills it, every stabilizer member scales it by `ρ_v`, and
    /// every `H_i` scales it by `λ(H_i)`.
    pub fn verify_highest_weight(&self, basis: &LieBasis) -> Result<bool, LieError> {
        let n = self.weight.n();
        let v = self.highest_weight_vector();
        for i in 1..=n {
            for j in i + 1..=n {
                if !self.act(&Matrix::unit(n, i, j), &v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        for a in basis.parabolic_range() {
            let x = basis.element(a);
            let rho = rho_v(&self.weight, x)?;
            if self.act(x, &v)? != v.scaled(&rho) {
                return Ok(false);
            }
            if basis.role(a) == Role::Cartan {
                let lambda = weight_eval(&self.weight, x)?;
                if self.act(x, &v)? != v.scaled(&lambda) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn subsets_of_size(n: u8, size: u8) -> Vec<Vec<u8>> {
    fn go(start: u8, n: u8, left: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, size, &mut Vec::new(), &mut out);
    out
}

/// Non-decreasing index sequences of length `size` over `0..count`.
fn multisets_of_size(count: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(
        start: usize,
        count: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in start..count {
            cur.push(k);
            go(k, count, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, count, size, &mut Vec::new(), &mut out);
    out
}

/// Image of one basis vector under the derivation action of `x`.
fn act_on_label(x: &Matrix, label: &WBasisLabel) -> ModuleVector {
    let mut out = SparseVector::new();
    for (ci, multiset) in label.components.iter().enumerate() {
        let mut start = 0;
        while start < multiset.len() {
            let subset = &multiset[start];
            let mut end = start + 1;
            while end < multiset.len() && &multiset[end] == subset {
                end += 1;
            }
            let multiplicity = Rational::from((end - start) as i64);
            for (pos, &j) in subset.iter().enumerate() {
                for (i, xij) in x.column(j as usize) {
                    let i = i as u8;
                    if i == j {
                        out.add_term(label.clone(), &(&multiplicity * xij));
                        continue;
                    }
                    if subset.contains(&i) {
                        continue;
                    }
                    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                    let between = subset.iter().filter(|&&s| lo < s && s < hi).count();
                    let mut replaced = subset.clone();
                    replaced[pos] = i;
                    replaced.sort_unstable();
                    let mut new_multiset = multiset.clone();
                    new_multiset[start] = replaced;
                    new_multiset.sort();
                    let mut components = label.components.clone();
                    components[ci] = new_multiset;
                    let mut coeff = &multiplicity * xij;
                    if between % 2 == 1 {
                        coeff = -coeff;
                    }
                    out.add_term(WBasisLabel { components }, &coeff);
                }
            }
            start = end;
        }
    }
    out
}

/// Weyl's dimension formula: with `a_i` the coordinates of λ against the
/// `L_i`, `dim V_λ = Π_{i<j} (a_i − a_j + j − i) / (j − i)`.
pub fn weyl_dimension(w: &WeightSpec) -> u64 {
    let a = w.l_coordinates();
    let n = a.len();
    let mut dim = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let num = a[i] as i64 - a[j] as i64 + (j - i) as i64;
            dim *= Rational::new(num, (j - i) as i64);
        }
    }
    assert!(dim.is_integer(), "Weyl dimension must be an integer");
    dim.numer().to_u64().expect("dimension fits in u64")
}

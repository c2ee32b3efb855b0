//! Evaluation of U_l(g) on the highest weight vector, the annihilator and
//! character filtrations, and the decomposition checks built from them.
//!
//! `ann_l(v)` is only ever computed as the kernel of the evaluation map;
//! `char_l(ρ_v)` is only ever computed from its explicit generating family.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::binomial;
use crate::enveloping::{enumerate_monomials, Enveloping, MonomialIndex, PbwMonomial};
use crate::lie::{
    flag_from_weight, m_beta, m_beta_closed_form, weight_eval, LieBasis, LieError, Matrix, Role,
    WeightSpec,
};
use crate::linalg::{intersection_dimension, span, SparseVector, Subspace};
use crate::module::{ModuleVector, WModule};

/// Dimension bookkeeping for one filtration degree `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub weight: WeightSpec,
    pub l: u32,
    /// `dim U_l(g)`.
    #[serde(rename = "dim_Ul")]
    pub dim_ul: usize,
    /// `dim U_l(g)v`.
    #[serde(rename = "dim_Ulv")]
    pub dim_ulv: usize,
    pub dim_ann: usize,
    pub dim_char: usize,
    /// `dim U_l(n(E•)) = binom(D + l, D)`.
    #[serde(rename = "dim_Ul_complementary")]
    pub dim_ul_complementary: usize,
    /// Rank of the evaluation map restricted to complementary monomials.
    pub complementary_rank: usize,
    pub complementary_injective: bool,
    /// Dimension of `U_l(n(E•)) ∩ char_l` inside PBW coordinates.
    pub complementary_char_intersection: usize,
    pub sums_check: bool,
    pub ann_equals_char: bool,
    pub char_in_ann: bool,
}

impl DecompositionReport {
    /// Whether `l ≤ m(λ)`, where the injectivity and equality statements
    /// are asserted to hold.
    pub fn within_bound(&self) -> bool {
        self.l >= 1 && self.l <= self.weight.min_coefficient()
    }

    /// Every check that is asserted for this `l` holds.
    pub fn mandatory_checks_pass(&self) -> bool {
        let always = self.sums_check
            && self.complementary_char_intersection == 0
            && self.char_in_ann
            && self.dim_ann + self.dim_ulv == self.dim_ul;
        let bounded =
            !self.within_bound() || (self.complementary_injective && self.ann_equals_char);
        always && bounded
    }
}

/// The images `x_1^{v_1} ⋯ x_D^{v_D}(v)` with their achieved rank.
#[derive(Debug, Clone)]
pub struct SemicanonicalBasis {
    pub monomials: Vec<PbwMonomial>,
    pub vectors: Vec<ModuleVector>,
    pub rank: usize,
}

impl SemicanonicalBasis {
    pub fn is_independent(&self) -> bool {
        self.rank == self.vectors.len()
    }
}

/// Outcome of checking the generators of `ann(v)`: positive root vectors
/// and `x − λ(x)` kill `v`, and `X_{−β_i}^{m_{β_i}}` kills `v` while the
/// next lower power does not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DixmierReport {
    pub m_beta: Vec<u32>,
    pub m_beta_closed_form: Vec<u32>,
    pub positive_roots_kill: bool,
    pub cartan_scales: bool,
    /// Per simple root: `X_{−β}^{m_β} v = 0`.
    pub power_kills: Vec<bool>,
    /// Per simple root: `X_{−β}^{m_β − 1} v ≠ 0`, or `None` when `m_β = 1`.
    pub sharp: Vec<Option<bool>>,
}

impl DixmierReport {
    pub fn holds(&self) -> bool {
        self.m_beta == self.m_beta_closed_form
            && self.positive_roots_kill
            && self.cartan_scales
            && self.power_kills.iter().all(|&b| b)
            && self.sharp.iter().all(|s| s.unwrap_or(true))
    }
}

/// All the structure attached to one weight: the flag-adapted basis, U(g),
/// the module `W` and a memo of monomial images of `v`.
pub struct AnnihilatorLab {
    weight: WeightSpec,
    enveloping: Enveloping,
    module: WModule,
    images: Mutex<HashMap<PbwMonomial, ModuleVector>>,
}

impl AnnihilatorLab {
    pub fn new(weight: &WeightSpec) -> Self {
        let basis = LieBasis::flag_adapted(&flag_from_weight(weight));
        Self::with_basis(weight, basis)
    }

    /// The same constructions after the flag-compatible change of basis
    /// `e_i ↦ M e_i` of `E`.
    pub fn with_base_change(weight: &WeightSpec, m: &Matrix) -> Result<Self, LieError> {
        let basis = LieBasis::flag_adapted(&flag_from_weight(weight)).conjugated(m)?;
        Ok(Self::with_basis(weight, basis))
    }

    fn with_basis(weight: &WeightSpec, basis: LieBasis) -> Self {
        AnnihilatorLab {
            weight: weight.clone(),
            enveloping: Enveloping::new(basis),
            module: WModule::new(weight),
            images: Mutex::new(HashMap::new()),
        }
    }

    pub fn weight(&self) -> &WeightSpec {
        &self.weight
    }

    pub fn basis(&self) -> &LieBasis {
        self.enveloping.basis()
    }

    pub fn enveloping(&self) -> &Enveloping {
        &self.enveloping
    }

    pub fn module(&self) -> &WModule {
        &self.module
    }

    /// `D`.
    pub fn complementary_count(&self) -> usize {
        self.basis().complementary_count()
    }

    /// `p(v)` for a PBW monomial `p`, memoized on the monomial:
    /// `x_a·q (v) = x_a (q(v))` with `a` the first letter.
    pub fn image(&self, p: &PbwMonomial) -> ModuleVector {
        if let Some(hit) = self.images.lock().unwrap().get(p) {
            return hit.clone();
        }
        let out = match p.first_index() {
            None => self.module.highest_weight_vector(),
            Some(a) => {
                let inner = self.image(&p.with_decremented(a));
                self.module
                    .act(self.basis().element(a), &inner)
                    .expect("basis matches module dimension")
            }
        };
        self.images.lock().unwrap().insert(p.clone(), out.clone());
        out
    }

    /// Rank of `U_l(g) → W, p ↦ p(v)`, optionally restricted to monomials
    /// in the complementary generators.
    pub fn evaluation_rank(&self, l: u32, restrict_to_complementary: bool) -> usize {
        let range = restrict_to_complementary.then(|| self.basis().complementary_range());
        let monomials = enumerate_monomials(self.basis().len(), l, range);
        let mut s = Subspace::new();
        for p in &monomials {
            s.insert(&self.image(p));
        }
        s.dimension()
    }

    /// `dim U_l(g) − rank`, the kernel dimension of the evaluation map.
    pub fn ann_dimension(&self, l: u32) -> usize {
        self.dim_ul(l) - self.evaluation_rank(l, false)
    }

    pub fn dim_ul(&self, l: u32) -> usize {
        binomial(self.basis().len() + l as usize, l as usize)
    }

    /// Span of the character generators in the coordinates of `index`.
    pub fn char_span(&self, l: u32, index: &MonomialIndex) -> Subspace<usize> {
        let gens = self
            .enveloping
            .char_generators(&self.weight, l)
            .expect("stabilizer members are block-upper");
        let coords: Vec<SparseVector<usize>> = gens.iter().map(|g| index.coordinates(g)).collect();
        span(&coords)
    }

    pub fn char_dimension(&self, l: u32) -> usize {
        let index = MonomialIndex::new(self.basis().len(), l);
        self.char_span(l, &index).dimension()
    }

    /// Every character generator of degree `≤ l` kills `v`.
    pub fn char_in_ann(&self, l: u32) -> bool {
        let gens = self
            .enveloping
            .char_generators(&self.weight, l)
            .expect("stabilizer members are block-upper");
        gens.iter().all(|g| {
            let mut total = SparseVector::new();
            for (p, c) in g.iter() {
                total.add_scaled(&self.image(p), c);
            }
            total.is_zero()
        })
    }

    pub fn verify_decomposition(&self, l: u32) -> DecompositionReport {
        assert!(l >= 1, "decomposition is stated for l >= 1");
        let d = self.complementary_count();
        let index = MonomialIndex::new(self.basis().len(), l);
        let char_space = self.char_span(l, &index);
        let complementary_space = span(
            &enumerate_monomials(
                self.basis().len(),
                l,
                Some(self.basis().complementary_range()),
            )
            .iter()
            .map(|m| SparseVector::unit(index.position(m).expect("indexed")))
            .collect::<Vec<_>>(),
        );
        let dim_ul = index.len();
        let dim_ulv = self.evaluation_rank(l, false);
        let dim_ann = dim_ul - dim_ulv;
        let dim_char = char_space.dimension();
        let dim_ul_complementary = binomial(d + l as usize, d);
        let complementary_rank = self.evaluation_rank(l, true);
        DecompositionReport {
            weight: self.weight.clone(),
            l,
            dim_ul,
            dim_ulv,
            dim_ann,
            dim_char,
            dim_ul_complementary,
            complementary_rank,
            complementary_injective: complementary_rank == dim_ul_complementary,
            complementary_char_intersection: intersection_dimension(
                &complementary_space,
                &char_space,
            ),
            sums_check: dim_ul_complementary + dim_char == dim_ul,
            ann_equals_char: dim_ann == dim_char,
            char_in_ann: self.char_in_ann(l),
        }
    }

    pub fn semicanonical_basis(&self, l: u32) -> SemicanonicalBasis {
        let monomials = enumerate_monomials(
            self.basis().len(),
            l,
            Some(self.basis().complementary_range()),
        );
        let vectors: Vec<ModuleVector> = monomials.iter().map(|p| self.image(p)).collect();
        let rank = span(&vectors).dimension();
        SemicanonicalBasis {
            monomials,
            vectors,
            rank,
        }
    }

    pub fn verify_dixmier_generators(&self) -> DixmierReport {
        let n = self.weight.n();
        let v = self.module.highest_weight_vector();
        let act = |x: &Matrix, u: &ModuleVector| self.module.act(x, u).expect("same dimension");
        let positive_roots_kill = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .all(|(i, j)| act(&Matrix::unit(n, i, j), &v).is_zero());
        let cartan_scales = self
            .basis()
            .parabolic_range()
            .filter(|&a| self.basis().role(a) == Role::Cartan)
            .all(|a| {
                let h = self.basis().element(a);
                let lambda = weight_eval(&self.weight, h).expect("cartan members are diagonal");
                act(h, &v) == v.scaled(&lambda)
            });
        let exponents = m_beta(&self.weight);
        let mut power_kills = Vec::new();
        let mut sharp = Vec::new();
        for (i, &m) in (1..n).zip(&exponents) {
            let lowering = Matrix::unit(n, i + 1, i);
            let power = |e: u32| -> ModuleVector {
                match self.basis().position(&lowering) {
                    Some(a) => {
                        let mut exps = vec![0; self.basis().len()];
                        exps[a] = e;
                        self.module
                            .act_monomial(self.basis(), &PbwMonomial::from_exponents(exps), &v)
                            .expect("same dimension")
                    }
                    // Transported bases need not contain E_{i+1,i} itself.
                    None => (0..e).fold(v.clone(), |u, _| act(&lowering, &u)),
                }
            };
            power_kills.push(power(m).is_zero());
            sharp.push((m >= 2).then(|| !power(m - 1).is_zero()));
        }
        DixmierReport {
            m_beta: exponents,
            m_beta_closed_form: m_beta_closed_form(&self.weight),
            positive_roots_kill,
            cartan_scales,
            power_kills,
            sharp,
        }
    }
}

pub fn evaluation_rank(w: &WeightSpec, l: u32, restrict_to_complementary: bool) -> usize {
    AnnihilatorLab::new(w).evaluation_rank(l, restrict_to_complementary)
}

pub fn ann_dimension(w: &WeightSpec, l: u32) -> usize {
    AnnihilatorLab::new(w).ann_dimension(l)
}

pub fn char_dimension(w: &WeightSpec, l: u32) -> usize {
    AnnihilatorLab::new(w).char_dimension(l)
}

pub fn verify_decomposition(w: &WeightSpec, l: u32) -> DecompositionReport {
    AnnihilatorLab::new(w).verify_decomposition(l)
}

pub fn semicanonical_basis(w: &WeightSpec, l: u32) -> SemicanonicalBasis {
    AnnihilatorLab::new(w).semicanonical_basis(l)
}

pub fn verify_dixmier_generators(w: &WeightSpec) -> bool {
    AnnihilatorLab::new(w).verify_dixmier_generators().holds()
}

pub fn char_in_ann(w: &WeightSpec, l: u32) -> bool {
    AnnihilatorLab::new(w).char_in_ann(l)
}

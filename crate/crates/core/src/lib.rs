//! Exact constructions for finite-dimensional irreducible sl(n)-modules.
//!
//! Everything is computed over the rationals: the flag-adapted splitting
//! `sl(n) = n(E•) ⊕ p(E•)` determined by a highest weight, the enveloping
//! algebra in PBW normal form, the explicit module
//! `Sym^{l_1}(Λ^{n_1}E) ⊗ … ⊗ Sym^{l_k}(Λ^{n_k}E)` with its highest weight
//! vector, and the filtrations `U_l(g)v`, `ann_l(v)` and `char_l(ρ_v)`.

pub mod annihilator;
pub mod cli;
pub mod enveloping;
pub mod lie;
pub mod linalg;
pub mod module;
pub mod rational;

pub use annihilator::{AnnihilatorLab, DecompositionReport, DixmierReport, SemicanonicalBasis};
pub use enveloping::{Enveloping, PbwMonomial, UElement};
pub use lie::{FlagSpec, LieBasis, LieElement, Matrix, Role, WeightSpec};
pub use linalg::{SparseVector, Subspace};
pub use module::{ModuleVector, WBasisLabel, WModule};
pub use rational::Rational;

/// `binom(n, k)`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        0
    } else {
        num_integer::binomial(n as u128, k as u128) as usize
    }
}

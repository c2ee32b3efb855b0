//! The adjoint representation of sl(3), realised inside E ⊗ Λ²E. Its
//! flag is complete, so the complementary algebra has dimension 3 and
//! the filtration reads 1, 4, 8.
//!
//! cargo run --example adjoint_sl3

use flagrep::binomial;
use flagrep::lie::{flag_from_weight, LieBasis, WeightSpec};
use flagrep::module::WModule;

fn main() {
    let weight = WeightSpec::parse(3, "1:1,2:1").expect("valid weight");
    let flag = flag_from_weight(&weight);
    let basis = LieBasis::flag_adapted(&flag);
    let module = WModule::new(&weight);

    println!("lambda = {weight}, flag bounds {:?}", flag.bounds());
    for a in 0..basis.len() {
        let entries: Vec<String> = basis
            .element(a)
            .nonzero_entries()
            .map(|(i, j, c)| format!("{c}·E{i}{j}"))
            .collect();
        println!(
            "  x{} {:<14} {}",
            a + 1,
            format!("{:?}", basis.role(a)),
            entries.join(" + ")
        );
    }
    let d = basis.complementary_count();

    println!("ambient W has dimension {}", module.dimension());
    let layers = module.canonical_filtration(&basis, 3).expect("filtration");
    for (l, layer) in layers.iter().enumerate() {
        println!(
            "  dim U_{l}(g)v = {:>2}   binom(D+l, D) = {}",
            layer.dimension(),
            binomial(d + l, d)
        );
    }
    let (irreducible, steps) = module.generate_irreducible(&basis).expect("stabilises");
    println!(
        "V_lambda has dimension {} (reached at l = {steps})",
        irreducible.dimension()
    );
}

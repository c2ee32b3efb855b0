//! The symmetric cube of the standard sl(2)-module: the filtration
//! U_l(g)·v grows by one dimension per step until it fills the module.
//!
//! cargo run --example sl2_symmetric_power

use flagrep::lie::{flag_from_weight, m_beta, LieBasis, WeightSpec};
use flagrep::module::{weyl_dimension, WModule};

fn main() {
    let weight = WeightSpec::parse(2, "1:3").expect("valid weight");
    let basis = LieBasis::flag_adapted(&flag_from_weight(&weight));
    let module = WModule::new(&weight);

    println!(
        "lambda = {weight} on sl(2); Weyl dimension {}",
        weyl_dimension(&weight)
    );
    println!(
        "highest weight vector: {}",
        module.highest_weight_vector().labels().next().unwrap()
    );

    let layers = module.canonical_filtration(&basis, 4).expect("filtration");
    for (l, layer) in layers.iter().enumerate() {
        println!("  dim U_{l}(g)v = {}", layer.dimension());
    }
    println!("lowering exponent m_beta = {:?}", m_beta(&weight));
}

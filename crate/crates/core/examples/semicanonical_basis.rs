//! PBW monomials in the complementary generators, applied to v, give a
//! basis of U_l(g)·v as long as l stays within the lowering bound.
//!
//! cargo run --example semicanonical_basis

use flagrep::annihilator::AnnihilatorLab;
use flagrep::lie::WeightSpec;

fn main() {
    let weight = WeightSpec::parse(3, "1:2,2:1").expect("valid weight");
    let lab = AnnihilatorLab::new(&weight);
    let l = weight.min_coefficient();
    let basis = lab.semicanonical_basis(l);

    println!(
        "lambda = {weight}, l = {l}: {} vectors, rank {}",
        basis.vectors.len(),
        basis.rank
    );
    for (p, v) in basis.monomials.iter().zip(&basis.vectors) {
        let terms: Vec<String> = v
            .iter()
            .map(|(label, c)| format!("{c}·[{label}]"))
            .collect();
        println!("  {:<10} v = {}", p.to_string(), terms.join(" + "));
    }
    println!("linearly independent: {}", basis.is_independent());
}

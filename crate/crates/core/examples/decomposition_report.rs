//! Splits U_l(sl(n)) into the complementary part and the span of the
//! character-twisted parabolic elements, and compares the latter with the
//! annihilator of v. Equality holds up to the lowering bound and fails
//! just beyond it.
//!
//! cargo run --example decomposition_report [n] [weight] [l]

use flagrep::annihilator::AnnihilatorLab;
use flagrep::lie::WeightSpec;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args
        .first()
        .map_or(2, |s| s.parse().expect("n is an integer"));
    let weight =
        WeightSpec::parse(n, args.get(1).map_or("1:2", String::as_str)).expect("valid weight");
    let l_max: u32 = args
        .get(2)
        .map_or(3, |s| s.parse().expect("l is an integer"));

    let lab = AnnihilatorLab::new(&weight);
    println!(
        "lambda = {weight} on sl({n}), m(lambda) = {}",
        weight.min_coefficient()
    );
    println!(" l  dim U_l  dim U_l v  dim U_l(n)  dim ann  dim char  ann=char  direct");
    for l in 1..=l_max {
        let r = lab.verify_decomposition(l);
        println!(
            "{l:>2}  {:>7}  {:>9}  {:>10}  {:>7}  {:>8}  {:>8}  {:>6}",
            r.dim_ul,
            r.dim_ulv,
            r.dim_ul_complementary,
            r.dim_ann,
            r.dim_char,
            r.ann_equals_char,
            r.sums_check && r.complementary_char_intersection == 0,
        );
    }
}

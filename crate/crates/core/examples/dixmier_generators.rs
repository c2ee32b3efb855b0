//! The annihilator of v is generated by the positive root vectors, the
//! shifted Cartan elements and the powers y_β^{m_β} of the simple lowering
//! operators. The exponents are sharp: one less does not kill v.
//!
//! cargo run --example dixmier_generators

use flagrep::annihilator::AnnihilatorLab;
use flagrep::lie::WeightSpec;

fn main() {
    for (n, text) in [(2, "1:3"), (3, "1:1,2:1"), (4, "1:2,3:1")] {
        let weight = WeightSpec::parse(n, text).expect("valid weight");
        let r = AnnihilatorLab::new(&weight).verify_dixmier_generators();
        println!("sl({n}) lambda = {weight}");
        println!(
            "  m_beta            {:?} (closed form {:?})",
            r.m_beta, r.m_beta_closed_form
        );
        println!("  E_ij v = 0        {}", r.positive_roots_kill);
        println!("  H_i v = λ(H_i) v  {}", r.cartan_scales);
        println!("  y^m v = 0         {:?}", r.power_kills);
        println!("  y^(m-1) v ≠ 0     {:?}", r.sharp);
        println!("  all hold          {}", r.holds());
    }
}

//! Multiplication in U(sl(2)) in the ordered PBW basis y < h < e:
//! products are straightened by repeatedly commuting generators into place.
//!
//! cargo run --example enveloping_straightening

use flagrep::enveloping::Enveloping;
use flagrep::lie::{FlagSpec, LieBasis};

fn main() {
    let basis = LieBasis::flag_adapted(&FlagSpec::new(2, vec![1]));
    let u = Enveloping::new(basis);
    let (y, h, e) = (u.generator(0), u.generator(1), u.generator(2));
    println!("x1 = y = E21, x2 = h = H1, x3 = e = E12");

    let y2 = u.multiply(&y, &y);
    for (name, a, b) in [
        ("e·y", &e, &y),
        ("e·h", &e, &h),
        ("h·y", &h, &y),
        ("e·y²", &e, &y2),
    ] {
        println!("  {name:<5} = {}", u.multiply(a, b));
    }
    let commutator = u.multiply(&e, &y).sub(&u.multiply(&y, &e));
    println!("  [e, y] = {commutator}");
}

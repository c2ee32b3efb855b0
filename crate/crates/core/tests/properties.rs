use flagrep::enveloping::{enumerate_monomials, Enveloping, PbwMonomial, UElement};
use flagrep::lie::{
    bracket, complementary_basis, flag_from_weight, m_beta, m_beta_closed_form, parabolic_basis,
    rho_v, weight_eval, FlagSpec, LieBasis, Matrix, WeightSpec,
};
use flagrep::linalg::{intersection_dimension, span, SparseVector};
use flagrep::module::{ModuleVector, WModule};
use flagrep::Rational;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(Rational::from)
}

fn vectors(labels: u8, count: usize) -> impl Strategy<Value = Vec<SparseVector<u8>>> {
    prop::collection::vec(
        prop::collection::vec(small(), labels as usize).prop_map(|cs| {
            cs.into_iter()
                .enumerate()
                .map(|(i, c)| (i as u8, c))
                .collect::<SparseVector<u8>>()
        }),
        0..count,
    )
}

fn combination(basis: &[Matrix], coeffs: &[Rational]) -> Matrix {
    let n = basis[0].n();
    basis
        .iter()
        .zip(coeffs)
        .fold(Matrix::zero(n), |acc, (x, c)| {
            acc.add(&x.scaled(c)).unwrap()
        })
}

fn sl_basis(n: usize) -> Vec<Matrix> {
    LieBasis::flag_adapted(&FlagSpec::new(n, vec![1]))
        .elements()
        .to_vec()
}

fn random_u(len: usize, max_degree: u32) -> impl Strategy<Value = UElement> {
    let monomials = enumerate_monomials(len, max_degree, None);
    prop::collection::vec((0..monomials.len(), small()), 1..4).prop_map(move |terms| {
        UElement::from_terms(
            len,
            terms.into_iter().map(|(k, c)| (monomials[k].clone(), c)),
        )
    })
}

fn random_module_vector(module: &WModule) -> impl Strategy<Value = ModuleVector> {
    let labels = module.basis_labels();
    prop::collection::vec((0..labels.len(), small()), 1..5).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(k, c)| (labels[k].clone(), c))
            .collect()
    })
}

fn weight(n: usize, parts: &[(usize, u32)]) -> WeightSpec {
    WeightSpec::new(n, parts.to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_dimension_bounds(vs in vectors(4, 7)) {
        let s = span(&vs);
        let labels: std::collections::BTreeSet<_> = vs.iter().flat_map(|v| v.labels().copied()).collect();
        prop_assert!(s.dimension() <= vs.len());
        prop_assert!(s.dimension() <= labels.len());
        // idempotent and deterministic
        prop_assert_eq!(span(s.rows()), s.clone());
        prop_assert_eq!(span(&vs), s);
    }

    #[test]
    fn grassmann_identity(a in vectors(5, 5), b in vectors(5, 5)) {
        let (sa, sb) = (span(&a), span(&b));
        let sum = sa.sum(&sb);
        prop_assert_eq!(sum.dimension() + intersection_dimension(&sa, &sb), sa.dimension() + sb.dimension());
        prop_assert!(a.iter().chain(&b).all(|v| sum.contains(v)));
    }

    #[test]
    fn rho_is_a_character(cx in prop::collection::vec(small(), 6), cy in prop::collection::vec(small(), 6)) {
        let w = weight(3, &[(1, 2)]);
        let par: Vec<Matrix> = parabolic_basis(&flag_from_weight(&w)).into_iter().map(|(_, x)| x).collect();
        let (x, y) = (combination(&par, &cx), combination(&par, &cy));
        prop_assert!(rho_v(&w, &bracket(&x, &y).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn representation_property(
        (w, m) in (0usize..3).prop_flat_map(|which| {
            let w = [weight(3, &[(1, 1)]), weight(3, &[(1, 1), (2, 1)]), weight(3, &[(1, 2)])][which].clone();
            let vectors = random_module_vector(&WModule::new(&w));
            (Just(w), vectors)
        }),
        cx in prop::collection::vec(small(), 8),
        cy in prop::collection::vec(small(), 8),
    ) {
        let module = WModule::new(&w);
        let basis = sl_basis(3);
        let (x, y) = (combination(&basis, &cx), combination(&basis, &cy));
        let lhs = module.act(&bracket(&x, &y).unwrap(), &m).unwrap();
        let xy = module.act(&x, &module.act(&y, &m).unwrap()).unwrap();
        let yx = module.act(&y, &module.act(&x, &m).unwrap()).unwrap();
        prop_assert_eq!(lhs, &xy - &yx);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity_sl3(a in random_u(8, 2), b in random_u(8, 2), c in random_u(8, 2)) {
        let u = Enveloping::new(LieBasis::flag_adapted(&FlagSpec::new(3, vec![1, 2])));
        let left = u.multiply(&u.multiply(&a, &b), &c);
        let right = u.multiply(&a, &u.multiply(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn associated_graded_is_commutative(a in random_u(8, 2), b in random_u(8, 2)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let u = Enveloping::new(LieBasis::flag_adapted(&FlagSpec::new(3, vec![1])));
        let ab = u.multiply(&a, &b);
        prop_assert_eq!(ab.degree(), a.degree() + b.degree());
        // top part of ab is the commutative product of the top parts
        let mut commutative = UElement::zero(8);
        for (p, cp) in a.top_part().iter() {
            for (q, cq) in b.top_part().iter() {
                let e: Vec<u32> = p.exponents().iter().zip(q.exponents()).map(|(x, y)| x + y).collect();
                commutative.add_scaled(&UElement::monomial(PbwMonomial::from_exponents(e)), &(cp * cq));
            }
        }
        prop_assert_eq!(ab.top_part(), commutative);
    }

    #[test]
    fn enveloping_acts_compatibly(
        which in 0usize..2,
        a in random_u(8, 2),
        b in random_u(8, 2),
    ) {
        let w = [weight(3, &[(1, 1), (2, 1)]), weight(3, &[(1, 2)])][which].clone();
        let basis = LieBasis::flag_adapted(&flag_from_weight(&w));
        let u = Enveloping::new(basis.clone());
        let module = WModule::new(&w);
        let labels = module.basis_labels();
        let m: ModuleVector = labels.iter().take(4).enumerate()
            .map(|(k, l)| (l.clone(), Rational::from(k as i64 + 1)))
            .collect();
        let lhs = module.act_element(&basis, &u.multiply(&a, &b), &m).unwrap();
        let inner = module.act_element(&basis, &b, &m).unwrap();
        let rhs = module.act_element(&basis, &a, &inner).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flag_compatible_change_keeps_nilradical(entries in prop::collection::vec(small(), 16), shift in 1i64..4) {
        // The block-upper nilradical is preserved by flag-compatible changes;
        // the block-lower complement is replaced by another complement of p.
        let flag = FlagSpec::new(4, vec![1, 3]);
        let mut m = Matrix::zero(4);
        for i in 1..=4 {
            for j in 1..=4 {
                if flag.block(i) <= flag.block(j) {
                    let mut x = entries[(i - 1) * 4 + j - 1].clone();
                    if i == j && x.is_zero() {
                        x = Rational::from(shift);
                    }
                    m.set(i, j, x);
                }
            }
        }
        prop_assume!(m.inverse().is_ok());
        let inv = m.inverse().unwrap();
        let conj = |x: &Matrix| m.mul(x).unwrap().mul(&inv).unwrap();

        let nilradical: Vec<Matrix> = complementary_basis(&flag).iter().map(Matrix::transpose).collect();
        let before = span(&nilradical.iter().map(Matrix::to_sparse).collect::<Vec<_>>());
        let after = span(&nilradical.iter().map(|x| conj(x).to_sparse()).collect::<Vec<_>>());
        prop_assert_eq!(before, after);

        let parabolic = span(&parabolic_basis(&flag).iter().map(|(_, x)| x.to_sparse()).collect::<Vec<_>>());
        let moved: Vec<Matrix> = complementary_basis(&flag).iter().map(conj).collect();
        let moved_span = span(&moved.iter().map(Matrix::to_sparse).collect::<Vec<_>>());
        prop_assert_eq!(moved_span.dimension(), flag.complementary_dimension());
        prop_assert_eq!(intersection_dimension(&moved_span, &parabolic), 0);
        for x in &moved {
            for y in &moved {
                prop_assert!(moved_span.contains(&bracket(x, y).unwrap().to_sparse()));
            }
        }
    }

    #[test]
    fn opposite_flag_change_keeps_complement(entries in prop::collection::vec(small(), 9)) {
        let flag = FlagSpec::new(3, vec![1]);
        let mut m = Matrix::identity(3);
        for i in 1..=3 {
            for j in 1..=3 {
                if flag.block(i) >= flag.block(j) && i != j {
                    m.set(i, j, entries[(i - 1) * 3 + j - 1].clone());
                }
            }
        }
        prop_assume!(m.inverse().is_ok());
        let inv = m.inverse().unwrap();
        let comp = complementary_basis(&flag);
        let before = span(&comp.iter().map(Matrix::to_sparse).collect::<Vec<_>>());
        let after = span(&comp.iter().map(|x| m.mul(x).unwrap().mul(&inv).unwrap().to_sparse()).collect::<Vec<_>>());
        prop_assert_eq!(before, after);
    }
}

#[test]
fn complement_moves_under_flag_change() {
    // e_1 ↦ e_1, e_2 ↦ e_1 + e_2 sends E_21 outside the lower-triangular line.
    let flag = FlagSpec::new(2, vec![1]);
    let m = Matrix::from_rows(&[vec![1, 1], vec![0, 1]]);
    let moved = m
        .mul(&Matrix::unit(2, 2, 1))
        .unwrap()
        .mul(&m.inverse().unwrap())
        .unwrap();
    assert_eq!(moved, Matrix::from_rows(&[vec![1, -1], vec![1, -1]]));
    assert!(!flag.is_strictly_block_lower(&moved));
}

#[test]
fn straightening_soundness() {
    for n in 2..=4 {
        let bounds = if n == 2 { vec![1] } else { vec![1, n - 1] };
        let basis = LieBasis::flag_adapted(&FlagSpec::new(n, bounds));
        let u = Enveloping::new(basis.clone());
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                let (xa, xb) = (u.generator(a), u.generator(b));
                let commutator = u.multiply(&xa, &xb).sub(&u.multiply(&xb, &xa));
                let expected = u.embed_coordinates(
                    &basis
                        .coordinates(&bracket(basis.element(a), basis.element(b)).unwrap())
                        .unwrap(),
                );
                assert_eq!(commutator, expected, "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn m_beta_matches_closed_form_exhaustively() {
    for n in 2..=5usize {
        for mask in 1u32..(1 << (n - 1)) {
            let indices: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let k = indices.len() as u32;
            for code in 0..3u32.pow(k) {
                let parts: Vec<(usize, u32)> = indices
                    .iter()
                    .enumerate()
                    .map(|(t, &i)| (i, code / 3u32.pow(t as u32) % 3 + 1))
                    .collect();
                let w = WeightSpec::new(n, parts).unwrap();
                assert_eq!(m_beta(&w), m_beta_closed_form(&w), "{w}");
                for i in 1..n {
                    let h = Matrix::cartan(n, i);
                    assert_eq!(weight_eval(&w, &h).unwrap(), rho_v(&w, &h).unwrap());
                }
            }
        }
    }
}

#[test]
fn line_of_v_is_parabolic_stable() {
    for w in [
        weight(3, &[(1, 1), (2, 1)]),
        weight(4, &[(2, 2)]),
        weight(4, &[(1, 1), (3, 2)]),
    ] {
        let basis = LieBasis::flag_adapted(&flag_from_weight(&w));
        let module = WModule::new(&w);
        let v = module.highest_weight_vector();
        let line = span(std::slice::from_ref(&v));
        for a in basis.parabolic_range() {
            assert!(line.contains(&module.act(basis.element(a), &v).unwrap()));
        }
    }
}

use cherednik::characters::{
    centralizer_order, character_value, content_sum, dimension, graded_poly_multiplicity, lowest_weight,
    lowest_weight_by_contents, lr_induce, restrict,
};
use cherednik::dunkl::{EngineConfig, SparsePolynomial};
use cherednik::fock::{self, a_m_eigenvalue, annihilate, apply_a_m, create, eigenspace_dimension, FockVector};
use cherednik::hecke::{self, CyclotomicField, CyclotomicNumber, HeckeAlgebra};
use cherednik::partitions::{dominance, enumerate_m_regular, enumerate_partitions, DominanceRelation, Regularity};
use cherednik::rational::{int, rat};
use cherednik::Partition;
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition_strategy(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn decompose_round_trips(lambda in partition_strategy(12, 8), m in 2u32..7) {
        let conj = lambda.decompose(m, Regularity::Conjugate).unwrap();
        prop_assert_eq!(conj.recombine(), lambda.clone());
        prop_assert_eq!(conj.mu.size(), lambda.q_m(m).unwrap());
        prop_assert!(conj.nu.conjugate().is_m_regular(m).unwrap());
        let direct = lambda.decompose(m, Regularity::Direct).unwrap();
        prop_assert_eq!(direct.recombine(), lambda.clone());
        prop_assert_eq!(direct.mu.size(), lambda.conjugate().q_m(m).unwrap());
        prop_assert!(direct.nu.is_m_regular(m).unwrap());
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition_strategy(10, 10)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        prop_assert_eq!(content_sum(&lambda.conjugate()), -content_sum(&lambda));
    }

    #[test]
    fn lr_is_commutative(a in partition_strategy(4, 3), b in partition_strategy(4, 3)) {
        prop_assert_eq!(lr_induce(&a, &b), lr_induce(&b, &a));
    }

    #[test]
    fn cyclotomic_field_axioms(m in 2u32..9, xs in prop::collection::vec(-5i64..=5, 9)) {
        let f = CyclotomicField::new(m).unwrap();
        let elt = |k: usize| -> CyclotomicNumber {
            (0..3).fold(f.zero(), |acc, j| &acc + &f.zeta_pow(j as i64).scale(&int(xs[3 * k + j])))
        };
        let (a, b, c) = (elt(0), elt(1), elt(2));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), f.one());
        }
        prop_assert_eq!(f.zeta().pow(m), f.one());
    }

    #[test]
    fn hecke_product_is_associative_on_random_elements(
        m in 2u32..5,
        coeffs in prop::collection::vec(-3i64..=3, 18),
    ) {
        let alg = HeckeAlgebra::new(3, m).unwrap();
        let z = alg.field().zeta();
        let elt = |k: usize| {
            let v = (0..6).map(|w| &alg.field().from_int(coeffs[6 * k + w]) * &z.pow(w as u32 % 2)).collect();
            alg.from_vector(v)
        };
        let (a, b, c) = (elt(0), elt(1), elt(2));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
    }

    #[test]
    fn dunkl_operators_commute_on_random_polynomials(
        c_num in -4i64..=4,
        terms in prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -4i64..=4), 1..5),
    ) {
        let cfg = EngineConfig::new(3, rat(c_num, 3)).unwrap();
        let mut f = SparsePolynomial::zero(3);
        for (a, b, c, k) in terms {
            f.add_term(vec![a, b, c], int(k));
        }
        for i in 0..3 {
            for j in 0..i {
                let lhs = cfg.dunkl(i, &cfg.dunkl(j, &f).unwrap()).unwrap();
                let rhs = cfg.dunkl(j, &cfg.dunkl(i, &f).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn stratum_counts_and_regularity_conventions() {
    for m in 2..=6u32 {
        let regular: Vec<usize> = (0..=25).map(|k| enumerate_m_regular(k, m).unwrap().len()).collect();
        for n in 0..=25usize {
            let all = enumerate_partitions(n);
            for q in 0..=n / m as usize {
                let by_q = all.iter().filter(|l| l.q_m(m).unwrap() == q).count();
                // The direct convention counts the same strata through conjugation.
                let by_direct =
                    all.iter().filter(|l| l.decompose(m, Regularity::Direct).unwrap().mu.size() == q).count();
                assert_eq!(by_q, enumerate_partitions(q).len() * regular[n - q * m as usize], "n={n} m={m} q={q}");
                assert_eq!(by_q, by_direct);
            }
        }
    }
}

#[test]
fn q_m_is_bounded_by_size() {
    for n in 0..=30usize {
        for lambda in enumerate_partitions(n) {
            for m in 2..=6u32 {
                assert!(lambda.q_m(m).unwrap() * m as usize <= n);
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=8usize {
        let all = enumerate_partitions(n);
        let rel = |a: &Partition, b: &Partition| dominance(a, b).unwrap();
        for a in &all {
            assert_eq!(rel(a, a), DominanceRelation::Equal);
            for b in &all {
                let ab = rel(a, b);
                let ba = rel(b, a);
                let flipped = match ab {
                    DominanceRelation::Greater => DominanceRelation::Less,
                    DominanceRelation::Less => DominanceRelation::Greater,
                    other => other,
                };
                assert_eq!(ba, flipped, "{a} vs {b}");
                assert_eq!(ab == DominanceRelation::Equal, a == b);
                for c in &all {
                    if ab == DominanceRelation::Greater && rel(b, c) == DominanceRelation::Greater {
                        assert_eq!(rel(a, c), DominanceRelation::Greater);
                    }
                }
            }
        }
    }
    assert!(dominance(&Partition::new(vec![2]).unwrap(), &Partition::new(vec![1]).unwrap()).is_err());
}

#[test]
fn frobenius_formula_matches_contents() {
    for n in 0..=20usize {
        for lambda in enumerate_partitions(n) {
            for c in [rat(1, 2), rat(-5, 7), int(3)] {
                assert_eq!(lowest_weight(&lambda, &c), lowest_weight_by_contents(&lambda, &c));
            }
        }
    }
}

#[test]
fn character_orthogonality() {
    for n in 1..=8usize {
        let all = enumerate_partitions(n);
        let identity = Partition::new(vec![1; n]).unwrap();
        let factorial: i64 = (1..=n as i64).product();
        let sum: i64 = all.iter().map(|l| character_value(l, &identity).unwrap().pow(2)).sum();
        assert_eq!(sum, factorial);
        // Second orthogonality for every cycle type.
        for mu in &all {
            let s: i64 = all.iter().map(|l| character_value(l, mu).unwrap().pow(2)).sum();
            assert_eq!(BigInt::from(s), centralizer_order(mu), "n={n} mu={mu}");
        }
        for l in &all {
            assert_eq!(character_value(l, &identity).unwrap() as u64, dimension(l));
        }
    }
}

#[test]
fn lr_constituents_are_dominated_by_the_sum() {
    for a in 0..=10usize {
        for b in 0..=10 - a {
            for l in enumerate_partitions(a) {
                for m in enumerate_partitions(b) {
                    let sum = l.add(&m);
                    let product = lr_induce(&l, &m);
                    assert_eq!(product.get(&sum), 1);
                    for (nu, _) in product.iter() {
                        let r = dominance(&sum, nu).unwrap();
                        assert!(matches!(r, DominanceRelation::Greater | DominanceRelation::Equal), "{l}*{m}: {nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn restriction_support_is_the_corners() {
    for n in 1..=10usize {
        for lambda in enumerate_partitions(n) {
            let r = restrict(&lambda).unwrap();
            assert_eq!(r.len(), lambda.corners().len());
            assert!(r.iter().all(|(_, &k)| k == 1));
            assert_eq!(r.dimension() as u64, dimension(&lambda));
        }
    }
}

#[test]
fn graded_multiplicities_fill_polynomial_degrees() {
    for n in 1..=5usize {
        for d in 0..=6usize {
            let total: u64 = enumerate_partitions(n)
                .iter()
                .map(|l| graded_poly_multiplicity(l, n, d).unwrap() * dimension(l))
                .sum();
            assert_eq!(total, binomial((n + d - 1) as u64, d as u64), "n={n} d={d}");
        }
    }
}

#[test]
fn a_m_is_diagonal_with_the_closed_form_eigenvalue() {
    for n in 0..=14usize {
        for nu in enumerate_partitions(n) {
            for m in 1..=5u32 {
                let v = FockVector::basis(nu.clone());
                let expected = v.scale(&int(a_m_eigenvalue(&nu, m) as i64));
                assert_eq!(apply_a_m(m, &v), expected, "nu={nu} m={m}");
            }
        }
    }
}

#[test]
fn heisenberg_commutator() {
    for n in 0..=12usize {
        for nu in enumerate_partitions(n) {
            let v = FockVector::basis(nu.clone());
            for i in 1..=6u32 {
                for j in 1..=6u32 {
                    let lhs = annihilate(i, &create(j, &v)).add(&create(j, &annihilate(i, &v)).scale(&int(-1)));
                    let rhs = if i == j { v.scale(&int(i64::from(i))) } else { FockVector::zero() };
                    assert_eq!(lhs, rhs, "nu={nu} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn eigenspaces_exhaust_each_degree() {
    for m in 2..=6u32 {
        for n in 0..=25usize {
            let total: usize = (0..=n).map(|e| eigenspace_dimension(n, m, e).unwrap()).sum();
            assert_eq!(total, enumerate_partitions(n).len());
        }
        assert!(fock::verify_bo_range(25, m).unwrap().iter().all(|r| r.ok()));
    }
}

#[test]
fn hecke_presentation_holds() {
    for p in 2..=5usize {
        for m in [2, 3, 4, 6] {
            let report = hecke::verify_presentation(p, m).unwrap();
            assert!(report.ok(), "p={p} m={m}: {:?}", report.violations);
        }
    }
}

#[test]
fn radical_is_a_two_sided_ideal() {
    for p in 2..=4usize {
        for m in 2..=4u32 {
            let alg = HeckeAlgebra::new(p, m).unwrap();
            let rad = hecke::radical(&alg);
            for r in rad.basis() {
                let r = alg.from_vector(r.clone());
                for i in 0..p - 1 {
                    assert!(rad.contains(alg.mul_generator_right(&r, i).coeffs()));
                    assert!(rad.contains(alg.mul_generator_left(i, &r).coeffs()));
                }
            }
        }
    }
}

#[test]
fn generic_parameters_are_semisimple() {
    let cases = [(2, 3), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)];
    for (p, m) in cases {
        let count = hecke::count_simples(p, m).unwrap();
        assert_eq!(count.rad_dim, 0, "p={p} m={m}");
        assert_eq!(count.simples, enumerate_partitions(p).len());
        assert!(count.audit.passed && count.ok, "p={p} m={m}: {:?}", count.audit);
    }
}

#[test]
fn singular_vectors_are_differences_of_variables() {
    for n in 2..=4usize {
        let cfg = EngineConfig::new(n, rat(1, n as i64)).unwrap();
        let span = cfg.singular_vectors(1).unwrap();
        assert_eq!(span.len(), n - 1);
        for f in &span {
            // Coefficients sum to zero: f lies in the span of x_i − x_j.
            let total = f.terms().fold(int(0), |acc, (_, c)| acc + c);
            assert_eq!(total, int(0));
        }
    }
}

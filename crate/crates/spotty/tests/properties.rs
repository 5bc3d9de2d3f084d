mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spotty::code::{
    self, inner_product, ByteLayout, GeneratorMatrix, Word, DEFAULT_DUAL_BUDGET,
    DEFAULT_SPAN_BUDGET,
};
use spotty::macwilliams::{enumerator_from_distribution, transform};
use spotty::oracle::{dual_enumerator_bruteforce, Oracle};
use spotty::weight::{alpha_vector, distribution, enumerator, m_spotty_weight};
use spotty::{Polynomial, RingElement, RingParams};

fn ring(max_m: u32) -> impl Strategy<Value = RingParams> {
    (1..=max_m).prop_map(|m| RingParams::new(m).unwrap())
}

fn elements(p: RingParams, count: usize) -> impl Strategy<Value = Vec<RingElement>> {
    proptest::collection::vec(0..p.order(), count)
        .prop_map(move |v| v.into_iter().map(|x| p.element(x).unwrap()).collect())
}

fn ring_triple() -> impl Strategy<Value = (RingElement, RingElement, RingElement)> {
    ring(16)
        .prop_flat_map(|p| elements(p, 3))
        .prop_map(|v| (v[0], v[1], v[2]))
}

fn layout() -> impl Strategy<Value = ByteLayout> {
    (1usize..=4, 1usize..=3)
        .prop_flat_map(|(b, n)| (Just(b), 1..=b, Just(n)))
        .prop_map(|(b, t, n)| ByteLayout::new(b, t, n).unwrap())
}

fn word_pair() -> impl Strategy<Value = (Word, Word, Word)> {
    (ring(6), layout()).prop_flat_map(|(p, l)| {
        elements(p, 3 * l.len()).prop_map(move |v| {
            let len = l.len();
            let w = |i: usize| Word::new(p, l, v[i * len..(i + 1) * len].to_vec()).unwrap();
            (w(0), w(1), w(2))
        })
    })
}

proptest! {
    #[test]
    fn ring_laws((a, b, c) in ring_triple()) {
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a.chi() * b.chi(), (a + b).chi());
    }

    #[test]
    fn element_text_round_trip((a, _, _) in ring_triple()) {
        prop_assert_eq!(a.params().parse_element(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn inner_product_is_symmetric_and_bilinear((x, y, z) in word_pair(), r in 0u32..64) {
        let p = x.params();
        let r = p.element(r & (p.order() - 1)).unwrap();
        prop_assert_eq!(inner_product(&x, &y).unwrap(), inner_product(&y, &x).unwrap());
        prop_assert_eq!(
            inner_product(&x.try_add(&y).unwrap(), &z).unwrap(),
            inner_product(&x, &z).unwrap() + inner_product(&y, &z).unwrap()
        );
        prop_assert_eq!(inner_product(&x.scale(r).unwrap(), &z).unwrap(), r * inner_product(&x, &z).unwrap());
    }

    #[test]
    fn alpha_vector_summarizes_weight((x, _, _) in word_pair()) {
        let l = x.layout();
        let alpha = alpha_vector(&x);
        prop_assert_eq!(alpha.counts().iter().sum::<u32>() as usize, l.n());
        prop_assert_eq!(alpha.m_spotty_weight(l), m_spotty_weight(&x));
        prop_assert!(m_spotty_weight(&x) <= l.max_weight());
        let full = Word::new(x.params(), l.with_t(l.b()).unwrap(), x.coords().to_vec()).unwrap();
        prop_assert_eq!(m_spotty_weight(&full), x.bytes().filter(|b| b.iter().any(|e| !e.is_zero())).count());
    }

    #[test]
    fn polynomial_json_round_trip(coeffs in proptest::collection::vec(-1_000_000i64..1_000_000, 0..8)) {
        let p = Polynomial::from_coeffs(&coeffs);
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), p);
    }

    #[test]
    fn polynomial_ring_laws(
        a in proptest::collection::vec(-50i64..50, 0..5),
        b in proptest::collection::vec(-50i64..50, 0..5),
        e in 0u32..4,
    ) {
        let (a, b) = (Polynomial::from_coeffs(&a), Polynomial::from_coeffs(&b));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).eval(&3.into()), a.eval(&3.into()) * b.eval(&3.into()));
        prop_assert_eq!(a.pow(e + 1), &a.pow(e) * &a);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }
}

#[test]
fn character_sums_exhaustive_up_to_m8() {
    for m in 1..=8 {
        let p = RingParams::new(m).unwrap();
        let oracle = Oracle::new(p);
        for k in 0..m {
            assert_eq!(oracle.sum_chi_over_ideal(k).unwrap(), 0, "m={m} k={k}");
        }
        for a in p.elements() {
            let expected = if a.is_zero() { 1 << m } else { 0 };
            assert_eq!(oracle.sum_chi_multiples(a), expected, "m={m} a={a}");
        }
        assert_eq!(oracle.homomorphism_violations(), 0, "m={m}");
    }
}

fn random_case(rng: &mut ChaCha8Rng, max_m: u32, max_len: usize) -> GeneratorMatrix {
    let p = RingParams::new(rng.gen_range(1..=max_m)).unwrap();
    let len = rng.gen_range(1..=max_len);
    let divisors: Vec<usize> = (1..=len).filter(|d| len % d == 0).collect();
    let b = divisors[rng.gen_range(0..divisors.len())];
    let layout = ByteLayout::new(b, rng.gen_range(1..=b), len / b).unwrap();
    let k = rng.gen_range(0..=3);
    GeneratorMatrix::random(p, layout, k, rng)
}

#[test]
fn transform_matches_bruteforce_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for case in 0..30 {
        let g = random_case(&mut rng, 3, 4);
        let c = code::span(&g, DEFAULT_SPAN_BUDGET).unwrap();
        c.check_closure(4096).unwrap();
        let w = enumerator(&c);
        let dist = distribution(&c);
        assert_eq!(w, enumerator_from_distribution(&dist), "case {case}");
        assert_eq!(w.eval_one(), c.len().into());
        assert!(w.degree().unwrap() as usize <= g.layout().max_weight());
        let via_transform = transform(&dist, c.len() as u64, g.params().m()).unwrap();
        let brute = dual_enumerator_bruteforce(&g, DEFAULT_DUAL_BUDGET, 2).unwrap();
        assert_eq!(via_transform, brute, "case {case}: {}", code_text(&g));
    }
}

fn code_text(g: &GeneratorMatrix) -> String {
    spotty::matrix_file::format_matrix(g)
}

#[test]
fn dual_of_dual_is_the_code() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for case in 0..20 {
        let g = random_case(&mut rng, 3, 4);
        let c = code::span(&g, DEFAULT_SPAN_BUDGET).unwrap();
        let d = code::dual(&g, DEFAULT_DUAL_BUDGET, 1).unwrap();
        let dd = code::dual(&d.generator_matrix(), DEFAULT_DUAL_BUDGET, 1).unwrap();
        assert_eq!(dd, c, "case {case}");
    }
}

#[test]
fn standard_form_profile_predicts_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..20 {
        let m = rng.gen_range(1..=3u32);
        let p = RingParams::new(m).unwrap();
        let profile: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=1)).collect();
        let k: usize = profile.iter().sum::<u32>() as usize;
        let len = k + rng.gen_range(0..=1);
        if len == 0 {
            continue;
        }
        let layout = ByteLayout::new(1, 1, len).unwrap();
        // block-triangular rows: row r of block i is u^i (e_r + random tail)
        let mut rows = Vec::new();
        let mut col = 0;
        for (i, &ki) in profile.iter().enumerate() {
            for _ in 0..ki {
                let lead = p.u_pow(i as u32);
                let row: Vec<RingElement> = (0..len)
                    .map(|j| {
                        if j < col {
                            p.zero()
                        } else if j == col {
                            lead
                        } else {
                            lead * p.element(rng.gen_range(0..p.order())).unwrap()
                        }
                    })
                    .collect();
                rows.push(row);
                col += 1;
            }
        }
        let g = GeneratorMatrix::new(p, layout, rows).unwrap();
        let size = code::span(&g, DEFAULT_SPAN_BUDGET).unwrap().len();
        assert_eq!(
            num_bigint::BigUint::from(size),
            code::code_size_from_profile(p, &profile).unwrap(),
            "{}",
            code_text(&g)
        );
    }
}

#[test]
fn full_space_transforms_to_one() {
    let p = RingParams::new(2).unwrap();
    let layout = ByteLayout::new(2, 1, 1).unwrap();
    let full = code::span(&GeneratorMatrix::identity(p, layout), DEFAULT_SPAN_BUDGET).unwrap();
    assert_eq!(full.len(), 16);
    assert_eq!(
        transform(&distribution(&full), 16, 2).unwrap(),
        Polynomial::one()
    );
}

#[test]
fn poisson_summation_on_worked_example() {
    let c = code::span(&common::example_matrix(), DEFAULT_SPAN_BUDGET).unwrap();
    let report = Oracle::new(c.params())
        .poisson_check(&c, DEFAULT_DUAL_BUDGET, 4)
        .unwrap();
    assert!(report.pass, "{report:?}");
    assert_eq!(
        report.expected,
        common::example_dual_enumerator().to_string()
    );
}

#[test]
fn poisson_summation_on_random_small_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..10 {
        let p = RingParams::new(2).unwrap();
        let layout = ByteLayout::new(2, rng.gen_range(1..=2), 1).unwrap();
        let g = GeneratorMatrix::random(p, layout, 1, &mut rng);
        let c = code::span(&g, DEFAULT_SPAN_BUDGET).unwrap();
        let report = Oracle::new(p).poisson_check(&c, 256, 1).unwrap();
        assert!(report.pass, "{report:?}");
    }
}

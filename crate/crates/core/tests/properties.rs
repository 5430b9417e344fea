//! Property tests for the algebra, Gröbner, staircase and parsing layers.

mod common;

use std::cmp::Ordering;

use bigrade::algebra::{Bidegree, BlockOrder, Ideal, Monomial, Polynomial, RingDescriptor, Var};
use bigrade::cli::parser::{format_ideal, parse_ideal_str};
use bigrade::groebner::{groebner_basis, initial_ideal, normal_form};
use bigrade::ideal_ops::{colon_poly, saturate_by_var};
use bigrade::staircase::{colon_equality_region, star_closure, Ambient, MonomialIdeal, Region};
use proptest::prelude::*;
use rand::Rng;

fn ring32() -> RingDescriptor {
    RingDescriptor::new(3, 2).unwrap()
}

fn mono_strategy() -> impl Strategy<Value = Monomial> {
    (prop::collection::vec(0u32..4, 3), prop::collection::vec(0u32..4, 2)).prop_map(|(a, b)| Monomial::new(&a, &b))
}

fn order_strategy() -> impl Strategy<Value = BlockOrder> {
    prop_oneof![Just(BlockOrder::XLow), Just(BlockOrder::YLow)]
}

fn cmp(order: BlockOrder, a: &Monomial, b: &Monomial) -> Ordering {
    ring32().with_order(order).compare(a, b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn order_is_total_and_antisymmetric(o in order_strategy(), a in mono_strategy(), b in mono_strategy()) {
        prop_assert_eq!(cmp(o, &a, &b), cmp(o, &b, &a).reverse());
        prop_assert_eq!(cmp(o, &a, &b) == Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_transitive(o in order_strategy(), a in mono_strategy(), b in mono_strategy(), c in mono_strategy()) {
        if cmp(o, &a, &b) != Ordering::Greater && cmp(o, &b, &c) != Ordering::Greater {
            prop_assert_ne!(cmp(o, &a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn order_is_multiplicative(o in order_strategy(), a in mono_strategy(), b in mono_strategy(), c in mono_strategy()) {
        prop_assert_eq!(cmp(o, &a, &b), cmp(o, &a.mul(&c), &b.mul(&c)));
        prop_assert_ne!(cmp(o, &Monomial::one(&ring32()), &a), Ordering::Greater);
    }

    #[test]
    fn blocks_are_symmetric(o in order_strategy(), a in mono_strategy(), b in mono_strategy()) {
        let r = ring32().with_order(o);
        prop_assert_eq!(
            r.compare(&a, &b).unwrap(),
            r.swapped().compare(&a.swap_blocks(), &b.swap_blocks()).unwrap()
        );
    }

    #[test]
    fn smallest_variable_divides_everything_below_it(o in order_strategy(), a in mono_strategy(), b in mono_strategy()) {
        // Among monomials of equal total degree, x0 | a and b < a force x0 | b (DRL).
        let v = if o == BlockOrder::XLow { Var::X(0) } else { Var::Y(0) };
        if a.degree() == b.degree() && a.exponent(v) > 0 && cmp(o, &b, &a) == Ordering::Less {
            prop_assert!(b.exponent(v) > 0);
        }
    }
}

fn poly_from_seed(seed: u64) -> Polynomial {
    let mut rng = common::rng(seed);
    let d = Bidegree::new(rng.gen_range(0..=2), rng.gen_range(0..=2));
    let terms = rng.gen_range(1..=4);
    common::random_polynomial(&mut rng, ring32(), d, terms, 7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (f, g, h) = (poly_from_seed(s1), poly_from_seed(s2), poly_from_seed(s3));
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert!(f.sub(&f).unwrap().is_zero());
        let fg = f.mul(&g).unwrap();
        prop_assert_eq!(fg.exact_div(&g).unwrap(), f.clone());
        if let (Ok(df), Ok(dg)) = (f.bidegree(), g.bidegree()) {
            prop_assert_eq!(fg.bidegree().unwrap(), df + dg);
        }
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let i = common::random_ideal(&mut rng, ring32());
        let text = format_ideal(&i);
        let back = parse_ideal_str(&text, None, false).unwrap();
        prop_assert_eq!(back.ideal.generators(), i.generators());
        let (g1, g2) = (groebner_basis(&back.ideal), groebner_basis(&i));
        prop_assert_eq!(g1.elements(), g2.elements());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_basis_is_a_basis(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let i = common::random_ideal(&mut rng, RingDescriptor::new(2, 2).unwrap());
        let gb = groebner_basis(&i);
        prop_assert!(gb.satisfies_buchberger_criterion());
        for g in i.generators() {
            prop_assert!(normal_form(g, gb.elements()).unwrap().is_zero());
        }
        // Reordering the generators does not change the reduced basis.
        let mut rev = i.generators().to_vec();
        rev.reverse();
        let gb2 = groebner_basis(&Ideal::new(*i.ring(), rev).unwrap());
        prop_assert_eq!(gb.elements(), gb2.elements());
    }

    #[test]
    fn hilbert_function_of_ideal_matches_rank(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let i = common::random_ideal(&mut rng, RingDescriptor::new(2, 2).unwrap());
        let init = initial_ideal(&i);
        for a in 0..=5 {
            for b in 0..=5 {
                let d = Bidegree::new(a, b);
                prop_assert_eq!(init.hilbert_function(d).unwrap(), common::hf_by_rank(&i, d), "{}", d);
            }
        }
    }

    #[test]
    fn variable_saturation_matches_iterated_colon(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let r = RingDescriptor::new(2, 2).unwrap();
        let i = common::random_ideal(&mut rng, r);
        let v = if seed % 2 == 0 { Var::X(1) } else { Var::Y(0) };
        let fast = groebner_basis(&saturate_by_var(&i, v).unwrap());
        let x = Polynomial::var(r, v);
        let mut cur = groebner_basis(&i);
        loop {
            let next = groebner_basis(&colon_poly(&cur.to_ideal(), &x).unwrap());
            if next.elements() == cur.elements() {
                break;
            }
            cur = next;
        }
        prop_assert_eq!(fast.elements(), cur.elements());
    }
}

fn monomial_ideal_from_seed(seed: u64, max_deg: u32) -> MonomialIdeal {
    let mut rng = common::rng(seed);
    let r = ring32();
    let n = rng.gen_range(1..=5);
    let gens = (0..n)
        .map(|_| {
            let d = Bidegree::new(rng.gen_range(0..=max_deg as i64), rng.gen_range(0..=max_deg as i64));
            common::random_monomial(&mut rng, &r, d)
        })
        .filter(|m| !m.is_one())
        .collect::<Vec<_>>();
    MonomialIdeal::new(r, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hilbert_routes_agree(seed in any::<u64>()) {
        let m = monomial_ideal_from_seed(seed, 3);
        for a in 0..=6 {
            for b in 0..=6 {
                let d = Bidegree::new(a, b);
                let counted = common::hf_by_counting(&m, d);
                prop_assert_eq!(m.hilbert_function(d).unwrap(), counted);
                prop_assert_eq!(m.hilbert_function_enumerated(d).unwrap(), counted);
            }
        }
    }

    #[test]
    fn zero_region_matches_counting(seed in any::<u64>()) {
        let m = monomial_ideal_from_seed(seed, 3);
        let z = m.hf_zero_region().unwrap();
        let c = m.zero_region_bound() + Bidegree::new(2, 2);
        for a in 0..=c.a {
            for b in 0..=c.b {
                let d = Bidegree::new(a, b);
                prop_assert_eq!(z.contains(d), common::hf_by_counting(&m, d) == 0, "{} in {}", d, z);
            }
        }
    }

    #[test]
    fn colon_region_matches_brute_force(seed in any::<u64>(), k in 0usize..3) {
        // Any monomial ideal, not only bi-Borel ones.
        let m = monomial_ideal_from_seed(seed, 3);
        let region = colon_equality_region(&m, k).unwrap();
        let q = m.colon_var(Var::X(k));
        let c = 8;
        let mut witnesses = Vec::new();
        for a in 0..=c {
            for b in 0..=c {
                let d = Bidegree::new(a, b);
                if Monomial::enumerate(3, 2, d).iter().any(|u| q.contains(u) && !m.contains(u)) {
                    witnesses.push(d);
                }
            }
        }
        for a in 1..=c {
            for b in 0..=c {
                let p = Bidegree::new(a, b);
                let brute = !witnesses.iter().any(|w| w.dominates(&p));
                prop_assert_eq!(region.contains(p), brute, "{} in {}", p, region);
            }
        }
    }

    #[test]
    fn biborel_check_matches_definition(seed in any::<u64>()) {
        let m = monomial_ideal_from_seed(seed, 3);
        let r = m.ring();
        let mut borel = true;
        for g in m.generators() {
            for i in 0..r.nx() {
                for j in i + 1..r.nx() {
                    if g.exponent(Var::X(i)) > 0 && !m.contains(&g.strip_var(Var::X(i)).times_var(Var::X(j))) {
                        borel = false;
                    }
                }
            }
            for i in 0..r.ny() {
                for j in i + 1..r.ny() {
                    if g.exponent(Var::Y(i)) > 0 && !m.contains(&g.strip_var(Var::Y(i)).times_var(Var::Y(j))) {
                        borel = false;
                    }
                }
            }
        }
        prop_assert_eq!(m.is_biborel(), borel);
    }
}

fn bidegree_set() -> impl Strategy<Value = Vec<Bidegree>> {
    prop::collection::vec((0i64..8, 0i64..8).prop_map(|(a, b)| Bidegree::new(a, b)), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn region_algebra_is_pointwise(p in bidegree_set(), q in bidegree_set(), s in (0i64..3, 0i64..3)) {
        let amb = Ambient::Nonneg;
        let (r1, r2) = (Region::from_generators(amb, p.clone()), Region::from_generators(amb, q.clone()));
        let up = |set: &[Bidegree], d: Bidegree| set.iter().any(|g| d.dominates(g));
        let shift = Bidegree::new(s.0, s.1);
        let shifted = r1.shift(shift);
        let meet = r1.intersect(&r2);
        let join = r1.union(&r2);
        for a in 0..12 {
            for b in 0..12 {
                let d = Bidegree::new(a, b);
                prop_assert_eq!(r1.contains(d), up(&p, d));
                prop_assert_eq!(meet.contains(d), up(&p, d) && up(&q, d));
                prop_assert_eq!(join.contains(d), up(&p, d) || up(&q, d));
                prop_assert_eq!(shifted.contains(d), up(&p, d - shift));
            }
        }
        let mins = r1.minimal_elements();
        for (i, x) in mins.iter().enumerate() {
            for (j, y) in mins.iter().enumerate() {
                prop_assert!(i == j || !x.dominates(y));
            }
        }
    }

    #[test]
    fn star_closure_complement_partitions(p in bidegree_set()) {
        let star = star_closure(p.clone());
        let comp = star.complement(Ambient::Nonneg);
        for a in 0..12 {
            for b in 0..12 {
                let d = Bidegree::new(a, b);
                prop_assert_eq!(star.contains(d), p.iter().any(|w| w.dominates(&d)));
                prop_assert_ne!(star.contains(d), comp.contains(d));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn refined_presence_certificates_recheck(seed in any::<u64>()) {
        let m = &common::random_biborel_family(seed, RingDescriptor::new(3, 2).unwrap(), 1, 40)[0];
        let region = bigrade::regularity::xreg_region(m).unwrap();
        let certs = bigrade::regularity::certify_presence_refined(m, &region).unwrap();
        for c in &certs {
            prop_assert!(c.verdict, "{:?}", c.bidegree);
            prop_assert!(c.recheck(m));
        }
        let absence = bigrade::regularity::certify_absence(m, &region).unwrap();
        prop_assert!(absence.verdict && absence.recheck(m));
    }
}

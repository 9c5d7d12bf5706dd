use proptest::prelude::*;

use extbranch::arthur::{az_dual, gl_size, param_of, rep_of, ArthurRep, Speh};
use extbranch::hecke::{HElement, Perm, RatFunc};
use extbranch::linalg::rat_frac;
use extbranch::relevance::{certificate_validate, certificate_validate_rep, strong_ext_relevant_param, strong_ext_relevant_rep};
use extbranch::segments::{c_omega_member, cuspidal_support, half, linked, standard_order, CuspidalLine, Linkage, Multisegment, Segment};
use extbranch::wire::{self, rep_from_json, rep_json, HElementJson, LineTable, SpehJson};

fn lines() -> Vec<CuspidalLine> {
    vec![CuspidalLine::new("r", 1), CuspidalLine::self_dual("s", 2), CuspidalLine::new("t", 1)]
}

fn segment() -> impl Strategy<Value = Segment> {
    (0..2usize, -6..6i64, 0..4i64).prop_map(|(l, a2, len)| {
        let line = lines()[l].clone();
        Segment::new(line, half(a2), half(a2) + half(2 * len)).unwrap()
    })
}

fn multisegment() -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(segment(), 0..5).prop_map(Multisegment::new)
}

fn speh() -> impl Strategy<Value = Speh> {
    (0..3usize, 1..4u32, 1..4u32).prop_map(|(l, a, b)| Speh::new(lines()[l].clone(), a, b))
}

fn rep(max: usize) -> impl Strategy<Value = ArthurRep> {
    prop::collection::vec(speh(), 0..=max).prop_map(ArthurRep::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (-3..4i64, -2..3i64, 1..3i64, -2..3i64).prop_map(|(a, b, c, d)| {
        let num = &RatFunc::int(a) + &(&RatFunc::q() * &RatFunc::int(b));
        let den = &RatFunc::int(c) + &(&RatFunc::q() * &RatFunc::int(d));
        if den.is_zero() {
            num
        } else {
            &num / &den
        }
    })
}

proptest! {
    #[test]
    fn standard_order_is_a_sorted_permutation(m in multisegment()) {
        let order = standard_order(&m);
        prop_assert_eq!(standard_order(&Multisegment::new(order.clone())), order.clone());
        prop_assert_eq!(Multisegment::new(order.clone()), m);
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                prop_assert_ne!(linked(&order[i], &order[j]), Linkage::FirstPrecedes, "{} before {}", order[i], order[j]);
            }
        }
    }

    #[test]
    fn linkage_is_antisymmetric(d1 in segment(), d2 in segment()) {
        let expected = match linked(&d1, &d2) {
            Linkage::FirstPrecedes => Linkage::SecondPrecedes,
            Linkage::SecondPrecedes => Linkage::FirstPrecedes,
            Linkage::NotLinked => Linkage::NotLinked,
        };
        prop_assert_eq!(linked(&d2, &d1), expected);
        prop_assert_eq!(linked(&d1, &d1), Linkage::NotLinked);
    }

    #[test]
    fn support_size_is_total_length(m in multisegment(), n in multisegment()) {
        let total: usize = m.segments().iter().map(Segment::len).sum();
        prop_assert_eq!(cuspidal_support(&m).len(), total);
        prop_assert_eq!(cuspidal_support(&m.union(&n)), cuspidal_support(&m).union(&cuspidal_support(&n)));
    }

    #[test]
    fn c_omega_is_closed_under_union_and_restriction(s1 in multisegment(), s2 in multisegment(), omega in segment()) {
        let w = cuspidal_support(&Multisegment::new(vec![omega]));
        let (a, b) = (cuspidal_support(&s1), cuspidal_support(&s2));
        let both = a.union(&b);
        prop_assert_eq!(c_omega_member(&both, &w), c_omega_member(&a, &w) && c_omega_member(&b, &w));
        prop_assert!(c_omega_member(&w, &w));
    }

    #[test]
    fn duality_is_an_involution_swapping_parameters(pi in rep(4)) {
        prop_assert_eq!(az_dual(&az_dual(&pi)), pi.clone());
        prop_assert_eq!(gl_size(&az_dual(&pi)), gl_size(&pi));
        prop_assert_eq!(param_of(&az_dual(&pi)), param_of(&pi).swap_factors());
        prop_assert_eq!(rep_of(&param_of(&pi)), pi.clone());
        prop_assert_eq!(pi.contragredient().contragredient(), pi);
    }

    #[test]
    fn deciders_agree_and_certificates_validate(pi1 in rep(3), pi2 in rep(3)) {
        let (p1, p2) = (param_of(&pi1), param_of(&pi2));
        let by_param = strong_ext_relevant_param(&p1, &p2);
        let by_rep = strong_ext_relevant_rep(&pi1, &pi2);
        prop_assert_eq!(by_param.is_some(), by_rep.is_some());
        for cert in by_param.iter().chain(by_rep.iter()) {
            prop_assert!(certificate_validate(cert, &p1, &p2));
            prop_assert!(certificate_validate_rep(cert, &pi1, &pi2));
            prop_assert!(certificate_validate(&cert.swapped(), &p2, &p1));
        }
    }

    #[test]
    fn representations_round_trip_through_json(pi in rep(4)) {
        let text = wire::to_canonical(&rep_json(&pi));
        let items: Vec<SpehJson> = wire::from_str(&text).unwrap();
        prop_assert_eq!(rep_from_json(&items, &mut LineTable::default()).unwrap(), pi);
        prop_assert_eq!(wire::to_canonical(&items), text);
    }

    #[test]
    fn rational_functions_print_parseably(f in ratfunc()) {
        prop_assert_eq!(RatFunc::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn rational_function_field_laws(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!(&(&f / &g) * &g, f.clone());
        }
        let q = rat_frac(7, 3);
        if let (Some(a), Some(b), Some(c)) = (f.eval(&q), g.eval(&q), (&f * &g).eval(&q)) {
            prop_assert_eq!(a * b, c);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hecke_elements_round_trip_and_multiply_associatively(seed in any::<u64>(), n in 1..=3usize) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (HElement::random(n, 3, &mut rng), HElement::random(n, 2, &mut rng), HElement::random(n, 2, &mut rng));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&HElement::one(n)), a.clone());
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        let text = wire::to_canonical(&HElementJson::of(&a));
        let back: HElementJson = wire::from_str(&text).unwrap();
        prop_assert_eq!(back.to_element().unwrap(), a);
    }

    #[test]
    fn permutation_lengths(v in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(), u in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let (w, u) = (Perm::from_one_line(v).unwrap(), Perm::from_one_line(u).unwrap());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.reduced_word().len(), w.length());
        prop_assert!(w.compose(&u).length() <= w.length() + u.length());
        prop_assert!(w.compose(&w.inverse()).is_identity());
    }
}

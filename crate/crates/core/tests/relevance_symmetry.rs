use extbranch::arthur::{az_dual, ArthurRep, Speh};
use extbranch::relevance::{certificate_validate_rep, strong_ext_relevant_rep};
use extbranch::segments::CuspidalLine;
use extbranch::sweep::ggp_pairs;

fn relevant(a: &ArthurRep, b: &ArthurRep) -> bool {
    strong_ext_relevant_rep(a, b).is_some()
}

#[test]
fn swap_and_contragredient_preserve_relevance() {
    let r = CuspidalLine::new("r", 1);
    for (a, b) in ggp_pairs(&r, 6) {
        let rel = relevant(&a, &b);
        assert_eq!(rel, relevant(&b, &a), "swap {a} / {b}");
        assert_eq!(rel, relevant(&a.contragredient(), &b.contragredient()), "contragredient {a} / {b}");
        if let Some(c) = strong_ext_relevant_rep(&a, &b) {
            assert!(certificate_validate_rep(&c.swapped(), &b, &a));
        }
    }
}

#[test]
fn duality_with_swap_is_not_a_symmetry() {
    // (1 × St₂, 1₂) is relevant, (St₂, 1 × 1₂) is not
    let r = CuspidalLine::new("r", 1);
    let pi1 = ArthurRep::new(vec![Speh::new(r.clone(), 1, 1), Speh::new(r.clone(), 2, 1)]);
    let pi2 = ArthurRep::new(vec![Speh::new(r.clone(), 1, 2)]);
    assert!(relevant(&pi1, &pi2));
    assert!(!relevant(&az_dual(&pi2), &az_dual(&pi1)));
}

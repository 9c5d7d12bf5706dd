use extbranch::segments::CuspidalLine;
use extbranch::sweep::{ggp_pairs, run};

#[test]
fn full_single_line_sweep() {
    let r = CuspidalLine::new("r", 1);
    let reports = run(ggp_pairs(&r, 6));
    assert!(reports.len() > 300, "{}", reports.len());
    let bad: Vec<_> = reports.iter().filter(|p| !(p.deciders_agree && p.certificates_valid && p.trace_ok)).collect();
    assert!(bad.is_empty(), "{} failures, first {:?}", bad.len(), bad.first());
    let relevant = reports.iter().filter(|p| p.relevant).count();
    println!("{} pairs, {} relevant", reports.len(), relevant);
    assert!(relevant > 0 && relevant < reports.len());
    assert!(reports.iter().any(|p| p.used_duality));
}

#[test]
fn self_dual_line_of_degree_two() {
    let r = CuspidalLine::self_dual("t", 2);
    let reports = run(ggp_pairs(&r, 6));
    // sizes differ by one, so no pair fits on a degree-two line alone
    assert!(reports.iter().all(|p| !p.relevant && p.trace_ok));
}

//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use extbranch::arthur::{az_dual, l_param_msegs, langlands_msegs, param_of, zelevinsky_msegs, ArthurRep, Speh};
use extbranch::findim::fixtures::{remark14_a, remark14_b, Fixture};
use extbranch::findim::*;
use extbranch::hecke::*;
use extbranch::linalg::{rat, rat_frac, Rat};
use extbranch::reduction::{build_trace, ReductionTrace};
use extbranch::segments::{cuspidal_support, CuspidalLine};
use extbranch::sweep::{ggp_pairs, run};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn line() -> CuspidalLine {
    CuspidalLine::new("r", 1)
}

fn ext_and_shape(fx: &Fixture, from: &str, to: &str, degree: usize) -> Result<(usize, String), String> {
    let m = fx.module(from).ok_or("missing module")?;
    let n = fx.module(to).ok_or("missing module")?;
    let res = projective_resolution(&fx.algebra, m, degree + 1).map_err(|e| e.to_string())?;
    res.verify().map_err(|e| e.to_string())?;
    Ok((ext_dim_with(&fx.algebra, &res, n, degree), res.shape(&fx.projective_names, from)))
}

fn c1() -> Outcome {
    let (da, sa) = ext_and_shape(&remark14_a(), "X", "Z", 2)?;
    let (db, sb) = ext_and_shape(&remark14_b(), "X", "Z", 2)?;
    ensure(da == 1 && db == 0, || format!("ext dims {da}, {db}"))?;
    ensure(sa == "0 → Z → Q → P → X → 0", || format!("A shape {sa}"))?;
    ensure(sb == "0 → Q → R → X → 0", || format!("B shape {sb}"))?;
    Ok(format!("Ext²_A(X,Z) = {da} via {sa}; Ext²_B(X,Z) = {db} via {sb}"))
}

fn c2() -> Outcome {
    let r = line();
    for a in 1..=6 {
        for b in 1..=6 {
            let u = Speh::new(r.clone(), a, b);
            ensure(u.dual() == Speh::new(r.clone(), b, a), || format!("D(u({a},{b})) = {:?}", u.dual()))?;
            ensure(u.dual().dual() == u, || format!("D² ≠ id at ({a},{b})"))?;
        }
    }
    let reps: Vec<ArthurRep> = (1..=6).flat_map(|n| extbranch::sweep::reps_of_size(&r, n)).collect();
    for pi in &reps {
        ensure(az_dual(&az_dual(pi)) == *pi, || format!("D² ≠ id on {pi}"))?;
        ensure(param_of(&az_dual(pi)) == param_of(pi).swap_factors(), || format!("param_of ∘ D ≠ swap ∘ param_of on {pi}"))?;
    }
    Ok(format!("36 Spehs, {} products up to GL_6", reps.len()))
}

fn c3() -> Outcome {
    let r = line();
    for a in 1..=6 {
        for b in 1..=6 {
            let u = Speh::new(r.clone(), a, b);
            let v = Speh::new(r.clone(), b, a);
            ensure(zelevinsky_msegs(&u) == langlands_msegs(&v), || format!("Z/Q mismatch at ({a},{b})"))?;
            let psi = param_of(&ArthurRep::new(vec![u.clone()]));
            ensure(l_param_msegs(&psi) == langlands_msegs(&u), || format!("L-parameter mismatch at ({a},{b})"))?;
            let size = cuspidal_support(&langlands_msegs(&u)).len();
            ensure(size == (a * b) as usize, || format!("support size {size} at ({a},{b})"))?;
            ensure(cuspidal_support(&zelevinsky_msegs(&u)).len() == size, || format!("Z support size at ({a},{b})"))?;
        }
    }
    Ok("1 ≤ a,b ≤ 6".into())
}

struct Sweep {
    reports: Vec<extbranch::sweep::PairReport>,
    elapsed: Duration,
}

fn sweep() -> Sweep {
    let start = Instant::now();
    let reports = run(ggp_pairs(&line(), 6));
    Sweep { reports, elapsed: start.elapsed() }
}

fn c4(s: &Sweep) -> Outcome {
    let n = s.reports.len();
    ensure(n >= 300, || format!("only {n} pairs"))?;
    let bad = s.reports.iter().filter(|p| !p.deciders_agree || !p.certificates_valid).count();
    ensure(bad == 0, || format!("{bad} pairs with disagreeing deciders or invalid certificates"))?;
    ensure(s.elapsed < Duration::from_secs(60), || format!("sweep took {:?}", s.elapsed))?;
    let relevant = s.reports.iter().filter(|p| p.relevant).count();
    Ok(format!("{n} pairs, {relevant} relevant, deciders agree, certificates validate"))
}

fn m_decreases(t: &ReductionTrace) -> bool {
    let ms: Vec<usize> = t.node.iter().map(|n| n.problem.m()).collect();
    ms.windows(2).all(|w| w[1] < w[0])
}

fn c5(s: &Sweep) -> Outcome {
    let bad: Vec<_> = s.reports.iter().filter(|p| !p.trace_ok).collect();
    ensure(bad.is_empty(), || format!("{} bad traces, first {} / {}: {}", bad.len(), bad[0].pi1, bad[0].pi2, bad[0].detail))?;
    let mut traces = 0;
    for p in s.reports.iter().filter(|p| p.relevant) {
        let t = build_trace(&p.pi1, &p.pi2).map_err(|e| e.to_string())?;
        ensure(m_decreases(&t), || format!("m does not decrease on {} / {}", p.pi1, p.pi2))?;
        traces += 1;
    }
    let r = line();
    let one3 = ArthurRep::new(vec![Speh::new(r.clone(), 1, 3)]);
    let st2 = ArthurRep::new(vec![Speh::new(r, 2, 1)]);
    let hit = s.reports.iter().find(|p| p.pi1 == one3 && p.pi2 == st2).ok_or("(1₃, St₂) not in the sweep")?;
    ensure(hit.used_duality, || "(1₃, St₂) does not use duality".into())?;
    let dual = s.reports.iter().filter(|p| p.used_duality).count();
    Ok(format!("{traces} traces valid, {dual} through duality, non-relevant pairs rejected"))
}

fn hecke_relations(n: usize) -> Vec<(String, HElement)> {
    let q = HElement::scalar(n, RatFunc::q());
    let one = HElement::one(n);
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let t = HElement::t(n, i);
        out.push((format!("(T{i} - q)(T{i} + 1)"), t.sub(&q).mul(&t.add(&one))));
        out.push((format!("T{i} y{i} T{i} - q y{}", i + 1), t.mul(&HElement::y(n, i, 1)).mul(&t).sub(&HElement::y(n, i + 1, 1).scale(&RatFunc::q()))));
        if i + 2 < n {
            let u = HElement::t(n, i + 1);
            out.push((format!("braid {i}"), t.mul(&u).mul(&t).sub(&u.mul(&t).mul(&u))));
        }
        for j in (0..n).filter(|&j| j != i && j != i + 1) {
            let y = HElement::y(n, j, 1);
            out.push((format!("[T{i}, y{j}]"), t.mul(&y).sub(&y.mul(&t))));
        }
    }
    for a in 0..n {
        out.push((format!("y{a} y{a}⁻¹ - 1"), HElement::y(n, a, 1).mul(&HElement::y(n, a, -1)).sub(&one)));
        for b in a + 1..n {
            let (ya, yb) = (HElement::y(n, a, 1), HElement::y(n, b, 1));
            out.push((format!("[y{a}, y{b}]"), ya.mul(&yb).sub(&yb.mul(&ya))));
        }
    }
    out
}

fn c6() -> Outcome {
    for n in 1..=3 {
        for (name, r) in hecke_relations(n) {
            ensure(r.is_zero(), || format!("n = {n}: {name} = {r}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..100 {
        let n = 1 + k % 3;
        let (a, b, c) = (HElement::random(n, 3, &mut rng), HElement::random(n, 3, &mut rng), HElement::random(n, 3, &mut rng));
        ensure(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), || format!("associativity fails at sample {k}"))?;
        let rels = hecke_relations(n);
        let (name, r) = &rels[rng.gen_range(0..rels.len())];
        ensure(a.mul(r).mul(&b).is_zero(), || format!("{name} not zero in a product at sample {k}"))?;
    }
    let mut labels = 0;
    for n in 1..=3 {
        for label in center::orbit_labels(n, -2, 2) {
            ensure(center::is_central(&center_element(&label).expansion), || format!("z_{label:?} not central"))?;
            labels += 1;
        }
    }
    let q = rat(2);
    let module = |rng: &mut ChaCha8Rng, n: usize| -> Result<FDHModule, HeckeError> {
        let alpha = rat_frac(rng.gen_range(1..=9), rng.gen_range(1..=4));
        match (n, rng.gen_range(0..3)) {
            (0, _) => Ok(FDHModule::unit(q.clone())),
            (1, 0) => FDHModule::jordan_block(q.clone(), alpha),
            (1, _) => FDHModule::character(q.clone(), alpha),
            (n, k) => FDHModule::one_dimensional(n, q.clone(), alpha, k == 0),
        }
    };
    for k in 0..20 {
        let n1 = rng.gen_range(0..=2);
        let n2 = rng.gen_range(0..=3 - n1);
        let a = module(&mut rng, n1).map_err(|e| e.to_string())?;
        let b = module(&mut rng, n2).map_err(|e| e.to_string())?;
        let m = induce_module(&a, &b).map_err(|e| e.to_string())?;
        let expected = binomial(n1 + n2, n1) * a.dim * b.dim;
        ensure(m.dim == expected, || format!("induce case {k}: dim {} ≠ {expected}", m.dim))?;
        m.check_relations().map_err(|e| format!("induce case {k}: {e}"))?;
    }
    let alphas: Vec<Rat> = vec![rat(1), rat(2), rat(3), rat(4), rat(-1), rat(-2), rat_frac(1, 2), rat_frac(3, 2)];
    let mut pairs = 0;
    for a in &alphas {
        for b in &alphas {
            let m1 = FDHModule::character(q.clone(), a.clone()).map_err(|e| e.to_string())?;
            let m2 = FDHModule::character(q.clone(), b.clone()).map_err(|e| e.to_string())?;
            ensure(completion_commutes_check(&m1, &m2, 3).map_err(|e| e.to_string())?, || format!("completion fails for characters {a}, {b}"))?;
            pairs += 1;
        }
    }
    Ok(format!("relations and 100 associativity samples, {labels} central labels, 20 inductions, {pairs} character pairs at j ≤ 3"))
}

fn fixture_pairs(fx: &Fixture) -> Vec<(&FDModule, &FDModule, String)> {
    let mut out = Vec::new();
    for (en, e) in &fx.modules {
        for (fname, f) in &fx.modules {
            out.push((e, f, format!("{en},{fname}")));
        }
    }
    out
}

fn c7() -> Outcome {
    let a = remark14_a();
    let b = remark14_b();
    let mut cases = 0;
    for other in [&a, &b] {
        let t = tensor_algebra(&a.algebra, &other.algebra);
        for (e1, f1, l1) in fixture_pairs(&a) {
            for (e2, f2, l2) in fixture_pairs(other) {
                let input = KunnethInput { a: &a.algebra, e1, f1, b: &other.algebra, e2, f2 };
                for r in kunneth_reports(&input, &t, 4).map_err(|e| e.to_string())? {
                    ensure(r.holds(), || format!("A⊗{}: ({l1}) ⊗ ({l2}) in degree {}: {} ≠ {:?}", other.id, r.degree, r.tensor_side, r.products))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} module quadruples, degrees 0..=4"))
}

fn c8() -> Outcome {
    let a = remark14_a();
    let (x, y, z) = (a.module("X").unwrap(), a.module("Y").unwrap(), a.module("Z").unwrap());
    let p = projective_resolution(&a.algebra, x, 3).map_err(|e| e.to_string())?;
    let classes = ext_basis(&a.algebra, &p, z, 2);
    ensure(classes.len() == 1, || format!("Ext² basis has {} elements", classes.len()))?;
    let f = &classes[0];
    let unit = QuiverAlgebra::unit();
    let omegas = [
        ("unit algebra", unit.clone(), FDModule::simple(&unit, 0)),
        ("A ⊗ A, ω = Y", a.algebra.clone(), y.clone()),
        ("A ⊗ A, ω = X", a.algebra.clone(), x.clone()),
    ];
    let pc = ProjComplex::from_resolution(&p);
    let delta = pc.cochain_map(&a.algebra, z, 1);
    let mut tested = 0;
    for (label, b, omega) in &omegas {
        let q = projective_resolution(b, omega, 3).map_err(|e| e.to_string())?;
        let e = embed_class(b, &q, &a.algebra, &p, z, f).map_err(|e| e.to_string())?;
        ensure(e.resolution_ok && e.cocycle_ok, || format!("{label}: the embedded class is not a cocycle on a resolution"))?;
        ensure(!e.is_coboundary, || format!("{label}: the generator embeds to zero"))?;
        for seed in 0..3 {
            let g: Vec<Rat> = (0..delta.cols()).map(|i| rat((i as i64 + 1) * (seed + 1) - 2)).collect();
            let boundary = ExtClass { degree: 2, cocycle: delta.apply(&g) };
            let e = embed_class(b, &q, &a.algebra, &p, z, &boundary).map_err(|e| e.to_string())?;
            ensure(e.cocycle_ok && e.is_coboundary, || format!("{label}: a coboundary embeds to a nonzero class"))?;
        }
        tested += 1;
    }
    Ok(format!("generator nonzero in {tested} embeddings, coboundaries preserved"))
}

fn report(index: usize, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let outcome = outcome.and_then(|m| if took <= budget { Ok(m) } else { Err(format!("took {took:.2?}, budget {budget:?}")) });
    match &outcome {
        Ok(m) => println!("PASS criterion {index} {name} ({took:.2?}): {m}"),
        Err(m) => println!("FAIL criterion {index} {name} ({took:.2?}): {m}"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let total = Instant::now();
    let minute = Duration::from_secs(60);
    let mut ok = true;
    ok &= report(1, "ext reproduction", Duration::from_secs(1), c1);
    ok &= report(2, "duality involution", minute, c2);
    ok &= report(3, "classification consistency", minute, c3);
    let mut swept = None;
    ok &= report(4, "decider equivalence", minute, || c4(swept.insert(sweep())));
    ok &= report(5, "reduction traces", minute, || c5(swept.as_ref().expect("criterion 4 ran the sweep")));
    ok &= report(6, "hecke relations", minute, c6);
    ok &= report(7, "kunneth", minute, c7);
    ok &= report(8, "embedding", minute, c8);
    let took = total.elapsed();
    let in_budget = took < Duration::from_secs(300);
    println!("{} total {took:.2?}", if in_budget { "PASS" } else { "FAIL" });
    if ok && in_budget {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

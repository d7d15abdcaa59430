//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every check is exact.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use garnir_core::rational;
use garnir_core::verify::{for_each_context, peel_subgroups};
use garnir_core::{
    generate_group, peel_product, run_suite, worked_example, AlgebraElement, ElementId, Order, RootSystem, Suite,
    SystemPair, WeylGroup,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn group(label: &str) -> WeylGroup {
    generate_group(RootSystem::from_label(label).expect("label")).expect("group")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: garnir_core::Error) -> String {
    err.to_string()
}

fn sorted_words(g: &WeylGroup, words: &[&str]) -> Vec<String> {
    let mut v: Vec<ElementId> = words.iter().map(|w| g.parse_word(w).expect("word")).collect();
    v.sort();
    v.into_iter().map(|x| g.word_string(x)).collect()
}

fn example_pair(g: &WeylGroup) -> SystemPair<'_> {
    let phi = g.root_system();
    SystemPair::new(g, &phi.parse_roots("10,32").unwrap(), &phi.parse_roots("11").unwrap()).unwrap()
}

fn worked_example_end_to_end() -> Outcome {
    let g = group("G2");
    let ex = worked_example(&g).map_err(e)?;
    ensure(ex.tabloids == ["{10,32;11}", "{11,31;10}", "{21,01;-10}"], || format!("tabloids {:?}", ex.tabloids))?;
    ensure(ex.d_tableau == "{-10,32;21}", || format!("{{dJ}} = {}", ex.d_tableau))?;
    let w_dj = sorted_words(&g, &["e", "t1", "t2 t1 t2 t1 t2", "t2 t1 t2 t1 t2 t1"]);
    ensure(ex.w_dj == w_dj, || format!("W(dJ) {:?}", ex.w_dj))?;
    ensure(ex.w_djp == sorted_words(&g, &["e", "t1 t2 t1 t2 t1"]), || format!("W(dJ') {:?}", ex.w_djp))?;
    let w_star = sorted_words(&g, &["e", "t1", "t1 t2 t1 t2 t1", "t2 t1 t2", "t1 t2 t1 t2", "t2 t1 t2 t1"]);
    ensure(ex.w_jstar == w_star, || format!("W(J*) {:?}", ex.w_jstar))?;
    ensure(ex.product_is_w_jstar, || "W(J*)W(dJ') ≠ W(J*)".into())?;
    ensure(ex.global_rho.as_deref() == Some("t1"), || format!("pairing ρ {:?}", ex.global_rho))?;
    ensure(ex.h_is_w_djp, || "H ≠ W(dJ')".into())?;
    ensure(ex.coset_reps == ["e", "t1", "t2 t1 t2"], || format!("C {:?}", ex.coset_reps))?;
    ensure(ex.garnir_element == "e - t1 - t2 t1 t2", || format!("G = {}", ex.garnir_element))?;
    ensure(ex.identity == "e(dJ,dJ') = t1 e(dJ,dJ') + (t2 t1 t2) e(dJ,dJ')", || ex.identity.clone())?;
    ensure(ex.reduced == "e(dJ,dJ') = e(J,J') - e(t2 J,t2 J')", || ex.reduced.clone())?;

    // the final identity as module vectors, independently of the formatter
    let pair = example_pair(&g);
    let lhs = pair.polytabloid(g.parse_word("t1").unwrap());
    let rhs = pair.polytabloid(g.identity()).minus(&pair.polytabloid(g.parse_word("t2").unwrap()));
    ensure(lhs == rhs, || "e_{dJ,dJ'} ≠ e_{J,J'} - e_{t2J,t2J'}".into())?;
    Ok("all displays and the final identity match".into())
}

// Σ_{u,v} s(uv) uv, expanded term by term.
fn expanded(g: &WeylGroup, u: &[ElementId], v: &[ElementId]) -> AlgebraElement {
    let mut counts: BTreeMap<ElementId, i64> = BTreeMap::new();
    for &a in u {
        for &b in v {
            *counts.entry(g.mul(a, b)).or_default() += 1;
        }
    }
    let mut out = AlgebraElement::zero();
    for (x, n) in counts {
        out.add_term(x, rational::int(n * g.sign(x)));
    }
    out
}

fn peel_identity() -> Outcome {
    let mut cases = 0;
    let mut detail = Vec::new();
    for label in ["A2", "B2", "G2", "A3"] {
        let g = group(label);
        let subs = peel_subgroups(&g);
        for u in &subs {
            for v in &subs {
                let (lhs, rhs) = peel_product(&g, u, v).map_err(e)?;
                ensure(lhs == rhs, || format!("{label}: lhs ≠ rhs for |U|={} |V|={}", u.len(), v.len()))?;
                ensure(lhs == expanded(&g, u, v), || format!("{label}: lhs ≠ expansion"))?;
                cases += 1;
            }
        }
        detail.push(format!("{label}:{}", subs.len()));
    }
    Ok(format!("{cases} ordered pairs; subgroups {}", detail.join(" ")))
}

fn lemma_sweep() -> Outcome {
    let (mut contexts, mut paired) = (0, 0);
    for label in ["A2", "B2", "G2"] {
        let g = group(label);
        let mut failure = None;
        for_each_context(&g, |ctx| {
            contexts += 1;
            if let Some(p) = ctx.find_pairing() {
                paired += 1;
                let ok = p.check(ctx).is_ok()
                    && ctx.annihilator_image().is_zero()
                    && ctx.verify_annihilation().unwrap_or(false);
                if !ok && failure.is_none() {
                    failure = Some(format!("{label}: nonzero annihilation at d={}", g.word_string(ctx.d())));
                }
            }
            Ok(())
        })
        .map_err(e)?;
        if let Some(f) = failure {
            return Err(f);
        }
    }
    ensure(paired > 0, || "no context admits a pairing".into())?;
    Ok(format!("{paired} of {contexts} contexts admit a pairing; all annihilate"))
}

fn theorem_sweep() -> Outcome {
    let mut checked = 0;
    for label in ["A2", "B2", "G2"] {
        let g = group(label);
        let mut failure = None;
        for_each_context(&g, |ctx| {
            if ctx.find_pairing().is_none() {
                return Ok(());
            }
            checked += 1;
            let outcome = ctx.straighten().map_err(e).and_then(|s| {
                // right side recomputed from scratch: -Σ_{σ∈C∖{e}} s(σ) σ·e
                let lhs = ctx.polytabloid();
                let mut rest = AlgebraElement::zero();
                for &c in ctx.coset_reps().iter().filter(|&&c| c != g.identity()) {
                    rest.add_term(c, rational::int(-g.sign(c)));
                }
                let rhs = rest.apply(ctx.pair().space(), &lhs);
                ensure(s.lhs == lhs && s.rhs == rhs && lhs == rhs, || "sides differ".into())?;
                let reps = ctx.pair().col_cosets();
                ensure(s.coset_form.iter().all(|(_, d)| reps.is_rep(*d)), || "index outside D_Ψ′".into())?;
                ensure(ctx.evaluate(&s.coset_form) == rhs, || "reduced side differs".into())
            });
            if let Err(msg) = outcome {
                failure.get_or_insert(format!("{label} d={}: {msg}", g.word_string(ctx.d())));
            }
            Ok(())
        })
        .map_err(e)?;
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(format!("{checked} straightenings exact, reduced sides indexed by D_Ψ′"))
}

fn independence() -> Outcome {
    let mut counts = BTreeMap::new();
    for label in ["A2", "B2", "G2", "A3"] {
        let g = group(label);
        for pair in garnir_core::all_pairs(&g).map_err(e)? {
            for order in Order::ALL {
                let vg = pair.is_useful()
                    && pair.is_good().map_err(e)?
                    && pair.is_very_good(order).map_err(e)?;
                if !vg {
                    continue;
                }
                let common = pair.common_reps();
                let rows: Vec<Vec<garnir_core::Rational>> =
                    common.iter().map(|&d| pair.polytabloid(d).to_dense(pair.space().len())).collect();
                let rank = garnir_core::linalg::rational_rank(&rows);
                ensure(rank == common.len(), || format!("{label}: rank {rank} < {}", common.len()))?;
                *counts.entry(order.name()).or_insert(0) += 1;
            }
        }
    }
    Ok(counts.iter().map(|(k, v)| format!("{v} very good pairs ({k})")).collect::<Vec<_>>().join(", "))
}

fn coset_reduction() -> Outcome {
    let g = group("G2");
    let pair = example_pair(&g);
    let col = g.reflection_subgroup(pair.j_prime()).map_err(e)?;
    for w in g.elements() {
        // brute force: the unique d ∈ D_Ψ′ with d⁻¹w ∈ W(J′)
        let found: Vec<ElementId> = pair
            .col_cosets()
            .reps()
            .iter()
            .copied()
            .filter(|&d| col.contains(g.mul(g.inverse(d), w)))
            .collect();
        ensure(found.len() == 1, || format!("{} reps for {}", found.len(), g.word_string(w)))?;
        let d = found[0];
        let rho = g.mul(g.inverse(d), w);
        let expected = pair.polytabloid(d).scaled(&rational::int(g.sign(rho)));
        ensure(pair.polytabloid(w) == expected, || format!("e_w ≠ s(ρ)e_d at {}", g.word_string(w)))?;
    }
    Ok(format!("{} elements", g.order()))
}

fn structure() -> Outcome {
    let mut cases = 0;
    for (label, order) in [("G2", 12), ("A2", 6), ("B2", 8), ("A3", 24)] {
        let g = group(label);
        ensure(g.order() == order, || format!("|W({label})| = {}", g.order()))?;
        for suite in [Suite::Structure, Suite::Action] {
            let rep = run_suite(&g, suite).map_err(e)?;
            ensure(rep.passed(), || format!("{label} {}: {:?}", rep.summary_line(), rep.failures))?;
            cases += rep.cases;
        }
        for psi in g.root_system().all_subsystems() {
            let c = g.cosets(&psi).map_err(e)?;
            ensure(c.reps().len() * c.subgroup().len() == g.order(), || format!("{label} {}", psi.label()))?;
        }
    }
    Ok(format!("{cases} structural and action cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked G2 example end to end", worked_example_end_to_end),
        ("peel identity over subgroup pairs of A2 B2 G2 A3", peel_identity),
        ("annihilation sweep over very good pairs", lemma_sweep),
        ("straightening sweep over very good pairs", theorem_sweep),
        ("independence of e_{dJ,dJ'} for very good pairs", independence),
        ("coset reduction e_w = s(rho) e_d in G2", coset_reduction),
        ("structural invariants", structure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} — {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} — {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

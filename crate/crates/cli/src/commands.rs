//! One function per subcommand. Each renders both a text and a JSON form.

use std::fmt::Write;

use garnir_core::specht::TermJson;
use garnir_core::{
    all_pairs, run_all, run_suite, worked_example, ElementId, GarnirContext, Order, Result, RootId,
    RootSystem, Suite, SystemPair, WeylGroup,
};
use serde_json::json;

use crate::Output;

fn braces(phi: &RootSystem, roots: &[RootId]) -> String {
    format!("{{{}}}", phi.format_roots(roots))
}

fn word_set(g: &WeylGroup, xs: &[ElementId]) -> String {
    let words: Vec<String> = xs.iter().map(|&x| g.word_string(x)).collect();
    format!("{{{}}}", words.join(", "))
}

fn parse_pair<'g>(g: &'g WeylGroup, j: &str, jp: &str) -> Result<SystemPair<'g>> {
    let phi = g.root_system();
    SystemPair::new(g, &phi.parse_roots(j)?, &phi.parse_roots(jp)?)
}

pub fn roots(phi: &RootSystem) -> Output {
    let mut text = String::new();
    let positive: Vec<RootId> = phi.positive_ids().collect();
    writeln!(text, "{}: {} positive roots", phi.label(), positive.len()).unwrap();
    for r in positive {
        let coords: Vec<String> = phi.root(r).coords().iter().map(|c| c.to_string()).collect();
        writeln!(text, "{:>8}  ({})", phi.coefficient_string(r), coords.join(", ")).unwrap();
    }
    Output { text, json: json!(phi.to_json()), ok: true }
}

pub fn group(g: &WeylGroup) -> Output {
    let mut text = String::new();
    writeln!(text, "W({}): order {}", g.root_system().label(), g.order()).unwrap();
    for x in g.elements() {
        let sign = if g.sign(x) > 0 { '+' } else { '-' };
        writeln!(text, "{:>3}  {sign}  {}", g.length(x), g.word_string(x)).unwrap();
    }
    let elements: Vec<_> = g.elements().map(|x| g.element_json(x)).collect();
    let json = json!({ "phi": g.root_system().label(), "order": g.order(), "elements": elements });
    Output { text, json, ok: true }
}

pub fn tabloids(g: &WeylGroup, j: &str, jp: &str) -> Result<Output> {
    let pair = parse_pair(g, j, jp)?;
    let space = pair.space();
    let mut text = String::new();
    let mut list = Vec::new();
    for t in space.all_tabloids() {
        let tj = space.to_json(t);
        writeln!(text, "{:<24} {}", tj.canonical_rep, tj.display).unwrap();
        list.push(tj);
    }
    let phi = g.root_system();
    let json = json!({
        "phi": phi.label(),
        "J": phi.format_roots(pair.j()),
        "J'": phi.format_roots(pair.j_prime()),
        "tabloids": list,
    });
    Ok(Output { text, json, ok: true })
}

fn combo_json(pair: &SystemPair<'_>, combo: &[(ElementId, garnir_core::Rational)]) -> Vec<TermJson> {
    combo
        .iter()
        .map(|(d, c)| TermJson { coeff: c.to_string(), term: pair.polytabloid_label(*d) })
        .collect()
}

pub fn polytabloid(g: &WeylGroup, j: &str, jp: &str, w: &str) -> Result<Output> {
    let pair = parse_pair(g, j, jp)?;
    let space = pair.space();
    let w = g.parse_word(w)?;
    let e = pair.polytabloid(w);
    let (sign, d) = pair.reduce(w);
    let basis = pair.express_in_common_basis(&e);

    let mut text = String::new();
    let label = pair.polytabloid_label(w);
    writeln!(text, "{label} = {}", e.format(space)).unwrap();
    let sign_char = if sign > 0 { '+' } else { '-' };
    writeln!(text, "w = d rho with d = {}, s(rho) = {sign_char}1", g.word_string(d)).unwrap();
    let basis_text = basis.as_ref().map(|b| {
        let terms = b.iter().map(|(d, c)| (c.clone(), pair.polytabloid_label(*d)));
        garnir_core::specht::format_signed_sum(terms)
    });
    match &basis_text {
        Some(b) => writeln!(text, "{label} = {b}").unwrap(),
        None => writeln!(text, "not in the span of e(dJ,dJ'), d in D_Psi and D_Psi'").unwrap(),
    }
    let json = json!({
        "w": g.word_string(w),
        "terms": e.to_json(space),
        "d": g.word_string(d),
        "sign": sign,
        "basis_form": basis.as_ref().map(|b| combo_json(&pair, b)),
    });
    Ok(Output { text, json, ok: true })
}

fn garnir_text(ctx: &GarnirContext<'_, '_>) -> (String, bool) {
    let g = ctx.group();
    let phi = g.root_system();
    let report = ctx.report();
    let mut text = String::new();
    writeln!(
        text,
        "context: {} J={} J'={} J*={} d={}",
        phi.label(),
        braces(phi, ctx.pair().j()),
        braces(phi, ctx.pair().j_prime()),
        braces(phi, ctx.j_star().generators()),
        report.context.d
    )
    .unwrap();
    writeln!(text, "W(dJ) = {}", word_set(g, ctx.row_group().elements())).unwrap();
    writeln!(text, "W(dJ') = {}", word_set(g, ctx.col_group().elements())).unwrap();
    writeln!(text, "W(J*) = {}", word_set(g, ctx.star_group().elements())).unwrap();
    writeln!(text, "W(J*)W(dJ') = {}", word_set(g, ctx.product())).unwrap();
    writeln!(text, "H = {}", word_set(g, ctx.h())).unwrap();
    writeln!(text, "C = {}", word_set(g, ctx.coset_reps())).unwrap();
    writeln!(text, "G = {}", report.garnir_text).unwrap();
    let pairing = match (report.pairing_found, &report.global_rho) {
        (false, _) => "none; the annihilation hypothesis fails".to_string(),
        (true, Some(rho)) => format!("w' = w {rho} for all w"),
        (true, None) => "found by matching".to_string(),
    };
    writeln!(text, "pairing: {pairing}").unwrap();
    if let Some(zero) = report.annihilation_zero {
        writeln!(text, "annihilation: {}", if zero { "zero" } else { "NONZERO" }).unwrap();
    }
    match (&report.identity, &report.reduced_form) {
        (Some(identity), Some(reduced)) => {
            writeln!(text, "{identity}").unwrap();
            writeln!(text, "{reduced}").unwrap();
        }
        _ if report.pairing_found => writeln!(text, "straightening: FAILED").unwrap(),
        _ => {}
    }
    let ok = report.annihilation_zero != Some(false) && (!report.pairing_found || report.reduced_form.is_some());
    (text, ok)
}

fn context<'p, 'g>(pair: &'p SystemPair<'g>, d: &str, star: &[RootId]) -> Result<GarnirContext<'p, 'g>> {
    let g = pair.group();
    let d = g.parse_word(d)?;
    let star = g.root_system().subsystem(star)?;
    GarnirContext::new(pair, d, star)
}

pub fn garnir(g: &WeylGroup, j: &str, jp: &str, d: &str, star: &str) -> Result<Output> {
    let pair = parse_pair(g, j, jp)?;
    let ctx = context(&pair, d, &g.root_system().parse_roots(star)?)?;
    let (text, ok) = garnir_text(&ctx);
    Ok(Output { text, json: json!(ctx.report()), ok })
}

pub fn garnir_all(g: &WeylGroup, j: &str, jp: &str, d: &str) -> Result<Output> {
    let pair = parse_pair(g, j, jp)?;
    let mut texts = Vec::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for star in g.root_system().all_subsystems() {
        let ctx = context(&pair, d, star.simple())?;
        if ctx.find_pairing().is_none() {
            continue;
        }
        let (text, fine) = garnir_text(&ctx);
        ok &= fine;
        texts.push(text);
        reports.push(ctx.report());
    }
    let mut text = texts.join("\n");
    if texts.is_empty() {
        text = "no J* admits a pairing\n".into();
    }
    Ok(Output { text, json: json!(reports), ok })
}

pub fn verify(g: &WeylGroup, suite: Option<Suite>) -> Result<Output> {
    let reports = match suite {
        Some(s) => vec![run_suite(g, s)?],
        None => run_all(g)?,
    };
    let label = g.root_system().label();
    let mut text = String::new();
    writeln!(text, "verify {label}").unwrap();
    for r in &reports {
        writeln!(text, "  {}", r.summary_line()).unwrap();
        for note in &r.notes {
            writeln!(text, "      {note}").unwrap();
        }
        for f in &r.failures {
            writeln!(text, "      FAIL {f}").unwrap();
        }
    }
    let ok = reports.iter().all(|r| r.passed());
    let example = if suite == Some(Suite::Example34) && label == "G2" {
        let ex = worked_example(g)?;
        for line in ex.lines() {
            writeln!(text, "{line}").unwrap();
        }
        Some(ex)
    } else {
        None
    };
    writeln!(text, "{}", if ok { "all suites passed" } else { "verification FAILED" }).unwrap();
    let json = json!({ "phi": label, "passed": ok, "suites": reports, "example": example });
    Ok(Output { text, json, ok })
}

fn tri(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub fn classify(g: &WeylGroup, pair: Option<(&str, &str)>, order: Order) -> Result<Output> {
    let pairs = match pair {
        Some((j, jp)) => vec![parse_pair(g, j, jp)?],
        None => all_pairs(g)?,
    };
    let mut text = String::new();
    writeln!(
        text,
        "{:<16} {:<16} {:<6} {:<5} {:<10} {:<7} rank",
        "J",
        "J'",
        "useful",
        "good",
        format!("vg({})", order.name()),
        "perfect",
    )
    .unwrap();
    let mut rows = Vec::new();
    for p in &pairs {
        let c = p.classification();
        let very_good = match order {
            Order::Bruhat => c.very_good_bruhat,
            Order::Length => c.very_good_length,
        };
        let perfect = match very_good {
            Some(true) => Some(p.is_perfect(order)?),
            _ => None,
        };
        writeln!(
            text,
            "{:<16} {:<16} {:<6} {:<5} {:<10} {:<7} {}",
            format!("{{{}}}", c.j),
            format!("{{{}}}", c.j_prime),
            tri(Some(c.useful)),
            tri(c.good),
            tri(very_good),
            tri(perfect),
            c.specht_rank
        )
        .unwrap();
        rows.push(c);
    }
    let json = json!({ "phi": g.root_system().label(), "order": order.name(), "pairs": rows });
    Ok(Output { text, json, ok: true })
}


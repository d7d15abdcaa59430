//! Exhaustive verification suites.
//!
//! Each suite sweeps one family of identities over a whole Weyl group and
//! reports how many cases it checked and which ones failed.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::garnir::{peel_product, product_set, GarnirContext};
use crate::rootsys::{CartanType, RootSystem, Subsystem};
use crate::specht::{all_pairs, AlgebraElement, SystemPair};
use crate::tableaux::TabloidSpace;
use crate::weyl::{ElementId, Order, WeylGroup};

/// Groups up to this order get the quadratic action and all-subgroup sweeps.
pub const EXHAUSTIVE_LIMIT: usize = 48;
/// Groups up to this order include non-reflection subgroups in the peel sweep.
pub const ALL_SUBGROUPS_LIMIT: usize = 24;

// Failure lists are truncated past this many entries.
const MAX_FAILURES: usize = 25;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    Structure,
    Action,
    Peel,
    Sign,
    Coset,
    Independence,
    Lemma,
    Theorem,
    Example34,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Structure,
        Suite::Action,
        Suite::Peel,
        Suite::Sign,
        Suite::Coset,
        Suite::Independence,
        Suite::Lemma,
        Suite::Theorem,
        Suite::Example34,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Action => "action",
            Suite::Peel => "peel",
            Suite::Sign => "sign",
            Suite::Coset => "coset",
            Suite::Independence => "independence",
            Suite::Lemma => "lemma",
            Suite::Theorem => "theorem",
            Suite::Example34 => "example34",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub phi: String,
    pub cases: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    /// Why the suite did not apply, if it did not.
    pub skipped: Option<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, group: &WeylGroup) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            phi: group.root_system().label().to_string(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            skipped: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, message: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(message);
        }
    }

    /// `structure: PASS (123 cases)`.
    pub fn summary_line(&self) -> String {
        match &self.skipped {
            Some(why) => format!("{}: SKIP ({why})", self.suite),
            None if self.passed() => format!("{}: PASS ({} cases)", self.suite, self.cases),
            None => format!("{}: FAIL ({} of {} cases)", self.suite, self.failure_count, self.cases),
        }
    }
}

/// `|W|` from the classification: `(n+1)!`, `2ⁿn!`, `2ⁿ⁻¹n!`, 12.
pub fn expected_order(cartan: CartanType, rank: usize) -> usize {
    let fact: usize = (1..=rank).product();
    match cartan {
        CartanType::A => fact * (rank + 1),
        CartanType::B | CartanType::C => fact << rank,
        CartanType::D => fact << (rank - 1),
        CartanType::G => 12,
    }
}

pub fn run_suite(group: &WeylGroup, suite: Suite) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(suite, group);
    match suite {
        Suite::Structure => structure(group, &mut r)?,
        Suite::Action => action(group, &mut r)?,
        Suite::Peel => peel(group, &mut r)?,
        Suite::Sign => sign(group, &mut r)?,
        Suite::Coset => coset(group, &mut r)?,
        Suite::Independence => independence(group, &mut r)?,
        Suite::Lemma => lemma(group, &mut r)?,
        Suite::Theorem => theorem(group, &mut r)?,
        Suite::Example34 => example(group, &mut r)?,
    }
    Ok(r)
}

pub fn run_all(group: &WeylGroup) -> Result<Vec<SuiteReport>> {
    Suite::ALL.into_iter().map(|s| run_suite(group, s)).collect()
}

fn structure(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    let phi = g.root_system();
    let expected = expected_order(phi.cartan(), phi.rank());
    r.check(g.order() == expected, || format!("|W| = {}, expected {expected}", g.order()));
    r.check(g.length(g.identity()) == 0, || "identity is not first".into());
    for x in g.elements() {
        let inversions = phi.positive_ids().filter(|&a| !phi.is_positive(g.act_root(x, a))).count();
        r.check(inversions == g.length(x), || format!("length of {} ≠ inversion count", g.word_string(x)));
        r.check(g.from_word(g.word(x)) == x, || format!("word of {} does not evaluate to it", g.word_string(x)));
        r.check(g.mul(x, g.inverse(x)) == g.identity(), || format!("bad inverse of {}", g.word_string(x)));
    }
    for psi in phi.all_subsystems() {
        let cosets = g.cosets(&psi)?;
        let (nd, nw) = (cosets.reps().len(), cosets.subgroup().len());
        r.check(nd * nw == g.order(), || format!("|D|·|W(Ψ)| = {nd}·{nw} for {}", psi.label()));
        // every element lands in exactly one coset, at its own d·ρ split
        let mut count = vec![0usize; nd];
        for x in g.elements() {
            let (d, rho) = cosets.split(x);
            count[cosets.coset_index(x)] += 1;
            r.check(
                g.mul(d, rho) == x && cosets.is_rep(d) && cosets.subgroup().contains(rho),
                || format!("bad split of {} for {}", g.word_string(x), psi.label()),
            );
            let positive = psi.roots().iter().filter(|&&a| phi.is_positive(a)).all(|&a| phi.is_positive(g.act_root(d, a)));
            r.check(positive, || {
                format!("rep of {} sends a positive root of {} negative", g.word_string(x), psi.label())
            });
        }
        r.check(count.iter().all(|&c| c == nw), || format!("cosets of {} are not a partition", psi.label()));
    }
    Ok(())
}

fn action(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    let exhaustive = g.order() <= EXHAUSTIVE_LIMIT;
    let sigmas: Vec<ElementId> = if exhaustive {
        g.elements().collect()
    } else {
        (0..g.root_system().rank()).map(|i| g.simple_reflection(i)).collect()
    };
    if !exhaustive {
        r.notes.push("composition checked against simple reflections only".into());
    }
    for psi in g.root_system().all_subsystems() {
        let label = psi.label().to_string();
        let space = TabloidSpace::new(g, psi, vec![])?;
        for t in space.all_tabloids() {
            r.check(space.act(g.identity(), t) == t, || format!("e moves {t} in {label}"));
            for &s in &sigmas {
                for u in g.elements() {
                    r.check(space.act(g.mul(s, u), t) == space.act(s, space.act(u, t)), || {
                        format!("(στ)t ≠ σ(τt) at {t} in {label}")
                    });
                }
            }
        }
    }
    Ok(())
}

/// Reflection-generated subgroups, plus every subgroup for small groups.
pub fn peel_subgroups(g: &WeylGroup) -> Vec<Vec<ElementId>> {
    let mut subs = g.reflection_generated_subgroups();
    if g.order() <= ALL_SUBGROUPS_LIMIT {
        subs.extend(g.all_subgroups());
        subs.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        subs.dedup();
    }
    subs
}

fn peel(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    let subs = peel_subgroups(g);
    r.notes.push(format!("{} subgroups, {} ordered pairs", subs.len(), subs.len() * subs.len()));
    for u in &subs {
        for v in &subs {
            let (lhs, rhs) = peel_product(g, u, v)?;
            // sizes of the product set follow from |UV||U∩V| = |U||V|
            let common = u.iter().filter(|x| v.contains(x)).count();
            r.check(lhs == rhs && product_set(g, u, v).len() * common == u.len() * v.len(), || {
                format!("peel fails for subgroups of order {} and {}", u.len(), v.len())
            });
        }
    }
    Ok(())
}

fn pair_label(pair: &SystemPair<'_>) -> String {
    let phi = pair.group().root_system();
    format!("J={{{}}} J'={{{}}}", phi.format_roots(pair.j()), phi.format_roots(pair.j_prime()))
}

fn sign(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    for pair in all_pairs(g)? {
        let space = pair.space();
        for w in g.elements() {
            let e = pair.polytabloid(w);
            let col = g.reflection_subgroup(&g.act_roots(w, pair.j_prime()))?;
            for &sigma in col.elements() {
                let moved = AlgebraElement::from_term(sigma, crate::rational::one()).apply(space, &e);
                r.check(moved == e.scaled(&crate::rational::int(g.sign(sigma))), || {
                    format!("σe_w ≠ s(σ)e_w for w={} σ={} {}", g.word_string(w), g.word_string(sigma), pair_label(&pair))
                });
            }
        }
    }
    Ok(())
}

fn coset(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    for pair in all_pairs(g)? {
        for w in g.elements() {
            let (s, d) = pair.reduce(w);
            let e = pair.polytabloid(w);
            r.check(e == pair.polytabloid(d).scaled(&crate::rational::int(s)), || {
                format!("e_w ≠ s(ρ)e_d for w={} {}", g.word_string(w), pair_label(&pair))
            });
            r.check(pair.polytabloid_via_kappa(w)? == e, || {
                format!("polytabloid routes disagree at w={} {}", g.word_string(w), pair_label(&pair))
            });
        }
    }
    Ok(())
}

fn independence(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    let pairs = all_pairs(g)?;
    for order in Order::ALL {
        let mut very_good = 0;
        for pair in &pairs {
            if !(pair.is_useful() && pair.is_good()? && pair.is_very_good(order)?) {
                continue;
            }
            very_good += 1;
            let common = pair.common_reps();
            r.check(pair.rank_of(&common) == common.len(), || {
                format!("dependent polytabloids ({} order) {}", order.name(), pair_label(pair))
            });
        }
        r.notes.push(format!("{very_good} very good pairs ({} order)", order.name()));
    }
    Ok(())
}

/// Calls `f` on every context `(pair, d, Ψ*)` with `{J, J′}` very good
/// under some order, `d ∈ D_Ψ′` and `Ψ*` any subsystem.
pub fn for_each_context(
    g: &WeylGroup,
    mut f: impl FnMut(&GarnirContext<'_, '_>) -> Result<()>,
) -> Result<()> {
    let subs = g.root_system().all_subsystems();
    for pair in all_pairs(g)? {
        if !pair.is_very_good_any() {
            continue;
        }
        for &d in pair.col_cosets().reps() {
            for star in &subs {
                f(&GarnirContext::new(&pair, d, star.clone())?)?;
            }
        }
    }
    Ok(())
}

fn context_label(ctx: &GarnirContext<'_, '_>) -> String {
    let g = ctx.group();
    let phi = g.root_system();
    format!(
        "{} d={} J*={{{}}}",
        pair_label(ctx.pair()),
        g.word_string(ctx.d()),
        phi.format_roots(ctx.j_star().generators())
    )
}

fn lemma(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    let (mut contexts, mut global, mut matched) = (0, 0, 0);
    for_each_context(g, |ctx| {
        contexts += 1;
        let Some(p) = ctx.find_pairing() else { return Ok(()) };
        if p.global_rho().is_some() {
            global += 1;
        } else {
            matched += 1;
        }
        let valid = p.check(ctx).is_ok();
        let zero = ctx.annihilator_image().is_zero();
        r.check(valid && zero, || format!("annihilation fails: {}", context_label(ctx)));
        Ok(())
    })?;
    r.notes.push(format!("{contexts} contexts, {global} with a global ρ, {matched} by matching"));
    Ok(())
}

fn theorem(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    for_each_context(g, |ctx| {
        if ctx.find_pairing().is_none() {
            return Ok(());
        }
        match ctx.straighten() {
            Ok(s) => {
                let reps = ctx.pair().col_cosets();
                let indexed = s.coset_form.iter().all(|(_, d)| reps.is_rep(*d));
                let equal = s.lhs == s.rhs && ctx.evaluate(&s.coset_form) == s.rhs;
                r.check(indexed && equal, || format!("straightening fails: {}", context_label(ctx)));
            }
            Err(e) => {
                r.cases += 1;
                r.fail(format!("{e}: {}", context_label(ctx)));
            }
        }
        Ok(())
    })
}

/// The worked G₂ example, recomputed.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct WorkedExample {
    pub tabloids: Vec<String>,
    pub d_tableau: String,
    pub w_dj: Vec<String>,
    pub w_djp: Vec<String>,
    pub w_jstar: Vec<String>,
    pub product_is_w_jstar: bool,
    pub global_rho: Option<String>,
    pub annihilation_zero: bool,
    pub h_is_w_djp: bool,
    pub coset_reps: Vec<String>,
    pub garnir_element: String,
    pub identity: String,
    pub reduced: String,
}

impl WorkedExample {
    pub fn lines(&self) -> Vec<String> {
        let set = |xs: &[String]| format!("{{{}}}", xs.join(", "));
        vec![
            format!("tabloids: {}", self.tabloids.join(", ")),
            format!("{{dJ}} = {}", self.d_tableau),
            format!("W(dJ) = {}", set(&self.w_dj)),
            format!("W(dJ') = {}", set(&self.w_djp)),
            format!("W(J*) = {}", set(&self.w_jstar)),
            format!("W(J*)W(dJ') = W(J*): {}", self.product_is_w_jstar),
            format!("pairing: w' = w {}", self.global_rho.as_deref().unwrap_or("(none)")),
            format!("H = W(dJ'): {}", self.h_is_w_djp),
            format!("C = {}", set(&self.coset_reps)),
            format!("G = {}", self.garnir_element),
            self.identity.clone(),
            self.reduced.clone(),
        ]
    }
}

/// `Φ = G₂`, `J = {10,32}`, `J′ = {11}`, `d = t1`, `J* = {10,21}`.
pub fn worked_example(g: &WeylGroup) -> Result<WorkedExample> {
    let phi: &RootSystem = g.root_system();
    if phi.label() != "G2" {
        return Err(Error::Precondition("the worked example lives in G2".into()));
    }
    let pair = SystemPair::new(g, &phi.parse_roots("10,32")?, &phi.parse_roots("11")?)?;
    let star: Subsystem = phi.subsystem(&phi.parse_roots("10,21")?)?;
    let d = g.parse_word("t1")?;
    let ctx = GarnirContext::new(&pair, d, star)?;
    let words = |xs: &[ElementId]| xs.iter().map(|&x| g.word_string(x)).collect::<Vec<_>>();
    let space = pair.space();
    let pairing = ctx.find_pairing();
    let s = ctx.straighten()?;
    Ok(WorkedExample {
        tabloids: space.all_tabloids().map(|t| space.display(t)).collect(),
        d_tableau: space.display_tableau(&space.make_tableau(d)),
        w_dj: words(ctx.row_group().elements()),
        w_djp: words(ctx.col_group().elements()),
        w_jstar: words(ctx.star_group().elements()),
        product_is_w_jstar: ctx.product() == ctx.star_group().elements(),
        global_rho: pairing.and_then(|p| p.global_rho()).map(|x| g.word_string(x)),
        annihilation_zero: ctx.annihilator_image().is_zero(),
        h_is_w_djp: ctx.h() == ctx.col_group().elements(),
        coset_reps: words(ctx.coset_reps()),
        garnir_element: ctx.garnir_element().format(g),
        identity: ctx.identity_text(&s),
        reduced: ctx.reduced_text(&s),
    })
}

fn example(g: &WeylGroup, r: &mut SuiteReport) -> Result<()> {
    if g.root_system().label() != "G2" {
        r.skipped = Some("the worked example lives in G2".into());
        return Ok(());
    }
    let ex = worked_example(g)?;
    let sorted = |xs: &[&str]| {
        let mut v: Vec<ElementId> = xs.iter().map(|w| g.parse_word(w)).collect::<Result<_>>()?;
        v.sort();
        Ok::<_, Error>(v.into_iter().map(|x| g.word_string(x)).collect::<Vec<_>>())
    };
    let expect = |r: &mut SuiteReport, what: &str, got: &dyn fmt::Debug, ok: bool| {
        r.check(ok, || format!("{what}: got {got:?}"));
    };
    expect(r, "tabloids", &ex.tabloids, ex.tabloids == ["{10,32;11}", "{11,31;10}", "{21,01;-10}"]);
    expect(r, "{dJ}", &ex.d_tableau, ex.d_tableau == "{-10,32;21}");
    let w_dj = sorted(&["e", "t1", "t2 t1 t2 t1 t2", "t2 t1 t2 t1 t2 t1"])?;
    expect(r, "W(dJ)", &ex.w_dj, ex.w_dj == w_dj);
    expect(r, "W(dJ')", &ex.w_djp, ex.w_djp == sorted(&["e", "t1 t2 t1 t2 t1"])?);
    let w_star = sorted(&["e", "t1", "t1 t2 t1 t2 t1", "t2 t1 t2", "t1 t2 t1 t2", "t2 t1 t2 t1"])?;
    expect(r, "W(J*)", &ex.w_jstar, ex.w_jstar == w_star);
    expect(r, "W(J*)W(dJ')", &ex.product_is_w_jstar, ex.product_is_w_jstar);
    expect(r, "global ρ", &ex.global_rho, ex.global_rho.as_deref() == Some("t1"));
    expect(r, "annihilation", &ex.annihilation_zero, ex.annihilation_zero);
    expect(r, "H", &ex.h_is_w_djp, ex.h_is_w_djp);
    expect(r, "C", &ex.coset_reps, ex.coset_reps == ["e", "t1", "t2 t1 t2"]);
    expect(r, "G", &ex.garnir_element, ex.garnir_element == "e - t1 - t2 t1 t2");
    let identity = "e(dJ,dJ') = t1 e(dJ,dJ') + (t2 t1 t2) e(dJ,dJ')";
    expect(r, "identity", &ex.identity, ex.identity == identity);
    expect(r, "reduced", &ex.reduced, ex.reduced == "e(dJ,dJ') = e(J,J') - e(t2 J,t2 J')");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::weyl::generate_group;

    fn group(label: &str) -> WeylGroup {
        generate_group(RootSystem::from_label(label).unwrap()).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn orders_match_enumeration() {
        for (c, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::C, 2), (CartanType::D, 4), (CartanType::G, 2)] {
            let w = generate_group(build_root_system(c, n).unwrap()).unwrap();
            assert_eq!(w.order(), expected_order(c, n));
        }
    }

    #[test]
    fn all_suites_pass_on_a2_and_g2() {
        for label in ["A2", "G2"] {
            let w = group(label);
            for rep in run_all(&w).unwrap() {
                assert!(rep.passed(), "{} {:?}", rep.summary_line(), rep.failures);
                if rep.skipped.is_none() {
                    assert!(rep.cases > 0, "{}", rep.summary_line());
                }
            }
        }
    }

    #[test]
    fn example_skipped_outside_g2() {
        let rep = run_suite(&group("B2"), Suite::Example34).unwrap();
        assert!(rep.skipped.is_some());
        assert!(rep.passed());
    }

    #[test]
    fn peel_pairs_in_g2() {
        let w = group("G2");
        let subs = peel_subgroups(&w);
        assert_eq!(subs.len(), 16);
        let rep = run_suite(&w, Suite::Peel).unwrap();
        assert_eq!(rep.cases, 256);
    }

    #[test]
    fn worked_example_text() {
        let ex = worked_example(&group("G2")).unwrap();
        let lines = ex.lines();
        assert_eq!(lines.last().unwrap(), "e(dJ,dJ') = e(J,J') - e(t2 J,t2 J')");
        assert_eq!(lines[9], "G = e - t1 - t2 t1 t2");
    }

    #[test]
    fn failures_are_capped() {
        let w = group("A2");
        let mut r = SuiteReport::new(Suite::Peel, &w);
        for i in 0..100 {
            r.check(false, || format!("case {i}"));
        }
        assert_eq!(r.failure_count, 100);
        assert_eq!(r.failures.len(), MAX_FAILURES);
        assert!(!r.passed());
        assert_eq!(r.summary_line(), "peel: FAIL (100 of 100 cases)");
    }
}

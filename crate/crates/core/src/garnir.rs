//! Signed subgroup sums, the pairing criterion for annihilation, Garnir
//! elements and the straightening relation they produce.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::rootsys::Subsystem;
use crate::specht::{format_signed_sum, AlgebraElement, ModuleVector, SystemPair, TermJson};
use crate::weyl::{ElementId, ReflectionSubgroup, WeylGroup};

/// `UV = {uv : u ∈ U, v ∈ V}`, sorted and deduplicated.
pub fn product_set(group: &WeylGroup, u: &[ElementId], v: &[ElementId]) -> Vec<ElementId> {
    let mut member = vec![false; group.order()];
    for &a in u {
        for &b in v {
            member[group.mul(a, b).index()] = true;
        }
    }
    group.elements().filter(|w| member[w.index()]).collect()
}

/// Both sides of `(Σ_U s(σ)σ)(Σ_V s(σ)σ) = |U ∩ V| Σ_{UV} s(σ)σ`.
pub fn peel_product(
    group: &WeylGroup,
    u: &[ElementId],
    v: &[ElementId],
) -> Result<(AlgebraElement, AlgebraElement)> {
    for (name, set) in [("U", u), ("V", v)] {
        if !group.is_subgroup(set) {
            return Err(Error::Domain(format!("{name} is not a subgroup")));
        }
    }
    let lhs = AlgebraElement::signed_sum(group, u).mul(&AlgebraElement::signed_sum(group, v), group);
    let common = u.iter().filter(|x| v.contains(x)).count() as i64;
    let rhs = AlgebraElement::signed_sum(group, &product_set(group, u, v)).scaled(&rational::int(common));
    Ok((lhs, rhs))
}

/// A fixed-point-free involution `w ↦ w′ = wρ_w` on `W(J*)W(dJ′)` with
/// every `ρ_w ∈ W(dJ)` an odd involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    partner: BTreeMap<ElementId, ElementId>,
    rho: BTreeMap<ElementId, ElementId>,
    global_rho: Option<ElementId>,
}

impl Pairing {
    pub fn partner(&self, w: ElementId) -> Option<ElementId> {
        self.partner.get(&w).copied()
    }

    pub fn rho(&self, w: ElementId) -> Option<ElementId> {
        self.rho.get(&w).copied()
    }

    /// Set when one `ρ` serves every element.
    pub fn global_rho(&self) -> Option<ElementId> {
        self.global_rho
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Checks every defining property against the context.
    pub fn check(&self, ctx: &GarnirContext<'_, '_>) -> Result<()> {
        let g = ctx.group();
        let fail = |what: &str, w: ElementId| {
            Err(Error::Invariant(format!("pairing {what} at {}", g.word_string(w))))
        };
        if self.partner.keys().copied().collect::<Vec<_>>() != ctx.product() {
            return Err(Error::Invariant("pairing domain differs from W(J*)W(dJ′)".into()));
        }
        for (&w, &p) in &self.partner {
            let rho = self.rho[&w];
            if !ctx.rows_d.contains(rho) {
                return fail("ρ outside W(dJ)", w);
            }
            if g.mul(rho, rho) != g.identity() || g.sign(rho) != -1 {
                return fail("ρ not an odd involution", w);
            }
            if p != g.mul(w, rho) {
                return fail("w′ ≠ wρ", w);
            }
            if p == w {
                return fail("fixed point", w);
            }
            if self.partner.get(&p) != Some(&w) {
                return fail("(w′)′ ≠ w", w);
            }
        }
        Ok(())
    }
}

/// Both sides of the straightening identity plus its rewrite in
/// polytabloids indexed by `D_Ψ′`.
#[derive(Clone, Debug)]
pub struct Straightening {
    /// `e_{dJ,dJ′}`.
    pub lhs: ModuleVector,
    /// `-(Σ_{σ ∈ C∖{e}} s(σ)σ) e_{dJ,dJ′}`.
    pub rhs: ModuleVector,
    pub terms: Vec<StraightenTerm>,
    /// Right side as `Σ c·e_{d″J,d″J′}` over `d″ ∈ D_Ψ′`, like terms merged.
    pub coset_form: Vec<(Rational, ElementId)>,
    /// Right side in the polytabloids `e_{bJ,bJ′}`, `b ∈ D_Ψ ∩ D_Ψ′`,
    /// when they span it.
    pub basis_form: Option<Vec<(Rational, ElementId)>>,
}

/// `coeff · σ e_{dJ,dJ′} = coeff · sign · e_{d″J,d″J′}`.
#[derive(Clone, Debug)]
pub struct StraightenTerm {
    pub coeff: Rational,
    pub sigma: ElementId,
    pub sign: i64,
    pub target: ElementId,
}

/// Data for one Garnir relation: the pair, `d ∈ D_Ψ′` and `Ψ*`.
#[derive(Debug)]
pub struct GarnirContext<'p, 'g> {
    pair: &'p SystemPair<'g>,
    d: ElementId,
    j_star: Subsystem,
    star: ReflectionSubgroup,
    rows_d: ReflectionSubgroup,
    cols_d: ReflectionSubgroup,
    h: Vec<ElementId>,
    coset_reps: Vec<ElementId>,
    product: Vec<ElementId>,
}

impl<'p, 'g> GarnirContext<'p, 'g> {
    pub fn new(pair: &'p SystemPair<'g>, d: ElementId, j_star: Subsystem) -> Result<Self> {
        let g = pair.group();
        if !pair.col_cosets().is_rep(d) {
            return Err(Error::Precondition(format!(
                "{} is not in D_Ψ′; reduce w = dρ with ρ ∈ W(J′) first",
                g.word_string(d)
            )));
        }
        let star = g.reflection_subgroup(j_star.simple())?;
        let rows_d = g.reflection_subgroup(&g.act_roots(d, pair.j()))?;
        let cols_d = g.reflection_subgroup(&g.act_roots(d, pair.j_prime()))?;
        let h = star.intersection(&cols_d);

        // Left cosets σH; the first element met in group order is the
        // shortest, so the identity comes first.
        let mut covered = vec![false; g.order()];
        let mut coset_reps = Vec::new();
        for &sigma in star.elements() {
            if covered[sigma.index()] {
                continue;
            }
            coset_reps.push(sigma);
            for &x in &h {
                covered[g.mul(sigma, x).index()] = true;
            }
        }
        let product = product_set(g, star.elements(), cols_d.elements());
        Ok(GarnirContext { pair, d, j_star, star, rows_d, cols_d, h, coset_reps, product })
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.pair.group()
    }

    pub fn pair(&self) -> &'p SystemPair<'g> {
        self.pair
    }

    pub fn d(&self) -> ElementId {
        self.d
    }

    pub fn j_star(&self) -> &Subsystem {
        &self.j_star
    }

    /// `W(J*)`.
    pub fn star_group(&self) -> &ReflectionSubgroup {
        &self.star
    }

    /// `W(dJ)`.
    pub fn row_group(&self) -> &ReflectionSubgroup {
        &self.rows_d
    }

    /// `W(dJ′)`.
    pub fn col_group(&self) -> &ReflectionSubgroup {
        &self.cols_d
    }

    /// `H = W(J*) ∩ W(dJ′)`.
    pub fn h(&self) -> &[ElementId] {
        &self.h
    }

    /// `C`: shortest representatives of the left cosets of `H`, identity first.
    pub fn coset_reps(&self) -> &[ElementId] {
        &self.coset_reps
    }

    /// `W(J*)W(dJ′)`.
    pub fn product(&self) -> &[ElementId] {
        &self.product
    }

    /// `e_{dJ,dJ′}`.
    pub fn polytabloid(&self) -> ModuleVector {
        self.pair.polytabloid(self.d)
    }

    /// Searches for a pairing: first a single `ρ` with `Yρ = Y`, then a
    /// perfect matching in the graph with edges `{w, wρ}`.
    pub fn find_pairing(&self) -> Option<Pairing> {
        let g = self.group();
        let y = &self.product;
        if y.len() % 2 == 1 {
            return None;
        }
        let candidates = self.odd_involutions();
        let mut in_y = vec![false; g.order()];
        for w in y {
            in_y[w.index()] = true;
        }
        for &rho in &candidates {
            if y.iter().all(|&w| in_y[g.mul(w, rho).index()]) {
                let partner = y.iter().map(|&w| (w, g.mul(w, rho))).collect();
                let rhos = y.iter().map(|&w| (w, rho)).collect();
                return Some(Pairing { partner, rho: rhos, global_rho: Some(rho) });
            }
        }

        self.find_matching()
    }

    /// Pairing by perfect matching alone, without trying a global `ρ`.
    pub fn find_matching(&self) -> Option<Pairing> {
        let g = self.group();
        let y = &self.product;
        if y.len() % 2 == 1 {
            return None;
        }
        let candidates = self.odd_involutions();
        let pos: BTreeMap<ElementId, usize> = y.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let adjacency: Vec<Vec<(usize, ElementId)>> = y
            .iter()
            .map(|&w| {
                candidates
                    .iter()
                    .filter_map(|&rho| pos.get(&g.mul(w, rho)).map(|&k| (k, rho)))
                    .collect()
            })
            .collect();
        let mut mate: Vec<Option<(usize, ElementId)>> = vec![None; y.len()];
        if !perfect_matching(&adjacency, &mut mate) {
            return None;
        }
        let partner = y.iter().enumerate().map(|(i, &w)| (w, y[mate[i].unwrap().0])).collect();
        let rhos = y.iter().enumerate().map(|(i, &w)| (w, mate[i].unwrap().1)).collect();
        Some(Pairing { partner, rho: rhos, global_rho: None })
    }

    // ρ ∈ W(dJ) with ρ² = e and s(ρ) = -1
    fn odd_involutions(&self) -> Vec<ElementId> {
        let g = self.group();
        self.rows_d
            .elements()
            .iter()
            .copied()
            .filter(|&r| g.sign(r) == -1 && g.mul(r, r) == g.identity())
            .collect()
    }

    /// `(Σ_{σ ∈ W(J*)} s(σ)σ) e_{dJ,dJ′}`.
    pub fn annihilator_image(&self) -> ModuleVector {
        AlgebraElement::signed_sum(self.group(), self.star.elements()).apply(self.pair.space(), &self.polytabloid())
    }

    /// Under a pairing the signed sum over `W(J*)` kills `e_{dJ,dJ′}`.
    /// Errors if no pairing exists or if the image is nonzero anyway.
    pub fn verify_annihilation(&self) -> Result<bool> {
        self.require_pairing()?;
        let image = self.annihilator_image();
        if !image.is_zero() {
            return Err(Error::Invariant(format!(
                "signed W(J*) sum leaves {} in a context with a pairing",
                image.format(self.pair.space())
            )));
        }
        Ok(true)
    }

    fn require_pairing(&self) -> Result<Pairing> {
        let pairing = self
            .find_pairing()
            .ok_or_else(|| Error::Precondition("no pairing exists; the annihilation hypothesis fails".into()))?;
        pairing.check(self)?;
        Ok(pairing)
    }

    /// `G = Σ_{σ ∈ C} s(σ)σ`.
    pub fn garnir_element(&self) -> AlgebraElement {
        AlgebraElement::signed_sum(self.group(), &self.coset_reps)
    }

    /// `e_{dJ,dJ′} = -(Σ_{σ ∈ C∖{e}} s(σ)σ) e_{dJ,dJ′}`, with each term
    /// rewritten through `σd = d″ρ`.
    pub fn straighten(&self) -> Result<Straightening> {
        self.require_pairing()?;
        let g = self.group();
        let space = self.pair.space();
        let lhs = self.polytabloid();

        let mut terms = Vec::new();
        let mut rest = AlgebraElement::zero();
        for &sigma in self.coset_reps.iter().filter(|&&s| s != g.identity()) {
            let coeff = rational::int(-g.sign(sigma));
            rest.add_term(sigma, coeff.clone());
            let (sign, target) = self.pair.reduce(g.mul(sigma, self.d));
            terms.push(StraightenTerm { coeff, sigma, sign, target });
        }
        let rhs = rest.apply(space, &lhs);
        if lhs != rhs {
            return Err(Error::Invariant(format!(
                "straightening fails: {} ≠ {}",
                lhs.format(space),
                rhs.format(space)
            )));
        }

        let mut merged: BTreeMap<ElementId, Rational> = BTreeMap::new();
        for t in &terms {
            *merged.entry(t.target).or_insert_with(Rational::zero) += &t.coeff * rational::int(t.sign);
        }
        let coset_form: Vec<(Rational, ElementId)> =
            merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(d, c)| (c, d)).collect();
        if self.evaluate(&coset_form) != rhs {
            return Err(Error::Invariant("coset-reduced form disagrees with the right side".into()));
        }
        let basis_form = self
            .pair
            .express_in_common_basis(&rhs)
            .map(|v| v.into_iter().map(|(d, c)| (c, d)).collect::<Vec<_>>());
        if let Some(b) = &basis_form {
            if self.evaluate(b) != rhs {
                return Err(Error::Invariant("basis form disagrees with the right side".into()));
            }
        }
        Ok(Straightening { lhs, rhs, terms, coset_form, basis_form })
    }

    /// `Σ c·e_{dJ,dJ′}`.
    pub fn evaluate(&self, combo: &[(Rational, ElementId)]) -> ModuleVector {
        combo
            .iter()
            .fold(ModuleVector::zero(), |acc, (c, d)| acc.plus(&self.pair.polytabloid(*d).scaled(c)))
    }

    /// `e(dJ,dJ') = t1 e(dJ,dJ') + (t2 t1 t2) e(dJ,dJ')`.
    pub fn identity_text(&self, s: &Straightening) -> String {
        let g = self.group();
        let rhs = format_signed_sum(s.terms.iter().map(|t| {
            let word = g.word_string(t.sigma);
            let word = if g.length(t.sigma) > 1 { format!("({word})") } else { word };
            (t.coeff.clone(), format!("{word} e(dJ,dJ')"))
        }));
        format!("e(dJ,dJ') = {rhs}")
    }

    /// The relation in polytabloids: the basis form when available,
    /// otherwise the coset form.
    pub fn reduced_text(&self, s: &Straightening) -> String {
        let combo = s.basis_form.as_ref().unwrap_or(&s.coset_form);
        format!("e(dJ,dJ') = {}", self.combo_text(combo))
    }

    pub fn combo_text(&self, combo: &[(Rational, ElementId)]) -> String {
        format_signed_sum(combo.iter().map(|(c, d)| (c.clone(), self.pair.polytabloid_label(*d))))
    }

    fn combo_json(&self, combo: &[(Rational, ElementId)]) -> Vec<TermJson> {
        combo
            .iter()
            .map(|(c, d)| TermJson { coeff: c.to_string(), term: self.pair.polytabloid_label(*d) })
            .collect()
    }

    /// Full report for serialization.
    pub fn report(&self) -> GarnirReport {
        let g = self.group();
        let phi = g.root_system();
        let space = self.pair.space();
        let words = |xs: &[ElementId]| xs.iter().map(|&x| g.word_string(x)).collect::<Vec<_>>();
        let pairing = self.find_pairing();
        let straightening = pairing.as_ref().and_then(|_| self.straighten().ok());
        let garnir = self.garnir_element();
        GarnirReport {
            context: ContextJson {
                phi: phi.label().to_string(),
                j: phi.format_roots(self.pair.j()),
                j_prime: phi.format_roots(self.pair.j_prime()),
                j_star: phi.format_roots(self.j_star.generators()),
                d: g.word_string(self.d),
            },
            pairing_found: pairing.is_some(),
            global_rho: pairing.as_ref().and_then(|p| p.global_rho()).map(|r| g.word_string(r)),
            h: words(&self.h),
            coset_reps: words(&self.coset_reps),
            garnir_element: garnir.to_json(g),
            garnir_text: garnir.format(g),
            annihilation_zero: pairing.as_ref().map(|_| self.annihilator_image().is_zero()),
            straighten_lhs: straightening.as_ref().map(|s| s.lhs.to_json(space)),
            straighten_rhs: straightening.as_ref().map(|s| s.rhs.to_json(space)),
            identity: straightening.as_ref().map(|s| self.identity_text(s)),
            coset_form: straightening.as_ref().map(|s| self.combo_json(&s.coset_form)),
            reduced_form: straightening.as_ref().map(|s| self.reduced_text(s)),
        }
    }
}

// Backtracking perfect matching; always branches on the unmatched vertex
// with the fewest free neighbours.
fn perfect_matching(adjacency: &[Vec<(usize, ElementId)>], mate: &mut [Option<(usize, ElementId)>]) -> bool {
    let free_degree = |v: usize, mate: &[Option<(usize, ElementId)>]| {
        adjacency[v].iter().filter(|(u, _)| *u != v && mate[*u].is_none()).count()
    };
    let Some(v) = (0..mate.len())
        .filter(|&v| mate[v].is_none())
        .min_by_key(|&v| free_degree(v, mate))
    else {
        return true;
    };
    for &(u, rho) in &adjacency[v] {
        if u == v || mate[u].is_some() {
            continue;
        }
        mate[v] = Some((u, rho));
        mate[u] = Some((v, rho));
        if perfect_matching(adjacency, mate) {
            return true;
        }
        mate[v] = None;
        mate[u] = None;
    }
    false
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ContextJson {
    pub phi: String,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "J'")]
    pub j_prime: String,
    #[serde(rename = "J*")]
    pub j_star: String,
    pub d: String,
}

/// Serialized Garnir computation.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GarnirReport {
    pub context: ContextJson,
    pub pairing_found: bool,
    pub global_rho: Option<String>,
    #[serde(rename = "H")]
    pub h: Vec<String>,
    #[serde(rename = "C")]
    pub coset_reps: Vec<String>,
    pub garnir_element: Vec<TermJson>,
    pub garnir_text: String,
    pub annihilation_zero: Option<bool>,
    pub straighten_lhs: Option<Vec<TermJson>>,
    pub straighten_rhs: Option<Vec<TermJson>>,
    pub identity: Option<String>,
    pub coset_form: Option<Vec<TermJson>>,
    pub reduced_form: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use crate::specht::all_pairs;
    use crate::weyl::generate_group;

    fn group(label: &str) -> WeylGroup {
        generate_group(RootSystem::from_label(label).unwrap()).unwrap()
    }

    fn example(w: &WeylGroup) -> SystemPair<'_> {
        let phi = w.root_system();
        SystemPair::new(w, &phi.parse_roots("10,32").unwrap(), &phi.parse_roots("11").unwrap()).unwrap()
    }

    fn star(w: &WeylGroup, roots: &str) -> Subsystem {
        let phi = w.root_system();
        phi.subsystem(&phi.parse_roots(roots).unwrap()).unwrap()
    }

    #[test]
    fn peel_trivial_cases() {
        let w = group("G2");
        let e = [w.identity()];
        let (l, r) = peel_product(&w, &e, &e).unwrap();
        assert_eq!(l, AlgebraElement::identity(&w));
        assert_eq!(l, r);
        let u = w.reflection_subgroup(&w.root_system().parse_roots("10,21").unwrap()).unwrap();
        let (l, r) = peel_product(&w, u.elements(), u.elements()).unwrap();
        assert_eq!(l, AlgebraElement::signed_sum(&w, u.elements()).scaled(&rational::int(6)));
        assert_eq!(l, r);
    }

    #[test]
    fn peel_rejects_non_subgroups() {
        let w = group("G2");
        let t1 = w.parse_word("t1").unwrap();
        assert!(matches!(peel_product(&w, &[t1], &[w.identity()]), Err(Error::Domain(_))));
    }

    // term-by-term expansion of the right side as an independent oracle
    fn expanded_rhs(w: &WeylGroup, u: &[ElementId], v: &[ElementId]) -> AlgebraElement {
        let mut counts: BTreeMap<ElementId, i64> = BTreeMap::new();
        for &a in u {
            for &b in v {
                *counts.entry(w.mul(a, b)).or_default() += 1;
            }
        }
        let mut out = AlgebraElement::zero();
        for (x, n) in counts {
            out.add_term(x, rational::int(n * w.sign(x)));
        }
        out
    }

    #[test]
    fn peel_all_subgroup_pairs_g2() {
        let w = group("G2");
        let subs = w.all_subgroups();
        assert_eq!(subs.len(), 16);
        assert_eq!(subs.len() * (subs.len() + 1) / 2, 136);
        for u in &subs {
            for v in &subs {
                let (l, r) = peel_product(&w, u, v).unwrap();
                assert_eq!(l, r);
                assert_eq!(r, expanded_rhs(&w, u, v));
                let common = u.iter().filter(|x| v.contains(x)).count();
                assert_eq!(product_set(&w, u, v).len() * common, u.len() * v.len());
            }
        }
    }

    #[test]
    fn product_set_with_identity() {
        let w = group("G2");
        let u = w.reflection_subgroup(&w.root_system().parse_roots("10,21").unwrap()).unwrap();
        assert_eq!(product_set(&w, u.elements(), &[w.identity()]), u.elements());
    }

    #[test]
    fn example_context() {
        let w = group("G2");
        let pair = example(&w);
        let d = w.parse_word("t1").unwrap();
        let ctx = GarnirContext::new(&pair, d, star(&w, "10,21")).unwrap();
        assert_eq!(ctx.product(), ctx.star_group().elements());
        assert_eq!(ctx.h(), ctx.col_group().elements());
        let c: Vec<String> = ctx.coset_reps().iter().map(|&x| w.word_string(x)).collect();
        assert_eq!(c, ["e", "t1", "t2 t1 t2"]);
        assert_eq!(ctx.garnir_element().format(&w), "e - t1 - t2 t1 t2");

        let pairing = ctx.find_pairing().unwrap();
        assert_eq!(pairing.global_rho(), Some(d));
        pairing.check(&ctx).unwrap();
        assert!(ctx.verify_annihilation().unwrap());

        let s = ctx.straighten().unwrap();
        assert_eq!(s.lhs, s.rhs);
        assert_eq!(ctx.identity_text(&s), "e(dJ,dJ') = t1 e(dJ,dJ') + (t2 t1 t2) e(dJ,dJ')");
        assert_eq!(ctx.reduced_text(&s), "e(dJ,dJ') = e(J,J') - e(t2 J,t2 J')");
        assert_eq!(ctx.combo_text(&s.coset_form), "e(J,J') + e(t2 t1 t2 t1 J,t2 t1 t2 t1 J')");
    }

    #[test]
    fn d_outside_reps_rejected() {
        let w = group("G2");
        let pair = example(&w);
        let tau11 = w.reflection(w.root_system().parse_root("11").unwrap());
        let err = GarnirContext::new(&pair, tau11, star(&w, "10,21")).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn trivial_relation_when_h_is_everything() {
        let w = group("G2");
        let pair = example(&w);
        let d = w.parse_word("t1").unwrap();
        // J* = dJ′ = {21}
        let ctx = GarnirContext::new(&pair, d, star(&w, "21")).unwrap();
        assert_eq!(ctx.h().len(), ctx.star_group().len());
        assert_eq!(ctx.garnir_element(), AlgebraElement::identity(&w));
        assert!(ctx.find_pairing().is_none());
        assert!(matches!(ctx.verify_annihilation(), Err(Error::Precondition(_))));
        let report = ctx.report();
        assert!(!report.pairing_found);
        assert_eq!(report.garnir_text, "e");
    }

    #[test]
    fn odd_product_has_no_pairing() {
        let w = group("A2");
        let phi = w.root_system();
        let pair = SystemPair::new(&w, &phi.parse_roots("10").unwrap(), &[]).unwrap();
        // W(J*) = W(A2), order 6, times trivial W(dJ′): even; use an A1 star
        // with J′ empty: |Y| = 2. Odd needs |Y| = 1, i.e. J* empty.
        let ctx = GarnirContext::new(&pair, w.identity(), phi.empty_subsystem()).unwrap();
        assert_eq!(ctx.product().len(), 1);
        assert!(ctx.find_pairing().is_none());
    }

    #[test]
    fn matching_fallback_agrees_with_definition() {
        // Both search routes yield valid pairings, the matching route finds
        // one whenever a global ρ exists, and either one forces annihilation.
        let mut global = 0;
        for label in ["A2", "B2", "G2"] {
            let w = group(label);
            let subs = w.root_system().all_subsystems();
            for pair in all_pairs(&w).unwrap() {
                for &d in pair.col_cosets().reps() {
                    for s in &subs {
                        let ctx = GarnirContext::new(&pair, d, s.clone()).unwrap();
                        let found = ctx.find_pairing();
                        let matched = ctx.find_matching();
                        assert_eq!(found.is_some(), matched.is_some());
                        for p in found.iter().chain(matched.iter()) {
                            p.check(&ctx).unwrap();
                            assert!(ctx.annihilator_image().is_zero());
                        }
                        global += found.is_some_and(|p| p.global_rho().is_some()) as usize;
                    }
                }
            }
        }
        assert!(global > 0);
    }

    #[test]
    fn garnir_element_shape() {
        let group = group("B2");
        let w = &group;
        let subs = w.root_system().all_subsystems();
        for pair in all_pairs(w).unwrap() {
            for &d in pair.col_cosets().reps() {
                for s in &subs {
                    let ctx = GarnirContext::new(&pair, d, s.clone()).unwrap();
                    let n = ctx.star_group().len();
                    assert_eq!(n % ctx.h().len(), 0);
                    let g = ctx.garnir_element();
                    assert_eq!(g.len(), n / ctx.h().len());
                    assert_eq!(g.coeff(w.identity()), rational::one());
                    // cosets partition W(J*)
                    let mut all: Vec<ElementId> = ctx
                        .coset_reps()
                        .iter()
                        .flat_map(|&c| ctx.h().iter().map(move |&h| w.mul(c, h)))
                        .collect();
                    all.sort();
                    all.dedup();
                    assert_eq!(all, ctx.star_group().elements());
                }
            }
        }
    }

    #[test]
    fn report_serializes() {
        let w = group("G2");
        let pair = example(&w);
        let ctx = GarnirContext::new(&pair, w.parse_word("t1").unwrap(), star(&w, "10,21")).unwrap();
        let report = ctx.report();
        let text = serde_json::to_string(&report).unwrap();
        let back: GarnirReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(report.context.j_star, "10,21");
        assert_eq!(report.global_rho.as_deref(), Some("t1"));
        assert_eq!(report.annihilation_zero, Some(true));
    }
}

//! The permutation module `M^Δ`, polytabloids, generalized Specht modules
//! and the useful / good / very good / perfect classification of `{J, J′}`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Rational};
use crate::rootsys::{RootId, Subsystem};
use crate::tableaux::{Tabloid, TabloidSpace};
use crate::weyl::{CosetDecomposition, ElementId, Order, WeylGroup};

/// Renders `c1 x1 + c2 x2 - ...`; the empty sum is `"0"`.
pub fn format_signed_sum<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Rational, String)>,
{
    let mut out = String::new();
    for (c, name) in terms {
        let negative = c < Rational::zero();
        let magnitude = if negative { -c } else { c };
        let prefix = rational::coefficient_prefix(&magnitude);
        let prefix = if prefix.is_empty() { prefix } else { format!("{prefix} ") };
        if out.is_empty() {
            out.push_str(if negative { "-" } else { "" });
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&prefix);
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// An element of `M^Δ`: a finite rational combination of tabloids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVector {
    coeffs: BTreeMap<Tabloid, Rational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(t: Tabloid) -> Self {
        let mut m = ModuleVector::zero();
        m.add_term(t, rational::one());
        m
    }

    pub fn add_term(&mut self, t: Tabloid, c: Rational) {
        let entry = self.coeffs.entry(t).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&t);
        }
    }

    pub fn coeff(&self, t: Tabloid) -> Rational {
        self.coeffs.get(&t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Tabloid, &Rational)> {
        self.coeffs.iter().map(|(t, c)| (*t, c))
    }

    pub fn plus(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &ModuleVector) -> ModuleVector {
        self.plus(&other.scaled(&-rational::one()))
    }

    pub fn scaled(&self, c: &Rational) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero();
        }
        ModuleVector { coeffs: self.coeffs.iter().map(|(t, x)| (*t, x * c)).collect() }
    }

    /// Dense coordinates in the tabloid basis.
    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (t, c) in self.terms() {
            v[t.index()] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[Rational], tabloids: impl IntoIterator<Item = Tabloid>) -> ModuleVector {
        let mut m = ModuleVector::zero();
        for (t, c) in tabloids.into_iter().zip(v) {
            m.add_term(t, c.clone());
        }
        m
    }

    /// `{10,32;11} - {21,01;-10}`.
    pub fn format(&self, space: &TabloidSpace<'_>) -> String {
        format_signed_sum(self.terms().map(|(t, c)| (c.clone(), space.display(t))))
    }

    pub fn to_json(&self, space: &TabloidSpace<'_>) -> Vec<TermJson> {
        self.terms()
            .map(|(t, c)| TermJson { coeff: c.to_string(), term: space.display(t) })
            .collect()
    }
}

/// One term of a serialized linear combination.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub coeff: String,
    pub term: String,
}

/// An element of the group algebra: a rational combination of group elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<ElementId, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn identity(group: &WeylGroup) -> Self {
        AlgebraElement::from_term(group.identity(), rational::one())
    }

    pub fn from_term(w: ElementId, c: Rational) -> Self {
        let mut a = AlgebraElement::zero();
        a.add_term(w, c);
        a
    }

    /// `Σ s(σ) σ` over the given elements.
    pub fn signed_sum(group: &WeylGroup, elements: &[ElementId]) -> Self {
        let mut a = AlgebraElement::zero();
        for &w in elements {
            a.add_term(w, rational::int(group.sign(w)));
        }
        a
    }

    pub fn add_term(&mut self, w: ElementId, c: Rational) {
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: ElementId) -> Rational {
        self.terms.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementId, &Rational)> {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(w, x)| (*w, x * c)).collect() }
    }

    /// Product in the group algebra.
    pub fn mul(&self, other: &AlgebraElement, group: &WeylGroup) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(group.mul(a, b), x * y);
            }
        }
        out
    }

    /// Linear action on `M^Δ`.
    pub fn apply(&self, space: &TabloidSpace<'_>, m: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (sigma, a) in self.terms() {
            for (t, c) in m.terms() {
                out.add_term(space.act(sigma, t), a * c);
            }
        }
        out
    }

    /// `e - t1 - t2 t1 t2`.
    pub fn format(&self, group: &WeylGroup) -> String {
        format_signed_sum(self.terms().map(|(w, c)| (c.clone(), group.word_string(w))))
    }

    pub fn to_json(&self, group: &WeylGroup) -> Vec<TermJson> {
        self.terms()
            .map(|(w, c)| TermJson { coeff: c.to_string(), term: group.word_string(w) })
            .collect()
    }
}

/// `κ = Σ_{σ ∈ W(J′)} s(σ) σ`.
pub fn kappa(group: &WeylGroup, roots: &[RootId]) -> Result<AlgebraElement> {
    let sub = group.reflection_subgroup(roots)?;
    Ok(AlgebraElement::signed_sum(group, sub.elements()))
}

/// A reduced spanning set of `S^{J,J′}`.
#[derive(Clone, Debug)]
pub struct SpechtSpan {
    pub basis: Vec<ModuleVector>,
    pub rank: usize,
}

/// One row of a classification sweep.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Classification {
    pub phi: String,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "J'")]
    pub j_prime: String,
    pub useful: bool,
    pub good: Option<bool>,
    #[serde(rename = "very_good(bruhat)")]
    pub very_good_bruhat: Option<bool>,
    #[serde(rename = "very_good(length)")]
    pub very_good_length: Option<bool>,
    pub perfect: Option<bool>,
    pub specht_rank: usize,
}

/// The pair `{J, J′}` with everything derived from it.
#[derive(Debug)]
pub struct SystemPair<'g> {
    space: TabloidSpace<'g>,
    psi_prime: Subsystem,
    psi_perp: Subsystem,
    psi_prime_perp: Subsystem,
    col_cosets: CosetDecomposition,
    useful: OnceLock<bool>,
    good: OnceLock<bool>,
    very_good: [OnceLock<bool>; 2],
    perfect: OnceLock<bool>,
    span: OnceLock<SpechtSpan>,
}

impl<'g> SystemPair<'g> {
    /// Builds the pair from root lists in coefficient order. `J′` must
    /// generate a subsystem disjoint from the one generated by `J`.
    pub fn new(group: &'g WeylGroup, j: &[RootId], j_prime: &[RootId]) -> Result<Self> {
        let phi = group.root_system();
        Self::from_subsystems(group, phi.subsystem(j)?, phi.subsystem(j_prime)?)
    }

    pub fn from_subsystems(group: &'g WeylGroup, psi: Subsystem, psi_prime: Subsystem) -> Result<Self> {
        if !psi.is_disjoint(&psi_prime) {
            return Err(Error::Domain(format!(
                "Ψ′ = {} is not contained in Φ∖Ψ for Ψ = {}",
                psi_prime.label(),
                psi.label()
            )));
        }
        let phi = group.root_system();
        let psi_perp = phi.orthogonal_subsystem(&psi);
        let psi_prime_perp = phi.orthogonal_subsystem(&psi_prime);
        let col_cosets = group.cosets(&psi_prime)?;
        let space = TabloidSpace::new(group, psi, psi_prime.simple().to_vec())?;
        Ok(SystemPair {
            space,
            psi_prime,
            psi_perp,
            psi_prime_perp,
            col_cosets,
            useful: OnceLock::new(),
            good: OnceLock::new(),
            very_good: [OnceLock::new(), OnceLock::new()],
            perfect: OnceLock::new(),
            span: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.space.group()
    }

    pub fn space(&self) -> &TabloidSpace<'g> {
        &self.space
    }

    pub fn psi(&self) -> &Subsystem {
        self.space.psi()
    }

    pub fn psi_prime(&self) -> &Subsystem {
        &self.psi_prime
    }

    pub fn j(&self) -> &[RootId] {
        self.psi().simple()
    }

    pub fn j_prime(&self) -> &[RootId] {
        self.psi_prime.simple()
    }

    /// `D_Ψ′` with `W(J′)`.
    pub fn col_cosets(&self) -> &CosetDecomposition {
        &self.col_cosets
    }

    /// `D_Ψ ∩ D_Ψ′`, in element order.
    pub fn common_reps(&self) -> Vec<ElementId> {
        self.space
            .cosets()
            .reps()
            .iter()
            .copied()
            .filter(|&d| self.col_cosets.is_rep(d))
            .collect()
    }

    /// `e_{wJ,wJ′} = Σ_{σ ∈ W(J′)} s(σ) {wσJ̄}`.
    pub fn polytabloid(&self, w: ElementId) -> ModuleVector {
        let g = self.group();
        let mut m = ModuleVector::zero();
        for &sigma in self.col_cosets.subgroup().elements() {
            m.add_term(self.space.tabloid_of_element(g.mul(w, sigma)), rational::int(g.sign(sigma)));
        }
        m
    }

    /// `κ_{wJ′} {wJ̄}` computed literally from the moved column roots.
    pub fn polytabloid_via_kappa(&self, w: ElementId) -> Result<ModuleVector> {
        let g = self.group();
        let k = kappa(g, &g.act_roots(w, self.j_prime()))?;
        Ok(k.apply(&self.space, &ModuleVector::basis(self.space.tabloid_of_element(w))))
    }

    /// Coset reduction: `w = dρ` with `d ∈ D_Ψ′`, `ρ ∈ W(J′)`, returned as
    /// `(s(ρ), d)` so that `e_{wJ,wJ′} = s(ρ) e_{dJ,dJ′}`.
    pub fn reduce(&self, w: ElementId) -> (i64, ElementId) {
        let (d, rho) = self.col_cosets.split(w);
        (self.group().sign(rho), d)
    }

    /// `S^{J,J′}`: span of all `e_{wJ,wJ′}`, row reduced.
    pub fn specht_span(&self) -> &SpechtSpan {
        self.span.get_or_init(|| {
            let dim = self.space.len();
            let rows: Vec<Vec<Rational>> =
                self.group().elements().map(|w| self.polytabloid(w).to_dense(dim)).collect();
            let (rank, echelon) = linalg::fraction_free_echelon(&rows);
            let basis = echelon
                .iter()
                .map(|row| {
                    let q: Vec<Rational> = row.iter().map(|x| Rational::from_integer(x.clone())).collect();
                    ModuleVector::from_dense(&q, self.space.all_tabloids())
                })
                .collect();
            SpechtSpan { basis, rank }
        })
    }

    /// Rank of `{e_{dJ,dJ′}}` over the given elements.
    pub fn rank_of(&self, elements: &[ElementId]) -> usize {
        let dim = self.space.len();
        let rows: Vec<Vec<Rational>> = elements.iter().map(|&d| self.polytabloid(d).to_dense(dim)).collect();
        linalg::fraction_free_echelon(&rows).0
    }

    /// `W(J) ∩ W(J′) = <e>` and `W(J⊥) ∩ W(J′⊥) = <e>`.
    pub fn is_useful(&self) -> bool {
        *self.useful.get_or_init(|| {
            let g = self.group();
            let sub = |s: &Subsystem| g.reflection_subgroup(s.simple()).expect("roots of Φ");
            sub(self.psi()).meets_trivially(&sub(&self.psi_prime))
                && sub(&self.psi_perp).meets_trivially(&sub(&self.psi_prime_perp))
        })
    }

    /// For every `d ∈ D_Ψ` with `dΨ ∩ Ψ′ = ∅`, the tabloid `{dJ̄}` has a
    /// nonzero coefficient in `e_{J,J′}`.
    pub fn is_good(&self) -> Result<bool> {
        if !self.is_useful() {
            return Err(Error::Precondition("goodness is defined for useful pairs only".into()));
        }
        Ok(*self.good.get_or_init(|| {
            let g = self.group();
            let e = self.polytabloid(g.identity());
            self.space.all_tabloids().all(|t| {
                let d = self.space.rep(t);
                let misses = self.psi().roots().iter().all(|&r| !self.psi_prime.contains(g.act_root(d, r)));
                !misses || !e.coeff(t).is_zero()
            })
        }))
    }

    /// For all `d ∈ D_Ψ ∩ D_Ψ′` and `d′ ∈ D_Ψ` of the form `dσρ`
    /// (`σ ∈ W(J′)`, `ρ ∈ W(J)`): `d ≤ d′`.
    pub fn is_very_good(&self, order: Order) -> Result<bool> {
        if !self.is_good()? {
            return Err(Error::Precondition("very good is defined for good pairs only".into()));
        }
        let slot = match order {
            Order::Bruhat => &self.very_good[0],
            Order::Length => &self.very_good[1],
        };
        Ok(*slot.get_or_init(|| {
            let g = self.group();
            self.common_reps().into_iter().all(|d| {
                self.col_cosets.subgroup().elements().iter().all(|&sigma| {
                    let d_prime = self.space.rep(self.space.tabloid_of_element(g.mul(d, sigma)));
                    g.leq(order, d, d_prime)
                })
            })
        }))
    }

    /// `{e_{dJ,dJ′} : d ∈ D_Ψ ∩ D_Ψ′}` is a basis of `S^{J,J′}`.
    pub fn is_perfect(&self, order: Order) -> Result<bool> {
        if !self.is_very_good(order)? {
            return Err(Error::Precondition(format!(
                "perfection is defined for very good pairs only ({order} order)"
            )));
        }
        Ok(*self.perfect.get_or_init(|| {
            let common = self.common_reps();
            let r = self.rank_of(&common);
            r == common.len() && r == self.specht_span().rank
        }))
    }

    /// Expresses `m` in the polytabloids `e_{dJ,dJ′}`, `d ∈ D_Ψ ∩ D_Ψ′`.
    /// `None` when `m` is outside their span.
    pub fn express_in_common_basis(&self, m: &ModuleVector) -> Option<Vec<(ElementId, Rational)>> {
        let dim = self.space.len();
        let common = self.common_reps();
        let vectors: Vec<Vec<Rational>> = common.iter().map(|&d| self.polytabloid(d).to_dense(dim)).collect();
        let x = linalg::solve_combination(&vectors, &m.to_dense(dim))?;
        Some(common.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// `e(J,J')` for the identity, `e(t2 J,t2 J')` otherwise.
    pub fn polytabloid_label(&self, d: ElementId) -> String {
        let g = self.group();
        if d == g.identity() {
            "e(J,J')".to_string()
        } else {
            let w = g.word_string(d);
            format!("e({w} J,{w} J')")
        }
    }

    pub fn classification(&self) -> Classification {
        let phi = self.group().root_system();
        let useful = self.is_useful();
        let good = useful.then(|| self.is_good().expect("useful"));
        let vg = |o: Order| good.and_then(|g| g.then(|| self.is_very_good(o).expect("good")));
        let very_good_bruhat = vg(Order::Bruhat);
        let very_good_length = vg(Order::Length);
        let perfect = Order::ALL
            .into_iter()
            .find(|&o| vg(o) == Some(true))
            .map(|o| self.is_perfect(o).expect("very good"));
        Classification {
            phi: phi.label().to_string(),
            j: phi.format_roots(self.j()),
            j_prime: phi.format_roots(self.j_prime()),
            useful,
            good,
            very_good_bruhat,
            very_good_length,
            perfect,
            specht_rank: self.specht_span().rank,
        }
    }

    /// Very good under at least one of the comparison orders.
    pub fn is_very_good_any(&self) -> bool {
        self.is_useful()
            && self.is_good().unwrap_or(false)
            && Order::ALL.iter().any(|&o| self.is_very_good(o).unwrap_or(false))
    }
}

/// Every ordered pair of subsystems `(Ψ, Ψ′)` with `Ψ′ ⊆ Φ∖Ψ`.
pub fn all_pairs(group: &WeylGroup) -> Result<Vec<SystemPair<'_>>> {
    let subs = group.root_system().all_subsystems();
    let mut out = Vec::new();
    for psi in &subs {
        for psi_prime in &subs {
            if psi.is_disjoint(psi_prime) {
                out.push(SystemPair::from_subsystems(group, psi.clone(), psi_prime.clone())?);
            }
        }
    }
    Ok(out)
}

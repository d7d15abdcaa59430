//! Weyl group enumeration, reflection subgroups, cosets and Bruhat order.
//!
//! Every element is stored as the permutation it induces on the roots and is
//! identified by its canonical key, the images of the simple roots. Element
//! indices are sorted by length, then by canonical key, so the identity is
//! always index 0.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootId, RootSystem, RootVector, Subsystem};

/// Index of an element in its [`WeylGroup`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Limits applied while enumerating a group.
#[derive(Copy, Clone, Debug)]
pub struct GroupConfig {
    pub max_order: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig { max_order: 100_000 }
    }
}

/// Partial order used when comparing coset representatives.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Bruhat,
    Length,
}

impl Order {
    pub const ALL: [Order; 2] = [Order::Bruhat, Order::Length];

    pub fn name(self) -> &'static str {
        match self {
            Order::Bruhat => "bruhat",
            Order::Length => "length",
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite Weyl group with its full multiplication table.
#[derive(Debug)]
pub struct WeylGroup {
    phi: RootSystem,
    perms: Vec<Vec<RootId>>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<RootId>, ElementId>,
    table: Vec<ElementId>,
    inverses: Vec<ElementId>,
    reflections: Vec<ElementId>,
    lower_intervals: Vec<OnceLock<Vec<bool>>>,
}

/// Enumerates `W(Φ)` with the default resource cap.
pub fn generate_group(phi: RootSystem) -> Result<WeylGroup> {
    WeylGroup::generate(phi, GroupConfig::default())
}

impl WeylGroup {
    /// Breadth-first closure over the simple reflections.
    pub fn generate(phi: RootSystem, config: GroupConfig) -> Result<WeylGroup> {
        let simple = phi.simple().to_vec();
        let key_of = |p: &[RootId]| -> Vec<RootId> { simple.iter().map(|s| p[s.index()]).collect() };

        let identity: Vec<RootId> = phi.ids().collect();
        let mut perms = vec![identity.clone()];
        let mut depth = vec![0usize];
        let mut seen: HashMap<Vec<RootId>, usize> = HashMap::new();
        seen.insert(key_of(&identity), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for &s in &simple {
                let p: Vec<RootId> = perms[w].iter().map(|&r| phi.reflect_root(s, r)).collect();
                let key = key_of(&p);
                if seen.contains_key(&key) {
                    continue;
                }
                if perms.len() >= config.max_order {
                    return Err(Error::Resource(format!(
                        "group order exceeds the cap of {}",
                        config.max_order
                    )));
                }
                seen.insert(key, perms.len());
                perms.push(p);
                depth.push(depth[w] + 1);
                queue.push_back(perms.len() - 1);
            }
        }

        let inversions = |p: &[RootId]| phi.positive_ids().filter(|r| !phi.is_positive(p[r.index()])).count();
        for (p, &d) in perms.iter().zip(&depth) {
            if inversions(p) != d {
                return Err(Error::Consistency(
                    "breadth-first depth disagrees with the inversion count".into(),
                ));
            }
        }

        let mut order: Vec<usize> = (0..perms.len()).collect();
        order.sort_by(|&a, &b| {
            let ka: Vec<&RootVector> = key_of(&perms[a]).into_iter().map(|r| phi.root(r)).collect();
            let kb: Vec<&RootVector> = key_of(&perms[b]).into_iter().map(|r| phi.root(r)).collect();
            depth[a].cmp(&depth[b]).then_with(|| ka.cmp(&kb))
        });
        let perms: Vec<Vec<RootId>> = order.iter().map(|&i| perms[i].clone()).collect();
        let lengths: Vec<usize> = order.iter().map(|&i| depth[i]).collect();
        let n = perms.len();
        let index: HashMap<Vec<RootId>, ElementId> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (key_of(p), ElementId(i as u32)))
            .collect();

        let mut table = Vec::with_capacity(n * n);
        for a in &perms {
            for b in &perms {
                let key: Vec<RootId> = simple.iter().map(|s| a[b[s.index()].index()]).collect();
                table.push(index[&key]);
            }
        }
        let inverses: Vec<ElementId> = perms
            .iter()
            .map(|p| {
                let key: Vec<RootId> = simple
                    .iter()
                    .map(|s| {
                        let r = p.iter().position(|x| x == s).expect("permutation of the roots");
                        RootId::from_index(r)
                    })
                    .collect();
                index[&key]
            })
            .collect();
        let reflections: Vec<ElementId> = phi
            .ids()
            .map(|a| {
                let p: Vec<RootId> = phi.ids().map(|b| phi.reflect_root(a, b)).collect();
                index[&key_of(&p)]
            })
            .collect();

        let mut group = WeylGroup {
            phi,
            perms,
            lengths,
            words: Vec::new(),
            index,
            table,
            inverses,
            reflections,
            lower_intervals: (0..n).map(|_| OnceLock::new()).collect(),
        };
        group.words = group.canonical_words();
        Ok(group)
    }

    // For each element, the reduced word whose letters are minimal when
    // read from the right: the last letter is the smallest right descent.
    fn canonical_words(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); self.order()];
        let gens: Vec<ElementId> = (0..self.phi.rank()).map(|i| self.simple_reflection(i)).collect();
        for w in self.elements().skip(1) {
            let (i, shorter) = gens
                .iter()
                .enumerate()
                .map(|(i, &s)| (i, self.mul(w, s)))
                .find(|&(_, ws)| self.length(ws) < self.length(w))
                .expect("nonidentity elements have a right descent");
            let mut word = words[shorter.index()].clone();
            word.push(i);
            words[w.index()] = word;
        }
        words
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.phi
    }

    /// `|W|`.
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.perms.len() as u32).map(ElementId)
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a.index() * self.order() + b.index()]
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inverses[a.index()]
    }

    /// `l(w)`: the number of positive roots sent to negative roots.
    pub fn length(&self, w: ElementId) -> usize {
        self.lengths[w.index()]
    }

    /// `s(w) = (-1)^l(w)`.
    pub fn sign(&self, w: ElementId) -> i64 {
        if self.length(w).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Canonical reduced word as 0-based simple reflection indices.
    pub fn word(&self, w: ElementId) -> &[usize] {
        &self.words[w.index()]
    }

    /// Word string such as `"t2 t1 t2"`; the identity is `"e"`.
    pub fn word_string(&self, w: ElementId) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|i| format!("t{}", i + 1)).collect::<Vec<_>>().join(" ")
    }

    /// Evaluates a word such as `"t1 t2"`, `"t1t2"` or `"e"`.
    pub fn parse_word(&self, s: &str) -> Result<ElementId> {
        let bad = || Error::Parse(format!("bad word '{s}'"));
        let mut letters = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                c if c.is_whitespace() || c == '·' || c == '*' => {}
                'e' => {}
                't' | 'τ' | 's' => {
                    let mut digits = String::new();
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        digits.push(*d);
                        chars.next();
                    }
                    let k: usize = digits.parse().map_err(|_| bad())?;
                    if k == 0 || k > self.phi.rank() {
                        return Err(Error::Parse(format!(
                            "generator t{k} out of range 1..={}",
                            self.phi.rank()
                        )));
                    }
                    letters.push(k - 1);
                }
                _ => return Err(bad()),
            }
        }
        Ok(self.from_word(&letters))
    }

    /// Product of simple reflections, left to right.
    pub fn from_word(&self, letters: &[usize]) -> ElementId {
        letters
            .iter()
            .fold(self.identity(), |acc, &i| self.mul(acc, self.simple_reflection(i)))
    }

    pub fn simple_reflection(&self, i: usize) -> ElementId {
        self.reflections[self.phi.simple()[i].index()]
    }

    /// The reflection `τ_α`.
    pub fn reflection(&self, alpha: RootId) -> ElementId {
        self.reflections[alpha.index()]
    }

    /// Images of the simple roots.
    pub fn canonical_key(&self, w: ElementId) -> Vec<RootVector> {
        self.phi
            .simple()
            .iter()
            .map(|s| self.phi.root(self.perms[w.index()][s.index()]).clone())
            .collect()
    }

    /// Looks an element up by its canonical key.
    pub fn find_by_key(&self, key: &[RootVector]) -> Option<ElementId> {
        let ids: Option<Vec<RootId>> = key.iter().map(|v| self.phi.find(v)).collect();
        self.index.get(&ids?).copied()
    }

    pub fn act_root(&self, w: ElementId, r: RootId) -> RootId {
        self.perms[w.index()][r.index()]
    }

    /// Applies `w` to an arbitrary ambient vector via its reduced word.
    pub fn act_vector(&self, w: ElementId, v: &RootVector) -> Result<RootVector> {
        let mut out = v.clone();
        for &i in self.word(w).iter().rev() {
            let s = self.phi.root(self.phi.simple()[i]);
            out = crate::rootsys::reflect(s, &out)?;
        }
        Ok(out)
    }

    pub fn act_roots(&self, w: ElementId, roots: &[RootId]) -> Vec<RootId> {
        roots.iter().map(|&r| self.act_root(w, r)).collect()
    }

    /// Closure of an element set under multiplication.
    pub fn closure(&self, generators: &[ElementId]) -> Vec<ElementId> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut found = vec![self.identity()];
        let mut next = 0;
        while next < found.len() {
            let x = found[next];
            next += 1;
            for &g in generators {
                let y = self.mul(x, g);
                if !member[y.index()] {
                    member[y.index()] = true;
                    found.push(y);
                }
            }
        }
        found.sort();
        found
    }

    /// `W(J)`: the subgroup generated by the reflections in `roots`.
    pub fn reflection_subgroup(&self, roots: &[RootId]) -> Result<ReflectionSubgroup> {
        if let Some(bad) = roots.iter().find(|r| r.index() >= self.phi.len()) {
            return Err(Error::Domain(format!("root index {} is not in Φ", bad.index())));
        }
        let gens: Vec<ElementId> = roots.iter().map(|&r| self.reflection(r)).collect();
        Ok(ReflectionSubgroup::from_elements(roots.to_vec(), self.closure(&gens), self.order()))
    }

    /// `D_Ψ`: elements sending every simple root of `Ψ` to a positive root,
    /// in element order.
    pub fn distinguished_reps(&self, psi: &Subsystem) -> Vec<ElementId> {
        self.elements()
            .filter(|&w| psi.simple().iter().all(|&j| self.phi.is_positive(self.act_root(w, j))))
            .collect()
    }

    /// The left coset decomposition `W = ⊔ d W(J)`, `d ∈ D_Ψ`.
    pub fn cosets(&self, psi: &Subsystem) -> Result<CosetDecomposition> {
        let subgroup = self.reflection_subgroup(psi.simple())?;
        let reps = self.distinguished_reps(psi);
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut rho_of = vec![self.identity(); self.order()];
        for (k, &d) in reps.iter().enumerate() {
            for &rho in subgroup.elements() {
                let w = self.mul(d, rho);
                if coset_of[w.index()] != usize::MAX {
                    return Err(Error::Consistency(format!(
                        "{} lies in two cosets of W({})",
                        self.word_string(w),
                        psi.label()
                    )));
                }
                coset_of[w.index()] = k;
                rho_of[w.index()] = rho;
            }
        }
        if coset_of.contains(&usize::MAX) {
            return Err(Error::Consistency(format!(
                "cosets of W({}) do not cover W",
                psi.label()
            )));
        }
        Ok(CosetDecomposition { reps, subgroup, coset_of, rho_of })
    }

    /// Writes `w = dρ` with `d ∈ D_Ψ` and `ρ ∈ W(J)`.
    pub fn decompose(&self, w: ElementId, psi: &Subsystem) -> Result<(ElementId, ElementId)> {
        let subgroup = self.reflection_subgroup(psi.simple())?;
        let mut found = subgroup.elements().iter().filter_map(|&rho| {
            let d = self.mul(w, self.inverse(rho));
            let in_reps = psi.simple().iter().all(|&j| self.phi.is_positive(self.act_root(d, j)));
            in_reps.then_some((d, rho))
        });
        let first = found.next();
        match (first, found.next()) {
            (Some(pair), None) => Ok(pair),
            _ => Err(Error::Consistency(format!(
                "no unique decomposition of {} against W({})",
                self.word_string(w),
                psi.label()
            ))),
        }
    }

    /// Bruhat order by the subword property: `u ≤ v` iff `u` is a product of
    /// a subword of the reduced word of `v`.
    pub fn bruhat_leq(&self, u: ElementId, v: ElementId) -> bool {
        self.lower_interval(v)[u.index()]
    }

    fn lower_interval(&self, v: ElementId) -> &[bool] {
        self.lower_intervals[v.index()].get_or_init(|| {
            let mut member = vec![false; self.order()];
            member[0] = true;
            let mut found = vec![self.identity()];
            for &i in self.word(v) {
                let s = self.simple_reflection(i);
                for k in 0..found.len() {
                    let y = self.mul(found[k], s);
                    if !member[y.index()] {
                        member[y.index()] = true;
                        found.push(y);
                    }
                }
            }
            member
        })
    }

    pub fn leq(&self, order: Order, u: ElementId, v: ElementId) -> bool {
        match order {
            Order::Bruhat => self.bruhat_leq(u, v),
            Order::Length => self.length(u) <= self.length(v),
        }
    }

    /// True when the set contains the identity and is closed under products.
    pub fn is_subgroup(&self, set: &[ElementId]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in set {
            member[x.index()] = true;
        }
        member[0] && set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b).index()]))
    }

    /// Every subgroup, found by adjoining one element at a time starting
    /// from the trivial group. Cost grows quickly; meant for small groups.
    pub fn all_subgroups(&self) -> Vec<Vec<ElementId>> {
        self.subgroups_adjoining(&self.elements().collect::<Vec<_>>())
    }

    /// Every subgroup generated by a set of reflections.
    pub fn reflection_generated_subgroups(&self) -> Vec<Vec<ElementId>> {
        let phi = self.root_system();
        let reflections: Vec<ElementId> = phi.positive_ids().map(|r| self.reflection(r)).collect();
        self.subgroups_adjoining(&reflections)
    }

    fn subgroups_adjoining(&self, candidates: &[ElementId]) -> Vec<Vec<ElementId>> {
        let mut seen: std::collections::BTreeSet<Vec<ElementId>> = Default::default();
        let trivial = vec![self.identity()];
        seen.insert(trivial.clone());
        let mut out = vec![trivial];
        let mut next = 0;
        while next < out.len() {
            let base = out[next].clone();
            next += 1;
            for &g in candidates {
                if base.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = base.clone();
                gens.push(g);
                let h = self.closure(&gens);
                if seen.insert(h.clone()) {
                    out.push(h);
                }
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    pub fn element_json(&self, w: ElementId) -> ElementJson {
        ElementJson {
            word: self.word_string(w),
            length: self.length(w),
            sign: self.sign(w),
            key: self
                .canonical_key(w)
                .iter()
                .map(|v| v.coords().iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

/// Serialized group element.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ElementJson {
    pub word: String,
    pub length: usize,
    pub sign: i64,
    pub key: Vec<Vec<String>>,
}

/// The subgroup `W(J)` generated by reflections in a root set.
#[derive(Clone, Debug)]
pub struct ReflectionSubgroup {
    generators: Vec<RootId>,
    elements: Vec<ElementId>,
    member: Vec<bool>,
}

impl ReflectionSubgroup {
    fn from_elements(generators: Vec<RootId>, elements: Vec<ElementId>, order: usize) -> Self {
        let mut member = vec![false; order];
        for e in &elements {
            member[e.index()] = true;
        }
        ReflectionSubgroup { generators, elements, member }
    }

    pub fn generators(&self) -> &[RootId] {
        &self.generators
    }

    /// Elements in group order.
    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: ElementId) -> bool {
        self.member[w.index()]
    }

    pub fn intersection(&self, other: &ReflectionSubgroup) -> Vec<ElementId> {
        self.elements.iter().copied().filter(|&w| other.contains(w)).collect()
    }

    /// True when the only common element is the identity.
    pub fn meets_trivially(&self, other: &ReflectionSubgroup) -> bool {
        self.intersection(other).len() == 1
    }
}

/// Left cosets of `W(J)` with their distinguished representatives.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    reps: Vec<ElementId>,
    subgroup: ReflectionSubgroup,
    coset_of: Vec<usize>,
    rho_of: Vec<ElementId>,
}

impl CosetDecomposition {
    /// `D_Ψ` in element order.
    pub fn reps(&self) -> &[ElementId] {
        &self.reps
    }

    pub fn subgroup(&self) -> &ReflectionSubgroup {
        &self.subgroup
    }

    /// Position in [`reps`](Self::reps) of the coset containing `w`.
    pub fn coset_index(&self, w: ElementId) -> usize {
        self.coset_of[w.index()]
    }

    /// `(d, ρ)` with `w = dρ`.
    pub fn split(&self, w: ElementId) -> (ElementId, ElementId) {
        (self.reps[self.coset_of[w.index()]], self.rho_of[w.index()])
    }

    pub fn is_rep(&self, w: ElementId) -> bool {
        self.reps[self.coset_of[w.index()]] == w
    }
}

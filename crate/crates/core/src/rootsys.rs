//! Root systems, reflections and root subsystems over exact rationals.
//!
//! Roots are stored once per [`RootSystem`] and referred to by [`RootId`].
//! Positive roots come first, ordered by height and then by descending
//! coefficient tuple; the negative roots follow in the same order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Rational};

/// A vector of the ambient Euclidean space with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coords: Vec<Rational>,
}

impl RootVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RootVector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RootVector::new(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RootVector::new(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Rational) -> RootVector {
        RootVector::new(self.coords.iter().map(|x| x * c).collect())
    }

    fn same_dim(&self, other: &RootVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Domain(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// The operator impls panic on mismatched dimensions; use `inner`/`reflect`
// for checked access to user-supplied vectors.
impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        RootVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        RootVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector::new(self.coords.iter().map(|a| -a).collect())
    }
}

/// Standard Euclidean inner product.
pub fn inner(u: &RootVector, v: &RootVector) -> Result<Rational> {
    u.same_dim(v)?;
    Ok(u.coords.iter().zip(&v.coords).map(|(a, b)| a * b).sum())
}

/// The reflection of `v` in the hyperplane orthogonal to `alpha`:
/// `v - 2 (alpha, v) / (alpha, alpha) * alpha`.
pub fn reflect(alpha: &RootVector, v: &RootVector) -> Result<RootVector> {
    alpha.same_dim(v)?;
    if alpha.is_zero() {
        return Err(Error::Domain("cannot reflect in the zero vector".into()));
    }
    let factor = rational::int(2) * inner(alpha, v)? / inner(alpha, alpha)?;
    Ok(v - &alpha.scaled(&factor))
}

/// Index of a root inside its [`RootSystem`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(usize);

impl RootId {
    pub fn index(self) -> usize {
        self.0
    }

    pub(crate) fn from_index(i: usize) -> Self {
        RootId(i)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanType::A),
            'B' => Some(CartanType::B),
            'C' => Some(CartanType::C),
            'D' => Some(CartanType::D),
            'G' => Some(CartanType::G),
            _ => None,
        }
    }

    /// Supported ranks. Everything is capped at rank 4.
    pub fn supports_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => (1..=4).contains(&rank),
            CartanType::B | CartanType::C => (2..=4).contains(&rank),
            CartanType::D => (3..=4).contains(&rank),
            CartanType::G => rank == 2,
        }
    }
}

/// Largest rank the constructors accept.
pub const MAX_RANK: usize = 4;

/// A finite crystallographic root system with a fixed simple system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    cartan: CartanType,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<RootVector>,
    coeffs: Vec<Vec<i64>>,
    simple: Vec<RootId>,
    index: HashMap<RootVector, RootId>,
    negation: Vec<RootId>,
    // reflections[a][b] = tau_a(b)
    reflections: Vec<Vec<RootId>>,
    norms: Vec<Rational>,
    two_lengths: bool,
    max_norm: Rational,
}

/// Builds the root system of the given Cartan type and rank.
///
/// Coordinates: `A_n` lives in `n + 1` dimensions with simple roots
/// `e_i - e_{i+1}`; `B_n`, `C_n`, `D_n` use the usual `e_i` conventions in
/// `n` dimensions; `G_2` uses `e1 - e2` and `-2e1 + e2 + e3`.
pub fn build_root_system(cartan: CartanType, rank: usize) -> Result<RootSystem> {
    if !cartan.supports_rank(rank) {
        return Err(Error::Config(format!(
            "unsupported root system {}{}",
            cartan.letter(),
            rank
        )));
    }
    let unit = |dim: usize, i: usize| -> Vec<i64> {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let diff = |dim: usize, i: usize, j: usize| -> RootVector {
        let mut v = unit(dim, i);
        v[j] = -1;
        RootVector::from_ints(&v)
    };
    let simple: Vec<RootVector> = match cartan {
        CartanType::A => (0..rank).map(|i| diff(rank + 1, i, i + 1)).collect(),
        CartanType::B | CartanType::C | CartanType::D => {
            let mut s: Vec<RootVector> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
            let last = match cartan {
                CartanType::B => unit(rank, rank - 1),
                CartanType::C => {
                    let mut v = vec![0; rank];
                    v[rank - 1] = 2;
                    v
                }
                _ => {
                    let mut v = vec![0; rank];
                    v[rank - 2] = 1;
                    v[rank - 1] = 1;
                    v
                }
            };
            s.push(RootVector::from_ints(&last));
            s
        }
        CartanType::G => vec![
            RootVector::from_ints(&[1, -1, 0]),
            RootVector::from_ints(&[-2, 1, 1]),
        ],
    };
    RootSystem::from_simple_roots(format!("{}{}", cartan.letter(), rank), cartan, simple)
}

impl RootSystem {
    /// Parses labels like `"G2"` or `"a3"`.
    pub fn from_label(label: &str) -> Result<RootSystem> {
        let label = label.trim();
        let mut chars = label.chars();
        let cartan = chars
            .next()
            .and_then(CartanType::from_letter)
            .ok_or_else(|| Error::Config(format!("unknown root system type '{label}'")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Config(format!("missing or bad rank in '{label}'")))?;
        build_root_system(cartan, rank)
    }

    fn from_simple_roots(label: String, cartan: CartanType, simple: Vec<RootVector>) -> Result<Self> {
        let rank = simple.len();
        let ambient_dim = simple[0].dim();

        // Orbit of the simple roots under the simple reflections.
        let mut found: Vec<RootVector> = simple.clone();
        let mut seen: BTreeSet<RootVector> = simple.iter().cloned().collect();
        let mut next = 0;
        while next < found.len() {
            let r = found[next].clone();
            next += 1;
            for s in &simple {
                let img = reflect(s, &r)?;
                if seen.insert(img.clone()) {
                    found.push(img);
                    if found.len() > 10_000 {
                        return Err(Error::Resource("root closure does not terminate".into()));
                    }
                }
            }
        }

        let simple_coords: Vec<Vec<Rational>> = simple.iter().map(|v| v.coords.clone()).collect();
        let mut positives: Vec<(Vec<i64>, RootVector)> = Vec::new();
        for r in &found {
            let c = linalg::solve_combination(&simple_coords, &r.coords)
                .ok_or_else(|| Error::Consistency(format!("root {r} outside span of simple roots")))?;
            let c: Vec<i64> = c
                .iter()
                .map(rational::to_i64)
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Consistency(format!("root {r} has non-integral coefficients")))?;
            let nonneg = c.iter().all(|&x| x >= 0);
            let nonpos = c.iter().all(|&x| x <= 0);
            if !nonneg && !nonpos {
                return Err(Error::Consistency(format!("root {r} is neither positive nor negative")));
            }
            if nonneg {
                positives.push((c, r.clone()));
            }
        }
        if positives.len() * 2 != found.len() {
            return Err(Error::Consistency("roots do not split into positive and negative halves".into()));
        }
        positives.sort_by(|(a, _), (b, _)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let n_pos = positives.len();
        let mut roots = Vec::with_capacity(2 * n_pos);
        let mut coeffs = Vec::with_capacity(2 * n_pos);
        for (c, r) in &positives {
            roots.push(r.clone());
            coeffs.push(c.clone());
        }
        for (c, r) in &positives {
            roots.push(-r);
            coeffs.push(c.iter().map(|x| -x).collect());
        }
        let index: HashMap<RootVector, RootId> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), RootId(i))).collect();
        let negation: Vec<RootId> = (0..2 * n_pos)
            .map(|i| RootId(if i < n_pos { i + n_pos } else { i - n_pos }))
            .collect();
        let simple_ids = simple
            .iter()
            .map(|s| index[s])
            .collect::<Vec<_>>();

        let mut reflections = Vec::with_capacity(roots.len());
        for a in &roots {
            let mut row = Vec::with_capacity(roots.len());
            for b in &roots {
                let img = reflect(a, b)?;
                let id = *index
                    .get(&img)
                    .ok_or_else(|| Error::Consistency(format!("reflection of {b} in {a} is not a root")))?;
                row.push(id);
            }
            reflections.push(row);
        }
        let norms: Vec<Rational> = roots.iter().map(|r| inner(r, r)).collect::<Result<_>>()?;
        let max_norm = norms.iter().max().cloned().unwrap_or_else(rational::zero);
        let two_lengths = norms.iter().any(|n| *n != max_norm);

        Ok(RootSystem {
            label,
            cartan,
            rank,
            ambient_dim,
            roots,
            coeffs,
            simple: simple_ids,
            index,
            negation,
            reflections,
            norms,
            two_lengths,
            max_norm,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of roots, `|Φ|`.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.roots.len()).map(RootId)
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.roots.len() / 2).map(RootId)
    }

    pub fn root(&self, id: RootId) -> &RootVector {
        &self.roots[id.0]
    }

    /// Coefficients of a root over the simple system.
    pub fn coefficients(&self, id: RootId) -> &[i64] {
        &self.coeffs[id.0]
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id.0 < self.roots.len() / 2
    }

    pub fn simple(&self) -> &[RootId] {
        &self.simple
    }

    pub fn negate(&self, id: RootId) -> RootId {
        self.negation[id.0]
    }

    /// `tau_alpha(beta)` as a root index.
    pub fn reflect_root(&self, alpha: RootId, beta: RootId) -> RootId {
        self.reflections[alpha.0][beta.0]
    }

    pub fn inner_roots(&self, a: RootId, b: RootId) -> Rational {
        inner(&self.roots[a.0], &self.roots[b.0]).expect("roots share the ambient dimension")
    }

    pub fn norm(&self, id: RootId) -> &Rational {
        &self.norms[id.0]
    }

    /// True for roots of maximal length in a system with two root lengths.
    pub fn is_long(&self, id: RootId) -> bool {
        self.two_lengths && self.norms[id.0] == self.max_norm
    }

    pub fn has_two_lengths(&self) -> bool {
        self.two_lengths
    }

    pub fn find(&self, v: &RootVector) -> Option<RootId> {
        self.index.get(v).copied()
    }

    pub fn find_by_coefficients(&self, c: &[i64]) -> Option<RootId> {
        self.coeffs.iter().position(|x| x.as_slice() == c).map(RootId)
    }

    /// Coefficient notation over the simple roots: `"32"` is `3a1 + 2a2`,
    /// `"-10"` is `-a1`. Coefficients above 9 are parenthesised.
    pub fn coefficient_string(&self, id: RootId) -> String {
        let mut s = String::new();
        for &c in &self.coeffs[id.0] {
            if c < 0 {
                s.push('-');
            }
            let a = c.abs();
            if a < 10 {
                s.push_str(&a.to_string());
            } else {
                s.push_str(&format!("({a})"));
            }
        }
        s
    }

    /// Parses one root in coefficient notation. Accepts ASCII `-` and the
    /// Unicode minus sign.
    pub fn parse_root(&self, token: &str) -> Result<RootId> {
        let token = token.trim();
        let bad = || Error::Parse(format!("bad root '{token}'"));
        let mut coeffs = Vec::new();
        let mut chars = token.chars().peekable();
        while let Some(c) = chars.next() {
            let negative = c == '-' || c == '\u{2212}';
            let c = if negative { chars.next().ok_or_else(bad)? } else { c };
            let value: i64 = if c == '(' {
                let mut digits = String::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some(d) if d.is_ascii_digit() => digits.push(d),
                        _ => return Err(bad()),
                    }
                }
                digits.parse().map_err(|_| bad())?
            } else {
                c.to_digit(10).ok_or_else(bad)? as i64
            };
            coeffs.push(if negative { -value } else { value });
        }
        if coeffs.len() != self.rank {
            return Err(Error::Parse(format!(
                "root '{token}' needs {} coefficients, got {}",
                self.rank,
                coeffs.len()
            )));
        }
        self.find_by_coefficients(&coeffs)
            .ok_or_else(|| Error::Domain(format!("'{token}' is not a root of {}", self.label)))
    }

    /// Parses a comma or whitespace separated root list; `""` and `"{}"`
    /// give the empty list.
    pub fn parse_roots(&self, list: &str) -> Result<Vec<RootId>> {
        let list = list.trim().trim_start_matches('{').trim_end_matches('}');
        list.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| self.parse_root(t))
            .collect()
    }

    pub fn format_roots(&self, ids: &[RootId]) -> String {
        ids.iter().map(|&r| self.coefficient_string(r)).collect::<Vec<_>>().join(",")
    }

    /// The subsystem generated by `j`: the smallest set of roots containing
    /// `j` and closed under reflection in its own members.
    pub fn subsystem(&self, j: &[RootId]) -> Result<Subsystem> {
        let mut distinct = BTreeSet::new();
        for &r in j {
            if !self.is_positive(r) {
                return Err(Error::Domain(format!(
                    "{} is not a positive root",
                    self.coefficient_string(r)
                )));
            }
            if !distinct.insert(r) {
                return Err(Error::Domain(format!(
                    "{} listed twice",
                    self.coefficient_string(r)
                )));
            }
        }
        let roots = self.reflection_closure(j);
        let positives: Vec<RootId> = roots.iter().copied().filter(|&r| self.is_positive(r)).collect();
        let indecomposable = self.indecomposables(&positives);

        let given: BTreeSet<RootId> = j.iter().copied().collect();
        let computed: BTreeSet<RootId> = indecomposable.iter().copied().collect();
        let simple = if given == computed { j.to_vec() } else { indecomposable };

        let components = self.components(&simple);
        let label = self.diagram_label(&components);
        Ok(Subsystem {
            roots,
            simple: components.concat(),
            generators: j.to_vec(),
            components,
            label,
        })
    }

    pub fn empty_subsystem(&self) -> Subsystem {
        self.subsystem(&[]).expect("empty generator set is valid")
    }

    pub fn full_subsystem(&self) -> Subsystem {
        self.subsystem(&self.simple).expect("simple system generates the full system")
    }

    /// `Ψ⊥`: every root orthogonal to all of `psi`, with its own simple system.
    pub fn orthogonal_subsystem(&self, psi: &Subsystem) -> Subsystem {
        let perp: Vec<RootId> = self
            .ids()
            .filter(|&b| psi.roots.iter().all(|&a| self.inner_roots(a, b).is_zero()))
            .collect();
        let positives: Vec<RootId> = perp.iter().copied().filter(|&r| self.is_positive(r)).collect();
        let simple = self.indecomposables(&positives);
        let sub = self.subsystem(&simple).expect("indecomposable positive roots are a valid generator set");
        debug_assert_eq!(sub.roots, perp);
        sub
    }

    /// Every reflection-closed subsystem, smallest first.
    pub fn all_subsystems(&self) -> Vec<Subsystem> {
        let mut seen: BTreeSet<Vec<RootId>> = BTreeSet::new();
        let empty = self.empty_subsystem();
        seen.insert(empty.roots.clone());
        let mut out = vec![empty];
        let mut next = 0;
        while next < out.len() {
            let base = out[next].clone();
            next += 1;
            for r in self.positive_ids() {
                if base.contains(r) {
                    continue;
                }
                let mut gens = base.simple.clone();
                gens.push(r);
                let sub = self.subsystem(&gens).expect("positive distinct generators");
                if seen.insert(sub.roots.clone()) {
                    out.push(sub);
                }
            }
        }
        out.sort_by(|a, b| (a.roots.len(), &a.roots).cmp(&(b.roots.len(), &b.roots)));
        out
    }

    fn reflection_closure(&self, j: &[RootId]) -> Vec<RootId> {
        let mut set: BTreeSet<RootId> = j.iter().flat_map(|&r| [r, self.negate(r)]).collect();
        loop {
            let current: Vec<RootId> = set.iter().copied().collect();
            let mut grew = false;
            for &a in &current {
                for &b in &current {
                    grew |= set.insert(self.reflect_root(a, b));
                }
            }
            if !grew {
                return set.into_iter().collect();
            }
        }
    }

    /// Positive roots of the set that are not a sum of two others.
    fn indecomposables(&self, positives: &[RootId]) -> Vec<RootId> {
        let sums: BTreeSet<Vec<i64>> = positives
            .iter()
            .flat_map(|&a| {
                positives.iter().map(move |&b| {
                    self.coeffs[a.0].iter().zip(&self.coeffs[b.0]).map(|(x, y)| x + y).collect()
                })
            })
            .collect();
        positives.iter().copied().filter(|&r| !sums.contains(&self.coeffs[r.0])).collect()
    }

    /// Connected components of the non-orthogonality graph, in order of
    /// first appearance.
    fn components(&self, simple: &[RootId]) -> Vec<Vec<RootId>> {
        let n = simple.len();
        let mut comp: Vec<Option<usize>> = vec![None; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start].is_some() {
                continue;
            }
            comp[start] = Some(count);
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for k in 0..n {
                    if comp[k].is_none() && !self.inner_roots(simple[i], simple[k]).is_zero() {
                        comp[k] = Some(count);
                        stack.push(k);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| (0..n).filter(|&i| comp[i] == Some(c)).map(|i| simple[i]).collect())
            .collect()
    }

    /// Dynkin label such as `"A1+Ã1"`. A tilde marks a component made of
    /// long roots inside a system with two root lengths.
    fn diagram_label(&self, components: &[Vec<RootId>]) -> String {
        if components.is_empty() {
            return "∅".to_string();
        }
        components.iter().map(|c| self.component_label(c)).collect::<Vec<_>>().join("+")
    }

    fn component_label(&self, c: &[RootId]) -> String {
        let r = c.len();
        let bond = |a: RootId, b: RootId| -> i64 {
            let ip = self.inner_roots(a, b);
            let m = rational::int(4) * &ip * &ip / (self.norm(a) * self.norm(b));
            rational::to_i64(&m).expect("bond multiplicities are integral")
        };
        let mut max_bond = 0;
        let mut degree = vec![0usize; r];
        for i in 0..r {
            for k in i + 1..r {
                let b = bond(c[i], c[k]);
                max_bond = max_bond.max(b);
                if b > 0 {
                    degree[i] += 1;
                    degree[k] += 1;
                }
            }
        }
        let comp_max = c.iter().map(|&x| self.norm(x)).max().expect("nonempty component");
        let short = c.iter().filter(|&&x| self.norm(x) < comp_max).count();
        let letter = match max_bond {
            3 => "G",
            2 if r == 2 => "B",
            2 if short == 1 => "B",
            2 if short == r - 1 => "C",
            2 => "F",
            _ if degree.iter().any(|&d| d >= 3) => "D",
            _ => "A",
        };
        let all_long = c.iter().all(|&x| self.is_long(x));
        let letter = match (letter, all_long && short == 0) {
            ("A", true) => "Ã".to_string(),
            ("D", true) => "D\u{303}".to_string(),
            (l, _) => l.to_string(),
        };
        format!("{letter}{r}")
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            label: self.label.clone(),
            ambient_dim: self.ambient_dim,
            simple: self.simple.iter().map(|&s| self.coefficient_string(s)).collect(),
            roots: self
                .ids()
                .map(|r| RootJson {
                    coeffs: self.coefficient_string(r),
                    coords: self.roots[r.0].coords.iter().map(|c| c.to_string()).collect(),
                    positive: self.is_positive(r),
                })
                .collect(),
        }
    }
}

/// Serialized form of a root system.
#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq)]
pub struct RootSystemJson {
    pub label: String,
    pub ambient_dim: usize,
    pub simple: Vec<String>,
    pub roots: Vec<RootJson>,
}

#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq)]
pub struct RootJson {
    pub coeffs: String,
    pub coords: Vec<String>,
    pub positive: bool,
}

/// A root subsystem `Ψ` with simple system `J ⊆ Φ⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsystem {
    roots: Vec<RootId>,
    simple: Vec<RootId>,
    generators: Vec<RootId>,
    components: Vec<Vec<RootId>>,
    label: String,
}

impl Subsystem {
    /// The roots of `Ψ`, sorted.
    pub fn roots(&self) -> &[RootId] {
        &self.roots
    }

    /// The simple system, ordered component by component. Equals the
    /// generators (regrouped by component) whenever they already form a
    /// simple system.
    pub fn simple(&self) -> &[RootId] {
        &self.simple
    }

    /// The roots the subsystem was generated from, as given.
    pub fn generators(&self) -> &[RootId] {
        &self.generators
    }

    pub fn components(&self) -> &[Vec<RootId>] {
        &self.components
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: RootId) -> bool {
        self.roots.binary_search(&r).is_ok()
    }

    pub fn is_disjoint(&self, other: &Subsystem) -> bool {
        self.roots.iter().all(|&r| !other.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> RootSystem {
        build_root_system(CartanType::G, 2).unwrap()
    }

    fn v(c: &[i64]) -> RootVector {
        RootVector::from_ints(c)
    }

    #[test]
    fn reflect_negates_own_root() {
        let a = v(&[1, -1, 0]);
        assert_eq!(reflect(&a, &a).unwrap(), -&a);
    }

    #[test]
    fn reflect_fixes_orthogonal_vectors() {
        let a = v(&[1, -1, 0]);
        let w = v(&[1, 1, 5]);
        assert_eq!(reflect(&a, &w).unwrap(), w);
    }

    #[test]
    fn reflect_errors() {
        assert!(matches!(reflect(&v(&[0, 0]), &v(&[1, 0])), Err(Error::Domain(_))));
        assert!(matches!(reflect(&v(&[1, 0]), &v(&[1, 0, 0])), Err(Error::Domain(_))));
        assert!(matches!(inner(&v(&[1, 0]), &v(&[1, 0, 0])), Err(Error::Domain(_))));
    }

    #[test]
    fn g2_inner_products_by_hand() {
        // (1,-1,0).(1,-1,0) = 2 and (1,-1,0).(-2,1,1) = -2 - 1 + 0 = -3.
        let a1 = v(&[1, -1, 0]);
        let a2 = v(&[-2, 1, 1]);
        assert_eq!(inner(&a1, &a1).unwrap(), rational::int(2));
        assert_eq!(inner(&a1, &a2).unwrap(), rational::int(-3));
        assert_eq!(inner(&a2, &a2).unwrap(), rational::int(6));
    }

    #[test]
    fn g2_reflect_a1_a2_gives_31() {
        // a2 - 2(-3)/2 a1 = a2 + 3a1 = (1,-2,1)
        let phi = g2();
        let a1 = v(&[1, -1, 0]);
        let a2 = v(&[-2, 1, 1]);
        let img = reflect(&a1, &a2).unwrap();
        assert_eq!(img, v(&[1, -2, 1]));
        assert_eq!(phi.coefficient_string(phi.find(&img).unwrap()), "31");
    }

    #[test]
    fn g2_positive_roots_in_order() {
        let phi = g2();
        let names: Vec<String> = phi.positive_ids().map(|r| phi.coefficient_string(r)).collect();
        assert_eq!(names, ["10", "01", "11", "21", "31", "32"]);
        assert_eq!(phi.len(), 12);
    }

    #[test]
    fn ranks_outside_cap_rejected() {
        assert!(matches!(build_root_system(CartanType::A, 5), Err(Error::Config(_))));
        assert!(matches!(build_root_system(CartanType::G, 3), Err(Error::Config(_))));
        assert!(matches!(RootSystem::from_label("E6"), Err(Error::Config(_))));
    }

    #[test]
    fn a1_is_plus_minus_alpha() {
        let phi = RootSystem::from_label("A1").unwrap();
        assert_eq!(phi.len(), 2);
        let a = phi.simple()[0];
        assert_eq!(phi.negate(a), RootId(1));
        assert_eq!(phi.root(RootId(1)), &-phi.root(a));
    }

    #[test]
    fn parse_and_format_roundtrip() {
        let phi = g2();
        for r in phi.ids() {
            assert_eq!(phi.parse_root(&phi.coefficient_string(r)).unwrap(), r);
        }
        assert_eq!(phi.parse_root("\u{2212}10").unwrap(), phi.negate(phi.simple()[0]));
        assert!(matches!(phi.parse_root("12"), Err(Error::Domain(_))));
        assert!(matches!(phi.parse_root("1"), Err(Error::Parse(_))));
        assert!(matches!(phi.parse_root("1x"), Err(Error::Parse(_))));
        assert_eq!(phi.parse_roots("{}").unwrap(), vec![]);
    }

    #[test]
    fn example_subsystems() {
        let phi = g2();
        let j = phi.parse_roots("10,32").unwrap();
        let psi = phi.subsystem(&j).unwrap();
        assert_eq!(psi.len(), 4);
        assert_eq!(psi.label(), "A1+Ã1");
        assert_eq!(psi.simple(), j.as_slice());

        let js = phi.parse_roots("10,21").unwrap();
        let star = phi.subsystem(&js).unwrap();
        assert_eq!(star.len(), 6);
        assert_eq!(star.label(), "A2");
        // 21 = 10 + 11, so the simple system is {10, 11}.
        assert_eq!(phi.format_roots(star.simple()), "10,11");
        assert_eq!(star.generators(), js.as_slice());
    }

    #[test]
    fn subsystem_rejects_negative_and_repeated() {
        let phi = g2();
        let neg = phi.parse_roots("-10").unwrap();
        assert!(matches!(phi.subsystem(&neg), Err(Error::Domain(_))));
        let twice = phi.parse_roots("10,10").unwrap();
        assert!(matches!(phi.subsystem(&twice), Err(Error::Domain(_))));
    }

    #[test]
    fn empty_and_full_orthogonal() {
        let phi = g2();
        let empty = phi.empty_subsystem();
        assert!(empty.is_empty());
        assert_eq!(phi.orthogonal_subsystem(&empty).len(), 12);
        let full = phi.full_subsystem();
        assert_eq!(full.label(), "G2");
        assert!(phi.orthogonal_subsystem(&full).is_empty());
    }

    #[test]
    fn orthogonal_of_a1_a1_in_g2_matches_filter() {
        let phi = g2();
        let psi = phi.subsystem(&phi.parse_roots("10,32").unwrap()).unwrap();
        let perp = phi.orthogonal_subsystem(&psi);
        let brute: Vec<RootId> = phi
            .ids()
            .filter(|&b| psi.roots().iter().all(|&a| phi.inner_roots(a, b).is_zero()))
            .collect();
        assert_eq!(perp.roots(), brute.as_slice());
        // a rank-2 subsystem spans the plane
        assert!(perp.is_empty());

        let a1 = phi.subsystem(&phi.parse_roots("10").unwrap()).unwrap();
        let perp = phi.orthogonal_subsystem(&a1);
        assert_eq!(phi.format_roots(perp.simple()), "32");
    }

    #[test]
    fn subsystem_counts() {
        // G2: ∅, 3 short A1, 3 long A1, 3 A1+Ã1, A2, Ã2, G2
        assert_eq!(g2().all_subsystems().len(), 13);
        // A2: ∅, 3 A1, A2
        assert_eq!(RootSystem::from_label("A2").unwrap().all_subsystems().len(), 5);
    }

    #[test]
    fn labels_across_types() {
        for (label, expect) in [("A3", "A3"), ("B3", "B3"), ("C3", "C3"), ("D4", "D4"), ("B2", "B2")] {
            let phi = RootSystem::from_label(label).unwrap();
            assert_eq!(phi.full_subsystem().label(), expect);
        }
    }

    #[test]
    fn json_has_rational_strings() {
        let phi = g2();
        let json = phi.to_json();
        assert_eq!(json.roots.len(), 12);
        assert_eq!(json.roots[0].coords, ["1", "-1", "0"]);
        assert_eq!(json.roots[0].coeffs, "10");
    }
}

//! Δ-tableaux, row equivalence and Δ-tabloids.
//!
//! A tableau is the reference tuple `J̄ = (J₁,…,J_r; J′₁,…,J′_s)` moved by a
//! group element. Its tabloid is the left coset `w W(J)`, represented by the
//! distinguished coset representative `d ∈ D_Ψ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rootsys::{RootId, Subsystem};
use crate::weyl::{CosetDecomposition, ElementId, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<RootId>,
    cols: Vec<RootId>,
    witness: ElementId,
}

impl Tableau {
    pub fn rows(&self) -> &[RootId] {
        &self.rows
    }

    pub fn cols(&self) -> &[RootId] {
        &self.cols
    }

    /// The `w` with `self = wJ̄`.
    pub fn witness(&self) -> ElementId {
        self.witness
    }
}

/// A Δ-tabloid, identified by its position in `D_Ψ`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid(usize);

impl Tabloid {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TabloidJson {
    pub canonical_rep: String,
    pub display: String,
}

/// The set `τ_Δ` of tabloids for a fixed reference `J̄`.
#[derive(Clone, Debug)]
pub struct TabloidSpace<'g> {
    group: &'g WeylGroup,
    psi: Subsystem,
    rows: Vec<RootId>,
    cols: Vec<RootId>,
    cosets: CosetDecomposition,
}

impl<'g> TabloidSpace<'g> {
    /// Rows are the simple system of `psi`; `cols` is the ordered column
    /// reference `J′`.
    pub fn new(group: &'g WeylGroup, psi: Subsystem, cols: Vec<RootId>) -> Result<Self> {
        let cosets = group.cosets(&psi)?;
        Ok(TabloidSpace { group, rows: psi.simple().to_vec(), psi, cols, cosets })
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.group
    }

    pub fn psi(&self) -> &Subsystem {
        &self.psi
    }

    /// `D_Ψ` with `W(J)`.
    pub fn cosets(&self) -> &CosetDecomposition {
        &self.cosets
    }

    pub fn reference(&self) -> Tableau {
        self.make_tableau(self.group.identity())
    }

    /// `wJ̄`, preserving block order.
    pub fn make_tableau(&self, w: ElementId) -> Tableau {
        Tableau {
            rows: self.group.act_roots(w, &self.rows),
            cols: self.group.act_roots(w, &self.cols),
            witness: w,
        }
    }

    /// Whether `t2 = ρ t1` for some `ρ` in the row group of `t1`.
    pub fn row_equivalent(&self, t1: &Tableau, t2: &Tableau) -> bool {
        let g = self.group;
        self.cosets.subgroup().contains(g.mul(g.inverse(t1.witness), t2.witness))
    }

    pub fn tabloid_of(&self, t: &Tableau) -> Tabloid {
        self.tabloid_of_element(t.witness)
    }

    /// `{wJ̄}`.
    pub fn tabloid_of_element(&self, w: ElementId) -> Tabloid {
        Tabloid(self.cosets.coset_index(w))
    }

    pub fn len(&self) -> usize {
        self.cosets.reps().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All tabloids, in `D_Ψ` order.
    pub fn all_tabloids(&self) -> impl Iterator<Item = Tabloid> {
        (0..self.len()).map(Tabloid)
    }

    /// The distinguished representative `d ∈ D_Ψ` of the tabloid.
    pub fn rep(&self, t: Tabloid) -> ElementId {
        self.cosets.reps()[t.0]
    }

    /// `σ{wJ̄} = {σwJ̄}`.
    pub fn act(&self, sigma: ElementId, t: Tabloid) -> Tabloid {
        self.tabloid_of_element(self.group.mul(sigma, self.rep(t)))
    }

    /// Coefficient notation, rows then columns: `{10,32;11}`.
    pub fn display_tableau(&self, t: &Tableau) -> String {
        let phi = self.group.root_system();
        format!("{{{};{}}}", phi.format_roots(&t.rows), phi.format_roots(&t.cols))
    }

    /// Display of the tableau `dJ̄` for the canonical representative `d`.
    pub fn display(&self, t: Tabloid) -> String {
        self.display_tableau(&self.make_tableau(self.rep(t)))
    }

    pub fn to_json(&self, t: Tabloid) -> TabloidJson {
        TabloidJson {
            canonical_rep: self.group.word_string(self.rep(t)),
            display: self.display(t),
        }
    }
}

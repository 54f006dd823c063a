//! Canonical model coordinates, pencil multiplication matrices and rational
//! normal scroll types.
//!
//! The canonical model of the curve lives in projective space of dimension
//! `genus - 1`; its coordinates are indexed by the exponent set
//! `frobenius - G`. A pencil spanned by two section exponents `u < v` of a
//! sheaf sweeps out a scroll cut from the 2 x h1 matrix whose columns are
//! the dual-module exponents and whose rows add `u` respectively `v`. The
//! scroll invariants are read off by chaining columns at step `v - u`:
//! a column chains to the next whenever both exponents are dual-module
//! members, so each maximal arithmetic chain of length `L` contributes the
//! invariant `L`, padded with zeros up to the scrollar dimension.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::sheaf::MonomialSheaf;

/// Sorted exponent list `frobenius - G`; entry `k` is the canonical
/// coordinate `x_k`, and the list has one entry per gap.
pub fn canonical_exponents(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    if s.is_smooth() {
        return Err(Error::SmoothCurve);
    }
    let frob = s.frobenius();
    let mut out: Vec<u64> = s.gaps().iter().map(|&l| (frob - l as i64) as u64).collect();
    out.sort_unstable();
    Ok(out)
}

/// Monomial exponents of a projective model of the curve that is smooth at
/// infinity: the minimal generators, extended so the two largest entries
/// are consecutive. When the successor of the largest generator is not a
/// member, the conductor and its successor are appended instead.
pub fn realizing_curve_exponents(s: &NumericalSemigroup) -> Result<Vec<u64>> {
    if s.is_smooth() {
        return Err(Error::SmoothCurve);
    }
    let mut exps = s.min_generators().to_vec();
    let m = *exps.last().unwrap();
    let consecutive = exps.len() >= 2 && exps[exps.len() - 2] + 1 == m;
    if !consecutive {
        if s.contains(m as i64 + 1) {
            exps.push(m + 1);
        } else {
            exps.push(s.conductor());
            exps.push(s.conductor() + 1);
        }
    }
    Ok(exps)
}

/// A two-dimensional space of sections of a sheaf, spanned by `t^u, t^v`.
#[derive(Clone, Copy, Debug)]
pub struct Pencil<'a> {
    sheaf: &'a MonomialSheaf,
    u: u64,
    v: u64,
}

impl<'a> Pencil<'a> {
    /// Both exponents must index global sections of the sheaf; the order of
    /// `u` and `v` is normalized.
    pub fn new(sheaf: &'a MonomialSheaf, u: u64, v: u64) -> Result<Self> {
        if u == v {
            return Err(Error::InvalidPencil {
                u,
                v,
                reason: "the two exponents must differ".into(),
            });
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        for e in [u, v] {
            if e > sheaf.a_max() || !sheaf.value_ideal().contains(e as i64) {
                return Err(Error::InvalidPencil {
                    u,
                    v,
                    reason: format!("{e} is not a global section exponent of {sheaf}"),
                });
            }
        }
        Ok(Pencil { sheaf, u, v })
    }

    pub fn sheaf(&self) -> &MonomialSheaf {
        self.sheaf
    }

    pub fn exponents(&self) -> (u64, u64) {
        (self.u, self.v)
    }

    pub fn step(&self) -> u64 {
        self.v - self.u
    }

    /// A pencil is standard when the subsheaf it generates is invertible,
    /// i.e. the step is a member; otherwise it carries an irremovable base
    /// point at the singularity. The scroll construction applies either way.
    pub fn is_standard(&self) -> bool {
        self.sheaf.base().contains(self.step() as i64)
    }

    /// The 2 x h1 multiplication matrix in canonical coordinate indices.
    pub fn matrix(&self) -> Result<PencilMatrix> {
        let cols = self.sheaf.hom_omega_exponents();
        if cols.is_empty() {
            return Err(Error::EmptyDual);
        }
        let coords = canonical_exponents(self.sheaf.base())?;
        let index_of = |e: u64| -> usize {
            coords
                .binary_search(&e)
                .unwrap_or_else(|_| panic!("exponent {e} is not a canonical coordinate"))
        };
        let row = |shift: u64| -> (Vec<u64>, Vec<usize>) {
            let exps: Vec<u64> = cols.iter().map(|&j| j + shift).collect();
            let idx = exps.iter().map(|&e| index_of(e)).collect();
            (exps, idx)
        };
        let (top_exps, top) = row(self.u);
        let (bot_exps, bot) = row(self.v);
        Ok(PencilMatrix {
            column_exponents: cols,
            row_exponents: [top_exps, bot_exps],
            rows: [top, bot],
        })
    }

    /// Scroll type swept out by this pencil around the canonical model.
    pub fn scroll_type(&self) -> Result<ScrollType> {
        let cols = self.sheaf.hom_omega_exponents();
        if cols.is_empty() {
            return Err(Error::EmptyDual);
        }
        let dim = self.sheaf.scrollar_dimension()?;
        let step = self.step();
        let mut invariants: Vec<u64> = Vec::new();
        for &c in &cols {
            let starts_chain = c
                .checked_sub(step)
                .is_none_or(|p| cols.binary_search(&p).is_err());
            if starts_chain {
                let mut len = 1u64;
                while cols.binary_search(&(c + len * step)).is_ok() {
                    len += 1;
                }
                invariants.push(len);
            }
        }
        let h1 = self.sheaf.h1() as u64;
        let total: u64 = invariants.iter().sum();
        if total != h1 {
            return Err(Error::ChainConsistency(format!(
                "chain lengths sum to {total}, dual dimension is {h1}"
            )));
        }
        if invariants.len() as u64 > dim {
            return Err(Error::ChainConsistency(format!(
                "{} chains exceed scrollar dimension {dim}",
                invariants.len()
            )));
        }
        invariants.resize(dim as usize, 0);
        invariants.sort_unstable_by(|a, b| b.cmp(a));
        let ambient = total + dim - 1;
        let genus = self.sheaf.base().genus() as u64;
        if ambient != genus - 1 {
            return Err(Error::ChainConsistency(format!(
                "ambient dimension {ambient} differs from genus - 1 = {}",
                genus - 1
            )));
        }
        Ok(ScrollType {
            invariants,
            dim,
            degree: total,
            ambient,
        })
    }
}

/// The 2 x h1 matrix of canonical coordinates attached to a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilMatrix {
    /// Dual-module exponents indexing the columns, ascending.
    pub column_exponents: Vec<u64>,
    /// Exponent content of each row: column exponent plus `u`, resp. `v`.
    pub row_exponents: [Vec<u64>; 2],
    /// The same rows as indices into `canonical_exponents`.
    pub rows: [Vec<usize>; 2],
}

impl fmt::Display for PencilMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| {
            r.iter()
                .map(|k| format!("x{k}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[[{}],[{}]]", row(&self.rows[0]), row(&self.rows[1]))
    }
}

/// A rational normal scroll `S(m1,...,md)` in its ambient projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollType {
    /// Invariants `m1 >= ... >= md >= 0`.
    pub invariants: Vec<u64>,
    pub dim: u64,
    /// Degree of the scroll, the sum of the invariants.
    pub degree: u64,
    /// Ambient projective dimension `degree + dim - 1`.
    pub ambient: u64,
}

impl fmt::Display for ScrollType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = self
            .invariants
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "S({inv}) in P^{}", self.ambient)
    }
}

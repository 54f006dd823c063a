//! Rank-1 torsion-free sheaves generated by monomial sections.
//!
//! A sheaf `O<1, t^a1, ..., t^an>` on a monomial curve is determined by its
//! value ideal `V = S u (a1+S) u ... u (an+S)` together with the top exponent
//! `a_max`, which fixes the stalk at the point at infinity. All cohomological
//! invariants are finite window counts:
//!
//! * `h0 = #(V in [0, a_max])`
//! * `h1 = #{gaps l > a_max with l not in V}`
//! * `deg = a_max + #(V \ S)`
//!
//! The Clifford index is computed both from the definition
//! `deg - 2(h0 - 1)` and from the window-count formula over the gap/member
//! partition; the two routes must agree and the constructor asserts it.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;

/// All cached per-sheaf invariants.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SheafInvariants {
    pub h0: usize,
    pub h1: usize,
    pub degree: u64,
    pub clifford: i64,
    /// `deg - (h0 - 1)`; only defined once the sheaf spans a pencil.
    pub scrollar_dim: Option<u64>,
    pub invertible: bool,
    pub contributes_clifford: bool,
    pub base_point_free: bool,
}

/// Identifies a sheaf up to equality of stalks: the value-ideal window plus
/// the top exponent.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SheafKey {
    pub ideal_words: Vec<u64>,
    pub a_max: u64,
}

/// An immutable monomial sheaf; the generator `1 = t^0` is implicit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialSheaf {
    base: Arc<NumericalSemigroup>,
    exponents: Vec<u64>,
    value_ideal: ValueIdeal,
    a_max: u64,
    invariants: SheafInvariants,
}

impl MonomialSheaf {
    /// Builds the sheaf generated by `1` and the given exponents. When a
    /// non-positive exponent is present the whole list is shifted by the
    /// minimum, and zeros are dropped; the empty list gives the structure
    /// sheaf. Normalization is total: duplicates are merged and the result
    /// is canonical in its exponent set.
    pub fn new(base: &Arc<NumericalSemigroup>, exponents: &[i64]) -> Self {
        let mut exps: Vec<i64> = exponents.to_vec();
        exps.sort_unstable();
        exps.dedup();
        let shift = match exps.first() {
            Some(&m) if m <= 0 => -m,
            _ => 0,
        };
        let exps: Vec<u64> = exps
            .iter()
            .map(|&a| (a + shift) as u64)
            .filter(|&a| a > 0)
            .collect();
        Self::from_normalized(base, exps)
    }

    pub fn structure(base: &Arc<NumericalSemigroup>) -> Self {
        Self::from_normalized(base, Vec::new())
    }

    pub(crate) fn from_normalized(base: &Arc<NumericalSemigroup>, exps: Vec<u64>) -> Self {
        debug_assert!(exps.windows(2).all(|w| w[0] < w[1]));
        let a_max = exps.last().copied().unwrap_or(0);
        let value_ideal = ValueIdeal::from_shifts(base, &exps);
        let invariants = compute_invariants(base, &value_ideal, a_max);
        MonomialSheaf {
            base: base.clone(),
            exponents: exps,
            value_ideal,
            a_max,
            invariants,
        }
    }

    pub fn base(&self) -> &Arc<NumericalSemigroup> {
        &self.base
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn value_ideal(&self) -> &ValueIdeal {
        &self.value_ideal
    }

    pub fn a_max(&self) -> u64 {
        self.a_max
    }

    pub fn invariants(&self) -> &SheafInvariants {
        &self.invariants
    }

    pub fn h0(&self) -> usize {
        self.invariants.h0
    }

    pub fn h1(&self) -> usize {
        self.invariants.h1
    }

    pub fn degree(&self) -> u64 {
        self.invariants.degree
    }

    pub fn clifford_index(&self) -> i64 {
        self.invariants.clifford
    }

    pub fn contributes_clifford(&self) -> bool {
        self.invariants.contributes_clifford
    }

    pub fn is_invertible(&self) -> bool {
        self.invariants.invertible
    }

    /// Sheaves generated by monomial global sections are base point free
    /// exactly when the stalk at the singular point is free.
    pub fn is_base_point_free(&self) -> bool {
        self.invariants.base_point_free
    }

    pub fn scrollar_dimension(&self) -> Result<u64> {
        self.invariants
            .scrollar_dim
            .ok_or(Error::NotAPencilSource {
                h0: self.invariants.h0,
            })
    }

    /// Exponents of the dual module `Hom(F, omega)` in canonical
    /// coordinates: the sorted set `frobenius - G'` where `G'` collects the
    /// gaps above `a_max` outside the value ideal.
    pub fn hom_omega_exponents(&self) -> Vec<u64> {
        let frob = self.base.frobenius();
        let mut out: Vec<u64> = self
            .base
            .gaps()
            .iter()
            .copied()
            .filter(|&l| l > self.a_max && !self.value_ideal.contains(l as i64))
            .map(|l| (frob - l as i64) as u64)
            .collect();
        out.sort_unstable();
        out
    }

    /// Exponents of the global sections in `[0, a_max]`, zero included.
    pub fn section_exponents(&self) -> Vec<u64> {
        self.value_ideal.members_upto(self.a_max)
    }

    /// Equality-of-stalks key: two sheaves with the same key have identical
    /// invariants even if their generator lists differ.
    pub fn dedup_key(&self) -> SheafKey {
        SheafKey {
            ideal_words: self.value_ideal.mask().words().to_vec(),
            a_max: self.a_max,
        }
    }
}

impl fmt::Display for MonomialSheaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O<1")?;
        for &a in &self.exponents {
            if a == 1 {
                write!(f, ",t")?;
            } else {
                write!(f, ",t^{a}")?;
            }
        }
        write!(f, ">")
    }
}

fn compute_invariants(
    base: &NumericalSemigroup,
    ideal: &ValueIdeal,
    a_max: u64,
) -> SheafInvariants {
    let genus = base.genus();
    let beta = base.conductor();
    let mask = ideal.mask();

    // h0: window count up to a_max, plus the tail when a_max passes it
    let window_hi = a_max.min(beta);
    let h0 = mask.count_range(0, window_hi as usize + 1) + a_max.saturating_sub(beta) as usize;

    let h1 = base
        .gaps()
        .iter()
        .filter(|&&l| l > a_max && !mask.get(l as usize))
        .count();

    let extra: usize = base
        .gaps()
        .iter()
        .filter(|&&l| mask.get(l as usize))
        .count();
    let degree = a_max + extra as u64;

    let clifford = degree as i64 - 2 * (h0 as i64 - 1);

    // Independent window-count route for the Clifford index.
    let gaps_outside_upto = base
        .gaps()
        .iter()
        .filter(|&&l| l <= a_max && !mask.get(l as usize))
        .count() as i64;
    let members_upto = (1..=a_max.min(beta))
        .filter(|&x| base.contains(x as i64))
        .count() as i64
        + a_max.saturating_sub(beta) as i64;
    let extra_above = base
        .gaps()
        .iter()
        .filter(|&&l| l > a_max && mask.get(l as usize))
        .count() as i64;
    let formula = gaps_outside_upto - members_upto + extra_above;
    assert_eq!(
        clifford, formula,
        "Clifford index routes disagree for a_max={a_max} over {base}"
    );

    let invertible = ideal.is_structure();
    if invertible {
        let gaps_upto = base.gaps().iter().filter(|&&l| l <= a_max).count() as i64;
        assert_eq!(clifford, gaps_upto - members_upto);
    }

    // Riemann-Roch, reserved as a cross-check: h1 is counted from the gap
    // set, never derived from it.
    assert_eq!(
        h0 as i64 - h1 as i64,
        degree as i64 - genus as i64 + 1,
        "Riemann-Roch violated for a_max={a_max} over {base}"
    );

    SheafInvariants {
        h0,
        h1,
        degree,
        clifford,
        scrollar_dim: (h0 >= 2).then(|| degree + 1 - h0 as u64),
        invertible,
        contributes_clifford: h0 >= 2 && h1 >= 2,
        base_point_free: invertible,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semi(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    fn sheaf(gens: &[u64], exps: &[i64]) -> MonomialSheaf {
        MonomialSheaf::new(&semi(gens), exps)
    }

    #[test]
    fn plane_degree_ten_sheaf() {
        let f = sheaf(&[5, 6], &[4, 5, 6]);
        assert_eq!(f.h0(), 4);
        assert_eq!(f.h1(), 3);
        assert_eq!(f.degree(), 10);
        assert_eq!(f.clifford_index(), 4);
        assert_eq!(f.scrollar_dimension().unwrap(), 7);
        assert_eq!(f.hom_omega_exponents(), vec![6, 11, 12]);
        assert!(f.contributes_clifford());
        assert!(!f.is_invertible());
        assert_eq!(f.to_string(), "O<1,t^4,t^5,t^6>");
    }

    #[test]
    fn non_gorenstein_sheaf() {
        let s = Arc::new(NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 7, 8, 11]).unwrap());
        let f = MonomialSheaf::new(&s, &[3, 4, 6]);
        assert_eq!(f.h0(), 4);
        assert_eq!(f.h1(), 2);
        assert_eq!(f.degree(), 8);
        assert_eq!(f.scrollar_dimension().unwrap(), 5);
        assert_eq!(f.hom_omega_exponents(), vec![0, 3]);
    }

    #[test]
    fn structure_sheaf() {
        let s = semi(&[5, 6]);
        let o = MonomialSheaf::structure(&s);
        assert_eq!(o.h0(), 1);
        assert_eq!(o.h1(), 10);
        assert_eq!(o.degree(), 0);
        assert_eq!(o.clifford_index(), 0);
        assert!(o.scrollar_dimension().is_err());
        assert!(o.is_invertible());
        assert!(!o.contributes_clifford());
        // dual of the structure sheaf is the full canonical coordinate set
        assert_eq!(o.hom_omega_exponents().len(), 10);
        assert_eq!(o.to_string(), "O<1>");
    }

    #[test]
    fn invertible_triple_generator() {
        let f = sheaf(&[6, 8, 9], &[6, 8, 9]);
        assert!(f.is_invertible());
        assert!(f.is_base_point_free());
        assert_eq!(f.h0(), 4);
        assert_eq!(f.h1(), 4);
        assert_eq!(f.degree(), 9);
        assert_eq!(f.clifford_index(), 3);
        let g = sheaf(&[6, 8, 9], &[1]);
        assert!(!g.is_invertible());
    }

    #[test]
    fn pencil_examples() {
        let f = sheaf(&[5, 9, 13, 17, 21], &[4, 5]);
        assert_eq!(f.h0(), 3);
        assert_eq!(f.degree(), 6);
        assert_eq!(f.clifford_index(), 2);

        let bpf = sheaf(&[5, 6], &[5]);
        assert!(bpf.is_base_point_free());
        let bp = sheaf(&[5, 6], &[1]);
        assert!(!bp.is_base_point_free());
        let nb = sheaf(&[5, 9, 13, 17, 21], &[4]);
        assert!(!nb.is_base_point_free());
    }

    #[test]
    fn normalization() {
        let s = semi(&[5, 6]);
        // shifted input: subtract the minimum, drop the zero
        let f = MonomialSheaf::new(&s, &[-2, 3]);
        assert_eq!(f.exponents(), &[5]);
        // zero alone collapses to the structure sheaf
        let o = MonomialSheaf::new(&s, &[0]);
        assert_eq!(o.exponents(), &[] as &[u64]);
        // duplicates are merged
        let g = MonomialSheaf::new(&s, &[4, 4, 6]);
        assert_eq!(g.exponents(), &[4, 6]);
        // same normalized exponents, identical sheaves
        assert_eq!(MonomialSheaf::new(&s, &[6, 4]), MonomialSheaf::new(&s, &[4, 6]));
    }

    #[test]
    fn dedup_key_identifies_redundant_generators() {
        let s = semi(&[6, 8, 9]);
        let a = MonomialSheaf::new(&s, &[6, 8, 9]);
        let b = MonomialSheaf::new(&s, &[9]);
        assert_eq!(a.dedup_key(), b.dedup_key());
        assert_eq!(a.invariants(), b.invariants());
        assert_eq!(a.section_exponents(), vec![0, 6, 8, 9]);
    }

    #[test]
    fn top_exponent_beyond_frobenius() {
        let s = semi(&[5, 6]);
        let f = MonomialSheaf::new(&s, &[25]);
        assert_eq!(f.h0(), 16);
        assert_eq!(f.h1(), 0);
        assert_eq!(f.degree(), 25);
        assert!(!f.contributes_clifford());
        assert!(f.hom_omega_exponents().is_empty());
    }
}

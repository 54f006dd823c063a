//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal is a set `V` of integers with `V + S` contained in `V`.
//! All ideals handled here live inside the naturals and contain the tail
//! `[conductor, infinity)`, so a membership window `[0, conductor]` plus the
//! tail rule describes them completely. The ideals that carry sheaf data
//! additionally satisfy `S` contained in `V` and `0` in `V`; set differences
//! such as the dual module computation may drop that containment.

use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// An ideal `V` over a fixed base semigroup, truncated at the conductor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ValueIdeal {
    base: Arc<NumericalSemigroup>,
    /// Membership over `[0, conductor]`; everything above is a member.
    mask: Bits,
    /// Smallest `t` with `[t, infinity)` fully contained in `V`.
    tail_start: u64,
    /// Minimal generators as an `S`-module: elements not of the form
    /// `s + v` with `s` a nonzero member of `S` and `v` in `V`.
    min_generators: Vec<u64>,
}

impl ValueIdeal {
    /// The semigroup itself, viewed as an ideal (the structure sheaf stalk).
    pub fn structure(base: &Arc<NumericalSemigroup>) -> Self {
        Self::from_mask(base.clone(), base.members_window().clone())
    }

    /// The standard canonical ideal `K = {a | frobenius - a not in S}`,
    /// truncated to the naturals. Contains `S`, with equality on the window
    /// exactly when `S` is symmetric.
    pub fn canonical(base: &Arc<NumericalSemigroup>) -> Self {
        let beta = base.conductor();
        let frob = base.frobenius();
        let mut mask = Bits::new(beta as usize + 1);
        for a in 0..=beta {
            if !base.contains(frob - a as i64) {
                mask.set(a as usize);
            }
        }
        Self::from_mask(base.clone(), mask)
    }

    /// `S` together with the shifted copies `a + S` for each exponent.
    pub fn from_shifts(base: &Arc<NumericalSemigroup>, exponents: &[u64]) -> Self {
        let mut mask = base.members_window().clone();
        let window = base.members_window();
        for &a in exponents {
            mask.or_shifted(window, a as usize);
        }
        Self::from_mask(base.clone(), mask)
    }

    /// `S` with a chosen subset of gaps adjoined; fails when the result is
    /// not closed under adding members of `S`.
    pub fn from_gap_subset(base: &Arc<NumericalSemigroup>, included: &[u64]) -> Result<Self> {
        let frob = base.frobenius();
        let mut mask = base.members_window().clone();
        for &t in included {
            if t as i64 > frob || base.contains(t as i64) {
                return Err(Error::NotAnIdeal { element: t, shift: 0 });
            }
            mask.set(t as usize);
        }
        for &t in included {
            for s in 1..=(frob as u64).saturating_sub(t) {
                if base.contains(s as i64) && !mask.get((t + s) as usize) {
                    return Err(Error::NotAnIdeal { element: t, shift: s });
                }
            }
        }
        Ok(Self::from_mask(base.clone(), mask))
    }

    /// The difference ideal `A - B = {z | z + B inside A}`, truncated to the
    /// naturals.
    pub fn difference(a: &Self, b: &Self) -> Result<Self> {
        if a.base != b.base {
            return Err(Error::BaseMismatch);
        }
        let beta = a.base.conductor();
        let mut mask = Bits::new(beta as usize + 1);
        'z: for z in 0..=beta {
            // members of B at or above the conductor land in the tail of A
            for bb in 0..beta {
                if b.contains(bb as i64) && !a.contains((z + bb) as i64) {
                    continue 'z;
                }
            }
            mask.set(z as usize);
        }
        Ok(Self::from_mask(a.base.clone(), mask))
    }

    fn from_mask(base: Arc<NumericalSemigroup>, mask: Bits) -> Self {
        let beta = base.conductor();
        debug_assert!(mask.get(beta as usize), "conductor tail must be present");
        let mut tail_start = beta;
        while tail_start > 0 && mask.get(tail_start as usize - 1) {
            tail_start -= 1;
        }
        let mut ideal = ValueIdeal {
            base,
            mask,
            tail_start,
            min_generators: Vec::new(),
        };
        ideal.min_generators = ideal.compute_min_generators();
        ideal
    }

    fn compute_min_generators(&self) -> Vec<u64> {
        let alpha = self.base.multiplicity();
        let hi = self.base.conductor() + alpha;
        let mut gens = Vec::new();
        for v in 0..hi {
            if !self.contains(v as i64) {
                continue;
            }
            let reducible = (alpha..=v.saturating_sub(0))
                .filter(|&s| s <= v)
                .any(|s| self.base.contains(s as i64) && self.contains((v - s) as i64));
            if !reducible {
                gens.push(v);
            }
        }
        gens
    }

    pub fn base(&self) -> &Arc<NumericalSemigroup> {
        &self.base
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n as u64 >= self.base.conductor() {
            return true;
        }
        self.mask.get(n as usize)
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    pub fn tail_start(&self) -> u64 {
        self.tail_start
    }

    /// Gaps of the base semigroup that belong to `V`, i.e. `V \ S` when
    /// `S` is contained in `V`.
    pub fn gap_members(&self) -> Vec<u64> {
        self.base
            .gaps()
            .iter()
            .copied()
            .filter(|&l| self.mask.get(l as usize))
            .collect()
    }

    /// True when `V` equals the base semigroup.
    pub fn is_structure(&self) -> bool {
        self.mask == *self.base.members_window()
    }

    /// Elements of `V` in `[0, hi]`, ascending.
    pub fn members_upto(&self, hi: u64) -> Vec<u64> {
        (0..=hi).filter(|&n| self.contains(n as i64)).collect()
    }

    pub(crate) fn mask(&self) -> &Bits {
        &self.mask
    }
}

/// Visits, as packed gap subsets, every `T` with `S + T` inside `S u T`,
/// in lexicographic order of the included-gap lists (gaps ascending). Bit
/// `i` of the mask corresponds to the `i`-th smallest gap.
///
/// Including a gap forces every gap reachable from it by adding a nonzero
/// member, so the walk carries a "forced" set and prunes branches that skip
/// a forced gap. Every visited node extends to at least one valid ideal,
/// which keeps the walk proportional to the output.
pub(crate) fn visit_ideal_gap_subsets<F: FnMut(u128)>(s: &NumericalSemigroup, mut f: F) {
    let gaps = s.gaps();
    let n = gaps.len();
    assert!(n <= 128, "ideal enumeration supports genus <= 128");
    if n == 0 {
        f(0);
        return;
    }
    let frob = s.frobenius() as u64;
    let mut gap_index = vec![usize::MAX; frob as usize + 1];
    for (i, &l) in gaps.iter().enumerate() {
        gap_index[l as usize] = i;
    }
    let mut forced_tbl = vec![0u128; n];
    for (i, &l) in gaps.iter().enumerate() {
        for t in l + 1..=frob {
            if s.contains((t - l) as i64) && !s.contains(t as i64) {
                forced_tbl[i] |= 1 << gap_index[t as usize];
            }
        }
    }

    // stack entries: (next gap index to decide, included, forced)
    let mut stack: Vec<(usize, u128, u128)> = vec![(0, 0, 0)];
    while let Some((start, included, forced)) = stack.pop() {
        let bound = if forced == 0 {
            f(included);
            n - 1
        } else {
            forced.trailing_zeros() as usize
        };
        let mut j = bound + 1;
        while j > start {
            j -= 1;
            let nf = (forced & !(1 << j)) | forced_tbl[j];
            stack.push((j + 1, included | (1 << j), nf));
        }
    }
}

/// Streams every relative ideal `V` with `S` inside `V` inside the naturals,
/// each exactly once, ordered lexicographically by the list of adjoined gaps.
pub fn enumerate_ideals(
    base: &Arc<NumericalSemigroup>,
) -> impl Iterator<Item = ValueIdeal> + use<> {
    // The subsets are collected eagerly; solvers use the streaming visitor.
    let mut subsets = Vec::new();
    visit_ideal_gap_subsets(base, |t| subsets.push(t));
    let base = base.clone();
    subsets.into_iter().map(move |t| {
        let gaps = base.gaps();
        let included: Vec<u64> = (0..gaps.len())
            .filter(|&i| t >> i & 1 == 1)
            .map(|i| gaps[i])
            .collect();
        ValueIdeal::from_gap_subset(&base, &included)
            .expect("enumerated gap subsets are closed by construction")
    })
}

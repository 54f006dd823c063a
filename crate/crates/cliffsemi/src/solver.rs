//! Global minimizations over the monomial sheaf space of one curve:
//! gonality, Clifford index, Clifford dimension, trigonality and the
//! theorem-backed relation checks between them.
//!
//! The Clifford search runs over pairs `(V, a_max)` where `V` is a relative
//! ideal containing `S` and `a_max` ranges over the members of `V` between
//! the largest minimal generator of `V` and `frobenius - 1`. Every monomial
//! sheaf whose dual has dimension at least two is equivalent, stalk for
//! stalk, to exactly one such pair: redundant generators below the top one
//! change nothing, while a redundant top generator changes both the stalk at
//! infinity and `h0`. The brute-force oracle below re-derives the same
//! minimum from raw exponent subsets and exists to validate this reduction.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::visit_ideal_gap_subsets;
use crate::semigroup::NumericalSemigroup;
use crate::sheaf::MonomialSheaf;

/// Minimal pencil degree together with every exponent attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GonalityResult {
    pub gonality: u64,
    /// All `a` with `deg O<1,t^a> = gonality`, ascending.
    pub witnesses: Vec<u64>,
}

/// Minimal pencil degree: `min over a >= 1 of a + #((a+S) \ S)`.
pub fn gonality(s: &NumericalSemigroup) -> Result<GonalityResult> {
    if s.is_smooth() {
        return Err(Error::SmoothCurve);
    }
    let beta = s.conductor();
    let degree_of = |a: u64| {
        a + (0..beta)
            .filter(|&x| s.contains(x as i64) && !s.contains((x + a) as i64))
            .count() as u64
    };
    // a = multiplicity realizes degree = multiplicity, and no a above the
    // current best can win since the degree is at least a.
    let mut best = s.multiplicity();
    let mut degrees = Vec::new();
    let mut a = 1;
    while a <= best {
        let d = degree_of(a);
        degrees.push((a, d));
        best = best.min(d);
        a += 1;
    }
    let witnesses = degrees
        .iter()
        .filter(|&&(_, d)| d == best)
        .map(|&(a, _)| a)
        .collect();
    Ok(GonalityResult {
        gonality: best,
        witnesses,
    })
}

/// One point of the canonical Clifford search space.
#[derive(Clone, Copy, Debug)]
pub struct Candidate {
    /// Adjoined gap subset of the ideal; bit `i` is the `i`-th smallest gap.
    pub gap_subset: u128,
    pub a_max: u64,
    pub h0: usize,
    pub h1: usize,
    pub degree: u64,
    pub clifford: i64,
    /// Largest minimal generator of the ideal (0 when the ideal is `S`).
    pub largest_min_generator: u64,
}

impl Candidate {
    /// Positive global-section exponents of the realized sheaf: the ideal
    /// members in `[1, a_max]`. Feeding these back through the sheaf
    /// constructor reproduces the same ideal and top exponent.
    pub fn section_exponents(&self, s: &NumericalSemigroup) -> Vec<u64> {
        section_exponents_of(s, self.gap_subset, self.a_max)
    }
}

fn section_exponents_of(s: &NumericalSemigroup, gap_subset: u128, a_max: u64) -> Vec<u64> {
    let gaps = s.gaps();
    (1..=a_max)
        .filter(|&x| {
            s.contains(x as i64)
                || gaps
                    .binary_search(&x)
                    .is_ok_and(|i| gap_subset >> i & 1 == 1)
        })
        .collect()
}

/// Walks every `(ideal, top exponent)` pair with the top exponent below the
/// Frobenius number, in deterministic order: ideals lexicographic by their
/// adjoined gap list, exponents ascending within each ideal.
pub fn visit_candidates<F: FnMut(&Candidate)>(s: &NumericalSemigroup, mut f: F) {
    if s.is_smooth() {
        return;
    }
    let frob = s.frobenius() as u64;
    let beta = s.conductor() as usize;
    let genus = s.genus();
    let gaps = s.gaps().to_vec();
    let members_pos: Vec<u64> = (1..beta as u64)
        .filter(|&x| s.contains(x as i64))
        .collect();
    let mut base_mem = vec![false; beta + 1];
    for (x, slot) in base_mem.iter_mut().enumerate() {
        *slot = s.contains(x as i64);
    }

    let mut v = vec![false; beta + 1];
    visit_ideal_gap_subsets(s, |t| {
        v.copy_from_slice(&base_mem);
        let mut extra = 0usize;
        for (i, &l) in gaps.iter().enumerate() {
            if t >> i & 1 == 1 {
                v[l as usize] = true;
                extra += 1;
            }
        }
        // Largest minimal generator: the largest adjoined gap that is not a
        // nonzero member plus an ideal element.
        let mut m_max = 0u64;
        for i in (0..gaps.len()).rev() {
            if t >> i & 1 == 0 {
                continue;
            }
            let l = gaps[i];
            let reducible = members_pos
                .iter()
                .take_while(|&&m| m <= l)
                .any(|&m| v[(l - m) as usize]);
            if !reducible {
                m_max = l;
                break;
            }
        }

        let mut in_v_below = 0usize; // #(V in [1, a])
        let mut out_above = genus - extra; // #{gaps above a outside V}
        for a in 1..frob {
            if v[a as usize] {
                in_v_below += 1;
            } else {
                out_above -= 1;
            }
            if v[a as usize] && a >= m_max {
                let h0 = 1 + in_v_below;
                let degree = a + extra as u64;
                f(&Candidate {
                    gap_subset: t,
                    a_max: a,
                    h0,
                    h1: out_above,
                    degree,
                    clifford: degree as i64 - 2 * (h0 as i64 - 1),
                    largest_min_generator: m_max,
                });
            }
        }
    });
}

/// Result of the Clifford minimization over one curve.
#[derive(Clone, Debug)]
pub struct CliffordOutcome {
    pub clifford: i64,
    /// `min h0 - 1` over the computing sheaves.
    pub clifford_dimension: usize,
    /// Every sheaf achieving the minimum, sorted by exponent list.
    pub computing: Vec<MonomialSheaf>,
    /// The computing sheaves of minimal `h0`: the dimension witnesses.
    pub witnesses: Vec<MonomialSheaf>,
}

impl CliffordOutcome {
    /// Same value, same dimension, same computing sheaves up to stalk
    /// equality (the dedup key).
    pub fn agrees_with(&self, other: &CliffordOutcome) -> bool {
        let keys = |list: &[MonomialSheaf]| {
            list.iter().map(|f| f.dedup_key()).collect::<BTreeSet<_>>()
        };
        self.clifford == other.clifford
            && self.clifford_dimension == other.clifford_dimension
            && keys(&self.computing) == keys(&other.computing)
            && keys(&self.witnesses) == keys(&other.witnesses)
    }
}

/// Exhaustive Clifford index and dimension of the curve.
///
/// Genus at most 3 is a degenerate regime: a contributing sheaf exists only
/// in the gonality-2 case, where the index is 0 with dimension 1; otherwise
/// the invariant is undefined.
pub fn clifford_of_curve(s: &Arc<NumericalSemigroup>) -> Result<CliffordOutcome> {
    if s.is_smooth() {
        return Err(Error::SmoothCurve);
    }
    let gon = gonality(s)?;
    if s.genus() <= 3 {
        return small_genus_outcome(s, &gon);
    }

    let mut best: Option<i64> = None;
    let mut winners: Vec<(u128, u64)> = Vec::new();
    visit_candidates(s, |c| {
        if c.h0 >= 2 && c.h1 >= 2 {
            if best.is_none_or(|b| c.clifford < b) {
                best = Some(c.clifford);
                winners.clear();
            }
            if best == Some(c.clifford) {
                winners.push((c.gap_subset, c.a_max));
            }
        }
    });
    let Some(clifford) = best else {
        return Err(Error::CliffordUndefined {
            genus: s.genus(),
            gonality: gon.gonality,
        });
    };
    let computing = materialize(s, clifford, winners);
    Ok(outcome_from_computing(clifford, computing))
}

fn small_genus_outcome(
    s: &Arc<NumericalSemigroup>,
    gon: &GonalityResult,
) -> Result<CliffordOutcome> {
    if gon.gonality != 2 {
        return Err(Error::CliffordUndefined {
            genus: s.genus(),
            gonality: gon.gonality,
        });
    }
    let computing: Vec<MonomialSheaf> = gon
        .witnesses
        .iter()
        .map(|&a| MonomialSheaf::new(s, &[a as i64]))
        .filter(|f| f.contributes_clifford() && f.clifford_index() == 0)
        .collect();
    Ok(CliffordOutcome {
        clifford: 0,
        clifford_dimension: 1,
        witnesses: computing.clone(),
        computing,
    })
}

fn materialize(
    s: &Arc<NumericalSemigroup>,
    clifford: i64,
    winners: Vec<(u128, u64)>,
) -> Vec<MonomialSheaf> {
    let mut sheaves: Vec<MonomialSheaf> = winners
        .into_iter()
        .map(|(gap_subset, a_max)| {
            let exps = section_exponents_of(s, gap_subset, a_max);
            let sheaf = MonomialSheaf::from_normalized(s, exps);
            assert_eq!(sheaf.clifford_index(), clifford, "search/sheaf mismatch");
            assert!(sheaf.contributes_clifford(), "non-contributing winner");
            sheaf
        })
        .collect();
    sheaves.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    sheaves
}

fn outcome_from_computing(clifford: i64, computing: Vec<MonomialSheaf>) -> CliffordOutcome {
    let min_h0 = computing.iter().map(|f| f.h0()).min().expect("nonempty");
    let witnesses = computing
        .iter()
        .filter(|f| f.h0() == min_h0)
        .cloned()
        .collect();
    CliffordOutcome {
        clifford,
        clifford_dimension: min_h0 - 1,
        computing,
        witnesses,
    }
}

/// Naive re-derivation of the Clifford minimum from raw exponent subsets
/// `A` of `[1, frobenius - 1]` with at most `max_extra_generators` elements.
/// Must agree with [`clifford_of_curve`] whenever the cap is at least the
/// genus. Guarded to genus 12 to keep the subset space bounded.
pub fn clifford_brute_oracle(
    s: &Arc<NumericalSemigroup>,
    max_extra_generators: usize,
) -> Result<CliffordOutcome> {
    if s.genus() > 12 {
        return Err(Error::GenusTooLarge {
            genus: s.genus(),
            max: 12,
        });
    }
    if s.is_smooth() {
        return Err(Error::SmoothCurve);
    }
    let gon = gonality(s)?;
    if s.genus() <= 3 {
        return small_genus_outcome(s, &gon);
    }

    let frob = s.frobenius() as u64;
    let width = (frob - 1) as usize; // exponents 1..=frob-1
    assert!(width < 32, "oracle subset space exceeds u32");
    let base: Vec<bool> = (0..=frob).map(|x| s.contains(x as i64)).collect();
    let gaps: Vec<u64> = s.gaps().to_vec();

    let mut best: Option<i64> = None;
    let mut winners: BTreeSet<(u128, u64)> = BTreeSet::new();
    let mut v = vec![false; frob as usize + 1];
    for m in 1u32..1u32 << width {
        if m.count_ones() as usize > max_extra_generators {
            continue;
        }
        let a_max = 32 - m.leading_zeros() as u64; // highest exponent = top bit + 1
        v.copy_from_slice(&base);
        for i in 0..width {
            if m >> i & 1 == 1 {
                let a = i as u64 + 1;
                for x in a..=frob {
                    if base[(x - a) as usize] {
                        v[x as usize] = true;
                    }
                }
            }
        }
        let h0 = (0..=a_max).filter(|&x| v[x as usize]).count();
        let h1 = gaps.iter().filter(|&&l| l > a_max && !v[l as usize]).count();
        if h0 < 2 || h1 < 2 {
            continue;
        }
        let extra = gaps.iter().filter(|&&l| v[l as usize]).count();
        let degree = a_max + extra as u64;
        let cliff = degree as i64 - 2 * (h0 as i64 - 1);
        if best.is_none_or(|b| cliff < b) {
            best = Some(cliff);
            winners.clear();
        }
        if best == Some(cliff) {
            let mut packed: u128 = 0;
            for (x, &inv) in v.iter().enumerate() {
                if inv {
                    packed |= 1 << x;
                }
            }
            winners.insert((packed, a_max));
        }
    }
    let Some(clifford) = best else {
        return Err(Error::CliffordUndefined {
            genus: s.genus(),
            gonality: gon.gonality,
        });
    };
    let mut computing: Vec<MonomialSheaf> = winners
        .into_iter()
        .map(|(packed, a_max)| {
            let exps: Vec<u64> = (1..=a_max).filter(|&x| packed >> x & 1 == 1).collect();
            let sheaf = MonomialSheaf::from_normalized(s, exps);
            assert_eq!(sheaf.clifford_index(), clifford, "oracle/sheaf mismatch");
            sheaf
        })
        .collect();
    computing.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    Ok(outcome_from_computing(clifford, computing))
}

/// Shape classification of trigonal curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TrigonalClass {
    /// `S = {0} u [alpha, alpha+k] u [alpha+k+ell, inf)` with `ell >= 2`.
    PatternI { alpha: u64, k: u64, ell: u64 },
    /// `S = {0, alpha, alpha+2, ..., alpha+2(k-1)} u [alpha+2k, inf)`.
    PatternII { alpha: u64, k: u64 },
    /// Multiplicity 3 with a gap after it.
    PatternIII,
    NotTrigonal,
    GonalityLeTwo,
}

impl TrigonalClass {
    pub fn is_trigonal(&self) -> bool {
        matches!(
            self,
            TrigonalClass::PatternI { .. }
                | TrigonalClass::PatternII { .. }
                | TrigonalClass::PatternIII
        )
    }
}

impl std::fmt::Display for TrigonalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TrigonalClass::PatternI { alpha, k, ell } => {
                write!(f, "I(alpha={alpha} k={k} ell={ell})")
            }
            TrigonalClass::PatternII { alpha, k } => write!(f, "II(alpha={alpha} k={k})"),
            TrigonalClass::PatternIII => write!(f, "III"),
            TrigonalClass::NotTrigonal => write!(f, "not_trigonal"),
            TrigonalClass::GonalityLeTwo => write!(f, "gonality_le_2"),
        }
    }
}

/// Matches the semigroup against the three trigonal shapes. Agrees with
/// `gonality(s) == 3` exactly when the result is one of the patterns.
pub fn classify_trigonal(s: &NumericalSemigroup) -> Result<TrigonalClass> {
    if s.is_smooth() {
        return Err(Error::SmoothCurve);
    }
    let alpha = s.multiplicity();
    let beta = s.conductor();
    if alpha <= 2 || alpha == beta {
        return Ok(TrigonalClass::GonalityLeTwo);
    }
    let frob = s.frobenius() as u64;
    let members: Vec<u64> = (1..=frob).filter(|&x| s.contains(x as i64)).collect();
    debug_assert!(!members.is_empty() && members[0] == alpha);

    // The step-2 shape takes precedence on the overlap with the run shape.
    let step2 = members
        .iter()
        .enumerate()
        .all(|(i, &m)| m == alpha + 2 * i as u64)
        && beta == alpha + 2 * members.len() as u64;
    if step2 {
        return Ok(TrigonalClass::PatternII {
            alpha,
            k: members.len() as u64,
        });
    }
    let run = members
        .iter()
        .enumerate()
        .all(|(i, &m)| m == alpha + i as u64);
    if run {
        let last = *members.last().unwrap();
        let ell = beta - last;
        debug_assert!(ell >= 2);
        return Ok(TrigonalClass::PatternI {
            alpha,
            k: members.len() as u64 - 1,
            ell,
        });
    }
    if alpha == 3 {
        return Ok(TrigonalClass::PatternIII);
    }
    Ok(TrigonalClass::NotTrigonal)
}

/// Expected invariants of the plane curve `<alpha, alpha+1>` of degree
/// `alpha + 1`, valid from multiplicity 4 on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurveFacts {
    pub semigroup: NumericalSemigroup,
    pub degree: u64,
    pub clifford: i64,
    pub clifford_dimension: usize,
    pub gonality: u64,
    /// Exponents of an invertible sheaf computing the Clifford index.
    pub witness_exponents: Vec<u64>,
}

pub fn plane_closed_form(alpha: u64) -> Result<PlaneCurveFacts> {
    if alpha <= 3 {
        return Err(Error::DegreeTooSmall { alpha });
    }
    let semigroup = NumericalSemigroup::from_generators(&[alpha, alpha + 1])?;
    Ok(PlaneCurveFacts {
        semigroup,
        degree: alpha + 1,
        clifford: alpha as i64 - 3,
        clifford_dimension: 2,
        gonality: alpha,
        witness_exponents: vec![alpha + 1],
    })
}

/// Expected invariants of the nonplanar family member of multiplicity
/// `alpha`: the semigroup generated by `i(alpha-1)+1` for `i = 1..=alpha`.
/// Its Clifford index is computed by non-invertible sheaves only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonplanarCurveFacts {
    pub semigroup: NumericalSemigroup,
    pub clifford: i64,
    pub clifford_dimension: usize,
}

pub fn nonplanar_family(alpha: u64) -> Result<NonplanarCurveFacts> {
    if alpha <= 3 {
        return Err(Error::DegreeTooSmall { alpha });
    }
    let gens: Vec<u64> = (1..=alpha).map(|i| i * (alpha - 1) + 1).collect();
    let semigroup = NumericalSemigroup::from_generators(&gens)?;
    Ok(NonplanarCurveFacts {
        semigroup,
        clifford: alpha as i64 - 3,
        clifford_dimension: 2,
    })
}

/// One named consistency check between computed invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Instantiates the theorem-backed relations between gonality, Clifford
/// index and Clifford dimension on computed values. Every check must hold;
/// a false entry indicates a solver bug, not unusual input.
pub fn relations_report(
    s: &NumericalSemigroup,
    gon: &GonalityResult,
    outcome: &CliffordOutcome,
) -> Vec<RelationCheck> {
    let g = s.genus() as i64;
    let gonality = gon.gonality as i64;
    let cliff = outcome.clifford;
    let cliffd = outcome.clifford_dimension as i64;

    let mut checks = vec![RelationCheck {
        name: "cliff_zero_iff_gon_two",
        holds: (cliff == 0) == (gonality == 2),
    }];
    if g >= 4 {
        checks.push(RelationCheck {
            name: "cliff_le_gon_minus_two_when_gon_lt_g",
            holds: gonality >= g || cliff <= gonality - 2,
        });
        checks.push(RelationCheck {
            name: "cliffd_one_when_cliff_eq_gon_minus_two",
            holds: !(gonality < g && cliff == gonality - 2) || cliffd == 1,
        });
        checks.push(RelationCheck {
            name: "cliff_eq_gon_minus_two_when_cliffd_one",
            holds: cliffd != 1 || cliff == gonality - 2,
        });
        checks.push(RelationCheck {
            name: "cliffd_ge_two_when_gon_eq_g",
            holds: gonality != g || cliffd >= 2,
        });
        checks.push(RelationCheck {
            name: "cliff_one_when_gon_three",
            holds: gonality != 3 || cliff == 1,
        });
        if gonality < g && cliff >= gonality - 3 {
            let exists = minimal_scroll_noncomputing_exists(s, gon.gonality);
            checks.push(RelationCheck {
                name: "minimal_scroll_beyond_gonality_iff_cliffd_two",
                holds: exists == (cliffd == 2),
            });
        }
    }
    checks
}

/// Is there a sheaf of minimal scrollar dimension `gonality - 1` whose
/// degree exceeds the gonality?
fn minimal_scroll_noncomputing_exists(s: &NumericalSemigroup, gonality: u64) -> bool {
    let mut found = false;
    visit_candidates(s, |c| {
        if !found
            && c.h0 >= 2
            && c.degree > gonality
            && c.degree + 1 - c.h0 as u64 == gonality - 1
        {
            found = true;
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semi(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    fn exps(list: &[MonomialSheaf]) -> Vec<Vec<u64>> {
        list.iter().map(|f| f.exponents().to_vec()).collect()
    }

    #[test]
    fn gonality_examples() {
        let r = gonality(&semi(&[6, 8, 9])).unwrap();
        assert_eq!(r.gonality, 6);
        // the three pencils t, t^3, t^6 all reach degree 6, and so does t^2
        assert_eq!(r.witnesses, vec![1, 2, 3, 6]);

        let r = gonality(&semi(&[5, 9, 13, 17, 21])).unwrap();
        assert_eq!((r.gonality, r.witnesses), (5, vec![1, 4, 5]));

        let r = gonality(&semi(&[5, 6])).unwrap();
        assert_eq!((r.gonality, r.witnesses), (5, vec![1, 5]));

        let r = gonality(&semi(&[3, 4, 5])).unwrap();
        assert_eq!((r.gonality, r.witnesses), (2, vec![1]));

        assert_eq!(
            gonality(&NumericalSemigroup::naturals()),
            Err(Error::SmoothCurve)
        );
    }

    #[test]
    fn clifford_exceptional_dimension_three() {
        let s = semi(&[6, 8, 9]);
        let out = clifford_of_curve(&s).unwrap();
        assert_eq!(out.clifford, 3);
        assert_eq!(out.clifford_dimension, 3);
        assert_eq!(exps(&out.witnesses), vec![vec![6, 8, 9]]);
        assert_eq!(out.computing.len(), 1);
    }

    #[test]
    fn clifford_exceptional_dimension_two() {
        let s = semi(&[5, 9, 13, 17, 21]);
        let out = clifford_of_curve(&s).unwrap();
        assert_eq!(out.clifford, 2);
        assert_eq!(out.clifford_dimension, 2);
        assert_eq!(exps(&out.witnesses), vec![vec![4, 5]]);
    }

    #[test]
    fn clifford_plane_quintic_like() {
        let s = semi(&[5, 6]);
        let out = clifford_of_curve(&s).unwrap();
        assert_eq!(out.clifford, 2);
        assert_eq!(out.clifford_dimension, 2);
        // the minimal-h0 witness is the invertible sheaf with sections 1, t^5, t^6
        assert!(out.witnesses.iter().any(|f| f.is_invertible()));
    }

    #[test]
    fn clifford_small_genus() {
        let s = semi(&[3, 4, 5]);
        let out = clifford_of_curve(&s).unwrap();
        assert_eq!(out.clifford, 0);
        assert_eq!(out.clifford_dimension, 1);

        // genus 3, gonality 3: undefined
        let s = semi(&[3, 4]);
        assert_eq!(
            clifford_of_curve(&s).unwrap_err(),
            Error::CliffordUndefined {
                genus: 3,
                gonality: 3
            }
        );
    }

    #[test]
    fn oracle_matches_on_examples() {
        for gens in [
            vec![6, 8, 9],
            vec![5, 9, 13, 17, 21],
            vec![5, 6],
            vec![4, 7, 10, 13],
        ] {
            let s = semi(&gens);
            let fast = clifford_of_curve(&s).unwrap();
            let slow = clifford_brute_oracle(&s, s.genus()).unwrap();
            assert!(fast.agrees_with(&slow), "mismatch on {s}");
        }
    }

    #[test]
    fn oracle_guard() {
        let s = semi(&[14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 27]);
        assert!(s.genus() > 12);
        assert_eq!(
            clifford_brute_oracle(&s, 5).unwrap_err(),
            Error::GenusTooLarge {
                genus: s.genus(),
                max: 12
            }
        );
    }

    #[test]
    fn trigonal_patterns() {
        // {0,4,5,7,->}
        let s = NumericalSemigroup::from_gaps(&[1, 2, 3, 6]).unwrap();
        assert_eq!(
            classify_trigonal(&s).unwrap(),
            TrigonalClass::PatternI {
                alpha: 4,
                k: 1,
                ell: 2
            }
        );
        // {0,4,6,->}
        let s = NumericalSemigroup::from_gaps(&[1, 2, 3, 5]).unwrap();
        assert_eq!(
            classify_trigonal(&s).unwrap(),
            TrigonalClass::PatternII { alpha: 4, k: 1 }
        );
        let s = NumericalSemigroup::from_generators(&[3, 7]).unwrap();
        assert_eq!(classify_trigonal(&s).unwrap(), TrigonalClass::PatternIII);
        let s = NumericalSemigroup::from_generators(&[5, 6]).unwrap();
        assert_eq!(classify_trigonal(&s).unwrap(), TrigonalClass::NotTrigonal);
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(classify_trigonal(&s).unwrap(), TrigonalClass::GonalityLeTwo);
    }

    #[test]
    fn closed_forms() {
        let p = plane_closed_form(5).unwrap();
        assert_eq!(p.clifford, 2);
        assert_eq!(p.gonality, 5);
        assert_eq!(p.clifford_dimension, 2);
        assert_eq!(plane_closed_form(3), Err(Error::DegreeTooSmall { alpha: 3 }));

        let n = nonplanar_family(4).unwrap();
        assert_eq!(n.semigroup.min_generators(), &[4, 7, 10, 13]);
        assert_eq!(n.clifford, 1);
        assert_eq!(nonplanar_family(3), Err(Error::DegreeTooSmall { alpha: 3 }));
    }

    #[test]
    fn relations_on_examples() {
        for gens in [vec![6, 8, 9], vec![5, 9, 13, 17, 21], vec![3, 4, 5]] {
            let s = semi(&gens);
            let gon = gonality(&s).unwrap();
            let out = clifford_of_curve(&s).unwrap();
            let checks = relations_report(&s, &gon, &out);
            assert!(checks.iter().all(|c| c.holds), "failed on {s}: {checks:?}");
        }
    }
}

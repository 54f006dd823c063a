//! Numerical semigroups: cofinite additive submonoids of the naturals.
//!
//! A numerical semigroup `S` is stored as its finite window of members up to
//! the conductor, together with the derived data every other module consumes:
//! the gap set `G`, the Frobenius number (largest gap), the multiplicity
//! (smallest nonzero member), the conductor and the genus `#G`. Everything
//! past the conductor is a member, so the window is a complete description.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A numerical semigroup, immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NumericalSemigroup {
    min_generators: Vec<u64>,
    gaps: Vec<u64>,
    /// Smallest `c` with `[c, infinity)` contained in `S`; 0 for the naturals.
    conductor: u64,
    multiplicity: u64,
    /// Membership over `[0, conductor]`.
    members: Bits,
}

impl NumericalSemigroup {
    /// The full monoid of naturals (genus 0).
    pub fn naturals() -> Self {
        let mut members = Bits::new(1);
        members.set(0);
        NumericalSemigroup {
            min_generators: vec![1],
            gaps: Vec::new(),
            conductor: 0,
            multiplicity: 1,
            members,
        }
    }

    /// Builds the semigroup generated by `gens`. Zeros are ignored; the
    /// remaining generators must have gcd 1 so that the complement is finite.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCofinite { gcd: g });
        }
        if gens[0] == 1 {
            return Ok(Self::naturals());
        }

        let alpha = gens[0] as usize;
        // Sieve membership until a run of `alpha` consecutive members appears;
        // from the start of that run on, every integer is a member.
        let mut mem: Vec<bool> = vec![true];
        let mut run = 0usize;
        let mut n = 0usize;
        let conductor = loop {
            if mem[n] {
                run += 1;
                if run == alpha {
                    break n + 1 - alpha;
                }
            } else {
                run = 0;
            }
            n += 1;
            let hit = gens
                .iter()
                .take_while(|&&g| (g as usize) <= n)
                .any(|&g| mem[n - g as usize]);
            mem.push(hit);
        };

        let gaps: Vec<u64> = (1..conductor).filter(|&i| !mem[i]).map(|i| i as u64).collect();
        Ok(Self::from_parts(gaps, conductor as u64))
    }

    /// Builds the semigroup whose gap set is exactly `gaps`, validating that
    /// the complement is closed under addition. On failure reports the first
    /// violating pair `(x, y)` of members with `x + y` a gap.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let mut gaps: Vec<u64> = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.is_empty() {
            return Ok(Self::naturals());
        }
        if gaps[0] == 0 {
            return Err(Error::NotASemigroup { x: 0, y: 0, sum: 0 });
        }
        let frob = *gaps.last().unwrap() as usize;
        let mut mem = vec![true; frob + 1];
        for &l in &gaps {
            mem[l as usize] = false;
        }
        for x in 1..=frob {
            if !mem[x] {
                continue;
            }
            for y in x..=frob.saturating_sub(x) {
                if mem[y] && !mem[x + y] {
                    return Err(Error::NotASemigroup {
                        x: x as u64,
                        y: y as u64,
                        sum: (x + y) as u64,
                    });
                }
            }
        }
        Ok(Self::from_parts(gaps, frob as u64 + 1))
    }

    /// Internal constructor from a known-valid gap set.
    pub(crate) fn from_gaps_unchecked(mut gaps: Vec<u64>) -> Self {
        gaps.sort_unstable();
        let conductor = gaps.last().map_or(0, |&g| g + 1);
        Self::from_parts(gaps, conductor)
    }

    fn from_parts(gaps: Vec<u64>, conductor: u64) -> Self {
        let mut members = Bits::new(conductor as usize + 1);
        let mut gap_it = gaps.iter().peekable();
        for n in 0..=conductor {
            if gap_it.peek() == Some(&&n) {
                gap_it.next();
            } else {
                members.set(n as usize);
            }
        }
        let multiplicity = if conductor == 0 {
            1
        } else {
            (1..=conductor).find(|&n| members.get(n as usize)).unwrap()
        };
        let mut s = NumericalSemigroup {
            min_generators: Vec::new(),
            gaps,
            conductor,
            multiplicity,
            members,
        };
        s.min_generators = s.compute_min_generators();
        s
    }

    fn compute_min_generators(&self) -> Vec<u64> {
        // A nonzero member is a minimal generator iff it is not the sum of
        // two nonzero members. Candidates live below conductor + multiplicity.
        let hi = self.conductor + self.multiplicity;
        let mut gens = Vec::new();
        for m in 1..=hi {
            if !self.contains(m as i64) {
                continue;
            }
            let reducible = (self.multiplicity..=m.saturating_sub(self.multiplicity))
                .any(|s| self.contains(s as i64) && self.contains((m - s) as i64));
            if !reducible {
                gens.push(m);
            }
        }
        gens
    }

    /// Membership test for any integer.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n as u64 >= self.conductor {
            return true;
        }
        self.members.get(n as usize)
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps; the singularity degree of the curve.
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Largest gap, or -1 when there is none.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Smallest nonzero member; the multiplicity of the singular point.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Genus 0 means the curve carries no singularity at all.
    pub fn is_smooth(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Symmetric semigroups, equivalently conductor = 2 * genus; the
    /// dualizing sheaf is then invertible.
    pub fn is_gorenstein(&self) -> bool {
        self.conductor == 2 * self.genus() as u64
    }

    /// The conductor ideal equals the maximal ideal: `S = {0} u [a, inf)`.
    /// Defined as false on the naturals (no singular point).
    pub fn is_nearly_normal(&self) -> bool {
        !self.is_smooth() && self.multiplicity == self.conductor
    }

    /// Members in `[0, hi]`, ascending.
    pub fn members_upto(&self, hi: u64) -> Vec<u64> {
        (0..=hi).filter(|&n| self.contains(n as i64)).collect()
    }

    pub(crate) fn members_window(&self) -> &Bits {
        &self.members
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// How a semigroup was described in text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupSpec {
    Generators(Vec<u64>),
    Gaps(Vec<u64>),
}

impl SemigroupSpec {
    pub fn build(&self) -> Result<NumericalSemigroup> {
        match self {
            SemigroupSpec::Generators(g) => NumericalSemigroup::from_generators(g),
            SemigroupSpec::Gaps(g) => NumericalSemigroup::from_gaps(g),
        }
    }
}

/// Accepts `"5,9,13"` (generators) or `"gaps:1,2,3"`.
impl FromStr for SemigroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (is_gaps, body) = match s.strip_prefix("gaps:") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut values = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let v: u64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))?;
            values.push(v);
        }
        if is_gaps {
            Ok(SemigroupSpec::Gaps(values))
        } else {
            Ok(SemigroupSpec::Generators(values))
        }
    }
}

/// Streams every numerical semigroup of genus at most `max_genus`, each
/// exactly once, in depth-first preorder of the semigroup tree. The root is
/// the naturals and the children of `S` are `S` minus one minimal generator
/// larger than the Frobenius number, visited in increasing generator order.
pub fn enumerate_semigroups(max_genus: usize) -> impl Iterator<Item = NumericalSemigroup> {
    SemigroupTree {
        stack: vec![NumericalSemigroup::naturals()],
        max_genus,
    }
}

struct SemigroupTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: usize,
}

impl Iterator for SemigroupTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let s = self.stack.pop()?;
        if s.genus() < self.max_genus {
            let frob = s.frobenius();
            for &m in s.min_generators().iter().rev() {
                if m as i64 > frob {
                    let mut gaps = s.gaps().to_vec();
                    gaps.push(m);
                    self.stack.push(NumericalSemigroup::from_gaps_unchecked(gaps));
                }
            }
        }
        Some(s)
    }
}

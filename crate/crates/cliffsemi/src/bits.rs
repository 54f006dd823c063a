//! Fixed-width bitset over `[0, len)` used for membership windows.

/// Bitset with a fixed capacity chosen at construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= other << shift`, truncated to `self.len`. Both sets must have
    /// the same capacity.
    pub fn or_shifted(&mut self, other: &Bits, shift: usize) {
        debug_assert_eq!(self.len, other.len);
        if shift >= self.len {
            return;
        }
        let (wshift, bshift) = (shift / 64, shift % 64);
        let n = self.words.len();
        if bshift == 0 {
            for i in (wshift..n).rev() {
                self.words[i] |= other.words[i - wshift];
            }
        } else {
            for i in (wshift..n).rev() {
                let mut w = other.words[i - wshift] << bshift;
                if i > wshift {
                    w |= other.words[i - wshift - 1] >> (64 - bshift);
                }
                self.words[i] |= w;
            }
        }
        self.clear_tail();
    }

    /// Number of set bits in `[lo, hi)`.
    pub fn count_range(&self, lo: usize, hi: usize) -> usize {
        let hi = hi.min(self.len);
        if lo >= hi {
            return 0;
        }
        let mut total = 0usize;
        for w in lo / 64..=(hi - 1) / 64 {
            let mut word = self.words[w];
            if w == lo / 64 {
                word &= !0 << (lo % 64);
            }
            if w == (hi - 1) / 64 && !hi.is_multiple_of(64) {
                word &= !0 >> (64 - hi % 64);
            }
            total += word.count_ones() as usize;
        }
        total
    }

    #[cfg(test)]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[cfg(test)]
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    #[cfg(test)]
    pub fn is_subset_of(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn clear_tail(&mut self) {
        if !self.len.is_multiple_of(64) {
            let last = self.words.len() - 1;
            self.words[last] &= !0 >> (64 - self.len % 64);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut b = Bits::new(130);
        for i in [0, 63, 64, 100, 129] {
            b.set(i);
        }
        assert!(b.get(63) && b.get(64) && b.get(129));
        assert!(!b.get(1));
        assert_eq!(b.count(), 5);
        assert_eq!(b.count_range(0, 64), 2);
        assert_eq!(b.count_range(64, 130), 3);
        assert_eq!(b.count_range(100, 101), 1);
        assert_eq!(b.count_range(5, 5), 0);
    }

    #[test]
    fn shifted_or() {
        let mut a = Bits::new(100);
        let mut b = Bits::new(100);
        for i in [0, 5, 70] {
            b.set(i);
        }
        a.or_shifted(&b, 13);
        let got: Vec<usize> = a.iter_ones().collect();
        assert_eq!(got, vec![13, 18, 83]);
        // shifting past the window drops bits
        let mut c = Bits::new(100);
        c.or_shifted(&b, 95);
        assert_eq!(c.iter_ones().collect::<Vec<_>>(), vec![95]);
    }

    #[test]
    fn subset() {
        let mut a = Bits::new(10);
        let mut b = Bits::new(10);
        a.set(3);
        b.set(3);
        b.set(4);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
    }
}

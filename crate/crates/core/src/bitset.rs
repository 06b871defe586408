//! Fixed-capacity vertex bitsets used by the exact solvers.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn empty(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn union_with(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn difference(&self, other: &Bits) -> Bits {
        Bits {
            words: self.words.iter().zip(&other.words).map(|(w, o)| w & !o).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|self \ other|`
    #[inline]
    pub fn count_minus(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(w, o)| (w & !o).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(w, o)| w & o != 0)
    }

    /// Iterates `self \ other`.
    pub fn iter_minus<'a>(&'a self, other: &'a Bits) -> impl Iterator<Item = usize> + 'a {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .flat_map(|(i, (&w, &o))| {
                let mut rest = w & !o;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        None
                    } else {
                        let bit = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        Some(i * 64 + bit)
                    }
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_word_boundaries() {
        let mut b = Bits::empty(130);
        for v in [0, 63, 64, 129] {
            b.insert(v);
        }
        assert_eq!(b.len(), 4);
        let full = Bits::full(130);
        assert_eq!(full.count_minus(&b), 126);
        assert_eq!(full.iter_minus(&b).count(), 126);
        assert!(!full.iter_minus(&b).any(|v| v == 64));
        assert_eq!(full.difference(&b).len(), 126);
        assert!(b.intersects(&full));
    }
}

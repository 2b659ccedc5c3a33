//! Subsets of a ground set {0, .., n-1} as bitmasks.

use core::fmt;

/// A subset of a ground set, bit e set means element e is in.
///
/// The ground set size is carried by the containing structure, not here.
/// Ordering is by bitmask value; that is the canonical set ordering used
/// everywhere (presentations, witness selection, enumeration).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n < 32);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        let mut bits = 0u32;
        for e in elements {
            debug_assert!(e < 32);
            bits |= 1 << e;
        }
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1u32 << e))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement_in(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

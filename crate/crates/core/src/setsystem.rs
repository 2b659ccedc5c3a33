//! Multisets of columns over a ground set, the presentations of transversal
//! matroids.

use crate::error::Error;
use crate::subset::Subset;
use alloc::vec::Vec;
use core::fmt;

/// A multiset of subsets of {0, .., n-1}, kept in canonical form: empty
/// columns dropped, the rest sorted by bitmask. Duplicates are meaningful
/// (multiplicity matters), emptiness is not.
///
/// Column indices used by the incidence maps refer to this canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct SetSystem {
    n: usize,
    columns: Vec<Subset>,
}

impl SetSystem {
    pub fn new(n: usize, columns: Vec<Subset>) -> Result<SetSystem, Error> {
        for c in &columns {
            let stray = c.minus(Subset::full(n));
            if !stray.is_empty() {
                return Err(Error::ElementOutOfRange {
                    element: stray.elements().next().unwrap(),
                    n,
                });
            }
        }
        let mut columns: Vec<Subset> = columns.into_iter().filter(|c| !c.is_empty()).collect();
        columns.sort_unstable();
        Ok(SetSystem { n, columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Subset] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Columns cut down to x and re-indexed to 0..|x|-1 in element order.
    pub fn restricted_to(&self, x: Subset) -> SetSystem {
        let elems: Vec<usize> = x.elements().collect();
        let columns = self
            .columns
            .iter()
            .map(|c| {
                Subset::from_elements(
                    elems
                        .iter()
                        .enumerate()
                        .filter(|&(_, &e)| c.contains(e))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        SetSystem::new(elems.len(), columns).unwrap()
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

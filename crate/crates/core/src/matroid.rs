//! Matroids as explicit rank tables over all 2^n subsets.
//!
//! Every construction route lands in the same representation, so equality of
//! matroids is equality of tables. Construction validates its input axioms by
//! default; the flag exists because bulk random generation re-validates only a
//! sample.

use crate::error::Error;
use crate::setsystem::SetSystem;
use crate::subset::Subset;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Masks are u32 and tables are materialized, so this is a hard ceiling.
pub const MAX_GROUND_SET: usize = 25;

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Largest accepted ground set; the table has 2^n entries. Never exceeds
    /// [`MAX_GROUND_SET`].
    pub max_ground_set: usize,
    /// Check rank axioms and the input family's own axioms on construction.
    pub validate: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_ground_set: 20, validate: true }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: Vec<u8>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, rank={})", self.n, self.full_rank())
    }
}

fn check_ground(n: usize, options: &BuildOptions) -> Result<(), Error> {
    let max = options.max_ground_set.min(MAX_GROUND_SET);
    if n > max {
        return Err(Error::GroundSetTooLarge { n, max });
    }
    Ok(())
}

fn check_elements(n: usize, sets: &[Subset]) -> Result<(), Error> {
    for s in sets {
        let stray = s.minus(Subset::full(n));
        if !stray.is_empty() {
            return Err(Error::ElementOutOfRange {
                element: stray.elements().next().unwrap(),
                n,
            });
        }
    }
    Ok(())
}

/// r(empty) = 0, unit increase, and local submodularity. Together these force
/// monotonicity and full submodularity.
fn check_rank_axioms(n: usize, rank: &[u8]) -> Result<(), Error> {
    if rank[0] != 0 {
        return Err(Error::RankAxiom { rule: "empty set has rank 0", x: Subset::EMPTY });
    }
    for x in 0..rank.len() {
        let s = Subset(x as u32);
        for e in 0..n {
            if s.contains(e) {
                continue;
            }
            let xe = s.with(e).bits() as usize;
            if rank[xe] < rank[x] || rank[xe] > rank[x] + 1 {
                return Err(Error::RankAxiom { rule: "unit increase", x: s });
            }
            for f in e + 1..n {
                if s.contains(f) {
                    continue;
                }
                let xf = s.with(f).bits() as usize;
                let xef = s.with(e).with(f).bits() as usize;
                if rank[xe] + rank[xf] < rank[xef] + rank[x] {
                    return Err(Error::RankAxiom { rule: "local submodularity", x: s });
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Accepts any table satisfying the rank axioms.
    pub fn from_rank_table(n: usize, rank: Vec<u8>) -> Result<Matroid, Error> {
        Matroid::from_rank_table_with(n, rank, &BuildOptions::default())
    }

    pub fn from_rank_table_with(
        n: usize,
        rank: Vec<u8>,
        options: &BuildOptions,
    ) -> Result<Matroid, Error> {
        check_ground(n, options)?;
        if rank.len() != 1 << n {
            return Err(Error::TableLength { expected: 1 << n, got: rank.len() });
        }
        if options.validate {
            check_rank_axioms(n, &rank)?;
        }
        Ok(Matroid { n, rank })
    }

    /// Builds from the list of bases; r(X) = max |X meet B| over bases B.
    ///
    /// Validates the exchange axiom: the list must be nonempty, of equal
    /// cardinality, and for every pair and every removable element some
    /// replacement must land back in the list.
    pub fn from_bases(n: usize, bases: &[Subset]) -> Result<Matroid, Error> {
        Matroid::from_bases_with(n, bases, &BuildOptions::default())
    }

    pub fn from_bases_with(
        n: usize,
        bases: &[Subset],
        options: &BuildOptions,
    ) -> Result<Matroid, Error> {
        check_ground(n, options)?;
        check_elements(n, bases)?;
        let mut list: Vec<Subset> = bases.to_vec();
        list.sort_unstable();
        list.dedup();
        let Some(&first) = list.first() else {
            return Err(Error::BasesEmpty);
        };
        let size = first.card();
        for &b in &list {
            if b.card() != size {
                return Err(Error::BasesUnequalSizes { expected: size, basis: b });
            }
        }
        if options.validate {
            for &b1 in &list {
                for &b2 in &list {
                    for x in b1.minus(b2).elements() {
                        let found = b2.minus(b1).elements().any(|y| {
                            list.binary_search(&b1.without(x).with(y)).is_ok()
                        });
                        if !found {
                            return Err(Error::BasisExchange { from: b1, to: b2, remove: x });
                        }
                    }
                }
            }
        }
        let mut rank = vec![0u8; 1 << n];
        for x in 0..1usize << n {
            let mut best = 0;
            for &b in &list {
                best = best.max((x as u32 & b.bits()).count_ones() as u8);
            }
            rank[x] = best;
        }
        if options.validate {
            check_rank_axioms(n, &rank)?;
        }
        Ok(Matroid { n, rank })
    }

    /// Builds from the list of circuits (minimal dependent sets).
    ///
    /// Validates that no circuit contains another and that circuit
    /// elimination holds within the list.
    pub fn from_circuits(n: usize, circuits: &[Subset]) -> Result<Matroid, Error> {
        Matroid::from_circuits_with(n, circuits, &BuildOptions::default())
    }

    pub fn from_circuits_with(
        n: usize,
        circuits: &[Subset],
        options: &BuildOptions,
    ) -> Result<Matroid, Error> {
        check_ground(n, options)?;
        check_elements(n, circuits)?;
        let mut list: Vec<Subset> = circuits.to_vec();
        list.sort_unstable();
        list.dedup();
        for &c in &list {
            if c.is_empty() {
                return Err(Error::CircuitEmpty);
            }
        }
        if options.validate {
            for &c1 in &list {
                for &c2 in &list {
                    if c1 != c2 && c1.is_subset_of(c2) {
                        return Err(Error::CircuitsNested { inner: c1, outer: c2 });
                    }
                }
            }
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    let (c1, c2) = (list[i], list[j]);
                    for e in c1.intersect(c2).elements() {
                        let space = c1.union(c2).without(e);
                        if !list.iter().any(|c| c.is_subset_of(space)) {
                            return Err(Error::CircuitElimination { c1, c2, common: e });
                        }
                    }
                }
            }
        }
        // dependent = contains a circuit; propagate each bit upward once
        let mut dependent = vec![false; 1 << n];
        for &c in &list {
            dependent[c.bits() as usize] = true;
        }
        for e in 0..n {
            let bit = 1usize << e;
            for x in 0..1usize << n {
                if x & bit != 0 && dependent[x ^ bit] {
                    dependent[x] = true;
                }
            }
        }
        // a maximal independent subset of a dependent set omits some element
        let mut rank = vec![0u8; 1 << n];
        for x in 1..1usize << n {
            if !dependent[x] {
                rank[x] = (x as u32).count_ones() as u8;
            } else {
                let mut best = 0;
                let mut rest = x;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(rank[x ^ bit]);
                    rest ^= bit;
                }
                rank[x] = best;
            }
        }
        if options.validate {
            check_rank_axioms(n, &rank)?;
        }
        Ok(Matroid { n, rank })
    }

    /// Builds the transversal matroid of a set system; r(X) is the size of a
    /// maximum matching between the elements of X and the columns.
    pub fn from_presentation(system: &SetSystem) -> Result<Matroid, Error> {
        Matroid::from_presentation_with(system, &BuildOptions::default())
    }

    pub fn from_presentation_with(
        system: &SetSystem,
        options: &BuildOptions,
    ) -> Result<Matroid, Error> {
        let n = system.n();
        check_ground(n, options)?;
        // One column at a time: a maximum matching either ignores the new
        // column or assigns it one element. Decreasing order keeps the
        // previous column count available at strictly smaller masks.
        let mut rank = vec![0u8; 1 << n];
        for &col in system.columns() {
            for x in (1..1usize << n).rev() {
                let mut best = rank[x];
                let mut rest = x & col.bits() as usize;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(rank[x ^ bit] + 1);
                    rest ^= bit;
                }
                rank[x] = best;
            }
        }
        if options.validate {
            check_rank_axioms(n, &rank)?;
        }
        Ok(Matroid { n, rank })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.rank
    }

    pub fn rank(&self, x: Subset) -> usize {
        debug_assert!(x.is_subset_of(self.ground()));
        self.rank[x.bits() as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank[(1usize << self.n) - 1] as usize
    }

    pub fn nullity(&self, x: Subset) -> usize {
        x.card() - self.rank(x)
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.rank(x) == x.card()
    }

    pub fn is_spanning(&self, x: Subset) -> bool {
        self.rank(x) == self.full_rank()
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        let mut c = x;
        for e in x.complement_in(self.n).elements() {
            if self.rank(x.with(e)) == r {
                c = c.with(e);
            }
        }
        c
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.closure(x) == x
    }

    /// No coloops in the restriction to x, i.e. x is a union of circuits.
    pub fn is_cyclic(&self, x: Subset) -> bool {
        let r = self.rank(x);
        x.elements().all(|e| self.rank(x.without(e)) == r)
    }

    pub fn loops(&self) -> Subset {
        Subset::from_elements((0..self.n).filter(|&e| self.rank[1 << e] == 0))
    }

    pub fn coloops(&self) -> Subset {
        let full = self.ground();
        let r = self.full_rank();
        Subset::from_elements((0..self.n).filter(|&e| self.rank(full.without(e)) < r))
    }

    /// All bases, in increasing bitmask order.
    pub fn bases(&self) -> Vec<Subset> {
        let r = self.full_rank();
        (0..1usize << self.n)
            .map(|x| Subset(x as u32))
            .filter(|&x| x.card() == r && self.rank(x) == r)
            .collect()
    }

    /// All circuits, sorted by cardinality then bitmask.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for x in 1..1usize << self.n {
            let s = Subset(x as u32);
            let k = s.card();
            if self.rank(s) == k - 1 && s.elements().all(|e| self.rank(s.without(e)) == k - 1) {
                out.push(s);
            }
        }
        out.sort_unstable_by_key(|c| (c.card(), c.bits()));
        out
    }

    /// Dual matroid: r*(X) = |X| - r(E) + r(E - X).
    pub fn dual(&self) -> Matroid {
        let full = (1usize << self.n) - 1;
        let r = self.rank[full] as usize;
        let rank = (0..=full)
            .map(|x| ((x as u32).count_ones() as usize + self.rank[full ^ x] as usize - r) as u8)
            .collect();
        Matroid { n: self.n, rank }
    }

    /// Restriction to x, re-indexed to 0..|x|-1 preserving element order.
    pub fn restrict(&self, x: Subset) -> Matroid {
        debug_assert!(x.is_subset_of(self.ground()));
        let elems: Vec<usize> = x.elements().collect();
        let m = elems.len();
        let rank = (0..1usize << m)
            .map(|y| {
                let mut expanded = 0usize;
                for (i, &e) in elems.iter().enumerate() {
                    if y >> i & 1 == 1 {
                        expanded |= 1 << e;
                    }
                }
                self.rank[expanded]
            })
            .collect();
        Matroid { n: m, rank }
    }

    /// Contraction of x, on ground set E - x re-indexed preserving order;
    /// r'(Y) = r(Y union x) - r(x).
    pub fn contract(&self, x: Subset) -> Matroid {
        debug_assert!(x.is_subset_of(self.ground()));
        let elems: Vec<usize> = x.complement_in(self.n).elements().collect();
        let m = elems.len();
        let rx = self.rank(x);
        let rank = (0..1usize << m)
            .map(|y| {
                let mut expanded = x.bits() as usize;
                for (i, &e) in elems.iter().enumerate() {
                    if y >> i & 1 == 1 {
                        expanded |= 1 << e;
                    }
                }
                self.rank[expanded] - rx as u8
            })
            .collect();
        Matroid { n: m, rank }
    }
}

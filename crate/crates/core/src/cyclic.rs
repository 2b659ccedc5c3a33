//! The lattice of cyclic flats and enumeration of families in it.
//!
//! A cyclic flat is a flat whose restriction has no coloops, equivalently a
//! flat that is a union of circuits. Joins are closures of unions, meets are
//! cyclic cores of intersections.

use crate::error::Error;
use crate::matroid::Matroid;
use crate::subset::Subset;
use alloc::vec;
use alloc::vec::Vec;

/// Largest subset of s that is a union of circuits: strip coloops of the
/// restriction until none remain.
pub fn cyclic_core(m: &Matroid, s: Subset) -> Subset {
    let mut t = s;
    loop {
        let r = m.rank(t);
        let coloops =
            Subset::from_elements(t.elements().filter(|&e| m.rank(t.without(e)) < r));
        if coloops.is_empty() {
            return t;
        }
        t = t.minus(coloops);
    }
}

/// Join in the lattice of cyclic flats. Errors if an argument is not one.
pub fn z_join(m: &Matroid, f: Subset, g: Subset) -> Result<Subset, Error> {
    check_member(m, f)?;
    check_member(m, g)?;
    Ok(m.closure(f.union(g)))
}

/// Meet in the lattice of cyclic flats. Errors if an argument is not one.
pub fn z_meet(m: &Matroid, f: Subset, g: Subset) -> Result<Subset, Error> {
    check_member(m, f)?;
    check_member(m, g)?;
    Ok(cyclic_core(m, f.intersect(g)))
}

fn check_member(m: &Matroid, f: Subset) -> Result<(), Error> {
    if m.is_flat(f) && m.is_cyclic(f) {
        Ok(())
    } else {
        Err(Error::NotACyclicFlat(f))
    }
}

/// Bitset over lattice indices.
#[derive(Clone, PartialEq, Eq)]
struct IdxBits(Vec<u64>);

impl IdxBits {
    fn new(len: usize) -> IdxBits {
        IdxBits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn or_assign(&mut self, other: &IdxBits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

/// All cyclic flats of a matroid with their ranks and containment order,
/// flats sorted by cardinality then bitmask.
#[derive(Clone)]
pub struct ZLattice {
    flats: Vec<Subset>,
    ranks: Vec<u8>,
    // containment closed over indices: upsets[i] holds j iff flats[i] is a
    // subset of flats[j]; both include i itself
    upsets: Vec<IdxBits>,
    downsets: Vec<IdxBits>,
}

/// Scans all subsets; every flat with a coloop-free restriction is collected.
pub fn cyclic_flats(m: &Matroid) -> ZLattice {
    let mut flats: Vec<Subset> = (0..1usize << m.n())
        .map(|x| Subset(x as u32))
        .filter(|&x| m.is_flat(x) && m.is_cyclic(x))
        .collect();
    flats.sort_unstable_by_key(|f| (f.card(), f.bits()));
    let ranks = flats.iter().map(|&f| m.rank(f) as u8).collect();
    let z = flats.len();
    let mut upsets = vec![IdxBits::new(z); z];
    let mut downsets = vec![IdxBits::new(z); z];
    for i in 0..z {
        for j in 0..z {
            if flats[i].is_subset_of(flats[j]) {
                upsets[i].set(j);
                downsets[j].set(i);
            }
        }
    }
    ZLattice { flats, ranks, upsets, downsets }
}

/// Knobs for family enumeration. Families are nonempty unless asked
/// otherwise; the limit bounds how many families may be produced.
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub include_empty: bool,
    pub limit: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { include_empty: false, limit: 1_000_000 }
    }
}

impl ZLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> Subset {
        self.flats[i]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.ranks[i] as usize
    }

    pub fn index_of(&self, f: Subset) -> Option<usize> {
        self.flats.iter().position(|&g| g == f)
    }

    pub fn contains(&self, f: Subset) -> bool {
        self.index_of(f).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.flats.iter().copied().zip(self.ranks.iter().map(|&r| r as usize))
    }

    fn comparable(&self, i: usize) -> IdxBits {
        let mut c = self.upsets[i].clone();
        c.or_assign(&self.downsets[i]);
        c
    }

    /// Visits antichains as sorted index slices, in lexicographic order of
    /// the index sequences. The visitor returns false to stop early; the
    /// result is false exactly when it did.
    pub fn for_each_antichain<F>(&self, options: &EnumOptions, mut visit: F) -> Result<bool, Error>
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut count = 0u64;
        if options.include_empty {
            if !emit(&mut count, options.limit, || visit(&[]))? {
                return Ok(false);
            }
        }
        let mut chosen = Vec::new();
        self.antichain_dfs(0, &IdxBits::new(self.len()), &mut chosen, &mut count, options.limit, &mut visit)
    }

    fn antichain_dfs<F>(
        &self,
        start: usize,
        forbidden: &IdxBits,
        chosen: &mut Vec<usize>,
        count: &mut u64,
        limit: u64,
        visit: &mut F,
    ) -> Result<bool, Error>
    where
        F: FnMut(&[usize]) -> bool,
    {
        for j in start..self.len() {
            if forbidden.get(j) {
                continue;
            }
            chosen.push(j);
            if !emit(count, limit, || visit(chosen))? {
                chosen.pop();
                return Ok(false);
            }
            let mut next = forbidden.clone();
            next.or_assign(&self.comparable(j));
            if !self.antichain_dfs(j + 1, &next, chosen, count, limit, visit)? {
                chosen.pop();
                return Ok(false);
            }
            chosen.pop();
        }
        Ok(true)
    }

    /// Visits filters (upward closed families) as sorted index slices. Each
    /// filter is reached once, as the upward closure of its minimal members.
    pub fn for_each_filter<F>(&self, options: &EnumOptions, mut visit: F) -> Result<bool, Error>
    where
        F: FnMut(&[usize]) -> bool,
    {
        self.for_each_closed(options, &self.upsets, &mut visit)
    }

    /// Visits ideals (downward closed families) as sorted index slices.
    pub fn for_each_ideal<F>(&self, options: &EnumOptions, mut visit: F) -> Result<bool, Error>
    where
        F: FnMut(&[usize]) -> bool,
    {
        self.for_each_closed(options, &self.downsets, &mut visit)
    }

    fn for_each_closed<F>(
        &self,
        options: &EnumOptions,
        closures: &[IdxBits],
        visit: &mut F,
    ) -> Result<bool, Error>
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut count = 0u64;
        if options.include_empty {
            if !emit(&mut count, options.limit, || visit(&[]))? {
                return Ok(false);
            }
        }
        let mut chosen = Vec::new();
        let mut scratch = Vec::new();
        // distinct closed families correspond exactly to the antichains of
        // their extreme members, so the antichain walk reaches each once
        self.antichain_dfs(
            0,
            &IdxBits::new(self.len()),
            &mut chosen,
            &mut count,
            options.limit,
            &mut |antichain: &[usize]| {
                let mut closed = IdxBits::new(self.len());
                for &i in antichain {
                    closed.or_assign(&closures[i]);
                }
                scratch.clear();
                scratch.extend((0..self.len()).filter(|&i| closed.get(i)));
                visit(&scratch)
            },
        )
    }

    pub fn antichains(&self, options: &EnumOptions) -> Result<Vec<Vec<Subset>>, Error> {
        let mut out = Vec::new();
        self.for_each_antichain(options, |idx| {
            out.push(idx.iter().map(|&i| self.flats[i]).collect());
            true
        })?;
        Ok(out)
    }

    pub fn filters(&self, options: &EnumOptions) -> Result<Vec<Vec<Subset>>, Error> {
        let mut out = Vec::new();
        self.for_each_filter(options, |idx| {
            out.push(idx.iter().map(|&i| self.flats[i]).collect());
            true
        })?;
        Ok(out)
    }

    pub fn ideals(&self, options: &EnumOptions) -> Result<Vec<Vec<Subset>>, Error> {
        let mut out = Vec::new();
        self.for_each_ideal(options, |idx| {
            out.push(idx.iter().map(|&i| self.flats[i]).collect());
            true
        })?;
        Ok(out)
    }

    /// Visits every subset of the lattice (no order constraint), as sorted
    /// index slices in lexicographic order.
    pub fn for_each_subfamily<F>(&self, options: &EnumOptions, mut visit: F) -> Result<bool, Error>
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut count = 0u64;
        if options.include_empty {
            if !emit(&mut count, options.limit, || visit(&[]))? {
                return Ok(false);
            }
        }
        let mut chosen = Vec::new();
        self.subfamily_dfs(0, &mut chosen, &mut count, options.limit, &mut visit)
    }

    fn subfamily_dfs<F>(
        &self,
        start: usize,
        chosen: &mut Vec<usize>,
        count: &mut u64,
        limit: u64,
        visit: &mut F,
    ) -> Result<bool, Error>
    where
        F: FnMut(&[usize]) -> bool,
    {
        for j in start..self.len() {
            chosen.push(j);
            if !emit(count, limit, || visit(chosen))? {
                chosen.pop();
                return Ok(false);
            }
            if !self.subfamily_dfs(j + 1, chosen, count, limit, visit)? {
                chosen.pop();
                return Ok(false);
            }
            chosen.pop();
        }
        Ok(true)
    }

    /// True when the index family is upward closed.
    pub fn is_filter(&self, indices: &[usize]) -> bool {
        let mut inside = IdxBits::new(self.len());
        for &i in indices {
            inside.set(i);
        }
        indices.iter().all(|&i| {
            (0..self.len()).all(|j| !self.upsets[i].get(j) || inside.get(j))
        })
    }
}

fn emit<F: FnOnce() -> bool>(count: &mut u64, limit: u64, visit: F) -> Result<bool, Error> {
    if *count >= limit {
        return Err(Error::EnumerationLimit { limit });
    }
    *count += 1;
    Ok(visit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn u24() -> Matroid {
        let circuits: Vec<Subset> = (0..16u32).map(Subset).filter(|c| c.card() == 3).collect();
        Matroid::from_circuits(4, &circuits).unwrap()
    }

    /// Two parallel pairs: cyclic flats form a diamond.
    fn two_pairs() -> Matroid {
        Matroid::from_circuits(
            4,
            &[Subset::from_elements([0, 1]), Subset::from_elements([2, 3])],
        )
        .unwrap()
    }

    #[test]
    fn cyclic_core_strips_to_circuit_union() {
        let m = u24();
        assert_eq!(cyclic_core(&m, Subset::from_elements([0, 1])), Subset::EMPTY);
        assert_eq!(
            cyclic_core(&m, Subset::from_elements([0, 1, 2])),
            Subset::from_elements([0, 1, 2])
        );
        assert_eq!(cyclic_core(&m, Subset::full(4)), Subset::full(4));
    }

    #[test]
    fn uniform_lattice_is_bottom_and_top() {
        let z = cyclic_flats(&u24());
        assert_eq!(z.flats(), &[Subset::EMPTY, Subset::full(4)]);
        assert_eq!(z.rank_of(0), 0);
        assert_eq!(z.rank_of(1), 2);
    }

    #[test]
    fn loops_sit_in_every_cyclic_flat() {
        let m = Matroid::from_circuits(3, &[Subset::singleton(0)]).unwrap();
        let z = cyclic_flats(&m);
        assert_eq!(z.flats(), &[Subset::singleton(0)]);
    }

    #[test]
    fn diamond_join_and_meet() {
        let m = two_pairs();
        let f1 = Subset::from_elements([0, 1]);
        let f2 = Subset::from_elements([2, 3]);
        assert_eq!(z_join(&m, f1, f2).unwrap(), Subset::full(4));
        assert_eq!(z_meet(&m, f1, f2).unwrap(), Subset::EMPTY);
        assert!(matches!(
            z_join(&m, Subset::singleton(0), f2),
            Err(Error::NotACyclicFlat(_))
        ));
    }

    #[test]
    fn diamond_family_counts() {
        let z = cyclic_flats(&two_pairs());
        assert_eq!(z.len(), 4);
        let opts = EnumOptions::default();
        // 4 singletons plus the one incomparable pair
        assert_eq!(z.antichains(&opts).unwrap().len(), 5);
        assert_eq!(z.filters(&opts).unwrap().len(), 5);
        assert_eq!(z.ideals(&opts).unwrap().len(), 5);
        let with_empty = EnumOptions { include_empty: true, ..opts };
        assert_eq!(z.filters(&with_empty).unwrap().len(), 6);
    }

    #[test]
    fn filters_are_upward_closed() {
        let m = two_pairs();
        let z = cyclic_flats(&m);
        let filters = z.filters(&EnumOptions::default()).unwrap();
        for f in &filters {
            let idx: Vec<usize> = f.iter().map(|&s| z.index_of(s).unwrap()).collect();
            assert!(z.is_filter(&idx));
        }
        // every filter contains the top
        assert!(filters.iter().all(|f| f.contains(&Subset::full(4))));
    }

    #[test]
    fn enumeration_limit_is_an_error() {
        let z = cyclic_flats(&two_pairs());
        let err = z.antichains(&EnumOptions { include_empty: false, limit: 3 }).unwrap_err();
        assert!(matches!(err, Error::EnumerationLimit { limit: 3 }));
    }

    #[test]
    fn antichain_members_are_incomparable() {
        let z = cyclic_flats(&two_pairs());
        for family in z.antichains(&EnumOptions::default()).unwrap() {
            for (i, &a) in family.iter().enumerate() {
                for &b in &family[i + 1..] {
                    assert!(!a.is_subset_of(b) && !b.is_subset_of(a));
                }
            }
        }
    }
}

//! Brute-force referees for the production decision procedures. Everything
//! here recomputes from the rank table with its own search and matching
//! code, deliberately sharing no logic with the modules it double-checks, so
//! an agreement between the two sides means something.

use crate::error::Error;
use crate::mason::{IeMode, DEFAULT_FAMILY_CAP};
use crate::matroid::Matroid;
use crate::subset::Subset;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Hard cap on exhaustive presentation search.
pub const MAX_ORACLE_GROUND_SET: usize = 6;

/// Searches every multiset of at most r_max nonempty columns (in
/// nondecreasing bitmask order) for one presenting m. Branches die when the
/// partial system already exceeds the target rank somewhere, or is too far
/// below it for the remaining columns to close the gap; both cuts are plain
/// matching monotonicity. A hit is re-verified per subset with
/// augmenting-path matchings before being believed.
pub fn oracle_is_transversal(m: &Matroid, r_max: usize) -> Result<bool, Error> {
    oracle_search(m, r_max, false)
}

/// Same search, restricted to presentations with exactly r_max columns and
/// additionally cut by the count of columns each cyclic flat must meet.
/// Sound when r_max is the rank of m, since a presentation by that many
/// columns meets every cyclic flat F in exactly r(F) columns.
pub fn oracle_is_transversal_pruned(m: &Matroid, r_max: usize) -> Result<bool, Error> {
    oracle_search(m, r_max, true)
}

fn oracle_search(m: &Matroid, r_max: usize, flat_prune: bool) -> Result<bool, Error> {
    if m.n() > MAX_ORACLE_GROUND_SET {
        return Err(Error::OracleBounds {
            what: "oracle ground set",
            value: m.n(),
            max: MAX_ORACLE_GROUND_SET,
        });
    }
    if r_max > m.full_rank() + 1 {
        return Err(Error::OracleBounds {
            what: "oracle column count",
            value: r_max,
            max: m.full_rank() + 1,
        });
    }
    let size = 1usize << m.n();
    let target = m.rank_table();
    let flats: Vec<(Subset, u8)> = if flat_prune {
        let z = crate::cyclic::cyclic_flats(m);
        z.iter().map(|(f, r)| (f, r as u8)).collect()
    } else {
        Vec::new()
    };
    let meets = vec![0u8; flats.len()];
    let mut state = Search {
        target,
        size,
        r_max,
        flat_prune,
        flats,
        columns: Vec::new(),
    };
    let table = vec![0u8; size];
    state.descend(&table, &meets, 1)
}

struct Search<'a> {
    target: &'a [u8],
    size: usize,
    r_max: usize,
    flat_prune: bool,
    flats: Vec<(Subset, u8)>,
    columns: Vec<Subset>,
}

impl Search<'_> {
    fn descend(&mut self, table: &[u8], meets: &[u8], lowest: u32) -> Result<bool, Error> {
        let depth = self.columns.len();
        let exact = !self.flat_prune || depth == self.r_max;
        if exact && table == self.target {
            if !self.matching_confirms() {
                return Err(Error::Inconsistency(
                    "presentation search and direct matching disagree",
                ));
            }
            return Ok(true);
        }
        if depth == self.r_max {
            return Ok(false);
        }
        let left = (self.r_max - depth - 1) as i16;
        'next: for mask in lowest..self.size as u32 {
            let col = Subset(mask);
            let mut next = vec![0u8; self.size];
            for x in 0..self.size {
                let sx = Subset(x as u32);
                let mut best = table[x];
                for e in sx.intersect(col).elements() {
                    let prev = table[x & !(1usize << e)];
                    if prev + 1 > best {
                        best = prev + 1;
                    }
                }
                if best > self.target[x] {
                    continue 'next;
                }
                if self.target[x] as i16 - best as i16 > left + 1 {
                    continue 'next;
                }
                next[x] = best;
            }
            let mut next_meets = meets.to_vec();
            if self.flat_prune {
                for (i, &(f, r)) in self.flats.iter().enumerate() {
                    if f.meets(col) {
                        next_meets[i] += 1;
                    }
                    if next_meets[i] > r || (r - next_meets[i]) as i16 > left {
                        continue 'next;
                    }
                }
            }
            self.columns.push(col);
            let hit = self.descend(&next, &next_meets, mask)?;
            self.columns.pop();
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn matching_confirms(&self) -> bool {
        for x in 0..self.size {
            if matching_rank(&self.columns, Subset(x as u32)) != self.target[x] as usize {
                return false;
            }
        }
        true
    }
}

/// Size of a maximum matching between the elements of x and columns
/// containing them, by augmenting paths.
fn matching_rank(columns: &[Subset], x: Subset) -> usize {
    let mut owner = vec![usize::MAX; columns.len()];
    let mut size = 0;
    for e in x.elements() {
        let mut seen = vec![false; columns.len()];
        if augment(e, columns, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(e: usize, columns: &[Subset], owner: &mut [usize], seen: &mut [bool]) -> bool {
    for (i, &c) in columns.iter().enumerate() {
        if c.contains(e) && !seen[i] {
            seen[i] = true;
            if owner[i] == usize::MAX || augment(owner[i], columns, owner, seen) {
                owner[i] = e;
                return true;
            }
        }
    }
    false
}

/// Both sides of the alternating rank bound for one family, evaluated
/// directly with no reduction or caching. In union mode the left side is the
/// rank of the intersection of the family and the alternating sum runs over
/// unions; intersection mode swaps the roles.
pub fn oracle_inclusion_exclusion(
    m: &Matroid,
    family: &[Subset],
    mode: IeMode,
) -> Result<(i64, i64), Error> {
    let k = family.len();
    if k > DEFAULT_FAMILY_CAP {
        return Err(Error::FamilyTooLarge { size: k, cap: DEFAULT_FAMILY_CAP });
    }
    let mut rhs = 0i64;
    for s in 1u32..1 << k {
        let mut acc = match mode {
            IeMode::Unions => Subset::EMPTY,
            IeMode::Intersections => m.ground(),
        };
        for (i, &f) in family.iter().enumerate() {
            if s >> i & 1 == 1 {
                acc = match mode {
                    IeMode::Unions => acc.union(f),
                    IeMode::Intersections => acc.intersect(f),
                };
            }
        }
        let sign = if s.count_ones() % 2 == 1 { 1 } else { -1 };
        rhs += sign * m.rank(acc) as i64;
    }
    let start = match mode {
        IeMode::Unions => m.ground(),
        IeMode::Intersections => Subset::EMPTY,
    };
    let lhs_set = family.iter().fold(start, |acc, &f| match mode {
        IeMode::Unions => acc.intersect(f),
        IeMode::Intersections => acc.union(f),
    });
    Ok((m.rank(lhs_set) as i64, rhs))
}

#[derive(Clone, Debug)]
pub struct Disagreement {
    pub label: String,
    pub procedure: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default)]
pub struct OracleReport {
    pub instances_checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl OracleReport {
    pub fn agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{all_matroids, mk4, twin_planes, uniform};
    use crate::transversal::is_transversal;

    #[test]
    fn uniform_is_found() {
        let m = uniform(2, 4).unwrap();
        assert!(oracle_is_transversal(&m, 2).unwrap());
        assert!(oracle_is_transversal_pruned(&m, 2).unwrap());
    }

    #[test]
    fn k4_is_refuted() {
        let m = mk4().unwrap();
        assert!(!oracle_is_transversal(&m, 3).unwrap());
    }

    #[test]
    fn agrees_with_the_beta_test_on_three_elements() {
        for m in all_matroids(3).unwrap() {
            let expect = is_transversal(&m).transversal;
            let r = m.full_rank();
            assert_eq!(oracle_is_transversal(&m, r).unwrap(), expect, "{m:?}");
            assert_eq!(oracle_is_transversal_pruned(&m, r).unwrap(), expect, "{m:?}");
        }
    }

    #[test]
    fn extra_column_changes_nothing_small() {
        for m in all_matroids(2).unwrap() {
            let r = m.full_rank();
            assert_eq!(
                oracle_is_transversal(&m, r).unwrap(),
                oracle_is_transversal(&m, r + 1).unwrap()
            );
        }
    }

    #[test]
    fn alternating_sum_on_the_twin_planes() {
        let m = twin_planes().unwrap();
        let family = [
            Subset::from_elements([0, 1, 2, 3]),
            Subset::from_elements([3, 4, 5, 6]),
        ];
        let (lhs, rhs) = oracle_inclusion_exclusion(&m, &family, IeMode::Unions).unwrap();
        assert_eq!((lhs, rhs), (1, 2));
        let (lhs, rhs) = oracle_inclusion_exclusion(&m, &family, IeMode::Intersections).unwrap();
        assert_eq!((lhs, rhs), (4, 5));
    }

    #[test]
    fn bounds_are_enforced() {
        let m = uniform(3, 7).unwrap();
        assert!(matches!(
            oracle_is_transversal(&m, 3),
            Err(Error::OracleBounds { .. })
        ));
        let m = uniform(2, 4).unwrap();
        assert!(matches!(
            oracle_is_transversal(&m, 4),
            Err(Error::OracleBounds { .. })
        ));
    }
}

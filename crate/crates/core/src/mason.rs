//! The beta and alpha statistics and the alternating rank sums they certify.
//!
//! beta(X) distributes the rank of the matroid over the cyclic flats from the
//! top down; alpha(X) distributes nullity over flats from the bottom up. Both
//! are defined on every subset and computed here as full tables.

use crate::cyclic::{cyclic_flats, ZLattice};
use crate::error::Error;
use crate::matroid::Matroid;
use crate::subset::Subset;
use alloc::vec;
use alloc::vec::Vec;

/// Default cap on the number of sets in one inclusion-exclusion family
/// (the sum has 2^k terms).
pub const DEFAULT_FAMILY_CAP: usize = 20;

/// Above this family size the union-form alternating sum is evaluated on the
/// minimal sets only; at or below it, both evaluations run and must agree.
const REDUCE_ABOVE: usize = 12;

#[derive(Clone)]
pub struct BetaTable {
    values: Vec<i64>,
    z: ZLattice,
}

/// beta(X) = r(M) - r(X) - sum of beta(Y) over cyclic flats Y strictly
/// containing X, evaluated on cyclic flats in decreasing cardinality order
/// first and then on everything else.
pub fn beta(m: &Matroid) -> BetaTable {
    let z = cyclic_flats(m);
    let r = m.full_rank() as i64;
    let mut on_z = vec![0i64; z.len()];
    for i in (0..z.len()).rev() {
        let f = z.flat(i);
        let mut v = r - z.rank_of(i) as i64;
        for j in i + 1..z.len() {
            if f.is_proper_subset_of(z.flat(j)) {
                v -= on_z[j];
            }
        }
        on_z[i] = v;
    }
    // superset sums of the lattice values give every other subset in one pass
    let n = m.n();
    let mut over = vec![0i64; 1 << n];
    for i in 0..z.len() {
        over[z.flat(i).bits() as usize] = on_z[i];
    }
    for e in 0..n {
        let bit = 1usize << e;
        for x in 0..1usize << n {
            if x & bit == 0 {
                over[x] += over[x | bit];
            }
        }
    }
    let mut values = vec![0i64; 1 << n];
    for x in 0..1usize << n {
        let s = Subset(x as u32);
        values[x] = r - m.rank(s) as i64 - over[x];
    }
    for i in 0..z.len() {
        values[z.flat(i).bits() as usize] = on_z[i];
    }
    BetaTable { values, z }
}

impl BetaTable {
    pub fn value(&self, x: Subset) -> i64 {
        self.values[x.bits() as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn zlattice(&self) -> &ZLattice {
        &self.z
    }

    /// Smallest bitmask with a negative entry, if any.
    pub fn first_negative(&self) -> Option<(Subset, i64)> {
        self.values
            .iter()
            .enumerate()
            .find(|&(_, &v)| v < 0)
            .map(|(x, &v)| (Subset(x as u32), v))
    }
}

#[derive(Clone)]
pub struct AlphaTable {
    values: Vec<i64>,
}

/// alpha(X) = nullity(X) - sum of alpha(F) over flats F strictly inside X.
///
/// The same recursion restricted to cyclic flats must give identical values
/// because alpha vanishes on non-cyclic flats; both are computed and any
/// mismatch is an error rather than a silent choice.
pub fn alpha(m: &Matroid) -> Result<AlphaTable, Error> {
    let n = m.n();
    let mut flats: Vec<Subset> = (0..1usize << n)
        .map(|x| Subset(x as u32))
        .filter(|&x| m.is_flat(x))
        .collect();
    flats.sort_unstable_by_key(|f| (f.card(), f.bits()));
    let mut on_flats = vec![0i64; flats.len()];
    for i in 0..flats.len() {
        let x = flats[i];
        let mut v = m.nullity(x) as i64;
        for j in 0..i {
            if flats[j].is_proper_subset_of(x) {
                v -= on_flats[j];
            }
        }
        on_flats[i] = v;
    }
    let values = table_from(m, &flats, &on_flats, |_| true);
    let restricted = table_from(m, &flats, &on_flats, |f| m.is_cyclic(f));
    if values != restricted {
        return Err(Error::Inconsistency(
            "alpha over all flats and over cyclic flats disagree",
        ));
    }
    Ok(AlphaTable { values })
}

fn table_from(
    m: &Matroid,
    flats: &[Subset],
    on_flats: &[i64],
    keep: impl Fn(Subset) -> bool,
) -> Vec<i64> {
    let n = m.n();
    let mut under = vec![0i64; 1 << n];
    for (i, &f) in flats.iter().enumerate() {
        if keep(f) {
            under[f.bits() as usize] = on_flats[i];
        }
    }
    for e in 0..n {
        let bit = 1usize << e;
        for x in 0..1usize << n {
            if x & bit != 0 {
                under[x] += under[x ^ bit];
            }
        }
    }
    // under[x] includes x's own term when x is a kept flat; the recursion
    // wants strict containment
    (0..1usize << n)
        .map(|x| {
            let s = Subset(x as u32);
            let own = if m.is_flat(s) && keep(s) {
                on_flats[flats.binary_search_by_key(&(s.card(), s.bits()), |f| (f.card(), f.bits())).unwrap()]
            } else {
                0
            };
            m.nullity(s) as i64 - (under[x] - own)
        })
        .collect()
}

impl AlphaTable {
    pub fn value(&self, x: Subset) -> i64 {
        self.values[x.bits() as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Sums beta over a family of cyclic flats, checking membership.
pub fn filter_beta_sum(beta: &BetaTable, filter: &[Subset]) -> Result<i64, Error> {
    let mut total = 0i64;
    for &f in filter {
        if !beta.z.contains(f) {
            return Err(Error::NotACyclicFlat(f));
        }
        total += beta.value(f);
    }
    Ok(total)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IeMode {
    /// Alternating sum of ranks of unions over nonempty subfamilies.
    Unions,
    /// Alternating sum of ranks of intersections over nonempty subfamilies.
    Intersections,
}

pub fn rhs_inclusion_exclusion(
    m: &Matroid,
    family: &[Subset],
    mode: IeMode,
) -> Result<i64, Error> {
    rhs_inclusion_exclusion_capped(m, family, mode, DEFAULT_FAMILY_CAP)
}

/// sum over nonempty subfamilies G of (-1)^(|G|+1) r(combine G), where
/// combine is union or intersection per the mode. Direct evaluation, 2^k
/// terms; errors past the cap.
pub fn rhs_inclusion_exclusion_capped(
    m: &Matroid,
    family: &[Subset],
    mode: IeMode,
    cap: usize,
) -> Result<i64, Error> {
    if family.len() > cap {
        return Err(Error::FamilyTooLarge { size: family.len(), cap });
    }
    let k = family.len();
    let mut total = 0i64;
    for pick in 1u32..1 << k {
        let mut combined = match mode {
            IeMode::Unions => Subset::EMPTY,
            IeMode::Intersections => m.ground(),
        };
        for (i, &f) in family.iter().enumerate() {
            if pick >> i & 1 == 1 {
                combined = match mode {
                    IeMode::Unions => combined.union(f),
                    IeMode::Intersections => combined.intersect(f),
                };
            }
        }
        let sign = if pick.count_ones() % 2 == 1 { 1 } else { -1 };
        total += sign * m.rank(combined) as i64;
    }
    Ok(total)
}

/// Members of the family with no proper subset in the family, deduplicated.
pub fn minimal_sets(family: &[Subset]) -> Vec<Subset> {
    let mut out: Vec<Subset> = family
        .iter()
        .copied()
        .filter(|&f| !family.iter().any(|&g| g.is_proper_subset_of(f)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The union-form alternating sum over a family, collapsing to the minimal
/// sets when the family is large. Small families evaluate both ways and the
/// two must agree.
pub fn filter_rhs(m: &Matroid, family: &[Subset]) -> Result<i64, Error> {
    let mins = minimal_sets(family);
    let reduced = rhs_inclusion_exclusion(m, &mins, IeMode::Unions)?;
    if family.len() <= REDUCE_ABOVE {
        let full = rhs_inclusion_exclusion(m, family, IeMode::Unions)?;
        if full != reduced {
            return Err(Error::Inconsistency(
                "minimal-set reduction of the alternating rank sum disagrees with the full sum",
            ));
        }
    }
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(r: usize, n: usize) -> Matroid {
        let table = (0..1u32 << n).map(|x| (x.count_ones() as u8).min(r as u8)).collect();
        Matroid::from_rank_table(n, table).unwrap()
    }

    fn two_pairs() -> Matroid {
        Matroid::from_circuits(
            4,
            &[Subset::from_elements([0, 1]), Subset::from_elements([2, 3])],
        )
        .unwrap()
    }

    #[test]
    fn beta_on_a_uniform_matroid() {
        let m = uniform(3, 6);
        let b = beta(&m);
        assert_eq!(b.value(Subset::EMPTY), 3);
        assert_eq!(b.value(Subset::full(6)), 0);
        for x in 0..64u32 {
            // only the two lattice members contribute above any subset
            assert_eq!(b.value(Subset(x)), 3 - m.rank(Subset(x)) as i64);
        }
        assert!(b.first_negative().is_none());
    }

    #[test]
    fn beta_on_the_diamond() {
        let m = two_pairs();
        let b = beta(&m);
        assert_eq!(b.value(Subset::EMPTY), 0);
        assert_eq!(b.value(Subset::from_elements([0, 1])), 1);
        assert_eq!(b.value(Subset::from_elements([2, 3])), 1);
        assert_eq!(b.value(Subset::full(4)), 0);
        // lattice values add up to the rank
        let total: i64 = b.zlattice().flats().iter().map(|&f| b.value(f)).sum();
        assert_eq!(total, m.full_rank() as i64);
    }

    #[test]
    fn alpha_of_three_parallel_points() {
        let m = uniform(1, 3);
        let a = alpha(&m).unwrap();
        assert_eq!(a.value(Subset::EMPTY), 0);
        assert_eq!(a.value(Subset::full(3)), 2);
        assert_eq!(a.value(Subset::from_elements([0, 1])), 1);
        assert_eq!(a.value(Subset::singleton(1)), 0);
    }

    #[test]
    fn alpha_vanishes_on_noncyclic_flats() {
        let m = two_pairs();
        let a = alpha(&m).unwrap();
        for x in 0..16u32 {
            let s = Subset(x);
            if m.is_flat(s) && !m.is_cyclic(s) {
                assert_eq!(a.value(s), 0, "alpha nonzero on non-cyclic flat {s}");
            }
        }
    }

    #[test]
    fn alpha_matches_dual_beta_on_a_self_dual_matroid() {
        let m = uniform(2, 4);
        let a = alpha(&m).unwrap();
        let bd = beta(&m.dual());
        for x in 0..16u32 {
            let s = Subset(x);
            assert_eq!(a.value(s), bd.value(s.complement_in(4)));
        }
    }

    #[test]
    fn alternating_sums_on_the_diamond() {
        let m = two_pairs();
        let f1 = Subset::from_elements([0, 1]);
        let f2 = Subset::from_elements([2, 3]);
        assert_eq!(
            rhs_inclusion_exclusion(&m, &[f1, f2], IeMode::Unions).unwrap(),
            1 + 1 - 2
        );
        assert_eq!(
            rhs_inclusion_exclusion(&m, &[f1, f2], IeMode::Intersections).unwrap(),
            1 + 1 - 0
        );
    }

    #[test]
    fn family_cap_is_enforced() {
        let m = uniform(1, 3);
        let family = [Subset::singleton(0); 21];
        assert!(matches!(
            rhs_inclusion_exclusion(&m, &family, IeMode::Unions),
            Err(Error::FamilyTooLarge { size: 21, cap: 20 })
        ));
    }

    #[test]
    fn filter_sum_rejects_outsiders() {
        let m = two_pairs();
        let b = beta(&m);
        assert!(matches!(
            filter_beta_sum(&b, &[Subset::singleton(0)]),
            Err(Error::NotACyclicFlat(_))
        ));
        let whole: Vec<Subset> = b.zlattice().flats().to_vec();
        assert_eq!(filter_beta_sum(&b, &whole).unwrap(), 2);
    }

    #[test]
    fn reduction_agrees_with_full_sum() {
        let m = two_pairs();
        let f1 = Subset::from_elements([0, 1]);
        let full4 = Subset::full(4);
        // {f1, E} has minimal set {f1}; reduced sum must match
        let v = filter_rhs(&m, &[f1, full4]).unwrap();
        assert_eq!(v, rhs_inclusion_exclusion(&m, &[f1, full4], IeMode::Unions).unwrap());
        assert_eq!(minimal_sets(&[f1, full4]), alloc::vec![f1]);
    }
}

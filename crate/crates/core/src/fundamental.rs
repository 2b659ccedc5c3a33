//! Fundamental transversal matroids: the matroids reaching equality in every
//! alternating rank bound, equivalently those with a basis meeting every
//! cyclic flat in a spanning set.
//!
//! Six independent routes decide the same property and are kept separate so
//! they can be cross-checked: antichain equalities, filter beta sums, column
//! incidence equalities, direct basis search, the dual (union-form)
//! equalities, and the inequality over intersections of cyclic flats.

use crate::cyclic::{cyclic_flats, EnumOptions};
use crate::error::Error;
use crate::mason::{
    alpha, beta, rhs_inclusion_exclusion, IeMode, DEFAULT_FAMILY_CAP,
};
use crate::matroid::Matroid;
use crate::setsystem::SetSystem;
use crate::subset::Subset;
use crate::transversal::{
    maximal_presentation, phi_from_presentation, verify_phi, CheckOutcome, FamilyViolation,
    PhiMode,
};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct FundamentalVerdict {
    pub fundamental: bool,
    /// A basis whose trace on every cyclic flat spans that flat; present
    /// exactly when fundamental.
    pub basis: Option<Subset>,
    /// First family breaking the equality, present exactly when not.
    pub violation: Option<FamilyViolation>,
}

/// Equality of r(intersection) with the alternating union sum over every
/// nonempty antichain of cyclic flats. Strict inequality anywhere refutes
/// fundamentality; equality everywhere implies it, and then a witnessing
/// basis is attached.
pub fn is_fundamental(m: &Matroid) -> Result<FundamentalVerdict, Error> {
    is_fundamental_with(m, &EnumOptions::default())
}

pub fn is_fundamental_with(
    m: &Matroid,
    options: &EnumOptions,
) -> Result<FundamentalVerdict, Error> {
    let outcome = antichain_equality_check(m, options)?;
    if let Some(v) = outcome.violation {
        return Ok(FundamentalVerdict { fundamental: false, basis: None, violation: Some(v) });
    }
    match fundamental_bases(m).into_iter().next() {
        Some(b) => {
            Ok(FundamentalVerdict { fundamental: true, basis: Some(b), violation: None })
        }
        None => Err(Error::Inconsistency(
            "equalities hold on all antichains yet no fundamental basis exists",
        )),
    }
}

/// All bases meeting every cyclic flat in a spanning subset, in increasing
/// bitmask order. Nonempty exactly for fundamental transversal matroids.
pub fn fundamental_bases(m: &Matroid) -> Vec<Subset> {
    let z = cyclic_flats(m);
    m.bases()
        .into_iter()
        .filter(|&b| z.iter().all(|(f, r)| m.rank(b.intersect(f)) == r))
        .collect()
}

/// lhs r(intersection) vs rhs alternating union sum, equality required, over
/// nonempty antichains.
pub fn antichain_equality_check(
    m: &Matroid,
    options: &EnumOptions,
) -> Result<CheckOutcome, Error> {
    let z = cyclic_flats(m);
    let mut outcome = CheckOutcome::passed();
    let mut err = None;
    z.for_each_antichain(options, |idx| {
        let family: Vec<Subset> = idx.iter().map(|&i| z.flat(i)).collect();
        let inter = family.iter().fold(m.ground(), |acc, &f| acc.intersect(f));
        match rhs_inclusion_exclusion(m, &family, IeMode::Unions) {
            Ok(rhs) => {
                let lhs = m.rank(inter) as i64;
                if lhs == rhs {
                    true
                } else {
                    outcome = CheckOutcome::failed(FamilyViolation { family, lhs, rhs });
                    false
                }
            }
            Err(e) => {
                err = Some(e);
                false
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(outcome),
    }
}

/// Over every nonempty filter: the beta values must add up to
/// r(M) - r(intersection of the filter).
pub fn filter_equality_check(m: &Matroid) -> Result<CheckOutcome, Error> {
    filter_equality_check_with(m, &EnumOptions::default())
}

pub fn filter_equality_check_with(
    m: &Matroid,
    options: &EnumOptions,
) -> Result<CheckOutcome, Error> {
    let b = beta(m);
    let z = b.zlattice();
    let r = m.full_rank() as i64;
    let mut outcome = CheckOutcome::passed();
    z.for_each_filter(options, |idx| {
        let family: Vec<Subset> = idx.iter().map(|&i| z.flat(i)).collect();
        let inter = family.iter().fold(m.ground(), |acc, &f| acc.intersect(f));
        let lhs: i64 = family.iter().map(|&f| b.value(f)).sum();
        let rhs = r - m.rank(inter) as i64;
        if lhs == rhs {
            true
        } else {
            outcome = CheckOutcome::failed(FamilyViolation { family, lhs, rhs });
            false
        }
    })?;
    Ok(outcome)
}

/// The union-form equalities: r(union) must equal the alternating sum of
/// ranks of intersections over antichains, and alpha must add up to
/// nullity(union) over ideals. The two verdicts must agree; disagreement is
/// an internal error.
pub fn dual_form_check(m: &Matroid) -> Result<CheckOutcome, Error> {
    dual_form_check_with(m, &EnumOptions::default())
}

pub fn dual_form_check_with(
    m: &Matroid,
    options: &EnumOptions,
) -> Result<CheckOutcome, Error> {
    let z = cyclic_flats(m);
    let mut by_ranks = CheckOutcome::passed();
    let mut err = None;
    z.for_each_antichain(options, |idx| {
        let family: Vec<Subset> = idx.iter().map(|&i| z.flat(i)).collect();
        let union = family.iter().fold(Subset::EMPTY, |acc, &f| acc.union(f));
        match rhs_inclusion_exclusion(m, &family, IeMode::Intersections) {
            Ok(rhs) => {
                let lhs = m.rank(union) as i64;
                if lhs == rhs {
                    true
                } else {
                    by_ranks = CheckOutcome::failed(FamilyViolation { family, lhs, rhs });
                    false
                }
            }
            Err(e) => {
                err = Some(e);
                false
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let a = alpha(m)?;
    let mut by_alpha = CheckOutcome::passed();
    z.for_each_ideal(options, |idx| {
        let family: Vec<Subset> = idx.iter().map(|&i| z.flat(i)).collect();
        let union = family.iter().fold(Subset::EMPTY, |acc, &f| acc.union(f));
        let lhs: i64 = family.iter().map(|&f| a.value(f)).sum();
        let rhs = m.nullity(union) as i64;
        if lhs == rhs {
            true
        } else {
            by_alpha = CheckOutcome::failed(FamilyViolation { family, lhs, rhs });
            false
        }
    })?;
    if by_ranks.holds != by_alpha.holds {
        return Err(Error::Inconsistency(
            "union-form rank equalities and alpha sums disagree",
        ));
    }
    Ok(by_ranks)
}

/// r(union) >= alternating sum of ranks of intersections, over every
/// nonempty family drawn from the intersection-closure of the cyclic flats.
/// Holding everywhere as an inequality is equivalent to holding everywhere
/// as an equality, so finding the inequality intact but an equality broken
/// is an internal error.
pub fn brylawski_check(m: &Matroid) -> Result<CheckOutcome, Error> {
    brylawski_check_capped(m, DEFAULT_FAMILY_CAP)
}

pub fn brylawski_check_capped(m: &Matroid, cap: usize) -> Result<CheckOutcome, Error> {
    let z = cyclic_flats(m);
    let mut members: Vec<Subset> = z.flats().to_vec();
    members.sort_unstable();
    // close under pairwise intersection
    let mut grew = true;
    while grew {
        grew = false;
        let snapshot = members.clone();
        for (i, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[i + 1..] {
                let c = a.intersect(b);
                if members.binary_search(&c).is_err() {
                    let at = members.binary_search(&c).unwrap_err();
                    members.insert(at, c);
                    grew = true;
                    if members.len() > cap {
                        return Err(Error::FamilyTooLarge { size: members.len(), cap });
                    }
                }
            }
        }
    }
    if members.len() > cap {
        return Err(Error::FamilyTooLarge { size: members.len(), cap });
    }
    members.sort_unstable_by_key(|f| (f.card(), f.bits()));
    let c = members.len();
    // per family-bitmask tables of the union, the intersection, and the
    // alternating sum of ranks of intersections of subfamilies
    let mut union_of = vec![0u32; 1 << c];
    let mut meet_of = vec![m.ground().bits(); 1 << c];
    let mut rhs = vec![0i64; 1 << c];
    for s in 1usize..1 << c {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        union_of[s] = union_of[rest] | members[low].bits();
        meet_of[s] = meet_of[rest] & members[low].bits();
        let sign = if (s.count_ones() & 1) == 1 { 1 } else { -1 };
        rhs[s] = sign * m.rank(Subset(meet_of[s])) as i64;
    }
    for e in 0..c {
        let bit = 1usize << e;
        for s in 0..1usize << c {
            if s & bit != 0 {
                rhs[s] += rhs[s ^ bit];
            }
        }
    }
    let mut first_unequal: Option<FamilyViolation> = None;
    let mut any_below = false;
    for s in 1usize..1 << c {
        let lhs = m.rank(Subset(union_of[s])) as i64;
        if lhs < rhs[s] {
            any_below = true;
        }
        if lhs != rhs[s] && first_unequal.is_none() {
            first_unequal = Some(FamilyViolation {
                family: (0..c).filter(|i| s >> i & 1 == 1).map(|i| members[i]).collect(),
                lhs,
                rhs: rhs[s],
            });
        }
    }
    match first_unequal {
        None => Ok(CheckOutcome::passed()),
        Some(v) if any_below => Ok(CheckOutcome::failed(v)),
        Some(_) => Err(Error::Inconsistency(
            "alternating sums never exceed the union rank yet an equality fails",
        )),
    }
}

/// The six decision routes, for cross-checking and for callers that want a
/// particular certificate flavor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Antichain,
    Filter,
    Phi,
    Basis,
    Dual,
    Brylawski,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Antichain,
        Method::Filter,
        Method::Phi,
        Method::Basis,
        Method::Dual,
        Method::Brylawski,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Antichain => "antichain",
            Method::Filter => "filter",
            Method::Phi => "phi",
            Method::Basis => "basis",
            Method::Dual => "dual",
            Method::Brylawski => "brylawski",
        }
    }
}

/// Runs one route. The phi route needs a presentation, so on a
/// non-transversal matroid it reports false with no family attached; the
/// basis route likewise carries no family.
pub fn check_by_method(m: &Matroid, method: Method) -> Result<CheckOutcome, Error> {
    let options = EnumOptions::default();
    match method {
        Method::Antichain => antichain_equality_check(m, &options),
        Method::Filter => filter_equality_check_with(m, &options),
        Method::Phi => match maximal_presentation(m) {
            Err(Error::NotTransversal { .. }) => {
                Ok(CheckOutcome { holds: false, violation: None })
            }
            Err(e) => Err(e),
            Ok(a) => {
                let z = cyclic_flats(m);
                let phi = phi_from_presentation(m, &a, &z)?;
                verify_phi(m, &z, &phi, PhiMode::Fundamental, &options)
            }
        },
        Method::Basis => Ok(CheckOutcome {
            holds: !fundamental_bases(m).is_empty(),
            violation: None,
        }),
        Method::Dual => dual_form_check_with(m, &options),
        Method::Brylawski => brylawski_check(m),
    }
}

/// Grows the given presentation of m into a presentation of a fundamental
/// extension: any column contained in the union of the others gets a fresh
/// private element appended to the ground set and to that column only.
/// Restricting the result to the original ground set gives back m.
pub fn fundamental_extension_from(
    m: &Matroid,
    a: &SetSystem,
) -> Result<(Matroid, SetSystem), Error> {
    if a.n() != m.n() || Matroid::from_presentation(a)? != *m {
        return Err(Error::PresentsDifferentMatroid);
    }
    let mut cols: Vec<Subset> = a.columns().to_vec();
    let mut n = m.n();
    for i in 0..cols.len() {
        let others = cols
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Subset::EMPTY, |acc, (_, &c)| acc.union(c));
        if cols[i].is_subset_of(others) {
            if n >= crate::matroid::MAX_GROUND_SET {
                return Err(Error::GroundSetTooLarge { n: n + 1, max: crate::matroid::MAX_GROUND_SET });
            }
            cols[i] = cols[i].with(n);
            n += 1;
        }
    }
    for (i, &c) in cols.iter().enumerate() {
        let others = cols
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Subset::EMPTY, |acc, (_, &col)| acc.union(col));
        if c.is_subset_of(others) {
            return Err(Error::Inconsistency("extension left a column without a private element"));
        }
    }
    let system = SetSystem::new(n, cols)?;
    let big = Matroid::from_presentation(&system)?;
    if big.restrict(Subset::full(m.n())) != *m {
        return Err(Error::Inconsistency("extension does not restrict back to its source"));
    }
    Ok((big, system))
}

/// Extension starting from the maximal presentation. Errors with the
/// negative beta witness when m is not transversal.
pub fn fundamental_extension(m: &Matroid) -> Result<(Matroid, SetSystem), Error> {
    let a = maximal_presentation(m)?;
    fundamental_extension_from(m, &a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_pairs() -> Matroid {
        Matroid::from_circuits(
            4,
            &[Subset::from_elements([0, 1]), Subset::from_elements([2, 3])],
        )
        .unwrap()
    }

    /// Two disjoint 3-point lines in rank 3: transversal, not fundamental.
    fn disjoint_lines() -> Matroid {
        let sys = SetSystem::new(
            6,
            vec![
                Subset::full(6),
                Subset::from_elements([0, 1, 2]),
                Subset::from_elements([3, 4, 5]),
            ],
        )
        .unwrap();
        Matroid::from_presentation(&sys).unwrap()
    }

    #[test]
    fn diamond_is_fundamental() {
        let v = is_fundamental(&two_pairs()).unwrap();
        assert!(v.fundamental);
        assert_eq!(v.basis, Some(Subset::from_elements([0, 2])));
        assert!(v.violation.is_none());
    }

    #[test]
    fn disjoint_lines_are_not_fundamental() {
        let m = disjoint_lines();
        let v = is_fundamental(&m).unwrap();
        assert!(!v.fundamental);
        let viol = v.violation.unwrap();
        assert_eq!(
            viol.family,
            vec![Subset::from_elements([0, 1, 2]), Subset::from_elements([3, 4, 5])]
        );
        assert_eq!((viol.lhs, viol.rhs), (0, 1));
        assert!(fundamental_bases(&m).is_empty());
    }

    #[test]
    fn all_methods_agree_on_both_fixtures() {
        for (m, expect) in [(two_pairs(), true), (disjoint_lines(), false)] {
            for method in Method::ALL {
                let got = check_by_method(&m, method).unwrap();
                assert_eq!(got.holds, expect, "method {}", method.name());
            }
        }
    }

    #[test]
    fn filter_violation_carries_both_sides() {
        let m = disjoint_lines();
        let out = filter_equality_check(&m).unwrap();
        assert!(!out.holds);
        let v = out.violation.unwrap();
        // beta adds to 2 over the violating filter, the rank difference is 3
        assert_eq!((v.lhs, v.rhs), (2, 3));
    }

    #[test]
    fn brylawski_violation_is_the_disjoint_pair() {
        let m = disjoint_lines();
        let out = brylawski_check(&m).unwrap();
        assert!(!out.holds);
        let v = out.violation.unwrap();
        assert_eq!(
            v.family,
            vec![Subset::from_elements([0, 1, 2]), Subset::from_elements([3, 4, 5])]
        );
        assert_eq!((v.lhs, v.rhs), (3, 4));
    }

    #[test]
    fn brylawski_passes_on_the_diamond() {
        assert!(brylawski_check(&two_pairs()).unwrap().holds);
    }

    #[test]
    fn extension_makes_disjoint_lines_fundamental() {
        let m = disjoint_lines();
        let (big, system) = fundamental_extension(&m).unwrap();
        assert_eq!(big.n(), 9);
        assert_eq!(system.len(), 3);
        assert_eq!(big.restrict(Subset::full(6)), m);
        assert!(is_fundamental(&big).unwrap().fundamental);
    }

    #[test]
    fn extension_is_a_no_op_with_private_columns() {
        let m = two_pairs();
        let a = maximal_presentation(&m).unwrap();
        let (big, system) = fundamental_extension_from(&m, &a).unwrap();
        assert_eq!(big, m);
        assert_eq!(system, a);
    }

    #[test]
    fn extension_rejects_non_transversal_sources_later() {
        // a wrong presentation is rejected up front
        let m = two_pairs();
        let a = SetSystem::new(4, vec![Subset::full(4); 2]).unwrap();
        assert!(matches!(
            fundamental_extension_from(&m, &a),
            Err(Error::PresentsDifferentMatroid)
        ));
    }
}

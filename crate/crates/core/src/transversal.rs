//! Deciding transversality with certificates either way: a presentation when
//! the matroid is transversal, a subset with negative beta when it is not.
//!
//! The positive certificate is the maximal presentation: the complement of
//! each cyclic flat F, taken beta(F) times. It is unique, has exactly r(M)
//! columns, and no column can grow without changing the matroid.

use crate::cyclic::{EnumOptions, ZLattice};
use crate::error::Error;
use crate::mason::{beta, filter_rhs, rhs_inclusion_exclusion, BetaTable, IeMode};
use crate::matroid::Matroid;
use crate::setsystem::SetSystem;
use crate::subset::Subset;
use alloc::vec::Vec;

/// A family of cyclic flats together with the two sides of the relation it
/// breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyViolation {
    pub family: Vec<Subset>,
    pub lhs: i64,
    pub rhs: i64,
}

/// Outcome of one quantified check: whether it held everywhere, and the first
/// violating family (in enumeration order) when it did not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    pub violation: Option<FamilyViolation>,
}

impl CheckOutcome {
    pub fn passed() -> CheckOutcome {
        CheckOutcome { holds: true, violation: None }
    }

    pub fn failed(v: FamilyViolation) -> CheckOutcome {
        CheckOutcome { holds: false, violation: Some(v) }
    }
}

#[derive(Clone, Debug)]
pub enum TransversalCertificate {
    Presentation(SetSystem),
    NegativeBeta { witness: Subset, beta: i64 },
}

#[derive(Clone, Debug)]
pub struct TransversalVerdict {
    pub transversal: bool,
    pub certificate: TransversalCertificate,
}

/// Transversal iff beta is nonnegative on every subset. The negative witness
/// is the smallest bitmask with a negative entry.
pub fn is_transversal(m: &Matroid) -> TransversalVerdict {
    let b = beta(m);
    match b.first_negative() {
        Some((witness, value)) => TransversalVerdict {
            transversal: false,
            certificate: TransversalCertificate::NegativeBeta { witness, beta: value },
        },
        None => TransversalVerdict {
            transversal: true,
            certificate: TransversalCertificate::Presentation(presentation_from(m, &b)),
        },
    }
}

fn presentation_from(m: &Matroid, b: &BetaTable) -> SetSystem {
    let n = m.n();
    let mut cols = Vec::new();
    for (f, _) in b.zlattice().iter() {
        for _ in 0..b.value(f) {
            cols.push(f.complement_in(n));
        }
    }
    SetSystem::new(n, cols).unwrap()
}

/// The unique maximal presentation; errors with the negative witness when the
/// matroid is not transversal.
pub fn maximal_presentation(m: &Matroid) -> Result<SetSystem, Error> {
    let b = beta(m);
    if let Some((witness, value)) = b.first_negative() {
        return Err(Error::NotTransversal { witness, beta: value });
    }
    Ok(presentation_from(m, &b))
}

/// Grows each column by the coloops of the matroid with that column deleted,
/// until every column complement is a cyclic flat. The matroid presented
/// never changes; that is re-checked at every step and a failure means a
/// kernel bug, not bad input.
pub fn complete_presentation(m: &Matroid, a: &SetSystem) -> Result<SetSystem, Error> {
    let n = m.n();
    if a.n() != n || Matroid::from_presentation(a)? != *m {
        return Err(Error::PresentsDifferentMatroid);
    }
    let mut cols: Vec<Subset> = a.columns().to_vec();
    for i in 0..cols.len() {
        loop {
            let kept = cols[i].complement_in(n);
            let r = m.rank(kept);
            let coloops =
                Subset::from_elements(kept.elements().filter(|&e| m.rank(kept.without(e)) < r));
            if coloops.is_empty() {
                break;
            }
            cols[i] = cols[i].union(coloops);
            let now = SetSystem::new(n, cols.clone())?;
            if Matroid::from_presentation(&now)? != *m {
                return Err(Error::Inconsistency(
                    "column completion changed the presented matroid",
                ));
            }
        }
    }
    SetSystem::new(n, cols)
}

/// Which columns each cyclic flat meets, indexed like the lattice.
#[derive(Clone, Debug)]
pub struct PhiMap {
    columns: usize,
    per_flat: Vec<Subset>,
}

impl PhiMap {
    /// Column set of the flat at lattice index i, as a bitmask over columns.
    pub fn of_index(&self, i: usize) -> Subset {
        self.per_flat[i]
    }

    pub fn columns(&self) -> usize {
        self.columns
    }
}

/// Builds F -> {columns meeting F} over the lattice and validates what makes
/// it usable: the image of F has exactly r(F) columns, joins map to unions,
/// and no two flats collide. Any failure signals that the system does not
/// present this matroid.
pub fn phi_from_presentation(
    m: &Matroid,
    a: &SetSystem,
    z: &ZLattice,
) -> Result<PhiMap, Error> {
    let per_flat: Vec<Subset> = z
        .flats()
        .iter()
        .map(|&f| {
            Subset::from_elements(
                a.columns().iter().enumerate().filter(|&(_, c)| c.meets(f)).map(|(k, _)| k),
            )
        })
        .collect();
    for i in 0..z.len() {
        if per_flat[i].card() != z.rank_of(i) {
            return Err(Error::PhiProperty {
                property: "image size equals rank",
                f: z.flat(i),
                g: z.flat(i),
            });
        }
    }
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            if per_flat[i] == per_flat[j] {
                return Err(Error::PhiProperty {
                    property: "injective",
                    f: z.flat(i),
                    g: z.flat(j),
                });
            }
            let join = m.closure(z.flat(i).union(z.flat(j)));
            let Some(k) = z.index_of(join) else {
                return Err(Error::Inconsistency("join of cyclic flats left the lattice"));
            };
            if per_flat[k] != per_flat[i].union(per_flat[j]) {
                return Err(Error::PhiProperty {
                    property: "join maps to union",
                    f: z.flat(i),
                    g: z.flat(j),
                });
            }
        }
    }
    Ok(PhiMap { columns: a.len(), per_flat })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PhiMode {
    /// r(meet of the family) <= columns meeting every member.
    Transversal,
    /// Equality everywhere.
    Fundamental,
}

/// Checks r(intersection) against the size of the common column set over
/// every nonempty antichain of the lattice.
pub fn verify_phi(
    m: &Matroid,
    z: &ZLattice,
    phi: &PhiMap,
    mode: PhiMode,
    options: &EnumOptions,
) -> Result<CheckOutcome, Error> {
    let mut outcome = CheckOutcome::passed();
    z.for_each_antichain(options, |idx| {
        let mut inter = m.ground();
        let mut cols = Subset::full(phi.columns());
        for &i in idx {
            inter = inter.intersect(z.flat(i));
            cols = cols.intersect(phi.of_index(i));
        }
        let lhs = m.rank(inter) as i64;
        let rhs = cols.card() as i64;
        let ok = match mode {
            PhiMode::Transversal => lhs <= rhs,
            PhiMode::Fundamental => lhs == rhs,
        };
        if !ok {
            outcome = CheckOutcome::failed(FamilyViolation {
                family: idx.iter().map(|&i| z.flat(i)).collect(),
                lhs,
                rhs,
            });
        }
        ok
    })?;
    Ok(outcome)
}

/// Delta(x) = columns containing x, for each element, over canonical column
/// order.
pub fn delta_faces(a: &SetSystem) -> Vec<Subset> {
    (0..a.n())
        .map(|e| {
            Subset::from_elements(
                a.columns().iter().enumerate().filter(|&(_, c)| c.contains(e)).map(|(k, _)| k),
            )
        })
        .collect()
}

/// Delta(X): union of the faces of the elements of X.
pub fn delta_of_set(a: &SetSystem, x: Subset) -> Subset {
    let faces = delta_faces(a);
    x.elements().fold(Subset::EMPTY, |acc, e| acc.union(faces[e]))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyMode {
    Antichains,
    Filters,
    /// All nonempty subsets of the lattice.
    Subsets,
}

/// One family with both sides of the rank inequality:
/// lhs = r(intersection), rhs = alternating sum of ranks of unions.
#[derive(Clone, Debug)]
pub struct IeRow {
    pub family: Vec<Subset>,
    pub lhs: i64,
    pub rhs: i64,
}

/// Evaluates the intersection-vs-alternating-union relation over the chosen
/// family class. Transversal matroids satisfy lhs <= rhs on every row;
/// fundamental transversal matroids satisfy equality on every row.
pub fn mason_ingleton_report(
    m: &Matroid,
    z: &ZLattice,
    mode: FamilyMode,
    options: &EnumOptions,
) -> Result<Vec<IeRow>, Error> {
    let mut rows = Vec::new();
    let mut err = None;
    let visit = &mut |idx: &[usize]| {
        let family: Vec<Subset> = idx.iter().map(|&i| z.flat(i)).collect();
        let inter = family.iter().fold(m.ground(), |acc, &f| acc.intersect(f));
        let rhs = if mode == FamilyMode::Filters {
            filter_rhs(m, &family)
        } else {
            rhs_inclusion_exclusion(m, &family, IeMode::Unions)
        };
        match rhs {
            Ok(rhs) => {
                rows.push(IeRow { family, lhs: m.rank(inter) as i64, rhs });
                true
            }
            Err(e) => {
                err = Some(e);
                false
            }
        }
    };
    match mode {
        FamilyMode::Antichains => z.for_each_antichain(options, visit)?,
        FamilyMode::Filters => z.for_each_filter(options, visit)?,
        FamilyMode::Subsets => z.for_each_subfamily(options, visit)?,
    };
    match err {
        Some(e) => Err(e),
        None => Ok(rows),
    }
}

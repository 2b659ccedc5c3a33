use crate::subset::Subset;
use alloc::string::String;
use core::fmt;

/// Everything that can go wrong building or interrogating a matroid.
#[derive(Clone, PartialEq, Eq)]
pub enum Error {
    /// Ground set exceeds the configured cap (tables have 2^n entries).
    GroundSetTooLarge { n: usize, max: usize },
    /// An element index is >= n.
    ElementOutOfRange { element: usize, n: usize },
    /// Rank table length differs from 2^n.
    TableLength { expected: usize, got: usize },
    /// A rank axiom fails; `rule` names it, `x` is the offending subset.
    RankAxiom { rule: &'static str, x: Subset },
    BasesEmpty,
    BasesUnequalSizes { expected: usize, basis: Subset },
    BasisExchange { from: Subset, to: Subset, remove: usize },
    CircuitEmpty,
    CircuitsNested { inner: Subset, outer: Subset },
    CircuitElimination { c1: Subset, c2: Subset, common: usize },
    NotACyclicFlat(Subset),
    /// Family enumeration produced more families than the configured limit.
    EnumerationLimit { limit: u64 },
    /// An inclusion-exclusion family has more sets than the configured cap.
    FamilyTooLarge { size: usize, cap: usize },
    /// Asked for a presentation of a matroid that has none.
    NotTransversal { witness: Subset, beta: i64 },
    /// A supplied presentation does not present the expected matroid.
    PresentsDifferentMatroid,
    /// A property of the column map over cyclic flats fails, which means the
    /// supplied system does not present the matroid it was paired with.
    PhiProperty { property: &'static str, f: Subset, g: Subset },
    /// Two evaluations that must agree did not; always a bug, never an input
    /// problem, surfaced instead of being patched over.
    Inconsistency(&'static str),
    /// Oracle bounds exceeded (exhaustive search only scales so far).
    OracleBounds { what: &'static str, value: usize, max: usize },
    UnknownName(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GroundSetTooLarge { n, max } => {
                write!(f, "ground set size {n} exceeds cap {max}")
            }
            Error::ElementOutOfRange { element, n } => {
                write!(f, "element {element} out of range for ground set of size {n}")
            }
            Error::TableLength { expected, got } => {
                write!(f, "rank table has {got} entries, expected {expected}")
            }
            Error::RankAxiom { rule, x } => write!(f, "rank axiom violated ({rule}) at {x}"),
            Error::BasesEmpty => write!(f, "basis list is empty"),
            Error::BasesUnequalSizes { expected, basis } => {
                write!(f, "basis {basis} does not have the common size {expected}")
            }
            Error::BasisExchange { from, to, remove } => write!(
                f,
                "basis exchange fails from {from} to {to} removing {remove}"
            ),
            Error::CircuitEmpty => write!(f, "the empty set cannot be a circuit"),
            Error::CircuitsNested { inner, outer } => {
                write!(f, "circuit {inner} is contained in circuit {outer}")
            }
            Error::CircuitElimination { c1, c2, common } => write!(
                f,
                "no circuit inside {c1} union {c2} minus common element {common}"
            ),
            Error::NotACyclicFlat(x) => write!(f, "{x} is not a cyclic flat"),
            Error::EnumerationLimit { limit } => {
                write!(f, "family enumeration exceeds the limit of {limit}")
            }
            Error::FamilyTooLarge { size, cap } => {
                write!(f, "family of {size} sets exceeds the inclusion-exclusion cap {cap}")
            }
            Error::NotTransversal { witness, beta } => {
                write!(f, "matroid is not transversal: beta({witness}) = {beta}")
            }
            Error::PresentsDifferentMatroid => {
                write!(f, "set system does not present the given matroid")
            }
            Error::PhiProperty { property, f: a, g } => {
                write!(f, "column map property failed ({property}) at {a}, {g}")
            }
            Error::Inconsistency(what) => write!(f, "internal consistency check failed: {what}"),
            Error::OracleBounds { what, value, max } => {
                write!(f, "oracle bound exceeded: {what} = {value}, max {max}")
            }
            Error::UnknownName(name) => write!(f, "unknown matroid name: {name}"),
        }
    }
}

impl fmt::Debug for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

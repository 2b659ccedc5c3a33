//! Ready-made matroids: uniform families, two graphic fixtures, free
//! products, seeded random transversal instances, exhaustive enumeration of
//! tiny ground sets, and a labeled test corpus built from all of these.

use crate::error::Error;
use crate::fundamental::fundamental_extension;
use crate::matroid::Matroid;
use crate::setsystem::SetSystem;
use crate::subset::Subset;
use crate::transversal::is_transversal;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Uniform matroid: every set of more than r elements has rank r.
pub fn uniform(r: usize, n: usize) -> Result<Matroid, Error> {
    let table: Vec<u8> = (0u32..1 << n)
        .map(|mask| (Subset(mask).card().min(r)) as u8)
        .collect();
    Matroid::from_rank_table(n, table)
}

/// Every subset independent.
pub fn free(n: usize) -> Result<Matroid, Error> {
    uniform(n, n)
}

/// Every element a loop.
pub fn rank0(n: usize) -> Result<Matroid, Error> {
    uniform(0, n)
}

/// Cycle matroid of the complete graph on four vertices. Edge e between
/// vertices u < v is numbered by position in (01, 02, 03, 12, 13, 23).
pub fn mk4() -> Result<Matroid, Error> {
    let circuits = [
        Subset::from_elements([0, 1, 3]),
        Subset::from_elements([0, 2, 4]),
        Subset::from_elements([1, 2, 5]),
        Subset::from_elements([3, 4, 5]),
        Subset::from_elements([0, 2, 3, 5]),
        Subset::from_elements([0, 1, 4, 5]),
        Subset::from_elements([1, 2, 3, 4]),
    ];
    Matroid::from_circuits(6, &circuits)
}

/// Rank 4 on seven points: two 4-point planes {0,1,2,3} and {3,4,5,6}
/// sharing the point 3. Transversal but not fundamental, which makes it the
/// standard counterexample fixture here.
pub fn twin_planes() -> Result<Matroid, Error> {
    let f1 = Subset::from_elements([0, 1, 2, 3]);
    let f2 = Subset::from_elements([3, 4, 5, 6]);
    let mut circuits = vec![f1, f2];
    for mask in 0u32..1 << 7 {
        let x = Subset(mask);
        if x.card() == 5 && !f1.is_subset_of(x) && !f2.is_subset_of(x) {
            circuits.push(x);
        }
    }
    Matroid::from_circuits(7, &circuits)
}

/// Two disjoint 3-point lines spanning rank 3: the smallest transversal
/// matroid that is not fundamental.
pub fn disjoint_lines() -> Result<Matroid, Error> {
    let sys = SetSystem::new(
        6,
        vec![
            Subset::full(6),
            Subset::from_elements([0, 1, 2]),
            Subset::from_elements([3, 4, 5]),
        ],
    )?;
    Matroid::from_presentation(&sys)
}

/// Rank 2 on four points with {0,1} and {2,3} as parallel pairs; its cyclic
/// flats form a diamond.
pub fn two_pairs() -> Result<Matroid, Error> {
    Matroid::from_circuits(
        4,
        &[Subset::from_elements([0, 1]), Subset::from_elements([2, 3])],
    )
}

/// Looks up fixtures by name: "uniform(r,n)", "free(n)", "rank0(n)", "mk4",
/// "twin_planes", "disjoint_lines", "two_pairs".
pub fn named(name: &str) -> Result<Matroid, Error> {
    let s = name.trim();
    match s {
        "mk4" => return mk4(),
        "twin_planes" => return twin_planes(),
        "disjoint_lines" => return disjoint_lines(),
        "two_pairs" => return two_pairs(),
        _ => {}
    }
    if let Some(args) = s.strip_prefix("uniform(").and_then(|t| t.strip_suffix(')')) {
        if let Some((r, n)) = args.split_once(',') {
            if let (Ok(r), Ok(n)) = (r.trim().parse(), n.trim().parse()) {
                return uniform(r, n);
            }
        }
    }
    if let Some(arg) = s.strip_prefix("free(").and_then(|t| t.strip_suffix(')')) {
        if let Ok(n) = arg.trim().parse() {
            return free(n);
        }
    }
    if let Some(arg) = s.strip_prefix("rank0(").and_then(|t| t.strip_suffix(')')) {
        if let Ok(n) = arg.trim().parse() {
            return rank0(n);
        }
    }
    Err(Error::UnknownName(String::from(s)))
}

/// Free product. The ground set of n is shifted up by m.n(); bases are the
/// sets of size r(m) + r(n) whose front is independent in m and whose back
/// spans n. Built through the basis constructor, so the axioms are
/// re-verified on the way in.
pub fn free_product(m: &Matroid, n: &Matroid) -> Result<Matroid, Error> {
    let total = m.n() + n.n();
    if total > crate::matroid::MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge { n: total, max: crate::matroid::MAX_GROUND_SET });
    }
    let target = m.full_rank() + n.full_rank();
    let front_mask = Subset::full(m.n());
    let mut bases = Vec::new();
    for mask in 0u32..1 << total {
        let b = Subset(mask);
        if b.card() != target {
            continue;
        }
        let front = b.intersect(front_mask);
        let back = Subset(b.bits() >> m.n());
        if m.is_independent(front) && n.is_spanning(back) {
            bases.push(b);
        }
    }
    Matroid::from_bases(total, &bases)
}

/// Relabels so the first `front` elements move behind the rest, preserving
/// order inside each block. Turns a matroid on E(m) followed by E(n) into
/// the same matroid on E(n) followed by E(m), which is how the two sides of
/// the free product duality law line up.
pub fn block_swap(m: &Matroid, front: usize) -> Result<Matroid, Error> {
    let n = m.n();
    debug_assert!(front <= n);
    let back = n - front;
    let front_mask = (1u32 << front) - 1;
    let table: Vec<u8> = (0u32..1 << n)
        .map(|y| {
            let old = ((y & ((1 << back) - 1)) << front) | ((y >> back) & front_mask);
            m.rank(Subset(old)) as u8
        })
        .collect();
    Matroid::from_rank_table(n, table)
}

/// Transversal matroid of r pseudorandom columns over n elements, with the
/// system that produced it. Deterministic in the seed.
pub fn random_transversal(n: usize, r: usize, seed: u64) -> Result<(SetSystem, Matroid), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = Subset::full(n).bits();
    let columns: Vec<Subset> = (0..r).map(|_| Subset(rng.next_u32() & mask)).collect();
    let system = SetSystem::new(n, columns)?;
    let matroid = Matroid::from_presentation(&system)?;
    Ok((system, matroid))
}

/// Every labeled matroid on at most five elements, by trying every antichain
/// of equal-size sets as a basis family and keeping the ones that satisfy
/// exchange.
pub fn all_matroids(n: usize) -> Result<Vec<Matroid>, Error> {
    if n > 5 {
        return Err(Error::OracleBounds { what: "exhaustive ground set", value: n, max: 5 });
    }
    let mut out = Vec::new();
    for r in 0..=n {
        let r_sets: Vec<Subset> = (0u32..1 << n)
            .map(Subset)
            .filter(|x| x.card() == r)
            .collect();
        for family_mask in 1u32..1 << r_sets.len() {
            let bases: Vec<Subset> = r_sets
                .iter()
                .enumerate()
                .filter(|&(i, _)| family_mask >> i & 1 == 1)
                .map(|(_, &b)| b)
                .collect();
            if let Ok(m) = Matroid::from_bases(n, &bases) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub label: String,
    pub matroid: Matroid,
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub seed: u64,
    pub max_n: usize,
    pub random_presentations: usize,
    pub include_duals: bool,
    pub include_minors: bool,
    pub include_products: bool,
    pub include_extensions: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 1,
            max_n: 8,
            random_presentations: 40,
            include_duals: true,
            include_minors: true,
            include_products: true,
            include_extensions: true,
        }
    }
}

/// A labeled mix of fixtures, random transversal matroids, duals, minors,
/// free products, and fundamental extensions. Same CorpusSpec, same items.
pub fn corpus(spec: &CorpusSpec) -> Vec<CorpusItem> {
    let mut items: Vec<CorpusItem> = Vec::new();
    let push = |items: &mut Vec<CorpusItem>, label: String, m: Matroid| {
        items.push(CorpusItem { label, matroid: m });
    };

    let fixture_names = [
        "uniform(1,2)",
        "uniform(1,3)",
        "uniform(2,3)",
        "uniform(2,4)",
        "uniform(3,4)",
        "uniform(2,5)",
        "uniform(3,6)",
        "uniform(4,6)",
        "free(3)",
        "rank0(2)",
        "mk4",
        "twin_planes",
        "disjoint_lines",
        "two_pairs",
    ];
    for name in fixture_names {
        push(&mut items, String::from(name), named(name).unwrap());
    }
    if let Ok(sys) = SetSystem::new(4, vec![Subset::from_elements([0, 1, 2])]) {
        if let Ok(m) = Matroid::from_presentation(&sys) {
            push(&mut items, String::from("line-with-loop"), m);
        }
    }

    let base_count = items.len();
    if spec.include_duals {
        for i in 0..base_count {
            let item = items[i].clone();
            push(&mut items, format!("dual({})", item.label), item.matroid.dual());
        }
    }

    for i in 0..spec.random_presentations {
        let n = 4 + i % (spec.max_n.saturating_sub(3).max(1));
        let r = (2 + i % 4).min(n - 1).min(5);
        let seed = spec.seed.wrapping_add(i as u64);
        if let Ok((_, m)) = random_transversal(n, r, seed) {
            let label = format!("random(n={n},r={r},seed={seed})");
            if spec.include_duals {
                push(&mut items, format!("dual({label})"), m.dual());
            }
            push(&mut items, label, m);
        }
    }

    if spec.include_minors {
        for name in ["mk4", "twin_planes", "uniform(3,6)"] {
            let m = named(name).unwrap();
            let shrunk = m.restrict(Subset::full(m.n() - 1));
            push(&mut items, format!("restrict({name})"), shrunk);
            if !m.loops().contains(0) {
                push(&mut items, format!("contract({name})"), m.contract(Subset::singleton(0)));
            }
        }
    }

    if spec.include_products {
        let pairs = [
            ("uniform(1,2)", "uniform(2,3)"),
            ("uniform(2,3)", "uniform(2,3)"),
            ("two_pairs", "uniform(1,2)"),
            ("mk4", "uniform(1,2)"),
            ("uniform(1,2)", "disjoint_lines"),
        ];
        for (a, b) in pairs {
            let (ma, mb) = (named(a).unwrap(), named(b).unwrap());
            if let Ok(p) = free_product(&ma, &mb) {
                push(&mut items, format!("freeprod({a},{b})"), p);
            }
        }
    }

    if spec.include_extensions {
        for name in ["disjoint_lines", "twin_planes", "uniform(2,4)"] {
            let m = named(name).unwrap();
            if is_transversal(&m).transversal {
                if let Ok((big, _)) = fundamental_extension(&m) {
                    push(&mut items, format!("extend({name})"), big);
                }
            }
        }
    }

    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{cyclic_core, cyclic_flats};

    /// Spanning-forest rank of an edge subset of K4, by union-find.
    fn k4_rank(x: Subset) -> usize {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut parent = [0usize, 1, 2, 3];
        fn find(parent: &mut [usize; 4], v: usize) -> usize {
            let mut v = v;
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut rank = 0;
        for e in x.elements() {
            let (u, v) = edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn mk4_matches_the_forest_rank() {
        let m = mk4().unwrap();
        for mask in 0u32..64 {
            assert_eq!(m.rank(Subset(mask)) as usize, k4_rank(Subset(mask)));
        }
    }

    #[test]
    fn twin_planes_shape() {
        let m = twin_planes().unwrap();
        assert_eq!((m.n(), m.full_rank()), (7, 4));
        let z = cyclic_flats(&m);
        let flats: Vec<Subset> = z.flats().to_vec();
        assert_eq!(
            flats,
            vec![
                Subset::EMPTY,
                Subset::from_elements([0, 1, 2, 3]),
                Subset::from_elements([3, 4, 5, 6]),
                Subset::full(7),
            ]
        );
        let f1 = Subset::from_elements([0, 1, 2, 3]);
        assert_eq!(m.restrict(f1), uniform(3, 4).unwrap());
        assert_eq!(cyclic_core(&m, Subset::from_elements([0, 1, 2, 3, 4])), f1);
    }

    #[test]
    fn named_parses_and_rejects() {
        assert_eq!(named("uniform(2, 4)").unwrap(), uniform(2, 4).unwrap());
        assert_eq!(named(" free(3) ").unwrap(), free(3).unwrap());
        assert_eq!(named("rank0(2)").unwrap(), rank0(2).unwrap());
        assert!(matches!(named("uniform(2;4)"), Err(Error::UnknownName(_))));
        assert!(matches!(named("petersen"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn free_product_of_two_points_is_free() {
        let u11 = uniform(1, 1).unwrap();
        assert_eq!(free_product(&u11, &u11).unwrap(), free(2).unwrap());
    }

    #[test]
    fn free_product_of_two_lines() {
        let u12 = uniform(1, 2).unwrap();
        let p = free_product(&u12, &u12).unwrap();
        let expect: Vec<Subset> = (0u32..16)
            .map(Subset)
            .filter(|b| b.card() == 2 && b.bits() != 0b0011)
            .collect();
        assert_eq!(p.bases(), expect);
    }

    #[test]
    fn free_product_dual_swaps_factors() {
        let m = uniform(1, 2).unwrap();
        let n = uniform(2, 3).unwrap();
        let left = free_product(&m, &n).unwrap().dual();
        let right = free_product(&n.dual(), &m.dual()).unwrap();
        // left lives on E(m) then E(n); right on E(n) then E(m)
        assert_eq!(block_swap(&left, m.n()).unwrap(), right);
    }

    #[test]
    fn free_product_restricts_and_contracts_to_its_factors() {
        let m = uniform(2, 3).unwrap();
        let n = uniform(1, 2).unwrap();
        let p = free_product(&m, &n).unwrap();
        let front = Subset::full(3);
        assert_eq!(p.restrict(front), m);
        assert_eq!(p.contract(front), n);
    }

    #[test]
    fn random_transversal_is_deterministic() {
        let (s1, m1) = random_transversal(7, 3, 42).unwrap();
        let (s2, m2) = random_transversal(7, 3, 42).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(m1, m2);
        assert_eq!(s1.n(), 7);
        assert!(s1.len() <= 3);
    }

    #[test]
    fn all_matroids_tiny_counts() {
        assert_eq!(all_matroids(0).unwrap().len(), 1);
        assert_eq!(all_matroids(1).unwrap().len(), 2);
        assert_eq!(all_matroids(2).unwrap().len(), 5);
        assert_eq!(all_matroids(3).unwrap().len(), 16);
    }

    #[test]
    fn all_matroids_closed_under_duality() {
        let ms = all_matroids(3).unwrap();
        for m in &ms {
            assert!(ms.contains(&m.dual()));
        }
    }

    #[test]
    fn corpus_is_labeled_and_deterministic() {
        let a = corpus(&CorpusSpec::default());
        let b = corpus(&CorpusSpec::default());
        assert_eq!(a.len(), b.len());
        assert!(a.len() >= 60);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label, y.label);
            assert_eq!(x.matroid, y.matroid);
        }
        let mut labels: Vec<&str> = a.iter().map(|i| i.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), a.len());
    }
}

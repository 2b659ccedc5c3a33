//! The `check` command: sweeps a deterministic corpus, re-deriving every
//! verdict at least two independent ways, and reports disagreements. The
//! instance list and the report are functions of (seed, max_n) alone; the
//! job count only changes wall time.

use std::sync::Mutex;

use matroid_core::constructions::{all_matroids, corpus, CorpusSpec};
use matroid_core::cyclic::cyclic_flats;
use matroid_core::fundamental::{check_by_method, is_fundamental, Method};
use matroid_core::mason::{alpha, beta};
use matroid_core::oracle::{oracle_is_transversal, oracle_is_transversal_pruned};
use matroid_core::transversal::{is_transversal, maximal_presentation};
use matroid_core::{Matroid, Subset};
use serde::Serialize;

#[derive(Serialize, Clone)]
pub struct DisagreementOut {
    pub label: String,
    pub procedure: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Serialize)]
pub struct ReportOut {
    pub instances_checked: usize,
    pub disagreements: Vec<DisagreementOut>,
}

pub fn run(seed: u64, max_n: usize, jobs: usize) -> ReportOut {
    let mut instances: Vec<(String, Matroid)> = Vec::new();
    for n in 0..=max_n.min(5) {
        for (i, m) in all_matroids(n).unwrap().into_iter().enumerate() {
            instances.push((format!("all({n})#{i}"), m));
        }
    }
    let spec = CorpusSpec { seed, max_n, ..CorpusSpec::default() };
    for item in corpus(&spec) {
        if item.matroid.n() <= max_n {
            instances.push((item.label, item.matroid));
        }
    }

    let slots: Mutex<Vec<Option<Vec<DisagreementOut>>>> =
        Mutex::new(vec![None; instances.len()]);
    let jobs = jobs.max(1).min(instances.len().max(1));
    std::thread::scope(|scope| {
        for worker in 0..jobs {
            let slots = &slots;
            let instances = &instances;
            scope.spawn(move || {
                for i in (worker..instances.len()).step_by(jobs) {
                    let (label, m) = &instances[i];
                    let found = check_instance(label, m);
                    slots.lock().unwrap()[i] = Some(found);
                }
            });
        }
    });

    let disagreements = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .flat_map(|slot| slot.unwrap())
        .collect();
    ReportOut { instances_checked: instances.len(), disagreements }
}

fn check_instance(label: &str, m: &Matroid) -> Vec<DisagreementOut> {
    let mut out = Vec::new();
    let mut push = |procedure: &str, expected: String, actual: String| {
        out.push(DisagreementOut {
            label: label.to_string(),
            procedure: procedure.to_string(),
            expected,
            actual,
        });
    };

    let b = beta(m);
    let z = cyclic_flats(m);
    let r = m.full_rank() as i64;
    let total: i64 = z.flats().iter().map(|&f| b.value(f)).sum();
    if total != r {
        push("beta-lattice-sum", format!("{r}"), format!("{total}"));
    }

    match alpha(m) {
        Ok(a) => {
            let bd = beta(&m.dual());
            for mask in 0u32..1 << m.n() {
                let x = Subset(mask);
                let left = a.value(x);
                let right = bd.value(x.complement_in(m.n()));
                if left != right {
                    push(
                        "alpha-dual-beta",
                        format!("beta*({}) = {right}", x.complement_in(m.n())),
                        format!("alpha({x}) = {left}"),
                    );
                    break;
                }
            }
        }
        Err(e) => push("alpha-dual-beta", "computed".into(), format!("error: {e}")),
    }

    let mut complements: Vec<Subset> =
        z.flats().iter().map(|&f| f.complement_in(m.n())).collect();
    complements.sort_unstable_by_key(|f| (f.card(), f.bits()));
    if cyclic_flats(&m.dual()).flats() != complements.as_slice() {
        push("dual-lattice-complements", "complement lattice".into(), "mismatch".into());
    }

    let fast = is_transversal(m).transversal;
    if m.n() <= 6 {
        match oracle_is_transversal(m, m.full_rank()) {
            Ok(slow) if slow != fast => {
                push("oracle-transversal", format!("{fast}"), format!("{slow}"))
            }
            Err(e) => push("oracle-transversal", "computed".into(), format!("error: {e}")),
            _ => {}
        }
        match oracle_is_transversal_pruned(m, m.full_rank()) {
            Ok(slow) if slow != fast => {
                push("oracle-transversal-pruned", format!("{fast}"), format!("{slow}"))
            }
            Err(e) => {
                push("oracle-transversal-pruned", "computed".into(), format!("error: {e}"))
            }
            _ => {}
        }
    }

    if m.n() <= 8 {
        match is_fundamental(m) {
            Ok(v) => {
                for method in Method::ALL {
                    match check_by_method(m, method) {
                        Ok(got) if got.holds != v.fundamental => push(
                            &format!("fundamental-{}", method.name()),
                            format!("{}", v.fundamental),
                            format!("{}", got.holds),
                        ),
                        Err(e) => push(
                            &format!("fundamental-{}", method.name()),
                            "computed".into(),
                            format!("error: {e}"),
                        ),
                        _ => {}
                    }
                }
            }
            Err(e) => push("fundamental", "computed".into(), format!("error: {e}")),
        }
    }

    if fast {
        match maximal_presentation(m).map(|a| Matroid::from_presentation(&a)) {
            Ok(Ok(back)) if back != *m => {
                push("max-presentation-roundtrip", "same matroid".into(), "different".into())
            }
            Ok(Err(e)) | Err(e) => {
                push("max-presentation-roundtrip", "computed".into(), format!("error: {e}"))
            }
            _ => {}
        }
    }

    out
}

//! One matroid per file: an object with "n" and exactly one of "bases",
//! "circuits", "presentation", or "rank_table" (the table indexed by subset
//! bitmask, bit e standing for element e). Output mirrors the input form
//! where the result allows it, falling back to "bases" where a presentation
//! cannot be carried across an operation.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use matroid_core::{Matroid, SetSystem, Subset};
use serde::{Deserialize, Serialize};

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Form {
    Bases,
    Circuits,
    Presentation,
    RankTable,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidJson {
    n: usize,
    #[serde(default)]
    bases: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    circuits: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    presentation: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    rank_table: Option<Vec<u8>>,
}

pub struct Loaded {
    pub matroid: Matroid,
    pub form: Form,
    /// Present exactly when the input was in presentation form.
    pub system: Option<SetSystem>,
}

fn to_subsets(n: usize, lists: &[Vec<usize>]) -> Result<Vec<Subset>> {
    lists
        .iter()
        .map(|list| {
            for &e in list {
                if e >= 32 {
                    bail!("element {e} is out of range for a ground set of {n}");
                }
            }
            Ok(Subset::from_elements(list.iter().copied()))
        })
        .collect()
}

pub fn load(path: &Path) -> Result<Loaded> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let json: MatroidJson = serde_json::from_str(&text)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let fields = [
        json.bases.is_some(),
        json.circuits.is_some(),
        json.presentation.is_some(),
        json.rank_table.is_some(),
    ];
    if fields.iter().filter(|&&b| b).count() != 1 {
        bail!(
            "{}: need exactly one of \"bases\", \"circuits\", \"presentation\", \"rank_table\"",
            path.display()
        );
    }
    let n = json.n;
    let wrap = |e: matroid_core::Error| anyhow!("{}: {e}", path.display());
    if let Some(lists) = &json.bases {
        let sets = to_subsets(n, lists)?;
        let matroid = Matroid::from_bases(n, &sets).map_err(wrap)?;
        return Ok(Loaded { matroid, form: Form::Bases, system: None });
    }
    if let Some(lists) = &json.circuits {
        let sets = to_subsets(n, lists)?;
        let matroid = Matroid::from_circuits(n, &sets).map_err(wrap)?;
        return Ok(Loaded { matroid, form: Form::Circuits, system: None });
    }
    if let Some(lists) = &json.presentation {
        let sets = to_subsets(n, lists)?;
        let system = SetSystem::new(n, sets).map_err(wrap)?;
        let matroid = Matroid::from_presentation(&system).map_err(wrap)?;
        return Ok(Loaded { matroid, form: Form::Presentation, system: Some(system) });
    }
    let table = json.rank_table.unwrap();
    let matroid = Matroid::from_rank_table(n, table).map_err(wrap)?;
    Ok(Loaded { matroid, form: Form::RankTable, system: None })
}

pub fn set_to_vec(s: Subset) -> Vec<usize> {
    s.elements().collect()
}

pub fn sets_to_vec(sets: &[Subset]) -> Vec<Vec<usize>> {
    sets.iter().map(|&s| set_to_vec(s)).collect()
}

#[derive(Serialize)]
pub struct MatroidOut {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_table: Option<Vec<u8>>,
}

/// Renders a matroid in the requested form. A presentation cannot be
/// reconstructed for an arbitrary result, so that form falls back to bases;
/// callers with a system in hand use `presentation_out` instead.
pub fn matroid_out(m: &Matroid, form: Form) -> MatroidOut {
    let mut out = MatroidOut {
        n: m.n(),
        bases: None,
        circuits: None,
        presentation: None,
        rank_table: None,
    };
    match form {
        Form::Circuits => out.circuits = Some(sets_to_vec(&m.circuits())),
        Form::RankTable => out.rank_table = Some(m.rank_table().to_vec()),
        Form::Bases | Form::Presentation => out.bases = Some(sets_to_vec(&m.bases())),
    }
    out
}

pub fn presentation_out(system: &SetSystem) -> MatroidOut {
    MatroidOut {
        n: system.n(),
        bases: None,
        circuits: None,
        presentation: Some(sets_to_vec(system.columns())),
        rank_table: None,
    }
}

pub fn emit<T: Serialize>(value: &T, pretty: bool, output: Option<&Path>) -> Result<()> {
    let mut text = if pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    text.push('\n');
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

use serde::Serialize;
use serde_json::json;

use atlas_core::atlas::{
    diff_table1, eckardt_line_model, eckardt_search, effective_split_for_roots, table1,
    Table1Mismatch,
};
use atlas_core::{
    close_subsystem, decompose_root, enumerate_lines, hyperplane_class, incidence_graph, orbits,
    pair, realize, root_system, AtlasError, LatticeVector, SubsystemConfig,
};

use crate::document::{Kind, OutputDocument, Table};
use crate::ExitStatus;

/// A failed command: exit status, a diagnostic for stderr, and optionally a
/// document that is still printed.
#[derive(Debug)]
pub struct Failure {
    pub status: ExitStatus,
    pub message: String,
    pub document: Option<Box<OutputDocument>>,
}

impl Failure {
    fn new(status: ExitStatus, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
            document: None,
        }
    }
}

impl From<AtlasError> for Failure {
    fn from(e: AtlasError) -> Self {
        let status = match e {
            AtlasError::Parse(_) => ExitStatus::Usage,
            AtlasError::NotARoot { .. }
            | AtlasError::NotEmbeddable { .. }
            | AtlasError::RankTooLarge { .. }
            | AtlasError::SameLine(_)
            | AtlasError::NotSkew(..) => ExitStatus::Domain,
            _ => ExitStatus::Internal,
        };
        let mut message = e.to_string();
        if matches!(e, AtlasError::NotEmbeddable { .. }) {
            message.push_str(
                "; certificate: backtracking over all ordered root tuples with the target Cartan pattern found none",
            );
        }
        Failure::new(status, message)
    }
}

pub type CmdResult = Result<OutputDocument, Failure>;

fn coords(v: &LatticeVector) -> Vec<String> {
    v.0.iter().map(i64::to_string).collect()
}

const COORD_HEADER: [&str; 7] = ["e0", "e1", "e2", "e3", "e4", "e5", "e6"];

pub fn roots() -> CmdResult {
    let rs = root_system();
    let mut table = Table::new(&COORD_HEADER);
    for v in rs.vectors() {
        table.push(coords(v));
    }
    let payload: Vec<&LatticeVector> = rs.vectors().collect();
    Ok(OutputDocument::new(Kind::Roots, payload, table))
}

pub fn lines() -> CmdResult {
    let lines = enumerate_lines();
    let mut header = vec!["label"];
    header.extend(COORD_HEADER);
    let mut table = Table::new(&header);
    for l in &lines {
        let mut row = vec![l.label.to_string()];
        row.extend(coords(&l.class));
        table.push(row);
    }
    Ok(OutputDocument::new(Kind::Lines, &lines, table))
}

pub fn incidence() -> CmdResult {
    let g = incidence_graph();
    let labels: Vec<String> = g.lines().iter().map(|l| l.label.to_string()).collect();
    let matrix = g.matrix();
    let mut header = vec!["line".to_string()];
    header.extend(labels.iter().cloned());
    let mut table = Table {
        header,
        ..Table::default()
    };
    for (label, row) in labels.iter().zip(&matrix) {
        let mut r = vec![label.clone()];
        r.extend(row.iter().map(u8::to_string));
        table.push(r);
    }
    Ok(OutputDocument::new(
        Kind::Incidence,
        json!({ "labels": labels, "matrix": matrix }),
        table,
    ))
}

pub fn decompose(root: &str) -> CmdResult {
    let v: LatticeVector = root.parse()?;
    let pairs = decompose_root(&v).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!(
            "{}\n(v.v = {}, v.h = {})",
            f.message,
            pair(&v, &v),
            pair(&v, &hyperplane_class())
        );
        f
    })?;
    let mut table = Table::new(&["first", "second"]);
    let mut listed = Vec::new();
    for (a, b) in &pairs {
        table.push(vec![a.label.to_string(), b.label.to_string()]);
        listed.push([a.label.to_string(), b.label.to_string()]);
    }
    table.notes.push(format!("Root {v} = [first] - [second]:"));
    Ok(OutputDocument::new(
        Kind::Decompose,
        json!({ "root": v, "pairs": listed }),
        table,
    ))
}

#[derive(Serialize)]
struct OrbitsPayload {
    config: SubsystemConfig,
    realization: Vec<LatticeVector>,
    count: usize,
    block_sizes: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    effective: EffectivePayload,
}

#[derive(Serialize)]
struct EffectivePayload {
    inside: usize,
    outside: usize,
}

/// Orbits either of a named configuration (realized inside E6) or of an
/// explicit list of generating roots.
pub fn orbits_cmd(config: Option<&str>, roots: &[String]) -> CmdResult {
    let generators: Vec<LatticeVector> = match config {
        Some(label) => {
            let c: SubsystemConfig = label.parse()?;
            realize(&c)?
        }
        None => roots
            .iter()
            .flat_map(|s| s.split(';'))
            .filter(|s| !s.trim().is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?,
    };
    let sub = close_subsystem(&generators)?;
    let blocks = orbits(&generators)?;
    let split = effective_split_for_roots(&generators)?;
    let payload = OrbitsPayload {
        config: sub.label.clone(),
        realization: generators.clone(),
        count: blocks.len(),
        block_sizes: blocks.iter().map(Vec::len).collect(),
        blocks: blocks.clone(),
        effective: EffectivePayload {
            inside: split.inside,
            outside: split.outside,
        },
    };
    let mut table = Table::new(&["block", "size", "effective", "members"]);
    for (i, b) in blocks.iter().enumerate() {
        let inside = b.iter().all(|&k| sub.contains_index(k));
        let members: Vec<String> = b.iter().map(usize::to_string).collect();
        table.push(vec![
            i.to_string(),
            b.len().to_string(),
            u8::from(inside).to_string(),
            members.join(" "),
        ]);
    }
    let gens: Vec<String> = generators.iter().map(LatticeVector::to_string).collect();
    table.notes.push(format!(
        "R_e = {} generated by {}: {} orbits ({} inside R_e, {} outside)",
        sub.label,
        if gens.is_empty() {
            "nothing".to_string()
        } else {
            gens.join(", ")
        },
        blocks.len(),
        split.inside,
        split.outside
    ));
    Ok(OutputDocument::new(Kind::Orbits, payload, table))
}

#[derive(Serialize)]
struct Table1Payload {
    rows: Vec<atlas_core::atlas::Table1Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatches: Option<Vec<Table1Mismatch>>,
}

pub fn table1_cmd(diff: bool) -> CmdResult {
    let rows = table1()?;
    let mismatches = diff.then(|| diff_table1(&rows));
    let mut table = Table::new(&["R_e", "Type", "#"]);
    for r in &rows {
        table.push(vec![
            r.config.to_string(),
            r.bruce_wall_type.clone(),
            r.count.to_string(),
        ]);
    }
    if let Some(m) = &mismatches {
        table.notes.push(if m.is_empty() {
            "All 21 counts match the published table.".to_string()
        } else {
            format!("{} count(s) differ from the published table.", m.len())
        });
    }
    let failed = mismatches.as_ref().is_some_and(|m| !m.is_empty());
    let message = mismatches
        .iter()
        .flatten()
        .map(|m| {
            format!(
                "{}: published {:?}, computed {:?}",
                m.config, m.published, m.computed
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let doc = OutputDocument::new(Kind::Table1, Table1Payload { rows, mismatches }, table);
    if failed {
        return Err(Failure {
            status: ExitStatus::TableDiff,
            message,
            document: Some(Box::new(doc)),
        });
    }
    Ok(doc)
}

#[derive(Serialize)]
struct EckardtPayload {
    free_order3_elements: usize,
    representative: String,
    orbits: Vec<Vec<usize>>,
    line_model: LineModelPayload,
}

#[derive(Serialize)]
struct LineModelPayload {
    induced_order: usize,
    fixes_h: bool,
    free_on_roots: bool,
    root_orbits: usize,
    in_search_result: bool,
    sheet_shift_on_lines: Vec<[String; 2]>,
    cycles: String,
    transcript: Vec<String>,
}

pub fn eckardt() -> CmdResult {
    let internal = |m: String| Failure::new(ExitStatus::Internal, m);
    let found = eckardt_search();
    let rep = *found
        .first()
        .ok_or_else(|| internal("no fixed-point-free element of order 3".into()))?;
    let cycles = rep.cycles();
    if rep.order() != 3 || cycles.len() != 24 || cycles.iter().any(|c| c.len() != 3) {
        return Err(internal(format!(
            "representative has order {} and {} orbits",
            rep.order(),
            cycles.len()
        )));
    }
    let model = eckardt_line_model()?;
    let h = hyperplane_class();
    let lines = incidence_graph().lines();
    let in_search = found.binary_search(&model.induced).is_ok();
    let payload = EckardtPayload {
        free_order3_elements: found.len(),
        representative: rep.cycle_notation(),
        orbits: cycles.clone(),
        line_model: LineModelPayload {
            induced_order: model.induced.order(),
            fixes_h: model.induced.apply(&h) == h,
            free_on_roots: model.induced.fixed_points().is_empty(),
            root_orbits: model.induced.cycles().len(),
            in_search_result: in_search,
            sheet_shift_on_lines: (0..lines.len())
                .map(|l| {
                    [
                        lines[l].label.to_string(),
                        lines[model.line_permutation[l]].label.to_string(),
                    ]
                })
                .collect(),
            cycles: model.induced.cycle_notation(),
            transcript: model.transcript.clone(),
        },
    };
    if !in_search {
        return Err(internal(
            "line-model element is missing from the search result".into(),
        ));
    }
    let mut table = Table::new(&["orbit", "roots"]);
    for (i, c) in cycles.iter().enumerate() {
        let members: Vec<String> = c.iter().map(usize::to_string).collect();
        table.push(vec![i.to_string(), members.join(" ")]);
    }
    table.notes.push(format!(
        "{} fixed-point-free elements of order 3; representative {}",
        found.len(),
        payload.representative
    ));
    table
        .notes
        .extend(model.transcript.iter().map(|t| format!("- {t}")));
    Ok(OutputDocument::new(Kind::Eckardt, payload, table))
}

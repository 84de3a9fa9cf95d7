//! Orbit counts of local monodromy on the 72 roots.
//!
//! For a cubic surface with ADE singularities the local monodromy of nearby
//! smooth hyperplane sections is W(R_e), generated by reflections in the
//! effective roots. Limiting primitive vanishing cycles correspond to
//! W(R_e)-orbits on the roots; the orbits lying inside R_e correspond to the
//! singular points.

mod eckardt;

use serde::Serialize;

pub use eckardt::{
    common_neighbour_counts, eckardt_line_model, eckardt_search, eckardt_search_in,
    find_isomorphism, EckardtModel,
};

use crate::config::SubsystemConfig;
use crate::error::Result;
use crate::lattice::{pair, root_system, simple_roots, LatticeVector};
use crate::linalg;
use crate::weyl::{close_subsystem, generate_group, orbits, realize, ReflectionGroup};

/// A published row: configuration label, Bruce-Wall type, orbit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedRow {
    pub config: &'static str,
    pub bruce_wall_type: &'static str,
    pub count: usize,
}

const fn row(config: &'static str, bruce_wall_type: &'static str, count: usize) -> PublishedRow {
    PublishedRow {
        config,
        bruce_wall_type,
        count,
    }
}

/// The 21 configurations, read column by column from the published table.
pub const PUBLISHED_TABLE1: [PublishedRow; 21] = [
    row("∅", "I", 72),
    row("A1", "II", 51),
    row("2A1", "IV", 36),
    row("A2", "III", 31),
    row("3A1", "VIII", 25),
    row("A1+A2", "VI", 22),
    row("A3", "V", 17),
    row("4A1", "XVI", 17),
    row("2A1+A2", "XIII", 15),
    row("A1+A3", "X", 12),
    row("2A2", "IX", 14),
    row("A4", "VII", 9),
    row("D4", "XII", 7),
    row("2A1+A3", "XVIII", 8),
    row("A1+2A2", "XVII", 9),
    row("A1+A4", "XIV", 6),
    row("A5", "XI", 5),
    row("D5", "XV", 3),
    row("A1+A5", "XIX", 3),
    row("3A2", "XXI", 5),
    row("E6", "XX", 1),
];

/// Bruce-Wall type of a configuration, if it is one of the 21.
pub fn bruce_wall_type(config: &SubsystemConfig) -> Option<&'static str> {
    PUBLISHED_TABLE1
        .iter()
        .find(|r| r.config.parse::<SubsystemConfig>().ok().as_ref() == Some(config))
        .map(|r| r.bruce_wall_type)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub config: SubsystemConfig,
    pub bruce_wall_type: String,
    pub count: usize,
}

/// Number of W(R_e)-orbits on the 72 roots for the canonical realization of
/// `config`.
pub fn orbit_count(config: &SubsystemConfig) -> Result<usize> {
    Ok(orbits(&realize(config)?)?.len())
}

/// All 21 rows, each count computed from a realization.
pub fn table1() -> Result<Vec<Table1Row>> {
    PUBLISHED_TABLE1
        .iter()
        .map(|r| {
            let config: SubsystemConfig = r.config.parse()?;
            Ok(Table1Row {
                count: orbit_count(&config)?,
                bruce_wall_type: r.bruce_wall_type.to_string(),
                config,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Mismatch {
    pub config: String,
    pub published: Option<usize>,
    pub computed: Option<usize>,
}

/// Rows where `computed` disagrees with the published counts, including rows
/// missing on either side.
pub fn diff_table1(computed: &[Table1Row]) -> Vec<Table1Mismatch> {
    let mut out = Vec::new();
    for p in &PUBLISHED_TABLE1 {
        let cfg: SubsystemConfig = p.config.parse().expect("published labels parse");
        let got = computed.iter().find(|r| r.config == cfg).map(|r| r.count);
        if got != Some(p.count) {
            out.push(Table1Mismatch {
                config: cfg.to_string(),
                published: Some(p.count),
                computed: got,
            });
        }
    }
    for r in computed {
        if bruce_wall_type(&r.config).is_none() {
            out.push(Table1Mismatch {
                config: r.config.to_string(),
                published: None,
                computed: Some(r.count),
            });
        }
    }
    out
}

/// Orbits contained in R_e (one per singular point) versus the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EffectiveSplit {
    pub inside: usize,
    pub outside: usize,
}

impl EffectiveSplit {
    pub fn total(&self) -> usize {
        self.inside + self.outside
    }
}

/// Splits the orbits of the reflection group generated by `generators` by
/// whether they lie in the sub-root system those generators close to.
pub fn effective_split_for_roots(generators: &[LatticeVector]) -> Result<EffectiveSplit> {
    let sub = close_subsystem(generators)?;
    let blocks = orbits(generators)?;
    let inside = blocks
        .iter()
        .filter(|b| b.iter().all(|&i| sub.contains_index(i)))
        .count();
    Ok(EffectiveSplit {
        inside,
        outside: blocks.len() - inside,
    })
}

pub fn effective_orbit_split(config: &SubsystemConfig) -> Result<EffectiveSplit> {
    effective_split_for_roots(&realize(config)?)
}

/// One of the three root classes relative to the nodal cycle δ = 2e0 - Σ e_i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootClass {
    pub name: &'static str,
    pub size: usize,
    pub orbits: usize,
    pub orthogonal_to_delta: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct A1Breakdown {
    pub delta: LatticeVector,
    pub classes: Vec<RootClass>,
    pub total: usize,
}

/// Sorts the roots into ±δ, ±(e0 - e_i - e_j - e_k) and e_i - e_j and counts
/// the orbits of the reflection in δ within each class.
pub fn a1_example_breakdown() -> Result<A1Breakdown> {
    let delta = LatticeVector::new([2, -1, -1, -1, -1, -1, -1]);
    let rs = root_system();
    let class_of = |v: &LatticeVector| -> usize {
        match v.0[0].abs() {
            2 => 0,
            1 => 1,
            _ => 2,
        }
    };
    let names = ["±δ", "±(e0-ei-ej-ek)", "ei-ej"];
    let blocks = orbits(&[delta])?;
    let mut classes: Vec<RootClass> = names
        .iter()
        .map(|&name| RootClass {
            name,
            size: 0,
            orbits: 0,
            orthogonal_to_delta: true,
        })
        .collect();
    for v in rs.vectors() {
        let c = &mut classes[class_of(v)];
        c.size += 1;
        c.orthogonal_to_delta &= pair(v, &delta) == 0;
    }
    for b in &blocks {
        let c = class_of(rs.get(b[0]));
        debug_assert!(b.iter().all(|&i| class_of(rs.get(i)) == c));
        classes[c].orbits += 1;
    }
    Ok(A1Breakdown {
        delta,
        total: blocks.len(),
        classes,
    })
}

/// W(E6) materialized from the six simple reflections.
pub fn weyl_group() -> &'static ReflectionGroup {
    static GROUP: std::sync::OnceLock<ReflectionGroup> = std::sync::OnceLock::new();
    GROUP.get_or_init(|| {
        let s: Vec<LatticeVector> = simple_roots().iter().map(|r| *r.vector()).collect();
        generate_group(&s).expect("simple roots are roots")
    })
}

pub fn root_span_rank() -> usize {
    let all: Vec<LatticeVector> = root_system().vectors().copied().collect();
    linalg::rank(&all)
}

/// W(E6) acts transitively on the roots, and the roots have full rank in h^perp.
pub fn transitivity_check() -> bool {
    let s: Vec<LatticeVector> = simple_roots().iter().map(|r| *r.vector()).collect();
    let blocks = orbits(&s).expect("simple roots are roots");
    blocks.len() == 1 && blocks[0].len() == 72 && root_span_rank() == 6
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> SubsystemConfig {
        s.parse().unwrap()
    }

    #[test]
    fn orbit_count_examples() {
        assert_eq!(orbit_count(&cfg("A1")).unwrap(), 51);
        assert_eq!(orbit_count(&cfg("∅")).unwrap(), 72);
        assert_eq!(orbit_count(&cfg("E6")).unwrap(), 1);
        assert_eq!(orbit_count(&cfg("4A1")).unwrap(), 17);
        assert_eq!(orbit_count(&cfg("3A2")).unwrap(), 5);
        assert_eq!(orbit_count(&cfg("D5")).unwrap(), 3);
        assert!(orbit_count(&cfg("A2+A3")).is_err());
    }

    #[test]
    fn table_rows() {
        let rows = table1().unwrap();
        assert_eq!(rows.len(), 21);
        let find = |s: &str| rows.iter().find(|r| r.config == cfg(s)).unwrap();
        assert_eq!(find("A1+A2").count, 22);
        assert_eq!(find("A1+A2").bruce_wall_type, "VI");
        assert_eq!(find("2A1+A3").count, 8);
        assert_eq!(find("2A1+A3").bruce_wall_type, "XVIII");
        assert_eq!(rows[0].count, 72);
        assert!(rows.iter().all(|r| (1..=72).contains(&r.count)));
        assert!(diff_table1(&rows).is_empty());
    }

    #[test]
    fn diff_reports_mismatches() {
        let mut rows = table1().unwrap();
        rows[3].count += 1;
        rows.pop();
        let d = diff_table1(&rows);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].config, "A2");
        assert_eq!(d[0].computed, Some(32));
        assert_eq!(d[1].config, "E6");
        assert_eq!(d[1].computed, None);
    }

    #[test]
    fn effective_splits() {
        let split = |s: &str| {
            let e = effective_orbit_split(&cfg(s)).unwrap();
            (e.inside, e.outside)
        };
        assert_eq!(split("A1"), (1, 50));
        assert_eq!(split("2A1"), (2, 34));
        assert_eq!(split("E6"), (1, 0));
        assert_eq!(split("∅"), (0, 72));
    }

    #[test]
    fn a1_breakdown() {
        let b = a1_example_breakdown().unwrap();
        let sizes: Vec<_> = b.classes.iter().map(|c| c.size).collect();
        let contributions: Vec<_> = b.classes.iter().map(|c| c.orbits).collect();
        assert_eq!(sizes, [2, 40, 30]);
        assert_eq!(contributions, [1, 20, 30]);
        assert_eq!(b.total, 51);
        let orth: Vec<_> = b.classes.iter().map(|c| c.orthogonal_to_delta).collect();
        assert_eq!(orth, [false, false, true]);
        let delta = b.delta;
        let orthogonal = root_system()
            .vectors()
            .filter(|v| pair(v, &delta) == 0)
            .count();
        assert_eq!(orthogonal, 30);
    }

    #[test]
    fn bruce_wall_lookup() {
        assert_eq!(bruce_wall_type(&cfg("A1+A1")), Some("IV"));
        assert_eq!(bruce_wall_type(&cfg("I")), Some("I"));
        assert_eq!(bruce_wall_type(&cfg("A6")), None);
    }

    #[test]
    fn transitivity() {
        assert!(transitivity_check());
        assert_eq!(root_span_rank(), 6);
        assert_eq!(orbits(&[]).unwrap().len(), 72);
    }
}

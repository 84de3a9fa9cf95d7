//! Reflection-closed sub-root systems of E6, their simple systems, ADE labels
//! and embeddings of a given label.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::dynkin::{classify_simple_system, diagram_components, standard_diagram};
use super::{reflection_perm, ROOT_COUNT};
use crate::config::SubsystemConfig;
use crate::error::{AtlasError, Result};
use crate::lattice::{not_a_root, pair, root_pairings, root_system, LatticeVector};
use crate::linalg;

/// Weight of the positivity functional: (N^6, N^5, ..., 1) with N = 100.
const FUNCTIONAL_BASE: i64 = 100;

fn height(v: &LatticeVector) -> i64 {
    v.0.iter().fold(0, |acc, &c| acc * FUNCTIONAL_BASE + c)
}

fn check_functional_generic() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        for r in root_system().vectors() {
            assert!(height(r) != 0, "positivity functional vanishes on root {r}");
        }
    });
}

/// A sub-root system closed under its own reflections.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedSubsystem {
    /// Canonical root indices, ascending.
    pub indices: Vec<usize>,
    pub roots: Vec<LatticeVector>,
    pub simple: Vec<LatticeVector>,
    pub label: SubsystemConfig,
    /// Simple roots of each irreducible component.
    pub components: Vec<Vec<LatticeVector>>,
}

impl ClosedSubsystem {
    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

fn closure_indices(seed: &[usize]) -> Vec<usize> {
    let mut member = [false; ROOT_COUNT];
    let mut list = Vec::new();
    for &s in seed {
        if !member[s] {
            member[s] = true;
            list.push(s);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = list.clone();
        for &b in &snapshot {
            let r = reflection_perm(b);
            for &c in &snapshot {
                let img = r.image(c);
                if !member[img] {
                    member[img] = true;
                    list.push(img);
                    changed = true;
                }
            }
        }
    }
    list.sort_unstable();
    list
}

/// Smallest reflection-closed set of roots containing `seed`.
pub fn close_subsystem(seed: &[LatticeVector]) -> Result<ClosedSubsystem> {
    let rs = root_system();
    let idx = seed
        .iter()
        .map(|v| rs.require(v))
        .collect::<Result<Vec<_>>>()?;
    let indices = closure_indices(&idx);
    let roots: Vec<LatticeVector> = indices.iter().map(|&i| *rs.get(i)).collect();
    let simple = simple_system(&roots)?;
    let label = classify_simple_system(&simple)?;
    let components = diagram_components(&simple)
        .into_iter()
        .map(|nodes| nodes.into_iter().map(|k| simple[k]).collect())
        .collect();
    Ok(ClosedSubsystem {
        indices,
        roots,
        simple,
        label,
        components,
    })
}

/// Simple system of a reflection-closed root set: the positive roots (under
/// the fixed functional) that are not a sum of two positive roots of the set.
/// Returned in canonical root order.
pub fn simple_system(roots: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    check_functional_generic();
    let rs = root_system();
    let idx: BTreeSet<usize> = roots.iter().map(|v| rs.require(v)).collect::<Result<_>>()?;
    for &b in &idx {
        let r = reflection_perm(b);
        for &c in &idx {
            if !idx.contains(&r.image(c)) {
                return Err(AtlasError::NotClosed {
                    beta: *rs.get(b),
                    gamma: *rs.get(c),
                });
            }
        }
    }
    let positive: Vec<LatticeVector> = idx
        .iter()
        .map(|&i| *rs.get(i))
        .filter(|v| height(v) > 0)
        .collect();
    let pos_set: HashSet<LatticeVector> = positive.iter().copied().collect();
    Ok(positive
        .iter()
        .copied()
        .filter(|p| !positive.iter().any(|a| pos_set.contains(&(*p - *a))))
        .collect())
}

/// ADE label of the sub-root system generated by `seed`.
pub fn classify(seed: &[LatticeVector]) -> Result<SubsystemConfig> {
    Ok(close_subsystem(seed)?.label)
}

/// Target Gram pattern for `config`: for each node, the earlier nodes it
/// must pair to 1 with (all other earlier nodes pair to 0). Larger
/// components come first so the search prunes early.
fn target_pattern(config: &SubsystemConfig) -> Vec<Vec<bool>> {
    let mut comps = config.components();
    comps.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.cmp(b)));
    let n: usize = comps.iter().map(|t| t.rank as usize).sum();
    let mut adj = vec![vec![false; n]; n];
    let mut offset = 0;
    for t in comps {
        for (a, b) in standard_diagram(t) {
            adj[offset + a][offset + b] = true;
            adj[offset + b][offset + a] = true;
        }
        offset += t.rank as usize;
    }
    adj
}

struct Embedder<'a> {
    pattern: Vec<Vec<bool>>,
    candidates: &'a [usize],
    chosen: Vec<usize>,
    visited: u64,
    config: &'a SubsystemConfig,
}

impl Embedder<'_> {
    fn search(&mut self) -> Option<Vec<LatticeVector>> {
        let rs = root_system();
        let table = root_pairings();
        let k = self.chosen.len();
        if k == self.pattern.len() {
            let tuple: Vec<LatticeVector> = self.chosen.iter().map(|&i| *rs.get(i)).collect();
            return match close_subsystem(&tuple) {
                Ok(sub) if sub.label == *self.config => Some(sub.simple),
                _ => None,
            };
        }
        for &c in self.candidates {
            let row = &table[c];
            let fits = self
                .chosen
                .iter()
                .enumerate()
                .all(|(m, &prev)| row[prev] == i8::from(self.pattern[k][m]));
            if !fits {
                continue;
            }
            self.visited += 1;
            self.chosen.push(c);
            if let Some(found) = self.search() {
                return Some(found);
            }
            self.chosen.pop();
        }
        None
    }
}

fn realize_in_order(config: &SubsystemConfig, candidates: &[usize]) -> Result<Vec<LatticeVector>> {
    let rank = config.rank();
    if rank > 6 {
        return Err(AtlasError::RankTooLarge {
            config: config.to_string(),
            rank,
        });
    }
    let mut e = Embedder {
        pattern: target_pattern(config),
        candidates,
        chosen: Vec::new(),
        visited: 0,
        config,
    };
    e.search().ok_or_else(|| AtlasError::NotEmbeddable {
        config: config.to_string(),
        visited: e.visited,
    })
}

/// Simple roots of the first sub-root system of type `config` found by a
/// backtracking search over root tuples in canonical order whose Gram matrix
/// matches the Cartan pattern.
pub fn realize(config: &SubsystemConfig) -> Result<Vec<LatticeVector>> {
    let order: Vec<usize> = (0..ROOT_COUNT).collect();
    realize_in_order(config, &order)
}

/// Like [`realize`], but candidates are tried in a random order, which yields
/// a random-ish realization among the embeddings of `config`.
pub fn realize_with_rng<R: Rng + ?Sized>(
    config: &SubsystemConfig,
    rng: &mut R,
) -> Result<Vec<LatticeVector>> {
    let mut order: Vec<usize> = (0..ROOT_COUNT).collect();
    order.shuffle(rng);
    realize_in_order(config, &order)
}

fn validate_simple(simple: &[LatticeVector]) -> Result<()> {
    let bad = |msg: String| AtlasError::NotSimpleSystem(msg);
    for s in simple {
        if !crate::lattice::is_root(s) {
            return Err(bad(format!("{s} is not a root")));
        }
    }
    for (i, a) in simple.iter().enumerate() {
        for b in &simple[i + 1..] {
            let p = pair(a, b);
            if p != 0 && p != 1 {
                return Err(bad(format!("{a} . {b} = {p}, expected 0 or 1")));
            }
        }
    }
    if linalg::rank(simple) != simple.len() {
        return Err(bad("roots are linearly dependent".into()));
    }
    classify_simple_system(simple).map_err(|e| bad(e.to_string()))?;
    Ok(())
}

/// Maximal elements of a W(R)-orbit under the order β ≥ γ iff β - γ is a
/// nonnegative integer combination of `simple`.
pub fn orbit_max(orbit: &[LatticeVector], simple: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    validate_simple(simple)?;
    let rs = root_system();
    let bad = |msg: String| AtlasError::NotAnOrbit(msg);
    let members: BTreeSet<usize> = orbit
        .iter()
        .map(|v| rs.index_of(v).ok_or_else(|| not_a_root(*v)))
        .collect::<Result<_>>()?;
    let Some(&first) = members.iter().next() else {
        return Err(bad("empty orbit".into()));
    };
    let gens: Vec<usize> = simple
        .iter()
        .map(|s| rs.index_of(s).expect("validated"))
        .collect();
    let mut reached = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some(x) = stack.pop() {
        for &g in &gens {
            let y = reflection_perm(g).image(x);
            if !members.contains(&y) {
                return Err(bad(format!("reflection leaves the set at {}", rs.get(y))));
            }
            if reached.insert(y) {
                stack.push(y);
            }
        }
    }
    if reached.len() != members.len() {
        return Err(bad("set is a union of several orbits".into()));
    }

    let base = *rs.get(first);
    let coeffs: Vec<(LatticeVector, Vec<i64>)> = members
        .iter()
        .map(|&i| {
            let v = *rs.get(i);
            let c = if simple.is_empty() {
                Vec::new()
            } else {
                linalg::integer_coefficients(simple, &(v - base))
                    .ok_or_else(|| bad(format!("{v} - {base} is outside the root lattice")))?
            };
            Ok((v, c))
        })
        .collect::<Result<_>>()?;
    let dominates = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x >= y);
    Ok(coeffs
        .iter()
        .filter(|(v, c)| !coeffs.iter().any(|(w, d)| w != v && dominates(d, c)))
        .map(|(v, _)| *v)
        .collect())
}

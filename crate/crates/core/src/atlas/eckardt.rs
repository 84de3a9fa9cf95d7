//! Z/3 monodromy of a pencil through an Eckardt hyperplane section.
//!
//! The limiting surface is a triple cover of the plane branched along a
//! smooth cubic E. Its 27 lines are the preimages L_{p,j} of the 9 flex
//! tangents of E; p runs over the flexes, identified with the points of the
//! affine plane over F3 (the Hesse configuration), and j in Z/3 is the sheet.
//! The three lines over one flex pass through an Eckardt point and meet
//! pairwise. Lines over distinct flexes p, q meet iff their sheets differ by
//! det(p, q) mod 3. The monodromy is the sheet shift j -> j + 1.

use serde::Serialize;

use super::weyl_group;
use crate::error::{AtlasError, Result};
use crate::lattice::{hyperplane_class, LatticeVector, RANK};
use crate::linalg::{self, Matrix7};
use crate::lines::{incidence_graph, LineLabel, LINE_COUNT};
use crate::weyl::{ReflectionGroup, WeylElement};

type Adjacency = [[bool; LINE_COUNT]; LINE_COUNT];

/// Order-3 elements of `group` with no fixed root, sorted by permutation.
pub fn eckardt_search_in(group: &ReflectionGroup) -> Vec<WeylElement> {
    let mut out: Vec<WeylElement> = group
        .elements()
        .iter()
        .filter(|g| {
            !g.is_identity()
                && g.compose(g).compose(g).is_identity()
                && (0..72).all(|i| g.apply_index(i) != i)
        })
        .copied()
        .collect();
    out.sort();
    out
}

/// Fixed-point-free elements of order 3 in W(E6).
pub fn eckardt_search() -> Vec<WeylElement> {
    eckardt_search_in(weyl_group())
}

fn flex_point(i: usize) -> (i64, i64) {
    ((i / 3) as i64, (i % 3) as i64)
}

fn det3(p: (i64, i64), q: (i64, i64)) -> i64 {
    (p.0 * q.1 - p.1 * q.0).rem_euclid(3)
}

/// Model vertex for flex `i` (0-based) on sheet `j` (0-based).
fn vertex(i: usize, j: usize) -> usize {
    3 * i + j
}

#[derive(Debug, Clone, Serialize)]
pub struct EckardtModel {
    /// (flex, sheet), 1-based, indexed by model vertex.
    pub labels: Vec<(u8, u8)>,
    #[serde(skip)]
    pub adjacency: Adjacency,
    /// Model vertex of L_{i, j+1} for each L_{i, j}.
    pub sheet_shift: Vec<usize>,
    /// Standard line (canonical index) assigned to each model vertex.
    pub isomorphism: Vec<usize>,
    /// The sheet shift transported to the canonical line order.
    pub line_permutation: Vec<usize>,
    pub matrix: Matrix7,
    pub induced: WeylElement,
    pub transcript: Vec<String>,
}

impl EckardtModel {
    pub fn adjacency_for(literal: bool) -> Adjacency {
        let mut adj = [[false; LINE_COUNT]; LINE_COUNT];
        for i in 0..9 {
            for j in 0..3 {
                for k in 0..9 {
                    for l in 0..3 {
                        let (a, b) = (vertex(i, j), vertex(k, l));
                        if a == b {
                            continue;
                        }
                        adj[a][b] = if i == k {
                            true
                        } else if literal {
                            j == l
                        } else {
                            (l as i64 - j as i64).rem_euclid(3)
                                == det3(flex_point(i), flex_point(k))
                        };
                    }
                }
            }
        }
        adj
    }

    /// Lines over one flex meet, and L_{i,j} meets L_{i',j} for every other
    /// flex i'. Each line still meets 10 others, but two lines on a common
    /// sheet then share 7 neighbours instead of 1.
    pub fn literal_adjacency() -> Adjacency {
        Self::adjacency_for(true)
    }

    pub fn adjacency() -> Adjacency {
        Self::adjacency_for(false)
    }

    pub fn sheet_shift() -> Vec<usize> {
        (0..LINE_COUNT)
            .map(|v| vertex(v / 3, (v % 3 + 1) % 3))
            .collect()
    }
}

/// Number of common neighbours of every adjacent pair and every non-adjacent
/// pair, as sorted sets.
pub fn common_neighbour_counts(adj: &Adjacency) -> (Vec<usize>, Vec<usize>) {
    let mut meet = Vec::new();
    let mut skew = Vec::new();
    for a in 0..LINE_COUNT {
        for b in a + 1..LINE_COUNT {
            let c = (0..LINE_COUNT).filter(|&k| adj[a][k] && adj[b][k]).count();
            if adj[a][b] {
                meet.push(c);
            } else {
                skew.push(c);
            }
        }
    }
    for v in [&mut meet, &mut skew] {
        v.sort_unstable();
        v.dedup();
    }
    (meet, skew)
}

/// Backtracking search for a graph isomorphism `from -> to`. Vertices of
/// `from` are placed in breadth-first order so each new vertex has an
/// already-placed neighbour; candidates must match degree and all adjacencies
/// to placed vertices.
pub fn find_isomorphism(from: &Adjacency, to: &Adjacency) -> Option<[usize; LINE_COUNT]> {
    let deg = |adj: &Adjacency, v: usize| adj[v].iter().filter(|&&b| b).count();
    let mut order = Vec::with_capacity(LINE_COUNT);
    let mut placed = [false; LINE_COUNT];
    for root in 0..LINE_COUNT {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in 0..LINE_COUNT {
                if from[v][w] && !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }

    fn extend(
        k: usize,
        order: &[usize],
        from: &Adjacency,
        to: &Adjacency,
        map: &mut [usize; LINE_COUNT],
        used: &mut [bool; LINE_COUNT],
        deg: &dyn Fn(&Adjacency, usize) -> usize,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for c in 0..LINE_COUNT {
            if used[c] || deg(from, v) != deg(to, c) {
                continue;
            }
            if order[..k].iter().any(|&u| from[v][u] != to[c][map[u]]) {
                continue;
            }
            map[v] = c;
            used[c] = true;
            if extend(k + 1, order, from, to, map, used, deg) {
                return true;
            }
            used[c] = false;
        }
        false
    }

    let mut map = [usize::MAX; LINE_COUNT];
    let mut used = [false; LINE_COUNT];
    extend(0, &order, from, to, &mut map, &mut used, &deg).then_some(map)
}

fn verification(msg: String) -> AtlasError {
    AtlasError::VerificationFailed(msg)
}

/// Builds the flex/sheet line model, identifies it with the 27 lines, and
/// solves for the lattice isometry induced by the sheet shift.
pub fn eckardt_line_model() -> Result<EckardtModel> {
    let mut transcript = Vec::new();
    let adjacency = EckardtModel::adjacency();
    let degrees_ok = (0..LINE_COUNT).all(|v| adjacency[v].iter().filter(|&&b| b).count() == 10);
    if !degrees_ok {
        return Err(verification(
            "a model line does not meet exactly 10 others".into(),
        ));
    }
    transcript.push("every L_ij meets exactly 10 other lines".to_string());

    let shift = EckardtModel::sheet_shift();
    for a in 0..LINE_COUNT {
        for b in 0..LINE_COUNT {
            if adjacency[a][b] != adjacency[shift[a]][shift[b]] {
                return Err(verification(
                    "sheet shift does not preserve incidence".into(),
                ));
            }
        }
    }
    transcript.push("sheet shift j -> j+1 preserves incidence".to_string());

    let standard = incidence_graph();
    let iso =
        find_isomorphism(&adjacency, standard.adjacency()).ok_or(AtlasError::NoIsomorphism)?;
    transcript.push("model is isomorphic to the 27-line incidence graph".to_string());

    let mut inverse = [0usize; LINE_COUNT];
    for (v, &l) in iso.iter().enumerate() {
        inverse[l] = v;
    }
    let line_permutation: Vec<usize> = (0..LINE_COUNT).map(|l| iso[shift[inverse[l]]]).collect();

    let lines = standard.lines();
    let basis_labels = [
        LineLabel::E(1),
        LineLabel::E(2),
        LineLabel::E(3),
        LineLabel::E(4),
        LineLabel::E(5),
        LineLabel::E(6),
        LineLabel::F(1, 2),
    ];
    let idx: [usize; RANK] =
        basis_labels.map(|l| standard.index_of(l).expect("standard line label"));
    let source: [LatticeVector; RANK] = idx.map(|i| lines[i].class);
    let image: [LatticeVector; RANK] = idx.map(|i| lines[line_permutation[i]].class);
    let matrix = linalg::linear_map(&source, &image)
        .ok_or_else(|| AtlasError::NotIsometry("no integral lattice map".into()))?;
    for (l, line) in lines.iter().enumerate() {
        if linalg::apply(&matrix, &line.class) != lines[line_permutation[l]].class {
            return Err(AtlasError::NotIsometry(format!(
                "lattice map disagrees with the line permutation at {}",
                line.label
            )));
        }
    }
    let induced = WeylElement::from_matrix(&matrix).map_err(AtlasError::NotIsometry)?;
    if linalg::apply(&matrix, &hyperplane_class()) != hyperplane_class() {
        return Err(AtlasError::NotIsometry("h is not fixed".into()));
    }
    transcript.push("induced lattice map is an isometry fixing h".to_string());

    let order = induced.order();
    if order != 3 {
        return Err(verification(format!(
            "induced element has order {order}, not 3"
        )));
    }
    transcript.push("induced element has order 3".to_string());
    let free_on_lines = (0..LINE_COUNT).all(|l| line_permutation[l] != l);
    let fixed = induced.fixed_points().len();
    if !free_on_lines || fixed != 0 {
        return Err(verification(format!(
            "action not free ({fixed} fixed roots)"
        )));
    }
    let cycles = induced.cycles();
    transcript.push(format!(
        "acts freely on 27 lines and 72 roots: {} root orbits of size 3",
        cycles.len()
    ));
    if cycles.len() != 24 {
        return Err(verification(format!(
            "{} root orbits, expected 24",
            cycles.len()
        )));
    }

    Ok(EckardtModel {
        labels: (0..LINE_COUNT)
            .map(|v| ((v / 3 + 1) as u8, (v % 3 + 1) as u8))
            .collect(),
        adjacency,
        sheet_shift: shift,
        isomorphism: iso.to_vec(),
        line_permutation,
        matrix,
        induced,
        transcript,
    })
}

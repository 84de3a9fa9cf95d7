//! The 27 lines of the cubic surface as divisor classes on the blow-up of the
//! plane in six points, with their meeting relation.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::lattice::{self, hyperplane_class, not_a_root, pair, LatticeVector, Root};

pub const LINE_COUNT: usize = 27;

/// Label of a line. The derived order (E < F < G, indices lexicographic) is
/// the canonical line order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LineLabel {
    /// Exceptional curve over the i-th point.
    E(u8),
    /// Strict transform of the line through points i < j.
    F(u8, u8),
    /// Strict transform of the conic through the five points other than i.
    G(u8),
}

impl LineLabel {
    pub fn class(&self) -> LatticeVector {
        let e = |i: u8| LatticeVector::basis(usize::from(i));
        match *self {
            LineLabel::E(i) => e(i),
            LineLabel::F(i, j) => e(0) - e(i) - e(j),
            LineLabel::G(i) => {
                let mut v = 2 * e(0);
                for j in (1..=6).filter(|&j| j != i) {
                    v = v - e(j);
                }
                v
            }
        }
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::E(i) => write!(f, "E{i}"),
            LineLabel::F(i, j) => write!(f, "F{i}{j}"),
            LineLabel::G(i) => write!(f, "G{i}"),
        }
    }
}

impl Serialize for LineLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Line {
    pub label: LineLabel,
    pub class: LatticeVector,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.label.fmt(f)
    }
}

/// E1..E6, F12..F56, G1..G6.
pub fn enumerate_lines() -> Vec<Line> {
    let mut labels: Vec<LineLabel> = (1..=6).map(LineLabel::E).collect();
    for i in 1..=6 {
        for j in i + 1..=6 {
            labels.push(LineLabel::F(i, j));
        }
    }
    labels.extend((1..=6).map(LineLabel::G));
    labels
        .into_iter()
        .map(|label| Line {
            label,
            class: label.class(),
        })
        .collect()
}

/// The pairing of two distinct lines: 1 if they meet, 0 if they are skew.
pub fn incidence(a: &Line, b: &Line) -> Result<i64> {
    if a == b {
        return Err(AtlasError::SameLine(a.label.to_string()));
    }
    Ok(pair(&a.class, &b.class))
}

/// The meeting graph of the 27 lines.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    lines: Vec<Line>,
    adjacency: [[bool; LINE_COUNT]; LINE_COUNT],
}

impl IncidenceGraph {
    pub fn new() -> Self {
        let lines = enumerate_lines();
        let mut adjacency = [[false; LINE_COUNT]; LINE_COUNT];
        for (i, a) in lines.iter().enumerate() {
            for (j, b) in lines.iter().enumerate() {
                if i != j {
                    let p = pair(&a.class, &b.class);
                    assert!(p == 0 || p == 1, "{a} . {b} = {p}");
                    adjacency[i][j] = p == 1;
                }
            }
        }
        Self { lines, adjacency }
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn adjacency(&self) -> &[[bool; LINE_COUNT]; LINE_COUNT] {
        &self.adjacency
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].iter().filter(|&&b| b).count()
    }

    pub fn index_of(&self, label: LineLabel) -> Option<usize> {
        self.lines.iter().position(|l| l.label == label)
    }

    /// Adjacency as 0/1 rows.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        self.adjacency
            .iter()
            .map(|row| row.iter().map(|&b| u8::from(b)).collect())
            .collect()
    }
}

impl Default for IncidenceGraph {
    fn default() -> Self {
        Self::new()
    }
}

pub fn incidence_graph() -> &'static IncidenceGraph {
    static GRAPH: OnceLock<IncidenceGraph> = OnceLock::new();
    GRAPH.get_or_init(IncidenceGraph::new)
}

/// Every ordered pair of skew lines, in canonical order.
pub fn skew_pairs() -> Vec<(Line, Line)> {
    let g = incidence_graph();
    let lines = g.lines();
    let mut out = Vec::with_capacity(LINE_COUNT * 16);
    for i in 0..LINE_COUNT {
        for j in 0..LINE_COUNT {
            if i != j && !g.meets(i, j) {
                out.push((lines[i], lines[j]));
            }
        }
    }
    out
}

/// class(a) - class(b) for skew lines a, b.
pub fn root_from_pair(a: &Line, b: &Line) -> Result<Root> {
    match incidence(a, b)? {
        0 => Root::new(a.class - b.class),
        _ => Err(AtlasError::NotSkew(
            a.label.to_string(),
            b.label.to_string(),
        )),
    }
}

/// All ordered skew pairs whose class difference is `alpha`, sorted by
/// (first label, second label). Found by filtering the 432 skew pairs.
pub fn decompose_root(alpha: &LatticeVector) -> Result<Vec<(Line, Line)>> {
    if !lattice::is_root(alpha) {
        return Err(not_a_root(*alpha));
    }
    let mut out: Vec<(Line, Line)> = skew_pairs()
        .into_iter()
        .filter(|(a, b)| a.class - b.class == *alpha)
        .collect();
    out.sort_by_key(|(a, b)| (a.label, b.label));
    Ok(out)
}

/// Every line has degree 1 against h and square -1.
pub fn is_line_class(v: &LatticeVector) -> bool {
    v.square() == -1 && pair(v, &hyperplane_class()) == 1
}

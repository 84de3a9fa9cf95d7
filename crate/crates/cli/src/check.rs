//! The invariant suite behind `atlas check`.

use serde::Serialize;

use atlas_core::atlas::{
    a1_example_breakdown, diff_table1, eckardt_line_model, eckardt_search, effective_orbit_split,
    root_span_rank, table1, transitivity_check, weyl_group, PUBLISHED_TABLE1,
};
use atlas_core::lattice::{gram, root_pairings};
use atlas_core::linalg::determinant;
use atlas_core::lines::is_line_class;
use atlas_core::weyl::ROOT_COUNT;
use atlas_core::{
    classify, close_subsystem, decompose_root, enumerate_lines, generate_group, hyperplane_class,
    incidence_graph, orbits, pair, realize, root_from_pair, root_system, simple_roots, skew_pairs,
    AtlasError, LatticeVector, SubsystemConfig, WeylElement,
};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, detail: impl Into<String>, counterexample: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(detail.into())
    } else {
        Err(counterexample())
    }
}

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut bad: impl FnMut(&T) -> Option<String>,
) -> Option<String> {
    items.into_iter().find_map(|x| bad(&x))
}

fn configs() -> Vec<SubsystemConfig> {
    PUBLISHED_TABLE1
        .iter()
        .map(|r| r.config.parse().expect("published labels parse"))
        .collect()
}

fn roots_count() -> Outcome {
    let n = root_system().len();
    ensure(n == 72, "72 roots", || format!("found {n} roots"))
}

fn roots_are_roots() -> Outcome {
    let h = hyperplane_class();
    let bad = first_failure(root_system().vectors(), |v| {
        (pair(v, v) != -2 || pair(v, &h) != 0).then(|| format!("{v}"))
    });
    ensure(
        bad.is_none(),
        "every root has square -2 and is orthogonal to h",
        || bad.unwrap(),
    )
}

fn negation_closed() -> Outcome {
    let rs = root_system();
    let bad = first_failure(rs.vectors(), |v| {
        rs.index_of(&-**v).is_none().then(|| format!("-{v}"))
    });
    ensure(
        bad.is_none(),
        "the root set is closed under negation",
        || bad.unwrap(),
    )
}

fn lines_count() -> Outcome {
    let lines = enumerate_lines();
    let bad = first_failure(&lines, |l| {
        (!is_line_class(&l.class)).then(|| l.label.to_string())
    });
    ensure(
        lines.len() == 27 && bad.is_none(),
        "27 classes with l.l = -1, l.h = 1",
        || bad.unwrap_or_else(|| format!("found {} lines", lines.len())),
    )
}

fn schlafli_graph() -> Outcome {
    let g = incidence_graph();
    let n = g.lines().len();
    for i in 0..n {
        if g.degree(i) != 10 {
            return Err(format!("{} has degree {}", g.lines()[i].label, g.degree(i)));
        }
        for j in i + 1..n {
            let common = (0..n).filter(|&k| g.meets(i, k) && g.meets(j, k)).count();
            let want = if g.meets(i, j) { 1 } else { 5 };
            if common != want {
                return Err(format!(
                    "{} and {} have {common} common neighbours",
                    g.lines()[i].label,
                    g.lines()[j].label
                ));
            }
        }
    }
    Ok("strongly regular with parameters (27,10,1,5)".into())
}

fn skew_pair_count() -> Outcome {
    let n = skew_pairs().len();
    ensure(n == 432, "432 ordered skew pairs", || format!("found {n}"))
}

fn skew_pairs_give_roots() -> Outcome {
    let bad = first_failure(skew_pairs(), |(a, b)| {
        root_from_pair(a, b)
            .err()
            .map(|e| format!("{} - {}: {e}", a.label, b.label))
    });
    ensure(bad.is_none(), "every skew difference is a root", || {
        bad.unwrap()
    })
}

fn six_decompositions() -> Outcome {
    let bad = first_failure(root_system().vectors(), |v| match decompose_root(v) {
        Ok(p) if p.len() == 6 => None,
        Ok(p) => Some(format!("{v} has {} decompositions", p.len())),
        Err(e) => Some(format!("{v}: {e}")),
    });
    ensure(bad.is_none(), "all 72 roots checked", || bad.unwrap())
}

fn span_rank() -> Outcome {
    let r = root_span_rank();
    ensure(r == 6, "rank 6", || format!("rank {r}"))
}

fn simple_gram_det() -> Outcome {
    let s: Vec<LatticeVector> = simple_roots().iter().map(|r| *r.vector()).collect();
    let d = determinant(&gram(&s));
    ensure(d.abs() == 3, format!("det = {d}"), || format!("det = {d}"))
}

fn simple_roots_e6() -> Outcome {
    let s: Vec<LatticeVector> = simple_roots().iter().map(|r| *r.vector()).collect();
    match classify(&s) {
        Ok(c) if c.to_string() == "E6" => Ok("closure of the simple roots has type E6".into()),
        Ok(c) => Err(format!("type {c}")),
        Err(e) => Err(e.to_string()),
    }
}

fn all_reflections() -> Vec<WeylElement> {
    (0..ROOT_COUNT).map(WeylElement::reflection).collect()
}

fn reflections_involutive() -> Outcome {
    let bad = first_failure(all_reflections().iter().enumerate(), |(i, r)| {
        (!r.compose(r).is_identity()).then(|| format!("reflection in {}", root_system().get(*i)))
    });
    ensure(
        bad.is_none(),
        "72 reflections squared to the identity",
        || bad.unwrap(),
    )
}

fn reflections_isometric() -> Outcome {
    let table = root_pairings();
    let bad = first_failure(all_reflections().iter().enumerate(), |(i, r)| {
        for a in 0..ROOT_COUNT {
            for b in 0..ROOT_COUNT {
                if table[r.apply_index(a)][r.apply_index(b)] != table[a][b] {
                    return Some(format!("reflection {i} on roots {a}, {b}"));
                }
            }
        }
        None
    });
    ensure(bad.is_none(), "all root pairings preserved", || {
        bad.unwrap()
    })
}

fn reflections_fix_h() -> Outcome {
    let h = hyperplane_class();
    let bad = first_failure(all_reflections().iter().enumerate(), |(i, r)| {
        let img = r.apply(&h);
        (img != h).then(|| format!("reflection {i} sends h to {img}"))
    });
    ensure(bad.is_none(), "h fixed by all 72 reflections", || {
        bad.unwrap()
    })
}

fn weyl_order() -> Outcome {
    let n = weyl_group().order;
    ensure(n == 51840, "closure of 6 simple reflections", || {
        format!("order {n}")
    })
}

fn transitive() -> Outcome {
    ensure(transitivity_check(), "one orbit of size 72", || {
        "more than one orbit".into()
    })
}

fn a1_example() -> Outcome {
    let b = a1_example_breakdown().map_err(|e| e.to_string())?;
    let blocks = orbits(&[b.delta]).map_err(|e| e.to_string())?;
    let singles = blocks.iter().filter(|b| b.len() == 1).count();
    let doubles = blocks.iter().filter(|b| b.len() == 2).count();
    let sizes: Vec<usize> = b.classes.iter().map(|c| c.size).collect();
    let contrib: Vec<usize> = b.classes.iter().map(|c| c.orbits).collect();
    let ok = blocks.len() == 51
        && singles == 30
        && doubles == 21
        && sizes == [2, 40, 30]
        && contrib == [1, 20, 30];
    ensure(ok, "51 = (2+40)/2 + 30", || {
        format!(
            "{} orbits, sizes {sizes:?}, contributions {contrib:?}",
            blocks.len()
        )
    })
}

fn orbit_sums() -> Outcome {
    let bad = first_failure(configs(), |c| {
        let blocks = realize(c).and_then(|g| orbits(&g));
        match blocks {
            Ok(b) if b.iter().map(Vec::len).sum::<usize>() == 72 => None,
            Ok(_) => Some(format!("{c}: block sizes do not sum to 72")),
            Err(e) => Some(format!("{c}: {e}")),
        }
    });
    ensure(bad.is_none(), "21 configurations", || bad.unwrap())
}

fn table_matches() -> Outcome {
    let rows = table1().map_err(|e| e.to_string())?;
    let diff = diff_table1(&rows);
    ensure(
        diff.is_empty(),
        "21 counts equal the published values",
        || {
            let m = &diff[0];
            format!(
                "{}: published {:?}, computed {:?}",
                m.config, m.published, m.computed
            )
        },
    )
}

fn effective_bijection() -> Outcome {
    let bad = first_failure(configs(), |c| match effective_orbit_split(c) {
        Ok(s) if s.inside == c.factor_count() as usize => None,
        Ok(s) => Some(format!(
            "{c}: {} effective orbits, {} factors",
            s.inside,
            c.factor_count()
        )),
        Err(e) => Some(format!("{c}: {e}")),
    });
    ensure(
        bad.is_none(),
        "effective orbits = irreducible factors for 21 configurations",
        || bad.unwrap(),
    )
}

fn closures_have_expected_size() -> Outcome {
    let bad = first_failure(configs(), |c| {
        let sub = realize(c).and_then(|g| close_subsystem(&g));
        match sub {
            Ok(s) if s.len() as u64 == c.root_count() && s.label == *c => None,
            Ok(s) => Some(format!(
                "{c}: closure of type {} with {} roots",
                s.label,
                s.len()
            )),
            Err(e) => Some(format!("{c}: {e}")),
        }
    });
    ensure(
        bad.is_none(),
        "21 realizations classify back to their labels",
        || bad.unwrap(),
    )
}

fn local_group_orders() -> Outcome {
    let bad = first_failure(configs(), |c| {
        let g = realize(c).and_then(|g| generate_group(&g));
        match g {
            Ok(g) if g.order as u64 == c.weyl_order() => None,
            Ok(g) => Some(format!(
                "{c}: order {} instead of {}",
                g.order,
                c.weyl_order()
            )),
            Err(e) => Some(format!("{c}: {e}")),
        }
    });
    ensure(
        bad.is_none(),
        "|W(R_e)| equals the product formula for 21 configurations",
        || bad.unwrap(),
    )
}

fn non_embeddable() -> Outcome {
    let c: SubsystemConfig = "A2+A3".parse().map_err(|e: AtlasError| e.to_string())?;
    match realize(&c) {
        Err(AtlasError::NotEmbeddable { visited, .. }) => Ok(format!(
            "A2+A3 rejected after visiting {visited} partial tuples"
        )),
        Ok(r) => Err(format!("A2+A3 realized by {} roots", r.len())),
        Err(e) => Err(e.to_string()),
    }
}

fn eckardt_free_elements() -> Outcome {
    let found = eckardt_search();
    if found.is_empty() {
        return Err("no fixed-point-free element of order 3".into());
    }
    let bad = first_failure(&found, |g| {
        let cycles = g.cycles();
        (g.order() != 3 || cycles.len() != 24 || cycles.iter().any(|c| c.len() != 3))
            .then(|| g.cycle_notation())
    });
    ensure(
        bad.is_none(),
        format!("{} elements, each with 24 orbits of size 3", found.len()),
        || bad.unwrap(),
    )
}

fn eckardt_model() -> Outcome {
    let model = eckardt_line_model().map_err(|e| e.to_string())?;
    let g = &model.induced;
    let h = hyperplane_class();
    let in_set = eckardt_search().binary_search(g).is_ok();
    let ok = g.order() == 3 && g.apply(&h) == h && g.fixed_points().is_empty() && in_set;
    ensure(ok, "order 3, fixes h, free, found by the search", || {
        format!(
            "order {}, fixes h {}, fixed roots {}, in search {in_set}",
            g.order(),
            g.apply(&h) == h,
            g.fixed_points().len()
        )
    })
}

type Invariant = (&'static str, fn() -> Outcome);

const SUITE: &[Invariant] = &[
    ("there are exactly 72 roots", roots_count),
    (
        "roots have square -2 and are orthogonal to h",
        roots_are_roots,
    ),
    ("the root set is closed under negation", negation_closed),
    ("there are exactly 27 lines", lines_count),
    ("the line incidence graph is srg(27,10,1,5)", schlafli_graph),
    ("there are exactly 432 ordered skew pairs", skew_pair_count),
    ("skew line differences are roots", skew_pairs_give_roots),
    ("each root decomposes in exactly 6 ways", six_decompositions),
    ("the roots span a rank 6 lattice", span_rank),
    (
        "the simple-system Gram determinant has absolute value 3",
        simple_gram_det,
    ),
    ("the simple roots form an E6 diagram", simple_roots_e6),
    ("reflections are involutions", reflections_involutive),
    ("reflections preserve the pairing", reflections_isometric),
    ("reflections fix h", reflections_fix_h),
    ("|W(E6)| = 51840", weyl_order),
    ("W(E6) acts transitively on the roots", transitive),
    ("a single node gives 51 orbits", a1_example),
    ("orbit block sizes sum to 72", orbit_sums),
    ("orbit counts match the published table", table_matches),
    (
        "effective orbits correspond to singular points",
        effective_bijection,
    ),
    (
        "realizations close to sub-root systems of the right type",
        closures_have_expected_size,
    ),
    (
        "local monodromy group orders match the product formula",
        local_group_orders,
    ),
    ("A2+A3 does not embed in E6", non_embeddable),
    (
        "free order-3 elements have 24 orbits of size 3",
        eckardt_free_elements,
    ),
    (
        "the line-model element is a free order-3 isometry",
        eckardt_model,
    ),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SUITE.iter().map(|(n, _)| *n)
}

pub fn run_suite() -> Vec<CheckResult> {
    SUITE
        .iter()
        .map(|(name, f)| match f() {
            Ok(detail) => CheckResult {
                name,
                passed: true,
                detail,
                counterexample: None,
            },
            Err(c) => CheckResult {
                name,
                passed: false,
                detail: "failed".into(),
                counterexample: Some(c),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_unique() {
        let mut n: Vec<_> = names().collect();
        let len = n.len();
        n.sort();
        n.dedup();
        assert_eq!(n.len(), len);
        assert!(len >= 25);
    }

    #[test]
    fn cheap_checks_pass() {
        for f in [
            roots_count,
            negation_closed,
            six_decompositions,
            schlafli_graph,
            simple_gram_det,
        ] {
            assert!(f().is_ok());
        }
    }
}

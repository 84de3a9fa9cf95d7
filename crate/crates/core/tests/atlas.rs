use std::collections::{HashSet, VecDeque};

use atlas_core::atlas::{
    eckardt_line_model, eckardt_search, effective_orbit_split, orbit_count, weyl_group,
    PUBLISHED_TABLE1,
};
use atlas_core::linalg::{self, Matrix7};
use atlas_core::weyl::realize_with_rng;
use atlas_core::{
    classify, close_subsystem, generate_group, orbit_max, orbits, realize, root_system,
    simple_roots, LatticeVector, SubsystemConfig, WeylElement,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn configs() -> Vec<SubsystemConfig> {
    PUBLISHED_TABLE1
        .iter()
        .map(|r| r.config.parse().unwrap())
        .collect()
}

fn simple() -> Vec<LatticeVector> {
    simple_roots().iter().map(|r| *r.vector()).collect()
}

fn reflection_matrix(alpha: &LatticeVector) -> Matrix7 {
    let cols: [LatticeVector; 7] = std::array::from_fn(|j| {
        let e = LatticeVector::basis(j);
        e + alpha.pair(&e) * *alpha
    });
    std::array::from_fn(|i| std::array::from_fn(|j| cols[j].0[i]))
}

/// Closure of reflection matrices, independent of the permutation machinery.
fn matrix_group_order(gens: &[LatticeVector]) -> usize {
    let gens: Vec<Matrix7> = gens.iter().map(reflection_matrix).collect();
    let mut seen = HashSet::from([linalg::identity7()]);
    let mut queue = VecDeque::from([linalg::identity7()]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let n = linalg::compose(g, &m);
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len()
}

#[test]
fn weyl_e6_order_matches_matrix_oracle() {
    // Frozen from matrix_group_order(simple roots).
    const W_E6: usize = 51_840;
    assert_eq!(matrix_group_order(&simple()), W_E6);
    assert_eq!(weyl_group().order, W_E6);
    let all: Vec<LatticeVector> = root_system().vectors().copied().collect();
    assert_eq!(generate_group(&all).unwrap().order, W_E6);
}

#[test]
fn subgroup_orders_match_product_formula() {
    for c in configs() {
        let gens = realize(&c).unwrap();
        let order = generate_group(&gens).unwrap().order as u64;
        assert_eq!(order, c.weyl_order(), "{c}");
        assert_eq!(51_840 % order, 0);
    }
    // each factor formula confirmed on a realization of its own
    for label in ["A1", "A2", "A3", "A4", "A5", "D4", "D5"] {
        let c: SubsystemConfig = label.parse().unwrap();
        let gens = realize(&c).unwrap();
        assert_eq!(matrix_group_order(&gens) as u64, c.weyl_order(), "{c}");
    }
}

#[test]
fn table_configs_round_trip_and_close_to_the_right_size() {
    for c in configs() {
        let gens = realize(&c).unwrap();
        assert_eq!(gens.len() as u32, c.rank());
        assert_eq!(classify(&gens).unwrap(), c);
        assert_eq!(
            close_subsystem(&gens).unwrap().len() as u64,
            c.root_count(),
            "{c}"
        );
    }
}

#[test]
fn orbit_counts_match_published_table() {
    for row in PUBLISHED_TABLE1 {
        let c: SubsystemConfig = row.config.parse().unwrap();
        assert_eq!(orbit_count(&c).unwrap(), row.count, "{c}");
        let split = effective_orbit_split(&c).unwrap();
        assert_eq!(split.inside as u32, c.factor_count(), "{c}");
        assert_eq!(split.total(), row.count);
    }
}

#[test]
fn orbit_counts_do_not_depend_on_the_realization() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for c in configs() {
        let want = orbit_count(&c).unwrap();
        let mut distinct = HashSet::new();
        for _ in 0..20 {
            let gens = realize_with_rng(&c, &mut rng).unwrap();
            assert_eq!(classify(&gens).unwrap(), c);
            assert_eq!(orbits(&gens).unwrap().len(), want, "{c}");
            distinct.insert(close_subsystem(&gens).unwrap().indices);
        }
        if !c.is_empty() && c.to_string() != "E6" {
            assert!(distinct.len() > 1, "{c}: realizations never varied");
        }
    }
}

#[test]
fn effective_orbits_have_one_maximal_root_each() {
    let rs = root_system();
    for c in configs() {
        let gens = realize(&c).unwrap();
        let sub = close_subsystem(&gens).unwrap();
        for block in orbits(&gens).unwrap() {
            let members: Vec<LatticeVector> = block.iter().map(|&i| *rs.get(i)).collect();
            let top = orbit_max(&members, &sub.simple).unwrap();
            assert!(!top.is_empty());
            if block.iter().all(|&i| sub.contains_index(i)) {
                assert_eq!(top.len(), 1, "{c}");
                // the highest root of its component dominates every member
                let comp = sub
                    .components
                    .iter()
                    .find(|s| s.iter().any(|x| members.contains(x)))
                    .unwrap();
                let coeffs = linalg::integer_coefficients(comp, &top[0]).unwrap();
                assert!(coeffs.iter().all(|&k| k >= 1), "{c}: {coeffs:?}");
            }
        }
    }
}

#[test]
fn eckardt_elements_act_freely_with_24_orbits() {
    let found = eckardt_search();
    assert!(!found.is_empty());
    assert!(found.windows(2).all(|w| w[0] < w[1]));
    for g in &found {
        assert_eq!(g.order(), 3);
        let cycles = g.cycles();
        assert_eq!(cycles.len(), 24);
        assert!(cycles.iter().all(|c| c.len() == 3));
    }
    let model = eckardt_line_model().unwrap();
    assert!(found.binary_search(&model.induced).is_ok());
    // conjugacy data, reported rather than assumed
    eprintln!("free order-3 elements in W(E6): {}", found.len());
}

#[test]
fn non_free_order_three_elements_are_excluded() {
    let s = simple();
    let rotation = atlas_core::picard_lefschetz_word(&[s[0], s[3]]).unwrap();
    assert_eq!(rotation.order(), 3);
    assert!(!rotation.fixed_points().is_empty());
    assert!(eckardt_search().binary_search(&rotation).is_err());
    assert!(eckardt_search()
        .iter()
        .all(|g| *g != WeylElement::identity()));
}

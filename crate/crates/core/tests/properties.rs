use std::collections::HashSet;

use atlas_core::lattice::{gram, root_pairings};
use atlas_core::linalg::{self, determinant};
use atlas_core::weyl::{reflection_perm, ROOT_COUNT};
use atlas_core::{
    decompose_root, hyperplane_class, pair, picard_lefschetz_word, reflect, root_system,
    skew_pairs, LatticeVector,
};
use proptest::prelude::*;

fn root(i: usize) -> LatticeVector {
    *root_system().get(i)
}

fn root_index() -> impl Strategy<Value = usize> {
    0..ROOT_COUNT
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear(
        a in prop::array::uniform7(-5i64..5),
        b in prop::array::uniform7(-5i64..5),
        c in prop::array::uniform7(-5i64..5),
        k in -4i64..4,
    ) {
        let (a, b, c) = (LatticeVector::new(a), LatticeVector::new(b), LatticeVector::new(c));
        prop_assert_eq!(pair(&a, &b), pair(&b, &a));
        prop_assert_eq!(pair(&(a + k * b), &c), pair(&a, &c) + k * pair(&b, &c));
    }

    #[test]
    fn reflections_are_isometric_involutions(
        a in root_index(),
        v in prop::array::uniform7(-4i64..4),
        w in prop::array::uniform7(-4i64..4),
    ) {
        let alpha = root(a);
        let (v, w) = (LatticeVector::new(v), LatticeVector::new(w));
        let rv = reflect(&alpha, &v).unwrap();
        let rw = reflect(&alpha, &w).unwrap();
        prop_assert_eq!(reflect(&alpha, &rv).unwrap(), v);
        prop_assert_eq!(pair(&rv, &rw), pair(&v, &w));
        prop_assert_eq!(reflect(&alpha, &hyperplane_class()).unwrap(), hyperplane_class());
    }

    #[test]
    fn words_act_through_their_matrices(word in prop::collection::vec(root_index(), 0..12)) {
        let deltas: Vec<LatticeVector> = word.iter().map(|&i| root(i)).collect();
        let g = picard_lefschetz_word(&deltas).unwrap();
        let m = g.matrix();
        let rs = root_system();
        for i in 0..ROOT_COUNT {
            prop_assert_eq!(linalg::apply(&m, rs.get(i)), *rs.get(g.apply_index(i)));
        }
        prop_assert_eq!(linalg::apply(&m, &hyperplane_class()), hyperplane_class());
        let table = root_pairings();
        for i in 0..ROOT_COUNT {
            for j in 0..ROOT_COUNT {
                prop_assert_eq!(table[g.apply_index(i)][g.apply_index(j)], table[i][j]);
            }
        }
    }

    #[test]
    fn six_roots_have_gram_determinant_divisible_by_three(
        picks in prop::collection::btree_set(root_index(), 6)
    ) {
        let vs: Vec<LatticeVector> = picks.iter().map(|&i| root(i)).collect();
        let det = determinant(&gram(&vs));
        prop_assert_eq!(det % 3, 0);
        prop_assert_eq!(det != 0, linalg::rank(&vs) == 6);
    }

    #[test]
    fn negated_root_decomposes_into_reversed_pairs(a in root_index()) {
        let alpha = root(a);
        let fwd = decompose_root(&alpha).unwrap();
        let back = decompose_root(&-alpha).unwrap();
        prop_assert_eq!(fwd.len(), 6);
        let mut reversed: Vec<_> = fwd.iter().map(|(x, y)| (y.label, x.label)).collect();
        reversed.sort();
        let back: Vec<_> = back.iter().map(|(x, y)| (x.label, y.label)).collect();
        prop_assert_eq!(reversed, back);
    }
}

#[test]
fn reflection_permutations_are_faithful() {
    // The only word acting trivially on roots is the identity matrix.
    for i in 0..ROOT_COUNT {
        let p = reflection_perm(i);
        assert!(p.compose(p).is_identity());
        assert!(!p.is_identity());
    }
    let e = LatticeVector::basis;
    let g = picard_lefschetz_word(&[e(1) - e(2), e(1) - e(2)]).unwrap();
    assert!(g.is_identity());
    assert_eq!(g.matrix(), linalg::identity7());
}

#[test]
fn skew_pairs_cover_roots_six_to_one() {
    let pairs = skew_pairs();
    assert_eq!(pairs.len(), 432);
    let mut total = 0;
    let mut seen = HashSet::new();
    for alpha in root_system().vectors() {
        let d = decompose_root(alpha).unwrap();
        assert_eq!(d.len(), 6, "{alpha}");
        for (a, b) in d {
            assert!(seen.insert((a.label, b.label)));
        }
        total += 6;
    }
    assert_eq!(total, 432);
    assert_eq!(seen.len(), pairs.len());
}

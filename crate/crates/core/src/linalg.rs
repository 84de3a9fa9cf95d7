//! Small exact linear algebra over Q for 7-dimensional lattice work.

use num_rational::Ratio;

use crate::lattice::{LatticeVector, RANK};

type Q = Ratio<i128>;

/// Integer 7x7 matrix acting on column vectors of e0..e6 coefficients.
pub type Matrix7 = [[i64; RANK]; RANK];

pub fn identity7() -> Matrix7 {
    std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)))
}

pub fn apply(m: &Matrix7, v: &LatticeVector) -> LatticeVector {
    LatticeVector(std::array::from_fn(|i| {
        (0..RANK).map(|j| m[i][j] * v.0[j]).sum()
    }))
}

pub fn compose(a: &Matrix7, b: &Matrix7) -> Matrix7 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..RANK).map(|k| a[i][k] * b[k][j]).sum()))
}

fn to_q(x: i64) -> Q {
    Q::from_integer(i128::from(x))
}

/// Row-reduces in place and returns the pivot columns.
fn row_reduce(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for x in m[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows {
            if i != r && m[i][c] != Q::from_integer(0) {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = f * m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the span of `vectors` over Q.
pub fn rank(vectors: &[LatticeVector]) -> usize {
    let mut m: Vec<Vec<Q>> = vectors
        .iter()
        .map(|v| v.0.iter().map(|&x| to_q(x)).collect())
        .collect();
    row_reduce(&mut m).len()
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
}

/// Coefficients c with sum c_i basis_i = target, if target lies in the rational
/// span. `basis` must be linearly independent.
pub fn rational_coefficients(basis: &[LatticeVector], target: &LatticeVector) -> Option<Vec<Q>> {
    let k = basis.len();
    let mut m: Vec<Vec<Q>> = (0..RANK)
        .map(|i| {
            basis
                .iter()
                .map(|b| to_q(b.0[i]))
                .chain(std::iter::once(to_q(target.0[i])))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|i| m[i][k]).collect())
}

/// Integer coefficients of `target` over `basis`, if they exist.
pub fn integer_coefficients(basis: &[LatticeVector], target: &LatticeVector) -> Option<Vec<i64>> {
    rational_coefficients(basis, target)?
        .into_iter()
        .map(|q| {
            q.is_integer()
                .then(|| i64::try_from(q.to_integer()).ok())
                .flatten()
        })
        .collect()
}

/// The unique rational matrix M with M source_k = image_k, returned only if
/// `source` is a basis of Q^7 and M has integer entries.
pub fn linear_map(
    source: &[LatticeVector; RANK],
    image: &[LatticeVector; RANK],
) -> Option<Matrix7> {
    // Solve M S = D by transposition: S^T M^T = D^T.
    let mut m: Vec<Vec<Q>> = (0..RANK)
        .map(|k| {
            source[k]
                .0
                .iter()
                .map(|&x| to_q(x))
                .chain(image[k].0.iter().map(|&x| to_q(x)))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots != (0..RANK).collect::<Vec<_>>() {
        return None;
    }
    // Row j of the reduced right block is column j of M^T, i.e. row j of M^T.
    let mut out = [[0i64; RANK]; RANK];
    for j in 0..RANK {
        for i in 0..RANK {
            let q = m[j][RANK + i];
            if !q.is_integer() {
                return None;
            }
            out[i][j] = i64::try_from(q.to_integer()).ok()?;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 2]]), 3);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
        let a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(&a3), 4);
    }

    #[test]
    fn coefficients() {
        let e = LatticeVector::basis;
        let basis = [e(1) - e(2), e(2) - e(3)];
        assert_eq!(
            integer_coefficients(&basis, &(e(1) - e(3))),
            Some(vec![1, 1])
        );
        assert_eq!(integer_coefficients(&basis, &e(1)), None);
        assert_eq!(rank(&[e(0), e(1), e(0) + e(1)]), 2);
    }

    #[test]
    fn linear_map_recovers_matrix() {
        let src: [LatticeVector; RANK] = std::array::from_fn(LatticeVector::basis);
        let mut m = identity7();
        m[0][1] = 3;
        m[4][4] = -1;
        let img = src.map(|v| apply(&m, &v));
        assert_eq!(linear_map(&src, &img), Some(m));
        let half = src.map(|v| 2 * v);
        assert_eq!(linear_map(&half, &src), None);
    }
}

//! Small fixed-size dense linear algebra: Gaussian elimination with partial
//! pivoting.

pub type Matrix<const N: usize> = [[f64; N]; N];

/// Determinant as the signed product of pivots.
pub fn determinant<const N: usize>(mut m: Matrix<N>) -> f64 {
    let mut det = 1.0;
    for col in 0..N {
        let pivot_row = (col..N)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap_or(col);
        if m[pivot_row][col] == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        for row in col + 1..N {
            let factor = m[row][col] / pivot;
            if factor != 0.0 {
                for k in col..N {
                    m[row][k] -= factor * m[col][k];
                }
            }
        }
    }
    det
}

/// Solves `a · x = rhs`. Returns `None` when a pivot falls below
/// `rel_tol` times the largest entry magnitude of `a`.
pub fn solve<const N: usize>(
    mut a: Matrix<N>,
    mut rhs: [f64; N],
    rel_tol: f64,
) -> Option<[f64; N]> {
    let scale = a.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return None;
    }
    for col in 0..N {
        let pivot_row = (col..N).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot_row][col].abs() <= rel_tol * scale {
            return None;
        }
        a.swap(pivot_row, col);
        rhs.swap(pivot_row, col);
        for row in col + 1..N {
            let factor = a[row][col] / a[col][col];
            for k in col..N {
                a[row][k] -= factor * a[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut x = [0.0; N];
    for row in (0..N).rev() {
        let tail: f64 = (row + 1..N).map(|k| a[row][k] * x[k]).sum();
        x[row] = (rhs[row] - tail) / a[row][row];
    }
    Some(x)
}

/// Product of the row ∞-norms, an upper bound on `|det m|` used to judge
/// whether a determinant is small relative to the matrix's scale.
pub fn row_norm_product<const N: usize>(m: &Matrix<N>) -> f64 {
    m.iter()
        .map(|row| row.iter().fold(0.0f64, |acc, v| acc.max(v.abs())))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Laplace expansion along the first row; independent of elimination.
    fn cofactor_det(m: &[Vec<f64>]) -> f64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<f64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn known_determinants() {
        assert_eq!(determinant([[2.0, 0.0], [0.0, 3.0]]), 6.0);
        assert_eq!(determinant([[0.0, 1.0], [1.0, 0.0]]), -1.0);
        assert_eq!(determinant([[1.0, 2.0], [2.0, 4.0]]), 0.0);
        let m = [
            [2.0, -1.0, 0.0, 0.0],
            [-1.0, 2.0, -1.0, 0.0],
            [0.0, -1.0, 2.0, -1.0],
            [0.0, 0.0, -1.0, 2.0],
        ];
        assert!((determinant(m) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn solve_small_system() {
        let x = solve(
            [[0.0, 2.0, 1.0], [1.0, 1.0, 0.0], [3.0, 0.0, 1.0]],
            [5.0, 3.0, 6.0],
            1e-14,
        )
        .unwrap();
        // y = 3 − x, z = 6 − 3x  ⇒  12 − 5x = 5
        for (got, want) in x.iter().zip([1.4, 1.6, 1.8]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn solve_detects_singular() {
        assert!(solve([[1.0, 2.0], [2.0, 4.0]], [1.0, 2.0], 1e-12).is_none());
    }

    proptest! {
        #[test]
        fn elimination_matches_cofactor_expansion(entries in prop::array::uniform16(-10.0f64..10.0)) {
            let mut m = [[0.0; 4]; 4];
            for (i, v) in entries.iter().enumerate() {
                m[i / 4][i % 4] = *v;
            }
            let rows: Vec<Vec<f64>> = m.iter().map(|r| r.to_vec()).collect();
            let want = cofactor_det(&rows);
            let got = determinant(m);
            prop_assert!((got - want).abs() <= 1e-9 * row_norm_product(&m).max(1.0));
        }
    }
}

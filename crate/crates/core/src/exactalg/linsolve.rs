//! Gaussian elimination over the rationals.

use super::Rational;
use crate::error::Error;

/// Solves `A v = b` for a system with any number of rows. The system must
/// have exactly one solution.
pub fn solve_unique(
    mut rows: Vec<Vec<Rational>>,
    mut rhs: Vec<Rational>,
    unknowns: usize,
) -> Result<Vec<Rational>, Error> {
    assert_eq!(rows.len(), rhs.len());
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            return Err(Error::Underdetermined);
        };
        rows.swap(pivot_row, found);
        rhs.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        rhs[pivot_row] *= &inv;
        let pivot: Vec<Rational> = rows[pivot_row][col..unknowns].to_vec();
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for (dst, p) in rows[r][col..unknowns].iter_mut().zip(&pivot) {
                *dst -= &(&factor * p);
            }
            let delta = &factor * &rhs[pivot_row];
            rhs[r] -= &delta;
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return Err(Error::Inconsistent);
    }
    Ok(pivots.into_iter().map(|r| rhs[r].clone()).collect())
}

/// Inverse of a square matrix given as rows.
pub fn invert(matrix: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, Error> {
    let n = matrix.len();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational> = (0..n)
            .map(|i| if i == j { Rational::one() } else { Rational::zero() })
            .collect();
        let col = solve_unique(matrix.to_vec(), e, n).map_err(|_| Error::NotInvertible("singular matrix".into()))?;
        columns.push(col);
    }
    Ok((0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn overdetermined_consistent() {
        let rows = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)], vec![q(2, 1), q(0, 1)]];
        let rhs = vec![q(3, 1), q(1, 1), q(4, 1)];
        assert_eq!(solve_unique(rows, rhs, 2).unwrap(), vec![q(2, 1), q(1, 1)]);
    }

    #[test]
    fn failures() {
        let rows = vec![vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]];
        assert_eq!(
            solve_unique(rows.clone(), vec![q(1, 1), q(2, 1)], 2),
            Err(Error::Underdetermined)
        );
        let rows = vec![vec![q(1, 1)], vec![q(1, 1)]];
        assert_eq!(solve_unique(rows, vec![q(1, 1), q(2, 1)], 1), Err(Error::Inconsistent));
    }

    #[test]
    fn inverse() {
        let m = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(1, 1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]]);
    }
}

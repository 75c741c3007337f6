use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QMatrix, ZMatrix};

/// Row Hermite normal form of the lattice spanned by `rows`.
///
/// Zero rows are dropped; pivots are positive and entries above a pivot lie
/// in `[0, pivot)`. Rows come out ordered by pivot column.
pub fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut top = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        loop {
            let nonzero: Vec<usize> = (top..rows.len()).filter(|&r| !rows[r][c].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero.iter().min_by(|&&a, &&b| rows[a][c].magnitude().cmp(rows[b][c].magnitude())).unwrap();
            rows.swap(top, p);
            if nonzero.len() == 1 {
                break;
            }
            let pivot_row = rows[top].clone();
            let pv = pivot_row[c].clone();
            for row in &mut rows[top + 1..] {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pv);
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
            }
        }
        if top < rows.len() && !rows[top][c].is_zero() {
            if rows[top][c].is_negative() {
                for x in rows[top].iter_mut() {
                    *x = -&*x;
                }
            }
            pivots.push(c);
            top += 1;
        }
    }
    rows.truncate(top);
    for (k, &c) in pivots.iter().enumerate() {
        let pivot_row = rows[k].clone();
        let pv = &pivot_row[c];
        for row in &mut rows[..k] {
            let q = row[c].div_floor(pv);
            if q.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &q * y;
                }
            }
        }
    }
    rows
}

/// Basis of the free abelian group `ker(M) ∩ Z^cols` in Hermite normal form.
///
/// Columns of the result are the basis vectors; each is primitive.
pub fn integer_nullspace_int(m: &ZMatrix) -> ZMatrix {
    let n = m.cols();
    // Column operations on M, mirrored on an identity block.
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|c| m.column(c)).collect();
    let mut u: Vec<Vec<BigInt>> =
        (0..n).map(|c| (0..n).map(|r| if r == c { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut k = 0;
    for i in 0..m.rows() {
        if k == n {
            break;
        }
        loop {
            let live: Vec<usize> = (k..n).filter(|&j| !a[j][i].is_zero()).collect();
            if live.is_empty() {
                break;
            }
            let p = *live.iter().min_by(|&&x, &&y| a[x][i].magnitude().cmp(a[y][i].magnitude())).unwrap();
            a.swap(k, p);
            u.swap(k, p);
            if live.len() == 1 {
                k += 1;
                break;
            }
            let (pa, pu) = (a[k].clone(), u[k].clone());
            let pv = pa[i].clone();
            for j in k + 1..n {
                if a[j][i].is_zero() {
                    continue;
                }
                let q = a[j][i].div_floor(&pv);
                for (x, y) in a[j].iter_mut().zip(&pa) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
                for (x, y) in u[j].iter_mut().zip(&pu) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
            }
        }
    }
    let kernel = hermite_rows(u.split_off(k));
    ZMatrix::from_fn(n, kernel.len(), |r, c| kernel[c][r].clone())
}

/// Integer kernel basis of a rational matrix (rows are cleared of denominators).
pub fn integer_nullspace(m: &QMatrix) -> ZMatrix {
    let z = ZMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        let lcm = m.row(r).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let x = m.get(r, c);
        if Zero::is_zero(x) {
            BigInt::zero()
        } else {
            x.numer() * (&lcm / x.denom())
        }
    });
    integer_nullspace_int(&z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: Vec<Vec<i64>>) -> ZMatrix {
        ZMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
    }

    #[test]
    fn kernel_of_single_row() {
        // x + y + z = 0
        let k = integer_nullspace_int(&z(vec![vec![1, 1, 1]]));
        assert_eq!(k.cols(), 2);
        assert!(z(vec![vec![1, 1, 1]]).mul(&k).is_zero());
        assert_eq!(k, z(vec![vec![1, 0], vec![0, 1], vec![-1, -1]]));
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x - 2y = 0 has kernel generated by (1, 1), not (2, 2).
        let k = integer_nullspace_int(&z(vec![vec![2, -2]]));
        assert_eq!(k, z(vec![vec![1], vec![1]]));
    }

    #[test]
    fn empty_row_matrix_gives_identity() {
        let k = integer_nullspace_int(&ZMatrix::zeros(0, 3));
        assert_eq!(k, ZMatrix::identity(3));
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_rows(vec![
            vec![2, 4, 6].into_iter().map(BigInt::from).collect(),
            vec![1, 1, 1].into_iter().map(BigInt::from).collect(),
        ]);
        let b = hermite_rows(vec![
            vec![3, 5, 7].into_iter().map(BigInt::from).collect(),
            vec![1, 1, 1].into_iter().map(BigInt::from).collect(),
        ]);
        assert_eq!(a, b);
    }
}

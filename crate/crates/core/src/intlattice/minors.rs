//! Direct minor enumeration. Kept independent of the elimination code in
//! `snf` so the two can be checked against each other.

use super::{IntMatrix, IntScalar};
use crate::error::{Error, Result};

/// Determinant by cofactor expansion along the first row.
pub fn determinant_oracle<I: IntScalar>(a: &[Vec<I>]) -> I {
    let n = a.len();
    match n {
        0 => I::one(),
        1 => a[0][0].clone(),
        2 => a[0][0].clone() * a[1][1].clone() - a[0][1].clone() * a[1][0].clone(),
        _ => {
            let mut det = I::zero();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<I>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = a[0][j].clone() * determinant_oracle(&minor);
                if j % 2 == 0 {
                    det = det + term;
                } else {
                    det = det - term;
                }
            }
            det
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of all `l×l` minors, by enumerating every one of them.
pub fn gcd_minors_oracle<I: IntScalar>(a: &IntMatrix<I>, l: usize) -> Result<I> {
    let k = a.rows().min(a.cols());
    if l == 0 || l > k {
        return Err(Error::Argument(format!("minor order {l} outside 1..={k}")));
    }
    let row_sets = combinations(a.rows(), l);
    let col_sets = combinations(a.cols(), l);
    let mut g = I::zero();
    for rs in &row_sets {
        for cs in &col_sets {
            let d = determinant_oracle(&a.submatrix(rs, cs));
            g = g.gcd(&d);
        }
    }
    Ok(g.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant_oracle(&[vec![2i64, 1], vec![1, 1]]), 1);
        let a = vec![vec![2i64, 0, 1], vec![1, 3, 2], vec![1, 1, 1]];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant_oracle(&a), 0);
    }

    #[test]
    fn enumerated_minor_gcd() {
        let a = IntMatrix::from_rows(vec![vec![2i64, 0, 1], vec![0, 2, 1]]).unwrap();
        // minors 4, 2, -2
        assert_eq!(gcd_minors_oracle(&a, 2).unwrap(), 2);
        assert_eq!(gcd_minors_oracle(&a, 1).unwrap(), 1);
        assert!(gcd_minors_oracle(&a, 3).is_err());
    }
}

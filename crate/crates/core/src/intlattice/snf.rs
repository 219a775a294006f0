use super::{IntMatrix, IntScalar};
use crate::error::{Error, Result};

/// Position of the nonzero entry of least absolute value in the trailing
/// block `a[p.., p..]`.
fn min_pivot<I: IntScalar>(a: &[Vec<I>], p: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(p) {
        for (j, x) in row.iter().enumerate().skip(p) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Invariant factors `d₁ | d₂ | …` of `a`, padded with zeros to
/// `min(rows, cols)` entries.
///
/// Elimination always pivots on the entry of smallest absolute value, so
/// every pass either clears the pivot row and column or strictly shrinks the
/// pivot.
pub fn smith_normal_form<I: IntScalar>(a: &IntMatrix<I>) -> Vec<I> {
    let mut m = a.to_rows();
    let (t, u) = (a.rows(), a.cols());
    let k = t.min(u);
    let mut diag = Vec::with_capacity(k);

    for p in 0..k {
        loop {
            let Some((pi, pj)) = min_pivot(&m, p) else {
                diag.resize(k, I::zero());
                return diag;
            };
            m.swap(p, pi);
            for row in m.iter_mut() {
                row.swap(p, pj);
            }

            let mut dirty = false;
            for i in p + 1..t {
                if m[i][p].is_zero() {
                    continue;
                }
                let q = m[i][p].div_floor(&m[p][p]);
                let pivot_row = m[p].clone();
                for (x, y) in m[i][p..].iter_mut().zip(&pivot_row[p..]) {
                    *x = x.clone() - q.clone() * y.clone();
                }
                dirty |= !m[i][p].is_zero();
            }
            for j in p + 1..u {
                if m[p][j].is_zero() {
                    continue;
                }
                let q = m[p][j].div_floor(&m[p][p]);
                for row in m.iter_mut().skip(p) {
                    let delta = q.clone() * row[p].clone();
                    row[j] = row[j].clone() - delta;
                }
                dirty |= !m[p][j].is_zero();
            }
            if dirty {
                continue;
            }

            // Row and column are clear; the pivot must also divide the rest.
            let pivot = m[p][p].clone();
            let offender = (p + 1..t).find(|&i| (p + 1..u).any(|j| !m[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let row = m[i].clone();
                    for (x, y) in m[p][p..].iter_mut().zip(&row[p..]) {
                        *x = x.clone() + y.clone();
                    }
                }
                None => break,
            }
        }
        diag.push(m[p][p].abs());
    }
    diag
}

/// gcd of the `l×l` minors of `a`, as the product of the first `l`
/// invariant factors. Zero iff every `l`-minor vanishes.
pub fn gcd_minors<I: IntScalar>(a: &IntMatrix<I>, l: usize) -> Result<I> {
    let k = a.rows().min(a.cols());
    if l == 0 || l > k {
        return Err(Error::Argument(format!("minor order {l} outside 1..={k}")));
    }
    Ok(smith_normal_form(a)
        .into_iter()
        .take(l)
        .fold(I::one(), |acc, d| acc * d))
}

//! Exact kernels of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Basis of `{x : A x = 0}` for a dense integer matrix with `ncols` columns.
///
/// Rows are reduced fraction-free (cross-multiplication followed by division
/// by the row content), so entries stay integral throughout. One basis vector
/// is returned per free column, with that column set to 1.
pub(crate) fn nullspace(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let (pv, f) = (a[r][col].clone(), a[i][col].clone());
            for j in 0..ncols {
                let v = &a[i][j] * &pv - &f * &a[r][j];
                a[i][j] = v;
            }
            normalize_row(&mut a[i]);
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -Rational::new(a[i][f].clone(), a[i][p].clone());
            }
            x
        })
        .collect()
}

fn normalize_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Scales a rational vector to coprime integers whose first nonzero entry is
/// positive.
pub(crate) fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let lead_negative = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    ints.into_iter()
        .map(|x| {
            let y = x / &g;
            if lead_negative {
                -y
            } else {
                y
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[3, 6, 10, 13]]);
        let ker = nullspace(&a, 4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &a {
                let s: Rational = row
                    .iter()
                    .zip(v)
                    .map(|(x, y)| Rational::from_integer(x.clone()) * y)
                    .sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        assert!(nullspace(&m(&[&[2, 1], &[1, 3]]), 2).is_empty());
        assert_eq!(nullspace(&[], 3).len(), 3);
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            Rational::new((-1).into(), 2.into()),
            Rational::new(5.into(), 4.into()),
        ];
        assert_eq!(
            primitive_integer_vector(&v),
            vec![BigInt::from(2), BigInt::from(-5)]
        );
    }
}

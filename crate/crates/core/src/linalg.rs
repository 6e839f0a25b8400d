//! Exact rational linear algebra: rank and inverse.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Matrix = Vec<Vec<BigRational>>;

pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect()
}

fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn reduce_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x /= &g);
    }
}

/// Rank by fraction-free elimination over the integers after clearing denominators.
pub fn rank(m: &[Vec<BigRational>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = m.iter().map(|r| integer_row(r)).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let a = prow[col].clone();
            let b = row[col].clone();
            for (x, p) in row.iter_mut().zip(prow.iter()) {
                *x = &a * &*x - &b * p;
            }
            reduce_content(row);
        }
        rank += 1;
    }
    rank
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse(m: &[Vec<BigRational>]) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        a[col].iter_mut().for_each(|x| *x /= &p);
        inv[col].iter_mut().for_each(|x| *x /= &p);
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                let (aj, ij) = (a[col][j].clone(), inv[col][j].clone());
                a[i][j] -= &f * aj;
                inv[i][j] -= &f * ij;
            }
        }
    }
    Some(inv)
}

pub fn mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])).collect())
        .collect()
}

pub fn transpose(a: &[Vec<BigRational>]) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::FieldSpec;

/// Rank of an integer matrix (given as rows) over `field`.
pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rationals => {
            let mut work = rows.to_vec();
            rank_fraction_free(&mut work).unwrap_or_else(|| rank_bigint(rows))
        }
        FieldSpec::Prime(p) => rank_mod_p(rows, p),
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Integer elimination with row-content normalization. Returns `None` on
/// overflow so the caller can redo the work with big integers.
fn rank_fraction_free(rows: &mut [Vec<i64>]) -> Option<usize> {
    let (nrows, ncols) = (rows.len(), rows[0].len());
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // Smallest nonzero pivot keeps entries small.
        let Some(p) = (r..nrows)
            .filter(|&i| rows[i][c] != 0)
            .min_by_key(|&i| rows[i][c].unsigned_abs())
        else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c];
        for row in tail.iter_mut() {
            let x = row[c];
            if x == 0 {
                continue;
            }
            let g = gcd(pivot, x);
            let (a, b) = (pivot / g, x / g);
            let mut content = 0;
            for (e, &pe) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                *e = e.checked_mul(a)?.checked_sub(pe.checked_mul(b)?)?;
                content = gcd(content, *e);
            }
            if content > 1 {
                row.iter_mut().skip(c).for_each(|e| *e /= content);
            }
        }
        r += 1;
    }
    Some(r)
}

/// Bareiss elimination over big integers.
fn rank_bigint(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let (nrows, ncols) = (m.len(), m[0].len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].abs();
        if prev.is_zero() {
            prev = BigInt::from(1);
        }
        r += 1;
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(|&e| e.rem_euclid(p as i64) as u64).collect())
        .collect();
    let (nrows, ncols) = (m.len(), m[0].len());
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = pow_mod(m[r][c], p - 2, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul(row[c], inv);
            for (e, &pe) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                *e = (*e + p - mul(f, pe)) % p;
            }
        }
        r += 1;
    }
    r
}

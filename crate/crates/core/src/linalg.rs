//! Exact linear algebra over `BigRational` and integer lattice routines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;
pub type Matrix = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qz(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

pub fn to_q_matrix(m: &[Vec<i64>]) -> Matrix {
    m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn to_q_vec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_i64(a: &[Q], b: &[i64]) -> Q {
    a.iter()
        .zip(b)
        .fold(Q::zero(), |acc, (x, &y)| acc + x * BigInt::from(y))
}

pub fn transpose(m: &[Vec<Q>], ncols: usize) -> Matrix {
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|r| dot(r, v)).collect()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(m: &[Vec<Q>]) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(m: &[Vec<Q>], ncols: usize) -> Matrix {
    let (r, pivots) = rref(m);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] = &a[i][j] - t;
            }
        }
    }
    d
}

pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    det(&to_q_matrix(m)).to_integer()
}

/// Some solution of `m x = b`, or `None` if inconsistent.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Scale a nonzero rational vector to the primitive integer vector in its direction.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * qz(&l)).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_i64(v: &[Q]) -> Vec<i64> {
    primitive(v)
        .iter()
        .map(|x| x.to_i64().expect("coordinate overflow"))
        .collect()
}

/// Z-basis of the integer kernel `{l : a l = 0}`, canonicalized by [`hnf_reverse`].
pub fn integer_kernel(a: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| {
            (0..ncols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    // column operations: m <- m*E, u <- u*E
    let col_op = |m: &mut Vec<Vec<BigInt>>,
                  u: &mut Vec<Vec<BigInt>>,
                  j: usize,
                  k: usize,
                  a: &BigInt,
                  b: &BigInt,
                  c: &BigInt,
                  d: &BigInt| {
        // (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for mat in [m, u] {
            for row in mat.iter_mut() {
                let x = row[j].clone();
                let y = row[k].clone();
                row[j] = a * &x + b * &y;
                row[k] = c * &x + d * &y;
            }
        }
    };
    let mut c = 0;
    for i in 0..m.len() {
        if c == ncols {
            break;
        }
        loop {
            let nz: Vec<usize> = (c..ncols).filter(|&k| !m[i][k].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let k0 = nz[0];
            if k0 != c {
                for mat in [&mut m, &mut u] {
                    for row in mat.iter_mut() {
                        row.swap(c, k0);
                    }
                }
            }
            let mut done = true;
            for k in c + 1..ncols {
                if m[i][k].is_zero() {
                    continue;
                }
                let x = m[i][c].clone();
                let y = m[i][k].clone();
                let eg = x.extended_gcd(&y);
                let (g, s, t) = (eg.gcd, eg.x, eg.y);
                // new_c = s*col_c + t*col_k (entry g); new_k = (-y/g)*col_c + (x/g)*col_k (entry 0)
                let a1 = s;
                let b1 = t;
                let c1 = -(&y / &g);
                let d1 = &x / &g;
                col_op(&mut m, &mut u, c, k, &a1, &b1, &c1, &d1);
                done = false;
            }
            if done || (c + 1..ncols).all(|k| m[i][k].is_zero()) {
                break;
            }
        }
        if !m[i][c].is_zero() {
            c += 1;
        }
    }
    let basis: Vec<Vec<BigInt>> = (c..ncols)
        .map(|k| u.iter().map(|row| row[k].clone()).collect())
        .collect();
    hnf_reverse(basis)
}

/// Hermite form read from the right: in every row the last nonzero entry is positive,
/// these pivot columns increase down the rows, and the entries of later rows in a
/// pivot column are reduced modulo the pivot.
pub fn hnf_reverse(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|mut r| {
            r.reverse();
            r
        })
        .collect();
    let m = a.len();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..m).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz
                .iter()
                .min_by_key(|&&i| a[i][c].abs())
                .expect("nonempty");
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[r][c]);
                let pr = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x = &*x - &f * y;
                }
                if !a[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < m && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -&*x;
                }
            }
            let pr = a[r].clone();
            for i in 0..r {
                let f = a[i][c].div_floor(&pr[c]);
                if !f.is_zero() {
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x = &*x - &f * y;
                    }
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    let mut out: Vec<Vec<BigInt>> = a
        .into_iter()
        .map(|mut row| {
            row.reverse();
            row
        })
        .collect();
    out.reverse();
    out
}

/// Nonzero invariant factors of an integer matrix (Smith normal form diagonal).
pub fn smith_invariants(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pi, pj)) = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut changed = false;
        for i in t + 1..nrows {
            let f = a[i][t].div_floor(&a[t][t]);
            if !f.is_zero() {
                let pr = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x = &*x - &f * y;
                }
            }
            if !a[i][t].is_zero() {
                changed = true;
            }
        }
        for j in t + 1..ncols {
            let f = a[t][j].div_floor(&a[t][t]);
            if !f.is_zero() {
                for row in a.iter_mut() {
                    let y = row[t].clone();
                    row[j] = &row[j] - &f * y;
                }
            }
            if !a[t][j].is_zero() {
                changed = true;
            }
        }
        if changed {
            continue;
        }
        // divisibility condition
        let p = a[t][t].clone();
        let bad = (t + 1..nrows)
            .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
            .find(|&(i, j)| !(&a[i][j] % &p).is_zero());
        if let Some((i, _)) = bad {
            let ri = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(&ri) {
                *x = &*x + y;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

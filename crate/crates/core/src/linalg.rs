//! Small exact linear algebra over the rationals.
//!
//! Everything here works on dense `Vec<Vec<_>>` matrices of desk-scale size;
//! no attempt is made at asymptotic efficiency.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = Ratio<i128>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Row space in reduced echelon form, grown one vector at a time.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    width: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the current basis; the result is zero iff `v` is
    /// in the span.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p];
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= f * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= inv;
        }
        // keep the basis fully reduced so `reduce` is a single pass
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p];
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= f * y;
                    }
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut space = RowSpace::new(first.len());
    for r in rows {
        space.insert(r);
    }
    space.dim()
}

/// Dimension of `{x : A x = 0}` for an `m × ncols` matrix given by rows.
pub fn kernel_dim(rows: &[Vec<Q>], ncols: usize) -> usize {
    ncols - rank(rows)
}

/// Exact determinant of a square rational matrix.
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col] / p;
            for c in col..n {
                let t = a[col][c];
                a[r][c] -= f * t;
            }
        }
    }
    det
}

/// Inverse of a square rational matrix, if it exists.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let t = a[col][c];
                    a[r][c] -= f * t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `Σ c_j columns[j] = target`; `None` if inconsistent or if the
/// columns are dependent.
pub fn solve_columns(columns: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = columns.len();
    let m = target.len();
    // augmented rows: [col_0[i], ..., col_{k-1}[i], target[i]]
    let mut rows: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut r: Vec<Q> = columns.iter().map(|c| c[i]).collect();
            r.push(target[i]);
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = vec![usize::MAX; k];
    for c in 0..k {
        let p = (pivot_row..m).find(|&r| !rows[r][c].is_zero())?;
        rows.swap(p, pivot_row);
        let inv = rows[pivot_row][c].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= inv;
        }
        for r in 0..m {
            if r != pivot_row && !rows[r][c].is_zero() {
                let f = rows[r][c];
                for cc in 0..=k {
                    let t = rows[pivot_row][cc];
                    rows[r][cc] -= f * t;
                }
            }
        }
        pivots[c] = pivot_row;
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&p| rows[p][k]).collect())
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let Some(first) = m.first() else {
        return Vec::new();
    };
    (0..first.len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Integer vector if every entry is integral.
pub fn to_integers(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| x.is_integer().then(|| *x.numer() as i64))
        .collect()
}

/// Smallest positive integer multiple of `v` with coprime entries, keeping
/// the direction.
pub fn primitive_integer(v: &[Q]) -> Vec<i64> {
    use num_integer::Integer;
    let lcm = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i128> = v.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g == 0 {
        return ints.iter().map(|&x| x as i64).collect();
    }
    ints.iter().map(|&x| (x / g.abs()) as i64).collect()
}

pub fn is_unit(x: &Q) -> bool {
    x.abs().is_one()
}

//! Smith normal form of integer matrices, with transform tracking.

use num_traits::{Signed, Zero};

use crate::{IMat, Int};

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IMat,
    pub d: IMat,
    pub v: IMat,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IMat) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IMat::identity(rows);
    let mut v = IMat::identity(cols);
    let k = rows.min(cols);

    for s in 0..k {
        'pivot: loop {
            let Some((pi, pj)) = min_abs_entry(&d, s) else {
                break 'pivot;
            };
            if pi != s {
                d.swap_rows(s, pi);
                u.swap_rows(s, pi);
            }
            if pj != s {
                d.swap_cols(s, pj);
                v.swap_cols(s, pj);
            }
            let mut dirty = false;
            for i in s + 1..rows {
                if !d.at(i, s).is_zero() {
                    let q = d.at(i, s).clone() / d.at(s, s).clone();
                    row_sub(&mut d, &mut u, i, s, &q);
                    dirty = dirty || !d.at(i, s).is_zero();
                }
            }
            for j in s + 1..cols {
                if !d.at(s, j).is_zero() {
                    let q = d.at(s, j).clone() / d.at(s, s).clone();
                    col_sub(&mut d, &mut v, j, s, &q);
                    dirty = dirty || !d.at(s, j).is_zero();
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let pivot = d.at(s, s).clone();
            let offender = (s + 1..rows)
                .flat_map(|i| (s + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(d.at(i, j).clone() % pivot.clone()).is_zero());
            match offender {
                Some((i, _)) => {
                    row_add(&mut d, &mut u, s, i);
                }
                None => break 'pivot,
            }
        }
        if d.at(s, s).is_negative() {
            row_negate(&mut d, &mut u, s);
        }
    }
    SmithDecomposition { u, d, v }
}

/// Basis (rows, saturated) of the left kernel `{ x in Z^rows : x M = 0 }`.
pub fn integer_left_kernel(m: &IMat) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    let mut basis = Vec::new();
    for i in 0..m.rows() {
        let zero_row = (0..m.cols()).all(|j| snf.d.at(i, j).is_zero());
        if zero_row {
            basis.push(snf.u.row(i).to_vec());
        }
    }
    basis
}

fn min_abs_entry(d: &IMat, s: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in s..d.rows() {
        for j in s..d.cols() {
            let e = d.at(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.as_ref().map_or(true, |(b, _, _)| a < *b) {
                best = Some((a, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn row_sub(d: &mut IMat, u: &mut IMat, i: usize, s: usize, q: &Int) {
    for j in 0..d.cols() {
        let upd = d.at(i, j).clone() - q.clone() * d.at(s, j).clone();
        *d.at_mut(i, j) = upd;
    }
    for j in 0..u.cols() {
        let upd = u.at(i, j).clone() - q.clone() * u.at(s, j).clone();
        *u.at_mut(i, j) = upd;
    }
}

fn row_add(d: &mut IMat, u: &mut IMat, s: usize, i: usize) {
    for j in 0..d.cols() {
        let upd = d.at(s, j).clone() + d.at(i, j).clone();
        *d.at_mut(s, j) = upd;
    }
    for j in 0..u.cols() {
        let upd = u.at(s, j).clone() + u.at(i, j).clone();
        *u.at_mut(s, j) = upd;
    }
}

fn row_negate(d: &mut IMat, u: &mut IMat, s: usize) {
    for j in 0..d.cols() {
        let upd = -d.at(s, j).clone();
        *d.at_mut(s, j) = upd;
    }
    for j in 0..u.cols() {
        let upd = -u.at(s, j).clone();
        *u.at_mut(s, j) = upd;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn im(rows: &[&[i64]]) -> IMat {
        IMat::from_i64_rows(rows)
    }

    fn check(m: &IMat) -> SmithDecomposition {
        let snf = smith_normal_form(m);
        // U M V = D
        assert_eq!(snf.u.mul_mat(m).mul_mat(&snf.v), snf.d);
        // U, V unimodular.
        assert!(snf.u.det_int().abs().is_one());
        assert!(snf.v.det_int().abs().is_one());
        // Divisibility chain.
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!((w[1].clone() % w[0].clone()).is_zero(), "chain broken: {:?}", diag);
            } else {
                assert!(w[1].is_zero());
            }
        }
        snf
    }

    #[test]
    fn snf_examples() {
        let snf = check(&im(&[&[2, 0], &[0, 3]]));
        assert_eq!(snf.diagonal(), vec![Int::from(1), Int::from(6)]);

        let snf = check(&im(&[&[1, 0], &[0, 0]]));
        assert_eq!(snf.diagonal(), vec![Int::from(1), Int::from(0)]);

        // Oracle value from direct row/column reduction:
        // [[2,4],[0,2]] -> diag(2, 2).
        let snf = check(&im(&[&[2, 4], &[0, 2]]));
        assert_eq!(snf.diagonal(), vec![Int::from(2), Int::from(2)]);
    }

    #[test]
    fn snf_det_product() {
        let m = im(&[&[3, 1, -2], &[0, 4, 5], &[7, -1, 2]]);
        let snf = check(&m);
        let prod: Int = snf.diagonal().iter().product();
        assert_eq!(prod.abs(), m.det_int().abs());
    }

    #[test]
    fn snf_rectangular_and_kernel() {
        let m = im(&[&[2, 4, 6], &[1, 2, 3]]);
        check(&m);
        let k = integer_left_kernel(&m);
        assert_eq!(k.len(), 1);
        // x M = 0; the kernel row must be primitive: (1, -2) up to sign.
        let x = &k[0];
        for j in 0..3 {
            let s: Int = (0..2).map(|i| x[i].clone() * m.at(i, j).clone()).sum();
            assert!(s.is_zero());
        }
        let g = num_integer::Integer::gcd(&x[0], &x[1]);
        assert!(g.abs().is_one());
    }

    #[test]
    fn snf_random_consistency() {
        let mut state: u64 = 12345;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 13) as i64 - 6
        };
        for _ in 0..30 {
            let r = 1 + (next().unsigned_abs() as usize % 4);
            let c = 1 + (next().unsigned_abs() as usize % 4);
            let m = IMat::from_fn(r, c, |_, _| Int::from(next()));
            check(&m);
        }
    }
}

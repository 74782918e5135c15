//! Orders of finitely presented modules over K[t, t^{-1}].
//!
//! The order is the gcd of all maximal minors of the presentation matrix.
//! Since K[t, t^{-1}] is a principal ideal domain, that gcd equals the
//! product of the diagonal entries after Euclidean diagonalization, which is
//! what we compute; no combinatorial minor enumeration is needed.

use super::{doteq_normalize, DoteqClass, LaurentPoly};
use crate::matrix::Mat;
use crate::scalar::Field;

type PMat<K> = Mat<LaurentPoly<K>>;

/// Gcd of all k x k minors (k = min(rows, cols)) of a presentation matrix,
/// ≐-normalized. Returns zero when the matrix has rank < k.
pub fn order_of_module<K: Field>(m: &PMat<K>) -> DoteqClass<K> {
    let k = m.rows().min(m.cols());
    if k == 0 {
        return DoteqClass::one();
    }
    let mut w = m.clone();
    let mut product = LaurentPoly::<K>::one();
    for s in 0..k {
        if !clear_block(&mut w, s) {
            return doteq_normalize(&LaurentPoly::zero());
        }
        product = product.mul(w.at(s, s));
    }
    doteq_normalize(&product)
}

/// Bring the (s, s) block to diagonal form: pivot at (s, s), zeros in the
/// rest of row s and column s. Returns false when the submatrix is zero.
fn clear_block<K: Field>(w: &mut PMat<K>, s: usize) -> bool {
    loop {
        let Some((pi, pj)) = min_span_entry(w, s) else {
            return false;
        };
        w.swap_rows(s, pi);
        w.swap_cols(s, pj);
        let mut dirty = false;
        for i in s + 1..w.rows() {
            if !w.at(i, s).is_zero() {
                reduce_row(w, i, s);
                dirty = dirty || !w.at(i, s).is_zero();
            }
        }
        for j in s + 1..w.cols() {
            if !w.at(s, j).is_zero() {
                reduce_col(w, j, s);
                dirty = dirty || !w.at(s, j).is_zero();
            }
        }
        if !dirty {
            return true;
        }
    }
}

fn min_span_entry<K: Field>(w: &PMat<K>, s: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for i in s..w.rows() {
        for j in s..w.cols() {
            if let Some(sp) = w.at(i, j).span() {
                if best.map_or(true, |(b, _, _)| sp < b) {
                    best = Some((sp, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Row operation: subtract a unit multiple of row s from row i so the (i, s)
/// entry becomes the division remainder (smaller span than the pivot).
fn reduce_row<K: Field>(w: &mut PMat<K>, i: usize, s: usize) {
    let e = w.at(i, s).clone();
    let p = w.at(s, s).clone();
    let alpha = e.min_exp().unwrap();
    let beta = p.min_exp().unwrap();
    let (q, _) = e.shift(-alpha).div_rem_shifted(&p.shift(-beta));
    let factor = q.shift(alpha - beta);
    for j in s..w.cols() {
        let upd = w.at(i, j).sub(&factor.mul(w.at(s, j)));
        *w.at_mut(i, j) = upd;
    }
}

fn reduce_col<K: Field>(w: &mut PMat<K>, j: usize, s: usize) {
    let e = w.at(s, j).clone();
    let p = w.at(s, s).clone();
    let alpha = e.min_exp().unwrap();
    let beta = p.min_exp().unwrap();
    let (q, _) = e.shift(-alpha).div_rem_shifted(&p.shift(-beta));
    let factor = q.shift(alpha - beta);
    for i in s..w.rows() {
        let upd = w.at(i, j).sub(&factor.mul(w.at(i, s)));
        *w.at_mut(i, j) = upd;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qpoly;
    use crate::Rat;

    type QP = LaurentPoly<Rat>;

    fn pm(rows: Vec<Vec<QP>>) -> PMat<Rat> {
        Mat::from_rows(rows)
    }

    /// Independent oracle: gcd of maximal minors by direct enumeration with
    /// cofactor determinants.
    fn order_by_minors(m: &PMat<Rat>) -> DoteqClass<Rat> {
        let k = m.rows().min(m.cols());
        let mut g = QP::zero();
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let sub = Mat::from_fn(k, k, |i, j| m.at(rows[i], cols[j]).clone());
                g = g.gcd(&cofactor_det(&sub));
            }
        }
        doteq_normalize(&g)
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    fn cofactor_det(m: &PMat<Rat>) -> QP {
        let n = m.rows();
        if n == 0 {
            return QP::one();
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut det = QP::zero();
        for j in 0..n {
            let minor = Mat::from_fn(n - 1, n - 1, |i, jj| {
                m.at(i + 1, if jj < j { jj } else { jj + 1 }).clone()
            });
            let term = m.at(0, j).mul(&cofactor_det(&minor));
            det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
        }
        det
    }

    #[test]
    fn order_examples() {
        let one_minus_t = qpoly(0, &[1, -1]);
        let one_plus_t = qpoly(0, &[1, 1]);
        let m = pm(vec![vec![one_minus_t.clone()]]);
        assert_eq!(order_of_module(&m), doteq_normalize(&one_minus_t));

        let d = pm(vec![
            vec![one_minus_t.clone(), QP::zero()],
            vec![QP::zero(), one_plus_t.clone()],
        ]);
        assert_eq!(order_of_module(&d), doteq_normalize(&qpoly(0, &[1, 0, -1])));

        let row = pm(vec![vec![QP::zero(), QP::zero(), one_plus_t.clone()]]);
        assert_eq!(order_of_module(&row), doteq_normalize(&one_plus_t));
    }

    #[test]
    fn order_zero_when_rank_deficient() {
        let m = pm(vec![vec![QP::zero(), QP::zero()]]);
        assert!(order_of_module(&m).is_zero());
    }

    #[test]
    fn order_matches_minor_enumeration_on_random_inputs() {
        // Deterministic pseudo-random small matrices with Laurent entries.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let r = 1 + (next() % 3) as usize;
            let c = 1 + (next() % 3) as usize;
            let m = Mat::from_fn(r, c, |_, _| {
                let nterms = (next() % 3) as usize;
                let mut p = QP::zero();
                for _ in 0..nterms {
                    let e = (next() % 5) as i64 - 2;
                    let co = (next() % 7) as i64 - 3;
                    p.add_term(e, crate::scalar::Field::from_i64(co));
                }
                p
            });
            assert_eq!(order_of_module(&m), order_by_minors(&m), "matrix {:?}", m);
        }
    }

    #[test]
    fn order_invariant_under_row_ops() {
        let a = qpoly(0, &[1, -1]);
        let b = qpoly(0, &[2, 1]);
        let m = pm(vec![
            vec![a.clone(), b.clone()],
            vec![QP::zero(), a.mul(&b)],
        ]);
        // Add t * row1 to row0.
        let t = QP::t();
        let m2 = pm(vec![
            vec![a.add(&t.mul(&QP::zero())), b.add(&t.mul(&a.mul(&b)))],
            vec![QP::zero(), a.mul(&b)],
        ]);
        assert_eq!(order_of_module(&m), order_of_module(&m2));
    }
}

//! Exact characteristic polynomials and the det(1 - tM) reversal identity.

use num_traits::{One, Zero};

use super::{doteq_normalize, LaurentPoly};
use crate::scalar::Field;
use crate::{QMat, Rat};

/// Monic characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
/// recursion, exact over the rationals.
pub fn char_poly(m: &QMat) -> LaurentPoly<Rat> {
    assert!(m.is_square(), "characteristic polynomial needs a square matrix");
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut ak = m.clone();
    for k in 1..=n {
        let tr: Rat = (0..n).map(|i| ak.at(i, i).clone()).sum();
        let c = -tr / Rat::from(crate::Int::from(k as i64));
        coeffs[n - k] = c.clone();
        if k < n {
            let shifted = ak.add_mat(&QMat::identity(n).map(|x| x.clone() * c.clone()));
            ak = m.mul_mat(&shifted);
        }
    }
    LaurentPoly::from_coeff_slice(0, &coeffs)
}

/// det(I - t M) as a polynomial in t: the coefficient reversal of char_poly.
pub fn det_id_minus_t_mat(m: &QMat) -> LaurentPoly<Rat> {
    let n = m.rows() as i64;
    let chi = char_poly(m);
    // t^n * chi(1/t)
    chi.reversed().shift(n)
}

/// Outcome of the reversal identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReversalCheck {
    pub holds: bool,
    /// True when det M = 0 so the precondition failed and `holds` is vacuous.
    pub vacuous: bool,
}

/// Verify det(I - tM) ≐ reversal of char_poly(M) when det M != 0.
pub fn reversal_identity_check(m: &QMat) -> ReversalCheck {
    if m.det().is_zero() {
        return ReversalCheck {
            holds: true,
            vacuous: true,
        };
    }
    let chi = char_poly(m);
    let n = m.rows() as i64;
    let reversal = LaurentPoly::from_terms(chi.terms().map(|(&e, c)| (n - e, c.clone())));
    let lhs = det_id_minus_t_mat(m);
    ReversalCheck {
        holds: doteq_normalize(&lhs) == doteq_normalize(&reversal),
        vacuous: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qpoly;
    use crate::IMat;

    fn qm(rows: &[&[i64]]) -> QMat {
        IMat::from_i64_rows(rows).to_rat()
    }

    #[test]
    fn char_poly_examples() {
        // Companion of the golden ratio.
        assert_eq!(char_poly(&qm(&[&[0, 1], &[1, 1]])), qpoly(0, &[-1, -1, 1]));
        // Identity gives (t-1)^2.
        assert_eq!(char_poly(&qm(&[&[1, 0], &[0, 1]])), qpoly(0, &[1, -2, 1]));
        assert_eq!(char_poly(&qm(&[&[0, 1], &[1, 2]])), qpoly(0, &[-1, -2, 1]));
    }

    #[test]
    fn reversal_identity() {
        let r = reversal_identity_check(&qm(&[&[0, 1], &[1, 1]]));
        assert!(r.holds && !r.vacuous);
        let r = reversal_identity_check(&qm(&[&[2]]));
        assert!(r.holds && !r.vacuous);
        let r = reversal_identity_check(&qm(&[&[1, 0], &[0, 0]]));
        assert!(r.holds && r.vacuous);
    }

    #[test]
    fn det_id_minus_t_fibonacci() {
        assert_eq!(det_id_minus_t_mat(&qm(&[&[0, 1], &[1, 1]])), qpoly(0, &[1, -1, -1]));
    }
}

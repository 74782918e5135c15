//! Exact Laurent polynomial algebra over a coefficient field.
//!
//! Polynomials are sparse maps exponent -> nonzero coefficient. Equality "up
//! to units" (nonzero constants times powers of `t`) is handled by
//! [`DoteqClass`], whose canonical form has lowest exponent 0 and constant
//! term 1.

mod charpoly;
mod cyclotomic;
mod intpoly;
mod order;
mod pv;
mod snf;
mod superirr;

pub use charpoly::{char_poly, det_id_minus_t_mat, reversal_identity_check};
pub use cyclotomic::{cyclotomic_poly, cyclotomic_split, CyclotomicSplit};
pub use intpoly::{factor_int_poly, is_irreducible_over_q, IntPoly};
pub use order::order_of_module;
pub use pv::{max_root_modulus, pv_check};
pub use snf::{integer_left_kernel, smith_normal_form, SmithDecomposition};
pub use superirr::{super_irreducible_check, SuperIrreducibility};

use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Field;
use crate::{Int, Rat};

/// Sparse Laurent polynomial with nonzero coefficients only.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LaurentPoly<K: Field> {
    coeffs: BTreeMap<i64, K>,
}

impl<K: Field> LaurentPoly<K> {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, K::one())
    }

    pub fn monomial(exp: i64, coeff: K) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, K::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, K)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Coefficients in ascending degree starting at exponent `base`.
    pub fn from_coeff_slice(base: i64, coeffs: &[K]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (base + i as i64, c.clone())),
        )
    }

    pub fn from_i64_coeffs(base: i64, coeffs: &[i64]) -> Self {
        Self::from_coeff_slice(base, &coeffs.iter().map(|&c| K::from_i64(c)).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            None => {
                self.coeffs.insert(exp, coeff);
            }
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.coeffs.insert(exp, sum);
                }
            }
        }
    }

    pub fn coeff(&self, exp: i64) -> K {
        self.coeffs.get(&exp).cloned().unwrap_or_else(K::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &K)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Width of the exponent support; the degree once shifted to exponent 0.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in self.terms() {
            for (&e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, c.clone() * k.clone()))
                .collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &K) -> K {
        // Horner on the shifted polynomial; x must be nonzero if min_exp < 0.
        let Some(min) = self.min_exp() else {
            return K::zero();
        };
        let max = self.max_exp().unwrap();
        let mut acc = K::zero();
        for e in (min..=max).rev() {
            acc = acc * x.clone() + self.coeff(e);
        }
        if min < 0 {
            let mut inv_pow = K::one();
            let xi = x.inv();
            for _ in 0..(-min) {
                inv_pow = inv_pow * xi.clone();
            }
            acc = acc * inv_pow;
        }
        acc
    }

    /// Substitute `t -> t^{-1}` (exponent reversal), without normalization.
    pub fn reversed(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Polynomial division of the shifted-to-zero representatives.
    /// Returns (quotient, remainder) with `self = q * other + r` up to the
    /// shift normalization of both inputs.
    pub fn div_rem_shifted(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let a = self.shift(-self.min_exp().unwrap_or(0));
        let b = other.shift(-other.min_exp().unwrap_or(0));
        let db = b.max_exp().unwrap();
        let lead_inv = b.coeff(db).inv();
        let mut rem = a;
        let mut quot = Self::zero();
        while !rem.is_zero() && rem.max_exp().unwrap() >= db {
            let dr = rem.max_exp().unwrap();
            let c = rem.coeff(dr) * lead_inv.clone();
            let mono = Self::monomial(dr - db, c);
            quot = quot.add(&mono);
            rem = rem.sub(&mono.mul(&b));
        }
        (quot, rem)
    }

    /// True when `other` divides `self` in K[t, t^{-1}].
    pub fn divides_by(&self, other: &Self) -> bool {
        if self.is_zero() {
            return true;
        }
        if other.is_zero() {
            return false;
        }
        self.div_rem_shifted(other).1.is_zero()
    }

    /// Exact quotient in the unit-insensitive sense: panics if not divisible.
    pub fn exact_div(&self, other: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (q, r) = self.div_rem_shifted(other);
        assert!(r.is_zero(), "inexact polynomial division");
        // Restore the exponent offset lost by shifting both operands.
        let off = self.min_exp().unwrap() - other.min_exp().unwrap();
        q.shift(off)
    }

    /// Monic gcd of the shifted representatives; zero iff both inputs zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.shift(-self.min_exp().unwrap_or(0));
        let mut b = other.shift(-other.min_exp().unwrap_or(0));
        while !b.is_zero() {
            let (_, r) = a.div_rem_shifted(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.coeff(a.max_exp().unwrap());
        a.scale(&lead.inv()).shift(-a.min_exp().unwrap())
    }

    /// Derivative with respect to `t`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e - 1, c.clone() * K::from_i64(e))),
        )
    }
}

impl<K: Field> fmt::Display for LaurentPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*t", c)?,
                _ => write!(f, "{}*t^{}", c, e)?,
            }
        }
        Ok(())
    }
}

/// Equality class of a Laurent polynomial under multiplication by units
/// `c * t^k`. Canonical form: zero, or lowest exponent 0 and constant
/// coefficient 1.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct DoteqClass<K: Field> {
    canonical: LaurentPoly<K>,
}

impl<K: Field> DoteqClass<K> {
    pub fn poly(&self) -> &LaurentPoly<K> {
        &self.canonical
    }

    pub fn into_poly(self) -> LaurentPoly<K> {
        self.canonical
    }

    pub fn is_zero(&self) -> bool {
        self.canonical.is_zero()
    }

    pub fn one() -> Self {
        doteq_normalize(&LaurentPoly::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        doteq_normalize(&self.canonical.mul(&other.canonical))
    }

    /// Degree of the canonical representative.
    pub fn degree(&self) -> Option<i64> {
        self.canonical.span()
    }

    pub fn star(&self) -> Self {
        star(&self.canonical)
    }
}

impl<K: Field> fmt::Display for DoteqClass<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Normalize by a unit so the lowest exponent is 0 and the constant term 1.
pub fn doteq_normalize<K: Field>(p: &LaurentPoly<K>) -> DoteqClass<K> {
    if p.is_zero() {
        return DoteqClass {
            canonical: LaurentPoly::zero(),
        };
    }
    let min = p.min_exp().unwrap();
    let shifted = p.shift(-min);
    let c0 = shifted.coeff(0);
    DoteqClass {
        canonical: shifted.scale(&c0.inv()),
    }
}

/// `t -> t^{-1}` composed with the ≐-normalization.
pub fn star<K: Field>(p: &LaurentPoly<K>) -> DoteqClass<K> {
    doteq_normalize(&p.reversed())
}

/// Coefficient sequence equals its own reversal (checked on the
/// shifted-to-exponent-0 representative, no rescaling).
pub fn is_palindromic<K: Field>(p: &LaurentPoly<K>) -> bool {
    if p.is_zero() {
        return true;
    }
    let q = p.shift(-p.min_exp().unwrap());
    let r = q.max_exp().unwrap();
    (0..=r).all(|i| q.coeff(i) == q.coeff(r - i))
}

/// Serialized form: {"field":"Q"|"Fp","p":…,"coeffs":{"exp":"num/den"}}.
impl<K: Field> Serialize for LaurentPoly<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (tag, p) = K::field_tag();
        let mut map = serializer.serialize_map(Some(if p.is_some() { 3 } else { 2 }))?;
        map.serialize_entry("field", tag)?;
        if let Some(p) = p {
            map.serialize_entry("p", &p)?;
        }
        let coeffs: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), coeff_string::<K>(c)))
            .collect();
        map.serialize_entry("coeffs", &coeffs)?;
        map.end()
    }
}

impl<K: Field> Serialize for DoteqClass<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical.serialize(serializer)
    }
}

fn coeff_string<K: Field>(c: &K) -> String {
    // Rationals print as num/den; prime-field elements as bare residues.
    let s = format!("{}", c);
    if K::field_tag().0 == "Q" && !s.contains('/') {
        format!("{}/1", s)
    } else {
        s
    }
}

/// Convenience: rational Laurent polynomial from integer coefficients.
pub fn qpoly(base: i64, coeffs: &[i64]) -> LaurentPoly<Rat> {
    LaurentPoly::from_i64_coeffs(base, coeffs)
}

pub(crate) fn rat_from_int(i: &Int) -> Rat {
    Rat::from(i.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doteq_examples() {
        // t^2 + t - 1 normalizes to 1 - t - t^2.
        let p = qpoly(0, &[-1, 1, 1]);
        let n = doteq_normalize(&p);
        assert_eq!(n.poly(), &qpoly(0, &[1, -1, -1]));
        // -3 t^5 is a unit.
        let m = LaurentPoly::monomial(5, Rat::from(Int::from(-3)));
        assert_eq!(doteq_normalize(&m), DoteqClass::one());
        // Zero stays zero.
        assert!(doteq_normalize(&LaurentPoly::<Rat>::zero()).is_zero());
        // Idempotent.
        assert_eq!(doteq_normalize(n.poly()), n);
    }

    #[test]
    fn doteq_unit_invariance() {
        let p = qpoly(-2, &[3, 0, -5, 1]);
        let unit = LaurentPoly::monomial(7, Rat::new(Int::from(-2), Int::from(3)));
        assert_eq!(doteq_normalize(&p), doteq_normalize(&p.mul(&unit)));
    }

    #[test]
    fn star_examples() {
        // 1 - t - t^2 reverses to 1 + t - t^2.
        let p = qpoly(0, &[1, -1, -1]);
        assert_eq!(star(&p).poly(), &qpoly(0, &[1, 1, -1]));
        // 1 + t is a fixed point.
        let q = qpoly(0, &[1, 1]);
        assert_eq!(star(&q).poly(), &q);
        // 1 - t is fixed after normalization.
        let r = qpoly(0, &[1, -1]);
        assert_eq!(star(&r).poly(), &r);
        // Involution on classes.
        assert_eq!(star(star(&p).poly()), doteq_normalize(&p));
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&qpoly(0, &[1, 3, 1])));
        assert!(!is_palindromic(&qpoly(0, &[1, -1, -1])));
        let p = qpoly(-1, &[2, -7, 3, 5]);
        let prod = doteq_normalize(&p.mul(&star(&p).poly().clone()));
        assert!(is_palindromic(prod.poly()));
    }

    #[test]
    fn division_and_gcd() {
        let a = qpoly(0, &[-1, 0, 1]); // t^2 - 1
        let b = qpoly(0, &[1, 1]); // t + 1
        let (q, r) = a.div_rem_shifted(&b);
        assert!(r.is_zero());
        assert_eq!(q, qpoly(0, &[-1, 1]));
        let g = a.gcd(&qpoly(0, &[-1, 1]));
        assert_eq!(doteq_normalize(&g), doteq_normalize(&qpoly(0, &[-1, 1])));
    }

    #[test]
    fn eval_with_negative_exponents() {
        let p = qpoly(-1, &[2, 3]); // 2 t^{-1} + 3
        let two = Rat::from(Int::from(2));
        assert_eq!(p.eval(&two), Rat::new(Int::from(4), Int::from(1)));
    }

    #[test]
    fn serialize_shape() {
        let p = qpoly(0, &[1, -1]);
        let js = serde_json::to_value(&p).unwrap();
        assert_eq!(js["field"], "Q");
        assert_eq!(js["coeffs"]["0"], "1/1");
        assert_eq!(js["coeffs"]["1"], "-1/1");
    }
}

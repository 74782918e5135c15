//! Dense integer/rational polynomial utilities: Sturm sequences, Graeffe
//! iteration, resultants, and exact factorization over the integers
//! (Berlekamp mod p + Hensel lifting + subset recombination).

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LaurentPoly;
use crate::{Error, Int, QMat, Rat, Result};

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    pub coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn lc(&self) -> &Int {
        self.coeffs.last().expect("zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale_int(&self, k: &Int) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Int::from(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + Rat::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient reversal t^n p(1/t).
    pub fn reversal(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Remove the t^k factor; returns (reduced polynomial, k).
    pub fn strip_zero_roots(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (IntPoly::new(self.coeffs[k..].to_vec()), k)
    }

    pub fn content(&self) -> Int {
        self.coeffs.iter().fold(Int::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn to_rat_vec(&self) -> Vec<Rat> {
        self.coeffs.iter().map(|c| Rat::from(c.clone())).collect()
    }

    /// Exact division by a monic divisor; None if not divisible.
    pub fn div_exact_monic(&self, d: &Self) -> Option<Self> {
        assert!(d.is_monic());
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let n = d.deg();
        let mut quot = vec![Int::zero(); rem.len() - n];
        for i in (n..rem.len()).rev() {
            let q = rem[i].clone();
            if q.is_zero() {
                continue;
            }
            quot[i - n] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i - n + j] -= &q * dc;
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Primitive gcd over Z (via the rational Euclidean algorithm), with
    /// positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let g = rat_gcd(&self.to_rat_vec(), &other.to_rat_vec());
        rat_to_primitive_int(&g)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).deg() == 0
    }

    /// One Graeffe step: the monic-compatible polynomial whose roots are the
    /// squares of the roots of `self`.
    pub fn graeffe(&self) -> Self {
        assert!(!self.is_zero());
        let n = self.deg();
        // p(z) = e(z^2) + z o(z^2); (-1)^n p(z) p(-z) = (-1)^n (e^2 - w o^2).
        let even: Vec<Int> = self.coeffs.iter().step_by(2).cloned().collect();
        let odd: Vec<Int> = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        let e = IntPoly::new(even);
        let o = IntPoly::new(odd);
        let e2 = e.mul(&e);
        let o2 = o.mul(&o);
        let mut out = vec![Int::zero(); n + 1];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut v = e2.coeff(i);
            if i > 0 {
                v -= o2.coeff(i - 1);
            }
            *slot = if n % 2 == 1 { -v } else { v };
        }
        Self::new(out)
    }

    pub fn to_laurent(&self) -> LaurentPoly<Rat> {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, Rat::from(c.clone()))),
        )
    }

    /// Clear denominators of a rational Laurent polynomial (shifted to
    /// exponent 0) and take the primitive part.
    pub fn from_laurent_primitive(p: &LaurentPoly<Rat>) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let min = p.min_exp().unwrap();
        let max = p.max_exp().unwrap();
        let mut denom = Int::one();
        for (_, c) in p.terms() {
            denom = denom.lcm(c.denom());
        }
        let coeffs: Vec<Int> = (min..=max)
            .map(|e| {
                let c = p.coeff(e);
                c.numer() * (&denom / c.denom())
            })
            .collect();
        IntPoly::new(coeffs).primitive()
    }
}

// ---- Rational dense polynomial helpers ----

fn rat_trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn rat_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

fn rat_div_rem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = rat_trim(b.to_vec());
    assert!(!b.is_empty());
    let mut rem = rat_trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let q = rem[dr].clone() / lead.clone();
        quot[dr - db] = q.clone();
        for j in 0..=db {
            let upd = rem[dr - db + j].clone() - q.clone() * b[j].clone();
            rem[dr - db + j] = upd;
        }
        rem = rat_trim(rem);
    }
    (rat_trim(quot), rem)
}

fn rat_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = rat_trim(a.to_vec());
    let mut y = rat_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = rat_div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in &mut x {
            *c = c.clone() / l.clone();
        }
    }
    x
}

fn rat_to_primitive_int(p: &[Rat]) -> IntPoly {
    if p.is_empty() {
        return IntPoly::zero();
    }
    let mut denom = Int::one();
    for c in p {
        denom = denom.lcm(c.denom());
    }
    IntPoly::new(p.iter().map(|c| c.numer() * (&denom / c.denom())).collect()).primitive()
}

fn rat_derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return vec![];
    }
    p[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c.clone() * Rat::from(Int::from(i as i64 + 1)))
        .collect()
}

/// Number of distinct real roots of `p` in the half-open interval (a, b].
pub fn sturm_count(p: &IntPoly, a: &Rat, b: &Rat) -> usize {
    assert!(a < b);
    let sf = squarefree_part_rat(&p.to_rat_vec());
    if sf.len() <= 1 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let va = sign_changes(&chain, a);
    let vb = sign_changes(&chain, b);
    va.saturating_sub(vb)
}

fn squarefree_part_rat(p: &[Rat]) -> Vec<Rat> {
    let p = rat_trim(p.to_vec());
    if p.len() <= 1 {
        return p;
    }
    let g = rat_gcd(&p, &rat_derivative(&p));
    if g.len() <= 1 {
        return p;
    }
    rat_div_rem(&p, &g).0
}

fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut chain = vec![p.to_vec(), rat_derivative(p)];
    while chain.last().map_or(false, |q| q.len() > 1) {
        let n = chain.len();
        let (_, r) = rat_div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.iter().map(|c| -c.clone()).collect());
    }
    chain
}

fn sign_changes(chain: &[Vec<Rat>], x: &Rat) -> usize {
    let mut signs = Vec::new();
    for p in chain {
        let v = rat_eval(p, x);
        if !v.is_zero() {
            signs.push(v.is_positive());
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Largest real root of `p`, certified to absolute precision `eps` by Sturm
/// bisection. Returns None when `p` has no real root.
pub fn max_real_root(p: &IntPoly, eps: &Rat) -> Option<Rat> {
    if p.is_zero() || p.deg() == 0 {
        return None;
    }
    // Cauchy bound: all roots have |z| <= 1 + max |c_i| / |lc|.
    let lc = Rat::from(p.lc().clone()).abs();
    let maxc = p
        .coeffs
        .iter()
        .map(|c| Rat::from(c.abs()))
        .fold(Rat::zero(), |a, b| if b > a { b } else { a });
    let bound = Rat::one() + maxc / lc;
    let mut lo = -bound.clone();
    let mut hi = bound.clone();
    if sturm_count(p, &lo, &hi) == 0 {
        return None;
    }
    let two = Rat::from(Int::from(2));
    // Invariant: at least one root in (lo, hi], none above hi.
    while hi.clone() - lo.clone() > *eps {
        let mid = (lo.clone() + hi.clone()) / two.clone();
        if sturm_count(p, &mid, &hi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(hi)
}

// ---- Resultants and interpolation ----

/// Resultant of two rational polynomials via the Sylvester matrix.
pub fn sylvester_resultant(p: &[Rat], q: &[Rat]) -> Rat {
    let p = rat_trim(p.to_vec());
    let q = rat_trim(q.to_vec());
    if p.is_empty() || q.is_empty() {
        return Rat::zero();
    }
    let m = p.len() - 1;
    let n = q.len() - 1;
    if m == 0 {
        return pow_rat(&p[0], n as u32);
    }
    if n == 0 {
        return pow_rat(&q[0], m as u32);
    }
    let size = m + n;
    let mat = QMat::from_fn(size, size, |i, j| {
        if i < n {
            if j >= i && j - i <= m {
                p[m - (j - i)].clone()
            } else {
                Rat::zero()
            }
        } else {
            let i = i - n;
            if j >= i && j - i <= n {
                q[n - (j - i)].clone()
            } else {
                Rat::zero()
            }
        }
    });
    mat.det()
}

fn pow_rat(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc = acc * x.clone();
    }
    acc
}

/// Newton interpolation through distinct rational nodes.
pub fn interpolate(points: &[(Rat, Rat)]) -> Vec<Rat> {
    let n = points.len();
    let mut coeffs: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = points[i].0.clone() - points[i - level].0.clone();
            coeffs[i] = (coeffs[i].clone() - coeffs[i - 1].clone()) / dx;
        }
    }
    let mut poly = vec![Rat::zero(); n];
    let mut basis = vec![Rat::one()];
    for (i, c) in coeffs.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            poly[j] += c.clone() * b.clone();
        }
        if i + 1 < n {
            let xi = points[i].0.clone();
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] += b.clone();
                next[j] -= xi.clone() * b.clone();
            }
            basis = next;
        }
    }
    rat_trim(poly)
}

// ---- Factorization over the integers (monic inputs) ----

const SMALL_PRIMES: &[u64] = &[3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Irreducibility over Q of a monic integer polynomial.
pub fn is_irreducible_over_q(p: &IntPoly) -> Result<bool> {
    if p.is_zero() || p.deg() == 0 {
        return Ok(false);
    }
    if p.deg() == 1 {
        return Ok(true);
    }
    if !p.is_monic() {
        return Err(Error::invalid("irreducibility test expects a monic polynomial"));
    }
    if p.coeff(0).is_zero() || !p.is_squarefree() {
        return Ok(false);
    }
    // Fast path: irreducible modulo some small prime.
    for &q in SMALL_PRIMES.iter().take(5) {
        let fm = ModPoly::from_int(p, q);
        if fm.deg() == p.deg() && fm.is_squarefree() && fm.count_factors() == 1 {
            return Ok(true);
        }
    }
    Ok(factor_int_poly(p)?.len() == 1 && factor_int_poly(p)?[0].1 == 1)
}

/// Factorization of a monic integer polynomial into monic irreducible
/// factors with multiplicities.
pub fn factor_int_poly(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if p.is_zero() || p.deg() == 0 {
        return Ok(vec![]);
    }
    if !p.is_monic() {
        return Err(Error::invalid("factorization expects a monic polynomial"));
    }
    let mut out: Vec<(IntPoly, usize)> = Vec::new();
    let (stripped, k) = p.strip_zero_roots();
    if k > 0 {
        out.push((IntPoly::from_i64(&[0, 1]), k));
    }
    if stripped.deg() == 0 {
        return Ok(out);
    }
    for (sf, mult) in yun_squarefree(&stripped) {
        for f in factor_squarefree(&sf)? {
            merge_factor(&mut out, f, mult);
        }
    }
    Ok(out)
}

fn merge_factor(out: &mut Vec<(IntPoly, usize)>, f: IntPoly, mult: usize) {
    if f.deg() == 0 {
        return;
    }
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// Yun's squarefree decomposition: f = prod a_i^i with the a_i squarefree
/// and pairwise coprime. f monic with nonzero constant term.
fn yun_squarefree(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let fp = f.derivative();
    let g = f.gcd(&fp);
    if g.deg() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut c = f.div_exact_monic(&g).expect("gcd divides f");
    let mut d = fp.div_exact_monic(&g).expect("gcd divides f'").sub(&c.derivative());
    let mut i = 1usize;
    loop {
        if c.deg() == 0 {
            break;
        }
        let a = c.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        c = c.div_exact_monic(&a).expect("a divides c");
        d = d.div_exact_monic(&a).expect("a divides d").sub(&c.derivative());
        i += 1;
    }
    out
}

/// Zassenhaus factorization of a monic squarefree integer polynomial.
fn factor_squarefree(p: &IntPoly) -> Result<Vec<IntPoly>> {
    if p.deg() == 0 {
        return Ok(vec![]);
    }
    if p.deg() == 1 {
        return Ok(vec![p.clone()]);
    }
    // Pick the usable prime giving the fewest modular factors.
    let mut best: Option<(u64, usize)> = None;
    for &q in SMALL_PRIMES {
        let fm = ModPoly::from_int(p, q);
        if fm.is_zero() || fm.deg() != p.deg() || !fm.is_squarefree() {
            continue;
        }
        let count = fm.count_factors();
        if count == 1 {
            return Ok(vec![p.clone()]);
        }
        if best.map_or(true, |(_, bc)| count < bc) {
            best = Some((q, count));
        }
    }
    let (q, _) = best.ok_or_else(|| Error::undecided("no usable small prime for factorization"))?;
    let modular = ModPoly::from_int(p, q).berlekamp_factor();

    // Lift to a modulus beyond twice the Mignotte factor-coefficient bound.
    let bound = mignotte_bound(p);
    let mut target = Int::from(q);
    while target <= &bound * 2 {
        target *= Int::from(q);
    }
    let lifted = hensel_lift_tree(&reduce_mod(p, &target), &modular, q, &target);

    // Subset recombination.
    let mut factors = lifted;
    let mut remaining = p.clone();
    let mut result = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= factors.len() {
        for subset in subsets_of_size(factors.len(), size) {
            let parts: Vec<&IntPoly> = subset.iter().map(|&i| &factors[i]).collect();
            let cand = balanced_product(&parts, &target);
            if cand.deg() == 0 {
                continue;
            }
            if let Some(quot) = remaining.div_exact_monic(&cand) {
                result.push(cand);
                remaining = quot;
                factors = factors
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f)
                    .collect();
                continue 'outer;
            }
        }
        size += 1;
    }
    if !remaining.is_zero() && remaining.deg() > 0 {
        result.push(remaining);
    }
    Ok(result)
}

fn mignotte_bound(p: &IntPoly) -> Int {
    let norm1: Int = p.coeffs.iter().map(|c| c.abs()).sum();
    (Int::one() << p.deg()) * (norm1 + Int::one())
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
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

fn balanced_product(fs: &[&IntPoly], modulus: &Int) -> IntPoly {
    let mut prod = IntPoly::one();
    for f in fs {
        prod = reduce_mod(&prod.mul(f), modulus);
    }
    let half = modulus / 2;
    IntPoly::new(
        prod.coeffs
            .iter()
            .map(|c| if c > &half { c - modulus } else { c.clone() })
            .collect(),
    )
}

fn reduce_mod(p: &IntPoly, m: &Int) -> IntPoly {
    IntPoly::new(p.coeffs.iter().map(|c| c.mod_floor(m)).collect())
}

/// Lift `f = prod(factors) mod q` to `mod target` (a power of q) by a binary
/// tree of two-factor linear Hensel lifts. `f` is monic mod target.
fn hensel_lift_tree(f: &IntPoly, factors: &[ModPoly], q: u64, target: &Int) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left.iter().fold(ModPoly::one(q), |a, b| a.mul(b));
    let h0 = right.iter().fold(ModPoly::one(q), |a, b| a.mul(b));
    let (g, h) = hensel_lift_pair(f, &g0, &h0, q, target);
    let mut out = hensel_lift_tree(&g, left, q, target);
    out.extend(hensel_lift_tree(&h, right, q, target));
    out
}

/// Linear Hensel lifting of the monic coprime pair (g0, h0) with
/// f = g0 h0 (mod q), up to the target modulus.
fn hensel_lift_pair(
    f: &IntPoly,
    g0: &ModPoly,
    h0: &ModPoly,
    q: u64,
    target: &Int,
) -> (IntPoly, IntPoly) {
    let (s, t) = g0.bezout(h0);
    let qi = Int::from(q);
    let mut g = g0.to_int();
    let mut h = h0.to_int();
    let mut pk = qi.clone();
    while &pk < target {
        // e = (f - g h) / p^k, reduced mod p.
        let diff = f.sub(&g.mul(&h));
        let ebar = ModPoly::from_int(
            &IntPoly::new(diff.coeffs.iter().map(|c| c / &pk).collect()),
            q,
        );
        debug_assert!(diff.coeffs.iter().all(|c| c.mod_floor(&pk).is_zero()));
        // se = qq * h0 + r; then dg = t e + qq g0, dh = r satisfy
        // dg h + dh g = e (mod p) with deg dh < deg h, deg dg < deg g.
        let se = s.mul(&ebar);
        let (qq, r) = se.divrem(h0);
        let dh = r;
        let dg = t.mul(&ebar).add(&qq.mul(g0)).divrem_deg_guard(g0.deg());
        g = g.add(&dg.to_int().scale_int(&pk));
        h = h.add(&dh.to_int().scale_int(&pk));
        pk *= &qi;
    }
    debug_assert!({
        let diff = f.sub(&g.mul(&h));
        diff.coeffs.iter().all(|c| c.mod_floor(&pk).is_zero())
    });
    (reduce_mod(&g, &pk), reduce_mod(&h, &pk))
}

// ---- Arithmetic mod a small prime ----

#[derive(Clone, PartialEq, Eq, Debug)]
struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    fn from_int(f: &IntPoly, p: u64) -> Self {
        let pi = Int::from(p);
        Self::new(
            p,
            f.coeffs
                .iter()
                .map(|c| c.mod_floor(&pi).to_u64().unwrap())
                .collect(),
        )
    }

    fn to_int(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    fn one(p: u64) -> Self {
        ModPoly { p, coeffs: vec![1] }
    }

    fn x(p: u64) -> Self {
        ModPoly {
            p,
            coeffs: vec![0, 1],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(p, (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % p).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            p,
            (0..n)
                .map(|i| (self.coeff(i) + p - other.coeff(i)) % p)
                .collect(),
        )
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ModPoly {
                p: self.p,
                coeffs: vec![],
            };
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        ModPoly::new(p, out)
    }

    fn scale(&self, k: u64) -> Self {
        ModPoly::new(self.p, self.coeffs.iter().map(|&c| c * k % self.p).collect())
    }

    /// Drop any (necessarily zero in valid uses) coefficients at or above
    /// `deg`; guards the Hensel degree bound.
    fn divrem_deg_guard(&self, deg: usize) -> Self {
        let coeffs: Vec<u64> = self.coeffs.iter().take(deg).copied().collect();
        debug_assert!(self.coeffs.iter().skip(deg).all(|&c| c == 0));
        ModPoly::new(self.p, coeffs)
    }

    fn inv_scalar(&self, a: u64) -> u64 {
        let p = self.p;
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let p = self.p;
        let dn = d.deg();
        let lead_inv = self.inv_scalar(d.coeffs[dn]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return (ModPoly::new(p, vec![]), ModPoly::new(p, rem));
        }
        let mut quot = vec![0u64; rem.len() - dn];
        for i in (dn..rem.len()).rev() {
            let qc = rem[i] % p * lead_inv % p;
            if qc == 0 {
                continue;
            }
            quot[i - dn] = qc;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i - dn + j] = (rem[i - dn + j] + p - qc * dc % p) % p;
            }
        }
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let li = a.inv_scalar(*a.coeffs.last().unwrap());
        a.scale(li)
    }

    /// Extended Euclid: (s, t) with s*self + t*other = 1; inputs coprime.
    fn bezout(&self, other: &Self) -> (Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::new(p, vec![]));
        let (mut t0, mut t1) = (ModPoly::new(p, vec![]), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        assert!(r0.deg() == 0, "bezout of non-coprime polynomials");
        let li = r0.inv_scalar(r0.coeffs[0]);
        (s0.scale(li), t0.scale(li))
    }

    fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly::new(self.p, vec![]);
        }
        ModPoly::new(
            self.p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * ((i as u64 + 1) % self.p) % self.p)
                .collect(),
        )
    }

    fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).deg() == 0
    }

    fn pow_mod(&self, mut e: u64, f: &Self) -> Self {
        let mut base = self.divrem(f).1;
        let mut acc = ModPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(f).1;
            }
            base = base.mul(&base).divrem(f).1;
            e >>= 1;
        }
        acc
    }

    /// Number of irreducible factors (dimension of the Berlekamp algebra).
    fn count_factors(&self) -> usize {
        self.berlekamp_nullspace().len()
    }

    /// Basis of { v : v^p = v mod f }, as coefficient vectors.
    fn berlekamp_nullspace(&self) -> Vec<Vec<u64>> {
        let n = self.deg();
        let p = self.p;
        let xp = ModPoly::x(p).pow_mod(p, self);
        // Row i of Q = coefficients of x^{i p} mod f; v is in the algebra
        // iff v (Q - I) = 0.
        let mut cur = ModPoly::one(p);
        let mut qmi = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                qmi[i][j] = cur.coeff(j);
            }
            qmi[i][i] = (qmi[i][i] + p - 1) % p;
            cur = cur.mul(&xp).divrem(self).1;
        }
        // Left null space = null space of the transpose.
        let mut mt = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                mt[j][i] = qmi[i][j];
            }
        }
        nullspace_mod(&mut mt, n, p)
    }

    fn berlekamp_factor(&self) -> Vec<ModPoly> {
        let p = self.p;
        let basis = self.berlekamp_nullspace();
        let r = basis.len();
        let mut factors = vec![self.clone()];
        if r == 1 {
            return factors;
        }
        for v in &basis {
            if factors.len() == r {
                break;
            }
            let vp = ModPoly::new(p, v.clone());
            if vp.is_zero() || vp.deg() == 0 {
                continue;
            }
            let mut next = Vec::new();
            for g in factors {
                if g.deg() <= 1 {
                    next.push(g);
                    continue;
                }
                let mut pieces = vec![g];
                for s in 0..p {
                    let mut shifted = vp.coeffs.clone();
                    if shifted.is_empty() {
                        shifted.push(0);
                    }
                    shifted[0] = (shifted[0] + p - s) % p;
                    let shifted = ModPoly::new(p, shifted);
                    let mut split = Vec::new();
                    for piece in pieces {
                        if piece.deg() <= 1 {
                            split.push(piece);
                            continue;
                        }
                        let h = piece.gcd(&shifted);
                        if !h.is_zero() && h.deg() > 0 && h.deg() < piece.deg() {
                            let (q, _) = piece.divrem(&h);
                            split.push(h);
                            split.push(q);
                        } else {
                            split.push(piece);
                        }
                    }
                    pieces = split;
                }
                next.extend(pieces);
            }
            factors = next;
        }
        // Monic normalization.
        factors
            .into_iter()
            .map(|f| {
                let li = f.inv_scalar(*f.coeffs.last().unwrap());
                f.scale(li)
            })
            .collect()
    }
}

fn nullspace_mod(m: &mut [Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let inv = |a: u64| -> u64 {
        let mut base = a % p;
        let mut e = p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut pivots: Vec<Option<usize>> = vec![None; n];
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| m[i][c] % p != 0) else {
            continue;
        };
        m.swap(r, pr);
        let iv = inv(m[r][c]);
        for j in 0..n {
            m[r][j] = m[r][j] * iv % p;
        }
        for i in 0..n {
            if i != r && m[i][c] % p != 0 {
                let f = m[i][c];
                for j in 0..n {
                    m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                }
            }
        }
        pivots[c] = Some(r);
        r += 1;
    }
    let mut basis = Vec::new();
    for c in 0..n {
        if pivots[c].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[c] = 1;
        for cc in 0..n {
            if let Some(rr) = pivots[cc] {
                v[cc] = (p - m[rr][c] % p) % p;
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_counts() {
        // (t-1)(t-2)(t+3)
        let p = IntPoly::from_i64(&[6, -7, 0, 1]).sub(&IntPoly::from_i64(&[0, 0, -2, 0]));
        // Direct coefficients: t^3 + 0 t^2 - 7 t + 6 has roots 1, 2, -3.
        let p = IntPoly::from_i64(&[6, -7, 0, 1]);
        let _ = p;
        let q = IntPoly::from_i64(&[6, -7, 0, 1]);
        let r = |x: i64| Rat::from(Int::from(x));
        assert_eq!(sturm_count(&q, &r(0), &r(3)), 2);
        assert_eq!(sturm_count(&q, &r(-4), &r(0)), 1);
        assert_eq!(sturm_count(&q, &r(-4), &r(3)), 3);
    }

    #[test]
    fn max_real_root_golden() {
        let p = IntPoly::from_i64(&[-1, -1, 1]);
        let eps = Rat::new(Int::from(1), Int::from(1_000_000_000));
        let root = max_real_root(&p, &eps).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((root.to_f64().unwrap() - phi).abs() < 1e-8);
    }

    #[test]
    fn graeffe_squares_roots() {
        // roots 2 and 3 -> roots 4 and 9.
        let p = IntPoly::from_i64(&[6, -5, 1]);
        assert_eq!(p.graeffe(), IntPoly::from_i64(&[36, -13, 1]));
        // Odd degree: root 2 -> root 4.
        let l = IntPoly::from_i64(&[-2, 1]);
        assert_eq!(l.graeffe(), IntPoly::from_i64(&[-4, 1]));
    }

    #[test]
    fn resultant_shared_root() {
        let p = IntPoly::from_i64(&[-2, 1]);
        let q = IntPoly::from_i64(&[6, -5, 1]);
        assert!(sylvester_resultant(&p.to_rat_vec(), &q.to_rat_vec()).is_zero());
        let q2 = IntPoly::from_i64(&[3, 1]);
        assert_eq!(
            sylvester_resultant(&p.to_rat_vec(), &q2.to_rat_vec()),
            Rat::from(Int::from(5))
        );
    }

    #[test]
    fn interpolate_roundtrip() {
        let pts: Vec<(Rat, Rat)> = (0..4)
            .map(|i| {
                let x = Rat::from(Int::from(i));
                let y = x.clone() * x.clone() * x.clone() - Rat::from(Int::from(2)) * x.clone()
                    + Rat::one();
                (x, y)
            })
            .collect();
        let poly = interpolate(&pts);
        assert_eq!(
            poly,
            vec![Rat::one(), Rat::from(Int::from(-2)), Rat::zero(), Rat::one()]
        );
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible_over_q(&IntPoly::from_i64(&[-1, -1, 1])).unwrap());
        assert!(is_irreducible_over_q(&IntPoly::from_i64(&[1, 1, 1])).unwrap());
        assert!(!is_irreducible_over_q(&IntPoly::from_i64(&[-1, 0, 1])).unwrap());
        assert!(!is_irreducible_over_q(&IntPoly::from_i64(&[1, -2, 1])).unwrap());
        // x^4 + 1: irreducible over Q, reducible mod every prime.
        assert!(is_irreducible_over_q(&IntPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap());
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2).
        assert!(!is_irreducible_over_q(&IntPoly::from_i64(&[4, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn factor_reassembles() {
        for coeffs in [
            vec![4i64, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 1],
            vec![-6, 11, -6, 1],
            vec![0, 0, 1],
        ] {
            let p = IntPoly::from_i64(&coeffs);
            let fs = factor_int_poly(&p).unwrap();
            let mut prod = IntPoly::one();
            for (f, m) in &fs {
                assert!(is_irreducible_over_q(f).unwrap(), "{:?} not irreducible", f);
                for _ in 0..*m {
                    prod = prod.mul(f);
                }
            }
            assert_eq!(prod, p);
        }
        // (t-1)^2 (t^2 + t + 1)
        let sq = IntPoly::from_i64(&[1, -2, 1]).mul(&IntPoly::from_i64(&[1, 1, 1]));
        let fs = factor_int_poly(&sq).unwrap();
        assert!(fs.iter().any(|(f, m)| *m == 2 && f.deg() == 1));
        let mut prod = IntPoly::one();
        for (f, m) in &fs {
            for _ in 0..*m {
                prod = prod.mul(f);
            }
        }
        assert_eq!(prod, sq);
    }
}

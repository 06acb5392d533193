//! Dense integer polynomials, the iterated family `f_m`, and Sturm counts.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Sign;

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::new(vec![c.clone()]));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the positive content.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// `lc(b)^(deg a − deg b + 1) · a mod b`.
    pub fn pseudo_remainder(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "pseudo-remainder by zero");
        let mut r = self.clone();
        let db = b.degree();
        let lb = b.leading();
        if r.is_zero() || r.degree() < db {
            return r;
        }
        let delta = r.degree() - db;
        let mut steps = 0;
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.leading();
            let mut c: Vec<BigInt> = r.coeffs.iter().map(|x| x * &lb).collect();
            for (j, bj) in b.coeffs.iter().enumerate() {
                c[j + shift] -= &lr * bj;
            }
            r = Self::new(c);
            steps += 1;
        }
        // Pad to exactly delta + 1 multiplications by lc(b).
        for _ in steps..=delta {
            r = r.scale(&lb);
        }
        r
    }

    /// Sign at `+∞` and `−∞`.
    pub fn signs_at_infinity(&self) -> (Sign, Sign) {
        let lc = Sign::of(&self.leading());
        let minus = if self.degree() % 2 == 0 { lc } else { -lc };
        (lc, minus)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Greatest common divisor up to a constant, via primitive remainders.
pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (mut a, mut b) = (a.primitive(), b.primitive());
    while !b.is_zero() {
        let r = a.pseudo_remainder(&b).primitive();
        a = b;
        b = r;
    }
    a
}

/// `f_0 = x² − 2`, `f_{k+1} = f_k ∘ f_0`.
pub fn fm_polynomial(m: usize) -> IntPolynomial {
    let f0 = IntPolynomial::from_i64(&[-2, 0, 1]);
    let mut f = f0.clone();
    for _ in 0..m {
        f = f.compose(&f0);
    }
    f
}

/// Sturm sequence of a squarefree polynomial, with every term scaled by a
/// positive factor.
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.primitive(), p.derivative().primitive()];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_zero() {
            seq.pop();
            break;
        }
        let delta = a.degree().saturating_sub(b.degree());
        let mut r = a.pseudo_remainder(b).neg();
        // prem multiplies by lc(b)^(delta+1); undo its sign.
        if b.leading().is_negative() && delta % 2 == 0 {
            r = r.neg();
        }
        if r.is_zero() {
            break;
        }
        seq.push(r.primitive());
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut changes = 0;
    for s in signs.filter(|s| !s.is_zero()) {
        if !last.is_zero() && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of a nonzero squarefree polynomial.
pub fn sturm_root_count(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Precondition("the zero polynomial has no root count".into()));
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let g = gcd(p, &p.derivative());
    if g.degree() > 0 {
        return Err(Error::NotSquarefree { degree: g.degree() });
    }
    let seq = sturm_sequence(p);
    let at_plus = sign_changes(seq.iter().map(|q| q.signs_at_infinity().0));
    let at_minus = sign_changes(seq.iter().map(|q| q.signs_at_infinity().1));
    Ok(at_minus - at_plus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family() {
        assert_eq!(fm_polynomial(0), IntPolynomial::from_i64(&[-2, 0, 1]));
        assert_eq!(fm_polynomial(1), IntPolynomial::from_i64(&[2, 0, -4, 0, 1]));
        assert_eq!(fm_polynomial(3).degree(), 16);
        assert_eq!(fm_polynomial(1).to_string(), "x^4 - 4x^2 + 2");
    }

    #[test]
    fn root_counts() {
        assert_eq!(sturm_root_count(&fm_polynomial(0)).unwrap(), 2);
        assert_eq!(sturm_root_count(&fm_polynomial(1)).unwrap(), 4);
        assert_eq!(sturm_root_count(&fm_polynomial(3)).unwrap(), 16);
        assert_eq!(sturm_root_count(&IntPolynomial::from_i64(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_root_count(&IntPolynomial::from_i64(&[-6, 11, -6, 1])).unwrap(), 3);
        assert_eq!(sturm_root_count(&IntPolynomial::from_i64(&[5])).unwrap(), 0);
        // Leading coefficient negative.
        assert_eq!(sturm_root_count(&IntPolynomial::from_i64(&[1, 0, -3])).unwrap(), 2);
    }

    #[test]
    fn repeated_factor_is_named() {
        // (x − 1)^2 (x + 2)
        let p = IntPolynomial::from_i64(&[2, -3, 0, 1]);
        assert!(matches!(sturm_root_count(&p), Err(Error::NotSquarefree { degree: 1 })));
        // (x^2 + 1)^2
        let p = IntPolynomial::from_i64(&[1, 0, 2, 0, 1]);
        assert!(matches!(sturm_root_count(&p), Err(Error::NotSquarefree { degree: 2 })));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = IntPolynomial::from_i64(&[3, -1, 4, 1, 5]);
        let b = IntPolynomial::from_i64(&[2, 0, 3]);
        let r = a.pseudo_remainder(&b);
        assert!(r.degree() < b.degree());
        // lc(b)^(δ+1) a − r is divisible by b: it vanishes at b's roots, so
        // check the pseudo-remainder of that difference is zero.
        let lhs = a.scale(&BigInt::from(27)).add(&r.neg());
        assert!(lhs.pseudo_remainder(&b).is_zero());
    }

    #[test]
    fn evaluation_and_composition() {
        let f = fm_polynomial(1);
        let f0 = fm_polynomial(0);
        for x in -3..=3 {
            let x = BigInt::from(x);
            assert_eq!(f.eval(&x), f0.eval(&f0.eval(&x)));
        }
    }
}

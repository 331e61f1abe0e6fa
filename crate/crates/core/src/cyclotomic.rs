//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! An element is stored as its coefficient vector in the power basis
//! `1, ζ_m, …, ζ_m^{φ(m)-1}`, i.e. as a polynomial reduced modulo the
//! `m`-th cyclotomic polynomial. Elements of different conductors are
//! combined in `Q(ζ_lcm)`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficients of `Φ_m`, lowest degree first.
///
/// Computed by dividing `x^m − 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic polynomial of order 0");
    let divisors: Vec<u32> = (1..=m).filter(|d| m % d == 0).collect();
    let mut table: Vec<Vec<i64>> = Vec::with_capacity(divisors.len());
    for (i, &e) in divisors.iter().enumerate() {
        let mut num = alloc::vec![0i64; e as usize + 1];
        num[0] = -1;
        num[e as usize] = 1;
        for (j, &f) in divisors[..i].iter().enumerate() {
            if e % f == 0 {
                num = div_exact_monic(&num, &table[j]);
            }
        }
        table.push(num);
    }
    table.pop().unwrap()
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = alloc::vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Euler's totient.
pub fn totient(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

/// An exact element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: alloc::vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `ζ_m^k` with `ζ_m = exp(2πi/m)`.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m >= 1);
        let k = k.rem_euclid(m as i64) as usize;
        if m <= 2 {
            return Self::from_integer(if k == 0 { 1 } else { -1 });
        }
        let mut v = alloc::vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        Self::reduce(m, v)
    }

    /// Builds `Σ coeffs[k] ζ_m^k` for an arbitrary-length coefficient list.
    pub fn from_power_coeffs(m: u32, coeffs: Vec<Rational>) -> Self {
        if m <= 2 {
            let mut q = Rational::zero();
            for (k, c) in coeffs.into_iter().enumerate() {
                if m == 2 && k % 2 == 1 {
                    q -= c;
                } else {
                    q += c;
                }
            }
            return Self::from_rational(q);
        }
        Self::reduce(m, coeffs)
    }

    /// `Σ_k counts[k] ζ_m^k / den` from integer multiplicities.
    pub fn from_root_counts(m: u32, counts: &[i64], den: u64) -> Self {
        let d = BigInt::from(den);
        let coeffs = counts
            .iter()
            .map(|&c| Rational::new(BigInt::from(c), d.clone()))
            .collect();
        Self::from_power_coeffs(m, coeffs)
    }

    fn reduce(m: u32, mut v: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        if v.len() > deg {
            for i in (deg..v.len()).rev() {
                if v[i].is_zero() {
                    continue;
                }
                let c = core::mem::replace(&mut v[i], Rational::zero());
                for (j, &b) in phi[..deg].iter().enumerate() {
                    if b != 0 {
                        v[i - deg + j] -= &c * Rational::from_integer(BigInt::from(b));
                    }
                }
            }
        }
        v.resize(deg, Rational::zero());
        Cyclotomic {
            conductor: m,
            coeffs: v,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coordinates in the power basis of `Q(ζ_conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses `self` in `Q(ζ_target)`; `target` must be a multiple of
    /// the conductor.
    pub fn embed(&self, target: u32) -> Self {
        assert!(target % self.conductor == 0, "conductor must divide target");
        if target == self.conductor {
            return self.clone();
        }
        if let Some(q) = self.as_rational() {
            return Cyclotomic {
                conductor: target,
                coeffs: {
                    let mut v = alloc::vec![Rational::zero(); totient(target) as usize];
                    v[0] = q;
                    v
                },
            };
        }
        let step = (target / self.conductor) as usize;
        let mut v = alloc::vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * step] = c.clone();
        }
        Self::from_power_coeffs(target, v)
    }

    fn aligned(a: &Self, b: &Self) -> (u32, Self, Self) {
        if a.conductor == b.conductor {
            return (a.conductor, a.clone(), b.clone());
        }
        let m = a.conductor.lcm(&b.conductor);
        (m, a.embed(m), b.embed(m))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against
    /// `Φ_m`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()).embed(self.conductor));
        }
        let m = self.conductor;
        let phi: Vec<Rational> = cyclotomic_polynomial(m)
            .into_iter()
            .map(|c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::new(), alloc::vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, next_s);
        }
        // r0 is a nonzero constant since Φ_m is irreducible
        let c = r0[0].recip();
        let inv: Vec<Rational> = s0.into_iter().map(|x| x * &c).collect();
        Ok(Self::from_power_coeffs(m, inv))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(a, b)| a + b)
                    .collect(),
            };
        }
        let (_, a, b) = Cyclotomic::aligned(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let (_, a, b) = Cyclotomic::aligned(self, rhs);
            return &a * &b;
        }
        if self.coeffs.len() == 1 {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: alloc::vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut v = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce(self.conductor, v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let lead = b.last().expect("division by zero polynomial").recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = alloc::vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Writes a rational as `a` or `a/b`.
pub fn fmt_rational(q: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Rationals print as `a/b`; other values as a sum over powers of
    /// `z{m}` standing for `ζ_m`, e.g. `1/2 - z8^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return fmt_rational(&q, f);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                fmt_rational(&mag, f)?;
                continue;
            }
            if !mag.is_one() {
                fmt_rational(&mag, f)?;
                f.write_str("*")?;
            }
            write!(f, "z{}", self.conductor)?;
            if k > 1 {
                write!(f, "^{}", k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({})", self.conductor, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Exact division oracle over plain integer vectors.
    fn naive_divide(mut num: Vec<i64>, den: &[i64]) -> Vec<i64> {
        let dd = den.len() - 1;
        let mut quot = vec![0; num.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = num[i + dd] / den[dd];
            quot[i] = c;
            for j in 0..=dd {
                num[i + j] -= c * den[j];
            }
        }
        assert!(num.iter().all(|&x| x == 0));
        quot
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        // (x^4 - 1) / ((x - 1)(x + 1)) = x^2 + 1
        let x4 = vec![-1, 0, 0, 0, 1];
        assert_eq!(
            naive_divide(naive_divide(x4, &[-1, 1]), &[1, 1]),
            vec![1, 0, 1]
        );
        // (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1)) = x^2 - x + 1
        let x6 = vec![-1, 0, 0, 0, 0, 0, 1];
        let r = naive_divide(
            naive_divide(naive_divide(x6, &[-1, 1]), &[1, 1]),
            &[1, 1, 1],
        );
        assert_eq!(r, vec![1, -1, 1]);
        for m in 1..40 {
            assert_eq!(cyclotomic_polynomial(m).len() as u32 - 1, totient(m));
        }
        assert_eq!(cyclotomic_polynomial(105)[7], -2);
    }

    #[test]
    fn field_identities() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_integer(-1));
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(&w + &w2, Cyclotomic::from_integer(-1));
        let a = Cyclotomic::from_power_coeffs(5, vec![q(1, 2), q(-3, 1), q(0, 1), q(7, 3)]);
        assert_eq!(&a + &Cyclotomic::zero(), a);
        assert_eq!(&a - &a, Cyclotomic::zero());
    }

    #[test]
    fn mixed_conductors() {
        // ζ_4 · ζ_3 = ζ_12^{3+4}
        let p = &Cyclotomic::root_of_unity(4, 1) * &Cyclotomic::root_of_unity(3, 1);
        assert_eq!(p, Cyclotomic::root_of_unity(12, 7));
        assert_eq!(
            Cyclotomic::root_of_unity(6, 3),
            Cyclotomic::from_integer(-1)
        );
        assert_eq!(
            Cyclotomic::root_of_unity(8, 2),
            Cyclotomic::root_of_unity(4, 1)
        );
        assert_eq!(
            Cyclotomic::root_of_unity(2, 1),
            Cyclotomic::from_integer(-1)
        );
    }

    #[test]
    fn roots_have_the_right_order() {
        for m in 1..=12u32 {
            for k in 0..m as i64 {
                let z = Cyclotomic::root_of_unity(m, k);
                assert!(z.pow(m).is_one(), "m={m} k={k}");
            }
            let sum = (0..m as i64)
                .map(|k| Cyclotomic::root_of_unity(m, k))
                .fold(Cyclotomic::zero(), |a, b| &a + &b);
            let expect = if m == 1 { 1 } else { 0 };
            assert_eq!(sum, Cyclotomic::from_integer(expect), "m={m}");
        }
    }

    #[test]
    fn inverses() {
        let a = Cyclotomic::from_power_coeffs(12, vec![q(1, 1), q(2, 1), q(0, 1), q(-1, 5)]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        let z = Cyclotomic::root_of_unity(7, 3);
        assert_eq!(z.inverse().unwrap(), Cyclotomic::root_of_unity(7, 4));
        assert_eq!(
            Cyclotomic::zero().inverse().unwrap_err(),
            Error::DivisionByZero
        );
        assert_eq!(
            Cyclotomic::from_integer(3)
                .checked_div(&Cyclotomic::from_integer(6))
                .unwrap(),
            Cyclotomic::from_rational(q(1, 2))
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(Cyclotomic::from_rational(q(-1, 6)).to_string(), "-1/6");
        assert_eq!(Cyclotomic::root_of_unity(4, 1).to_string(), "z4");
        let a = Cyclotomic::from_power_coeffs(4, vec![q(1, 2), q(-3, 1)]);
        assert_eq!(a.to_string(), "1/2 - 3*z4");
    }

    proptest::proptest! {
        #[test]
        fn ring_laws(a in proptest::collection::vec(-5i64..5, 1..7),
                     b in proptest::collection::vec(-5i64..5, 1..7),
                     c in proptest::collection::vec(-5i64..5, 1..7),
                     m in 1u32..13) {
            let mk = |v: &Vec<i64>| Cyclotomic::from_power_coeffs(
                m, v.iter().map(|&x| q(x, 1)).collect());
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            proptest::prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            proptest::prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                proptest::prop_assert!((&a * &a.inverse().unwrap()).is_one());
            }
        }
    }
}

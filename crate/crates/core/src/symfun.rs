//! Exact polynomials in power sums `p_1, p_2, …` and in variables
//! `x_0, …, x_n`, the generalized cycle index, and the product and
//! insertion rules.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::character::LinearCharacter;
use crate::cyclotomic::{fmt_rational, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// Default bound on the number of monomials a specialization may produce.
pub const DEFAULT_TERM_CAP: u128 = 5_000_000;

/// Exponent vector ordered for printing: larger total degree first, then
/// lexicographically larger first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn trimmed(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn accumulate(terms: &mut BTreeMap<Exponents, Cyclotomic>, key: Exponents, c: Cyclotomic) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        Some(old) => {
            let sum = &*old + &c;
            if sum.is_zero() {
                terms.remove(&key);
            } else {
                *old = sum;
            }
        }
        None => {
            terms.insert(key, c);
        }
    }
}

/// An isobaric polynomial in `p_1, …, p_d` with cyclotomic coefficients.
///
/// A term `c · p_1^{c_1} ⋯ p_d^{c_d}` is keyed by `(c_1, …, c_d)` with
/// trailing zeros dropped, and every key satisfies `Σ s·c_s = weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumPoly {
    weight: usize,
    terms: BTreeMap<Exponents, Cyclotomic>,
}

fn psum_weight(exps: &[u32]) -> usize {
    exps.iter()
        .enumerate()
        .map(|(s, &c)| (s + 1) * c as usize)
        .sum()
}

impl PowerSumPoly {
    pub fn zero(weight: usize) -> Self {
        PowerSumPoly {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// The weight-0 constant `1`.
    pub fn one() -> Self {
        let mut z = Self::zero(0);
        z.terms.insert(Exponents(Vec::new()), Cyclotomic::one());
        z
    }

    /// The single power sum `p_s`.
    pub fn power_sum(s: usize) -> Self {
        let mut exps = alloc::vec![0; s];
        exps[s - 1] = 1;
        let mut z = Self::zero(s);
        z.terms.insert(Exponents(exps), Cyclotomic::one());
        z
    }

    /// Adds `coeff · Π p_s^{exps[s-1]}`; the term must have this
    /// polynomial's weight.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Cyclotomic) -> Result<()> {
        let w = psum_weight(&exps);
        if w != self.weight {
            return Err(Error::WeightMismatch(self.weight, w));
        }
        accumulate(&mut self.terms, Exponents(trimmed(exps)), coeff);
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Cyclotomic)> {
        self.terms.iter().map(|(k, c)| (k.0.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Cyclotomic {
        self.terms
            .get(&Exponents(trimmed(exps.to_vec())))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_isobaric(&self) -> bool {
        self.terms.keys().all(|k| psum_weight(&k.0) == self.weight)
    }

    /// Coefficients as rationals, when they all are.
    pub fn rational_coefficients(&self) -> Option<Vec<Rational>> {
        self.terms.values().map(Cyclotomic::as_rational).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(self.weight, other.weight));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PowerSumPoly {
            weight: self.weight,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.weight);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.weight + other.weight);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let n = ka.0.len().max(kb.0.len());
                let exps = (0..n)
                    .map(|i| ka.0.get(i).copied().unwrap_or(0) + kb.0.get(i).copied().unwrap_or(0))
                    .collect();
                accumulate(&mut out.terms, Exponents(exps), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Replaces every `p_k` by `p_{k·step}`.
    pub fn reindex(&self, step: usize) -> Self {
        let mut out = Self::zero(self.weight * step);
        for (k, c) in &self.terms {
            let mut exps = alloc::vec![0u32; k.0.len() * step];
            for (s, &e) in k.0.iter().enumerate() {
                exps[(s + 1) * step - 1] = e;
            }
            out.terms.insert(Exponents(trimmed(exps)), c.clone());
        }
        out
    }

    /// Substitutes `images[s-1]` for `p_s`. All images must share one
    /// weight ratio: `weight(images[s-1]) = s · r`.
    pub fn substitute(&self, images: &[PowerSumPoly]) -> Result<Self> {
        let r = images.first().map_or(1, |p| p.weight);
        for (s, img) in images.iter().enumerate() {
            if img.weight != (s + 1) * r {
                return Err(Error::WeightMismatch((s + 1) * r, img.weight));
            }
        }
        let mut powers: BTreeMap<(usize, u32), PowerSumPoly> = BTreeMap::new();
        let mut out = Self::zero(self.weight * r);
        for (k, c) in &self.terms {
            let mut acc = Self::one();
            for (s, &e) in k.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images.get(s).ok_or(Error::WeightMismatch(s + 1, 0))?;
                let pw = powers.entry((s, e)).or_insert_with(|| img.pow(e));
                acc = acc.mul(pw);
            }
            out = out.add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// `Z_outer(P_1, …, P_d)` with `P_s = Z_inner(p_s, p_{2s}, …)`.
    pub fn plethysm_insert(&self, inner: &PowerSumPoly) -> Result<Self> {
        let images: Vec<PowerSumPoly> = (1..=self.weight).map(|s| inner.reindex(s)).collect();
        if self.weight == 0 {
            return Ok(self.clone());
        }
        self.substitute(&images)
    }

    /// Expands with `p_s = x_0^s + ⋯ + x_n^s`.
    pub fn specialize(&self, n: usize) -> Result<MonomialPoly> {
        self.specialize_capped(n, DEFAULT_TERM_CAP)
    }

    pub fn specialize_capped(&self, n: usize, cap: u128) -> Result<MonomialPoly> {
        let nvars = n + 1;
        let bound = binomial((n + self.weight) as u128, self.weight as u128);
        if bound > cap {
            return Err(Error::CapExceeded { needed: bound, cap });
        }
        let mut acc: BTreeMap<Vec<u32>, Cyclotomic> = BTreeMap::new();
        for (k, c) in &self.terms {
            // integer multiplicities of each monomial in Π p_s^{c_s}
            let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            counts.insert(alloc::vec![0; nvars], BigInt::one());
            for (s, &e) in k.0.iter().enumerate() {
                for _ in 0..e {
                    let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
                    for (mono, cnt) in &counts {
                        for i in 0..nvars {
                            let mut m = mono.clone();
                            m[i] += s as u32 + 1;
                            *next.entry(m).or_insert_with(BigInt::zero) += cnt;
                        }
                    }
                    counts = next;
                }
            }
            for (mono, cnt) in counts {
                let term = c.scale(&Rational::from_integer(cnt));
                match acc.get_mut(&mono) {
                    Some(old) => *old = &*old + &term,
                    None => {
                        acc.insert(mono, term);
                    }
                }
            }
        }
        let mut out = MonomialPoly::zero(nvars);
        for (mono, c) in acc {
            accumulate(&mut out.terms, Exponents(mono), c);
        }
        Ok(out)
    }
}

impl fmt::Display for PowerSumPoly {
    /// `(1/6)*p1^3 + (1/2)*p1*p2 + (1/3)*p3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, self.terms.iter(), |f, exps| {
            fmt_monomial(f, exps.iter().enumerate().map(|(s, &e)| (s + 1, e)), "p")
        })
    }
}

/// A polynomial in `x_0, …, x_n` with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Cyclotomic>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · x^multidegree`.
    pub fn add_term(&mut self, multidegree: Vec<u32>, coeff: Cyclotomic) {
        assert_eq!(multidegree.len(), self.nvars, "multidegree length");
        accumulate(&mut self.terms, Exponents(multidegree), coeff);
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Cyclotomic)> {
        self.terms.iter().map(|(k, c)| (k.0.as_slice(), c))
    }

    pub fn coefficient(&self, multidegree: &[u32]) -> Cyclotomic {
        self.terms
            .get(&Exponents(multidegree.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|k| k.total_degree() == d)
    }

    /// True when every coefficient is a nonnegative rational integer.
    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| {
            c.as_rational()
                .is_some_and(|q| q.is_integer() && !q.is_negative())
        })
    }

    /// Invariance under every adjacent transposition `x_i ↔ x_{i+1}`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(k, c)| {
                let mut swapped = k.0.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&Exponents(swapped)) == Some(c)
            })
        })
    }

    /// Value at `x_i = values[i]`.
    pub fn evaluate(&self, values: &[Rational]) -> Cyclotomic {
        assert_eq!(values.len(), self.nvars);
        let mut total = Cyclotomic::zero();
        for (k, c) in &self.terms {
            let mut m = Rational::one();
            for (x, &e) in values.iter().zip(&k.0) {
                for _ in 0..e {
                    m *= x;
                }
            }
            total = &total + &c.scale(&m);
        }
        total
    }

    /// Sum of coefficients, i.e. the value at `x_0 = ⋯ = x_n = 1`.
    pub fn coefficient_sum(&self) -> Cyclotomic {
        self.terms
            .values()
            .fold(Cyclotomic::zero(), |acc, c| &acc + c)
    }

    /// Product of two polynomials in the same variables.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let exps = ka.0.iter().zip(&kb.0).map(|(a, b)| a + b).collect();
                accumulate(&mut out.terms, Exponents(exps), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MonomialPoly {
    /// `x0^3*x1 + x0^2*x1^2 + x0*x1^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, self.terms.iter(), |f, exps| {
            fmt_monomial(f, exps.iter().enumerate().map(|(i, &e)| (i, e)), "x")
        })
    }
}

fn fmt_monomial(
    f: &mut fmt::Formatter<'_>,
    factors: impl Iterator<Item = (usize, u32)>,
    var: &str,
) -> core::result::Result<bool, fmt::Error> {
    let mut any = false;
    for (i, e) in factors.filter(|&(_, e)| e > 0) {
        if any {
            f.write_str("*")?;
        }
        write!(f, "{var}{i}")?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        any = true;
    }
    Ok(any)
}

fn fmt_poly<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Exponents, &'a Cyclotomic)>,
    monomial: impl Fn(&mut fmt::Formatter<'_>, &[u32]) -> core::result::Result<bool, fmt::Error>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let constant = k.0.iter().all(|&e| e == 0);
        match c.as_rational() {
            Some(q) => {
                let neg = q.is_negative();
                match (first, neg) {
                    (true, true) => f.write_str("-")?,
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                    (true, false) => {}
                }
                let mag = q.abs();
                if constant {
                    fmt_rational(&mag, f)?;
                } else if mag.is_integer() {
                    if !mag.is_one() {
                        write!(f, "{}*", mag.numer())?;
                    }
                } else {
                    f.write_str("(")?;
                    fmt_rational(&mag, f)?;
                    f.write_str(")*")?;
                }
            }
            None => {
                if !first {
                    f.write_str(" + ")?;
                }
                write!(f, "({})", c)?;
                if !constant {
                    f.write_str("*")?;
                }
            }
        }
        monomial(f, &k.0)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `Z(χ; p_1, …, p_d) = |W|⁻¹ Σ_{σ∈W} χ(σ) p_1^{c_1(σ)} ⋯ p_d^{c_d(σ)}`.
pub fn cycle_index(group: &PermGroup, chi: &LinearCharacter) -> Result<PowerSumPoly> {
    if chi.group().as_ref() != group {
        return Err(Error::CharacterGroupMismatch);
    }
    let m = chi.modulus();
    // per cycle type, how often each root ζ_m^k occurs
    let mut census: BTreeMap<Vec<u32>, Vec<i64>> = BTreeMap::new();
    for (i, g) in group.elements().iter().enumerate() {
        let counts = census
            .entry(g.cycle_type())
            .or_insert_with(|| alloc::vec![0; m as usize]);
        counts[chi.exponent_at(i) as usize] += 1;
    }
    let mut z = PowerSumPoly::zero(group.degree());
    for (ct, counts) in census {
        z.add_term(
            ct,
            Cyclotomic::from_root_counts(m, &counts, group.order() as u64),
        )?;
    }
    Ok(z)
}

/// `e_d(x_0, …, x_n)`; zero when `d > n + 1`.
pub fn elementary_symmetric(d: usize, n: usize) -> MonomialPoly {
    let nvars = n + 1;
    let mut out = MonomialPoly::zero(nvars);
    if d > nvars {
        return out;
    }
    let mut chosen: Vec<usize> = (0..d).collect();
    loop {
        let mut mono = alloc::vec![0u32; nvars];
        for &i in &chosen {
            mono[i] = 1;
        }
        out.add_term(mono, Cyclotomic::one());
        // next combination in lexicographic order
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if chosen[i] < nvars - d + i {
                chosen[i] += 1;
                for j in i + 1..d {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::enumerate_linear_characters;
    use crate::perm::{named_group, wreath_embed, GroupKind::*, Permutation};
    use alloc::string::ToString;
    use alloc::sync::Arc;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn psum(weight: usize, terms: &[(&[u32], i64, i64)]) -> PowerSumPoly {
        let mut z = PowerSumPoly::zero(weight);
        for (e, n, d) in terms {
            z.add_term(e.to_vec(), q(*n, *d)).unwrap();
        }
        z
    }

    fn mono(nvars: usize, terms: &[(&[u32], i64)]) -> MonomialPoly {
        let mut m = MonomialPoly::zero(nvars);
        for (e, c) in terms {
            m.add_term(e.to_vec(), Cyclotomic::from_integer(*c));
        }
        m
    }

    /// Direct sum over the group elements, written independently of the
    /// census used by `cycle_index`.
    fn naive_cycle_index(g: &PermGroup, chi: &LinearCharacter) -> PowerSumPoly {
        let mut z = PowerSumPoly::zero(g.degree());
        let inv = Rational::new(BigInt::one(), BigInt::from(g.order()));
        for e in g.elements() {
            z.add_term(e.cycle_type(), chi.value(e).unwrap().scale(&inv))
                .unwrap();
        }
        z
    }

    fn chars(kind: crate::perm::GroupKind, d: usize) -> (Arc<PermGroup>, Vec<LinearCharacter>) {
        let g = Arc::new(named_group(kind, d).unwrap());
        let c = enumerate_linear_characters(&g).unwrap();
        (g, c)
    }

    #[test]
    fn cycle_index_of_s3() {
        let (s3, c) = chars(Symmetric, 3);
        let unit = cycle_index(&s3, &c[0]).unwrap();
        assert_eq!(
            unit,
            psum(3, &[(&[3], 1, 6), (&[1, 1], 1, 2), (&[0, 0, 1], 1, 3)])
        );
        assert_eq!(unit.to_string(), "(1/6)*p1^3 + (1/2)*p1*p2 + (1/3)*p3");
        let sign = cycle_index(&s3, &c[1]).unwrap();
        assert_eq!(
            sign,
            psum(3, &[(&[3], 1, 6), (&[1, 1], -1, 2), (&[0, 0, 1], 1, 3)])
        );
        assert_eq!(sign.to_string(), "(1/6)*p1^3 - (1/2)*p1*p2 + (1/3)*p3");
        assert_eq!(sign, naive_cycle_index(&s3, &c[1]));
    }

    #[test]
    fn cycle_index_of_c4_faithful() {
        let (c4, c) = chars(Cyclic, 4);
        let z = cycle_index(&c4, &c[1]).unwrap();
        assert_eq!(z, psum(4, &[(&[4], 1, 4), (&[0, 2], -1, 4)]));
        assert_eq!(z, naive_cycle_index(&c4, &c[1]));
        let other = PermGroup::trivial(4).unwrap();
        assert_eq!(
            cycle_index(&other, &c[1]),
            Err(Error::CharacterGroupMismatch)
        );
    }

    #[test]
    fn specializations() {
        let (s3, c) = chars(Symmetric, 3);
        let z = cycle_index(&s3, &c[1]).unwrap();
        assert_eq!(z.specialize(2).unwrap(), elementary_symmetric(3, 2));
        assert_eq!(z.specialize(2).unwrap().to_string(), "x0*x1*x2");

        let (c4, c) = chars(Cyclic, 4);
        let z = cycle_index(&c4, &c[1]).unwrap();
        let g1 = z.specialize(1).unwrap();
        assert_eq!(g1, mono(2, &[(&[3, 1], 1), (&[2, 2], 1), (&[1, 3], 1)]));
        assert_eq!(g1.to_string(), "x0^3*x1 + x0^2*x1^2 + x0*x1^3");

        // n = 0: x0^d for the unit character, 0 otherwise
        for (kind, d) in [(Cyclic, 4), (Symmetric, 3), (Dihedral, 5), (Alternating, 4)] {
            let (g, cs) = chars(kind, d);
            for chi in &cs {
                let s = cycle_index(&g, chi).unwrap().specialize(0).unwrap();
                if chi.is_unit() {
                    assert_eq!(s, mono(1, &[(&[d as u32], 1)]));
                } else {
                    assert!(s.is_zero());
                }
            }
        }
        assert!(matches!(
            cycle_index(&c4, &c[0]).unwrap().specialize_capped(3, 10),
            Err(Error::CapExceeded {
                needed: 35,
                cap: 10
            })
        ));
    }

    #[test]
    fn expansion_oracle_for_c4() {
        // ((x0+x1)^4 - (x0^2+x1^2)^2)/4 expanded by hand via binomials
        let lhs = {
            let mut m = MonomialPoly::zero(2);
            let b4 = [1, 4, 6, 4, 1];
            for k in 0..=4u32 {
                m.add_term(vec![4 - k, k], q(b4[k as usize], 4));
            }
            for (e, c) in [([4u32, 0u32], -1), ([2, 2], -2), ([0, 4], -1)] {
                m.add_term(e.to_vec(), q(c, 4));
            }
            m
        };
        let (c4, c) = chars(Cyclic, 4);
        assert_eq!(cycle_index(&c4, &c[1]).unwrap().specialize(1).unwrap(), lhs);
    }

    #[test]
    fn products() {
        let z2 = psum(2, &[(&[2], 1, 2), (&[0, 1], 1, 2)]);
        assert_eq!(
            z2.mul(&z2),
            psum(4, &[(&[4], 1, 4), (&[2, 1], 1, 2), (&[0, 2], 1, 4)])
        );
        assert!(z2.mul(&PowerSumPoly::zero(0)).is_zero());
        assert_eq!(z2.mul(&PowerSumPoly::one()), z2);
    }

    #[test]
    fn differences() {
        for d in 3..=4 {
            let (a, ca) = chars(Alternating, d);
            let (s, cs) = chars(Symmetric, d);
            let za = cycle_index(&a, &ca[0]).unwrap();
            let zs = cycle_index(&s, &cs[0]).unwrap();
            let eps = cycle_index(&s, &LinearCharacter::sign(s.clone())).unwrap();
            assert_eq!(za.sub(&zs).unwrap(), eps);
            assert!(za.sub(&za).unwrap().is_zero());
        }
        assert_eq!(
            PowerSumPoly::power_sum(2).sub(&PowerSumPoly::power_sum(3)),
            Err(Error::WeightMismatch(2, 3))
        );
    }

    #[test]
    fn insertion() {
        let (s2, c) = chars(Symmetric, 2);
        let z2 = cycle_index(&s2, &c[0]).unwrap();
        let ins = z2.plethysm_insert(&z2).unwrap();
        let expect = psum(
            4,
            &[
                (&[4], 1, 8),
                (&[2, 1], 1, 4),
                (&[0, 2], 3, 8),
                (&[0, 0, 0, 1], 1, 4),
            ],
        );
        assert_eq!(ins, expect);
        assert_eq!(
            ins.to_string(),
            "(1/8)*p1^4 + (1/4)*p1^2*p2 + (3/8)*p2^2 + (1/4)*p4"
        );
        // independent route: the wreath group's own cycle index
        let wr = Arc::new(wreath_embed(&s2, &s2).unwrap());
        let unit = LinearCharacter::unit(wr.clone());
        assert_eq!(cycle_index(&wr, &unit).unwrap(), expect);

        let p1 = PowerSumPoly::power_sum(1);
        assert_eq!(p1.plethysm_insert(&z2).unwrap(), z2);
        assert_eq!(z2.plethysm_insert(&p1).unwrap(), z2);
    }

    #[test]
    fn elementary() {
        assert_eq!(
            elementary_symmetric(2, 2),
            mono(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)])
        );
        assert!(elementary_symmetric(3, 1).is_zero());
        assert_eq!(elementary_symmetric(1, 1).to_string(), "x0 + x1");
        assert_eq!(elementary_symmetric(0, 2).to_string(), "1");
    }

    #[test]
    fn symmetry_predicate() {
        assert!(mono(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)]).is_symmetric());
        assert!(!mono(2, &[(&[2, 1], 1)]).is_symmetric());
        assert!(MonomialPoly::zero(3).is_symmetric());
    }

    #[test]
    fn burnside_at_one() {
        // number of 2-colourings of the square's vertices up to rotation
        let (c4, c) = chars(Cyclic, 4);
        let g = cycle_index(&c4, &c[0]).unwrap().specialize(1).unwrap();
        assert_eq!(g.coefficient_sum(), Cyclotomic::from_integer(6));
        assert_eq!(
            g.to_string(),
            "x0^4 + x0^3*x1 + 2*x0^2*x1^2 + x0*x1^3 + x1^4"
        );
    }

    #[test]
    fn non_rational_coefficients_render() {
        let mut z = PowerSumPoly::zero(1);
        z.add_term(vec![1], Cyclotomic::root_of_unity(3, 1))
            .unwrap();
        assert_eq!(z.to_string(), "(z3)*p1");
        let mut w = PowerSumPoly::zero(0);
        w.add_term(vec![], q(-2, 3)).unwrap();
        assert_eq!(w.to_string(), "-2/3");
        assert_eq!(PowerSumPoly::zero(2).to_string(), "0");
        let _ = Permutation::identity(1);
    }

    proptest::proptest! {
        #[test]
        fn product_is_commutative_and_associative(
            a in proptest::collection::vec((0u32..3, 0u32..2, -3i64..4), 1..4),
            b in proptest::collection::vec((0u32..3, 0u32..2, -3i64..4), 1..4),
            c in proptest::collection::vec((0u32..4, 0u32..1, -3i64..4), 1..4),
        ) {
            // build small isobaric polynomials from (c1, c2) pairs, padding with p_k
            let build = |v: &[(u32, u32, i64)], w: usize| {
                let mut z = PowerSumPoly::zero(w);
                for &(c1, c2, k) in v {
                    let used = c1 as usize + 2 * c2 as usize;
                    if used <= w {
                        let mut e = vec![c1, c2];
                        e.resize(w.max(2), 0);
                        e[0] += (w - used) as u32;
                        z.add_term(e, Cyclotomic::from_integer(k)).unwrap();
                    }
                }
                z
            };
            let (a, b, c) = (build(&a, 5), build(&b, 4), build(&c, 4));
            proptest::prop_assert_eq!(a.mul(&b), b.mul(&a));
            proptest::prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            proptest::prop_assert!(a.mul(&b).is_isobaric());
            proptest::prop_assert_eq!(a.mul(&b).weight(), 9);
            proptest::prop_assert!(b.sub(&b).unwrap().is_zero());
        }
    }
}

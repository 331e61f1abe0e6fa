//! One-dimensional characters of permutation groups.
//!
//! A linear character of a finite group takes values in the roots of unity,
//! so a character is stored as a table of exponents `k` (value `ζ_m^k`)
//! indexed like the elements of its group.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{self, PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct LinearCharacter {
    group: Arc<PermGroup>,
    modulus: u32,
    exponents: Vec<u32>,
}

impl PartialEq for LinearCharacter {
    /// Tables are kept normalized (modulus = order of the image), so equal
    /// characters have identical tables.
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
            && self.exponents == other.exponents
            && *self.group == *other.group
    }
}

impl Eq for LinearCharacter {}

impl LinearCharacter {
    /// Wraps an exponent table, checking it is a homomorphism.
    ///
    /// Checking `χ(s·g) = χ(s)χ(g)` for every generator `s` and element `g`
    /// suffices, since every element is a product of generators.
    pub fn from_exponents(
        group: Arc<PermGroup>,
        modulus: u32,
        exponents: Vec<u32>,
    ) -> Result<Self> {
        if exponents.len() != group.order() {
            return Err(Error::CharacterGroupMismatch);
        }
        if modulus == 0 {
            return Err(Error::NotAHomomorphism("modulus 0".into()));
        }
        let exponents: Vec<u32> = exponents.into_iter().map(|k| k % modulus).collect();
        if exponents[0] != 0 {
            return Err(Error::NotAHomomorphism(format!(
                "identity maps to ζ_{modulus}^{}",
                exponents[0]
            )));
        }
        for s in group.generators() {
            let si = group.index_of(s).expect("generator is an element");
            for (g, eg) in exponents.iter().enumerate() {
                let sg = group.mul_index(si, g);
                if exponents[sg] != (exponents[si] + eg) % modulus {
                    return Err(Error::NotAHomomorphism(format!(
                        "value at {} · {} differs from the product of values",
                        s,
                        group.elements()[g]
                    )));
                }
            }
        }
        Ok(LinearCharacter {
            group,
            modulus,
            exponents,
        }
        .normalized())
    }

    /// The unit character `1_G`.
    pub fn unit(group: Arc<PermGroup>) -> Self {
        let n = group.order();
        LinearCharacter {
            group,
            modulus: 1,
            exponents: alloc::vec![0; n],
        }
    }

    /// `ε(σ) = (−1)^{d − #cycles(σ)}` restricted to `group`.
    pub fn sign(group: Arc<PermGroup>) -> Self {
        let exponents = group
            .elements()
            .iter()
            .map(|g| if g.sign() == 1 { 0 } else { 1 })
            .collect();
        LinearCharacter {
            group,
            modulus: 2,
            exponents,
        }
        .normalized()
    }

    /// Extends values prescribed on the generators (exponents modulo
    /// `modulus`, in generator order) to the whole group.
    pub fn from_generator_values(
        group: Arc<PermGroup>,
        modulus: u32,
        values: &[u32],
    ) -> Result<Self> {
        if values.len() != group.generators().len() {
            return Err(Error::NotAHomomorphism(format!(
                "{} generator values given for {} generators",
                values.len(),
                group.generators().len()
            )));
        }
        let mut exps: Vec<Option<u32>> = alloc::vec![None; group.order()];
        exps[0] = Some(0);
        let mut queue = alloc::collections::VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            let eg = exps[g].unwrap();
            for (s, &v) in group.generators().iter().zip(values) {
                let si = group.index_of(s).unwrap();
                let sg = group.mul_index(si, g);
                let val = (eg + v) % modulus;
                match exps[sg] {
                    None => {
                        exps[sg] = Some(val);
                        queue.push_back(sg);
                    }
                    Some(prev) if prev != val => {
                        return Err(Error::NotAHomomorphism(format!(
                            "generator values do not extend consistently at {}",
                            group.elements()[sg]
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let exps = exps.into_iter().map(|e| e.unwrap()).collect();
        Self::from_exponents(group, modulus, exps)
    }

    /// Shrinks the modulus to the order of the image.
    fn normalized(mut self) -> Self {
        let g = self
            .exponents
            .iter()
            .fold(self.modulus, |acc, &k| acc.gcd(&k));
        if g > 1 {
            self.modulus /= g;
            for k in &mut self.exponents {
                *k /= g;
            }
        }
        self
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    /// `m` such that every value is an `m`-th root of unity; equal to the
    /// order of the image.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent_at(&self, index: usize) -> u32 {
        self.exponents[index]
    }

    pub fn exponent_of(&self, g: &Permutation) -> Option<u32> {
        self.group.index_of(g).map(|i| self.exponents[i])
    }

    pub fn value_at(&self, index: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.modulus, self.exponents[index] as i64)
    }

    pub fn value(&self, g: &Permutation) -> Option<Cyclotomic> {
        self.group.index_of(g).map(|i| self.value_at(i))
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    /// `χ^{-1}`, the complex conjugate character.
    pub fn inverse(&self) -> Self {
        LinearCharacter {
            group: self.group.clone(),
            modulus: self.modulus,
            exponents: self
                .exponents
                .iter()
                .map(|&k| (self.modulus - k) % self.modulus)
                .collect(),
        }
    }

    /// `ker χ = {g : χ(g) = 1}`.
    pub fn kernel(&self) -> Result<PermGroup> {
        let members: Vec<Permutation> = self
            .group
            .elements()
            .iter()
            .zip(&self.exponents)
            .filter(|(_, &k)| k == 0)
            .map(|(g, _)| g.clone())
            .collect();
        self.group.subgroup_from_elements(&members)
    }

    /// Exhaustive check of `χ(gh) = χ(g)χ(h)` over all pairs.
    pub fn is_homomorphism_exhaustive(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.exponents[self.group.mul_index(a, b)]
                    == (self.exponents[a] + self.exponents[b]) % self.modulus
            })
        })
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, sub: Arc<PermGroup>) -> Result<Self> {
        let exps = sub
            .elements()
            .iter()
            .map(|g| self.exponent_of(g).ok_or(Error::NotASubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearCharacter {
            group: sub,
            modulus: self.modulus,
            exponents: exps,
        }
        .normalized())
    }
}

/// Finite abelian quotient `G/[G,G]` given by its coset multiplication.
struct Abelianization {
    coset_of: Vec<usize>,
    table: Vec<Vec<usize>>,
}

impl Abelianization {
    fn new(group: &PermGroup) -> Result<Self> {
        let derived = group.derived_subgroup()?;
        let n = group.order();
        let mut coset_of = alloc::vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            let gp = &group.elements()[g];
            for d in derived.elements() {
                let idx = group.index_of(&gp.compose_unchecked(d)).unwrap();
                coset_of[idx] = id;
            }
        }
        let table = reps
            .iter()
            .map(|&a| {
                reps.iter()
                    .map(|&b| coset_of[group.mul_index(a, b)])
                    .collect()
            })
            .collect();
        Ok(Abelianization { coset_of, table })
    }

    fn order(&self) -> usize {
        self.table.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Splits the quotient into cyclic factors, largest first. Returns the
    /// basis elements with their orders, and for each coset its coordinates
    /// in that basis.
    fn cyclic_decomposition(&self) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
        let q = self.order();
        // span[x] = coordinates of x in the current basis, if x is in the span
        let mut span: Vec<Option<Vec<usize>>> = alloc::vec![None; q];
        span[0] = Some(Vec::new());
        let mut basis: Vec<(usize, usize)> = Vec::new();
        loop {
            let members: Vec<usize> = (0..q).filter(|&x| span[x].is_some()).collect();
            if members.len() == q {
                break;
            }
            // element of largest order modulo the span
            let rel_order = |x: usize| {
                let mut y = x;
                let mut k = 1;
                while span[y].is_none() {
                    y = self.mul(y, x);
                    k += 1;
                }
                (k, y)
            };
            let (x, k, xk) = (0..q)
                .filter(|&x| span[x].is_none())
                .map(|x| {
                    let (k, y) = rel_order(x);
                    (x, k, y)
                })
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .unwrap();
            // adjust x by a span element s with (x s)^k = 1, i.e. s^k = x^{-k}
            let x_inv_k = (0..q).find(|&y| self.mul(y, xk) == 0).unwrap();
            let s = members
                .iter()
                .copied()
                .find(|&s| self.pow(s, k) == x_inv_k)
                .expect("a maximal-order element splits off");
            let gen = self.mul(x, s);
            debug_assert_eq!(self.element_order(gen), k);
            let old: Vec<(usize, Vec<usize>)> = members
                .iter()
                .map(|&m| (m, span[m].clone().unwrap()))
                .collect();
            let mut power = 0usize;
            for e in 0..k {
                for (m, coords) in &old {
                    let y = self.mul(*m, power);
                    let mut c = coords.clone();
                    c.push(e);
                    span[y] = Some(c);
                }
                power = self.mul(power, gen);
            }
            for c in span.iter_mut().flatten() {
                c.resize(basis.len() + 1, 0);
            }
            basis.push((gen, k));
        }
        let coords = span.into_iter().map(Option::unwrap).collect();
        (basis, coords)
    }
}

/// All linear characters of `group`, the unit character first.
///
/// Characters factor through `G/[G,G]`; the quotient is split into cyclic
/// factors `⟨b_1⟩ × … × ⟨b_k⟩` and every assignment `b_i ↦ ζ_{o_i}^{a_i}`
/// gives one character. Assignments are enumerated lexicographically in
/// `(a_1, …, a_k)`.
pub fn enumerate_linear_characters(group: &Arc<PermGroup>) -> Result<Vec<LinearCharacter>> {
    let ab = Abelianization::new(group)?;
    let (basis, coords) = ab.cyclic_decomposition();
    let modulus = basis.iter().fold(1usize, |acc, &(_, o)| acc.lcm(&o)) as u32;
    let orders: Vec<usize> = basis.iter().map(|&(_, o)| o).collect();
    let mut out = Vec::new();
    let mut assignment = alloc::vec![0usize; orders.len()];
    loop {
        let coset_exp: Vec<u32> = coords
            .iter()
            .map(|c| {
                let s: usize = c
                    .iter()
                    .zip(&assignment)
                    .zip(&orders)
                    .map(|((&e, &a), &o)| e * a * (modulus as usize / o))
                    .sum();
                (s % modulus as usize) as u32
            })
            .collect();
        let exps = ab.coset_of.iter().map(|&c| coset_exp[c]).collect();
        out.push(LinearCharacter::from_exponents(
            group.clone(),
            modulus,
            exps,
        )?);
        // odometer, last coordinate fastest
        let mut i = orders.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            assignment[i] += 1;
            if assignment[i] < orders[i] {
                break;
            }
            assignment[i] = 0;
        }
    }
}

/// `λ = χ ⊗ θ` on the embedded direct product `W × V`.
pub fn product_character(
    chi: &LinearCharacter,
    theta: &LinearCharacter,
    product: Arc<PermGroup>,
) -> Result<LinearCharacter> {
    let d = chi.group.degree();
    let m = chi.modulus.lcm(&theta.modulus);
    let exps = product
        .elements()
        .iter()
        .map(|g| {
            let (s, t) = perm::split_pair(g, d)?;
            let a = chi.exponent_of(&s).ok_or(Error::NotDecomposable)?;
            let b = theta.exponent_of(&t).ok_or(Error::NotDecomposable)?;
            Ok((a * (m / chi.modulus) + b * (m / theta.modulus)) % m)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearCharacter::from_exponents(product, m, exps)
}

/// `μ = θ^{⊗d} ⊗ χ` on `V ≀ W`: `μ(g) = χ(σ) Π_s θ(τ_s)` for
/// `g = (σ; τ_1, …, τ_d)`.
pub fn wreath_character(
    theta: &LinearCharacter,
    chi: &LinearCharacter,
    wreath: Arc<PermGroup>,
) -> Result<LinearCharacter> {
    let m = chi.modulus.lcm(&theta.modulus);
    let exps = wreath
        .elements()
        .iter()
        .map(|g| {
            let (sigma, taus) = perm::decompose_wreath_element(g, &theta.group, &chi.group)?;
            let mut e = chi.exponent_of(&sigma).unwrap() * (m / chi.modulus);
            for t in &taus {
                e += theta.exponent_of(t).unwrap() * (m / theta.modulus);
            }
            Ok(e % m)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearCharacter::from_exponents(wreath, m, exps)
}

/// Order of the abelianization, `|G/[G,G]|`.
pub fn abelianization_order(group: &PermGroup) -> Result<usize> {
    Ok(group.order() / group.derived_subgroup()?.order())
}

/// Groups the characters by value table; used to spot duplicates.
pub fn distinct_tables(chars: &[LinearCharacter]) -> usize {
    let mut seen: BTreeMap<Vec<(u32, u32)>, ()> = BTreeMap::new();
    for c in chars {
        let key = c
            .exponents
            .iter()
            .map(|&k| {
                let g = k.gcd(&c.modulus);
                (k / g, c.modulus / g)
            })
            .collect();
        seen.insert(key, ());
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{direct_product_embed, named_group, wreath_embed, GroupKind::*};

    fn group(kind: crate::perm::GroupKind, d: usize) -> Arc<PermGroup> {
        Arc::new(named_group(kind, d).unwrap())
    }

    fn p(text: &str, d: usize) -> Permutation {
        Permutation::from_cycles(text, d).unwrap()
    }

    #[test]
    fn character_counts() {
        let s3 = group(Symmetric, 3);
        let chars = enumerate_linear_characters(&s3).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_unit());
        assert_eq!(chars[1], LinearCharacter::sign(s3.clone()));

        let c4 = group(Cyclic, 4);
        let chars = enumerate_linear_characters(&c4).unwrap();
        assert_eq!(chars.len(), 4);
        assert!(chars.iter().all(|c| 4 % c.modulus() == 0));
        // index 1 sends the generating 4-cycle to ζ₄
        assert_eq!(
            chars[1].value(&p("(1 2 3 4)", 4)).unwrap(),
            Cyclotomic::root_of_unity(4, 1)
        );

        let a4 = group(Alternating, 4);
        let chars = enumerate_linear_characters(&a4).unwrap();
        assert_eq!(chars.len(), 3);
        assert!(chars.iter().all(|c| 3 % c.modulus() == 0));
    }

    #[test]
    fn enumeration_matches_abelianization() {
        let groups = [
            group(Cyclic, 6),
            group(Dihedral, 4),
            group(Dihedral, 6),
            group(Symmetric, 4),
            group(Alternating, 5),
            Arc::new(
                direct_product_embed(
                    &named_group(Cyclic, 2).unwrap(),
                    &named_group(Cyclic, 4).unwrap(),
                )
                .unwrap(),
            ),
            Arc::new(
                direct_product_embed(
                    &named_group(Cyclic, 3).unwrap(),
                    &named_group(Cyclic, 3).unwrap(),
                )
                .unwrap(),
            ),
            Arc::new(
                wreath_embed(
                    &named_group(Symmetric, 2).unwrap(),
                    &named_group(Cyclic, 3).unwrap(),
                )
                .unwrap(),
            ),
        ];
        for g in &groups {
            let chars = enumerate_linear_characters(g).unwrap();
            assert_eq!(chars.len(), abelianization_order(g).unwrap());
            assert_eq!(distinct_tables(&chars), chars.len());
            assert!(chars[0].is_unit());
            for c in &chars {
                if g.order() <= 200 {
                    assert!(c.is_homomorphism_exhaustive());
                }
                // column orthogonality for the one-dimensional slice
                let total = (0..g.order())
                    .map(|i| c.value_at(i))
                    .fold(Cyclotomic::zero(), |a, b| &a + &b);
                let expect = if c.is_unit() { g.order() as i64 } else { 0 };
                assert_eq!(total, Cyclotomic::from_integer(expect));
                for i in 0..g.order() {
                    assert!(c.value_at(i).pow(c.modulus()).is_one());
                }
            }
        }
    }

    #[test]
    fn sign_values() {
        let s3 = group(Symmetric, 3);
        let eps = LinearCharacter::sign(s3);
        assert_eq!(
            eps.value(&p("(1 2)", 3)).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        assert_eq!(eps.value(&p("", 3)).unwrap(), Cyclotomic::one());
        assert_eq!(eps.value(&p("(1 2 3)", 3)).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn kernels() {
        let s3 = group(Symmetric, 3);
        let k = LinearCharacter::sign(s3.clone()).kernel().unwrap();
        assert_eq!(k, named_group(Alternating, 3).unwrap());
        assert_eq!(
            LinearCharacter::unit(s3.clone()).kernel().unwrap().order(),
            6
        );
        let c4 = group(Cyclic, 4);
        let faithful = &enumerate_linear_characters(&c4).unwrap()[1];
        assert_eq!(faithful.kernel().unwrap().order(), 1);
        for c in enumerate_linear_characters(&group(Dihedral, 6)).unwrap() {
            let k = c.kernel().unwrap();
            assert!(k.is_normal_in(c.group()));
            assert_eq!(c.group().order() / k.order(), c.modulus() as usize);
        }
    }

    #[test]
    fn product_characters() {
        let s2 = group(Symmetric, 2);
        let prod = Arc::new(direct_product_embed(&s2, &s2).unwrap());
        let eps = LinearCharacter::sign(s2.clone());
        let one = LinearCharacter::unit(s2.clone());
        let ee = product_character(&eps, &eps, prod.clone()).unwrap();
        assert!(ee.value(&p("", 4)).unwrap().is_one());
        assert!(ee.value(&p("(1 2)(3 4)", 4)).unwrap().is_one());
        let e1 = product_character(&eps, &one, prod.clone()).unwrap();
        assert_eq!(
            e1.value(&p("(1 2)", 4)).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        assert!(e1.is_homomorphism_exhaustive());
        // a group that is not the embedded product
        let bad = Arc::new(PermGroup::closure(4, &[p("(1 3)", 4)]).unwrap());
        assert_eq!(
            product_character(&eps, &one, bad),
            Err(Error::NotDecomposable)
        );
    }

    #[test]
    fn wreath_characters() {
        let s2 = group(Symmetric, 2);
        let wr = Arc::new(wreath_embed(&s2, &s2).unwrap());
        let eps = LinearCharacter::sign(s2.clone());
        let one = LinearCharacter::unit(s2.clone());
        let mu = wreath_character(&eps, &one, wr.clone()).unwrap();
        assert!(mu.value(&p("", 4)).unwrap().is_one());
        assert_eq!(
            mu.value(&p("(1 2)", 4)).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        let mu = wreath_character(&one, &eps, wr.clone()).unwrap();
        assert_eq!(
            mu.value(&p("(1 3)(2 4)", 4)).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        assert!(mu.is_homomorphism_exhaustive());
        let c3 = group(Cyclic, 3);
        let wr = Arc::new(wreath_embed(&c3, &s2).unwrap());
        for th in enumerate_linear_characters(&c3).unwrap() {
            for ch in [&eps, &one] {
                assert!(wreath_character(&th, ch, wr.clone())
                    .unwrap()
                    .is_homomorphism_exhaustive());
            }
        }
    }

    #[test]
    fn generator_values_extend() {
        let c4 = group(Cyclic, 4);
        let chi = LinearCharacter::from_generator_values(c4.clone(), 4, &[1]).unwrap();
        assert_eq!(chi, enumerate_linear_characters(&c4).unwrap()[1]);
        let s3 = group(Symmetric, 3);
        // transposition ↦ -1 but 3-cycle ↦ ζ₃ is inconsistent
        assert!(matches!(
            LinearCharacter::from_generator_values(s3.clone(), 6, &[3, 2]),
            Err(Error::NotAHomomorphism(_))
        ));
        let eps = LinearCharacter::from_generator_values(s3.clone(), 2, &[1, 0]).unwrap();
        assert_eq!(eps, LinearCharacter::sign(s3));
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let c4 = group(Cyclic, 4);
        let mut exps = enumerate_linear_characters(&c4).unwrap()[1]
            .exponents()
            .to_vec();
        exps[2] = (exps[2] + 1) % 4;
        assert!(matches!(
            LinearCharacter::from_exponents(c4, 4, exps),
            Err(Error::NotAHomomorphism(_))
        ));
    }
}

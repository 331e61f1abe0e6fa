//! Permutations of `{1,…,d}` and explicitly listed permutation groups.
//!
//! Points are written 1-based in cycle notation and in every public
//! accessor that says so; the image table itself is stored 0-based.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest group the crate will list element by element.
pub const MAX_GROUP_ORDER: usize = 50_000;

/// A bijection of `{1,…,d}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        let mut seen = alloc::vec![false; d];
        for &x in &images {
            let x = x as usize;
            if x >= d {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree: d,
                });
            }
            if seen[x] {
                return Err(Error::RepeatedPoint(x + 1));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 3, 1]` for `(1 2 3)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut zero = Vec::with_capacity(d);
        for &x in images {
            if x == 0 || x > d {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: d,
                });
            }
            zero.push((x - 1) as u32);
        }
        Self::from_images(zero)
    }

    /// Parses disjoint-cycle notation such as `(1 2)(3 4)`; `""` and `"()"`
    /// denote the identity. Commas between points are accepted.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = alloc::vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Malformed(String::from(text)))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Malformed(String::from(text)))?;
            let mut cycle = Vec::new();
            for tok in body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Malformed(String::from(text)))?;
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(Error::RepeatedPoint(p));
                }
                used[p - 1] = true;
                cycle.push(p - 1);
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image table, `images[s-1] = σ(s)`.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Image of the 0-based point `p`.
    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `a ∘ b`: apply `b` first, then `a`.
    pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch(a.degree(), b.degree()));
        }
        Ok(a.compose_unchecked(b))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, b: &Permutation) -> Permutation {
        Permutation {
            images: b.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Cycles as 0-based point lists, each starting at its smallest point.
    /// Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = alloc::vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// `(c₁,…,c_d)` where `c_s` counts cycles of length `s`.
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut ct = alloc::vec![0u32; self.degree()];
        for c in self.cycles() {
            ct[c.len() - 1] += 1;
        }
        ct
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1usize, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let ncycles = self.cycles().len();
        if (self.degree() - ncycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A finite permutation group stored as an explicit element list.
///
/// Elements are enumerated breadth-first from the identity, multiplying by
/// the generators in order, so the listing is reproducible.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Smallest group containing `generators`, listed breadth-first.
    pub fn closure(degree: usize, generators: &[Permutation]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let id = Permutation::identity(degree);
        let mut index = BTreeMap::new();
        let mut elements = alloc::vec![id.clone()];
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = g.compose_unchecked(&elements[i]);
                if !index.contains_key(&next) {
                    if elements.len() >= MAX_GROUP_ORDER {
                        return Err(Error::GroupTooLarge(MAX_GROUP_ORDER));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements,
            generators: gens,
            index,
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::closure(degree, &[])
    }

    /// The subgroup consisting of exactly `members`, which must be closed
    /// under composition. A small generating set is picked greedily.
    pub fn subgroup_from_elements(&self, members: &[Permutation]) -> Result<Self> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree)?;
        for m in members {
            if m.degree() != self.degree {
                return Err(Error::DegreeMismatch(self.degree, m.degree()));
            }
            if !current.contains(m) {
                gens.push(m.clone());
                current = PermGroup::closure(self.degree, &gens)?;
            }
        }
        if current.order() != members.len() {
            return Err(Error::NotASubgroup);
        }
        Ok(current)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose_unchecked(&self.elements[b]);
        self.index[&p]
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// True when conjugation by every element of `ambient` preserves `self`.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient.generators.iter().all(|g| {
                let gi = g.inverse();
                self.generators
                    .iter()
                    .all(|h| self.contains(&gi.compose_unchecked(h).compose_unchecked(g)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// Commutator subgroup `[G,G]`: the normal closure of the commutators of
    /// generator pairs.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut seeds: Vec<Permutation> = Vec::new();
        for a in &self.generators {
            let ai = a.inverse();
            for b in &self.generators {
                let c = ai
                    .compose_unchecked(&b.inverse())
                    .compose_unchecked(a)
                    .compose_unchecked(b);
                if !c.is_identity() && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        let mut sub = PermGroup::closure(self.degree, &seeds)?;
        loop {
            let mut grew = false;
            for g in &self.generators {
                let gi = g.inverse();
                for h in sub.generators.clone() {
                    let conj = gi.compose_unchecked(&h).compose_unchecked(g);
                    if !sub.contains(&conj) {
                        seeds.push(conj);
                        sub = PermGroup::closure(self.degree, &seeds)?;
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(sub);
            }
        }
    }
}

/// Catalog of standard permutation groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
}

fn long_cycle(degree: usize, from: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for p in from..degree {
        images[p] = if p + 1 == degree {
            from as u32
        } else {
            p as u32 + 1
        };
    }
    Permutation { images }
}

fn transposition(degree: usize, a: usize, b: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.swap(a, b);
    Permutation { images }
}

/// `S(d)`, `A(d)`, `C(d)`, `D(d)` acting naturally on `{1,…,d}`.
pub fn named_group(kind: GroupKind, degree: usize) -> Result<PermGroup> {
    if degree == 0 {
        return Err(Error::UnsupportedDegree(degree));
    }
    let gens = match kind {
        GroupKind::Symmetric if degree >= 2 => {
            alloc::vec![transposition(degree, 0, 1), long_cycle(degree, 0)]
        }
        GroupKind::Alternating => (2..degree)
            .map(|k| {
                let mut images: Vec<u32> = (0..degree as u32).collect();
                images[0] = 1;
                images[1] = k as u32;
                images[k] = 0;
                Permutation { images }
            })
            .collect(),
        GroupKind::Cyclic => alloc::vec![long_cycle(degree, 0)],
        GroupKind::Dihedral => {
            if degree < 3 {
                return Err(Error::UnsupportedDegree(degree));
            }
            let reflection = Permutation {
                images: (0..degree as u32).rev().collect(),
            };
            alloc::vec![long_cycle(degree, 0), reflection]
        }
        GroupKind::Symmetric => Vec::new(),
    };
    PermGroup::closure(degree, &gens)
}

/// `W × V` inside `S_{d+r}`: `s ↦ σ(s)` on the first `d` points,
/// `d+t ↦ d+τ(t)` on the rest.
pub fn direct_product_embed(w: &PermGroup, v: &PermGroup) -> Result<PermGroup> {
    let (d, r) = (w.degree(), v.degree());
    let gens: Vec<Permutation> = w
        .generators()
        .iter()
        .map(|s| embed_pair(s, &Permutation::identity(r)))
        .chain(
            v.generators()
                .iter()
                .map(|t| embed_pair(&Permutation::identity(d), t)),
        )
        .collect();
    PermGroup::closure(d + r, &gens)
}

/// The permutation `(σ, τ)` of `{1,…,d+r}`.
pub fn embed_pair(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let d = sigma.degree() as u32;
    let images = sigma
        .images
        .iter()
        .copied()
        .chain(tau.images.iter().map(|&t| d + t))
        .collect();
    Permutation { images }
}

/// Inverse of [`embed_pair`]; fails if `g` mixes the two blocks.
pub fn split_pair(g: &Permutation, d: usize) -> Result<(Permutation, Permutation)> {
    let imgs = g.images();
    if imgs.len() < d
        || imgs[..d].iter().any(|&x| x as usize >= d)
        || imgs[d..].iter().any(|&x| (x as usize) < d)
    {
        return Err(Error::NotDecomposable);
    }
    let sigma = Permutation {
        images: imgs[..d].to_vec(),
    };
    let tau = Permutation {
        images: imgs[d..].iter().map(|&x| x - d as u32).collect(),
    };
    Ok((sigma, tau))
}

/// `V ≀ W` inside `S_{dr}`, with `d` blocks of `r` consecutive points.
///
/// Generated by every generator of `V` acting inside each block and every
/// generator of `W` permuting whole blocks.
pub fn wreath_embed(v: &PermGroup, w: &PermGroup) -> Result<PermGroup> {
    let (r, d) = (v.degree(), w.degree());
    let mut gens = Vec::new();
    for block in 0..d {
        for t in v.generators() {
            let mut images: Vec<u32> = (0..(d * r) as u32).collect();
            for p in 0..r {
                images[block * r + p] = (block * r + t.apply(p)) as u32;
            }
            gens.push(Permutation { images });
        }
    }
    for s in w.generators() {
        gens.push(wreath_element(s, &alloc::vec![Permutation::identity(r); d]));
    }
    PermGroup::closure(d * r, &gens)
}

/// The permutation `(s−1)r+t ↦ (σ(s)−1)r+τ_s(t)` of `{1,…,dr}`.
pub fn wreath_element(sigma: &Permutation, taus: &[Permutation]) -> Permutation {
    let d = sigma.degree();
    let r = taus.first().map_or(0, Permutation::degree);
    let mut images = alloc::vec![0u32; d * r];
    for s in 0..d {
        for t in 0..r {
            images[s * r + t] = (sigma.apply(s) * r + taus[s].apply(t)) as u32;
        }
    }
    Permutation { images }
}

/// Splits an element of `V ≀ W` into its block permutation `σ ∈ W` and the
/// within-block maps `τ_1,…,τ_d ∈ V`.
pub fn decompose_wreath_element(
    g: &Permutation,
    v: &PermGroup,
    w: &PermGroup,
) -> Result<(Permutation, Vec<Permutation>)> {
    let (r, d) = (v.degree(), w.degree());
    if g.degree() != d * r {
        return Err(Error::DegreeMismatch(d * r, g.degree()));
    }
    let mut sigma = Vec::with_capacity(d);
    let mut taus = Vec::with_capacity(d);
    for s in 0..d {
        let target = g.apply(s * r) / r;
        let mut tau = Vec::with_capacity(r);
        for t in 0..r {
            let img = g.apply(s * r + t);
            if img / r != target {
                return Err(Error::NotDecomposable);
            }
            tau.push((img % r) as u32);
        }
        sigma.push(target as u32);
        taus.push(Permutation::from_images(tau).map_err(|_| Error::NotDecomposable)?);
    }
    let sigma = Permutation::from_images(sigma).map_err(|_| Error::NotDecomposable)?;
    if !w.contains(&sigma) || taus.iter().any(|t| !v.contains(t)) {
        return Err(Error::NotDecomposable);
    }
    Ok((sigma, taus))
}

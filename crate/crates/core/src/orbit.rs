//! Orbits of a permutation group on the hypercube `[0,n]^d`.
//!
//! Coordinates are 0-based values in `[0,n]`; positions are the points the
//! group permutes. `σ` sends `(j_1, …, j_d)` to `(j_{σ⁻¹(1)}, …, j_{σ⁻¹(d)})`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::character::LinearCharacter;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::symfun::{cycle_index, MonomialPoly};
use crate::Caps;

/// A configuration `(j_1, …, j_d)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HypercubePoint(Vec<u32>);

impl HypercubePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        HypercubePoint(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// `σ·j`, so that `(j_{σ⁻¹(1)}, …)` is the result.
    pub fn act(&self, sigma: &Permutation) -> HypercubePoint {
        let mut out = alloc::vec![0u32; self.0.len()];
        for (s, &v) in self.0.iter().enumerate() {
            out[sigma.apply(s)] = v;
        }
        HypercubePoint(out)
    }

    /// Exponent vector of the weight `x_{j_1} ⋯ x_{j_d}`.
    pub fn multidegree(&self, nvars: usize) -> Vec<u32> {
        let mut m = alloc::vec![0u32; nvars];
        for &v in &self.0 {
            m[v as usize] += 1;
        }
        m
    }

    pub fn max_coord(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for HypercubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// The points of `[0,n]^d`, indexed in lexicographic order by their
/// mixed-radix code.
#[derive(Clone, Copy, Debug)]
pub struct Hypercube {
    pub n: u32,
    pub d: usize,
}

impl Hypercube {
    pub fn len(&self) -> u128 {
        (self.n as u128 + 1).pow(self.d as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn encode(&self, p: &HypercubePoint) -> usize {
        let base = self.n as usize + 1;
        p.0.iter().fold(0usize, |acc, &v| acc * base + v as usize)
    }

    pub fn decode(&self, mut code: usize) -> HypercubePoint {
        let base = self.n as usize + 1;
        let mut v = alloc::vec![0u32; self.d];
        for slot in v.iter_mut().rev() {
            *slot = (code % base) as u32;
            code /= base;
        }
        HypercubePoint(v)
    }

    pub fn points(&self) -> impl Iterator<Item = HypercubePoint> + '_ {
        (0..self.len() as usize).map(move |c| self.decode(c))
    }
}

/// One `W`-orbit on `[0,n]^d`, with its `χ`- and `H`-orbit annotations.
///
/// Freshly enumerated records describe the unit character: every orbit is
/// a `χ`-orbit and `H = W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Lexicographically smallest point of the orbit.
    pub rep: HypercubePoint,
    pub size: usize,
    /// Indices (into the group's element list) of the stabilizer of `rep`.
    pub stabilizer: Vec<usize>,
    pub is_chi_orbit: bool,
    /// Number of `H`-orbits inside this orbit.
    pub tau_h: usize,
    /// Common length of those `H`-orbits.
    pub h_orbit_length: usize,
}

impl OrbitRecord {
    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len()
    }
}

/// All `W`-orbits on `[0,n]^d`, sorted by representative.
///
/// Points are scanned in lexicographic order and each unvisited point is
/// flooded with the whole group, so it is the lex-min point of its orbit.
pub fn enumerate_orbits(w: &PermGroup, n: u32, caps: &Caps) -> Result<Vec<OrbitRecord>> {
    let cube = Hypercube { n, d: w.degree() };
    let work = cube.len().saturating_mul(w.order() as u128);
    if work > caps.orbit_work {
        return Err(Error::CapExceeded {
            needed: work,
            cap: caps.orbit_work,
        });
    }
    let total = cube.len() as usize;
    let mut visited = alloc::vec![false; total];
    let mut records = Vec::new();
    for code in 0..total {
        if visited[code] {
            continue;
        }
        let rep = cube.decode(code);
        let mut size = 0;
        let mut stabilizer = Vec::new();
        for (gi, g) in w.elements().iter().enumerate() {
            let img = rep.act(g);
            let c = cube.encode(&img);
            if c == code {
                stabilizer.push(gi);
            }
            if !visited[c] {
                visited[c] = true;
                size += 1;
            }
        }
        records.push(OrbitRecord {
            rep,
            size,
            stabilizer,
            is_chi_orbit: true,
            tau_h: 1,
            h_orbit_length: size,
        });
    }
    Ok(records)
}

/// Marks the orbits on which `χ` is trivial on the stabilizer.
pub fn chi_orbit_filter(records: &mut [OrbitRecord], chi: &LinearCharacter) {
    for r in records {
        r.is_chi_orbit = r.stabilizer.iter().all(|&g| chi.exponent_at(g) == 0);
    }
}

/// Splits each `W`-orbit into `H`-orbits and checks that they all have
/// the same length, and that
/// `|W:H|·|H:H_i| = |W:W_i|·|W_i:H_i|` holds at the representative.
pub fn h_orbit_census(records: &mut [OrbitRecord], w: &PermGroup, h: &PermGroup) -> Result<()> {
    if !h.is_subgroup_of(w) {
        return Err(Error::NotASubgroup);
    }
    for r in records.iter_mut() {
        let mut orbit: Vec<HypercubePoint> = w.elements().iter().map(|g| r.rep.act(g)).collect();
        orbit.sort();
        orbit.dedup();
        let mut assigned = alloc::vec![false; orbit.len()];
        let mut lengths = Vec::new();
        for start in 0..orbit.len() {
            if assigned[start] {
                continue;
            }
            let mut len = 0;
            let mut sub: Vec<HypercubePoint> =
                h.elements().iter().map(|g| orbit[start].act(g)).collect();
            sub.sort();
            sub.dedup();
            for p in &sub {
                let idx = orbit.binary_search(p).map_err(|_| {
                    Error::IdentityViolated(format!(
                        "H-orbit of {} leaves the W-orbit",
                        orbit[start]
                    ))
                })?;
                assigned[idx] = true;
                len += 1;
            }
            lengths.push(len);
        }
        if lengths.iter().any(|&l| l != lengths[0]) {
            return Err(Error::IdentityViolated(format!(
                "H-orbits in the orbit of {} have lengths {:?}",
                r.rep, lengths
            )));
        }
        let w_order = w.order();
        let h_order = h.order();
        let wi = r.stabilizer.len();
        let hi = r
            .stabilizer
            .iter()
            .filter(|&&g| h.contains(&w.elements()[g]))
            .count();
        // orbit[0] is the representative, so lengths[0] = |H:H_i| and
        // orbit.len() = |W:W_i|
        let lhs = (w_order / h_order) * lengths[0];
        let rhs = orbit.len() * (wi / hi);
        if lhs != rhs || w_order % h_order != 0 || wi % hi != 0 || orbit.len() != r.size {
            return Err(Error::IdentityViolated(format!(
                "index identity fails at {}: {} vs {}",
                r.rep, lhs, rhs
            )));
        }
        r.tau_h = lengths.len();
        r.h_orbit_length = lengths[0];
    }
    Ok(())
}

/// Enumerates orbits and annotates them for `χ` and `H = ker χ`.
pub fn orbit_census(
    w: &PermGroup,
    chi: &LinearCharacter,
    n: u32,
    caps: &Caps,
) -> Result<Vec<OrbitRecord>> {
    if chi.group().as_ref() != w {
        return Err(Error::CharacterGroupMismatch);
    }
    let mut records = enumerate_orbits(w, n, caps)?;
    chi_orbit_filter(&mut records, chi);
    let h = chi.kernel()?;
    h_orbit_census(&mut records, w, &h)?;
    Ok(records)
}

/// `J(n,d,χ)`: lex-min representatives of the `χ`-orbits on `[0,n]^d`.
pub fn index_set_j(
    w: &PermGroup,
    chi: &LinearCharacter,
    n: u32,
    caps: &Caps,
) -> Result<Vec<HypercubePoint>> {
    if chi.group().as_ref() != w {
        return Err(Error::CharacterGroupMismatch);
    }
    let mut records = enumerate_orbits(w, n, caps)?;
    chi_orbit_filter(&mut records, chi);
    Ok(records
        .into_iter()
        .filter(|r| r.is_chi_orbit)
        .map(|r| r.rep)
        .collect())
}

/// `g_n(χ; x_0, …, x_n) = Σ_{j ∈ J(n,d,χ)} x_{j_1} ⋯ x_{j_d}`.
pub fn weighted_sum_g(
    w: &PermGroup,
    chi: &LinearCharacter,
    n: u32,
    caps: &Caps,
) -> Result<MonomialPoly> {
    let nvars = n as usize + 1;
    let mut g = MonomialPoly::zero(nvars);
    for j in index_set_j(w, chi, n, caps)? {
        g.add_term(j.multidegree(nvars), Cyclotomic::one());
    }
    Ok(g)
}

/// Both sides of `g_n(χ) = Z(χ; p_1, …, p_d)` with `p_s` the power sums of
/// `x_0, …, x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremReport {
    /// Weighted sum over `χ`-orbit representatives.
    pub lhs: MonomialPoly,
    /// Specialized generalized cycle index.
    pub rhs: MonomialPoly,
    pub equal: bool,
}

pub fn verify_main_theorem(
    w: &PermGroup,
    chi: &LinearCharacter,
    n: u32,
    caps: &Caps,
) -> Result<MainTheoremReport> {
    let lhs = weighted_sum_g(w, chi, n, caps)?;
    let rhs = cycle_index(w, chi)?.specialize_capped(n as usize, caps.expansion_terms)?;
    let equal = lhs == rhs;
    Ok(MainTheoremReport { lhs, rhs, equal })
}

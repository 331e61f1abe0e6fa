//! Monomial modules on tensor powers and the averaging projector.
//!
//! The module `M` has basis `v_i`, `i ∈ [0,n]^d`, and `g·v_i = γ_i(g) v_{gi}`
//! where the scalars satisfy `γ_i(gh) = γ_{hi}(g) γ_i(h)`. For a linear
//! character `α` the projector is `a_α = |G|⁻¹ Σ_g α(g) g`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::character::{enumerate_linear_characters, LinearCharacter};
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::orbit::{enumerate_orbits, Hypercube, HypercubePoint, OrbitRecord};
use crate::perm::PermGroup;
use crate::Caps;

/// A sparse exact vector indexed by basis position.
pub type SparseVec = BTreeMap<usize, Cyclotomic>;

/// Square matrix stored as sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    cols: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zero(dim: usize) -> Self {
        ExactMatrix {
            dim,
            cols: alloc::vec![SparseVec::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Cyclotomic {
        self.cols[c].get(&r).cloned().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&c, x) in v {
            axpy(&mut out, x, &self.cols[c]);
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.dim).fold(Cyclotomic::zero(), |acc, i| &acc + &self.get(i, i))
    }

    pub fn rank(&self) -> Result<usize> {
        rank_of(self.cols.iter().cloned())
    }
}

/// `y += a·x`, dropping entries that cancel.
fn axpy(y: &mut SparseVec, a: &Cyclotomic, x: &SparseVec) {
    for (&k, v) in x {
        let t = a * v;
        match y.get_mut(&k) {
            Some(old) => {
                let s = &*old + &t;
                if s.is_zero() {
                    y.remove(&k);
                } else {
                    *old = s;
                }
            }
            None => {
                if !t.is_zero() {
                    y.insert(k, t);
                }
            }
        }
    }
}

/// Rank of a family of sparse vectors, by Gaussian elimination with the
/// first nonzero entry as pivot.
pub fn rank_of(vectors: impl IntoIterator<Item = SparseVec>) -> Result<usize> {
    let mut pivots: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for mut v in vectors {
        v.retain(|_, x| !x.is_zero());
        while let Some((&lead, x)) = v.iter().next() {
            match pivots.get(&lead) {
                Some(row) => {
                    let factor = -x;
                    axpy(&mut v, &factor, row);
                }
                None => {
                    let inv = x.inverse()?;
                    let normalized = v.iter().map(|(&k, y)| (k, y * &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    Ok(pivots.len())
}

#[derive(Clone, Debug)]
enum Gamma {
    Trivial,
    /// `exps[g * dim + i]` with `γ_i(g) = ζ_modulus^exps`.
    Table {
        modulus: u32,
        exps: Vec<u32>,
    },
}

/// A monomial `G`-module on the tensor power with basis indexed by
/// `[0,n]^d`.
#[derive(Clone, Debug)]
pub struct MonomialModule {
    group: Arc<PermGroup>,
    cube: Hypercube,
    /// `action[g * dim + i]` = code of `g·i`.
    action: Vec<u32>,
    gamma: Gamma,
}

impl MonomialModule {
    /// The tensor power `⊗^d K^{n+1}` with `γ ≡ 1`.
    pub fn tensor_power(group: Arc<PermGroup>, n: u32, caps: &Caps) -> Result<Self> {
        let cube = Hypercube {
            n,
            d: group.degree(),
        };
        let dim = cube.len();
        if dim > caps.projector_dim as u128 {
            return Err(Error::CapExceeded {
                needed: dim,
                cap: caps.projector_dim as u128,
            });
        }
        let dim = dim as usize;
        let mut action = Vec::with_capacity(group.order() * dim);
        for g in group.elements() {
            for i in 0..dim {
                action.push(cube.encode(&cube.decode(i).act(g)) as u32);
            }
        }
        Ok(MonomialModule {
            group,
            cube,
            action,
            gamma: Gamma::Trivial,
        })
    }

    /// Same basis and action with explicit scalars
    /// `γ_i(g) = ζ_modulus^{exps[g·dim + i]}`, validated exhaustively
    /// against the cocycle law.
    pub fn with_gamma(
        group: Arc<PermGroup>,
        n: u32,
        modulus: u32,
        exps: Vec<u32>,
        caps: &Caps,
    ) -> Result<Self> {
        let mut m = Self::tensor_power(group, n, caps)?;
        if exps.len() != m.action.len() || modulus == 0 {
            return Err(Error::InvalidCocycle(format!(
                "expected {} values, got {}",
                m.action.len(),
                exps.len()
            )));
        }
        let exps = exps.into_iter().map(|e| e % modulus).collect();
        m.gamma = Gamma::Table { modulus, exps };
        m.validate_cocycle()?;
        Ok(m)
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn cube(&self) -> Hypercube {
        self.cube
    }

    pub fn dim(&self) -> usize {
        self.action.len() / self.group.order()
    }

    pub fn is_trivial_gamma(&self) -> bool {
        matches!(self.gamma, Gamma::Trivial)
    }

    /// Index of `g·i`.
    #[inline]
    pub fn act(&self, g: usize, i: usize) -> usize {
        self.action[g * self.dim() + i] as usize
    }

    pub fn gamma_modulus(&self) -> u32 {
        match &self.gamma {
            Gamma::Trivial => 1,
            Gamma::Table { modulus, .. } => *modulus,
        }
    }

    /// Exponent of `γ_i(g)` with respect to [`Self::gamma_modulus`].
    #[inline]
    pub fn gamma_exp(&self, g: usize, i: usize) -> u32 {
        match &self.gamma {
            Gamma::Trivial => 0,
            Gamma::Table { exps, .. } => exps[g * self.dim() + i],
        }
    }

    pub fn gamma(&self, g: usize, i: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.gamma_modulus(), self.gamma_exp(g, i) as i64)
    }

    /// `γ_i(gh) = γ_{hi}(g) γ_i(h)` for every `g, h, i`.
    pub fn validate_cocycle(&self) -> Result<()> {
        let Gamma::Table { modulus, .. } = &self.gamma else {
            return Ok(());
        };
        let n = self.group.order();
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.mul_index(g, h);
                for i in 0..self.dim() {
                    let lhs = self.gamma_exp(gh, i);
                    let rhs = (self.gamma_exp(g, self.act(h, i)) + self.gamma_exp(h, i)) % modulus;
                    if lhs != rhs {
                        return Err(Error::InvalidCocycle(format!(
                            "fails at g={}, h={}, i={}",
                            self.group.elements()[g],
                            self.group.elements()[h],
                            self.cube.decode(i)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that the generator matrices multiply like the group:
    /// `ρ(g)ρ(h) = ρ(gh)` for generators `g, h`.
    pub fn check_representation(&self) -> bool {
        let m = self.gamma_modulus();
        let gens: Vec<usize> = self
            .group
            .generators()
            .iter()
            .map(|g| self.group.index_of(g).unwrap())
            .collect();
        gens.iter().all(|&g| {
            gens.iter().all(|&h| {
                let gh = self.group.mul_index(g, h);
                (0..self.dim()).all(|i| {
                    let hi = self.act(h, i);
                    self.act(g, hi) == self.act(gh, i)
                        && (self.gamma_exp(g, hi) + self.gamma_exp(h, i)) % m
                            == self.gamma_exp(gh, i)
                })
            })
        })
    }

    /// `i ∈ I(M,α)`: `γ_i` agrees with `α⁻¹` on the stabilizer of `i`.
    pub fn qualifies(&self, i: usize, alpha: &LinearCharacter) -> bool {
        let l = alpha.modulus().lcm(&self.gamma_modulus());
        let (sa, sg) = (l / alpha.modulus(), l / self.gamma_modulus());
        (0..self.group.order())
            .filter(|&g| self.act(g, i) == i)
            .all(|g| (alpha.exponent_at(g) * sa + self.gamma_exp(g, i) * sg) % l == 0)
    }

    /// Orbits of the group on the basis indices, lex-min representative
    /// first.
    pub fn orbits(&self, caps: &Caps) -> Result<Vec<OrbitRecord>> {
        enumerate_orbits(&self.group, self.cube.n, caps)
    }

    /// `J(M,α)`: orbit representatives lying in `I(M,α)`.
    pub fn index_set(&self, alpha: &LinearCharacter, caps: &Caps) -> Result<Vec<usize>> {
        Ok(self
            .orbits(caps)?
            .iter()
            .map(|r| self.cube.encode(&r.rep))
            .filter(|&i| self.qualifies(i, alpha))
            .collect())
    }
}

/// Builds `γ` from a linear character `ψ` of each representative's
/// stabilizer and a phase `c_k` at every point.
///
/// With `t_k` the first group element sending the representative `i` to
/// `k`, the scalars are `γ_k(g) = c_{gk} · ψ(t_{gk}⁻¹ g t_k) · c_k⁻¹`.
pub fn induced_gamma(
    group: Arc<PermGroup>,
    n: u32,
    phase_modulus: u32,
    caps: &Caps,
    mut choose_character: impl FnMut(&HypercubePoint, &[LinearCharacter]) -> usize,
    mut phase: impl FnMut(&HypercubePoint) -> u32,
) -> Result<MonomialModule> {
    let base = MonomialModule::tensor_power(group.clone(), n, caps)?;
    let dim = base.dim();
    let order = group.order();
    let orbits = base.orbits(caps)?;

    // per point: (orbit id, transversal element, phase)
    let mut owner = alloc::vec![(usize::MAX, 0usize, 0u32); dim];
    let mut psis: Vec<LinearCharacter> = Vec::new();
    for (o, rec) in orbits.iter().enumerate() {
        let rep = base.cube.encode(&rec.rep);
        for g in 0..order {
            let k = base.act(g, rep);
            if owner[k].0 == usize::MAX {
                owner[k] = (o, g, phase(&base.cube.decode(k)));
            }
        }
        let members: Vec<_> = rec
            .stabilizer
            .iter()
            .map(|&g| group.elements()[g].clone())
            .collect();
        let stab = Arc::new(group.subgroup_from_elements(&members)?);
        let chars = enumerate_linear_characters(&stab)?;
        let pick = choose_character(&rec.rep, &chars) % chars.len();
        psis.push(chars[pick].clone());
    }

    let modulus = psis
        .iter()
        .fold(phase_modulus.max(1), |acc, p| acc.lcm(&p.modulus()));
    let inverses: Vec<usize> = group
        .elements()
        .iter()
        .map(|g| group.index_of(&g.inverse()).unwrap())
        .collect();
    let mut exps = alloc::vec![0u32; order * dim];
    for g in 0..order {
        for k in 0..dim {
            let l = base.act(g, k);
            let (o, tk, ck) = owner[k];
            let (_, tl, cl) = owner[l];
            let h = group.mul_index(inverses[tl], group.mul_index(g, tk));
            let psi = &psis[o];
            let h_perm = &group.elements()[h];
            let psi_exp = psi
                .exponent_of(h_perm)
                .ok_or(Error::InvalidCocycle(format!(
                    "{h_perm} is not in the stabilizer"
                )))?;
            let scale = modulus / psi.modulus();
            exps[g * dim + k] = (cl % modulus + psi_exp * scale + modulus - ck % modulus) % modulus;
        }
    }
    MonomialModule::with_gamma(group, n, modulus, exps, caps)
}

/// A seeded random cocycle family: random stabilizer characters and
/// random fourth-root-of-unity phases.
pub fn random_gamma_family(
    group: Arc<PermGroup>,
    n: u32,
    seed: u64,
    caps: &Caps,
) -> Result<MonomialModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks: Vec<usize> = (0..Hypercube {
        n,
        d: group.degree(),
    }
    .len()
    .min(1 << 20))
        .map(|_| rng.gen_range(0..1024))
        .collect();
    let mut next = 0;
    let mut prng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    induced_gamma(
        group,
        n,
        4,
        caps,
        |_, chars| {
            let p = picks[next % picks.len()] % chars.len();
            next += 1;
            p
        },
        |_| prng.gen_range(0..4),
    )
}

/// `a_α = |G|⁻¹ Σ_g α(g)·ρ(g)` in the basis `v_i`.
pub fn build_projector(module: &MonomialModule, alpha: &LinearCharacter) -> Result<ExactMatrix> {
    if alpha.group() != module.group() && **alpha.group() != **module.group() {
        return Err(Error::CharacterGroupMismatch);
    }
    let order = module.group.order();
    let l = alpha.modulus().lcm(&module.gamma_modulus());
    let (sa, sg) = (l / alpha.modulus(), l / module.gamma_modulus());
    let dim = module.dim();
    let mut cols = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut counts: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for g in 0..order {
            let row = module.act(g, i);
            let e = (alpha.exponent_at(g) * sa + module.gamma_exp(g, i) * sg) % l;
            counts
                .entry(row)
                .or_insert_with(|| alloc::vec![0; l as usize])[e as usize] += 1;
        }
        let col: SparseVec = counts
            .into_iter()
            .map(|(r, c)| (r, Cyclotomic::from_root_counts(l, &c, order as u64)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        cols.push(col);
    }
    Ok(ExactMatrix { dim, cols })
}

/// `ρ(g)·v` for the monomial action.
fn act_on(module: &MonomialModule, g: usize, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&i, x) in v {
        let y = x * &module.gamma(g, i);
        out.insert(module.act(g, i), y);
    }
    out
}

fn single(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Cyclotomic::one());
    v
}

/// Annihilation checks for `a_α`:
///
/// * `a_α v_i = 0` for every `i ∉ I(M,α)`;
/// * `a_α(α⁻¹(g) v_i − g v_i) = 0` for generators `g` and all `i` (these
///   differences generate `_αM` as a submodule);
/// * every column lies in `M_α`: `g·(a_α v_i) = α⁻¹(g) a_α v_i`.
pub fn check_annihilation(
    module: &MonomialModule,
    alpha: &LinearCharacter,
    proj: &ExactMatrix,
) -> bool {
    let dim = module.dim();
    let excluded_ok = (0..dim)
        .filter(|&i| !module.qualifies(i, alpha))
        .all(|i| proj.column(i).is_empty());
    if !excluded_ok {
        return false;
    }
    let gens: Vec<usize> = module
        .group
        .generators()
        .iter()
        .map(|g| module.group.index_of(g).unwrap())
        .collect();
    let inv = alpha.inverse();
    for &g in &gens {
        let ainv = inv.value_at(g);
        for i in 0..dim {
            let mut diff = SparseVec::new();
            axpy(&mut diff, &ainv, &single(i));
            axpy(&mut diff, &-module.gamma(g, i), &single(module.act(g, i)));
            if !proj.apply(&diff).is_empty() {
                return false;
            }
            let col = proj.column(i);
            let moved = act_on(module, g, col);
            let mut check = moved;
            axpy(&mut check, &-&ainv, col);
            if !check.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Outcome of the basis checks for one `(M, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub dim: usize,
    pub trace: Rational,
    pub rank: usize,
    pub j_size: usize,
    pub idempotent: bool,
    pub annihilation: bool,
    /// Rank of `{a_α v_j : j ∈ J}`.
    pub image_family_rank: usize,
    /// Size and rank of the kernel families `v_i − α(g)γ_i(g) v_{gi}` and
    /// `v_i` for representatives outside `I(M,α)`.
    pub kernel_family_size: usize,
    pub kernel_family_rank: usize,
    pub kernel_family_annihilated: bool,
    pub ok: bool,
}

pub fn verify_basis_prop(
    module: &MonomialModule,
    alpha: &LinearCharacter,
    caps: &Caps,
) -> Result<BasisReport> {
    let proj = build_projector(module, alpha)?;
    let dim = module.dim();
    let idempotent = proj.mul(&proj) == proj;
    let trace = proj
        .trace()
        .as_rational()
        .ok_or_else(|| Error::IdentityViolated("trace of the projector is not rational".into()))?;
    let rank = proj.rank()?;
    let orbits = module.orbits(caps)?;
    let j: Vec<usize> = module.index_set(alpha, caps)?;
    let annihilation = check_annihilation(module, alpha, &proj);
    let image_family_rank = rank_of(j.iter().map(|&i| proj.column(i).clone()))?;

    let mut kernel_family = Vec::new();
    for rec in &orbits {
        let i = module.cube.encode(&rec.rep);
        let mut reached = alloc::vec![i];
        for g in 0..module.group.order() {
            let k = module.act(g, i);
            if reached.contains(&k) {
                continue;
            }
            reached.push(k);
            let coeff = &alpha.value_at(g) * &module.gamma(g, i);
            let mut v = single(i);
            axpy(&mut v, &-coeff, &single(k));
            kernel_family.push(v);
        }
        if !module.qualifies(i, alpha) {
            kernel_family.push(single(i));
        }
    }
    let kernel_family_annihilated = kernel_family.iter().all(|v| proj.apply(v).is_empty());
    let kernel_family_size = kernel_family.len();
    let kernel_family_rank = rank_of(kernel_family)?;

    let trace_is_rank = trace == Rational::from_integer(rank.into());
    let ok = idempotent
        && annihilation
        && trace_is_rank
        && rank == j.len()
        && image_family_rank == j.len()
        && kernel_family_annihilated
        && kernel_family_rank == kernel_family_size
        && kernel_family_size + rank == dim;
    Ok(BasisReport {
        dim,
        trace,
        rank,
        j_size: j.len(),
        idempotent,
        annihilation,
        image_family_rank,
        kernel_family_size,
        kernel_family_rank,
        kernel_family_annihilated,
        ok,
    })
}

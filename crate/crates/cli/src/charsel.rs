//! Character selectors: `unit`, `sign`, `index:k`, `vals{g1:k1,...}`.
//!
//! In `vals{...}` the key `gN` (or just `N`) is the 1-based position in the
//! group's generator list, as printed by the `characters` command. A value
//! `k/m` stands for `ζ_m^k`; a bare `k` stands for `ζ_e^k` with `e` the
//! exponent of the abelianization. Generators left out get value 1.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use polya_core::{enumerate_linear_characters, LinearCharacter, PermGroup};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharSelector {
    Unit,
    Sign,
    Index(usize),
    /// `(generator position, k, m)`; `m = 0` marks a bare exponent.
    Values(Vec<(usize, u32, u32)>),
}

impl CharSelector {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let t = text.trim();
        let bad = |why: &str| CliError::Usage(format!("character selector {text:?}: {why}"));
        if t == "unit" {
            return Ok(CharSelector::Unit);
        }
        if t == "sign" {
            return Ok(CharSelector::Sign);
        }
        if let Some(k) = t.strip_prefix("index:") {
            return k
                .trim()
                .parse()
                .map(CharSelector::Index)
                .map_err(|_| bad("bad index"));
        }
        let body = t
            .strip_prefix("vals{")
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| bad("expected unit, sign, index:k or vals{...}"))?;
        let mut vals = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = item
                .split_once(':')
                .ok_or_else(|| bad("expected gN:value"))?;
            let key = key.trim();
            let pos: usize = key
                .strip_prefix('g')
                .unwrap_or(key)
                .parse()
                .map_err(|_| bad("bad generator key"))?;
            if pos == 0 {
                return Err(bad("generator positions start at 1"));
            }
            let (k, m) = match val.trim().split_once('/') {
                Some((k, m)) => (k.trim().parse(), m.trim().parse()),
                None => (val.trim().parse(), Ok(0)),
            };
            let (k, m) = (
                k.map_err(|_| bad("bad exponent"))?,
                m.map_err(|_| bad("bad modulus"))?,
            );
            if val.contains('/') && m == 0 {
                return Err(bad("modulus must be positive"));
            }
            if vals.iter().any(|&(p, _, _)| p == pos) {
                return Err(bad("generator given twice"));
            }
            vals.push((pos, k, m));
        }
        vals.sort();
        Ok(CharSelector::Values(vals))
    }

    pub fn resolve(&self, group: &Arc<PermGroup>) -> Result<LinearCharacter, CliError> {
        match self {
            CharSelector::Unit => Ok(LinearCharacter::unit(group.clone())),
            CharSelector::Sign => Ok(LinearCharacter::sign(group.clone())),
            CharSelector::Index(k) => {
                let all = enumerate_linear_characters(group)?;
                let count = all.len();
                all.into_iter().nth(*k).ok_or_else(|| {
                    CliError::Usage(format!(
                        "character index {k} out of range: the group has {count}"
                    ))
                })
            }
            CharSelector::Values(vals) => {
                let ngens = group.generators().len();
                if let Some(&(p, _, _)) = vals.iter().find(|v| v.0 > ngens) {
                    return Err(CliError::Usage(format!(
                        "generator g{p} does not exist: the group has {ngens}"
                    )));
                }
                let e = if vals.iter().any(|v| v.2 == 0) {
                    enumerate_linear_characters(group)?
                        .iter()
                        .fold(1u32, |acc, c| acc.lcm(&c.modulus()))
                } else {
                    1
                };
                let m = vals.iter().fold(e, |acc, v| acc.lcm(&v.2.max(1)));
                let mut exps = vec![0u32; ngens];
                for &(p, k, mm) in vals {
                    let mm = if mm == 0 { e } else { mm };
                    exps[p - 1] = (k % mm) * (m / mm);
                }
                Ok(LinearCharacter::from_generator_values(
                    group.clone(),
                    m,
                    &exps,
                )?)
            }
        }
    }
}

impl fmt::Display for CharSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharSelector::Unit => f.write_str("unit"),
            CharSelector::Sign => f.write_str("sign"),
            CharSelector::Index(k) => write!(f, "index:{k}"),
            CharSelector::Values(vals) => {
                f.write_str("vals{")?;
                for (i, &(p, k, m)) in vals.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    if m == 0 {
                        write!(f, "g{p}:{k}")?;
                    } else {
                        write!(f, "g{p}:{k}/{m}")?;
                    }
                }
                f.write_str("}")
            }
        }
    }
}

//! One job: parse, validate, then execute.

use std::fmt::Write as _;
use std::sync::Arc;

use polya_core::semisym::random_gamma_family;
use polya_core::{
    cycle_index, direct_product_embed, enumerate_linear_characters, orbit_census,
    product_character, verify_basis_prop, verify_main_theorem, weighted_sum_g, wreath_character,
    wreath_embed, Caps, LinearCharacter, MonomialModule, PermGroup,
};
use serde_json::{json, Value};

use crate::charsel::CharSelector;
use crate::expr::GroupExpr;
use crate::render;
use crate::{CliError, Format, Outcome, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Characters,
    CycleIndex,
    Orbits,
    Gn,
    Verify,
    VerifyProduct,
    VerifyPlethysm,
    VerifyBasis,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Characters => "characters",
            Command::CycleIndex => "cycle-index",
            Command::Orbits => "orbits",
            Command::Gn => "gn",
            Command::Verify => "verify",
            Command::VerifyProduct => "verify-product",
            Command::VerifyPlethysm => "verify-plethysm",
            Command::VerifyBasis => "verify-basis",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            Command::Characters,
            Command::CycleIndex,
            Command::Orbits,
            Command::Gn,
            Command::Verify,
            Command::VerifyProduct,
            Command::VerifyPlethysm,
            Command::VerifyBasis,
        ]
        .into_iter()
        .find(|c| c.name() == s)
    }

    /// Number of `(group, character)` pairs the command takes.
    pub fn arity(self) -> usize {
        match self {
            Command::VerifyProduct | Command::VerifyPlethysm => 2,
            _ => 1,
        }
    }

    fn needs_character(self) -> bool {
        self != Command::Characters
    }

    fn needs_n(self) -> bool {
        matches!(
            self,
            Command::Orbits | Command::Gn | Command::Verify | Command::VerifyBasis
        )
    }
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub groups: Vec<GroupExpr>,
    pub chars: Vec<CharSelector>,
    pub n: Option<u32>,
    /// Seed for a random monomial twist in `verify-basis`.
    pub seed: Option<u64>,
    pub format: Format,
    pub caps: Caps,
}

impl JobSpec {
    /// Parses the textual arguments; no group is built yet.
    pub fn from_args(
        command: Command,
        groups: &[String],
        chars: &[String],
        n: Option<u32>,
        format: Format,
        caps: Caps,
    ) -> Result<Self, CliError> {
        let groups = groups
            .iter()
            .map(|g| GroupExpr::parse(g))
            .collect::<Result<Vec<_>, _>>()?;
        let chars = chars
            .iter()
            .map(|c| CharSelector::parse(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(JobSpec {
            command,
            groups,
            chars,
            n,
            seed: None,
            format,
            caps,
        })
    }

    /// Canonical one-line description, in catalog syntax.
    pub fn label(&self) -> String {
        let mut s = self.command.name().to_string();
        for (i, g) in self.groups.iter().enumerate() {
            write!(s, " | {g}").unwrap();
            if let Some(c) = self.chars.get(i) {
                write!(s, " | {c}").unwrap();
            }
        }
        if let Some(n) = self.n {
            write!(s, " | {n}").unwrap();
        }
        if let Some(seed) = self.seed {
            write!(s, " | seed:{seed}").unwrap();
        }
        s
    }

    /// Builds groups and characters and checks arities. Nothing is
    /// enumerated here.
    pub fn prepare(&self) -> Result<Prepared, CliError> {
        let k = self.command.arity();
        if self.groups.len() != k {
            return Err(CliError::Usage(format!(
                "{} takes {k} --group argument(s), got {}",
                self.command.name(),
                self.groups.len()
            )));
        }
        let want_chars = if self.command.needs_character() { k } else { 0 };
        if self.chars.len() != want_chars {
            return Err(CliError::Usage(format!(
                "{} takes {want_chars} --char argument(s), got {}",
                self.command.name(),
                self.chars.len()
            )));
        }
        if self.command.needs_n() && self.n.is_none() {
            return Err(CliError::Usage(format!(
                "{} needs --n",
                self.command.name()
            )));
        }
        if self.seed.is_some() && self.command != Command::VerifyBasis {
            return Err(CliError::Usage(
                "a seed only applies to verify-basis".into(),
            ));
        }
        let groups = self
            .groups
            .iter()
            .map(GroupExpr::build_arc)
            .collect::<Result<Vec<_>, _>>()?;
        let chars = self
            .chars
            .iter()
            .zip(&groups)
            .map(|(c, g)| c.resolve(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Prepared {
            spec: self.clone(),
            groups,
            chars,
        })
    }
}

pub struct Prepared {
    spec: JobSpec,
    groups: Vec<Arc<PermGroup>>,
    chars: Vec<LinearCharacter>,
}

struct Rendered {
    status: Status,
    text: String,
    json: Value,
    tsv: Option<String>,
}

impl Prepared {
    pub fn execute(&self) -> Result<Outcome, CliError> {
        let r = match self.spec.command {
            Command::Characters => self.characters()?,
            Command::CycleIndex => self.cycle_index()?,
            Command::Orbits => self.orbits()?,
            Command::Gn => self.gn()?,
            Command::Verify => self.verify()?,
            Command::VerifyProduct => self.verify_product()?,
            Command::VerifyPlethysm => self.verify_plethysm()?,
            Command::VerifyBasis => self.verify_basis()?,
        };
        let output = match self.spec.format {
            Format::Text => r.text,
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&r.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Tsv => r.tsv.unwrap_or_else(|| tsv_from_json(&r.json)),
        };
        Ok(Outcome {
            status: r.status,
            output,
        })
    }

    fn n(&self) -> u32 {
        self.spec.n.unwrap_or(0)
    }

    fn head(&self) -> Value {
        let mut h = json!({ "command": self.spec.command.name() });
        let m = h.as_object_mut().unwrap();
        for (i, (g, c)) in self
            .spec
            .groups
            .iter()
            .zip(
                self.spec
                    .chars
                    .iter()
                    .map(Some)
                    .chain(std::iter::repeat(None)),
            )
            .enumerate()
        {
            let suffix = if self.spec.command.arity() == 1 {
                String::new()
            } else {
                format!("{}", i + 1)
            };
            m.insert(format!("group{suffix}"), json!(g.to_string()));
            if let Some(c) = c {
                m.insert(format!("character{suffix}"), json!(c.to_string()));
            }
        }
        if let Some(n) = self.spec.n {
            m.insert("n".into(), json!(n));
        }
        h
    }

    fn characters(&self) -> Result<Rendered, CliError> {
        let g = &self.groups[0];
        let chars = enumerate_linear_characters(g)?;
        let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
        let mut text = format!(
            "group {}  order {}  characters {}\n",
            self.spec.groups[0],
            g.order(),
            chars.len()
        );
        let mut tsv = String::from("selector\torder");
        for (i, p) in gens.iter().enumerate() {
            writeln!(text, "  g{} = {p}", i + 1).unwrap();
            write!(tsv, "\tg{}", i + 1).unwrap();
        }
        tsv.push('\n');
        let mut list = Vec::new();
        for (k, c) in chars.iter().enumerate() {
            let vals: Vec<_> = g
                .generators()
                .iter()
                .map(|p| c.value(p).expect("generator"))
                .collect();
            let shown: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
            writeln!(
                text,
                "index:{k}  order {}  values {}",
                c.modulus(),
                shown.join("  ")
            )
            .unwrap();
            writeln!(tsv, "index:{k}\t{}\t{}", c.modulus(), shown.join("\t")).unwrap();
            list.push(json!({
                "selector": format!("index:{k}"),
                "order": c.modulus(),
                "generator_values": vals.iter().map(render::cyclotomic).collect::<Vec<_>>(),
            }));
        }
        let mut json = self.head();
        json["order"] = json!(g.order());
        json["generators"] = json!(gens);
        json["characters"] = json!(list);
        Ok(Rendered {
            status: Status::Ok,
            text,
            json,
            tsv: Some(tsv),
        })
    }

    fn cycle_index(&self) -> Result<Rendered, CliError> {
        let z = cycle_index(&self.groups[0], &self.chars[0])?;
        let mut json = self.head();
        json["d"] = json!(self.groups[0].degree());
        json["cycle_index"] = render::power_sum_poly(&z);
        Ok(Rendered {
            status: Status::Ok,
            text: format!("{z}\n"),
            json,
            tsv: Some(render::power_sum_tsv(&z)),
        })
    }

    fn orbits(&self) -> Result<Rendered, CliError> {
        let recs = orbit_census(&self.groups[0], &self.chars[0], self.n(), &self.spec.caps)?;
        let mut tsv = format!("{}\n", render::ORBIT_HEADER);
        for r in &recs {
            tsv += &render::orbit_row(r);
            tsv.push('\n');
        }
        let chi_count = recs.iter().filter(|r| r.is_chi_orbit).count();
        let text = format!("{tsv}# orbits {}  chi-orbits {chi_count}\n", recs.len());
        let mut json = self.head();
        json["orbits"] = json!(recs.iter().map(render::orbit_json).collect::<Vec<_>>());
        json["chi_orbit_count"] = json!(chi_count);
        Ok(Rendered {
            status: Status::Ok,
            text,
            json,
            tsv: Some(tsv),
        })
    }

    fn gn(&self) -> Result<Rendered, CliError> {
        let g = weighted_sum_g(&self.groups[0], &self.chars[0], self.n(), &self.spec.caps)?;
        let mut json = self.head();
        json["g_n"] = render::monomial_poly(&g);
        Ok(Rendered {
            status: Status::Ok,
            text: format!("{g}\n"),
            json,
            tsv: Some(render::monomial_tsv(&g)),
        })
    }

    fn verify(&self) -> Result<Rendered, CliError> {
        let rep = verify_main_theorem(&self.groups[0], &self.chars[0], self.n(), &self.spec.caps)?;
        // also exercises the H-orbit identities on every orbit
        orbit_census(&self.groups[0], &self.chars[0], self.n(), &self.spec.caps)?;
        let text = if rep.equal {
            format!("ok\n{}\n", rep.lhs)
        } else {
            format!("MISMATCH\ng_n: {}\nZ:   {}\n", rep.lhs, rep.rhs)
        };
        let mut json = self.head();
        json["d"] = json!(self.groups[0].degree());
        json["lhs"] = render::monomial_poly(&rep.lhs);
        json["rhs"] = render::monomial_poly(&rep.rhs);
        json["ok"] = json!(rep.equal);
        Ok(Rendered {
            status: if rep.equal {
                Status::Ok
            } else {
                Status::Mismatch
            },
            text,
            json,
            tsv: None,
        })
    }

    /// Shared tail of the two composition checks: the composed group's
    /// own cycle index against the formula, and optionally the main
    /// identity on the composed group.
    fn composed(
        &self,
        label: &str,
        group: &PermGroup,
        chi: &LinearCharacter,
        formula: polya_core::PowerSumPoly,
    ) -> Result<Rendered, CliError> {
        let direct = cycle_index(group, chi)?;
        let rule_ok = direct == formula;
        let mut text = if rule_ok {
            format!("ok {label}\n{direct}\n")
        } else {
            format!("MISMATCH {label}\ngroup: {direct}\nrule:  {formula}\n")
        };
        let mut json = self.head();
        json["d"] = json!(group.degree());
        json["order"] = json!(group.order());
        json["cycle_index"] = render::power_sum_poly(&direct);
        json["rule"] = render::power_sum_poly(&formula);
        json["rule_ok"] = json!(rule_ok);
        let mut ok = rule_ok;
        if let Some(n) = self.spec.n {
            let rep = verify_main_theorem(group, chi, n, &self.spec.caps)?;
            if rep.equal {
                writeln!(text, "ok g_n at n={n}").unwrap();
            } else {
                write!(
                    text,
                    "MISMATCH g_n at n={n}\ng_n: {}\nZ:   {}\n",
                    rep.lhs, rep.rhs
                )
                .unwrap();
            }
            json["main_ok"] = json!(rep.equal);
            ok &= rep.equal;
        }
        json["ok"] = json!(ok);
        Ok(Rendered {
            status: if ok { Status::Ok } else { Status::Mismatch },
            text,
            json,
            tsv: None,
        })
    }

    fn verify_product(&self) -> Result<Rendered, CliError> {
        let (w, v) = (&self.groups[0], &self.groups[1]);
        let (chi, theta) = (&self.chars[0], &self.chars[1]);
        let p = Arc::new(direct_product_embed(w, v)?);
        let lambda = product_character(chi, theta, p.clone())?;
        let rule = cycle_index(w, chi)?.mul(&cycle_index(v, theta)?);
        self.composed("product rule", &p, &lambda, rule)
    }

    fn verify_plethysm(&self) -> Result<Rendered, CliError> {
        let (v, w) = (&self.groups[0], &self.groups[1]);
        let (theta, chi) = (&self.chars[0], &self.chars[1]);
        let wr = Arc::new(wreath_embed(v, w)?);
        let mu = wreath_character(theta, chi, wr.clone())?;
        let rule = cycle_index(w, chi)?.plethysm_insert(&cycle_index(v, theta)?)?;
        self.composed("insertion rule", &wr, &mu, rule)
    }

    fn verify_basis(&self) -> Result<Rendered, CliError> {
        let g = self.groups[0].clone();
        let module = match self.spec.seed {
            None => MonomialModule::tensor_power(g, self.n(), &self.spec.caps)?,
            Some(seed) => random_gamma_family(g, self.n(), seed, &self.spec.caps)?,
        };
        let rep = verify_basis_prop(&module, &self.chars[0], &self.spec.caps)?;
        let ok = rep.ok && module.check_representation();
        let text = format!(
            "{} dim {} trace {} rank {} J_size {}\n",
            if ok { "ok" } else { "MISMATCH" },
            rep.dim,
            rep.trace,
            rep.rank,
            rep.j_size
        );
        let mut json = self.head();
        json["d"] = json!(self.groups[0].degree());
        json["dim"] = json!(rep.dim);
        json["trace"] = render::rational(&rep.trace);
        json["rank"] = json!(rep.rank);
        json["J_size"] = json!(rep.j_size);
        json["ok"] = json!(ok);
        Ok(Rendered {
            status: if ok { Status::Ok } else { Status::Mismatch },
            text,
            json,
            tsv: None,
        })
    }
}

/// Flat `key<TAB>value` rows for reports without a natural table.
fn tsv_from_json(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(m) = v {
        for (k, x) in m {
            let shown = match x {
                Value::String(t) => t.clone(),
                Value::Object(o) if o.contains_key("text") => {
                    o["text"].as_str().unwrap_or_default().to_string()
                }
                Value::Object(o) if o.contains_key("num") => {
                    format!(
                        "{}/{}",
                        o["num"].as_str().unwrap(),
                        o["den"].as_str().unwrap()
                    )
                }
                other => other.to_string(),
            };
            writeln!(s, "{k}\t{shown}").unwrap();
        }
    }
    s
}

/// Parse, validate and execute one job.
pub fn run(spec: &JobSpec) -> Outcome {
    match spec.prepare().and_then(|p| p.execute()) {
        Ok(o) => o,
        Err(e) => Outcome {
            status: e.status(),
            output: format!("error: {e}\n"),
        },
    }
}

//! Command-line front end for `polya-core`: group and character syntax,
//! report formats, and the verification suite.

pub mod catalog;
pub mod charsel;
pub mod expr;
pub mod job;
pub mod render;

use polya_core::Caps;

pub use catalog::{parse_catalog, run_suite, SuiteReport};
pub use charsel::CharSelector;
pub use expr::GroupExpr;
pub use job::{run, Command, JobSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] polya_core::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Usage(_) => Status::Usage,
            CliError::Core(polya_core::Error::CapExceeded { .. }) => Status::Cap,
            CliError::Core(polya_core::Error::IdentityViolated(_)) => Status::Mismatch,
            // anything that fails while building groups or characters is
            // a bad spec
            CliError::Core(_) => Status::Usage,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Usage,
    Cap,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Usage => 2,
            Status::Cap => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub output: String,
}

pub const ENV_ORBIT_CAP: &str = "POLYA_ORBIT_CAP";
pub const ENV_TERM_CAP: &str = "POLYA_TERM_CAP";
pub const ENV_PROJECTOR_CAP: &str = "POLYA_PROJECTOR_CAP";

/// Defaults, then environment overrides, then `--cap` (which bounds both
/// orbit work and expansion size).
pub fn resolve_caps(
    cap_flag: Option<u128>,
    env: impl Fn(&str) -> Option<String>,
) -> Result<Caps, CliError> {
    let mut caps = Caps::default();
    let parse = |name: &str| -> Result<Option<u128>, CliError> {
        env(name)
            .map(|v| {
                v.trim().parse::<u128>().map_err(|_| {
                    CliError::Usage(format!("{name}={v:?} is not a non-negative integer"))
                })
            })
            .transpose()
    };
    if let Some(v) = parse(ENV_ORBIT_CAP)? {
        caps.orbit_work = v;
    }
    if let Some(v) = parse(ENV_TERM_CAP)? {
        caps.expansion_terms = v;
    }
    if let Some(v) = parse(ENV_PROJECTOR_CAP)? {
        caps.projector_dim = usize::try_from(v).unwrap_or(usize::MAX);
    }
    if let Some(c) = cap_flag {
        caps.orbit_work = c;
        caps.expansion_terms = c;
    }
    Ok(caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_layering() {
        let none = |_: &str| None;
        assert_eq!(resolve_caps(None, none).unwrap(), Caps::default());
        let env = |k: &str| (k == ENV_ORBIT_CAP).then(|| "77".to_string());
        let c = resolve_caps(None, env).unwrap();
        assert_eq!(c.orbit_work, 77);
        let c = resolve_caps(Some(5), env).unwrap();
        assert_eq!((c.orbit_work, c.expansion_terms), (5, 5));
        assert!(resolve_caps(None, |_| Some("x".into())).is_err());
    }
}

//! Session settings resolved from flags, a key=value config file, the
//! `LEAVITT_CHAR` environment variable, and built-in defaults, in that order.

use std::fs;
use std::path::Path;

use leavitt_core::{FieldSpec, Mode, SessionConfig};

use crate::Failure;

pub const CHAR_ENV: &str = "LEAVITT_CHAR";

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Partial {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub characteristic: Option<u64>,
    pub mode: Option<Mode>,
}

impl Partial {
    /// Fills unset fields from `other`.
    pub fn or(self, other: Partial) -> Partial {
        Partial {
            n: self.n.or(other.n),
            d: self.d.or(other.d),
            characteristic: self.characteristic.or(other.characteristic),
            mode: self.mode.or(other.mode),
        }
    }

    pub fn resolve(self) -> Result<SessionConfig, Failure> {
        let spec = FieldSpec::new(self.characteristic.unwrap_or(0))?;
        Ok(SessionConfig::new(self.n.unwrap_or(2), self.d.unwrap_or(1), spec, self.mode.unwrap_or(Mode::Leavitt))?)
    }
}

fn value<T: std::str::FromStr>(key: &str, raw: &str, line: usize) -> Result<T, Failure> {
    raw.parse()
        .map_err(|_| Failure::parse(format!("config line {line}: bad value {raw:?} for {key}")))
}

pub fn parse_config(text: &str) -> Result<Partial, Failure> {
    let mut out = Partial::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, val)) = content.split_once('=') else {
            return Err(Failure::parse(format!("config line {line}: expected key=value")));
        };
        let (key, val) = (key.trim(), val.trim());
        match key {
            "n" => out.n = Some(value(key, val, line)?),
            "d" => out.d = Some(value(key, val, line)?),
            "char" | "characteristic" => out.characteristic = Some(value(key, val, line)?),
            "mode" => {
                out.mode = Some(val.parse().map_err(|e: leavitt_core::Error| {
                    Failure::parse(format!("config line {line}: {e}"))
                })?)
            }
            other => return Err(Failure::parse(format!("config line {line}: unknown key {other:?}"))),
        }
    }
    Ok(out)
}

pub fn read_config(path: &Path) -> Result<Partial, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::domain(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

pub fn from_env() -> Result<Partial, Failure> {
    match std::env::var(CHAR_ENV) {
        Ok(v) if !v.trim().is_empty() => Ok(Partial {
            characteristic: Some(
                v.trim()
                    .parse()
                    .map_err(|_| Failure::parse(format!("{CHAR_ENV}: bad characteristic {v:?}")))?,
            ),
            ..Partial::default()
        }),
        _ => Ok(Partial::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_lines() {
        let p = parse_config("# session\nn = 5\nchar=2 # field\n\nmode=cohn\n").unwrap();
        assert_eq!(p, Partial { n: Some(5), d: None, characteristic: Some(2), mode: Some(Mode::Cohn) });
        assert!(parse_config("n 5").is_err());
        assert!(parse_config("colour=red").is_err());
        assert!(parse_config("d=two").is_err());
    }

    #[test]
    fn precedence() {
        let flags = Partial { n: Some(3), ..Partial::default() };
        let file = Partial { n: Some(4), characteristic: Some(2), ..Partial::default() };
        let env = Partial { characteristic: Some(5), d: Some(2), ..Partial::default() };
        let cfg = flags.or(file).or(env).resolve().unwrap();
        assert_eq!((cfg.n, cfg.d, cfg.spec.characteristic(), cfg.mode), (3, 2, 2, Mode::Leavitt));
        assert!(Partial { characteristic: Some(4), ..Partial::default() }.resolve().is_err());
    }
}

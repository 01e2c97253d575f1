//! Surface definition files (`.rsd`).
//!
//! ```text
//! # comment
//! kappa  = 1 + 0.3*sin(u)
//! delta  = 2 + sin(u)
//! lambda = 0.5*cos(u)
//! domain = [0, 6.283185307179586]
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::expr::{parse, Expr};
use crate::frame::{Domain, InvariantTriple};

pub const DEFAULT_DOMAIN: (f64, f64) = (0.0, std::f64::consts::TAU);

fn definition(line: usize, message: impl Into<String>) -> Error {
    Error::Definition {
        line,
        message: message.into(),
    }
}

fn bound(text: &str, line: usize) -> Result<f64> {
    let e = parse(text.trim()).map_err(|err| definition(line, format!("domain bound: {err}")))?;
    if !matches!(e, Expr::Num(_) | Expr::Neg(_)) {
        return Err(definition(line, format!("domain bound '{}' must be a number", text.trim())));
    }
    e.eval(0.0).map_err(|err| definition(line, err.to_string()))
}

pub fn parse_definition(text: &str) -> Result<InvariantTriple> {
    let mut exprs: [Option<Expr>; 3] = [None, None, None];
    let mut domain: Option<Domain> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| definition(line, "expected 'key = value'"))?;
        let (key, value) = (key.trim(), value.trim());
        let slot = match key {
            "kappa" => 0,
            "delta" => 1,
            "lambda" => 2,
            "domain" => {
                if domain.is_some() {
                    return Err(definition(line, "duplicate key 'domain'"));
                }
                let inner = value
                    .strip_prefix('[')
                    .and_then(|v| v.strip_suffix(']'))
                    .ok_or_else(|| definition(line, "domain must look like [a, b]"))?;
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| definition(line, "domain must look like [a, b]"))?;
                let d = Domain::new(bound(a, line)?, bound(b, line)?).map_err(|e| definition(line, e.to_string()))?;
                domain = Some(d);
                continue;
            }
            other => return Err(definition(line, format!("unknown key '{other}'"))),
        };
        if exprs[slot].is_some() {
            return Err(definition(line, format!("duplicate key '{key}'")));
        }
        exprs[slot] = Some(parse(value).map_err(|err| definition(line, format!("{key}: {err}")))?);
    }
    let [k, d, l] = exprs;
    let missing = |name: &str| definition(0, format!("missing key '{name}'"));
    let domain = match domain {
        Some(d) => d,
        None => Domain::new(DEFAULT_DOMAIN.0, DEFAULT_DOMAIN.1)?,
    };
    Ok(InvariantTriple::new(
        k.ok_or_else(|| missing("kappa"))?,
        d.ok_or_else(|| missing("delta"))?,
        l.ok_or_else(|| missing("lambda"))?,
        domain,
    ))
}

/// Renders a triple in the file format; parsing the output gives the
/// same triple back.
pub fn format_definition(t: &InvariantTriple) -> String {
    format!(
        "kappa = {}\ndelta = {}\nlambda = {}\ndomain = [{:?}, {:?}]\n",
        t.kappa, t.delta, t.lambda, t.domain.lo, t.domain.hi
    )
}

pub fn read_definition(path: &Path) -> Result<InvariantTriple> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_definition(&text)
}

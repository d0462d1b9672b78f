//! Plain-text ideal files.
//!
//! ```text
//! # comment
//! ring 3 0          # number of variables, characteristic
//! vars x1 x2 x3     # optional; default names x0 .. x{N-1}
//! gen x1^2
//! gen x1*x2 - 3/2*x3^2
//! ```

use std::sync::Arc;

use lefschetz_core::ideal::IdealError;
use lefschetz_core::parse::{parse_polynomial, ParseError};
use lefschetz_core::ring::RingError;
use lefschetz_core::{IdealSpan, Polynomial, Ring};

#[derive(Debug, thiserror::Error)]
pub enum IdealFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Polynomial { line: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Ring { line: usize, source: RingError },
    #[error("missing `ring` line")]
    NoRing,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_ideal_file(text: &str) -> Result<IdealSpan, IdealFileError> {
    let mut header: Option<(usize, u32, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut gens: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let (key, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        let syntax = |message: &str| IdealFileError::Syntax {
            line,
            message: message.to_string(),
        };
        match key {
            "ring" => {
                if header.is_some() {
                    return Err(syntax("duplicate `ring` line"));
                }
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [n, ch] = parts[..] else {
                    return Err(syntax("expected `ring N CHAR`"));
                };
                let n = n.parse().map_err(|_| syntax("bad variable count"))?;
                let ch = ch.parse().map_err(|_| syntax("bad characteristic"))?;
                header = Some((n, ch, line));
            }
            "vars" => {
                if names.is_some() {
                    return Err(syntax("duplicate `vars` line"));
                }
                names = Some(rest.split_whitespace().map(String::from).collect());
            }
            "gen" => {
                if rest.is_empty() {
                    return Err(syntax("empty generator"));
                }
                gens.push((line, rest.to_string()));
            }
            other => return Err(syntax(&format!("unknown keyword `{other}`"))),
        }
    }
    let (n, ch, line) = header.ok_or(IdealFileError::NoRing)?;
    let ring = match names {
        Some(v) if v.len() != n => {
            return Err(IdealFileError::Syntax {
                line,
                message: format!("`ring` declares {n} variables but `vars` names {}", v.len()),
            })
        }
        Some(v) => Ring::with_names(v, ch),
        None => Ring::new(n, ch),
    }
    .map_err(|source| IdealFileError::Ring { line, source })?;
    let ring = Arc::new(ring);
    let polys = gens
        .into_iter()
        .map(|(line, g)| parse_polynomial(&g, &ring).map_err(|source| IdealFileError::Polynomial { line, source }))
        .collect::<Result<Vec<Polynomial>, _>>()?;
    Ok(IdealSpan::new(&ring, polys)?)
}

pub fn render_ideal_file(ideal: &IdealSpan, comment: Option<&str>) -> String {
    let ring = ideal.ring();
    let mut out = String::new();
    if let Some(c) = comment {
        for l in c.lines() {
            out.push_str("# ");
            out.push_str(l);
            out.push('\n');
        }
    }
    out.push_str(&format!("ring {} {}\n", ring.num_vars(), ring.characteristic()));
    out.push_str(&format!("vars {}\n", ring.var_names().join(" ")));
    for g in ideal.gens() {
        out.push_str("gen ");
        out.push_str(&g.render());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_and_writes() {
        let text = "# example\nring 3 0\nvars x1 x2 x3\ngen x1^2 # square\ngen x1*x2\n\ngen 2/3*x3^2 - x2^2\n";
        let i = parse_ideal_file(text).unwrap();
        assert_eq!(i.gens().len(), 3);
        assert_eq!(i.ring().var_names(), &["x1", "x2", "x3"]);
        let again = parse_ideal_file(&render_ideal_file(&i, Some("copy"))).unwrap();
        assert_eq!(again.gens(), i.gens());
    }

    #[test]
    fn default_names_and_errors() {
        let i = parse_ideal_file("ring 2 7\ngen x0^3 + x1^3\n").unwrap();
        assert_eq!(i.ring().characteristic().value(), 7);
        assert!(matches!(parse_ideal_file("gen x\n"), Err(IdealFileError::NoRing)));
        assert!(matches!(
            parse_ideal_file("ring 2 0\ngen x0 + 1\n"),
            Err(IdealFileError::Ideal(IdealError::NotHomogeneous { .. }))
        ));
        assert!(matches!(
            parse_ideal_file("ring 2 4\n"),
            Err(IdealFileError::Ring { line: 1, .. })
        ));
        assert!(matches!(
            parse_ideal_file("ring 2 0\ngen y\n"),
            Err(IdealFileError::Polynomial { line: 2, .. })
        ));
        assert!(matches!(parse_ideal_file("ring 2 0\nfoo\n"), Err(IdealFileError::Syntax { line: 2, .. })));
    }
}

//! GFC v1, a plain-text generator-matrix format.
//!
//! ```text
//! field e=4 poly=0x13
//! code n=5 k=3 sub=2
//! 6 7 1 0 0
//! 0 6 7 1 0
//! 0 0 6 7 1
//! ```
//!
//! Line 1 names the ambient field F_{2^e} and its modulus as a hex bitmask,
//! line 2 the length, dimension and the degree of the alphabet subfield,
//! followed by k rows of n decimal element bit values separated by
//! whitespace (single spaces on output). The `0x` prefix is optional on input.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx};
use crate::linear::LinearCode;

pub fn write(code: &LinearCode) -> String {
    let ctx = code.ctx();
    let mut out = String::new();
    let _ = writeln!(out, "field e={} poly={:#x}", ctx.degree(), ctx.modulus());
    let _ = writeln!(
        out,
        "code n={} k={} sub={}",
        code.n(),
        code.k(),
        code.sub().degree()
    );
    for row in code.rows() {
        let cells: Vec<String> = row.iter().map(Elem::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn fields<'a>(line: usize, text: &'a str, tag: &str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let mut words = text.split_whitespace();
    if words.next() != Some(tag) {
        return Err(parse_err(line, format!("expected `{tag}`")));
    }
    let mut values = Vec::with_capacity(keys.len());
    for key in keys {
        let word = words
            .next()
            .ok_or_else(|| parse_err(line, format!("missing `{key}=`")))?;
        let value = word
            .strip_prefix(key)
            .and_then(|w| w.strip_prefix('='))
            .ok_or_else(|| parse_err(line, format!("expected `{key}=`, found `{word}`")))?;
        values.push(value);
    }
    if let Some(extra) = words.next() {
        return Err(parse_err(line, format!("unexpected `{extra}`")));
    }
    Ok(values)
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| parse_err(line, format!("`{s}` is not a number")))
}

pub fn parse(text: &str) -> Result<LinearCode> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    let (ln, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let f = fields(ln, first, "field", &["e", "poly"])?;
    let e: u32 = number(ln, f[0])?;
    let hex = f[1].strip_prefix("0x").unwrap_or(f[1]);
    let poly = u32::from_str_radix(hex, 16)
        .map_err(|_| parse_err(ln, format!("`{}` is not hex", f[1])))?;
    let ctx = Arc::new(FieldCtx::new(e, Some(poly))?);

    let (ln, second) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing code line"))?;
    let c = fields(ln, second, "code", &["n", "k", "sub"])?;
    let n: usize = number(ln, c[0])?;
    let k: usize = number(ln, c[1])?;
    let d: u32 = number(ln, c[2])?;
    let sub = ctx.subfield(d)?;

    let mut rows = Vec::with_capacity(k);
    for (ln, line) in lines {
        if line.is_empty() {
            continue;
        }
        if rows.len() == k {
            return Err(parse_err(ln, format!("more than k = {k} rows")));
        }
        let row = line
            .split_whitespace()
            .map(|w| {
                let bits: u16 = number(ln, w)?;
                let x = Elem(bits);
                if !sub.contains(x) {
                    return Err(parse_err(
                        ln,
                        format!("{bits} is not in the subfield of degree {d}"),
                    ));
                }
                Ok(x)
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(
                ln,
                format!("{} entries, expected n = {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(parse_err(
            text.lines().count(),
            format!("{} rows, expected k = {k}", rows.len()),
        ));
    }
    LinearCode::new(ctx, sub, n, rows)
}

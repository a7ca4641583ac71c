//! Generator file format:
//!
//! ```text
//! # optional comments
//! degree N
//! (1,2,3)(4,5)        cycle notation, 1-based, fixed points omitted
//! 2 1 3 4 5           or an image list of N integers (images of 1..N)
//! ```
//!
//! `#` starts a comment anywhere on a line; blank lines are ignored.

use crate::error::{Error, Result};
use crate::perm::Perm;
use std::path::Path;

pub fn load_generators(path: &Path) -> Result<(usize, Vec<Perm>)> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_generators(&text)
}

pub fn parse_generators(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Perm> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match degree {
            None => {
                let rest = line
                    .to_ascii_lowercase()
                    .strip_prefix("degree")
                    .map(str::trim)
                    .map(String::from)
                    .ok_or_else(|| at(format!("expected `degree N`, found `{line}`")))?;
                let n: usize = rest
                    .parse()
                    .map_err(|_| at(format!("bad degree `{rest}`")))?;
                if n == 0 || n > u16::MAX as usize {
                    return Err(at(format!("degree {n} out of range 1..={}", u16::MAX)));
                }
                degree = Some(n);
            }
            Some(n) => {
                let perm = if line.starts_with('(') {
                    parse_cycles(line, n)
                } else {
                    parse_image_list(line, n)
                }
                .map_err(|e| at(e.to_string()))?;
                gens.push(perm);
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::Parse("missing `degree N` header".into()))?;
    if gens.is_empty() {
        return Err(Error::Parse("no generators in file".into()));
    }
    Ok((degree, gens))
}

fn parse_cycles(line: &str, n: usize) -> Result<Perm> {
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "()" {
        return Ok(Perm::identity(n));
    }
    let mut cycles: Vec<Vec<u16>> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body_end = rest
            .find(')')
            .ok_or_else(|| Error::Parse("unbalanced parenthesis in cycles".into()))?;
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("unexpected text `{rest}` in cycles")));
        }
        let body = &rest[1..body_end];
        let cycle: Vec<u16> = body
            .split(',')
            .map(|tok| {
                tok.parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad point `{tok}` in cycle")))
            })
            .collect::<Result<_>>()?;
        if cycle.len() < 2 {
            return Err(Error::Parse(format!("cycle `({body})` too short")));
        }
        cycles.push(cycle);
        rest = &rest[body_end + 1..];
    }
    Perm::from_cycles(n, &cycles).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_image_list(line: &str, n: usize) -> Result<Perm> {
    let images: Vec<u16> = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u16>()
                .map_err(|_| Error::Parse(format!("bad image `{tok}`")))
        })
        .collect::<Result<_>>()?;
    if images.len() != n {
        return Err(Error::Parse(format!(
            "image list has {} entries, degree is {n}",
            images.len()
        )));
    }
    for &x in &images {
        if x == 0 || x as usize > n {
            return Err(Error::Parse(format!("image {x} outside 1..={n}")));
        }
    }
    Perm::from_images(images.iter().map(|&x| x - 1).collect())
        .map_err(|_| Error::Parse("image list is not a bijection".into()))
}

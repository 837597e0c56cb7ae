//! Text and JSON literal formats.
//!
//! Coloring text form: `n; default=c; i,j=c; ...` — only non-default edges
//! are listed. The color count is contextual (it comes from the active
//! poset), so parsing takes `l` explicitly. JSON form:
//! `{ "n": n, "default": c, "edges": [[i, j, c], ...] }`.
//!
//! Poset literal: `poset { size: l, lt: [[a,b], ...] }` with strict pairs;
//! the reflexive closure is implied.

use serde::{Deserialize, Serialize};

use crate::coloring::{edge_count, Coloring};
use crate::error::{Error, Result};
use crate::poset::ColorPoset;

/// JSON shape of a coloring.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub default: Option<u8>,
    pub edges: Vec<(usize, usize, u8)>,
}

fn most_frequent_color(k: &Coloring) -> u8 {
    let mut counts = vec![0usize; k.colors() as usize];
    for &c in k.edge_colors() {
        counts[c as usize - 1] += 1;
    }
    counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
        .map(|(i, _)| i as u8 + 1)
        .unwrap_or(1)
}

/// Canonical text literal of a coloring.
pub fn coloring_to_text(k: &Coloring) -> String {
    let n = k.size();
    if n < 2 {
        return n.to_string();
    }
    let default = most_frequent_color(k);
    let mut out = format!("{n}; default={default}");
    for j in 2..=n {
        for i in 1..j {
            let c = k.color(i, j);
            if c != default {
                out.push_str(&format!("; {i},{j}={c}"));
            }
        }
    }
    out
}

/// Parses the text literal under `l` available colors.
pub fn coloring_from_text(s: &str, colors: u8) -> Result<Coloring> {
    let mut parts = s.split(';').map(str::trim);
    let head = parts
        .next()
        .ok_or_else(|| Error::InvalidLiteral("empty literal".into()))?;
    let n: usize = head
        .parse()
        .map_err(|_| Error::InvalidLiteral(format!("bad vertex count `{head}`")))?;
    let mut default: Option<u8> = None;
    let mut edges: Vec<(usize, usize, u8)> = Vec::new();
    for part in parts {
        if part.is_empty() {
            continue;
        }
        if let Some(rest) = part.strip_prefix("default") {
            let rest = rest.trim_start();
            let val = rest
                .strip_prefix('=')
                .ok_or_else(|| Error::InvalidLiteral(format!("bad segment `{part}`")))?;
            let c: u8 = val
                .trim()
                .parse()
                .map_err(|_| Error::InvalidLiteral(format!("bad default `{part}`")))?;
            default = Some(c);
            continue;
        }
        let (pair, col) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidLiteral(format!("bad segment `{part}`")))?;
        let (i, j) = pair
            .split_once(',')
            .ok_or_else(|| Error::InvalidLiteral(format!("bad edge `{pair}`")))?;
        let i: usize = i
            .trim()
            .parse()
            .map_err(|_| Error::InvalidLiteral(format!("bad vertex `{i}`")))?;
        let j: usize = j
            .trim()
            .parse()
            .map_err(|_| Error::InvalidLiteral(format!("bad vertex `{j}`")))?;
        let c: u8 = col
            .trim()
            .parse()
            .map_err(|_| Error::InvalidLiteral(format!("bad color `{col}`")))?;
        edges.push((i, j, c));
    }
    build_coloring(n, default, &edges, colors, s)
}

fn build_coloring(
    n: usize,
    default: Option<u8>,
    edges: &[(usize, usize, u8)],
    colors: u8,
    src: &str,
) -> Result<Coloring> {
    let mut seen = vec![false; edge_count(n)];
    for &(i, j, c) in edges {
        if i == j || i < 1 || j < 1 || i > n || j > n {
            return Err(Error::InvalidLiteral(format!(
                "edge {{{i},{j}}} out of range in `{src}`"
            )));
        }
        if c < 1 || c > colors {
            return Err(Error::InvalidLiteral(format!(
                "color {c} out of range 1..={colors} in `{src}`"
            )));
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let idx = crate::coloring::edge_index(a, b);
        if seen[idx] {
            return Err(Error::InvalidLiteral(format!(
                "edge {{{i},{j}}} listed twice in `{src}`"
            )));
        }
        seen[idx] = true;
    }
    let default = match default {
        Some(c) => {
            if c < 1 || c > colors {
                return Err(Error::InvalidLiteral(format!(
                    "default color {c} out of range 1..={colors} in `{src}`"
                )));
            }
            c
        }
        None => {
            if seen.iter().any(|&s| !s) {
                return Err(Error::InvalidLiteral(format!(
                    "unlisted edges but no default color in `{src}`"
                )));
            }
            1
        }
    };
    Ok(Coloring::from_edges(n, colors, default, edges))
}

/// Canonical JSON value of a coloring.
pub fn coloring_to_json(k: &Coloring) -> ColoringJson {
    let n = k.size();
    let default = if n < 2 { None } else { Some(most_frequent_color(k)) };
    let mut edges = Vec::new();
    if let Some(d) = default {
        for j in 2..=n {
            for i in 1..j {
                let c = k.color(i, j);
                if c != d {
                    edges.push((i, j, c));
                }
            }
        }
    }
    ColoringJson { n, default, edges }
}

/// Parses the JSON form under `l` available colors.
pub fn coloring_from_json(v: &ColoringJson, colors: u8) -> Result<Coloring> {
    build_coloring(v.n, v.default, &v.edges, colors, "<json>")
}

/// Canonical poset literal.
pub fn poset_to_text(p: &ColorPoset) -> String {
    let pairs: Vec<String> = p
        .strict_pairs()
        .iter()
        .map(|(a, b)| format!("[{a},{b}]"))
        .collect();
    format!("poset {{ size: {}, lt: [{}] }}", p.size(), pairs.join(", "))
}

/// Parses `poset { size: l, lt: [[a,b], ...] }`.
pub fn poset_from_text(s: &str) -> Result<ColorPoset> {
    let t = s.trim();
    let t = t
        .strip_prefix("poset")
        .ok_or_else(|| Error::InvalidPoset(format!("expected `poset {{...}}`, got `{s}`")))?
        .trim();
    let t = t
        .strip_prefix('{')
        .and_then(|x| x.strip_suffix('}'))
        .ok_or_else(|| Error::InvalidPoset(format!("unbalanced braces in `{s}`")))?;
    let mut size: Option<u8> = None;
    let mut pairs: Vec<(u8, u8)> = Vec::new();
    // split on top-level commas (those outside brackets)
    let mut depth = 0usize;
    let mut field = String::new();
    let mut fields = Vec::new();
    for ch in t.chars() {
        match ch {
            '[' => {
                depth += 1;
                field.push(ch);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                field.push(ch);
            }
            ',' if depth == 0 => {
                fields.push(std::mem::take(&mut field));
            }
            _ => field.push(ch),
        }
    }
    if !field.trim().is_empty() {
        fields.push(field);
    }
    for f in fields {
        let (key, val) = f
            .split_once(':')
            .ok_or_else(|| Error::InvalidPoset(format!("bad field `{f}`")))?;
        match key.trim() {
            "size" => {
                size = Some(
                    val.trim()
                        .parse()
                        .map_err(|_| Error::InvalidPoset(format!("bad size `{val}`")))?,
                );
            }
            "lt" => {
                let v = val.trim();
                let v = v
                    .strip_prefix('[')
                    .and_then(|x| x.strip_suffix(']'))
                    .ok_or_else(|| Error::InvalidPoset(format!("bad lt list `{val}`")))?;
                for chunk in v.split('[').skip(1) {
                    let chunk = chunk
                        .split(']')
                        .next()
                        .ok_or_else(|| Error::InvalidPoset(format!("bad pair in `{val}`")))?;
                    let (a, b) = chunk
                        .split_once(',')
                        .ok_or_else(|| Error::InvalidPoset(format!("bad pair `{chunk}`")))?;
                    let a: u8 = a
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidPoset(format!("bad color `{a}`")))?;
                    let b: u8 = b
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidPoset(format!("bad color `{b}`")))?;
                    pairs.push((a, b));
                }
            }
            other => {
                return Err(Error::InvalidPoset(format!("unknown field `{other}`")));
            }
        }
    }
    let size = size.ok_or_else(|| Error::InvalidPoset("missing size".into()))?;
    ColorPoset::new(size, &pairs)
}

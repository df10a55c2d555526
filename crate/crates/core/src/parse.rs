//! Text forms for rings, modules, elements and instance files.
//!
//! See `docs/format.md` for the grammar.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::module::{ModElem, ModuleSpec};
use crate::ring::RingSpec;

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

/// Splits `s` on `sep`, yielding each piece with its 1-based start column
/// (offset by `base`).
fn pieces(s: &str, sep: impl Fn(char) -> bool, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if sep(c) {
            out.push((base + start, &s[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((base + start, &s[start..]));
    out
}

/// `Z<n>` with optional surrounding whitespace; returns `n`.
fn cyclic_factor(col: usize, text: &str) -> Result<u32> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let col = col + lead;
    let digits = t
        .strip_prefix('Z')
        .or_else(|| t.strip_prefix('z'))
        .ok_or_else(|| err(col, format!("expected `Z<n>`, found `{t}`")))?;
    digits
        .parse::<u32>()
        .map_err(|_| err(col + 1, format!("expected a positive integer, found `{digits}`")))
}

/// `Z6`, `Z4xZ6`.
pub fn parse_ring(text: &str) -> Result<RingSpec> {
    parse_ring_at(text, 1)
}

fn parse_ring_at(text: &str, base: usize) -> Result<RingSpec> {
    if text.trim().is_empty() {
        return Err(err(base, "empty ring"));
    }
    let moduli = pieces(text, |c| c == 'x' || c == 'X', base)
        .into_iter()
        .map(|(col, p)| cyclic_factor(col, p))
        .collect::<Result<Vec<_>>>()?;
    RingSpec::new(moduli).map_err(|e| err(base, e.to_string()))
}

/// Module part relative to a known ring: `;` separates ring components,
/// `+` separates summands, and `0` or an empty component is the zero group.
pub fn parse_module(ring: &RingSpec, text: &str) -> Result<ModuleSpec> {
    parse_module_at(ring, text, 1)
}

fn parse_module_at(ring: &RingSpec, text: &str, base: usize) -> Result<ModuleSpec> {
    let comps = pieces(text, |c| c == ';', base);
    if comps.len() != ring.components() {
        return Err(err(
            base,
            format!(
                "{} component(s) given for a ring with {}",
                comps.len(),
                ring.components()
            ),
        ));
    }
    let mut orders = Vec::with_capacity(comps.len());
    for (col, comp) in comps {
        let t = comp.trim();
        if t.is_empty() || t == "0" {
            orders.push(Vec::new());
            continue;
        }
        let list = pieces(comp, |c| c == '+', col)
            .into_iter()
            .map(|(c, p)| cyclic_factor(c, p))
            .collect::<Result<Vec<_>>>()?;
        orders.push(list);
    }
    ModuleSpec::new(ring.clone(), orders).map_err(|e| err(base, e.to_string()))
}

/// Combined form `RING|MODULE`, e.g. `Z4xZ6|Z4;Z3`.
pub fn parse_instance(text: &str) -> Result<ModuleSpec> {
    let (r, m) = text
        .split_once('|')
        .ok_or_else(|| err(1, "expected `RING|MODULE`"))?;
    let ring = parse_ring_at(r, 1)?;
    parse_module_at(&ring, m, r.chars().count() + 2)
}

/// An element as a bare integer or a parenthesised tuple of residues.
pub fn parse_element(text: &str) -> Result<ModElem> {
    let t = text.trim();
    let inner = match t.strip_prefix('(') {
        Some(rest) => rest
            .strip_suffix(')')
            .ok_or_else(|| err(t.len(), "unclosed `(`"))?,
        None => t,
    };
    let base = if t.starts_with('(') { 2 } else { 1 };
    let residues = pieces(inner, |c| c == ',', base)
        .into_iter()
        .map(|(col, p)| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| err(col, format!("expected a residue, found `{}`", p.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModElem { residues })
}

/// Whitespace-separated element list, e.g. `2 3` or `(1,0) (0,1)`.
pub fn parse_elements(text: &str) -> Result<Vec<ModElem>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if let Some(s) = start.take() {
                out.push(shift(parse_element(&text[s..i]), s)?);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(shift(parse_element(&text[s..]), s)?);
    }
    Ok(out)
}

fn shift<T>(r: Result<T>, by: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column: column + by,
            message,
        },
        other => other,
    })
}

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub label: Option<String>,
    pub module: ModuleSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    ring: Vec<u32>,
    module: Vec<Vec<u32>>,
    label: Option<String>,
}

/// TOML document with `ring = [..]`, `module = [[..], ..]` and an optional
/// `label`.
pub fn parse_instance_file(text: &str) -> Result<InstanceFile> {
    let raw: RawInstance = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map(|s| line_col(text, s.start)).unwrap_or((1, 1));
        Error::Parse {
            line,
            column,
            message: e.message().to_string(),
        }
    })?;
    let at = |key: &str| {
        text.lines()
            .position(|l| l.trim_start().starts_with(key))
            .map_or(1, |i| i + 1)
    };
    let ring = RingSpec::new(raw.ring).map_err(|e| Error::Parse {
        line: at("ring"),
        column: 1,
        message: e.to_string(),
    })?;
    let module = ModuleSpec::new(ring, raw.module).map_err(|e| Error::Parse {
        line: at("module"),
        column: 1,
        message: e.to_string(),
    })?;
    Ok(InstanceFile {
        label: raw.label,
        module,
    })
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

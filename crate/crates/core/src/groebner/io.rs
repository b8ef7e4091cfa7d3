//! Plain-text ideal and basis files.
//!
//! ```text
//! ring: x,y,z
//! order: grevlex x,y,z      (basis files only)
//! reduced: true             (basis files only)
//! x^2-y*z
//! ...
//! ```
//! Blank lines and lines starting with `#` are ignored.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::VariableTable;

use super::{GroebnerBasis, Ideal, Stats};

pub fn write_ideal(ideal: &Ideal) -> String {
    let mut s = format!("ring: {}\n", ideal.ring.names().join(","));
    for g in &ideal.generators {
        s.push_str(&g.to_text(&ideal.ring));
        s.push('\n');
    }
    s
}

pub fn write_basis(gb: &GroebnerBasis) -> String {
    let mut s = format!("ring: {}\n", gb.ring.names().join(","));
    s.push_str(&format!("order: {}\n", gb.order.display(&gb.ring)));
    s.push_str(&format!("reduced: {}\n", gb.reduced));
    for g in &gb.elements {
        s.push_str(&g.to_text_with(&gb.ring, &gb.order));
        s.push('\n');
    }
    s
}

struct Parsed {
    ring: Arc<VariableTable>,
    order: Option<String>,
    reduced: Option<bool>,
    body: Vec<String>,
}

fn split(text: &str) -> Result<Parsed> {
    let mut ring = None;
    let mut order = None;
    let mut reduced = None;
    let mut body = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(r) = line.strip_prefix("ring:") {
            let names: Vec<&str> = r.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            ring = Some(VariableTable::shared(names)?);
        } else if let Some(o) = line.strip_prefix("order:") {
            order = Some(o.trim().to_string());
        } else if let Some(r) = line.strip_prefix("reduced:") {
            reduced = Some(match r.trim() {
                "true" => true,
                "false" => false,
                other => return Err(Error::Invalid(format!("bad reduced flag '{other}'"))),
            });
        } else {
            body.push(line.to_string());
        }
    }
    let ring = ring.ok_or_else(|| Error::Invalid("missing 'ring:' header".into()))?;
    Ok(Parsed { ring, order, reduced, body })
}

fn parse_body(p: &Parsed) -> Result<Vec<Polynomial>> {
    p.body
        .iter()
        .map(|l| Polynomial::parse(l, &p.ring).map_err(Error::from))
        .collect()
}

pub fn read_ideal(text: &str) -> Result<Ideal> {
    let p = split(text)?;
    let gens = parse_body(&p)?;
    Ok(Ideal::new(p.ring, gens))
}

/// Reads a basis file. Nothing is verified here; callers that rely on the
/// basis property should run [`super::is_groebner`].
pub fn read_basis(text: &str) -> Result<GroebnerBasis> {
    let p = split(text)?;
    let order = match &p.order {
        Some(o) => MonomialOrder::parse(o, &p.ring)?,
        None => return Err(Error::Invalid("missing 'order:' header".into())),
    };
    let elements = parse_body(&p)?;
    Ok(GroebnerBasis {
        ring: p.ring.clone(),
        order,
        elements,
        reduced: p.reduced.unwrap_or(false),
        truncated: false,
        stats: Stats::default(),
    })
}

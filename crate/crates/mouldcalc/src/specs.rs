//! Mould specifications as accepted on the command line.
//!
//! Word moulds: `eps`, `I`, `exp`, `J`, `one`, `random:SEED`,
//! `gensym:SEED` (generated symmetrel, self-checked up to the given weight),
//! `geometric:SEED`, an inline JSON table `{...}` or `@file.json`.
//!
//! Arborescent moulds: `eps`, `I` (the right unit), `random:SEED`,
//! `arb:SPEC` (the arborification of a word mould), JSON tables keyed by
//! forests.

use mouldcalc_core::arbomoulds::{arbo_epsilon, arborify_mould, i_arbo, random_arbo, ArboMould};
use mouldcalc_core::moulds::{builtin, gen_symmetrel, random_geometric, random_table, Mould};
use mouldcalc_core::{Error as CoreError, Rational};

use crate::json::parse_table;
use crate::{usage, Result};

fn seed_of(text: &str, spec: &str) -> Result<u64> {
    text.parse()
        .or_else(|_| usage(format!("bad seed in mould spec `{}`", spec)))
}

fn table_text(spec: &str) -> Result<Option<String>> {
    if spec.trim_start().starts_with('{') {
        return Ok(Some(spec.to_string()));
    }
    if let Some(path) = spec.strip_prefix('@') {
        return Ok(Some(std::fs::read_to_string(path)?));
    }
    Ok(None)
}

/// Parses a word-mould spec; `max_weight` bounds the self-check of
/// generated symmetrel moulds.
pub fn parse_mould(spec: &str, max_weight: u32) -> Result<Mould> {
    if let Some(text) = table_text(spec)? {
        let (entries, default) = parse_table(&text)?;
        return Ok(Mould::table("table", entries, default));
    }
    if let Some(seed) = spec.strip_prefix("random:") {
        return Ok(random_table(seed_of(seed, spec)?));
    }
    if let Some(seed) = spec.strip_prefix("gensym:") {
        return Ok(gen_symmetrel(seed_of(seed, spec)?, max_weight.max(1))?);
    }
    if let Some(seed) = spec.strip_prefix("geometric:") {
        let one = Rational::from_integer(1.into());
        return Ok(random_geometric(seed_of(seed, spec)?, &one, &one));
    }
    Ok(builtin(spec)?)
}

pub fn parse_arbomould(spec: &str, max_weight: u32) -> Result<ArboMould> {
    if let Some(text) = table_text(spec)? {
        let (entries, default) = parse_table(&text)?;
        return Ok(ArboMould::table("table", entries, default));
    }
    if let Some(inner) = spec.strip_prefix("arb:") {
        return Ok(arborify_mould(&parse_mould(inner, max_weight)?));
    }
    if let Some(seed) = spec.strip_prefix("random:") {
        return Ok(random_arbo(seed_of(seed, spec)?));
    }
    match spec {
        "eps" | "epsilon" => Ok(arbo_epsilon()),
        "I" => Ok(i_arbo()),
        _ => Err(CoreError::UnknownMould(spec.to_string()).into()),
    }
}

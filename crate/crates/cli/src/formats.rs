//! On-disk JSON formats for complexes and posets.
//!
//! A complex file is `{ "facets": [[1,2,3], ...], "name": "..."? }`; a poset
//! file is `{ "cells": [{ "id", "rank", "boundary" }, ...], "name": "..."? }`.
//! The kind is detected from the key, so one parser serves both commands.

use bblab_core::complex::SimplicialComplex;
use bblab_core::posets::{Cell, SimplicialPoset};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub facets: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellEntry {
    pub id: String,
    pub rank: usize,
    #[serde(default)]
    pub boundary: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub cells: Vec<CellEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputFile {
    Complex(ComplexFile),
    Poset(PosetFile),
}

impl InputFile {
    pub fn name(&self) -> Option<&str> {
        match self {
            InputFile::Complex(c) => c.name.as_deref(),
            InputFile::Poset(p) => p.name.as_deref(),
        }
    }
}

/// Parses either file kind. Syntax errors keep serde_json's line/column
/// diagnostics; shape errors name the offending field.
pub fn parse_input(text: &str) -> Result<InputFile, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("JSON parse error: {e}"))?;
    let obj = value
        .as_object()
        .ok_or_else(|| "input must be a JSON object".to_string())?;
    if obj.contains_key("facets") {
        let file: ComplexFile =
            serde_json::from_value(value).map_err(|e| format!("bad complex file: {e}"))?;
        Ok(InputFile::Complex(file))
    } else if obj.contains_key("cells") {
        let file: PosetFile =
            serde_json::from_value(value).map_err(|e| format!("bad poset file: {e}"))?;
        Ok(InputFile::Poset(file))
    } else {
        Err("input object needs a \"facets\" (complex) or \"cells\" (poset) key".to_string())
    }
}

impl ComplexFile {
    pub fn from_complex(k: &SimplicialComplex, name: Option<String>) -> Self {
        ComplexFile { facets: k.facets_original_labels(), name }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, String> {
        SimplicialComplex::from_facets(&self.facets).map_err(|e| e.to_string())
    }
}

impl PosetFile {
    pub fn from_poset(p: &SimplicialPoset, name: Option<String>) -> Self {
        let cells = p
            .cells()
            .iter()
            .map(|c| CellEntry { id: c.id.clone(), rank: c.rank, boundary: c.boundary.clone() })
            .collect();
        PosetFile { cells, name }
    }

    /// Structural construction only; Boolean-interval validation is the
    /// caller's decision (analysis runs it, raw round-trips need not).
    pub fn to_poset(&self) -> Result<SimplicialPoset, String> {
        let cells = self
            .cells
            .iter()
            .map(|c| {
                let boundary: Vec<&str> = c.boundary.iter().map(String::as_str).collect();
                Cell::new(&c.id, c.rank, &boundary)
            })
            .collect();
        SimplicialPoset::from_cells(cells).map_err(|e| e.to_string())
    }
}

/// Serializes any of the report/file types as pretty JSON with a trailing
/// newline, the byte-stable form every command emits.
pub fn to_json_bytes<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

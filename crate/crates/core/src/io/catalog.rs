use serde::Serialize;

use super::parse_cycle_set;
use crate::cycleset::CycleSet;
use crate::error::{Error, Result};

/// Facts recorded for a catalog entry and recomputed by the regression suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub group_order: usize,
    pub ideal_sizes: Vec<usize>,
    pub simple: bool,
    pub brace_simple: bool,
    pub irretractable: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: String,
    pub provenance: String,
    pub cycle_set: CycleSet,
    pub source: &'static str,
    pub expected: Expected,
}

struct Fixture {
    id: &'static str,
    source: &'static str,
    group_order: usize,
    ideal_sizes: &'static [usize],
    simple: bool,
    irretractable: bool,
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        id: "P4",
        source: include_str!("../../catalog/P4.txt"),
        group_order: 8,
        ideal_sizes: &[1, 4, 8],
        simple: true,
        irretractable: true,
    },
    Fixture {
        id: "E12a",
        source: include_str!("../../catalog/E12a.txt"),
        group_order: 24,
        ideal_sizes: &[1, 24],
        simple: true,
        irretractable: true,
    },
    Fixture {
        id: "E12b",
        source: include_str!("../../catalog/E12b.txt"),
        group_order: 48,
        ideal_sizes: &[1, 24, 48],
        simple: true,
        irretractable: true,
    },
    Fixture {
        id: "E16",
        source: include_str!("../../catalog/E16.txt"),
        group_order: 32,
        ideal_sizes: &[1, 16, 32],
        simple: true,
        irretractable: true,
    },
    Fixture {
        id: "E27",
        source: include_str!("../../catalog/E27.txt"),
        group_order: 81,
        ideal_sizes: &[1, 27, 81],
        simple: true,
        irretractable: true,
    },
    Fixture {
        id: "C_2",
        source: include_str!("../../catalog/C_2.txt"),
        group_order: 2,
        ideal_sizes: &[1, 2],
        simple: true,
        irretractable: false,
    },
    Fixture {
        id: "C_3",
        source: include_str!("../../catalog/C_3.txt"),
        group_order: 3,
        ideal_sizes: &[1, 3],
        simple: true,
        irretractable: false,
    },
    Fixture {
        id: "C_5",
        source: include_str!("../../catalog/C_5.txt"),
        group_order: 5,
        ideal_sizes: &[1, 5],
        simple: true,
        irretractable: false,
    },
    Fixture {
        id: "C_7",
        source: include_str!("../../catalog/C_7.txt"),
        group_order: 7,
        ideal_sizes: &[1, 7],
        simple: true,
        irretractable: false,
    },
];

pub fn catalog_ids() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.id).collect()
}

/// All embedded entries, parsed from their text fixtures.
pub fn catalog() -> Vec<CatalogEntry> {
    FIXTURES
        .iter()
        .map(|f| load(f).expect("embedded fixtures are valid"))
        .collect()
}

pub fn catalog_entry(id: &str) -> Result<CatalogEntry> {
    let fixture = FIXTURES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::Precondition(format!("unknown catalog id '{id}'")))?;
    load(fixture)
}

fn load(f: &Fixture) -> Result<CatalogEntry> {
    let comments: Vec<&str> = f
        .source
        .lines()
        .filter_map(|l| l.strip_prefix('#'))
        .map(str::trim)
        .collect();
    let description = comments.first().copied().unwrap_or_default().to_string();
    let provenance = comments
        .get(1)
        .copied()
        .unwrap_or("constructed")
        .to_string();
    // A simple brace has exactly the ideals {0} and the whole carrier.
    let brace_simple = f.ideal_sizes.len() == 2;
    Ok(CatalogEntry {
        id: f.id,
        description,
        provenance,
        cycle_set: parse_cycle_set(f.source)?,
        source: f.source,
        expected: Expected {
            group_order: f.group_order,
            ideal_sizes: f.ideal_sizes.to_vec(),
            simple: f.simple,
            brace_simple,
            irretractable: f.irretractable,
        },
    })
}

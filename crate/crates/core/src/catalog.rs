//! Built-in instances. Only the 69-50 is literal data; every other entry is
//! replayed from a recipe over it or over generated masters.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::codec::parse_document;
use crate::coords::Coordinatization;
use crate::error::{Error, Result};
use crate::generate::{master_from_components, ComponentSet, EdgeMode};
use crate::hypergraph::Mmph;
use crate::structure::{reduce_to_critical, weak_extend};

/// The 69-50 with its coordinatization, one `symbol={…}` line per vertex.
pub const DATA_69_50: &str = include_str!("../data/69-50.mmp");

/// Reduction seed of the 24-24 that yields the catalog 18-9.
pub const SEED_18_9: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Embedded { source: &'static str },
    Derived { recipe: &'static str },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub mmph: Mmph,
    pub coords: Option<Coordinatization>,
    pub provenance: Provenance,
    pub note: Option<&'static str>,
}

struct Recipe {
    name: &'static str,
    recipe: &'static str,
    note: Option<&'static str>,
}

const RECIPES: &[Recipe] = &[
    Recipe { name: "69-50", recipe: "embedded", note: None },
    Recipe { name: "33-50", recipe: "strip(69-50)", note: None },
    Recipe { name: "yu-oh-13-16", recipe: "master({0,±1},3,maximal)", note: None },
    Recipe { name: "25-16", recipe: "weak_extend(yu-oh-13-16)", note: None },
    Recipe { name: "24-24", recipe: "master({0,±1},4,bases)", note: None },
    Recipe { name: "18-9", recipe: "reduce(24-24, seed 1)", note: None },
    Recipe { name: "17-9", recipe: "delete_vertex(18-9, 1)", note: None },
    Recipe { name: "19-9", recipe: "weak_extend(17-9)", note: None },
    Recipe { name: "master-97-64", recipe: "master({0,±1,±2,5},3,bases)", note: None },
    Recipe { name: "master-81-52", recipe: "master({0,±1,±r2,3},3,bases)", note: None },
    Recipe { name: "master-169-120", recipe: "master({0,±w,2w,±w2,2w2},3,bases)", note: None },
    Recipe {
        name: "master-157-100",
        recipe: "master({0,±1,2w,±w2,2w2},3,bases)",
        note: Some("expected 157-100; the largest connected component of the generated bases is 145-96"),
    },
];

pub fn names() -> Vec<&'static str> {
    RECIPES.iter().map(|r| r.name).collect()
}

fn cache() -> &'static Mutex<HashMap<&'static str, CatalogEntry>> {
    static CACHE: OnceLock<Mutex<HashMap<&'static str, CatalogEntry>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Materializes an entry, replaying its recipe on first use.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let recipe = RECIPES
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    if let Some(e) = cache().lock().unwrap().get(recipe.name) {
        return Ok(e.clone());
    }
    let (mmph, coords) = build(recipe.name)?;
    let provenance = if recipe.recipe == "embedded" {
        Provenance::Embedded { source: "literal coordinatization of the 69-50" }
    } else {
        Provenance::Derived { recipe: recipe.recipe }
    };
    let entry = CatalogEntry { name: recipe.name, mmph, coords, provenance, note: recipe.note };
    cache().lock().unwrap().insert(recipe.name, entry.clone());
    Ok(entry)
}

fn master(components: &str, dim: usize, mode: EdgeMode) -> Result<(Mmph, Option<Coordinatization>)> {
    let s: ComponentSet = components.parse()?;
    let m = master_from_components(&s, dim, mode)?;
    Ok((m.mmph, Some(m.coords)))
}

fn with_coords(name: &str) -> Result<(Mmph, Coordinatization)> {
    let e = get(name)?;
    Ok((e.mmph, e.coords.expect("entry has coordinates")))
}

fn build(name: &str) -> Result<(Mmph, Option<Coordinatization>)> {
    match name {
        "69-50" => {
            let (h, c) = parse_document(DATA_69_50)?;
            Ok((h, c))
        }
        "33-50" => {
            let (h, c) = with_coords("69-50")?;
            let s = h.strip_mult1()?;
            let c = c.restrict(&s.mmph);
            Ok((s.mmph, Some(c)))
        }
        "yu-oh-13-16" => master("0,±1", 3, EdgeMode::AllMaximalCliques),
        "25-16" => {
            let (h, c) = with_coords("yu-oh-13-16")?;
            let e = weak_extend(&h, &c)?;
            Ok((e.mmph, Some(e.coords)))
        }
        "24-24" => master("0,±1", 4, EdgeMode::BasesOnly),
        "18-9" => {
            let (h, c) = with_coords("24-24")?;
            let t = reduce_to_critical(&h, SEED_18_9)?;
            let c = c.restrict(&t.mmph);
            Ok((t.mmph, Some(c)))
        }
        "17-9" => {
            let (h, c) = with_coords("18-9")?;
            let lowest = h.vertices_by_symbol()[0];
            let d = h.delete_vertex(lowest)?;
            let c = c.restrict(&d);
            Ok((d, Some(c)))
        }
        "19-9" => {
            let (h, c) = with_coords("17-9")?;
            let e = weak_extend(&h, &c)?;
            Ok((e.mmph, Some(e.coords)))
        }
        "master-97-64" => master("0,±1,±2,5", 3, EdgeMode::BasesOnly),
        "master-81-52" => master("0,±1,±r2,3", 3, EdgeMode::BasesOnly),
        "master-169-120" => master("0,±w,2w,±w2,2w2", 3, EdgeMode::BasesOnly),
        "master-157-100" => master("0,±1,2w,±w2,2w2", 3, EdgeMode::BasesOnly),
        _ => Err(Error::UnknownEntry(name.to_string())),
    }
}

#![allow(dead_code)]

use sameorder::checks::{build_catalog_entries, BuiltEntry, EntrySlot};
use sameorder::constructions::{catalog, GroupRecipe};
use sameorder::group::{Element, Group, GroupHandle, DEFAULT_CAP};
use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

/// The repository data directory, resolved relative to this crate.
pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Build a group from a spec string ("A5", "L2(7)", "file:q8.gens", ...).
pub fn build(spec: &str) -> BuiltEntry {
    let recipe = GroupRecipe::parse(spec).unwrap_or_else(|e| panic!("parse {spec}: {e}"));
    BuiltEntry::build(recipe, &data_dir(), DEFAULT_CAP)
        .unwrap_or_else(|e| panic!("build {spec}: {e}"))
}

/// The full catalog, built once and shared between tests in one binary.
pub fn catalog_slots() -> &'static [EntrySlot] {
    static SLOTS: OnceLock<Vec<EntrySlot>> = OnceLock::new();
    SLOTS.get_or_init(|| {
        let dir = data_dir();
        let recipes = catalog(&dir).expect("load catalog.toml");
        build_catalog_entries(recipes, &dir, DEFAULT_CAP).expect("build catalog")
    })
}

pub fn built_slots() -> impl Iterator<Item = &'static BuiltEntry> {
    catalog_slots().iter().map(|s| match s {
        EntrySlot::Built(e) => &**e,
        EntrySlot::Missing { recipe, reason } => {
            panic!("catalog entry {} failed to build: {reason}", recipe.name)
        }
    })
}

pub fn catalog_entry(name: &str) -> &'static BuiltEntry {
    built_slots()
        .find(|e| e.recipe.name == name)
        .unwrap_or_else(|| panic!("no catalog entry named {name}"))
}

/// Nilpotency by the ascending central series, computed from scratch over
/// the element table. Z_0 = 1, Z_{i+1} = {g : [g, x] in Z_i for all
/// generators x}; the generator test suffices because each Z_i is normal.
/// Nilpotent iff the series reaches the whole group before stalling.
fn handle_is_nilpotent<E: Element>(h: &GroupHandle<E>) -> bool {
    let elems: Vec<&E> = h.elements().collect();
    let mut z: HashSet<&E> = HashSet::new();
    z.insert(h.identity());
    loop {
        let next: HashSet<&E> = elems
            .iter()
            .copied()
            .filter(|g| {
                h.generators().iter().all(|x| {
                    let comm = g.inverse().compose(&x.inverse()).compose(g).compose(x);
                    z.contains(&comm)
                })
            })
            .collect();
        if next.len() == elems.len() {
            return true;
        }
        if next.len() == z.len() {
            return false;
        }
        z = next;
    }
}

/// Structural nilpotency oracle, independent of the Frobenius-count route.
pub fn is_nilpotent_structural(g: &Group) -> bool {
    match g {
        Group::Perm(h) => handle_is_nilpotent(h),
        Group::Mat(h) => handle_is_nilpotent(h),
    }
}

/// A second structural route: G is nilpotent iff every Sylow subgroup is
/// normal, and the Sylow p-subgroup is normal iff the set of elements of
/// p-power order is closed under multiplication (it is then the unique
/// Sylow p). Pure multiplication-table reasoning, no counting.
fn handle_sylows_normal<E: Element>(h: &GroupHandle<E>) -> bool {
    for p in sameorder::num::prime_divisors(h.order()) {
        let pelems: Vec<&E> = h
            .elements()
            .filter(|e| sameorder::num::is_power_of(e.order(), p))
            .collect();
        for x in &pelems {
            for y in &pelems {
                if !sameorder::num::is_power_of(x.compose(y).order(), p) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn sylows_all_normal(g: &Group) -> bool {
    match g {
        Group::Perm(h) => handle_sylows_normal(h),
        Group::Mat(h) => handle_sylows_normal(h),
    }
}

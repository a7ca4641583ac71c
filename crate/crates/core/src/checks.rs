//! The named verification checks, per-group and catalog-level.

use crate::constructions::{GroupRecipe, RecipeKind};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::num;
use crate::report::{CheckResult, CheckStatus};
use crate::spectrum::{compute_spectrum, cyclic_containment, OrderSpectrum};
use crate::structure::{
    all_prime_counts_distinct, alpha4_prime_bound, classify_l2_q, exists_distinct_odd_pair,
    is_cpp, prime_graph, Alpha4Outcome, L2Class,
};
use std::sync::OnceLock;
use std::collections::BTreeSet;
use std::path::Path;

pub const PER_GROUP_CHECKS: &[&str] = &[
    "frobenius",
    "shen-bound",
    "nilpotent-spectral",
    "cyclic-containment",
    "l2-counts",
    "sz-counts",
    "cpp",
    "c22-classification",
    "two-odd-primes",
    "all-pairs-distinct",
    "alpha4-bound",
    "prime-graph-triple",
];

pub const CATALOG_CHECKS: &[&str] = &["eight-groups", "thompson-pair"];

pub fn is_known_check(id: &str) -> bool {
    PER_GROUP_CHECKS.contains(&id) || CATALOG_CHECKS.contains(&id)
}

/// Orders up to which simplicity is verified by enumeration rather than
/// trusted from the manifest.
pub const SIMPLE_VERIFY_LIMIT: u64 = 100_000;

/// A recipe together with its enumerated group and spectrum.
pub struct BuiltEntry {
    pub recipe: GroupRecipe,
    pub group: Group,
    pub spec: OrderSpectrum,
    cap: usize,
    nonabelian_simple: OnceLock<Option<bool>>,
}

impl BuiltEntry {
    pub fn build(recipe: GroupRecipe, data_dir: &Path, cap: usize) -> Result<BuiltEntry> {
        let group = recipe.build(data_dir, cap)?;
        let spec = compute_spectrum(&group);
        Ok(BuiltEntry {
            recipe,
            group,
            spec,
            cap,
            nonabelian_simple: OnceLock::new(),
        })
    }

    /// Is this group nonabelian simple? Verified by enumeration when the
    /// order permits, otherwise taken from the manifest claim; `None` when
    /// neither is available. A manifest claim contradicted by enumeration
    /// is an error.
    pub fn nonabelian_simple(&self) -> Result<Option<bool>> {
        if let Some(v) = self.nonabelian_simple.get() {
            return Ok(*v);
        }
        let claimed = self.recipe.claimed_simple;
        let value = if self.group.order() > SIMPLE_VERIFY_LIMIT {
            claimed.map(|s| s && !self.group.is_abelian())
        } else {
            let actual = self.group.is_simple()?;
            if let Some(c) = claimed {
                if c != actual {
                    return Err(Error::Build(format!(
                        "`{}`: manifest claims simple = {c}, enumeration says {actual}",
                        self.recipe.name
                    )));
                }
            }
            Some(actual && !self.group.is_abelian())
        };
        let _ = self.nonabelian_simple.set(value);
        Ok(value)
    }
}

fn pass_fail(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

fn na(id: &str, details: impl Into<String>) -> CheckResult {
    CheckResult::new(id, CheckStatus::NotApplicable, details)
}

/// Run one per-group check. `Err` only for an unknown check id.
pub fn run_group_check(id: &str, entry: &BuiltEntry) -> Result<CheckResult> {
    let spec = &entry.spec;
    let result = match id {
        "frobenius" => {
            let rep = spec.check_frobenius();
            if rep.ok() {
                CheckResult::new(
                    id,
                    CheckStatus::Pass,
                    format!(
                        "k | f(k) for all {} divisors of {}; φ(t) | s_t for all t",
                        num::divisors(spec.group_order()).len(),
                        spec.group_order()
                    ),
                )
            } else {
                let mut parts = Vec::new();
                for (k, f) in &rep.divisor_violations {
                    parts.push(format!("k={k}: f(k)={f} not divisible"));
                }
                for (t, s) in &rep.totient_violations {
                    parts.push(format!("t={t}: φ(t) ∤ s_t={s}"));
                }
                CheckResult::new(id, CheckStatus::Fail, parts.join("; "))
            }
        }
        "shen-bound" => CheckResult::new(
            id,
            pass_fail(spec.shen_bound_ok()),
            format!("|π| = {} vs |nse| = {}", spec.pi().len(), spec.alpha_size()),
        ),
        "nilpotent-spectral" => {
            let nilpotent = spec.is_nilpotent_spectral();
            match spec.alpha_size() {
                1 | 2 => CheckResult::new(
                    id,
                    pass_fail(nilpotent),
                    format!("|nse| = {} requires nilpotency; spectral test: {nilpotent}", spec.alpha_size()),
                ),
                3 => {
                    let solvable = entry.group.is_solvable()?;
                    CheckResult::new(
                        id,
                        pass_fail(solvable),
                        format!("|nse| = 3 requires solvability; derived series says {solvable} (spectral nilpotency: {nilpotent})"),
                    )
                }
                n => na(id, format!("|nse| = {n} carries no nilpotency/solvability claim (spectral nilpotency: {nilpotent})")),
            }
        }
        "cyclic-containment" => match entry.recipe.kind {
            RecipeKind::Cyclic(n) => {
                let mut bad = Vec::new();
                for m in num::divisors(n as u64) {
                    if !cyclic_containment(m as u32, n, entry.cap)? {
                        bad.push(m);
                    }
                }
                if bad.is_empty() {
                    CheckResult::new(
                        id,
                        CheckStatus::Pass,
                        format!("nse(C_m) ⊆ nse(C_{n}) for every divisor m of {n}"),
                    )
                } else {
                    CheckResult::new(id, CheckStatus::Fail, format!("containment fails for m ∈ {bad:?}"))
                }
            }
            _ => na(id, "only applies to cyclic recipes"),
        },
        "l2-counts" => match entry.recipe.kind {
            RecipeKind::Psl2(q) => {
                let rep = crate::structure::verify_l2_counts(q, spec)?;
                if rep.class == L2Class::Other {
                    na(id, rep.notes.join("; "))
                } else if rep.ok() {
                    CheckResult::new(id, CheckStatus::Pass, rep.notes.join("; "))
                } else {
                    CheckResult::new(id, CheckStatus::Fail, rep.failures.join("; "))
                }
            }
            _ => na(id, "only applies to L2(q) recipes"),
        },
        "sz-counts" => match entry.recipe.kind {
            RecipeKind::Sz(q) => {
                let rep = crate::structure::verify_sz_counts(q, spec)?;
                if rep.ok() {
                    CheckResult::new(id, CheckStatus::Pass, rep.notes.join("; "))
                } else {
                    CheckResult::new(id, CheckStatus::Fail, rep.failures.join("; "))
                }
            }
            _ => na(id, "only applies to Sz(q) recipes"),
        },
        "cpp" => {
            let primes = spec.pi();
            if primes.is_empty() {
                na(id, "trivial group has no primes")
            } else {
                let mut details = Vec::new();
                let mut broken = Vec::new();
                for &p in &primes {
                    match is_cpp(&entry.group, spec, p) {
                        Ok(v) => details.push(format!("p={p}: {v}")),
                        Err(e) => broken.push(e.to_string()),
                    }
                }
                if broken.is_empty() {
                    CheckResult::new(
                        id,
                        CheckStatus::Pass,
                        format!("centralizer and spectrum methods agree; {}", details.join(", ")),
                    )
                } else {
                    CheckResult::new(id, CheckStatus::Fail, broken.join("; "))
                }
            }
        }
        "c22-classification" => match entry.nonabelian_simple()? {
            None => na(id, "simplicity unknown (order above enumeration limit, no manifest claim)"),
            Some(false) => na(id, "only applies to nonabelian simple groups"),
            Some(true) => {
                if !spec.pi().contains(&2) {
                    na(id, "group of odd order")
                } else {
                    let c = is_cpp(&entry.group, spec, 2)?;
                    let family = c22_family(&entry.recipe);
                    CheckResult::new(
                        id,
                        pass_fail(c == family),
                        format!("C_{{2,2}} = {c}; classification family member = {family}"),
                    )
                }
            }
        },
        "two-odd-primes" => match entry.nonabelian_simple()? {
            None => na(id, "simplicity unknown (order above enumeration limit, no manifest claim)"),
            Some(false) => na(id, "only applies to nonabelian simple groups"),
            Some(true) => {
                let pair = exists_distinct_odd_pair(spec);
                let big_enough = spec.alpha_size() >= 4;
                let s2 = spec.s(2);
                CheckResult::new(
                    id,
                    pass_fail(pair && big_enough && s2 > 1),
                    format!(
                        "distinct odd pair: {pair}; |nse| = {} (≥ 4 required); s_2 = {s2} (> 1 required)",
                        spec.alpha_size()
                    ),
                )
            }
        },
        "all-pairs-distinct" => match entry.nonabelian_simple()? {
            None => na(id, "simplicity unknown (order above enumeration limit, no manifest claim)"),
            Some(false) => na(id, "conjecture is about nonabelian simple groups"),
            Some(true) => {
                let counts: Vec<String> = spec
                    .pi()
                    .iter()
                    .map(|&p| format!("s_{p}={}", spec.s(p)))
                    .collect();
                CheckResult::new(
                    id,
                    pass_fail(all_prime_counts_distinct(spec)),
                    counts.join(", "),
                )
            }
        },
        "alpha4-bound" => match alpha4_prime_bound(spec) {
            Alpha4Outcome::NotApplicable(why) => na(id, why),
            Alpha4Outcome::Checked { triple, pass } => CheckResult::new(
                id,
                pass_fail(pass),
                format!(
                    "nse realized by primes {:?}; |π| = {} (3 required)",
                    triple,
                    spec.pi().len()
                ),
            ),
        },
        "prime-graph-triple" => {
            let graph = prime_graph(spec);
            match entry.nonabelian_simple()? {
                None => na(id, "simplicity unknown (order above enumeration limit, no manifest claim)"),
                Some(false) => na(id, "lemma hypothesis: nonabelian simple"),
                Some(true) if !graph.is_connected() => na(
                    id,
                    format!(
                        "Γ(G) disconnected ({} components); lemma hypothesis not met",
                        graph.component_count()
                    ),
                ),
                Some(true) => {
                    let triple = graph.independent_triple();
                    if entry.recipe.kind == RecipeKind::Alternating(10) {
                        na(
                            id,
                            format!("A10 is the lemma's excluded case; independent triple: {triple:?}"),
                        )
                    } else {
                        CheckResult::new(
                            id,
                            pass_fail(triple.is_some()),
                            format!("Γ(G) connected; independent triple: {triple:?}"),
                        )
                    }
                }
            }
        }
        other if CATALOG_CHECKS.contains(&other) => {
            na(id, "catalog-level check; run with --catalog")
        }
        other => return Err(Error::UnknownCheck(other.into())),
    };
    Ok(result)
}

/// Whether a recipe falls in the classification's C_{2,2} families:
/// A5, A6, L3(4), L2(q) for q a 2-power / Fermat / Mersenne prime (plus
/// the isomorphism coincidences L2(4) ≅ L2(5) ≅ A5 and L2(9) ≅ A6), Sz(q).
fn c22_family(recipe: &GroupRecipe) -> bool {
    match &recipe.kind {
        RecipeKind::Alternating(5) | RecipeKind::Alternating(6) => true,
        RecipeKind::Psl2(q) => matches!(q, 9) || classify_l2_q(*q) != L2Class::Other,
        RecipeKind::Sz(_) => true,
        RecipeKind::File(_) => recipe.name == "L3(4)",
        _ => false,
    }
}

/// A catalog entry: either built, or recorded as unavailable with a reason.
pub enum EntrySlot {
    Built(Box<BuiltEntry>),
    Missing { recipe: GroupRecipe, reason: String },
}

impl EntrySlot {
    pub fn name(&self) -> &str {
        match self {
            EntrySlot::Built(e) => &e.recipe.name,
            EntrySlot::Missing { recipe, .. } => &recipe.name,
        }
    }
}

/// Build every catalog recipe. A file-backed entry whose data is missing
/// becomes a `Missing` slot (reported as skipped); any other error aborts.
pub fn build_catalog_entries(
    recipes: Vec<GroupRecipe>,
    data_dir: &Path,
    cap: usize,
) -> Result<Vec<EntrySlot>> {
    let mut slots = Vec::with_capacity(recipes.len());
    for recipe in recipes {
        let file_backed = matches!(recipe.kind, RecipeKind::File(_));
        match BuiltEntry::build(recipe.clone(), data_dir, cap) {
            Ok(e) => slots.push(EntrySlot::Built(Box::new(e))),
            Err(Error::Io { path, source }) if file_backed => slots.push(EntrySlot::Missing {
                recipe,
                reason: format!("{path}: {source}"),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(slots)
}

fn find_slot<'a>(slots: &'a [EntrySlot], name: &str) -> Option<&'a EntrySlot> {
    slots.iter().find(|s| s.name() == name)
}

/// The eight nonabelian simple groups whose orders have exactly three prime
/// divisors relevant here: A5 must be the unique one with |nse| = 4, the
/// rest have |nse| ≥ 5 (exactly 5 for L2(7) and L2(8)), and each must be
/// verified nonabelian simple.
pub fn eight_groups_check(slots: &[EntrySlot]) -> Result<CheckResult> {
    const NAMES: [&str; 8] = [
        "A5", "L2(7)", "L2(8)", "L2(9)", "L2(17)", "L3(3)", "U3(3)", "U4(2)",
    ];
    let id = "eight-groups";
    let mut failures = Vec::new();
    let mut skipped = Vec::new();
    let mut sizes = Vec::new();
    for name in NAMES {
        let entry = match find_slot(slots, name) {
            Some(EntrySlot::Built(e)) => e,
            Some(EntrySlot::Missing { reason, .. }) => {
                skipped.push(format!("{name} ({reason})"));
                continue;
            }
            None => {
                skipped.push(format!("{name} (not in catalog)"));
                continue;
            }
        };
        let alpha = entry.spec.alpha_size();
        sizes.push(format!("{name}: |nse| = {alpha}"));
        match entry.nonabelian_simple()? {
            Some(true) => {}
            other => failures.push(format!("{name}: nonabelian simple not confirmed ({other:?})")),
        }
        let ok = match name {
            "A5" => alpha == 4,
            "L2(7)" | "L2(8)" => alpha == 5,
            _ => alpha >= 5,
        };
        if !ok {
            failures.push(format!("{name}: |nse| = {alpha} out of range"));
        }
    }
    if !skipped.is_empty() {
        return Ok(CheckResult::new(
            id,
            CheckStatus::Skipped,
            format!("verdict incomplete; missing: {}", skipped.join(", ")),
        ));
    }
    Ok(if failures.is_empty() {
        CheckResult::new(
            id,
            CheckStatus::Pass,
            format!("A5 is the unique |nse| = 4 entry; {}", sizes.join(", ")),
        )
    } else {
        CheckResult::new(id, CheckStatus::Fail, failures.join("; "))
    })
}

/// The pair of nonisomorphic groups with the same order and same-order
/// type: both must have order 40320, identical nse sets, and clean
/// Frobenius reports.
pub fn thompson_pair_check(slots: &[EntrySlot]) -> Result<CheckResult> {
    const NAMES: [&str; 2] = ["2^4:A7", "L3(4):2"];
    let id = "thompson-pair";
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for name in NAMES {
        match find_slot(slots, name) {
            Some(EntrySlot::Built(e)) => entries.push(e),
            Some(EntrySlot::Missing { reason, .. }) => {
                skipped.push(format!("{name} ({reason})"))
            }
            None => skipped.push(format!("{name} (not in catalog)")),
        }
    }
    if !skipped.is_empty() {
        return Ok(CheckResult::new(
            id,
            CheckStatus::Skipped,
            format!("missing: {}", skipped.join(", ")),
        ));
    }
    let (g, h) = (entries[0], entries[1]);
    let mut failures = Vec::new();
    for e in [g, h] {
        if e.group.order() != 40320 {
            failures.push(format!("{}: order {} ≠ 40320", e.recipe.name, e.group.order()));
        }
        if !e.spec.check_frobenius().ok() {
            failures.push(format!("{}: Frobenius violations", e.recipe.name));
        }
    }
    let nse_g: BTreeSet<u64> = g.spec.nse().into_iter().collect();
    let nse_h: BTreeSet<u64> = h.spec.nse().into_iter().collect();
    if nse_g != nse_h {
        failures.push(format!("nse differs: {nse_g:?} vs {nse_h:?}"));
    }
    Ok(if failures.is_empty() {
        CheckResult::new(
            id,
            CheckStatus::Pass,
            format!(
                "both of order 40320 with nse {:?}; full spectra: {} vs {}",
                nse_g.iter().collect::<Vec<_>>(),
                fmt_counts(&g.spec),
                fmt_counts(&h.spec),
            ),
        )
    } else {
        CheckResult::new(id, CheckStatus::Fail, failures.join("; "))
    })
}

fn fmt_counts(spec: &OrderSpectrum) -> String {
    let parts: Vec<String> = spec
        .counts()
        .iter()
        .map(|(t, c)| format!("{t}:{c}"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn run_catalog_check(id: &str, slots: &[EntrySlot]) -> Result<CheckResult> {
    match id {
        "eight-groups" => eight_groups_check(slots),
        "thompson-pair" => thompson_pair_check(slots),
        other => Err(Error::UnknownCheck(other.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn entry(spec: &str) -> BuiltEntry {
        let recipe = GroupRecipe::parse(spec).unwrap();
        BuiltEntry::build(recipe, Path::new("data"), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn frobenius_and_shen_pass_on_a5() {
        let e = entry("A5");
        for id in ["frobenius", "shen-bound", "alpha4-bound", "cpp"] {
            let r = run_group_check(id, &e).unwrap();
            assert_eq!(r.status, CheckStatus::Pass, "{id}: {}", r.details);
        }
    }

    #[test]
    fn applicability_gates() {
        let e = entry("S4");
        assert_eq!(
            run_group_check("alpha4-bound", &e).unwrap().status,
            CheckStatus::NotApplicable
        );
        assert_eq!(
            run_group_check("l2-counts", &e).unwrap().status,
            CheckStatus::NotApplicable
        );
        assert_eq!(
            run_group_check("two-odd-primes", &e).unwrap().status,
            CheckStatus::NotApplicable
        );
        assert_eq!(
            run_group_check("eight-groups", &e).unwrap().status,
            CheckStatus::NotApplicable
        );
        assert!(run_group_check("no-such-check", &e).is_err());
    }

    #[test]
    fn nilpotent_spectral_tiers() {
        let c4 = entry("C4"); // counts 1,1,2 → nse {1,2}, the nilpotency tier
        let r = run_group_check("nilpotent-spectral", &c4).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "{}", r.details);

        let s3 = entry("S3");
        let r = run_group_check("nilpotent-spectral", &s3).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "|nse|(S3) = 3, solvable: {}", r.details);

        let a5 = entry("A5");
        let r = run_group_check("nilpotent-spectral", &a5).unwrap();
        assert_eq!(r.status, CheckStatus::NotApplicable);
    }

    #[test]
    fn cyclic_containment_check_runs() {
        let c12 = entry("C12");
        let r = run_group_check("cyclic-containment", &c12).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "{}", r.details);
        let d4 = entry("D4");
        assert_eq!(
            run_group_check("cyclic-containment", &d4).unwrap().status,
            CheckStatus::NotApplicable
        );
    }

    #[test]
    fn l2_counts_check_statuses() {
        let e = entry("L2(8)");
        let r = run_group_check("l2-counts", &e).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "{}", r.details);
        let e = entry("L2(9)");
        let r = run_group_check("l2-counts", &e).unwrap();
        assert_eq!(r.status, CheckStatus::NotApplicable);
    }
}

//! Builders for the concrete groups: standard permutation families, PSL(2,q)
//! on the projective line, Sz(q) as 4x4 matrices, and generator files.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::gens;
use crate::group::{close_mats, close_perms, Group, GroupHandle};
use crate::matrix::Mat;
use crate::num;
use crate::perm::Perm;
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq)]
pub enum RecipeKind {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Psl2(u64),
    Sz(u64),
    File(String),
}

#[derive(Clone, Debug)]
pub struct GroupRecipe {
    pub name: String,
    pub kind: RecipeKind,
    pub expected_order: Option<u64>,
    pub claimed_simple: Option<bool>,
}

impl GroupRecipe {
    fn plain(name: String, kind: RecipeKind) -> GroupRecipe {
        GroupRecipe {
            name,
            kind,
            expected_order: None,
            claimed_simple: None,
        }
    }

    /// Named file-backed groups reachable from the CLI grammar.
    fn standard_file(name: &str) -> Option<GroupRecipe> {
        let (file, order) = match name {
            "L3(3)" => ("l3_3.gens", 5616),
            "U3(3)" => ("u3_3.gens", 6048),
            "U4(2)" => ("u4_2.gens", 25920),
            "L3(4)" => ("l3_4.gens", 20160),
            _ => return None,
        };
        Some(GroupRecipe {
            name: name.into(),
            kind: RecipeKind::File(file.into()),
            expected_order: Some(order),
            claimed_simple: Some(true),
        })
    }

    /// Parse the CLI group grammar: `A<n>`, `S<n>`, `C<n>`, `D<n>` (dihedral
    /// of order 2n), `PSL(2,q)` / `L2(q)`, `L3(3)`, `U3(3)`, `U4(2)`,
    /// `L3(4)`, `Sz(q)`, `file:<path>`. Case-insensitive, whitespace-tolerant
    /// (file paths are taken verbatim).
    pub fn parse(spec: &str) -> Result<GroupRecipe> {
        let trimmed = spec.trim();
        if let Some(rest) = strip_prefix_ci(trimmed, "file:") {
            let path = rest.trim();
            if path.is_empty() {
                return Err(Error::Parse("empty path in `file:` spec".into()));
            }
            return Ok(GroupRecipe::plain(
                file_stem_name(path),
                RecipeKind::File(path.into()),
            ));
        }
        let compact: String = trimmed
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_uppercase();
        let bad = || Error::Parse(format!("unrecognized group spec `{trimmed}`"));

        for name in ["L3(3)", "U3(3)", "U4(2)", "L3(4)"] {
            if compact == *name {
                return Ok(GroupRecipe::standard_file(name).unwrap());
            }
        }
        if let Some(q) = parse_wrapped(&compact, "PSL(2,", ")").or_else(|| parse_wrapped(&compact, "L2(", ")"))
        {
            let q = q.ok_or_else(bad)?;
            return Ok(GroupRecipe::plain(format!("L2({q})"), RecipeKind::Psl2(q)));
        }
        if let Some(q) = parse_wrapped(&compact, "SZ(", ")") {
            let q = q.ok_or_else(bad)?;
            return Ok(GroupRecipe::plain(format!("Sz({q})"), RecipeKind::Sz(q)));
        }
        if let Some(kind) = compact.chars().next() {
            let digits = &compact[1..];
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let n: u32 = digits.parse().map_err(|_| bad())?;
                let (name, kind) = match kind {
                    'A' => (format!("A{n}"), RecipeKind::Alternating(n)),
                    'S' => (format!("S{n}"), RecipeKind::Symmetric(n)),
                    'C' => (format!("C{n}"), RecipeKind::Cyclic(n)),
                    'D' => (format!("D{n}"), RecipeKind::Dihedral(n)),
                    _ => return Err(bad()),
                };
                return Ok(GroupRecipe::plain(name, kind));
            }
        }
        Err(bad())
    }

    /// Stable kind string for reports.
    pub fn kind_string(&self) -> String {
        match &self.kind {
            RecipeKind::Cyclic(n) => format!("cyclic({n})"),
            RecipeKind::Dihedral(n) => format!("dihedral({n})"),
            RecipeKind::Symmetric(n) => format!("symmetric({n})"),
            RecipeKind::Alternating(n) => format!("alternating({n})"),
            RecipeKind::Psl2(q) => format!("psl2({q})"),
            RecipeKind::Sz(q) => format!("sz({q})"),
            RecipeKind::File(p) => format!("file({p})"),
        }
    }

    /// Build the group, enforcing the intrinsic order formulas for the
    /// parametric families and the manifest's order gate when present.
    pub fn build(&self, data_dir: &Path, cap: usize) -> Result<Group> {
        let group = match &self.kind {
            RecipeKind::Cyclic(n) => Group::Perm(build_cyclic(*n, cap)?),
            RecipeKind::Dihedral(n) => Group::Perm(build_dihedral(*n, cap)?),
            RecipeKind::Symmetric(n) => Group::Perm(build_symmetric(*n, cap)?),
            RecipeKind::Alternating(n) => Group::Perm(build_alternating(*n, cap)?),
            RecipeKind::Psl2(q) => Group::Perm(build_psl2(*q, cap)?),
            RecipeKind::Sz(q) => Group::Mat(build_sz(*q, cap)?),
            RecipeKind::File(path) => {
                let resolved = resolve_path(path, data_dir);
                let (degree, gens) = gens::load_generators(&resolved)?;
                Group::Perm(close_perms(gens, degree, cap)?)
            }
        };
        if let Some(expected) = self.expected_order {
            if group.order() != expected {
                return Err(Error::OrderGate {
                    expected,
                    got: group.order(),
                });
            }
        }
        Ok(group)
    }
}

fn strip_prefix_ci<'a>(s: &'a str, prefix: &str) -> Option<&'a str> {
    if s.len() >= prefix.len() && s[..prefix.len()].eq_ignore_ascii_case(prefix) {
        Some(&s[prefix.len()..])
    } else {
        None
    }
}

fn parse_wrapped(s: &str, open: &str, close: &str) -> Option<Option<u64>> {
    let body = s.strip_prefix(open)?.strip_suffix(close)?;
    Some(body.parse().ok())
}

fn file_stem_name(path: &str) -> String {
    Path::new(path)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string())
}

fn resolve_path(path: &str, data_dir: &Path) -> PathBuf {
    let p = Path::new(path);
    if p.is_absolute() || p.exists() {
        p.to_path_buf()
    } else {
        data_dir.join(p)
    }
}

fn factorial(n: u32) -> Option<u64> {
    (2..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

fn gate(h: GroupHandle<Perm>, expected: Option<u64>) -> Result<GroupHandle<Perm>> {
    match expected {
        Some(e) if h.order() != e => Err(Error::OrderGate {
            expected: e,
            got: h.order(),
        }),
        _ => Ok(h),
    }
}

fn rotation(n: usize) -> Perm {
    Perm::from_images((0..n).map(|i| ((i + 1) % n) as u16).collect()).unwrap()
}

pub fn build_cyclic(n: u32, cap: usize) -> Result<GroupHandle<Perm>> {
    if n == 0 {
        return Err(Error::Params("cyclic: n must be at least 1".into()));
    }
    let n = n as usize;
    let g = if n == 1 { Perm::identity(1) } else { rotation(n) };
    gate(close_perms(vec![g], n.max(1), cap)?, Some(n as u64))
}

/// Dihedral group of order 2n. For n >= 3 this is the usual action on n
/// points; D1 and D2 degenerate there, so they get faithful realizations on
/// 2 and 4 points instead.
pub fn build_dihedral(n: u32, cap: usize) -> Result<GroupHandle<Perm>> {
    let h = match n {
        0 => return Err(Error::Params("dihedral: n must be at least 1".into())),
        1 => close_perms(vec![Perm::from_images(vec![1, 0]).unwrap()], 2, cap)?,
        2 => close_perms(
            vec![
                Perm::from_images(vec![1, 0, 2, 3]).unwrap(),
                Perm::from_images(vec![0, 1, 3, 2]).unwrap(),
            ],
            4,
            cap,
        )?,
        _ => {
            let n = n as usize;
            let refl =
                Perm::from_images((0..n).map(|i| ((n - i) % n) as u16).collect()).unwrap();
            close_perms(vec![rotation(n), refl], n, cap)?
        }
    };
    gate(h, Some(2 * n as u64))
}

pub fn build_symmetric(n: u32, cap: usize) -> Result<GroupHandle<Perm>> {
    if n == 0 {
        return Err(Error::Params("symmetric: n must be at least 1".into()));
    }
    let n = n as usize;
    let gens = match n {
        1 => vec![Perm::identity(1)],
        2 => vec![Perm::from_images(vec![1, 0]).unwrap()],
        _ => {
            let mut swap: Vec<u16> = (0..n as u16).collect();
            swap.swap(0, 1);
            vec![rotation(n), Perm::from_images(swap).unwrap()]
        }
    };
    gate(close_perms(gens, n, cap)?, factorial(n as u32))
}

pub fn build_alternating(n: u32, cap: usize) -> Result<GroupHandle<Perm>> {
    if n == 0 {
        return Err(Error::Params("alternating: n must be at least 1".into()));
    }
    let expected = factorial(n).map(|f| if n >= 2 { f / 2 } else { 1 });
    let n = n as usize;
    let gens = match n {
        1 | 2 => vec![Perm::identity(n)],
        _ => {
            let mut three: Vec<u16> = (0..n as u16).collect();
            three[0] = 1;
            three[1] = 2;
            three[2] = 0;
            let three = Perm::from_images(three).unwrap();
            if n == 3 {
                vec![three]
            } else if n % 2 == 1 {
                vec![three, rotation(n)]
            } else {
                // (1 2 ... n-1) fixing point 0: an (n-1)-cycle, even
                let mut big: Vec<u16> = vec![0];
                big.extend((2..n as u16).chain([1]));
                vec![three, Perm::from_images(big).unwrap()]
            }
        }
    };
    gate(close_perms(gens, n, cap)?, expected)
}

/// PSL(2, q) acting on the projective line: points 0..q-1 are the field
/// elements by canonical code, point q is infinity. Generators are
/// x -> x+1, x -> sx (s = λ² for odd q, λ for even), and x -> -1/x.
pub fn build_psl2(q: u64, cap: usize) -> Result<GroupHandle<Perm>> {
    let (p, m) = num::prime_power(q)
        .ok_or_else(|| Error::Params(format!("psl2: {q} is not a prime power")))?;
    let field = FieldSpec::new(p, m)?;
    let qn = field.q();
    let inf = qn as u16;
    let lambda = field.generator();
    let s = if p == 2 {
        lambda
    } else {
        field.mul(lambda, lambda)
    };

    let mut translate: Vec<u16> = (0..qn as u16).map(|x| field.add(x, 1)).collect();
    translate.push(inf);
    let mut scale: Vec<u16> = (0..qn as u16).map(|x| field.mul(s, x)).collect();
    scale.push(inf);
    let mut invert: Vec<u16> = vec![0; qn + 1];
    invert[0] = inf;
    invert[inf as usize] = 0;
    for x in 1..qn as u16 {
        invert[x as usize] = field.neg(field.inv(x).unwrap());
    }

    let gens = vec![
        Perm::from_images(translate).unwrap(),
        Perm::from_images(scale).unwrap(),
        Perm::from_images(invert).unwrap(),
    ];
    let expected = q * (q * q - 1) / num::gcd(2, q - 1);
    gate(close_perms(gens, qn + 1, cap)?, Some(expected))
}

/// Sz(q) for q = 2^(2m+1) as 4x4 matrices over GF(q): two unipotent
/// generators, the torus element κ(λ), and the antidiagonal involution.
/// The unipotent family is U(a,b), lower unitriangular with second column
/// (1, a^θ, b) and first column (1, a, a^(1+θ)+b, a^(2+θ)+ab+b^θ) where
/// θ: x -> x^(2^(m+1)).
pub fn build_sz(q: u64, cap: usize) -> Result<GroupHandle<Mat>> {
    let valid = q >= 8 && q.is_power_of_two() && q.trailing_zeros() % 2 == 1;
    if !valid {
        return Err(Error::Params(format!(
            "sz: q must be 2^(2m+1) with m >= 1, got {q}"
        )));
    }
    let e = q.trailing_zeros(); // 2m+1
    let m = (e - 1) / 2;
    let field = FieldSpec::new(2, e)?;
    let theta = |f: &Arc<FieldSpec>, x: u16| f.pow(x, 1 << (m + 1));
    let q0 = 1u64 << m;

    let unipotent = |a: u16, b: u16| -> Mat {
        let f = &field;
        let ath = theta(f, a);
        let a1t = f.mul(a, ath); // a^(1+θ)
        let a2t = f.mul(f.mul(a, a), ath); // a^(2+θ)
        let e31 = f.add(a1t, b);
        let e41 = f.add(f.add(a2t, f.mul(a, b)), theta(f, b));
        Mat::new(
            f,
            4,
            vec![
                1, 0, 0, 0, //
                a, 1, 0, 0, //
                e31, ath, 1, 0, //
                e41, b, a, 1,
            ],
        )
    };

    let lambda = field.generator();
    let d0 = field.pow(lambda, 1 + q0);
    let d1 = field.pow(lambda, q0);
    let torus = Mat::new(
        &field,
        4,
        vec![
            d0, 0, 0, 0, //
            0, d1, 0, 0, //
            0, 0, field.inv(d1).unwrap(), 0, //
            0, 0, 0, field.inv(d0).unwrap(),
        ],
    );
    let mut anti = vec![0u16; 16];
    for i in 0..4 {
        anti[i * 4 + (3 - i)] = 1;
    }
    let tau = Mat::new(&field, 4, anti);

    let gens = vec![unipotent(1, 0), unipotent(0, 1), torus, tau];
    let h = close_mats(gens, &field, 4, cap)?;
    let expected = q * q * (q * q + 1) * (q - 1);
    if h.order() != expected {
        return Err(Error::OrderGate {
            expected,
            got: h.order(),
        });
    }
    Ok(h)
}

// ---------------------------------------------------------------------------
// Catalog manifest

#[derive(Deserialize)]
struct Manifest {
    group: Vec<ManifestEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestEntry {
    name: String,
    kind: String,
    n: Option<u32>,
    q: Option<u64>,
    path: Option<String>,
    expected_order: Option<u64>,
    simple: Option<bool>,
}

/// Read the catalog manifest (`catalog.toml` in the data directory).
pub fn catalog(data_dir: &Path) -> Result<Vec<GroupRecipe>> {
    let path = data_dir.join("catalog.toml");
    let text = std::fs::read_to_string(&path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let manifest: Manifest = toml::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut out = Vec::with_capacity(manifest.group.len());
    let mut seen = std::collections::HashSet::new();
    for entry in manifest.group {
        if !seen.insert(entry.name.clone()) {
            return Err(Error::Parse(format!(
                "duplicate catalog entry `{}`",
                entry.name
            )));
        }
        out.push(entry.into_recipe()?);
    }
    Ok(out)
}

impl ManifestEntry {
    fn into_recipe(self) -> Result<GroupRecipe> {
        let need_n = |n: Option<u32>| {
            n.ok_or_else(|| Error::Parse(format!("entry `{}`: missing n", self.name)))
        };
        let need_q = |q: Option<u64>| {
            q.ok_or_else(|| Error::Parse(format!("entry `{}`: missing q", self.name)))
        };
        let kind = match self.kind.as_str() {
            "cyclic" => RecipeKind::Cyclic(need_n(self.n)?),
            "dihedral" => RecipeKind::Dihedral(need_n(self.n)?),
            "symmetric" => RecipeKind::Symmetric(need_n(self.n)?),
            "alternating" => RecipeKind::Alternating(need_n(self.n)?),
            "psl2" => RecipeKind::Psl2(need_q(self.q)?),
            "sz" => RecipeKind::Sz(need_q(self.q)?),
            "file" => RecipeKind::File(self.path.clone().ok_or_else(|| {
                Error::Parse(format!("entry `{}`: missing path", self.name))
            })?),
            other => {
                return Err(Error::Parse(format!(
                    "entry `{}`: unknown kind `{other}`",
                    self.name
                )))
            }
        };
        Ok(GroupRecipe {
            name: self.name,
            kind,
            expected_order: self.expected_order,
            claimed_simple: self.simple,
        })
    }
}

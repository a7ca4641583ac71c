//! Structural predicates built on top of the spectrum: the prime graph
//! Γ(G), C_{p,p} detection, the L2(q) and Sz(q) partition-count formulas,
//! the odd-prime distinctness scans, and the α_4 prime bound.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::num;
use crate::spectrum::OrderSpectrum;
use std::collections::BTreeSet;

// ---------------------------------------------------------------------------
// Prime graph

/// Γ(G): vertices are the primes in π(G); {p,q} is an edge iff G has an
/// element of order pq.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
}

pub fn prime_graph(spec: &OrderSpectrum) -> PrimeGraph {
    let vertices = spec.pi();
    let orders: BTreeSet<u64> = spec.pi_e().into_iter().collect();
    let mut edges = Vec::new();
    for (i, &p) in vertices.iter().enumerate() {
        for &q in &vertices[i + 1..] {
            if orders.contains(&(p * q)) {
                edges.push((p, q));
            }
        }
    }
    PrimeGraph { vertices, edges }
}

impl PrimeGraph {
    fn adjacent(&self, a: u64, b: u64) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.contains(&key)
    }

    /// Connectivity by traversal; the empty and single-vertex graphs count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            let v = self.vertices[i];
            for (j, &w) in self.vertices.iter().enumerate() {
                if !seen[j] && self.adjacent(v, w) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for (j, &vj) in self.vertices.iter().enumerate() {
                    if comp[j] == usize::MAX && self.adjacent(self.vertices[i], vj) {
                        comp[j] = count;
                        stack.push(j);
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// Lexicographically smallest 3-subset of the vertices with no edges
    /// among its pairs, if one exists.
    pub fn independent_triple(&self) -> Option<(u64, u64, u64)> {
        let v = &self.vertices;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if self.adjacent(v[i], v[j]) {
                    continue;
                }
                for k in j + 1..v.len() {
                    if !self.adjacent(v[i], v[k]) && !self.adjacent(v[j], v[k]) {
                        return Some((v[i], v[j], v[k]));
                    }
                }
            }
        }
        None
    }
}

// ---------------------------------------------------------------------------
// C_{p,p}

/// True iff the centralizer of every element of order p is a p-group.
/// Computed two independent ways — over conjugacy-class representatives,
/// and from the spectrum (no element of order p·t for a prime t ≠ p) —
/// which must agree; a mismatch is an internal error.
pub fn is_cpp(group: &Group, spec: &OrderSpectrum, p: u64) -> Result<bool> {
    if !spec.pi().contains(&p) {
        return Err(Error::Params(format!("is_cpp: {p} does not divide the group order")));
    }
    let by_centralizers = group
        .centralizer_orders_of_order(p)?
        .into_iter()
        .all(|n| num::is_power_of(n, p));
    let by_spectrum = !spec
        .pi()
        .iter()
        .any(|&t| t != p && spec.s(p * t) > 0);
    if by_centralizers != by_spectrum {
        return Err(Error::Build(format!(
            "is_cpp(p={p}): centralizer method gave {by_centralizers} but spectrum method gave {by_spectrum}"
        )));
    }
    Ok(by_centralizers)
}

// ---------------------------------------------------------------------------
// Odd-prime distinctness scans

/// Some pair of odd primes p ≠ q in π(G) has s_p ≠ s_q. Vacuously false
/// with fewer than two odd primes.
pub fn exists_distinct_odd_pair(spec: &OrderSpectrum) -> bool {
    let odd: Vec<u64> = spec.pi().into_iter().filter(|&p| p != 2).collect();
    odd.iter()
        .any(|&p| odd.iter().any(|&q| q != p && spec.s(p) != spec.s(q)))
}

/// s_p ≠ s_q for every pair of distinct primes in π(G), 2 included.
pub fn all_prime_counts_distinct(spec: &OrderSpectrum) -> bool {
    let primes = spec.pi();
    let distinct: BTreeSet<u64> = primes.iter().map(|&p| spec.s(p)).collect();
    distinct.len() == primes.len()
}

// ---------------------------------------------------------------------------
// L2(q) partition counts

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum L2Class {
    Even,
    Mersenne,
    Fermat,
    Other,
}

pub fn classify_l2_q(q: u64) -> L2Class {
    if q.is_power_of_two() {
        L2Class::Even
    } else if num::is_prime(q) && (q + 1).is_power_of_two() {
        L2Class::Mersenne
    } else if num::is_prime(q) && (q - 1).is_power_of_two() {
        L2Class::Fermat
    } else {
        L2Class::Other
    }
}

#[derive(Clone, Debug)]
pub struct L2Report {
    pub q: u64,
    pub class: L2Class,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl L2Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check the element-count formulas for L2(q) against an enumerated
/// spectrum. Three cases are covered: q a power of two, q a Mersenne
/// prime, q a Fermat prime. Any other q (such as 9) yields class `Other`
/// with nothing checked — the caller reports not-applicable, not failure.
pub fn verify_l2_counts(q: u64, spec: &OrderSpectrum) -> Result<L2Report> {
    if num::prime_power(q).is_none() {
        return Err(Error::Params(format!("l2-counts: {q} is not a prime power")));
    }
    let class = classify_l2_q(q);
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    fn expect(
        label: String,
        got: u64,
        want: u64,
        notes: &mut Vec<String>,
        failures: &mut Vec<String>,
    ) {
        if got == want {
            notes.push(format!("{label} = {want}"));
        } else {
            failures.push(format!("{label}: expected {want}, got {got}"));
        }
    }

    match class {
        L2Class::Even => {
            let below: BTreeSet<u64> = num::prime_divisors(q - 1).into_iter().collect();
            let above: BTreeSet<u64> = num::prime_divisors(q + 1).into_iter().collect();
            if below.intersection(&above).next().is_some() {
                failures.push(format!("π({}) ∩ π({}) is nonempty", q - 1, q + 1));
            } else {
                notes.push(format!("π({}) ∩ π({}) = ∅", q - 1, q + 1));
            }
            let torus = q * (q + 1) / 2; // conjugates of the order q−1 torus
            let twisted = q * (q - 1) / 2;
            for t in spec.pi_e() {
                if t == 1 {
                    continue;
                }
                if t % 2 == 0 {
                    if t != 2 {
                        failures.push(format!("unexpected even element order {t}"));
                    }
                } else if (q - 1) % t == 0 {
                    expect(format!("s_{t}"), spec.s(t), torus * num::totient(t), &mut notes, &mut failures);
                } else if (q + 1) % t == 0 {
                    expect(format!("s_{t}"), spec.s(t), twisted * num::totient(t), &mut notes, &mut failures);
                } else {
                    failures.push(format!("odd order {t} divides neither q−1 nor q+1"));
                }
            }
            expect("s_2".into(), spec.s(2), q * q - 1, &mut notes, &mut failures);
        }
        L2Class::Mersenne | L2Class::Fermat => {
            let (l, cyclic_part) = if class == L2Class::Mersenne {
                (q * (q + 1) / 2, (q - 1) / 2)
            } else {
                (q * (q - 1) / 2, (q + 1) / 2)
            };
            notes.push(format!("l = {l}, cyclic part order {cyclic_part}"));
            for r in num::prime_divisors(cyclic_part) {
                if r == 2 {
                    continue;
                }
                expect(format!("s_{r}"), spec.s(r), l * num::totient(r), &mut notes, &mut failures);
            }
            expect(format!("s_{q}"), spec.s(q), q * q - 1, &mut notes, &mut failures);
        }
        L2Class::Other => {
            notes.push(format!(
                "{q} is neither a power of two nor a Fermat/Mersenne prime; no formula applies"
            ));
            return Ok(L2Report { q, class, failures, notes });
        }
    }

    let odd_primes = spec.pi().iter().filter(|&&p| p != 2).count();
    if odd_primes >= 2 {
        if exists_distinct_odd_pair(spec) {
            notes.push("some pair of odd primes has distinct counts".into());
        } else {
            failures.push("all odd primes share one count".into());
        }
    } else {
        notes.push("fewer than two odd primes; distinctness is vacuous".into());
    }
    Ok(L2Report { q, class, failures, notes })
}

// ---------------------------------------------------------------------------
// Sz(q) partition counts

#[derive(Clone, Debug)]
pub struct SzReport {
    pub q: u64,
    pub r: u64,
    /// (|A|, |B|, |C|) = (q−1, q−2r+1, q+2r+1); the fourth part has order q².
    pub parts: (u64, u64, u64),
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SzReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check the Sz(q) partition facts against an enumerated spectrum: the
/// part orders, gcd(|B|,|C|) = 1, every odd element order divides exactly
/// one of |A|, |B|, |C|, some pair of odd primes has distinct counts, and
/// the census totals q²(q²+1)(q−1).
pub fn verify_sz_counts(q: u64, spec: &OrderSpectrum) -> Result<SzReport> {
    let valid = q >= 8 && q.is_power_of_two() && q.trailing_zeros() % 2 == 1;
    if !valid {
        return Err(Error::Params(format!("sz-counts: invalid q = {q}")));
    }
    let r = 1u64 << ((q.trailing_zeros() - 1) / 2); // q = 2r²
    let (a, b, c) = (q - 1, q - 2 * r + 1, q + 2 * r + 1);
    let mut failures = Vec::new();
    let mut notes = vec![format!("parts |A|={a}, |B|={b}, |C|={c}, |F|={}", q * q)];

    if c - b != 4 * r {
        failures.push(format!("|C| − |B| = {} ≠ 4r = {}", c - b, 4 * r));
    }
    if num::gcd(b, c) != 1 {
        failures.push(format!("gcd({b}, {c}) ≠ 1"));
    } else {
        notes.push(format!("gcd({b}, {c}) = 1"));
    }
    for t in spec.pi_e() {
        if t == 1 || t % 2 == 0 {
            continue;
        }
        let hits = [a, b, c].iter().filter(|&&part| part % t == 0).count();
        if hits != 1 {
            failures.push(format!("odd order {t} divides {hits} of the parts"));
        }
    }
    if exists_distinct_odd_pair(spec) {
        notes.push("some pair of odd primes has distinct counts".into());
    } else {
        failures.push("all odd primes share one count".into());
    }
    let expected_order = q * q * (q * q + 1) * (q - 1);
    if spec.total() != expected_order || spec.group_order() != expected_order {
        failures.push(format!(
            "census total {} vs expected order {expected_order}",
            spec.total()
        ));
    }
    Ok(SzReport { q, r, parts: (a, b, c), failures, notes })
}

// ---------------------------------------------------------------------------
// α4 prime bound

#[derive(Clone, Debug)]
pub enum Alpha4Outcome {
    /// Hypothesis not met: |nse| ≠ 4, or no three primes realize three
    /// distinct nonunit counts covering nse, or neither r = 2 nor odd |G|.
    NotApplicable(String),
    /// Hypothesis met; conclusion |π(G)| = 3 holds or fails.
    Checked { triple: (u64, u64, u64), pass: bool },
}

/// If nse(G) = {1, s_r, s_p, s_q} for three distinct primes with three
/// distinct nonunit counts, and either one of them is 2 or |G| is odd,
/// then π(G) must be exactly three primes.
pub fn alpha4_prime_bound(spec: &OrderSpectrum) -> Alpha4Outcome {
    if spec.alpha_size() != 4 {
        return Alpha4Outcome::NotApplicable(format!("|nse| = {}, not 4", spec.alpha_size()));
    }
    let nse: BTreeSet<u64> = spec.nse().into_iter().collect();
    let primes = spec.pi();
    let mut witness: Option<(u64, u64, u64)> = None;
    'outer: for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            for k in j + 1..primes.len() {
                let (r, p, q) = (primes[i], primes[j], primes[k]);
                let vals = BTreeSet::from([1, spec.s(r), spec.s(p), spec.s(q)]);
                if vals.len() == 4 && vals == nse {
                    witness = Some((r, p, q));
                    break 'outer;
                }
            }
        }
    }
    let Some(triple) = witness else {
        return Alpha4Outcome::NotApplicable(
            "no three primes realize three distinct nonunit counts covering nse".into(),
        );
    };
    if triple.0 != 2 && spec.group_order() % 2 == 0 {
        return Alpha4Outcome::NotApplicable(format!(
            "witness primes {:?} exclude 2 but the order is even",
            triple
        ));
    }
    Alpha4Outcome::Checked {
        triple,
        pass: primes.len() == 3,
    }
}

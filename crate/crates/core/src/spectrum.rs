//! Order spectra: the census s_t of elements per order, the derived sets
//! nse(G), π(G), π_e(G), and the Frobenius counts f(k) = |{g : g^k = 1}|.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::num;
use std::collections::BTreeMap;

/// Census of element orders for one group: `counts[t]` = number of elements
/// of order exactly t. `group_order` is carried separately so adversarial
/// spectra (used in negative tests) can disagree with the census total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpectrum {
    group_order: u64,
    counts: BTreeMap<u64, u64>,
}

pub fn compute_spectrum(g: &Group) -> OrderSpectrum {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for o in g.element_orders() {
        *counts.entry(o).or_insert(0) += 1;
    }
    OrderSpectrum {
        group_order: g.order(),
        counts,
    }
}

impl OrderSpectrum {
    /// Raw constructor; only rejects structurally meaningless data (zero
    /// orders or counts). Totality and Frobenius conditions are checks,
    /// not construction invariants.
    pub fn from_counts(group_order: u64, counts: BTreeMap<u64, u64>) -> Result<OrderSpectrum> {
        if group_order == 0 {
            return Err(Error::Params("spectrum: group order must be positive".into()));
        }
        if counts.is_empty() || counts.get(&1) != Some(&1) {
            return Err(Error::Params(
                "spectrum: must contain exactly one element of order 1".into(),
            ));
        }
        if counts.keys().any(|&t| t == 0) || counts.values().any(|&c| c == 0) {
            return Err(Error::Params(
                "spectrum: orders and counts must be positive".into(),
            ));
        }
        Ok(OrderSpectrum { group_order, counts })
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// s_t: elements of order exactly t (0 when t ∉ π_e).
    pub fn s(&self, t: u64) -> u64 {
        self.counts.get(&t).copied().unwrap_or(0)
    }

    /// Element orders, ascending.
    pub fn pi_e(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    /// Primes among the element orders (= primes dividing |G|, by Cauchy).
    pub fn pi(&self) -> Vec<u64> {
        self.counts
            .keys()
            .copied()
            .filter(|&t| num::is_prime(t))
            .collect()
    }

    /// nse(G) = α(G): the distinct values of s_t, ascending.
    pub fn nse(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.counts.values().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn alpha_size(&self) -> usize {
        self.nse().len()
    }

    /// Σ s_t — equals |G| for any honest census.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// f(k) = |{g : g^k = 1}| = Σ_{d | k} s_d.
    pub fn f_of(&self, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(Error::Params("f(k): k must be positive".into()));
        }
        Ok(self
            .counts
            .iter()
            .filter(|(&d, _)| k % d == 0)
            .map(|(_, &c)| c)
            .sum())
    }

    /// Frobenius's theorem: k | f(k) for every divisor k of |G|; and the
    /// totient bound φ(t) | s_t for every element order t.
    pub fn check_frobenius(&self) -> FrobeniusReport {
        let mut divisor_violations = Vec::new();
        for k in num::divisors(self.group_order) {
            let f = self.f_of(k).unwrap();
            if f % k != 0 {
                divisor_violations.push((k, f));
            }
        }
        let mut totient_violations = Vec::new();
        for (&t, &c) in &self.counts {
            if c % num::totient(t) != 0 {
                totient_violations.push((t, c));
            }
        }
        FrobeniusReport {
            divisor_violations,
            totient_violations,
        }
    }

    /// Nilpotency from the spectrum alone: G is nilpotent ⟺ every Sylow
    /// subgroup is normal ⟺ f(p^a) = p^a for each maximal prime power
    /// p^a dividing |G|.
    pub fn is_nilpotent_spectral(&self) -> bool {
        num::factorize(self.group_order)
            .into_iter()
            .all(|(p, a)| {
                let pa = p.pow(a);
                self.f_of(pa).unwrap() == pa
            })
    }

    /// |π(G)| ≤ |nse(G)|: an α_n-group has at most n prime divisors.
    pub fn shen_bound_ok(&self) -> bool {
        self.pi().len() <= self.alpha_size()
    }
}

#[derive(Clone, Debug, Default)]
pub struct FrobeniusReport {
    /// (k, f(k)) pairs with k | |G| but k ∤ f(k).
    pub divisor_violations: Vec<(u64, u64)>,
    /// (t, s_t) pairs with φ(t) ∤ s_t.
    pub totient_violations: Vec<(u64, u64)>,
}

impl FrobeniusReport {
    pub fn ok(&self) -> bool {
        self.divisor_violations.is_empty() && self.totient_violations.is_empty()
    }
}

/// nse(C_m) ⊆ nse(C_n) whenever m | n. Builds both groups and compares.
pub fn cyclic_containment(m: u32, n: u32, cap: usize) -> Result<bool> {
    if m == 0 || n == 0 || n % m != 0 {
        return Err(Error::Params(format!(
            "cyclic containment requires m | n, got m={m}, n={n}"
        )));
    }
    let small = compute_spectrum(&Group::Perm(crate::constructions::build_cyclic(m, cap)?));
    let large = compute_spectrum(&Group::Perm(crate::constructions::build_cyclic(n, cap)?));
    let big: std::collections::BTreeSet<u64> = large.nse().into_iter().collect();
    Ok(small.nse().iter().all(|v| big.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::group::{Group, DEFAULT_CAP};

    fn spec_of(g: Group) -> OrderSpectrum {
        compute_spectrum(&g)
    }

    #[test]
    fn a5_census() {
        let spec = spec_of(Group::Perm(
            constructions::build_alternating(5, DEFAULT_CAP).unwrap(),
        ));
        let expected: BTreeMap<u64, u64> = [(1, 1), (2, 15), (3, 20), (5, 24)].into();
        assert_eq!(spec.counts(), &expected);
        assert_eq!(spec.nse(), vec![1, 15, 20, 24]);
        assert_eq!(spec.alpha_size(), 4);
        assert_eq!(spec.pi(), vec![2, 3, 5]);
        assert_eq!(spec.pi_e(), vec![1, 2, 3, 5]);
        assert_eq!(spec.total(), 60);
        assert_eq!(spec.f_of(15).unwrap(), 45);
        assert!(spec.check_frobenius().ok());
        assert!(!spec.is_nilpotent_spectral());
        assert!(spec.shen_bound_ok());
    }

    #[test]
    fn cyclic_census_is_totient() {
        let spec = spec_of(Group::Perm(constructions::build_cyclic(12, 100).unwrap()));
        for d in num::divisors(12) {
            assert_eq!(spec.s(d), num::totient(d));
        }
        assert!(spec.is_nilpotent_spectral());
    }

    #[test]
    fn s3_not_nilpotent() {
        let spec = spec_of(Group::Perm(constructions::build_symmetric(3, 100).unwrap()));
        assert_eq!(spec.f_of(2).unwrap(), 4);
        assert!(!spec.is_nilpotent_spectral());
        assert!(spec.check_frobenius().ok());
    }

    #[test]
    fn adversarial_counts_fail_frobenius() {
        let counts: BTreeMap<u64, u64> = [(1, 1), (2, 2)].into();
        let spec = OrderSpectrum::from_counts(4, counts).unwrap();
        let report = spec.check_frobenius();
        assert!(report.divisor_violations.contains(&(2, 3)));
        assert!(!report.ok());
    }

    #[test]
    fn from_counts_rejects_garbage() {
        assert!(OrderSpectrum::from_counts(0, [(1, 1)].into()).is_err());
        assert!(OrderSpectrum::from_counts(4, [(2, 3)].into()).is_err());
        assert!(OrderSpectrum::from_counts(4, [(1, 1), (2, 0)].into()).is_err());
    }

    #[test]
    fn containment() {
        assert!(cyclic_containment(3, 6, 100).unwrap());
        assert!(cyclic_containment(4, 12, 100).unwrap());
        assert!(cyclic_containment(2, 3, 100).is_err());
    }

    #[test]
    fn f_of_zero_rejected() {
        let spec = spec_of(Group::Perm(constructions::build_cyclic(2, 10).unwrap()));
        assert!(spec.f_of(0).is_err());
        assert_eq!(spec.f_of(7).unwrap(), 1);
    }
}

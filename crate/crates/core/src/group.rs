//! Finite group engine: exhaustive closure enumeration plus the structure
//! computations (classes, centralizers, normal closures, derived series)
//! everything downstream relies on. All algorithms are total-enumeration —
//! the groups handled here have at most a few million elements, and the
//! simplicity of one flat element table wins over stabilizer chains.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Mat;
use crate::perm::Perm;
use indexmap::IndexSet;
use std::hash::Hash;
use std::sync::Arc;

/// Default enumeration cap (elements), overridable per call site.
pub const DEFAULT_CAP: usize = 5_000_000;

/// One element contract for permutations and matrices, so the spectrum and
/// structure layers never care about the representation.
pub trait Element: Clone + Eq + Hash + Ord {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn order(&self) -> u64;
    fn is_identity(&self) -> bool;
    /// Same carrier (degree / dimension+field)?
    fn compatible(&self, other: &Self) -> bool;
}

impl Element for Perm {
    fn compose(&self, other: &Self) -> Self {
        Perm::compose(self, other)
    }
    fn inverse(&self) -> Self {
        Perm::inverse(self)
    }
    fn order(&self) -> u64 {
        Perm::order(self)
    }
    fn is_identity(&self) -> bool {
        Perm::is_identity(self)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

impl Element for Mat {
    fn compose(&self, other: &Self) -> Self {
        Mat::compose(self, other)
    }
    fn inverse(&self) -> Self {
        Mat::inverse(self)
    }
    fn order(&self) -> u64 {
        Mat::order(self)
    }
    fn is_identity(&self) -> bool {
        Mat::is_identity(self)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.n() == other.n() && **self.field() == **other.field()
    }
}

/// A fully enumerated finite group. `elems` keeps breadth-first insertion
/// order, which makes every downstream computation reproducible run to run.
pub struct GroupHandle<E: Element> {
    gens: Vec<E>,
    elems: IndexSet<E>,
    identity: E,
}

#[derive(Clone, Debug)]
pub struct ConjClass<E> {
    pub rep: E,
    pub size: u64,
    pub order: u64,
}

impl<E: Element> GroupHandle<E> {
    /// Breadth-first closure under left multiplication by the generators
    /// (queue order from the sorted, deduplicated generator list).
    pub fn closure(gens: Vec<E>, identity: E, cap: usize) -> Result<GroupHandle<E>> {
        if gens.is_empty() {
            return Err(Error::Build("empty generator list".into()));
        }
        if cap == 0 {
            return Err(Error::Params("cap must be at least 1".into()));
        }
        if gens.iter().any(|g| !g.compatible(&identity)) {
            return Err(Error::Build(
                "generators do not share one carrier (degree or dimension/field)".into(),
            ));
        }
        let mut sorted: Vec<E> = gens;
        sorted.sort();
        sorted.dedup();

        let mut elems: IndexSet<E> = IndexSet::new();
        elems.insert(identity.clone());
        let mut next = 0usize;
        while next < elems.len() {
            let x = elems.get_index(next).unwrap().clone();
            next += 1;
            for g in &sorted {
                let y = g.compose(&x);
                if !elems.contains(&y) {
                    if elems.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    elems.insert(y);
                }
            }
        }
        Ok(GroupHandle {
            gens: sorted,
            elems,
            identity,
        })
    }

    /// Wrap an already-closed element set (subgroups found by scanning).
    fn from_closed_set(elems: IndexSet<E>, identity: E) -> GroupHandle<E> {
        let gens = elems.iter().cloned().collect();
        GroupHandle {
            gens,
            elems,
            identity,
        }
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn generators(&self) -> &[E] {
        &self.gens
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elems.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = &E> {
        self.elems.iter()
    }

    pub fn element_orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().map(|e| e.order())
    }

    /// {g : gx = xg}, by full scan. The result is a subgroup and is
    /// returned as a handle over its (already closed) element set.
    pub fn centralizer(&self, x: &E) -> Result<GroupHandle<E>> {
        if !self.contains(x) {
            return Err(Error::Params("element is not in the group".into()));
        }
        let sub: IndexSet<E> = self
            .elems
            .iter()
            .filter(|g| g.compose(x) == x.compose(g))
            .cloned()
            .collect();
        Ok(GroupHandle::from_closed_set(sub, self.identity.clone()))
    }

    /// Conjugation orbits. Representatives are the smallest canonical key
    /// in each class; classes are sorted by representative.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass<E>> {
        let inv: Vec<E> = self.gens.iter().map(|g| g.inverse()).collect();
        let mut visited = vec![false; self.elems.len()];
        let mut classes = Vec::new();
        for start in 0..self.elems.len() {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut rep = self.elems.get_index(start).unwrap().clone();
            let mut frontier = vec![start];
            let mut size = 1u64;
            while let Some(i) = frontier.pop() {
                let x = self.elems.get_index(i).unwrap().clone();
                for (g, gi) in self.gens.iter().zip(&inv) {
                    let y = g.compose(&x).compose(gi);
                    let j = self.elems.get_index_of(&y).expect("conjugate left the group");
                    if !visited[j] {
                        visited[j] = true;
                        if y < rep {
                            rep = y.clone();
                        }
                        size += 1;
                        frontier.push(j);
                    }
                }
            }
            let order = rep.order();
            classes.push(ConjClass { rep, size, order });
        }
        classes.sort_by(|a, b| a.rep.cmp(&b.rep));
        classes
    }

    /// Smallest normal subgroup containing `seed`: close, conjugate the
    /// closure's generating set by the group generators, add anything
    /// missing, repeat to a fixed point.
    pub fn normal_closure(&self, seed: &[E]) -> Result<GroupHandle<E>> {
        let mut basis: Vec<E> = seed.to_vec();
        basis.retain(|s| !s.is_identity());
        if basis.is_empty() {
            let mut sub = IndexSet::new();
            sub.insert(self.identity.clone());
            return Ok(GroupHandle::from_closed_set(sub, self.identity.clone()));
        }
        debug_assert!(basis.iter().all(|s| self.contains(s)));
        loop {
            let h = GroupHandle::closure(
                basis.clone(),
                self.identity.clone(),
                self.elems.len(),
            )?;
            let mut missing: Vec<E> = Vec::new();
            for g in &self.gens {
                let gi = g.inverse();
                for s in &basis {
                    let c = g.compose(s).compose(&gi);
                    if !h.contains(&c) {
                        missing.push(c);
                    }
                }
            }
            if missing.is_empty() {
                return Ok(h);
            }
            basis.extend(missing);
            basis.sort();
            basis.dedup();
        }
    }

    /// Derived subgroup = normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Result<GroupHandle<E>> {
        let mut comms = Vec::new();
        for x in &self.gens {
            for y in &self.gens {
                let c = x
                    .inverse()
                    .compose(&y.inverse())
                    .compose(x)
                    .compose(y);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// G ⊵ G' ⊵ G'' ⊵ ... until the order stabilizes (or reaches 1).
    pub fn derived_series(&self) -> Result<Vec<GroupHandle<E>>> {
        let mut series = vec![GroupHandle {
            gens: self.gens.clone(),
            elems: self.elems.clone(),
            identity: self.identity.clone(),
        }];
        loop {
            let next = series.last().unwrap().derived_subgroup()?;
            let stable = next.order() == series.last().unwrap().order();
            let trivial = next.order() == 1;
            series.push(next);
            if stable || trivial {
                if stable {
                    series.pop(); // don't repeat the perfect term
                }
                return Ok(series);
            }
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().unwrap().order() == 1)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|x| self.gens.iter().all(|y| x.compose(y) == y.compose(x)))
    }

    /// |G| > 1 and the normal closure of every nonidentity class
    /// representative is all of G.
    pub fn is_simple(&self) -> Result<bool> {
        if self.order() == 1 {
            return Ok(false);
        }
        for class in self.conjugacy_classes() {
            if class.rep.is_identity() {
                continue;
            }
            if self.normal_closure(std::slice::from_ref(&class.rep))?.order() != self.order() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Representation-erased group, what the CLI and checks operate on.
pub enum Group {
    Perm(GroupHandle<Perm>),
    Mat(GroupHandle<Mat>),
}

macro_rules! on_handle {
    ($g:expr, $h:ident => $body:expr) => {
        match $g {
            Group::Perm($h) => $body,
            Group::Mat($h) => $body,
        }
    };
}

impl Group {
    pub fn order(&self) -> u64 {
        on_handle!(self, h => h.order())
    }

    pub fn element_orders(&self) -> Box<dyn Iterator<Item = u64> + '_> {
        on_handle!(self, h => Box::new(h.element_orders()))
    }

    pub fn is_abelian(&self) -> bool {
        on_handle!(self, h => h.is_abelian())
    }

    pub fn is_solvable(&self) -> Result<bool> {
        on_handle!(self, h => h.is_solvable())
    }

    pub fn is_simple(&self) -> Result<bool> {
        on_handle!(self, h => h.is_simple())
    }

    /// Short human description of the carrier, e.g. "permutations on 65
    /// points" or "4x4 matrices over GF(8)".
    pub fn carrier(&self) -> String {
        match self {
            Group::Perm(h) => format!("permutations on {} points", h.identity().degree()),
            Group::Mat(h) => format!(
                "{n}x{n} matrices over GF({q})",
                n = h.identity().n(),
                q = h.identity().field().q()
            ),
        }
    }

    /// Orders of the centralizers of one representative per conjugacy
    /// class of elements of order `target`, class list order.
    pub fn centralizer_orders_of_order(&self, target: u64) -> Result<Vec<u64>> {
        fn go<E: Element>(h: &GroupHandle<E>, target: u64) -> Result<Vec<u64>> {
            let mut out = Vec::new();
            for class in h.conjugacy_classes() {
                if class.order == target {
                    out.push(h.centralizer(&class.rep)?.order());
                }
            }
            Ok(out)
        }
        on_handle!(self, h => go(h, target))
    }
}

/// Shared helper for builders: permutation closure with degree validation.
pub fn close_perms(gens: Vec<Perm>, degree: usize, cap: usize) -> Result<GroupHandle<Perm>> {
    for g in &gens {
        if g.degree() != degree {
            return Err(Error::Build(format!(
                "generator degree {} does not match declared degree {degree}",
                g.degree()
            )));
        }
    }
    GroupHandle::closure(gens, Perm::identity(degree), cap)
}

/// Matrix closure over a common field.
pub fn close_mats(
    gens: Vec<Mat>,
    field: &Arc<FieldSpec>,
    n: usize,
    cap: usize,
) -> Result<GroupHandle<Mat>> {
    GroupHandle::closure(gens, Mat::identity(field, n), cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(img: &[u16]) -> Perm {
        Perm::from_images(img.to_vec()).unwrap()
    }

    fn a5() -> GroupHandle<Perm> {
        close_perms(
            vec![p(&[1, 2, 3, 4, 0]), p(&[1, 2, 0, 3, 4])],
            5,
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn closure_a5() {
        assert_eq!(a5().order(), 60);
    }

    #[test]
    fn closure_cap() {
        let r = close_perms(vec![p(&[1, 2, 3, 4, 0])], 5, 3);
        assert!(matches!(r, Err(Error::CapExceeded { cap: 3 })));
        assert_eq!(close_perms(vec![p(&[1, 2, 3, 4, 0])], 5, 5).unwrap().order(), 5);
    }

    #[test]
    fn closure_determinism() {
        let g1 = a5();
        let g2 = a5();
        assert!(g1.elements().zip(g2.elements()).all(|(a, b)| a == b));
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let s3 = close_perms(vec![p(&[1, 2, 0]), p(&[1, 0, 2])], 3, 1000).unwrap();
        assert_eq!(s3.order(), 6);
        let mut sizes: Vec<u64> = s3.conjugacy_classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let transposition = p(&[1, 0, 2]);
        assert_eq!(s3.centralizer(&transposition).unwrap().order(), 2);
        assert_eq!(s3.centralizer(s3.identity()).unwrap().order(), 6);
        // not a member
        assert!(s3.centralizer(&p(&[0, 1, 2, 3])).is_err());
    }

    #[test]
    fn a5_classes() {
        let mut sizes: Vec<u64> = a5().conjugacy_classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        // centralizer of a 5-cycle has order 60/12 = 5
        let five = p(&[1, 2, 3, 4, 0]);
        assert_eq!(a5().centralizer(&five).unwrap().order(), 5);
    }

    #[test]
    fn normal_closure_and_series() {
        let s3 = close_perms(vec![p(&[1, 2, 0]), p(&[1, 0, 2])], 3, 1000).unwrap();
        let three_cycle = p(&[1, 2, 0]);
        assert_eq!(s3.normal_closure(&[three_cycle]).unwrap().order(), 3);
        let orders: Vec<u64> = s3
            .derived_series()
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, vec![6, 3, 1]);
        assert!(s3.is_solvable().unwrap());
        assert!(!s3.is_simple().unwrap());
    }

    #[test]
    fn simplicity_and_solvability() {
        let c7 = close_perms(vec![p(&[1, 2, 3, 4, 5, 6, 0])], 7, 100).unwrap();
        assert!(c7.is_simple().unwrap());
        assert!(c7.is_solvable().unwrap());
        let g = a5();
        assert!(g.is_simple().unwrap());
        assert!(!g.is_solvable().unwrap());
        assert!(!g.is_abelian());
    }

    #[test]
    fn mixed_degree_rejected() {
        let r = GroupHandle::closure(
            vec![p(&[1, 0]), p(&[1, 2, 0])],
            Perm::identity(3),
            100,
        );
        assert!(matches!(r, Err(Error::Build(_))));
    }
}

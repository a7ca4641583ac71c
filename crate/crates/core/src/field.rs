//! Exact arithmetic in GF(p^m) for small prime powers.
//!
//! Elements are stored as integer codes: the element with polynomial-basis
//! coefficients (c_0, c_1, ..., c_{m-1}) has code Σ c_i p^i, so enumeration
//! by ascending code starts 0, 1, ..., p-1, x, x+1, ... The modulus is the
//! monic irreducible of degree m with the smallest such code for its
//! non-leading coefficients, which makes every field here reproducible.

use crate::error::{Error, Result};
use crate::num;
use std::sync::Arc;

/// Largest supported field size. Addition/multiplication are table-driven
/// (q² entries each), and nothing downstream enumerates a group over a
/// bigger field anyway.
pub const MAX_FIELD: usize = 1024;

pub struct FieldSpec {
    p: u64,
    m: u32,
    q: usize,
    modulus: Vec<u16>, // length m+1, ascending degree, monic
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>, // inv[0] = 0, never read
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{} = {})", self.p, self.m, self.q)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn new(p: u64, m: u32) -> Result<Arc<FieldSpec>> {
        if !num::is_prime(p) {
            return Err(Error::Params(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::Params("field degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(m).filter(|&q| q <= MAX_FIELD as u128);
        let Some(q) = q else {
            return Err(Error::Params(format!(
                "field GF({p}^{m}) exceeds the supported size {MAX_FIELD}"
            )));
        };
        let q = q as usize;
        let modulus = find_modulus(p, m);
        let mut spec = FieldSpec {
            p,
            m,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        spec.build_tables();
        Ok(Arc::new(spec))
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> usize {
        self.q
    }

    /// Modulus coefficients, ascending degree, length m+1 (monic).
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    /// Coefficients of an element, ascending degree, length m.
    pub fn coeffs(&self, a: u16) -> Vec<u16> {
        let mut a = a as u64;
        (0..self.m)
            .map(|_| {
                let c = (a % self.p) as u16;
                a /= self.p;
                c
            })
            .collect()
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    /// None exactly when a = 0.
    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u16) -> u64 {
        assert!(a != 0, "order of zero");
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The smallest multiplicative generator under the canonical element
    /// order (for GF(2) that is 1).
    pub fn generator(&self) -> u16 {
        let target = (self.q - 1) as u64;
        (1..self.q as u16)
            .find(|&a| self.element_order(a) == target)
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// All q elements in canonical order: 0, 1, ...
    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q as u16
    }

    fn build_tables(&mut self) {
        let q = self.q;
        self.add = vec![0; q * q];
        self.mul = vec![0; q * q];
        self.neg = vec![0; q];
        self.inv = vec![0; q];
        for a in 0..q {
            let ca = self.coeffs(a as u16);
            for b in 0..q {
                let cb = self.coeffs(b as u16);
                let sum: Vec<u16> = ca
                    .iter()
                    .zip(&cb)
                    .map(|(&x, &y)| ((x as u64 + y as u64) % self.p) as u16)
                    .collect();
                self.add[a * q + b] = self.encode(&sum);
                let prod = self.poly_mul_reduce(&ca, &cb);
                self.mul[a * q + b] = self.encode(&prod);
            }
        }
        for a in 0..q {
            let ca = self.coeffs(a as u16);
            let n: Vec<u16> = ca.iter().map(|&x| ((self.p - x as u64) % self.p) as u16).collect();
            self.neg[a] = self.encode(&n);
        }
        for a in 1..q {
            let b = (1..q).find(|&b| self.mul[a * q + b] == 1).expect("field inverse");
            self.inv[a] = b as u16;
        }
    }

    fn encode(&self, coeffs: &[u16]) -> u16 {
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.p + c as u64;
        }
        code as u16
    }

    fn poly_mul_reduce(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % self.p;
            }
        }
        // reduce by the monic modulus, highest degree first
        for i in (m..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &md) in self.modulus.iter().enumerate().take(m) {
                let idx = i - m + k;
                prod[idx] = (prod[idx] + self.p * self.p - c * md as u64 % self.p) % self.p;
            }
        }
        prod.truncate(m);
        prod.iter().map(|&c| c as u16).collect()
    }
}

/// Monic irreducible of degree m over Z_p with the smallest coefficient code.
fn find_modulus(p: u64, m: u32) -> Vec<u16> {
    if m == 1 {
        return vec![0, 1]; // plain Z_p as x + 0
    }
    let m = m as usize;
    let count = (p as u128).pow(m as u32) as u64;
    for code in 0..count {
        let mut coeffs: Vec<u16> = Vec::with_capacity(m + 1);
        let mut c = code;
        for _ in 0..m {
            coeffs.push((c % p) as u16);
            c /= p;
        }
        coeffs.push(1);
        if poly_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist for every degree")
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn poly_irreducible(p: u64, poly: &[u16]) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u128).pow(d as u32) as u64;
        for code in 0..count {
            let mut div: Vec<u16> = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                div.push((c % p) as u16);
                c /= p;
            }
            div.push(1);
            if poly_divides(p, &div, poly) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(p: u64, div: &[u16], poly: &[u16]) -> bool {
    let mut rem: Vec<u64> = poly.iter().map(|&c| c as u64).collect();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let top = rem.len() - 1;
        if lead != 0 {
            for (k, &c) in div.iter().enumerate() {
                let idx = top - d + k;
                rem[idx] = (rem[idx] + p * p - lead * c as u64 % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// An element carrying its field; binary operations require matching specs.
#[derive(Clone, Debug)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    code: u16,
}

impl FieldElement {
    pub fn new(spec: &Arc<FieldSpec>, code: u16) -> Result<FieldElement> {
        if (code as usize) < spec.q() {
            Ok(FieldElement {
                spec: Arc::clone(spec),
                code,
            })
        } else {
            Err(Error::Params(format!(
                "code {code} out of range for {:?}",
                **spec
            )))
        }
    }

    pub fn code(&self) -> u16 {
        self.code
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if *self.spec == *other.spec {
            Ok(())
        } else {
            Err(Error::Params(format!(
                "mixed fields: {:?} vs {:?}",
                *self.spec, *other.spec
            )))
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement {
            spec: Arc::clone(&self.spec),
            code: self.spec.add(self.code, other.code),
        })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement {
            spec: Arc::clone(&self.spec),
            code: self.spec.mul(self.code, other.code),
        })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        match self.spec.inv(self.code) {
            Some(code) => Ok(FieldElement {
                spec: Arc::clone(&self.spec),
                code,
            }),
            None => Err(Error::Params("inverse of zero".into())),
        }
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            spec: Arc::clone(&self.spec),
            code: self.spec.pow(self.code, e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_examples() {
        // x² + 1 over Z_3; x³ + x + 1 over Z_2
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldSpec::new(4, 1).is_err());
        assert!(FieldSpec::new(7, 0).is_err());
        assert!(FieldSpec::new(2, 11).is_err()); // 2048 > MAX_FIELD
    }

    #[test]
    fn gf8_products() {
        let f = FieldSpec::new(2, 3).unwrap();
        // x·x² = x+1 after reduction by x³+x+1
        let x = 2u16;
        let x2 = f.mul(x, x);
        assert_eq!(f.mul(x, x2), 3);
    }

    #[test]
    fn prime_field_is_mod_p() {
        let f = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.add(6, 4), 3);
        assert_eq!(f.inv(3), Some(5));
    }

    #[test]
    fn mixed_field_rejected() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let f3 = FieldSpec::new(3, 1).unwrap();
        let a = FieldElement::new(&f9, 4).unwrap();
        let b = FieldElement::new(&f3, 2).unwrap();
        assert!(a.add(&b).is_err());
        assert!(FieldElement::new(&f3, 2)
            .unwrap()
            .mul(&FieldElement::new(&f3, 1).unwrap())
            .is_ok());
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert!(FieldElement::new(&f, 0).unwrap().inv().is_err());
        assert_eq!(f.inv(0), None);
    }
}

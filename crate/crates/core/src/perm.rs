use crate::error::{Error, Result};
use crate::num;

/// A permutation of {0, ..., n-1}, stored as its image array. The image
/// array doubles as the canonical key: comparing or hashing a permutation
/// is exactly comparing/hashing the images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Box<[u16]>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            img: (0..n as u16).collect(),
        }
    }

    pub fn from_images(img: Vec<u16>) -> Result<Perm> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::Build(format!(
                    "image list {:?} is not a bijection on 0..{n}",
                    img
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { img: img.into() })
    }

    /// Build from 1-based disjoint cycles over 1..=n.
    pub fn from_cycles(n: usize, cycles: &[Vec<u16>]) -> Result<Perm> {
        let mut img: Vec<u16> = (0..n as u16).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &pt) in cyc.iter().enumerate() {
                if pt == 0 || pt as usize > n {
                    return Err(Error::Build(format!("point {pt} outside 1..={n}")));
                }
                let i = (pt - 1) as usize;
                if touched[i] {
                    return Err(Error::Build(format!("point {pt} repeated across cycles")));
                }
                touched[i] = true;
                img[i] = cyc[(k + 1) % cyc.len()] - 1;
            }
        }
        Ok(Perm { img: img.into() })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: other.img.iter().map(|&i| self.img[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u16;
        }
        Perm { img: img.into() }
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0u64;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.img[j] as usize;
                len += 1;
            }
            ord = num::lcm(ord, len);
        }
        ord
    }

    /// 1-based cycle notation, fixed points omitted; "()" for the identity.
    pub fn cycle_string(&self) -> String {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for i in 0..n {
            if seen[i] || self.img[i] as usize == i {
                continue;
            }
            out.push('(');
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&(j + 1).to_string());
                first = false;
                j = self.img[j] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

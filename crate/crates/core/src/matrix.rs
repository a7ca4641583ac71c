use crate::field::FieldSpec;
use std::sync::Arc;

/// Square matrix over a small finite field, entries row-major as field
/// codes. The flattened entry vector is the canonical key; two matrices in
/// one group always share a field, which equality/ordering assume.
#[derive(Clone)]
pub struct Mat {
    n: u8,
    entries: Box<[u16]>,
    field: Arc<FieldSpec>,
}

impl Mat {
    pub fn new(field: &Arc<FieldSpec>, n: usize, entries: Vec<u16>) -> Mat {
        assert_eq!(entries.len(), n * n);
        debug_assert!(entries.iter().all(|&e| (e as usize) < field.q()));
        Mat {
            n: n as u8,
            entries: entries.into(),
            field: Arc::clone(field),
        }
    }

    pub fn identity(field: &Arc<FieldSpec>, n: usize) -> Mat {
        let mut entries = vec![0u16; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Mat::new(field, n, entries)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> u16 {
        self.entries[i * self.n as usize + j]
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n as usize;
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &e)| e == u16::from(k / n == k % n))
    }

    pub fn compose(&self, other: &Mat) -> Mat {
        debug_assert!(Arc::ptr_eq(&self.field, &other.field) && self.n == other.n);
        let n = self.n as usize;
        let f = &self.field;
        let mut out = vec![0u16; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if b != 0 {
                        out[i * n + j] = f.add(out[i * n + j], f.mul(a, b));
                    }
                }
            }
        }
        Mat {
            n: self.n,
            entries: out.into(),
            field: Arc::clone(f),
        }
    }

    /// Gauss-Jordan inverse; panics on singular input (group elements are
    /// always invertible).
    pub fn inverse(&self) -> Mat {
        let n = self.n as usize;
        let f = &self.field;
        let mut m: Vec<u16> = self.entries.to_vec();
        let mut inv = Mat::identity(f, n).entries.to_vec();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| m[r * n + col] != 0)
                .expect("singular matrix in group");
            for j in 0..n {
                m.swap(col * n + j, piv * n + j);
                inv.swap(col * n + j, piv * n + j);
            }
            let c = f.inv(m[col * n + col]).unwrap();
            for j in 0..n {
                m[col * n + j] = f.mul(c, m[col * n + j]);
                inv[col * n + j] = f.mul(c, inv[col * n + j]);
            }
            for r in 0..n {
                if r != col && m[r * n + col] != 0 {
                    let factor = m[r * n + col];
                    for j in 0..n {
                        m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[col * n + j]));
                        inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                    }
                }
            }
        }
        Mat {
            n: self.n,
            entries: inv.into(),
            field: Arc::clone(f),
        }
    }

    /// Order by repeated multiplication.
    pub fn order(&self) -> u64 {
        let mut x = self.clone();
        let mut k = 1u64;
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
            assert!(k < 1 << 40, "runaway matrix order");
        }
        k
    }
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}
impl Eq for Mat {}

impl std::hash::Hash for Mat {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl PartialOrd for Mat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Mat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.entries).cmp(&(other.n, &other.entries))
    }
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.n as usize;
        for i in 0..n {
            writeln!(f, "{:?}", &self.entries[i * n..(i + 1) * n])?;
        }
        Ok(())
    }
}

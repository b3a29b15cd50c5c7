//! Dense real tensors of arbitrary order with the contractions used
//! throughout the crate: the homogeneous form `A x^m`, the slice
//! contraction `A x^{m-1}`, symmetrization and diagonal sign-matrix
//! mode products.
//!
//! Storage is fully dense in lexicographic index order. Instances are
//! intended for desk-scale problems (`dim <= 6`, `order <= 6`), where
//! simplicity beats compressed symmetric storage.

use crate::error::{Error, Result};
use crate::interval::SignVector;

/// Absolute tolerance used when scanning entries for symmetry.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Tri-state symmetry flag carried by every tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Unknown,
    Verified,
    NotSymmetric,
}

/// An order-`m`, dimension-`n` real tensor with dense entry storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseTensor {
    order: usize,
    dim: usize,
    entries: Vec<f64>,
    symmetry: Symmetry,
}

impl DenseTensor {
    /// All-zero tensor.
    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        if order < 2 || dim < 1 {
            return Err(Error::InvalidShape { order, dim });
        }
        Ok(Self {
            order,
            dim,
            entries: vec![0.0; dim.pow(order as u32)],
            symmetry: Symmetry::Unknown,
        })
    }

    /// Build a tensor from coordinate entries with 1-based index tuples.
    /// Unlisted entries are zero; duplicate tuples are rejected.
    pub fn from_coo(order: usize, dim: usize, coo: &[(Vec<usize>, f64)]) -> Result<Self> {
        let mut t = Self::zeros(order, dim)?;
        let mut seen = vec![false; t.entries.len()];
        for (idx1, value) in coo {
            if idx1.len() != order || idx1.iter().any(|&i| i < 1 || i > dim) {
                return Err(Error::IndexOutOfRange {
                    index: idx1.clone(),
                    order,
                    dim,
                });
            }
            let idx0: Vec<usize> = idx1.iter().map(|&i| i - 1).collect();
            let off = t.offset(&idx0);
            if seen[off] {
                return Err(Error::DuplicateIndex { index: idx1.clone() });
            }
            seen[off] = true;
            t.entries[off] = *value;
        }
        Ok(t)
    }

    /// Build from a dense entry array in lexicographic order.
    pub fn from_entries(order: usize, dim: usize, entries: Vec<f64>) -> Result<Self> {
        if order < 2 || dim < 1 {
            return Err(Error::InvalidShape { order, dim });
        }
        if entries.len() != dim.pow(order as u32) {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for order {order}, dim {dim}, got {}",
                dim.pow(order as u32),
                entries.len()
            )));
        }
        Ok(Self {
            order,
            dim,
            entries,
            symmetry: Symmetry::Unknown,
        })
    }

    /// Order-`order` diagonal tensor with the given diagonal.
    pub fn diagonal(order: usize, diag: &[f64]) -> Result<Self> {
        let mut t = Self::zeros(order, diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            let idx = vec![i; order];
            let off = t.offset(&idx);
            t.entries[off] = d;
        }
        t.symmetry = Symmetry::Verified;
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    fn offset(&self, idx0: &[usize]) -> usize {
        let mut off = 0;
        for &i in idx0 {
            debug_assert!(i < self.dim);
            off = off * self.dim + i;
        }
        off
    }

    /// Entry at a 0-based index tuple.
    pub fn get(&self, idx0: &[usize]) -> f64 {
        self.entries[self.offset(idx0)]
    }

    /// Entry at a 1-based index tuple (the external convention).
    pub fn get1(&self, idx1: &[usize]) -> f64 {
        let idx0: Vec<usize> = idx1.iter().map(|&i| i - 1).collect();
        self.get(&idx0)
    }

    pub fn set(&mut self, idx0: &[usize], value: f64) {
        let off = self.offset(idx0);
        self.entries[off] = value;
        self.symmetry = Symmetry::Unknown;
    }

    /// Iterate over all 0-based index tuples in lexicographic order.
    pub fn index_tuples(&self) -> IndexIter {
        IndexIter::new(self.order, self.dim)
    }

    /// Exhaustive scan: does every index permutation carry the same value?
    pub fn symmetric_scan(&self, tol: f64) -> bool {
        let perms = permutations(self.order);
        let mut idx = vec![0usize; self.order];
        let mut p = vec![0usize; self.order];
        loop {
            let v = self.get(&idx);
            for perm in &perms {
                for (k, &src) in perm.iter().enumerate() {
                    p[k] = idx[src];
                }
                if (self.get(&p) - v).abs() > tol {
                    return false;
                }
            }
            if !next_index(&mut idx, self.dim) {
                return true;
            }
        }
    }

    /// Resolve the tri-state flag, scanning when it is unknown.
    pub fn is_symmetric(&self) -> bool {
        match self.symmetry {
            Symmetry::Verified => true,
            Symmetry::NotSymmetric => false,
            Symmetry::Unknown => self.symmetric_scan(SYMMETRY_TOL),
        }
    }

    /// Return a copy whose symmetry flag reflects an exhaustive scan.
    pub fn with_checked_symmetry(mut self) -> Self {
        self.symmetry = if self.symmetric_scan(SYMMETRY_TOL) {
            Symmetry::Verified
        } else {
            Symmetry::NotSymmetric
        };
        self
    }

    /// Permutation average `(1/m!) sum_{sigma} a_{sigma(i_1)...sigma(i_m)}`.
    /// Preserves the homogeneous form `A x^m` and is idempotent.
    pub fn symmetrize(&self) -> Self {
        if self.symmetry == Symmetry::Verified {
            return self.clone();
        }
        let perms = permutations(self.order);
        let scale = 1.0 / perms.len() as f64;
        let mut out = Self::zeros(self.order, self.dim).expect("shape already validated");
        let mut idx = vec![0usize; self.order];
        let mut p = vec![0usize; self.order];
        loop {
            let mut acc = 0.0;
            for perm in &perms {
                for (k, &src) in perm.iter().enumerate() {
                    p[k] = idx[src];
                }
                acc += self.get(&p);
            }
            let off = out.offset(&idx);
            out.entries[off] = acc * scale;
            if !next_index(&mut idx, self.dim) {
                break;
            }
        }
        out.symmetry = Symmetry::Verified;
        out
    }

    fn check_vector(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                got: x.len(),
                dim: self.dim,
            });
        }
        Ok(())
    }

    /// Full contraction `A x^m = sum a_{i_1...i_m} x_{i_1} ... x_{i_m}`.
    pub fn apply_xm(&self, x: &[f64]) -> Result<f64> {
        self.check_vector(x)?;
        let mut idx = vec![0usize; self.order];
        let mut acc = 0.0;
        loop {
            let a = self.get(&idx);
            if a != 0.0 {
                let mut prod = a;
                for &i in &idx {
                    prod *= x[i];
                }
                acc += prod;
            }
            if !next_index(&mut idx, self.dim) {
                return Ok(acc);
            }
        }
    }

    /// Slice contraction: component `i` is `sum a_{i i_2...i_m} x_{i_2} ... x_{i_m}`.
    pub fn apply_xm1(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_vector(x)?;
        let mut out = vec![0.0; self.dim];
        let mut idx = vec![0usize; self.order];
        loop {
            let a = self.get(&idx);
            if a != 0.0 {
                let mut prod = a;
                for &i in &idx[1..] {
                    prod *= x[i];
                }
                out[idx[0]] += prod;
            }
            if !next_index(&mut idx, self.dim) {
                return Ok(out);
            }
        }
    }

    /// Jacobian of `x -> A x^{m-1}` at `x`, by brute-force product rule.
    /// Valid for asymmetric tensors; for symmetric `A` it equals
    /// `(m-1) B(x)` with `B_{ij} = sum a_{i j i_3...i_m} x_{i_3}...x_{i_m}`.
    pub fn jacobian_xm1(&self, x: &[f64]) -> Result<Vec<Vec<f64>>> {
        self.check_vector(x)?;
        let mut out = vec![vec![0.0; self.dim]; self.dim];
        let mut idx = vec![0usize; self.order];
        loop {
            let a = self.get(&idx);
            if a != 0.0 {
                let rest = &idx[1..];
                for k in 0..rest.len() {
                    let mut prod = a;
                    for (l, &i) in rest.iter().enumerate() {
                        if l != k {
                            prod *= x[i];
                        }
                    }
                    out[idx[0]][rest[k]] += prod;
                }
            }
            if !next_index(&mut idx, self.dim) {
                return Ok(out);
            }
        }
    }

    /// Mode product with the diagonal sign matrix of `z` in every mode:
    /// entry `(i_1...i_m)` becomes `a_{i_1...i_m} z_{i_1} ... z_{i_m}`.
    pub fn mode_product_signs(&self, z: &SignVector) -> Result<Self> {
        if z.len() != self.dim {
            return Err(Error::DimensionMismatch {
                got: z.len(),
                dim: self.dim,
            });
        }
        let mut out = self.clone();
        let mut idx = vec![0usize; self.order];
        loop {
            if z.orbit_sign(&idx) < 0 {
                let off = out.offset(&idx);
                out.entries[off] = -out.entries[off];
            }
            if !next_index(&mut idx, self.dim) {
                break;
            }
        }
        // Sign products depend only on the index multiset, so symmetry survives.
        out.symmetry = if self.symmetry == Symmetry::Verified {
            Symmetry::Verified
        } else {
            Symmetry::Unknown
        };
        Ok(out)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.order != other.order || self.dim != other.dim {
            return Err(Error::ShapeMismatch {
                order_a: self.order,
                dim_a: self.dim,
                order_b: other.order,
                dim_b: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            order: self.order,
            dim: self.dim,
            entries,
            symmetry: combine_flags(self.symmetry, other.symmetry),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = -*e;
        }
        out
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= factor;
        }
        out
    }

    pub fn abs_tensor(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.abs();
        }
        out
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_shape(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= b))
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| m.max(e.abs()))
    }
}

fn combine_flags(a: Symmetry, b: Symmetry) -> Symmetry {
    if a == Symmetry::Verified && b == Symmetry::Verified {
        Symmetry::Verified
    } else {
        Symmetry::Unknown
    }
}

/// View of a tensor as the homogeneous polynomial `f_A(x) = A x^m`.
#[derive(Debug, Clone, Copy)]
pub struct HomogeneousForm<'a> {
    tensor: &'a DenseTensor,
}

impl<'a> HomogeneousForm<'a> {
    pub fn new(tensor: &'a DenseTensor) -> Self {
        Self { tensor }
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.tensor.apply_xm(x)
    }

    pub fn tensor(&self) -> &'a DenseTensor {
        self.tensor
    }
}

/// Advance a 0-based index tuple lexicographically; false when exhausted.
pub(crate) fn next_index(idx: &mut [usize], dim: usize) -> bool {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < dim {
            return true;
        }
        idx[k] = 0;
    }
    false
}

/// Iterator over all 0-based index tuples of a given shape.
pub struct IndexIter {
    dim: usize,
    current: Vec<usize>,
    done: bool,
}

impl IndexIter {
    fn new(order: usize, dim: usize) -> Self {
        Self {
            dim,
            current: vec![0; order],
            done: dim == 0,
        }
    }
}

impl Iterator for IndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.current.clone();
        self.done = !next_index(&mut self.current, self.dim);
        Some(item)
    }
}

/// All permutations of `0..m` (plain recursive enumeration; `m <= 6` in practice).
pub(crate) fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..m).collect();
    permute_rec(&mut items, 0, &mut out);
    out
}

fn permute_rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::SignVector;

    fn t51_z1() -> DenseTensor {
        // The vertex form 6(x1 x2 - x1 x3)^2 as a symmetric order-4 tensor:
        // value -1 on the 12 permutations of (1,1,2,3), 1 on the orbits of
        // (1,1,2,2) and (1,1,3,3).
        let mut coo = Vec::new();
        push_orbit(&mut coo, &[1, 1, 2, 3], -1.0);
        push_orbit(&mut coo, &[1, 1, 2, 2], 1.0);
        push_orbit(&mut coo, &[1, 1, 3, 3], 1.0);
        DenseTensor::from_coo(4, 3, &coo).unwrap()
    }

    fn push_orbit(coo: &mut Vec<(Vec<usize>, f64)>, idx: &[usize], value: f64) {
        let mut seen = std::collections::BTreeSet::new();
        for perm in permutations(idx.len()) {
            let p: Vec<usize> = perm.iter().map(|&k| idx[k]).collect();
            if seen.insert(p.clone()) {
                coo.push((p, value));
            }
        }
    }

    #[test]
    fn coo_identity_matrix() {
        let t =
            DenseTensor::from_coo(2, 2, &[(vec![1, 1], 1.0), (vec![2, 2], 1.0)]).unwrap();
        assert_eq!(t.entries(), &[1.0, 0.0, 0.0, 1.0]);
        assert_eq!(t.symmetry(), Symmetry::Unknown);
    }

    #[test]
    fn coo_zero_tensor() {
        let t = DenseTensor::from_coo(4, 2, &[]).unwrap();
        assert_eq!(t.entries().len(), 16);
        assert!(t.entries().iter().all(|&e| e == 0.0));
    }

    #[test]
    fn coo_orbit_counts() {
        let t = t51_z1();
        let minus: usize = t.entries().iter().filter(|&&e| e == -1.0).count();
        let plus: usize = t.entries().iter().filter(|&&e| e == 1.0).count();
        assert_eq!(minus, 12);
        assert_eq!(plus, 12); // two orbits of 6
        assert!(t.symmetric_scan(0.0));
    }

    #[test]
    fn coo_rejects_out_of_range_and_duplicates() {
        assert!(matches!(
            DenseTensor::from_coo(2, 2, &[(vec![1, 3], 1.0)]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            DenseTensor::from_coo(2, 2, &[(vec![1, 1], 1.0), (vec![1, 1], 2.0)]),
            Err(Error::DuplicateIndex { .. })
        ));
    }

    #[test]
    fn symmetrize_matrix() {
        let t = DenseTensor::from_coo(2, 2, &[(vec![1, 2], 2.0)]).unwrap();
        let s = t.symmetrize();
        assert_eq!(s.entries(), &[0.0, 1.0, 1.0, 0.0]);
        assert_eq!(s.symmetry(), Symmetry::Verified);
    }

    #[test]
    fn symmetrize_order4_orbit() {
        // Single entry a_{1123}=24 spreads value 2 over the 12 permutations
        // of (1,1,2,3): 2 of the 24 permutations of the slots fix the tuple.
        let t = DenseTensor::from_coo(4, 3, &[(vec![1, 1, 2, 3], 24.0)]).unwrap();
        let s = t.symmetrize();
        let mut nonzero = 0;
        for idx in s.index_tuples() {
            let v = s.get(&idx);
            if v != 0.0 {
                assert!((v - 2.0).abs() < 1e-12);
                nonzero += 1;
            }
        }
        assert_eq!(nonzero, 12);
    }

    #[test]
    fn symmetrize_fixed_point() {
        let s = t51_z1().symmetrize();
        let ss = s.symmetrize();
        assert_eq!(s.entries(), ss.entries());
    }

    #[test]
    fn apply_xm_examples() {
        let d = DenseTensor::diagonal(4, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(d.apply_xm(&[1.0, 1.0, 1.0]).unwrap(), 3.0);

        let t = t51_z1();
        assert!((t.apply_xm(&[1.0, 1.0, 0.0]).unwrap() - 6.0).abs() < 1e-12);
        assert!(t.apply_xm(&[1.0, 1.0, 1.0]).unwrap().abs() < 1e-12);
    }

    #[test]
    fn apply_xm_dimension_error() {
        let d = DenseTensor::diagonal(4, &[1.0, 1.0]).unwrap();
        assert!(matches!(
            d.apply_xm(&[1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn apply_xm1_examples() {
        let id = DenseTensor::diagonal(2, &[1.0, 1.0]).unwrap();
        assert_eq!(id.apply_xm1(&[3.0, 4.0]).unwrap(), vec![3.0, 4.0]);

        let d = DenseTensor::diagonal(4, &[5.0, 7.0]).unwrap();
        assert_eq!(d.apply_xm1(&[1.0, 1.0]).unwrap(), vec![5.0, 7.0]);
    }

    #[test]
    fn apply_xm1_dot_identity() {
        let t = t51_z1();
        let x = [1.0, 1.0, 1.0];
        let v = t.apply_xm1(&x).unwrap();
        let dot: f64 = v.iter().zip(&x).map(|(a, b)| a * b).sum();
        assert!((dot - t.apply_xm(&x).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn mode_product_sign_examples() {
        let a = DenseTensor::from_entries(2, 2, vec![1.0, 1.0, 1.0, 1.0]).unwrap();
        let ones = SignVector::new(vec![1, 1]).unwrap();
        assert_eq!(a.mode_product_signs(&ones).unwrap().entries(), a.entries());

        let z = SignVector::new(vec![1, -1]).unwrap();
        assert_eq!(
            a.mode_product_signs(&z).unwrap().entries(),
            &[1.0, -1.0, -1.0, 1.0]
        );

        let t = DenseTensor::from_coo(4, 3, &[(vec![1, 1, 2, 3], 1.0)]).unwrap();
        let z = SignVector::new(vec![1, 1, -1]).unwrap();
        assert_eq!(t.mode_product_signs(&z).unwrap().get1(&[1, 1, 2, 3]), -1.0);
    }

    #[test]
    fn elementwise_ops() {
        let a = DenseTensor::from_entries(2, 1, vec![-1.0]).unwrap();
        assert_eq!(a.abs_tensor().entries(), &[1.0]);

        let b = DenseTensor::from_entries(2, 2, vec![-1.0, 2.0, 0.0, 0.0]).unwrap();
        assert_eq!(b.abs_tensor().entries(), &[1.0, 2.0, 0.0, 0.0]);
        let sum = b.add(&b.negate()).unwrap();
        assert!(sum.entries().iter().all(|&e| e == 0.0));

        let lower = DenseTensor::from_coo(4, 3, &[(vec![1, 1, 2, 3], -1.0)]).unwrap();
        let upper = DenseTensor::from_coo(4, 3, &[(vec![1, 1, 2, 3], 1.0)]).unwrap();
        assert!(lower.leq(&upper).unwrap());
        assert!(!upper.leq(&lower).unwrap());
    }

    #[test]
    fn shape_mismatch_errors() {
        let a = DenseTensor::zeros(2, 2).unwrap();
        let b = DenseTensor::zeros(2, 3).unwrap();
        assert!(matches!(a.add(&b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn homogeneous_form_matches_contraction() {
        let t = t51_z1();
        let form = HomogeneousForm::new(&t);
        let x = [0.3, -1.2, 0.7];
        assert_eq!(form.eval(&x).unwrap(), t.apply_xm(&x).unwrap());
    }
}

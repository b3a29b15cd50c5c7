//! Interval tensors `[A_c - Delta, A_c + Delta]`, sign-vector enumeration
//! and the vertex tensors that reduce interval-wide questions to finitely
//! many point tensors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tensor::{next_index, DenseTensor};

/// A length-`n` vector with entries in `{+1, -1}`.
///
/// Canonical representatives fix the first entry to `+1`; for even-order
/// tensors `z` and `-z` induce the same vertex tensor, so the canonical
/// set of size `2^{n-1}` is exhaustive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    signs: Vec<i8>,
}

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument(
                "sign vector entries must be +1 or -1".into(),
            ));
        }
        Ok(Self { signs })
    }

    pub fn all_ones(n: usize) -> Self {
        Self { signs: vec![1; n] }
    }

    /// Orthant signs of `x`, mapping zero coordinates to `+1`.
    pub fn from_orthant(x: &[f64]) -> Self {
        Self {
            signs: x.iter().map(|&v| if v < 0.0 { -1 } else { 1 }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negated(&self) -> Self {
        Self {
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    /// The representative of `{z, -z}` whose first entry is `+1`.
    pub fn canonical(&self) -> Self {
        if self.signs[0] < 0 {
            self.negated()
        } else {
            self.clone()
        }
    }

    /// Product `z_{i_1} ... z_{i_m}` over a 0-based index tuple.
    pub fn orbit_sign(&self, idx0: &[usize]) -> i8 {
        let mut s = 1i8;
        for &i in idx0 {
            s *= self.signs[i];
        }
        s
    }

    /// Pattern string such as `"++-"`, used for reporting.
    pub fn label(&self) -> String {
        self.signs
            .iter()
            .map(|&s| if s > 0 { '+' } else { '-' })
            .collect()
    }
}

/// Enumerate sign vectors of length `n` in lexicographic order with `+1`
/// ordered before `-1`. With `canonical` set, only the `2^{n-1}`
/// representatives with leading `+1` are produced.
pub fn enumerate_sign_vectors(n: usize, canonical: bool) -> Vec<SignVector> {
    assert!(n >= 1, "sign vectors need n >= 1");
    let free = if canonical { n - 1 } else { n };
    let count = 1usize << free;
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let mut signs = Vec::with_capacity(n);
        if canonical {
            signs.push(1);
        }
        for bit in (0..free).rev() {
            signs.push(if code >> bit & 1 == 0 { 1 } else { -1 });
        }
        out.push(SignVector { signs });
    }
    out
}

/// Which side of the radius the vertex construction takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexMode {
    /// `A_c - Delta x_1 T_z ... x_m T_z`, the positive-definiteness family.
    Minus,
    /// `A_c + Delta x_1 T_z ... x_m T_z`, the Hurwitz-stability family.
    Plus,
}

/// An interval tensor stored as center `A_c` and nonnegative radius `Delta`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalTensor {
    center: DenseTensor,
    radius: DenseTensor,
}

impl IntervalTensor {
    pub fn new(center: DenseTensor, radius: DenseTensor) -> Result<Self> {
        if center.order() != radius.order() || center.dim() != radius.dim() {
            return Err(Error::ShapeMismatch {
                order_a: center.order(),
                dim_a: center.dim(),
                order_b: radius.order(),
                dim_b: radius.dim(),
            });
        }
        let mut idx = vec![0usize; center.order()];
        loop {
            let r = radius.get(&idx);
            if r < 0.0 {
                return Err(Error::NegativeRadius {
                    index: idx.iter().map(|&i| i + 1).collect(),
                    value: r,
                });
            }
            if !next_index(&mut idx, center.dim()) {
                break;
            }
        }
        Ok(Self { center, radius })
    }

    /// Point interval with zero radius.
    pub fn point(center: DenseTensor) -> Result<Self> {
        let radius = DenseTensor::zeros(center.order(), center.dim())?;
        Self::new(center, radius)
    }

    /// Center/radius decomposition of entrywise bounds.
    pub fn from_bounds(lower: &DenseTensor, upper: &DenseTensor) -> Result<Self> {
        if lower.order() != upper.order() || lower.dim() != upper.dim() {
            return Err(Error::ShapeMismatch {
                order_a: lower.order(),
                dim_a: lower.dim(),
                order_b: upper.order(),
                dim_b: upper.dim(),
            });
        }
        let mut idx = vec![0usize; lower.order()];
        loop {
            let (lo, hi) = (lower.get(&idx), upper.get(&idx));
            if lo > hi {
                return Err(Error::BoundsOutOfOrder {
                    index: idx.iter().map(|&i| i + 1).collect(),
                    lower: lo,
                    upper: hi,
                });
            }
            if !next_index(&mut idx, lower.dim()) {
                break;
            }
        }
        let center = lower.add(upper)?.scale(0.5);
        let radius = upper.sub(lower)?.scale(0.5);
        Self::new(center, radius)
    }

    pub fn order(&self) -> usize {
        self.center.order()
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn center(&self) -> &DenseTensor {
        &self.center
    }

    pub fn radius(&self) -> &DenseTensor {
        &self.radius
    }

    pub fn lower(&self) -> DenseTensor {
        self.center.sub(&self.radius).expect("shapes agree")
    }

    pub fn upper(&self) -> DenseTensor {
        self.center.add(&self.radius).expect("shapes agree")
    }

    /// `[-upper, -lower]`: negated center, same radius.
    pub fn negated(&self) -> Self {
        Self {
            center: self.center.negate(),
            radius: self.radius.clone(),
        }
    }

    /// The stored representation is symmetric (both center and radius pass
    /// the exhaustive scan).
    pub fn is_symmetric(&self) -> bool {
        self.center.is_symmetric() && self.radius.is_symmetric()
    }

    /// Symmetrize center and radius. The radius stays nonnegative because
    /// it is an average of nonnegative entries.
    pub fn symmetrized(&self) -> Self {
        Self {
            center: self.center.symmetrize(),
            radius: self.radius.symmetrize(),
        }
    }

    /// The vertex tensor for sign vector `z`: entrywise
    /// `a_c -/+ delta * z_{i_1} ... z_{i_m}`.
    pub fn vertex_tensor(&self, z: &SignVector, mode: VertexMode) -> Result<DenseTensor> {
        if z.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                got: z.len(),
                dim: self.dim(),
            });
        }
        let signed = self.radius.mode_product_signs(z)?;
        match mode {
            VertexMode::Minus => self.center.sub(&signed),
            VertexMode::Plus => self.center.add(&signed),
        }
    }

    /// Entrywise membership check.
    pub fn contains(&self, a: &DenseTensor) -> Result<bool> {
        Ok(self.lower().leq(a)? && a.leq(&self.upper())?)
    }

    /// Deterministic uniform sample from the entrywise box.
    pub fn sample_member(&self, seed: u64) -> DenseTensor {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = self.center.clone();
        let mut idx = vec![0usize; self.order()];
        loop {
            let r = self.radius.get(&idx);
            if r > 0.0 {
                let c = self.center.get(&idx);
                out.set(&idx, c + rng.gen_range(-r..=r));
            }
            if !next_index(&mut idx, self.dim()) {
                return out;
            }
        }
    }

    /// `min { A x^m : A in A^I }`, attained at the vertex for `sgn(x)`.
    /// Requires even order so the minimizing member is sign-determined.
    pub fn worst_case_value(&self, x: &[f64]) -> Result<f64> {
        if self.order() % 2 != 0 {
            return Err(Error::UnsupportedOddOrder {
                order: self.order(),
            });
        }
        let z = SignVector::from_orthant(x);
        let vertex = self.vertex_tensor(&z, VertexMode::Minus)?;
        vertex.apply_xm(x)
    }

    /// All tensors taking a bound value in every entry; `2^k` of them where
    /// `k` counts entries with positive radius. Strictly a desk-scale test
    /// oracle, hence the hard cap.
    pub fn enumerate_extreme_points(&self, cap: u128) -> Result<Vec<DenseTensor>> {
        let mut free = Vec::new();
        let mut idx = vec![0usize; self.order()];
        loop {
            if self.radius.get(&idx) > 0.0 {
                free.push(idx.clone());
            }
            if !next_index(&mut idx, self.dim()) {
                break;
            }
        }
        if free.len() >= 128 {
            return Err(Error::ExtremePointCap {
                count: u128::MAX,
                cap,
            });
        }
        let count = 1u128 << free.len();
        if count > cap {
            return Err(Error::ExtremePointCap { count, cap });
        }
        let mut out = Vec::with_capacity(count as usize);
        for code in 0..count {
            let mut t = self.center.clone();
            for (bit, idx) in free.iter().enumerate() {
                let r = self.radius.get(idx);
                let c = self.center.get(idx);
                let v = if code >> bit & 1 == 0 { c - r } else { c + r };
                t.set(idx, v);
            }
            out.push(t);
        }
        Ok(out)
    }
}

/// Default cap for [`IntervalTensor::enumerate_extreme_points`].
pub const EXTREME_POINT_CAP: u128 = 1 << 20;

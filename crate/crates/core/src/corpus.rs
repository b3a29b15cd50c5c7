//! Built-in 4th-order 3-dimensional interval instances.
//!
//! Each instance is the boundary case of one of the crate's sufficient
//! conditions: every vertex form collapses to an explicit sum of squares,
//! which makes these the standard fixtures for tests and the CLI corpus.

use crate::error::Result;
use crate::interval::IntervalTensor;
use crate::tensor::DenseTensor;

/// Names of the built-in instances, in CLI order.
pub const CORPUS_NAMES: [&str; 7] = [
    "theorem-5.1",
    "theorem-5.2a",
    "theorem-5.2b",
    "theorem-5.3a",
    "theorem-5.3b",
    "theorem-5.4a",
    "theorem-5.4b",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusInstance {
    Theorem51,
    Theorem52a,
    Theorem52b,
    Theorem53a,
    Theorem53b,
    Theorem54a,
    Theorem54b,
}

impl CorpusInstance {
    pub fn all() -> [CorpusInstance; 7] {
        use CorpusInstance::*;
        [
            Theorem51, Theorem52a, Theorem52b, Theorem53a, Theorem53b, Theorem54a, Theorem54b,
        ]
    }

    pub fn from_name(name: &str) -> Option<Self> {
        use CorpusInstance::*;
        Some(match name {
            "theorem-5.1" => Theorem51,
            "theorem-5.2a" => Theorem52a,
            "theorem-5.2b" => Theorem52b,
            "theorem-5.3a" => Theorem53a,
            "theorem-5.3b" => Theorem53b,
            "theorem-5.4a" => Theorem54a,
            "theorem-5.4b" => Theorem54b,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        use CorpusInstance::*;
        match self {
            Theorem51 => "theorem-5.1",
            Theorem52a => "theorem-5.2a",
            Theorem52b => "theorem-5.2b",
            Theorem53a => "theorem-5.3a",
            Theorem53b => "theorem-5.3b",
            Theorem54a => "theorem-5.4a",
            Theorem54b => "theorem-5.4b",
        }
    }

    /// Expected verdict for the instance: `true` means positive definite,
    /// `false` means positive semi-definite with a definiteness failure.
    pub fn is_strict(&self) -> bool {
        matches!(self, CorpusInstance::Theorem54a | CorpusInstance::Theorem54b)
    }

    /// Build the symmetric interval tensor. Center and radius are given by
    /// one value per index multiset, replicated over all permutations.
    pub fn build(&self) -> IntervalTensor {
        use CorpusInstance::*;
        let (center, radius): (&[(&[usize], f64)], &[(&[usize], f64)]) = match self {
            Theorem51 => (
                &[(&[1, 1, 2, 2], 1.0), (&[1, 1, 3, 3], 1.0)],
                &[(&[1, 1, 2, 3], 1.0)],
            ),
            Theorem52a => (
                &[(&[3, 3, 3, 3], 1.0), (&[2, 2, 3, 3], 2.0 / 3.0)],
                &[(&[2, 3, 3, 3], 1.0)],
            ),
            Theorem52b => (
                &[
                    (&[3, 3, 3, 3], 1.0),
                    (&[1, 1, 2, 2], 1.0),
                    (&[1, 1, 3, 3], 1.0),
                    (&[2, 2, 3, 3], 2.0 / 3.0),
                ],
                &[(&[2, 3, 3, 3], 1.0), (&[1, 1, 2, 3], 1.0)],
            ),
            Theorem53a => (
                &[
                    (&[2, 2, 2, 2], 1.0),
                    (&[3, 3, 3, 3], 1.0),
                    (&[1, 1, 2, 2], 1.0),
                    (&[1, 1, 3, 3], 1.0),
                    (&[2, 2, 3, 3], 1.0),
                ],
                &[
                    (&[2, 2, 2, 3], 1.0),
                    (&[2, 3, 3, 3], 1.0),
                    (&[1, 1, 2, 3], 1.0),
                ],
            ),
            Theorem53b => (
                &[
                    (&[2, 2, 2, 2], 1.0),
                    (&[3, 3, 3, 3], 1.0),
                    (&[1, 1, 2, 2], 2.0 / 3.0),
                    (&[1, 1, 3, 3], 1.0),
                    (&[2, 2, 3, 3], 1.0),
                ],
                &[(&[2, 3, 3, 3], 1.0), (&[1, 2, 2, 3], 1.0)],
            ),
            Theorem54a => (
                &[
                    (&[1, 1, 1, 1], 1.0),
                    (&[2, 2, 2, 2], 1.0),
                    (&[3, 3, 3, 3], 1.0),
                    (&[1, 1, 2, 2], 2.0 / 3.0),
                    (&[1, 1, 3, 3], 2.0 / 3.0),
                    (&[2, 2, 3, 3], 2.0 / 3.0),
                ],
                &[
                    (&[1, 1, 1, 2], 1.0),
                    (&[2, 2, 2, 3], 1.0),
                    (&[1, 3, 3, 3], 1.0),
                ],
            ),
            Theorem54b => (
                &[
                    (&[1, 1, 1, 1], 1.0),
                    (&[2, 2, 2, 2], 1.0),
                    (&[3, 3, 3, 3], 1.0),
                    (&[1, 1, 2, 2], 1.0),
                    (&[1, 1, 3, 3], 1.0),
                    (&[2, 2, 3, 3], 1.0),
                ],
                &[
                    (&[1, 1, 1, 2], 1.0),
                    (&[2, 2, 2, 3], 1.0),
                    (&[1, 2, 3, 3], 1.0),
                ],
            ),
        };
        let center = symmetric_from_multisets(center).expect("fixed instance is valid");
        let radius = symmetric_from_multisets(radius).expect("fixed instance is valid");
        IntervalTensor::new(center, radius).expect("fixed instance is valid")
    }
}

/// Build a symmetric order-4 dim-3 tensor from one representative index per
/// multiset (1-based); the value is replicated to every permutation.
pub fn symmetric_from_multisets(entries: &[(&[usize], f64)]) -> Result<DenseTensor> {
    let mut t = DenseTensor::zeros(4, 3)?;
    for (idx1, value) in entries {
        for perm in distinct_permutations(idx1) {
            let idx0: Vec<usize> = perm.iter().map(|&i| i - 1).collect();
            t.set(&idx0, *value);
        }
    }
    Ok(t.with_checked_symmetry())
}

/// Distinct permutations of an index tuple (orbit of the multiset).
pub fn distinct_permutations(idx: &[usize]) -> Vec<Vec<usize>> {
    let mut set = std::collections::BTreeSet::new();
    for perm in crate::tensor::permutations(idx.len()) {
        let p: Vec<usize> = perm.iter().map(|&k| idx[k]).collect();
        set.insert(p);
    }
    set.into_iter().collect()
}

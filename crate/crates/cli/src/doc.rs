//! JSON document formats for tensors and intervals.
//!
//! Indices in documents are 1-based to match the written notation; storage
//! is 0-based. The `symmetric_closure` flag replicates each COO entry to
//! every index permutation, which is how the corpus instances are naturally
//! specified (one representative per index multiset).

use itc_core::corpus::distinct_permutations;
use itc_core::interval::IntervalTensor;
use itc_core::tensor::DenseTensor;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CooEntry {
    pub idx: Vec<usize>,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Entries {
    Coo(Vec<CooEntry>),
    Dense(Vec<f64>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TensorDocument {
    pub order: usize,
    pub dim: usize,
    pub format: String,
    pub entries: Entries,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric_closure: Option<bool>,
}

/// Interval in either bounds or center/radius form; point-tensor documents
/// are accepted as zero-radius intervals by the commands.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum IntervalDocument {
    Bounds {
        lower: TensorDocument,
        upper: TensorDocument,
    },
    CenterRadius {
        center: TensorDocument,
        radius: TensorDocument,
    },
}

/// Either document kind, as accepted by the check commands.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum InputDocument {
    Interval(IntervalDocument),
    Tensor(TensorDocument),
}

impl TensorDocument {
    pub fn to_tensor(&self) -> Result<DenseTensor, String> {
        match (self.format.as_str(), &self.entries) {
            ("coo", Entries::Coo(entries)) => {
                let mut coo: Vec<(Vec<usize>, f64)> = Vec::new();
                if self.symmetric_closure.unwrap_or(false) {
                    // Replicate each entry to its whole permutation orbit;
                    // two sources landing on the same index must agree.
                    let mut seen: std::collections::BTreeMap<Vec<usize>, f64> =
                        std::collections::BTreeMap::new();
                    for e in entries {
                        for perm in distinct_permutations(&e.idx) {
                            match seen.get(&perm) {
                                Some(&v) if v != e.value => {
                                    return Err(format!(
                                        "symmetric_closure conflict at index {perm:?}: {v} vs {}",
                                        e.value
                                    ));
                                }
                                Some(_) => {}
                                None => {
                                    seen.insert(perm, e.value);
                                }
                            }
                        }
                    }
                    coo.extend(seen);
                } else {
                    coo.extend(entries.iter().map(|e| (e.idx.clone(), e.value)));
                }
                DenseTensor::from_coo(self.order, self.dim, &coo).map_err(|e| e.to_string())
            }
            ("dense", Entries::Dense(values)) => {
                DenseTensor::from_entries(self.order, self.dim, values.clone())
                    .map_err(|e| e.to_string())
            }
            ("coo", _) => Err("format \"coo\" requires a list of {idx, value} entries".into()),
            ("dense", _) => Err("format \"dense\" requires a flat numeric array".into()),
            (other, _) => Err(format!("unknown tensor format {other:?}")),
        }
    }

    /// Dense document for a tensor, row-major in storage order.
    pub fn dense(t: &DenseTensor) -> Self {
        Self {
            order: t.order(),
            dim: t.dim(),
            format: "dense".into(),
            entries: Entries::Dense(t.entries().to_vec()),
            symmetric_closure: None,
        }
    }

    /// COO document with one representative per index multiset and the
    /// closure flag set; requires a symmetric tensor.
    pub fn coo_closure(t: &DenseTensor) -> Self {
        let mut entries = Vec::new();
        let mut idx = vec![0usize; t.order()];
        loop {
            if idx.windows(2).all(|w| w[0] <= w[1]) {
                let v = t.get(&idx);
                if v != 0.0 {
                    entries.push(CooEntry {
                        idx: idx.iter().map(|&i| i + 1).collect(),
                        value: v,
                    });
                }
            }
            // Odometer over all index tuples.
            let mut k = t.order();
            loop {
                if k == 0 {
                    return Self {
                        order: t.order(),
                        dim: t.dim(),
                        format: "coo".into(),
                        entries: Entries::Coo(entries),
                        symmetric_closure: Some(true),
                    };
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < t.dim() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

impl IntervalDocument {
    pub fn to_interval(&self) -> Result<IntervalTensor, String> {
        match self {
            IntervalDocument::Bounds { lower, upper } => {
                let l = lower.to_tensor()?;
                let u = upper.to_tensor()?;
                IntervalTensor::from_bounds(&l, &u).map_err(|e| e.to_string())
            }
            IntervalDocument::CenterRadius { center, radius } => {
                let c = center.to_tensor()?;
                let r = radius.to_tensor()?;
                IntervalTensor::new(c, r).map_err(|e| e.to_string())
            }
        }
    }
}

impl InputDocument {
    pub fn to_interval(&self) -> Result<IntervalTensor, String> {
        match self {
            InputDocument::Interval(doc) => doc.to_interval(),
            InputDocument::Tensor(doc) => {
                IntervalTensor::point(doc.to_tensor()?).map_err(|e| e.to_string())
            }
        }
    }
}

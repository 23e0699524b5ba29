//! Multisets of vertices with real non-negative multiplicities.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Pointwise combination rule for two multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineKind {
    /// Pointwise maximum of multiplicities.
    Union,
    /// Pointwise minimum of multiplicities.
    Intersection,
    /// Pointwise sum of multiplicities.
    Sum,
}

/// A multiset over vertex ids.
///
/// Every stored multiplicity is finite and strictly positive; setting an
/// entry to zero removes it. This keeps the representation canonical, so
/// structural equality coincides with multiset equality and the support is
/// exactly the key set.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Multiset {
    entries: BTreeMap<String, f64>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(id, multiplicity)` pairs. Later pairs
    /// overwrite earlier ones with the same id; zero multiplicities are
    /// dropped.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let mut ms = Self::new();
        for (id, m) in pairs {
            ms.set(id, m)?;
        }
        Ok(ms)
    }

    /// Sets the multiplicity of `id`. A value of zero removes the entry;
    /// negative or non-finite values are rejected.
    pub fn set(&mut self, id: impl Into<String>, multiplicity: f64) -> Result<()> {
        let id = id.into();
        if !multiplicity.is_finite() || multiplicity < 0.0 {
            return Err(Error::InvalidMultiplicity {
                id,
                value: multiplicity,
            });
        }
        if multiplicity == 0.0 {
            self.entries.remove(&id);
        } else {
            self.entries.insert(id, multiplicity);
        }
        Ok(())
    }

    /// Multiplicity of `id`, zero when absent.
    pub fn multiplicity(&self, id: &str) -> f64 {
        self.entries.get(id).copied().unwrap_or(0.0)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.entries.contains_key(id)
    }

    /// Sum of all multiplicities (the m-cardinality).
    pub fn m_cardinality(&self) -> f64 {
        self.entries.values().sum()
    }

    /// Ids with positive multiplicity, in ascending order.
    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Number of distinct ids in the support.
    pub fn support_cardinality(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(id, multiplicity)` pairs in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// True when every multiplicity in `self` is at most the matching
    /// multiplicity in `other`.
    pub fn is_submset_of(&self, other: &Multiset) -> bool {
        self.entries
            .iter()
            .all(|(id, m)| *m <= other.multiplicity(id))
    }

    /// Combines two multisets pointwise according to `kind`.
    pub fn combine(&self, other: &Multiset, kind: CombineKind) -> Multiset {
        let mut out = Multiset::new();
        match kind {
            CombineKind::Union | CombineKind::Sum => {
                for (id, m) in self.entries.iter() {
                    let o = other.multiplicity(id);
                    let v = match kind {
                        CombineKind::Union => m.max(o),
                        _ => m + o,
                    };
                    out.entries.insert(id.clone(), v);
                }
                for (id, m) in other.entries.iter() {
                    if !self.entries.contains_key(id) {
                        out.entries.insert(id.clone(), *m);
                    }
                }
            }
            CombineKind::Intersection => {
                for (id, m) in self.entries.iter() {
                    let v = m.min(other.multiplicity(id));
                    if v > 0.0 {
                        out.entries.insert(id.clone(), v);
                    }
                }
            }
        }
        out
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        self.combine(other, CombineKind::Union)
    }

    pub fn intersection(&self, other: &Multiset) -> Multiset {
        self.combine(other, CombineKind::Intersection)
    }

    pub fn sum(&self, other: &Multiset) -> Multiset {
        self.combine(other, CombineKind::Sum)
    }
}

impl<'a> IntoIterator for &'a Multiset {
    type Item = (&'a String, &'a f64);
    type IntoIter = std::collections::btree_map::Iter<'a, String, f64>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered finite universe of distinct text labels: the set X of the
/// power-set ring P(X).
///
/// Label order is fixed at creation; bit position `i` of every element over
/// this ground set refers to `labels()[i]`. Cloning is cheap (shared handle).
#[derive(Clone)]
pub struct GroundSet {
    inner: Arc<Inner>,
}

struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    /// Builds a ground set from an ordered label sequence.
    ///
    /// The empty sequence is allowed and yields the zero ring, where the
    /// empty set and the whole set coincide.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet {
            inner: Arc::new(Inner { labels, index }),
        })
    }

    /// Number of labels; the ring P(X) has 2^size elements.
    pub fn size(&self) -> usize {
        self.inner.labels.len()
    }

    /// True for the empty ground set, whose ring is the zero ring (0 = 1).
    pub fn is_zero_ring(&self) -> bool {
        self.size() == 0
    }

    /// The labels in their fixed order.
    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    /// The label at bit position `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    /// Bit position of a label, if present.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    pub(crate) fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for GroundSet {}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet{{{}}}", self.inner.labels.join(", "))
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.labels.join(", "))
    }
}

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertices of a host graph with `host_n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(host_n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(host_n),
        }
    }

    pub fn full(host_n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(host_n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices<I>(host_n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = VertexSet::empty(host_n);
        for v in vertices {
            if v >= host_n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: host_n,
                });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    pub fn host_n(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Membership; vertices outside the host are never members.
    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.host_n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.host_n(),
            });
        }
        self.bits.insert(v);
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.host_n() {
            self.bits.set(v, false);
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

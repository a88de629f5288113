//! Exact sparse linear algebra over the rationals.
//!
//! [`Echelon`] keeps a reduced row echelon basis of the vectors inserted so
//! far, together with the combination of inputs that produced each row. That
//! single structure answers rank, kernel and membership questions, which is
//! all the certification code needs.
//!
//! Pivots are chosen deterministically: the smallest key of the reduced
//! vector in the key order. Insertion order is the caller's order, so the
//! same inputs always yield the same rows and the same kernel basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

pub(crate) fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, c: &Scalar, v: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let entry = target.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += c * x;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

#[derive(Clone, Debug)]
struct Row<K> {
    pivot: K,
    vec: SparseVec<K>,
    combo: SparseVec<usize>,
}

/// Outcome of [`Echelon::insert`].
#[derive(Clone, Debug, PartialEq)]
pub enum Inserted {
    /// The vector was independent of the previous inputs.
    Independent,
    /// The vector was dependent; the payload is a relation `Σ c_j input_j = 0`
    /// with coefficient 1 on the new input.
    Dependent(SparseVec<usize>),
}

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<Row<K>>,
    pivots: BTreeMap<K, usize>,
    inputs: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            inputs: 0,
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Reduces `v` against the current rows. Returns the remainder `r` and a
    /// combination `c` with `v = r + Σ c_j input_j`.
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut rem = v.clone();
        let mut combo = SparseVec::new();
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (r, c.clone())))
            .collect();
        for (r, c) in hits {
            let row = &self.rows[r];
            // Rows carry no other pivot keys, so the coefficient is unchanged.
            axpy(&mut rem, &-c.clone(), &row.vec);
            axpy(&mut combo, &c, &row.combo);
        }
        (rem, combo)
    }

    /// Coordinates of `v` in terms of the inputs, if `v` lies in their span.
    pub fn solve(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (rem, combo) = self.reduce(v);
        rem.is_empty().then_some(combo)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Canonical representative of `v` modulo the span.
    pub fn remainder(&self, v: &SparseVec<K>) -> SparseVec<K> {
        self.reduce(v).0
    }

    pub fn insert(&mut self, v: SparseVec<K>) -> Inserted {
        let index = self.inputs;
        self.inputs += 1;
        let (rem, combo) = self.reduce(&v);
        let mut relation = SparseVec::new();
        relation.insert(index, Scalar::one());
        axpy(&mut relation, &-Scalar::one(), &combo);
        if rem.is_empty() {
            return Inserted::Dependent(relation);
        }
        let (pivot, lead) = rem
            .iter()
            .next()
            .map(|(k, c)| (k.clone(), c.clone()))
            .expect("nonempty remainder");
        let inv = lead.recip();
        let vec: SparseVec<K> = rem.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        let combo: SparseVec<usize> = relation.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        for row in &mut self.rows {
            if let Some(c) = row.vec.get(&pivot).cloned() {
                axpy(&mut row.vec, &-c.clone(), &vec);
                axpy(&mut row.combo, &-c, &combo);
            }
        }
        self.pivots.insert(pivot.clone(), self.rows.len());
        self.rows.push(Row { pivot, vec, combo });
        Inserted::Independent
    }

    pub fn pivot_keys(&self) -> impl Iterator<Item = &K> {
        self.rows.iter().map(|r| &r.pivot)
    }
}

/// Basis of the kernel of the linear map sending basis vector `j` to
/// `images[j]`. Each kernel vector has coefficient 1 on its largest index.
pub fn kernel<K: Ord + Clone>(images: impl IntoIterator<Item = SparseVec<K>>) -> Vec<SparseVec<usize>> {
    let mut ech = Echelon::new();
    images
        .into_iter()
        .filter_map(|v| match ech.insert(v) {
            Inserted::Dependent(rel) => Some(rel),
            Inserted::Independent => None,
        })
        .collect()
}

pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

//! Sparse rows and streamed Gaussian elimination.
//!
//! Every linear system in the crate goes through [`Echelon`]: rows are
//! inserted one at a time, reduced against the pivots seen so far, and
//! kept only when they raise the rank. The semi-echelon state is turned
//! into the unique reduced row echelon form by [`Echelon::into_rref`].

use std::collections::BTreeMap;

use super::rational::Rational;

/// Sparse vector as strictly increasing `(column, nonzero value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    /// Builds from arbitrary `(column, value)` pairs; duplicates are summed
    /// and zeros dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let slot = acc.entry(c).or_insert(Rational::ZERO);
            *slot += &v;
        }
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, Rational)> {
        self.entries.first()
    }

    pub fn get(&self, col: usize) -> Rational {
        match self.entries.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v *= factor;
        }
    }

    /// `self - factor * other`.
    pub fn sub_scaled(&self, factor: &Rational, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, -(factor * &b[j].1)));
                j += 1;
            } else {
                let v = a[i].1.sub_mul(factor, &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }
}

/// Incremental row reduction over ℚ.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Clears pivot columns from the front of `row` until its leading
    /// column is free (or the row vanishes). Later entries may still sit in
    /// pivot columns.
    fn reduce_leading(&self, mut row: SparseVec) -> SparseVec {
        while let Some((c, v)) = row.leading() {
            match self.pivot_row[*c] {
                Some(i) => {
                    let v = v.clone();
                    row = row.sub_scaled(&v, &self.rows[i]);
                }
                None => break,
            }
        }
        row
    }

    /// Inserts a row; returns `true` when it raised the rank.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        debug_assert!(row.entries.last().is_none_or(|(c, _)| *c < self.ncols));
        let mut row = self.reduce_leading(row);
        let Some((c, v)) = row.leading() else {
            return false;
        };
        let c = *c;
        let inv = v.recip().expect("leading entry is nonzero");
        row.scale(&inv);
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce_leading(row.clone()).is_zero()
    }

    /// Finishes elimination into the unique reduced row echelon form.
    pub fn into_rref(self) -> Rref {
        let Echelon { ncols, rows, pivot_row } = self;
        let mut order: Vec<usize> = (0..ncols).filter(|c| pivot_row[*c].is_some()).collect();
        order.sort_unstable();
        let pivots = order.clone();
        let is_pivot: Vec<bool> = pivot_row.iter().map(Option::is_some).collect();

        let mut reduced: Vec<Option<SparseVec>> = vec![None; ncols];
        let mut rows: Vec<Option<SparseVec>> = rows.into_iter().map(Some).collect();
        for &p in order.iter().rev() {
            let row = rows[pivot_row[p].unwrap()].take().unwrap();
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (c, v) in row.entries {
                if c != p && is_pivot[c] {
                    let other = reduced[c].as_ref().unwrap();
                    for (oc, ov) in other.entries() {
                        if *oc == c {
                            continue;
                        }
                        let slot = acc.entry(*oc).or_insert(Rational::ZERO);
                        *slot = slot.sub_mul(&v, ov);
                    }
                } else {
                    let slot = acc.entry(c).or_insert(Rational::ZERO);
                    *slot += &v;
                }
            }
            let entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            reduced[p] = Some(SparseVec { entries });
        }
        let rows = pivots.iter().map(|p| reduced[*p].take().unwrap()).collect();
        Rref { ncols, rows, pivots }
    }
}

/// Reduced row echelon form with leftmost pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for p in &self.pivots {
            is_pivot[*p] = true;
        }
        (0..self.ncols).filter(|c| !is_pivot[*c]).collect()
    }

    /// One kernel vector per free column: 1 at the free column, minus the
    /// free-column entries of the pivot rows elsewhere.
    pub fn kernel_vectors(&self) -> Vec<SparseVec> {
        let free = self.free_columns();
        let mut out: Vec<Vec<(usize, Rational)>> = free.iter().map(|f| vec![(*f, Rational::ONE)]).collect();
        let slot_of: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            for (c, v) in row.entries() {
                if let Some(&k) = slot_of.get(c) {
                    out[k].push((*p, -v));
                }
            }
        }
        out.into_iter().map(SparseVec::from_pairs).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(vals: &[i64]) -> SparseVec {
        SparseVec::from_dense(&vals.iter().map(|v| Rational::from_int(*v)).collect::<Vec<_>>())
    }

    #[test]
    fn sub_scaled_merges() {
        let a = sv(&[1, 0, 2, 0]);
        let b = sv(&[0, 1, 1, 3]);
        let c = a.sub_scaled(&Rational::from_int(2), &b);
        assert_eq!(c, sv(&[1, -2, 0, -6]));
        assert_eq!(a.sub_scaled(&Rational::ONE, &a), SparseVec::new());
    }

    #[test]
    fn echelon_rank_and_kernel() {
        let mut e = Echelon::new(3);
        assert!(e.insert(sv(&[1, 2, 3])));
        assert!(!e.insert(sv(&[2, 4, 6])));
        assert!(e.insert(sv(&[0, 1, 1])));
        assert!(e.contains(&sv(&[1, 3, 4])));
        assert!(!e.contains(&sv(&[0, 0, 1])));
        let rref = e.into_rref();
        assert_eq!(rref.pivots, vec![0, 1]);
        assert_eq!(rref.rows[0], sv(&[1, 0, 1]));
        assert_eq!(rref.rows[1], sv(&[0, 1, 1]));
        assert_eq!(rref.kernel_vectors(), vec![sv(&[-1, -1, 1])]);
    }
}

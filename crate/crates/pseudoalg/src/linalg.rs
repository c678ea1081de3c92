//! Exact sparse linear algebra over Q.
//!
//! Rows are cleared of denominators and kept primitive (content 1) so that
//! elimination proceeds fraction-free over the integers.  Pivots are chosen
//! deterministically: rows are processed in input order and each row's
//! pivot is its lowest nonzero column after reduction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// A sparse vector: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, Rat)>;

type IntRow = Vec<(usize, BigInt)>;

/// Scales a rational row to a primitive integer row (same sign pattern).
fn to_primitive(row: &[(usize, Rat)]) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: IntRow =
        row.iter().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (*c, v.numer() * (&lcm / v.denom()))).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// `a·r − b·p`, merging sorted sparse rows.
fn combine(a: &BigInt, r: &IntRow, b: &BigInt, p: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, a * &r[i].1));
            i += 1;
        } else if take_p {
            out.push((p[j].0, -(b * &p[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &p[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// An echelon basis built incrementally from inserted rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    /// pivot column ↦ primitive row whose lowest column is the pivot.
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces until the leading column is not a pivot (or the row is zero).
    fn reduce_leading(&self, mut r: IntRow) -> IntRow {
        while let Some(&(c, ref lead)) = r.first() {
            let Some(p) = self.pivots.get(&c) else { break };
            let a = p[0].1.clone();
            let g = a.gcd(lead);
            let (a, b) = (&a / &g, lead / &g);
            r = combine(&a, &r, &b, p);
            make_primitive(&mut r);
        }
        r
    }

    /// Eliminates every pivot column from `r` (full reduction).
    fn reduce_full(&self, mut r: IntRow) -> IntRow {
        let mut idx = 0;
        while idx < r.len() {
            let c = r[idx].0;
            if let Some(p) = self.pivots.get(&c) {
                let a = p[0].1.clone();
                let g = a.gcd(&r[idx].1);
                let (a, b) = (&a / &g, &r[idx].1 / &g);
                r = combine(&a, &r, &b, p);
                make_primitive(&mut r);
                // entries below `c` are unchanged; resume at the first column ≥ c
                idx = r.iter().position(|(col, _)| *col >= c).unwrap_or(r.len());
            } else {
                idx += 1;
            }
        }
        r
    }

    /// Inserts a row; returns `true` when it was independent of the basis.
    pub fn insert(&mut self, row: &[(usize, Rat)]) -> bool {
        let r = self.reduce_leading(to_primitive(row));
        self.insert_reduced(r)
    }

    fn insert_reduced(&mut self, mut r: IntRow) -> bool {
        if r.is_empty() {
            return false;
        }
        if r[0].1.is_negative() {
            for (_, v) in r.iter_mut() {
                *v = -&*v;
            }
        }
        debug_assert!(r.iter().all(|(c, _)| *c < self.ncols));
        self.pivots.insert(r[0].0, r);
        true
    }

    /// True when `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[(usize, Rat)]) -> bool {
        self.reduce_leading(to_primitive(row)).is_empty()
    }

    /// Canonical representative of `row` modulo the span: every pivot column
    /// is eliminated; the result is rescaled to a primitive integer vector
    /// with positive leading entry (zero vector if `row` is in the span).
    pub fn reduce(&self, row: &[(usize, Rat)]) -> SparseRow {
        let mut r = self.reduce_full(to_primitive(row));
        if r.first().is_some_and(|(_, v)| v.is_negative()) {
            for (_, v) in r.iter_mut() {
                *v = -&*v;
            }
        }
        r.into_iter().map(|(c, v)| (c, Rat::from_bigint(v))).collect()
    }

    /// Same as [`Echelon::reduce`] but keeps the scale of the input (exact
    /// remainder, not rescaled).
    pub fn remainder(&self, row: &[(usize, Rat)]) -> SparseRow {
        // Work in rationals so the result is the exact coset representative.
        let mut r: BTreeMap<usize, Rat> = row.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
        for (&c, p) in &self.pivots {
            let Some(v) = r.get(&c).cloned() else { continue };
            let lead = Rat::from_bigint(p[0].1.clone());
            let f = v / lead;
            for (pc, pv) in p {
                let e = r.entry(*pc).or_insert_with(Rat::zero);
                *e -= &(&f * &Rat::from_bigint(pv.clone()));
                if e.is_zero() {
                    r.remove(pc);
                }
            }
        }
        r.into_iter().collect()
    }

    /// Basis of `{x : row·x = 0 for every inserted row}` as dense vectors.
    ///
    /// One vector per free column `f` (increasing), with `x_f = 1`, the other
    /// free coordinates zero, and pivot coordinates solved by back substitution.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        let rows: Vec<(usize, Vec<(usize, Rat)>)> = self
            .pivots
            .iter()
            .rev()
            .map(|(&c, r)| (c, r.iter().map(|(k, v)| (*k, Rat::from_bigint(v.clone()))).collect()))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rat::zero(); self.ncols];
                x[f] = Rat::one();
                for (c, r) in &rows {
                    let mut acc = Rat::zero();
                    for (k, v) in &r[1..] {
                        if !x[*k].is_zero() {
                            acc += &(v * &x[*k]);
                        }
                    }
                    if !acc.is_zero() {
                        x[*c] = -(acc / &r[0].1);
                    }
                }
                x
            })
            .collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: &[SparseRow], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Nullspace basis of the matrix whose rows are given.
pub fn nullspace(rows: &[SparseRow], ncols: usize) -> Vec<Vec<Rat>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.nullspace()
}

/// Converts a dense vector to sparse form.
pub fn to_sparse(v: &[Rat]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Rescales to the smallest integer vector with positive leading entry.
pub fn normalize_integer(v: &[Rat]) -> Vec<Rat> {
    let sparse = to_sparse(v);
    let prim = to_primitive(&sparse);
    let neg = prim.first().is_some_and(|(_, x)| x.is_negative());
    let mut out = vec![Rat::zero(); v.len()];
    for (c, x) in prim {
        out[c] = Rat::from_bigint(if neg { -x } else { x });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> SparseRow {
        to_sparse(&v.iter().map(|&x| Rat::int(x)).collect::<Vec<_>>())
    }

    fn dot(a: &SparseRow, x: &[Rat]) -> Rat {
        a.iter().map(|(c, v)| v * &x[*c]).sum()
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![row(&[1, 2, 3, 4]), row(&[2, 4, 6, 8]), row(&[0, 1, 1, 0])];
        assert_eq!(rank(&rows, 4), 2);
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert!(dot(r, v).is_zero());
            }
        }
    }

    #[test]
    fn rational_entries() {
        let rows = vec![vec![(0, Rat::new(1, 2)), (1, Rat::new(-1, 3))]];
        let ns = nullspace(&rows, 2);
        assert_eq!(ns, vec![vec![Rat::new(2, 3), Rat::one()]]);
    }

    #[test]
    fn reduction_is_canonical() {
        let mut e = Echelon::new(3);
        e.insert(&row(&[1, 1, 0]));
        let a = e.reduce(&row(&[3, 0, 1]));
        let b = e.reduce(&row(&[0, -3, 1]));
        assert_eq!(a, b);
        assert!(e.contains(&row(&[2, 2, 0])));
        assert_eq!(e.remainder(&row(&[2, 3, 0])), row(&[0, 1, 0]));
    }

    #[test]
    fn normalize() {
        let v = vec![Rat::zero(), Rat::new(-1, 5), Rat::new(-4, 5)];
        assert_eq!(normalize_integer(&v), vec![Rat::zero(), Rat::int(1), Rat::int(4)]);
    }
}

use std::fmt;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

/// A cell of a Young diagram: 1-indexed row (top is 1) and column.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Cell {
        assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    pub fn transpose(self) -> Cell {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Sorts nothing: `parts` must already be weakly decreasing. Trailing
    /// zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Option<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return None;
        }
        Some(Partition(parts))
    }

    /// Sorts `parts` into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Length of row `i` (1-indexed), zero beyond the last row.
    pub fn part(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        Partition(
            (1..=w)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// `self ⊆ other` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Cells in reading order (row by row, left to right).
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
    }

    /// `λ_i − j` for the cell `(i, j)`; negative outside the diagram.
    pub fn arm(&self, c: Cell) -> i64 {
        self.part(c.row) as i64 - c.col as i64
    }

    /// `λ'_j − i` for the cell `(i, j)`; negative outside the diagram.
    pub fn leg(&self, c: Cell) -> i64 {
        self.0.iter().filter(|&&p| p >= c.col).count() as i64 - c.row as i64
    }

    /// Dominance order on partitions of the same size: partial sums of `self`
    /// never exceed those of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut s, mut t) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            s += self.0.get(i).copied().unwrap_or(0);
            t += other.0.get(i).copied().unwrap_or(0);
            if s > t {
                return false;
            }
        }
        true
    }

    /// `other / self` has at most one cell per row.
    pub fn is_vertical_strip_to(&self, other: &Partition) -> bool {
        self.is_contained_in(other)
            && (1..=other.len() as u32).all(|i| other.part(i) - self.part(i) <= 1)
    }

    /// `other / self` has at most one cell per column.
    pub fn is_horizontal_strip_to(&self, other: &Partition) -> bool {
        self.is_contained_in(other)
            && (1..=other.len() as u32).all(|i| other.part(i + 1) <= self.part(i))
    }

    /// All partitions obtained by adding a vertical strip of `k` cells.
    pub fn vertical_strips(&self, k: u32) -> Vec<Partition> {
        let rows = self.len() + k as usize;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rows);
        self.vstrip_rec(0, rows, k, &mut cur, &mut out);
        out
    }

    fn vstrip_rec(&self, i: usize, rows: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            let mut parts = cur.clone();
            parts.extend(self.0.iter().skip(i));
            out.push(Partition::new(parts).expect("valid by construction"));
            return;
        }
        if i == rows {
            return;
        }
        let base = self.0.get(i).copied().unwrap_or(0);
        let bound = if i == 0 { u32::MAX } else { cur[i - 1] };
        for add in [1u32, 0] {
            let p = base + add;
            if p > bound || (p == 0 && add == 1) {
                continue;
            }
            if add == 0 && base == 0 {
                // Rows below an empty row stay empty.
                continue;
            }
            cur.push(p);
            self.vstrip_rec(i + 1, rows, left - add, cur, out);
            cur.pop();
        }
    }

    /// All partitions obtained by adding a horizontal strip of `k` cells.
    pub fn horizontal_strips(&self, k: u32) -> Vec<Partition> {
        self.conjugate()
            .vertical_strips(k)
            .into_iter()
            .map(|p| p.conjugate())
            .collect()
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    part_rec(n, n, &mut cur, &mut out);
    out
}

fn part_rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        part_rec(n - p, p, cur, out);
        cur.pop();
    }
}

/// `z_λ = Π_i i^{n_i} n_i!`.
pub fn z_factor(p: &Partition) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let mut z = BigInt::from(1);
    let mut i = 0;
    let parts = p.parts();
    while i < parts.len() {
        let v = parts[i];
        let mut k = 0u32;
        while i < parts.len() && parts[i] == v {
            i += 1;
            k += 1;
            z *= v * k;
        }
    }
    z
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        let c: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(c, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn strips_are_strips() {
        let l = p(&[3, 2, 2]);
        for k in 0..4 {
            for v in l.vertical_strips(k) {
                assert_eq!(v.size(), l.size() + k);
                assert!(l.is_vertical_strip_to(&v));
            }
            for h in l.horizontal_strips(k) {
                assert_eq!(h.size(), l.size() + k);
                assert!(l.is_horizontal_strip_to(&h));
            }
        }
        assert_eq!(Partition::empty().vertical_strips(2), vec![p(&[1, 1])]);
        assert_eq!(p(&[1]).vertical_strips(1).len(), 2);
    }

    #[test]
    fn z_values() {
        assert_eq!(z_factor(&p(&[2, 1])), 2.into());
        assert_eq!(z_factor(&p(&[1, 1, 1])), 6.into());
        assert_eq!(z_factor(&p(&[2, 2, 1])), 8.into());
    }

    #[test]
    fn arm_and_leg() {
        let l = p(&[4, 2, 2, 1, 1]);
        assert_eq!(l.arm(Cell::new(1, 1)), 3);
        assert_eq!(l.leg(Cell::new(1, 1)), 4);
        assert_eq!(l.arm(Cell::new(2, 3)), -1);
    }
}

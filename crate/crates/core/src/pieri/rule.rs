use std::collections::{BTreeMap, BTreeSet};

use crate::coeffield::RatFunc;
use crate::orthobasis::Field;
use crate::coeffield::params::alpha;
use crate::superpartitions::{classify_strip, Cell, CellKind, StripClassification, SuperPartition};

use super::det::invert_alpha;
use super::hooks::{factor_a, factor_b, norm_squared};

fn is_new(k: CellKind) -> bool {
    matches!(k, CellKind::NewSquare | CellKind::BumpingSquare | CellKind::NewCircle)
}

/// `col_{Ω/Λ}`: the cells of `Λ^⊛` lying in a column of `Ω` that contains a
/// non-preexisting cell.
pub fn col_cells(lam: &SuperPartition, cells: &BTreeMap<Cell, CellKind>) -> Vec<Cell> {
    let cols: BTreeSet<u32> = cells.iter().filter(|(_, k)| is_new(**k)).map(|(c, _)| c.col).collect();
    lam.circled().cells().filter(|s| cols.contains(&s.col)).collect()
}

/// Contribution of a cell of `col` to `ψ′`, by how its row ends in `Ω`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Contribution {
    A,
    B,
    C,
    One,
}

fn contribution_value(
    c: Contribution,
    lam: &SuperPartition,
    om: &SuperPartition,
    s: Cell,
    field: Field,
) -> RatFunc {
    match c {
        Contribution::A => factor_a(lam, om, s, field),
        Contribution::B => factor_b(lam, om, s, field),
        Contribution::C => &factor_a(lam, om, s, field) * &factor_b(lam, om, s, field),
        Contribution::One => RatFunc::one(),
    }
}

pub fn row_contribution(cells: &BTreeMap<Cell, CellKind>, om: &SuperPartition, row: u32) -> Contribution {
    let len = om.circled().part(row);
    let end = Cell::new(row, len);
    match cells[&end] {
        CellKind::PreexistingSquare | CellKind::PreexistingCircle => Contribution::C,
        CellKind::NewSquare => Contribution::One,
        CellKind::BumpingSquare => Contribution::B,
        CellKind::NewCircle => {
            if len > 1 && cells.get(&Cell::new(row, len - 1)) == Some(&CellKind::BumpingSquare) {
                Contribution::One
            } else {
                Contribution::A
            }
        }
    }
}

pub fn column_contribution(cells: &BTreeMap<Cell, CellKind>, om: &SuperPartition, col: u32) -> Contribution {
    let len = om.circled().conjugate().part(col);
    let end = Cell::new(len, col);
    match cells[&end] {
        CellKind::PreexistingSquare | CellKind::PreexistingCircle | CellKind::NewSquare => Contribution::C,
        CellKind::BumpingSquare => Contribution::B,
        CellKind::NewCircle => {
            if len > 1 && cells.get(&Cell::new(len - 1, col)) == Some(&CellKind::BumpingSquare) {
                Contribution::C
            } else {
                Contribution::A
            }
        }
    }
}

/// `ψ′_{Ω/Λ}`: product over `col` of `A`, `B`, `C = AB` or 1 by how the
/// row ends.
pub fn psi_prime(cls: &StripClassification, lam: &SuperPartition, om: &SuperPartition, field: Field) -> RatFunc {
    col_cells(lam, &cls.cells)
        .into_iter()
        .map(|s| contribution_value(row_contribution(&cls.cells, om, s.row), lam, om, s, field))
        .product()
}

/// `φ_{Ω/Λ}`: product over `col` of `A`, `B` or `C` by how the column ends.
pub fn phi(cls: &StripClassification, lam: &SuperPartition, om: &SuperPartition) -> RatFunc {
    col_cells(lam, &cls.cells)
        .into_iter()
        .map(|s| contribution_value(column_contribution(&cls.cells, om, s.col), lam, om, s, Field::Alpha))
        .product()
}

/// The dual `φ` obtained by conjugation: `ψ′_{Ω′/Λ′}` at `1/α` times
/// `‖P_Λ‖²/‖P_Ω‖²`, with the power of α carried by `Det′` removed.
pub fn phi_conjugate(lam: &SuperPartition, om: &SuperPartition) -> RatFunc {
    let (lc, oc) = (lam.conjugate(), om.conjugate());
    let cls = classify_strip(&lc, &oc).expect("conjugate of a horizontal strip is vertical");
    let psi = invert_alpha(&psi_prime(&cls, &lc, &oc, Field::Alpha));
    let out = &psi * &(&norm_squared(lam) / &norm_squared(om));
    if om.m() > lam.m() {
        &out / &alpha()
    } else {
        out
    }
}

/// Sign of a horizontal strip: `(−1)^{#(Ω′/Λ′)}`.
pub fn dual_sign(lam: &SuperPartition, om: &SuperPartition) -> i32 {
    let cls = classify_strip(&lam.conjugate(), &om.conjugate()).expect("conjugate of a horizontal strip is vertical");
    strip_sign(&cls, false)
}

/// `#(Ω/Λ)`: for every new circle and bumping square, the number of
/// preexisting circles and new squares above it (below it when `dual`).
pub fn sign_exponent(cells: &BTreeMap<Cell, CellKind>, dual: bool) -> usize {
    let movers = cells
        .iter()
        .filter(|(_, k)| matches!(k, CellKind::NewCircle | CellKind::BumpingSquare));
    let blockers: Vec<Cell> = cells
        .iter()
        .filter(|(_, k)| matches!(k, CellKind::PreexistingCircle | CellKind::NewSquare))
        .map(|(c, _)| *c)
        .collect();
    movers
        .map(|(c, _)| {
            blockers
                .iter()
                .filter(|b| if dual { b.row > c.row } else { b.row < c.row })
                .count()
        })
        .sum()
}

/// `(−1)^{#(Ω/Λ)}`, or the dual version.
pub fn strip_sign(cls: &StripClassification, dual: bool) -> i32 {
    if sign_exponent(&cls.cells, dual).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `d(Ω/Λ)`: the labels read top to bottom (a y label before an x label in
/// the same row) form a word `w`, and `d_i` counts the `y_j` after `x_i`
/// with `j ≤ i` minus those before it with `j > i`.
pub fn d_stat(cls: &StripClassification) -> i64 {
    let mut word: Vec<(u32, u8, usize)> = Vec::new();
    for (j, c) in cls.ylabels.iter().enumerate() {
        word.push((c.row, 0, j));
    }
    for (i, c) in cls.xlabels.iter().enumerate() {
        word.push((c.row, 1, i));
    }
    word.sort();
    let mut d = 0i64;
    for (p, &(_, kind, i)) in word.iter().enumerate() {
        if kind != 1 {
            continue;
        }
        for (r, &(_, k2, j)) in word.iter().enumerate() {
            if k2 != 0 {
                continue;
            }
            if r > p && j <= i {
                d += 1;
            }
            if r < p && j > i {
                d -= 1;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpartitions::classify_strip;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn col_example() {
        let (lam, om) = (sp("(3,1;5,4,3)"), sp("(4,1,0;5,5,4)"));
        let cls = classify_strip(&lam, &om).unwrap();
        let col = col_cells(&lam, &cls.cells);
        let cols: BTreeSet<u32> = col.iter().map(|c| c.col).collect();
        assert_eq!(cols, BTreeSet::from([1, 4, 5]));
        assert_eq!(row_contribution(&cls.cells, &om, 1), Contribution::C);
        assert_eq!(row_contribution(&cls.cells, &om, 2), Contribution::One);
        assert_eq!(row_contribution(&cls.cells, &om, 3), Contribution::One);
        assert_eq!(row_contribution(&cls.cells, &om, 4), Contribution::One);
    }

    #[test]
    fn sign_counts_circles_above() {
        let cls = classify_strip(&sp("(3,1;2,1)"), &sp("(3,1,0;2,1)")).unwrap();
        assert_eq!(sign_exponent(&cls.cells, false), 2);
        assert_eq!(sign_exponent(&cls.cells, true), 0);
        let cls = classify_strip(&sp("(;)"), &sp("(0;)")).unwrap();
        assert_eq!(strip_sign(&cls, false), 1);
    }
}

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{Cell, Partition};
use super::superpartition::SuperPartition;
use super::SuperPartitionError;

/// Role of a cell of `Ω^⊛` relative to `Λ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellKind {
    PreexistingSquare,
    NewSquare,
    /// Square of `Ω^*` placed over a circle of `Λ`.
    BumpingSquare,
    PreexistingCircle,
    NewCircle,
}

/// Multiplier families. `E`/`ETilde` add vertical strips, `G`/`GTilde`
/// horizontal ones; the tilde kinds add one more cell to `Ω^⊛`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripKind {
    E,
    ETilde,
    G,
    GTilde,
}

impl StripKind {
    pub fn is_tilde(self) -> bool {
        matches!(self, StripKind::ETilde | StripKind::GTilde)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, StripKind::E | StripKind::ETilde)
    }

    pub fn name(self) -> &'static str {
        match self {
            StripKind::E => "e",
            StripKind::ETilde => "etilde",
            StripKind::G => "g",
            StripKind::GTilde => "gtilde",
        }
    }

    pub fn parse(s: &str) -> Option<StripKind> {
        match s {
            "e" => Some(StripKind::E),
            "etilde" => Some(StripKind::ETilde),
            "g" => Some(StripKind::G),
            "gtilde" => Some(StripKind::GTilde),
            _ => None,
        }
    }
}

impl fmt::Display for StripKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Cell-by-cell description of `Ω/Λ` together with its x and y labels.
///
/// x labels sit on bumping and new squares, y labels on new circles and new
/// squares. For vertical strips both are numbered top to bottom and "line"
/// means row; for horizontal strips they are numbered bottom to top (left
/// to right) and "line" means column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StripClassification {
    pub kind: StripKind,
    pub n: u32,
    pub cells: BTreeMap<Cell, CellKind>,
    pub xlabels: Vec<Cell>,
    pub ylabels: Vec<Cell>,
}

impl StripClassification {
    pub fn is_vertical(&self) -> bool {
        self.kind.is_vertical()
    }

    pub fn kind_of(&self, c: Cell) -> Option<CellKind> {
        self.cells.get(&c).copied()
    }

    pub fn cells_of(&self, kind: CellKind) -> Vec<Cell> {
        self.cells
            .iter()
            .filter(|(_, k)| **k == kind)
            .map(|(c, _)| *c)
            .collect()
    }

    /// Row for vertical strips, column for horizontal ones.
    pub fn line(&self, c: Cell) -> u32 {
        if self.is_vertical() {
            c.row
        } else {
            c.col
        }
    }

    /// Relation between x label `i` and y label `j` (0-based).
    pub fn relation(&self, i: usize, j: usize) -> LabelRelation {
        let x = self.xlabels[i];
        let y = self.ylabels[j];
        if self.line(x) == self.line(y) {
            LabelRelation::Same
        } else if self.ylabels.iter().any(|&c| self.line(c) == self.line(x)) {
            LabelRelation::Other
        } else {
            LabelRelation::None
        }
    }
}

/// How an x label and a y label sit relative to each other.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelRelation {
    /// No y label shares the x label's line.
    None,
    /// The two labels share a line.
    Same,
    /// A different y label shares the x label's line.
    Other,
}

fn kind_of_cell(lam: &SuperPartition, om: &SuperPartition, c: Cell) -> Result<CellKind, SuperPartitionError> {
    let in_om_star = om.star().contains(c);
    let in_lam_star = lam.star().contains(c);
    let in_lam_circ = lam.circled().contains(c);
    Ok(match (in_om_star, in_lam_star, in_lam_circ) {
        (true, true, _) => CellKind::PreexistingSquare,
        (true, false, true) => CellKind::BumpingSquare,
        (true, false, false) => CellKind::NewSquare,
        (false, false, true) => CellKind::PreexistingCircle,
        (false, false, false) => CellKind::NewCircle,
        (false, true, _) => return Err(SuperPartitionError::CircleOverSquare(c)),
    })
}

/// Kind of every cell of `Ω^⊛` relative to `Λ`.
pub fn cell_kinds(lam: &SuperPartition, om: &SuperPartition) -> Result<BTreeMap<Cell, CellKind>, SuperPartitionError> {
    om.circled().cells().map(|c| Ok((c, kind_of_cell(lam, om, c)?))).collect()
}

fn check_strip(
    small: &Partition,
    big: &Partition,
    size: u32,
    vertical: bool,
    which: &'static str,
) -> Result<(), SuperPartitionError> {
    if !small.is_contained_in(big) {
        return Err(SuperPartitionError::NotAStrip(format!("{which}: Λ is not contained in Ω")));
    }
    let ok = if vertical {
        small.is_vertical_strip_to(big)
    } else {
        small.is_horizontal_strip_to(big)
    };
    if !ok {
        let shape = if vertical { "vertical" } else { "horizontal" };
        return Err(SuperPartitionError::NotAStrip(format!("{which}: Ω/Λ is not a {shape} strip")));
    }
    if big.size() - small.size() != size {
        return Err(SuperPartitionError::NotAStrip(format!(
            "{which}: Ω/Λ has {} cells, expected {size}",
            big.size() - small.size()
        )));
    }
    Ok(())
}

/// Classifies `Ω/Λ` as a vertical strip (kind `E` or `ETilde`).
pub fn classify_strip(lam: &SuperPartition, om: &SuperPartition) -> Result<StripClassification, SuperPartitionError> {
    classify_oriented(lam, om, true)
}

/// Classifies `Ω/Λ` as a strip of the given orientation.
pub fn classify_oriented(
    lam: &SuperPartition,
    om: &SuperPartition,
    vertical: bool,
) -> Result<StripClassification, SuperPartitionError> {
    if om.star().size() < lam.star().size() {
        return Err(SuperPartitionError::NotAStrip("Ω^* is smaller than Λ^*".into()));
    }
    let n = om.star().size() - lam.star().size();
    let tilde = match om.m() as i64 - lam.m() as i64 {
        0 => false,
        1 => true,
        d => {
            return Err(SuperPartitionError::NotAStrip(format!(
                "fermionic degree changes by {d}, expected 0 or 1"
            )))
        }
    };
    check_strip(lam.star(), om.star(), n, vertical, "star diagrams")?;
    check_strip(lam.circled(), om.circled(), n + tilde as u32, vertical, "circled diagrams")?;
    let kind = match (vertical, tilde) {
        (true, false) => StripKind::E,
        (true, true) => StripKind::ETilde,
        (false, false) => StripKind::G,
        (false, true) => StripKind::GTilde,
    };
    let cells = cell_kinds(lam, om)?;
    let mut xlabels: Vec<Cell> = cells
        .iter()
        .filter(|(_, k)| matches!(k, CellKind::BumpingSquare | CellKind::NewSquare))
        .map(|(c, _)| *c)
        .collect();
    let mut ylabels: Vec<Cell> = cells
        .iter()
        .filter(|(_, k)| matches!(k, CellKind::NewCircle | CellKind::NewSquare))
        .map(|(c, _)| *c)
        .collect();
    // Labels of a horizontal strip occupy distinct columns, and reading them
    // bottom to top is reading them left to right.
    if !vertical {
        xlabels.sort_by_key(|c| c.col);
        ylabels.sort_by_key(|c| c.col);
    }
    let cls = StripClassification {
        kind,
        n,
        cells,
        xlabels,
        ylabels,
    };
    debug_assert_eq!(cls.xlabels.len() as u32, n);
    debug_assert_eq!(cls.ylabels.len() as u32, n + tilde as u32);
    Ok(cls)
}

/// All `Ω` such that `Ω/Λ` is a strip of the requested kind, with their
/// classifications, sorted decreasingly by `Ω`.
pub fn strips(lam: &SuperPartition, n: u32, kind: StripKind) -> Vec<(SuperPartition, StripClassification)> {
    let extra = kind.is_tilde() as u32;
    let vertical = kind.is_vertical();
    let grow = |p: &Partition, k: u32| {
        if vertical {
            p.vertical_strips(k)
        } else {
            p.horizontal_strips(k)
        }
    };
    let stars = grow(lam.star(), n);
    let circs = grow(lam.circled(), n + extra);
    let mut out = Vec::new();
    for s in &stars {
        for c in &circs {
            let Ok(om) = SuperPartition::from_diagrams(s.clone(), c.clone()) else {
                continue;
            };
            if let Ok(cls) = classify_oriented(lam, &om, vertical) {
                out.push((om, cls));
            }
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn decorated_example() {
        let cls = classify_strip(&sp("(3,1;5,4,3)"), &sp("(4,1,0;5,5,4)")).unwrap();
        assert_eq!(cls.kind, StripKind::ETilde);
        assert_eq!(cls.cells_of(CellKind::NewSquare), vec![Cell::new(2, 5), Cell::new(4, 4)]);
        assert_eq!(cls.cells_of(CellKind::BumpingSquare), vec![Cell::new(3, 4)]);
        assert_eq!(cls.cells_of(CellKind::NewCircle), vec![Cell::new(3, 5), Cell::new(6, 1)]);
        assert_eq!(cls.cells_of(CellKind::PreexistingCircle), vec![Cell::new(5, 2)]);
    }

    #[test]
    fn empty_etilde() {
        let s = strips(&sp("(;)"), 0, StripKind::ETilde);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].0, sp("(0;)"));
        assert!(s[0].1.xlabels.is_empty());
        assert_eq!(s[0].1.ylabels, vec![Cell::new(1, 1)]);
    }

    #[test]
    fn rejects_non_strips() {
        assert!(classify_strip(&sp("(;1)"), &sp("(;3)")).is_err());
        assert!(classify_strip(&sp("(;2)"), &sp("(;1,1,1)")).is_err());
    }
}

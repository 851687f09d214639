use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{partitions, Cell, Partition};
use super::SuperPartitionError;

/// Superpartition stored as its pair of diagrams `(Λ^⊛, Λ^*)`.
///
/// The derived order compares `Λ^*` first and then `Λ^⊛`, both
/// lexicographically; it refines dominance.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SuperPartition {
    star: Partition,
    circled: Partition,
}

/// Which of the two diagrams a query refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Diagram {
    Star,
    Circled,
}

impl SuperPartition {
    /// Validates `Λ^* ⊆ Λ^⊛` with a difference that is both a horizontal and
    /// a vertical strip.
    pub fn from_diagrams(star: Partition, circled: Partition) -> Result<SuperPartition, SuperPartitionError> {
        if !star.is_contained_in(&circled) {
            return Err(SuperPartitionError::NotContained);
        }
        if !star.is_vertical_strip_to(&circled) || !star.is_horizontal_strip_to(&circled) {
            return Err(SuperPartitionError::NotRookStrip);
        }
        Ok(SuperPartition { star, circled })
    }

    /// Builds `(Λ^a; Λ^s)`: `a` strictly decreasing nonnegative, `s` weakly
    /// decreasing (trailing zeros allowed and dropped).
    pub fn from_parts(a: &[u32], s: &[u32]) -> Result<SuperPartition, SuperPartitionError> {
        for w in a.windows(2) {
            if w[0] == w[1] {
                return Err(SuperPartitionError::RepeatedFermionicPart(w[0]));
            }
            if w[0] < w[1] {
                return Err(SuperPartitionError::FermionicNotDecreasing);
            }
        }
        let s = Partition::new(s.to_vec()).ok_or(SuperPartitionError::BosonicNotDecreasing)?;
        let mut star_rows: Vec<u32> = a.iter().copied().chain(s.parts().iter().copied()).collect();
        star_rows.sort_unstable_by(|x, y| y.cmp(x));
        // A circled row sits above any uncircled row of the same length.
        let mut rows: Vec<(u32, bool)> = a
            .iter()
            .map(|&x| (x, true))
            .chain(s.parts().iter().map(|&x| (x, false)))
            .collect();
        rows.sort_unstable_by(|x, y| y.cmp(x));
        let circled = Partition::new(rows.iter().map(|&(x, c)| x + c as u32).collect())
            .expect("sorted rows with circles first stay decreasing");
        let star = Partition::from_unsorted(star_rows);
        SuperPartition::from_diagrams(star, circled)
    }

    pub fn empty() -> SuperPartition {
        SuperPartition::default()
    }

    pub fn star(&self) -> &Partition {
        &self.star
    }

    pub fn circled(&self) -> &Partition {
        &self.circled
    }

    pub fn diagram(&self, d: Diagram) -> &Partition {
        match d {
            Diagram::Star => &self.star,
            Diagram::Circled => &self.circled,
        }
    }

    /// Fermionic degree `m`.
    pub fn m(&self) -> usize {
        (self.circled.size() - self.star.size()) as usize
    }

    /// Total degree `|Λ^*|`.
    pub fn n(&self) -> u32 {
        self.star.size()
    }

    /// Rows carrying a circle (1-indexed), top to bottom.
    pub fn circle_rows(&self) -> Vec<u32> {
        (1..=self.circled.len() as u32)
            .filter(|&i| self.circled.part(i) > self.star.part(i))
            .collect()
    }

    /// Cells of `Λ^⊛ / Λ^*`, top to bottom.
    pub fn circles(&self) -> Vec<Cell> {
        self.circle_rows()
            .into_iter()
            .map(|i| Cell::new(i, self.circled.part(i)))
            .collect()
    }

    pub fn has_circle(&self, c: Cell) -> bool {
        self.circled.contains(c) && !self.star.contains(c)
    }

    /// Fermionic parts `Λ^a`, strictly decreasing.
    pub fn a_parts(&self) -> Vec<u32> {
        self.circle_rows().into_iter().map(|i| self.star.part(i)).collect()
    }

    /// Bosonic parts `Λ^s`, weakly decreasing, positive.
    pub fn s_parts(&self) -> Vec<u32> {
        (1..=self.star.len() as u32)
            .filter(|&i| self.circled.part(i) == self.star.part(i))
            .map(|i| self.star.part(i))
            .collect()
    }

    /// `ℓ(Λ) = m + ℓ(Λ^s)`.
    pub fn length(&self) -> usize {
        self.m() + self.s_parts().len()
    }

    pub fn conjugate(&self) -> SuperPartition {
        SuperPartition {
            star: self.star.conjugate(),
            circled: self.circled.conjugate(),
        }
    }

    /// Dominance: equal degrees and both diagrams dominated.
    pub fn dominated_by(&self, other: &SuperPartition) -> bool {
        self.m() == other.m()
            && self.star.dominated_by(&other.star)
            && self.circled.dominated_by(&other.circled)
    }

    /// Arm and leg of a cell within one of the diagrams.
    pub fn arm_leg(&self, s: Cell, d: Diagram) -> Result<(u32, u32), SuperPartitionError> {
        let p = self.diagram(d);
        if !p.contains(s) {
            return Err(SuperPartitionError::CellOutside(s));
        }
        Ok((p.arm(s) as u32, p.leg(s) as u32))
    }
}

/// All superpartitions of degree `(n|m)`, sorted decreasingly.
pub fn enumerate_superpartitions(n: u32, m: usize) -> Vec<SuperPartition> {
    let mut out = Vec::new();
    let mut a = Vec::new();
    distinct_rec(n, m, u32::MAX, &mut a, &mut |a, rest| {
        for s in partitions(rest) {
            out.push(SuperPartition::from_parts(a, s.parts()).expect("valid by construction"));
        }
    });
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

fn distinct_rec(budget: u32, left: usize, below: u32, a: &mut Vec<u32>, f: &mut impl FnMut(&[u32], u32)) {
    if left == 0 {
        f(a, budget);
        return;
    }
    let top = budget.min(below.saturating_sub(1));
    for x in 0..=top {
        // Leave room for the remaining distinct parts x-1, x-2, …, x-left+1.
        if (x as usize) + 1 < left {
            continue;
        }
        a.push(x);
        distinct_rec(budget - x, left - 1, x, a, f);
        a.pop();
    }
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a_parts().iter().map(|x| x.to_string()).collect();
        let s: Vec<String> = self.s_parts().iter().map(|x| x.to_string()).collect();
        write!(f, "({};{})", a.join(","), s.join(","))
    }
}

fn parse_list(text: &str) -> Result<Vec<u32>, SuperPartitionError> {
    let t = text.trim();
    if t.is_empty() || t == "∅" {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| SuperPartitionError::Malformed(format!("bad part {:?}", x.trim())))
        })
        .collect()
}

impl FromStr for SuperPartition {
    type Err = SuperPartitionError;

    /// Reads `(a1,…,am;s1,…,sk)`; `∅` may stand for an empty list.
    fn from_str(text: &str) -> Result<SuperPartition, SuperPartitionError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| SuperPartitionError::Malformed(format!("expected \"(a;s)\", got {t:?}")))?;
        let mut halves = inner.split(';');
        let (a, s) = match (halves.next(), halves.next(), halves.next()) {
            (Some(a), Some(s), None) => (a, s),
            _ => {
                return Err(SuperPartitionError::Malformed(format!(
                    "expected exactly one ';' in {t:?}"
                )))
            }
        };
        SuperPartition::from_parts(&parse_list(a)?, &parse_list(s)?)
    }
}

#[derive(Serialize, Deserialize)]
struct Parts {
    a: Vec<u32>,
    s: Vec<u32>,
}

impl Serialize for SuperPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Parts {
            a: self.a_parts(),
            s: self.s_parts(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<SuperPartition, D::Error> {
        let p = Parts::deserialize(d)?;
        SuperPartition::from_parts(&p.a, &p.s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn diagrams_of_text_form() {
        let l = sp("(3,1,0;2,1)");
        assert_eq!(l.circled().parts(), &[4, 2, 2, 1, 1]);
        assert_eq!(l.star().parts(), &[3, 2, 1, 1]);
        assert_eq!(l.to_string(), "(3,1,0;2,1)");
        assert_eq!(l.m(), 3);
        assert_eq!(l.n(), 7);
    }

    #[test]
    fn conjugation() {
        assert_eq!(sp("(3,1,0;2,1)").conjugate(), sp("(4,2,0;1)"));
        assert_eq!(sp("(;)").conjugate(), sp("(;)"));
    }

    #[test]
    fn parse_errors() {
        assert!("(1,1;)".parse::<SuperPartition>().is_err());
        assert!("(;1,2)".parse::<SuperPartition>().is_err());
        assert!("(0,1;)".parse::<SuperPartition>().is_err());
        assert!("3;1".parse::<SuperPartition>().is_err());
        assert!("(1;2;3)".parse::<SuperPartition>().is_err());
        assert_eq!(sp("(∅;2,1,0)"), sp("(;2,1)"));
    }

    #[test]
    fn sector_sizes() {
        let sizes: Vec<usize> = (0..=3).map(|m| enumerate_superpartitions(4, m).len()).collect();
        assert_eq!(sizes, vec![5, 12, 9, 2]);
        assert_eq!(enumerate_superpartitions(0, 1), vec![sp("(0;)")]);
        assert_eq!(enumerate_superpartitions(1, 1), vec![sp("(1;)"), sp("(0;1)")]);
    }

    #[test]
    fn json_form() {
        let l = sp("(3,1,0;2,1)");
        let j = serde_json::to_string(&l).unwrap();
        assert_eq!(j, r#"{"a":[3,1,0],"s":[2,1]}"#);
        assert_eq!(serde_json::from_str::<SuperPartition>(&j).unwrap(), l);
    }
}

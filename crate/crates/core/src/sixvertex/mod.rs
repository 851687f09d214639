//! Alternating sign matrices, their weights, the Izergin–Korepin determinant
//! and its relation to the Pieri determinants.

use serde::Serialize;

use crate::coeffield::params::{alpha, eps, u, v};
use crate::coeffield::{determinant, CoeffError, RatFunc, Var};
use crate::orthobasis::Field;
use crate::pieri::{coincidence_prefactor, det_pieri, generic_bracket_qt, label_value};
use crate::superpartitions::StripClassification;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SixVertexError {
    #[error("spectral data has {0} x values and {1} y values")]
    SizeMismatch(usize, usize),
    #[error("pole in the Izergin–Korepin matrix at ({0}, {1})")]
    Pole(usize, usize),
    #[error("the strip has a unit row; only square determinants apply")]
    NotSquare,
    #[error("the ε-limit does not exist")]
    NoLimit,
}

/// A square matrix over {−1, 0, 1} with unit row and column sums whose
/// nonzero entries alternate in sign along every line.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

fn alternates(line: impl Iterator<Item = i8>) -> bool {
    let mut expect = 1;
    let mut seen = false;
    for e in line.filter(|&e| e != 0) {
        if e != expect {
            return false;
        }
        expect = -expect;
        seen = true;
    }
    seen && expect == -1
}

impl Asm {
    pub fn new(entries: Vec<Vec<i8>>) -> Option<Asm> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return None;
        }
        let rows_ok = entries.iter().all(|r| alternates(r.iter().copied()));
        let cols_ok = (0..n).all(|j| alternates(entries.iter().map(|r| r[j])));
        (rows_ok && cols_ok).then_some(Asm { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i][j]
    }

    /// Sum of the entries strictly above `(i, j)` in its column and strictly
    /// to its left in its row.
    pub fn corner_sum(&self, i: usize, j: usize) -> i32 {
        let above: i32 = (0..i).map(|k| self.entries[k][j] as i32).sum();
        let left: i32 = (0..j).map(|k| self.entries[i][k] as i32).sum();
        above + left
    }
}

/// All alternating sign matrices of size `n`, rows built top to bottom with
/// every column partial sum kept in {0, 1}.
pub fn enumerate_asm(n: usize) -> Vec<Asm> {
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(n);
    extend_asm(n, &mut vec![0; n], &mut rows, &mut out);
    out
}

fn extend_asm(n: usize, partial: &mut Vec<i8>, rows: &mut Vec<Vec<i8>>, out: &mut Vec<Asm>) {
    if rows.len() == n {
        if partial.iter().all(|&s| s == 1) {
            out.push(Asm { entries: rows.clone() });
        }
        return;
    }
    let mut choices = Vec::new();
    row_choices(0, 0, partial, &mut vec![0i8; n], &mut |row| choices.push(row.to_vec()));
    for row in choices {
        for (p, e) in partial.iter_mut().zip(&row) {
            *p += e;
        }
        rows.push(row);
        extend_asm(n, partial, rows, out);
        let row = rows.pop().expect("pushed above");
        for (p, e) in partial.iter_mut().zip(&row) {
            *p -= e;
        }
    }
}

/// Rows whose prefix sums stay in {0, 1} and end at 1; a −1 is only placed
/// over a column whose partial sum is 1 and a 1 over one whose sum is 0.
fn row_choices(j: usize, sum: i8, partial: &[i8], row: &mut [i8], f: &mut dyn FnMut(&[i8])) {
    if j == row.len() {
        if sum == 1 {
            f(row);
        }
        return;
    }
    row[j] = 0;
    row_choices(j + 1, sum, partial, row, f);
    if sum == 0 && partial[j] == 0 {
        row[j] = 1;
        row_choices(j + 1, 1, partial, row, f);
    }
    if sum == 1 && partial[j] == 1 {
        row[j] = -1;
        row_choices(j + 1, 0, partial, row, f);
    }
    row[j] = 0;
}

/// Spectral parameters `x`, `y` and the crossing parameter `a`. In the α
/// flavor `a` plays the role of α.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralData {
    pub xs: Vec<RatFunc>,
    pub ys: Vec<RatFunc>,
    pub a: RatFunc,
}

impl SpectralData {
    pub fn new(xs: Vec<RatFunc>, ys: Vec<RatFunc>, a: RatFunc) -> Result<SpectralData, SixVertexError> {
        if xs.len() != ys.len() {
            return Err(SixVertexError::SizeMismatch(xs.len(), ys.len()));
        }
        Ok(SpectralData { xs, ys, a })
    }

    /// Formal symbols `x1..xn`, `y1..yn` with `a = α`.
    pub fn symbolic_alpha(n: usize) -> SpectralData {
        SpectralData {
            xs: (1..=n).map(|i| RatFunc::sym(&format!("x{i}"))).collect(),
            ys: (1..=n).map(|i| RatFunc::sym(&format!("y{i}"))).collect(),
            a: alpha(),
        }
    }

    /// Formal multiplicative symbols `X1..Xn`, `Y1..Yn` with `a = u = q^{1/2}`.
    pub fn symbolic_qt(n: usize) -> SpectralData {
        SpectralData {
            xs: (1..=n).map(|i| RatFunc::sym(&format!("X{i}"))).collect(),
            ys: (1..=n).map(|i| RatFunc::sym(&format!("Y{i}"))).collect(),
            a: u(),
        }
    }

    pub fn size(&self) -> usize {
        self.xs.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    QT,
    Alpha,
}

/// `[z] = (z − z^{−1})/(a − a^{−1})`.
pub fn bracket_number(z: &RatFunc, a: &RatFunc) -> RatFunc {
    &(z - &z.inv()) / &(a - &a.inv())
}

/// Weight of one matrix: per entry `z` or `z^{−1}` for ±1 and `[az]` or `[z]`
/// for 0 by the parity of the corner sum, `z = x_i/y_j`; in the α flavor ±1
/// weigh 1 and 0 weighs `(x_i−y_j+α)/α` or `(x_i−y_j)/α`.
pub fn asm_weight(asm: &Asm, data: &SpectralData, flavor: Flavor) -> RatFunc {
    let n = asm.size();
    let mut w = RatFunc::one();
    for i in 0..n {
        for j in 0..n {
            let even = asm.corner_sum(i, j) % 2 == 0;
            let (x, y, a) = (&data.xs[i], &data.ys[j], &data.a);
            let f = match flavor {
                Flavor::QT => {
                    let z = x / y;
                    match asm.entry(i, j) {
                        1 => z,
                        -1 => z.inv(),
                        _ if even => bracket_number(&(a * &z), a),
                        _ => bracket_number(&z, a),
                    }
                }
                Flavor::Alpha => match asm.entry(i, j) {
                    0 if even => &(&(x - y) + a) / a,
                    0 => &(x - y) / a,
                    _ => continue,
                },
            };
            w = &w * &f;
        }
    }
    w
}

pub fn asm_sum(data: &SpectralData, flavor: Flavor) -> RatFunc {
    enumerate_asm(data.size())
        .iter()
        .map(|a| asm_weight(a, data, flavor))
        .fold(RatFunc::zero(), |acc, w| &acc + &w)
}

/// Izergin–Korepin matrix entry `(a−a^{−1})² / ((z−z^{−1})(az−(az)^{−1}))`
/// with `z = x/y`.
pub fn ik_entry(x: &RatFunc, y: &RatFunc, a: &RatFunc) -> Result<RatFunc, CoeffError> {
    let z = x / y;
    let az = a * &z;
    let den = &(&z - &z.inv()) * &(&az - &az.inv());
    (a - &a.inv()).pow(2).try_div(&den)
}

/// Izergin–Korepin determinant `det ik_entry(x_i, y_j, a)`.
pub fn ik_determinant(data: &SpectralData) -> Result<RatFunc, SixVertexError> {
    let n = data.size();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(ik_entry(&data.xs[i], &data.ys[j], &data.a).map_err(|_| SixVertexError::Pole(i + 1, j + 1))?);
        }
        rows.push(row);
    }
    Ok(determinant(&rows))
}

/// `D′ = ((t−1)/(q^{1/2}−q^{−1/2}))^n D`, in `u = q^{1/2}`, `v = t^{1/2}`.
pub fn d_prime(data: &SpectralData) -> Result<RatFunc, SixVertexError> {
    Ok(&d_prime_factor().pow(data.size() as i32) * &ik_determinant(data)?)
}

/// `(t−1)/(q^{1/2}−q^{−1/2})`.
pub fn d_prime_factor() -> RatFunc {
    &(&v().pow(2) - &RatFunc::one()) / &(&u() - &u().inv())
}

/// The factor relating `D` to the weighted ASM sum:
/// `Π_{i<j}[x_i/x_j][y_j/y_i] / (Π_i x_i/y_i · Π_{i,j}[x_i/y_j][a x_i/y_j])`.
pub fn ik_prefactor(data: &SpectralData) -> RatFunc {
    let (n, a) = (data.size(), &data.a);
    let mut num = RatFunc::one();
    let mut den = RatFunc::one();
    for i in 0..n {
        den = &den * &(&data.xs[i] / &data.ys[i]);
        for j in 0..n {
            let z = &data.xs[i] / &data.ys[j];
            den = &den * &(&bracket_number(&z, a) * &bracket_number(&(a * &z), a));
            if i < j {
                num = &num * &bracket_number(&(&data.xs[i] / &data.xs[j]), a);
                num = &num * &bracket_number(&(&data.ys[j] / &data.ys[i]), a);
            }
        }
    }
    &num / &den
}

/// Both sides of `D = prefactor · Σ_A w(A)`.
pub fn ik_asm_relation(data: &SpectralData) -> Result<(RatFunc, RatFunc), SixVertexError> {
    let lhs = ik_determinant(data)?;
    let rhs = &ik_prefactor(data) * &asm_sum(data, Flavor::QT);
    Ok((lhs, rhs))
}

/// The Jack-limit form of the generic determinant:
/// `α^{n²} Π_{i<j}(x_i−x_j)(y_j−y_i) / Π_{i,j}(x_i−y_j)(x_i−y_j+α) · Σ_A w_α(A)`.
pub fn asm_determinant_alpha(data: &SpectralData) -> RatFunc {
    let (n, a) = (data.size(), &data.a);
    let mut num = a.pow((n * n) as i32);
    let mut den = RatFunc::one();
    for i in 0..n {
        for j in 0..n {
            let d = &data.xs[i] - &data.ys[j];
            den = &den * &(&d * &(&d + a));
            if i < j {
                num = &num * &(&data.xs[i] - &data.xs[j]);
                num = &num * &(&data.ys[j] - &data.ys[i]);
            }
        }
    }
    &(&num / &den) * &asm_sum(data, Flavor::Alpha)
}

/// The generic-label determinant `det [x_i; y_j]_{(q,t)}` next to `D′` at
/// `x_i ↦ X_i`, `y_j ↦ Y_j`, `a = q^{1/2}`, on formal symbols.
pub fn det_d_prime_symbolic(n: usize) -> Result<(RatFunc, RatFunc), SixVertexError> {
    let data = SpectralData::symbolic_qt(n);
    let rows: Vec<Vec<RatFunc>> = data
        .xs
        .iter()
        .map(|x| data.ys.iter().map(|y| generic_bracket_qt(x, y)).collect())
        .collect();
    Ok((determinant(&rows), d_prime(&data)?))
}

/// The entries `[X_i; Y_j]` next to `(t−1)/(q^{1/2}−q^{−1/2})` times the
/// Izergin–Korepin entries, as `(i, j, bracket, scaled entry)`. Entrywise
/// equality gives `Det = D′` by multilinearity, at any size.
pub fn det_d_prime_entries(n: usize) -> Result<Vec<(usize, usize, RatFunc, RatFunc)>, SixVertexError> {
    let data = SpectralData::symbolic_qt(n);
    let c = d_prime_factor();
    let mut out = Vec::with_capacity(n * n);
    for (i, x) in data.xs.iter().enumerate() {
        for (j, y) in data.ys.iter().enumerate() {
            let e = ik_entry(x, y, &data.a).map_err(|_| SixVertexError::Pole(i + 1, j + 1))?;
            out.push((i + 1, j + 1, generic_bracket_qt(x, y), &c * &e));
        }
    }
    Ok(out)
}

/// Outcome of comparing `Det_{Ω/Λ}` with its ASM expression.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DetAsmReport {
    pub det: RatFunc,
    pub asm_side: RatFunc,
    pub equal: bool,
}

/// `Det_{Ω/Λ}` against `α^{n²} Π(x_i−x_j)(y_j−y_i)/Π(x_i−y_j)(x_i−y_j+α) Σ w_α`
/// for a square strip. Coinciding labels are handled as in the generic
/// limit: x labels are shifted by ε, the coincidence factors are applied and
/// ε is set to 0.
pub fn det_asm_identity(cls: &StripClassification) -> Result<DetAsmReport, SixVertexError> {
    if cls.xlabels.len() != cls.ylabels.len() {
        return Err(SixVertexError::NotSquare);
    }
    let det = det_pieri(cls, Field::Alpha);
    let xs: Vec<RatFunc> = cls
        .xlabels
        .iter()
        .map(|c| &label_value(*c, Field::Alpha) + &eps())
        .collect();
    let ys: Vec<RatFunc> = cls.ylabels.iter().map(|c| label_value(*c, Field::Alpha)).collect();
    let pre = coincidence_prefactor(cls, &xs, &ys);
    let data = SpectralData { xs, ys, a: alpha() };
    let full = &pre * &asm_determinant_alpha(&data);
    let asm_side = full
        .subs(Var::of("eps"), &RatFunc::zero())
        .map_err(|_: CoeffError| SixVertexError::NoLimit)?;
    Ok(DetAsmReport {
        equal: det == asm_side,
        det,
        asm_side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffield::parse;
    use crate::superpartitions::{classify_strip, SuperPartition};

    fn m(rows: &[&[i8]]) -> Asm {
        Asm::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn counts() {
        let c: Vec<usize> = (1..=5).map(|n| enumerate_asm(n).len()).collect();
        assert_eq!(c, vec![1, 2, 7, 42, 429]);
    }

    #[test]
    fn validation() {
        assert!(Asm::new(vec![vec![0, 1], vec![1, 0]]).is_some());
        assert!(Asm::new(vec![vec![1, 1], vec![0, 0]]).is_none());
        assert!(Asm::new(vec![vec![1, -1, 1], vec![0, 1, 0], vec![0, 1, 0]]).is_none());
    }

    #[test]
    fn size_three_weights() {
        let d = SpectralData::symbolic_alpha(3);
        let w = asm_weight(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), &d, Flavor::Alpha);
        let want = parse("(x1-y2)*(x1-y3)*(x2-y1)*(x2-y3)*(x3-y1)*(x3-y2)/a^6").unwrap();
        assert_eq!(w, want);
        let w = asm_weight(&m(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]), &d, Flavor::Alpha);
        let want = parse("(x1-y1+a)*(x1-y3)*(x3-y1)*(x3-y3+a)/a^4").unwrap();
        assert_eq!(w, want);
        let w = asm_weight(&m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]), &d, Flavor::Alpha);
        let want = parse("(x1-y1+a)*(x1-y2+a)*(x2-y2)*(x2-y3+a)*(x3-y1)*(x3-y3+a)/a^6").unwrap();
        assert_eq!(w, want);
    }

    #[test]
    fn worked_sum() {
        let xs = parse_list_of(&["7*a-1", "5*a-3", "4*a-4"]);
        let ys = parse_list_of(&["6*a-2", "3*a-5", "a-7"]);
        let s = asm_sum(&SpectralData::new(xs, ys, alpha()).unwrap(), Flavor::Alpha);
        let want = parse("-(416*a^6+2000*a^5+3484*a^4+2608*a^3+559*a^2-256*a-108)/a^6").unwrap();
        assert_eq!(s, want);
    }

    fn parse_list_of(v: &[&str]) -> Vec<RatFunc> {
        v.iter().map(|s| parse(s).unwrap()).collect()
    }

    #[test]
    fn ik_relation_small() {
        for n in 1..=2 {
            let (l, r) = ik_asm_relation(&SpectralData::symbolic_qt(n)).unwrap();
            assert_eq!(l, r, "n={n}");
        }
    }

    #[test]
    fn det_is_d_prime_entrywise() {
        for (_, _, b, e) in det_d_prime_entries(3).unwrap() {
            assert_eq!(b, e);
        }
    }

    #[test]
    fn det_is_d_prime() {
        for n in 1..=2 {
            let (l, r) = det_d_prime_symbolic(n).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn worked_strip() {
        let lam: SuperPartition = "(6,4,3;5,2,1)".parse().unwrap();
        let om: SuperPartition = "(5,2,0;7,5,4,1)".parse().unwrap();
        let r = det_asm_identity(&classify_strip(&lam, &om).unwrap()).unwrap();
        assert!(r.equal);
    }

    #[test]
    fn pole_reported() {
        let d = SpectralData::new(vec![RatFunc::int(2)], vec![RatFunc::int(2)], u()).unwrap();
        assert_eq!(ik_determinant(&d), Err(SixVertexError::Pole(1, 1)));
    }
}

//! Determinants of matrices over Q(v1,…,vk).

use super::gcd::lcm;
use super::poly::Poly;
use super::ratfunc::RatFunc;

/// Determinant by clearing each row to a common denominator and running
/// fraction-free (Bareiss) elimination on the resulting polynomial matrix.
/// The empty matrix has determinant 1.
pub fn determinant(m: &[Vec<RatFunc>]) -> RatFunc {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return RatFunc::one();
    }
    let mut scale = Poly::one();
    let mut a: Vec<Vec<Poly>> = Vec::with_capacity(n);
    for row in m {
        let l = row
            .iter()
            .filter(|x| !x.is_zero())
            .fold(Poly::one(), |acc, x| lcm(&acc, x.den()));
        let prow = row
            .iter()
            .map(|x| {
                if x.is_zero() {
                    Poly::zero()
                } else {
                    &l.exact_div(x.den()).unwrap() * x.num()
                }
            })
            .collect();
        scale = &scale * &l;
        a.push(prow);
    }
    let d = bareiss(a);
    RatFunc::new(d, scale)
}

/// Fraction-free Gaussian elimination; returns the determinant.
pub fn bareiss(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // Prefer the sparsest available pivot.
            let pivot = (k + 1..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].len());
            match pivot {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Laplace expansion along the first row; exponential, for cross-checks on
/// small matrices.
pub fn determinant_cofactor(m: &[Vec<RatFunc>]) -> RatFunc {
    let n = m.len();
    if n == 0 {
        return RatFunc::one();
    }
    let mut acc = RatFunc::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<RatFunc>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let t = &m[0][j] * &determinant_cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(determinant(&[]).is_one());
        assert!(determinant(&[vec![RatFunc::one()]]).is_one());
        let id: Vec<Vec<RatFunc>> = (0..3)
            .map(|i| (0..3).map(|j| RatFunc::int((i == j) as i64)).collect())
            .collect();
        assert!(determinant(&id).is_one());
    }

    #[test]
    fn needs_pivoting() {
        let m = vec![
            vec![r("0"), r("1"), r("0")],
            vec![r("0"), r("0"), r("1")],
            vec![r("a/((5a+4)(6a+4))"), r("a/((4a+3)(5a+3))"), r("a/((2a+2)(3a+2))")],
        ];
        assert_eq!(determinant(&m), r("a/((5a+4)(6a+4))"));
        assert_eq!(determinant_cofactor(&m), r("a/((5a+4)(6a+4))"));
    }

    #[test]
    fn symbolic_vandermonde() {
        let m: Vec<Vec<RatFunc>> = ["x1", "x2", "x3"]
            .iter()
            .map(|x| (0..3).map(|k| r(x).pow(k)).collect())
            .collect();
        assert_eq!(determinant(&m), r("(x2-x1)*(x3-x1)*(x3-x2)"));
    }
}

//! Ambient algebras for rows, matrices and certificates, and dense matrices
//! over them.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rees::ReesCtx;
use crate::ring::RingCtx;

/// The ring that entries of a row, matrix or certificate live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// `R[x]` with `x` one of `t`, `u`.
    Poly { ring: RingCtx, var: Var },
    /// `R[at, t^2] ⊆ R[t]`.
    Rees(ReesCtx),
}

impl Ambient {
    pub fn poly(ring: RingCtx, var: Var) -> Self {
        Ambient::Poly { ring, var }
    }

    pub fn ring(&self) -> RingCtx {
        match self {
            Ambient::Poly { ring, .. } => *ring,
            Ambient::Rees(ctx) => ctx.ring(),
        }
    }

    pub fn var(&self) -> Var {
        match self {
            Ambient::Poly { var, .. } => *var,
            Ambient::Rees(_) => Var::T,
        }
    }

    /// Krull dimension of the ambient (base dimension + 1).
    pub fn dim(&self) -> usize {
        self.ring().dim() + 1
    }

    /// Dimension of the base ring, the `d` in `r >= d + 2`.
    pub fn base_dim(&self) -> usize {
        self.ring().dim()
    }

    pub fn contains(&self, f: &Poly) -> bool {
        match self {
            Ambient::Poly { ring, var } => f.ring() == *ring && f.var() == *var,
            Ambient::Rees(ctx) => ctx.contains(f),
        }
    }

    pub fn check(&self, f: &Poly) -> Result<()> {
        match self {
            Ambient::Rees(ctx) => ctx.elem(f.clone()).map(|_| ()),
            _ if self.contains(f) => Ok(()),
            _ => Err(Error::RingMismatch(format!("{}[{}] is not {self}", f.ring(), f.var()))),
        }
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.ring(), self.var())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.ring(), self.var())
    }

    pub fn parse_elem(&self, text: &str) -> Result<Poly> {
        let f = Poly::parse(self.ring(), self.var(), text)?;
        self.check(&f)?;
        Ok(f)
    }

    pub fn unit_vector(&self, n: usize, i: usize) -> Vec<Poly> {
        (0..n).map(|k| if k == i { self.one() } else { self.zero() }).collect()
    }

    /// Inverse of a unit of the ambient. Inverses computed in `R[t]` stay in
    /// `A` for every unit of `A`.
    pub fn unit_inverse(&self, f: &Poly) -> Option<Poly> {
        let inv = f.unit_inverse()?;
        self.contains(&inv).then_some(inv)
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Poly { ring, var } => write!(f, "{ring}[{var}]"),
            Ambient::Rees(ctx) => write!(f, "{ctx}"),
        }
    }
}

/// Dot product of two rows.
pub fn dot(a: &[Poly], b: &[Poly]) -> Poly {
    assert_eq!(a.len(), b.len());
    let mut acc = Poly::zero(a[0].ring(), a[0].var());
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

/// Dense square-or-rectangular matrix with polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl Mat {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::LengthMismatch(bad.len(), c));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(amb: &Ambient, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { amb.one() } else { amb.zero() })
            .collect();
        Mat {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.get(i, 0).mul(other.get(0, j));
                for k in 1..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Mat {
            rows: self.rows,
            cols: other.cols,
            entries,
        }
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols).map(|j| dot(v, &self.col(j))).collect()
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// `self * e_ij(lambda)`: column `j` += column `i` * lambda.
    pub fn right_elementary(&mut self, i: usize, j: usize, lambda: &Poly) {
        for r in 0..self.rows {
            let v = self.get(r, j).add(&self.get(r, i).mul(lambda));
            self.set(r, j, v);
        }
    }

    /// `e_ij(lambda) * self`: row `i` += lambda * row `j`.
    pub fn left_elementary(&mut self, i: usize, j: usize, lambda: &Poly) {
        for c in 0..self.cols {
            let v = self.get(i, c).add(&lambda.mul(self.get(j, c)));
            self.set(i, c, v);
        }
    }

    /// Top-left `k x k` block.
    pub fn leading_block(&self, k: usize) -> Mat {
        let rows = (0..k).map(|i| self.row(i)[..k].to_vec()).collect();
        Mat::from_rows(rows).unwrap()
    }

    /// `diag(self, I)` of size `n`.
    pub fn embed(&self, amb: &Ambient, n: usize) -> Mat {
        let mut out = Mat::identity(amb, n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Determinant by cofactor expansion along the first row. Division-free,
    /// so it is valid over any commutative ring; sizes here stay small.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.minor_det(0, &idx)
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> Poly {
        let proto = &self.entries[0];
        if cols.is_empty() {
            return Poly::one(proto.ring(), proto.var());
        }
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = Poly::zero(proto.ring(), proto.var());
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e.mul(&self.minor_det(row + 1, &rest));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    /// Inverse via the adjugate, when the determinant is a unit.
    pub fn inverse(&self, amb: &Ambient) -> Option<Mat> {
        let n = self.rows;
        let det_inv = amb.unit_inverse(&self.det())?;
        if n == 1 {
            return Some(Mat {
                rows: 1,
                cols: 1,
                entries: vec![det_inv],
            });
        }
        let mut out = Mat::identity(amb, n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = (-1)^(i+j) * minor(j, i)
                let rows: Vec<Vec<Poly>> = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| (0..n).filter(|&c| c != i).map(|c| self.get(r, c).clone()).collect())
                    .collect();
                let m = Mat::from_rows(rows).unwrap().det();
                let m = if (i + j) % 2 == 0 { m } else { m.neg() };
                out.set(i, j, m.mul(&det_inv));
            }
        }
        Some(out)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", format_row(&self.row(i)))?;
        }
        Ok(())
    }
}

/// `[a, b, c]`.
pub fn format_row(row: &[Poly]) -> String {
    let parts: Vec<String> = row.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;

    fn amb_z4() -> Ambient {
        let z4 = RingCtx::modular(4).unwrap();
        Ambient::Rees(ReesCtx::new(z4, Ideal::principal(z4, z4.from_i64(2)).unwrap()).unwrap())
    }

    fn m(amb: &Ambient, rows: &[&[&str]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| amb.parse_elem(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_and_inverse() {
        let amb = amb_z4();
        let d = m(&amb, &[&["1 + 2*t", "2"], &["2*t", "1 + 2*t"]]);
        assert!(d.det().is_one());
        let inv = d.inverse(&amb).unwrap();
        assert!(d.mul(&inv).is_identity());
        let singular = m(&amb, &[&["2", "0"], &["0", "1"]]);
        assert!(singular.inverse(&amb).is_none());
    }

    #[test]
    fn elementary_actions() {
        let amb = Ambient::poly(RingCtx::prime_field(2).unwrap(), Var::T);
        let mut x = Mat::identity(&amb, 2);
        x.right_elementary(0, 1, &amb.parse_elem("t").unwrap());
        assert_eq!(x.get(0, 1).to_string(), "t");
        let v = x.left_apply(&[amb.parse_elem("1").unwrap(), amb.zero()]);
        assert_eq!(format_row(&v), "[1, t]");
        let mut y = Mat::identity(&amb, 2);
        y.left_elementary(0, 1, &amb.parse_elem("t").unwrap());
        assert_eq!(x, y);
    }

    #[test]
    fn rees_ambient_membership() {
        let amb = amb_z4();
        assert!(amb.parse_elem("1 + 2*t").is_ok());
        assert!(amb.parse_elem("t").is_err());
        assert_eq!(amb.to_string(), "rees{ring=Zn:4,a=ideal[2]}");
        assert_eq!(amb.base_dim(), 0);
        assert_eq!(amb.dim(), 1);
    }
}

//! Finite-dimensional unital algebras by structure constants.

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    labels: Vec<String>,
    /// `mul[i][j] = e_i e_j`.
    mul: Vec<Vec<Vector>>,
    unit: Vector,
    /// Degree of each basis element and the truncation degree, when the
    /// algebra is a quotient of a graded one by everything above degree N.
    grading: Option<(Vec<usize>, usize)>,
}

impl FinAlgebra {
    pub fn new(labels: Vec<String>, mul: Vec<Vec<Vector>>, unit: Vector) -> Result<Self> {
        let d = labels.len();
        if mul.len() != d || mul.iter().any(|r| r.len() != d || r.iter().any(|v| v.dim() != d)) || unit.dim() != d {
            return Err(Error::DimensionMismatch(format!("structure constants do not match {d} basis labels")));
        }
        Ok(FinAlgebra { labels, mul, unit, grading: None })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self::new(vec!["1".into()], vec![vec![Vector::basis(1, 0)]], Vector::basis(1, 0)).unwrap()
    }

    pub fn zero_algebra() -> Self {
        FinAlgebra { labels: vec![], mul: vec![], unit: Vector::zeros(0), grading: None }
    }

    pub fn with_grading(mut self, degrees: Vec<usize>, truncation: usize) -> Self {
        assert_eq!(degrees.len(), self.dim());
        self.grading = Some((degrees, truncation));
        self
    }

    pub fn relabel(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn truncation(&self) -> Option<usize> {
        self.grading.as_ref().map(|g| g.1)
    }

    pub fn degrees(&self) -> Option<&[usize]> {
        self.grading.as_ref().map(|g| g.0.as_slice())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        &self.mul[i][j]
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let d = self.dim();
        let mut parts = Vec::with_capacity(a.nnz() * b.nnz());
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                parts.push((x * y, self.mul[i][j].clone()));
            }
        }
        Vector::sum_of(d, parts)
    }

    pub fn mul_all(&self, factors: &[&Vector]) -> Vector {
        factors.iter().fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    pub fn is_idempotent(&self, e: &Vector) -> bool {
        self.mul(e, e) == *e
    }

    pub fn commutes(&self, a: &Vector, b: &Vector) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, e: &Vector) -> bool {
        (0..self.dim()).all(|i| self.commutes(e, &self.basis(i)))
    }

    /// First basis triple violating associativity.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = &self.mul[i][j];
                for k in 0..d {
                    let left = Vector::sum_of(d, ij.iter().map(|(l, a)| (a.clone(), self.mul[l][k].clone())));
                    let jk = &self.mul[j][k];
                    let right = Vector::sum_of(d, jk.iter().map(|(l, a)| (a.clone(), self.mul[i][l].clone())));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis element on which the unit fails to act as identity.
    pub fn unit_witness(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let e = self.basis(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }

    /// The subalgebra spanned by `space` with the given unit, in the
    /// coordinates of the canonical basis of `space`. Also returns the
    /// inclusion map.
    pub fn restrict(&self, space: &Subspace, unit: &Vector, labels: Vec<String>) -> Result<(FinAlgebra, Mat)> {
        let basis = space.basis();
        let k = basis.len();
        let coords = |v: &Vector| -> Result<Vector> {
            space
                .coords(v)
                .map(Vector::from_dense)
                .ok_or_else(|| Error::PreconditionViolated("subspace is not closed under multiplication".into()))
        };
        let mut mul = Vec::with_capacity(k);
        for a in basis {
            let row = basis.iter().map(|b| coords(&self.mul(a, b))).collect::<Result<Vec<_>>>()?;
            mul.push(row);
        }
        let alg = FinAlgebra::new(labels, mul, coords(unit)?)?;
        Ok((alg, Mat::from_columns(self.dim(), basis.to_vec())))
    }

    /// Block-diagonal direct sum; returns the offsets of the summands.
    pub fn direct_sum(parts: &[FinAlgebra]) -> (FinAlgebra, Vec<usize>) {
        let d: usize = parts.iter().map(|p| p.dim()).sum();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut labels = Vec::with_capacity(d);
        let mut mul = vec![vec![Vector::zeros(d); d]; d];
        let mut unit = Vector::zeros(d);
        let mut off = 0;
        for p in parts {
            offsets.push(off);
            labels.extend(p.labels.iter().cloned());
            for i in 0..p.dim() {
                for j in 0..p.dim() {
                    mul[off + i][off + j] = p.mul[i][j].embed(d, off);
                }
            }
            unit = unit.add(&p.unit.embed(d, off));
            off += p.dim();
        }
        (FinAlgebra { labels, mul, unit, grading: None }, offsets)
    }

    /// Whether `f: self -> target` is multiplicative on all basis pairs;
    /// returns the first failing pair.
    pub fn multiplicativity_witness(&self, f: &Mat, target: &FinAlgebra) -> Option<(usize, usize)> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = f.apply(&self.mul[i][j]).expect("map matches domain");
                let rhs = target.mul(f.col(i), f.col(j));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn element_label(&self, v: &Vector) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = v
            .iter()
            .map(|(i, a)| if a.is_one() { self.labels[i].clone() } else { format!("({a}){}", self.labels[i]) })
            .collect();
        parts.join(" + ")
    }
}

/// `K[t]/(p)` for monic `p` of positive degree, or `K[t]/(t^(n+1))` when
/// `p` is `None` (the polynomial ring truncated above degree `n`).
pub fn univariate_quotient(p: Option<&[Scalar]>, n: usize, var: &str) -> FinAlgebra {
    let d = match p {
        Some(p) => p.len() - 1,
        None => n + 1,
    };
    let label = |k: usize| match k {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    // t^k reduced modulo p (or dropped beyond degree n)
    let mut powers: Vec<Vector> = Vec::with_capacity(2 * d);
    for k in 0..2 * d.max(1) {
        if k < d {
            powers.push(Vector::basis(d, k));
            continue;
        }
        match p {
            None => powers.push(Vector::zeros(d)),
            Some(p) => {
                // t^k = t * t^(k-1), and t^d = -(p_0 + ... + p_(d-1) t^(d-1))
                let prev = powers[k - 1].clone();
                let mut out = Vector::zeros(d);
                for (i, a) in prev.iter() {
                    if i + 1 < d {
                        out = out.axpy(a, &Vector::basis(d, i + 1));
                    } else {
                        let tail = Vector::from_dense(p[..d].iter().map(|c| -c).collect());
                        out = out.axpy(a, &tail);
                    }
                }
                powers.push(out);
            }
        }
    }
    let mul = (0..d).map(|i| (0..d).map(|j| powers[i + j].clone()).collect()).collect();
    let alg = FinAlgebra::new((0..d).map(label).collect(), mul, Vector::basis(d, 0)).expect("consistent dims");
    match p {
        None => alg.with_grading((0..d).collect(), n),
        Some(_) => alg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers() {
        let a = univariate_quotient(Some(&[Scalar::zero(), Scalar::zero(), Scalar::one()]), 0, "t");
        assert_eq!(a.dim(), 2);
        assert!(a.mul_basis(1, 1).is_zero());
        assert_eq!(a.associativity_witness(), None);
        assert_eq!(a.unit_witness(), None);
    }

    #[test]
    fn t_squared_minus_one() {
        let a = univariate_quotient(Some(&[Scalar::one(), Scalar::zero(), Scalar::one()]), 0, "t");
        assert_eq!(*a.mul_basis(1, 1), Vector::basis(2, 0).neg());
    }

    #[test]
    fn truncated_polynomials() {
        let a = univariate_quotient(None, 3, "t");
        assert_eq!(a.dim(), 4);
        assert_eq!(*a.mul_basis(1, 2), Vector::basis(4, 3));
        assert!(a.mul_basis(2, 2).is_zero());
        assert_eq!(a.truncation(), Some(3));
        assert_eq!(a.associativity_witness(), None);
    }

    #[test]
    fn direct_sum_units() {
        let k = FinAlgebra::ground();
        let (s, off) = FinAlgebra::direct_sum(&[k.clone(), k]);
        assert_eq!(off, vec![0, 1]);
        assert_eq!(s.unit().nnz(), 2);
        assert!(s.mul_basis(0, 1).is_zero());
    }
}

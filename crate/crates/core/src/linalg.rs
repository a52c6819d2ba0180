//! Sparse vectors, column-stored matrices and canonical subspaces.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

/// A sparse vector: sorted `(index, coefficient)` pairs with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    dim: usize,
    e: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector { dim, e: Vec::new() }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range {dim}");
        Vector { dim, e: vec![(i, Scalar::one())] }
    }

    pub fn from_dense(v: Vec<Scalar>) -> Self {
        let dim = v.len();
        Vector { dim, e: v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect() }
    }

    /// Duplicated indices are summed.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v: Vec<(usize, Scalar)> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut e: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
        for (i, x) in v {
            assert!(i < dim, "index {i} out of range {dim}");
            match e.last_mut() {
                Some((j, y)) if *j == i => *y += &x,
                _ => e.push((i, x)),
            }
        }
        e.retain(|(_, x)| !x.is_zero());
        Vector { dim, e }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.e.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.e.iter().map(|(i, x)| (*i, x))
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.e.binary_search_by_key(&i, |p| p.0) {
            Ok(k) => self.e[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn first(&self) -> Option<(usize, &Scalar)> {
        self.e.first().map(|(i, x)| (*i, x))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        for (i, x) in &self.e {
            v[*i] = x.clone();
        }
        v
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        if a.is_zero() {
            return Self::zeros(self.dim);
        }
        Vector { dim: self.dim, e: self.e.iter().map(|(i, x)| (*i, x * a)).collect() }
    }

    /// `self + a * o`.
    pub fn axpy(&self, a: &Scalar, o: &Vector) -> Self {
        assert_eq!(self.dim, o.dim, "vector dimension mismatch");
        if a.is_zero() || o.is_zero() {
            return self.clone();
        }
        let mut e = Vec::with_capacity(self.e.len() + o.e.len());
        let (mut p, mut q) = (0, 0);
        while p < self.e.len() || q < o.e.len() {
            let take_left = q >= o.e.len() || (p < self.e.len() && self.e[p].0 < o.e[q].0);
            let take_right = p >= self.e.len() || (q < o.e.len() && o.e[q].0 < self.e[p].0);
            if take_left {
                e.push(self.e[p].clone());
                p += 1;
            } else if take_right {
                e.push((o.e[q].0, a * &o.e[q].1));
                q += 1;
            } else {
                let s = &self.e[p].1 + &(a * &o.e[q].1);
                if !s.is_zero() {
                    e.push((self.e[p].0, s));
                }
                p += 1;
                q += 1;
            }
        }
        Vector { dim: self.dim, e }
    }

    pub fn add(&self, o: &Vector) -> Self {
        self.axpy(&Scalar::one(), o)
    }

    pub fn sub(&self, o: &Vector) -> Self {
        self.axpy(&Scalar::from_int(-1), o)
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    /// Reinterpret in a larger ambient space, shifting indices by `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> Self {
        assert!(offset + self.dim <= dim);
        Vector { dim, e: self.e.iter().map(|(i, x)| (i + offset, x.clone())).collect() }
    }

    /// Accumulate many scaled vectors at once.
    pub fn sum_of(dim: usize, parts: impl IntoIterator<Item = (Scalar, Vector)>) -> Self {
        let mut pairs = Vec::new();
        for (a, v) in parts {
            if a.is_zero() {
                continue;
            }
            assert_eq!(v.dim, dim, "vector dimension mismatch");
            pairs.extend(v.e.into_iter().map(|(i, x)| (i, &a * &x)));
        }
        Vector::from_pairs(dim, pairs)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.e.iter().map(|(i, x)| format!("({x})e{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A linear map stored by the images of the domain basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: Vec<Vector>,
}

impl Mat {
    pub fn from_columns(rows: usize, cols: Vec<Vector>) -> Self {
        assert!(cols.iter().all(|c| c.dim() == rows), "column dimension mismatch");
        Mat { rows, cols }
    }

    /// Dense row-major input, `m[i][j]` = row i, column j.
    pub fn from_rows(m: &[Vec<Scalar>]) -> Self {
        let rows = m.len();
        let ncols = m.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| Vector::from_dense(m.iter().map(|r| r[j].clone()).collect()))
            .collect();
        Mat { rows, cols }
    }

    pub fn from_int_rows(m: &[Vec<i64>]) -> Self {
        let m: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        Self::from_rows(&m)
    }

    pub fn identity(n: usize) -> Self {
        Mat { rows: n, cols: (0..n).map(|i| Vector::basis(n, i)).collect() }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols: vec![Vector::zeros(rows); cols] }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.ncols() {
            return Err(Error::DimensionMismatch(format!("map has {} columns, vector has dim {}", self.ncols(), v.dim())));
        }
        Ok(Vector::sum_of(self.rows, v.iter().map(|(j, a)| (a.clone(), self.cols[j].clone()))))
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Mat) -> Result<Mat> {
        let cols = o.cols.iter().map(|c| self.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(Mat { rows: self.rows, cols })
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.ncols()), (o.rows, o.ncols()));
        Mat { rows: self.rows, cols: self.cols.iter().zip(&o.cols).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.rows, self.cols.iter().cloned())
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    /// `{v : M v = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let n = self.ncols();
        let total = self.rows + n;
        let mut ech = Echelon::new(total);
        for (j, c) in self.cols.iter().enumerate() {
            let mut w = c.embed(total, 0);
            w = w.add(&Vector::basis(total, self.rows + j));
            ech.insert(w);
        }
        let kern = ech
            .rows
            .iter()
            .filter(|r| r.first().is_some_and(|(p, _)| p >= self.rows))
            .map(|r| Vector::from_pairs(n, r.iter().map(|(i, x)| (i - self.rows, x.clone()))));
        Subspace::from_spanning(n, kern)
    }

    /// `{v : M v ∈ S}`, the kernel of `q ∘ M` with `q` the projection modulo `S`.
    pub fn preimage(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.rows {
            return Err(Error::DimensionMismatch(format!("subspace lives in dim {}, codomain is dim {}", s.ambient(), self.rows)));
        }
        let reduced = self.cols.iter().map(|c| s.reduce(c)).collect();
        Ok(Mat { rows: self.rows, cols: reduced }.kernel())
    }
}

/// Incremental Gauss-Jordan elimination keeping rows fully reduced.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<Vector>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for r in &self.rows {
            let (p, _) = r.first().expect("echelon rows are nonzero");
            let c = v.get(p);
            if !c.is_zero() {
                v = v.axpy(&-c, r);
            }
        }
        v
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.dim(), self.ambient, "echelon ambient mismatch");
        let v = self.reduce(&v);
        let Some((p, lead)) = v.first() else { return false };
        let v = v.scale(&lead.inv().expect("nonzero lead"));
        for r in self.rows.iter_mut() {
            let c = r.get(p);
            if !c.is_zero() {
                *r = r.axpy(&-c, &v);
            }
        }
        let pos = self.rows.partition_point(|r| r.first().unwrap().0 < p);
        self.rows.insert(pos, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let pivots = self.rows.iter().map(|r| r.first().unwrap().0).collect();
        Subspace { ambient: self.ambient, rows: self.rows, pivots }
    }
}

/// A subspace stored by its reduced row echelon basis; equal subspaces have
/// identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(ambient: usize, vecs: impl IntoIterator<Item = Vector>) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vecs {
            e.insert(v);
        }
        e.into_subspace()
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_spanning(ambient, (0..ambient).map(|i| Vector::basis(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` modulo the subspace (zero iff `v` is inside).
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(p);
            if !c.is_zero() {
                v = v.axpy(&-c, r);
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &Vector) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let back = Vector::sum_of(self.ambient, c.iter().cloned().zip(self.rows.iter().cloned()));
        (back == *v).then_some(c)
    }

    pub fn is_subspace_of(&self, o: &Subspace) -> bool {
        self.rows.iter().all(|r| o.contains(r))
    }

    fn check_ambient(&self, o: &Subspace) -> Result<()> {
        if self.ambient != o.ambient {
            return Err(Error::DimensionMismatch(format!("ambient {} vs {}", self.ambient, o.ambient)));
        }
        Ok(())
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        self.check_ambient(o)?;
        Ok(Self::from_spanning(self.ambient, self.rows.iter().chain(&o.rows).cloned()))
    }

    /// Intersection via the kernel of `(a, b) ↦ a - b` on coordinates.
    pub fn intersect(&self, o: &Subspace) -> Result<Subspace> {
        self.check_ambient(o)?;
        let cols: Vec<Vector> = self.rows.iter().cloned().chain(o.rows.iter().map(|r| r.neg())).collect();
        let m = Mat::from_columns(self.ambient, cols);
        let k = m.kernel();
        let d = self.dim();
        let vecs = k.basis().iter().map(|kv| {
            Vector::sum_of(self.ambient, kv.iter().filter(|(i, _)| *i < d).map(|(i, a)| (a.clone(), self.rows[i].clone())))
        });
        Ok(Self::from_spanning(self.ambient, vecs.collect::<Vec<_>>()))
    }
}

/// A fixed, not necessarily echelon, basis of a subspace with fast
/// coordinate extraction.
#[derive(Clone, Debug)]
pub struct Basis {
    ambient: usize,
    vectors: Vec<Vector>,
    // rows [b_j | e_j], reduced
    ech: Echelon,
}

impl Basis {
    /// Fails when the vectors are linearly dependent.
    pub fn new(ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        let k = vectors.len();
        let mut ech = Echelon::new(ambient + k);
        for (j, b) in vectors.iter().enumerate() {
            let w = b.embed(ambient + k, 0).add(&Vector::basis(ambient + k, ambient + j));
            ech.insert(w);
            if ech.rows.iter().any(|r| r.first().is_some_and(|(p, _)| p >= ambient)) {
                return Err(Error::DimensionMismatch(format!("basis vector {j} is linearly dependent on earlier ones")));
            }
        }
        Ok(Basis { ambient, vectors, ech })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn span(&self) -> Subspace {
        Subspace::from_spanning(self.ambient, self.vectors.iter().cloned())
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &Vector) -> Option<Vector> {
        let k = self.vectors.len();
        let r = self.ech.reduce(&v.embed(self.ambient + k, 0));
        if r.iter().any(|(i, _)| i < self.ambient) {
            return None;
        }
        Some(Vector::from_pairs(k, r.iter().map(|(i, x)| (i - self.ambient, -x))))
    }
}

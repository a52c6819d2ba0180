//! The convolution algebra `Hom(H, A)`, convolution idempotents, and the
//! coradical comparison theorem as an executable check.

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Mat, Subspace, Vector};
use serde::Serialize;

fn check_dims(f: &Mat, h: &HopfAlgebra, a: &FinAlgebra) -> Result<()> {
    if f.ncols() != h.dim() || f.nrows() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            f.nrows(),
            f.ncols(),
            a.dim(),
            h.dim()
        )));
    }
    Ok(())
}

/// `(f * g)(c) = f(c_1) g(c_2)`.
pub fn convolve(f: &Mat, g: &Mat, h: &HopfAlgebra, a: &FinAlgebra) -> Result<Mat> {
    check_dims(f, h, a)?;
    check_dims(g, h, a)?;
    let cols = (0..h.dim())
        .map(|i| {
            Vector::sum_of(a.dim(), h.sweedler(i).into_iter().map(|(c, l, r)| (c, a.mul(f.col(l), g.col(r)))))
        })
        .collect();
    Ok(Mat::from_columns(a.dim(), cols))
}

/// `u_A ∘ ε`, the unit of convolution.
pub fn convolution_unit(h: &HopfAlgebra, a: &FinAlgebra) -> Mat {
    Mat::from_columns(a.dim(), (0..h.dim()).map(|i| a.unit().scale(h.counit_basis(i))).collect())
}

pub fn is_convolution_idempotent(f: &Mat, h: &HopfAlgebra, a: &FinAlgebra) -> bool {
    convolve(f, f, h, a).map(|ff| ff == *f).unwrap_or(false)
}

/// Checks that `f` vanishes on `V ∧ W` when `V, W ⊆ ker f`.
pub fn wedge_vanishing_check(f: &Mat, v: &Subspace, w: &Subspace, h: &HopfAlgebra, a: &FinAlgebra) -> Result<bool> {
    check_dims(f, h, a)?;
    let ker = f.kernel();
    if !v.is_subspace_of(&ker) || !w.is_subspace_of(&ker) {
        return Err(Error::PreconditionViolated("V and W must lie in ker f".into()));
    }
    let vw = h.wedge(v, w)?;
    Ok(vw.basis().iter().all(|b| f.apply(b).map(|x| x.is_zero()).unwrap_or(false)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum Verdict {
    /// `f = g` on every basis element.
    Equal,
    HypothesisFailed(String),
    /// The hypotheses hold but the maps differ; only an implementation bug
    /// can produce this.
    Counterexample(String),
}

/// For convolution idempotents with `f*g = g*f = g` agreeing on the
/// coradical, decides whether `f = g` on the whole of `H`.
pub fn coradical_agreement_implies_equal(f: &Mat, g: &Mat, h: &HopfAlgebra, a: &FinAlgebra) -> Result<Verdict> {
    if !is_convolution_idempotent(f, h, a) {
        return Ok(Verdict::HypothesisFailed("f is not a convolution idempotent".into()));
    }
    if !is_convolution_idempotent(g, h, a) {
        return Ok(Verdict::HypothesisFailed("g is not a convolution idempotent".into()));
    }
    if convolve(f, g, h, a)? != *g || convolve(g, f, h, a)? != *g {
        return Ok(Verdict::HypothesisFailed("f*g = g*f = g fails".into()));
    }
    for b in h.coradical().basis() {
        if f.apply(b)? != g.apply(b)? {
            return Ok(Verdict::HypothesisFailed("coradical disagreement".into()));
        }
    }
    for i in 0..h.dim() {
        if f.col(i) != g.col(i) {
            return Ok(Verdict::Counterexample(format!("f and g differ at {}", h.label(i))));
        }
    }
    Ok(Verdict::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::Scalar;

    #[test]
    fn unit_and_group_square() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        let a = h.algebra().clone();
        let u = convolution_unit(&h, &a);
        let id = Mat::identity(2);
        assert_eq!(convolve(&id, &u, &h, &a).unwrap(), id);
        let sq = convolve(&id, &id, &h, &a).unwrap();
        assert_eq!(*sq.col(1), Vector::basis(2, 0));
        assert!(is_convolution_idempotent(&u, &h, &a));
        let two = Mat::from_columns(2, u.columns().iter().map(|c| c.scale(&Scalar::from_int(2))).collect());
        assert!(!is_convolution_idempotent(&two, &h, &a));
    }

    #[test]
    fn wedge_vanishing_on_counit() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        let k = FinAlgebra::ground();
        let u = convolution_unit(&h, &k);
        let v = Subspace::from_spanning(2, [Vector::basis(2, 1).sub(&Vector::basis(2, 0))]);
        assert!(wedge_vanishing_check(&u, &v, &v, &h, &k).unwrap());
        let z = Subspace::zero(2);
        assert!(wedge_vanishing_check(&u, &z, &z, &h, &k).unwrap());
        let bad = Subspace::full(2);
        assert!(wedge_vanishing_check(&u, &bad, &z, &h, &k).is_err());
    }

    #[test]
    fn verdicts() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        let k = FinAlgebra::ground();
        let u = convolution_unit(&h, &k);
        assert_eq!(coradical_agreement_implies_equal(&u, &u, &h, &k).unwrap(), Verdict::Equal);
        // e(1) = 1, e(g) = 0 is idempotent, commutes with u, but differs on the coradical
        let e = Mat::from_columns(1, vec![Vector::basis(1, 0), Vector::zeros(1)]);
        assert!(is_convolution_idempotent(&e, &h, &k));
        assert_eq!(
            coradical_agreement_implies_equal(&u, &e, &h, &k).unwrap(),
            Verdict::HypothesisFailed("coradical disagreement".into())
        );
    }
}

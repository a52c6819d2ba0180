//! The partial smash product `A # H`: the span of `a (h_1 · 1_A) ⊗ h_2`
//! inside `A ⊗ H`, with multiplication `(a ⊗ h)(b ⊗ k) = a (h_1 · b) ⊗ h_2 k`.

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{tensor, AxiomCheck};
use crate::linalg::{Basis, Mat, Subspace, Vector};
use crate::partial_action::PartialAction;

#[derive(Clone, Debug)]
pub struct SmashProduct {
    pa: PartialAction,
    basis: Basis,
    alg: FinAlgebra,
}

/// Operations on `A ⊗ H` (index `a * dim H + h`) that do not need a carrier.
pub struct TensorOps<'a> {
    pub pa: &'a PartialAction,
}

impl TensorOps<'_> {
    fn dh(&self) -> usize {
        self.pa.hopf().dim()
    }

    pub fn dim(&self) -> usize {
        self.pa.algebra().dim() * self.dh()
    }

    /// `a # h = a (h_1 · 1) ⊗ h_2`.
    pub fn smash(&self, a: &Vector, h: &Vector) -> Vector {
        let hopf = self.pa.hopf();
        let alg = self.pa.algebra();
        let mut parts = Vec::new();
        for (i, x) in h.iter() {
            for (c, l, r) in hopf.sweedler(i) {
                let left = alg.mul(a, &self.pa.unit_image(l));
                parts.push((x * &c, tensor(&left, &hopf.basis(r))));
            }
        }
        Vector::sum_of(self.dim(), parts)
    }

    /// The projection `a ⊗ h ↦ a # h` extended linearly.
    pub fn project(&self, v: &Vector) -> Vector {
        let (da, dh) = (self.pa.algebra().dim(), self.dh());
        Vector::sum_of(
            self.dim(),
            v.iter().map(|(p, x)| (x.clone(), self.smash(&Vector::basis(da, p / dh), &Vector::basis(dh, p % dh)))),
        )
    }

    /// Smash multiplication of two elements of `A ⊗ H`.
    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let hopf = self.pa.hopf();
        let alg = self.pa.algebra();
        let dh = self.dh();
        let mut parts = Vec::new();
        for (p, x) in u.iter() {
            let (a, h) = (p / dh, p % dh);
            let sw = hopf.sweedler(h);
            for (q, y) in v.iter() {
                let (b, k) = (q / dh, q % dh);
                let xy = x * y;
                for (c, l, r) in &sw {
                    let left = alg.mul(&alg.basis(a), self.pa.act_basis(*l, b));
                    if left.is_zero() {
                        continue;
                    }
                    parts.push((&xy * c, tensor(&left, hopf.algebra().mul_basis(*r, k))));
                }
            }
        }
        Vector::sum_of(self.dim(), parts)
    }
}

impl SmashProduct {
    /// Carrier basis in canonical echelon form, labelled by pivot terms.
    pub fn build(pa: &PartialAction) -> Result<Self> {
        let ops = TensorOps { pa };
        let (da, dh) = (pa.algebra().dim(), pa.hopf().dim());
        let carrier = Subspace::from_spanning(
            ops.dim(),
            (0..da).flat_map(|a| (0..dh).map(move |h| (a, h))).map(|(a, h)| ops.smash(&Vector::basis(da, a), &Vector::basis(dh, h))),
        );
        let labels = carrier
            .pivots()
            .iter()
            .map(|&p| format!("{}#{}", pa.algebra().label(p / dh), pa.hopf().label(p % dh)))
            .collect();
        Self::build_with_basis(pa, carrier.basis().to_vec(), labels)
    }

    /// Uses the given vectors of `A ⊗ H` as the basis; they must be a basis
    /// of the carrier.
    pub fn build_with_basis(pa: &PartialAction, vectors: Vec<Vector>, labels: Vec<String>) -> Result<Self> {
        let ops = TensorOps { pa };
        let basis = Basis::new(ops.dim(), vectors)?;
        let (da, dh) = (pa.algebra().dim(), pa.hopf().dim());
        // the chosen vectors must span every a # h
        for a in 0..da {
            for h in 0..dh {
                if basis.coords(&ops.smash(&Vector::basis(da, a), &Vector::basis(dh, h))).is_none() {
                    return Err(Error::PreconditionViolated(format!(
                        "{}#{} is outside the span of the chosen basis",
                        pa.algebra().label(a),
                        pa.hopf().label(h)
                    )));
                }
            }
        }
        if basis.vectors().iter().any(|v| ops.project(v) != *v) {
            return Err(Error::PreconditionViolated("chosen basis is not inside the carrier".into()));
        }
        let k = basis.len();
        let mut mul = Vec::with_capacity(k);
        for u in basis.vectors() {
            let row = basis
                .vectors()
                .iter()
                .map(|v| {
                    basis
                        .coords(&ops.mul(u, v))
                        .ok_or_else(|| Error::PreconditionViolated("carrier is not closed under multiplication".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            mul.push(row);
        }
        let unit = ops.smash(pa.algebra().unit(), pa.hopf().unit());
        let unit = basis.coords(&unit).expect("1 # 1 lies in the carrier");
        let alg = FinAlgebra::new(labels, mul, unit)?;
        Ok(SmashProduct { pa: pa.clone(), basis, alg })
    }

    pub fn action(&self) -> &PartialAction {
        &self.pa
    }

    pub fn ops(&self) -> TensorOps<'_> {
        TensorOps { pa: &self.pa }
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// Coordinates of an element of `A ⊗ H` lying in the carrier.
    pub fn coords(&self, v: &Vector) -> Option<Vector> {
        self.basis.coords(v)
    }

    /// The element of `A ⊗ H` with the given coordinates.
    pub fn expand(&self, c: &Vector) -> Vector {
        Vector::sum_of(self.basis.ambient(), c.iter().map(|(i, x)| (x.clone(), self.basis.vectors()[i].clone())))
    }

    /// `a # h` in carrier coordinates.
    pub fn smash(&self, a: &Vector, h: &Vector) -> Vector {
        self.coords(&self.ops().smash(a, h)).expect("a # h lies in the carrier")
    }

    /// `η(h) = 1_A # h` for a basis element.
    pub fn eta(&self, i: usize) -> Vector {
        self.smash(self.pa.algebra().unit(), &self.pa.hopf().basis(i))
    }

    pub fn eta_map(&self) -> Mat {
        Mat::from_columns(self.dim(), (0..self.pa.hopf().dim()).map(|i| self.eta(i)).collect())
    }

    /// Projection idempotence, unit and associativity.
    pub fn check(&self) -> Vec<AxiomCheck> {
        let ops = self.ops();
        let (da, dh) = (self.pa.algebra().dim(), self.pa.hopf().dim());
        let mut out = Vec::new();
        let mut w = None;
        'proj: for a in 0..da {
            for h in 0..dh {
                let p = ops.smash(&Vector::basis(da, a), &Vector::basis(dh, h));
                if ops.project(&p) != p {
                    w = Some(format!("{}#{}", self.pa.algebra().label(a), self.pa.hopf().label(h)));
                    break 'proj;
                }
            }
        }
        out.push(AxiomCheck::new("projection idempotent", w));
        out.push(AxiomCheck::new("unit", self.alg.unit_witness().map(|i| self.alg.label(i).to_string())));
        let w = self.alg.associativity_witness().map(|(i, j, k)| {
            format!("({}, {}, {})", self.alg.label(i), self.alg.label(j), self.alg.label(k))
        });
        out.push(AxiomCheck::new("associativity", w));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{all_passed, HopfAlgebra};

    #[test]
    fn trivial_action_gives_tensor_product() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        let a = h.algebra().clone();
        let pa = PartialAction::trivial(h, a);
        let sp = SmashProduct::build(&pa).unwrap();
        assert_eq!(sp.dim(), 4);
        assert!(all_passed(&sp.check()));
        let eta = sp.eta_map();
        assert_eq!(pa.hopf().algebra().multiplicativity_witness(&eta, sp.algebra()), None);
    }

    #[test]
    fn z2_on_k() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        let pa = PartialAction::from_fn(h, FinAlgebra::ground(), |i, _| {
            if i == 0 {
                Vector::basis(1, 0)
            } else {
                Vector::zeros(1)
            }
        })
        .unwrap();
        let sp = SmashProduct::build(&pa).unwrap();
        assert_eq!(sp.dim(), 1);
        assert!(sp.eta(1).is_zero());
        assert_eq!(sp.eta(0), *sp.algebra().unit());
        assert!(all_passed(&sp.check()));
    }
}

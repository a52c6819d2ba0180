//! `K_par G` on the basis `P_X[g]`, `g ∈ X`.

use crate::algebra::FinAlgebra;
use crate::error::Result;
use crate::group::{p1_subsets, FiniteGroup, GroupSubset};
use crate::groupoid::Groupoid;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Mat, Vector};
use crate::Scalar;

#[derive(Clone, Debug)]
pub struct Kpar {
    group: FiniteGroup,
    basis: Vec<(GroupSubset, usize)>,
    alg: FinAlgebra,
}

pub fn kpar_group(g: &FiniteGroup) -> Result<Kpar> {
    let subsets = p1_subsets(g)?;
    let basis: Vec<(GroupSubset, usize)> = subsets.iter().flat_map(|&x| x.iter().map(move |a| (x, a))).collect();
    let d = basis.len();
    let index = |x: GroupSubset, a: usize| basis.iter().position(|&b| b == (x, a));
    let mut mul = vec![vec![Vector::zeros(d); d]; d];
    for (i, &(x, a)) in basis.iter().enumerate() {
        for (j, &(y, b)) in basis.iter().enumerate() {
            // P_X[a] P_Y[b] = P_X[ab] when X = aY
            if g.left_translate(a, y) == x {
                mul[i][j] = Vector::basis(d, index(x, g.mul(a, b)).expect("ab lies in X"));
            }
        }
    }
    let unit = Vector::from_pairs(d, subsets.iter().map(|&x| (index(x, 0).unwrap(), Scalar::one())));
    let labels = basis
        .iter()
        .map(|&(x, a)| {
            let p = format!("P_{}", g.format_subset(x));
            if a == 0 {
                p
            } else {
                format!("{p}[{}]", g.label(a))
            }
        })
        .collect();
    let alg = FinAlgebra::new(labels, mul, unit)?;
    Ok(Kpar { group: g.clone(), basis, alg })
}

impl Kpar {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn basis(&self) -> &[(GroupSubset, usize)] {
        &self.basis
    }

    pub fn index_of(&self, x: GroupSubset, a: usize) -> Option<usize> {
        self.basis.iter().position(|&b| b == (x, a))
    }

    pub fn hopf(&self) -> HopfAlgebra {
        HopfAlgebra::group_algebra(&self.group)
    }

    /// `[g] = Σ_{X ∋ g} P_X[g]` as a map `K G -> K_par G`.
    pub fn bracket(&self) -> Mat {
        let d = self.dim();
        let cols = (0..self.group.order())
            .map(|a| {
                Vector::from_pairs(
                    d,
                    self.basis.iter().enumerate().filter(|(_, b)| b.1 == a).map(|(i, _)| (i, Scalar::one())),
                )
            })
            .collect();
        Mat::from_columns(d, cols)
    }

    /// The arrow `(Z, g)` of the groupoid goes to `P_{gZ}[g]`.
    pub fn psi(&self, gd: &Groupoid) -> Mat {
        let cols = gd
            .arrows()
            .iter()
            .map(|a| {
                let i = self.index_of(gd.target(*a), a.g).expect("g lies in gZ");
                Vector::basis(self.dim(), i)
            })
            .collect();
        Mat::from_columns(self.dim(), cols)
    }

    /// Multiplicative on all basis pairs, unital and bijective.
    pub fn psi_witness(&self, gd: &Groupoid) -> Option<String> {
        let psi = self.psi(gd);
        let ga = gd.algebra();
        if psi.rank() != self.dim() || ga.dim() != self.dim() {
            return Some("ψ is not bijective".into());
        }
        if psi.apply(ga.unit()).ok().as_ref() != Some(self.alg.unit()) {
            return Some("ψ(1) != 1".into());
        }
        ga.multiplicativity_witness(&psi, &self.alg).map(|(i, j)| format!("({}, {})", ga.label(i), ga.label(j)))
    }
}

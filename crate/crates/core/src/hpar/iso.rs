//! The maps `φ_X: A P_{G_X} -> A P_X`, `ψ_X: A P_X -> A P_{G_X}` and the
//! conjugations `ε_h ↦ ε_{g h g^-1}`, each induced from generators.

use super::apar::Apar;
use crate::error::Result;
use crate::group::{stabilizer, stabilizer_multiplicities, GroupSubset};
use crate::hopf::{all_passed, AxiomCheck};
use crate::linalg::{Mat, Vector};
use crate::Scalar;
use serde::Serialize;

fn project(apar: &Apar, x: GroupSubset, v: &Vector) -> Vector {
    let c = apar.component(x);
    Vector::from_pairs(c.dim(), v.iter().filter(|(i, _)| c.range().contains(i)).map(|(i, s)| (i - c.offset, s.clone())))
}

/// Columns of `m` on the component of `x`.
fn restrict(apar: &Apar, m: &Mat, x: GroupSubset) -> Mat {
    let c = apar.component(x);
    Mat::from_columns(m.nrows(), c.range().map(|j| m.col(j).clone()).collect())
}

/// Keeps the rows of the component of `y`.
fn corestrict(apar: &Apar, m: &Mat, y: GroupSubset) -> Mat {
    Mat::from_columns(apar.component(y).dim(), m.columns().iter().map(|v| project(apar, y, v)).collect())
}

/// `φ_X: A -> A P_X`, `ε_h ↦ (h·P_X) P_X`.
pub fn phi_map(apar: &Apar, x: GroupSubset) -> Result<Mat> {
    let a = apar.algebra();
    let px = apar.p(x);
    let e = Mat::from_columns(
        apar.component(x).dim(),
        (0..apar.hopf().dim()).map(|i| project(apar, x, &a.mul(&apar.action().act_h(i, &px), &px))).collect(),
    );
    apar.induced_map(&e, &apar.component(x).algebra)
}

/// `ψ_X: A -> A P_{G_X}`, `ε_h ↦ (1/|G_X|) Σ_{g^-1 ∈ X} ε_{hg} P_{G_X}`.
pub fn psi_map(apar: &Apar, x: GroupSubset) -> Result<Mat> {
    let group = apar.group();
    let h = apar.hopf();
    let gx = stabilizer(group, x);
    let scale = Scalar::from_ratio(1, gx.len() as i64);
    let cols = (0..h.dim())
        .map(|i| {
            let sum = Vector::sum_of(
                apar.dim(),
                (0..group.order())
                    .filter(|&g| x.contains(group.inv(g)))
                    .map(|g| (scale.clone(), apar.eps_of(h.algebra().mul_basis(i, apar.elements()[g])))),
            );
            project(apar, gx, &sum)
        })
        .collect();
    let e = Mat::from_columns(apar.component(gx).dim(), cols);
    apar.induced_map(&e, &apar.component(gx).algebra)
}

/// The automorphism of `A` with `ε_h ↦ ε_{g h g^-1}`.
pub fn conjugation_map(apar: &Apar, g: usize) -> Result<Mat> {
    let h = apar.hopf();
    let group = apar.group();
    let (gb, gi) = (h.basis(apar.elements()[g]), h.basis(apar.elements()[group.inv(g)]));
    let cols = (0..h.dim()).map(|i| apar.eps_of(&h.mul(&h.mul(&gb, &h.basis(i)), &gi))).collect();
    let e = Mat::from_columns(apar.dim(), cols);
    apar.induced_map(&e, apar.algebra())
}

fn iso_witness(f: &Mat, src: &crate::algebra::FinAlgebra, dst: &crate::algebra::FinAlgebra) -> Option<String> {
    if src.dim() != dst.dim() || f.rank() != dst.dim() {
        return Some(format!("rank {} between dims {} and {}", f.rank(), src.dim(), dst.dim()));
    }
    src.multiplicativity_witness(f, dst).map(|(i, j)| format!("({}, {})", src.label(i), src.label(j)))
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiPsiReport {
    pub subset: String,
    pub stabilizer: String,
    pub checks: Vec<AxiomCheck>,
}

impl PhiPsiReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

pub fn phi_psi_isomorphism(apar: &Apar, x: GroupSubset) -> Result<PhiPsiReport> {
    let group = apar.group();
    let fmt = |s: GroupSubset| group.format_subset(s);
    let a = apar.algebra();
    let gx = stabilizer(group, x);
    let (cx, cg) = (&apar.component(x).algebra, &apar.component(gx).algebra);
    let phi = phi_map(apar, x)?;
    let psi = psi_map(apar, x)?;
    let mut out = Vec::new();
    let w = a.multiplicativity_witness(&phi, cx).map(|(i, j)| format!("({}, {})", a.label(i), a.label(j)));
    out.push(AxiomCheck::new("φ_X multiplicative", w));
    let w = a.multiplicativity_witness(&psi, cg).map(|(i, j)| format!("({}, {})", a.label(i), a.label(j)));
    out.push(AxiomCheck::new("ψ_X multiplicative", w));
    out.push(AxiomCheck::new("φ_X surjective", (phi.rank() != cx.dim()).then(|| format!("rank {}", phi.rank()))));
    let w = apar.components().iter().map(|c| c.subset()).find(|&y| {
        let img = phi.apply(&apar.p(y)).expect("dims match");
        let want = if y == gx { cx.unit().clone() } else { Vector::zeros(cx.dim()) };
        img != want
    });
    out.push(AxiomCheck::new("φ_X(P_Y) = δ(Y, G_X) P_X", w.map(fmt)));
    let phi_r = restrict(apar, &phi, gx);
    let psi_r = restrict(apar, &psi, x);
    let w = (psi_r.compose(&phi_r)? != Mat::identity(cg.dim())).then(|| "differs".to_string());
    out.push(AxiomCheck::new("ψ_X ∘ φ_X = id on A P_{G_X}", w));
    let w = (phi_r.compose(&psi_r)? != Mat::identity(cx.dim())).then(|| "differs".to_string());
    out.push(AxiomCheck::new("φ_X ∘ ψ_X = id on A P_X", w));

    for g in (0..group.order()).filter(|&g| x.contains(group.inv(g))) {
        let gxx = group.left_translate(g, x);
        let ggx = stabilizer(group, gxx);
        let conj = conjugation_map(apar, g)?;
        let w = apar.components().iter().map(|c| c.subset()).find(|&y| {
            conj.apply(&apar.p(y)).expect("dims match") != apar.p(group.conjugate_subset(g, y))
        });
        out.push(AxiomCheck::new(&format!("c'_{}(P_Y) = P_(gYg^-1)", group.label(g)), w.map(fmt)));
        let c_r = corestrict(apar, &restrict(apar, &conj, gx), ggx);
        let w = iso_witness(&c_r, cg, &apar.component(ggx).algebra);
        out.push(AxiomCheck::new(&format!("c'_{}: A P_(G_X) ≅ A P_(G_gX)", group.label(g)), w));
        let phi_g = restrict(apar, &phi_map(apar, gxx)?, ggx);
        let chain = phi_g.compose(&c_r)?.compose(&psi_r)?;
        let w = iso_witness(&chain, cx, &apar.component(gxx).algebra);
        out.push(AxiomCheck::new(&format!("A P_X ≅ A P_({})", fmt(gxx)), w));
    }
    Ok(PhiPsiReport { subset: fmt(x), stabilizer: fmt(gx), checks: out })
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityEntry {
    pub subgroup: String,
    pub order: usize,
    pub expected: usize,
    pub count: usize,
    pub structures: Vec<String>,
    pub members: Vec<String>,
    /// Every member is isomorphic to `A P_L` through `φ`, `ψ` and a conjugation.
    pub certified: bool,
}

/// Components grouped by the conjugacy class of their stabilizer.
pub fn apar_multiplicity_report(apar: &Apar) -> Result<Vec<MultiplicityEntry>> {
    let group = apar.group();
    let mut out = Vec::new();
    for m in stabilizer_multiplicities(group)? {
        let l = m.subgroup;
        let members: Vec<GroupSubset> = apar
            .components()
            .iter()
            .map(|c| c.subset())
            .filter(|&x| group.conjugacy_rep(stabilizer(group, x)) == l)
            .collect();
        let mut structures: Vec<String> = members.iter().map(|&x| apar.component(x).presentation.structure.describe()).collect();
        structures.dedup();
        let mut certified = true;
        for &x in &members {
            let gx = stabilizer(group, x);
            certified &= phi_psi_isomorphism(apar, x)?.passed();
            let g = (0..group.order()).find(|&g| group.conjugate_subset(g, l) == gx).expect("conjugate stabilizer");
            let c = corestrict(apar, &restrict(apar, &conjugation_map(apar, g)?, l), gx);
            certified &= iso_witness(&c, &apar.component(l).algebra, &apar.component(gx).algebra).is_none();
        }
        out.push(MultiplicityEntry {
            subgroup: group.format_subset(l),
            order: m.order,
            expected: m.count,
            count: members.len(),
            structures,
            members: members.iter().map(|&x| group.format_subset(x)).collect(),
            certified,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{GroupDatum, HopfAlgebra};

    fn nilpotent() -> Apar {
        let d = GroupDatum::cyclic(FiniteGroup::cyclic(4), Scalar::from_int(-1), 1, Scalar::zero()).unwrap();
        Apar::build(&HopfAlgebra::rank_one(&d).unwrap(), 3).unwrap()
    }

    #[test]
    fn phi_psi_on_every_component() {
        let a = nilpotent();
        for c in a.components() {
            let r = phi_psi_isomorphism(&a, c.subset()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn subgroup_phi_is_identity() {
        let a = nilpotent();
        let x = GroupSubset::from_elements([0, 2]);
        let phi = restrict(&a, &phi_map(&a, x).unwrap(), x);
        assert_eq!(phi, Mat::identity(a.component(x).dim()));
    }

    #[test]
    fn multiplicities() {
        let a = nilpotent();
        let rep = apar_multiplicity_report(&a).unwrap();
        let counts: Vec<usize> = rep.iter().map(|e| e.count).collect();
        assert_eq!(counts, vec![6, 1, 1]);
        assert!(rep.iter().all(|e| e.certified && e.count == e.expected && e.structures.len() == 1));
        assert_eq!(rep[0].structures, vec!["K[t]/(t^2)".to_string()]);
    }

    #[test]
    fn bad_generator_map_is_rejected() {
        let a = nilpotent();
        let e = Mat::from_columns(1, (0..8).map(|_| Vector::basis(1, 0)).collect());
        let err = a.induced_map(&e, &crate::algebra::FinAlgebra::ground()).unwrap_err();
        assert_eq!(err.kind(), "UniversalPropertyViolated");
    }
}

//! Symmetric partial actions of a Hopf algebra on a finite-dimensional
//! algebra, the idempotents `P_X` and `Γ_X`, and the decomposition of the
//! algebra into `H`-stable ideals.

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::group::{act_partial, orbit_decomposition, p1_subsets, FiniteGroup, GroupSubset, OrbitDecomposition};
use crate::hopf::{AxiomCheck, HopfAlgebra};
use crate::linalg::{Mat, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct PartialAction {
    h: HopfAlgebra,
    a: FinAlgebra,
    /// `act[i][j] = h_i · a_j`.
    act: Vec<Vec<Vector>>,
}

impl PartialAction {
    pub fn new(h: HopfAlgebra, a: FinAlgebra, act: Vec<Vec<Vector>>) -> Result<Self> {
        if act.len() != h.dim() || act.iter().any(|r| r.len() != a.dim() || r.iter().any(|v| v.dim() != a.dim())) {
            return Err(Error::DimensionMismatch("action table does not match H and A".into()));
        }
        Ok(PartialAction { h, a, act })
    }

    pub fn from_fn(h: HopfAlgebra, a: FinAlgebra, f: impl Fn(usize, usize) -> Vector) -> Result<Self> {
        let act = (0..h.dim()).map(|i| (0..a.dim()).map(|j| f(i, j)).collect()).collect();
        Self::new(h, a, act)
    }

    /// `h · a = ε(h) a`.
    pub fn trivial(h: HopfAlgebra, a: FinAlgebra) -> Self {
        let act = (0..h.dim())
            .map(|i| (0..a.dim()).map(|j| a.basis(j).scale(h.counit_basis(i))).collect())
            .collect();
        PartialAction { h, a, act }
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.h
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.a
    }

    pub fn act_basis(&self, i: usize, j: usize) -> &Vector {
        &self.act[i][j]
    }

    /// `h · a` for arbitrary `h ∈ H`, `a ∈ A`.
    pub fn act(&self, h: &Vector, a: &Vector) -> Vector {
        let mut parts = Vec::with_capacity(h.nnz() * a.nnz());
        for (i, x) in h.iter() {
            for (j, y) in a.iter() {
                parts.push((x * y, self.act[i][j].clone()));
            }
        }
        Vector::sum_of(self.a.dim(), parts)
    }

    /// `e_i · a`.
    pub fn act_h(&self, i: usize, a: &Vector) -> Vector {
        Vector::sum_of(self.a.dim(), a.iter().map(|(j, y)| (y.clone(), self.act[i][j].clone())))
    }

    /// `h · 1_A` for a basis element.
    pub fn unit_image(&self, i: usize) -> Vector {
        self.act_h(i, self.a.unit())
    }

    /// PA1 to PA4 over all basis tuples, with the first failing tuple.
    pub fn check(&self) -> Vec<AxiomCheck> {
        let (dh, da) = (self.h.dim(), self.a.dim());
        let hl = |i: usize| self.h.label(i).to_string();
        let al = |j: usize| self.a.label(j).to_string();
        let one_h = self.h.unit();
        let mut out = Vec::new();

        let w = (0..da).find(|&j| self.act(one_h, &self.a.basis(j)) != self.a.basis(j));
        out.push(AxiomCheck::new("PA1", w.map(|j| format!("(1_H, {})", al(j)))));

        let mut w = None;
        'pa2: for i in 0..dh {
            let sw = self.h.sweedler(i);
            for j in 0..da {
                for k in 0..da {
                    let lhs = self.act_h(i, self.a.mul_basis(j, k));
                    let rhs = Vector::sum_of(
                        da,
                        sw.iter().map(|(c, l, r)| (c.clone(), self.a.mul(&self.act[*l][j], &self.act[*r][k]))),
                    );
                    if lhs != rhs {
                        w = Some(format!("({}, {}, {})", hl(i), al(j), al(k)));
                        break 'pa2;
                    }
                }
            }
        }
        out.push(AxiomCheck::new("PA2", w));

        let units: Vec<Vector> = (0..dh).map(|i| self.unit_image(i)).collect();
        let (mut w3, mut w4) = (None, None);
        'pa34: for i in 0..dh {
            let sw = self.h.sweedler(i);
            for k in 0..dh {
                // h_2 k and h_1 k as vectors
                for j in 0..da {
                    let ka = &self.act[k][j];
                    let lhs = self.act_h(i, ka);
                    if w3.is_none() {
                        let rhs = Vector::sum_of(
                            da,
                            sw.iter().map(|(c, l, r)| {
                                let rk = self.h.algebra().mul_basis(*r, k);
                                (c.clone(), self.a.mul(&units[*l], &self.act(rk, &self.a.basis(j))))
                            }),
                        );
                        if lhs != rhs {
                            w3 = Some(format!("({}, {}, {})", hl(i), hl(k), al(j)));
                        }
                    }
                    if w4.is_none() {
                        let rhs = Vector::sum_of(
                            da,
                            sw.iter().map(|(c, l, r)| {
                                let lk = self.h.algebra().mul_basis(*l, k);
                                (c.clone(), self.a.mul(&self.act(lk, &self.a.basis(j)), &units[*r]))
                            }),
                        );
                        if lhs != rhs {
                            w4 = Some(format!("({}, {}, {})", hl(i), hl(k), al(j)));
                        }
                    }
                    if w3.is_some() && w4.is_some() {
                        break 'pa34;
                    }
                }
            }
        }
        out.push(AxiomCheck::new("PA3", w3));
        out.push(AxiomCheck::new("PA4", w4));
        out
    }

    /// `e_A(h) = h · 1_A` as a map `H -> A`.
    pub fn unit_map(&self) -> Mat {
        Mat::from_columns(self.a.dim(), (0..self.h.dim()).map(|i| self.unit_image(i)).collect())
    }

    /// The three defining identities of `e_A`: `e(1) = 1`,
    /// `e(h) = e(h_1) e(h_2)`, `e(h_1) e(h_2 k) = e(h_1 k) e(h_2)`.
    pub fn unit_map_checks(&self) -> Vec<AxiomCheck> {
        check_unit_map_relations(&self.h, &self.a, &self.unit_map())
    }

    /// The action restricted to the unital ideal `A E`, with `h ▷ b = (h · b) E`.
    pub fn induce_on_ideal(&self, e: &Vector) -> Result<(PartialAction, Mat)> {
        if !self.a.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        if !self.a.is_central(e) {
            return Err(Error::NotCentral);
        }
        let da = self.a.dim();
        let space = Subspace::from_spanning(da, (0..da).map(|j| self.a.mul(&self.a.basis(j), e)));
        let labels = (0..space.dim()).map(|k| format!("b{k}")).collect();
        let (sub, incl) = self.a.restrict(&space, e, labels)?;
        let coords = |v: &Vector| Vector::from_dense(space.coords(v).expect("AE is stable"));
        let act = (0..self.h.dim())
            .map(|i| {
                space.basis().iter().map(|b| coords(&self.a.mul(&self.act_h(i, b), e))).collect()
            })
            .collect();
        Ok((PartialAction::new(self.h.clone(), sub, act)?, incl))
    }

    /// Whether `g · 1_A` is a central idempotent for every grouplike `g`.
    pub fn grouplike_units_central(&self) -> Option<String> {
        for g in self.h.grouplikes() {
            let u = self.act(&g, self.a.unit());
            if !self.a.is_idempotent(&u) || !self.a.is_central(&u) {
                return Some(self.h.algebra().element_label(&g));
            }
        }
        None
    }
}

/// The identities `e(1) = 1`, `e(h) = e(h_1)e(h_2)` and
/// `e(h_1)e(h_2 k) = e(h_1 k)e(h_2)` for a map `e: H -> A`.
pub fn check_unit_map_relations(h: &HopfAlgebra, a: &FinAlgebra, e: &Mat) -> Vec<AxiomCheck> {
    let (dh, da) = (h.dim(), a.dim());
    let ev = |v: &Vector| e.apply(v).expect("map matches H");
    let mut out = Vec::new();
    let w = (ev(h.unit()) != *a.unit()).then(|| "e(1) != 1".to_string());
    out.push(AxiomCheck::new("e(1) = 1", w));
    let w = (0..dh).find(|&i| {
        let rhs = Vector::sum_of(da, h.sweedler(i).into_iter().map(|(c, l, r)| (c, a.mul(e.col(l), e.col(r)))));
        rhs != *e.col(i)
    });
    out.push(AxiomCheck::new("e(h) = e(h1)e(h2)", w.map(|i| h.label(i).to_string())));
    let mut w = None;
    'outer: for i in 0..dh {
        let sw = h.sweedler(i);
        for k in 0..dh {
            let lhs = Vector::sum_of(
                da,
                sw.iter().map(|(c, l, r)| (c.clone(), a.mul(e.col(*l), &ev(h.algebra().mul_basis(*r, k))))),
            );
            let rhs = Vector::sum_of(
                da,
                sw.iter().map(|(c, l, r)| (c.clone(), a.mul(&ev(h.algebra().mul_basis(*l, k)), e.col(*r)))),
            );
            if lhs != rhs {
                w = Some(format!("({}, {})", h.label(i), h.label(k)));
                break 'outer;
            }
        }
    }
    out.push(AxiomCheck::new("e(h1)e(h2k) = e(h1k)e(h2)", w));
    out
}

/// The idempotents `P_X` for all `X ∈ P_1(G)` and `Γ_X` for each orbit
/// class, where `G` is the grouplike group of `H`.
#[derive(Clone, Debug)]
pub struct IdempotentSystem {
    pub group: FiniteGroup,
    /// Grouplike elements of `H`, indexed like `group`.
    pub grouplikes: Vec<Vector>,
    pub subsets: Vec<GroupSubset>,
    /// `P_X`, indexed by `X.p1_index()`.
    pub p: Vec<Vector>,
    pub orbits: OrbitDecomposition,
    /// `Γ_X` per orbit class.
    pub gamma: Vec<Vector>,
}

impl IdempotentSystem {
    pub fn p_of(&self, x: GroupSubset) -> &Vector {
        &self.p[x.p1_index()]
    }

    pub fn gamma_of(&self, x: GroupSubset) -> &Vector {
        &self.gamma[self.orbits.class_of[x.p1_index()]]
    }
}

impl PartialAction {
    /// `P_X = Π_{x∈X} (x·1) Π_{y∉X} (1 - y·1)` and
    /// `Γ_X = (1/|G_X|) Σ_{g^-1 ∈ X} g · P_X`.
    pub fn idempotent_system(&self) -> Result<IdempotentSystem> {
        let (group, grouplikes) = self.h.grouplike_group()?;
        let subsets = p1_subsets(&group)?;
        let orbits = orbit_decomposition(&group)?;
        let one = self.a.unit().clone();
        let units: Vec<Vector> = grouplikes.iter().map(|g| self.act(g, &one)).collect();
        let p: Vec<Vector> = subsets
            .iter()
            .map(|&x| {
                (0..group.order()).fold(one.clone(), |acc, g| {
                    let f = if x.contains(g) { units[g].clone() } else { one.sub(&units[g]) };
                    self.a.mul(&acc, &f)
                })
            })
            .collect();
        let gamma = orbits
            .classes
            .iter()
            .map(|cls| {
                let x = cls.representative;
                let px = &p[x.p1_index()];
                let sum = Vector::sum_of(
                    self.a.dim(),
                    (0..group.order()).filter(|&g| x.contains(group.inv(g))).map(|g| (Scalar::one(), self.act(&grouplikes[g], px))),
                );
                sum.scale(&Scalar::from_ratio(1, cls.stabilizer.len() as i64))
            })
            .collect();
        Ok(IdempotentSystem { group, grouplikes, subsets, p, orbits, gamma })
    }

    /// Every property of `P_X` and `Γ_X`, checked exhaustively.
    pub fn check_idempotents(&self, sys: &IdempotentSystem) -> Vec<AxiomCheck> {
        let g = &sys.group;
        let a = &self.a;
        let fmt = |x: GroupSubset| g.format_subset(x);
        let mut out = Vec::new();
        let w = self.grouplike_units_central();
        out.push(AxiomCheck::new("g·1 central idempotent", w));

        let w = sys.subsets.iter().find(|&&x| !a.is_idempotent(sys.p_of(x)) || !a.is_central(sys.p_of(x)));
        out.push(AxiomCheck::new("P_X central idempotent", w.map(|&x| fmt(x))));

        let mut w = None;
        'orth: for &x in &sys.subsets {
            for &y in &sys.subsets {
                if x != y && !a.mul(sys.p_of(x), sys.p_of(y)).is_zero() {
                    w = Some(format!("({}, {})", fmt(x), fmt(y)));
                    break 'orth;
                }
            }
        }
        out.push(AxiomCheck::new("P_X orthogonal", w));

        let total = Vector::sum_of(a.dim(), sys.p.iter().map(|v| (Scalar::one(), v.clone())));
        out.push(AxiomCheck::new("Σ P_X = 1", (total != *a.unit()).then(|| "sum differs from 1".into())));

        let mut w = None;
        'gp: for &x in &sys.subsets {
            for el in 0..g.order() {
                let lhs = self.act(&sys.grouplikes[el], sys.p_of(x));
                let rhs = match act_partial(g, el, x) {
                    Some(y) => sys.p_of(y).clone(),
                    None => Vector::zeros(a.dim()),
                };
                if lhs != rhs {
                    w = Some(format!("({}, {})", g.label(el), fmt(x)));
                    break 'gp;
                }
            }
        }
        out.push(AxiomCheck::new("g·P_X = P_gX or 0", w));

        let w = sys.orbits.classes.iter().zip(&sys.gamma).find(|(cls, gm)| {
            let s = Vector::sum_of(a.dim(), cls.members.iter().map(|&y| (Scalar::one(), sys.p_of(y).clone())));
            s != **gm
        });
        out.push(AxiomCheck::new("Γ_X = Σ_{Y~X} P_Y", w.map(|(c, _)| fmt(c.representative))));

        let w = sys.orbits.classes.iter().zip(&sys.gamma).find(|(_, gm)| !a.is_idempotent(gm) || !a.is_central(gm));
        out.push(AxiomCheck::new("Γ_X central idempotent", w.map(|(c, _)| fmt(c.representative))));

        let total = Vector::sum_of(a.dim(), sys.gamma.iter().map(|v| (Scalar::one(), v.clone())));
        out.push(AxiomCheck::new("Σ Γ_X = 1", (total != *a.unit()).then(|| "sum differs from 1".into())));

        let mut w = None;
        'hg: for (cls, gm) in sys.orbits.classes.iter().zip(&sys.gamma) {
            for i in 0..self.h.dim() {
                if self.act_h(i, gm) != a.mul(&self.unit_image(i), gm) {
                    w = Some(format!("({}, {})", self.h.label(i), fmt(cls.representative)));
                    break 'hg;
                }
            }
        }
        out.push(AxiomCheck::new("h·Γ_X = (h·1)Γ_X", w));

        let w = sys.orbits.classes.iter().zip(&sys.gamma).find(|(cls, gm)| {
            g.is_subgroup(cls.representative) && *gm != sys.p_of(cls.representative)
        });
        out.push(AxiomCheck::new("Γ_L = P_L for subgroups", w.map(|(c, _)| fmt(c.representative))));

        let gamma_g = sys.gamma_of(GroupSubset::full(g.order()));
        let w = (0..self.h.dim()).find(|&i| self.act_h(i, gamma_g) != gamma_g.scale(self.h.counit_basis(i)));
        out.push(AxiomCheck::new("h·Γ_G = ε(h)Γ_G", w.map(|i| self.h.label(i).to_string())));

        // the restriction to A Γ_G is a global action
        let mut w = None;
        'glob: for i in 0..self.h.dim() {
            for k in 0..self.h.dim() {
                for j in 0..a.dim() {
                    let ag = a.mul(&a.basis(j), gamma_g);
                    let lhs = self.act_h(i, &self.act_h(k, &ag));
                    let hk = self.h.algebra().mul_basis(i, k);
                    let rhs = a.mul(&self.act(hk, &a.basis(j)), gamma_g);
                    if lhs != rhs {
                        w = Some(format!("({}, {}, {})", self.h.label(i), self.h.label(k), a.label(j)));
                        break 'glob;
                    }
                }
            }
        }
        out.push(AxiomCheck::new("global on AΓ_G", w));
        out
    }

    /// `A = ⊕ A Γ_X`, with each summand checked to be `H`-stable.
    pub fn decompose(&self, sys: &IdempotentSystem) -> Decomposition {
        let a = &self.a;
        let d = a.dim();
        let blocks: Vec<IdealBlock> = sys
            .orbits
            .classes
            .iter()
            .zip(&sys.gamma)
            .map(|(cls, gm)| {
                let space = Subspace::from_spanning(d, (0..d).map(|j| a.mul(&a.basis(j), gm)));
                let stable = (0..self.h.dim()).all(|i| {
                    (0..d).all(|j| {
                        let ag = a.mul(&a.basis(j), gm);
                        self.act_h(i, &ag) == a.mul(&self.act_h(i, &a.basis(j)), gm)
                    })
                });
                IdealBlock { representative: cls.representative, orbit: cls.members.clone(), stabilizer: cls.stabilizer, space, stable }
            })
            .collect();
        let sum = blocks.iter().try_fold(Subspace::zero(d), |acc, b| acc.sum(&b.space)).expect("same ambient");
        let direct = blocks.iter().map(|b| b.space.dim()).sum::<usize>() == d && sum.dim() == d;
        Decomposition { blocks, direct }
    }
}

#[derive(Clone, Debug)]
pub struct IdealBlock {
    pub representative: GroupSubset,
    pub orbit: Vec<GroupSubset>,
    pub stabilizer: GroupSubset,
    pub space: Subspace,
    pub stable: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub blocks: Vec<IdealBlock>,
    /// Dimensions add up and the summands span `A`.
    pub direct: bool,
}

impl Decomposition {
    pub fn verified(&self) -> bool {
        self.direct && self.blocks.iter().all(|b| b.stable)
    }

    pub fn report(&self, g: &FiniteGroup, truncation: Option<usize>) -> serde_json::Value {
        serde_json::json!(self
            .blocks
            .iter()
            .map(|b| serde_json::json!({
                "representative": g.format_subset(b.representative),
                "orbit": b.orbit.iter().map(|&x| g.format_subset(x)).collect::<Vec<_>>(),
                "stabilizer_order": b.stabilizer.len(),
                "dim": b.space.dim(),
                "truncation": truncation,
                "stability": if b.stable { "pass" } else { "fail" },
            }))
            .collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::all_passed;

    fn z2_on_k() -> PartialAction {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        PartialAction::from_fn(h, FinAlgebra::ground(), |i, _| if i == 0 { Vector::basis(1, 0) } else { Vector::zeros(1) })
            .unwrap()
    }

    #[test]
    fn trivial_and_partial_actions_pass() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(4));
        let a = h.algebra().clone();
        assert!(all_passed(&PartialAction::trivial(h, a).check()));
        let pa = z2_on_k();
        assert!(all_passed(&pa.check()));
        assert!(all_passed(&pa.unit_map_checks()));
        assert_eq!(pa.unit_map(), Mat::from_columns(1, vec![Vector::basis(1, 0), Vector::zeros(1)]));
    }

    #[test]
    fn zero_action_fails_pa1() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        let pa = PartialAction::from_fn(h, FinAlgebra::ground(), |_, _| Vector::zeros(1)).unwrap();
        let checks = pa.check();
        assert!(!checks[0].passed);
        assert_eq!(checks[0].witness.as_deref(), Some("(1_H, 1)"));
    }

    #[test]
    fn idempotents_of_z2_on_k() {
        let pa = z2_on_k();
        let sys = pa.idempotent_system().unwrap();
        assert_eq!(sys.p[0], Vector::basis(1, 0));
        assert!(sys.p[1].is_zero());
        assert!(all_passed(&pa.check_idempotents(&sys)));
        let dec = pa.decompose(&sys);
        assert!(dec.verified());
        let dims: Vec<usize> = dec.blocks.iter().map(|b| b.space.dim()).collect();
        assert_eq!(dims, vec![1, 0]);
    }

    #[test]
    fn trivial_action_idempotents() {
        let g = FiniteGroup::cyclic(4);
        let h = HopfAlgebra::group_algebra(&g);
        let pa = PartialAction::trivial(h, FinAlgebra::ground());
        let sys = pa.idempotent_system().unwrap();
        for (k, p) in sys.p.iter().enumerate() {
            assert_eq!(p.is_zero(), k != 7);
        }
        assert!(all_passed(&pa.check_idempotents(&sys)));
    }

    #[test]
    fn induced_actions() {
        let g = FiniteGroup::cyclic(2);
        let h = HopfAlgebra::group_algebra(&g);
        let a = h.algebra().clone();
        let pa = PartialAction::trivial(h, a);
        let (same, _) = pa.induce_on_ideal(pa.algebra().unit()).unwrap();
        assert_eq!(same.algebra().dim(), 2);
        assert!(all_passed(&same.check()));
        let (zero, _) = pa.induce_on_ideal(&Vector::zeros(2)).unwrap();
        assert_eq!(zero.algebra().dim(), 0);
        assert!(all_passed(&zero.check()));
        let two = Vector::basis(2, 0).scale(&Scalar::from_int(2));
        assert_eq!(pa.induce_on_ideal(&two).unwrap_err(), Error::NotIdempotent);
    }
}

//! `H_par = A_par # H` with its Γ-block decomposition, the bracket map,
//! the projection `p_H` and the section `θ_H`.

use super::apar::Apar;
use super::partial_rep::check_partial_rep;
use crate::algebra::FinAlgebra;
use crate::error::Result;
use crate::group::GroupSubset;
use crate::hopf::{AxiomCheck, HopfAlgebra};
use crate::linalg::{Echelon, Mat, Vector};
use crate::partial_action::IdempotentSystem;
use crate::smash::SmashProduct;
use serde_json::json;

#[derive(Clone, Debug)]
pub struct HparBlock {
    pub representative: GroupSubset,
    pub orbit: Vec<GroupSubset>,
    pub stabilizer: GroupSubset,
    pub start: usize,
    pub end: usize,
    /// `Γ_X # 1` in `H_par` coordinates.
    pub gamma: Vector,
}

impl HparBlock {
    pub fn dim(&self) -> usize {
        self.end - self.start
    }

    pub fn contains(&self, i: usize) -> bool {
        (self.start..self.end).contains(&i)
    }
}

#[derive(Clone, Debug)]
pub struct Hpar {
    apar: Apar,
    smash: SmashProduct,
    system: IdempotentSystem,
    blocks: Vec<HparBlock>,
}

/// Coradical level of each basis element (0 when `H` is not pointed).
fn levels(h: &HopfAlgebra) -> Vec<usize> {
    match h.coradical_filtration() {
        Ok(f) => (0..h.dim()).map(|i| f.iter().position(|c| c.contains(&h.basis(i))).unwrap_or(0)).collect(),
        Err(_) => vec![0; h.dim()],
    }
}

/// Builds `A_par^(N) # H`. The basis of each block `Γ_X H_par` is chosen
/// greedily among `P_Y t^α # h` for `Y` in the orbit of `X`, in the order
/// (Y, coradical level of h, α, h).
pub fn build_hpar(h: &HopfAlgebra, n: usize) -> Result<Hpar> {
    let apar = Apar::build(h, n)?;
    let pa = apar.action();
    let system = pa.idempotent_system()?;
    let ops = crate::smash::TensorOps { pa };
    let (da, dh) = (apar.dim(), h.dim());
    let lv = levels(h);
    let max_level = lv.iter().copied().max().unwrap_or(0);
    let unit_index = h.unit().first().filter(|_| h.unit().nnz() == 1).map(|p| p.0);

    let mut ech = Echelon::new(ops.dim());
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    let mut blocks = Vec::new();
    for (ci, cls) in system.orbits.classes.iter().enumerate() {
        let start = vectors.len();
        for &y in &cls.members {
            let comp = apar.component(y);
            for level in 0..=max_level {
                for alpha in 0..comp.dim() {
                    for hi in (0..dh).filter(|&i| lv[i] == level) {
                        let a = comp.offset + alpha;
                        let v = ops.smash(&Vector::basis(da, a), &h.basis(hi));
                        if ech.insert(v.clone()) {
                            vectors.push(v);
                            let al = apar.algebra().label(a);
                            labels.push(if Some(hi) == unit_index { al.to_string() } else { format!("{al}[{}]", h.label(hi)) });
                        }
                    }
                }
            }
        }
        blocks.push((ci, start, vectors.len()));
    }
    let smash = SmashProduct::build_with_basis(pa, vectors, labels)?;
    let blocks = blocks
        .into_iter()
        .map(|(ci, start, end)| {
            let cls = &system.orbits.classes[ci];
            HparBlock {
                representative: cls.representative,
                orbit: cls.members.clone(),
                stabilizer: cls.stabilizer,
                start,
                end,
                gamma: smash.smash(&system.gamma[ci], h.unit()),
            }
        })
        .collect();
    Ok(Hpar { apar, smash, system, blocks })
}

impl Hpar {
    pub fn apar(&self) -> &Apar {
        &self.apar
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.apar.hopf()
    }

    pub fn smash(&self) -> &SmashProduct {
        &self.smash
    }

    pub fn algebra(&self) -> &FinAlgebra {
        self.smash.algebra()
    }

    pub fn dim(&self) -> usize {
        self.smash.dim()
    }

    pub fn system(&self) -> &IdempotentSystem {
        &self.system
    }

    pub fn blocks(&self) -> &[HparBlock] {
        &self.blocks
    }

    pub fn block_of(&self, x: GroupSubset) -> &HparBlock {
        &self.blocks[self.system.orbits.class_of[x.p1_index()]]
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.dim()).collect()
    }

    /// `[h] = 1 # h`.
    pub fn bracket(&self) -> Mat {
        self.smash.eta_map()
    }

    /// `a # h` in `H_par` coordinates.
    pub fn element(&self, a: &Vector, h: &Vector) -> Vector {
        self.smash.smash(a, h)
    }

    /// Block idempotents, block closure and block-wise associativity.
    pub fn block_checks(&self) -> Vec<AxiomCheck> {
        let alg = self.algebra();
        let d = self.dim();
        let fmt = |x: GroupSubset| self.apar.group().format_subset(x);
        let mut out = Vec::new();
        let w = self.blocks.iter().find(|b| !alg.is_idempotent(&b.gamma) || !alg.is_central(&b.gamma));
        out.push(AxiomCheck::new("Γ_X # 1 central idempotent", w.map(|b| fmt(b.representative))));
        let mut w = None;
        for (i, b) in self.blocks.iter().enumerate() {
            for c in &self.blocks[i + 1..] {
                if !alg.mul(&b.gamma, &c.gamma).is_zero() {
                    w = Some(format!("{} {}", fmt(b.representative), fmt(c.representative)));
                }
            }
        }
        out.push(AxiomCheck::new("Γ_X Γ_Y = 0 for X != Y", w));
        let sum = self.blocks.iter().fold(Vector::zeros(d), |acc, b| acc.add(&b.gamma));
        out.push(AxiomCheck::new("Σ Γ_X = 1", (sum != *alg.unit()).then(|| "sum differs from 1".to_string())));
        let w = self.blocks.iter().find(|b| (b.start..b.end).any(|i| alg.mul(&b.gamma, &alg.basis(i)) != alg.basis(i)));
        out.push(AxiomCheck::new("Γ_X is the unit of its block", w.map(|b| fmt(b.representative))));
        let mut w = None;
        'closure: for i in 0..d {
            for j in 0..d {
                let p = alg.mul_basis(i, j);
                let ok = match (self.blocks.iter().find(|b| b.contains(i)), self.blocks.iter().find(|b| b.contains(j))) {
                    (Some(b), Some(c)) if b.start == c.start => p.iter().all(|(k, _)| b.contains(k)),
                    _ => p.is_zero(),
                };
                if !ok {
                    w = Some(format!("({}, {})", alg.label(i), alg.label(j)));
                    break 'closure;
                }
            }
        }
        out.push(AxiomCheck::new("blocks are ideals with zero cross products", w));
        let mut w = None;
        'assoc: for b in &self.blocks {
            for i in b.start..b.end {
                for j in b.start..b.end {
                    let ij = alg.mul_basis(i, j);
                    for k in b.start..b.end {
                        if alg.mul(ij, &alg.basis(k)) != alg.mul(&alg.basis(i), alg.mul_basis(j, k)) {
                            w = Some(format!("({}, {}, {})", alg.label(i), alg.label(j), alg.label(k)));
                            break 'assoc;
                        }
                    }
                }
            }
        }
        out.push(AxiomCheck::new("associativity (block-wise)", w));
        out.push(AxiomCheck::new("unit", alg.unit_witness().map(|i| alg.label(i).to_string())));
        let pa = self.apar.action();
        let a = self.apar.algebra();
        let mut w = None;
        'eps: for b in &self.blocks {
            let g = &self.system.gamma[self.system.orbits.class_of[b.representative.p1_index()]];
            for i in 0..self.hopf().dim() {
                let lhs = self.element(&a.mul(self.apar.eps(i), g), self.hopf().unit());
                let rhs = self.element(&pa.act_h(i, g), self.hopf().unit());
                if lhs != rhs {
                    w = Some(format!("({}, {})", self.hopf().label(i), fmt(b.representative)));
                    break 'eps;
                }
            }
        }
        out.push(AxiomCheck::new("ε_h Γ_X = h·Γ_X", w));
        out
    }

    /// PR1–PR5 for the bracket map.
    pub fn partial_rep_checks(&self) -> Vec<AxiomCheck> {
        check_partial_rep(&self.bracket(), self.hopf(), self.algebra())
    }

    /// The character of `A` with `ε_h ↦ ε(h)`.
    pub fn counit_character(&self) -> Result<Mat> {
        let h = self.hopf();
        let e = Mat::from_columns(1, (0..h.dim()).map(|i| Vector::from_dense(vec![h.counit_basis(i).clone()])).collect());
        self.apar.induced_map(&e, &FinAlgebra::ground())
    }

    /// `p_H(a # h) = χ(a) h`, with `χ` the counit character of `A`.
    pub fn p_map(&self) -> Result<Mat> {
        let chi = self.counit_character()?;
        let dh = self.hopf().dim();
        let cols = self
            .smash
            .basis()
            .vectors()
            .iter()
            .map(|v| {
                Vector::sum_of(
                    dh,
                    v.iter().map(|(p, c)| (c * &chi.col(p / dh).get(0), Vector::basis(dh, p % dh))),
                )
            })
            .collect();
        Ok(Mat::from_columns(dh, cols))
    }

    pub fn gamma_g_block(&self) -> &HparBlock {
        let full = GroupSubset::full(self.apar.group().order());
        self.block_of(full)
    }

    /// `θ_H(h) = Γ_G # h`.
    pub fn theta_map(&self) -> Mat {
        let full = GroupSubset::full(self.apar.group().order());
        let g = self.system.gamma_of(full);
        let h = self.hopf();
        Mat::from_columns(self.dim(), (0..h.dim()).map(|i| self.element(g, &h.basis(i))).collect())
    }

    pub fn theta_checks(&self) -> Result<Vec<AxiomCheck>> {
        let h = self.hopf();
        let alg = self.algebra();
        let p = self.p_map()?;
        let theta = self.theta_map();
        let block = self.gamma_g_block();
        let mut out = Vec::new();
        let w = h.algebra().multiplicativity_witness(&theta, alg);
        out.push(AxiomCheck::new("θ_H multiplicative", w.map(|(i, j)| format!("({}, {})", h.label(i), h.label(j)))));
        let id = Mat::identity(h.dim());
        out.push(AxiomCheck::new("p_H ∘ θ_H = id", (p.compose(&theta)? != id).then(|| "differs".to_string())));
        out.push(AxiomCheck::new("p_H ∘ [-] = id", (p.compose(&self.bracket())? != id).then(|| "differs".to_string())));
        let w = alg.multiplicativity_witness(&p, h.algebra());
        out.push(AxiomCheck::new("p_H multiplicative", w.map(|(i, j)| format!("({}, {})", alg.label(i), alg.label(j)))));
        let pg = p.apply(&block.gamma)?;
        out.push(AxiomCheck::new("p_H(Γ_G) = 1", (pg != *h.unit()).then(|| "differs".to_string())));
        let inside = theta.columns().iter().all(|c| c.iter().all(|(k, _)| block.contains(k)));
        let onto = inside && theta.rank() == block.dim() && block.dim() == h.dim();
        out.push(AxiomCheck::new("θ_H: H -> Γ_G H_par bijective", (!onto).then(|| format!("block dim {}", block.dim()))));
        let unit_ok = theta.apply(h.unit())? == block.gamma;
        out.push(AxiomCheck::new("θ_H(1) = Γ_G", (!unit_ok).then(|| "differs".to_string())));
        let pa = self.apar.action();
        let full = GroupSubset::full(self.apar.group().order());
        let g = self.system.gamma_of(full);
        let w = (0..h.dim()).find(|&i| pa.act_h(i, g) != g.scale(h.counit_basis(i)));
        out.push(AxiomCheck::new("h·Γ_G = ε(h)Γ_G", w.map(|i| h.label(i).to_string())));
        Ok(out)
    }

    pub fn report(&self) -> serde_json::Value {
        let fmt = |x: GroupSubset| self.apar.group().format_subset(x);
        let alg = self.algebra();
        let blocks: Vec<serde_json::Value> = self
            .blocks
            .iter()
            .map(|b| {
                json!({
                    "representative": fmt(b.representative),
                    "orbit": b.orbit.iter().map(|&x| fmt(x)).collect::<Vec<_>>(),
                    "stabilizer": fmt(b.stabilizer),
                    "dim": b.dim(),
                    "basis": alg.labels()[b.start..b.end].to_vec(),
                })
            })
            .collect();
        json!({ "dim": self.dim(), "truncation": self.apar.truncation(), "blocks": blocks })
    }

    /// Nonzero structure constants of every block, in block-local indices.
    pub fn export_blocks(&self) -> serde_json::Value {
        let alg = self.algebra();
        let fmt = |x: GroupSubset| self.apar.group().format_subset(x);
        let blocks: Vec<serde_json::Value> = self
            .blocks
            .iter()
            .map(|b| {
                let mut products = Vec::new();
                for i in b.start..b.end {
                    for j in b.start..b.end {
                        let p = alg.mul_basis(i, j);
                        if p.is_zero() {
                            continue;
                        }
                        let terms: Vec<serde_json::Value> =
                            p.iter().map(|(k, c)| json!([k - b.start, c.to_json()])).collect();
                        products.push(json!([i - b.start, j - b.start, terms]));
                    }
                }
                json!({
                    "representative": fmt(b.representative),
                    "basis": alg.labels()[b.start..b.end].to_vec(),
                    "unit": b.gamma.iter().map(|(k, c)| json!([k - b.start, c.to_json()])).collect::<Vec<_>>(),
                    "products": products,
                })
            })
            .collect();
        json!(blocks)
    }
}

/// `P_X[g] ↦ P_X # g` from `K_par G` into `A_par(KG) # KG`.
pub fn kpar_to_smash(k: &super::kpar::Kpar, hp: &Hpar) -> Mat {
    let a = hp.apar();
    let h = hp.hopf();
    let cols = k
        .basis()
        .iter()
        .map(|&(x, g)| hp.element(&a.p(x), &h.basis(a.elements()[g])))
        .collect();
    Mat::from_columns(hp.dim(), cols)
}

/// Bijective, unital and multiplicative on all basis pairs.
pub fn kpar_smash_witness(k: &super::kpar::Kpar, hp: &Hpar) -> Option<String> {
    let f = kpar_to_smash(k, hp);
    if k.dim() != hp.dim() || f.rank() != hp.dim() {
        return Some(format!("dims {} and {}, rank {}", k.dim(), hp.dim(), f.rank()));
    }
    if f.apply(k.algebra().unit()).ok().as_ref() != Some(hp.algebra().unit()) {
        return Some("unit not preserved".into());
    }
    let ka = k.algebra();
    ka.multiplicativity_witness(&f, hp.algebra()).map(|(i, j)| format!("({}, {})", ka.label(i), ka.label(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::{all_passed, GroupDatum};
    use crate::Scalar;
    use crate::hpar::kpar::kpar_group;

    #[test]
    fn group_algebra_matches_kpar() {
        for n in 1..=4 {
            let g = FiniteGroup::cyclic(n);
            let hp = build_hpar(&HopfAlgebra::group_algebra(&g), 1).unwrap();
            let k = kpar_group(&g).unwrap();
            assert_eq!(kpar_smash_witness(&k, &hp), None);
        }
    }

    #[test]
    fn nilpotent_blocks() {
        let d = GroupDatum::cyclic(FiniteGroup::cyclic(4), Scalar::from_int(-1), 1, Scalar::zero()).unwrap();
        let h = HopfAlgebra::rank_one(&d).unwrap();
        let hp = build_hpar(&h, 2).unwrap();
        assert_eq!(hp.block_dims(), vec![4, 16, 12, 36, 8]);
        assert_eq!(
            hp.algebra().labels()[0..4],
            ["P_{e}", "P_{e}ε_{x}", "P_{e}[x]", "P_{e}ε_{x}[x]"].map(String::from)
        );
        let checks = hp.block_checks();
        assert!(all_passed(&checks), "{checks:?}");
        let checks = hp.theta_checks().unwrap();
        assert!(all_passed(&checks), "{checks:?}");
        let checks = hp.partial_rep_checks();
        assert!(all_passed(&checks), "{checks:?}");
    }
}

//! Embedded reference data for the two rank-one algebras of dimension 8
//! over `Z_4` (`χ(g) = -1`, `a = g`, `κ = 0` or `1`), and a diff of a
//! computed `H_par` against it.

use super::build::Hpar;
use super::relations::EpsPoly;
use crate::error::Result;
use crate::group::{FiniteGroup, GroupSubset};
use crate::hopf::{tensor, GroupDatum, HopfAlgebra};
use crate::linalg::{Subspace, Vector};
use crate::Scalar;
use serde_json::json;

/// Basis index of `g^l x^β` in the rank-one algebra over `Z_4`.
pub fn gx(l: usize, beta: usize) -> usize {
    l % 4 + 4 * beta
}

#[derive(Clone, Debug)]
pub struct ExpectedComponent {
    pub elements: Vec<usize>,
    /// `t = ε_{g^l x}`, or `None` for a scalar component.
    pub generator: Option<usize>,
    /// `ε_{g^l x} = c_l t` on the component.
    pub coefficients: [i64; 4],
    /// `t^2 = s`, or `None` when `t` is free.
    pub square: Option<i64>,
}

impl ExpectedComponent {
    pub fn subset(&self) -> GroupSubset {
        GroupSubset::from_elements(self.elements.iter().copied())
    }
}

/// `a ⊗ h` terms: `(coefficient, subset, power of t, basis of H)`.
pub type TensorTerm = (i64, Vec<usize>, usize, usize);

#[derive(Clone, Debug)]
pub struct SpotIdentity {
    pub lhs: (Vec<usize>, usize, usize),
    pub rhs: Vec<TensorTerm>,
}

#[derive(Clone, Debug)]
pub struct Expected {
    pub name: &'static str,
    pub kappa: i64,
    pub components: Vec<ExpectedComponent>,
    pub identities: Vec<SpotIdentity>,
}

fn comp(elements: &[usize], generator: Option<usize>, coefficients: [i64; 4], square: Option<i64>) -> ExpectedComponent {
    ExpectedComponent { elements: elements.to_vec(), generator: generator.map(|l| gx(l, 1)), coefficients, square }
}

fn components(sq: i64) -> Vec<ExpectedComponent> {
    vec![
        comp(&[0], Some(0), [1, 0, 0, 1], Some(sq)),
        comp(&[0, 1], Some(1), [0, 1, 0, -1], Some(sq)),
        comp(&[0, 3], Some(0), [1, 0, -1, 0], Some(sq)),
        comp(&[0, 2], Some(0), [1, 1, 1, 1], None),
        comp(&[0, 1, 2], Some(2), [0, 0, 1, 1], Some(sq)),
        comp(&[0, 1, 3], Some(1), [0, 1, 1, 0], Some(sq)),
        comp(&[0, 2, 3], Some(0), [1, 1, 0, 0], Some(sq)),
        comp(&[0, 1, 2, 3], None, [0, 0, 0, 0], None),
    ]
}

pub const NAMES: [&str; 2] = ["nilpotent8", "nonnilpotent8"];

pub fn expected(name: &str) -> Option<Expected> {
    match name {
        "nilpotent8" => Some(Expected {
            name: "nilpotent8",
            kappa: 0,
            components: components(0),
            identities: vec![
                SpotIdentity { lhs: (vec![0], 0, gx(3, 1)), rhs: vec![(1, vec![0], 1, gx(0, 0))] },
                SpotIdentity { lhs: (vec![0, 1], 0, gx(3, 1)), rhs: vec![(-1, vec![0, 1], 1, gx(0, 0))] },
            ],
        }),
        "nonnilpotent8" => Some(Expected {
            name: "nonnilpotent8",
            kappa: 1,
            components: components(-1),
            identities: vec![
                SpotIdentity {
                    lhs: (vec![0], 1, gx(0, 1)),
                    rhs: vec![(-1, vec![0], 0, gx(1, 0)), (1, vec![0], 1, gx(0, 1))],
                },
                SpotIdentity { lhs: (vec![0], 1, gx(3, 1)), rhs: vec![(-1, vec![0], 0, gx(0, 0))] },
                SpotIdentity {
                    lhs: (vec![0, 1], 1, gx(1, 1)),
                    rhs: vec![(-1, vec![0, 1], 0, gx(2, 0)), (1, vec![0, 1], 1, gx(1, 1))],
                },
            ],
        }),
        _ => None,
    }
}

impl Expected {
    pub fn datum(&self) -> GroupDatum {
        GroupDatum::cyclic(FiniteGroup::cyclic(4), Scalar::from_int(-1), 1, Scalar::from_int(self.kappa))
            .expect("reference datum is valid")
    }

    pub fn hopf(&self) -> HopfAlgebra {
        HopfAlgebra::rank_one(&self.datum()).expect("reference datum is valid")
    }

    pub fn block_dims(n: usize) -> Vec<usize> {
        vec![4, 16, 4 * (n + 1), 36, 8]
    }

    pub fn structure(&self, c: &ExpectedComponent) -> String {
        match (c.generator, c.square) {
            (None, _) => "K".into(),
            (Some(_), None) => "K[t]".into(),
            (Some(_), Some(0)) => "K[t]/(t^2)".into(),
            (Some(_), Some(s)) if s < 0 => format!("K[t]/(t^2 + {})", -s),
            (Some(_), Some(s)) => format!("K[t]/(t^2 - {s})"),
        }
    }

    /// Basis labels of each block, listed by subset, then `x`-degree of
    /// `h`, then power of `t`, then `g^l ∈ Y`.
    pub fn block_labels(&self, h: &HopfAlgebra, n: usize, classes: &[Vec<GroupSubset>]) -> Vec<Vec<String>> {
        let g = FiniteGroup::cyclic(4);
        classes
            .iter()
            .map(|members| {
                let mut out = Vec::new();
                for &y in members {
                    let c = self.components.iter().find(|c| c.subset() == y).expect("every subset listed");
                    let p = format!("P_{}", g.format_subset(y));
                    let dim = match (c.generator, c.square) {
                        (None, _) => 1,
                        (Some(_), None) => n + 1,
                        _ => 2,
                    };
                    for beta in 0..2 {
                        for alpha in 0..dim {
                            for l in y.iter() {
                                let t = c.generator.map(|b| format!("ε_{{{}}}", h.label(b))).unwrap_or_default();
                                let a = match alpha {
                                    0 => p.clone(),
                                    1 => format!("{p}{t}"),
                                    _ => format!("{p}({t})^{alpha}"),
                                };
                                let hb = gx(l, beta);
                                out.push(if hb == 0 { a } else { format!("{a}[{}]", h.label(hb)) });
                            }
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// Every disagreement between `hp` and the reference data.
    pub fn diff(&self, hp: &Hpar) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let apar = hp.apar();
        let a = apar.algebra();
        let h = hp.hopf();
        let n = apar.truncation();
        let group = apar.group();
        for c in &self.components {
            let x = c.subset();
            let name = group.format_subset(x);
            let comp = apar.component(x);
            let px = apar.p(x);
            let structure = comp.presentation.structure.describe();
            if structure != self.structure(c) {
                out.push(format!("{name}: structure {structure}, expected {}", self.structure(c)));
            }
            if comp.presentation.generator != c.generator {
                out.push(format!("{name}: generator {:?}, expected {:?}", comp.presentation.generator, c.generator));
            }
            for l in 0..4 {
                let lhs = a.mul(&px, apar.eps(gx(l, 0)));
                let want = if x.contains(l) { px.clone() } else { Vector::zeros(a.dim()) };
                if lhs != want {
                    out.push(format!("{name}: P ε_{{{}}} differs", h.label(gx(l, 0))));
                }
            }
            let Some(t) = c.generator else {
                for l in 0..4 {
                    if !a.mul(&px, apar.eps(gx(l, 1))).is_zero() {
                        out.push(format!("{name}: P ε_{{{}}} != 0", h.label(gx(l, 1))));
                    }
                }
                continue;
            };
            let pt = a.mul(&px, apar.eps(t));
            for l in 0..4 {
                let lhs = a.mul(&px, apar.eps(gx(l, 1)));
                if lhs != pt.scale(&Scalar::from_int(c.coefficients[l])) {
                    out.push(format!("{name}: P ε_{{{}}} != ({}) P t", h.label(gx(l, 1)), c.coefficients[l]));
                }
            }
            match c.square {
                Some(s) => {
                    if a.mul(&pt, &pt) != px.scale(&Scalar::from_int(s)) {
                        out.push(format!("{name}: P t^2 != ({s}) P"));
                    }
                }
                None => {
                    let mut pow = px.clone();
                    let mut powers = Vec::new();
                    for _ in 0..=n {
                        powers.push(pow.clone());
                        pow = a.mul(&pow, apar.eps(t));
                    }
                    if Subspace::from_spanning(a.dim(), powers).dim() != n + 1 {
                        out.push(format!("{name}: powers of t up to degree {n} are dependent"));
                    }
                }
            }
        }

        let dims = hp.block_dims();
        if dims != Self::block_dims(n) {
            out.push(format!("block dims {dims:?}, expected {:?}", Self::block_dims(n)));
        }
        let classes: Vec<Vec<GroupSubset>> = hp.blocks().iter().map(|b| b.orbit.clone()).collect();
        for (b, want) in hp.blocks().iter().zip(self.block_labels(h, n, &classes)) {
            let got = &hp.algebra().labels()[b.start..b.end];
            if got != want.as_slice() {
                out.push(format!("block {}: basis {:?}, expected {:?}", group.format_subset(b.representative), got, want));
            }
        }

        let ops = hp.smash().ops();
        let elem = |x: &[usize], alpha: usize| -> Vector {
            let c = apar.component(GroupSubset::from_elements(x.iter().copied()));
            a.basis(c.offset + alpha)
        };
        for id in &self.identities {
            let (x, alpha, hb) = &id.lhs;
            let lhs = ops.smash(&elem(x, *alpha), &h.basis(*hb));
            let rhs = Vector::sum_of(
                ops.dim(),
                id.rhs.iter().map(|(c, y, beta, kb)| (Scalar::from_int(*c), tensor(&elem(y, *beta), &h.basis(*kb)))),
            );
            if lhs != rhs {
                let al = a.label(apar.component(GroupSubset::from_elements(x.iter().copied())).offset + alpha);
                out.push(format!("identity for {al}#{} fails", h.label(*hb)));
            }
        }
        Ok(out)
    }

    pub fn report(&self, hp: &Hpar) -> Result<serde_json::Value> {
        let d = self.diff(hp)?;
        Ok(json!({ "reference": self.name, "discrepancies": d }))
    }
}

fn e(b: usize) -> EpsPoly {
    EpsPoly::symbol(b)
}

/// The relation families among the `ε` of the rank-one algebra with the
/// given `κ`, each written as `poly = 0`.
pub fn relation_families(kappa: i64) -> Vec<(String, EpsPoly)> {
    let sign = |k: usize| Scalar::from_int(if k % 2 == 0 { 1 } else { -1 });
    let mut out = Vec::new();
    for l in 0..4 {
        let rhs = e(gx(l, 1)).mul(&e(gx(l + 1, 0))).add(&e(gx(l, 0)).mul(&e(gx(l, 1))));
        out.push((format!("coproduct l={l}"), e(gx(l, 1)).sub(&rhs)));
    }
    for al in 0..4 {
        for l in 0..4 {
            let lhs = e(gx(al, 1)).mul(&e(gx(l + 1, 0)).sub(&e(gx(l, 0)))).scale(&sign(al + l));
            let rhs = e(gx(l, 1)).mul(&e(gx(al + 1, 0)).sub(&e(gx(al, 0))));
            out.push((format!("twisted α={al} l={l}"), lhs.sub(&rhs)));
            let konst = e(gx(al + 2, 0))
                .sub(&e(gx(al, 0)))
                .mul(&e(gx(l + 1, 0)).sub(&e(gx(l, 0))))
                .scale(&(&sign(al + l) * &Scalar::from_int(kappa)));
            let quad = konst.add(&e(gx(al, 1)).mul(&e(gx(l, 1)))).sub(&e(gx(l, 1)).mul(&e(gx(al + 1, 1))));
            out.push((format!("quadratic α={al} l={l}"), quad));
        }
    }
    out
}

//! Localization of the `ε` relations at each `P_X`, and the algebra
//! `A_par` as the direct sum of its components, truncated in degree `N`.

use super::relations::{generate_epsilon_relations, EpsPoly, EpsilonRelation, Word};
use crate::algebra::{univariate_quotient, FinAlgebra};
use crate::error::{Error, Result};
use crate::group::{p1_subsets, FiniteGroup, GroupSubset};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Mat, Subspace, Vector};
use crate::partial_action::{check_unit_map_relations, PartialAction};
use crate::poly::UPoly;
use crate::Scalar;
use serde_json::json;
use std::collections::BTreeMap;

/// Isomorphism type of a localized component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Zero,
    /// The ground field.
    Scalar,
    /// `K[t]/(p)` with `p` monic of degree at least 2, coefficients low to high.
    Quotient(Vec<Scalar>),
    /// `K[t]`, stored truncated above degree `N`.
    Free,
}

fn format_poly(c: &[Scalar]) -> String {
    let mut s = String::new();
    for k in (0..c.len()).rev() {
        let a = &c[k];
        if a.is_zero() {
            continue;
        }
        let neg = a.as_rational().is_some_and(num_traits::Signed::is_negative);
        let mag = if neg { -a } else { a.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let var = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        if var.is_empty() {
            s.push_str(&mag.to_string());
        } else if mag.is_one() {
            s.push_str(&var);
        } else {
            s.push_str(&format!("({mag}){var}"));
        }
    }
    s
}

impl Structure {
    pub fn describe(&self) -> String {
        match self {
            Structure::Zero => "0".into(),
            Structure::Scalar => "K".into(),
            Structure::Quotient(p) => format!("K[t]/({})", format_poly(p)),
            Structure::Free => "K[t]".into(),
        }
    }
}

/// `Σ cofactors_i · relations_i = generator`, and the generator divides
/// every relation.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub relations: Vec<UPoly<Scalar>>,
    pub cofactors: Vec<UPoly<Scalar>>,
    pub generator: UPoly<Scalar>,
}

impl Certificate {
    pub fn verify(&self) -> bool {
        let comb = self.relations.iter().zip(&self.cofactors).fold(UPoly::zero(), |acc, (r, c)| acc.add(&r.mul(c)));
        comb == self.generator && self.relations.iter().all(|r| r.rem(&self.generator).is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct ComponentPresentation {
    pub subset: GroupSubset,
    /// The surviving generator `t = ε_b`, if any.
    pub generator: Option<usize>,
    /// `ε_b = c + d t` for every non-grouplike basis element `b`.
    pub values: Vec<(usize, Scalar, Scalar)>,
    /// The relations after substituting `ε_g ↦ [g ∈ X]`.
    pub localized: Vec<EpsPoly>,
    pub structure: Structure,
    pub certificate: Option<Certificate>,
}

impl ComponentPresentation {
    fn zero(subset: GroupSubset, localized: Vec<EpsPoly>) -> Self {
        ComponentPresentation { subset, generator: None, values: Vec::new(), localized, structure: Structure::Zero, certificate: None }
    }

    pub fn value(&self, b: usize) -> Option<(&Scalar, &Scalar)> {
        self.values.iter().find(|v| v.0 == b).map(|(_, c, d)| (c, d))
    }
}

/// The group of grouplikes, each required to be a basis element of `H`;
/// returns the basis index of every group element.
pub fn grouplike_basis(h: &HopfAlgebra) -> Result<(FiniteGroup, Vec<usize>)> {
    let (group, gl) = h.grouplike_group()?;
    let idx = gl
        .iter()
        .map(|v| match v.first() {
            Some((i, c)) if v.nnz() == 1 && c.is_one() => Ok(i),
            _ => Err(Error::UnsupportedPresentation("grouplike elements must be basis elements".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((group, idx))
}

fn push_unique(out: &mut Vec<EpsPoly>, p: EpsPoly) {
    if !p.is_zero() && !out.contains(&p) {
        out.push(p);
    }
}

/// Substitutes `ε_g ↦ [g ∈ X]` for grouplikes and reduces the remaining
/// relations to at most one generator by linear elimination. Quadratic
/// words are eliminated first, then symbols from the highest basis index
/// down, so the lowest-index symbol survives.
pub fn localize(h: &HopfAlgebra, relations: &[EpsilonRelation], x: GroupSubset) -> Result<ComponentPresentation> {
    let (group, elements) = grouplike_basis(h)?;
    let d = h.dim();
    let mut element_of = vec![None; d];
    for (g, &b) in elements.iter().enumerate() {
        element_of[b] = Some(g);
    }
    let subst = |b: usize| match element_of[b] {
        Some(g) => EpsPoly::constant(Scalar::from_int(x.contains(g) as i64)),
        None => EpsPoly::symbol(b),
    };
    let mut localized = Vec::new();
    for r in relations {
        if r.lhs.degree() > 2 || r.rhs.degree() > 2 {
            return Err(Error::UnsupportedPresentation("relation of degree > 2".into()));
        }
        push_unique(&mut localized, r.poly().substitute(&subst));
    }
    let inconsistent = || Error::InconsistentLocalization { subset: group.format_subset(x) };

    let mut polys = localized.clone();
    let mut rules: BTreeMap<usize, EpsPoly> = BTreeMap::new();
    let free = loop {
        let free: Vec<usize> = (0..d).filter(|&b| element_of[b].is_none() && !rules.contains_key(&b)).collect();
        let r = free.len();
        let pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let konst = r * r + r;
        let col = |w: &Word| match w.as_slice() {
            [] => konst,
            [i] => r * r + (r - 1 - pos[i]),
            [i, j] => pos[i] * r + pos[j],
            _ => unreachable!("degree checked"),
        };
        let sym_at = |q: usize| free[r - 1 - (q - r * r)];
        let span = Subspace::from_spanning(
            konst + 1,
            polys.iter().map(|p| Vector::from_pairs(konst + 1, p.terms().map(|(w, c)| (col(w), c.clone())))),
        );
        let mut new = BTreeMap::new();
        for (row, &p) in span.basis().iter().zip(span.pivots()) {
            if p == konst {
                return Err(inconsistent());
            }
            if p < r * r {
                continue;
            }
            let lead = row.get(p);
            let mut rhs = EpsPoly::zero();
            for (q, c) in row.iter() {
                if q == p {
                    continue;
                }
                let w = if q == konst { Vec::new() } else { vec![sym_at(q)] };
                rhs.add_term(w, -(c / &lead));
            }
            new.insert(sym_at(p), rhs);
        }
        if new.is_empty() {
            break free;
        }
        let apply = |b: usize| new.get(&b).cloned().unwrap_or_else(|| EpsPoly::symbol(b));
        for v in rules.values_mut() {
            *v = v.substitute(&apply);
        }
        let mut next = Vec::new();
        for p in &polys {
            push_unique(&mut next, p.substitute(&apply));
        }
        polys = next;
        rules.extend(new);
    };

    let value_of = |b: usize, t: Option<usize>, root: Option<&Scalar>| -> (Scalar, Scalar) {
        let p = rules.get(&b).cloned().unwrap_or_else(|| EpsPoly::symbol(b));
        let c = p.terms().find(|(w, _)| w.is_empty()).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero);
        let dd = match t {
            Some(t) => p.terms().find(|(w, _)| w.as_slice() == [t]).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero),
            None => Scalar::zero(),
        };
        match root {
            Some(z) => (&c + &(&dd * z), Scalar::zero()),
            None => (c, dd),
        }
    };
    let symbols: Vec<usize> = (0..d).filter(|&b| element_of[b].is_none()).collect();
    match free.len() {
        0 => {
            let values = symbols.iter().map(|&b| {
                let (c, dd) = value_of(b, None, None);
                (b, c, dd)
            });
            Ok(ComponentPresentation {
                subset: x,
                generator: None,
                values: values.collect(),
                localized,
                structure: Structure::Scalar,
                certificate: None,
            })
        }
        1 => {
            let t = free[0];
            let upolys: Vec<UPoly<Scalar>> = polys
                .iter()
                .map(|p| {
                    let mut c = vec![Scalar::zero(); p.degree() + 1];
                    for (w, a) in p.terms() {
                        c[w.len()] = &c[w.len()] + a;
                    }
                    UPoly::new(c)
                })
                .filter(|p| !p.is_zero())
                .collect();
            if upolys.is_empty() {
                let values = symbols.iter().map(|&b| {
                    let (c, dd) = value_of(b, Some(t), None);
                    (b, c, dd)
                });
                return Ok(ComponentPresentation {
                    subset: x,
                    generator: Some(t),
                    values: values.collect(),
                    localized,
                    structure: Structure::Free,
                    certificate: None,
                });
            }
            let mut g = UPoly::zero();
            let mut cof: Vec<UPoly<Scalar>> = Vec::with_capacity(upolys.len());
            for p in &upolys {
                let (ng, s, tt) = UPoly::ext_gcd(&g, p);
                for c in cof.iter_mut() {
                    *c = c.mul(&s);
                }
                cof.push(tt);
                g = ng;
            }
            let cert = Certificate { relations: upolys, cofactors: cof, generator: g.clone() };
            match g.degree() {
                Some(0) => Err(inconsistent()),
                Some(1) => {
                    let root = -&g.coeff(0);
                    let values = symbols.iter().map(|&b| {
                        let (c, dd) = value_of(b, Some(t), Some(&root));
                        (b, c, dd)
                    });
                    Ok(ComponentPresentation {
                        subset: x,
                        generator: None,
                        values: values.collect(),
                        localized,
                        structure: Structure::Scalar,
                        certificate: Some(cert),
                    })
                }
                _ => {
                    let values = symbols.iter().map(|&b| {
                        let (c, dd) = value_of(b, Some(t), None);
                        (b, c, dd)
                    });
                    Ok(ComponentPresentation {
                        subset: x,
                        generator: Some(t),
                        values: values.collect(),
                        localized,
                        structure: Structure::Quotient(g.coeffs().to_vec()),
                        certificate: Some(cert),
                    })
                }
            }
        }
        n => Err(Error::UnsupportedPresentation(format!(
            "{n} generators survive localization at {}",
            group.format_subset(x)
        ))),
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    pub presentation: ComponentPresentation,
    pub algebra: FinAlgebra,
    pub offset: usize,
    /// The generator in component coordinates.
    t: Option<Vector>,
}

impl Component {
    pub fn subset(&self) -> GroupSubset {
        self.presentation.subset
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.dim()
    }
}

/// `A_par(H)` truncated in degree `N`, with its canonical partial action.
#[derive(Clone, Debug)]
pub struct Apar {
    hopf: HopfAlgebra,
    truncation: usize,
    group: FiniteGroup,
    elements: Vec<usize>,
    relations: Vec<EpsilonRelation>,
    components: Vec<Component>,
    algebra: FinAlgebra,
    eps: Vec<Vector>,
    action: PartialAction,
}

/// `h · (f_1 ⋯ f_m)` for all basis `h`, computed as
/// `(h_1 · f_1)(h_2 · (f_2 ⋯ f_m))` with `h · 1 = ε_h` and
/// `h · ε_k = ε_{h_1 k} ε_{h_2}`.
struct Evaluator<'a> {
    h: &'a HopfAlgebra,
    a: &'a FinAlgebra,
    eps: &'a [Vector],
    act_sym: Vec<Vec<Vector>>,
}

impl<'a> Evaluator<'a> {
    fn new(h: &'a HopfAlgebra, a: &'a FinAlgebra, eps: &'a [Vector]) -> Self {
        let d = h.dim();
        let eps_of = |v: &Vector| Vector::sum_of(a.dim(), v.iter().map(|(i, c)| (c.clone(), eps[i].clone())));
        let act_sym = (0..d)
            .map(|i| {
                let sw = h.sweedler(i);
                (0..d)
                    .map(|k| {
                        Vector::sum_of(
                            a.dim(),
                            sw.iter().map(|(c, l, r)| (c.clone(), a.mul(&eps_of(h.algebra().mul_basis(*l, k)), &eps[*r]))),
                        )
                    })
                    .collect()
            })
            .collect();
        Evaluator { h, a, eps, act_sym }
    }

    fn act1(&self, i: usize, f: &EpsPoly) -> Vector {
        Vector::sum_of(
            self.a.dim(),
            f.terms().map(|(w, c)| match w.as_slice() {
                [] => (c.clone(), self.eps[i].clone()),
                [k] => (c.clone(), self.act_sym[i][*k].clone()),
                _ => panic!("factor must be linear"),
            }),
        )
    }

    fn act_word(&self, factors: &[EpsPoly]) -> Vec<Vector> {
        let d = self.h.dim();
        let mut level: Vec<Vector> = self.eps.to_vec();
        for f in factors.iter().rev() {
            let acts: Vec<Vector> = (0..d).map(|i| self.act1(i, f)).collect();
            level = (0..d)
                .map(|i| {
                    Vector::sum_of(
                        self.a.dim(),
                        self.h.sweedler(i).into_iter().map(|(c, l, r)| (c, self.a.mul(&acts[l], &level[r]))),
                    )
                })
                .collect();
        }
        level
    }
}

impl Apar {
    pub fn build(h: &HopfAlgebra, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::TruncationTooSmall(n));
        }
        let (group, elements) = grouplike_basis(h)?;
        let subsets = p1_subsets(&group)?;
        let relations = generate_epsilon_relations(h);
        let mut presentations = Vec::with_capacity(subsets.len());
        for &x in &subsets {
            let p = match localize(h, &relations, x) {
                Ok(p) => p,
                Err(Error::InconsistentLocalization { .. }) => ComponentPresentation::zero(x, Vec::new()),
                Err(e) => return Err(e),
            };
            presentations.push(p);
        }

        let mut parts = Vec::with_capacity(presentations.len());
        let mut ts = Vec::with_capacity(presentations.len());
        for p in &presentations {
            let name = format!("P_{}", group.format_subset(p.subset));
            let gen_label = p.generator.map(|b| format!("ε_{{{}}}", h.label(b))).unwrap_or_default();
            let label = |k: usize| match k {
                0 => name.clone(),
                1 => format!("{name}{gen_label}"),
                _ => format!("{name}({gen_label})^{k}"),
            };
            let (alg, t) = match &p.structure {
                Structure::Zero => (FinAlgebra::zero_algebra(), None),
                Structure::Scalar => (FinAlgebra::ground(), None),
                Structure::Quotient(q) => (univariate_quotient(Some(q), 0, "t"), Some(1)),
                Structure::Free => {
                    let alg = univariate_quotient(None, n, "t");
                    let deg = (0..=n).collect();
                    (alg.with_grading(deg, n), Some(1))
                }
            };
            let labels = (0..alg.dim()).map(label).collect();
            ts.push(t.map(|i| alg.basis(i)));
            parts.push(alg.relabel(labels));
        }
        let (algebra, offsets) = FinAlgebra::direct_sum(&parts);
        let da = algebra.dim();
        let components: Vec<Component> = presentations
            .into_iter()
            .zip(parts)
            .zip(offsets)
            .zip(ts)
            .map(|(((presentation, algebra), offset), t)| Component { presentation, algebra, offset, t })
            .collect();

        let mut element_of = vec![None; h.dim()];
        for (g, &b) in elements.iter().enumerate() {
            element_of[b] = Some(g);
        }
        let eps: Vec<Vector> = (0..h.dim())
            .map(|b| {
                Vector::sum_of(
                    da,
                    components.iter().filter(|c| c.dim() > 0).map(|c| {
                        let one = c.algebra.unit().clone();
                        let v = match element_of[b] {
                            Some(g) => {
                                if c.subset().contains(g) {
                                    one
                                } else {
                                    Vector::zeros(c.dim())
                                }
                            }
                            None => {
                                let (k, dd) = c.presentation.value(b).expect("every symbol has a value");
                                let mut v = one.scale(k);
                                if let Some(t) = &c.t {
                                    v = v.axpy(dd, t);
                                }
                                v
                            }
                        };
                        (Scalar::one(), v.embed(da, c.offset))
                    }),
                )
            })
            .collect();

        let mut apar = Apar {
            hopf: h.clone(),
            truncation: n,
            group,
            elements,
            relations,
            components,
            algebra: algebra.clone(),
            eps,
            action: PartialAction::trivial(h.clone(), algebra.clone()),
        };
        let ev = Evaluator::new(h, &algebra, &apar.eps);
        let mut act = vec![Vec::with_capacity(da); h.dim()];
        for j in 0..da {
            let images = ev.act_word(&apar.word_of(j));
            for (i, v) in images.into_iter().enumerate() {
                act[i].push(v);
            }
        }
        for c in apar.components.iter().filter(|c| c.presentation.structure == Structure::Free) {
            let word = apar.word(c.subset(), n + 1);
            if let Some(i) = ev.act_word(&word).iter().position(|v| !v.is_zero()) {
                return Err(Error::TruncationNotStable { h: h.label(i).to_string() });
            }
        }
        apar.action = PartialAction::new(h.clone(), algebra, act)?;
        Ok(apar)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Basis index in `H` of each group element.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn relations(&self) -> &[EpsilonRelation] {
        &self.relations
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, x: GroupSubset) -> &Component {
        &self.components[x.p1_index()]
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn action(&self) -> &PartialAction {
        &self.action
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `ε_b` as an element of `A`.
    pub fn eps(&self, b: usize) -> &Vector {
        &self.eps[b]
    }

    pub fn eps_of(&self, v: &Vector) -> Vector {
        Vector::sum_of(self.dim(), v.iter().map(|(i, c)| (c.clone(), self.eps[i].clone())))
    }

    /// `P_X` as an element of `A`.
    pub fn p(&self, x: GroupSubset) -> Vector {
        let c = self.component(x);
        c.algebra.unit().embed(self.dim(), c.offset)
    }

    /// `P_X t^i` written as a product of linear factors in the `ε_b`.
    pub fn word(&self, x: GroupSubset, i: usize) -> Vec<EpsPoly> {
        let mut w: Vec<EpsPoly> = (1..self.group.order())
            .map(|g| {
                let e = EpsPoly::symbol(self.elements[g]);
                if x.contains(g) {
                    e
                } else {
                    EpsPoly::one().sub(&e)
                }
            })
            .collect();
        if let Some(t) = self.component(x).presentation.generator {
            w.extend(std::iter::repeat_n(EpsPoly::symbol(t), i));
        }
        w
    }

    /// The word of a basis element of `A`.
    pub fn word_of(&self, j: usize) -> Vec<EpsPoly> {
        let c = self.components.iter().find(|c| c.range().contains(&j)).expect("index in range");
        self.word(c.subset(), j - c.offset)
    }

    /// Evaluates a polynomial in the `ε_b` inside `A`.
    pub fn evaluate(&self, p: &EpsPoly) -> Vector {
        Vector::sum_of(
            self.dim(),
            p.terms().map(|(w, c)| {
                let v = w.iter().fold(self.algebra.unit().clone(), |acc, &b| self.algebra.mul(&acc, &self.eps[b]));
                (c.clone(), v)
            }),
        )
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.hopf.dim()).map(|i| self.hopf.label(i).to_string()).collect()
    }

    /// First defining relation that fails in `A`.
    pub fn relations_witness(&self) -> Option<String> {
        let labels = self.labels();
        self.relations.iter().find(|r| !self.evaluate(&r.poly()).is_zero()).map(|r| r.format(&labels))
    }

    /// Checks `h · (ε_k ε_l) = ε_{h_1 k} ε_{h_2 l} ε_{h_3}` on all basis triples.
    pub fn action_formula_witness(&self) -> Option<String> {
        let h = &self.hopf;
        let a = &self.algebra;
        let d = h.dim();
        let mut delta2 = Vec::with_capacity(d);
        for i in 0..d {
            let mut terms = Vec::new();
            for (c, l, r) in h.sweedler(i) {
                for (c2, m, r2) in h.sweedler(r) {
                    terms.push((&c * &c2, l, m, r2));
                }
            }
            delta2.push(terms);
        }
        for i in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let lhs = self.action.act_h(i, &a.mul(&self.eps[k], &self.eps[l]));
                    let rhs = Vector::sum_of(
                        a.dim(),
                        delta2[i].iter().map(|(c, p, q, r)| {
                            let u = self.eps_of(h.algebra().mul_basis(*p, k));
                            let v = self.eps_of(h.algebra().mul_basis(*q, l));
                            (c.clone(), a.mul_all(&[&u, &v, &self.eps[*r]]))
                        }),
                    );
                    if lhs != rhs {
                        return Some(format!("({}, {}, {})", h.label(i), h.label(k), h.label(l)));
                    }
                }
            }
        }
        None
    }

    /// The algebra map `A -> B` with `ε_h ↦ e(h)`, for `e` satisfying the
    /// defining relations; it must also vanish on the truncation ideal.
    pub fn induced_map(&self, e: &Mat, target: &FinAlgebra) -> Result<Mat> {
        let h = &self.hopf;
        if e.ncols() != h.dim() || e.nrows() != target.dim() {
            return Err(Error::DimensionMismatch("generator map has the wrong shape".into()));
        }
        for c in check_unit_map_relations(h, target, e) {
            if !c.passed {
                let w = c.witness.unwrap_or_default();
                let inner = w.trim_start_matches('(').trim_end_matches(')');
                let (hh, kk) = inner.split_once(", ").unwrap_or((inner, "-"));
                return Err(Error::UniversalPropertyViolated { h: hh.into(), k: kk.into(), relation: c.name });
            }
        }
        let image_of = |factors: &[EpsPoly]| {
            factors.iter().fold(target.unit().clone(), |acc, f| {
                let v = Vector::sum_of(
                    target.dim(),
                    f.terms().map(|(w, c)| match w.as_slice() {
                        [] => (c.clone(), target.unit().clone()),
                        [k] => (c.clone(), e.col(*k).clone()),
                        _ => unreachable!(),
                    }),
                );
                target.mul(&acc, &v)
            })
        };
        for c in self.components.iter().filter(|c| c.presentation.structure == Structure::Free) {
            if !image_of(&self.word(c.subset(), self.truncation + 1)).is_zero() {
                return Err(Error::PreconditionViolated(format!(
                    "map does not vanish on the truncation ideal of {}",
                    self.group.format_subset(c.subset())
                )));
            }
        }
        let cols = (0..self.dim()).map(|j| image_of(&self.word_of(j))).collect();
        Ok(Mat::from_columns(target.dim(), cols))
    }

    pub fn component_report(&self) -> serde_json::Value {
        let labels = self.labels();
        let comps: Vec<serde_json::Value> = self
            .components
            .iter()
            .map(|c| {
                let p = &c.presentation;
                let gen = p.generator.map(|b| format!("ε_{{{}}}", labels[b]));
                let values: Vec<String> = p
                    .values
                    .iter()
                    .map(|(b, k, dd)| {
                        let mut rhs = EpsPoly::constant(k.clone());
                        if let Some(t) = p.generator {
                            rhs = rhs.add(&EpsPoly::symbol(t).scale(dd));
                        }
                        format!("ε_{{{}}} = {}", labels[*b], rhs.format(&labels))
                    })
                    .collect();
                json!({
                    "subset": self.group.format_subset(p.subset),
                    "structure": p.structure.describe(),
                    "dim": c.dim(),
                    "generator": gen,
                    "values": if p.structure == Structure::Zero { Vec::new() } else { values },
                    "certificate": p.certificate.as_ref().map(|c| c.verify()),
                    "basis": c.algebra.labels(),
                })
            })
            .collect();
        json!({ "truncation": self.truncation, "dim": self.dim(), "components": comps })
    }

    /// A single-line description such as `6 x K[t]/(t^2), 1 x K[t], 1 x K`.
    pub fn structure_counts(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for c in &self.components {
            *m.entry(c.presentation.structure.describe()).or_insert(0) += 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{all_passed, GroupDatum};

    fn rank_one(kappa: i64) -> HopfAlgebra {
        let d = GroupDatum::cyclic(FiniteGroup::cyclic(4), Scalar::from_int(-1), 1, Scalar::from_int(kappa)).unwrap();
        HopfAlgebra::rank_one(&d).unwrap()
    }

    #[test]
    fn group_algebra_components_are_scalars() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(4));
        let a = Apar::build(&h, 1).unwrap();
        assert_eq!(a.dim(), 8);
        assert!(a.components().iter().all(|c| c.presentation.structure == Structure::Scalar));
        assert!(all_passed(&a.action().check()));
    }

    #[test]
    fn nilpotent_localization_at_identity() {
        let h = rank_one(0);
        let rels = generate_epsilon_relations(&h);
        let p = localize(&h, &rels, GroupSubset::singleton(0)).unwrap();
        assert_eq!(p.generator, Some(4));
        assert_eq!(p.structure, Structure::Quotient(vec![Scalar::zero(), Scalar::zero(), Scalar::one()]));
        assert_eq!(p.value(7), Some((&Scalar::zero(), &Scalar::one())));
        assert_eq!(p.value(5), Some((&Scalar::zero(), &Scalar::zero())));
        assert!(p.certificate.unwrap().verify());
    }

    #[test]
    fn nonnilpotent_square_is_minus_one() {
        let h = rank_one(1);
        let rels = generate_epsilon_relations(&h);
        let p = localize(&h, &rels, GroupSubset::singleton(0)).unwrap();
        assert_eq!(p.structure.describe(), "K[t]/(t^2 + 1)");
    }

    #[test]
    fn free_component_and_dims() {
        let h = rank_one(0);
        let a = Apar::build(&h, 3).unwrap();
        assert_eq!(a.dim(), 17);
        let x = GroupSubset::from_elements([0, 2]);
        assert_eq!(a.component(x).presentation.structure, Structure::Free);
        assert_eq!(a.component(x).dim(), 4);
        assert_eq!(a.relations_witness(), None);
        assert!(all_passed(&a.action().check()));
        assert_eq!(a.action_formula_witness(), None);
        assert_eq!(Apar::build(&h, 0).unwrap_err().kind(), "TruncationTooSmall");
    }

    #[test]
    fn canonical_unit_map_is_eps() {
        let h = rank_one(1);
        let a = Apar::build(&h, 2).unwrap();
        for i in 0..h.dim() {
            assert_eq!(a.action().unit_image(i), *a.eps(i));
        }
    }
}

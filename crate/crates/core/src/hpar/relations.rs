//! Formal relations among the symbols `ε_b`, `b` a basis element of `H`.

use crate::hopf::HopfAlgebra;
use crate::linalg::{Subspace, Vector};
use crate::Scalar;
use num_traits::Signed;
use serde::Serialize;
use std::collections::BTreeMap;

/// A word in the symbols `ε_b`; the empty word is `1`.
pub type Word = Vec<usize>;

/// A noncommutative polynomial in the `ε_b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EpsPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl EpsPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn symbol(b: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![b], Scalar::one());
        p
    }

    /// `ε_v = Σ v_i ε_i`.
    pub fn linear(v: &Vector) -> Self {
        let mut p = Self::zero();
        for (i, c) in v.iter() {
            p.add_term(vec![i], c.clone());
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.get(&w).map_or(c.clone(), |e| e + &c);
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        let mut p = Self::zero();
        for (w, c) in &self.terms {
            p.add_term(w.clone(), c * a);
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend(v);
                p.add_term(w, a * b);
            }
        }
        p
    }

    /// Replaces every symbol by a polynomial.
    pub fn substitute(&self, f: &impl Fn(usize) -> EpsPoly) -> Self {
        let mut p = Self::zero();
        for (w, c) in &self.terms {
            let t = w.iter().fold(Self::constant(c.clone()), |acc, &b| acc.mul(&f(b)));
            p = p.add(&t);
        }
        p
    }

    pub fn format(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(w, _)| (w.len(), (*w).clone()));
        let mut s = String::new();
        for (k, (w, c)) in terms.into_iter().enumerate() {
            let word: String = w.iter().map(|&b| format!("ε_{{{}}}", labels[b])).collect();
            let neg = c.as_rational().is_some_and(|r| r.is_negative());
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (word.is_empty(), mag.is_one()) {
                (true, _) => s.push_str(&mag.to_string()),
                (false, true) => s.push_str(&word),
                (false, false) => s.push_str(&format!("({mag}){word}")),
            }
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    /// `ε_1 = 1`
    Unit,
    /// `ε_h = ε_{h1} ε_{h2}`
    Coproduct,
    /// `ε_{h1} ε_{h2 k} = ε_{h1 k} ε_{h2}`
    Twist,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonRelation {
    pub kind: RelationKind,
    pub h: Option<usize>,
    pub k: Option<usize>,
    pub lhs: EpsPoly,
    pub rhs: EpsPoly,
}

impl EpsilonRelation {
    /// `lhs - rhs`.
    pub fn poly(&self) -> EpsPoly {
        self.lhs.sub(&self.rhs)
    }

    pub fn format(&self, labels: &[String]) -> String {
        format!("{} = {}", self.lhs.format(labels), self.rhs.format(labels))
    }
}

/// The defining relations of `A_par(H)` at all basis elements and pairs.
pub fn generate_epsilon_relations(h: &HopfAlgebra) -> Vec<EpsilonRelation> {
    let d = h.dim();
    let mut out = vec![EpsilonRelation {
        kind: RelationKind::Unit,
        h: None,
        k: None,
        lhs: EpsPoly::linear(h.unit()),
        rhs: EpsPoly::one(),
    }];
    for i in 0..d {
        let rhs = h.sweedler(i).into_iter().fold(EpsPoly::zero(), |acc, (c, l, r)| {
            acc.add(&EpsPoly::symbol(l).mul(&EpsPoly::symbol(r)).scale(&c))
        });
        out.push(EpsilonRelation { kind: RelationKind::Coproduct, h: Some(i), k: None, lhs: EpsPoly::symbol(i), rhs });
    }
    for i in 0..d {
        let sw = h.sweedler(i);
        for k in 0..d {
            let mut lhs = EpsPoly::zero();
            let mut rhs = EpsPoly::zero();
            for (c, l, r) in &sw {
                let rk = EpsPoly::linear(h.algebra().mul_basis(*r, k));
                let lk = EpsPoly::linear(h.algebra().mul_basis(*l, k));
                lhs = lhs.add(&EpsPoly::symbol(*l).mul(&rk).scale(c));
                rhs = rhs.add(&lk.mul(&EpsPoly::symbol(*r)).scale(c));
            }
            out.push(EpsilonRelation { kind: RelationKind::Twist, h: Some(i), k: Some(k), lhs, rhs });
        }
    }
    out
}

/// Coordinates of polynomials of degree at most 2 in `d` symbols.
struct WordIndex {
    d: usize,
}

impl WordIndex {
    fn dim(&self) -> usize {
        1 + self.d + self.d * self.d
    }

    fn index(&self, w: &Word) -> usize {
        match w.as_slice() {
            [] => 0,
            [i] => 1 + i,
            [i, j] => 1 + self.d + i * self.d + j,
            _ => panic!("word of degree > 2"),
        }
    }

    fn vector(&self, p: &EpsPoly) -> Vector {
        Vector::from_pairs(self.dim(), p.terms().map(|(w, c)| (self.index(w), c.clone())))
    }
}

/// Whether `target` is a linear combination of the given relations
/// (all of degree at most 2).
pub fn linearly_implied(d: usize, relations: &[EpsilonRelation], target: &EpsPoly) -> bool {
    let wi = WordIndex { d };
    let span = Subspace::from_spanning(wi.dim(), relations.iter().map(|r| wi.vector(&r.poly())));
    span.contains(&wi.vector(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hopf::GroupDatum;

    fn rank_one(kappa: i64) -> HopfAlgebra {
        let d = GroupDatum::cyclic(FiniteGroup::cyclic(4), Scalar::from_int(-1), 1, Scalar::from_int(kappa)).unwrap();
        HopfAlgebra::rank_one(&d).unwrap()
    }

    #[test]
    fn grouplike_idempotency() {
        let h = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
        let rels = generate_epsilon_relations(&h);
        let r = rels.iter().find(|r| r.kind == RelationKind::Coproduct && r.h == Some(1)).unwrap();
        assert_eq!(r.rhs, EpsPoly::symbol(1).mul(&EpsPoly::symbol(1)));
    }

    #[test]
    fn coproduct_instance_at_x() {
        let h = rank_one(0);
        let rels = generate_epsilon_relations(&h);
        let r = rels.iter().find(|r| r.kind == RelationKind::Coproduct && r.h == Some(4)).unwrap();
        let expect = EpsPoly::symbol(4).mul(&EpsPoly::symbol(1)).add(&EpsPoly::symbol(0).mul(&EpsPoly::symbol(4)));
        assert_eq!(r.rhs, expect);
    }

    #[test]
    fn formatting() {
        let h = rank_one(0);
        let labels: Vec<String> = (0..8).map(|i| h.label(i).to_string()).collect();
        let p = EpsPoly::symbol(4).sub(&EpsPoly::one()).add(&EpsPoly::symbol(1).mul(&EpsPoly::symbol(5)));
        assert_eq!(p.format(&labels), "-1 + ε_{x} + ε_{g}ε_{gx}");
    }
}

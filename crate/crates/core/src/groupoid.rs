//! The groupoid of a finite group acting partially on `P_1(G)`, its algebra,
//! and the decomposition of that algebra into matrix algebras over group
//! algebras of stabilizers.

use crate::algebra::FinAlgebra;
use crate::error::Result;
use crate::group::{act_partial, orbit_decomposition, p1_subsets, FiniteGroup, GroupSubset, OrbitDecomposition};
use crate::linalg::{Mat, Vector};
use serde::Serialize;
use std::collections::HashMap;

/// An arrow `(X, g)` with `g^-1 ∈ X`, from `X` to `gX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: GroupSubset,
    pub g: usize,
}

#[derive(Clone, Debug)]
pub struct Groupoid {
    group: FiniteGroup,
    objects: Vec<GroupSubset>,
    arrows: Vec<Arrow>,
    index: HashMap<Arrow, usize>,
    orbits: OrbitDecomposition,
}

impl Groupoid {
    /// Objects in mask order; arrows ordered by source, then by `g`.
    pub fn build(group: &FiniteGroup) -> Result<Self> {
        let objects = p1_subsets(group)?;
        let mut arrows = Vec::new();
        for &x in &objects {
            for g in 0..group.order() {
                if x.contains(group.inv(g)) {
                    arrows.push(Arrow { source: x, g });
                }
            }
        }
        let index = arrows.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let orbits = orbit_decomposition(group)?;
        let gd = Groupoid { group: group.clone(), objects, arrows, index, orbits };
        if let Some(w) = gd.axiom_witness() {
            panic!("groupoid axiom fails: {w}");
        }
        Ok(gd)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn objects(&self) -> &[GroupSubset] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, a: Arrow) -> Option<usize> {
        self.index.get(&a).copied()
    }

    pub fn target(&self, a: Arrow) -> GroupSubset {
        act_partial(&self.group, a.g, a.source).expect("arrows are defined")
    }

    pub fn identity(&self, x: GroupSubset) -> Arrow {
        Arrow { source: x, g: 0 }
    }

    pub fn inverse(&self, a: Arrow) -> Arrow {
        Arrow { source: self.target(a), g: self.group.inv(a.g) }
    }

    /// `left ∘ right`, defined when the source of `left` is the target of `right`.
    pub fn compose(&self, left: Arrow, right: Arrow) -> Option<Arrow> {
        (left.source == self.target(right)).then(|| Arrow { source: right.source, g: self.group.mul(left.g, right.g) })
    }

    pub fn arrow_label(&self, a: Arrow) -> String {
        format!("({}, {})", self.group.format_subset(a.source), self.group.label(a.g))
    }

    /// Identity, inverse and associativity laws over all arrows.
    pub fn axiom_witness(&self) -> Option<String> {
        for &a in &self.arrows {
            if !self.index.contains_key(&a) || !self.index.contains_key(&self.inverse(a)) {
                return Some(format!("inverse of {} is not an arrow", self.arrow_label(a)));
            }
            let t = self.target(a);
            if self.compose(a, self.identity(a.source)) != Some(a) || self.compose(self.identity(t), a) != Some(a) {
                return Some(format!("identity law fails at {}", self.arrow_label(a)));
            }
            if self.compose(self.inverse(a), a) != Some(self.identity(a.source))
                || self.compose(a, self.inverse(a)) != Some(self.identity(t))
            {
                return Some(format!("inverse law fails at {}", self.arrow_label(a)));
            }
        }
        for &a in &self.arrows {
            for &b in &self.arrows {
                let Some(ab) = self.compose(a, b) else { continue };
                for &c in &self.arrows {
                    if let Some(bc) = self.compose(b, c) {
                        if self.compose(ab, c) != self.compose(a, bc) {
                            return Some(format!(
                                "associativity fails at ({}, {}, {})",
                                self.arrow_label(a),
                                self.arrow_label(b),
                                self.arrow_label(c)
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    /// Connected components, computed from arrows alone, in the order of
    /// their smallest object.
    pub fn components(&self) -> Vec<Vec<GroupSubset>> {
        let pos: HashMap<GroupSubset, usize> = self.objects.iter().enumerate().map(|(i, x)| (*x, i)).collect();
        let mut parent: Vec<usize> = (0..self.objects.len()).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        for &a in &self.arrows {
            let (s, t) = (find(&mut parent, pos[&a.source]), find(&mut parent, pos[&self.target(a)]));
            parent[s.max(t)] = s.min(t);
        }
        let mut comps: Vec<Vec<GroupSubset>> = Vec::new();
        let mut root_to_comp = HashMap::new();
        for (i, &x) in self.objects.iter().enumerate() {
            let r = find(&mut parent, i);
            let k = *root_to_comp.entry(r).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[k].push(x);
        }
        comps
    }

    /// Whether the components agree with the orbit classes of `P_1(G)`.
    pub fn components_match_orbits(&self) -> bool {
        let comps = self.components();
        comps.len() == self.orbits.classes.len()
            && comps.iter().zip(&self.orbits.classes).all(|(c, o)| *c == o.members)
    }

    pub fn orbits(&self) -> &OrbitDecomposition {
        &self.orbits
    }

    /// The groupoid algebra: arrows multiply by composition, or to zero.
    pub fn algebra(&self) -> FinAlgebra {
        let d = self.arrows.len();
        let mut mul = vec![vec![Vector::zeros(d); d]; d];
        for (i, &a) in self.arrows.iter().enumerate() {
            for (j, &b) in self.arrows.iter().enumerate() {
                if let Some(c) = self.compose(a, b) {
                    mul[i][j] = Vector::basis(d, self.index[&c]);
                }
            }
        }
        let unit = Vector::from_pairs(
            d,
            self.objects.iter().map(|&x| (self.index[&self.identity(x)], crate::Scalar::one())),
        );
        let labels = self.arrows.iter().map(|&a| self.arrow_label(a)).collect();
        FinAlgebra::new(labels, mul, unit).expect("consistent dims")
    }

    pub fn dim(&self) -> usize {
        self.arrows.len()
    }

    /// The matrix-algebra form of the groupoid algebra, with an explicit
    /// isomorphism checked on all basis pairs.
    pub fn decompose_matrix_form(&self) -> MatrixForm {
        let g = &self.group;
        let mut blocks = Vec::new();
        let mut labels = Vec::new();
        let mut target_index: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
        for (bi, class) in self.orbits.classes.iter().enumerate() {
            let rep = class.representative;
            // connecting element: smallest c with c^-1 ∈ rep and c rep = Y
            let connecting: Vec<usize> = class
                .members
                .iter()
                .map(|&y| (0..g.order()).find(|&c| act_partial(g, c, rep) == Some(y)).expect("same orbit"))
                .collect();
            let stab: Vec<usize> = class.stabilizer.iter().collect();
            for r in 0..class.members.len() {
                for s in 0..class.members.len() {
                    for &h in &stab {
                        target_index.insert((bi, r, s, h), labels.len());
                        labels.push(format!("E{}{}⊗{}", r + 1, s + 1, g.label(h)));
                    }
                }
            }
            blocks.push(MatrixBlock {
                objects: class.members.clone(),
                representative: rep,
                m: class.members.len(),
                stabilizer: class.stabilizer,
                stabilizer_order: stab.len(),
                connecting,
            });
        }
        let d = labels.len();
        let mut mul = vec![vec![Vector::zeros(d); d]; d];
        let mut unit = Vector::zeros(d);
        for (&(b, r, s, h), &i) in &target_index {
            if r == s && h == 0 {
                unit = unit.add(&Vector::basis(d, i));
            }
            for (&(b2, r2, s2, h2), &j) in &target_index {
                if b == b2 && s == r2 {
                    mul[i][j] = Vector::basis(d, target_index[&(b, r, s2, g.mul(h, h2))]);
                }
            }
        }
        let target = FinAlgebra::new(labels, mul, unit).expect("consistent dims");
        let pos_in_block: HashMap<GroupSubset, (usize, usize)> = blocks
            .iter()
            .enumerate()
            .flat_map(|(bi, b)| b.objects.iter().enumerate().map(move |(r, &y)| (y, (bi, r))))
            .collect();
        let cols = self
            .arrows
            .iter()
            .map(|&a| {
                let (bi, s) = pos_in_block[&a.source];
                let (_, r) = pos_in_block[&self.target(a)];
                let blk = &blocks[bi];
                let h = g.mul(g.inv(blk.connecting[r]), g.mul(a.g, blk.connecting[s]));
                debug_assert!(blk.stabilizer.contains(h));
                Vector::basis(d, target_index[&(bi, r, s, h)])
            })
            .collect();
        let iso = Mat::from_columns(d, cols);
        let source = self.algebra();
        let multiplicative = source.multiplicativity_witness(&iso, &target).is_none()
            && iso.apply(source.unit()).ok().as_ref() == Some(target.unit());
        let bijective = iso.nrows() == iso.ncols() && iso.rank() == d;
        MatrixForm { blocks, target, iso, multiplicative, bijective }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixBlock {
    pub objects: Vec<GroupSubset>,
    pub representative: GroupSubset,
    pub m: usize,
    pub stabilizer: GroupSubset,
    pub stabilizer_order: usize,
    /// `c_Y` for each object `Y`, with `c_Y X_i = Y`.
    pub connecting: Vec<usize>,
}

impl MatrixBlock {
    pub fn dim(&self) -> usize {
        self.m * self.m * self.stabilizer_order
    }

    pub fn describe(&self) -> String {
        match self.stabilizer_order {
            1 => format!("Mat_{}(K)", self.m),
            k => format!("Mat_{}(K[G_{k}])", self.m),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixForm {
    pub blocks: Vec<MatrixBlock>,
    /// `⊕ Mat_m(K G_i)` on the basis `E_rs ⊗ h`.
    pub target: FinAlgebra,
    /// Groupoid algebra to `target`.
    pub iso: Mat,
    pub multiplicative: bool,
    pub bijective: bool,
}

impl MatrixForm {
    pub fn verified(&self) -> bool {
        self.multiplicative && self.bijective
    }

    pub fn report(&self, gd: &Groupoid) -> serde_json::Value {
        let g = gd.group();
        serde_json::json!({
            "components": self.blocks.iter().map(|b| serde_json::json!({
                "objects": b.objects.iter().map(|&x| g.format_subset(x)).collect::<Vec<_>>(),
                "m": b.m,
                "stabilizer": g.format_subset(b.stabilizer),
                "stabilizer_order": b.stabilizer_order,
                "block": b.describe(),
                "dim": b.dim(),
            })).collect::<Vec<_>>(),
            "dim": gd.dim(),
            "isomorphism_verified": self.verified(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_arrows() {
        let g = FiniteGroup::cyclic(2);
        let gd = Groupoid::build(&g).unwrap();
        assert_eq!(gd.dim(), 3);
        let eg = GroupSubset::full(2);
        let a = Arrow { source: eg, g: 1 };
        assert_eq!(gd.compose(a, a), Some(gd.identity(eg)));
        assert_eq!(gd.components().len(), 2);
    }

    #[test]
    fn z4_counts() {
        let g = FiniteGroup::cyclic(4);
        let gd = Groupoid::build(&g).unwrap();
        assert_eq!(gd.dim(), 20);
        let sizes: Vec<usize> = gd.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 2, 1, 3, 1]);
        assert!(gd.components_match_orbits());
        let mf = gd.decompose_matrix_form();
        let shape: Vec<(usize, usize)> = mf.blocks.iter().map(|b| (b.m, b.stabilizer_order)).collect();
        assert_eq!(shape, vec![(1, 1), (2, 1), (1, 2), (3, 1), (1, 4)]);
        assert!(mf.verified());
        assert_eq!(gd.algebra().associativity_witness(), None);
    }

    #[test]
    fn trivial_group() {
        let gd = Groupoid::build(&FiniteGroup::cyclic(1)).unwrap();
        assert_eq!(gd.dim(), 1);
        assert!(gd.decompose_matrix_form().verified());
    }

    #[test]
    fn block_dimensions_sum() {
        for spec in ["klein", "s3", "z6", "d4", "q8"] {
            let g = FiniteGroup::builtin(spec).unwrap();
            let gd = Groupoid::build(&g).unwrap();
            let mf = gd.decompose_matrix_form();
            assert_eq!(mf.blocks.iter().map(|b| b.dim()).sum::<usize>(), gd.dim(), "{spec}");
            assert!(gd.components_match_orbits(), "{spec}");
        }
    }
}

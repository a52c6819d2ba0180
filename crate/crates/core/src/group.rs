//! Finite groups given by multiplication tables, and the partial action of a
//! group on the subsets that contain its identity.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Default bound on the group order accepted by [`p1_subsets`].
pub const DEFAULT_MAX_ORDER: usize = 16;

/// The bound on group orders, overridable through `HOPFPAR_MAX_ORDER`.
pub fn max_order() -> usize {
    std::env::var("HOPFPAR_MAX_ORDER")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a table whose element 0 must be the identity.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        if n > 64 {
            return Err(Error::OrderTooLarge { order: n, bound: 64 });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadTable(format!("row {i} has length {}, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::BadTable(format!("entry {x} in row {i} is out of range")));
            }
        }
        // every row must be a bijection for left inverses to exist
        for (i, row) in table.iter().enumerate() {
            let distinct: BTreeSet<_> = row.iter().collect();
            if distinct.len() != n {
                return Err(Error::NoInverse { element: i });
            }
        }
        for x in 0..n {
            if table[0][x] != x || table[x][0] != x {
                return Err(Error::NoIdentity { witness: x });
            }
        }
        let mut inv = vec![0; n];
        for x in 0..n {
            let y = (0..n).find(|&y| table[x][y] == 0).expect("bijective row hits 0");
            if table[y][x] != 0 {
                return Err(Error::NoInverse { element: x });
            }
            inv[x] = y;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => return Err(Error::BadTable(format!("{} labels for order {n}", l.len()))),
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup { table, inv, labels })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let g: GroupJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("group JSON: {e}")))?;
        if g.order != g.table.len() {
            return Err(Error::BadTable(format!("order {} but table has {} rows", g.order, g.table.len())));
        }
        Self::from_table(g.table, g.labels)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GroupJson { order: self.order(), table: self.table.clone(), labels: Some(self.labels.clone()) })
            .expect("group serializes")
    }

    /// Z_n with labels `e, g, g^2, ...`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_table(table, Some(labels)).expect("cyclic table is a group")
    }

    pub fn klein_four() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        Self::from_table(table, Some(labels)).expect("Klein table is a group")
    }

    /// Dihedral group of order `2n`; element `r^i s^j` has index `i + n*j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let idx = |i: usize, j: usize| i % n + n * (j % 2);
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for (x, row) in table.iter_mut().enumerate() {
            let (i, a) = (x % n, x / n);
            for (y, cell) in row.iter_mut().enumerate() {
                let (k, b) = (y % n, y / n);
                // r^i s^a r^k s^b = r^(i +- k) s^(a+b)
                let e = if a == 0 { i + k } else { i + n - k };
                *cell = idx(e, a + b);
            }
        }
        let labels = (0..2 * n)
            .map(|x| {
                let (i, j) = (x % n, x / n);
                let r = match i {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{i}"),
                };
                match (r.is_empty(), j) {
                    (true, 0) => "e".to_string(),
                    (_, 0) => r,
                    _ => format!("{r}s"),
                }
            })
            .collect();
        Self::from_table(table, Some(labels)).expect("dihedral table is a group")
    }

    pub fn symmetric3() -> Self {
        Self::dihedral(3)
    }

    /// Quaternion group; indices `1,-1,i,-i,j,-j,k,-k`.
    pub fn quaternion() -> Self {
        // unit u in {1,i,j,k} = 0..3 with sign; product table of units
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let mut table = vec![vec![0; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let (u, su) = (x / 2, x % 2 == 1);
                let (v, sv) = (y / 2, y % 2 == 1);
                let (w, sw) = UNIT[u][v];
                let neg = su ^ sv ^ sw;
                table[x][y] = 2 * w + neg as usize;
            }
        }
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
        Self::from_table(table, Some(labels)).expect("quaternion table is a group")
    }

    /// Parses `cyclic:n`, `klein`, `s3`, `dihedral:n`, `d4`, `q8`, `trivial`.
    pub fn builtin(spec: &str) -> Result<Self> {
        let spec = spec.trim().to_ascii_lowercase();
        let num = |s: &str| -> Result<usize> {
            s.parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(|| Error::Parse(format!("bad group size in {spec:?}")))
        };
        let g = match spec.as_str() {
            "trivial" => Self::cyclic(1),
            "klein" | "klein4" | "v4" => Self::klein_four(),
            "s3" => Self::symmetric3(),
            "d4" => Self::dihedral(4),
            "q8" => Self::quaternion(),
            _ => {
                if let Some(n) = spec.strip_prefix("cyclic:").or_else(|| spec.strip_prefix('z')) {
                    let n = num(n)?;
                    if n > 64 {
                        return Err(Error::OrderTooLarge { order: n, bound: 64 });
                    }
                    Self::cyclic(n)
                } else if let Some(n) = spec.strip_prefix("dihedral:") {
                    let n = num(n)?;
                    if 2 * n > 64 {
                        return Err(Error::OrderTooLarge { order: 2 * n, bound: 64 });
                    }
                    Self::dihedral(n)
                } else {
                    return Err(Error::Parse(format!("unknown group {spec:?}")));
                }
            }
        };
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// `g X g^-1`.
    pub fn conjugate_subset(&self, g: usize, x: GroupSubset) -> GroupSubset {
        GroupSubset::from_elements(x.iter().map(|h| self.conjugate(g, h)))
    }

    pub fn left_translate(&self, g: usize, x: GroupSubset) -> GroupSubset {
        GroupSubset::from_elements(x.iter().map(|h| self.mul(g, h)))
    }

    pub fn format_subset(&self, x: GroupSubset) -> String {
        let parts: Vec<&str> = x.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn is_subgroup(&self, x: GroupSubset) -> bool {
        x.contains(0) && x.iter().all(|a| x.iter().all(|b| x.contains(self.mul(a, self.inv(b)))))
    }

    /// The subgroup generated by `x`.
    pub fn closure(&self, x: GroupSubset) -> GroupSubset {
        let mut s = x.with(0);
        loop {
            let next = GroupSubset::from_elements(s.iter().flat_map(|a| s.iter().map(move |b| (a, b))).map(|(a, b)| self.mul(a, b)));
            let next = next.union(s);
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// All subgroups, sorted by bitmask.
    pub fn subgroups(&self) -> Vec<GroupSubset> {
        let mut found = BTreeSet::new();
        let mut frontier = vec![GroupSubset::singleton(0)];
        found.insert(GroupSubset::singleton(0));
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if !h.contains(g) {
                    let k = self.closure(h.with(g));
                    if found.insert(k) {
                        frontier.push(k);
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    /// Canonical representative (smallest mask) of the conjugacy class of `l`.
    pub fn conjugacy_rep(&self, l: GroupSubset) -> GroupSubset {
        (0..self.order()).map(|g| self.conjugate_subset(g, l)).min().expect("nonempty group")
    }
}

/// A subset of a group of order at most 64, as a bitmask over element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupSubset(pub u64);

impl GroupSubset {
    pub fn empty() -> Self {
        GroupSubset(0)
    }

    pub fn singleton(a: usize) -> Self {
        GroupSubset(1 << a)
    }

    pub fn full(n: usize) -> Self {
        GroupSubset(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn from_elements(it: impl IntoIterator<Item = usize>) -> Self {
        GroupSubset(it.into_iter().fold(0, |m, a| m | (1 << a)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, a: usize) -> bool {
        a < 64 && self.0 >> a & 1 == 1
    }

    pub fn with(self, a: usize) -> Self {
        GroupSubset(self.0 | 1 << a)
    }

    pub fn union(self, o: Self) -> Self {
        GroupSubset(self.0 | o.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Position in the ordered list of subsets containing the identity.
    pub fn p1_index(self) -> usize {
        debug_assert!(self.contains(0));
        (self.0 >> 1) as usize
    }

    pub fn from_p1_index(i: usize) -> Self {
        GroupSubset(((i as u64) << 1) | 1)
    }
}

impl fmt::Display for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All subsets containing the identity, ordered by bitmask value (the mask
/// read with the highest element as most significant bit).
pub fn p1_subsets(g: &FiniteGroup) -> Result<Vec<GroupSubset>> {
    p1_subsets_bounded(g, max_order())
}

pub fn p1_subsets_bounded(g: &FiniteGroup, bound: usize) -> Result<Vec<GroupSubset>> {
    let n = g.order();
    if n > bound || n > 32 {
        return Err(Error::OrderTooLarge { order: n, bound: bound.min(32) });
    }
    Ok((0..1usize << (n - 1)).map(GroupSubset::from_p1_index).collect())
}

/// `gX` when `g^-1 ∈ X`, otherwise undefined.
pub fn act_partial(g: &FiniteGroup, a: usize, x: GroupSubset) -> Option<GroupSubset> {
    x.contains(g.inv(a)).then(|| g.left_translate(a, x))
}

/// `G_X = {g : g^-1 ∈ X, gX = X}`.
pub fn stabilizer(g: &FiniteGroup, x: GroupSubset) -> GroupSubset {
    GroupSubset::from_elements((0..g.order()).filter(|&a| act_partial(g, a, x) == Some(x)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    pub representative: GroupSubset,
    /// Members in increasing mask order.
    pub members: Vec<GroupSubset>,
    pub stabilizer: GroupSubset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub classes: Vec<OrbitClass>,
    /// Class index of every subset, indexed by [`GroupSubset::p1_index`].
    pub class_of: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn class_containing(&self, x: GroupSubset) -> &OrbitClass {
        &self.classes[self.class_of[x.p1_index()]]
    }
}

/// Classes of `X ~ Y` (some `g` with `g^-1 ∈ X` and `gX = Y`), with the
/// equivalence-relation axioms and the subgroup property of stabilizers checked.
pub fn orbit_decomposition(g: &FiniteGroup) -> Result<OrbitDecomposition> {
    let subsets = p1_subsets(g)?;
    let n = subsets.len();
    let related = |x: GroupSubset, y: GroupSubset| (0..g.order()).any(|a| act_partial(g, a, x) == Some(y));
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for &x in &subsets {
        if class_of[x.p1_index()] != usize::MAX {
            continue;
        }
        let members: BTreeSet<GroupSubset> = (0..g.order()).filter_map(|a| act_partial(g, a, x)).collect();
        let k = classes.len();
        for m in &members {
            class_of[m.p1_index()] = k;
        }
        let stab = stabilizer(g, x);
        assert!(g.is_subgroup(stab), "stabilizer of {} is not a subgroup", g.format_subset(x));
        classes.push(OrbitClass { representative: x, members: members.into_iter().collect(), stabilizer: stab });
    }
    // the relation must be an equivalence whose classes are exactly the orbits
    for &x in &subsets {
        assert!(related(x, x), "reflexivity fails at {}", g.format_subset(x));
        for &y in &classes[class_of[x.p1_index()]].members {
            assert!(related(y, x), "symmetry fails");
            for &z in &classes[class_of[y.p1_index()]].members {
                assert!(related(x, z), "transitivity fails");
            }
        }
    }
    Ok(OrbitDecomposition { classes, class_of })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    /// Smallest-mask member of the conjugacy class of subgroups.
    pub subgroup: GroupSubset,
    pub order: usize,
    pub count: usize,
}

/// `q(G, L)` for every subgroup `L` up to conjugacy, ordered by `(|L|, mask)`.
pub fn stabilizer_multiplicities(g: &FiniteGroup) -> Result<Vec<Multiplicity>> {
    let mut counts: BTreeMap<GroupSubset, usize> = BTreeMap::new();
    for l in g.subgroups() {
        counts.entry(g.conjugacy_rep(l)).or_insert(0);
    }
    for x in p1_subsets(g)? {
        *counts.get_mut(&g.conjugacy_rep(stabilizer(g, x))).expect("stabilizer is a subgroup") += 1;
    }
    let mut out: Vec<Multiplicity> =
        counts.into_iter().map(|(l, c)| Multiplicity { subgroup: l, order: l.len(), count: c }).collect();
    out.sort_by_key(|m| (m.order, m.subgroup));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &FiniteGroup, labels: &[&str]) -> GroupSubset {
        GroupSubset::from_elements(labels.iter().map(|l| g.index_of(l).unwrap()))
    }

    #[test]
    fn table_validation() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], None).is_ok());
        assert_eq!(FiniteGroup::from_table(vec![vec![0, 1], vec![0, 0]], None), Err(Error::NoInverse { element: 1 }));
        // a Latin square with identity that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(t, None), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn builtins_are_groups() {
        for s in ["trivial", "cyclic:4", "klein", "s3", "d4", "q8", "dihedral:5"] {
            let g = FiniteGroup::builtin(s).unwrap();
            assert_eq!(g.subgroups().iter().filter(|&&l| l.len() == g.order()).count(), 1, "{s}");
        }
        assert!(!FiniteGroup::symmetric3().is_central(1));
        assert_eq!(FiniteGroup::quaternion().subgroups().len(), 6);
        assert_eq!(FiniteGroup::dihedral(4).subgroups().len(), 10);
    }

    #[test]
    fn p1_counts() {
        assert_eq!(p1_subsets(&FiniteGroup::cyclic(1)).unwrap().len(), 1);
        assert_eq!(p1_subsets(&FiniteGroup::cyclic(2)).unwrap().len(), 2);
        assert_eq!(p1_subsets(&FiniteGroup::cyclic(4)).unwrap().len(), 8);
        assert!(matches!(p1_subsets_bounded(&FiniteGroup::cyclic(5), 4), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn partial_action_examples() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(act_partial(&g, 1, set(&g, &["e", "g^3"])), Some(set(&g, &["e", "g"])));
        assert_eq!(act_partial(&g, 1, set(&g, &["e"])), None);
        assert_eq!(act_partial(&g, 0, set(&g, &["e", "g^2"])), Some(set(&g, &["e", "g^2"])));
    }

    #[test]
    fn z4_orbits() {
        let g = FiniteGroup::cyclic(4);
        let od = orbit_decomposition(&g).unwrap();
        let sizes: Vec<usize> = od.classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 2, 1, 3, 1]);
        let reps: Vec<GroupSubset> = od.classes.iter().map(|c| c.representative).collect();
        assert_eq!(reps[1], set(&g, &["e", "g"]));
        assert_eq!(reps[3], set(&g, &["e", "g", "g^2"]));
        assert_eq!(od.classes[2].stabilizer, set(&g, &["e", "g^2"]));
    }

    #[test]
    fn multiplicities() {
        let q = |g: &FiniteGroup| stabilizer_multiplicities(g).unwrap().iter().map(|m| m.count).collect::<Vec<_>>();
        assert_eq!(q(&FiniteGroup::cyclic(4)), vec![6, 1, 1]);
        assert_eq!(q(&FiniteGroup::cyclic(2)), vec![1, 1]);
        assert_eq!(q(&FiniteGroup::cyclic(1)), vec![1]);
    }
}

//! Partial representations `π: H -> B`.

use crate::algebra::FinAlgebra;
use crate::hopf::{AxiomCheck, HopfAlgebra};
use crate::linalg::{Mat, Vector};

/// `ε^π(h) = π(h_1) π(S(h_2))`.
pub fn eps_pi(pi: &Mat, h: &HopfAlgebra, b: &FinAlgebra, i: usize) -> Vector {
    let p = |v: &Vector| pi.apply(v).expect("π matches H");
    Vector::sum_of(
        b.dim(),
        h.sweedler(i).into_iter().map(|(c, l, r)| (c, b.mul(pi.col(l), &p(h.antipode().col(r))))),
    )
}

/// PR1–PR5 over all basis pairs, the equivalence of PR2+PR3 with PR4+PR5,
/// and the grouplike properties of `ε^π`.
pub fn check_partial_rep(pi: &Mat, h: &HopfAlgebra, b: &FinAlgebra) -> Vec<AxiomCheck> {
    let d = h.dim();
    let p = |v: &Vector| pi.apply(v).expect("π matches H");
    let s = |i: usize| h.antipode().col(i).clone();
    let hm = |u: &Vector, v: &Vector| h.mul(u, v);
    let lab = |i: usize, k: usize| format!("({}, {})", h.label(i), h.label(k));
    let mut out = Vec::new();
    out.push(AxiomCheck::new("PR1", (p(h.unit()) != *b.unit()).then(|| "π(1) != 1".to_string())));

    // each identity is Σ over the coproduct of one argument
    let mut check = |name: &str, f: &dyn Fn(usize, usize) -> (Vector, Vector)| {
        let mut w = None;
        'outer: for i in 0..d {
            for k in 0..d {
                let (l, r) = f(i, k);
                if l != r {
                    w = Some(lab(i, k));
                    break 'outer;
                }
            }
        }
        out.push(AxiomCheck::new(name, w));
    };
    let sum = |terms: Vec<Vector>| terms.into_iter().fold(Vector::zeros(b.dim()), |acc, v| acc.add(&v));
    check("PR2", &|i, k| {
        let hv = h.basis(i);
        let sw = h.sweedler(k);
        let lhs = sum(sw.iter().map(|(c, l, r)| b.mul_all(&[&p(&hv), pi.col(*l), &p(&s(*r))]).scale(c)).collect());
        let rhs = sum(sw.iter().map(|(c, l, r)| b.mul(&p(&hm(&hv, &h.basis(*l))), &p(&s(*r))).scale(c)).collect());
        (lhs, rhs)
    });
    check("PR3", &|i, k| {
        let kv = h.basis(k);
        let sw = h.sweedler(i);
        let lhs = sum(sw.iter().map(|(c, l, r)| b.mul_all(&[pi.col(*l), &p(&s(*r)), &p(&kv)]).scale(c)).collect());
        let rhs = sum(sw.iter().map(|(c, l, r)| b.mul(pi.col(*l), &p(&hm(&s(*r), &kv))).scale(c)).collect());
        (lhs, rhs)
    });
    check("PR4", &|i, k| {
        let hv = h.basis(i);
        let sw = h.sweedler(k);
        let lhs = sum(sw.iter().map(|(c, l, r)| b.mul_all(&[&p(&hv), &p(&s(*l)), pi.col(*r)]).scale(c)).collect());
        let rhs = sum(sw.iter().map(|(c, l, r)| b.mul(&p(&hm(&hv, &s(*l))), pi.col(*r)).scale(c)).collect());
        (lhs, rhs)
    });
    check("PR5", &|i, k| {
        let kv = h.basis(k);
        let sw = h.sweedler(i);
        let lhs = sum(sw.iter().map(|(c, l, r)| b.mul_all(&[&p(&s(*l)), pi.col(*r), &p(&kv)]).scale(c)).collect());
        let rhs = sum(sw.iter().map(|(c, l, r)| b.mul(&p(&s(*l)), &p(&hm(&h.basis(*r), &kv))).scale(c)).collect());
        (lhs, rhs)
    });
    let ok = |n: &str| out.iter().find(|c| c.name == n).is_some_and(|c| c.passed);
    let (a, z) = (ok("PR2") && ok("PR3"), ok("PR4") && ok("PR5"));
    out.push(AxiomCheck::new(
        "PR2+PR3 <=> PR4+PR5",
        (a != z).then(|| format!("PR2+PR3 = {a}, PR4+PR5 = {z}")),
    ));

    let eps: Vec<Vector> = (0..d).map(|i| eps_pi(pi, h, b, i)).collect();
    let grouplikes: Vec<usize> = h.grouplikes().iter().filter(|v| v.nnz() == 1).map(|v| v.first().unwrap().0).collect();
    let w = grouplikes.iter().find(|&&g| !b.is_idempotent(&eps[g]));
    out.push(AxiomCheck::new("ε^π(g) idempotent", w.map(|&g| h.label(g).to_string())));
    let mut w = None;
    'comm: for &g in &grouplikes {
        for (i, e) in eps.iter().enumerate() {
            if !b.commutes(e, &eps[g]) {
                w = Some(lab(i, g));
                break 'comm;
            }
        }
    }
    out.push(AxiomCheck::new("ε^π(h) ε^π(g) = ε^π(g) ε^π(h)", w));
    out
}

//! Verification suites over the standard inputs, shared by the CLI and
//! the acceptance tests.

use crate::algebra::FinAlgebra;
use crate::convolution::{
    convolve, coradical_agreement_implies_equal, is_convolution_idempotent, wedge_vanishing_check, Verdict,
};
use crate::error::{Error, Result};
use crate::group::{orbit_decomposition, p1_subsets, stabilizer_multiplicities, FiniteGroup};
use crate::groupoid::Groupoid;
use crate::hopf::{all_passed, AxiomCheck, HopfAlgebra};
use crate::hpar::expected::{expected, relation_families, NAMES};
use crate::hpar::{
    apar_multiplicity_report, build_hpar, generate_epsilon_relations, kpar_group, kpar_smash_witness, linearly_implied, Apar,
};
use crate::linalg::{Mat, Subspace, Vector};
use crate::partial_action::PartialAction;
use crate::smash::SmashProduct;
use serde::Serialize;

pub const SUITES: [&str; 7] = ["groups", "groupoid", "hopf", "partial-action", "smash", "convolution", "hpar"];

/// Truncation degree used by the suites.
pub const TRUNCATION: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<AxiomCheck>,
}

/// The built-in groups of order at most `max_order`.
pub fn standard_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (1..=max_order.min(8)).map(|n| (format!("Z{n}"), FiniteGroup::cyclic(n))).collect();
    for (name, g) in [
        ("Klein", FiniteGroup::klein_four()),
        ("S3", FiniteGroup::symmetric3()),
        ("D4", FiniteGroup::dihedral(4)),
        ("Q8", FiniteGroup::quaternion()),
    ] {
        if g.order() <= max_order {
            out.push((name.to_string(), g));
        }
    }
    out
}

/// Both rank-one reference algebras, by name.
pub fn rank_one_examples() -> Vec<(String, HopfAlgebra)> {
    NAMES.iter().map(|n| (n.to_string(), expected(n).expect("known").hopf())).collect()
}

/// Trivial actions, the partial action of `Z_2` on `K`, and the canonical
/// actions on `A_par` for group algebras and both rank-one examples.
pub fn standard_actions(max_order: usize) -> Result<Vec<(String, PartialAction)>> {
    let mut out = Vec::new();
    for (name, g) in standard_groups(max_order.min(4)) {
        let h = HopfAlgebra::group_algebra(&g);
        out.push((format!("trivial {name} on K{name}"), PartialAction::trivial(h.clone(), h.algebra().clone())));
    }
    let z2 = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2));
    let pa = PartialAction::from_fn(z2, FinAlgebra::ground(), |i, _| {
        if i == 0 {
            Vector::basis(1, 0)
        } else {
            Vector::zeros(1)
        }
    })?;
    out.push(("Z2 on K".into(), pa));
    for (name, g) in standard_groups(max_order.min(4)) {
        let a = Apar::build(&HopfAlgebra::group_algebra(&g), 1)?;
        out.push((format!("A_par(K{name})"), a.action().clone()));
    }
    for (name, h) in rank_one_examples() {
        let a = Apar::build(&h, TRUNCATION)?;
        out.push((format!("A_par({name}), N={TRUNCATION}"), a.action().clone()));
    }
    Ok(out)
}

fn prefixed(prefix: &str, checks: Vec<AxiomCheck>) -> Vec<AxiomCheck> {
    checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}: {}", c.name);
            c
        })
        .collect()
}

fn check(name: String, ok: bool, witness: impl FnOnce() -> String) -> AxiomCheck {
    AxiomCheck::new(&name, (!ok).then(witness))
}

pub fn groups_suite(max_order: usize) -> Result<Vec<AxiomCheck>> {
    let mut out = Vec::new();
    for (name, g) in standard_groups(max_order) {
        let n = g.order();
        let subsets = p1_subsets(&g)?;
        out.push(check(format!("{name}: |P_1(G)| = 2^(n-1)"), subsets.len() == 1 << (n - 1), || subsets.len().to_string()));
        let orbits = orbit_decomposition(&g)?;
        let covered: usize = orbits.classes.iter().map(|c| c.members.len()).sum();
        out.push(check(format!("{name}: orbit classes partition P_1(G)"), covered == subsets.len(), || covered.to_string()));
        let q: usize = stabilizer_multiplicities(&g)?.iter().map(|m| m.count).sum();
        out.push(check(format!("{name}: Σ q(G, L) = |P_1(G)|"), q == subsets.len(), || q.to_string()));
        let s: usize = subsets.iter().map(|x| x.len()).sum();
        let want = (n + 1) * (1usize << n) / 4;
        out.push(check(format!("{name}: Σ |X| = (n+1) 2^(n-2)"), s == want, || s.to_string()));
    }
    Ok(out)
}

pub fn groupoid_suite(max_order: usize) -> Result<Vec<AxiomCheck>> {
    let mut out = Vec::new();
    for (name, g) in standard_groups(max_order) {
        let gd = Groupoid::build(&g)?;
        out.push(AxiomCheck::new(&format!("{name}: groupoid axioms"), gd.axiom_witness()));
        out.push(check(format!("{name}: components are the orbit classes"), gd.components_match_orbits(), || "mismatch".into()));
        let mf = gd.decompose_matrix_form();
        out.push(check(format!("{name}: matrix decomposition"), mf.verified(), || {
            format!("multiplicative {}, bijective {}", mf.multiplicative, mf.bijective)
        }));
        let k = kpar_group(&g)?;
        out.push(AxiomCheck::new(&format!("{name}: ψ groupoid algebra -> K_par G"), k.psi_witness(&gd)));
    }
    Ok(out)
}

pub fn hopf_suite(max_order: usize) -> Result<Vec<AxiomCheck>> {
    let mut out = Vec::new();
    let mut inputs: Vec<(String, HopfAlgebra)> =
        standard_groups(max_order).into_iter().map(|(n, g)| (format!("K{n}"), HopfAlgebra::group_algebra(&g))).collect();
    inputs.extend(rank_one_examples());
    for (name, h) in inputs {
        out.extend(prefixed(&name, h.check_axioms()));
        let (g, _) = h.grouplike_group()?;
        let filt = h.coradical_filtration();
        out.push(check(format!("{name}: pointed"), filt.is_ok(), || format!("{:?}", filt.as_ref().err())));
        if let Ok(f) = filt {
            let dims: Vec<usize> = f.iter().map(|s| s.dim()).collect();
            out.push(check(format!("{name}: C_0 = span of grouplikes"), dims[0] == g.order(), || format!("{dims:?}")));
        }
    }
    Ok(out)
}

pub fn partial_action_suite(max_order: usize) -> Result<Vec<AxiomCheck>> {
    let mut out = Vec::new();
    for (name, pa) in standard_actions(max_order)? {
        out.extend(prefixed(&name, pa.check()));
        out.extend(prefixed(&name, pa.unit_map_checks()));
        let sys = pa.idempotent_system()?;
        out.extend(prefixed(&name, pa.check_idempotents(&sys)));
        let dec = pa.decompose(&sys);
        out.push(check(format!("{name}: A = ⊕ A Γ_X, H-stable"), dec.verified(), || "decomposition fails".into()));
    }
    Ok(out)
}

pub fn smash_suite(max_order: usize) -> Result<Vec<AxiomCheck>> {
    let mut out = Vec::new();
    for (name, pa) in standard_actions(max_order)? {
        if pa.algebra().dim() > 8 {
            // the rank-one smash products are covered by the hpar suite
            continue;
        }
        let sp = SmashProduct::build(&pa)?;
        out.extend(prefixed(&name, sp.check()));
        let pr = crate::hpar::check_partial_rep(&sp.eta_map(), pa.hopf(), sp.algebra());
        out.extend(prefixed(&format!("{name}: η"), pr));
    }
    Ok(out)
}

/// A pair of convolution idempotents `f, g: H -> A`.
#[derive(Clone, Debug)]
pub struct ConvolutionPair {
    pub label: String,
    pub hopf: HopfAlgebra,
    pub algebra: FinAlgebra,
    pub f: Mat,
    pub g: Mat,
}

/// For each standard action and each nonempty sum `E` of `Γ` classes:
/// `f(h) = (h·1) E` against `g(h) = h·E` in `A`; the unit map of the
/// induced action on `A E` against `h·E` read in `A E`; and `e_A`
/// against `α_E` (which satisfy `f*g = g*f = g` but generally not the
/// coradical hypothesis).
pub fn convolution_corpus(max_order: usize) -> Result<Vec<ConvolutionPair>> {
    let mut out = Vec::new();
    for (name, pa) in standard_actions(max_order)? {
        let a = pa.algebra();
        let h = pa.hopf();
        let sys = pa.idempotent_system()?;
        let k = sys.gamma.len();
        let e_a = pa.unit_map();
        for mask in 1u32..(1 << k) {
            let e = (0..k).filter(|i| mask >> i & 1 == 1).fold(Vector::zeros(a.dim()), |acc, i| acc.add(&sys.gamma[i]));
            let f = Mat::from_columns(a.dim(), (0..h.dim()).map(|i| a.mul(&pa.unit_image(i), &e)).collect());
            let g = Mat::from_columns(a.dim(), (0..h.dim()).map(|i| pa.act_h(i, &e)).collect());
            let label = format!("{name}, E#{mask}");
            out.push(ConvolutionPair { label: format!("{label}: (h·1)E vs h·E"), hopf: h.clone(), algebra: a.clone(), f, g: g.clone() });
            let (sub, incl) = pa.induce_on_ideal(&e)?;
            let space = Subspace::from_spanning(a.dim(), incl.columns().iter().cloned());
            let proj = |v: &Vector| Vector::from_dense(space.coords(v).expect("h·E lies in A E"));
            let gi = Mat::from_columns(sub.algebra().dim(), g.columns().iter().map(proj).collect());
            out.push(ConvolutionPair {
                label: format!("{label}: e_(AE) vs h·E"),
                hopf: h.clone(),
                algebra: sub.algebra().clone(),
                f: sub.unit_map(),
                g: gi,
            });
            out.push(ConvolutionPair { label: format!("{label}: e_A vs α_E"), hopf: h.clone(), algebra: a.clone(), f: e_a.clone(), g });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusSummary {
    pub pairs: usize,
    /// Pairs meeting every hypothesis of the comparison theorem.
    pub hypotheses_met: usize,
    pub equal: usize,
    pub counterexamples: usize,
    pub lemma_checked: usize,
    pub lemma_failed: usize,
    pub wedge_checked: usize,
    pub wedge_failed: usize,
}

/// Runs the comparison theorem, the `f - g` lemma and the wedge lemma
/// over the corpus.
pub fn run_convolution_corpus(corpus: &[ConvolutionPair]) -> Result<(CorpusSummary, Vec<AxiomCheck>)> {
    let mut s = CorpusSummary { pairs: corpus.len(), ..Default::default() };
    let mut out = Vec::new();
    for p in corpus {
        let (h, a) = (&p.hopf, &p.algebra);
        for (which, m) in [("f", &p.f), ("g", &p.g)] {
            if !is_convolution_idempotent(m, h, a) {
                out.push(AxiomCheck::new(&format!("{}: {which} idempotent", p.label), Some("not idempotent".into())));
            }
        }
        match coradical_agreement_implies_equal(&p.f, &p.g, h, a)? {
            Verdict::Equal => {
                s.hypotheses_met += 1;
                s.equal += 1;
            }
            Verdict::Counterexample(w) => {
                s.hypotheses_met += 1;
                s.counterexamples += 1;
                out.push(AxiomCheck::new(&format!("{}: comparison theorem", p.label), Some(w)));
            }
            Verdict::HypothesisFailed(_) => {}
        }
        if convolve(&p.f, &p.g, h, a)? == p.g && convolve(&p.g, &p.f, h, a)? == p.g {
            s.lemma_checked += 1;
            let diff = p.f.sub(&p.g);
            if !is_convolution_idempotent(&diff, h, a) {
                s.lemma_failed += 1;
                out.push(AxiomCheck::new(&format!("{}: f - g idempotent", p.label), Some("fails".into())));
            }
        }
        for m in [&p.f, &p.g] {
            let ker = m.kernel();
            let c0 = ker.intersect(&h.coradical())?;
            for (v, w) in [(&c0, &c0), (&ker, &c0), (&ker, &ker)] {
                s.wedge_checked += 1;
                if !wedge_vanishing_check(m, v, w, h, a)? {
                    s.wedge_failed += 1;
                    out.push(AxiomCheck::new(&format!("{}: wedge lemma", p.label), Some("f is nonzero on V ∧ W".into())));
                }
            }
        }
    }
    out.push(check("comparison theorem: at least 100 pairs meet the hypotheses".into(), s.hypotheses_met >= 100, || {
        s.hypotheses_met.to_string()
    }));
    out.push(check("comparison theorem: f = g whenever the hypotheses hold".into(), s.counterexamples == 0, || {
        s.counterexamples.to_string()
    }));
    out.push(check("f - g lemma".into(), s.lemma_failed == 0 && s.lemma_checked > 0, || format!("{s:?}")));
    out.push(check("wedge lemma".into(), s.wedge_failed == 0 && s.wedge_checked > 0, || format!("{s:?}")));
    Ok((s, out))
}

pub fn convolution_suite(max_order: usize) -> Result<Vec<AxiomCheck>> {
    let corpus = convolution_corpus(max_order)?;
    Ok(run_convolution_corpus(&corpus)?.1)
}

pub fn hpar_suite(max_order: usize) -> Result<Vec<AxiomCheck>> {
    let mut out = Vec::new();
    for (name, g) in standard_groups(max_order) {
        let k = kpar_group(&g)?;
        let pr = crate::hpar::check_partial_rep(&k.bracket(), &k.hopf(), k.algebra());
        out.extend(prefixed(&format!("K_par {name}: [-]"), pr));
        if g.order() <= 4 {
            let hp = build_hpar(&HopfAlgebra::group_algebra(&g), 1)?;
            out.push(AxiomCheck::new(&format!("{name}: K_par G ≅ A_par(KG) # KG"), kpar_smash_witness(&k, &hp)));
        }
    }
    for name in NAMES {
        let e = expected(name).expect("known");
        let h = e.hopf();
        let rels = generate_epsilon_relations(&h);
        let fams = relation_families(e.kappa);
        let w = fams.iter().find(|(_, p)| !linearly_implied(h.dim(), &rels, p)).map(|(n, _)| n.clone());
        out.push(AxiomCheck::new(&format!("{name}: relation families implied"), w));
        let hp = build_hpar(&h, TRUNCATION)?;
        let apar = hp.apar();
        out.push(AxiomCheck::new(&format!("{name}: defining relations hold in A"), apar.relations_witness()));
        out.push(AxiomCheck::new(&format!("{name}: action formula on words of length 2"), apar.action_formula_witness()));
        let w = apar
            .components()
            .iter()
            .find(|c| c.presentation.certificate.as_ref().is_some_and(|c| !c.verify()))
            .map(|c| apar.group().format_subset(c.subset()));
        out.push(AxiomCheck::new(&format!("{name}: component certificates"), w));
        out.extend(prefixed(name, hp.block_checks()));
        out.extend(prefixed(name, hp.theta_checks()?));
        out.extend(prefixed(&format!("{name}: [-]"), hp.partial_rep_checks()));
        let d = e.diff(&hp)?;
        out.push(check(format!("{name}: reference diff"), d.is_empty(), || d.join("; ")));
        for m in apar_multiplicity_report(apar)? {
            out.push(check(format!("{name}: multiplicity of {}", m.subgroup), m.certified && m.count == m.expected, || {
                format!("{m:?}")
            }));
        }
    }
    Ok(out)
}

pub fn run_suite(name: &str, max_order: usize) -> Result<SuiteReport> {
    let checks = match name {
        "groups" => groups_suite(max_order)?,
        "groupoid" => groupoid_suite(max_order)?,
        "hopf" => hopf_suite(max_order)?,
        "partial-action" => partial_action_suite(max_order)?,
        "smash" => smash_suite(max_order)?,
        "convolution" => convolution_suite(max_order)?,
        "hpar" => hpar_suite(max_order)?,
        other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
    };
    Ok(SuiteReport { suite: name.to_string(), passed: all_passed(&checks), checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for name in ["groups", "groupoid", "hopf", "smash"] {
            let r = run_suite(name, 3).unwrap();
            assert!(r.passed, "{name}: {:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
        }
        assert!(run_suite("nope", 3).is_err());
    }
}

#[cfg(test)]
mod heavy {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for name in SUITES {
            let t = std::time::Instant::now();
            let r = run_suite(name, 4).unwrap();
            eprintln!("{name}: {} checks in {:?}", r.checks.len(), t.elapsed());
            let bad: Vec<_> = r.checks.iter().filter(|c| !c.passed).take(5).collect();
            assert!(r.passed, "{name}: {bad:?}");
        }
        let (s, _) = run_convolution_corpus(&convolution_corpus(4).unwrap()).unwrap();
        eprintln!("{s:?}");
    }
}

//! Simplicity of cycle sets through the ideals of braces.
//!
//! Everything here computes both sides independently: the brute-force
//! congruence oracle on the cycle-set side and ideal transitivity on the
//! brace side. A disagreement is returned as [`Error::Inconsistency`].
//!
//! An ideal `I` acts on a cycle base `X` through the maps `λ_i`, `i ∈ I`.

use serde::Serialize;

use crate::brace::{normalize, Ideal, LeftBrace};
use crate::cycleset::{are_isomorphic, Congruence, CycleSet};
use crate::error::{Error, Result};
use crate::gbrace::gbrace;

fn require_trivial_socle_and_base(b: &LeftBrace, base: &[usize]) -> Result<()> {
    if !b.socle()?.is_zero() {
        return Err(Error::Precondition("socle is not trivial".into()));
    }
    if !b.is_transitive_cycle_base(base) {
        return Err(Error::Precondition(
            "subset is not a transitive cycle base".into(),
        ));
    }
    Ok(())
}

/// Orbits of the ideal on the base, checked to be a congruence of the base.
/// The congruence is on local indices into the sorted base.
pub fn ideal_to_congruence(b: &LeftBrace, ideal: &Ideal, x: &[usize]) -> Result<Congruence> {
    let base = normalize(x);
    require_trivial_socle_and_base(b, &base)?;
    let c = b.ideal_action_orbits(ideal, &base)?;
    let y = b.sub_cycle_set(&base)?;
    c.check_compatible(&y).map_err(|e| {
        Error::Inconsistency(format!(
            "ideal orbits are not a congruence of the base: {e}"
        ))
    })?;
    Ok(c)
}

/// The additive subgroup generated by `x - y` over related pairs, checked to
/// be an ideal whose own orbit congruence refines `c`.
pub fn congruence_to_ideal(b: &LeftBrace, x: &[usize], c: &Congruence) -> Result<Ideal> {
    let base = normalize(x);
    require_trivial_socle_and_base(b, &base)?;
    if c.size() != base.len() {
        return Err(Error::DegreeMismatch(c.size(), base.len()));
    }
    let y = b.sub_cycle_set(&base)?;
    c.check_compatible(&y)?;
    let mut diffs = Vec::new();
    for i in 0..base.len() {
        for j in 0..base.len() {
            if c.related(i, j) {
                diffs.push(b.sub(base[i], base[j]));
            }
        }
    }
    let span = b.additive_span(&diffs);
    b.check_ideal(&span).map_err(|e| {
        Error::Inconsistency(format!("span of related differences is not an ideal: {e}"))
    })?;
    let ideal = b.ideal_closure(&span)?;
    if ideal.elements() != span.as_slice() {
        return Err(Error::Inconsistency(
            "ideal closure enlarged a verified ideal".into(),
        ));
    }
    let induced = b.ideal_action_orbits(&ideal, &base)?;
    if !induced.refines(c) {
        return Err(Error::Inconsistency(
            "congruence induced by the difference ideal does not refine the input".into(),
        ));
    }
    Ok(ideal)
}

#[derive(Clone, Debug, Serialize)]
pub struct Preconditions {
    pub soc_trivial: bool,
    pub base_transitive: bool,
    pub order_gt_1: bool,
}

impl Preconditions {
    pub fn hold(&self) -> bool {
        self.soc_trivial && self.base_transitive && self.order_gt_1
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub preconditions: Preconditions,
    /// The base, as a cycle set, is simple (brute-force oracle).
    pub cond1: bool,
    /// Every non-zero ideal acts transitively on the base.
    pub cond2: bool,
    pub cond2_witness: Option<Vec<usize>>,
    /// There is exactly one minimal non-zero ideal and it acts transitively.
    pub cond3: bool,
    pub minimal_ideals: Vec<Vec<usize>>,
    /// `Some(cond1 == cond2 == cond3)` when the preconditions hold.
    pub equivalent: Option<bool>,
    pub action: &'static str,
}

/// Evaluates the three conditions on `b` with base `x` without assuming any
/// of them imply the others.
pub fn theorem_characterization(b: &LeftBrace, x: &[usize]) -> Result<TheoremReport> {
    let base = normalize(x);
    if base.is_empty() {
        return Err(Error::Precondition("empty base".into()));
    }
    b.check_lambda_closed(&base)?;
    let preconditions = Preconditions {
        soc_trivial: b.socle()?.is_zero(),
        base_transitive: b.is_transitive_cycle_base(&base),
        order_gt_1: b.order() > 1,
    };
    let cond1 = b.sub_cycle_set(&base)?.is_simple_oracle();
    let lattice = b.all_ideals()?;
    let mut cond2_witness = None;
    for ideal in lattice.non_zero() {
        if !b.acts_transitively(ideal, &base)? {
            cond2_witness = Some(ideal.elements().to_vec());
            break;
        }
    }
    let minimal = lattice.minimal();
    let cond3 = minimal.len() == 1 && b.acts_transitively(minimal[0], &base)?;
    let cond2 = cond2_witness.is_none();
    let equivalent = preconditions
        .hold()
        .then_some(cond1 == cond2 && cond2 == cond3);
    Ok(TheoremReport {
        preconditions,
        cond1,
        cond2,
        cond2_witness,
        cond3,
        minimal_ideals: minimal.iter().map(|i| i.elements().to_vec()).collect(),
        equivalent,
        action: "lambda",
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PreidReport {
    pub group_order: usize,
    pub unique_minimal: bool,
    pub minimal_size: usize,
    /// The minimal ideal equals the additive span of `e(x) - e(y)`.
    pub equals_difference_span: bool,
    /// The span of `σ_x - σ_y` (group elements read in the brace) is the same.
    pub sigma_span_agrees: bool,
    pub quotient_order: usize,
    pub quotient_trivial: bool,
    pub quotient_cyclic: bool,
}

impl PreidReport {
    pub fn holds(&self) -> bool {
        self.unique_minimal
            && self.equals_difference_span
            && self.quotient_trivial
            && self.quotient_cyclic
    }
}

pub fn check_preid(x: &CycleSet) -> Result<PreidReport> {
    if !x.is_simple_oracle() {
        return Err(Error::Precondition("cycle set is not simple".into()));
    }
    if is_prime(x.size()) {
        return Err(Error::Precondition("cycle set has prime size".into()));
    }
    let g = gbrace(x)?;
    let b = &g.brace;
    let lattice = b.all_ideals()?;
    let minimal = lattice.minimal();
    let n = x.size();
    let span_of = |elems: &[usize]| {
        let diffs: Vec<usize> = elems
            .iter()
            .flat_map(|&a| elems.iter().map(move |&c| (a, c)))
            .map(|(a, c)| b.sub(a, c))
            .collect();
        b.additive_span(&diffs)
    };
    let embedded_span = span_of(&g.embed);
    let sigma_elems: Vec<usize> = (0..n)
        .map(|i| g.group.index_of(x.sigma(i)).expect("generator in group"))
        .collect();
    let sigma_span = span_of(&sigma_elems);
    let unique_minimal = minimal.len() == 1;
    let minimal_ideal = minimal
        .first()
        .map(|i| i.elements().to_vec())
        .unwrap_or_default();
    let (quotient_order, quotient_trivial, quotient_cyclic) = match minimal.first() {
        Some(i) => {
            let q = b.quotient_brace(i)?;
            (q.order(), q.is_trivial_brace(), q.is_cyclic_additive())
        }
        None => (0, false, false),
    };
    Ok(PreidReport {
        group_order: b.order(),
        unique_minimal,
        minimal_size: minimal_ideal.len(),
        equals_difference_span: unique_minimal && embedded_span == minimal_ideal,
        sigma_span_agrees: sigma_span == embedded_span,
        quotient_order,
        quotient_trivial,
        quotient_cyclic,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Size 1: never simple.
    Singleton,
    /// Size 2: always simple.
    SizeTwo,
    /// Prime size, isomorphic to the cyclic model.
    PrimeCyclic,
    /// Irretractable and indecomposable: decided by ideal transitivity on
    /// the brace of the permutation group.
    BraceCriterion,
    Decomposable,
    Retractable,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Singleton => "singleton",
            Branch::SizeTwo => "size_two",
            Branch::PrimeCyclic => "prime_cyclic",
            Branch::BraceCriterion => "brace_criterion",
            Branch::Decomposable => "decomposable",
            Branch::Retractable => "retractable",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub size: usize,
    pub branch: Branch,
    pub simple: bool,
    pub indecomposable: bool,
    pub irretractable: bool,
    pub theorem: Option<TheoremReport>,
    pub oracle_agrees: bool,
}

/// Decides simplicity through the size/prime/brace branches and cross-checks
/// the verdict against the congruence oracle.
pub fn classify_cycle_set(x: &CycleSet) -> Result<Classification> {
    let n = x.size();
    let indecomposable = x.is_indecomposable();
    let irretractable = x.is_irretractable();
    let mut theorem = None;
    let (branch, simple) = if n == 1 {
        (Branch::Singleton, false)
    } else if n == 2 {
        (Branch::SizeTwo, true)
    } else if is_prime(n) && are_isomorphic(x, &CycleSet::cyclic(n)?).is_some() {
        (Branch::PrimeCyclic, true)
    } else if !indecomposable {
        (Branch::Decomposable, false)
    } else if !irretractable {
        (Branch::Retractable, false)
    } else {
        let g = gbrace(x)?;
        let report = theorem_characterization(&g.brace, &g.base())?;
        if !report.preconditions.hold() {
            return Err(Error::Inconsistency(format!(
                "irretractable indecomposable cycle set gives a brace without the theorem's \
                 preconditions: {:?}",
                report.preconditions
            )));
        }
        if report.cond2 != report.cond3 {
            return Err(Error::Inconsistency(format!(
                "ideal conditions disagree: cond2 = {}, cond3 = {}",
                report.cond2, report.cond3
            )));
        }
        let simple = report.cond2;
        theorem = Some(report);
        (Branch::BraceCriterion, simple)
    };
    let oracle = x.is_simple_oracle();
    if oracle != simple {
        return Err(Error::Inconsistency(format!(
            "classification ({}) says simple = {simple}, congruence oracle says {oracle}",
            branch.as_str()
        )));
    }
    Ok(Classification {
        size: n,
        branch,
        simple,
        indecomposable,
        irretractable,
        theorem,
        oracle_agrees: true,
    })
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremSummary {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub equivalent: Option<bool>,
}

/// The full analysis of one cycle set, as rendered by [`crate::io::emit_report`].
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub size: usize,
    pub valid: bool,
    pub indecomposable: bool,
    pub irretractable: bool,
    pub simple_oracle: bool,
    pub group_order: usize,
    pub ideal_sizes: Vec<usize>,
    pub theorem: TheoremSummary,
    pub classification: String,
    pub retraction_tower: Vec<usize>,
    pub multipermutation_level: Option<usize>,
    pub socle_size: usize,
    pub minimal_ideal_sizes: Vec<usize>,
}

pub fn analyze(x: &CycleSet) -> Result<Analysis> {
    let g = gbrace(x)?;
    let lattice = g.brace.all_ideals()?;
    let report = theorem_characterization(&g.brace, &g.base())?;
    if report.equivalent == Some(false) {
        return Err(Error::Inconsistency(format!(
            "theorem conditions disagree: cond1 = {}, cond2 = {}, cond3 = {}",
            report.cond1, report.cond2, report.cond3
        )));
    }
    let classification = classify_cycle_set(x)?;
    Ok(Analysis {
        size: x.size(),
        valid: true,
        indecomposable: x.is_indecomposable(),
        irretractable: x.is_irretractable(),
        simple_oracle: x.is_simple_oracle(),
        group_order: g.group.order(),
        ideal_sizes: lattice.sizes(),
        theorem: TheoremSummary {
            cond1: report.cond1,
            cond2: report.cond2,
            cond3: report.cond3,
            equivalent: report.equivalent,
        },
        classification: classification.branch.as_str().to_string(),
        retraction_tower: x.retraction_tower()?,
        multipermutation_level: x.multipermutation_level()?,
        socle_size: g.brace.socle()?.len(),
        minimal_ideal_sizes: lattice.minimal().iter().map(|i| i.len()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::catalog_entry;

    fn entry(id: &str) -> CycleSet {
        catalog_entry(id).unwrap().cycle_set
    }

    #[test]
    fn primes() {
        let p: Vec<usize> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn p4_theorem() {
        let g = gbrace(&entry("P4")).unwrap();
        let r = theorem_characterization(&g.brace, &g.base()).unwrap();
        assert!(r.preconditions.hold());
        assert!(r.cond1 && r.cond2 && r.cond3);
        assert_eq!(r.equivalent, Some(true));
        assert_eq!(r.minimal_ideals.len(), 1);
        assert_eq!(r.minimal_ideals[0].len(), 4);
    }

    #[test]
    fn trivial_z4_fails_preconditions() {
        let b = LeftBrace::trivial_cyclic(4).unwrap();
        let r = theorem_characterization(&b, &[1]).unwrap();
        assert!(!r.preconditions.soc_trivial);
        assert_eq!(r.equivalent, None);
    }

    #[test]
    fn galois_maps_on_p4() {
        let g = gbrace(&entry("P4")).unwrap();
        let base = g.base();
        let lattice = g.brace.all_ideals().unwrap();
        let sizes: Vec<usize> = lattice
            .ideals()
            .iter()
            .map(|i| {
                ideal_to_congruence(&g.brace, i, &base)
                    .unwrap()
                    .num_classes()
            })
            .collect();
        assert_eq!(sizes, vec![4, 1, 1]);

        let zero = congruence_to_ideal(&g.brace, &base, &Congruence::discrete(4)).unwrap();
        assert!(zero.is_zero());
        let full = congruence_to_ideal(&g.brace, &base, &Congruence::full(4)).unwrap();
        assert!(full.len() >= 4);
        assert!(g.brace.acts_transitively(&full, &base).unwrap());
        let c = ideal_to_congruence(&g.brace, &full, &base).unwrap();
        assert_eq!(congruence_to_ideal(&g.brace, &base, &c).unwrap(), full);
    }

    #[test]
    fn minimal_ideal_on_p4() {
        let r = check_preid(&entry("P4")).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!((r.minimal_size, r.quotient_order), (4, 2));
        assert!(r.sigma_span_agrees);
        assert!(matches!(
            check_preid(&entry("C_5")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_preid(&CycleSet::trivial(4).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn classification_branches() {
        let c7 = classify_cycle_set(&entry("C_7")).unwrap();
        assert_eq!((c7.branch, c7.simple), (Branch::PrimeCyclic, true));
        let t4 = classify_cycle_set(&CycleSet::trivial(4).unwrap()).unwrap();
        assert_eq!((t4.branch, t4.simple), (Branch::Decomposable, false));
        let p4 = classify_cycle_set(&entry("P4")).unwrap();
        assert_eq!((p4.branch, p4.simple), (Branch::BraceCriterion, true));
        let z4 = classify_cycle_set(&CycleSet::cyclic(4).unwrap()).unwrap();
        assert_eq!((z4.branch, z4.simple), (Branch::Retractable, false));
        let one = classify_cycle_set(&CycleSet::trivial(1).unwrap()).unwrap();
        assert_eq!((one.branch, one.simple), (Branch::Singleton, false));
        let two = classify_cycle_set(&CycleSet::trivial(2).unwrap()).unwrap();
        assert_eq!((two.branch, two.simple), (Branch::SizeTwo, true));
    }

    #[test]
    fn analysis_of_singleton() {
        let a = analyze(&CycleSet::trivial(1).unwrap()).unwrap();
        assert!(!a.simple_oracle);
        assert_eq!(a.group_order, 1);
        assert_eq!(a.multipermutation_level, Some(0));
    }
}

//! The left brace on the permutation group of a cycle set.
//!
//! Multiplication is composition in `𝒢(X)`. Addition is built from the
//! generators `e(x) = σ_x⁻¹` with the rule `g + e(z) = g ∘ e(g⁻¹(z))`, which
//! is `a∘b = a + λ_a(b)` together with `λ_g(e(x)) = e(g(x))`. Every general
//! sum `g + h` folds `h`'s breadth-first generator word onto `g`. The result
//! is never trusted: it goes through the full brace validation.

use std::collections::VecDeque;

use serde::Serialize;

use crate::brace::{normalize, LeftBrace};
use crate::cycleset::CycleSet;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

#[derive(Clone, Debug)]
pub struct GBrace {
    pub brace: LeftBrace,
    pub group: PermGroup,
    /// `embed[x]` is the carrier index of `σ_x⁻¹`.
    pub embed: Vec<usize>,
    /// For each carrier element, point labels `z_1..z_k` with
    /// `element = e(z_1) + ... + e(z_k)`.
    pub additive_words: Vec<Vec<usize>>,
}

pub fn gbrace(x: &CycleSet) -> Result<GBrace> {
    let n = x.size();
    let group = x.permutation_group();
    let m = group.order();
    let index = |p: &crate::perm::Perm| {
        group
            .index_of(p)
            .ok_or_else(|| Error::Inconsistency(format!("{p} escapes the permutation group")))
    };
    let embed: Vec<usize> = x
        .sigmas()
        .iter()
        .map(|s| index(&s.inverse()))
        .collect::<Result<_>>()?;

    let mut add_gen = vec![vec![0; n]; m];
    for (g, row) in add_gen.iter_mut().enumerate() {
        let elem = group.element(g);
        let elem_inv = elem.inverse();
        for (z, slot) in row.iter_mut().enumerate() {
            let e = group.element(embed[elem_inv.apply(z)]);
            *slot = index(&(elem * e))?;
        }
    }

    let mut words: Vec<Option<Vec<usize>>> = vec![None; m];
    words[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(g) = queue.pop_front() {
        for z in 0..n {
            let h = add_gen[g][z];
            if words[h].is_none() {
                let mut w = words[g].clone().unwrap();
                w.push(z);
                words[h] = Some(w);
                queue.push_back(h);
            }
        }
    }
    let reached = words.iter().filter(|w| w.is_some()).count();
    if reached != m {
        return Err(Error::Inconsistency(format!(
            "additive closure reached {reached} of {m} group elements"
        )));
    }
    let additive_words: Vec<Vec<usize>> = words.into_iter().map(Option::unwrap).collect();

    let add: Vec<Vec<usize>> = (0..m)
        .map(|g| {
            (0..m)
                .map(|h| additive_words[h].iter().fold(g, |acc, &z| add_gen[acc][z]))
                .collect()
        })
        .collect();
    let mul: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| index(&(group.element(a) * group.element(b))))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let brace = LeftBrace::from_tables(add, mul).map_err(|e| {
        Error::Inconsistency(format!("constructed tables are not a left brace: {e}"))
    })?;
    Ok(GBrace {
        brace,
        group,
        embed,
        additive_words,
    })
}

impl GBrace {
    /// Image of the embedding, sorted and deduplicated.
    pub fn base(&self) -> Vec<usize> {
        normalize(&self.embed)
    }

    /// `λ_g(e(x)) = e(g(x))` for every group element and point.
    pub fn check_lambda_action(&self) -> Result<()> {
        for g in 0..self.group.order() {
            let perm = self.group.element(g);
            for x in 0..self.embed.len() {
                if self.brace.lambda(g).apply(self.embed[x]) != self.embed[perm.apply(x)] {
                    return Err(Error::Inconsistency(format!(
                        "lambda_g(e(x)) != e(g(x)) for g = {perm}, x = {}",
                        x + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Re-evaluates every additive word and compares with the table.
    pub fn check_words(&self) -> Result<()> {
        for (g, word) in self.additive_words.iter().enumerate() {
            let sum = word
                .iter()
                .fold(0, |acc, &z| self.brace.add(acc, self.embed[z]));
            if sum != g {
                return Err(Error::Inconsistency(format!(
                    "additive word of element {g} sums to {sum}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrelcarOutcome {
    pub isomorphic: bool,
    /// Image in `B` of each element of the reconstructed brace, when an
    /// isomorphism was found.
    pub map: Option<Vec<usize>>,
    pub reason: Option<String>,
}

/// For a brace `b` with trivial socle and a transitive cycle base `x`, checks
/// that the brace of the permutation group of `x` is isomorphic to `b` via
/// the extension of `σ_x⁻¹ ↦ x`.
pub fn check_prelcar(b: &LeftBrace, x: &[usize]) -> Result<PrelcarOutcome> {
    let base = normalize(x);
    if b.order() <= 1 {
        return Err(Error::Precondition("brace must have order > 1".into()));
    }
    if !b.socle()?.is_zero() {
        return Err(Error::Precondition("socle is not trivial".into()));
    }
    if !b.is_transitive_cycle_base(&base) {
        return Err(Error::Precondition(
            "subset is not a transitive cycle base".into(),
        ));
    }
    let y = b.sub_cycle_set(&base)?;
    let g = gbrace(&y)?;
    let m = g.brace.order();
    let fail = |reason: String| {
        Ok(PrelcarOutcome {
            isomorphic: false,
            map: None,
            reason: Some(reason),
        })
    };
    if m != b.order() {
        return fail(format!("orders differ: {m} vs {}", b.order()));
    }
    let mut phi: Vec<Option<usize>> = vec![None; m];
    phi[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        let image = phi[h].unwrap();
        for (i, &point) in base.iter().enumerate() {
            let next = g.brace.mul(h, g.embed[i]);
            let target = b.mul(image, point);
            match phi[next] {
                None => {
                    phi[next] = Some(target);
                    queue.push_back(next);
                }
                Some(t) if t != target => {
                    return fail(format!(
                        "generator extension is not well defined at element {next}"
                    ));
                }
                Some(_) => {}
            }
        }
    }
    let Some(phi) = phi.into_iter().collect::<Option<Vec<usize>>>() else {
        return fail("multiplicative closure of the generators is incomplete".into());
    };
    let mut hit = vec![false; m];
    for &p in &phi {
        if std::mem::replace(&mut hit[p], true) {
            return fail(format!("map is not injective at image {p}"));
        }
    }
    for u in 0..m {
        for v in 0..m {
            if phi[g.brace.mul(u, v)] != b.mul(phi[u], phi[v]) {
                return fail(format!("∘ not preserved at ({u}, {v})"));
            }
            if phi[g.brace.add(u, v)] != b.add(phi[u], phi[v]) {
                return fail(format!("+ not preserved at ({u}, {v})"));
            }
        }
    }
    Ok(PrelcarOutcome {
        isomorphic: true,
        map: Some(phi),
        reason: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SocleQuotientOutcome {
    pub holds: bool,
    pub kernel: Vec<usize>,
    pub image_order: usize,
    pub witness: Option<String>,
}

/// Checks that `a ↦ λ_a`, read as an element of the brace on the permutation
/// group of the derived cycle set, is a surjective brace homomorphism whose
/// kernel is the socle.
pub fn socle_quotient_check(a: &LeftBrace) -> Result<SocleQuotientOutcome> {
    let derived = a.derived_cycle_set()?;
    let g = gbrace(&derived)?;
    // λ_a = σ_a⁻¹ in the derived cycle set, which is exactly the embedding.
    let phi = &g.embed;
    let m = a.order();
    let kernel: Vec<usize> = (0..m).filter(|&x| phi[x] == 0).collect();
    let mut outcome = SocleQuotientOutcome {
        holds: false,
        kernel,
        image_order: g.brace.order(),
        witness: None,
    };
    for x in 0..m {
        for y in 0..m {
            if phi[a.mul(x, y)] != g.brace.mul(phi[x], phi[y]) {
                outcome.witness = Some(format!("∘ not preserved at ({x}, {y})"));
                return Ok(outcome);
            }
            if phi[a.add(x, y)] != g.brace.add(phi[x], phi[y]) {
                outcome.witness = Some(format!("+ not preserved at ({x}, {y})"));
                return Ok(outcome);
            }
        }
    }
    if normalize(phi).len() != g.brace.order() {
        outcome.witness = Some("map is not surjective".into());
        return Ok(outcome);
    }
    if outcome.kernel != a.socle()?.elements() {
        outcome.witness = Some("kernel differs from the socle".into());
        return Ok(outcome);
    }
    outcome.holds = true;
    Ok(outcome)
}

//! Finite left braces given by explicit addition and multiplication tables.
//!
//! The carrier is `{0..m-1}` and `0` is the neutral element of both
//! operations. Tables are dense; every constructor runs the full axiom check.

mod ideal;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

pub use ideal::{Ideal, IdealLattice};

use crate::cycleset::{Congruence, CycleSet};
use crate::error::{Error, Result};
use crate::perm::{self, Perm};

/// A failed brace axiom with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BraceViolation {
    Empty,
    Shape {
        table: &'static str,
        row: usize,
        len: usize,
    },
    OutOfRange {
        table: &'static str,
        a: usize,
        b: usize,
        value: usize,
    },
    Neutral {
        table: &'static str,
        a: usize,
    },
    NotCommutative {
        a: usize,
        b: usize,
    },
    NotAssociative {
        table: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },
    NoInverse {
        table: &'static str,
        a: usize,
    },
    Compatibility {
        a: usize,
        b: usize,
        c: usize,
    },
    LambdaNotAdditive {
        a: usize,
        b: usize,
        c: usize,
    },
    LambdaNotMultiplicative {
        a: usize,
        b: usize,
    },
}

impl fmt::Display for BraceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BraceViolation::*;
        match *self {
            Empty => f.write_str("empty carrier"),
            Shape { table, row, len } => write!(f, "{table} table row {row} has length {len}"),
            OutOfRange { table, a, b, value } => {
                write!(
                    f,
                    "{table} table entry ({a}, {b}) = {value} is out of range"
                )
            }
            Neutral { table, a } => write!(f, "0 is not neutral for {table} at {a}"),
            NotCommutative { a, b } => write!(f, "{a} + {b} != {b} + {a}"),
            NotAssociative { table, a, b, c } => {
                write!(f, "{table} is not associative at ({a}, {b}, {c})")
            }
            NoInverse { table, a } => write!(f, "{a} has no inverse for {table}"),
            Compatibility { a, b, c } => {
                write!(f, "a∘(b+c)+a != a∘b+a∘c at a={a}, b={b}, c={c}")
            }
            LambdaNotAdditive { a, b, c } => {
                write!(f, "lambda_{a} is not additive at ({b}, {c})")
            }
            LambdaNotMultiplicative { a, b } => {
                write!(f, "lambda_(a∘b) != lambda_a lambda_b at a={a}, b={b}")
            }
        }
    }
}

/// First violation of each axiom group, in checking order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BraceReport {
    pub violations: Vec<BraceViolation>,
}

impl BraceReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every left-brace axiom on raw tables (`add[a][b] = a + b`,
/// `mul[a][b] = a∘b`), including both properties of the lambda map.
pub fn validate_brace(add: &[Vec<usize>], mul: &[Vec<usize>]) -> BraceReport {
    let mut report = BraceReport::default();
    let v = &mut report.violations;
    let m = add.len();
    if m == 0 {
        v.push(BraceViolation::Empty);
        return report;
    }
    for (table, t) in [("addition", add), ("multiplication", mul)] {
        if t.len() != m {
            v.push(BraceViolation::Shape {
                table,
                row: t.len(),
                len: m,
            });
            return report;
        }
        for (a, row) in t.iter().enumerate() {
            if row.len() != m {
                v.push(BraceViolation::Shape {
                    table,
                    row: a,
                    len: row.len(),
                });
                return report;
            }
            if let Some(b) = row.iter().position(|&x| x >= m) {
                v.push(BraceViolation::OutOfRange {
                    table,
                    a,
                    b,
                    value: row[b],
                });
                return report;
            }
        }
    }
    // Group axioms; later checks need both groups.
    for (table, t) in [("addition", add), ("multiplication", mul)] {
        if let Some(a) = (0..m).find(|&a| t[0][a] != a || t[a][0] != a) {
            v.push(BraceViolation::Neutral { table, a });
        }
        if let Some((a, b, c)) = triples(m).find(|&(a, b, c)| t[t[a][b]][c] != t[a][t[b][c]]) {
            v.push(BraceViolation::NotAssociative { table, a, b, c });
        }
        if let Some(a) = (0..m).find(|&a| !t[a].contains(&0)) {
            v.push(BraceViolation::NoInverse { table, a });
        }
    }
    if let Some((a, b)) = pairs(m).find(|&(a, b)| add[a][b] != add[b][a]) {
        v.push(BraceViolation::NotCommutative { a, b });
    }
    if !report.violations.is_empty() {
        return report;
    }
    let v = &mut report.violations;
    let neg: Vec<usize> = (0..m)
        .map(|a| add[a].iter().position(|&x| x == 0).unwrap())
        .collect();
    if let Some((a, b, c)) =
        triples(m).find(|&(a, b, c)| add[mul[a][add[b][c]]][a] != add[mul[a][b]][mul[a][c]])
    {
        v.push(BraceViolation::Compatibility { a, b, c });
    }
    let lambda = |a: usize, b: usize| add[neg[a]][mul[a][b]];
    if let Some((a, b, c)) =
        triples(m).find(|&(a, b, c)| lambda(a, add[b][c]) != add[lambda(a, b)][lambda(a, c)])
    {
        v.push(BraceViolation::LambdaNotAdditive { a, b, c });
    }
    if let Some((a, b)) =
        pairs(m).find(|&(a, b)| (0..m).any(|c| lambda(mul[a][b], c) != lambda(a, lambda(b, c))))
    {
        v.push(BraceViolation::LambdaNotMultiplicative { a, b });
    }
    report
}

fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |a| (0..m).map(move |b| (a, b)))
}

fn triples(m: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(m).flat_map(move |(a, b)| (0..m).map(move |c| (a, b, c)))
}

#[derive(Clone)]
pub struct LeftBrace {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
    lambda: Vec<Perm>,
}

impl PartialEq for LeftBrace {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.mul == other.mul
    }
}

impl Eq for LeftBrace {}

impl fmt::Debug for LeftBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LeftBrace")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl LeftBrace {
    pub fn from_tables(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(v) = validate_brace(&add, &mul).violations.into_iter().next() {
            return Err(Error::Brace(v));
        }
        let m = add.len();
        let neg: Vec<usize> = (0..m)
            .map(|a| add[a].iter().position(|&x| x == 0).unwrap())
            .collect();
        let inv: Vec<usize> = (0..m)
            .map(|a| mul[a].iter().position(|&x| x == 0).unwrap())
            .collect();
        let lambda = (0..m)
            .map(|a| Perm::from_images((0..m).map(|b| add[neg[a]][mul[a][b]]).collect()))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Inconsistency(format!("lambda map is not bijective: {e}")))?;
        Ok(LeftBrace {
            order: m,
            add: add.concat(),
            mul: mul.concat(),
            neg,
            inv,
            lambda,
        })
    }

    /// The trivial brace on `Z_m`: both operations are addition mod `m`.
    pub fn trivial_cyclic(m: usize) -> Result<Self> {
        let t: Vec<Vec<usize>> = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        Self::from_tables(t.clone(), t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    /// `λ_a(b) = -a + a∘b`.
    pub fn lambda(&self, a: usize) -> &Perm {
        &self.lambda[a]
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn carrier(&self) -> Vec<usize> {
        (0..self.order).collect()
    }

    /// `{a : λ_a = id}`.
    pub fn socle(&self) -> Result<Ideal> {
        let members: Vec<usize> = (0..self.order)
            .filter(|&a| self.lambda[a].is_identity())
            .collect();
        let ideal = Ideal::from_sorted(members);
        self.check_ideal(ideal.elements())
            .map_err(|e| Error::Inconsistency(format!("socle is not an ideal: {e}")))?;
        Ok(ideal)
    }

    /// The cycle set `a·b = λ_a⁻¹(b)` on the carrier.
    pub fn derived_cycle_set(&self) -> Result<CycleSet> {
        CycleSet::new(self.lambda.iter().map(Perm::inverse).collect())
    }

    pub fn lambda_orbits(&self) -> Vec<Vec<usize>> {
        perm::orbits(&self.lambda, self.order, &self.carrier())
    }

    /// Smallest additive subgroup containing `s`.
    pub fn additive_span(&self, s: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        // Finite group: closing under adding generators already yields negatives.
        while let Some(a) = queue.pop_front() {
            for &g in s {
                let b = self.add(a, g);
                if !inside[b] {
                    inside[b] = true;
                    members.push(b);
                    queue.push_back(b);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Lambda-orbits whose additive span is the whole carrier.
    pub fn transitive_cycle_bases(&self) -> Vec<Vec<usize>> {
        self.lambda_orbits()
            .into_iter()
            .filter(|o| self.additive_span(o).len() == self.order)
            .collect()
    }

    pub fn is_transitive_cycle_base(&self, x: &[usize]) -> bool {
        let set = normalize(x);
        self.lambda_orbits().contains(&set) && self.additive_span(&set).len() == self.order
    }

    /// Checks that `x` is a union of lambda-orbits.
    pub fn check_lambda_closed(&self, x: &[usize]) -> Result<()> {
        let mut inside = vec![false; self.order];
        for &p in x {
            inside[p] = true;
        }
        for &p in x {
            if let Some(q) = self.lambda.iter().map(|l| l.apply(p)).find(|&q| !inside[q]) {
                return Err(Error::NotLambdaClosed(q));
            }
        }
        Ok(())
    }

    /// The cycle set `x·y = λ_x⁻¹(y)` restricted to the sorted, deduplicated
    /// subset `x`. Local index `i` stands for `x[i]`.
    pub fn sub_cycle_set(&self, x: &[usize]) -> Result<CycleSet> {
        let set = normalize(x);
        self.check_lambda_closed(&set)?;
        let position = |p: usize| set.binary_search(&p).expect("lambda-closed");
        let rows: Vec<Vec<usize>> = set
            .iter()
            .map(|&a| {
                let li = self.lambda[a].inverse();
                set.iter().map(|&b| position(li.apply(b))).collect()
            })
            .collect();
        CycleSet::from_table(rows)
    }

    /// Checks the ideal axioms; `Err` carries a description of the first failure.
    pub fn check_ideal(&self, s: &[usize]) -> Result<(), String> {
        let mut inside = vec![false; self.order];
        for &p in s {
            inside[p] = true;
        }
        if !inside[0] {
            return Err("does not contain 0".into());
        }
        for &a in s {
            if !inside[self.inv[a]] {
                return Err(format!("missing inverse of {a}"));
            }
            for &b in s {
                if !inside[self.mul(a, b)] {
                    return Err(format!("not closed under ∘ at ({a}, {b})"));
                }
                if !inside[self.add(a, b)] || !inside[self.neg[b]] {
                    return Err(format!("not closed under + at ({a}, {b})"));
                }
            }
            for g in 0..self.order {
                if !inside[self.lambda[g].apply(a)] {
                    return Err(format!("lambda_{g}({a}) leaves the subset"));
                }
                if !inside[self.mul(self.mul(g, a), self.inv[g])] {
                    return Err(format!("conjugate of {a} by {g} leaves the subset"));
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, s: &[usize]) -> bool {
        self.check_ideal(s).is_ok()
    }

    /// Smallest ideal containing `s`: closure under ∘, inverses, every λ_a and
    /// conjugation, iterated to a joint fixpoint.
    pub fn ideal_closure(&self, s: &[usize]) -> Result<Ideal> {
        let m = self.order;
        let mut inside = vec![false; m];
        let mut members: Vec<usize> = Vec::new();
        let push = |p: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
            if !inside[p] {
                inside[p] = true;
                members.push(p);
            }
        };
        push(0, &mut inside, &mut members);
        for &p in s {
            push(p, &mut inside, &mut members);
        }
        loop {
            let before = members.len();
            let snapshot = members.clone();
            for &a in &snapshot {
                push(self.inv[a], &mut inside, &mut members);
                for g in 0..m {
                    push(self.lambda[g].apply(a), &mut inside, &mut members);
                    push(
                        self.mul(self.mul(g, a), self.inv[g]),
                        &mut inside,
                        &mut members,
                    );
                }
                for &b in &snapshot {
                    push(self.mul(a, b), &mut inside, &mut members);
                }
            }
            if members.len() == before {
                break;
            }
        }
        members.sort_unstable();
        if let Some((a, b)) = members
            .iter()
            .flat_map(|&a| members.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| !inside[self.add(a, b)])
        {
            return Err(Error::Inconsistency(format!(
                "lambda-invariant normal subgroup is not additively closed at ({a}, {b})"
            )));
        }
        Ok(Ideal::from_sorted(members))
    }

    /// All ideals, generated as joins of principal ideals.
    pub fn all_ideals(&self) -> Result<IdealLattice> {
        let mut ideals: BTreeSet<Ideal> = BTreeSet::new();
        ideals.insert(Ideal::zero());
        let mut principal: Vec<Ideal> = Vec::new();
        for a in 1..self.order {
            let i = self.ideal_closure(&[a])?;
            if !principal.contains(&i) {
                principal.push(i);
            }
        }
        ideals.extend(principal.iter().cloned());
        let mut frontier: Vec<Ideal> = principal.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for i in &frontier {
                for p in &principal {
                    if p.is_subset(i) {
                        continue;
                    }
                    let joined: Vec<usize> =
                        i.elements().iter().chain(p.elements()).copied().collect();
                    let j = self.ideal_closure(&joined)?;
                    if ideals.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        Ok(IdealLattice::new(ideals.into_iter().collect()))
    }

    /// Quotient by an ideal. Cosets are numbered by their smallest element, so
    /// the coset of 0 is 0. Returns the brace and the class of each element.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(LeftBrace, Vec<usize>)> {
        let m = self.order;
        self.check_ideal(ideal.elements())
            .map_err(Error::NotIdeal)?;
        let mut class = vec![usize::MAX; m];
        let mut reps = Vec::new();
        for a in 0..m {
            if class[a] != usize::MAX {
                continue;
            }
            for &i in ideal.elements() {
                class[self.mul(a, i)] = reps.len();
            }
            reps.push(a);
        }
        let k = reps.len();
        let mut add = vec![vec![0; k]; k];
        let mut mul = vec![vec![0; k]; k];
        for (ca, &a) in reps.iter().enumerate() {
            for (cb, &b) in reps.iter().enumerate() {
                add[ca][cb] = class[self.add(a, b)];
                mul[ca][cb] = class[self.mul(a, b)];
            }
        }
        for (a, b) in pairs(m) {
            let (ca, cb) = (class[a], class[b]);
            if add[ca][cb] != class[self.add(a, b)] || mul[ca][cb] != class[self.mul(a, b)] {
                return Err(Error::NotIdeal(format!(
                    "coset operations depend on representatives at ({a}, {b})"
                )));
            }
        }
        Ok((LeftBrace::from_tables(add, mul)?, class))
    }

    pub fn quotient_brace(&self, ideal: &Ideal) -> Result<LeftBrace> {
        self.quotient(ideal).map(|(b, _)| b)
    }

    pub fn is_trivial_brace(&self) -> bool {
        self.add == self.mul
    }

    pub fn is_cyclic_additive(&self) -> bool {
        (0..self.order).any(|g| self.additive_span(&[g]).len() == self.order)
    }

    /// `|B| > 1` and the only ideals are `{0}` and `B`.
    pub fn is_simple_brace(&self) -> Result<bool> {
        Ok(self.order > 1 && self.all_ideals()?.len() == 2)
    }

    /// Orbits of `x` under `{λ_i : i ∈ ideal}`, as a partition of local indices
    /// into the sorted subset `x`.
    pub fn ideal_action_orbits(&self, ideal: &Ideal, x: &[usize]) -> Result<Congruence> {
        let set = normalize(x);
        self.check_lambda_closed(&set)?;
        let gens: Vec<Perm> = ideal
            .elements()
            .iter()
            .map(|&i| self.lambda[i].clone())
            .collect();
        let orbits = perm::orbits(&gens, self.order, &set);
        let local: Vec<Vec<usize>> = orbits
            .iter()
            .map(|o| o.iter().map(|p| set.binary_search(p).unwrap()).collect())
            .collect();
        Ok(Congruence::from_classes(set.len(), &local))
    }

    /// Whether `ideal` acts transitively on `x` through lambda.
    pub fn acts_transitively(&self, ideal: &Ideal, x: &[usize]) -> Result<bool> {
        Ok(self.ideal_action_orbits(ideal, x)?.num_classes() <= 1)
    }
}

pub(crate) fn normalize(x: &[usize]) -> Vec<usize> {
    let mut v = x.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Z_2 × Z_2 addition with Z_4 multiplication, both with neutral 0.
    /// Elements: 0=(0,0), 1=(1,0), 2=(0,1), 3=(1,1); ∘ is Z_4 with 1 as generator.
    fn v4_with_z4() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect();
        (add, mul)
    }

    #[test]
    fn trivial_cyclic_is_valid() {
        let b = LeftBrace::trivial_cyclic(4).unwrap();
        assert!(b.is_trivial_brace());
        assert!(b.is_cyclic_additive());
        assert!((0..4).all(|a| b.lambda(a).is_identity()));
    }

    #[test]
    fn v4_with_z4_is_a_brace() {
        // Oracle: direct evaluation of a∘(b+c)+a = a∘b+a∘c over all 64 triples.
        let (add, mul) = v4_with_z4();
        let holds = (0..4).all(|a| {
            (0..4).all(|b| (0..4).all(|c| add[mul[a][add[b][c]]][a] == add[mul[a][b]][mul[a][c]]))
        });
        assert!(holds);
        let b = LeftBrace::from_tables(add, mul).unwrap();
        assert!(!b.is_trivial_brace());
        assert!(!b.is_cyclic_additive());
        // lambda_1 = -1 + 1∘b swaps 1 and 3.
        assert_eq!(b.lambda(1).images(), &[0, 3, 2, 1]);
    }

    #[test]
    fn rejects_non_abelian_addition() {
        // S_3 as "addition": 0 = id, generated as image lists.
        let g = crate::perm::PermGroup::closure(
            3,
            &[Perm::from_cycles(3, &[vec![0, 1]]).unwrap(), Perm::cycle(3)],
        )
        .unwrap();
        let t: Vec<Vec<usize>> = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| g.index_of(&(g.element(a) * g.element(b))).unwrap())
                    .collect()
            })
            .collect();
        let report = validate_brace(&t, &t);
        assert!(matches!(
            report.violations[0],
            BraceViolation::NotCommutative { .. }
        ));
    }

    #[test]
    fn rejects_distinct_neutrals() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            validate_brace(&add, &mul).violations[0],
            BraceViolation::Neutral {
                table: "multiplication",
                ..
            }
        ));
    }

    #[test]
    fn trivial_brace_structure() {
        let b = LeftBrace::trivial_cyclic(6).unwrap();
        assert_eq!(b.socle().unwrap().len(), 6);
        assert_eq!(b.additive_span(&[]), vec![0]);
        assert_eq!(b.additive_span(&[2]), vec![0, 2, 4]);
        assert_eq!(
            b.derived_cycle_set().unwrap(),
            CycleSet::trivial(6).unwrap()
        );
        assert_eq!(b.lambda_orbits().len(), 6);
    }

    #[test]
    fn trivial_cyclic_prime_bases() {
        let b = LeftBrace::trivial_cyclic(5).unwrap();
        let bases = b.transitive_cycle_bases();
        assert_eq!(bases, vec![vec![1], vec![2], vec![3], vec![4]]);
        let b4 = LeftBrace::trivial_cyclic(4).unwrap();
        assert_eq!(b4.transitive_cycle_bases(), vec![vec![1], vec![3]]);
    }

    #[test]
    fn ideals_of_trivial_z4() {
        let b = LeftBrace::trivial_cyclic(4).unwrap();
        let lattice = b.all_ideals().unwrap();
        assert_eq!(lattice.sizes(), vec![1, 2, 4]);
        assert!(!b.is_simple_brace().unwrap());
        assert!(b.is_ideal(&[0, 2]));
        assert_eq!(lattice.minimal().len(), 1);
        assert_eq!(lattice.minimal()[0].elements(), &[0, 2]);
    }

    #[test]
    fn order_one_and_prime_orders() {
        let one = LeftBrace::trivial_cyclic(1).unwrap();
        assert!(one.is_trivial_brace() && one.is_cyclic_additive());
        assert!(!one.is_simple_brace().unwrap());
        assert!(LeftBrace::trivial_cyclic(3)
            .unwrap()
            .is_simple_brace()
            .unwrap());
    }

    #[test]
    fn quotient_examples() {
        let b = LeftBrace::trivial_cyclic(6).unwrap();
        let (q, class) = b.quotient(&Ideal::zero()).unwrap();
        assert_eq!(q, b);
        assert_eq!(class, vec![0, 1, 2, 3, 4, 5]);
        let full = Ideal::from_sorted(b.carrier());
        assert_eq!(b.quotient_brace(&full).unwrap().order(), 1);
        let q = b.quotient_brace(&b.ideal_closure(&[2]).unwrap()).unwrap();
        assert_eq!(q, LeftBrace::trivial_cyclic(2).unwrap());
        assert!(b.quotient(&Ideal::from_sorted(vec![0, 1])).is_err());
    }

    #[test]
    fn sub_cycle_set_requires_lambda_closure() {
        let b = LeftBrace::trivial_cyclic(4).unwrap();
        assert_eq!(b.sub_cycle_set(&[0]).unwrap().size(), 1);
        assert_eq!(
            b.sub_cycle_set(&b.carrier()).unwrap(),
            b.derived_cycle_set().unwrap()
        );
        let ideal = b.ideal_closure(&[]).unwrap();
        assert!(ideal.is_zero());
        let c = b.ideal_action_orbits(&ideal, &[1, 3]).unwrap();
        assert!(c.is_discrete());
    }
}

//! Finite non-degenerate cycle sets.
//!
//! A cycle set of size `n` is stored as its rows `σ_x`, with `x·y = σ_x(y)`.
//! Values of [`CycleSet`] are always valid: the only constructors run the
//! full axiom check.

mod congruence;
mod enumerate;
mod iso;
mod solution;

use std::fmt;

use serde::Serialize;

pub use congruence::{all_congruences, Congruence};
pub use enumerate::{enumerate_cycle_sets, DEFAULT_ENUMERATION_LIMIT};
pub use iso::are_isomorphic;
pub use solution::Solution;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// A failed cycle-set axiom with a 0-based witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Empty,
    RowLength {
        x: usize,
        len: usize,
        expected: usize,
    },
    NotBijective {
        x: usize,
    },
    Identity {
        x: usize,
        y: usize,
        z: usize,
    },
    Degenerate {
        x: usize,
        y: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Empty => f.write_str("empty carrier"),
            Violation::RowLength { x, len, expected } => {
                write!(f, "row {} has length {len}, expected {expected}", x + 1)
            }
            Violation::NotBijective { x } => {
                write!(f, "left multiplication by {} is not bijective", x + 1)
            }
            Violation::Identity { x, y, z } => write!(
                f,
                "(x·y)·(x·z) != (y·x)·(y·z) at x={}, y={}, z={}",
                x + 1,
                y + 1,
                z + 1
            ),
            Violation::Degenerate { x, y } => {
                write!(
                    f,
                    "squaring map is not injective: {0}·{0} = {1}·{1}",
                    x + 1,
                    y + 1
                )
            }
        }
    }
}

/// Outcome of checking each axiom separately. `Ok(())` means the axiom holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub left_multiplications: Result<(), Violation>,
    pub cycle_identity: Result<(), Violation>,
    pub non_degenerate: Result<(), Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.left_multiplications.is_ok()
            && self.cycle_identity.is_ok()
            && self.non_degenerate.is_ok()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        [
            &self.left_multiplications,
            &self.cycle_identity,
            &self.non_degenerate,
        ]
        .into_iter()
        .find_map(|r| r.as_ref().err())
    }
}

/// Checks the cycle-set axioms on a raw table (`rows[x][y] = x·y`, 0-based).
pub fn validate(rows: &[Vec<usize>]) -> ValidationReport {
    let n = rows.len();
    let skipped = || Err(Violation::Empty);
    if n == 0 {
        return ValidationReport {
            left_multiplications: Err(Violation::Empty),
            cycle_identity: skipped(),
            non_degenerate: skipped(),
        };
    }
    let mut left = Ok(());
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            left = Err(Violation::RowLength {
                x,
                len: row.len(),
                expected: n,
            });
            break;
        }
        let mut seen = vec![false; n];
        if row
            .iter()
            .any(|&y| y >= n || std::mem::replace(&mut seen[y], true))
        {
            left = Err(Violation::NotBijective { x });
            break;
        }
    }
    if let Err(v) = left {
        // The remaining checks index through the table and need it well formed.
        return ValidationReport {
            left_multiplications: Err(v.clone()),
            cycle_identity: Err(v.clone()),
            non_degenerate: Err(v),
        };
    }
    let m = |a: usize, b: usize| rows[a][b];
    let mut identity = Ok(());
    'outer: for x in 0..n {
        for y in 0..n {
            let (xy, yx) = (m(x, y), m(y, x));
            for z in 0..n {
                if m(xy, m(x, z)) != m(yx, m(y, z)) {
                    identity = Err(Violation::Identity { x, y, z });
                    break 'outer;
                }
            }
        }
    }
    let mut owner = vec![None; n];
    let mut non_degenerate = Ok(());
    for x in 0..n {
        let sq = m(x, x);
        if let Some(y) = owner[sq] {
            non_degenerate = Err(Violation::Degenerate { x: y, y: x });
            break;
        }
        owner[sq] = Some(x);
    }
    ValidationReport {
        left_multiplications: Ok(()),
        cycle_identity: identity,
        non_degenerate,
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleSet {
    sigma: Vec<Perm>,
}

impl CycleSet {
    /// Builds a cycle set from its left multiplications, running the full validation.
    pub fn new(sigma: Vec<Perm>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = sigma.iter().map(|p| p.images().to_vec()).collect();
        Self::from_table(rows)
    }

    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let report = validate(&rows);
        if let Some(v) = report.first_violation() {
            return Err(Error::CycleSet(v.clone()));
        }
        let sigma = rows
            .into_iter()
            .map(Perm::from_images)
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleSet { sigma })
    }

    /// The trivial cycle set `x·y = y`.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(vec![Perm::identity(n); n])
    }

    /// The cycle set on `Z_n` with every `σ_x` equal to `i -> i + 1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![Perm::cycle(n); n])
    }

    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.sigma[x].apply(y)
    }

    pub fn sigma(&self, x: usize) -> &Perm {
        &self.sigma[x]
    }

    pub fn sigmas(&self) -> &[Perm] {
        &self.sigma
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.sigma.iter().map(|p| p.images().to_vec()).collect()
    }

    pub fn to_solution(&self) -> Solution {
        Solution::from_cycle_set(self)
    }

    pub fn from_solution(s: &Solution) -> Result<Self> {
        s.to_cycle_set()
    }

    /// The associated permutation group generated by all `σ_x`.
    pub fn permutation_group(&self) -> PermGroup {
        PermGroup::closure(self.size(), &self.sigma).expect("rows share the carrier degree")
    }

    pub fn is_indecomposable(&self) -> bool {
        let points: Vec<usize> = (0..self.size()).collect();
        crate::perm::is_transitive(&self.sigma, self.size(), &points)
    }

    pub fn is_irretractable(&self) -> bool {
        let mut rows: Vec<&Perm> = self.sigma.iter().collect();
        rows.sort();
        rows.windows(2).all(|w| w[0] != w[1])
    }

    /// Quotient by `x ~ y iff σ_x = σ_y`.
    pub fn retraction(&self) -> Result<Retraction> {
        let n = self.size();
        let mut reps: Vec<usize> = Vec::new();
        let mut projection = vec![0; n];
        for x in 0..n {
            match reps.iter().position(|&r| self.sigma[r] == self.sigma[x]) {
                Some(c) => projection[x] = c,
                None => {
                    projection[x] = reps.len();
                    reps.push(x);
                }
            }
        }
        let rows: Vec<Vec<usize>> = reps
            .iter()
            .map(|&rx| {
                reps.iter()
                    .map(|&ry| projection[self.mul(rx, ry)])
                    .collect()
            })
            .collect();
        // Representative independence over every pair.
        for x in 0..n {
            for y in 0..n {
                if rows[projection[x]][projection[y]] != projection[self.mul(x, y)] {
                    return Err(Error::Inconsistency(format!(
                        "retraction is representative-dependent at ({}, {})",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        let cycle_set = CycleSet::from_table(rows)
            .map_err(|e| Error::Inconsistency(format!("retraction is not a cycle set: {e}")))?;
        Ok(Retraction {
            cycle_set,
            projection,
        })
    }

    /// Smallest `k` with `|Ret^k(X)| = 1`, or `None` if the retraction tower
    /// stalls at an irretractable cycle set of size > 1.
    pub fn multipermutation_level(&self) -> Result<Option<usize>> {
        let tower = self.retraction_tower()?;
        Ok((tower.last() == Some(&1)).then(|| tower.len() - 1))
    }

    /// Sizes `|X|, |Ret(X)|, |Ret²(X)|, ...` up to the first fixed point.
    pub fn retraction_tower(&self) -> Result<Vec<usize>> {
        let mut sizes = vec![self.size()];
        let mut current = self.clone();
        while current.size() > 1 && !current.is_irretractable() {
            current = current.retraction()?.cycle_set;
            sizes.push(current.size());
        }
        Ok(sizes)
    }

    /// Checks `f(x·y) = f(x)·f(y)` for a map `f` from `self` into `other`.
    pub fn is_homomorphism(&self, other: &CycleSet, f: &[usize]) -> bool {
        f.len() == self.size()
            && f.iter().all(|&v| v < other.size())
            && (0..self.size())
                .all(|x| (0..self.size()).all(|y| f[self.mul(x, y)] == other.mul(f[x], f[y])))
    }

    /// Transports the structure along the bijection `f`: the result has
    /// `f(x)·f(y) = f(x·y)`.
    pub fn relabel(&self, f: &Perm) -> Result<CycleSet> {
        let n = self.size();
        if f.degree() != n {
            return Err(Error::DegreeMismatch(n, f.degree()));
        }
        let mut sigma = vec![Perm::identity(n); n];
        for x in 0..n {
            sigma[f.apply(x)] = self.sigma[x].relabel(f);
        }
        CycleSet::new(sigma)
    }
}

impl fmt::Debug for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.sigma.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Retraction {
    pub cycle_set: CycleSet,
    /// Class index of each point, classes numbered by first occurrence.
    pub projection: Vec<usize>,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn from_cycles(n: usize, rows: &[&[&[usize]]]) -> CycleSet {
        let sigma = rows
            .iter()
            .map(|cycles| {
                let c: Vec<Vec<usize>> = cycles
                    .iter()
                    .map(|c| c.iter().map(|p| p - 1).collect())
                    .collect();
                Perm::from_cycles(n, &c).unwrap()
            })
            .collect();
        CycleSet::new(sigma).unwrap()
    }

    pub(crate) fn p4() -> CycleSet {
        from_cycles(
            4,
            &[&[&[2, 4]], &[&[1, 3]], &[&[1, 2, 3, 4]], &[&[1, 4, 3, 2]]],
        )
    }

    #[test]
    fn validate_examples() {
        let trivial = vec![vec![0, 1, 2]; 3];
        assert!(validate(&trivial).is_valid());
        assert!(validate(&p4().table()).is_valid());

        let bad = vec![vec![0, 1], vec![1, 0]];
        let report = validate(&bad);
        assert!(!report.is_valid());
        // Witness from exhaustive check: x=1,y=2,z=1 (1-based).
        let Err(Violation::Identity { x, y, z }) = report.cycle_identity else {
            panic!("expected identity failure, got {report:?}");
        };
        let m = |a: usize, b: usize| bad[a][b];
        assert_ne!(m(m(x, y), m(x, z)), m(m(y, x), m(y, z)));
    }

    #[test]
    fn validate_rejects_malformed() {
        assert_eq!(validate(&[]).first_violation(), Some(&Violation::Empty));
        let r = validate(&[vec![0, 0], vec![0, 1]]);
        assert_eq!(
            r.left_multiplications,
            Err(Violation::NotBijective { x: 0 })
        );
        let r = validate(&[vec![0], vec![0, 1]]);
        assert!(matches!(
            r.left_multiplications,
            Err(Violation::RowLength { x: 0, .. })
        ));
    }

    #[test]
    fn degenerate_table_is_rejected() {
        // x·y = σ(y) with σ_0 = (0 1), σ_1 = id: squaring sends 0 -> 1 and 1 -> 1.
        let rows = vec![vec![1, 0], vec![0, 1]];
        let report = validate(&rows);
        assert_eq!(
            report.non_degenerate,
            Err(Violation::Degenerate { x: 0, y: 1 })
        );
    }

    #[test]
    fn group_orders() {
        assert_eq!(p4().permutation_group().order(), 8);
        assert_eq!(CycleSet::cyclic(5).unwrap().permutation_group().order(), 5);
    }

    #[test]
    fn indecomposability() {
        assert!(!CycleSet::trivial(2).unwrap().is_indecomposable());
        assert!(CycleSet::cyclic(7).unwrap().is_indecomposable());
        assert!(p4().is_indecomposable());
    }

    #[test]
    fn retraction_examples() {
        let c5 = CycleSet::cyclic(5).unwrap();
        let r = c5.retraction().unwrap();
        assert_eq!(r.cycle_set.size(), 1);
        assert_eq!(r.projection, vec![0; 5]);
        assert_eq!(p4().retraction().unwrap().cycle_set, p4());
        assert_eq!(
            CycleSet::trivial(3)
                .unwrap()
                .retraction()
                .unwrap()
                .cycle_set
                .size(),
            1
        );

        assert!(p4().is_irretractable());
        assert!(!CycleSet::cyclic(7).unwrap().is_irretractable());
        assert!(CycleSet::trivial(1).unwrap().is_irretractable());
    }

    #[test]
    fn retraction_projection_is_epimorphism() {
        for x in [
            p4(),
            CycleSet::cyclic(4).unwrap(),
            CycleSet::trivial(3).unwrap(),
        ] {
            let r = x.retraction().unwrap();
            assert!(x.is_homomorphism(&r.cycle_set, &r.projection));
        }
    }

    #[test]
    fn multipermutation_levels() {
        assert_eq!(
            CycleSet::trivial(1)
                .unwrap()
                .multipermutation_level()
                .unwrap(),
            Some(0)
        );
        assert_eq!(
            CycleSet::cyclic(5)
                .unwrap()
                .multipermutation_level()
                .unwrap(),
            Some(1)
        );
        assert_eq!(p4().multipermutation_level().unwrap(), None);
    }

    #[test]
    fn relabel_gives_isomorphic_copy() {
        let f = Perm::from_cycles(4, &[vec![0, 2]]).unwrap();
        let y = p4().relabel(&f).unwrap();
        let fmap: Vec<usize> = (0..4).map(|i| f.apply(i)).collect();
        assert!(p4().is_homomorphism(&y, &fmap));
    }
}

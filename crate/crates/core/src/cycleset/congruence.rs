use std::fmt;

use serde::Serialize;

use super::CycleSet;
use crate::error::{Error, Result};

/// An equivalence relation on `{0..n-1}`, stored canonically: each point is
/// mapped to the smallest member of its class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Congruence {
    rep: Vec<usize>,
}

impl Congruence {
    pub fn discrete(n: usize) -> Self {
        Congruence {
            rep: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Congruence { rep: vec![0; n] }
    }

    /// Canonical form of an arbitrary class labeling.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first = std::collections::HashMap::new();
        let rep = labels
            .iter()
            .enumerate()
            .map(|(i, l)| *first.entry(*l).or_insert(i))
            .collect();
        Congruence { rep }
    }

    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Self {
        let mut labels: Vec<usize> = (0..n).collect();
        for (k, class) in classes.iter().enumerate() {
            for &p in class {
                labels[p] = n + k;
            }
        }
        Self::from_labels(&labels)
    }

    pub fn size(&self) -> usize {
        self.rep.len()
    }

    pub fn representative(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rep[x] == self.rep[y]
    }

    pub fn num_classes(&self) -> usize {
        self.rep.iter().enumerate().filter(|(i, r)| i == *r).count()
    }

    /// Classes sorted internally, ordered by their smallest member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.size()];
        for (x, &r) in self.rep.iter().enumerate() {
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.num_classes() == self.size()
    }

    pub fn is_full(&self) -> bool {
        self.num_classes() <= 1
    }

    /// True when every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        self.size() == other.size() && (0..self.size()).all(|x| other.related(x, self.rep[x]))
    }

    /// The compatibility law `x~y, x'~y' => x·x' ~ y·y'`, with a witness on failure.
    pub fn check_compatible(&self, x: &CycleSet) -> Result<()> {
        let n = x.size();
        if self.size() != n {
            return Err(Error::DegreeMismatch(self.size(), n));
        }
        // Translating by one coordinate at a time is equivalent to the two-sided law.
        for a in 0..n {
            let ra = self.rep[a];
            if ra == a {
                continue;
            }
            for c in 0..n {
                if !self.related(x.mul(a, c), x.mul(ra, c))
                    || !self.related(x.mul(c, a), x.mul(c, ra))
                {
                    return Err(Error::NotCongruence(format!(
                        "{} ~ {} but translating by {} separates them",
                        a + 1,
                        ra + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Smallest congruence of `x` containing every pair in `pairs`.
    pub fn closure(x: &CycleSet, pairs: &[(usize, usize)]) -> Congruence {
        let n = x.size();
        let mut uf = UnionFind::new(n);
        let mut queue: Vec<(usize, usize)> = pairs.to_vec();
        // Every successful union is translated on both sides; the resulting
        // edges generate the compatible closure.
        while let Some((a, b)) = queue.pop() {
            if uf.union(a, b) {
                for c in 0..n {
                    queue.push((x.mul(a, c), x.mul(b, c)));
                    queue.push((x.mul(c, a), x.mul(c, b)));
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
        Congruence::from_labels(&labels)
    }

    /// Closure of the union of two congruences.
    pub fn join(&self, other: &Congruence, x: &CycleSet) -> Congruence {
        let pairs: Vec<(usize, usize)> = (0..self.size())
            .flat_map(|i| [(i, self.rep[i]), (i, other.rep[i])])
            .collect();
        Congruence::closure(x, &pairs)
    }

    /// Quotient cycle set on the classes, numbered as in [`Congruence::classes`].
    pub fn quotient(&self, x: &CycleSet) -> Result<CycleSet> {
        let n = x.size();
        if self.size() != n {
            return Err(Error::DegreeMismatch(self.size(), n));
        }
        let classes = self.classes();
        let mut class_of = vec![0; n];
        for (k, class) in classes.iter().enumerate() {
            for &p in class {
                class_of[p] = k;
            }
        }
        let rows: Vec<Vec<usize>> = classes
            .iter()
            .map(|cx| {
                classes
                    .iter()
                    .map(|cy| class_of[x.mul(cx[0], cy[0])])
                    .collect()
            })
            .collect();
        for a in 0..n {
            for b in 0..n {
                if rows[class_of[a]][class_of[b]] != class_of[x.mul(a, b)] {
                    return Err(Error::NotCongruence(format!(
                        "class of {}·{} depends on representatives",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        CycleSet::from_table(rows)
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.classes()).finish()
    }
}

/// Every congruence of `x`: principal congruences closed under join,
/// sorted by number of classes (descending) then lexicographically.
pub fn all_congruences(x: &CycleSet) -> Vec<Congruence> {
    let n = x.size();
    let mut found: Vec<Congruence> = vec![Congruence::discrete(n)];
    for a in 0..n {
        for b in a + 1..n {
            let c = Congruence::closure(x, &[(a, b)]);
            if !found.contains(&c) {
                found.push(c);
            }
        }
    }
    let principal = found.clone();
    let mut i = 0;
    while i < found.len() {
        for p in &principal {
            let j = found[i].join(p, x);
            if !found.contains(&j) {
                found.push(j);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| b.num_classes().cmp(&a.num_classes()).then_with(|| a.cmp(b)));
    found
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl CycleSet {
    pub fn congruence_closure(&self, pairs: &[(usize, usize)]) -> Congruence {
        Congruence::closure(self, pairs)
    }

    pub fn quotient(&self, c: &Congruence) -> Result<CycleSet> {
        c.quotient(self)
    }

    /// Brute-force simplicity: `|X| > 1` and every principal congruence is full.
    pub fn is_simple_oracle(&self) -> bool {
        let n = self.size();
        n > 1 && (0..n).all(|a| (a + 1..n).all(|b| self.congruence_closure(&[(a, b)]).is_full()))
    }
}

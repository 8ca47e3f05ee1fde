//! Permutations of `{0..n-1}` and small permutation groups.
//!
//! Composition is right-to-left: `(p * q)(i) = p(q(i))`. Points are 0-based
//! here; the text formats in [`crate::io`] are 1-based.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &p) in images.iter().enumerate() {
            if p >= n {
                return Err(Error::NotPermutation(format!(
                    "image {p} of point {i} is out of range for degree {n}"
                )));
            }
            if seen[p] {
                return Err(Error::NotPermutation(format!("point {p} is hit twice")));
            }
            seen[p] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from disjoint 0-based cycles. Unmentioned points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::NotPermutation(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if used[p] {
                    return Err(Error::NotPermutation(format!(
                        "point {p} appears in more than one cycle"
                    )));
                }
                used[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// The cyclic shift `i -> i + 1 mod n`.
    pub fn cycle(degree: usize) -> Self {
        Perm {
            images: (0..degree).map(|i| (i + 1) % degree).collect(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Perm { images }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p];
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// Conjugate by a relabeling: the permutation `f ∘ self ∘ f⁻¹`.
    pub fn relabel(&self, f: &Perm) -> Perm {
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[f.apply(i)] = f.apply(self.apply(i));
        }
        Perm { images }
    }
}

impl<'a> Mul<&'a Perm> for &'a Perm {
    type Output = Perm;

    /// Panics on degree mismatch; use [`Perm::compose`] for a checked version.
    fn mul(self, rhs: &'a Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

/// 1-based cycle notation, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// A finite permutation group stored as its full element list.
///
/// Element 0 is always the identity; the remaining ids follow breadth-first
/// discovery order from the generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    /// Closure of `gens` under composition. All generators must have degree `degree`.
    pub fn closure(degree: usize, gens: &[Perm]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let h = &elements[i] * g;
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators: gens.to_vec(),
            elements,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Perm {
        &self.elements[id]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn orbits(&self, points: &[usize]) -> Vec<Vec<usize>> {
        orbits(&self.generators, self.degree, points)
    }

    pub fn is_transitive(&self, points: &[usize]) -> bool {
        is_transitive(&self.generators, self.degree, points)
    }
}

/// Orbits of the group generated by `perms`, intersected with `points`.
///
/// Classes are sorted internally and ordered by their smallest member.
/// Points outside `points` are traversed but not reported.
pub fn orbits(perms: &[Perm], degree: usize, points: &[usize]) -> Vec<Vec<usize>> {
    let mut wanted = vec![false; degree];
    for &p in points {
        wanted[p] = true;
    }
    let mut seen = vec![false; degree];
    let mut sorted: Vec<usize> = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    for &start in &sorted {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut class = Vec::new();
        while let Some(p) = stack.pop() {
            if wanted[p] {
                class.push(p);
            }
            for g in perms {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        class.sort_unstable();
        out.push(class);
    }
    out
}

pub fn is_transitive(perms: &[Perm], degree: usize, points: &[usize]) -> bool {
    orbits(perms, degree, points).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        let c: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|p| p - 1).collect())
            .collect();
        Perm::from_cycles(n, &c).unwrap()
    }

    #[test]
    fn compose_examples() {
        let t = cyc(4, &[&[1, 2]]);
        assert!((&t * &t).is_identity());
        let c = cyc(4, &[&[1, 2, 3, 4]]);
        assert_eq!(&c * &c, cyc(4, &[&[1, 3], &[2, 4]]));
        let s = cyc(4, &[&[2, 4]]);
        let r = s.compose(&c).unwrap();
        assert_eq!(r.images(), &[3, 2, 1, 0]);
        assert_eq!(r, cyc(4, &[&[1, 4], &[2, 3]]));
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = Perm::identity(3).compose(&Perm::identity(4)).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn inverse_examples() {
        assert!(Perm::identity(5).inverse().is_identity());
        assert_eq!(cyc(4, &[&[1, 2, 3, 4]]).inverse(), cyc(4, &[&[1, 4, 3, 2]]));
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(cyc(5, &[]).to_string(), "()");
        assert_eq!(cyc(6, &[&[4, 2], &[1, 6, 3]]).to_string(), "(1,6,3)(2,4)");
    }

    #[test]
    fn closure_orders() {
        let g = PermGroup::closure(5, &[Perm::cycle(5)]).unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.element(0).is_identity());
        assert_eq!(PermGroup::closure(3, &[]).unwrap().order(), 1);
        let sym = PermGroup::closure(4, &[cyc(4, &[&[1, 2]]), Perm::cycle(4)]).unwrap();
        assert_eq!(sym.order(), 24);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            orbits(&[Perm::identity(3)], 3, &[0, 1, 2]),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(orbits(&[Perm::cycle(4)], 4, &[0, 1, 2, 3]).len(), 1);
        let trivial = PermGroup::closure(2, &[]).unwrap();
        assert!(!trivial.is_transitive(&[0, 1]));
        let c5 = PermGroup::closure(5, &[Perm::cycle(5)]).unwrap();
        assert!(c5.is_transitive(&[0, 1, 2, 3, 4]));
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    fn arb_pair() -> impl Strategy<Value = (Perm, Perm)> {
        (1usize..9).prop_flat_map(|n| (arb_perm(n), arb_perm(n)))
    }

    proptest! {
        #[test]
        fn inverse_of_product((p, q) in arb_pair()) {
            prop_assert_eq!((&p * &q).inverse(), &q.inverse() * &p.inverse());
            prop_assert!((&p * &p.inverse()).is_identity());
        }

        #[test]
        fn closure_is_idempotent((p, q) in (1usize..7).prop_flat_map(|n| (arb_perm(n), arb_perm(n)))) {
            let n = p.degree();
            let g = PermGroup::closure(n, &[p, q]).unwrap();
            let again = PermGroup::closure(n, g.elements()).unwrap();
            prop_assert_eq!(again.order(), g.order());
            for e in g.elements() {
                prop_assert!(g.contains(&e.inverse()));
            }
        }

        #[test]
        fn orbits_partition_points((p, q) in arb_pair()) {
            let n = p.degree();
            let points: Vec<usize> = (0..n).collect();
            let mut all: Vec<usize> = orbits(&[p, q], n, &points).concat();
            all.sort_unstable();
            prop_assert_eq!(all, points);
        }
    }
}

use serde::Serialize;

/// A subset of a brace carrier, kept sorted. Produced by ideal closure, so
/// it is an ideal of the brace it came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Ideal {
    elements: Vec<usize>,
}

impl Ideal {
    pub fn zero() -> Self {
        Ideal { elements: vec![0] }
    }

    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Ideal { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elements == [0]
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }
}

// Ordered by size first so lattices list small ideals first.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealLattice {
    ideals: Vec<Ideal>,
    minimal: Vec<usize>,
}

impl IdealLattice {
    /// `ideals` must be sorted by [`Ideal`]'s ordering and contain `{0}`.
    pub(crate) fn new(ideals: Vec<Ideal>) -> Self {
        let minimal = (0..ideals.len())
            .filter(|&i| {
                !ideals[i].is_zero()
                    && !ideals.iter().any(|j| {
                        !j.is_zero() && j.len() < ideals[i].len() && j.is_subset(&ideals[i])
                    })
            })
            .collect();
        IdealLattice { ideals, minimal }
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Minimal non-zero ideals.
    pub fn minimal(&self) -> Vec<&Ideal> {
        self.minimal.iter().map(|&i| &self.ideals[i]).collect()
    }

    /// Sizes of all ideals in ascending order (with repetition).
    pub fn sizes(&self) -> Vec<usize> {
        self.ideals.iter().map(Ideal::len).collect()
    }

    pub fn non_zero(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| !i.is_zero())
    }
}

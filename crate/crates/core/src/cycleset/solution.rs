use super::CycleSet;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// An involutive non-degenerate set-theoretic solution
/// `r(x, y) = (λ_x(y), ρ_y(x))` of the Yang-Baxter equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    lambda: Vec<Perm>,
    rho: Vec<Perm>,
}

impl Solution {
    /// Checks non-degeneracy, involutivity and the braid relation.
    pub fn new(lambda: Vec<Perm>, rho: Vec<Perm>) -> Result<Self> {
        let n = lambda.len();
        if n == 0 {
            return Err(Error::Solution("empty carrier".into()));
        }
        if rho.len() != n || lambda.iter().chain(&rho).any(|p| p.degree() != n) {
            return Err(Error::Solution(format!(
                "expected {n} maps of degree {n} in each family"
            )));
        }
        let s = Solution { lambda, rho };
        s.check_involutive()?;
        s.check_braid()?;
        Ok(s)
    }

    /// Builds from raw image tables; rows that are not bijections are reported
    /// as degenerate.
    pub fn from_tables(lambda: Vec<Vec<usize>>, rho: Vec<Vec<usize>>) -> Result<Self> {
        let to_perms = |rows: Vec<Vec<usize>>, name: &str| {
            rows.into_iter()
                .enumerate()
                .map(|(x, r)| {
                    Perm::from_images(r).map_err(|e| {
                        Error::Solution(format!("{name}_{} is not bijective: {e}", x + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()
        };
        Self::new(to_perms(lambda, "lambda")?, to_perms(rho, "rho")?)
    }

    pub(super) fn from_cycle_set(x: &CycleSet) -> Self {
        let n = x.size();
        let lambda: Vec<Perm> = x.sigmas().iter().map(Perm::inverse).collect();
        let mut rho_rows = vec![vec![0; n]; n];
        for (a, l) in lambda.iter().enumerate() {
            for b in 0..n {
                rho_rows[b][a] = x.mul(l.apply(b), a);
            }
        }
        let rho = rho_rows
            .into_iter()
            .map(|r| Perm::from_images(r).expect("rho of a cycle set is bijective"))
            .collect();
        Solution { lambda, rho }
    }

    pub fn size(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self, x: usize) -> &Perm {
        &self.lambda[x]
    }

    pub fn rho(&self, y: usize) -> &Perm {
        &self.rho[y]
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.lambda[x].apply(y), self.rho[y].apply(x))
    }

    pub fn check_involutive(&self) -> Result<()> {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(x, y);
                if self.apply(u, v) != (x, y) {
                    return Err(Error::Solution(format!(
                        "r² differs from the identity at ({}, {})",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple.
    pub fn check_braid(&self) -> Result<()> {
        let n = self.size();
        let r12 = |(a, b, c): (usize, usize, usize)| {
            let (u, v) = self.apply(a, b);
            (u, v, c)
        };
        let r23 = |(a, b, c): (usize, usize, usize)| {
            let (u, v) = self.apply(b, c);
            (a, u, v)
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = (x, y, z);
                    if r12(r23(r12(t))) != r23(r12(r23(t))) {
                        return Err(Error::Solution(format!(
                            "braid relation fails at ({}, {}, {})",
                            x + 1,
                            y + 1,
                            z + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_non_degenerate(&self) -> bool {
        // Bijectivity is carried by the Perm type.
        self.lambda
            .iter()
            .chain(&self.rho)
            .all(|p| p.degree() == self.size())
    }

    /// The associated cycle set `σ_x = λ_x⁻¹`.
    pub fn to_cycle_set(&self) -> Result<CycleSet> {
        let x = CycleSet::new(self.lambda.iter().map(Perm::inverse).collect())?;
        if x.to_solution() != *self {
            return Err(Error::Solution(
                "rho is not determined by lambda as an involutive solution requires".into(),
            ));
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::p4;
    use super::*;

    #[test]
    fn trivial_gives_flip() {
        let s = CycleSet::trivial(3).unwrap().to_solution();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(s.apply(x, y), (y, x));
            }
        }
        let flip = Solution::new(vec![Perm::identity(3); 3], vec![Perm::identity(3); 3]).unwrap();
        assert_eq!(flip.to_cycle_set().unwrap(), CycleSet::trivial(3).unwrap());
    }

    #[test]
    fn p4_round_trip() {
        let s = p4().to_solution();
        s.check_braid().unwrap();
        s.check_involutive().unwrap();
        assert!(s.check_non_degenerate());
        assert_eq!(CycleSet::from_solution(&s).unwrap(), p4());
        // Rebuilding through the validating constructor keeps it equal.
        let lambda = (0..4).map(|x| s.lambda(x).clone()).collect();
        let rho = (0..4).map(|x| s.rho(x).clone()).collect();
        assert_eq!(Solution::new(lambda, rho).unwrap(), s);
    }

    #[test]
    fn cyclic_lambda_is_inverse_cycle() {
        let s = CycleSet::cyclic(5).unwrap().to_solution();
        for x in 0..5 {
            assert_eq!(*s.lambda(x), Perm::cycle(5).inverse());
        }
    }

    #[test]
    fn three_cycle_solution() {
        let c = Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let s = Solution::new(vec![c.clone(); 3], vec![c.inverse(); 3]).unwrap();
        let x = s.to_cycle_set().unwrap();
        assert_eq!(x.size(), 3);
        assert!(x.sigmas().iter().all(|p| *p == c.inverse()));
        assert!(x.is_indecomposable());
    }

    #[test]
    fn rejects_non_involutive() {
        // λ_x = ρ_x = (1 2 3) is non-degenerate but r² != id.
        let c = Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let err = Solution::new(vec![c.clone(); 3], vec![c; 3]).unwrap_err();
        assert!(err.to_string().contains("r²"), "{err}");
    }

    #[test]
    fn rejects_degenerate_tables() {
        let err = Solution::from_tables(vec![vec![0, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1]])
            .unwrap_err();
        assert!(err.to_string().contains("lambda_1"), "{err}");
    }
}

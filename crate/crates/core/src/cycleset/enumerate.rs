use super::{are_isomorphic, validate, CycleSet};
use crate::error::{Error, Result};

/// Largest size accepted by [`enumerate_cycle_sets`] unless a limit is given.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 5;

/// All cycle sets on `{0..n-1}`, in lexicographic order of their tables.
///
/// With `up_to_iso`, only the first member of each isomorphism class is kept.
pub fn enumerate_cycle_sets(n: usize, up_to_iso: bool, limit: usize) -> Result<Vec<CycleSet>> {
    if n == 0 {
        return Err(Error::Precondition("cycle sets must be non-empty".into()));
    }
    if n > limit {
        return Err(Error::SizeGuard { size: n, limit });
    }
    let perms = all_perms(n);
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut out = Vec::new();
    search(&perms, &mut rows, n, &mut out);

    if !up_to_iso {
        return Ok(out);
    }
    let mut reps: Vec<(Vec<Vec<usize>>, CycleSet)> = Vec::new();
    for x in out {
        let mut key: Vec<Vec<usize>> = x.sigmas().iter().map(|p| p.cycle_type()).collect();
        key.sort();
        let known = reps
            .iter()
            .any(|(k, r)| *k == key && are_isomorphic(r, &x).is_some());
        if !known {
            reps.push((key, x));
        }
    }
    Ok(reps.into_iter().map(|(_, x)| x).collect())
}

fn search(perms: &[Vec<usize>], rows: &mut Vec<Vec<usize>>, n: usize, out: &mut Vec<CycleSet>) {
    let k = rows.len();
    if k == n {
        if validate(rows).is_valid() {
            out.push(CycleSet::from_table(rows.clone()).expect("validated"));
        }
        return;
    }
    for p in perms {
        rows.push(p.clone());
        if consistent(rows) {
            search(perms, rows, n, out);
        }
        rows.pop();
    }
}

/// Checks the axioms on the part of the table determined by the assigned
/// rows, looking only at instances that involve the newest row.
fn consistent(rows: &[Vec<usize>]) -> bool {
    let k = rows.len() - 1;
    let sq = rows[k][k];
    if (0..k).any(|x| rows[x][x] == sq) {
        return false;
    }
    for x in 0..=k {
        for y in 0..=k {
            let (xy, yx) = (rows[x][y], rows[y][x]);
            if xy > k || yx > k || x.max(y).max(xy).max(yx) != k {
                continue;
            }
            for z in 0..rows[0].len() {
                if rows[xy][rows[x][z]] != rows[yx][rows[y][z]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Permutations of `{0..n-1}` as image vectors, in lexicographic order.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    // Standard next-permutation step.
    loop {
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::p4;
    use super::*;

    #[test]
    fn perms_are_lexicographic() {
        let p = all_perms(3);
        assert_eq!(p.len(), 6);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_perms(1), vec![vec![0]]);
    }

    #[test]
    fn small_sizes() {
        assert_eq!(enumerate_cycle_sets(1, false, 5).unwrap().len(), 1);
        let two = enumerate_cycle_sets(2, false, 5).unwrap();
        assert_eq!(
            two,
            vec![CycleSet::trivial(2).unwrap(), CycleSet::cyclic(2).unwrap()]
        );
    }

    #[test]
    fn matches_brute_force_at_size_three() {
        // Independent oracle: every 6^3 table filtered by the full validator.
        let perms = all_perms(3);
        let mut brute = Vec::new();
        for a in &perms {
            for b in &perms {
                for c in &perms {
                    let rows = vec![a.clone(), b.clone(), c.clone()];
                    if validate(&rows).is_valid() {
                        brute.push(CycleSet::from_table(rows).unwrap());
                    }
                }
            }
        }
        assert_eq!(enumerate_cycle_sets(3, false, 5).unwrap(), brute);
    }

    #[test]
    fn isomorphism_class_counts() {
        // Known counts of involutive non-degenerate solutions up to isomorphism.
        for (n, count) in [(1, 1), (2, 2), (3, 5), (4, 23), (5, 88)] {
            assert_eq!(
                enumerate_cycle_sets(n, true, 5).unwrap().len(),
                count,
                "n = {n}"
            );
        }
    }

    #[test]
    fn size_four_contains_p4_among_simple() {
        let simple: Vec<CycleSet> = enumerate_cycle_sets(4, true, 5)
            .unwrap()
            .into_iter()
            .filter(CycleSet::is_simple_oracle)
            .collect();
        assert!(simple.iter().any(|x| are_isomorphic(x, &p4()).is_some()));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            enumerate_cycle_sets(6, false, 5),
            Err(Error::SizeGuard { size: 6, limit: 5 })
        ));
        assert!(enumerate_cycle_sets(0, false, 5).is_err());
    }
}

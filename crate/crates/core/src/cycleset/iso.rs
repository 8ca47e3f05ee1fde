use super::CycleSet;

/// Finds a bijection `f` with `f(x·y) = f(x)·f(y)`, if one exists.
///
/// Backtracking over images with forced-assignment propagation; candidates
/// are restricted to points whose `σ` row has the same cycle type.
pub fn are_isomorphic(x: &CycleSet, y: &CycleSet) -> Option<Vec<usize>> {
    let n = x.size();
    if y.size() != n {
        return None;
    }
    let inv_x: Vec<Vec<usize>> = x.sigmas().iter().map(|p| p.cycle_type()).collect();
    let inv_y: Vec<Vec<usize>> = y.sigmas().iter().map(|p| p.cycle_type()).collect();
    let mut sx = inv_x.clone();
    let mut sy = inv_y.clone();
    sx.sort();
    sy.sort();
    if sx != sy {
        return None;
    }
    let search = Search { x, y, inv_x, inv_y };
    let mut state = State {
        f: vec![None; n],
        used: vec![false; n],
    };
    search.extend(&mut state)
}

struct Search<'a> {
    x: &'a CycleSet,
    y: &'a CycleSet,
    inv_x: Vec<Vec<usize>>,
    inv_y: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct State {
    f: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&self, state: &mut State) -> Option<Vec<usize>> {
        let Some(a) = state.f.iter().position(Option::is_none) else {
            let f: Vec<usize> = state.f.iter().map(|v| v.unwrap()).collect();
            return self.x.is_homomorphism(self.y, &f).then_some(f);
        };
        for b in 0..self.y.size() {
            if state.used[b] || self.inv_x[a] != self.inv_y[b] {
                continue;
            }
            let mut next = state.clone();
            if self.assign(&mut next, a, b) && self.propagate(&mut next) {
                if let Some(f) = self.extend(&mut next) {
                    return Some(f);
                }
            }
        }
        None
    }

    fn assign(&self, state: &mut State, a: usize, b: usize) -> bool {
        match state.f[a] {
            Some(v) => v == b,
            None if state.used[b] || self.inv_x[a] != self.inv_y[b] => false,
            None => {
                state.f[a] = Some(b);
                state.used[b] = true;
                true
            }
        }
    }

    /// Applies `f(a·c) = f(a)·f(c)` over assigned pairs until stable.
    fn propagate(&self, state: &mut State) -> bool {
        let n = self.x.size();
        loop {
            let mut changed = false;
            for a in 0..n {
                let Some(fa) = state.f[a] else { continue };
                for c in 0..n {
                    let Some(fc) = state.f[c] else { continue };
                    let target = self.y.mul(fa, fc);
                    let ac = self.x.mul(a, c);
                    if state.f[ac].is_none() {
                        if !self.assign(state, ac, target) {
                            return false;
                        }
                        changed = true;
                    } else if state.f[ac] != Some(target) {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

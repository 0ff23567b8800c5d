//! Depth-first occurrence search with position and value windows.
//!
//! A [`Plan`] fixes the order in which pattern entries are assigned to host
//! positions. For each step it records which previously assigned entries are
//! the nearest neighbours by position and by value, so a candidate host
//! position is accepted only if it sits strictly inside both windows. Some
//! entries may be pinned to given host positions before the search starts.

#[derive(Debug, Clone, Copy)]
struct Step {
    pat_idx: usize,
    left: Option<usize>,
    right: Option<usize>,
    below: Option<usize>,
    above: Option<usize>,
    // unassigned pattern entries that must still fit between this one and its neighbours
    gap_left: usize,
    gap_right: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Plan {
    steps: Vec<Step>,
    pinned: usize,
}

impl Plan {
    /// Plan for `pattern` (values 1..k) with the listed pattern indices pinned, in that order.
    pub(crate) fn new(pattern: &[u32], pinned: &[usize]) -> Plan {
        let k = pattern.len();
        let mut order: Vec<usize> = pinned.to_vec();
        if let [j] = pinned {
            // right-to-left from the pin first: this is the hot path for prefix extension
            order.extend((0..*j).rev());
            order.extend(j + 1..k);
        } else {
            order.extend((0..k).filter(|i| !pinned.contains(i)));
        }

        let steps = order
            .iter()
            .enumerate()
            .map(|(s, &j)| {
                let earlier = &order[..s];
                let nearest = |pick: &dyn Fn(usize) -> Option<i64>| {
                    earlier
                        .iter()
                        .enumerate()
                        .filter_map(|(t, &i)| pick(i).map(|key| (key, t)))
                        .min()
                        .map(|(_, t)| t)
                };
                let left = nearest(&|i| (i < j).then(|| (j - i) as i64));
                let right = nearest(&|i| (i > j).then(|| (i - j) as i64));
                let below = nearest(&|i| (pattern[i] < pattern[j]).then(|| i64::from(pattern[j] - pattern[i])));
                let above = nearest(&|i| (pattern[i] > pattern[j]).then(|| i64::from(pattern[i] - pattern[j])));
                let gap_left = left.map_or(j, |t| j - order[t] - 1);
                let gap_right = right.map_or(k - 1 - j, |t| order[t] - j - 1);
                Step {
                    pat_idx: j,
                    left,
                    right,
                    below,
                    above,
                    gap_left,
                    gap_right,
                }
            })
            .collect();
        Plan {
            steps,
            pinned: pinned.len(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.steps.len()
    }

    /// Whether an occurrence exists with the pinned entries at `pins` (0-indexed host positions).
    pub(crate) fn exists<T: Ord + Copy>(&self, host: &[T], pins: &[usize]) -> bool {
        debug_assert_eq!(pins.len(), self.pinned);
        if self.steps.len() > host.len() {
            return false;
        }
        let mut assigned = [0usize; 64];
        self.search(host, pins, 0, &mut assigned)
    }

    /// Host positions (0-indexed, by pattern index) of the first occurrence found.
    pub(crate) fn find<T: Ord + Copy>(&self, host: &[T], pins: &[usize]) -> Option<Vec<usize>> {
        debug_assert_eq!(pins.len(), self.pinned);
        if self.steps.len() > host.len() {
            return None;
        }
        let mut assigned = [0usize; 64];
        if !self.search(host, pins, 0, &mut assigned) {
            return None;
        }
        let mut positions = vec![0; self.steps.len()];
        for (s, step) in self.steps.iter().enumerate() {
            positions[step.pat_idx] = assigned[s];
        }
        Some(positions)
    }

    fn search<T: Ord + Copy>(&self, host: &[T], pins: &[usize], s: usize, assigned: &mut [usize; 64]) -> bool {
        let Some(step) = self.steps.get(s) else {
            return true;
        };
        let lo = step.left.map_or(0, |t| assigned[t] + 1) + step.gap_left;
        let hi = step
            .right
            .map_or(host.len(), |t| assigned[t])
            .saturating_sub(step.gap_right);
        let floor = step.below.map(|t| host[assigned[t]]);
        let ceil = step.above.map(|t| host[assigned[t]]);
        let fits = |v: T| floor.is_none_or(|f| v > f) && ceil.is_none_or(|c| v < c);

        if let Some(&p) = pins.get(s) {
            if p < lo || p >= hi || !fits(host[p]) {
                return false;
            }
            assigned[s] = p;
            return self.search(host, pins, s + 1, assigned);
        }
        for p in lo..hi {
            if fits(host[p]) {
                assigned[s] = p;
                if self.search(host, pins, s + 1, assigned) {
                    return true;
                }
            }
        }
        false
    }
}

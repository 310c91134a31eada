use super::FinitePoset;

/// An order isomorphism `P → Q` as `mapping[p] = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub mapping: Vec<usize>,
}

type Signature = (usize, usize, usize, usize, usize, usize);

impl FinitePoset {
    /// Per element: rank from below, rank from above, number of lower and
    /// upper covers, and sizes of the down and up sets.
    fn signatures(&self) -> Vec<Signature> {
        let n = self.len();
        let mut below = vec![0usize; n];
        for y in 0..n {
            below[y] = self.lower[y]
                .iter()
                .map(|&x| below[x] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut above = vec![0usize; n];
        for x in (0..n).rev() {
            above[x] = self.upper[x]
                .iter()
                .map(|&y| above[y] + 1)
                .max()
                .unwrap_or(0);
        }
        (0..n)
            .map(|x| {
                (
                    below[x],
                    above[x],
                    self.lower[x].len(),
                    self.upper[x].len(),
                    self.down[x].count(),
                    self.up[x].count(),
                )
            })
            .collect()
    }

    /// Backtracking over elements of `self` in index order, so every lower
    /// cover is mapped before its upper cover. A candidate image must share
    /// the invariant signature and receive the images of all lower covers as
    /// its own lower covers; with equal cover counts this makes the Hasse
    /// diagrams correspond exactly.
    pub fn are_isomorphic(&self, other: &FinitePoset) -> Option<Isomorphism> {
        let n = self.len();
        if n != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        let sp = self.signatures();
        let sq = other.signatures();
        let mut a = sp.clone();
        let mut b = sq.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).filter(|&y| sq[y] == sp[x]).collect())
            .collect();
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut choice = vec![0usize; n];
        let mut pos = 0usize;
        if n == 0 {
            return Some(Isomorphism { mapping });
        }
        loop {
            let x = pos;
            let mut placed = false;
            while choice[x] < candidates[x].len() {
                let y = candidates[x][choice[x]];
                choice[x] += 1;
                if used[y] {
                    continue;
                }
                let fits = self.lower[x]
                    .iter()
                    .all(|&c| other.lower[y].binary_search(&mapping[c]).is_ok());
                if fits {
                    mapping[x] = y;
                    used[y] = true;
                    placed = true;
                    break;
                }
            }
            if placed {
                pos += 1;
                if pos == n {
                    return Some(Isomorphism { mapping });
                }
                choice[pos] = 0;
            } else {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                let prev = mapping[pos];
                used[prev] = false;
                mapping[pos] = usize::MAX;
            }
        }
    }
}

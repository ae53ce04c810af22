//! Exhaustive generation of free trees.
//!
//! [`free_trees`] walks canonical level sequences of center-rooted trees with
//! the Wright–Richmond–Odlyzko–McKay successor rule, so every isomorphism
//! class comes out exactly once, in a fixed order. [`labeled_tree_oracle`] is
//! an independent brute-force check: decode every Prüfer sequence and
//! deduplicate by canonical code.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canonical::{ahu_canonical, CanonicalCode};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 20;
pub const MAX_ORACLE_ORDER: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("diameter {d} outside 1..={max} for order {n}")]
    DiameterOutOfRange { n: usize, d: usize, max: usize },
}

/// Lazy stream of pairwise non-isomorphic trees on `n` vertices.
#[derive(Clone, Debug)]
pub struct TreeStream {
    n: usize,
    diameter: Option<u32>,
    state: State,
}

#[derive(Clone, Debug)]
enum State {
    /// Orders 1 and 2 have a single tree and no level-sequence machinery.
    Single(bool),
    Levels(Option<Vec<usize>>),
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.n
    }

    fn next_tree(&mut self) -> Option<Graph> {
        match &mut self.state {
            State::Single(done) => {
                if *done {
                    return None;
                }
                *done = true;
                let edges: &[(usize, usize)] = if self.n == 2 { &[(0, 1)] } else { &[] };
                Some(Graph::from_edges(self.n, edges).expect("trivial tree"))
            }
            State::Levels(slot) => {
                let layout = slot.take()?;
                let layout = next_free_layout(layout)?;
                let graph = layout_to_graph(&layout);
                *slot = next_rooted_layout(&layout, None);
                Some(graph)
            }
        }
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let g = self.next_tree()?;
            match self.diameter {
                Some(d) if g.tree_diameter() != d => continue,
                _ => return Some(g),
            }
        }
    }
}

pub fn free_trees(n: usize) -> Result<TreeStream, EnumError> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(EnumError::OrderOutOfRange {
            n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    let state = if n <= 2 {
        State::Single(false)
    } else {
        // path of length n − 1 rooted at its center: 0 1 … ⌊n/2⌋ 1 2 … ⌈n/2⌉−1
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..n.div_ceil(2));
        State::Levels(Some(layout))
    };
    Ok(TreeStream {
        n,
        diameter: None,
        state,
    })
}

/// Trees on `n` vertices with diameter exactly `d` (post-hoc filter).
pub fn trees_with_diameter(n: usize, d: usize) -> Result<TreeStream, EnumError> {
    let mut stream = free_trees(n)?;
    if d < 1 || d > n - 1 {
        return Err(EnumError::DiameterOutOfRange {
            n,
            d,
            max: n.saturating_sub(1),
        });
    }
    stream.diameter = Some(d as u32);
    Ok(stream)
}

/// Successor of a rooted level sequence; `p` defaults to the last entry
/// above level 1.
fn next_rooted_layout(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted down by one) and the rest of the tree.
fn split_layout(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances `candidate` to the next level sequence that is the canonical
/// center-rooted form of a free tree, or `None` when exhausted.
fn next_free_layout(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split_layout(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let mut valid = rest_height >= left_height;
        if valid
            && rest_height == left_height
            && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
        {
            valid = false;
        }
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_layout(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_layout(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
                *slot = k + 1;
            }
        }
        candidate = next;
    }
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), &edges).expect("level sequence encodes a tree")
}

/// Labeled tree with the given Prüfer sequence on `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // smallest current leaf; the standard linear-time decoding
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, &edges).expect("Prüfer sequences decode to trees")
}

/// Canonical codes of all labeled trees on `n` vertices, deduplicated.
pub fn labeled_tree_oracle(n: usize) -> Result<BTreeSet<CanonicalCode>, EnumError> {
    if !(2..=MAX_ORACLE_ORDER).contains(&n) {
        return Err(EnumError::OrderOutOfRange {
            n,
            min: 2,
            max: MAX_ORACLE_ORDER,
        });
    }
    if n == 2 {
        let k2 = Graph::from_edges(2, &[(0, 1)]).expect("K2");
        return Ok(BTreeSet::from([ahu_canonical(&k2).expect("tree")]));
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let sets: Vec<BTreeSet<CanonicalCode>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut seen = BTreeSet::new();
            let mut seq = vec![0; len];
            seq[0] = first;
            for k in 0..total / n {
                let mut rem = k;
                for slot in seq[1..].iter_mut() {
                    *slot = rem % n;
                    rem /= n;
                }
                seen.insert(ahu_canonical(&prufer_decode(&seq)).expect("tree"));
            }
            seen
        })
        .collect();
    Ok(sets.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star};

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| free_trees(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn order_four() {
        let codes: BTreeSet<_> = free_trees(4)
            .unwrap()
            .map(|g| ahu_canonical(&g).unwrap())
            .collect();
        let want: BTreeSet<_> = [path(4).unwrap(), star(4).unwrap()]
            .iter()
            .map(|g| ahu_canonical(g).unwrap())
            .collect();
        assert_eq!(codes, want);
    }

    #[test]
    fn diameter_filter() {
        for n in 3..=9 {
            let stars: Vec<_> = trees_with_diameter(n, 2).unwrap().collect();
            assert_eq!(stars.len(), 1);
            assert_eq!(stars[0].degree(0).max(stars[0].degree(1)), n - 1);
        }
        let p4: Vec<_> = trees_with_diameter(4, 3).unwrap().collect();
        assert_eq!(p4.len(), 1);
        assert_eq!(ahu_canonical(&p4[0]), ahu_canonical(&path(4).unwrap()));
        assert_eq!(
            trees_with_diameter(1, 0).unwrap_err(),
            EnumError::DiameterOutOfRange { n: 1, d: 0, max: 0 }
        );
        assert!(trees_with_diameter(5, 5).is_err());
    }

    #[test]
    fn range_guards() {
        assert!(free_trees(0).is_err());
        assert!(free_trees(21).is_err());
        assert!(free_trees(20).is_ok());
        assert!(labeled_tree_oracle(1).is_err());
        assert!(labeled_tree_oracle(10).is_err());
    }

    #[test]
    fn prufer_examples() {
        // [3, 3, 3] is the star centered at 3
        let g = prufer_decode(&[3, 3, 3]);
        assert_eq!(g.degree(3), 4);
        // [0, 1, 2] is the path 3-0-1-2-4
        let g = prufer_decode(&[0, 1, 2]);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 4)]
        );
        assert_eq!(prufer_decode(&[]).edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn oracle_small_orders() {
        assert_eq!(labeled_tree_oracle(2).unwrap().len(), 1);
        assert_eq!(labeled_tree_oracle(3).unwrap().len(), 1);
        assert_eq!(labeled_tree_oracle(5).unwrap().len(), 3);
    }
}

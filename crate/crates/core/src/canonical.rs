//! AHU canonical codes for free trees.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, GraphError};

/// Parenthesis string of a tree rooted at its center.
///
/// Two trees get equal codes exactly when they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("code is ascii"))
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn ahu_canonical(g: &Graph) -> Result<CanonicalCode, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let code = match tree_centers(g) {
        (c, None) => rooted_code(g, c),
        (a, Some(b)) => rooted_code(g, a).min(rooted_code(g, b)),
    };
    Ok(CanonicalCode(code))
}

/// One or two central vertices, found by peeling leaves.
fn tree_centers(g: &Graph) -> (usize, Option<usize>) {
    let n = g.order();
    if n == 1 {
        return (0, None);
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &v in g.neighbors(leaf) {
                degree[v] -= 1;
                if degree[v] == 1 {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    match layer.as_slice() {
        [c] => (*c, None),
        [a, b] => (*a, Some(*b)),
        _ => unreachable!("a tree has one or two centers"),
    }
}

fn rooted_code(g: &Graph, root: usize) -> Vec<u8> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut children = std::mem::take(&mut codes[u]);
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend(c);
        }
        code.push(b')');
        if u == root {
            return code;
        }
        codes[parent[u]].push(code);
    }
    unreachable!("root is visited last")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn path_relabeling_is_invariant() {
        let a = tree(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = tree(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(ahu_canonical(&a).unwrap(), ahu_canonical(&b).unwrap());
        // rooted at either center: children "(())" and "()"
        assert_eq!(ahu_canonical(&a).unwrap().to_string(), "((())())");
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = tree(4, &[(0, 1), (1, 2), (2, 3)]);
        let s4 = tree(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(ahu_canonical(&p4).unwrap(), ahu_canonical(&s4).unwrap());
        assert_eq!(ahu_canonical(&s4).unwrap().to_string(), "(()()())");
    }

    #[test]
    fn single_vertex_and_edge() {
        assert_eq!(ahu_canonical(&tree(1, &[])).unwrap().to_string(), "()");
        assert_eq!(
            ahu_canonical(&tree(2, &[(0, 1)])).unwrap().to_string(),
            "(())"
        );
    }

    #[test]
    fn cycle_is_rejected() {
        let c4 = tree(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(ahu_canonical(&c4), Err(GraphError::NotATree));
    }
}

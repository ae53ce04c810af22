//! Undirected simple connected graphs, all-pairs distances and eccentricities.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    DisconnectedInput,
    #[error("graph is not a tree")]
    NotATree,
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Undirected simple connected graph with vertices `0..n`.
///
/// Adjacency lists are sorted. Connectivity, symmetry and the absence of
/// loops or parallel edges are enforced by [`Graph::from_edges`], which is the
/// only way to build one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(GraphError::IndexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let g = Graph {
            adjacency,
            edge_count: edges.len(),
        };
        if !g.is_connected() {
            return Err(GraphError::DisconnectedInput);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Connected and acyclic; for a connected graph that means `|E| = n − 1`.
    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.order()
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.order(), &edges)
    }

    /// Removes edge `remove` and adds edge `add`, revalidating the result.
    pub fn with_edge_moved(
        &self,
        remove: (usize, usize),
        add: (usize, usize),
    ) -> Result<Graph, GraphError> {
        let key = (remove.0.min(remove.1), remove.0.max(remove.1));
        let mut edges: Vec<_> = self.edges().filter(|&e| e != key).collect();
        edges.push(add);
        Graph::from_edges(self.order(), &edges)
    }

    /// BFS distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Diameter by a double BFS sweep. Only exact for trees.
    pub fn tree_diameter(&self) -> u32 {
        let d0 = self.distances_from(0);
        let far = argmax(&d0);
        let d1 = self.distances_from(far);
        d1.into_iter().max().unwrap_or(0)
    }

    fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(|&d| d != u32::MAX)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.order(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let list: EdgeList =
            serde_json::from_str(text).map_err(|e| GraphError::MalformedEdgeList(e.to_string()))?;
        list.to_graph()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }
}

fn argmax(values: &[u32]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

/// The JSON exchange form `{"n": 4, "edges": [[0,1],[1,2],[2,3]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl EdgeList {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &edges)
    }
}

/// All-pairs shortest-path lengths with eccentricities and diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<u32>,
    pub ecc: Vec<u32>,
    pub diameter: u32,
}

impl DistanceProfile {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn radius(&self) -> u32 {
        self.ecc.iter().copied().min().unwrap_or(0)
    }

    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> Vec<usize> {
        let r = self.radius();
        (0..self.n).filter(|&v| self.ecc[v] == r).collect()
    }
}

/// BFS from every vertex.
pub fn distance_profile(g: &Graph) -> DistanceProfile {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        dist.extend(g.distances_from(s));
    }
    let ecc: Vec<u32> = (0..n)
        .map(|u| dist[u * n..(u + 1) * n].iter().copied().max().unwrap_or(0))
        .collect();
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    DistanceProfile {
        n,
        dist,
        ecc,
        diameter,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn k2_and_single_vertex() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(distance_profile(&k2).diameter, 1);
        assert!(k2.is_tree());
        let k1 = Graph::from_edges(1, &[]).unwrap();
        let prof = distance_profile(&k1);
        assert_eq!(prof.diameter, 0);
        assert_eq!(prof.ecc, vec![0]);
        assert!(k1.is_tree());
    }

    #[test]
    fn path_profile() {
        let prof = distance_profile(&p4());
        assert_eq!(prof.ecc, vec![3, 2, 2, 3]);
        assert_eq!(prof.diameter, 3);
        assert_eq!(prof.radius(), 2);
        assert_eq!(prof.center(), vec![1, 2]);
        assert_eq!(prof.dist(0, 3), 3);
    }

    #[test]
    fn star_profile() {
        let s5 = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let prof = distance_profile(&s5);
        assert_eq!(prof.ecc, vec![1, 2, 2, 2, 2]);
        assert_eq!(prof.diameter, 2);
        assert_eq!(s5.degree_sequence(), vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn cycle_is_not_a_tree() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_tree());
        assert!(p4().is_tree());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::Empty));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 3)]),
            Err(GraphError::IndexOutOfRange { index: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(4, &[(0, 1), (2, 3)]),
            Err(GraphError::DisconnectedInput)
        );
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_edges(4, &[(3, 0), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert!(g.has_edge(2, 0));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn json_edge_list() {
        let g = Graph::from_json(r#"{"n": 4, "edges": [[0,1],[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g, p4());
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert!(matches!(
            Graph::from_json(r#"{"n": 4}"#),
            Err(GraphError::MalformedEdgeList(_))
        ));
        assert_eq!(
            Graph::from_json(r#"{"n": 3, "edges": [[0,1]]}"#),
            Err(GraphError::DisconnectedInput)
        );
    }

    #[test]
    fn moving_an_edge() {
        let g = p4().with_edge_moved((2, 3), (3, 1)).unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(g.tree_diameter(), 2);
    }
}

//! Named trees with fixed vertex layouts.
//!
//! * `path(n)`: vertices `0..n` in path order.
//! * `star(n)`: center `0`, leaves `1..n`.
//! * `double_broom(n, d, a, b)`: spine `v₀…v_d` at `0..=d`, then the `a`
//!   pendants `u₁…u_a` on `v₁`, then the `b` pendants `w₁…w_b` on `v_{d−1}`.
//! * `spider_h(p, q)`: center `w = 0`, short legs `a₁…a_p` at `1..=p`, leg
//!   middles `b₁…b_q` at `p+1..=p+q`, leg tips `c₁…c_q` at
//!   `p+q+1..=p+2q` with `c_i` adjacent to `b_i`.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("order {n} too small for {family} (need at least {min})")]
    OrderTooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("broom parameters need a + b = n − d − 1, got n={n}, d={d}, a={a}, b={b}")]
    ParameterMismatch {
        n: usize,
        d: usize,
        a: usize,
        b: usize,
    },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error(
        "cannot parse family spec {0:?}; expected path:n, star:n, broom:n,d,a,b or spider:p,q"
    )]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Index of spine vertex `v_i` in a double broom.
pub const fn broom_spine(i: usize) -> usize {
    i
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderTooSmall {
            family: "path",
            n,
            min: 1,
        });
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::OrderTooSmall {
            family: "star",
            n,
            min: 2,
        });
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// D_{n,d}^{a,b}: a path on `d + 1` vertices with `a` pendants on `v₁` and
/// `b` on `v_{d−1}`. Any `d ≥ 2` is accepted; its diameter is `d`.
pub fn double_broom(n: usize, d: usize, a: usize, b: usize) -> Result<Graph, FamilyError> {
    if d < 2 {
        return Err(FamilyError::ParameterOutOfRange(format!(
            "broom diameter must be at least 2, got {d}"
        )));
    }
    if n < d + 1 {
        return Err(FamilyError::OrderTooSmall {
            family: "broom",
            n,
            min: d + 1,
        });
    }
    if a + b + d + 1 != n {
        return Err(FamilyError::ParameterMismatch { n, d, a, b });
    }
    let mut edges: Vec<_> = (1..=d).map(|i| (i - 1, i)).collect();
    edges.extend((0..a).map(|k| (1, d + 1 + k)));
    edges.extend((0..b).map(|k| (d - 1, d + 1 + a + k)));
    Ok(Graph::from_edges(n, &edges)?)
}

/// H_{p,q}: the star S_{p+q+1} with a pendant hung on `q` of its leaves.
pub fn spider_h(p: usize, q: usize) -> Result<Graph, FamilyError> {
    if q < 2 {
        return Err(FamilyError::ParameterOutOfRange(format!(
            "spider needs q >= 2, got {q}"
        )));
    }
    let n = p + 2 * q + 1;
    let mut edges: Vec<_> = (1..=p + q).map(|i| (0, i)).collect();
    edges.extend((1..=q).map(|i| (p + i, p + q + i)));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Text form used on the command line: `path:n`, `star:n`,
/// `broom:n,d,a,b`, `spider:p,q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Star(usize),
    Broom {
        n: usize,
        d: usize,
        a: usize,
        b: usize,
    },
    Spider {
        p: usize,
        q: usize,
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::Broom { n, d, a, b } => double_broom(n, d, a, b),
            FamilySpec::Spider { p, q } => spider_h(p, q),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FamilyError::Parse(s.to_string());
        let (kind, params) = s.split_once(':').ok_or_else(err)?;
        let params: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        match (kind.trim(), params.as_slice()) {
            ("path", &[n]) => Ok(FamilySpec::Path(n)),
            ("star", &[n]) => Ok(FamilySpec::Star(n)),
            ("broom", &[n, d, a, b]) => Ok(FamilySpec::Broom { n, d, a, b }),
            ("spider", &[p, q]) => Ok(FamilySpec::Spider { p, q }),
            _ => Err(err()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Broom { n, d, a, b } => write!(f, "broom:{n},{d},{a},{b}"),
            FamilySpec::Spider { p, q } => write!(f, "spider:{p},{q}"),
        }
    }
}

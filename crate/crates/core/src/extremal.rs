//! The 0-1 matrix lower-bound construction: an n x n matrix whose entry
//! (i, j) is 1 exactly when i + j - n is a power of two, conversions between
//! such matrices and ordered bipartite graphs, and detection of the
//! forbidden staircase-plus-extra-cell pattern.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ordered_bipartite::{
    verify_path_restricted, GraphError, OrderedBipartiteGraph, Vertex,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix dimensions must be positive, got {n_rows} x {n_cols}")]
    EmptyMatrix { n_rows: usize, n_cols: usize },
    #[error("cell ({row}, {col}) out of range for a {n_rows} x {n_cols} matrix")]
    CellOutOfRange {
        row: usize,
        col: usize,
        n_rows: usize,
        n_cols: usize,
    },
    #[error("duplicate cell ({row}, {col})")]
    DuplicateCell { row: usize, col: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize, Clone)]
struct RawMatrix {
    n_rows: usize,
    n_cols: usize,
    ones: Vec<(usize, usize)>,
}

/// A 0-1 matrix stored as its set of 1-cells, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct ZeroOneMatrix {
    n_rows: usize,
    n_cols: usize,
    ones: BTreeSet<(usize, usize)>,
}

impl TryFrom<RawMatrix> for ZeroOneMatrix {
    type Error = MatrixError;

    fn try_from(raw: RawMatrix) -> Result<Self, MatrixError> {
        ZeroOneMatrix::new(raw.n_rows, raw.n_cols, raw.ones)
    }
}

impl From<ZeroOneMatrix> for RawMatrix {
    fn from(m: ZeroOneMatrix) -> RawMatrix {
        RawMatrix {
            n_rows: m.n_rows,
            n_cols: m.n_cols,
            ones: m.ones.into_iter().collect(),
        }
    }
}

impl ZeroOneMatrix {
    pub fn new(
        n_rows: usize,
        n_cols: usize,
        ones: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, MatrixError> {
        if n_rows == 0 || n_cols == 0 {
            return Err(MatrixError::EmptyMatrix { n_rows, n_cols });
        }
        let mut set = BTreeSet::new();
        for (row, col) in ones {
            if row == 0 || row > n_rows || col == 0 || col > n_cols {
                return Err(MatrixError::CellOutOfRange {
                    row,
                    col,
                    n_rows,
                    n_cols,
                });
            }
            if !set.insert((row, col)) {
                return Err(MatrixError::DuplicateCell { row, col });
            }
        }
        Ok(Self {
            n_rows,
            n_cols,
            ones: set,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ones.iter().copied()
    }

    pub fn ones_count(&self) -> usize {
        self.ones.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.ones.contains(&(row, col))
    }

    pub fn with_cell(&self, row: usize, col: usize) -> Result<Self, MatrixError> {
        let mut ones: Vec<_> = self.ones.iter().copied().collect();
        ones.push((row, col));
        Self::new(self.n_rows, self.n_cols, ones)
    }

    /// Ones of `row`, sorted by column.
    pub fn row_ones(&self, row: usize) -> Vec<usize> {
        self.ones
            .range((row, 0)..=(row, usize::MAX))
            .map(|&(_, c)| c)
            .collect()
    }

    /// Plain-text grid in the layout of the construction's figure: row 1 on
    /// top, a blank where i + j <= n (above the first diagonal), `1`/`0`
    /// below it. Intended for visual diffing.
    pub fn render_grid(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n_rows {
            let mut cells = Vec::with_capacity(self.n_cols);
            for j in 1..=self.n_cols {
                let c = if self.get(i, j) {
                    '1'
                } else if i + j > self.n_rows.max(self.n_cols) {
                    '0'
                } else {
                    ' '
                };
                cells.push(c.to_string());
            }
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// The n x n matrix with a 1 at (i, j) exactly when i + j - n = 2^k for some
/// integer k >= 0.
pub fn build_matrix_a(n: usize) -> ZeroOneMatrix {
    assert!(n >= 1, "matrix size must be positive");
    let mut ones = Vec::new();
    let mut power = 1usize;
    while power <= n {
        // the diagonal i + j = n + power has n - power + 1 cells in range
        for i in power..=n {
            let j = n + power - i;
            ones.push((i, j));
        }
        power *= 2;
    }
    ZeroOneMatrix::new(n, n, ones).expect("construction stays in range")
}

/// Closed form for the number of ones in [`build_matrix_a`]:
/// the sum of (n - 2^k + 1) over all k >= 0 with 2^k <= n.
pub fn ones_count_closed_form(n: usize) -> usize {
    assert!(n >= 1, "matrix size must be positive");
    let mut total = 0;
    let mut power = 1usize;
    while power <= n {
        total += n - power + 1;
        power *= 2;
    }
    total
}

/// How matrix axes map onto the bipartite orders: rows become `U`, columns
/// become `V`, each axis either ascending (index kept) or descending
/// (index flipped).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub rows_ascending: bool,
    pub cols_ascending: bool,
}

/// The orientation under which [`build_matrix_a`] graphs satisfy the
/// path-restricted property: both axes descending. Determined once by the
/// brute-force verifier at n = 8 and frozen; a regression test keeps it
/// honest.
pub const DEFAULT_ORIENTATION: Orientation = Orientation {
    rows_ascending: false,
    cols_ascending: false,
};

/// Rows to `U`, columns to `V`, indices mapped per `orientation`.
pub fn matrix_to_graph(m: &ZeroOneMatrix, orientation: Orientation) -> OrderedBipartiteGraph {
    let edges = m.ones().map(|(i, j)| {
        let u = if orientation.rows_ascending {
            i
        } else {
            m.n_rows + 1 - i
        };
        let v = if orientation.cols_ascending {
            j
        } else {
            m.n_cols + 1 - j
        };
        (u, v)
    });
    OrderedBipartiteGraph::new(m.n_rows, m.n_cols, edges)
        .expect("orientation maps are bijective on cells")
}

/// Inverse of [`matrix_to_graph`] for the same orientation.
pub fn graph_to_matrix(g: &OrderedBipartiteGraph, orientation: Orientation) -> ZeroOneMatrix {
    let ones = g.edges().map(|(u, v)| {
        let i = if orientation.rows_ascending {
            u
        } else {
            g.u_count() + 1 - u
        };
        let j = if orientation.cols_ascending {
            v
        } else {
            g.v_count() + 1 - v
        };
        (i, j)
    });
    ZeroOneMatrix::new(g.u_count(), g.v_count(), ones).expect("edge maps are bijective")
}

/// A staircase (the matrix image of a forward path) together with one extra
/// 1-cell that makes the pattern forbidden.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseWitness {
    /// Path cells from top-left to bottom-right; consecutive cells share
    /// exactly one coordinate and never retreat in either.
    pub staircase: Vec<(usize, usize)>,
    pub extra: (usize, usize),
}

impl StaircaseWitness {
    /// Internal consistency of the pattern shape.
    pub fn is_well_formed(&self) -> bool {
        if self.staircase.len() < 2 || self.staircase.contains(&self.extra) {
            return false;
        }
        self.staircase.windows(2).all(|w| {
            let ((r1, c1), (r2, c2)) = (w[0], w[1]);
            let same_row = r1 == r2 && c1 < c2;
            let same_col = c1 == c2 && r1 < r2;
            same_row || same_col
        })
    }
}

/// Searches for the forbidden staircase pattern by running the
/// path-restriction verifier on the graph image of `m` under the default
/// orientation, then mapping its violation back to matrix coordinates.
pub fn find_staircase_violation(m: &ZeroOneMatrix) -> Option<StaircaseWitness> {
    let g = matrix_to_graph(m, DEFAULT_ORIENTATION);
    let violation = verify_path_restricted(&g).err()?;
    let to_cell = |u: usize, v: usize| {
        let i = if DEFAULT_ORIENTATION.rows_ascending {
            u
        } else {
            m.n_rows + 1 - u
        };
        let j = if DEFAULT_ORIENTATION.cols_ascending {
            v
        } else {
            m.n_cols + 1 - v
        };
        (i, j)
    };
    let mut staircase: Vec<(usize, usize)> = Vec::new();
    for w in violation.path.vertices().windows(2) {
        let (u, v) = match (w[0], w[1]) {
            (Vertex::U(u), Vertex::V(v)) | (Vertex::V(v), Vertex::U(u)) => (u, v),
            _ => unreachable!("forward paths alternate"),
        };
        staircase.push(to_cell(u, v));
    }
    staircase.sort_unstable();
    let extra = to_cell(violation.back_edge.0, violation.back_edge.1);
    Some(StaircaseWitness { staircase, extra })
}

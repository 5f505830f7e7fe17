//! The helm graph `H_n` and its distance matrix.
//!
//! Vertices are ordered `[v_0, v_1..v_{n-1}, u_1..u_{n-1}]`: the hub, the rim
//! cycle, then the pendants with `u_i` hanging off `v_i`. Every closed form in
//! this crate is written against that order.

use std::collections::VecDeque;

use crate::circulant::{s_matrix, u_vector, CirculantSpec};
use crate::error::{HelmError, Result};
use crate::exact::{int, RatMatrix};

pub const MIN_N: usize = 4;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < MIN_N {
        return Err(HelmError::NTooSmall(n as i64, MIN_N as i64));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HelmInstance {
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

impl HelmInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, vertex: usize) -> &[usize] {
        &self.adjacency[vertex]
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    pub fn hub(&self) -> usize {
        0
    }

    /// Index of rim vertex `v_i`, `1 <= i <= n - 1`.
    pub fn rim(&self, i: usize) -> usize {
        debug_assert!((1..self.n).contains(&i));
        i
    }

    /// Index of pendant vertex `u_i`, `1 <= i <= n - 1`.
    pub fn pendant(&self, i: usize) -> usize {
        debug_assert!((1..self.n).contains(&i));
        self.n - 1 + i
    }

    /// Undirected edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    /// Human-readable vertex label in the canonical order.
    pub fn label(&self, vertex: usize) -> String {
        match vertex {
            0 => "v0".to_string(),
            v if v < self.n => format!("v{v}"),
            v => format!("u{}", v + 1 - self.n),
        }
    }
}

/// Builds `H_n`: hub adjacent to every rim vertex, rim cycle
/// `v_1 - v_2 - ... - v_{n-1} - v_1`, and a pendant `u_i` on each `v_i`.
pub fn build_helm(n: usize) -> Result<HelmInstance> {
    check_n(n)?;
    let mut adjacency = vec![Vec::new(); 2 * n - 1];
    let mut link = |a: usize, b: usize| {
        adjacency[a].push(b);
        adjacency[b].push(a);
    };
    let rim = n - 1;
    for i in 1..n {
        link(0, i);
        link(i, i % rim + 1);
        link(i, rim + i);
    }
    Ok(HelmInstance { n, adjacency })
}

/// All-pairs shortest-path lengths by a BFS from every vertex.
pub fn bfs_distance_matrix(g: &HelmInstance) -> RatMatrix {
    let order = g.vertex_count();
    let mut dist = vec![vec![usize::MAX; order]; order];
    for (src, row) in dist.iter_mut().enumerate() {
        row[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if row[y] == usize::MAX {
                    row[y] = row[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    RatMatrix::from_fn(order, order, |i, j| int(dist[i][j] as i64))
}

/// The pair `(D_a, D_b)` with `D(H_n) = D_a + D_b`:
/// `D_a = [[0, e', 2e'], [e, 2J, 3J], [2e, 3J, 4J]]` and
/// `D_b = [[0, 0', 0'], [0, -S, -S], [0, -S, -(S + 2I)]]`.
pub fn helm_distance_split(n: usize) -> Result<(RatMatrix, RatMatrix)> {
    check_n(n)?;
    let k = n - 1;
    let scalar = |x: i64| RatMatrix::from_fn(1, 1, |_, _| int(x));
    let row = |x: i64| RatMatrix::ones(1, k).scale(&int(x));
    let col = |x: i64| RatMatrix::ones(k, 1).scale(&int(x));
    let j = |x: i64| RatMatrix::ones(k, k).scale(&int(x));

    let da = RatMatrix::from_blocks(&[
        &[&scalar(0), &row(1), &row(2)],
        &[&col(1), &j(2), &j(3)],
        &[&col(2), &j(3), &j(4)],
    ])?;

    let s = s_matrix(n);
    let neg_s = -&s;
    let neg_s2 = &neg_s - &RatMatrix::identity(k).scale(&int(2));
    let db = RatMatrix::from_blocks(&[
        &[&scalar(0), &row(0), &row(0)],
        &[&col(0), &neg_s, &neg_s],
        &[&col(0), &neg_s, &neg_s2],
    ])?;
    Ok((da, db))
}

/// `D(H_n)` assembled from its block form
/// `[[0, e', 2e'], [e, D~, D~ + J], [2e, D~ + J, D~ + 2(J - I)]]`, `D~ = cir(u')`.
pub fn helm_distance_block(n: usize) -> Result<RatMatrix> {
    check_n(n)?;
    let k = n - 1;
    let dt = CirculantSpec::new(u_vector(n))?.materialize();
    let jm = RatMatrix::ones(k, k);
    let dt_j = &dt + &jm;
    let dt_2 = &dt + &(&jm - &RatMatrix::identity(k)).scale(&int(2));
    let zero = RatMatrix::zeros(1, 1);
    let e_row = RatMatrix::ones(1, k);
    let e2_row = e_row.scale(&int(2));
    let e_col = e_row.transpose();
    let e2_col = e2_row.transpose();
    let d = RatMatrix::from_blocks(&[
        &[&zero, &e_row, &e2_row],
        &[&e_col, &dt, &dt_j],
        &[&e2_col, &dt_j, &dt_2],
    ])?;
    debug_assert!({
        let (da, db) = helm_distance_split(n)?;
        d == &da + &db
    });
    Ok(d)
}

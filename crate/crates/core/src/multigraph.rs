//! Connected multigraphs and the divisor predicates living on them.
//!
//! Vertices are indexed `0..n` in this API; the text file format used by the
//! command-line tool is 1-based and converts on load.
//!
//! Every predicate that quantifies over vertex subsets scans all `2^n` bitmasks,
//! so those operations refuse graphs with more than [`MAX_SUBSET_VERTICES`] vertices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{invariant, precondition, Result};

/// Hard cap on the vertex count for subset-quantified predicates.
pub const MAX_SUBSET_VERTICES: usize = 24;

/// Undirected multigraph without loops, stored as a dense symmetric multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u64>,
}

impl Multigraph {
    /// Builds a graph from a full `n × n` matrix. Rejects asymmetric matrices and loops.
    pub fn from_matrix(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        let mut mult = vec![0u64; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(precondition(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row[i] != 0 {
                return Err(precondition(format!("self-loop at vertex {i}")));
            }
            mult[i * n..(i + 1) * n].copy_from_slice(row);
        }
        for i in 0..n {
            for j in 0..i {
                if mult[i * n + j] != mult[j * n + i] {
                    return Err(precondition(format!(
                        "multiplicity matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Multigraph { n, mult })
    }

    /// Builds a graph from 0-based `(i, j, multiplicity)` triples. A pair listed more than
    /// once has its multiplicities added.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut mult = vec![0u64; n * n];
        for &(i, j, k) in edges {
            if i >= n || j >= n {
                return Err(precondition(format!("edge ({i}, {j}) out of range for n = {n}")));
            }
            if i == j {
                return Err(precondition(format!("self-loop at vertex {i}")));
            }
            let total = mult[i * n + j]
                .checked_add(k)
                .ok_or_else(|| precondition("edge multiplicity overflows u64"))?;
            mult[i * n + j] = total;
            mult[j * n + i] = total;
        }
        Ok(Multigraph { n, mult })
    }

    /// `K_n^m`: `m` parallel edges between every pair of distinct vertices.
    pub fn complete(n: usize, m: u64) -> Self {
        let mut mult = vec![m; n * n];
        for i in 0..n {
            mult[i * n + i] = 0;
        }
        Multigraph { n, mult }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1)).collect();
        Multigraph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
        Multigraph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.mult[i * self.n + j]
    }

    /// Total number of edges, counted with multiplicity.
    pub fn edge_count(&self) -> u128 {
        let mut total = 0u128;
        for i in 0..self.n {
            for j in i + 1..self.n {
                total += self.multiplicity(i, j) as u128;
            }
        }
        total
    }

    /// Number of edges incident to `v`, with multiplicity.
    pub fn degree(&self, v: usize) -> u128 {
        (0..self.n).map(|u| self.multiplicity(v, u) as u128).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in 0..self.n {
                if !seen[u] && self.multiplicity(v, u) > 0 {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn require_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(precondition("graph has no vertices"));
        }
        if !self.is_connected() {
            return Err(precondition("graph is not connected"));
        }
        Ok(())
    }

    fn require_subset_scan(&self) -> Result<()> {
        if self.n > MAX_SUBSET_VERTICES {
            return Err(precondition(format!(
                "subset scan needs n <= {MAX_SUBSET_VERTICES}, got {}",
                self.n
            )));
        }
        Ok(())
    }

    fn edge_count_i64(&self) -> Result<i64> {
        i64::try_from(self.edge_count()).map_err(|_| precondition("edge count exceeds i64"))
    }

    /// `|E| - |V| + 1`.
    pub fn genus(&self) -> Result<i64> {
        self.require_connected()?;
        Ok(self.edge_count_i64()? - self.n as i64 + 1)
    }

    /// Number of edges of the subgraph induced by the vertex bitmask `subset`.
    pub fn induced_edge_count(&self, subset: u32) -> u128 {
        let mut total = 0u128;
        for i in bits(subset) {
            for j in bits(subset) {
                if i < j {
                    total += self.multiplicity(i, j) as u128;
                }
            }
        }
        total
    }

    /// Euler characteristic `|S| - |E(G[S])|` of the induced subgraph on a nonempty bitmask.
    pub fn euler_char_subset(&self, subset: u32) -> Result<i64> {
        if subset == 0 {
            return Err(precondition("vertex subset must be nonempty"));
        }
        self.check_mask(subset)?;
        let edges = i64::try_from(self.induced_edge_count(subset))
            .map_err(|_| precondition("edge count exceeds i64"))?;
        Ok(subset.count_ones() as i64 - edges)
    }

    fn check_mask(&self, subset: u32) -> Result<()> {
        if self.n < 32 && subset >> self.n != 0 {
            return Err(precondition(format!(
                "subset mask {subset:#x} has vertices outside 0..{}",
                self.n
            )));
        }
        Ok(())
    }

    fn check_len(&self, d: &Divisor) -> Result<()> {
        if d.len() != self.n {
            return Err(precondition(format!(
                "divisor has length {}, graph has {} vertices",
                d.len(),
                self.n
            )));
        }
        Ok(())
    }

    /// Whether `d` equals `(indeg_O(v) - 1)_v` for some orientation `O`, decided by the
    /// Euler-characteristic criterion over all vertex subsets.
    pub fn is_orientable(&self, d: &Divisor) -> Result<bool> {
        SubsetTables::new(self)?.is_orientable(d)
    }

    /// Whether `d` is a break divisor: effective, of degree `g(G)`, and of degree at least
    /// `|E(G[S])| - |S| + 1` on every nonempty vertex subset `S`.
    pub fn is_break_divisor(&self, d: &Divisor) -> Result<bool> {
        SubsetTables::new(self)?.is_break(d)
    }

    /// Break membership decided through orientability of `d - (q)` for every vertex `q`.
    pub fn break_via_orientability(&self, d: &Divisor) -> Result<bool> {
        SubsetTables::new(self)?.break_via_orientability(d)
    }

    /// G-parking test relative to the sink `q`. `a` lists the values on the vertices other
    /// than `q`, in increasing vertex order.
    pub fn is_g_parking(&self, q: usize, a: &[i64]) -> Result<bool> {
        self.require_connected()?;
        self.require_subset_scan()?;
        if q >= self.n {
            return Err(precondition(format!("sink {q} out of range")));
        }
        if a.len() + 1 != self.n {
            return Err(precondition(format!(
                "parking vector has length {}, expected {}",
                a.len(),
                self.n - 1
            )));
        }
        if a.iter().any(|&x| x < 0) {
            return Ok(false);
        }
        // vertex ids of the non-sink vertices, indexed like `a`
        let others: Vec<usize> = (0..self.n).filter(|&v| v != q).collect();
        let k = others.len();
        let degrees: Vec<u128> = others.iter().map(|&v| self.degree(v)).collect();
        for subset in 1u32..(1u32 << k) {
            let ok = bits(subset).any(|i| {
                let v = others[i];
                let inside: u128 = bits(subset)
                    .map(|j| self.multiplicity(v, others[j]) as u128)
                    .sum();
                (a[i] as u128) < degrees[i] - inside
            });
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All break divisors, in lexicographic order. Walks every effective divisor of
    /// degree `g(G)`; the number of those candidates is checked against the budget first.
    pub fn enumerate_break_divisors(&self, budget: &Budget) -> Result<Vec<Divisor>> {
        let tables = SubsetTables::new(self)?;
        let genus = self.genus()?;
        let candidates = composition_count(genus as u128, self.n as u128);
        budget.check_items("break divisor candidates", candidates)?;
        let mut out = Vec::new();
        let mut current = vec![0i64; self.n];
        let mut failure = None;
        for_each_composition(&mut current, 0, genus, &mut |d: &[i64]| {
            let divisor = Divisor::new(d.to_vec());
            match tables.is_break(&divisor) {
                Ok(true) => out.push(divisor),
                Ok(false) => {}
                Err(e) => failure = Some(e),
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(out)
    }

    /// Number of spanning trees: determinant of the reduced Laplacian, computed by
    /// fraction-free (Bareiss) elimination over the integers.
    pub fn spanning_tree_count(&self) -> Result<BigInt> {
        self.require_connected()?;
        let size = self.n - 1;
        if size == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        if i == j {
                            BigInt::from(self.degree(i))
                        } else {
                            -BigInt::from(self.multiplicity(i, j))
                        }
                    })
                    .collect()
            })
            .collect();
        let det = bareiss_determinant(&mut a);
        if det.is_negative() {
            return Err(invariant("reduced Laplacian has negative determinant"));
        }
        Ok(det)
    }
}

/// Determinant of a square integer matrix by Bareiss elimination; consumes the matrix.
pub(crate) fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let size = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[size - 1][size - 1]
}

/// Integer-valued function on the vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor(Vec<i64>);

impl Divisor {
    pub fn new(values: Vec<i64>) -> Self {
        Divisor(values)
    }

    pub fn zero(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Degree of the restriction to the vertex bitmask `subset`.
    pub fn degree_on(&self, subset: u32) -> i64 {
        bits(subset).map(|i| self.0[i]).sum()
    }

    /// `D - (q)`.
    pub fn minus_vertex(&self, q: usize) -> Divisor {
        let mut values = self.0.clone();
        values[q] -= 1;
        Divisor(values)
    }
}

impl From<Vec<i64>> for Divisor {
    fn from(values: Vec<i64>) -> Self {
        Divisor(values)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// Per-graph tables for running many subset-quantified checks against one graph.
///
/// Holds `|E(G[S])|` for every bitmask `S`, so each divisor check is a single
/// `O(2^n)` sweep of subset sums.
#[derive(Debug, Clone)]
pub struct SubsetTables<'g> {
    graph: &'g Multigraph,
    induced_edges: Vec<i64>,
    edges: i64,
}

impl<'g> SubsetTables<'g> {
    pub fn new(graph: &'g Multigraph) -> Result<Self> {
        graph.require_connected()?;
        graph.require_subset_scan()?;
        let n = graph.n;
        let mut induced_edges = vec![0i64; 1usize << n];
        for subset in 1usize..(1usize << n) {
            let v = subset.trailing_zeros() as usize;
            let rest = subset & (subset - 1);
            let to_rest: u64 = bits(rest as u32).map(|u| graph.multiplicity(v, u)).sum();
            induced_edges[subset] = induced_edges[rest] + to_rest as i64;
        }
        Ok(SubsetTables {
            graph,
            induced_edges,
            edges: graph.edge_count_i64()?,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        self.graph
    }

    fn subset_sums(&self, d: &Divisor) -> Vec<i64> {
        let n = self.graph.n;
        let mut sums = vec![0i64; 1usize << n];
        for subset in 1usize..(1usize << n) {
            let v = subset.trailing_zeros() as usize;
            sums[subset] = sums[subset & (subset - 1)] + d.0[v];
        }
        sums
    }

    pub fn is_orientable(&self, d: &Divisor) -> Result<bool> {
        self.graph.check_len(d)?;
        if d.degree() != self.edges - self.graph.n as i64 {
            return Ok(false);
        }
        let sums = self.subset_sums(d);
        Ok((1..sums.len()).all(|s| {
            let chi = s.count_ones() as i64 - self.induced_edges[s];
            sums[s] + chi >= 0
        }))
    }

    pub fn is_break(&self, d: &Divisor) -> Result<bool> {
        self.graph.check_len(d)?;
        let genus = self.edges - self.graph.n as i64 + 1;
        if !d.is_effective() || d.degree() != genus {
            return Ok(false);
        }
        let sums = self.subset_sums(d);
        Ok((1..sums.len()).all(|s| {
            let sub_genus = self.induced_edges[s] - s.count_ones() as i64 + 1;
            sums[s] >= sub_genus
        }))
    }

    pub fn break_via_orientability(&self, d: &Divisor) -> Result<bool> {
        self.graph.check_len(d)?;
        for q in 0..self.graph.n {
            if !self.is_orientable(&d.minus_vertex(q))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Iterator over the set bit positions of a mask.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Number of weak compositions of `total` into `parts` parts, saturating at `u128::MAX`.
pub(crate) fn composition_count(total: u128, parts: u128) -> u128 {
    if parts == 0 {
        return u128::from(total == 0);
    }
    // C(total + parts - 1, parts - 1)
    let k = parts - 1;
    let mut acc: u128 = 1;
    for i in 1..=k {
        let Some(num) = acc.checked_mul(total + i) else {
            return u128::MAX;
        };
        acc = num / i;
    }
    acc
}

/// Calls `visit` on every weak composition of `remaining` filling `current[pos..]`,
/// in lexicographic order.
pub(crate) fn for_each_composition(
    current: &mut [i64],
    pos: usize,
    remaining: i64,
    visit: &mut dyn FnMut(&[i64]),
) {
    if current.is_empty() {
        if remaining == 0 {
            visit(current);
        }
        return;
    }
    if pos + 1 == current.len() {
        current[pos] = remaining;
        visit(current);
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        for_each_composition(current, pos + 1, remaining - v, visit);
    }
    current[pos] = 0;
}

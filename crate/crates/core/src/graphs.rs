//! Coset graphs, Hamming graphs, distance partitions and equitable-partition
//! tests.
//!
//! Vectors over a subfield F_{2^d} are packed into integers, d bits per
//! coordinate, coordinate 0 in the most significant digit, so integer order
//! is lexicographic order on digit vectors. Adjacency is never stored: a
//! coset graph keeps its connector set and a Hamming graph is implicit.

use std::collections::VecDeque;
use std::fmt;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::concat::SimplexParams;
use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx, Subfield};
use crate::linear::LinearCode;

/// Largest vertex count any graph here will handle.
pub const MAX_VERTICES: u64 = 1 << 20;

/// Largest order accepted by the all-pairs distance-regularity test.
pub const MAX_ALL_PAIRS: usize = 1 << 12;

pub fn pack_digits(sub: &Subfield, word: &[Elem]) -> Result<u32> {
    let d = sub.degree();
    let mut v = 0u32;
    for (pos, &x) in word.iter().enumerate() {
        let digit = sub
            .digit(x)
            .ok_or(Error::AlphabetMismatch { pos, elem: x.0 })?;
        v = (v << d) | digit as u32;
    }
    Ok(v)
}

pub fn unpack_digits(sub: &Subfield, v: u32, len: usize) -> Vec<Elem> {
    let d = sub.degree();
    let mask = (1u32 << d) - 1;
    (0..len)
        .map(|i| sub.from_digit(((v >> ((len - 1 - i) as u32 * d)) & mask) as u16))
        .collect()
}

fn vertex_count(digits: usize, d: u32) -> Result<usize> {
    let bits = digits as u64 * d as u64;
    if bits > 20 {
        return Err(Error::TooLarge(1u128 << bits.min(127)));
    }
    Ok(1usize << bits)
}

/// An undirected graph on vertices 0..order with on-the-fly adjacency.
/// Loops and repeated neighbors are allowed and counted.
pub trait Graph: Sync {
    fn order(&self) -> usize;
    fn for_each_neighbor<F: FnMut(u32)>(&self, v: u32, f: F);

    fn degree(&self, v: u32) -> usize {
        let mut d = 0;
        self.for_each_neighbor(v, |_| d += 1);
        d
    }
}

/// Explicit adjacency lists.
#[derive(Clone, Debug, Default)]
pub struct AdjacencyGraph {
    adj: Vec<Vec<u32>>,
}

impl AdjacencyGraph {
    pub fn from_edges(order: usize, edges: &[(u32, u32)]) -> AdjacencyGraph {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        AdjacencyGraph { adj }
    }

    pub fn complete(order: usize) -> AdjacencyGraph {
        let edges: Vec<_> = (0..order as u32)
            .flat_map(|u| (u + 1..order as u32).map(move |v| (u, v)))
            .collect();
        Self::from_edges(order, &edges)
    }

    pub fn path(order: usize) -> AdjacencyGraph {
        let edges: Vec<_> = (1..order as u32).map(|v| (v - 1, v)).collect();
        Self::from_edges(order, &edges)
    }
}

impl Graph for AdjacencyGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn for_each_neighbor<F: FnMut(u32)>(&self, v: u32, f: F) {
        self.adj[v as usize].iter().copied().for_each(f);
    }
}

/// The Hamming graph H(n, 2^d) on packed words.
#[derive(Clone, Debug)]
pub struct HammingGraph {
    sub: Subfield,
    n: usize,
    order: usize,
}

impl HammingGraph {
    pub fn new(n: usize, sub: &Subfield) -> Result<HammingGraph> {
        let order = vertex_count(n, sub.degree())?;
        Ok(HammingGraph {
            sub: sub.clone(),
            n,
            order,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sub(&self) -> &Subfield {
        &self.sub
    }

    pub fn pack(&self, word: &[Elem]) -> Result<u32> {
        if word.len() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "word of length {} in H({}, q)",
                word.len(),
                self.n
            )));
        }
        pack_digits(&self.sub, word)
    }

    pub fn unpack(&self, v: u32) -> Vec<Elem> {
        unpack_digits(&self.sub, v, self.n)
    }

    /// All codewords, packed and sorted.
    pub fn pack_code(&self, code: &LinearCode) -> Result<Vec<u32>> {
        if code.sub() != &self.sub || code.n() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "[{}, {}] code outside H({}, q)",
                code.n(),
                code.k(),
                self.n
            )));
        }
        let mut set = code
            .codewords()?
            .iter()
            .map(|w| pack_digits(&self.sub, w))
            .collect::<Result<Vec<_>>>()?;
        set.sort_unstable();
        Ok(set)
    }

    /// Hamming distance between packed words.
    #[inline]
    pub fn distance(&self, u: u32, v: u32) -> u32 {
        let d = self.sub.degree();
        let mut x = u ^ v;
        let mut folded = x;
        for _ in 1..d {
            x >>= 1;
            folded |= x;
        }
        (folded & self.low_mask()).count_ones()
    }

    fn low_mask(&self) -> u32 {
        let d = self.sub.degree();
        (0..self.n).fold(0u32, |m, i| m | 1 << (i as u32 * d))
    }
}

impl Graph for HammingGraph {
    fn order(&self) -> usize {
        self.order
    }

    fn for_each_neighbor<F: FnMut(u32)>(&self, v: u32, mut f: F) {
        let d = self.sub.degree();
        for i in 0..self.n as u32 {
            for a in 1..(1u32 << d) {
                f(v ^ (a << (i * d)));
            }
        }
    }
}

/// Coset graph on the syndromes of a check matrix.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    sub: Subfield,
    dim: usize,
    order: usize,
    connectors: Vec<u32>,
    weight_one: Vec<u32>,
}

impl CosetGraph {
    /// Graph on all syndromes of `check` (k x n over `sub`); s ~ s' iff
    /// s + s' is a nonzero multiple of a column.
    pub fn from_check(ctx: &FieldCtx, check: &[Vec<Elem>], sub: &Subfield) -> Result<CosetGraph> {
        let n = check.first().map_or(0, Vec::len);
        let g = Self::build(ctx, check, sub, n)?;
        if let Some(i) = g.weight_one.iter().position(|&s| s == 0) {
            return Err(Error::ZeroColumn(i / (sub.size() - 1)));
        }
        Ok(g)
    }

    /// The coset graph of C, with the generator of C^⊥ as check matrix.
    /// Zero columns (weight-one codewords) are allowed here; they only show
    /// up as loops in [`Self::hamming_projection`].
    pub fn of_code(code: &LinearCode) -> Result<CosetGraph> {
        let dual = code.dual();
        Self::build(code.ctx(), dual.rows(), code.sub(), code.n())
    }

    fn build(ctx: &FieldCtx, check: &[Vec<Elem>], sub: &Subfield, n: usize) -> Result<CosetGraph> {
        let dim = check.len();
        let order = vertex_count(dim, sub.degree())?;
        if let Some(r) = check.iter().find(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "row of length {} in a {n}-column matrix",
                r.len()
            )));
        }
        let mut weight_one = Vec::with_capacity(n * (sub.size() - 1));
        for j in 0..n {
            for a in sub.nonzero() {
                let col: Vec<Elem> = check.iter().map(|r| ctx.mul(a, r[j])).collect();
                weight_one.push(pack_digits(sub, &col)?);
            }
        }
        let mut connectors: Vec<u32> = weight_one.iter().copied().filter(|&s| s != 0).collect();
        connectors.sort_unstable();
        connectors.dedup();
        Ok(CosetGraph {
            sub: sub.clone(),
            dim,
            order,
            connectors,
            weight_one,
        })
    }

    /// Syndrome-space dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sub(&self) -> &Subfield {
        &self.sub
    }

    /// The connector set S, sorted.
    pub fn connectors(&self) -> &[u32] {
        &self.connectors
    }

    /// Syndromes of all weight-one words, with multiplicity.
    pub fn weight_one_syndromes(&self) -> &[u32] {
        &self.weight_one
    }

    /// One edge per weight-one word, loops and repeats included: the
    /// quotient of H(n, p) by the code.
    pub fn hamming_projection(&self) -> HammingProjection<'_> {
        HammingProjection(self)
    }

    /// Distance-regularity from the base vertex 0. Coset graphs are Cayley
    /// graphs of an abelian group, hence vertex-transitive.
    pub fn distance_regularity(&self) -> Result<Option<IntersectionArray>> {
        let labels = bfs_labels(self, &[0])?;
        Ok(numbers_from_base(self, &labels))
    }
}

impl Graph for CosetGraph {
    fn order(&self) -> usize {
        self.order
    }

    fn for_each_neighbor<F: FnMut(u32)>(&self, v: u32, mut f: F) {
        for &s in &self.connectors {
            f(v ^ s);
        }
    }
}

/// See [`CosetGraph::hamming_projection`].
#[derive(Clone, Copy, Debug)]
pub struct HammingProjection<'a>(&'a CosetGraph);

impl Graph for HammingProjection<'_> {
    fn order(&self) -> usize {
        self.0.order
    }

    fn for_each_neighbor<F: FnMut(u32)>(&self, v: u32, mut f: F) {
        for &s in &self.0.weight_one {
            f(v ^ s);
        }
    }
}

/// Writes one `u v` line per edge with u < v; loops are skipped.
pub fn write_edges<G: Graph, W: Write>(g: &G, mut out: W) -> io::Result<()> {
    for u in 0..g.order() as u32 {
        let mut nbrs = Vec::new();
        g.for_each_neighbor(u, |v| {
            if v > u {
                nbrs.push(v)
            }
        });
        nbrs.sort_unstable();
        nbrs.dedup();
        for v in nbrs {
            writeln!(out, "{u} {v}")?;
        }
    }
    Ok(())
}

const UNREACHED: u16 = u16::MAX;

/// Multi-source BFS distances.
pub fn bfs_labels<G: Graph>(g: &G, start: &[u32]) -> Result<Vec<u16>> {
    let mut dist = vec![UNREACHED; g.order()];
    let mut queue = VecDeque::new();
    for &s in start {
        if dist[s as usize] == UNREACHED {
            dist[s as usize] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        g.for_each_neighbor(u, |v| {
            if dist[v as usize] == UNREACHED {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        });
    }
    let missing = dist.iter().filter(|&&d| d == UNREACHED).count();
    if missing > 0 {
        return Err(Error::Disconnected(missing));
    }
    Ok(dist)
}

/// BFS layers from `start`, each sorted.
pub fn distance_partition<G: Graph>(g: &G, start: &[u32]) -> Result<Vec<Vec<u32>>> {
    let dist = bfs_labels(g, start)?;
    let rho = dist.iter().copied().max().unwrap_or(0) as usize;
    let mut layers = vec![Vec::new(); rho + 1];
    for (v, &d) in dist.iter().enumerate() {
        layers[d as usize].push(v as u32);
    }
    Ok(layers)
}

/// A vertex whose neighbor counts differ from the first vertex of its cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotEquitable {
    pub vertex: u32,
    pub cell: usize,
    pub reference: u32,
    pub expected: Vec<u64>,
    pub observed: Vec<u64>,
}

impl fmt::Display for NotEquitable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} in cell {} has neighbor counts {:?}, vertex {} has {:?}",
            self.vertex, self.cell, self.observed, self.reference, self.expected
        )
    }
}

/// Quotient matrix, or the first vertex (in integer order) breaking it.
pub type QuotientVerdict = std::result::Result<Vec<Vec<u64>>, NotEquitable>;

fn count_row<G: Graph>(g: &G, labels: &[u32], cells: usize, v: u32) -> Vec<u64> {
    let mut row = vec![0u64; cells];
    g.for_each_neighbor(v, |w| row[labels[w as usize] as usize] += 1);
    row
}

/// Quotient of the partition given by a cell label per vertex.
pub fn quotient_from_labels<G: Graph>(
    g: &G,
    labels: &[u32],
    cells: usize,
) -> Result<QuotientVerdict> {
    if labels.len() != g.order() {
        return Err(Error::ShapeMismatch(format!(
            "{} labels for {} vertices",
            labels.len(),
            g.order()
        )));
    }
    let mut first: Vec<Option<u32>> = vec![None; cells];
    for (v, &c) in labels.iter().enumerate() {
        let slot = first
            .get_mut(c as usize)
            .ok_or_else(|| Error::ShapeMismatch(format!("label {c} with {cells} cells")))?;
        slot.get_or_insert(v as u32);
    }
    let reps: Vec<u32> = first
        .iter()
        .enumerate()
        .map(|(c, r)| r.ok_or_else(|| Error::ShapeMismatch(format!("cell {c} is empty"))))
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<u64>> = reps
        .iter()
        .map(|&r| count_row(g, labels, cells, r))
        .collect();
    let witness = (0..g.order() as u32)
        .into_par_iter()
        .find_first(|&v| count_row(g, labels, cells, v) != matrix[labels[v as usize] as usize]);
    Ok(match witness {
        None => Ok(matrix),
        Some(v) => {
            let cell = labels[v as usize] as usize;
            Err(NotEquitable {
                vertex: v,
                cell,
                reference: reps[cell],
                expected: matrix[cell].clone(),
                observed: count_row(g, labels, cells, v),
            })
        }
    })
}

/// Quotient of an explicit partition; the cells must cover every vertex once.
pub fn quotient_matrix<G: Graph>(g: &G, cells: &[Vec<u32>]) -> Result<QuotientVerdict> {
    let mut labels = vec![u32::MAX; g.order()];
    for (c, cell) in cells.iter().enumerate() {
        for &v in cell {
            let slot = labels
                .get_mut(v as usize)
                .ok_or_else(|| Error::ShapeMismatch(format!("vertex {v} out of range")))?;
            if *slot != u32::MAX {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v} lies in two cells"
                )));
            }
            *slot = c as u32;
        }
    }
    if let Some(v) = labels.iter().position(|&l| l == u32::MAX) {
        return Err(Error::ShapeMismatch(format!("vertex {v} lies in no cell")));
    }
    quotient_from_labels(g, &labels, cells.len())
}

/// {b_0, ..., b_{rho-1}; c_1, ..., c_rho}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> IntersectionArray {
        IntersectionArray { b, c }
    }

    /// {q^2-1, q(q-1), 1; 1, q, q^2-1}.
    pub fn kasami(q: u64) -> IntersectionArray {
        IntersectionArray {
            b: vec![q * q - 1, q * (q - 1), 1],
            c: vec![1, q, q * q - 1],
        }
    }

    /// Reads b_i and c_i off a tridiagonal quotient matrix.
    pub fn from_tridiagonal(q: &[Vec<u64>]) -> Option<IntersectionArray> {
        let rho = q.len().checked_sub(1)?;
        for (i, row) in q.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i.abs_diff(j) > 1 && x != 0 {
                    return None;
                }
            }
        }
        let b: Vec<u64> = (0..rho).map(|i| q[i][i + 1]).collect();
        let c: Vec<u64> = (1..=rho).map(|i| q[i][i - 1]).collect();
        (b.iter().chain(&c).all(|&x| x > 0)).then_some(IntersectionArray { b, c })
    }

    pub fn covering_radius(&self) -> usize {
        self.b.len()
    }

    /// Layer sizes forced by |G_{i+1}| c_{i+1} = |G_i| b_i from |G_0| = 1.
    pub fn layer_sizes(&self) -> Option<Vec<u64>> {
        let mut sizes = vec![1u64];
        for (b, c) in self.b.iter().zip(&self.c) {
            let prev = *sizes.last()? * b;
            if prev % c != 0 {
                return None;
            }
            sizes.push(prev / c);
        }
        Some(sizes)
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

/// Outcome of a complete-regularity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrVerdict {
    Regular {
        array: IntersectionArray,
        layer_sizes: Vec<u64>,
    },
    NotEquitable(NotEquitable),
}

impl CrVerdict {
    pub fn array(&self) -> Option<&IntersectionArray> {
        match self {
            CrVerdict::Regular { array, .. } => Some(array),
            CrVerdict::NotEquitable(_) => None,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.array().is_some()
    }
}

/// Complete regularity of a vertex set: the distance partition from `start`
/// must be equitable.
pub fn set_regularity<G: Graph>(g: &G, start: &[u32]) -> Result<CrVerdict> {
    let dist = bfs_labels(g, start)?;
    let cells = dist.iter().copied().max().unwrap_or(0) as usize + 1;
    let labels: Vec<u32> = dist.iter().map(|&d| d as u32).collect();
    let mut layer_sizes = vec![0u64; cells];
    for &d in &dist {
        layer_sizes[d as usize] += 1;
    }
    Ok(match quotient_from_labels(g, &labels, cells)? {
        Err(w) => CrVerdict::NotEquitable(w),
        Ok(q) => {
            let array = IntersectionArray::from_tridiagonal(&q).unwrap_or(IntersectionArray {
                b: Vec::new(),
                c: Vec::new(),
            });
            CrVerdict::Regular { array, layer_sizes }
        }
    })
}

/// Complete regularity of a linear code in H(n, p), decided on its coset
/// graph (all p^{n-k} cosets), or in H(n, p) itself when that is smaller.
pub fn is_completely_regular(code: &LinearCode) -> Result<CrVerdict> {
    let d = code.sub().degree();
    let redundancy = code.n() - code.k();
    if (redundancy as u64 * d as u64) <= 20 {
        let g = CosetGraph::of_code(code)?;
        set_regularity(&g.hamming_projection(), &[0])
    } else if (code.n() as u64 * d as u64) <= 20 {
        let h = HammingGraph::new(code.n(), code.sub())?;
        set_regularity(&h, &h.pack_code(code)?)
    } else {
        Err(Error::TooLarge(
            1u128 << (redundancy as u64 * d as u64).min(127),
        ))
    }
}

fn numbers_from_base<G: Graph>(g: &G, dist: &[u16]) -> Option<IntersectionArray> {
    let diam = *dist.iter().max()? as usize;
    let mut b: Vec<Option<u64>> = vec![None; diam + 1];
    let mut c: Vec<Option<u64>> = vec![None; diam + 1];
    for v in 0..g.order() as u32 {
        let i = dist[v as usize];
        let (mut up, mut down) = (0u64, 0u64);
        g.for_each_neighbor(v, |w| {
            let j = dist[w as usize];
            if j == i + 1 {
                up += 1;
            } else if j + 1 == i {
                down += 1;
            }
        });
        let i = i as usize;
        if *b[i].get_or_insert(up) != up || *c[i].get_or_insert(down) != down {
            return None;
        }
    }
    Some(IntersectionArray {
        b: b[..diam].iter().map(|x| x.unwrap_or(0)).collect(),
        c: c[1..].iter().map(|x| x.unwrap_or(0)).collect(),
    })
}

/// All-pairs distance-regularity test.
pub fn is_distance_regular<G: Graph>(g: &G) -> Result<Option<IntersectionArray>> {
    if g.order() > MAX_ALL_PAIRS {
        return Err(Error::TooLarge(g.order() as u128));
    }
    let per_vertex: Vec<Option<IntersectionArray>> = (0..g.order() as u32)
        .into_par_iter()
        .map(|u| {
            bfs_labels(g, &[u])
                .ok()
                .and_then(|d| numbers_from_base(g, &d))
        })
        .collect();
    let Some(Some(first)) = per_vertex.first().cloned() else {
        return Ok(None);
    };
    Ok(per_vertex
        .iter()
        .all(|a| a.as_ref() == Some(&first))
        .then_some(first))
}

/// Outer distance distributions grouped by distance to the set, or the
/// first vertex whose distribution differs from its group's.
pub type DelsarteVerdict = std::result::Result<Vec<Vec<u64>>, u32>;

/// For every vector v of H(n, p), the counts |{c in S : d(v, c) = j}|, checked
/// to depend only on d(v, S).
pub fn delsarte_check_set(h: &HammingGraph, set: &[u32]) -> Result<DelsarteVerdict> {
    let dist = bfs_labels(h, set)?;
    let n = h.n();
    let outer = |v: u32| {
        let mut row = vec![0u64; n + 1];
        for &c in set {
            row[h.distance(v, c) as usize] += 1;
        }
        row
    };
    let rho = *dist.iter().max().unwrap_or(&0) as usize;
    let mut reference: Vec<Option<Vec<u64>>> = vec![None; rho + 1];
    for (v, &d) in dist.iter().enumerate() {
        if reference[d as usize].is_none() {
            reference[d as usize] = Some(outer(v as u32));
        }
    }
    let reference: Vec<Vec<u64>> = reference
        .into_iter()
        .map(Option::unwrap_or_default)
        .collect();
    let witness = (0..h.order() as u32)
        .into_par_iter()
        .find_first(|&v| outer(v) != reference[dist[v as usize] as usize]);
    Ok(match witness {
        None => Ok(reference),
        Some(v) => Err(v),
    })
}

pub fn delsarte_check(code: &LinearCode) -> Result<bool> {
    let h = HammingGraph::new(code.n(), code.sub())?;
    Ok(delsarte_check_set(&h, &h.pack_code(code)?)?.is_ok())
}

/// Connector set of a check matrix: every column times every nonzero
/// scalar, packed, sorted and deduplicated (0 kept if present).
pub fn connector_set(ctx: &FieldCtx, check: &[Vec<Elem>], sub: &Subfield) -> Result<Vec<u32>> {
    let n = check.first().map_or(0, Vec::len);
    let mut s = Vec::with_capacity(n * (sub.size() - 1));
    for j in 0..n {
        for a in sub.nonzero() {
            let col: Vec<Elem> = check.iter().map(|r| ctx.mul(a, r[j])).collect();
            s.push(pack_digits(sub, &col)?);
        }
    }
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// Compares the connector set of `ma` over F_q, mapped to F_p^{km} by the
/// polynomial-basis expansion (row i, coordinate s at index i*m + s), with
/// that of `mb` over F_p.
pub fn graphs_equal_by_syndrome(
    simplex: &SimplexParams,
    ma: &[Vec<Elem>],
    mb: &[Vec<Elem>],
) -> Result<bool> {
    let m = simplex.m() as usize;
    let na = ma.first().map_or(0, Vec::len);
    let nb = mb.first().map_or(0, Vec::len);
    if mb.len() != ma.len() * m || nb != na * simplex.len() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} is not the expansion shape of {}x{}",
            mb.len(),
            nb,
            ma.len(),
            na
        )));
    }
    let ctx = simplex.ctx();
    let (fq, fp) = (simplex.outer_field(), simplex.inner_field());
    let mut sa = Vec::with_capacity(na * (fq.size() - 1));
    for j in 0..na {
        for a in fq.nonzero() {
            let mut expanded = Vec::with_capacity(ma.len() * m);
            for row in ma {
                expanded.extend_from_slice(simplex.coords(ctx.mul(a, row[j]))?);
            }
            sa.push(pack_digits(fp, &expanded)?);
        }
    }
    sa.sort_unstable();
    sa.dedup();
    Ok(sa == connector_set(ctx, mb, fp)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> (std::sync::Arc<FieldCtx>, Subfield) {
        let ctx = FieldCtx::shared(1).unwrap();
        let f2 = ctx.subfield(1).unwrap();
        (ctx, f2)
    }

    #[test]
    fn packing_is_lexicographic() {
        let ctx = FieldCtx::shared(4).unwrap();
        let f4 = ctx.subfield(2).unwrap();
        let w = vec![Elem::ONE, Elem::ZERO, f4.generator()];
        let v = pack_digits(&f4, &w).unwrap();
        assert_eq!(v, 0b01_00_10);
        assert_eq!(unpack_digits(&f4, v, 3), w);
    }

    #[test]
    fn identity_check_gives_hypercube() {
        let (ctx, f2) = f2();
        let id: Vec<Vec<Elem>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| if i == j { Elem::ONE } else { Elem::ZERO })
                    .collect()
            })
            .collect();
        let g = CosetGraph::from_check(&ctx, &id, &f2).unwrap();
        let h = HammingGraph::new(4, &f2).unwrap();
        for v in 0..16 {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            g.for_each_neighbor(v, |w| a.push(w));
            h.for_each_neighbor(v, |w| b.push(w));
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
        assert_eq!(
            is_distance_regular(&g).unwrap(),
            Some(IntersectionArray::new(vec![4, 3, 2, 1], vec![1, 2, 3, 4]))
        );
    }

    #[test]
    fn zero_column_rejected() {
        let (ctx, f2) = f2();
        let m = vec![vec![Elem::ONE, Elem::ZERO]];
        assert_eq!(
            CosetGraph::from_check(&ctx, &m, &f2).unwrap_err(),
            Error::ZeroColumn(1)
        );
    }

    #[test]
    fn complete_and_path_graphs() {
        let k4 = AdjacencyGraph::complete(4);
        assert_eq!(
            is_distance_regular(&k4).unwrap(),
            Some(IntersectionArray::new(vec![3], vec![1]))
        );
        assert_eq!(is_distance_regular(&AdjacencyGraph::path(3)).unwrap(), None);
        assert_eq!(
            quotient_matrix(&k4, &[vec![0, 1, 2, 3]]).unwrap(),
            Ok(vec![vec![3]])
        );
        assert_eq!(
            distance_partition(&k4, &[0, 1, 2, 3]).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn unbalanced_split_of_cube_has_witness() {
        let (_, f2) = f2();
        let h = HammingGraph::new(3, &f2).unwrap();
        // {0, 1} against the rest: 0 sees one vertex of its cell, so does 1;
        // 2 sees 3 and 6 in cell 1 and 0 in cell 0, 3 sees 1 in cell 0 too.
        let verdict = quotient_matrix(&h, &[vec![0, 1], vec![2, 3, 4, 5, 6, 7]]).unwrap();
        let w = verdict.unwrap_err();
        assert_eq!(w.vertex, 6);
        assert_eq!(w.reference, 2);
        assert_eq!(w.observed, vec![0, 3]);
    }

    #[test]
    fn disconnected_graph() {
        let g = AdjacencyGraph::from_edges(3, &[(0, 1)]);
        assert_eq!(bfs_labels(&g, &[0]).unwrap_err(), Error::Disconnected(1));
    }

    #[test]
    fn hamming_7_4_is_perfect() {
        let (ctx, f2) = f2();
        let rows: Vec<Vec<Elem>> = ["1000110", "0100101", "0010011", "0001111"]
            .iter()
            .map(|s| s.bytes().map(|b| Elem((b - b'0') as u16)).collect())
            .collect();
        let code = LinearCode::new(ctx, f2, 7, rows).unwrap();
        let v = is_completely_regular(&code).unwrap();
        assert_eq!(v.array(), Some(&IntersectionArray::new(vec![7], vec![1])));
        assert!(delsarte_check(&code).unwrap());
    }

    #[test]
    fn array_display_and_layers() {
        let a = IntersectionArray::kasami(4);
        assert_eq!(a.to_string(), "{15, 12, 1; 1, 4, 15}");
        assert_eq!(a.layer_sizes().unwrap(), vec![1, 15, 45, 3]);
    }

    #[test]
    fn edges_exported_once() {
        let mut out = Vec::new();
        write_edges(&AdjacencyGraph::path(3), &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0 1\n1 2\n");
    }
}

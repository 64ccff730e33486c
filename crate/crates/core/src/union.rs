//! Unions of mutually distance-3 cosets of a completely regular code with
//! array {P-1, P-q, 1; 1, q, P-1}, and the additivity test.

use std::io::{self, Write};

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{
    bfs_labels, quotient_from_labels, set_regularity, CrVerdict, Graph, HammingGraph,
    IntersectionArray, NotEquitable,
};
use crate::linear::LinearCode;

/// How B_k is assembled from the base code's cosets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuildMode {
    /// C together with the first k-1 leader cosets.
    Direct,
    /// Repeated doubling B <- B ∪ (v + B), log2 k times.
    AdditiveTower,
}

/// An additive CR set C in H(n, p) with the r-1 cosets partitioning the
/// vertices at distance 3 from it.
#[derive(Clone, Debug)]
pub struct CosetFamily {
    hamming: HammingGraph,
    base: Vec<u32>,
    array: IntersectionArray,
    big_p: u64,
    q: u64,
    leaders: Vec<u32>,
    distance: Vec<u16>,
}

/// The hypothesis array {P-1, P-q, 1; 1, q, P-1}, read back as (P, q).
fn hypothesis_parameters(a: &IntersectionArray) -> Option<(u64, u64)> {
    match (a.b.as_slice(), a.c.as_slice()) {
        (&[b0, b1, 1], &[1, q, c3]) if c3 == b0 && q > 0 => {
            let big_p = b0 + 1;
            (b1 + q == big_p && big_p % q == 0 && big_p.is_power_of_two() && q.is_power_of_two())
                .then_some((big_p, q))
        }
        _ => None,
    }
}

impl CosetFamily {
    pub fn from_code(code: &LinearCode) -> Result<CosetFamily> {
        let h = HammingGraph::new(code.n(), code.sub())?;
        let base = h.pack_code(code)?;
        Self::from_set(h, base)
    }

    /// `base` must be additive and CR with the hypothesis array.
    pub fn from_set(hamming: HammingGraph, mut base: Vec<u32>) -> Result<CosetFamily> {
        base.sort_unstable();
        base.dedup();
        if !is_additive(&base) {
            return Err(Error::InvalidParameters("base set is not additive".into()));
        }
        let array = match set_regularity(&hamming, &base)? {
            CrVerdict::Regular { array, .. } => array,
            CrVerdict::NotEquitable(w) => {
                return Err(Error::WrongArray(format!("not completely regular: {w}")))
            }
        };
        let (big_p, q) =
            hypothesis_parameters(&array).ok_or_else(|| Error::WrongArray(array.to_string()))?;
        let distance = bfs_labels(&hamming, &base)?;
        let mut covered = vec![false; hamming.order()];
        let mut leaders = Vec::new();
        for v in 0..hamming.order() as u32 {
            if distance[v as usize] == 3 && !covered[v as usize] {
                leaders.push(v);
                for &c in &base {
                    covered[(v ^ c) as usize] = true;
                }
            }
        }
        let r = big_p / q;
        if leaders.len() as u64 != r - 1 {
            return Err(Error::WrongArray(format!(
                "{} cosets at distance 3, expected {}",
                leaders.len(),
                r - 1
            )));
        }
        Ok(CosetFamily {
            hamming,
            base,
            array,
            big_p,
            q,
            leaders,
            distance,
        })
    }

    pub fn hamming(&self) -> &HammingGraph {
        &self.hamming
    }

    /// The base code C = C_0 as a sorted set.
    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn array(&self) -> &IntersectionArray {
        &self.array
    }

    /// P = p^{2m}, i.e. b_0 + 1.
    pub fn big_p(&self) -> u64 {
        self.big_p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// r = P/q, the number of cosets C_0, ..., C_{r-1}.
    pub fn r(&self) -> usize {
        (self.big_p / self.q) as usize
    }

    /// Lexicographically least vector of each distance-3 coset, ascending.
    pub fn leaders(&self) -> &[u32] {
        &self.leaders
    }

    /// Coset C_i: the base for i = 0, else leader i plus the base, sorted.
    pub fn coset(&self, i: usize) -> Vec<u32> {
        let shift = if i == 0 { 0 } else { self.leaders[i - 1] };
        let mut c: Vec<u32> = self.base.iter().map(|&x| x ^ shift).collect();
        c.sort_unstable();
        c
    }

    /// I_k = {P-1, P-kq, 1; 1, kq, P-1}.
    pub fn expected_array(&self, k: usize) -> IntersectionArray {
        let (p, kq) = (self.big_p, k as u64 * self.q);
        IntersectionArray::new(vec![p - 1, p - kq, 1], vec![1, kq, p - 1])
    }

    fn check_k(&self, k: usize) -> Result<()> {
        let max = self.r() - 1;
        if k == 0 || k > max {
            return Err(Error::KOutOfRange { k, max });
        }
        Ok(())
    }

    /// B_k as a sorted vertex set.
    pub fn build_bk(&self, k: usize, mode: BuildMode) -> Result<Vec<u32>> {
        self.check_k(k)?;
        match mode {
            BuildMode::Direct => Ok(self.union_of(&(0..k).collect::<Vec<_>>())),
            BuildMode::AdditiveTower => {
                if !k.is_power_of_two() {
                    return Err(Error::InvalidParameters(format!(
                        "k = {k} is not a power of 2"
                    )));
                }
                let mut set = self.base.clone();
                for _ in 0..k.trailing_zeros() {
                    let fam = CosetFamily::from_set(self.hamming.clone(), set.clone())?;
                    let v = fam.leaders[0];
                    let shifted: Vec<u32> = set.iter().map(|&x| x ^ v).collect();
                    set.extend(shifted);
                    set.sort_unstable();
                }
                Ok(set)
            }
        }
    }

    /// The union of the cosets C_i, i in `indices`.
    pub fn union_of(&self, indices: &[usize]) -> Vec<u32> {
        let mut set: Vec<u32> = indices.iter().flat_map(|&i| self.coset(i)).collect();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// k distinct coset indices drawn uniformly from 0..r.
    pub fn random_selection<R: Rng>(&self, k: usize, rng: &mut R) -> Result<Vec<usize>> {
        if k == 0 || k > self.r() {
            return Err(Error::KOutOfRange { k, max: self.r() });
        }
        let mut idx = sample(rng, self.r(), k).into_vec();
        idx.sort_unstable();
        Ok(idx)
    }

    /// Labels for the 2r cells: C_i gets i, its neighborhood gets r + i.
    fn refined_labels(&self) -> Result<Vec<u32>> {
        let r = self.r();
        let mut labels = vec![u32::MAX; self.hamming.order()];
        for i in 0..r {
            for v in self.coset(i) {
                labels[v as usize] = i as u32;
            }
        }
        for i in 0..r {
            for v in self.coset(i) {
                let mut clash = None;
                self.hamming.for_each_neighbor(v, |w| {
                    let slot = &mut labels[w as usize];
                    if *slot == u32::MAX {
                        *slot = (r + i) as u32;
                    } else if *slot != (r + i) as u32 {
                        clash = Some(w);
                    }
                });
                if let Some(w) = clash {
                    return Err(Error::WrongArray(format!(
                        "vertex {w} lies next to two cosets"
                    )));
                }
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == u32::MAX) {
            return Err(Error::WrongArray(format!(
                "vertex {v} is at distance > 1 from every coset"
            )));
        }
        Ok(labels)
    }

    /// The 2r x 2r block quotient. A vertex of C_i has all P-1 neighbors in
    /// N(C_i); a vertex of N(C_i) has 1 neighbor in C_i, q-2 in N(C_i) and q
    /// in every other N(C_j).
    pub fn expected_refined_quotient(&self) -> Vec<Vec<u64>> {
        let r = self.r();
        let (p, q) = (self.big_p, self.q);
        let mut m = vec![vec![0u64; 2 * r]; 2 * r];
        for i in 0..r {
            m[i][r + i] = p - 1;
            m[r + i][i] = 1;
            m[r + i][r + i] = q - 2;
            for j in 0..r {
                if j != i {
                    m[r + i][r + j] = q;
                }
            }
        }
        m
    }

    /// Equitability of (C_0, ..., C_{r-1}, N(C_0), ..., N(C_{r-1})).
    pub fn refined_partition_check(&self) -> Result<RefinedCheck> {
        let labels = self.refined_labels()?;
        let expected = self.expected_refined_quotient();
        let observed = quotient_from_labels(&self.hamming, &labels, 2 * self.r())?;
        Ok(RefinedCheck { expected, observed })
    }

    /// Equitability of (B^(0), B^(1), B^(2), B^(3)) for B_k = C_0 ∪ ... ∪ C_{k-1}.
    pub fn four_cell_check(&self, k: usize) -> Result<RefinedCheck> {
        self.check_k(k)?;
        let r = self.r() as u32;
        let k32 = k as u32;
        let labels: Vec<u32> = self
            .refined_labels()?
            .into_iter()
            .map(|l| match (l < r, l % r < k32) {
                (true, true) => 0,
                (false, true) => 1,
                (false, false) => 2,
                (true, false) => 3,
            })
            .collect();
        let (p, kq) = (self.big_p, k as u64 * self.q);
        let expected = vec![
            vec![0, p - 1, 0, 0],
            vec![1, kq - 2, p - kq, 0],
            vec![0, kq, p - kq - 2, 1],
            vec![0, 0, p - 1, 0],
        ];
        let observed = quotient_from_labels(&self.hamming, &labels, 4)?;
        Ok(RefinedCheck { expected, observed })
    }

    /// Vertices at distance exactly 3 from the base.
    pub fn distance3_count(&self) -> usize {
        self.distance.iter().filter(|&&d| d == 3).count()
    }
}

/// Expected block quotient next to the observed verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedCheck {
    pub expected: Vec<Vec<u64>>,
    pub observed: std::result::Result<Vec<Vec<u64>>, NotEquitable>,
}

impl RefinedCheck {
    pub fn passed(&self) -> bool {
        self.observed.as_ref().is_ok_and(|m| *m == self.expected)
    }
}

/// Builds the family of distance-3 cosets of a code.
pub fn distance3_coset_reps(code: &LinearCode) -> Result<CosetFamily> {
    CosetFamily::from_code(code)
}

/// True iff 0 is in S and S is closed under addition. The set is first
/// deduplicated; closure is decided by comparing |S| with 2^rank over F_2.
pub fn is_additive(set: &[u32]) -> bool {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.first() != Some(&0) {
        return false;
    }
    let mut basis: Vec<u32> = Vec::new();
    for &x in &s {
        let mut y = x;
        for &b in &basis {
            y = y.min(y ^ b);
        }
        if y != 0 {
            basis.push(y);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len() < 32 && s.len() == 1usize << basis.len()
}

/// One packed vertex per line, ascending.
pub fn write_vertex_set<W: Write>(set: &[u32], mut out: W) -> io::Result<()> {
    let mut s = set.to_vec();
    s.sort_unstable();
    for v in s {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

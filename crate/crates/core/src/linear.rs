//! Linear codes over a subfield of the ambient field: canonical forms, duals,
//! exhaustive weight enumeration and the MacWilliams transform.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx, Subfield};

/// Largest number of codewords any exhaustive enumeration will visit.
pub const ENUMERATION_GUARD: u128 = 1 << 24;

/// A linear code given by a full-rank generator matrix over a subfield.
#[derive(Clone)]
pub struct LinearCode {
    ctx: Arc<FieldCtx>,
    sub: Subfield,
    n: usize,
    gen: Vec<Vec<Elem>>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{} code", self.n, self.k(), self.sub.size())
    }
}

impl LinearCode {
    /// Builds a code from independent generator rows.
    pub fn new(
        ctx: Arc<FieldCtx>,
        sub: Subfield,
        n: usize,
        rows: Vec<Vec<Elem>>,
    ) -> Result<LinearCode> {
        check_rows(&sub, n, &rows)?;
        let rank = rank_of(&ctx, rows.clone());
        if rank < rows.len() {
            return Err(Error::RankDeficient {
                rank,
                rows: rows.len(),
            });
        }
        Ok(LinearCode {
            ctx,
            sub,
            n,
            gen: rows,
        })
    }

    /// Builds the code spanned by `rows`, dropping dependent ones.
    pub fn span(
        ctx: Arc<FieldCtx>,
        sub: Subfield,
        n: usize,
        rows: Vec<Vec<Elem>>,
    ) -> Result<LinearCode> {
        check_rows(&sub, n, &rows)?;
        let mut rows = rows;
        rref(&ctx, &mut rows);
        Ok(LinearCode {
            ctx,
            sub,
            n,
            gen: rows,
        })
    }

    pub fn zero(ctx: Arc<FieldCtx>, sub: Subfield, n: usize) -> LinearCode {
        LinearCode {
            ctx,
            sub,
            n,
            gen: Vec::new(),
        }
    }

    pub fn full(ctx: Arc<FieldCtx>, sub: Subfield, n: usize) -> LinearCode {
        let gen = (0..n)
            .map(|i| {
                let mut r = vec![Elem::ZERO; n];
                r[i] = Elem::ONE;
                r
            })
            .collect();
        LinearCode { ctx, sub, n, gen }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn sub(&self) -> &Subfield {
        &self.sub
    }

    /// Alphabet size 2^d.
    pub fn alphabet(&self) -> usize {
        self.sub.size()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.gen
    }

    /// Number of codewords, |sub|^k.
    pub fn size(&self) -> u128 {
        1u128 << (self.sub.degree() as usize * self.k()).min(127)
    }

    /// Reduced row-echelon generator matrix. Two codes are equal as sets iff
    /// their canonical forms coincide.
    pub fn canonical_form(&self) -> Result<LinearCode> {
        let mut rows = self.gen.clone();
        rref(&self.ctx, &mut rows);
        if rows.len() < self.gen.len() {
            return Err(Error::RankDeficient {
                rank: rows.len(),
                rows: self.gen.len(),
            });
        }
        Ok(LinearCode {
            ctx: self.ctx.clone(),
            sub: self.sub.clone(),
            n: self.n,
            gen: rows,
        })
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        if self.n != other.n || self.sub != other.sub || self.k() != other.k() {
            return false;
        }
        match (self.canonical_form(), other.canonical_form()) {
            (Ok(a), Ok(b)) => a.gen == b.gen,
            _ => false,
        }
    }

    /// The dual code under the standard inner product.
    pub fn dual(&self) -> LinearCode {
        let mut rows = self.gen.clone();
        let pivots = rref(&self.ctx, &mut rows);
        let mut is_pivot = vec![None; self.n];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let gen = (0..self.n)
            .filter(|&f| is_pivot[f].is_none())
            .map(|f| {
                let mut v = vec![Elem::ZERO; self.n];
                v[f] = Elem::ONE;
                for (r, &c) in pivots.iter().enumerate() {
                    // -x = x in characteristic 2
                    v[c] = rows[r][f];
                }
                v
            })
            .collect();
        LinearCode {
            ctx: self.ctx.clone(),
            sub: self.sub.clone(),
            n: self.n,
            gen,
        }
    }

    /// A membership oracle built from the parity-check matrix.
    pub fn checker(&self) -> Checker {
        Checker {
            ctx: self.ctx.clone(),
            n: self.n,
            checks: self.dual().gen,
        }
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        self.checker().contains(word)
    }

    /// The codeword sum_i msg_i * row_i.
    pub fn encode(&self, msg: &[Elem]) -> Vec<Elem> {
        let mut w = vec![Elem::ZERO; self.n];
        for (&m, row) in msg.iter().zip(&self.gen) {
            if m.is_zero() {
                continue;
            }
            for (x, &g) in w.iter_mut().zip(row) {
                *x += self.ctx.mul(m, g);
            }
        }
        w
    }

    fn guard(&self) -> Result<()> {
        let bits = self.sub.degree() as usize * self.k();
        if bits > 24 {
            return Err(Error::TooLarge(1u128 << bits.min(127)));
        }
        Ok(())
    }

    /// Every codeword, messages ranked lexicographically over the subfield
    /// elements in bits order (first message symbol most significant).
    pub fn codewords(&self) -> Result<Vec<Vec<Elem>>> {
        self.guard()?;
        let q = self.sub.size();
        let k = self.k();
        let elems = self.sub.elements();
        let total = q.pow(k as u32);
        let mut out = Vec::with_capacity(total);
        let mut msg = vec![Elem::ZERO; k];
        for idx in 0..total {
            let mut rest = idx;
            for i in (0..k).rev() {
                msg[i] = elems[rest % q];
                rest /= q;
            }
            out.push(self.encode(&msg));
        }
        Ok(out)
    }

    /// Exact weight distribution by exhaustive enumeration.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.guard()?;
        let packer = Packer::new(self.n, self.sub.degree());
        // F_2-basis of the code: (generator power g^s) * row_i
        let mut basis: Vec<Vec<u64>> = Vec::new();
        for row in &self.gen {
            for s in 0..self.sub.degree() {
                let scale = self.sub.from_digit(1 << s);
                let scaled: Vec<Elem> = row.iter().map(|&x| self.ctx.mul(scale, x)).collect();
                basis.push(packer.pack(&self.sub, &scaled));
            }
        }
        let counts = gray_weight_counts(&packer, &basis, self.n);
        Ok(WeightDistribution { counts })
    }

    pub fn minimum_distance(&self) -> Result<usize> {
        let w = self.weight_distribution()?;
        Ok(w.minimum_distance().unwrap_or(0))
    }

    pub fn is_mds(&self) -> Result<bool> {
        if self.k() == 0 {
            return Ok(false);
        }
        Ok(self.minimum_distance()? == self.n - self.k() + 1)
    }

    /// Applies `perm` to coordinates: coordinate i moves to position perm[i].
    pub fn permute(&self, perm: &[usize]) -> LinearCode {
        let gen = self
            .gen
            .iter()
            .map(|row| {
                let mut out = vec![Elem::ZERO; self.n];
                for (i, &x) in row.iter().enumerate() {
                    out[perm[i]] = x;
                }
                out
            })
            .collect();
        LinearCode {
            ctx: self.ctx.clone(),
            sub: self.sub.clone(),
            n: self.n,
            gen,
        }
    }
}

fn check_rows(sub: &Subfield, n: usize, rows: &[Vec<Elem>]) -> Result<()> {
    for row in rows {
        if row.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "row of length {} in a length-{n} code",
                row.len()
            )));
        }
        if let Some((pos, &e)) = row.iter().enumerate().find(|(_, &e)| !sub.contains(e)) {
            return Err(Error::AlphabetMismatch { pos, elem: e.0 });
        }
    }
    Ok(())
}

/// In-place reduced row-echelon form; drops zero rows and returns pivot columns.
pub(crate) fn rref(ctx: &FieldCtx, rows: &mut Vec<Vec<Elem>>) -> Vec<usize> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = ctx.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x += ctx.mul(f, y);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank_of(ctx: &FieldCtx, mut rows: Vec<Vec<Elem>>) -> usize {
    rref(ctx, &mut rows).len()
}

/// Parity-check membership test.
#[derive(Clone)]
pub struct Checker {
    ctx: Arc<FieldCtx>,
    n: usize,
    checks: Vec<Vec<Elem>>,
}

impl Checker {
    pub fn contains(&self, word: &[Elem]) -> bool {
        word.len() == self.n
            && self.checks.iter().all(|h| {
                h.iter()
                    .zip(word)
                    .fold(Elem::ZERO, |acc, (&a, &b)| acc + self.ctx.mul(a, b))
                    .is_zero()
            })
    }

    /// The syndrome H * word.
    pub fn syndrome(&self, word: &[Elem]) -> Vec<Elem> {
        self.checks
            .iter()
            .map(|h| {
                h.iter()
                    .zip(word)
                    .fold(Elem::ZERO, |acc, (&a, &b)| acc + self.ctx.mul(a, b))
            })
            .collect()
    }
}

/// Packs words over F_{2^d} into u64 lanes using the subfield digit encoding,
/// so vector addition is XOR and weight is a masked popcount.
#[derive(Clone, Debug)]
pub(crate) struct Packer {
    d: u32,
    per_word: usize,
    words: usize,
    mask: u64,
}

impl Packer {
    pub(crate) fn new(n: usize, d: u32) -> Packer {
        let per_word = (64 / d) as usize;
        let words = n.div_ceil(per_word).max(1);
        let mask = (0..per_word).fold(0u64, |m, i| m | 1u64 << (i as u32 * d));
        Packer {
            d,
            per_word,
            words,
            mask,
        }
    }

    pub(crate) fn pack(&self, sub: &Subfield, word: &[Elem]) -> Vec<u64> {
        let mut out = vec![0u64; self.words];
        for (i, &x) in word.iter().enumerate() {
            let digit = sub.digit(x).expect("symbol in subfield") as u64;
            out[i / self.per_word] |= digit << ((i % self.per_word) as u32 * self.d);
        }
        out
    }

    #[inline]
    pub(crate) fn weight(&self, w: &[u64]) -> u32 {
        w.iter()
            .map(|&x| {
                let mut y = x;
                for s in 1..self.d {
                    y |= x >> s;
                }
                (y & self.mask).count_ones()
            })
            .sum()
    }
}

/// Gray-code walk over the F_2-span of `basis`, split by prefix across workers.
fn gray_weight_counts(packer: &Packer, basis: &[Vec<u64>], n: usize) -> Vec<u64> {
    let bits = basis.len();
    let prefix_bits = bits.saturating_sub(10).min(8);
    let suffix_bits = bits - prefix_bits;
    let words = packer.words;
    (0..1usize << prefix_bits)
        .into_par_iter()
        .map(|prefix| {
            let mut counts = vec![0u64; n + 1];
            let mut cur = vec![0u64; words];
            for b in 0..prefix_bits {
                if prefix >> b & 1 == 1 {
                    xor_into(&mut cur, &basis[suffix_bits + b]);
                }
            }
            counts[packer.weight(&cur) as usize] += 1;
            for step in 1..1usize << suffix_bits {
                let flip = step.trailing_zeros() as usize;
                xor_into(&mut cur, &basis[flip]);
                counts[packer.weight(&cur) as usize] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

#[inline]
fn xor_into(a: &mut [u64], b: &[u64]) {
    a.iter_mut().zip(b).for_each(|(x, y)| *x ^= y);
}

/// Counts A_0 .. A_n.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    /// Builds a distribution of a length-n code from (weight, count) pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, u64)]) -> WeightDistribution {
        let mut counts = vec![0; n + 1];
        for &(w, a) in pairs {
            counts[w] += a;
        }
        WeightDistribution { counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Nonzero entries as (weight, count).
    pub fn pairs(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(w, &a)| (w, a))
            .collect()
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&a| a as u128).sum()
    }

    pub fn minimum_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &a)| a > 0)
            .map(|(w, _)| w)
    }

    /// Multiplies every weight by `factor`, keeping frequencies.
    pub fn scale_weights(&self, factor: usize) -> WeightDistribution {
        let mut counts = vec![0; self.n() * factor + 1];
        for (w, a) in self.pairs() {
            counts[w * factor] = a;
        }
        WeightDistribution { counts }
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(w, a)| format!("<{w},{a}>"))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = BigInt::one();
        for j in 1..=i {
            t[i][j] = &t[i - 1][j - 1] + &t[i - 1][j];
        }
    }
    t
}

/// The dual distribution of an [n, k] code over an alphabet of size `q`,
/// via Krawtchouk polynomials.
pub fn macwilliams(
    w: &WeightDistribution,
    n: usize,
    k: usize,
    q: u64,
) -> Result<WeightDistribution> {
    let counts = macwilliams_exact(w, n, k, q)?
        .iter()
        .enumerate()
        .map(|(j, c)| c.to_u64().ok_or(Error::CountOverflow(j)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightDistribution { counts })
}

/// As [`macwilliams`] with unbounded counts.
pub fn macwilliams_exact(
    w: &WeightDistribution,
    n: usize,
    k: usize,
    q: u64,
) -> Result<Vec<BigUint>> {
    if w.n() != n {
        return Err(Error::ShapeMismatch(format!(
            "distribution of length {} for n = {n}",
            w.n()
        )));
    }
    let binom = binomials(n);
    let qm1 = BigInt::from(q - 1);
    let qm1_pows: Vec<BigInt> = (0..=n)
        .scan(BigInt::one(), |acc, _| {
            let v = acc.clone();
            *acc *= &qm1;
            Some(v)
        })
        .collect();
    let size = num_traits::pow(BigInt::from(q), k);
    let mut counts = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, a) in w.pairs() {
            let mut kr = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term = &binom[i][s] * &binom[n - i][j - s] * &qm1_pows[j - s];
                if s % 2 == 0 {
                    kr += term;
                } else {
                    kr -= term;
                }
            }
            acc += kr * BigInt::from(a);
        }
        let (quot, rem) = acc.div_rem(&size);
        if !rem.is_zero() {
            return Err(Error::NonIntegerResult(j));
        }
        counts.push(quot.to_biguint().ok_or(Error::NonIntegerResult(j))?);
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary(n: usize, rows: &[&str]) -> LinearCode {
        let ctx = FieldCtx::shared(1).unwrap();
        let f2 = ctx.subfield(1).unwrap();
        let rows = rows
            .iter()
            .map(|r| r.bytes().map(|b| Elem((b - b'0') as u16)).collect())
            .collect();
        LinearCode::new(ctx, f2, n, rows).unwrap()
    }

    #[test]
    fn identity_code_canonical() {
        let c = binary(3, &["001", "010", "100"]);
        let canon = c.canonical_form().unwrap();
        assert_eq!(
            canon.rows(),
            LinearCode::full(c.ctx().clone(), c.sub().clone(), 3).rows()
        );
    }

    #[test]
    fn row_operations_keep_canonical_form() {
        let a = binary(5, &["11010", "01101"]);
        let b = binary(5, &["10111", "01101"]);
        assert!(a.same_code(&b));
    }

    #[test]
    fn dependent_rows_rejected() {
        let ctx = FieldCtx::shared(1).unwrap();
        let f2 = ctx.subfield(1).unwrap();
        let one = Elem::ONE;
        let z = Elem::ZERO;
        let res = LinearCode::new(ctx, f2, 2, vec![vec![one, z], vec![one, z]]);
        assert_eq!(res.unwrap_err(), Error::RankDeficient { rank: 1, rows: 2 });
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let c = binary(4, &["1000", "0100", "0010", "0001"]);
        assert_eq!(c.dual().k(), 0);
        assert_eq!(
            c.dual().weight_distribution().unwrap().pairs(),
            vec![(0, 1)]
        );
    }

    #[test]
    fn hamming_7_4() {
        let c = binary(7, &["1000110", "0100101", "0010011", "0001111"]);
        let w = c.weight_distribution().unwrap();
        assert_eq!(w.pairs(), vec![(0, 1), (3, 7), (4, 7), (7, 1)]);
        let d = c.dual();
        for g in c.rows() {
            for h in d.rows() {
                let dot = g
                    .iter()
                    .zip(h)
                    .fold(Elem::ZERO, |a, (&x, &y)| a + c.ctx().mul(x, y));
                assert!(dot.is_zero());
            }
        }
        let dw = d.weight_distribution().unwrap();
        assert_eq!(dw.pairs(), vec![(0, 1), (4, 7)]);
        assert_eq!(macwilliams(&w, 7, 4, 2).unwrap(), dw);
        assert_eq!(c.minimum_distance().unwrap(), 3);
        assert!(!c.is_mds().unwrap());
    }

    #[test]
    fn repetition_is_mds() {
        let c = binary(3, &["111"]);
        assert!(c.is_mds().unwrap());
        assert!(c.contains(&[Elem::ONE; 3]));
        assert!(!c.contains(&[Elem::ONE, Elem::ZERO, Elem::ONE]));
    }

    #[test]
    fn macwilliams_rejects_inconsistent_input() {
        let w = WeightDistribution::from_pairs(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            macwilliams(&w, 3, 1, 2),
            Err(Error::NonIntegerResult(_))
        ));
    }

    #[test]
    fn zero_code_distribution() {
        let ctx = FieldCtx::shared(2).unwrap();
        let f4 = ctx.subfield(2).unwrap();
        let z = LinearCode::zero(ctx.clone(), f4.clone(), 6);
        assert_eq!(z.weight_distribution().unwrap().pairs(), vec![(0, 1)]);
        let full = LinearCode::full(ctx, f4, 6);
        let w = full.weight_distribution().unwrap();
        assert_eq!(
            macwilliams(&w, 6, 6, 4).unwrap(),
            z.weight_distribution().unwrap()
        );
    }

    #[test]
    fn guard_trips() {
        let ctx = FieldCtx::shared(4).unwrap();
        let f16 = ctx.subfield(4).unwrap();
        let full = LinearCode::full(ctx, f16, 7);
        assert!(matches!(
            full.weight_distribution(),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn packer_weights_odd_digit_width() {
        let ctx = FieldCtx::shared(6).unwrap();
        let f8 = ctx.subfield(3).unwrap();
        let word: Vec<Elem> = (0..50).map(|i| f8.elements()[i % 8]).collect();
        let p = Packer::new(50, 3);
        let expect = word.iter().filter(|e| !e.is_zero()).count() as u32;
        assert_eq!(p.weight(&p.pack(&f8, &word)), expect);
    }
}

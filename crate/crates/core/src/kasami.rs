//! Constructors for the MDS code M_q^⊥, the concatenated Kasami-type duals
//! K_q^p⊥ and the coordinate reindexing that makes the latter cyclic.

use std::sync::Arc;

use crate::concat::SimplexParams;
use crate::cyclic::{self, CyclicSpec};
use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx, Subfield};
use crate::linear::{LinearCode, WeightDistribution};
use crate::poly::Poly;

/// Parameters p = 2^a, q = p^m and the ambient field F_{q^2}.
#[derive(Clone, Debug)]
pub struct KasamiConfig {
    ctx: Arc<FieldCtx>,
    p_deg: u32,
    q_deg: u32,
    fq: Subfield,
    zeta: Elem,
    theta: Elem,
}

fn log2_exact(x: u64, what: &str) -> Result<u32> {
    if x < 2 || !x.is_power_of_two() {
        return Err(Error::InvalidParameters(format!(
            "{what} = {x} is not a power of 2 greater than 1"
        )));
    }
    Ok(x.trailing_zeros())
}

impl KasamiConfig {
    /// `q` and `p` are field sizes; q must be a power of p and q^2 at most 2^16.
    pub fn new(q: u64, p: u64) -> Result<KasamiConfig> {
        let q_deg = log2_exact(q, "q")?;
        let p_deg = log2_exact(p, "p")?;
        if q_deg % p_deg != 0 {
            return Err(Error::InvalidParameters(format!(
                "q = {q} is not a power of p = {p}"
            )));
        }
        if 2 * q_deg > 16 {
            return Err(Error::TooLarge(q as u128 * q as u128));
        }
        let ctx = Arc::new(FieldCtx::new(2 * q_deg, None)?);
        Self::with_field(ctx, p_deg, q_deg)
    }

    /// Same, over a caller-supplied F_{q^2} (any primitive modulus).
    pub fn with_field(ctx: Arc<FieldCtx>, p_deg: u32, q_deg: u32) -> Result<KasamiConfig> {
        if ctx.degree() != 2 * q_deg || p_deg == 0 || !q_deg.is_multiple_of(p_deg) {
            return Err(Error::InvalidParameters(format!(
                "degrees p={p_deg}, q={q_deg} do not fit a field of degree {}",
                ctx.degree()
            )));
        }
        let q = 1u32 << q_deg;
        let p = 1u32 << p_deg;
        let fq = ctx.subfield(q_deg)?;
        let zeta = ctx.alpha_pow((q - 1) as i64);
        let theta = ctx.alpha_pow(((q + 1) * (p - 1)) as i64);
        Ok(KasamiConfig {
            ctx,
            p_deg,
            q_deg,
            fq,
            zeta,
            theta,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn p(&self) -> u64 {
        1 << self.p_deg
    }

    pub fn q(&self) -> u64 {
        1 << self.q_deg
    }

    /// m with q = p^m.
    pub fn m(&self) -> u32 {
        self.q_deg / self.p_deg
    }

    pub fn p_degree(&self) -> u32 {
        self.p_deg
    }

    pub fn q_degree(&self) -> u32 {
        self.q_deg
    }

    pub fn outer_field(&self) -> &Subfield {
        &self.fq
    }

    /// zeta = alpha^{q-1}, of order q+1.
    pub fn zeta(&self) -> Elem {
        self.zeta
    }

    /// theta = alpha^{(q+1)(p-1)}, of order (q-1)/(p-1).
    pub fn theta(&self) -> Elem {
        self.theta
    }

    /// Inner length (q-1)/(p-1).
    pub fn inner_len(&self) -> usize {
        ((self.q() - 1) / (self.p() - 1)) as usize
    }

    /// Concatenated length (q^2-1)/(p-1).
    pub fn length(&self) -> usize {
        (self.q() as usize + 1) * self.inner_len()
    }

    pub fn simplex(&self) -> Result<SimplexParams> {
        SimplexParams::new(&self.ctx, self.p_deg, self.q_deg)
    }

    /// h(x) = (x-1)(x-zeta)(x-zeta^q), which lies in F_q[x].
    pub fn mds_check_poly(&self) -> Poly {
        let zq = self.ctx.frobenius(self.zeta, self.q_deg);
        Poly::from_roots(&self.ctx, &[Elem::ONE, self.zeta, zq])
    }

    /// M_q^⊥, the [q+1, 3, q-1]_q cyclic MDS code.
    pub fn build_mds(&self) -> Result<LinearCode> {
        cyclic::from_check_poly(
            &self.ctx,
            self.q() as usize + 1,
            &self.fq,
            &self.mds_check_poly(),
        )
    }

    /// Phi(gen(M_q^⊥)) over F_p, block coordinate order.
    pub fn build_kasami_dual(&self) -> Result<LinearCode> {
        self.simplex()?.phi_matrix(&self.build_mds()?)
    }

    /// Block index (j-1)L + (l-1) to array index t-1 of the cyclic position
    /// t with (p-1)t = l(q+1)(p-1) + j(q-1) mod q^2-1.
    pub fn cyclic_permutation(&self) -> Result<Vec<usize>> {
        let (p, q) = (self.p(), self.q());
        let big = q * q - 1;
        let len = self.inner_len();
        let n = self.length();
        let mut perm = vec![usize::MAX; n];
        let mut taken = vec![false; n];
        for j in 1..=q + 1 {
            for l in 1..=len as u64 {
                let e = (l * (q + 1) * (p - 1) + j * (q - 1)) % big;
                let block = (j as usize - 1) * len + (l as usize - 1);
                if e % (p - 1) != 0 {
                    return Err(Error::IndexCollision(block));
                }
                let t = (e / (p - 1)) as usize % n;
                // position t in 1..=n sits at index t-1; t = n is stored as 0 mod n
                let idx = (t + n - 1) % n;
                if taken[idx] {
                    return Err(Error::IndexCollision(idx + 1));
                }
                taken[idx] = true;
                perm[block] = idx;
            }
        }
        Ok(perm)
    }

    /// Moves a block-ordered concatenated code to cyclic order.
    pub fn crt_reindex(&self, code: &LinearCode) -> Result<LinearCode> {
        if code.n() != self.length() {
            return Err(Error::ShapeMismatch(format!(
                "length {} where {} was expected",
                code.n(),
                self.length()
            )));
        }
        Ok(code.permute(&self.cyclic_permutation()?))
    }

    /// K_q^p⊥ in cyclic order.
    pub fn build_kasami_dual_cyclic(&self) -> Result<LinearCode> {
        self.crt_reindex(&self.build_kasami_dual()?)
    }

    /// Orbit representatives (exponents of beta = alpha^{p-1}) of the
    /// nonzeros of the reindexed code: 1 and 2(q+1) mod n. For p = 2 the
    /// second one is in the orbit of q+1.
    pub fn cyclic_nonzero_exponents(&self) -> Vec<u32> {
        let n = self.length() as u64;
        vec![1, (2 * (self.q() + 1) % n) as u32]
    }

    pub fn trace_spec(&self, exponents: Vec<u32>) -> Result<CyclicSpec> {
        Ok(CyclicSpec {
            n: self.length(),
            sub: self.ctx.subfield(self.p_deg)?,
            nonzero_exponents: exponents,
        })
    }

    /// The trace-built cyclic code with [`Self::cyclic_nonzero_exponents`].
    pub fn trace_kasami_dual(&self) -> Result<LinearCode> {
        cyclic::from_nonzeros_trace(
            &self.ctx,
            &self.trace_spec(self.cyclic_nonzero_exponents())?,
        )
    }
}

/// Weight distribution of M_q^⊥: [<0,1>, <q-1,(q^3-q)/2>, <q,q^2-1>, <q+1,(q^3-2q^2+q)/2>].
pub fn expected_mds_weights(q: u64) -> WeightDistribution {
    let n = q as usize + 1;
    WeightDistribution::from_pairs(
        n,
        &[
            (0, 1),
            (n - 2, (q * q * q - q) / 2),
            (n - 1, q * q - 1),
            (n, (q * q * q - 2 * q * q + q) / 2),
        ],
    )
}

/// Weight distribution of K_q^p⊥: the MDS weights scaled by q/p.
pub fn expected_weights(q: u64, p: u64) -> WeightDistribution {
    let n = ((q * q - 1) / (p - 1)) as usize;
    let w = |x: u64| (x / p) as usize;
    WeightDistribution::from_pairs(
        n,
        &[
            (0, 1),
            (w(q * q - q), q * (q * q - 1) / 2),
            (w(q * q), q * q - 1),
            (w(q * q + q), (q * q * q - 2 * q * q + q) / 2),
        ],
    )
}

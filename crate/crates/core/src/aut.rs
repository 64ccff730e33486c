//! Monomial and semilinear transforms, the action of GΓL(2, q) on the
//! projective line {zeta^i} and its lift through the simplex concatenation.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::concat::SimplexParams;
use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx};
use crate::kasami::KasamiConfig;
use crate::linear::LinearCode;

/// Maps w to w' with w'[perm[i]] = diag[perm[i]] * w[i].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialTransform {
    perm: Vec<usize>,
    diag: Vec<Elem>,
}

impl MonomialTransform {
    pub fn new(perm: Vec<usize>, diag: Vec<Elem>) -> Result<MonomialTransform> {
        let n = perm.len();
        if diag.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} scalars for {n} coordinates",
                diag.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        if diag.iter().any(|d| d.is_zero()) {
            return Err(Error::InvalidParameters("zero diagonal entry".into()));
        }
        Ok(MonomialTransform { perm, diag })
    }

    pub fn identity(n: usize) -> MonomialTransform {
        MonomialTransform {
            perm: (0..n).collect(),
            diag: vec![Elem::ONE; n],
        }
    }

    /// i -> i+1 mod n.
    pub fn cyclic_shift(n: usize) -> MonomialTransform {
        MonomialTransform {
            perm: (0..n).map(|i| (i + 1) % n).collect(),
            diag: vec![Elem::ONE; n],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[Elem] {
        &self.diag
    }

    pub fn is_permutation(&self) -> bool {
        self.diag.iter().all(|&d| d == Elem::ONE)
    }

    pub fn apply(&self, ctx: &FieldCtx, w: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; w.len()];
        for (i, &x) in w.iter().enumerate() {
            let j = self.perm[i];
            out[j] = ctx.mul(self.diag[j], x);
        }
        out
    }
}

/// A monomial transform after the field automorphism z -> z^{2^frob}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemilinearTransform {
    pub mono: MonomialTransform,
    pub frob: u32,
}

impl SemilinearTransform {
    pub fn identity(n: usize) -> SemilinearTransform {
        MonomialTransform::identity(n).into()
    }

    /// The field automorphism exponent t = 2^frob.
    pub fn t(&self) -> u64 {
        1 << self.frob
    }

    pub fn apply(&self, ctx: &FieldCtx, w: &[Elem]) -> Vec<Elem> {
        let twisted: Vec<Elem> = w.iter().map(|&x| ctx.frobenius(x, self.frob)).collect();
        self.mono.apply(ctx, &twisted)
    }

    /// self after other; Frobenius exponents add modulo `field_degree`.
    pub fn compose(
        &self,
        ctx: &FieldCtx,
        other: &SemilinearTransform,
        field_degree: u32,
    ) -> SemilinearTransform {
        let n = self.mono.len();
        let mut perm = vec![0; n];
        let mut diag = vec![Elem::ZERO; n];
        for (slot, &mid) in perm.iter_mut().zip(&other.mono.perm) {
            let end = self.mono.perm[mid];
            *slot = end;
            diag[end] = ctx.mul(
                self.mono.diag[end],
                ctx.frobenius(other.mono.diag[mid], self.frob),
            );
        }
        SemilinearTransform {
            mono: MonomialTransform { perm, diag },
            frob: (self.frob + other.frob) % field_degree,
        }
    }

    /// Same permutation and automorphism, inverted scalars: preserves C^⊥
    /// whenever self preserves C.
    pub fn contragredient(&self, ctx: &FieldCtx) -> SemilinearTransform {
        let diag = self
            .mono
            .diag
            .iter()
            .map(|&d| ctx.inv(d).expect("nonzero"))
            .collect();
        SemilinearTransform {
            mono: MonomialTransform {
                perm: self.mono.perm.clone(),
                diag,
            },
            frob: self.frob,
        }
    }
}

impl From<MonomialTransform> for SemilinearTransform {
    fn from(mono: MonomialTransform) -> Self {
        SemilinearTransform { mono, frob: 0 }
    }
}

/// True iff T maps every generator row of C into C.
pub fn preserves(t: &SemilinearTransform, code: &LinearCode) -> Result<bool> {
    if t.mono.len() != code.n() {
        return Err(Error::ShapeMismatch(format!(
            "transform of length {} on a length-{} code",
            t.mono.len(),
            code.n()
        )));
    }
    let checker = code.checker();
    Ok(code
        .rows()
        .iter()
        .all(|r| checker.contains(&t.apply(code.ctx(), r))))
}

/// z -> (L z)^{2^s} on F_{q^2} = F_q + F_q alpha, with L(1) = a + b alpha and
/// L(alpha) = a' + b' alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaLElement {
    pub a: Elem,
    pub a2: Elem,
    pub b: Elem,
    pub b2: Elem,
    pub s: u32,
}

impl GammaLElement {
    pub fn identity() -> GammaLElement {
        GammaLElement {
            a: Elem::ONE,
            a2: Elem::ZERO,
            b: Elem::ZERO,
            b2: Elem::ONE,
            s: 0,
        }
    }

    pub fn scalar(l: Elem) -> GammaLElement {
        GammaLElement {
            a: l,
            a2: Elem::ZERO,
            b: Elem::ZERO,
            b2: l,
            s: 0,
        }
    }

    pub fn determinant(&self, ctx: &FieldCtx) -> Elem {
        ctx.mul(self.a, self.b2) + ctx.mul(self.a2, self.b)
    }

    pub fn apply(&self, cfg: &KasamiConfig, z: Elem) -> Result<Elem> {
        let ctx = cfg.ctx();
        let (g0, g1) = decompose(cfg, z)?;
        let x0 = ctx.mul(self.a, g0) + ctx.mul(self.a2, g1);
        let x1 = ctx.mul(self.b, g0) + ctx.mul(self.b2, g1);
        Ok(ctx.frobenius(x0 + ctx.mul(x1, ctx.alpha()), self.s))
    }

    /// self after other, recovered by evaluation on 1 and alpha.
    pub fn compose(&self, cfg: &KasamiConfig, other: &GammaLElement) -> Result<GammaLElement> {
        let ctx = cfg.ctx();
        let qd = cfg.q_degree();
        let s = (self.s + other.s) % qd;
        // undo the combined automorphism: x -> x^{2^{e - s}}
        let untwist = |z: Elem| ctx.frobenius(z, (ctx.degree() - s) % ctx.degree());
        let l1 = untwist(self.apply(cfg, other.apply(cfg, Elem::ONE)?)?);
        let la = untwist(self.apply(cfg, other.apply(cfg, ctx.alpha())?)?);
        let (a, b) = decompose(cfg, l1)?;
        let (a2, b2) = decompose(cfg, la)?;
        Ok(GammaLElement { a, a2, b, b2, s })
    }
}

/// All nonsingular elements with Frobenius exponent below `max_s`, in a
/// fixed order (s, a, a', b, b' ascending by bits).
pub fn enumerate_gamma_l(cfg: &KasamiConfig, max_s: u32) -> Vec<GammaLElement> {
    let ctx = cfg.ctx();
    let fq = cfg.outer_field().elements();
    let mut out = Vec::new();
    for s in 0..max_s {
        for &a in fq {
            for &a2 in fq {
                for &b in fq {
                    for &b2 in fq {
                        let g = GammaLElement { a, a2, b, b2, s };
                        if !g.determinant(ctx).is_zero() {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    out
}

/// (g0, g1) in F_q^2 with z = g0 + g1 alpha.
pub fn decompose(cfg: &KasamiConfig, z: Elem) -> Result<(Elem, Elem)> {
    let ctx = cfg.ctx();
    let qd = cfg.q_degree();
    let a = ctx.alpha();
    let denom = a + ctx.frobenius(a, qd);
    if denom.is_zero() {
        return Err(Error::BasisDegenerate);
    }
    let g1 = ctx.div(z + ctx.frobenius(z, qd), denom)?;
    let g0 = z + ctx.mul(g1, a);
    Ok((g0, g1))
}

/// Coordinates of zeta^i over the basis {1, alpha}.
pub fn zeta_coords(cfg: &KasamiConfig, i: i64) -> Result<(Elem, Elem)> {
    decompose(cfg, cfg.ctx().pow(cfg.zeta(), i)?)
}

/// Coordinate of M_q carrying zeta^i.
fn coord_of(i: u32, n: u32) -> usize {
    (i % n) as usize
}

/// The transform e_i -> d_i e_{j_i} of F_q^{q+1} where Psi(zeta^i) = d_i zeta^{j_i}.
/// It preserves M_q; its contragredient preserves M_q^⊥.
pub fn psi_of(cfg: &KasamiConfig, psi: &GammaLElement) -> Result<SemilinearTransform> {
    let ctx = cfg.ctx();
    let n = cfg.q() as u32 + 1;
    let mut perm = vec![0usize; n as usize];
    let mut diag = vec![Elem::ZERO; n as usize];
    let mut z = Elem::ONE;
    for i in 1..=n {
        z = ctx.mul(z, cfg.zeta());
        let (d, j) = ctx.factor_dzeta(psi.apply(cfg, z)?, cfg.outer_field(), cfg.zeta(), n)?;
        perm[coord_of(i, n)] = coord_of(j, n);
        diag[coord_of(j, n)] = d;
    }
    Ok(SemilinearTransform {
        mono: MonomialTransform::new(perm, diag)?,
        frob: psi.s,
    })
}

/// The monomial transform of F_p^{nL} with phi(T w) = lift(T)(phi(w)).
/// Requires t to be a power of p.
pub fn lift_to_concat(
    t: &SemilinearTransform,
    simplex: &SimplexParams,
) -> Result<MonomialTransform> {
    let ctx = simplex.ctx();
    let p_deg = simplex.inner_field().degree();
    let q_deg = simplex.outer_field().degree();
    let s = t.frob % q_deg;
    if !s.is_multiple_of(p_deg) {
        return Err(Error::NotPLinear(s));
    }
    let len = simplex.len();
    let n = t.mono.len();
    let mut perm = vec![0usize; n * len];
    let mut diag = vec![Elem::ZERO; n * len];
    for i in 0..n {
        let j = t.mono.perm[i];
        let d = t.mono.diag[j];
        let mut w = Elem::ONE;
        for l_out in 1..=len {
            w = ctx.mul(w, simplex.xi());
            // adjoint of z -> d z^t under Tr(zw): w -> (d w)^{1/t}
            let adj = ctx.frobenius(ctx.mul(d, w), (q_deg - s) % q_deg);
            let (b, l_in) =
                ctx.factor_dzeta(adj, simplex.inner_field(), simplex.xi(), len as u32)?;
            let src = i * len + (l_in as usize - 1);
            let dst = j * len + (l_out - 1);
            perm[src] = dst;
            diag[dst] = b;
        }
    }
    MonomialTransform::new(perm, diag)
}

/// Search depth for [`brute_force_aut`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutLevel {
    Monomial,
    Semilinear,
}

impl FromStr for AutLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(AutLevel::Monomial),
            "semilinear" => Ok(AutLevel::Semilinear),
            _ => Err(Error::InvalidParameters(format!("unknown level {s}"))),
        }
    }
}

impl fmt::Display for AutLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AutLevel::Monomial => "monomial",
            AutLevel::Semilinear => "semilinear",
        })
    }
}

/// Largest search space [`brute_force_aut`] accepts.
pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Exact number of monomial (or semilinear) transforms preserving C.
pub fn brute_force_aut(code: &LinearCode, level: AutLevel) -> Result<u64> {
    let n = code.n();
    let units = code.alphabet() as u128 - 1;
    let frobs = match level {
        AutLevel::Monomial => 1,
        AutLevel::Semilinear => code.sub().degree(),
    };
    let space = (1..=n as u128)
        .product::<u128>()
        .saturating_mul(units.saturating_pow(n as u32))
        .saturating_mul(frobs as u128);
    if space > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(space));
    }
    let ctx = code.ctx();
    let checker = code.checker();
    let nonzero: Vec<Elem> = code.sub().nonzero().collect();
    let count = permutations(n)
        .par_iter()
        .map(|perm| {
            let mut found = 0u64;
            for s in 0..frobs {
                // rows moved by the permutation and twisted, before scaling
                let moved: Vec<Vec<Elem>> = code
                    .rows()
                    .iter()
                    .map(|r| {
                        let mut out = vec![Elem::ZERO; n];
                        for (i, &x) in r.iter().enumerate() {
                            out[perm[i]] = ctx.frobenius(x, s);
                        }
                        out
                    })
                    .collect();
                let mut digits = vec![0usize; n];
                loop {
                    let ok = moved.iter().all(|r| {
                        let scaled: Vec<Elem> = r
                            .iter()
                            .zip(&digits)
                            .map(|(&x, &d)| ctx.mul(nonzero[d], x))
                            .collect();
                        checker.contains(&scaled)
                    });
                    found += ok as u64;
                    let Some(pos) = digits.iter().position(|&d| d + 1 < nonzero.len()) else {
                        break;
                    };
                    digits[pos] += 1;
                    digits[..pos].iter_mut().for_each(|d| *d = 0);
                }
            }
            found
        })
        .sum();
    Ok(count)
}

/// (|GL(2,q)|, |GΓL(2,q)|) = ((q^2-1)(q^2-q), log2(q) (q^2-1)(q^2-q)).
pub fn expected_group_orders(q: u64) -> (u64, u64) {
    let gl = (q * q - 1) * (q * q - q);
    (gl, q.trailing_zeros() as u64 * gl)
}

/// Result of running every GΓL(2, q) (or GL(2, q)) element through [`psi_of`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AutCertificate {
    pub q: u64,
    pub level: AutLevel,
    /// Elements enumerated.
    pub elements: u64,
    /// Elements whose psi preserves M_q and whose contragredient preserves M_q^⊥.
    pub preserving: u64,
    /// Distinct transforms obtained.
    pub distinct: u64,
    /// Exact automorphism-group order of M_q^⊥ when brute force is feasible.
    pub exact_order: Option<u64>,
    /// Elements whose Frobenius part is F_p-linear, so that they lift.
    pub liftable: Option<u64>,
    /// Elements whose lifted contragredient preserves the concatenated code.
    pub lifted_preserving: Option<u64>,
    pub lines: Vec<String>,
}

impl AutCertificate {
    pub fn expected_order(&self) -> u64 {
        let (gl, ggl) = expected_group_orders(self.q);
        match self.level {
            AutLevel::Monomial => gl,
            AutLevel::Semilinear => ggl,
        }
    }

    pub fn passed(&self) -> bool {
        let e = self.expected_order();
        self.elements == e
            && self.preserving == e
            && self.distinct == e
            && self.exact_order.is_none_or(|o| o == e)
            && self.lifted_preserving == self.liftable
    }
}

impl fmt::Display for AutCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = match self.level {
            AutLevel::Monomial => "GL",
            AutLevel::Semilinear => "GΓL",
        };
        writeln!(f, "level: {}", self.level)?;
        match self.exact_order {
            Some(o) => writeln!(
                f,
                "certified order: {o} (exhaustive search on M_{}^⊥)",
                self.q
            )?,
            None => writeln!(
                f,
                "certified lower bound: {} ({group}(2,{}) embeds)",
                self.preserving, self.q
            )?,
        }
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

fn describe(t: &SemilinearTransform) -> String {
    let diag: Vec<String> = t.mono.diag.iter().map(Elem::to_string).collect();
    format!(
        "perm {:?} diag [{}] t {}",
        t.mono.perm,
        diag.join(" "),
        t.t()
    )
}

/// Runs the whole group through [`psi_of`]; brute-forces the exact order
/// when that is within [`BRUTE_FORCE_LIMIT`]; lifts when `p` allows it.
pub fn certify(q: u64, p: Option<u64>, level: AutLevel) -> Result<AutCertificate> {
    let cfg = KasamiConfig::new(q, p.unwrap_or(q))?;
    let ctx = cfg.ctx();
    let mds_dual = cfg.build_mds()?;
    let mds = mds_dual.dual();
    let max_s = match level {
        AutLevel::Monomial => 1,
        AutLevel::Semilinear => cfg.q_degree(),
    };
    let group = enumerate_gamma_l(&cfg, max_s);
    let lift_ctx = match p {
        Some(p) if p < q => {
            let simplex = cfg.simplex()?;
            let k = simplex.phi_matrix(&mds_dual)?;
            Some((simplex, k))
        }
        _ => None,
    };
    let per: Vec<(bool, Option<Option<bool>>, SemilinearTransform)> = group
        .par_iter()
        .map(|g| -> Result<_> {
            let t = psi_of(&cfg, g)?;
            let dual_t = t.contragredient(ctx);
            let ok = preserves(&t, &mds)? && preserves(&dual_t, &mds_dual)?;
            let lifted = match &lift_ctx {
                Some((simplex, k)) => match lift_to_concat(&dual_t, simplex) {
                    Ok(l) => Some(Some(preserves(&l.into(), k)?)),
                    Err(Error::NotPLinear(_)) => Some(None),
                    Err(e) => return Err(e),
                },
                None => None,
            };
            Ok((ok, lifted, t))
        })
        .collect::<Result<_>>()?;
    let preserving = per.iter().filter(|x| x.0).count() as u64;
    let liftable = lift_ctx
        .as_ref()
        .map(|_| per.iter().filter(|x| matches!(x.1, Some(Some(_)))).count() as u64);
    let lifted_preserving = lift_ctx
        .as_ref()
        .map(|_| per.iter().filter(|x| x.1 == Some(Some(true))).count() as u64);
    let distinct = per.iter().map(|x| &x.2).collect::<HashSet<_>>().len() as u64;
    let exact_order = match brute_force_aut(&mds_dual, level) {
        Ok(o) => Some(o),
        Err(Error::TooLarge(_)) => None,
        Err(e) => return Err(e),
    };
    let mut lines = vec![format!(
        "{} of {} elements give transforms preserving M_{q} and M_{q}^⊥; {} distinct",
        preserving,
        group.len(),
        distinct
    )];
    if let (Some(l), Some(n)) = (lifted_preserving, liftable) {
        lines.push(format!(
            "{l} of {n} F_p-linear elements lift to transforms preserving the concatenated code"
        ));
    }
    let gamma = cfg.outer_field().generator();
    let mut generators = vec![
        (
            "diag(g, 1)",
            GammaLElement {
                a: gamma,
                ..GammaLElement::identity()
            },
        ),
        (
            "[[1, 1], [0, 1]]",
            GammaLElement {
                a2: Elem::ONE,
                ..GammaLElement::identity()
            },
        ),
        (
            "[[0, 1], [1, 0]]",
            GammaLElement {
                a: Elem::ZERO,
                a2: Elem::ONE,
                b: Elem::ONE,
                b2: Elem::ZERO,
                s: 0,
            },
        ),
    ];
    if max_s > 1 {
        generators.push((
            "frobenius",
            GammaLElement {
                s: 1,
                ..GammaLElement::identity()
            },
        ));
    }
    for (name, g) in generators {
        let t = psi_of(&cfg, &g)?;
        lines.push(format!(
            "generator {name}: {} preserves: {}",
            describe(&t),
            preserves(&t, &mds)?
        ));
    }
    Ok(AutCertificate {
        q,
        level,
        elements: group.len() as u64,
        preserving,
        distinct,
        exact_order,
        liftable,
        lifted_preserving,
        lines,
    })
}

//! Cyclic codes from a check polynomial or from a trace representation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx, Subfield};
use crate::linear::{rref, LinearCode};
use crate::poly::Poly;

/// The cyclic code of length n over `sub` with check polynomial `h`, i.e. the
/// code generated by (x^n - 1)/h.
pub fn from_check_poly(
    ctx: &Arc<FieldCtx>,
    n: usize,
    sub: &Subfield,
    h: &Poly,
) -> Result<LinearCode> {
    if let Some((pos, &c)) = h
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, &c)| !sub.contains(c))
    {
        return Err(Error::AlphabetMismatch { pos, elem: c.0 });
    }
    if h.is_zero() {
        return Err(Error::NotDivisor(n));
    }
    let (g, rem) = Poly::x_n_minus_one(n).div_rem(ctx, h);
    if !rem.is_zero() {
        return Err(Error::NotDivisor(n));
    }
    let k = h.degree().unwrap_or(0);
    let g = g.to_vec(n);
    let rows = (0..k)
        .map(|shift| {
            let mut row = vec![Elem::ZERO; n];
            for (i, &c) in g.iter().enumerate() {
                if !c.is_zero() {
                    row[(i + shift) % n] = c;
                }
            }
            row
        })
        .collect();
    LinearCode::new(ctx.clone(), sub.clone(), n, rows)
}

/// A cyclic code described by representatives of its nonzero Frobenius
/// orbits, as exponents of the fixed order-n root beta = alpha^{(2^e-1)/n}.
#[derive(Clone, Debug)]
pub struct CyclicSpec {
    pub n: usize,
    pub sub: Subfield,
    pub nonzero_exponents: Vec<u32>,
}

/// The orbit of s under multiplication by |sub| modulo n.
pub fn frobenius_orbit(s: u32, q: u64, n: usize) -> Vec<u32> {
    let n = n as u64;
    let start = s as u64 % n;
    let mut orbit = vec![start as u32];
    let mut x = start * q % n;
    while x != start {
        orbit.push(x as u32);
        x = x * q % n;
    }
    orbit
}

/// The code {(sum_i Tr(a_i beta^{s_i j}))_{j=1..n}}; coordinate j sits at
/// index j-1.
pub fn from_nonzeros_trace(ctx: &Arc<FieldCtx>, spec: &CyclicSpec) -> Result<LinearCode> {
    let n = spec.n;
    let beta = ctx.unity_root(n as u32)?;
    let q = spec.sub.size() as u64;
    let mut seen: Vec<(u32, u32)> = Vec::new();
    let mut rows = Vec::new();
    for &s in &spec.nonzero_exponents {
        let s = s % n as u32;
        let orbit = frobenius_orbit(s, q, n);
        if let Some(&(_, rep)) = seen.iter().find(|(e, _)| orbit.contains(e)) {
            return Err(Error::DegenerateOrbit(rep, s));
        }
        seen.extend(orbit.iter().map(|&e| (e, s)));
        let sup = ctx.subfield(spec.sub.degree() * orbit.len() as u32)?;
        let root = ctx.pow(beta, s as i64)?;
        let w = sup.generator();
        let mut b = Elem::ONE;
        for _ in 0..orbit.len() {
            let mut point = root;
            let mut row = Vec::with_capacity(n);
            for _ in 1..=n {
                row.push(ctx.trace_unchecked(ctx.mul(b, point), spec.sub.degree(), sup.degree()));
                point = ctx.mul(point, root);
            }
            rows.push(row);
            b = ctx.mul(b, w);
        }
    }
    LinearCode::new(ctx.clone(), spec.sub.clone(), n, rows)
}

fn shift(word: &[Elem]) -> Vec<Elem> {
    let n = word.len();
    let mut out = vec![Elem::ZERO; n];
    for (i, &x) in word.iter().enumerate() {
        out[(i + 1) % n] = x;
    }
    out
}

/// True iff the cyclic shift of every generator row lies in the code.
pub fn is_shift_invariant(code: &LinearCode) -> bool {
    let checker = code.checker();
    code.rows().iter().all(|r| checker.contains(&shift(r)))
}

/// The monic generator polynomial of a cyclic code (degree n - k).
pub fn generator_poly(code: &LinearCode) -> Result<Poly> {
    if !is_shift_invariant(code) {
        return Err(Error::NotCyclic);
    }
    let (n, k) = (code.n(), code.k());
    if k == 0 {
        return Ok(Poly::x_n_minus_one(n));
    }
    // the last k coordinates form an information set; reduce with them first
    let mut rows: Vec<Vec<Elem>> = code
        .rows()
        .iter()
        .map(|r| r.iter().rev().copied().collect())
        .collect();
    let pivots = rref(code.ctx(), &mut rows);
    if pivots != (0..k).collect::<Vec<_>>() {
        return Err(Error::NotCyclic);
    }
    let mut g: Vec<Elem> = rows[k - 1].clone();
    g.reverse();
    let g = Poly::new(g);
    let (_, rem) = Poly::x_n_minus_one(n).div_rem(code.ctx(), &g);
    if g.degree() != Some(n - k) || !rem.is_zero() {
        return Err(Error::NotCyclic);
    }
    Ok(g)
}

/// Check polynomial whose roots are beta^{-s} for every s in the given
/// orbits, i.e. the polynomial-side nonzeros of the matching trace code.
pub fn check_poly_for_trace(ctx: &FieldCtx, spec: &CyclicSpec) -> Result<Poly> {
    let beta = ctx.unity_root(spec.n as u32)?;
    let q = spec.sub.size() as u64;
    let mut h = Poly::one();
    for &s in &spec.nonzero_exponents {
        let root = ctx.pow(beta, -(s as i64))?;
        h = h.mul(ctx, &ctx.minimal_polynomial(root, &spec.sub));
        debug_assert_eq!(
            ctx.minimal_polynomial(root, &spec.sub).degree(),
            Some(frobenius_orbit(s, q, spec.n).len())
        );
    }
    Ok(h)
}

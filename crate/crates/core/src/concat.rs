//! The simplex inner code, the symbol encoder `phi` and the matrix-level
//! concatenation `Phi(M)`.
//!
//! With q = p^m, xi of order (q-1)/(p-1) and the linear functional fixed to
//! Tr_{q/p}, a symbol z of F_q encodes to (Tr(z xi^l))_{l=1..(q-1)/(p-1)}.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::gf2e::{Elem, FieldCtx, Subfield};
use crate::linear::LinearCode;

/// Inner-code data for a tower F_p < F_q inside the ambient field.
#[derive(Clone, Debug)]
pub struct SimplexParams {
    ctx: Arc<FieldCtx>,
    fp: Subfield,
    fq: Subfield,
    m: u32,
    len: usize,
    xi: Elem,
    basis: Vec<Elem>,
    coords: HashMap<Elem, Vec<Elem>>,
}

impl SimplexParams {
    /// `p_deg` and `q_deg` are the degrees over F_2 of F_p and F_q.
    pub fn new(ctx: &Arc<FieldCtx>, p_deg: u32, q_deg: u32) -> Result<SimplexParams> {
        if p_deg == 0 || !q_deg.is_multiple_of(p_deg) {
            return Err(Error::NotSubfield {
                sub: p_deg,
                ambient: q_deg,
            });
        }
        let fp = ctx.subfield(p_deg)?;
        let fq = ctx.subfield(q_deg)?;
        let m = q_deg / p_deg;
        let p_minus_one = (1u32 << p_deg) - 1;
        if m.gcd(&p_minus_one) != 1 {
            return Err(Error::CoprimalityViolated { m, p_minus_one });
        }
        let len = (((1u64 << q_deg) - 1) / p_minus_one as u64) as usize;
        let xi = ctx.unity_root(len as u32)?;
        let gamma = fq.generator();
        let basis: Vec<Elem> = (0..m as i64)
            .map(|s| ctx.pow(gamma, s).expect("nonzero"))
            .collect();
        let mut coords = HashMap::with_capacity(fq.size());
        let p = fp.size();
        for idx in 0..p.pow(m) {
            let mut rest = idx;
            let mut c = Vec::with_capacity(m as usize);
            let mut z = Elem::ZERO;
            for &b in &basis {
                let digit = fp.elements()[rest % p];
                rest /= p;
                z += ctx.mul(digit, b);
                c.push(digit);
            }
            coords.insert(z, c);
        }
        debug_assert_eq!(coords.len(), fq.size());
        Ok(SimplexParams {
            ctx: ctx.clone(),
            fp,
            fq,
            m,
            len,
            xi,
            basis,
            coords,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn inner_field(&self) -> &Subfield {
        &self.fp
    }

    pub fn outer_field(&self) -> &Subfield {
        &self.fq
    }

    /// m with q = p^m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Inner length (q-1)/(p-1).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn xi(&self) -> Elem {
        self.xi
    }

    /// Every nonzero inner codeword has this weight, q/p.
    pub fn one_weight(&self) -> usize {
        1 << (self.fq.degree() - self.fp.degree())
    }

    /// Polynomial basis 1, g, ..., g^{m-1} of F_q over F_p.
    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    /// Coordinates of z in [`Self::basis`].
    pub fn coords(&self, z: Elem) -> Result<&[Elem]> {
        self.coords
            .get(&z)
            .map(Vec::as_slice)
            .ok_or(Error::NotInSubfield {
                elem: z.0,
                degree: self.fq.degree(),
            })
    }

    /// Tr_{q/p}.
    pub fn trace(&self, z: Elem) -> Elem {
        self.ctx
            .trace_unchecked(z, self.fp.degree(), self.fq.degree())
    }

    /// phi(z) = (Tr(z xi^l))_{l=1..len}.
    pub fn encode_symbol(&self, z: Elem) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.len);
        let mut x = self.ctx.mul(z, self.xi);
        for _ in 0..self.len {
            out.push(self.trace(x));
            x = self.ctx.mul(x, self.xi);
        }
        out
    }

    /// Coordinatewise phi on a word over F_q.
    pub fn phi(&self, word: &[Elem]) -> Result<Vec<Elem>> {
        let mut out = Vec::with_capacity(word.len() * self.len);
        for (pos, &z) in word.iter().enumerate() {
            if !self.fq.contains(z) {
                return Err(Error::AlphabetMismatch { pos, elem: z.0 });
            }
            out.extend(self.encode_symbol(z));
        }
        Ok(out)
    }

    /// Phi(M): entry (i, j) of M becomes the column block (M_ij xi^l)_l,
    /// each element expanded into its m coordinates over F_p. Row (i, s) of
    /// the result is coordinate s of row i.
    pub fn phi_rows(&self, rows: &[Vec<Elem>]) -> Result<Vec<Vec<Elem>>> {
        let m = self.m as usize;
        let n = rows.first().map_or(0, |r| r.len());
        let mut out = vec![Vec::with_capacity(n * self.len); rows.len() * m];
        for (i, row) in rows.iter().enumerate() {
            for (pos, &x) in row.iter().enumerate() {
                if !self.fq.contains(x) {
                    return Err(Error::AlphabetMismatch { pos, elem: x.0 });
                }
                let mut y = self.ctx.mul(x, self.xi);
                for _ in 0..self.len {
                    let c = self.coords(y)?;
                    for s in 0..m {
                        out[i * m + s].push(c[s]);
                    }
                    y = self.ctx.mul(y, self.xi);
                }
            }
        }
        Ok(out)
    }

    /// Generator of phi(C) over F_p for a code C over F_q.
    pub fn phi_matrix(&self, code: &LinearCode) -> Result<LinearCode> {
        if code.sub() != &self.fq {
            return Err(Error::ShapeMismatch(format!(
                "outer code over {:?}, expected {:?}",
                code.sub(),
                self.fq
            )));
        }
        let rows = self.phi_rows(code.rows())?;
        LinearCode::new(self.ctx.clone(), self.fp.clone(), code.n() * self.len, rows)
    }

    /// The [(q-1)/(p-1), m, q/p]_p simplex code, i.e. Phi of the 1x1 matrix (1).
    pub fn simplex_code(&self) -> Result<LinearCode> {
        let rows = self.phi_rows(&[vec![Elem::ONE]])?;
        LinearCode::new(self.ctx.clone(), self.fp.clone(), self.len, rows)
    }
}

/// Hamming distance between two words.
pub fn hamming_distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(v: &[u16]) -> Vec<Elem> {
        v.iter().map(|&b| Elem(b)).collect()
    }

    #[test]
    fn binary_simplex_over_f4() {
        let ctx = FieldCtx::shared(2).unwrap();
        let s = SimplexParams::new(&ctx, 1, 2).unwrap();
        let w = ctx.alpha();
        assert_eq!(s.xi(), w);
        assert_eq!(s.encode_symbol(Elem::ONE), bits(&[1, 1, 0]));
        assert_eq!(s.encode_symbol(w), bits(&[1, 0, 1]));
        assert_eq!(s.encode_symbol(ctx.mul(w, w)), bits(&[0, 1, 1]));
        assert_eq!(s.phi(&[Elem::ONE, w]).unwrap(), bits(&[1, 1, 0, 1, 0, 1]));
        assert_eq!(s.phi(&[Elem::ZERO; 2]).unwrap(), vec![Elem::ZERO; 6]);
        let code = s.simplex_code().unwrap();
        assert_eq!((code.n(), code.k()), (3, 2));
        assert_eq!(code.minimum_distance().unwrap(), 2);
        assert!(code.is_mds().unwrap());
    }

    #[test]
    fn simplex_parameters() {
        let ctx = FieldCtx::shared(3).unwrap();
        let s = SimplexParams::new(&ctx, 1, 3).unwrap();
        let code = s.simplex_code().unwrap();
        assert_eq!((code.n(), code.k()), (7, 3));
        assert_eq!(
            code.weight_distribution().unwrap().pairs(),
            vec![(0, 1), (4, 7)]
        );
        assert!(!code.is_mds().unwrap());

        let ctx = FieldCtx::shared(8).unwrap();
        let s = SimplexParams::new(&ctx, 2, 4).unwrap();
        let code = s.simplex_code().unwrap();
        assert_eq!((code.n(), code.k(), code.alphabet()), (5, 2, 4));
        assert_eq!(
            code.weight_distribution().unwrap().pairs(),
            vec![(0, 1), (4, 15)]
        );
    }

    #[test]
    fn coprimality_enforced() {
        // p = 4, m = 3: gcd(3, 3) = 3
        let ctx = FieldCtx::shared(12).unwrap();
        assert_eq!(
            SimplexParams::new(&ctx, 2, 6).unwrap_err(),
            Error::CoprimalityViolated {
                m: 3,
                p_minus_one: 3
            }
        );
    }

    #[test]
    fn alphabet_mismatch() {
        let ctx = FieldCtx::shared(4).unwrap();
        let s = SimplexParams::new(&ctx, 1, 2).unwrap();
        let err = s.phi(&[Elem::ONE, ctx.alpha()]).unwrap_err();
        assert_eq!(
            err,
            Error::AlphabetMismatch {
                pos: 1,
                elem: ctx.alpha().0
            }
        );
    }

    #[test]
    fn one_weight_exhaustive() {
        for (e, p_deg, q_deg) in [
            (2, 1, 2),
            (3, 1, 3),
            (4, 1, 4),
            (4, 2, 4),
            (6, 1, 6),
            (6, 2, 6),
            (6, 3, 6),
            (8, 2, 8),
        ] {
            let ctx = FieldCtx::shared(e).unwrap();
            let Ok(s) = SimplexParams::new(&ctx, p_deg, q_deg) else {
                continue;
            };
            let fq = s.outer_field().clone();
            for z in fq.nonzero() {
                let w = s.encode_symbol(z);
                assert_eq!(w.iter().filter(|x| !x.is_zero()).count(), s.one_weight());
            }
        }
    }

    #[test]
    fn phi_of_unit_matrix_is_simplex_generator() {
        let ctx = FieldCtx::shared(4).unwrap();
        let s = SimplexParams::new(&ctx, 1, 2).unwrap();
        let unit = LinearCode::new(
            ctx.clone(),
            s.outer_field().clone(),
            1,
            vec![vec![Elem::ONE]],
        )
        .unwrap();
        let phi = s.phi_matrix(&unit).unwrap();
        assert_eq!(phi.rows(), s.simplex_code().unwrap().rows());
        assert_eq!((phi.k(), phi.n()), (2, 3));
    }
}

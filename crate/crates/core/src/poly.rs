//! Dense univariate polynomials over the ambient field.

use std::fmt;

use crate::gf2e::{Elem, FieldCtx};

/// Coefficients from the constant term upward; never carries trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly(Vec<Elem>);

/// Highest degree first, coefficients as element bit values: `x^2 + 6x + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let coeff = if c.bits() == 1 && i > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                match i {
                    0 => coeff,
                    1 => format!("{coeff}x"),
                    _ => format!("{coeff}x^{i}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Elem::ONE])
    }

    /// x^n - 1 (= x^n + 1 in characteristic 2).
    pub fn x_n_minus_one(n: usize) -> Poly {
        let mut c = vec![Elem::ZERO; n + 1];
        c[0] = Elem::ONE;
        c[n] += Elem::ONE;
        Poly::new(c)
    }

    /// The product of (x - r) over the given roots.
    pub fn from_roots(ctx: &FieldCtx, roots: &[Elem]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, &r| {
            acc.mul(ctx, &Poly::new(vec![r, Elem::ONE]))
        })
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.0.last() == Some(&Elem::ONE)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let c = (0..n)
            .map(|i| {
                self.0.get(i).copied().unwrap_or_default()
                    + other.0.get(i).copied().unwrap_or_default()
            })
            .collect();
        Poly::new(c)
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Elem::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                c[i + j] += ctx.mul(a, b);
            }
        }
        Poly::new(c)
    }

    pub fn scale(&self, ctx: &FieldCtx, s: Elem) -> Poly {
        Poly::new(self.0.iter().map(|&c| ctx.mul(c, s)).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, ctx: &FieldCtx, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = ctx.inv(divisor.0[dd]).expect("nonzero leading coefficient");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Poly::zero(), Poly::new(rem));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let f = ctx.mul(c, lead_inv);
            quot[i - dd] = f;
            for (j, &d) in divisor.0.iter().enumerate() {
                rem[i - dd + j] += ctx.mul(f, d);
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Elem) -> Elem {
        self.0
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| ctx.mul(acc, x) + c)
    }

    /// Coefficient vector zero-padded to length n.
    pub fn to_vec(&self, n: usize) -> Vec<Elem> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), Elem::ZERO);
        v
    }
}

//! Arithmetic in F_{2^e} with log/antilog tables, plus the subfield lattice.
//!
//! Every construction for a given (p, q) lives inside one ambient field; the
//! smaller fields are [`Subfield`] handles naming the Frobenius-stable subsets
//! of that ambient field rather than separate representations.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// A field element as its coordinate bitmask over the polynomial basis
/// {1, x, ..., x^{e-1}}.
#[derive(
    Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for Elem {
    type Output = Elem;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

impl Sub for Elem {
    type Output = Elem;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

impl AddAssign for Elem {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Elem) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Default primitive polynomial per extension degree, as coefficient bitmasks.
pub fn default_modulus(e: u32) -> Option<u32> {
    let m = match e {
        1 => 0x3,
        2 => 0x7,
        3 => 0xB,
        4 => 0x13,
        5 => 0x25,
        6 => 0x43,
        7 => 0x83,
        8 => 0x11D,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1053,
        13 => 0x201B,
        14 => 0x4443,
        15 => 0x8003,
        16 => 0x1100B,
        _ => return None,
    };
    Some(m)
}

fn poly2_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

fn poly2_rem(mut a: u32, b: u32) -> u32 {
    let db = poly2_degree(b);
    while poly2_degree(a) >= db {
        a ^= b << (poly2_degree(a) - db);
    }
    a
}

fn is_irreducible_f2(f: u32) -> bool {
    let d = poly2_degree(f);
    if d < 1 {
        return false;
    }
    // trial division by every polynomial of degree 1..=d/2
    (2u32..(1u32 << (d / 2 + 1))).all(|g| poly2_rem(f, g) != 0)
}

/// The ambient field F_{2^e}. Immutable after construction.
pub struct FieldCtx {
    degree: u32,
    modulus: u32,
    order: u32,
    exp: Vec<u16>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

const NO_LOG: u32 = u32::MAX;

impl FieldCtx {
    /// Builds F_{2^e} from a primitive modulus, or from the default table.
    pub fn new(e: u32, modulus: Option<u32>) -> Result<FieldCtx> {
        if !(1..=16).contains(&e) {
            return Err(Error::InvalidDegree(e));
        }
        let modulus = match modulus {
            Some(m) => m,
            None => default_modulus(e).expect("degree checked above"),
        };
        if poly2_degree(modulus) != e as i32 {
            return Err(Error::ModulusDegree { modulus, degree: e });
        }
        if !is_irreducible_f2(modulus) {
            return Err(Error::NotIrreducible(modulus));
        }
        let size = 1u32 << e;
        let order = size - 1;
        let mut exp = vec![0u16; 2 * order as usize];
        let mut log = vec![NO_LOG; size as usize];
        let mut x = 1u32;
        let mut root_order = 0;
        for i in 0..order {
            if i > 0 && x == 1 {
                root_order = i;
                break;
            }
            exp[i as usize] = x as u16;
            log[x as usize] = i;
            x <<= 1;
            if x & size != 0 {
                x ^= modulus;
            }
        }
        if root_order == 0 && x != 1 {
            return Err(Error::NotIrreducible(modulus));
        }
        if root_order != 0 {
            return Err(Error::NotPrimitive {
                modulus,
                order: root_order,
                expected: order,
            });
        }
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }
        Ok(FieldCtx {
            degree: e,
            modulus,
            order,
            exp,
            log,
        })
    }

    /// Convenience constructor returning a shareable handle.
    pub fn shared(e: u32) -> Result<Arc<FieldCtx>> {
        FieldCtx::new(e, None).map(Arc::new)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^e.
    pub fn size(&self) -> usize {
        1usize << self.degree
    }

    /// Order of the multiplicative group, 2^e - 1.
    pub fn group_order(&self) -> u32 {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size() as u32).map(|b| Elem(b as u16))
    }

    /// Discrete log to base alpha, `None` for zero.
    #[inline]
    pub fn log(&self, x: Elem) -> Option<u32> {
        let l = self.log[x.0 as usize];
        (l != NO_LOG).then_some(l)
    }

    /// alpha^i for any integer i.
    #[inline]
    pub fn alpha_pow(&self, i: i64) -> Elem {
        Elem(self.exp[i.rem_euclid(self.order as i64) as usize])
    }

    pub fn alpha(&self) -> Elem {
        self.alpha_pow(1)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        Elem(self.exp[s as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        match self.log(a) {
            None => Err(Error::DivisionByZero),
            Some(0) => Ok(Elem::ONE),
            Some(l) => Ok(Elem(self.exp[(self.order - l) as usize])),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// x^n with the exponent reduced mod 2^e - 1 for nonzero x; 0^0 = 1.
    pub fn pow(&self, x: Elem, n: i64) -> Result<Elem> {
        match self.log(x) {
            None if n == 0 => Ok(Elem::ONE),
            None if n > 0 => Ok(Elem::ZERO),
            None => Err(Error::DivisionByZero),
            Some(l) => {
                let e = (l as i128 * n as i128).rem_euclid(self.order as i128);
                Ok(Elem(self.exp[e as usize]))
            }
        }
    }

    /// The Frobenius power x^{2^s}.
    #[inline]
    pub fn frobenius(&self, x: Elem, s: u32) -> Elem {
        match self.log(x) {
            None => Elem::ZERO,
            Some(l) => {
                let e = ((l as u64) << (s % self.degree)) % self.order as u64;
                Elem(self.exp[e as usize])
            }
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, x: Elem) -> Result<u32> {
        let l = self.log(x).ok_or(Error::DivisionByZero)?;
        Ok(self.order / l.gcd(&self.order))
    }

    pub fn subfield(&self, d: u32) -> Result<Subfield> {
        Subfield::new(self, d)
    }

    /// The relative trace Tr_{2^{sup}/2^{sub}}(z) = sum of z^{Q^i}, Q = 2^{sub}.
    pub fn trace(&self, z: Elem, sub: &Subfield, sup: &Subfield) -> Result<Elem> {
        if !sup.degree.is_multiple_of(sub.degree) {
            return Err(Error::NotSubfield {
                sub: sub.degree,
                ambient: sup.degree,
            });
        }
        if !sup.contains(z) {
            return Err(Error::NotInSubfield {
                elem: z.0,
                degree: sup.degree,
            });
        }
        Ok(self.trace_unchecked(z, sub.degree, sup.degree))
    }

    #[inline]
    pub(crate) fn trace_unchecked(&self, z: Elem, sub_deg: u32, sup_deg: u32) -> Elem {
        let mut acc = Elem::ZERO;
        let mut i = 0;
        while i < sup_deg {
            acc += self.frobenius(z, i);
            i += sub_deg;
        }
        acc
    }

    /// alpha^{(2^e-1)/r}, an element of multiplicative order exactly r.
    pub fn unity_root(&self, r: u32) -> Result<Elem> {
        if r == 0 || !self.order.is_multiple_of(r) {
            return Err(Error::OrderUnavailable(r));
        }
        Ok(self.alpha_pow((self.order / r) as i64))
    }

    /// Writes nonzero x as d * zeta^l with d in `scalars` and l in 1..=period.
    pub fn factor_dzeta(
        &self,
        x: Elem,
        scalars: &Subfield,
        zeta: Elem,
        period: u32,
    ) -> Result<(Elem, u32)> {
        let lx = self.log(x).ok_or(Error::DivisionByZero)?;
        let lz = self
            .log(zeta)
            .ok_or_else(|| Error::NoFactorization("zeta is zero".into()))?;
        let s = (1u32 << scalars.degree) - 1;
        if s.gcd(&period) != 1 {
            return Err(Error::NoFactorization(format!(
                "scalar group order {s} and period {period} are not coprime"
            )));
        }
        if self.mult_order(zeta)? != period {
            return Err(Error::NoFactorization(format!(
                "zeta does not have order {period}"
            )));
        }
        let n = self.order as u64;
        let step = (self.order / s) as u64;
        for l in 1..=period {
            let dl = (lx as u64 + n * period as u64 - (l as u64 * lz as u64) % n) % n;
            if dl.is_multiple_of(step) {
                return Ok((Elem(self.exp[dl as usize]), l));
            }
        }
        Err(Error::NoFactorization(format!(
            "{x} is outside the scalar-times-zeta group"
        )))
    }

    /// The monic minimal polynomial of z over `sub`.
    pub fn minimal_polynomial(&self, z: Elem, sub: &Subfield) -> Poly {
        let mut conj = vec![z];
        let mut c = self.frobenius(z, sub.degree);
        while c != z {
            conj.push(c);
            c = self.frobenius(c, sub.degree);
        }
        conj.iter().fold(Poly::one(), |acc, &c| {
            acc.mul(self, &Poly::new(vec![c, Elem::ONE]))
        })
    }
}

/// The subfield F_{2^d} of the ambient field, with an F_2-additive digit
/// encoding used to pack vectors over the subfield into integers.
#[derive(Clone)]
pub struct Subfield {
    degree: u32,
    elements: Arc<[Elem]>,
    generator: Elem,
    to_digit: Arc<[u16]>,
    from_digit: Arc<[Elem]>,
}

impl fmt::Debug for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_2^{}", self.degree)
    }
}

impl PartialEq for Subfield {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.to_digit.len() == other.to_digit.len()
    }
}

impl Eq for Subfield {}

const NOT_MEMBER: u16 = u16::MAX;

impl Subfield {
    fn new(ctx: &FieldCtx, d: u32) -> Result<Subfield> {
        if d == 0 || !ctx.degree.is_multiple_of(d) {
            return Err(Error::NotSubfield {
                sub: d,
                ambient: ctx.degree,
            });
        }
        let sub_order = (1u32 << d) - 1;
        let generator = ctx.alpha_pow((ctx.order / sub_order) as i64);
        let mut basis = Vec::with_capacity(d as usize);
        let mut g = Elem::ONE;
        for _ in 0..d {
            basis.push(g);
            g = ctx.mul(g, generator);
        }
        let size = 1usize << d;
        let mut from_digit = vec![Elem::ZERO; size];
        let mut to_digit = vec![NOT_MEMBER; ctx.size()];
        for (digit, slot) in from_digit.iter_mut().enumerate() {
            let e = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| digit >> i & 1 == 1)
                .fold(Elem::ZERO, |acc, (_, &b)| acc + b);
            *slot = e;
            to_digit[e.0 as usize] = digit as u16;
        }
        let mut elements = from_digit.clone();
        elements.sort();
        Ok(Subfield {
            degree: d,
            elements: elements.into(),
            generator,
            to_digit: to_digit.into(),
            from_digit: from_digit.into(),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements, 2^d.
    pub fn size(&self) -> usize {
        1usize << self.degree
    }

    /// Elements sorted by their bits value.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements.iter().copied().filter(|e| !e.is_zero())
    }

    /// A primitive element of the subfield.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    #[inline]
    pub fn contains(&self, z: Elem) -> bool {
        self.to_digit
            .get(z.0 as usize)
            .is_some_and(|&d| d != NOT_MEMBER)
    }

    /// F_2-linear digit of a subfield element (coordinates in the basis
    /// 1, g, ..., g^{d-1} of the subfield generator g).
    #[inline]
    pub fn digit(&self, z: Elem) -> Option<u16> {
        let d = *self.to_digit.get(z.0 as usize)?;
        (d != NOT_MEMBER).then_some(d)
    }

    #[inline]
    pub fn from_digit(&self, digit: u16) -> Elem {
        self.from_digit[digit as usize]
    }
}

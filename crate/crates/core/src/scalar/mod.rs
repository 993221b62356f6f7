//! The coefficient field `ℚ(i)(params)`.
//!
//! A [`Scalar`] is a reduced quotient of two polynomials over the Gaussian
//! rationals in named parameters. The imaginary unit satisfies `i·i = -1`.
//! Purely numeric values take a separate fast path.

mod gauss;
mod mpoly;
mod rat;

use std::fmt;

pub use gauss::Gauss;
pub use mpoly::{MPoly, PMono};
pub use rat::Rat;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Const(Gauss),
    /// Non-constant polynomial.
    Poly(Box<MPoly>),
    /// Reduced fraction with a non-constant monic denominator.
    Frac(Box<(MPoly, MPoly)>),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Const(Gauss::zero())
    }

    pub fn one() -> Self {
        Scalar::Const(Gauss::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Const(Gauss::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Const(Gauss::from_rat(Rat::new(n, d)))
    }

    pub fn i() -> Self {
        Scalar::Const(Gauss::i())
    }

    pub fn param(name: &str) -> Self {
        Scalar::Poly(Box::new(MPoly::var(name)))
    }

    pub fn from_gauss(g: Gauss) -> Self {
        Scalar::Const(g)
    }

    pub fn from_poly(p: MPoly) -> Self {
        match p.const_value() {
            Some(c) => Scalar::Const(c),
            None => Scalar::Poly(Box::new(p)),
        }
    }

    /// Builds `num / den`, reducing and normalizing the denominator.
    pub fn from_fraction(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        if let Some(c) = den.const_value() {
            return Ok(Self::from_poly(num.scale(&c.inv())));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_const() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = den.leading().unwrap().1.clone();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.inv();
            (num.scale(&inv), den.scale(&inv))
        };
        if let Some(c) = den.const_value() {
            return Ok(Self::from_poly(num.scale(&c.inv())));
        }
        Ok(Scalar::Frac(Box::new((num, den))))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Const(g) if g.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Const(g) if g.is_one())
    }

    pub fn is_const(&self) -> bool {
        matches!(self, Scalar::Const(_))
    }

    pub fn as_const(&self) -> Option<&Gauss> {
        match self {
            Scalar::Const(g) => Some(g),
            _ => None,
        }
    }

    pub fn numer(&self) -> MPoly {
        match self {
            Scalar::Const(g) => MPoly::constant(g.clone()),
            Scalar::Poly(p) => (**p).clone(),
            Scalar::Frac(f) => f.0.clone(),
        }
    }

    pub fn denom(&self) -> MPoly {
        match self {
            Scalar::Frac(f) => f.1.clone(),
            _ => MPoly::one(),
        }
    }

    /// Parameter names occurring in the value.
    pub fn params(&self) -> Vec<String> {
        let mut v: Vec<String> = match self {
            Scalar::Const(_) => Vec::new(),
            Scalar::Poly(p) => p.vars().iter().map(|s| s.to_string()).collect(),
            Scalar::Frac(f) => {
                f.0.vars()
                    .iter()
                    .chain(f.1.vars().iter())
                    .map(|s| s.to_string())
                    .collect()
            }
        };
        v.sort();
        v.dedup();
        v
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Const(a), Scalar::Const(b)) => Scalar::Const(a.add(b)),
            (Scalar::Frac(_), _) | (_, Scalar::Frac(_)) => {
                let (a, b) = (self.numer(), self.denom());
                let (c, d) = (o.numer(), o.denom());
                if b == d {
                    return Self::from_fraction(a.add(&c), b).unwrap();
                }
                Self::from_fraction(a.mul(&d).add(&c.mul(&b)), b.mul(&d)).unwrap()
            }
            _ => Self::from_poly(self.numer().add(&o.numer())),
        }
    }

    pub fn add_assign(&mut self, o: &Scalar) {
        if let (Scalar::Const(a), Scalar::Const(b)) = (&mut *self, o) {
            *a = a.add(b);
            return;
        }
        *self = self.add(o);
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Const(a) => Scalar::Const(a.neg()),
            Scalar::Poly(p) => Scalar::Poly(Box::new(p.neg())),
            Scalar::Frac(f) => Scalar::Frac(Box::new((f.0.neg(), f.1.clone()))),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Const(a), Scalar::Const(b)) => Scalar::Const(a.mul(b)),
            (Scalar::Const(a), _) if a.is_zero() => Scalar::zero(),
            (_, Scalar::Const(b)) if b.is_zero() => Scalar::zero(),
            (Scalar::Const(a), Scalar::Poly(p)) | (Scalar::Poly(p), Scalar::Const(a)) => {
                Self::from_poly(p.scale(a))
            }
            (Scalar::Const(a), Scalar::Frac(f)) | (Scalar::Frac(f), Scalar::Const(a)) => {
                Scalar::Frac(Box::new((f.0.scale(a), f.1.clone())))
            }
            (Scalar::Poly(p), Scalar::Poly(q)) => Self::from_poly(p.mul(q)),
            _ => Self::from_fraction(self.numer().mul(&o.numer()), self.denom().mul(&o.denom()))
                .unwrap(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Const(a) if a.is_zero() => Err(Error::DivisionByZero),
            Scalar::Const(a) => Ok(Scalar::Const(a.inv())),
            _ => Self::from_fraction(self.denom(), self.numer()),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut r = Scalar::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Replaces a parameter by a value. Fails if a denominator vanishes.
    pub fn substitute(&self, name: &str, value: &Scalar) -> Result<Scalar> {
        if self.is_const() {
            return Ok(self.clone());
        }
        // Substitute into a common-denominator form: p(v) = P(vn/vd) * vd^deg.
        let (vn, vd) = (value.numer(), value.denom());
        let sub = |p: &MPoly| -> (MPoly, u32) {
            let u = p.to_univariate(name);
            let deg = u.len().saturating_sub(1) as u32;
            let mut acc = MPoly::zero();
            for (k, c) in u.iter().enumerate() {
                acc = acc.add(&c.mul(&vn.pow(k as u32)).mul(&vd.pow(deg - k as u32)));
            }
            (acc, deg)
        };
        let (n, dn) = sub(&self.numer());
        let (d, dd) = sub(&self.denom());
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // n / vd^dn  divided by  d / vd^dd
        let (n, d) = if dn >= dd {
            (n, d.mul(&vd.pow(dn - dd)))
        } else {
            (n.mul(&vd.pow(dd - dn)), d)
        };
        Self::from_fraction(n, d)
    }

    /// Wraps the printed value in parentheses when it is not atomic.
    pub fn paren_string(&self) -> String {
        match self {
            Scalar::Const(g) if !g.is_compound() && !g.re.is_negative() && !g.im.is_negative() => {
                g.to_string()
            }
            Scalar::Poly(p) if p.terms.len() == 1 && !p.terms[0].1.is_compound() => {
                let s = p.to_string();
                if s.starts_with('-') {
                    format!("({s})")
                } else {
                    s
                }
            }
            _ => format!("({self})"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Const(g) => write!(f, "{g}"),
            Scalar::Poly(p) => write!(f, "{p}"),
            Scalar::Frac(fr) => {
                let wrap = |p: &MPoly| {
                    if p.terms.len() == 1 && !p.terms[0].1.is_compound() {
                        let s = p.to_string();
                        if s.starts_with('-') {
                            format!("({s})")
                        } else {
                            s
                        }
                    } else {
                        format!("({p})")
                    }
                };
                write!(f, "{}/{}", wrap(&fr.0), wrap(&fr.1))
            }
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

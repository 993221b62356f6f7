//! Univariate polynomials in `∂` over [`Scalar`]; the Euclidean ring behind
//! all submodule arithmetic.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    pub coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c ∂^k`
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn d() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::from_coeffs(v.iter().map(|&n| Scalar::int(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect();
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j].add_assign(&a.mul(b));
            }
        }
        Self::from_coeffs(v)
    }

    pub fn shift_degree(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Scalar::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: v }
    }

    /// Euclidean division: `self = q·o + r` with `deg r < deg o`.
    pub fn div_rem(&self, o: &UPoly) -> Result<(UPoly, UPoly)> {
        let Some(dn) = o.degree() else {
            return Err(Error::DivisionByZero);
        };
        let li = o.lead().unwrap().inv()?;
        let mut r = self.clone();
        let mut q = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dn).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dn {
                break;
            }
            let c = r.lead().unwrap().mul(&li);
            q[dr - dn] = c.clone();
            r = r.sub(&o.scale(&c).shift_degree(dr - dn));
        }
        Ok((Self::from_coeffs(q), r))
    }

    /// Exact quotient, if `o` divides `self`.
    pub fn div_exact(&self, o: &UPoly) -> Result<Option<UPoly>> {
        let (q, r) = self.div_rem(o)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            None => UPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Value at a scalar point.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `p(∂) ↦ p(∂ + c)`
    pub fn shift(&self, c: &Scalar) -> UPoly {
        let lin = UPoly::from_coeffs(vec![c.clone(), Scalar::one()]);
        let mut acc = UPoly::zero();
        for k in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&UPoly::constant(k.clone()));
        }
        acc
    }

    pub fn map_scalars(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<UPoly> {
        Ok(Self::from_coeffs(
            self.coeffs.iter().map(f).collect::<Result<_>>()?,
        ))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c.paren_string())?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", c.paren_string())?;
                    }
                    if k == 1 {
                        write!(f, "d")?;
                    } else {
                        write!(f, "d^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division() {
        // ∂² - 1 = (∂ - 1)(∂ + 1)
        let f = UPoly::from_ints(&[-1, 0, 1]);
        let g = UPoly::from_ints(&[1, 1]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            f.gcd(&UPoly::from_ints(&[-1, 1])),
            UPoly::from_ints(&[-1, 1])
        );
    }

    #[test]
    fn shift_is_taylor() {
        // (∂)^2 at ∂+1 = ∂^2 + 2∂ + 1
        let f = UPoly::from_ints(&[0, 0, 1]);
        assert_eq!(f.shift(&Scalar::one()), UPoly::from_ints(&[1, 2, 1]));
    }
}

//! Gaussian rationals `ℚ(i)`.

use std::fmt;

use super::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn zero() -> Self {
        Gauss {
            re: Rat::zero(),
            im: Rat::zero(),
        }
    }

    pub fn one() -> Self {
        Gauss {
            re: Rat::one(),
            im: Rat::zero(),
        }
    }

    pub fn i() -> Self {
        Gauss {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Gauss {
            re: r,
            im: Rat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::from_rat(self.re.add(&o.re));
        }
        Gauss {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Gauss) -> Gauss {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Gauss {
        Gauss {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::from_rat(self.re.mul(&o.re));
        }
        Gauss {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn conj(&self) -> Gauss {
        Gauss {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn inv(&self) -> Gauss {
        assert!(!self.is_zero(), "division by zero");
        if self.im.is_zero() {
            return Gauss::from_rat(self.re.inv());
        }
        let n = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let ni = n.inv();
        Gauss {
            re: self.re.mul(&ni),
            im: self.im.neg().mul(&ni),
        }
    }

    pub fn div(&self, o: &Gauss) -> Gauss {
        self.mul(&o.inv())
    }

    /// True when the printed form needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |f: &mut fmt::Formatter<'_>, im: &Rat| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else if *im == Rat::from_int(-1) {
                write!(f, "-i")
            } else {
                write!(f, "{im}*i")
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            im_part(f, &self.im)
        } else {
            write!(f, "({}", self.re)?;
            if self.im.is_negative() {
                write!(f, " - ")?;
                im_part(f, &self.im.neg())?;
            } else {
                write!(f, " + ")?;
                im_part(f, &self.im)?;
            }
            write!(f, ")")
        }
    }
}

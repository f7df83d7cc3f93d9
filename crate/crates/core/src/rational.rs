use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Poly;

/// An element of `F_q(t)` in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly, k: &Field) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num, den: Poly::one() });
        }
        let g = num.gcd(&den, k);
        let num = num.div_exact(&g, k)?;
        let den = den.div_exact(&g, k)?;
        let inv = k.inv(den.lc())?;
        Ok(RationalFunction {
            num: num.scale(inv, k),
            den: den.scale(inv, k),
        })
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: FieldElement) -> RationalFunction {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &RationalFunction, k: &Field) -> RationalFunction {
        RationalFunction::new(self.num.mul(&other.num, k), self.den.mul(&other.den, k), k)
            .expect("nonzero denominators")
    }

    pub fn inv(&self, k: &Field) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        RationalFunction::new(self.den.clone(), self.num.clone(), k)
    }

    pub fn div(&self, other: &RationalFunction, k: &Field) -> Result<RationalFunction> {
        Ok(self.mul(&other.inv(k)?, k))
    }

    pub fn add(&self, other: &RationalFunction, k: &Field) -> RationalFunction {
        let num = self.num.mul(&other.den, k).add(&other.num.mul(&self.den, k), k);
        RationalFunction::new(num, self.den.mul(&other.den, k), k).expect("nonzero denominators")
    }

    pub fn neg(&self, k: &Field) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(k),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RationalFunction, k: &Field) -> RationalFunction {
        self.add(&other.neg(k), k)
    }

    pub fn render(&self, var: &str, k: &Field) -> String {
        if self.den.is_one() {
            self.num.render(var, k)
        } else {
            format!("({})/({})", self.num.render(var, k), self.den.render(var, k))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_lowest_terms() {
        let k = Field::prime(5).unwrap();
        let p = |c: &[i64]| Poly::from_ints(&k, c);
        // (t^2 - 1) / (2t - 2) = (t + 1)/2 = 3t + 3
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2]), &k).unwrap();
        assert_eq!(r.num(), &p(&[3, 3]));
        assert!(r.den().is_one());
        assert!(RationalFunction::new(p(&[1]), Poly::zero(), &k).is_err());
        let s = r.sub(&r, &k);
        assert!(s.is_zero());
        let t = RationalFunction::from_poly(p(&[0, 1]));
        assert_eq!(t.mul(&t.inv(&k).unwrap(), &k), RationalFunction::from_poly(Poly::one()));
    }
}

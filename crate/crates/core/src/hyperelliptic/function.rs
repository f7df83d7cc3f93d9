//! Functions `(A + B·y)/D` on the curve, their valuations, residues,
//! divisors and the exact square test.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, Sign};
use crate::p1::inverse_mod;
use crate::parse::{parse_expr, Expr};
use crate::poly::{sqrt_mod, Poly};
use crate::sqrt::{tonelli_shanks, SqrtDomain};

use super::{add_to_divisor, divisor_degree, Curve, CurveDivisor, CurvePlace};

/// `(A + B·y)/D` with `D` monic and `gcd(A, B, D) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveFunction {
    a: Poly,
    b: Poly,
    d: Poly,
}

impl CurveFunction {
    pub fn new(a: Poly, b: Poly, d: Poly, k: &Field) -> Result<CurveFunction> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if a.is_zero() && b.is_zero() {
            return Ok(CurveFunction { a, b, d: Poly::one() });
        }
        let g = a.gcd(&b, k).gcd(&d, k);
        let (a, b, d) = if g.is_one() {
            (a, b, d)
        } else {
            (a.div_exact(&g, k)?, b.div_exact(&g, k)?, d.div_exact(&g, k)?)
        };
        let c = k.inv(d.lc())?;
        Ok(CurveFunction {
            a: a.scale(c, k),
            b: b.scale(c, k),
            d: d.scale(c, k),
        })
    }

    pub fn from_poly(a: Poly) -> CurveFunction {
        CurveFunction {
            a,
            b: Poly::zero(),
            d: Poly::one(),
        }
    }

    pub fn constant(c: FieldElement) -> CurveFunction {
        CurveFunction::from_poly(Poly::constant(c))
    }

    pub fn one() -> CurveFunction {
        CurveFunction::from_poly(Poly::one())
    }

    pub fn y() -> CurveFunction {
        CurveFunction {
            a: Poly::zero(),
            b: Poly::one(),
            d: Poly::one(),
        }
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn den(&self) -> &Poly {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.d.is_one()
    }

    pub fn add(&self, o: &CurveFunction, k: &Field) -> CurveFunction {
        let a = self.a.mul(&o.d, k).add(&o.a.mul(&self.d, k), k);
        let b = self.b.mul(&o.d, k).add(&o.b.mul(&self.d, k), k);
        CurveFunction::new(a, b, self.d.mul(&o.d, k), k).expect("nonzero denominator")
    }

    pub fn neg(&self, k: &Field) -> CurveFunction {
        CurveFunction {
            a: self.a.neg(k),
            b: self.b.neg(k),
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, o: &CurveFunction, k: &Field) -> CurveFunction {
        self.add(&o.neg(k), k)
    }

    pub fn mul(&self, o: &CurveFunction, c: &Curve) -> CurveFunction {
        let k = c.field();
        let a = self.a.mul(&o.a, k).add(&self.b.mul(&o.b, k).mul(c.f(), k), k);
        let b = self.a.mul(&o.b, k).add(&o.a.mul(&self.b, k), k);
        CurveFunction::new(a, b, self.d.mul(&o.d, k), k).expect("nonzero denominator")
    }

    /// `A² − B²f`, the norm of the numerator.
    pub fn norm_numerator(&self, c: &Curve) -> Poly {
        let k = c.field();
        self.a.square(k).sub(&self.b.square(k).mul(c.f(), k), k)
    }

    pub fn inv(&self, c: &Curve) -> Result<CurveFunction> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let k = c.field();
        let n = self.norm_numerator(c);
        CurveFunction::new(self.d.mul(&self.a, k), self.d.mul(&self.b, k).neg(k), n, k)
    }

    pub fn div(&self, o: &CurveFunction, c: &Curve) -> Result<CurveFunction> {
        Ok(self.mul(&o.inv(c)?, c))
    }

    pub fn pow(&self, e: u32, c: &Curve) -> CurveFunction {
        (0..e).fold(CurveFunction::one(), |acc, _| acc.mul(self, c))
    }

    pub fn render(&self, k: &Field) -> String {
        let bterm = if self.b.is_one() {
            "y".to_string()
        } else {
            let s = self.b.render("x", k);
            if s.contains('+') {
                format!("({s})*y")
            } else {
                format!("{s}*y")
            }
        };
        let num = match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => self.a.render("x", k),
            (true, false) => bterm,
            (false, false) => format!("{}+{bterm}", self.a.render("x", k)),
        };
        if self.d.is_one() {
            num
        } else {
            format!("({num})/({})", self.d.render("x", k))
        }
    }

    pub fn parse(s: &str, c: &Curve) -> Result<CurveFunction> {
        eval(&parse_expr(s, &["x", "y"], c.field())?, c)
    }
}

fn eval(e: &Expr, c: &Curve) -> Result<CurveFunction> {
    let k = c.field();
    Ok(match e {
        Expr::Const(v) => CurveFunction::constant(*v),
        Expr::Var(v) if v == "x" => CurveFunction::from_poly(Poly::x()),
        Expr::Var(v) if v == "y" => CurveFunction::y(),
        Expr::Var(v) => return Err(Error::InvalidInput(format!("unexpected variable {v}"))),
        Expr::Add(a, b) => eval(a, c)?.add(&eval(b, c)?, k),
        Expr::Sub(a, b) => eval(a, c)?.sub(&eval(b, c)?, k),
        Expr::Mul(a, b) => eval(a, c)?.mul(&eval(b, c)?, c),
        Expr::Div(a, b) => eval(a, c)?.div(&eval(b, c)?, c)?,
        Expr::Neg(a) => eval(a, c)?.neg(k),
        Expr::Pow(a, n) => eval(a, c)?.pow(*n, c),
    })
}

/// The residue of a unit at a place. At an inert place it is `a + b·y` in
/// `F_q[x]/(π)[y]/(y² − f)`; elsewhere `b = 0`. At `∞` the modulus is `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub modulus: Poly,
    pub a: Poly,
    pub b: Poly,
    pub inert: bool,
}

impl Residue {
    fn base(modulus: &Poly, a: Poly) -> Residue {
        Residue {
            modulus: modulus.clone(),
            a,
            b: Poly::zero(),
            inert: false,
        }
    }

    fn divide_by(&self, c: &Poly, k: &Field) -> Result<Residue> {
        let inv = inverse_mod(c, &self.modulus, k)?;
        Ok(Residue {
            modulus: self.modulus.clone(),
            a: self.a.mulmod(&inv, &self.modulus, k),
            b: self.b.mulmod(&inv, &self.modulus, k),
            inert: self.inert,
        })
    }

    /// The quadratic character of the residue field applied to the residue.
    pub fn character(&self, c: &Curve) -> Result<Sign> {
        let k = c.field();
        if self.inert {
            let n = self.a.square(k).sub(&self.b.square(k).mul(c.f(), k), k);
            n.character_mod(&self.modulus, k)
        } else {
            self.a.character_mod(&self.modulus, k)
        }
    }

    /// Whether the residue has a square root, found by Tonelli–Shanks.
    pub fn has_square_root(&self, c: &Curve) -> Result<bool> {
        let k = c.field();
        if !self.inert {
            return Ok(sqrt_mod(&self.a, &self.modulus, k)?.is_some());
        }
        let dom = QuadraticResidueField {
            k,
            pi: &self.modulus,
            fbar: c.f().rem(&self.modulus, k)?,
        };
        let z = (self.a.rem(&self.modulus, k)?, self.b.rem(&self.modulus, k)?);
        if z.0.is_zero() && z.1.is_zero() {
            return Err(Error::CharacterAtZero);
        }
        Ok(tonelli_shanks(&dom, &z).is_some())
    }
}

/// `F_q[x]/(π)[y]/(y² − f̄)` with `f̄` a non-square mod `π`.
struct QuadraticResidueField<'a> {
    k: &'a Field,
    pi: &'a Poly,
    fbar: Poly,
}

impl SqrtDomain for QuadraticResidueField<'_> {
    type Elem = (Poly, Poly);
    fn zero(&self) -> (Poly, Poly) {
        (Poly::zero(), Poly::zero())
    }
    fn one(&self) -> (Poly, Poly) {
        (Poly::one(), Poly::zero())
    }
    fn mul(&self, a: &(Poly, Poly), b: &(Poly, Poly)) -> (Poly, Poly) {
        let (k, pi) = (self.k, self.pi);
        let bb = a.1.mulmod(&b.1, pi, k).mulmod(&self.fbar, pi, k);
        let re = a.0.mulmod(&b.0, pi, k).add(&bb, k);
        let im = a.0.mulmod(&b.1, pi, k).add(&a.1.mulmod(&b.0, pi, k), k);
        (re, im)
    }
    fn order(&self) -> u128 {
        (self.k.q() as u128).pow(2 * self.pi.deg().unwrap() as u32)
    }
    fn nonresidue(&self) -> (Poly, Poly) {
        let (k, pi) = (self.k, self.pi);
        let d = pi.deg().unwrap();
        (0..(k.q() as u64).pow(d as u32))
            .map(|i| (Poly::from_index(k, d, i), Poly::one()))
            .find(|(a, b)| {
                let n = a.square(k).sub(&b.square(k).mul(&self.fbar, k), k);
                n.character_mod(pi, k) == Ok(Sign::Minus)
            })
            .expect("odd order field has non-squares")
    }
}

/// `(ord_π p, p / π^ord)`, with `u32::MAX` for `p = 0`.
fn strip(p: &Poly, pi: &Poly, k: &Field) -> (u32, Poly) {
    if p.is_zero() {
        (u32::MAX, Poly::zero())
    } else {
        p.valuation(pi, k)
    }
}

fn divide_power(p: &Poly, pi: &Poly, e: u32, k: &Field) -> Result<Poly> {
    if p.is_zero() {
        return Ok(Poly::zero());
    }
    p.div_exact(&pi.pow(e, k), k)
}

impl Curve {
    /// Valuation and residue of the nonzero polynomial function `A + B·y`.
    fn numerator_unit(&self, place: &CurvePlace, a: &Poly, b: &Poly) -> Result<(i64, Residue)> {
        let k = &self.k;
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroFunction);
        }
        match place {
            CurvePlace::Infinite => {
                let g = self.genus as i64;
                let oa = if a.is_zero() { i64::MAX } else { -2 * a.degree() };
                let ob = if b.is_zero() {
                    i64::MAX
                } else {
                    -2 * b.degree() - (2 * g + 1)
                };
                let x = Poly::x();
                Ok(if oa < ob {
                    (oa, Residue::base(&x, Poly::constant(a.lc())))
                } else {
                    (ob, Residue::base(&x, Poly::constant(b.lc())))
                })
            }
            CurvePlace::Ramified(pi) => {
                let f1 = self.f.div_exact(pi, k)?;
                let f1inv = inverse_mod(&f1, pi, k)?;
                let (va, a1) = strip(a, pi, k);
                let (vb, b1) = strip(b, pi, k);
                let (ord, unit, e) = if va <= vb {
                    (2 * va as i64, a1, va)
                } else {
                    (2 * vb as i64 + 1, b1, vb)
                };
                let r = unit.mulmod(&f1inv.powmod(e as u128, pi, k)?, pi, k);
                Ok((ord, Residue::base(pi, r)))
            }
            CurvePlace::Inert(pi) => {
                let e = strip(a, pi, k).0.min(strip(b, pi, k).0);
                let a1 = divide_power(a, pi, e, k)?.rem(pi, k)?;
                let b1 = divide_power(b, pi, e, k)?.rem(pi, k)?;
                Ok((
                    e as i64,
                    Residue {
                        modulus: pi.clone(),
                        a: a1,
                        b: b1,
                        inert: true,
                    },
                ))
            }
            CurvePlace::Split { pi, v } => {
                let e = strip(a, pi, k).0.min(strip(b, pi, k).0);
                let a1 = divide_power(a, pi, e, k)?;
                let b1 = divide_power(b, pi, e, k)?;
                let s = a1.add(&b1.mul(v, k), k).rem(pi, k)?;
                if !s.is_zero() {
                    return Ok((e as i64, Residue::base(pi, s)));
                }
                let n = a1.square(k).sub(&b1.square(k).mul(&self.f, k), k);
                let (vn, n1) = n.valuation(pi, k);
                let conj = a1.sub(&b1.mul(v, k), k);
                let r = n1.mulmod(&inverse_mod(&conj, pi, k)?, pi, k);
                Ok((e as i64 + vn as i64, Residue::base(pi, r)))
            }
        }
    }

    /// Valuation and unit-part residue of `h` at `place`, with a fixed
    /// uniformizer per place.
    pub fn residue(&self, place: &CurvePlace, h: &CurveFunction) -> Result<(i64, Residue)> {
        let (on, rn) = self.numerator_unit(place, &h.a, &h.b)?;
        if h.d.is_one() {
            return Ok((on, rn));
        }
        let (od, rd) = self.numerator_unit(place, &h.d, &Poly::zero())?;
        Ok((on - od, rn.divide_by(&rd.a, &self.k)?))
    }

    pub fn ord(&self, place: &CurvePlace, h: &CurveFunction) -> Result<i64> {
        Ok(self.residue(place, h)?.0)
    }

    /// `(h/P)`; defined when `ord_P h` is even.
    pub fn legendre(&self, h: &CurveFunction, place: &CurvePlace) -> Result<Sign> {
        let (o, r) = self.residue(place, h)?;
        if o % 2 != 0 {
            return Err(Error::OddValuation);
        }
        r.character(self)
    }

    /// The principal divisor of `h`; its degree is checked to be zero.
    pub fn function_divisor(&self, h: &CurveFunction) -> Result<CurveDivisor> {
        if h.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let k = &self.k;
        let mut primes = h.norm_numerator(self).irreducible_factors(k)?;
        primes.extend(h.d.irreducible_factors(k)?);
        primes.sort();
        primes.dedup();
        let mut div = CurveDivisor::new();
        for pi in &primes {
            for p in self.places_over(pi) {
                let o = self.ord(&p, h)?;
                add_to_divisor(&mut div, p, o);
            }
        }
        let o = self.ord(&CurvePlace::Infinite, h)?;
        add_to_divisor(&mut div, CurvePlace::Infinite, o);
        if divisor_degree(&div) != 0 {
            return Err(Error::Verification(format!(
                "divisor of {} has degree {}",
                h.render(k),
                divisor_degree(&div)
            )));
        }
        Ok(div)
    }

    /// Places where `ord h` is odd, in enumeration order.
    pub fn odd_support(&self, h: &CurveFunction) -> Result<Vec<CurvePlace>> {
        Ok(self
            .function_divisor(h)?
            .into_iter()
            .filter(|(_, c)| c % 2 != 0)
            .map(|(p, _)| p)
            .collect())
    }

    /// Exact test for `h ∈ K*²` by extracting `c + d·y` with
    /// `(c + d·y)² = (A + B·y)·D`.
    pub fn is_square(&self, h: &CurveFunction) -> bool {
        if h.is_zero() {
            return false;
        }
        let k = &self.k;
        let a = h.a.mul(&h.d, k);
        let b = h.b.mul(&h.d, k);
        if b.is_zero() {
            if a.sqrt(k).is_some() {
                return true;
            }
            return matches!(a.divmod(&self.f, k), Ok((q, r)) if r.is_zero() && q.sqrt(k).is_some());
        }
        let n = a.square(k).sub(&b.square(k).mul(&self.f, k), k);
        let Some(root) = n.sqrt(k) else {
            return false;
        };
        let half = k.inv(k.from_int(2)).expect("odd characteristic");
        for r in [root.clone(), root.neg(k)] {
            let t = a.add(&r, k).scale(half, k);
            if t.is_zero() {
                continue;
            }
            let Some(c) = t.sqrt(k) else {
                continue;
            };
            let Ok((d, rem)) = b.scale(half, k).divmod(&c, k) else {
                continue;
            };
            if rem.is_zero() && c.square(k).add(&d.square(k).mul(&self.f, k), k) == a {
                return true;
            }
        }
        false
    }

    /// A square-class representative of `h`: the polynomial function
    /// `(A + B·y)·D` with square factors of `gcd(A, B)` removed and the
    /// leading constant at `∞` scaled to `1` or the non-square `ζ`.
    pub fn class_representative(&self, h: &CurveFunction) -> Result<CurveFunction> {
        if h.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let k = &self.k;
        let mut a = h.a.mul(&h.d, k);
        let mut b = h.b.mul(&h.d, k);
        let g = a.gcd(&b, k);
        for (p, m) in g.squarefree_decomposition(k) {
            if m >= 2 {
                let s = p.pow(2 * (m / 2), k);
                a = divide_power(&a, &s, 1, k)?;
                b = divide_power(&b, &s, 1, k)?;
            }
        }
        let lead = {
            let (_, r) = self.numerator_unit(&CurvePlace::Infinite, &a, &b)?;
            r.a.coeff(0)
        };
        let target = match k.quadratic_character(lead)? {
            Sign::Plus => FieldElement::ONE,
            Sign::Minus => k.canonical_nonsquare(),
        };
        let s = k.div(target, lead)?;
        Ok(CurveFunction {
            a: a.scale(s, k),
            b: b.scale(s, k),
            d: Poly::one(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn curve() -> Curve {
        Curve::parse(Field::prime(5).unwrap(), "x^3 - x").unwrap()
    }

    fn quintic() -> Curve {
        Curve::parse(Field::prime(3).unwrap(), "x^5 - x").unwrap()
    }

    fn func(c: &Curve, s: &str) -> CurveFunction {
        CurveFunction::parse(s, c).unwrap()
    }

    #[test]
    fn arithmetic_and_parse() {
        let c = curve();
        let k = c.field().clone();
        let y2 = func(&c, "y^2");
        assert_eq!(y2, CurveFunction::from_poly(c.f().clone()));
        let h = func(&c, "(x + y)/(x^2 + 1)");
        let back = func(&c, &h.render(&k));
        assert_eq!(h, back);
        assert_eq!(h.mul(&h.inv(&c).unwrap(), &c), CurveFunction::one());
        assert!(CurveFunction::parse("z", &c).is_err());
    }

    #[test]
    fn valuations_of_coordinates() {
        let c = curve();
        let k = c.field().clone();
        let x = func(&c, "x");
        let y = func(&c, "y");
        let r0 = CurvePlace::Ramified(Poly::x());
        assert_eq!(c.ord(&r0, &x).unwrap(), 2);
        assert_eq!(c.ord(&r0, &y).unwrap(), 1);
        assert_eq!(c.ord(&CurvePlace::Infinite, &x).unwrap(), -2);
        assert_eq!(c.ord(&CurvePlace::Infinite, &y).unwrap(), -3);
        // y - 1 vanishes at (2, 1) but not at (2, 4)
        let pi = Poly::from_ints(&k, &[-2, 1]);
        let over = c.places_over(&pi);
        let h = func(&c, "y - 1");
        assert_eq!(c.ord(&over[0], &h).unwrap(), 1);
        assert_eq!(c.ord(&over[1], &h).unwrap(), 0);
        let div = c.function_divisor(&y).unwrap();
        assert_eq!(div.len(), 4);
        assert_eq!(div[&CurvePlace::Infinite], -3);
    }

    #[test]
    fn square_test_examples() {
        let c = curve();
        assert!(c.is_square(&func(&c, "(x + y)^2")));
        assert!(c.is_square(&func(&c, "4*(x^2 + 2 x y + 3)^2/(x+1)^4")));
        assert!(c.is_square(&func(&c, "x^3 - x")));
        assert!(!c.is_square(&func(&c, "x")));
        assert!(!c.is_square(&func(&c, "y")));
        assert!(!c.is_square(&func(&c, "2")));
        assert!(c.is_square(&func(&c, "4")));
        assert!(!c.is_square(&func(&c, "(x+y)^2*y")));
    }

    #[test]
    fn residue_square_paths_agree() {
        for c in [curve(), quintic()] {
            let hs = ["x + y", "x^2 + y + 1", "2x y + x^3 + 2", "y - x", "(y + 1)/(x + 1)"];
            for p in c.places_up_to(4) {
                for s in hs {
                    let h = func(&c, s);
                    let (o, r) = c.residue(&p, &h).unwrap();
                    let _ = o;
                    assert_eq!(
                        r.character(&c).unwrap() == Sign::Plus,
                        r.has_square_root(&c).unwrap(),
                        "{s} at {}",
                        p.render(c.field())
                    );
                }
            }
        }
    }

    fn make(c: &Curve, a: &[i64], b: &[i64], d: &[i64]) -> Option<CurveFunction> {
        let k = c.field();
        let mut dd = d.to_vec();
        dd.push(1);
        let h = CurveFunction::new(Poly::from_ints(k, a), Poly::from_ints(k, b), Poly::from_ints(k, &dd), k).ok()?;
        (!h.is_zero()).then_some(h)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn divisors_are_additive(a1 in proptest::collection::vec(0i64..3, 0..4),
                                 b1 in proptest::collection::vec(0i64..3, 0..3),
                                 d1 in proptest::collection::vec(0i64..3, 0..3),
                                 a2 in proptest::collection::vec(0i64..3, 0..4),
                                 b2 in proptest::collection::vec(0i64..3, 0..3)) {
            let c = quintic();
            let (Some(g), Some(h)) = (make(&c, &a1, &b1, &d1), make(&c, &a2, &b2, &[])) else {
                return Ok(());
            };
            let mut sum = c.function_divisor(&g).unwrap();
            for (p, e) in c.function_divisor(&h).unwrap() {
                add_to_divisor(&mut sum, p, e);
            }
            prop_assert_eq!(c.function_divisor(&g.mul(&h, &c)).unwrap(), sum);
        }

        #[test]
        fn legendre_is_multiplicative(a in proptest::collection::vec(0i64..5, 1..4),
                                      b in proptest::collection::vec(0i64..5, 0..3),
                                      e in proptest::collection::vec(0i64..5, 1..4)) {
            let c = curve();
            let k = c.field().clone();
            let g = CurveFunction::new(Poly::from_ints(&k, &a), Poly::from_ints(&k, &b), Poly::one(), &k).unwrap();
            let h = CurveFunction::from_poly(Poly::from_ints(&k, &e));
            prop_assume!(!g.is_zero() && !h.is_zero());
            let gh = g.mul(&h, &c);
            for p in c.places_up_to(2) {
                if let (Ok(s1), Ok(s2)) = (c.legendre(&g, &p), c.legendre(&h, &p)) {
                    prop_assert_eq!(c.legendre(&gh, &p).unwrap(), s1 * s2);
                }
            }
        }

        #[test]
        fn squares_are_detected(a in proptest::collection::vec(0i64..5, 0..3),
                                b in proptest::collection::vec(0i64..5, 0..3)) {
            let c = curve();
            let k = c.field().clone();
            let g = CurveFunction::new(Poly::from_ints(&k, &a), Poly::from_ints(&k, &b), Poly::one(), &k).unwrap();
            prop_assume!(!g.is_zero());
            let g2 = g.mul(&g, &c);
            prop_assert!(c.is_square(&g2));
            prop_assert!(c.is_square(&g2.inv(&c).unwrap()));
            let rep = c.class_representative(&g2).unwrap();
            prop_assert!(c.is_square(&rep));
            prop_assert!(c.odd_support(&g2).unwrap().is_empty());
            let zeta = CurveFunction::constant(k.canonical_nonsquare());
            prop_assert!(!c.is_square(&g2.mul(&zeta, &c)));
        }
    }
}

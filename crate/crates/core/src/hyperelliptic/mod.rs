//! Imaginary hyperelliptic curves `y² = f(x)`, `f` monic squarefree of odd
//! degree `2g + 1`: places, functions, divisors, Jacobian arithmetic and
//! the curve model used by the square-class machinery.

mod function;
mod jacobian;
mod model;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Sign};
use crate::parse::parse_poly;
use crate::poly::{monic_irreducibles, sqrt_mod, Poly};

pub use function::{CurveFunction, Residue};
pub use jacobian::{cantor_add, negate, reduce, zeta_data, JacobianLimits, JacobianTable, MumfordDivisor, ZetaData};
pub use model::HyperellipticModel;

/// A closed point of the curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePlace {
    Infinite,
    /// Over a factor of `f`.
    Ramified(Poly),
    /// One of the two places over `π` with `f` a nonzero square mod `π`;
    /// `y ≡ v` there.
    Split {
        pi: Poly,
        v: Poly,
    },
    /// The place over `π` with `f` a non-square mod `π`.
    Inert(Poly),
}

impl CurvePlace {
    pub fn degree(&self) -> usize {
        match self {
            CurvePlace::Infinite => 1,
            CurvePlace::Ramified(pi) | CurvePlace::Split { pi, .. } => pi.deg().unwrap(),
            CurvePlace::Inert(pi) => 2 * pi.deg().unwrap(),
        }
    }

    /// The irreducible of `F_q[x]` below the place.
    pub fn base(&self) -> Option<&Poly> {
        match self {
            CurvePlace::Infinite => None,
            CurvePlace::Ramified(pi) | CurvePlace::Split { pi, .. } | CurvePlace::Inert(pi) => Some(pi),
        }
    }

    pub fn render(&self, k: &Field) -> String {
        match self {
            CurvePlace::Infinite => "inf".into(),
            CurvePlace::Ramified(pi) | CurvePlace::Inert(pi) => pi.render("x", k),
            CurvePlace::Split { pi, v } => format!("{}@{}", pi.render("x", k), v.render("x", k)),
        }
    }

    fn key(&self) -> (usize, Option<&Poly>, Option<&Poly>) {
        match self {
            CurvePlace::Infinite => (0, None, None),
            CurvePlace::Ramified(pi) | CurvePlace::Inert(pi) => (pi.deg().unwrap(), Some(pi), None),
            CurvePlace::Split { pi, v } => (pi.deg().unwrap(), Some(pi), Some(v)),
        }
    }
}

impl Ord for CurvePlace {
    fn cmp(&self, other: &CurvePlace) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for CurvePlace {
    fn partial_cmp(&self, other: &CurvePlace) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A divisor on the curve.
pub type CurveDivisor = BTreeMap<CurvePlace, i64>;

pub fn divisor_degree(d: &CurveDivisor) -> i64 {
    d.iter().map(|(p, c)| c * p.degree() as i64).sum()
}

pub(crate) fn add_to_divisor(d: &mut CurveDivisor, p: CurvePlace, c: i64) {
    let e = d.entry(p.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        d.remove(&p);
    }
}

/// The curve `y² = f(x)`.
#[derive(Clone, Debug)]
pub struct Curve {
    k: Field,
    f: Poly,
    genus: usize,
    factors: Vec<Poly>,
}

impl Curve {
    pub fn new(k: Field, f: Poly) -> Result<Curve> {
        let d = f.deg().unwrap_or(0);
        if !f.is_monic() {
            return Err(Error::InvalidInput("f must be monic".into()));
        }
        if d.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "f has even degree {d}: only imaginary models (odd degree) are supported"
            )));
        }
        if d < 3 {
            return Err(Error::InvalidInput("f must have degree at least 3".into()));
        }
        if !f.gcd(&f.derivative(&k), &k).is_one() {
            return Err(Error::InvalidInput("f must be squarefree".into()));
        }
        let factors = f.irreducible_factors(&k)?;
        Ok(Curve {
            genus: (d - 1) / 2,
            factors,
            k,
            f,
        })
    }

    pub fn parse(k: Field, s: &str) -> Result<Curve> {
        let f = parse_poly(s, "x", &k)?;
        Curve::new(k, f)
    }

    pub fn field(&self) -> &Field {
        &self.k
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Monic irreducible factors of `f`, in enumeration order.
    pub fn ramified_factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn render(&self) -> String {
        self.f.render("x", &self.k)
    }

    /// The places over a monic irreducible `π`.
    pub fn places_over(&self, pi: &Poly) -> Vec<CurvePlace> {
        let k = &self.k;
        if pi.divides(&self.f, k) {
            return vec![CurvePlace::Ramified(pi.clone())];
        }
        match self.f.character_mod(pi, k).expect("π does not divide f") {
            Sign::Plus => {
                let r = sqrt_mod(&self.f, pi, k).expect("nonzero modulus").expect("square");
                let s = r.neg(k).rem(pi, k).expect("nonzero modulus");
                let (a, b) = if r <= s { (r, s) } else { (s, r) };
                vec![
                    CurvePlace::Split { pi: pi.clone(), v: a },
                    CurvePlace::Split { pi: pi.clone(), v: b },
                ]
            }
            Sign::Minus => vec![CurvePlace::Inert(pi.clone())],
        }
    }

    /// Places of degree exactly `d`, in enumeration order.
    pub fn places_of_degree(&self, d: usize) -> Vec<CurvePlace> {
        let mut out = Vec::new();
        if d == 1 {
            out.push(CurvePlace::Infinite);
        }
        if d.is_multiple_of(2) {
            for pi in monic_irreducibles(&self.k, d / 2).iter() {
                out.extend(self.places_over(pi).into_iter().filter(|p| p.degree() == d));
            }
        }
        for pi in monic_irreducibles(&self.k, d).iter() {
            out.extend(self.places_over(pi).into_iter().filter(|p| p.degree() == d));
        }
        out.sort();
        out
    }

    /// Places of degree `≤ d`: `∞` first, then by `(deg π, π, branch)`.
    pub fn places_up_to(&self, d: usize) -> Vec<CurvePlace> {
        let mut out: Vec<CurvePlace> = (1..=d).flat_map(|e| self.places_of_degree(e)).collect();
        out.sort();
        out
    }

    /// Parses `inf`, `<π>` or `<π>@<v>`.
    pub fn parse_place(&self, s: &str) -> Result<CurvePlace> {
        let k = &self.k;
        let s = s.trim();
        if s == "inf" {
            return Ok(CurvePlace::Infinite);
        }
        let (pis, vs) = match s.split_once('@') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let pi = parse_poly(pis, "x", k)?;
        if pi.is_constant() || !pi.is_monic() || !pi.is_irreducible(k)? {
            return Err(Error::InvalidInput(format!("'{pis}' is not a monic irreducible")));
        }
        let over = self.places_over(&pi);
        match vs {
            None if over.len() == 1 => Ok(over.into_iter().next().unwrap()),
            None => Err(Error::InvalidInput(format!(
                "'{pis}' splits; name a branch as {pis}@<v>"
            ))),
            Some(vs) => {
                let v = parse_poly(vs, "x", k)?.rem(&pi, k)?;
                over.into_iter()
                    .find(|p| matches!(p, CurvePlace::Split { v: w, .. } if *w == v))
                    .ok_or_else(|| Error::InvalidInput(format!("no place {s} on the curve")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn elliptic() -> Curve {
        let k = Field::prime(5).unwrap();
        Curve::parse(k, "x^3 - x").unwrap()
    }

    #[test]
    fn rejects_bad_models() {
        let k = Field::prime(5).unwrap();
        assert!(Curve::parse(k.clone(), "x^4+1").is_err());
        assert!(Curve::parse(k.clone(), "x^3").is_err());
        assert!(Curve::parse(k.clone(), "2x^3+1").is_err());
        assert!(Curve::parse(k, "x").is_err());
    }

    #[test]
    fn place_examples() {
        let c = elliptic();
        let k = c.field().clone();
        let x = Poly::x();
        assert_eq!(c.places_over(&x), vec![CurvePlace::Ramified(x.clone())]);
        // f(2) = 6 = 1
        let over = c.places_over(&Poly::from_ints(&k, &[-2, 1]));
        assert_eq!(over.len(), 2);
        assert!(matches!(&over[0], CurvePlace::Split { v, .. } if *v == Poly::from_ints(&k, &[1])));
        assert!(matches!(&over[1], CurvePlace::Split { v, .. } if *v == Poly::from_ints(&k, &[4])));
        // f(3) = 24 = 4, a square; f(4) = 60 = 0
        let inert: Vec<_> = (0..5)
            .filter(|&a| matches!(c.places_over(&Poly::from_ints(&k, &[-a, 1]))[0], CurvePlace::Inert(_)))
            .collect();
        // squares mod 5 are 1, 4; f(a) for a = 0..4 is 0, 0, 1, 4, 0
        assert!(inert.is_empty());
        let ps = c.places_up_to(1);
        assert_eq!(ps[0], CurvePlace::Infinite);
        assert_eq!(ps.len(), 1 + 3 + 4);
        assert!(c.places_of_degree(2).iter().any(|p| matches!(p, CurvePlace::Inert(_))) || true);
    }

    #[test]
    fn parse_places() {
        let c = elliptic();
        let k = c.field().clone();
        for p in c.places_up_to(3) {
            assert_eq!(c.parse_place(&p.render(&k)).unwrap(), p);
        }
        assert!(c.parse_place("x+3").is_err());
        assert!(c.parse_place("x^2").is_err());
    }
}

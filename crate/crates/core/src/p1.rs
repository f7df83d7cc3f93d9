//! The rational function field `F_q(t)`: places, valuations, residues,
//! principal divisors and the Legendre and Hilbert symbols.
//!
//! At the infinite place the uniformizer is `1/t`, so the unit part of `λ`
//! there is `λ·t^ord`, whose residue is the ratio of leading coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Sign};
use crate::parse::{parse_poly, parse_rational};
use crate::poly::{monic_irreducibles, sqrt_mod, Poly};
use crate::rational::RationalFunction;
use crate::squares::{CurveModel, ModelInfo};

/// A closed point of `P¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlaceP1 {
    Finite(Poly),
    Infinite,
}

impl PlaceP1 {
    pub fn degree(&self) -> usize {
        match self {
            PlaceP1::Finite(pi) => pi.deg().unwrap_or(0),
            PlaceP1::Infinite => 1,
        }
    }

    pub fn render(&self, k: &Field) -> String {
        match self {
            PlaceP1::Finite(pi) => pi.render("t", k),
            PlaceP1::Infinite => "inf".into(),
        }
    }

    pub fn parse(s: &str, k: &Field) -> Result<PlaceP1> {
        if s.trim() == "inf" {
            return Ok(PlaceP1::Infinite);
        }
        let pi = parse_poly(s, "t", k)?;
        if pi.is_constant() || !pi.is_monic() || !pi.is_irreducible(k)? {
            return Err(Error::InvalidInput(format!("'{s}' is not a monic irreducible")));
        }
        Ok(PlaceP1::Finite(pi))
    }

    // (degree, finite before infinite, generator)
    fn key(&self) -> (usize, bool, Option<&Poly>) {
        match self {
            PlaceP1::Finite(pi) => (self.degree(), false, Some(pi)),
            PlaceP1::Infinite => (1, true, None),
        }
    }
}

impl Ord for PlaceP1 {
    fn cmp(&self, other: &PlaceP1) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PlaceP1 {
    fn partial_cmp(&self, other: &PlaceP1) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A divisor on `P¹`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisorP1 {
    pub support: BTreeMap<PlaceP1, i64>,
}

#[derive(Serialize)]
struct DivisorEntry {
    place: String,
    coeff: i64,
}

impl DivisorP1 {
    pub fn add_place(&mut self, p: PlaceP1, c: i64) {
        let e = self.support.entry(p.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.support.remove(&p);
        }
    }

    pub fn degree(&self) -> i64 {
        self.support.iter().map(|(p, c)| c * p.degree() as i64).sum()
    }

    pub fn coeff(&self, p: &PlaceP1) -> i64 {
        self.support.get(p).copied().unwrap_or(0)
    }

    pub fn to_json(&self, k: &Field) -> serde_json::Value {
        let entries: Vec<DivisorEntry> = self
            .support
            .iter()
            .map(|(p, &coeff)| DivisorEntry {
                place: p.render(k),
                coeff,
            })
            .collect();
        serde_json::to_value(entries).expect("serializable")
    }
}

/// Canonical representative `ζ^e · m` of a class in `K*/K*²`, `m` monic squarefree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClassP1 {
    pub zeta: bool,
    pub m: Poly,
}

impl SquareClassP1 {
    pub fn one() -> SquareClassP1 {
        SquareClassP1 {
            zeta: false,
            m: Poly::one(),
        }
    }

    pub fn of_poly(f: &Poly, k: &Field) -> Result<SquareClassP1> {
        let (zeta, m) = f.squarefree_part(k)?;
        Ok(SquareClassP1 { zeta, m })
    }

    /// The class of `num/den`, which equals the class of `num·den`.
    pub fn of_rational(r: &RationalFunction, k: &Field) -> Result<SquareClassP1> {
        SquareClassP1::of_poly(&r.num().mul(r.den(), k), k)
    }

    pub fn mul(&self, other: &SquareClassP1, k: &Field) -> SquareClassP1 {
        let g = self.m.gcd(&other.m, k);
        let a = self.m.div_exact(&g, k).expect("gcd divides");
        let b = other.m.div_exact(&g, k).expect("gcd divides");
        SquareClassP1 {
            zeta: self.zeta ^ other.zeta,
            m: a.mul(&b, k),
        }
    }

    pub fn is_trivial(&self) -> bool {
        !self.zeta && self.m.is_one()
    }

    /// The polynomial `ζ^e · m`.
    pub fn to_poly(&self, k: &Field) -> Poly {
        if self.zeta {
            self.m.scale(k.canonical_nonsquare(), k)
        } else {
            self.m.clone()
        }
    }

    pub fn to_rational(&self, k: &Field) -> RationalFunction {
        RationalFunction::from_poly(self.to_poly(k))
    }

    pub fn render(&self, k: &Field) -> String {
        self.to_poly(k).render("t", k)
    }
}

fn nonzero(l: &RationalFunction) -> Result<()> {
    if l.is_zero() {
        Err(Error::ZeroFunction)
    } else {
        Ok(())
    }
}

/// `ord_p λ`.
pub fn ord(place: &PlaceP1, l: &RationalFunction, k: &Field) -> Result<i64> {
    nonzero(l)?;
    Ok(match place {
        PlaceP1::Finite(pi) => l.num().valuation(pi, k).0 as i64 - l.den().valuation(pi, k).0 as i64,
        PlaceP1::Infinite => l.den().degree() - l.num().degree(),
    })
}

/// The principal divisor of `λ`, including the infinite place.
pub fn principal_divisor(l: &RationalFunction, k: &Field) -> Result<DivisorP1> {
    nonzero(l)?;
    let mut d = DivisorP1::default();
    for (pi, m) in l.num().factor(k)?.factors {
        d.add_place(PlaceP1::Finite(pi), m as i64);
    }
    for (pi, m) in l.den().factor(k)?.factors {
        d.add_place(PlaceP1::Finite(pi), -(m as i64));
    }
    d.add_place(PlaceP1::Infinite, ord(&PlaceP1::Infinite, l, k)?);
    Ok(d)
}

/// The unit part `λ·u^(-ord)` split as `(numerator, denominator)` with
/// respect to the fixed uniformizer, for finite places.
fn unit_part(pi: &Poly, l: &RationalFunction, k: &Field) -> (i64, Poly, Poly) {
    let (a, num) = l.num().valuation(pi, k);
    let (b, den) = l.den().valuation(pi, k);
    (a as i64 - b as i64, num, den)
}

/// Residue of a unit: an element of `F_q[t]/(π)` given by its reduced
/// representative, or of `F_q` (a constant) at infinity.
pub fn residue(place: &PlaceP1, l: &RationalFunction, k: &Field) -> Result<Poly> {
    if ord(place, l, k)? != 0 {
        return Err(Error::NotAUnit);
    }
    unit_residue(place, l, k).map(|(_, r)| r)
}

/// Residue of the unit part together with the valuation.
fn unit_residue(place: &PlaceP1, l: &RationalFunction, k: &Field) -> Result<(i64, Poly)> {
    nonzero(l)?;
    match place {
        PlaceP1::Finite(pi) => {
            let (v, num, den) = unit_part(pi, l, k);
            let inv = inverse_mod(&den, pi, k)?;
            Ok((v, num.mulmod(&inv, pi, k)))
        }
        PlaceP1::Infinite => {
            let c = k.div(l.num().lc(), l.den().lc())?;
            Ok((ord(place, l, k)?, Poly::constant(c)))
        }
    }
}

pub(crate) fn inverse_mod(a: &Poly, pi: &Poly, k: &Field) -> Result<Poly> {
    let (g, s, _) = a.rem(pi, k)?.xgcd(pi, k);
    if !g.is_one() {
        return Err(Error::NotAUnit);
    }
    s.rem(pi, k)
}

/// Character of the unit-part residue (no parity check on the valuation).
fn unit_character(place: &PlaceP1, l: &RationalFunction, k: &Field) -> Result<(i64, Sign)> {
    nonzero(l)?;
    match place {
        PlaceP1::Finite(pi) => {
            let (v, num, den) = unit_part(pi, l, k);
            Ok((v, num.character_mod(pi, k)? * den.character_mod(pi, k)?))
        }
        PlaceP1::Infinite => {
            let c = k.mul(l.num().lc(), l.den().lc());
            Ok((ord(place, l, k)?, k.quadratic_character(c)?))
        }
    }
}

/// The Legendre symbol `(λ/p)`, defined when `ord_p λ` is even.
pub fn legendre(l: &RationalFunction, place: &PlaceP1, k: &Field) -> Result<Sign> {
    let (v, s) = unit_character(place, l, k)?;
    if v % 2 != 0 {
        return Err(Error::OddValuation);
    }
    Ok(s)
}

/// The Legendre symbol of a canonical square class.
pub fn legendre_class(c: &SquareClassP1, place: &PlaceP1, k: &Field) -> Result<Sign> {
    let z = if c.zeta {
        Sign::parity(place.degree() as u64)
    } else {
        Sign::Plus
    };
    match place {
        PlaceP1::Finite(pi) => {
            if pi.divides(&c.m, k) {
                return Err(Error::OddValuation);
            }
            Ok(z * c.m.character_mod(pi, k)?)
        }
        PlaceP1::Infinite => {
            if c.m.degree() % 2 != 0 {
                return Err(Error::OddValuation);
            }
            Ok(z)
        }
    }
}

/// Tame Hilbert symbol `(a, b)_p = χ_p((-1)^(αβ) a^β b^(-α))`.
pub fn hilbert(a: &RationalFunction, b: &RationalFunction, place: &PlaceP1, k: &Field) -> Result<Sign> {
    let (alpha, ca) = unit_character(place, a, k)?;
    let (beta, cb) = unit_character(place, b, k)?;
    let mut s = Sign::Plus;
    if (alpha * beta) % 2 != 0 {
        s *= k.minus_one_character(place.degree());
    }
    if beta % 2 != 0 {
        s *= ca;
    }
    if alpha % 2 != 0 {
        s *= cb;
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocityCheck {
    pub lhs: Sign,
    pub rhs: Sign,
    pub ok: bool,
}

/// `(f/g)(g/f)` against `(-1)^(((|f|-1)/2)((|g|-1)/2))`.
pub fn reciprocity_check(f: &Poly, g: &Poly, k: &Field) -> Result<ReciprocityCheck> {
    if f == g {
        return Err(Error::Precondition("reciprocity needs distinct polynomials".into()));
    }
    for h in [f, g] {
        if h.is_constant() || !h.is_monic() || !h.is_irreducible(k)? {
            return Err(Error::Precondition("reciprocity needs monic irreducibles".into()));
        }
    }
    let lhs = f.character_mod(g, k)? * g.character_mod(f, k)?;
    let half_odd = |d: usize| k.minus_one_character(d) == Sign::Minus;
    let rhs = Sign::from_bit(u8::from(half_odd(f.deg().unwrap()) && half_odd(g.deg().unwrap())));
    Ok(ReciprocityCheck {
        lhs,
        rhs,
        ok: lhs == rhs,
    })
}

/// Product of `(a, b)_p` over every place where either argument is not a unit, and `∞`.
pub fn hilbert_product_check(a: &RationalFunction, b: &RationalFunction, k: &Field) -> Result<(Sign, bool)> {
    let mut places: Vec<PlaceP1> = principal_divisor(a, k)?.support.into_keys().collect();
    places.extend(principal_divisor(b, k)?.support.into_keys());
    places.push(PlaceP1::Infinite);
    places.sort();
    places.dedup();
    let product = places.iter().map(|p| hilbert(a, b, p, k)).product::<Result<Sign>>()?;
    Ok((product, product == Sign::Plus))
}

/// `F_q(t)` as a curve model.
#[derive(Clone, Debug)]
pub struct RationalModel {
    k: Field,
}

impl RationalModel {
    pub fn new(k: Field) -> RationalModel {
        RationalModel { k }
    }
}

impl CurveModel for RationalModel {
    type Place = PlaceP1;
    type Class = SquareClassP1;

    fn field(&self) -> &Field {
        &self.k
    }

    fn info(&self) -> ModelInfo {
        ModelInfo {
            q: self.k.q(),
            model: "p1".into(),
            curve_f: None,
        }
    }

    fn places_of_degree(&self, d: usize) -> Vec<PlaceP1> {
        let mut v: Vec<PlaceP1> = monic_irreducibles(&self.k, d)
            .iter()
            .cloned()
            .map(PlaceP1::Finite)
            .collect();
        if d == 1 {
            v.push(PlaceP1::Infinite);
        }
        v
    }

    fn place_degree(&self, p: &PlaceP1) -> usize {
        p.degree()
    }

    fn render_place(&self, p: &PlaceP1) -> String {
        p.render(&self.k)
    }

    fn parse_place(&self, s: &str) -> Result<PlaceP1> {
        PlaceP1::parse(s, &self.k)
    }

    fn one(&self) -> SquareClassP1 {
        SquareClassP1::one()
    }

    fn zeta(&self) -> SquareClassP1 {
        SquareClassP1 {
            zeta: true,
            m: Poly::one(),
        }
    }

    fn mul(&self, a: &SquareClassP1, b: &SquareClassP1) -> SquareClassP1 {
        a.mul(b, &self.k)
    }

    fn is_square(&self, a: &SquareClassP1) -> bool {
        a.is_trivial()
    }

    fn render_class(&self, a: &SquareClassP1) -> String {
        a.render(&self.k)
    }

    fn parse_class(&self, s: &str) -> Result<SquareClassP1> {
        let r = parse_rational(s, "t", &self.k)?;
        nonzero(&r)?;
        SquareClassP1::of_rational(&r, &self.k)
    }

    fn ord(&self, p: &PlaceP1, a: &SquareClassP1) -> i64 {
        ord(p, &a.to_rational(&self.k), &self.k).expect("classes are nonzero")
    }

    fn legendre(&self, a: &SquareClassP1, p: &PlaceP1) -> Result<Sign> {
        legendre_class(a, p, &self.k)
    }

    fn residue_is_square(&self, a: &SquareClassP1, p: &PlaceP1) -> Result<bool> {
        let (v, r) = unit_residue(p, &a.to_rational(&self.k), &self.k)?;
        if v % 2 != 0 {
            return Err(Error::OddValuation);
        }
        match p {
            PlaceP1::Finite(pi) => Ok(sqrt_mod(&r, pi, &self.k)?.is_some()),
            PlaceP1::Infinite => Ok(self.k.sqrt(r.coeff(0)).is_some()),
        }
    }

    fn odd_support(&self, a: &SquareClassP1) -> Vec<PlaceP1> {
        let mut v: Vec<PlaceP1> =
            a.m.irreducible_factors(&self.k)
                .expect("nonzero")
                .into_iter()
                .map(PlaceP1::Finite)
                .collect();
        if a.m.degree() % 2 != 0 {
            v.push(PlaceP1::Infinite);
        }
        v.sort();
        v
    }

    fn sing_candidates(&self, removed: &[PlaceP1], bound: usize) -> Result<Vec<SquareClassP1>> {
        // A canonical class ζ^e·m has ord 1 at every factor of m, so only
        // removed finite places can divide m.
        let mut out = vec![self.zeta()];
        for p in removed {
            if p.degree() > bound {
                return Err(Error::BoundExhausted(format!(
                    "removed place {} has degree {} above the scan bound {bound}",
                    self.render_place(p),
                    p.degree()
                )));
            }
            if let PlaceP1::Finite(pi) = p {
                out.push(SquareClassP1 {
                    zeta: false,
                    m: pi.clone(),
                });
            }
        }
        Ok(out)
    }

    fn pic2_dim(&self) -> Result<usize> {
        Ok(1)
    }

    fn pic2_coords(&self, p: &PlaceP1) -> Result<Vec<u8>> {
        Ok(vec![(p.degree() % 2) as u8])
    }

    fn odd_valuation_scan(&self, p: &PlaceP1, bound: usize) -> Result<Option<SquareClassP1>> {
        let k = &self.k;
        // squarefree monic m divisible by the generator of p, deg m ≤ bound
        let pi = match p {
            PlaceP1::Finite(pi) => pi.clone(),
            // at ∞ the candidates are all squarefree m of odd degree
            PlaceP1::Infinite => Poly::one(),
        };
        let dp = pi.deg().unwrap();
        for extra in 0..=bound.saturating_sub(dp) {
            let count = (k.q() as u64).pow(extra as u32);
            for idx in 0..count {
                let m = pi.mul(&Poly::monic_from_index(k, extra, idx), k);
                if !m.squarefree_part(k)?.1.eq(&m) {
                    continue;
                }
                for zeta in [false, true] {
                    let c = SquareClassP1 { zeta, m: m.clone() };
                    let odd = self.odd_support(&c);
                    if odd.len() == 1 && odd[0] == *p {
                        return Ok(Some(c));
                    }
                }
            }
        }
        Ok(None)
    }

    fn random_class(&self, rng: &mut ChaCha8Rng) -> SquareClassP1 {
        loop {
            let d = rng.gen_range(1..=4);
            let f = Poly::random(&self.k, d, rng);
            if !f.is_zero() {
                let mut c = SquareClassP1::of_poly(&f, &self.k).expect("nonzero");
                c.zeta ^= rng.gen_bool(0.5);
                return c;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k5() -> Field {
        Field::prime(5).unwrap()
    }

    fn rf(k: &Field, num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(k, num), Poly::from_ints(k, den), k).unwrap()
    }

    fn fin(k: &Field, c: &[i64]) -> PlaceP1 {
        PlaceP1::Finite(Poly::from_ints(k, c))
    }

    #[test]
    fn ord_examples() {
        let k = k5();
        assert_eq!(ord(&PlaceP1::Infinite, &rf(&k, &[0, 1], &[1]), &k).unwrap(), -1);
        assert_eq!(ord(&fin(&k, &[0, 1]), &rf(&k, &[0, 0, 1], &[1, 1]), &k).unwrap(), 2);
        assert_eq!(ord(&fin(&k, &[2, 0, 1]), &rf(&k, &[2, 0, 1], &[1]), &k).unwrap(), 1);
        assert_eq!(
            ord(&PlaceP1::Infinite, &rf(&k, &[0], &[1]), &k),
            Err(Error::ZeroFunction)
        );
    }

    #[test]
    fn divisor_examples() {
        let k = k5();
        let d = principal_divisor(&rf(&k, &[2, 0, 1], &[1]), &k).unwrap();
        assert_eq!(d.coeff(&fin(&k, &[2, 0, 1])), 1);
        assert_eq!(d.coeff(&PlaceP1::Infinite), -2);
        assert_eq!(d.support.len(), 2);
        let d = principal_divisor(&rf(&k, &[0, 1], &[1, 1]), &k).unwrap();
        assert_eq!(d.coeff(&fin(&k, &[0, 1])), 1);
        assert_eq!(d.coeff(&fin(&k, &[1, 1])), -1);
        assert_eq!(d.support.len(), 2);
        assert!(principal_divisor(&rf(&k, &[2], &[1]), &k).unwrap().support.is_empty());
    }

    #[test]
    fn residue_examples() {
        let k = k5();
        assert_eq!(
            residue(&fin(&k, &[0, 1]), &rf(&k, &[3, 1], &[1]), &k).unwrap(),
            Poly::from_ints(&k, &[3])
        );
        assert_eq!(
            residue(&PlaceP1::Infinite, &rf(&k, &[1, 0, 2], &[0, 1, 1]), &k).unwrap(),
            Poly::from_ints(&k, &[2])
        );
        // t^3 = t·t^2 = -2t = 3t mod t^2+2
        assert_eq!(
            residue(&fin(&k, &[2, 0, 1]), &rf(&k, &[0, 0, 0, 1], &[1]), &k).unwrap(),
            Poly::from_ints(&k, &[0, 3])
        );
        assert_eq!(
            residue(&fin(&k, &[0, 1]), &rf(&k, &[0, 1], &[1]), &k),
            Err(Error::NotAUnit)
        );
    }

    #[test]
    fn legendre_examples() {
        let k = k5();
        let f = rf(&k, &[1, 4, 1], &[1]);
        assert_eq!(legendre(&f, &fin(&k, &[3, 2, 1]), &k).unwrap(), Sign::Plus);
        assert_eq!(legendre(&f, &fin(&k, &[2, 0, 1]), &k).unwrap(), Sign::Minus);
        let zeta = RationalModel::new(k.clone()).zeta();
        assert_eq!(legendre_class(&zeta, &fin(&k, &[2, 0, 1]), &k).unwrap(), Sign::Plus);
        assert_eq!(legendre_class(&zeta, &fin(&k, &[0, 1]), &k).unwrap(), Sign::Minus);
        assert_eq!(
            legendre(&rf(&k, &[0, 1], &[1]), &fin(&k, &[0, 1]), &k),
            Err(Error::OddValuation)
        );
    }

    #[test]
    fn hilbert_examples() {
        let k = k5();
        let t = rf(&k, &[0, 1], &[1]);
        let p = fin(&k, &[0, 1]);
        assert_eq!(hilbert(&t, &t, &p, &k).unwrap(), Sign::Plus);
        assert_eq!(hilbert(&t, &rf(&k, &[2], &[1]), &p, &k).unwrap(), Sign::Minus);
        let u = rf(&k, &[1, 1], &[1]);
        assert_eq!(hilbert(&u, &rf(&k, &[3], &[1]), &p, &k).unwrap(), Sign::Plus);
        let one_minus_t = rf(&k, &[1, -1], &[1]);
        assert_eq!(hilbert_product_check(&t, &one_minus_t, &k).unwrap(), (Sign::Plus, true));
    }

    #[test]
    fn reciprocity_examples() {
        let k = k5();
        let r = reciprocity_check(&Poly::from_ints(&k, &[1, 4, 1]), &Poly::from_ints(&k, &[3, 2, 1]), &k).unwrap();
        assert_eq!((r.lhs, r.rhs, r.ok), (Sign::Plus, Sign::Plus, true));
        let k3 = Field::prime(3).unwrap();
        assert!(
            reciprocity_check(&Poly::from_ints(&k3, &[0, 1]), &Poly::from_ints(&k3, &[1, 1]), &k3)
                .unwrap()
                .ok
        );
        assert!(reciprocity_check(&Poly::x(), &Poly::x(), &k3).is_err());
    }

    #[test]
    fn reciprocity_small_exhaustive() {
        for q in [3, 5] {
            let k = Field::prime(q).unwrap();
            let ps: Vec<Poly> = (1..=2).flat_map(|d| monic_irreducibles(&k, d).to_vec()).collect();
            for f in &ps {
                for g in &ps {
                    if f != g {
                        assert!(reciprocity_check(f, g, &k).unwrap().ok);
                    }
                }
            }
        }
    }

    #[test]
    fn place_order_puts_infinity_after_linears() {
        let m = RationalModel::new(k5());
        let ps = m.places_up_to(2);
        assert_eq!(ps[5], PlaceP1::Infinite);
        assert_eq!(ps[0], fin(&k5(), &[0, 1]));
        assert_eq!(ps.len(), 16);
    }

    #[test]
    fn class_examples() {
        let k = k5();
        let c = SquareClassP1::of_poly(&Poly::from_ints(&k, &[0, 0, 4]), &k).unwrap();
        assert!(c.is_trivial());
        let c = SquareClassP1::of_poly(&Poly::from_ints(&k, &[0, 2]), &k).unwrap();
        assert_eq!(
            c,
            SquareClassP1 {
                zeta: true,
                m: Poly::x()
            }
        );
        // 3(t^2+2)^2(t+1)
        let f = Poly::from_ints(&k, &[2, 0, 1])
            .square(&k)
            .mul(&Poly::from_ints(&k, &[1, 1]), &k)
            .scale(k.from_int(3), &k);
        assert_eq!(
            SquareClassP1::of_poly(&f, &k).unwrap(),
            SquareClassP1 {
                zeta: true,
                m: Poly::from_ints(&k, &[1, 1])
            }
        );
    }

    fn arb_rational(k: Field) -> impl Strategy<Value = RationalFunction> {
        (
            proptest::collection::vec(0u32..5, 1..5),
            proptest::collection::vec(0u32..5, 1..4),
        )
            .prop_filter_map("nonzero", move |(n, d)| {
                let num = Poly::from_coeffs(n.iter().map(|&c| k.element(c).unwrap()).collect());
                let den = Poly::from_coeffs(d.iter().map(|&c| k.element(c).unwrap()).collect());
                if num.is_zero() || den.is_zero() {
                    None
                } else {
                    RationalFunction::new(num, den, &k).ok()
                }
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn divisors_have_degree_zero(l in arb_rational(k5())) {
            prop_assert_eq!(principal_divisor(&l, &k5()).unwrap().degree(), 0);
        }

        #[test]
        fn legendre_is_multiplicative_and_class_invariant(
            a in arb_rational(k5()), b in arb_rational(k5()), s in arb_rational(k5()), pi in 0usize..16,
        ) {
            let k = k5();
            let place = RationalModel::new(k.clone()).places_up_to(2)[pi].clone();
            let ab = a.mul(&b, &k);
            if let (Ok(x), Ok(y), Ok(z)) = (legendre(&a, &place, &k), legendre(&b, &place, &k), legendre(&ab, &place, &k)) {
                prop_assert_eq!(x * y, z);
            }
            if let Ok(x) = legendre(&a, &place, &k) {
                prop_assert_eq!(legendre(&a.mul(&s.mul(&s, &k), &k), &place, &k).unwrap(), x);
                let c = SquareClassP1::of_rational(&a, &k).unwrap();
                prop_assert_eq!(legendre_class(&c, &place, &k).unwrap(), x);
            }
        }

        #[test]
        fn hilbert_symmetric_and_bimultiplicative(
            a in arb_rational(k5()), b in arb_rational(k5()), c in arb_rational(k5()), pi in 0usize..16,
        ) {
            let k = k5();
            let place = RationalModel::new(k.clone()).places_up_to(2)[pi].clone();
            let h = |x: &RationalFunction, y: &RationalFunction| hilbert(x, y, &place, &k).unwrap();
            prop_assert_eq!(h(&a, &b), h(&b, &a));
            prop_assert_eq!(h(&a.mul(&c, &k), &b), h(&a, &b) * h(&c, &b));
            prop_assert!(hilbert_product_check(&a, &b, &k).unwrap().1);
        }
    }
}

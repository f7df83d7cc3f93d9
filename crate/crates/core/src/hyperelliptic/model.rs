//! The hyperelliptic curve as a [`CurveModel`]: classes of `K*/K*²` are
//! polynomial functions `A + B·y` up to squares, and `Pic X / 2 Pic X` is
//! read off the Jacobian table.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::f2;
use crate::field::{Field, Sign};
use crate::poly::Poly;
use crate::squares::{CurveModel, ModelInfo};

use super::jacobian::reduce;
use super::{
    cantor_add, zeta_data, Curve, CurveFunction, CurvePlace, JacobianLimits, JacobianTable, MumfordDivisor, ZetaData,
};

#[derive(Clone, Debug)]
pub struct HyperellipticModel {
    curve: Arc<Curve>,
    jac: Arc<JacobianTable>,
    zeta: ZetaData,
}

impl HyperellipticModel {
    pub fn new(curve: Curve) -> Result<HyperellipticModel> {
        HyperellipticModel::with_limits(curve, JacobianLimits::from_env())
    }

    pub fn with_limits(curve: Curve, limits: JacobianLimits) -> Result<HyperellipticModel> {
        let jac = JacobianTable::new(&curve, limits)?;
        let zeta = zeta_data(&curve);
        Ok(HyperellipticModel {
            curve: Arc::new(curve),
            jac: Arc::new(jac),
            zeta,
        })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn jacobian(&self) -> &JacobianTable {
        &self.jac
    }

    pub fn zeta_data(&self) -> &ZetaData {
        &self.zeta
    }

    /// `(D, h)` with `P − (deg P)·∞ − D = div(h)`, `D` reduced.
    pub fn place_class(&self, p: &CurvePlace) -> Result<(MumfordDivisor, CurveFunction)> {
        let c = &*self.curve;
        match p {
            CurvePlace::Infinite => Ok((MumfordDivisor::zero(), CurveFunction::one())),
            CurvePlace::Inert(pi) => Ok((MumfordDivisor::zero(), CurveFunction::from_poly(pi.clone()))),
            CurvePlace::Ramified(pi) => reduce(
                c,
                &MumfordDivisor {
                    u: pi.clone(),
                    v: Poly::zero(),
                },
            ),
            CurvePlace::Split { pi, v } => reduce(
                c,
                &MumfordDivisor {
                    u: pi.clone(),
                    v: v.clone(),
                },
            ),
        }
    }

    /// A function whose divisor is `Σ_{P ∈ T} P` plus twice a divisor, when
    /// the classes of `T` sum to zero in `Pic X / 2 Pic X`.
    pub fn extract(&self, places: &[CurvePlace]) -> Result<CurveFunction> {
        let c = &*self.curve;
        let deg: usize = places.iter().map(CurvePlace::degree).sum();
        let names = || {
            places
                .iter()
                .map(|p| p.render(c.field()))
                .collect::<Vec<_>>()
                .join(", ")
        };
        if !deg.is_multiple_of(2) {
            return Err(Error::NotEven(names()));
        }
        let mut acc = MumfordDivisor::zero();
        let mut func = CurveFunction::one();
        for p in places {
            let (d, g) = self.place_class(p)?;
            let (s, h) = cantor_add(c, &acc, &d)?;
            func = func.mul(&g, c).mul(&h, c);
            acc = s;
        }
        let half = self.jac.half(&acc)?.ok_or_else(|| Error::NotEven(names()))?.clone();
        let (twice, h2) = cantor_add(c, &half, &half)?;
        debug_assert_eq!(twice, acc);
        let lambda = func.div(&h2, c)?;
        let mut odd = c.odd_support(&lambda)?;
        odd.sort();
        let mut want = places.to_vec();
        want.sort();
        if odd != want {
            return Err(Error::Verification(format!(
                "extracted function for {} has the wrong support",
                names()
            )));
        }
        c.class_representative(&lambda)
    }

    /// `deg P` even and `[P − deg P·∞] ∈ 2J`.
    pub fn is_even_place(&self, p: &CurvePlace) -> Result<bool> {
        if !p.degree().is_multiple_of(2) {
            return Ok(false);
        }
        let (d, _) = self.place_class(p)?;
        self.jac.is_two_divisible(&d)
    }

    /// `λ_P`: odd order at `P`, even order elsewhere.
    pub fn lambda_extract(&self, p: &CurvePlace) -> Result<CurveFunction> {
        if !self.is_even_place(p)? {
            return Err(Error::NotEven(self.render_place(p)));
        }
        self.extract(std::slice::from_ref(p))
    }

    fn jac_coords(&self, p: &CurvePlace) -> Result<Vec<u8>> {
        let (d, _) = self.place_class(p)?;
        self.jac.coords(&d)
    }
}

impl CurveModel for HyperellipticModel {
    type Place = CurvePlace;
    type Class = CurveFunction;

    fn field(&self) -> &Field {
        self.curve.field()
    }

    fn info(&self) -> ModelInfo {
        ModelInfo {
            q: self.field().q(),
            model: "curve".into(),
            curve_f: Some(self.curve.render()),
        }
    }

    fn places_of_degree(&self, d: usize) -> Vec<CurvePlace> {
        self.curve.places_of_degree(d)
    }

    fn place_degree(&self, p: &CurvePlace) -> usize {
        p.degree()
    }

    fn render_place(&self, p: &CurvePlace) -> String {
        p.render(self.field())
    }

    fn parse_place(&self, s: &str) -> Result<CurvePlace> {
        self.curve.parse_place(s)
    }

    fn one(&self) -> CurveFunction {
        CurveFunction::one()
    }

    fn zeta(&self) -> CurveFunction {
        CurveFunction::constant(self.field().canonical_nonsquare())
    }

    fn mul(&self, a: &CurveFunction, b: &CurveFunction) -> CurveFunction {
        let c = &*self.curve;
        c.class_representative(&a.mul(b, c))
            .expect("product of nonzero functions")
    }

    fn is_square(&self, a: &CurveFunction) -> bool {
        self.curve.is_square(a)
    }

    fn render_class(&self, a: &CurveFunction) -> String {
        a.render(self.field())
    }

    fn parse_class(&self, s: &str) -> Result<CurveFunction> {
        let c = &*self.curve;
        let h = CurveFunction::parse(s, c)?;
        c.class_representative(&h)
    }

    fn ord(&self, p: &CurvePlace, a: &CurveFunction) -> i64 {
        self.curve.ord(p, a).expect("classes are nonzero")
    }

    fn legendre(&self, a: &CurveFunction, p: &CurvePlace) -> Result<Sign> {
        self.curve.legendre(a, p)
    }

    fn residue_is_square(&self, a: &CurveFunction, p: &CurvePlace) -> Result<bool> {
        let (o, r) = self.curve.residue(p, a)?;
        if o % 2 != 0 {
            return Err(Error::OddValuation);
        }
        r.has_square_root(&self.curve)
    }

    fn odd_support(&self, a: &CurveFunction) -> Vec<CurvePlace> {
        self.curve.odd_support(a).expect("classes are nonzero")
    }

    fn sing_candidates(&self, removed: &[CurvePlace], bound: usize) -> Result<Vec<CurveFunction>> {
        if let Some(p) = removed.iter().find(|p| p.degree() > bound) {
            return Err(Error::BoundExhausted(format!(
                "removed place {} has degree {} above the scan bound {bound}",
                self.render_place(p),
                p.degree()
            )));
        }
        let mut out = vec![self.zeta()];
        out.extend(
            self.curve
                .ramified_factors()
                .iter()
                .map(|pi| CurveFunction::from_poly(pi.clone())),
        );
        let rows: Vec<Vec<u8>> = removed.iter().map(|p| self.pic2_coords(p)).collect::<Result<_>>()?;
        for t in f2::echelon(f2::left_kernel(&rows)) {
            let places: Vec<CurvePlace> = removed
                .iter()
                .zip(&t)
                .filter(|(_, &b)| b == 1)
                .map(|(p, _)| p.clone())
                .collect();
            out.push(self.extract(&places)?);
        }
        Ok(out)
    }

    fn pic2_dim(&self) -> Result<usize> {
        Ok(1 + self.jac.two_rank())
    }

    fn pic2_coords(&self, p: &CurvePlace) -> Result<Vec<u8>> {
        let mut v = vec![(p.degree() % 2) as u8];
        v.extend(self.jac_coords(p)?);
        Ok(v)
    }

    fn odd_valuation_scan(&self, p: &CurvePlace, _bound: usize) -> Result<Option<CurveFunction>> {
        // A function with odd order at P and even order elsewhere has
        // divisor P + 2A − m·∞ with m = deg P + 2 deg A, and deg A ≤ g
        // suffices: reduce A modulo principal divisors.
        let c = &*self.curve;
        let k = c.field();
        let q = k.q() as u64;
        let g = c.genus();
        let dp = p.degree();
        for j in 0..=g {
            let m = dp + 2 * j;
            let (lead_a, free_a, lead_b, free_b) = if m.is_multiple_of(2) {
                let db = if m > 2 * g { (m - 2 * g - 1) / 2 + 1 } else { 0 };
                (Some(m / 2), m / 2, None, db)
            } else {
                if m < 2 * g + 1 {
                    continue;
                }
                (None, (m - 1) / 2 + 1, Some((m - 2 * g - 1) / 2), (m - 2 * g - 1) / 2)
            };
            let na = q.pow(free_a as u32);
            let nb = q.pow(free_b as u32);
            for ia in 0..na {
                let a = match lead_a {
                    Some(d) => Poly::monic_from_index(k, d, ia),
                    None => Poly::from_index(k, free_a, ia),
                };
                for ib in 0..nb {
                    let b = match lead_b {
                        Some(d) => Poly::monic_from_index(k, d, ib),
                        None => Poly::from_index(k, free_b, ib),
                    };
                    let h = CurveFunction::new(a.clone(), b, Poly::one(), k)?;
                    if h.is_zero() || c.ord(p, &h)? % 2 == 0 {
                        continue;
                    }
                    if c.odd_support(&h)? == [p.clone()] {
                        return Ok(Some(c.class_representative(&h)?));
                    }
                }
            }
        }
        Ok(None)
    }

    fn random_class(&self, rng: &mut ChaCha8Rng) -> CurveFunction {
        let c = &*self.curve;
        let k = c.field();
        loop {
            let a = Poly::random(k, rng.gen_range(1..=3), rng);
            let b = Poly::random(k, rng.gen_range(0..=2), rng);
            let h = CurveFunction::new(a, b, Poly::one(), k).expect("unit denominator");
            if !h.is_zero() {
                let mut r = c.class_representative(&h).expect("nonzero");
                if rng.gen_bool(0.5) {
                    r = self.mul(&r, &self.zeta());
                }
                return r;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::squares::Squares;

    fn model(q: u32, f: &str) -> HyperellipticModel {
        HyperellipticModel::new(Curve::parse(Field::prime(q).unwrap(), f).unwrap()).unwrap()
    }

    #[test]
    fn sing_x_of_the_elliptic_curve() {
        let m = model(5, "x^3 - x");
        assert_eq!(m.pic2_dim().unwrap(), 3);
        let s = Squares::new(m, 6).unwrap();
        assert_eq!(s.sing_x().dim(), 3);
        for b in &s.sing_x().basis {
            assert!(s.model().odd_support(b).is_empty());
        }
    }

    #[test]
    fn extraction_for_even_places() {
        let m = model(5, "x^3 - x");
        let s = Squares::new(m.clone(), 6).unwrap();
        let mut found = 0;
        for p in m.curve().places_up_to(4) {
            let even = s.is_even_brute_force(&p).unwrap();
            assert_eq!(even, s.is_even_point(&p).unwrap(), "{}", m.render_place(&p));
            if even {
                let l = m.extract(std::slice::from_ref(&p)).unwrap();
                assert_eq!(m.odd_support(&l), vec![p.clone()]);
                assert!(m.odd_valuation_scan(&p, 6).unwrap().is_some());
                found += 1;
            } else {
                assert!(m.extract(std::slice::from_ref(&p)).is_err());
                assert!(m.odd_valuation_scan(&p, 6).unwrap().is_none());
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn criteria_agree_on_the_quintic() {
        let m = model(3, "x^5 - x");
        let s = Squares::new(m.clone(), 6).unwrap();
        for p in m.curve().places_up_to(2) {
            let r = s.even_criteria_report(&p).unwrap();
            assert!(r.agree(), "{r:?}");
        }
    }

    #[test]
    fn classes_round_trip() {
        let m = model(5, "x^3 - x");
        let mut rng = <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
        for _ in 0..20 {
            let a = m.random_class(&mut rng);
            let b = m.parse_class(&m.render_class(&a)).unwrap();
            assert!(m.same_class(&a, &b));
        }
    }
}

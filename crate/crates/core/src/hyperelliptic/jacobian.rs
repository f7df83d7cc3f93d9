//! Mumford representation, Cantor's algorithm with the connecting function
//! tracked, the full Jacobian table with its `J/2J` basis, and the zeta
//! function from place counts.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

use super::{add_to_divisor, Curve, CurveDivisor, CurveFunction, CurvePlace};

/// A reduced or semi-reduced divisor `(u, v)`: `u` monic, `deg v < deg u`,
/// `u | f − v²`, standing for `D − (deg u)·∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MumfordDivisor {
    pub u: Poly,
    pub v: Poly,
}

impl MumfordDivisor {
    pub fn zero() -> MumfordDivisor {
        MumfordDivisor {
            u: Poly::one(),
            v: Poly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_one()
    }

    pub fn render(&self, k: &Field) -> String {
        format!("({}, {})", self.u.render("x", k), self.v.render("x", k))
    }

    /// The degree-zero divisor `D − (deg u)·∞` as a sum of places.
    pub fn to_divisor(&self, c: &Curve) -> Result<CurveDivisor> {
        let k = c.field();
        let mut d = CurveDivisor::new();
        for (pi, e) in self.u.factor(k)?.factors {
            let place = match &c.places_over(&pi)[..] {
                [p @ CurvePlace::Ramified(_)] => p.clone(),
                [CurvePlace::Split { .. }, CurvePlace::Split { .. }] => {
                    let v = self.v.rem(&pi, k)?;
                    CurvePlace::Split { pi: pi.clone(), v }
                }
                _ => return Err(Error::InvalidInput("not a semi-reduced divisor".into())),
            };
            add_to_divisor(&mut d, place, e as i64);
        }
        add_to_divisor(&mut d, CurvePlace::Infinite, -(self.u.degree()));
        Ok(d)
    }

    pub fn is_valid(&self, c: &Curve) -> bool {
        let k = c.field();
        self.u.is_monic() && self.v.degree() < self.u.degree() && self.u.divides(&c.f().sub(&self.v.square(k), k), k)
    }
}

/// Composition: `(D1 + D2) − D = div(d)` with `D` semi-reduced.
fn compose(c: &Curve, d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<(MumfordDivisor, Poly)> {
    let k = c.field();
    let (g0, e1, e2) = d1.u.xgcd(&d2.u, k);
    let vs = d1.v.add(&d2.v, k);
    let (d, c1, c2) = if vs.is_zero() {
        (g0.clone(), Poly::one(), Poly::zero())
    } else {
        g0.xgcd(&vs, k)
    };
    let s1 = c1.mul(&e1, k);
    let s2 = c1.mul(&e2, k);
    let u = d1.u.mul(&d2.u, k).div_exact(&d.square(k), k)?;
    let num = s1
        .mul(&d1.u, k)
        .mul(&d2.v, k)
        .add(&s2.mul(&d2.u, k).mul(&d1.v, k), k)
        .add(&c2.mul(&d1.v.mul(&d2.v, k).add(c.f(), k), k), k);
    let v = num.div_exact(&d, k)?.rem(&u, k)?;
    Ok((MumfordDivisor { u, v }, d))
}

/// Reduction: `D − D_red = div(fn)`.
pub fn reduce(c: &Curve, d: &MumfordDivisor) -> Result<(MumfordDivisor, CurveFunction)> {
    let k = c.field();
    let g = c.genus() as i64;
    let mut cur = d.clone();
    let mut func = CurveFunction::one();
    while cur.u.degree() > g {
        let u2 = c.f().sub(&cur.v.square(k), k).div_exact(&cur.u, k)?.monic(k);
        let v2 = cur.v.neg(k).rem(&u2, k)?;
        let step = CurveFunction::new(cur.v.neg(k), Poly::one(), u2.clone(), k)?;
        func = func.mul(&step, c);
        cur = MumfordDivisor { u: u2, v: v2 };
    }
    Ok((cur, func))
}

/// `D1 + D2 − D3 = div(fn)` with `D3` reduced.
pub fn cantor_add(c: &Curve, d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<(MumfordDivisor, CurveFunction)> {
    let (semi, d) = compose(c, d1, d2)?;
    let (red, g) = reduce(c, &semi)?;
    Ok((red, g.mul(&CurveFunction::from_poly(d), c)))
}

pub fn negate(c: &Curve, d: &MumfordDivisor) -> MumfordDivisor {
    let k = c.field();
    MumfordDivisor {
        u: d.u.clone(),
        v: d.v.neg(k).rem(&d.u, k).expect("monic modulus"),
    }
}

/// Caps for the exhaustive Jacobian table.
#[derive(Clone, Copy, Debug)]
pub struct JacobianLimits {
    pub max_genus: usize,
    pub max_q: u32,
    pub max_order: u64,
}

impl Default for JacobianLimits {
    fn default() -> JacobianLimits {
        JacobianLimits {
            max_genus: 3,
            max_q: 9,
            max_order: 100_000,
        }
    }
}

impl JacobianLimits {
    /// Defaults, with `EVENPOINT_MAX_JACOBIAN` overriding the order cap.
    pub fn from_env() -> JacobianLimits {
        let mut l = JacobianLimits::default();
        if let Some(n) = std::env::var("EVENPOINT_MAX_JACOBIAN")
            .ok()
            .and_then(|s| s.parse().ok())
        {
            l.max_order = n;
        }
        l
    }
}

/// Point counts and the L-polynomial, from place enumeration alone.
#[derive(Clone, Debug, Serialize)]
pub struct ZetaData {
    /// `#X(F_{q^i})` for `i = 1..=g`.
    pub point_counts: Vec<u64>,
    /// `L(T) = Σ a_j T^j`, `j = 0..=2g`.
    pub l_coefficients: Vec<i64>,
    /// `L(1)`.
    pub order: u64,
    pub hasse_weil_ok: bool,
}

pub fn zeta_data(c: &Curve) -> ZetaData {
    let g = c.genus();
    let q = c.field().q() as i64;
    let places: Vec<i64> = (1..=g).map(|d| c.places_of_degree(d).len() as i64).collect();
    let counts: Vec<i64> = (1..=g)
        .map(|i| (1..=i).filter(|e| i % e == 0).map(|e| e as i64 * places[e - 1]).sum())
        .collect();
    let s: Vec<i64> = (1..=g).map(|i| q.pow(i as u32) + 1 - counts[i - 1]).collect();
    let mut a = vec![0i64; 2 * g + 1];
    a[0] = 1;
    for j in 1..=g {
        let t: i64 = (1..=j).map(|i| s[i - 1] * a[j - i]).sum();
        a[j] = -t / j as i64;
    }
    for j in 0..g {
        a[2 * g - j] = q.pow((g - j) as u32) * a[j];
    }
    let order: i64 = a.iter().sum();
    let sq = (q as f64).sqrt();
    let n1 = counts[0];
    let hasse_weil_ok = ((n1 - q - 1).pow(2) as f64) <= 4.0 * (g * g) as f64 * q as f64 + 1e-9
        && (order as f64) >= (sq - 1.0).powi(2 * g as i32) - 1e-9
        && (order as f64) <= (sq + 1.0).powi(2 * g as i32) + 1e-9;
    ZetaData {
        point_counts: counts.iter().map(|&n| n as u64).collect(),
        l_coefficients: a,
        order: order.max(0) as u64,
        hasse_weil_ok,
    }
}

/// Every reduced divisor of the Jacobian, with doubling data and a basis
/// of `J/2J`.
#[derive(Clone, Debug)]
pub struct JacobianTable {
    elements: Vec<MumfordDivisor>,
    index: HashMap<MumfordDivisor, usize>,
    doubles: HashSet<usize>,
    halves: HashMap<usize, usize>,
    coset: Vec<usize>,
    coset_coords: Vec<Vec<u8>>,
    basis: Vec<usize>,
}

impl JacobianTable {
    pub fn new(c: &Curve, limits: JacobianLimits) -> Result<JacobianTable> {
        let k = c.field();
        let g = c.genus();
        let q = k.q();
        if g > limits.max_genus || q > limits.max_q {
            return Err(Error::CapExceeded(format!(
                "Jacobian enumeration is limited to genus ≤ {} and q ≤ {} (got g = {g}, q = {q})",
                limits.max_genus, limits.max_q
            )));
        }
        let bound = ((q as f64).sqrt() + 1.0).powi(2 * g as i32);
        if bound > limits.max_order as f64 {
            let zd = zeta_data(c);
            if zd.order > limits.max_order {
                return Err(Error::CapExceeded(format!(
                    "|J| = {} exceeds the cap {}; raise EVENPOINT_MAX_JACOBIAN",
                    zd.order, limits.max_order
                )));
            }
        }
        let mut elements = vec![MumfordDivisor::zero()];
        for d in 1..=g {
            let nu = (q as u64).pow(d as u32);
            for iu in 0..nu {
                let u = Poly::monic_from_index(k, d, iu);
                let target = c.f().rem(&u, k)?;
                for iv in 0..nu {
                    let v = Poly::from_index(k, d, iv);
                    if v.square(k).rem(&u, k)? == target {
                        elements.push(MumfordDivisor { u: u.clone(), v });
                    }
                }
            }
        }
        elements.sort();
        elements.dedup();
        let index: HashMap<MumfordDivisor, usize> = elements.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let mut halves = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            let (d2, _) = cantor_add(c, e, e)?;
            halves.entry(index[&d2]).or_insert(i);
        }
        let doubles: HashSet<usize> = halves.keys().copied().collect();
        let mut table = JacobianTable {
            elements,
            index,
            doubles,
            halves,
            coset: Vec::new(),
            coset_coords: Vec::new(),
            basis: Vec::new(),
        };
        table.build_cosets(c)?;
        Ok(table)
    }

    fn add_idx(&self, c: &Curve, i: usize, j: usize) -> Result<usize> {
        let (s, _) = cantor_add(c, &self.elements[i], &self.elements[j])?;
        Ok(self.index[&s])
    }

    fn build_cosets(&mut self, c: &Curve) -> Result<()> {
        let n = self.elements.len();
        let mut doubles: Vec<usize> = self.doubles.iter().copied().collect();
        doubles.sort();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for i in 0..n {
            if coset[i] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(i);
            for &h in &doubles {
                coset[self.add_idx(c, i, h)?] = id;
            }
        }
        let ncos = reps.len();
        let r = ncos.trailing_zeros() as usize;
        if 1usize << r != ncos {
            return Err(Error::Verification(format!("J/2J has {ncos} cosets, not a power of 2")));
        }
        let mut coords: Vec<Option<Vec<u8>>> = vec![None; ncos];
        coords[coset[self.index[&MumfordDivisor::zero()]]] = Some(vec![0; r]);
        let mut basis = Vec::new();
        for i in 0..n {
            if coords[coset[i]].is_some() {
                continue;
            }
            let bit = basis.len();
            basis.push(i);
            let known: Vec<(usize, Vec<u8>)> = coords
                .iter()
                .enumerate()
                .filter_map(|(c, v)| v.clone().map(|v| (c, v)))
                .collect();
            for (cid, mut v) in known {
                let s = self.add_idx(c, reps[cid], i)?;
                v[bit] = 1;
                coords[coset[s]] = Some(v);
            }
        }
        self.coset = coset;
        self.coset_coords = coords.into_iter().map(|v| v.expect("all cosets reached")).collect();
        self.basis = basis;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MumfordDivisor] {
        &self.elements
    }

    /// `dim J/2J`.
    pub fn two_rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> Vec<&MumfordDivisor> {
        self.basis.iter().map(|&i| &self.elements[i]).collect()
    }

    pub fn contains(&self, d: &MumfordDivisor) -> bool {
        self.index.contains_key(d)
    }

    pub fn is_two_divisible(&self, d: &MumfordDivisor) -> Result<bool> {
        Ok(self.doubles.contains(&self.lookup(d)?))
    }

    /// Some `E` with `2E = d`.
    pub fn half(&self, d: &MumfordDivisor) -> Result<Option<&MumfordDivisor>> {
        Ok(self.halves.get(&self.lookup(d)?).map(|&i| &self.elements[i]))
    }

    /// Coordinates of `d` in `J/2J` with respect to [`JacobianTable::basis`].
    pub fn coords(&self, d: &MumfordDivisor) -> Result<Vec<u8>> {
        Ok(self.coset_coords[self.coset[self.lookup(d)?]].clone())
    }

    fn lookup(&self, d: &MumfordDivisor) -> Result<usize> {
        self.index
            .get(d)
            .copied()
            .ok_or_else(|| Error::InvalidInput("divisor is not reduced".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2;
    use proptest::prelude::*;

    fn curve(q: u32, f: &str) -> Curve {
        Curve::parse(Field::prime(q).unwrap(), f).unwrap()
    }

    fn divisor_sum(a: &CurveDivisor, b: &CurveDivisor, sign: i64) -> CurveDivisor {
        let mut s = a.clone();
        for (p, e) in b {
            add_to_divisor(&mut s, p.clone(), sign * e);
        }
        s
    }

    #[test]
    fn elliptic_jacobian() {
        let c = curve(5, "x^3 - x");
        let t = JacobianTable::new(&c, JacobianLimits::default()).unwrap();
        assert_eq!(t.order(), 8);
        let z = zeta_data(&c);
        assert_eq!(z.order, 8);
        assert_eq!(z.point_counts, vec![8]);
        assert!(z.hasse_weil_ok);
        // J ≅ (Z/2)^2 × ... : the three 2-torsion points (x - e, 0)
        assert_eq!(t.two_rank(), 2);
    }

    #[test]
    fn quintic_jacobian_matches_zeta() {
        let c = curve(3, "x^5 - x");
        let t = JacobianTable::new(&c, JacobianLimits::default()).unwrap();
        let z = zeta_data(&c);
        assert_eq!(t.order() as u64, z.order);
        assert!(z.hasse_weil_ok);
    }

    #[test]
    fn caps_are_enforced() {
        let c = curve(11, "x^3 + x + 1");
        assert!(matches!(
            JacobianTable::new(&c, JacobianLimits::default()),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn cantor_functions_have_the_right_divisor() {
        let c = curve(3, "x^5 - x");
        let t = JacobianTable::new(&c, JacobianLimits::default()).unwrap();
        let els = t.elements();
        for (i, a) in els.iter().enumerate().step_by(3) {
            for b in els.iter().skip(i % 5).step_by(7) {
                let (s, func) = cantor_add(&c, a, b).unwrap();
                assert!(s.is_valid(&c));
                let lhs = divisor_sum(&a.to_divisor(&c).unwrap(), &b.to_divisor(&c).unwrap(), 1);
                let lhs = divisor_sum(&lhs, &s.to_divisor(&c).unwrap(), -1);
                assert_eq!(c.function_divisor(&func).unwrap(), lhs);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn group_laws(i in 0usize..1000, j in 0usize..1000, l in 0usize..1000) {
            let c = curve(5, "x^3 + 2x + 1");
            let t = JacobianTable::new(&c, JacobianLimits::default()).unwrap();
            let n = t.order();
            let (a, b, e) = (&t.elements()[i % n], &t.elements()[j % n], &t.elements()[l % n]);
            let ab = cantor_add(&c, a, b).unwrap().0;
            prop_assert_eq!(&ab, &cantor_add(&c, b, a).unwrap().0);
            let ab_e = cantor_add(&c, &ab, e).unwrap().0;
            let be = cantor_add(&c, b, e).unwrap().0;
            prop_assert_eq!(ab_e, cantor_add(&c, a, &be).unwrap().0);
            prop_assert!(cantor_add(&c, a, &negate(&c, a)).unwrap().0.is_zero());
            let ca = t.coords(a).unwrap();
            let cb = t.coords(b).unwrap();
            prop_assert_eq!(t.coords(&ab).unwrap(), f2::xor(&ca, &cb));
        }
    }
}

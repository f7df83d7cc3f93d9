//! Dense univariate polynomials over `F_q`: arithmetic, irreducibility,
//! enumeration and factorization.
//!
//! All operations take the coefficient field explicitly. The ordering on
//! [`Poly`] is the global enumeration order: by degree, then coefficient by
//! coefficient from the top down, so that among monic polynomials of one
//! degree the constant term varies fastest.

use std::cmp::Ordering;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, Sign};
use crate::sqrt::{tonelli_shanks, SqrtDomain};

/// Polynomial with coefficients in `F_q`, constant term first. The highest
/// stored coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Ord for Poly {
    fn cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Poly) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Complete factorization `unit * Π factor^multiplicity` into monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    /// Sorted by the polynomial order.
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self, k: &Field) -> Poly {
        self.factors.iter().fold(Poly::constant(self.unit), |acc, (f, m)| {
            (0..*m).fold(acc, |a, _| a.mul(f, k))
        })
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![FieldElement::ONE],
        }
    }

    /// The variable.
    pub fn x() -> Poly {
        Poly {
            coeffs: vec![FieldElement::ZERO, FieldElement::ONE],
        }
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: FieldElement, d: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; d + 1];
        coeffs[d] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// From integer coefficients (constant first), reduced into `F_p`.
    pub fn from_ints(k: &Field, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| k.from_int(c)).collect())
    }

    /// The `idx`-th polynomial of degree `< d` in enumeration order.
    pub fn from_index(k: &Field, d: usize, mut idx: u64) -> Poly {
        let q = k.q() as u64;
        let mut coeffs = Vec::with_capacity(d);
        for _ in 0..d {
            coeffs.push(FieldElement((idx % q) as u32));
            idx /= q;
        }
        Poly::from_coeffs(coeffs)
    }

    /// The `idx`-th monic polynomial of degree exactly `d`.
    pub fn monic_from_index(k: &Field, d: usize, idx: u64) -> Poly {
        let mut p = Poly::from_index(k, d, idx);
        p.coeffs.resize(d, FieldElement::ZERO);
        p.coeffs.push(FieldElement::ONE);
        p
    }

    /// Uniformly random polynomial of degree `< d`.
    pub fn random<R: Rng>(k: &Field, d: usize, rng: &mut R) -> Poly {
        Poly::from_coeffs((0..d).map(|_| FieldElement(rng.gen_range(0..k.q()))).collect())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    /// `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` standing in for `-∞`.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == FieldElement::ONE
    }

    pub fn add(&self, other: &Poly, k: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, k: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, k: &Field) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: FieldElement, k: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, k: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn square(&self, k: &Field) -> Poly {
        self.mul(self, k)
    }

    pub fn pow(&self, e: u32, k: &Field) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self, k))
    }

    /// Multiplies by `x^d`.
    pub fn shift(&self, d: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; d];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn divmod(&self, divisor: &Poly, k: &Field) -> Result<(Poly, Poly)> {
        let dd = divisor.deg().ok_or(Error::ZeroDivisor)?;
        let inv = k.inv(divisor.lc())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = k.mul(rem[i], inv);
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = k.sub(rem[i - dd + j], k.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly, k: &Field) -> Result<Poly> {
        Ok(self.divmod(divisor, k)?.1)
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly, k: &Field) -> Result<Poly> {
        let (q, r) = self.divmod(divisor, k)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Precondition("inexact polynomial division".into()))
        }
    }

    pub fn divides(&self, other: &Poly, k: &Field) -> bool {
        !self.is_zero() && other.rem(self, k).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn monic(&self, k: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(k.inv(self.lc()).expect("nonzero leading coefficient"), k)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, k: &Field) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, k).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(k)
    }

    /// `(g, s, t)` with `s*self + t*other = g = gcd(self, other)` monic.
    pub fn xgcd(&self, other: &Poly, k: &Field) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1, k).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1, k), k);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1, k), k);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = k.inv(r0.lc()).expect("nonzero");
        (r0.scale(inv, k), s0.scale(inv, k), t0.scale(inv, k))
    }

    pub fn mulmod(&self, other: &Poly, m: &Poly, k: &Field) -> Poly {
        self.mul(other, k).rem(m, k).expect("nonzero modulus")
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Poly, k: &Field) -> Result<Poly> {
        if m.deg().ok_or(Error::ZeroDivisor)? == 0 {
            return Err(Error::InvalidInput("powmod needs a nonconstant modulus".into()));
        }
        let mut base = self.rem(m, k)?;
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m, k);
            }
            base = base.mulmod(&base, m, k);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn derivative(&self, k: &Field) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| k.mul(c, k.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: FieldElement, k: &Field) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// Multiplicity of `pi` in `self` (nonzero `self`), with the cofactor.
    pub fn valuation(&self, pi: &Poly, k: &Field) -> (u32, Poly) {
        let mut v = 0;
        let mut rest = self.clone();
        if rest.is_zero() || pi.is_constant() {
            return (0, rest);
        }
        loop {
            let (q, r) = rest.divmod(pi, k).expect("nonzero");
            if !r.is_zero() {
                return (v, rest);
            }
            rest = q;
            v += 1;
        }
    }

    /// Resultant `Res(self, other)`.
    pub fn resultant(&self, other: &Poly, k: &Field) -> FieldElement {
        if self.is_zero() || other.is_zero() {
            return FieldElement::ZERO;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = FieldElement::ONE;
        loop {
            let m = a.deg().unwrap();
            let n = b.deg().unwrap();
            if n == 0 {
                return k.mul(acc, k.pow(b.lc(), m as u128));
            }
            let r = a.rem(&b, k).expect("nonzero");
            let Some(dr) = r.deg() else {
                return FieldElement::ZERO;
            };
            if (m * n) % 2 == 1 {
                acc = k.neg(acc);
            }
            acc = k.mul(acc, k.pow(b.lc(), (m - dr) as u128));
            a = b;
            b = r;
        }
    }

    /// Quadratic character of `self mod pi` in the residue field
    /// `F_q[x]/(pi)`, for monic irreducible `pi`: the character of the norm.
    pub fn character_mod(&self, pi: &Poly, k: &Field) -> Result<Sign> {
        let r = self.rem(pi, k)?;
        if r.is_zero() {
            return Err(Error::NotAUnit);
        }
        k.quadratic_character(pi.resultant(&r, k))
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self, k: &Field) -> Result<bool> {
        let d = match self.deg() {
            None | Some(0) => return Err(Error::InvalidInput("irreducibility of a constant".into())),
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        let f = self.monic(k);
        if f.coeffs[0].is_zero() {
            return Ok(false);
        }
        let q = k.q() as u128;
        let x = Poly::x();
        // frob[i] = x^(q^i) mod f
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(x.clone());
        for i in 1..=d {
            frob.push(frob[i - 1].powmod(q, &f, k)?);
        }
        if frob[d] != x {
            return Ok(false);
        }
        for r in prime_divisors(d) {
            let h = frob[d / r].sub(&x, k);
            if !f.gcd(&h, k).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p`-th root of a polynomial in `x^p` (characteristic `p`).
    fn pth_root(&self, k: &Field) -> Poly {
        let p = k.p() as usize;
        let e = (k.q() / k.p()) as u128;
        Poly::from_coeffs(self.coeffs.iter().step_by(p).map(|&c| k.pow(c, e)).collect())
    }

    /// Squarefree decomposition of a monic polynomial: `(g_i, i)` with
    /// `self = Π g_i^i`, each `g_i` squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self, k: &Field) -> Vec<(Poly, u32)> {
        let f = self.monic(k);
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let mut c = f.gcd(&f.derivative(k), k);
        let mut w = f.div_exact(&c, k).expect("gcd divides");
        let mut i = 1;
        while !w.is_constant() {
            let y = w.gcd(&c, k);
            let fac = w.div_exact(&y, k).expect("gcd divides");
            if !fac.is_constant() {
                out.push((fac, i));
            }
            c = c.div_exact(&y, k).expect("gcd divides");
            w = y;
            i += 1;
        }
        if !c.is_constant() {
            let p = k.p();
            for (g, m) in c.pth_root(k).squarefree_decomposition(k) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Canonical square-class data: `self ≡ ζ^e · m` modulo squares of
    /// `F_q(x)*`, `m` monic squarefree. Returns `(e == 1, m)`.
    pub fn squarefree_part(&self, k: &Field) -> Result<(bool, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let zeta = k.quadratic_character(self.lc())? == Sign::Minus;
        let m = self
            .squarefree_decomposition(k)
            .into_iter()
            .filter(|(_, i)| i % 2 == 1)
            .fold(Poly::one(), |acc, (g, _)| acc.mul(&g, k));
        Ok((zeta, m))
    }

    /// Full factorization with the default seed 0.
    pub fn factor(&self, k: &Field) -> Result<Factorization> {
        self.factor_seeded(k, 0)
    }

    /// Squarefree, distinct-degree, then Cantor–Zassenhaus equal-degree
    /// factorization with a deterministic generator.
    pub fn factor_seeded(&self, k: &Field, seed: u64) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (g, mult) in self.squarefree_decomposition(k) {
            for (h, d) in distinct_degree(&g, k) {
                for irr in equal_degree(&h, d, k, &mut rng) {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort();
        Ok(Factorization {
            unit: self.lc(),
            factors,
        })
    }

    /// The monic irreducible factors only.
    pub fn irreducible_factors(&self, k: &Field) -> Result<Vec<Poly>> {
        Ok(self.factor(k)?.factors.into_iter().map(|(p, _)| p).collect())
    }

    /// Exact square root in `F_q[x]`, if `self` is a square.
    pub fn sqrt(&self, k: &Field) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let c = k.sqrt(self.lc())?;
        let mut root = Poly::constant(c);
        for (g, m) in self.squarefree_decomposition(k) {
            if m % 2 == 1 {
                return None;
            }
            root = root.mul(&g.pow(m / 2, k), k);
        }
        Some(root)
    }

    /// Renders the polynomial in `var` using the literal grammar.
    pub fn render(&self, var: &str, k: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = k.render(c);
            let term = match (i, c == FieldElement::ONE) {
                (0, _) => cs,
                (1, true) => var.to_string(),
                (1, false) => format!("{cs}*{var}"),
                (_, true) => format!("{var}^{i}"),
                (_, false) => format!("{cs}*{var}^{i}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn distinct_degree(f: &Poly, k: &Field) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut g = f.monic(k);
    let x = Poly::x();
    let mut h = x.clone();
    let q = k.q() as u128;
    let mut i = 1;
    while g.deg().unwrap_or(0) >= 2 * i {
        h = h.powmod(q, &g, k).expect("nonconstant");
        let fac = g.gcd(&h.sub(&x, k), k);
        if !fac.is_one() {
            g = g.div_exact(&fac, k).expect("gcd divides");
            h = h.rem(&g, k).unwrap_or_else(|_| Poly::zero());
            out.push((fac, i));
        }
        i += 1;
    }
    if !g.is_constant() {
        let d = g.deg().unwrap();
        out.push((g, d));
    }
    out
}

fn equal_degree(f: &Poly, d: usize, k: &Field, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.deg().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let e = ((k.q() as u128).pow(d as u32) - 1) / 2;
    loop {
        let a = Poly::random(k, n, rng);
        if a.is_constant() {
            continue;
        }
        let b = a.powmod(e, f, k).expect("nonconstant").sub(&Poly::one(), k);
        let g = f.gcd(&b, k);
        if let Some(dg) = g.deg() {
            if dg > 0 && dg < n {
                let rest = f.div_exact(&g, k).expect("gcd divides");
                let mut out = equal_degree(&g, d, k, rng);
                out.extend(equal_degree(&rest, d, k, rng));
                return out;
            }
        }
    }
}

/// All monic irreducibles of degree exactly `d`, in enumeration order.
/// Cached per field and degree.
pub fn monic_irreducibles(k: &Field, d: usize) -> Arc<Vec<Poly>> {
    if let Some(v) = k.irreducible_cache().lock().unwrap().get(&d) {
        return v.clone();
    }
    let count = (k.q() as u64).pow(d as u32);
    let list: Vec<Poly> = (0..count)
        .into_par_iter()
        .filter(|&idx| d == 1 || idx % k.q() as u64 != 0)
        .map(|idx| Poly::monic_from_index(k, d, idx))
        .filter(|p| p.is_irreducible(k).expect("nonconstant"))
        .collect();
    let list = Arc::new(list);
    k.irreducible_cache().lock().unwrap().insert(d, list.clone());
    list
}

/// The residue field `F_q[x]/(pi)` for monic irreducible `pi`.
pub(crate) struct ResidueField<'a> {
    pub k: &'a Field,
    pub pi: &'a Poly,
}

impl SqrtDomain for ResidueField<'_> {
    type Elem = Poly;
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mulmod(b, self.pi, self.k)
    }
    fn order(&self) -> u128 {
        (self.k.q() as u128).pow(self.pi.deg().unwrap() as u32)
    }
    fn nonresidue(&self) -> Poly {
        let d = self.pi.deg().unwrap();
        (1..(self.k.q() as u64).pow(d as u32))
            .map(|i| Poly::from_index(self.k, d, i))
            .find(|a| a.character_mod(self.pi, self.k) == Ok(Sign::Minus))
            .expect("odd order field has non-squares")
    }
}

/// Square root of `a` in `F_q[x]/(pi)`, the smaller of `{r, -r}`.
pub fn sqrt_mod(a: &Poly, pi: &Poly, k: &Field) -> Result<Option<Poly>> {
    let a = a.rem(pi, k)?;
    let dom = ResidueField { k, pi };
    Ok(tonelli_shanks(&dom, &a).map(|r| {
        let nr = r.neg(k);
        r.min(nr)
    }))
}

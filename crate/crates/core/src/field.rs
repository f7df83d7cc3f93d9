//! Finite fields `F_q`, `q = p^n` odd, with table-driven arithmetic.
//!
//! Elements are stored as their index `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! where `(c_0, ..., c_{n-1})` are the coordinates in the power basis of the
//! defining modulus. For prime fields the index is the residue itself. The
//! index order is the lexicographic order used for every tie-break in the
//! crate: it compares coordinate vectors from the top coordinate down, so the
//! constant coordinate varies fastest.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default cap on the field size.
pub const DEFAULT_MAX_Q: u32 = 121;

/// A value of the quadratic character, or any other `{+1, -1}` symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bit(bit: u8) -> Sign {
        if bit & 1 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `0` for `+1`, `1` for `-1`: the additive (F_2) form.
    pub fn bit(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^e`.
    pub fn parity(e: u64) -> Sign {
        Sign::from_bit((e & 1) as u8)
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bit(self.bit() ^ rhs.bit())
    }
}

impl std::ops::MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, |a, b| a * b)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// An element of a finite field, meaningful only together with its [`Field`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The lexicographic index of the element.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Description of `F_q`: characteristic, degree and defining modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub n: usize,
    /// Monic modulus over `F_p`, constant coefficient first, length `n + 1`.
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn q(&self) -> u32 {
        self.p.pow(self.n as u32)
    }
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    chi: Vec<i8>,
    sqrt: Vec<Option<u32>>,
    zeta: u32,
    irreducibles: Mutex<HashMap<usize, Arc<Vec<Poly>>>>,
}

/// A finite field of odd characteristic. Cheap to clone; shareable across threads.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Coordinate arithmetic over `F_p` used only to build the tables.
fn coords_of(idx: u32, p: u32, n: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(n);
    let mut x = idx;
    for _ in 0..n {
        v.push(x % p);
        x /= p;
    }
    v
}

fn index_of(coords: &[u32], p: u32) -> u32 {
    coords.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn mul_coords(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let n = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * n];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    // reduce with the monic modulus
    for d in (n..2 * n).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (k, &m) in modulus[..n].iter().enumerate() {
            let sub = c * m as u64 % p as u64;
            prod[d - n + k] = (prod[d - n + k] + p as u64 - sub) % p as u64;
        }
    }
    prod[..n].iter().map(|&c| c as u32).collect()
}

/// Brute-force irreducibility over `F_p` for the (small) defining modulus:
/// a polynomial of degree `n` is irreducible iff it has no monic factor of
/// degree `1..=n/2`.
fn modulus_is_irreducible(modulus: &[u32], p: u32) -> bool {
    let n = modulus.len() - 1;
    if n == 1 {
        return true;
    }
    let reduce = |a: &[u64], m: &[u32]| -> Vec<u64> {
        // remainder of a modulo monic m over F_p
        let mut r: Vec<u64> = a.to_vec();
        let dm = m.len() - 1;
        while r.len() > dm {
            let c = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            if c != 0 {
                for (k, &mk) in m.iter().enumerate() {
                    let sub = c * mk as u64 % p as u64;
                    r[shift + k] = (r[shift + k] + p as u64 - sub) % p as u64;
                }
            }
            r.pop();
        }
        r
    };
    let a: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut m = coords_of(idx as u32, p, d);
            m.push(1);
            if reduce(&a, &m).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// `F_q` for an odd prime power `q`, with the default modulus.
    pub fn of_order(q: u32) -> Result<Field> {
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .ok_or_else(|| Error::InvalidField(format!("q = {q} is not a prime power")))?;
        let mut n = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            n += 1;
        }
        if r != 1 {
            return Err(Error::InvalidField(format!("q = {q} is not a prime power")));
        }
        Field::new(p, n, None)
    }

    /// `F_{p^n}` with an optional user-supplied monic modulus (constant first).
    /// Without one, the first monic irreducible of degree `n` in
    /// lexicographic order is used.
    pub fn new(p: u32, n: usize, modulus: Option<&[u32]>) -> Result<Field> {
        Field::with_max_q(p, n, modulus, DEFAULT_MAX_Q)
    }

    pub fn with_max_q(p: u32, n: usize, modulus: Option<&[u32]>, max_q: u32) -> Result<Field> {
        if !is_prime(p) || p == 2 {
            return Err(Error::InvalidField(format!("characteristic {p} is not an odd prime")));
        }
        if n == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = (p as u64)
            .checked_pow(n as u32)
            .filter(|&q| q <= max_q as u64)
            .ok_or_else(|| Error::CapExceeded(format!("q = {p}^{n} exceeds the configured cap {max_q}")))?
            as u32;
        let modulus: Vec<u32> = match modulus {
            Some(m) => {
                if m.len() != n + 1 || m[n] != 1 {
                    return Err(Error::InvalidField(format!("modulus must be monic of degree {n}")));
                }
                let m: Vec<u32> = m.iter().map(|&c| c % p).collect();
                if n > 1 && !modulus_is_irreducible(&m, p) {
                    return Err(Error::InvalidField("modulus is not irreducible".into()));
                }
                m
            }
            None if n == 1 => vec![0, 1],
            None => {
                let count = (p as u64).pow(n as u32);
                (0..count)
                    .map(|idx| {
                        let mut m = coords_of(idx as u32, p, n);
                        m.push(1);
                        m
                    })
                    .find(|m| modulus_is_irreducible(m, p))
                    .expect("irreducible polynomials exist in every degree")
            }
        };
        let qs = q as usize;
        let coords: Vec<Vec<u32>> = (0..q).map(|i| coords_of(i, p, n)).collect();
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..qs {
            for b in a..qs {
                let s: Vec<u32> = coords[a].iter().zip(&coords[b]).map(|(x, y)| (x + y) % p).collect();
                let sum = index_of(&s, p);
                let prod = if n == 1 {
                    ((a as u64 * b as u64) % p as u64) as u32
                } else {
                    index_of(&mul_coords(&coords[a], &coords[b], &modulus, p), p)
                };
                add[a * qs + b] = sum;
                add[b * qs + a] = sum;
                mul[a * qs + b] = prod;
                mul[b * qs + a] = prod;
            }
        }
        let mut neg = vec![0u32; qs];
        let mut inv = vec![0u32; qs];
        for a in 0..qs {
            for b in 0..qs {
                if add[a * qs + b] == 0 {
                    neg[a] = b as u32;
                }
                if mul[a * qs + b] == 1 {
                    inv[a] = b as u32;
                }
            }
        }
        let inner = Inner {
            spec: FieldSpec { p, n, modulus },
            q,
            add,
            mul,
            neg,
            inv,
            chi: vec![0; qs],
            sqrt: vec![None; qs],
            zeta: 0,
            irreducibles: Mutex::new(HashMap::new()),
        };
        let mut field = Field(Arc::new(inner));
        // character, square roots and zeta through the generic routines
        let chi: Vec<i8> = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    let r = field.pow(FieldElement(a), ((q - 1) / 2) as u128);
                    if r == FieldElement::ONE {
                        1
                    } else {
                        -1
                    }
                }
            })
            .collect();
        let zeta = (1..q).find(|&a| chi[a as usize] == -1).expect("odd q has non-squares");
        {
            let inner = Arc::get_mut(&mut field.0).expect("field not yet shared");
            inner.chi = chi;
            inner.zeta = zeta;
        }
        let sqrt: Vec<Option<u32>> = (0..q)
            .map(|a| {
                crate::sqrt::tonelli_shanks(&field, &FieldElement(a)).map(|r| {
                    let nr = field.neg(r);
                    r.min(nr).0
                })
            })
            .collect();
        Arc::get_mut(&mut field.0).expect("field not yet shared").sqrt = sqrt;
        Ok(field)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn degree(&self) -> usize {
        self.0.spec.n
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.0.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::InvalidInput(format!(
                "{index} is not an element index of F_{}",
                self.0.q
            )))
        }
    }

    /// Embeds an integer via `F_p`, reducing mod `p`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.0.spec.p as i64) as u32)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElement> {
        let p = self.0.spec.p;
        if coords.len() > self.0.spec.n {
            return Err(Error::InvalidInput(format!(
                "element has {} coordinates but the field degree is {}",
                coords.len(),
                self.0.spec.n
            )));
        }
        let reduced: Vec<u32> = coords.iter().map(|c| c % p).collect();
        Ok(FieldElement(index_of(&reduced, p)))
    }

    pub fn coords(&self, a: FieldElement) -> Vec<u32> {
        coords_of(a.0, self.0.spec.p, self.0.spec.n)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.0.add[(a.0 * self.0.q + b.0) as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.0.mul[(a.0 * self.0.q + b.0) as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.0.neg[a.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::ZeroDivisor)
        } else {
            Ok(FieldElement(self.0.inv[a.0 as usize]))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u128) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The quadratic character `a^((q-1)/2)`.
    pub fn quadratic_character(&self, a: FieldElement) -> Result<Sign> {
        match self.0.chi[a.0 as usize] {
            0 => Err(Error::CharacterAtZero),
            1 => Ok(Sign::Plus),
            _ => Ok(Sign::Minus),
        }
    }

    /// Square root with the lexicographically smaller root of `{r, -r}`;
    /// `None` for non-squares.
    pub fn sqrt(&self, a: FieldElement) -> Option<FieldElement> {
        self.0.sqrt[a.0 as usize].map(FieldElement)
    }

    /// The first non-square in lexicographic order.
    pub fn canonical_nonsquare(&self) -> FieldElement {
        FieldElement(self.0.zeta)
    }

    /// `(-1)^((q^d - 1)/2)`: the character of `-1` in `F_{q^d}`.
    pub fn minus_one_character(&self, d: usize) -> Sign {
        // (q^d - 1)/2 is odd iff q^d = 3 mod 4 iff q = 3 mod 4 and d odd
        if self.0.q % 4 == 3 && d % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Renders an element in the literal syntax: decimal for prime fields,
    /// `[c0,c1,...]` otherwise.
    pub fn render(&self, a: FieldElement) -> String {
        if self.0.spec.n == 1 {
            a.0.to_string()
        } else {
            let c: Vec<String> = self.coords(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", c.join(","))
        }
    }

    pub(crate) fn irreducible_cache(&self) -> &Mutex<HashMap<usize, Arc<Vec<Poly>>>> {
        &self.0.irreducibles
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let k = f5();
        let e = |v| k.from_int(v);
        assert_eq!(k.mul(e(2), e(3)), e(1));
        assert_eq!(k.add(e(4), e(4)), e(3));
        assert_eq!(k.div(e(1), e(0)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn f9_default_modulus_is_u2_plus_1() {
        let k = Field::of_order(9).unwrap();
        assert_eq!(k.spec().modulus, vec![1, 0, 1]);
        let u = k.from_coords(&[0, 1]).unwrap();
        assert_eq!(k.mul(u, u), k.from_int(2));
    }

    #[test]
    fn character_examples() {
        let k = f5();
        assert_eq!(k.quadratic_character(k.from_int(4)), Ok(Sign::Plus));
        assert_eq!(k.quadratic_character(k.from_int(2)), Ok(Sign::Minus));
        assert_eq!(k.quadratic_character(k.from_int(1)), Ok(Sign::Plus));
        assert_eq!(k.quadratic_character(k.from_int(0)), Err(Error::CharacterAtZero));
    }

    #[test]
    fn sqrt_examples() {
        let k = f5();
        assert_eq!(k.sqrt(k.from_int(4)), Some(k.from_int(2)));
        assert_eq!(k.sqrt(k.from_int(0)), Some(k.from_int(0)));
        assert_eq!(k.sqrt(k.from_int(3)), None);
    }

    #[test]
    fn canonical_nonsquares() {
        for (p, z) in [(5, 2), (3, 2), (7, 3)] {
            assert_eq!(Field::prime(p).unwrap().canonical_nonsquare().index(), z);
        }
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::of_order(15).is_err());
        assert!(matches!(Field::of_order(125 * 5), Err(Error::CapExceeded(_))));
        assert!(Field::new(3, 2, Some(&[2, 0, 1])).is_err()); // u^2 - 1 is reducible
        assert!(Field::new(3, 2, Some(&[2, 1, 1])).is_ok());
    }

    fn all_small_fields() -> Vec<Field> {
        [3u32, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49]
            .iter()
            .map(|&q| Field::of_order(q).unwrap())
            .collect()
    }

    #[test]
    fn character_is_multiplicative_exhaustive() {
        for k in all_small_fields() {
            for a in k.elements().skip(1) {
                for b in k.elements().skip(1) {
                    assert_eq!(
                        k.quadratic_character(k.mul(a, b)).unwrap(),
                        k.quadratic_character(a).unwrap() * k.quadratic_character(b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn character_agrees_with_sqrt_and_counts() {
        for k in all_small_fields() {
            let mut squares = 0;
            for a in k.elements().skip(1) {
                let is_sq = k.quadratic_character(a).unwrap() == Sign::Plus;
                assert_eq!(is_sq, k.sqrt(a).is_some(), "{:?} {}", k, a.index());
                if let Some(r) = k.sqrt(a) {
                    assert_eq!(k.mul(r, r), a);
                    assert!(r <= k.neg(r));
                }
                squares += is_sq as u32;
            }
            assert_eq!(squares, (k.q() - 1) / 2);
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for k in all_small_fields() {
            for _ in 0..1000 {
                let [a, b, c] = [0; 3].map(|_| FieldElement(rng.gen_range(0..k.q())));
                assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                if !b.is_zero() {
                    assert_eq!(k.mul(k.div(a, b).unwrap(), b), a);
                }
            }
        }
    }
}

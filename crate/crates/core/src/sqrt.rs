//! Tonelli–Shanks square roots over any finite field given as a
//! [`SqrtDomain`]: the base field `F_q` and residue rings `F_q[x]/(π)`.

use crate::field::{Field, FieldElement};

pub(crate) trait SqrtDomain {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Number of elements of the field.
    fn order(&self) -> u128;
    fn nonresidue(&self) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl SqrtDomain for Field {
    type Elem = FieldElement;
    fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }
    fn one(&self) -> FieldElement {
        FieldElement::ONE
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        Field::mul(self, *a, *b)
    }
    fn order(&self) -> u128 {
        self.q() as u128
    }
    fn nonresidue(&self) -> FieldElement {
        self.canonical_nonsquare()
    }
}

/// Some square root of `a`, or `None` when `a` is a non-square.
pub(crate) fn tonelli_shanks<D: SqrtDomain>(d: &D, a: &D::Elem) -> Option<D::Elem> {
    if *a == d.zero() {
        return Some(d.zero());
    }
    let q = d.order();
    if d.pow(a, (q - 1) / 2) != d.one() {
        return None;
    }
    let mut s = 0u32;
    let mut t = q - 1;
    while t.is_multiple_of(2) {
        t /= 2;
        s += 1;
    }
    let mut c = d.pow(&d.nonresidue(), t);
    let mut x = d.pow(a, t.div_ceil(2));
    let mut b = d.pow(a, t);
    let mut m = s;
    while b != d.one() {
        let mut i = 0;
        let mut b2 = b.clone();
        while b2 != d.one() {
            b2 = d.mul(&b2, &b2);
            i += 1;
        }
        let mut g = c.clone();
        for _ in 0..(m - i - 1) {
            g = d.mul(&g, &g);
        }
        x = d.mul(&x, &g);
        c = d.mul(&g, &g);
        b = d.mul(&b, &c);
        m = i;
    }
    Some(x)
}

use evenpoint::hyperelliptic::{
    cantor_add, negate, CurveFunction, CurvePlace, JacobianLimits, JacobianTable, MumfordDivisor,
};
use evenpoint::parse::parse_poly;
use evenpoint::{Curve, Field, HyperellipticModel, Poly, Sign};

fn curve(q: u32, f: &str) -> Curve {
    Curve::parse(Field::of_order(q).unwrap(), f).unwrap()
}

fn px(c: &Curve, s: &str) -> Poly {
    parse_poly(s, "x", c.field()).unwrap()
}

fn fun(c: &Curve, s: &str) -> CurveFunction {
    CurveFunction::parse(s, c).unwrap()
}

#[test]
fn place_types() {
    let c = curve(5, "x^3 - x");
    assert_eq!(c.places_over(&px(&c, "x")), vec![CurvePlace::Ramified(px(&c, "x"))]);
    let split = c.places_over(&px(&c, "x - 2"));
    assert_eq!(split.len(), 2);
    assert!(split.iter().all(|p| p.degree() == 1));

    // f(2) = 13 = 3 is a non-square mod 5
    let c = curve(5, "x^3 + 2*x + 1");
    let inert = c.places_over(&px(&c, "x - 2"));
    assert_eq!(inert, vec![CurvePlace::Inert(px(&c, "x + 3"))]);
    assert_eq!(inert[0].degree(), 2);
}

#[test]
fn orders_at_infinity_and_ramified_places() {
    for (q, f) in [(5, "x^3 - x"), (3, "x^5 - x + 1"), (3, "x^7 - x + 1")] {
        let c = curve(q, f);
        let g = c.genus() as i64;
        assert_eq!(c.ord(&CurvePlace::Infinite, &fun(&c, "x")).unwrap(), -2);
        assert_eq!(c.ord(&CurvePlace::Infinite, &fun(&c, "y")).unwrap(), -(2 * g + 1));
    }
    let c = curve(5, "x^3 - x");
    assert_eq!(c.ord(&CurvePlace::Ramified(px(&c, "x")), &fun(&c, "x")).unwrap(), 2);
}

#[test]
fn divisors_of_basic_functions() {
    let c = curve(5, "x^3 + 2*x + 1");
    let pi = px(&c, "x + 3");
    let d = c.function_divisor(&CurveFunction::from_poly(pi.clone())).unwrap();
    assert_eq!(d.len(), 2);
    assert_eq!(d[&CurvePlace::Inert(pi)], 1);
    assert_eq!(d[&CurvePlace::Infinite], -2);

    let c = curve(5, "x^3 - x");
    let d = c.function_divisor(&fun(&c, "x")).unwrap();
    assert_eq!(d[&CurvePlace::Ramified(px(&c, "x"))], 2);
    assert_eq!(d[&CurvePlace::Infinite], -2);

    let d = c.function_divisor(&fun(&c, "y")).unwrap();
    assert_eq!(d[&CurvePlace::Infinite], -3);
    for pi in c.ramified_factors() {
        assert_eq!(d[&CurvePlace::Ramified(pi.clone())], 1);
    }
    assert_eq!(d.len(), 4);
}

#[test]
fn legendre_examples() {
    let c = curve(5, "x^3 - x");
    let zeta = CurveFunction::constant(c.field().canonical_nonsquare());
    for p in c.places_up_to(3) {
        let expected = if p.degree() % 2 == 0 { Sign::Plus } else { Sign::Minus };
        assert_eq!(c.legendre(&zeta, &p).unwrap(), expected, "{}", p.render(c.field()));
    }
    let h = fun(&c, "(x^2 + y + 1) / (x + 2)");
    let sq = h.mul(&h, &c);
    for p in c.places_up_to(2) {
        if c.ord(&p, &sq).unwrap() == 0 {
            assert_eq!(c.legendre(&sq, &p).unwrap(), Sign::Plus);
        }
    }
    let p = c.parse_place("x+2@2").unwrap();
    assert_eq!(c.legendre(&fun(&c, "x - 2"), &p).unwrap(), Sign::Plus);
}

#[test]
fn cantor_identity_and_inverse() {
    let c = curve(3, "x^5 - x + 1");
    let jac = JacobianTable::new(&c, JacobianLimits::default()).unwrap();
    for d in jac.elements() {
        let (s, h) = cantor_add(&c, d, &MumfordDivisor::zero()).unwrap();
        assert_eq!(&s, d);
        assert_eq!(h, CurveFunction::one());
        let (z, _) = cantor_add(&c, d, &negate(&c, d)).unwrap();
        assert!(z.is_zero());
    }
}

#[test]
fn jacobian_tables() {
    let c = curve(5, "x^3 - x");
    let jac = JacobianTable::new(&c, JacobianLimits::default()).unwrap();
    assert_eq!(jac.order(), 8);
    assert!(jac.contains(&MumfordDivisor::zero()));
    assert!(jac.is_two_divisible(&MumfordDivisor::zero()).unwrap());

    // |2J| = |J| / |J[2]|, and J[2] has the same order as J/2J
    let doubled = jac
        .elements()
        .iter()
        .filter(|d| jac.is_two_divisible(d).unwrap())
        .count();
    assert_eq!(doubled, jac.order() >> jac.two_rank());

    let c = curve(3, "x^5 - x + 1");
    let jac = JacobianTable::new(&c, JacobianLimits::default()).unwrap();
    assert_eq!(jac.order() % 2, 1);
    assert!(jac.elements().iter().all(|d| jac.is_two_divisible(d).unwrap()));
}

#[test]
fn place_classes() {
    let c = curve(5, "x^3 + 2*x + 1");
    let m = HyperellipticModel::new(c.clone()).unwrap();
    let (j, _) = m.place_class(&CurvePlace::Infinite).unwrap();
    assert!(j.is_zero());
    let (j, _) = m.place_class(&CurvePlace::Inert(px(&c, "x + 3"))).unwrap();
    assert!(j.is_zero());

    let c = curve(5, "x^3 - x");
    let m = HyperellipticModel::new(c.clone()).unwrap();
    let p = c.parse_place("x+3@1").unwrap();
    let (j, _) = m.place_class(&p).unwrap();
    assert_eq!(
        j,
        MumfordDivisor {
            u: px(&c, "x + 3"),
            v: px(&c, "1")
        }
    );
    assert_eq!(p.degree(), 1);
}

#[test]
fn extraction_at_even_places() {
    let c = curve(5, "x^3 + 2*x + 1");
    let m = HyperellipticModel::new(c.clone()).unwrap();
    let inert = CurvePlace::Inert(px(&c, "x + 3"));
    assert!(m.is_even_place(&inert).unwrap());
    let l = m.lambda_extract(&inert).unwrap();
    assert_eq!(c.odd_support(&l).unwrap(), vec![inert]);

    for p in c.places_up_to(4) {
        if m.is_even_place(&p).unwrap() {
            let l = m.lambda_extract(&p).unwrap();
            assert_eq!(c.odd_support(&l).unwrap(), vec![p]);
        }
    }
}

#[test]
fn ramified_places_need_extraction() {
    let c = curve(5, "x^3 - x");
    let pi = px(&c, "x");
    // π itself has even order at the ramified place
    assert!(c.odd_support(&CurveFunction::from_poly(pi.clone())).unwrap().is_empty());
    let m = HyperellipticModel::new(c.clone()).unwrap();
    let p = CurvePlace::Ramified(pi);
    if m.is_even_place(&p).unwrap() {
        assert_eq!(c.odd_support(&m.lambda_extract(&p).unwrap()).unwrap(), vec![p]);
    } else {
        assert!(m.lambda_extract(&p).is_err());
    }
}

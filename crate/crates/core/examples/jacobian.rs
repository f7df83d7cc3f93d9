//! Cantor arithmetic, the zeta function and the structure of J/2J.

use evenpoint::hyperelliptic::{cantor_add, negate, zeta_data, JacobianLimits, JacobianTable};
use evenpoint::{Curve, Field};

fn main() -> evenpoint::Result<()> {
    let c = Curve::parse(Field::of_order(5)?, "x^5 + x + 3")?;
    let k = c.field().clone();
    let z = zeta_data(&c);
    println!(
        "N_1.. = {:?}  L coefficients {:?}  |J| = {}  Hasse-Weil {}",
        z.point_counts, z.l_coefficients, z.order, z.hasse_weil_ok
    );

    let jac = JacobianTable::new(&c, JacobianLimits::default())?;
    println!("|J(F_5)| = {}  dim J/2J = {}", jac.order(), jac.two_rank());
    for b in jac.basis() {
        println!("  J/2J basis: {}", b.render(&k));
    }

    let d1 = &jac.elements()[1];
    let d2 = &jac.elements()[jac.order() / 2];
    let (s, h) = cantor_add(&c, d1, d2)?;
    println!(
        "{} + {} = {}  via h = {}",
        d1.render(&k),
        d2.render(&k),
        s.render(&k),
        h.render(&k)
    );
    let (zero, _) = cantor_add(&c, &s, &negate(&c, &s))?;
    println!("D - D = {}", zero.render(&k));
    println!(
        "coords of sum {:?}, 2-divisible: {}",
        jac.coords(&s)?,
        jac.is_two_divisible(&s)?
    );
    if let Some(half) = jac.half(&s)? {
        println!("half: {}", half.render(&k));
    }
    Ok(())
}

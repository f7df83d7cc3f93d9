//! Places, functions, divisors and residue symbols on y^2 = x^5 - x + 1 over F_3.

use evenpoint::hyperelliptic::{divisor_degree, CurveFunction};
use evenpoint::{Curve, Field};

fn main() -> evenpoint::Result<()> {
    let c = Curve::parse(Field::of_order(3)?, "x^5 - x + 1")?;
    let k = c.field().clone();
    println!("genus {}, f = {}", c.genus(), c.render());
    for d in 1..=3 {
        let ps: Vec<String> = c.places_of_degree(d).iter().map(|p| p.render(&k)).collect();
        println!("degree {d}: {} places  {}", ps.len(), ps.join("  "));
    }

    let h = CurveFunction::parse("(y + x^2) / (x + 1)", &c)?;
    let div = c.function_divisor(&h)?;
    let parts: Vec<String> = div.iter().map(|(p, n)| format!("{n:+}[{}]", p.render(&k))).collect();
    println!(
        "div({}) = {}  (degree {})",
        h.render(&k),
        parts.join(" "),
        divisor_degree(&div)
    );

    let g = CurveFunction::parse("y + x", &c)?;
    for p in c.places_up_to(2) {
        if c.ord(&p, &g)? % 2 == 0 {
            println!(
                "  ({} / {}) = {:+}",
                g.render(&k),
                p.render(&k),
                c.legendre(&g, &p)?.to_i8()
            );
        }
    }
    let sq = g.mul(&g, &c).mul(&CurveFunction::parse("x^2", &c)?, &c);
    println!("is_square({}) = {}", sq.render(&k), c.is_square(&sq));
    let h = g.mul(&CurveFunction::parse("(x+1)^2", &c)?, &c);
    println!("class of {} = {}", h.render(&k), c.class_representative(&h)?.render(&k));
    Ok(())
}

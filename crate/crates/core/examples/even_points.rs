//! The five evenness criteria, place by place.

use evenpoint::squares::CurveModel;
use evenpoint::{Curve, Field, HyperellipticModel, RationalModel, Squares};

fn table<M: CurveModel>(sq: &Squares<M>, d: usize) -> evenpoint::Result<()> {
    println!("  {:<28} 2Pic  odd  S=D  dims  idx2", "place");
    for p in sq.model().places_up_to(d) {
        let r = sq.even_criteria_report(&p)?;
        let v = r.values().map(|b| if b { "yes" } else { "no" });
        println!(
            "  {:<28} {:<5} {:<4} {:<4} {:<5} {}",
            r.place, v[0], v[1], v[2], v[3], v[4]
        );
        assert!(r.agree());
    }
    Ok(())
}

fn main() -> evenpoint::Result<()> {
    let p1 = Squares::new(RationalModel::new(Field::of_order(3)?), 6)?;
    println!("P^1 over F_3");
    table(&p1, 2)?;
    let c = Curve::parse(Field::of_order(3)?, "x^5 - x + 1")?;
    let sq = Squares::new(HyperellipticModel::new(c)?, 6)?;
    println!("y^2 = x^5 - x + 1 over F_3");
    table(&sq, 2)?;
    Ok(())
}

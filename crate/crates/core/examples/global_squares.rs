//! A class is trivial at every even place exactly when it lies in Sing(X).

use evenpoint::squares::CurveModel;
use evenpoint::{Curve, Field, HyperellipticModel, RationalModel, Squares};

fn main() -> evenpoint::Result<()> {
    let sq = Squares::new(RationalModel::new(Field::of_order(5)?), 6)?;
    let m = sq.model();
    for s in ["2", "t", "t^2+2", "2*(t+1)^2", "t*(t+1)"] {
        let l = m.parse_class(s)?;
        println!(
            "P^1/F_5  {s:<10} in Sing: {:<5} {:?}",
            sq.sing_x().contains(m, &l),
            sq.gst_check(&l, 4)?
        );
    }

    let sq = Squares::new(
        HyperellipticModel::new(Curve::parse(Field::of_order(5)?, "x^3 - x")?)?,
        6,
    )?;
    let m = sq.model();
    let even = sq.even_places(4)?;
    for s in ["2", "x", "x+1", "y", "x^2+2"] {
        let l = m.parse_class(s)?;
        println!(
            "y^2=x^3-x  {s:<6} in Sing: {:<5} {:?}",
            sq.sing_x().contains(m, &l),
            sq.gst_check_on(&l, &even)
        );
    }
    Ok(())
}

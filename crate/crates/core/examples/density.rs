//! Frequencies of prescribed Legendre symbols and of even places among degree-d places.

use evenpoint::squares::{CurveModel, DensityMode};
use evenpoint::{Curve, Field, HyperellipticModel, RationalModel, Sign, Squares};

fn main() -> evenpoint::Result<()> {
    let sq = Squares::new(RationalModel::new(Field::of_order(5)?), 6)?;
    let m = sq.model();
    let classes = vec![m.parse_class("t")?, m.parse_class("t+1")?, m.parse_class("t^2+2")?];
    for d in 3..=5 {
        let r = sq.hecke_density_experiment(
            &classes,
            &[Sign::Plus, Sign::Minus, Sign::Plus],
            d,
            DensityMode::Exhaustive,
        )?;
        println!(
            "P^1/F_5 degree {d}: {}/{} = {:.4} (expected {:.4})",
            r.count, r.total, r.fraction, r.expected
        );
    }
    let r = sq.hecke_density_experiment(&classes, &[Sign::Plus; 3], 8, DensityMode::Sample { n: 2000, seed: 7 })?;
    println!(
        "P^1/F_5 degree 8, sampled: {:.4} (expected {:.4})",
        r.fraction, r.expected
    );

    let c = Curve::parse(Field::of_order(3)?, "x^5 - x")?;
    let sq = Squares::new(HyperellipticModel::new(c)?, 6)?;
    for d in [5, 6] {
        let r = sq.even_density_experiment(d, DensityMode::Exhaustive)?;
        println!(
            "y^2 = x^5 - x, even places of degree {d}: {}/{} = {:.4}",
            r.count, r.total, r.fraction
        );
    }
    Ok(())
}

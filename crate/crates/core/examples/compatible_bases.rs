//! Points dual to a basis of Sing(X), and classes dual to a set of points.

use evenpoint::squares::CurveModel;
use evenpoint::{Curve, Field, HyperellipticModel, RationalModel, Squares};

fn run<M: CurveModel>(sq: &Squares<M>) -> evenpoint::Result<()> {
    let m = sq.model();
    let basis = sq.sing_x().basis.clone();
    let points = sq.compatible_points_for_classes(&basis, 6, 0)?;
    let pm = sq.pairing_matrix(&points, &basis)?;
    for (p, row) in points.iter().zip(&pm.entries) {
        let signs: Vec<String> = row.iter().map(|s| format!("{:+}", s.to_i8())).collect();
        println!("  {:<30} {}", m.render_place(p), signs.join(" "));
    }
    println!("  compatible: {}", pm.is_compatible);
    let back = sq.compatible_classes_for_points(&points)?;
    println!(
        "  dual classes: {}",
        back.iter().map(|c| m.render_class(c)).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}

fn main() -> evenpoint::Result<()> {
    println!("P^1 over F_7");
    run(&Squares::new(RationalModel::new(Field::of_order(7)?), 6)?)?;
    println!("y^2 = x^3 - x over F_5");
    run(&Squares::new(
        HyperellipticModel::new(Curve::parse(Field::of_order(5)?, "x^3 - x")?)?,
        6,
    )?)?;
    Ok(())
}

//! Sing(X \ S) and Δ(X \ S) on P^1 over F_5 and on y^2 = x^3 - x over F_5.

use evenpoint::squares::CurveModel;
use evenpoint::{Curve, Field, HyperellipticModel, RationalModel, Squares};

fn show<M: CurveModel>(sq: &Squares<M>, removed: &[&str]) -> evenpoint::Result<()> {
    let m = sq.model();
    let ps = removed
        .iter()
        .map(|s| m.parse_place(s))
        .collect::<evenpoint::Result<Vec<_>>>()?;
    let sing = sq.sing_subgroup(&ps)?;
    println!("  Sing(X \\ {removed:?}) = <{}>", sing.render(m).join(", "));
    if !ps.is_empty() {
        let delta = sq.delta_subgroup(&ps)?;
        println!("  Delta(X \\ {removed:?}) = <{}>", delta.render(m).join(", "));
    }
    Ok(())
}

fn main() -> evenpoint::Result<()> {
    let k = Field::of_order(5)?;
    let p1 = Squares::new(RationalModel::new(k.clone()), 6)?;
    println!("P^1 over F_5");
    show(&p1, &[])?;
    show(&p1, &["t"])?;
    show(&p1, &["t^2+2"])?;
    show(&p1, &["t", "t+1"])?;

    let e = Squares::new(HyperellipticModel::new(Curve::parse(k, "x^3 - x")?)?, 6)?;
    println!("y^2 = x^3 - x over F_5");
    show(&e, &[])?;
    show(&e, &["x+3@1"])?;
    show(&e, &["x^2+2"])?;
    Ok(())
}

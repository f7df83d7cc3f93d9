//! Legendre symbols, quadratic reciprocity and the Hilbert product formula on P^1.

use evenpoint::p1::{hilbert, hilbert_product_check, legendre, reciprocity_check, PlaceP1};
use evenpoint::parse::{parse_poly, parse_rational};
use evenpoint::Field;

fn main() -> evenpoint::Result<()> {
    let k = Field::of_order(5)?;
    let l = parse_rational("t^2 + 4*t + 1", "t", &k)?;
    for s in ["t", "t+1", "t^2+2*t+3", "inf"] {
        let p = PlaceP1::parse(s, &k)?;
        println!("(t^2+4t+1 / {s}) = {:+}", legendre(&l, &p, &k)?.to_i8());
    }

    let f = parse_poly("t^3 + t + 1", "t", &k)?;
    let g = parse_poly("t^2 + 2", "t", &k)?;
    let r = reciprocity_check(&f, &g, &k)?;
    println!("(f/g) (g/f) = {:+}, predicted {:+}", r.lhs.to_i8(), r.rhs.to_i8());

    let a = parse_rational("t^2 + 2", "t", &k)?;
    let b = parse_rational("2*t / (t + 3)", "t", &k)?;
    for s in ["t", "t+3", "t^2+2", "inf"] {
        let p = PlaceP1::parse(s, &k)?;
        println!("(a, b)_{s} = {:+}", hilbert(&a, &b, &p, &k)?.to_i8());
    }
    let (prod, ok) = hilbert_product_check(&a, &b, &k)?;
    println!(
        "product over all places = {:+} ({})",
        prod.to_i8(),
        if ok { "ok" } else { "broken" }
    );
    Ok(())
}

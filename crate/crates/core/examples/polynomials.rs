//! Factoring over F_q, square-free parts and residue characters.

use evenpoint::parse::parse_poly;
use evenpoint::poly::monic_irreducibles;
use evenpoint::Field;

fn main() -> evenpoint::Result<()> {
    let k = Field::of_order(5)?;
    let f = parse_poly("t^7 + 3*t^5 + t^4 + 2*t^2 + 4", "t", &k)?;
    let fac = f.factor(&k)?;
    let parts: Vec<String> = fac
        .factors
        .iter()
        .map(|(p, e)| format!("({})^{e}", p.render("t", &k)))
        .collect();
    println!("{} = {} * {}", f.render("t", &k), k.render(fac.unit), parts.join(" "));

    let g = parse_poly("(t+1)^3 * (t^2+2)", "t", &k)?;
    for (p, e) in g.squarefree_decomposition(&k) {
        println!("square-free layer {e}: {}", p.render("t", &k));
    }

    let pi = parse_poly("t^2 + 2", "t", &k)?;
    let h = parse_poly("t + 3", "t", &k)?;
    println!("chi_pi(t+3) = {:+}", h.character_mod(&pi, &k)?.to_i8());
    println!("resultant(t+3, t^2+2) = {}", k.render(h.resultant(&pi, &k)));

    for d in 1..=4 {
        println!("monic irreducibles of degree {d}: {}", monic_irreducibles(&k, d).len());
    }
    Ok(())
}

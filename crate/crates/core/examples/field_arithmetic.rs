//! Arithmetic in F_9 = F_3[u]/(u^2 + 1) and F_25 with its default modulus.
//! Elements of extension fields print as coordinate vectors, constant term first.

use evenpoint::Field;

fn main() -> evenpoint::Result<()> {
    let f9 = Field::new(3, 2, Some(&[1, 0, 1]))?;
    let u = f9.from_coords(&[0, 1])?;
    let a = f9.from_coords(&[2, 1])?;
    println!("F_{}: u^2 = {}", f9.q(), f9.render(f9.mul(u, u)));
    println!("(u+2)^-1 = {}", f9.render(f9.inv(a)?));
    println!("(u+2)^8 = {}", f9.render(f9.pow(a, 8)));
    for x in f9.elements() {
        let root = f9.sqrt(x).map(|r| f9.render(r)).unwrap_or_else(|| "-".into());
        println!(
            "  {:>6}  chi = {:+}  sqrt = {}",
            f9.render(x),
            f9.quadratic_character(x).map(|s| s.to_i8()).unwrap_or(0),
            root
        );
    }

    let f25 = Field::of_order(25)?;
    let n = f25.canonical_nonsquare();
    println!("F_25 nonsquare: {}  coords {:?}", f25.render(n), f25.coords(n));
    Ok(())
}

//! The even-point graph on P^1 over F_3 in JSON, DOT and CSV.

use evenpoint::graph::{EvenGraph, ExportFormat};
use evenpoint::{Field, RationalModel, Squares};

fn main() -> evenpoint::Result<()> {
    let sq = Squares::new(RationalModel::new(Field::of_order(3)?), 6)?;
    let g = EvenGraph::build(&sq, 2)?;
    println!(
        "{} vertices, {} edges, symmetric {}",
        g.len(),
        g.edge_count(),
        g.is_symmetric()
    );
    println!("independent of the choice of lambda: {}", g.choice_invariant(&sq)?);
    for f in [ExportFormat::Json, ExportFormat::Dot, ExportFormat::Csv] {
        println!("{}", g.export(sq.model(), f));
    }
    Ok(())
}

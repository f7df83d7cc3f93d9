//! Non-neighbors, common neighbors and the diameter-2 property.

use evenpoint::graph::{common_neighbors, diameter_report, edge_criteria_agree, non_neighbor_witness, EvenGraph};
use evenpoint::squares::CurveModel;
use evenpoint::{Field, RationalModel, Squares};

fn main() -> evenpoint::Result<()> {
    let sq = Squares::new(RationalModel::new(Field::of_order(5)?), 6)?;
    let m = sq.model();
    let g = EvenGraph::build(&sq, 2)?;
    let p = m.parse_place("t^2+2")?;
    let q = m.parse_place("t^2+3")?;
    println!(
        "edge criteria for (t^2+2, t^2+3): {:?}",
        edge_criteria_agree(&sq, &p, &q)?
    );
    if let Some(w) = non_neighbor_witness(&sq, &p, 4)? {
        println!("t^2+2 is not adjacent to {}", m.render_place(&w));
    }
    let cn = common_neighbors(&sq, &p, &q, 4)?;
    println!(
        "{} common neighbors of degree <= 4, first {:?}",
        cn.len(),
        cn.first().map(|r| m.render_place(r))
    );
    let r = diameter_report(&sq, &g, 4)?;
    println!(
        "connected {}, max distance {}, unresolved {:?}",
        r.connected, r.max_distance_observed, r.unresolved_pairs
    );
    Ok(())
}

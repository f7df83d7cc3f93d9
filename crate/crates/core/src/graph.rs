//! The graph of even points under `⌣`: `p ⌣ q` iff `λ_p` is a square at `q`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Sign;
use crate::squares::{CurveModel, ModelInfo, Squares};

/// Even places of degree `≤ max_degree` with their `λ_p` and adjacency.
#[derive(Clone, Debug)]
pub struct EvenGraph<M: CurveModel> {
    pub info: ModelInfo,
    pub max_degree: usize,
    pub places: Vec<M::Place>,
    pub lambdas: Vec<M::Class>,
    pub adjacency: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRecord {
    pub id: usize,
    pub place: String,
    pub degree: usize,
    pub lambda: String,
}

#[derive(Serialize)]
struct GraphRecord {
    #[serde(flatten)]
    info: ModelInfo,
    max_degree: usize,
    vertices: Vec<VertexRecord>,
    edges: Vec<[usize; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
    Csv,
}

/// The three equivalent descriptions of an edge, each computed separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCriteria {
    /// Every element of `Sing(X ∖ {p})` has symbol `+1` at `q`.
    pub sing_squares: bool,
    /// `(λ_p / q) = +1`.
    pub legendre: bool,
    /// The residue of `λ_p` at `q` has a square root.
    pub splits: bool,
}

impl EdgeCriteria {
    pub fn agree(&self) -> bool {
        self.sing_squares == self.legendre && self.legendre == self.splits
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub connected: bool,
    pub max_distance_observed: usize,
    /// Non-adjacent pairs with no common neighbor within the search degree.
    pub unresolved_pairs: Vec<(String, String)>,
}

fn edge<M: CurveModel>(m: &M, lambda: &M::Class, q: &M::Place) -> Result<bool> {
    Ok(m.legendre(lambda, q)? == Sign::Plus)
}

fn adjacency<M: CurveModel>(m: &M, places: &[M::Place], lambdas: &[M::Class]) -> Result<Vec<Vec<bool>>> {
    (0..places.len())
        .into_par_iter()
        .map(|i| {
            (0..places.len())
                .map(|j| {
                    if i == j {
                        Ok(false)
                    } else {
                        edge(m, &lambdas[i], &places[j])
                    }
                })
                .collect()
        })
        .collect()
}

impl<M: CurveModel> EvenGraph<M> {
    pub fn build(sq: &Squares<M>, max_degree: usize) -> Result<EvenGraph<M>> {
        let m = sq.model();
        let places = sq.even_places(max_degree)?;
        let lambdas: Vec<M::Class> = places.par_iter().map(|p| sq.lambda_for(p)).collect::<Result<_>>()?;
        let adjacency = adjacency(m, &places, &lambdas)?;
        let g = EvenGraph {
            info: m.info(),
            max_degree,
            places,
            lambdas,
            adjacency,
        };
        if let Some((i, j)) = g.asymmetric_pair() {
            return Err(Error::Verification(format!(
                "adjacency is not symmetric at ({}, {})",
                m.render_place(&g.places[i]),
                m.render_place(&g.places[j])
            )));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn index_of(&self, p: &M::Place) -> Option<usize> {
        self.places.iter().position(|v| v == p)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<[usize; 2]> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).filter(move |&j| self.adjacency[i][j]).map(move |j| [i, j]))
            .collect()
    }

    /// The first pair where the adjacency matrix differs from its transpose.
    pub fn asymmetric_pair(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.adjacency[i][j] != self.adjacency[j][i])
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetric_pair().is_none() && (0..self.len()).all(|i| !self.adjacency[i][i])
    }

    pub fn vertices(&self, m: &M) -> Vec<VertexRecord> {
        self.places
            .iter()
            .zip(&self.lambdas)
            .enumerate()
            .map(|(id, (p, l))| VertexRecord {
                id,
                place: m.render_place(p),
                degree: m.place_degree(p),
                lambda: m.render_class(l),
            })
            .collect()
    }

    /// Recomputes every edge with `λ_p` replaced by `λ_p·s` for each
    /// `s ∈ Sing(X)` and compares with the stored adjacency.
    pub fn choice_invariant(&self, sq: &Squares<M>) -> Result<bool> {
        let m = sq.model();
        for s in sq.sing_x().elements(m) {
            let shifted: Vec<M::Class> = self.lambdas.iter().map(|l| m.mul(l, &s)).collect();
            if adjacency(m, &self.places, &shifted)? != self.adjacency {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn export(&self, m: &M, format: ExportFormat) -> String {
        let vertices = self.vertices(m);
        let edges = self.edges();
        match format {
            ExportFormat::Json => {
                let rec = GraphRecord {
                    info: self.info.clone(),
                    max_degree: self.max_degree,
                    vertices,
                    edges,
                };
                serde_json::to_string_pretty(&rec).expect("serializable") + "\n"
            }
            ExportFormat::Dot => {
                let mut s = String::from("graph even_points {\n");
                for v in &vertices {
                    s += &format!("  {} [label=\"{}\"];\n", v.id, v.place);
                }
                for [i, j] in &edges {
                    s += &format!("  {i} -- {j};\n");
                }
                s + "}\n"
            }
            ExportFormat::Csv => {
                let mut s = String::from("source,target,source_place,target_place\n");
                for [i, j] in &edges {
                    s += &format!("{i},{j},\"{}\",\"{}\"\n", vertices[*i].place, vertices[*j].place);
                }
                s
            }
        }
    }
}

/// `p ⌣ q` from `λ_p`.
pub fn is_edge<M: CurveModel>(sq: &Squares<M>, p: &M::Place, q: &M::Place) -> Result<bool> {
    edge(sq.model(), &sq.lambda_for(p)?, q)
}

pub fn edge_criteria_agree<M: CurveModel>(sq: &Squares<M>, p: &M::Place, q: &M::Place) -> Result<EdgeCriteria> {
    if p == q {
        return Err(Error::Precondition("edge criteria need distinct places".into()));
    }
    let m = sq.model();
    let sing_p = sq.sing_subgroup(std::slice::from_ref(p))?;
    let mut sing_squares = true;
    for s in sing_p.elements(m) {
        if m.legendre(&s, q)? == Sign::Minus {
            sing_squares = false;
            break;
        }
    }
    let lambda = sq.lambda_for(p)?;
    Ok(EdgeCriteria {
        sing_squares,
        legendre: edge(m, &lambda, q)?,
        splits: m.residue_is_square(&lambda, q)?,
    })
}

/// The first even place `q ≠ p` of degree `≤ search_degree` with `p ⌣̸ q`.
pub fn non_neighbor_witness<M: CurveModel>(
    sq: &Squares<M>,
    p: &M::Place,
    search_degree: usize,
) -> Result<Option<M::Place>> {
    let m = sq.model();
    let lambda = sq.lambda_for(p)?;
    for q in sq.even_places(search_degree)? {
        if q != *p && !edge(m, &lambda, &q)? {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Even places `r ∉ {p, q}` of degree `≤ search_degree` adjacent to both.
pub fn common_neighbors<M: CurveModel>(
    sq: &Squares<M>,
    p: &M::Place,
    q: &M::Place,
    search_degree: usize,
) -> Result<Vec<M::Place>> {
    let m = sq.model();
    let (lp, lq) = (sq.lambda_for(p)?, sq.lambda_for(q)?);
    let mut out = Vec::new();
    for r in sq.even_places(search_degree)? {
        if r != *p && r != *q && edge(m, &lp, &r)? && edge(m, &lq, &r)? {
            out.push(r);
        }
    }
    Ok(out)
}

/// Resolves every non-adjacent vertex pair through a common neighbor of
/// degree `≤ search_degree`; pairs without one are reported, not refuted.
pub fn diameter_report<M: CurveModel>(
    sq: &Squares<M>,
    g: &EvenGraph<M>,
    search_degree: usize,
) -> Result<DiameterReport> {
    let m = sq.model();
    let pool = sq.even_places(search_degree)?;
    let plus: Vec<Vec<bool>> = g
        .places
        .par_iter()
        .zip(&g.lambdas)
        .map(|(p, l)| {
            pool.iter()
                .map(|r| Ok(r != p && edge(m, l, r)?))
                .collect::<Result<Vec<bool>>>()
        })
        .collect::<Result<_>>()?;
    let n = g.len();
    let mut unresolved = Vec::new();
    let mut max_distance = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacency[i][j] {
                max_distance = max_distance.max(1);
                continue;
            }
            let found = pool
                .iter()
                .enumerate()
                .any(|(r, place)| plus[i][r] && plus[j][r] && *place != g.places[i] && *place != g.places[j]);
            if found {
                max_distance = 2;
            } else {
                unresolved.push((m.render_place(&g.places[i]), m.render_place(&g.places[j])));
            }
        }
    }
    Ok(DiameterReport {
        connected: unresolved.is_empty(),
        max_distance_observed: max_distance,
        unresolved_pairs: unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::p1::RationalModel;

    fn f5() -> Squares<RationalModel> {
        Squares::new(RationalModel::new(Field::prime(5).unwrap()), 6).unwrap()
    }

    #[test]
    fn quadratic_graph_over_f5() {
        let sq = f5();
        let g = EvenGraph::build(&sq, 2).unwrap();
        assert_eq!(g.len(), 10);
        assert!(g.is_symmetric());
        assert!(g.choice_invariant(&sq).unwrap());
        let m = sq.model();
        let p = |s: &str| m.parse_place(s).unwrap();
        let (f, gg, h) = (p("t^2+4t+1"), p("t^2+2t+3"), p("t^2+2"));
        assert!(is_edge(&sq, &f, &gg).unwrap());
        assert!(is_edge(&sq, &gg, &h).unwrap());
        assert!(!is_edge(&sq, &f, &h).unwrap());
        assert_eq!(non_neighbor_witness(&sq, &f, 4).unwrap(), Some(h.clone()));
        assert!(!common_neighbors(&sq, &f, &h, 4).unwrap().is_empty());
        let c = edge_criteria_agree(&sq, &f, &gg).unwrap();
        assert!(c.agree() && c.legendre);
        let c = edge_criteria_agree(&sq, &f, &h).unwrap();
        assert!(c.agree() && !c.legendre);
    }

    #[test]
    fn export_is_deterministic() {
        let sq = f5();
        let g = EvenGraph::build(&sq, 2).unwrap();
        let a = g.export(sq.model(), ExportFormat::Json);
        let b = EvenGraph::build(&sq, 2).unwrap().export(sq.model(), ExportFormat::Json);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
        assert_eq!(v["model"], "p1");
        assert!(g.export(sq.model(), ExportFormat::Dot).starts_with("graph"));
        assert_eq!(
            g.export(sq.model(), ExportFormat::Csv).lines().count(),
            1 + g.edge_count()
        );
    }

    #[test]
    fn empty_and_single_vertex_graphs() {
        let sq = f5();
        let g = EvenGraph::build(&sq, 1).unwrap();
        assert!(g.is_empty());
        let v: serde_json::Value = serde_json::from_str(&g.export(sq.model(), ExportFormat::Json)).unwrap();
        assert_eq!(v["vertices"], serde_json::json!([]));
        assert_eq!(v["edges"], serde_json::json!([]));
        let r = diameter_report(&sq, &g, 2).unwrap();
        assert!(r.connected);
        assert_eq!(r.max_distance_observed, 0);
    }
}

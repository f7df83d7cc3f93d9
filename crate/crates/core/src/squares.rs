//! Square-class subgroups `Sing(Y)` and `Δ(Y)`, even points, compatible
//! bases of `Pic X / 2 Pic X`, and density experiments, generic over a
//! [`CurveModel`].

use std::fmt::Debug;
use std::hash::Hash;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2;
use crate::field::{Field, Sign};

/// Identification of a model in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelInfo {
    pub q: u32,
    pub model: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_f: Option<String>,
}

/// A complete curve over `F_q` with a computable function field.
///
/// Classes are representatives of `K*/K*²`; equality of classes is decided
/// by [`CurveModel::same_class`], not by comparing representatives.
pub trait CurveModel: Send + Sync {
    type Place: Clone + Eq + Ord + Hash + Debug + Send + Sync;
    type Class: Clone + Debug + Send + Sync;

    fn field(&self) -> &Field;
    fn info(&self) -> ModelInfo;

    /// Places of degree exactly `d`, in enumeration order.
    fn places_of_degree(&self, d: usize) -> Vec<Self::Place>;
    fn place_degree(&self, p: &Self::Place) -> usize;
    fn render_place(&self, p: &Self::Place) -> String;
    fn parse_place(&self, s: &str) -> Result<Self::Place>;

    /// Places of degree `≤ d`, in enumeration order.
    fn places_up_to(&self, d: usize) -> Vec<Self::Place> {
        let mut v: Vec<Self::Place> = (1..=d).flat_map(|e| self.places_of_degree(e)).collect();
        v.sort();
        v
    }

    fn one(&self) -> Self::Class;
    /// The non-square constant class.
    fn zeta(&self) -> Self::Class;
    fn mul(&self, a: &Self::Class, b: &Self::Class) -> Self::Class;
    /// Exact test for `a ∈ K*²`.
    fn is_square(&self, a: &Self::Class) -> bool;
    fn render_class(&self, a: &Self::Class) -> String;
    fn parse_class(&self, s: &str) -> Result<Self::Class>;

    fn same_class(&self, a: &Self::Class, b: &Self::Class) -> bool {
        self.is_square(&self.mul(a, b))
    }

    fn ord(&self, p: &Self::Place, a: &Self::Class) -> i64;
    /// `(a/p)`: the character of the unit-part residue.
    fn legendre(&self, a: &Self::Class, p: &Self::Place) -> Result<Sign>;
    /// Whether the unit-part residue is a square in `K(p)`, decided by
    /// explicit root extraction rather than by the character.
    fn residue_is_square(&self, a: &Self::Class, p: &Self::Place) -> Result<bool>;
    /// Places where `ord a` is odd, in enumeration order.
    fn odd_support(&self, a: &Self::Class) -> Vec<Self::Place>;

    /// Candidate classes whose span contains `Sing(X ∖ removed)`.
    fn sing_candidates(&self, removed: &[Self::Place], bound: usize) -> Result<Vec<Self::Class>>;

    /// `dim Pic X / 2 Pic X`, computed without square classes.
    fn pic2_dim(&self) -> Result<usize>;
    /// Coordinates of `[p]` in `Pic X / 2 Pic X` in a model-fixed basis,
    /// computed without square classes.
    fn pic2_coords(&self, p: &Self::Place) -> Result<Vec<u8>>;
    /// Search for a class with odd `ord_p` and even valuation elsewhere,
    /// independent of `Sing` computations.
    fn odd_valuation_scan(&self, p: &Self::Place, bound: usize) -> Result<Option<Self::Class>>;
    fn random_class(&self, rng: &mut ChaCha8Rng) -> Self::Class;
}

/// An `F_2`-subspace of `K*/K*²` given by an independent basis.
#[derive(Clone, Debug)]
pub struct SubgroupF2<C> {
    pub basis: Vec<C>,
}

impl<C: Clone + Debug + Send + Sync> SubgroupF2<C> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> u64 {
        1 << self.basis.len()
    }

    pub fn product<M: CurveModel<Class = C>>(&self, model: &M, coords: &[u8]) -> C {
        class_product(model, &self.basis, coords)
    }

    /// All `2^dim` elements, in binary counting order of their coordinates.
    pub fn elements<M: CurveModel<Class = C>>(&self, model: &M) -> Vec<C> {
        f2::all_vectors(self.dim()).map(|v| self.product(model, &v)).collect()
    }

    /// Coordinates of `c` in the basis, or `None` when `c` is outside.
    pub fn coordinates<M: CurveModel<Class = C>>(&self, model: &M, c: &C) -> Option<Vec<u8>> {
        f2::all_vectors(self.dim()).find(|v| model.same_class(c, &self.product(model, v)))
    }

    pub fn contains<M: CurveModel<Class = C>>(&self, model: &M, c: &C) -> bool {
        self.coordinates(model, c).is_some()
    }

    pub fn render<M: CurveModel<Class = C>>(&self, model: &M) -> Vec<String> {
        self.basis.iter().map(|c| model.render_class(c)).collect()
    }
}

pub fn class_product<M: CurveModel>(model: &M, basis: &[M::Class], coords: &[u8]) -> M::Class {
    basis
        .iter()
        .zip(coords)
        .filter(|(_, &b)| b == 1)
        .fold(model.one(), |acc, (c, _)| model.mul(&acc, c))
}

/// Greedy independent subset mod squares, in input order.
pub fn reduce_to_basis<M: CurveModel>(model: &M, classes: &[M::Class]) -> Vec<M::Class> {
    let mut sub = SubgroupF2 { basis: Vec::new() };
    for c in classes {
        if !sub.contains(model, c) {
            sub.basis.push(c.clone());
        }
    }
    sub.basis
}

fn symbol_bits<M: CurveModel>(model: &M, classes: &[M::Class], p: &M::Place) -> Result<Vec<u8>> {
    classes.iter().map(|c| model.legendre(c, p).map(Sign::bit)).collect()
}

/// The five conditions of the evenness criterion, each computed separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCriteria {
    pub place: String,
    /// `[p] ∈ 2 Pic X` by divisor-class computation.
    pub in_2pic: bool,
    /// A class with odd `ord_p` and even valuation elsewhere was found.
    pub odd_class_exists: bool,
    /// `Sing(X) = Δ(X ∖ {p})`.
    pub sing_equals_delta: bool,
    /// `dim Sing(X) = dim Pic(X ∖ {p}) / 2`.
    pub dims_match: bool,
    /// `[Sing(X ∖ {p}) : Sing(X)] = 2`.
    pub index_two: bool,
}

impl EvenCriteria {
    pub fn values(&self) -> [bool; 5] {
        [
            self.in_2pic,
            self.odd_class_exists,
            self.sing_equals_delta,
            self.dims_match,
            self.index_two,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingMatrix {
    /// `entries[i][j] = (λ_i / p_j)`.
    pub entries: Vec<Vec<Sign>>,
    pub is_compatible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GstVerdict {
    /// `λ ∈ Sing(X)` and every checked even place has symbol `+1`.
    Consistent {
        checked: usize,
    },
    /// `λ ∈ Sing(X)` but some even place has symbol `-1`.
    Violated {
        place: String,
    },
    /// `λ ∉ Sing(X)` and an even place with symbol `-1` exists.
    WitnessFound {
        place: String,
    },
    NoWitnessWithinBound,
}

impl GstVerdict {
    /// Whether the verdict agrees with the global square theorem.
    pub fn agrees(&self) -> bool {
        matches!(self, GstVerdict::Consistent { .. } | GstVerdict::WitnessFound { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DensityMode {
    Exhaustive,
    Sample { n: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityResult {
    pub fraction: f64,
    pub count: usize,
    pub total: usize,
    pub expected: f64,
}

/// A model together with its computed `Sing(X)` basis.
pub struct Squares<M: CurveModel> {
    model: M,
    scan_bound: usize,
    sing_x: SubgroupF2<M::Class>,
}

impl<M: CurveModel> Squares<M> {
    /// Computes and certifies `Sing(X)`.
    pub fn new(model: M, scan_bound: usize) -> Result<Squares<M>> {
        let mut s = Squares {
            model,
            scan_bound,
            sing_x: SubgroupF2 { basis: Vec::new() },
        };
        s.sing_x = s.sing_subgroup(&[])?;
        Ok(s)
    }

    pub fn model(&self) -> &M {
        &self.model
    }

    pub fn scan_bound(&self) -> usize {
        self.scan_bound
    }

    pub fn sing_x(&self) -> &SubgroupF2<M::Class> {
        &self.sing_x
    }

    /// `Sing(X ∖ removed)` from the candidate classes: the even-valuation
    /// combinations on `Y`, reduced mod squares. Not certified.
    pub fn sing_scan(&self, removed: &[M::Place]) -> Result<SubgroupF2<M::Class>> {
        let m = &self.model;
        if let Some(p) = removed.iter().find(|p| m.place_degree(p) > self.scan_bound) {
            return Err(Error::BoundExhausted(format!(
                "removed place {} has degree {} above the scan bound {}",
                m.render_place(p),
                m.place_degree(p),
                self.scan_bound
            )));
        }
        let cands = m.sing_candidates(removed, self.scan_bound)?;
        let supports: Vec<Vec<M::Place>> = cands.par_iter().map(|c| m.odd_support(c)).collect();
        let mut places: Vec<M::Place> = supports
            .iter()
            .flatten()
            .filter(|p| !removed.contains(p))
            .cloned()
            .collect();
        places.sort();
        places.dedup();
        let rows: Vec<Vec<u8>> = supports
            .iter()
            .map(|s| places.iter().map(|p| u8::from(s.contains(p))).collect())
            .collect();
        let kernel = f2::echelon(f2::left_kernel(&rows));
        let even: Vec<M::Class> = kernel.iter().map(|v| class_product(m, &cands, v)).collect();
        Ok(SubgroupF2 {
            basis: reduce_to_basis(m, &even),
        })
    }

    /// The dimension `Sing(X ∖ removed)` must have:
    /// `dim Pic X/2` for empty `removed`, else `|removed| + dim Pic(Y)/2`.
    pub fn expected_sing_dim(&self, removed: &[M::Place]) -> Result<usize> {
        let pic = self.model.pic2_dim()?;
        if removed.is_empty() {
            return Ok(pic);
        }
        let rows: Vec<Vec<u8>> = removed
            .iter()
            .map(|p| self.model.pic2_coords(p))
            .collect::<Result<_>>()?;
        Ok(removed.len() + pic - f2::rank(&rows))
    }

    /// `Sing(X ∖ removed)`, certified against the divisor-class dimension.
    pub fn sing_subgroup(&self, removed: &[M::Place]) -> Result<SubgroupF2<M::Class>> {
        let mut removed = removed.to_vec();
        removed.sort();
        removed.dedup();
        let s = self.sing_scan(&removed)?;
        let expected = self.expected_sing_dim(&removed)?;
        if s.dim() != expected {
            return Err(Error::BoundExhausted(format!(
                "Sing scan found dimension {} but the class group requires {expected}; \
                 the candidate classes do not span",
                s.dim()
            )));
        }
        Ok(s)
    }

    /// `Δ(X ∖ removed)`: the classes of `Sing(X)` that are squares at every removed place.
    pub fn delta_subgroup(&self, removed: &[M::Place]) -> Result<SubgroupF2<M::Class>> {
        if removed.is_empty() {
            return Err(Error::Precondition("Δ needs a nonempty set of removed places".into()));
        }
        let basis = &self.sing_x.basis;
        let rows: Vec<Vec<u8>> = basis
            .iter()
            .map(|b| {
                removed
                    .iter()
                    .map(|p| self.model.legendre(b, p).map(Sign::bit))
                    .collect()
            })
            .collect::<Result<_>>()?;
        let kernel = f2::echelon(f2::left_kernel(&rows));
        Ok(SubgroupF2 {
            basis: kernel.iter().map(|v| class_product(&self.model, basis, v)).collect(),
        })
    }

    /// Evenness by the Legendre criterion: every `Sing(X)` basis symbol is `+1`.
    pub fn is_even_point(&self, p: &M::Place) -> Result<bool> {
        Ok(symbol_bits(&self.model, &self.sing_x.basis, p)?.iter().all(|&b| b == 0))
    }

    /// Evenness by divisor-class computation.
    pub fn is_even_brute_force(&self, p: &M::Place) -> Result<bool> {
        Ok(self.model.pic2_coords(p)?.iter().all(|&b| b == 0))
    }

    pub fn even_criteria_report(&self, p: &M::Place) -> Result<EvenCriteria> {
        let m = &self.model;
        let in_2pic = self.is_even_brute_force(p)?;
        let odd_class_exists = m.odd_valuation_scan(p, self.scan_bound)?.is_some();
        let delta = self.delta_subgroup(std::slice::from_ref(p))?;
        let sing_equals_delta =
            delta.dim() == self.sing_x.dim() && self.sing_x.basis.iter().all(|b| delta.contains(m, b));
        let pic_y = m.pic2_dim()? - f2::rank(&[m.pic2_coords(p)?]);
        let dims_match = self.sing_x.dim() == pic_y;
        let sing_y = self.sing_scan(std::slice::from_ref(p))?;
        let index_two = sing_y.dim() == self.sing_x.dim() + 1;
        Ok(EvenCriteria {
            place: m.render_place(p),
            in_2pic,
            odd_class_exists,
            sing_equals_delta,
            dims_match,
            index_two,
        })
    }

    /// The first basis element of `Sing(X ∖ {p})` with odd valuation at `p`.
    pub fn lambda_for(&self, p: &M::Place) -> Result<M::Class> {
        if !self.is_even_point(p)? {
            return Err(Error::NotEven(self.model.render_place(p)));
        }
        let s = self.sing_subgroup(std::slice::from_ref(p))?;
        s.basis
            .into_iter()
            .find(|c| self.model.ord(p, c) % 2 != 0)
            .ok_or_else(|| Error::NotEven(self.model.render_place(p)))
    }

    pub fn pairing_matrix(&self, points: &[M::Place], classes: &[M::Class]) -> Result<PairingMatrix> {
        if points.len() != classes.len() {
            return Err(Error::Precondition("pairing needs as many points as classes".into()));
        }
        let entries: Vec<Vec<Sign>> = classes
            .iter()
            .map(|c| points.iter().map(|p| self.model.legendre(c, p)).collect())
            .collect::<Result<_>>()?;
        let is_compatible = entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &s)| s == if i == j { Sign::Minus } else { Sign::Plus })
        });
        Ok(PairingMatrix { entries, is_compatible })
    }

    /// For each basis class, the first place whose symbol pattern against
    /// the basis is `-1` there and `+1` at the others. `skip` earlier hits
    /// are passed over, which yields further compatible tuples.
    pub fn compatible_points_for_classes(
        &self,
        basis: &[M::Class],
        search_degree: usize,
        skip: usize,
    ) -> Result<Vec<M::Place>> {
        let k = basis.len();
        if reduce_to_basis(&self.model, basis).len() != k {
            return Err(Error::Precondition("classes are not independent".into()));
        }
        let mut found: Vec<Vec<M::Place>> = vec![Vec::new(); k];
        for p in self.model.places_up_to(search_degree) {
            let Ok(bits) = symbol_bits(&self.model, basis, &p) else {
                continue;
            };
            if bits.iter().sum::<u8>() == 1 {
                let j = bits.iter().position(|&b| b == 1).unwrap();
                if found[j].len() <= skip {
                    found[j].push(p);
                }
            }
            if found.iter().all(|f| f.len() > skip) {
                return Ok(found.into_iter().map(|mut f| f.pop().unwrap()).collect());
            }
        }
        if k == 0 {
            return Ok(Vec::new());
        }
        Err(Error::BoundExhausted(format!(
            "no compatible points within degree {search_degree}"
        )))
    }

    /// Classes of `Sing(X)` compatible with points whose classes are
    /// independent in `Pic X / 2 Pic X`.
    pub fn compatible_classes_for_points(&self, points: &[M::Place]) -> Result<Vec<M::Class>> {
        let coords: Vec<Vec<u8>> = points
            .iter()
            .map(|p| self.model.pic2_coords(p))
            .collect::<Result<_>>()?;
        if f2::rank(&coords) != points.len() {
            return Err(Error::DependentPoints);
        }
        let basis = &self.sing_x.basis;
        let rows: Vec<Vec<u8>> = basis
            .iter()
            .map(|b| {
                points
                    .iter()
                    .map(|p| self.model.legendre(b, p).map(Sign::bit))
                    .collect()
            })
            .collect::<Result<_>>()?;
        (0..points.len())
            .map(|j| {
                let target: Vec<u8> = (0..points.len()).map(|i| u8::from(i == j)).collect();
                let c = f2::solve_left(&rows, &target).ok_or(Error::DependentPoints)?;
                Ok(class_product(&self.model, basis, &c))
            })
            .collect()
    }

    /// `ε_i` with `(β_i / p) = (-1)^ε_i`.
    pub fn pic_coordinates(&self, p: &M::Place, basis: &[M::Class]) -> Result<Vec<u8>> {
        symbol_bits(&self.model, basis, p)
    }

    /// Pairs of places with the same class in `Pic X / 2 Pic X` have the same `Δ`.
    pub fn congruent_points_delta_check(&self, p: &M::Place, q: &M::Place) -> Result<bool> {
        if self.model.pic2_coords(p)? != self.model.pic2_coords(q)? {
            return Err(Error::Precondition("points are not congruent mod 2 Pic X".into()));
        }
        let dp = self.delta_subgroup(std::slice::from_ref(p))?;
        let dq = self.delta_subgroup(std::slice::from_ref(q))?;
        Ok(dp.dim() == dq.dim() && dp.basis.iter().all(|c| dq.contains(&self.model, c)))
    }

    /// Even places of degree `≤ d` by divisor-class computation.
    pub fn even_places_brute_force(&self, d: usize) -> Result<Vec<M::Place>> {
        let places = self.model.places_up_to(d);
        let flags: Vec<bool> = places
            .par_iter()
            .map(|p| self.is_even_brute_force(p))
            .collect::<Result<_>>()?;
        Ok(places
            .into_iter()
            .zip(flags)
            .filter(|(_, e)| *e)
            .map(|(p, _)| p)
            .collect())
    }

    /// Even places of degree `≤ d` by the Legendre criterion.
    pub fn even_places(&self, d: usize) -> Result<Vec<M::Place>> {
        let places = self.model.places_up_to(d);
        let flags: Vec<bool> = places
            .par_iter()
            .map(|p| self.is_even_point(p))
            .collect::<Result<_>>()?;
        Ok(places
            .into_iter()
            .zip(flags)
            .filter(|(_, e)| *e)
            .map(|(p, _)| p)
            .collect())
    }

    /// Checks `λ` against the global square theorem for even points, over
    /// the given even places.
    pub fn gst_check_on(&self, l: &M::Class, even: &[M::Place]) -> GstVerdict {
        let m = &self.model;
        let minus = |p: &&M::Place| m.legendre(l, p) == Ok(Sign::Minus);
        if self.sing_x.contains(m, l) {
            match even.iter().find(minus) {
                Some(p) => GstVerdict::Violated {
                    place: m.render_place(p),
                },
                None => GstVerdict::Consistent { checked: even.len() },
            }
        } else {
            match even.iter().find(minus) {
                Some(p) => GstVerdict::WitnessFound {
                    place: m.render_place(p),
                },
                None => GstVerdict::NoWitnessWithinBound,
            }
        }
    }

    pub fn gst_check(&self, l: &M::Class, degree_bound: usize) -> Result<GstVerdict> {
        Ok(self.gst_check_on(l, &self.even_places_brute_force(degree_bound)?))
    }

    /// Fraction of degree-`d` places at which `(λ_i/p) = signs_i` for all `i`.
    /// Places where some `λ_i` is not a unit, and `∞`-type degree-one
    /// places where a symbol is undefined, are excluded.
    pub fn hecke_density_experiment(
        &self,
        classes: &[M::Class],
        signs: &[Sign],
        d: usize,
        mode: DensityMode,
    ) -> Result<DensityResult> {
        if classes.len() != signs.len() {
            return Err(Error::Precondition("one sign per class".into()));
        }
        if reduce_to_basis(&self.model, classes).len() != classes.len() {
            return Err(Error::Precondition("classes are not independent".into()));
        }
        let m = &self.model;
        let places: Vec<M::Place> = m
            .places_of_degree(d)
            .into_iter()
            .filter(|p| classes.iter().all(|c| m.ord(p, c) == 0))
            .collect();
        let places = sample(places, mode);
        if places.is_empty() {
            return Err(Error::BoundExhausted(format!(
                "no places of degree {d} after exclusions"
            )));
        }
        let count = places
            .par_iter()
            .filter(|p| classes.iter().zip(signs).all(|(c, s)| m.legendre(c, p) == Ok(*s)))
            .count();
        Ok(density(count, places.len(), classes.len()))
    }

    /// Fraction of degree-`d` places that are even.
    pub fn even_density_experiment(&self, d: usize, mode: DensityMode) -> Result<DensityResult> {
        let places = sample(self.model.places_of_degree(d), mode);
        if places.is_empty() {
            return Err(Error::BoundExhausted(format!("no places of degree {d}")));
        }
        let flags: Vec<bool> = places
            .par_iter()
            .map(|p| self.is_even_point(p))
            .collect::<Result<_>>()?;
        let count = flags.iter().filter(|&&e| e).count();
        Ok(density(count, places.len(), self.sing_x.dim()))
    }
}

fn sample<P: Clone>(places: Vec<P>, mode: DensityMode) -> Vec<P> {
    match mode {
        DensityMode::Exhaustive => places,
        DensityMode::Sample { n, seed } => {
            if places.is_empty() {
                return places;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| places.choose(&mut rng).unwrap().clone()).collect()
        }
    }
}

fn density(count: usize, total: usize, n: usize) -> DensityResult {
    DensityResult {
        fraction: count as f64 / total as f64,
        count,
        total,
        expected: 1.0 / (1u64 << n) as f64,
    }
}

/// `(-1)^(Σ ε_i ε'_i)`.
pub fn legendre_via_coords(class_coords: &[u8], point_coords: &[u8]) -> Sign {
    Sign::from_bit(f2::dot(class_coords, point_coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::p1::{PlaceP1, RationalModel, SquareClassP1};
    use crate::poly::Poly;

    fn setup() -> (Squares<RationalModel>, Field) {
        let k = Field::prime(5).unwrap();
        (Squares::new(RationalModel::new(k.clone()), 6).unwrap(), k)
    }

    fn fin(k: &Field, c: &[i64]) -> PlaceP1 {
        PlaceP1::Finite(Poly::from_ints(k, c))
    }

    fn cls(k: &Field, c: &[i64]) -> SquareClassP1 {
        SquareClassP1::of_poly(&Poly::from_ints(k, c), k).unwrap()
    }

    #[test]
    fn sing_examples() {
        let (s, k) = setup();
        let m = s.model();
        assert_eq!(s.sing_x().render(m), vec!["2"]);
        let y = s.sing_subgroup(&[fin(&k, &[2, 0, 1])]).unwrap();
        assert_eq!(y.render(m), vec!["2", "t^2+2"]);
        let y = s.sing_subgroup(&[fin(&k, &[0, 1])]).unwrap();
        assert_eq!(y.render(m), vec!["2"]);
    }

    #[test]
    fn delta_examples() {
        let (s, k) = setup();
        assert_eq!(s.delta_subgroup(&[fin(&k, &[2, 0, 1])]).unwrap().dim(), 1);
        assert_eq!(s.delta_subgroup(&[fin(&k, &[0, 1])]).unwrap().dim(), 0);
        let two_even = [fin(&k, &[2, 0, 1]), fin(&k, &[3, 0, 1])];
        assert_eq!(s.delta_subgroup(&two_even).unwrap().dim(), 1);
    }

    #[test]
    fn evenness_and_lambda() {
        let (s, k) = setup();
        assert!(s.is_even_point(&fin(&k, &[2, 0, 1])).unwrap());
        assert!(!s.is_even_point(&fin(&k, &[0, 1])).unwrap());
        assert_eq!(s.lambda_for(&fin(&k, &[2, 0, 1])).unwrap(), cls(&k, &[2, 0, 1]));
        assert_eq!(s.lambda_for(&fin(&k, &[1, 4, 1])).unwrap(), cls(&k, &[1, 4, 1]));
        assert!(matches!(s.lambda_for(&fin(&k, &[0, 1])), Err(Error::NotEven(_))));
    }

    #[test]
    fn criteria_examples() {
        let (s, k) = setup();
        assert_eq!(
            s.even_criteria_report(&fin(&k, &[2, 0, 1])).unwrap().values(),
            [true; 5]
        );
        assert_eq!(s.even_criteria_report(&fin(&k, &[1, 1])).unwrap().values(), [false; 5]);
        assert_eq!(s.even_criteria_report(&PlaceP1::Infinite).unwrap().values(), [false; 5]);
    }

    #[test]
    fn compatibility_examples() {
        let (s, k) = setup();
        let m = s.model();
        let zeta = vec![m.zeta()];
        let pm = s.pairing_matrix(&[fin(&k, &[0, 1])], &zeta).unwrap();
        assert_eq!(pm.entries, vec![vec![Sign::Minus]]);
        assert!(pm.is_compatible);
        assert!(!s.pairing_matrix(&[fin(&k, &[2, 0, 1])], &zeta).unwrap().is_compatible);
        assert!(s.pairing_matrix(&[], &[]).unwrap().is_compatible);
        assert_eq!(
            s.compatible_points_for_classes(&zeta, 3, 0).unwrap(),
            vec![fin(&k, &[0, 1])]
        );
        assert_eq!(
            s.compatible_classes_for_points(&[fin(&k, &[0, 1])]).unwrap()[0],
            m.zeta()
        );
        assert_eq!(
            s.compatible_classes_for_points(&[fin(&k, &[1, 1])]).unwrap()[0],
            m.zeta()
        );
        assert_eq!(
            s.compatible_classes_for_points(&[fin(&k, &[2, 0, 1])]),
            Err(Error::DependentPoints)
        );
        assert_eq!(s.pic_coordinates(&fin(&k, &[2, 0, 1]), &zeta).unwrap(), vec![0]);
        assert_eq!(s.pic_coordinates(&fin(&k, &[1, 1, 0, 1]), &zeta).unwrap(), vec![1]);
        assert_eq!(legendre_via_coords(&[1], &[1]), Sign::Minus);
        assert_eq!(legendre_via_coords(&[0], &[1]), Sign::Plus);
    }

    #[test]
    fn congruent_and_gst_examples() {
        let (s, k) = setup();
        let p = fin(&k, &[2, 0, 1]);
        assert!(s.congruent_points_delta_check(&p, &p).unwrap());
        assert!(s.congruent_points_delta_check(&p, &fin(&k, &[3, 0, 1])).unwrap());
        assert!(s
            .congruent_points_delta_check(&fin(&k, &[0, 1]), &fin(&k, &[1, 1]))
            .unwrap());
        assert!(s.congruent_points_delta_check(&p, &fin(&k, &[0, 1])).is_err());
        let m = s.model();
        assert!(matches!(
            s.gst_check(&m.zeta(), 6).unwrap(),
            GstVerdict::Consistent { .. }
        ));
        assert!(matches!(
            s.gst_check(&m.one(), 2).unwrap(),
            GstVerdict::Consistent { .. }
        ));
        match s.gst_check(&cls(&k, &[0, 1]), 6).unwrap() {
            GstVerdict::WitnessFound { place } => assert_eq!(m.parse_place(&place).unwrap().degree(), 2),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn density_examples() {
        let (s, k) = setup();
        let r = s
            .hecke_density_experiment(&[], &[], 2, DensityMode::Exhaustive)
            .unwrap();
        assert_eq!(r.fraction, 1.0);
        let t = cls(&k, &[0, 1]);
        let r = s
            .hecke_density_experiment(&[t], &[Sign::Plus], 2, DensityMode::Exhaustive)
            .unwrap();
        assert_eq!(r.total, 10);
        assert_eq!(
            s.even_density_experiment(2, DensityMode::Exhaustive).unwrap().fraction,
            1.0
        );
        assert_eq!(
            s.even_density_experiment(3, DensityMode::Exhaustive).unwrap().fraction,
            0.0
        );
        let r = s
            .even_density_experiment(4, DensityMode::Sample { n: 50, seed: 1 })
            .unwrap();
        assert_eq!((r.total, r.count), (50, 50));
    }
}

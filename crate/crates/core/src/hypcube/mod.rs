//! Hyperbolic cubes in the hyperboloid model.
//!
//! `H^n` is the sheet `<x,x> = -1`, `x_{n+1} > 0` of `R^{n,1}` with the form
//! `<x,y> = x_1 y_1 + .. + x_n y_n - x_{n+1} y_{n+1}` (time coordinate last).
//! `Y^n_eps` is the convex hull of the orbit of `x_eps` under the reflections
//! in the coordinate hyperplanes, and `C^n_eps` is its intersection with the
//! positive orthant. Vertices of `C^n_eps` are indexed by bitmasks: bit `i`
//! set means coordinate `i` is non-zero. The vertex with zero set `Z` is the
//! orthogonal projection of `x_eps` onto `{x_i = 0, i in Z}`, which is the
//! centre of the corresponding face of `Y^n_eps`.

mod certificate;

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;
use thiserror::Error;

use crate::orbits::OrbitError;

pub use certificate::{cat_certificate, Certificate, CertificateItem, ItemStatus};

/// Tolerance for hyperboloid membership and angle identities.
pub const HYPERBOLOID_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HypError {
    #[error("point is not on the hyperboloid (<p,p> = {0})")]
    OffHyperboloid(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),
    #[error("cube dimension must be between 1 and 30, got {0}")]
    InvalidDimension(usize),
    #[error("vertex set is not a face of the cube")]
    NotAFace,
    #[error("invalid face type ({0}, {1}) in dimension {2}")]
    InvalidFaceType(usize, usize, usize),
    #[error("invalid vertex {0:#b}")]
    InvalidVertex(usize),
    #[error(transparent)]
    Ball(#[from] OrbitError),
}

/// A vector of `R^{n,1}`, time coordinate last.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LorentzVector(pub Vec<f64>);

impl LorentzVector {
    pub fn origin(n: usize) -> Self {
        let mut v = vec![0.0; n + 1];
        v[n] = 1.0;
        LorentzVector(v)
    }

    /// Dimension of the hyperbolic space (one less than the coordinate count).
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn dot(&self, other: &LorentzVector) -> f64 {
        lorentz_dot(&self.0, &other.0)
    }

    pub fn on_hyperboloid(&self) -> bool {
        (self.dot(self) + 1.0).abs() <= HYPERBOLOID_TOLERANCE && *self.0.last().unwrap() > 0.0
    }

    /// Reflection across the coordinate hyperplane `x_i = 0`.
    pub fn reflect(&self, i: usize) -> LorentzVector {
        let mut v = self.0.clone();
        v[i] = -v[i];
        LorentzVector(v)
    }
}

fn lorentz_dot(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() - 1;
    x[..n].iter().zip(&y[..n]).map(|(a, b)| a * b).sum::<f64>() - x[n] * y[n]
}

/// Hyperbolic distance `arccosh(-<p,q>)`.
pub fn hyp_distance(p: &LorentzVector, q: &LorentzVector) -> Result<f64, HypError> {
    if p.0.len() != q.0.len() {
        return Err(HypError::DimensionMismatch(p.dim(), q.dim()));
    }
    for x in [p, q] {
        if !x.on_hyperboloid() {
            return Err(HypError::OffHyperboloid(x.dot(x)));
        }
    }
    Ok(chord_distance(p, q))
}

/// `2 asinh(|p - q| / 2)`, equal to `arccosh(-<p,q>)` on the hyperboloid but
/// accurate for nearby points.
fn chord_distance(p: &LorentzVector, q: &LorentzVector) -> f64 {
    let d: Vec<f64> = p.0.iter().zip(&q.0).map(|(a, b)| a - b).collect();
    2.0 * (lorentz_dot(&d, &d).max(0.0).sqrt() / 2.0).asinh()
}

/// Tangent vector at `p` pointing along the geodesic towards `q`.
pub fn tangent_towards(p: &LorentzVector, q: &LorentzVector) -> Vec<f64> {
    let c = q.dot(p);
    q.0.iter().zip(&p.0).map(|(qi, pi)| qi + c * pi).collect()
}

/// Angle at `p` between the geodesics to `q` and to `r`.
pub fn angle_at(p: &LorentzVector, q: &LorentzVector, r: &LorentzVector) -> f64 {
    let u = tangent_towards(p, q);
    let v = tangent_towards(p, r);
    let c = lorentz_dot(&u, &v) / (lorentz_dot(&u, &u) * lorentz_dot(&v, &v)).sqrt();
    c.clamp(-1.0, 1.0).acos()
}

fn check_epsilon(eps: f64) -> Result<(), HypError> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(HypError::InvalidEpsilon(eps))
    }
}

/// The point of the positive orthant at distance `eps` from every
/// coordinate hyperplane: `(sinh eps, .., sinh eps, sqrt(1 + n sinh^2 eps))`.
pub fn cube_apex(n: usize, eps: f64) -> LorentzVector {
    let s = eps.sinh();
    let mut v = vec![s; n + 1];
    v[n] = (1.0 + n as f64 * s * s).sqrt();
    let p = LorentzVector(v);
    // Distance to the hyperplane x_i = 0 is arcsinh |p_i|.
    debug_assert!(p.0[..n]
        .iter()
        .all(|x| (x.asinh() - eps).abs() <= HYPERBOLOID_TOLERANCE));
    debug_assert!(p.on_hyperboloid());
    p
}

/// The angle `theta(eps) = arccos(tanh^2 eps)` between codimension-one faces
/// of `Y^n_eps` at `x_eps`; it does not depend on `n`.
pub fn dihedral_angle(eps: f64) -> f64 {
    let t = eps.tanh();
    (t * t).acos()
}

/// The same angle computed geometrically in `H^n`: project the directions
/// from `x_eps` towards two of its mirror images into the tangent space.
pub fn dihedral_angle_by_tangents(n: usize, eps: f64) -> f64 {
    assert!(n >= 2, "need two coordinate hyperplanes");
    let p = cube_apex(n, eps);
    angle_at(&p, &p.reflect(0), &p.reflect(1))
}

/// Vertex and face types of `C^n_eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FaceType {
    /// Least vertex type in the face.
    pub k: usize,
    /// Greatest vertex type in the face.
    pub l: usize,
}

impl FaceType {
    pub fn dimension(self) -> usize {
        self.l - self.k
    }
}

#[derive(Debug, Clone)]
pub struct HyperbolicCube {
    n: usize,
    eps: f64,
    vertices: Vec<LorentzVector>,
}

impl HyperbolicCube {
    pub fn new(n: usize, eps: f64) -> Result<Self, HypError> {
        check_epsilon(eps)?;
        if n == 0 || n > 30 {
            return Err(HypError::InvalidDimension(n));
        }
        let s = eps.sinh();
        let time = (1.0 + n as f64 * s * s).sqrt();
        let vertices = (0..1usize << n)
            .map(|mask| {
                let zeros = (n - mask.count_ones() as usize) as f64;
                let scale = (1.0 + zeros * s * s).sqrt();
                let mut v: Vec<f64> = (0..n)
                    .map(|i| if mask & (1 << i) != 0 { s / scale } else { 0.0 })
                    .collect();
                v.push(time / scale);
                LorentzVector(v)
            })
            .collect();
        Ok(HyperbolicCube { n, eps, vertices })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> f64 {
        self.eps
    }

    pub fn vertex(&self, mask: usize) -> &LorentzVector {
        &self.vertices[mask]
    }

    pub fn vertices(&self) -> &[LorentzVector] {
        &self.vertices
    }

    /// Number of coordinate hyperplanes containing the vertex.
    pub fn vertex_type(&self, mask: usize) -> usize {
        self.n - mask.count_ones() as usize
    }

    /// `x_0 = (0, .., 0, 1)`, the vertex of type n.
    pub fn base_vertex(&self) -> usize {
        0
    }

    /// `x_eps`, the vertex of type 0.
    pub fn apex_vertex(&self) -> usize {
        (1 << self.n) - 1
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        chord_distance(&self.vertices[a], &self.vertices[b])
    }

    /// Type of the face with the given vertex set, which must be an interval
    /// `{v : lo ⊆ v ⊆ hi}` of the mask lattice.
    pub fn face_type(&self, face: &[usize]) -> Result<FaceType, HypError> {
        let full = (1usize << self.n) - 1;
        if face.is_empty() || face.iter().any(|&v| v > full) {
            return Err(HypError::NotAFace);
        }
        let lo = face.iter().fold(full, |a, &v| a & v);
        let hi = face.iter().fold(0, |a, &v| a | v);
        let mut distinct = face.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 1 << (hi & !lo).count_ones() {
            return Err(HypError::NotAFace);
        }
        Ok(FaceType {
            k: self.vertex_type(hi),
            l: self.vertex_type(lo),
        })
    }

    /// Edges at `v` with their direction: up edges raise the vertex type
    /// (towards `x_0`), down edges lower it (towards `x_eps`).
    pub fn vertex_link_angles(&self, v: usize) -> Result<LinkAngles, HypError> {
        if v >= self.vertices.len() {
            return Err(HypError::InvalidVertex(v));
        }
        let edges: Vec<LinkEdge> = (0..self.n)
            .map(|i| LinkEdge {
                neighbor: v ^ (1 << i),
                direction: if v & (1 << i) != 0 {
                    Direction::Up
                } else {
                    Direction::Down
                },
            })
            .collect();
        let p = &self.vertices[v];
        let angles = edges
            .iter()
            .map(|a| {
                edges
                    .iter()
                    .map(|b| {
                        if a.neighbor == b.neighbor {
                            0.0
                        } else {
                            angle_at(p, &self.vertices[a.neighbor], &self.vertices[b.neighbor])
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(LinkAngles { edges, angles })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinkEdge {
    pub neighbor: usize,
    pub direction: Direction,
}

/// Angles between the cube edges at a vertex.
#[derive(Debug, Clone, Serialize)]
pub struct LinkAngles {
    pub edges: Vec<LinkEdge>,
    pub angles: Vec<Vec<f64>>,
}

impl LinkAngles {
    /// Angles between distinct edges whose directions match `(a, b)`.
    pub fn pairs(&self, a: Direction, b: Direction) -> Vec<f64> {
        let mut out = Vec::new();
        for i in 0..self.edges.len() {
            for j in 0..self.edges.len() {
                if i != j && self.edges[i].direction == a && self.edges[j].direction == b {
                    out.push(self.angles[i][j]);
                }
            }
        }
        out
    }
}

/// Angles between edges at vertex `v` of `C^n_eps`.
pub fn vertex_link_angles(n: usize, eps: f64, v: usize) -> Result<LinkAngles, HypError> {
    HyperbolicCube::new(n, eps)?.vertex_link_angles(v)
}

/// Pairwise distances between the vertices of the canonical type-`(k, l)`
/// face of `C^n_eps`, rows in sign-pattern order of the free coordinates.
pub fn face_distance_matrix(n: usize, eps: f64, ty: FaceType) -> Result<Vec<Vec<f64>>, HypError> {
    if ty.k > ty.l || ty.l > n {
        return Err(HypError::InvalidFaceType(ty.k, ty.l, n));
    }
    let cube = HyperbolicCube::new(n, eps)?;
    // Fixed non-zero coordinates 0..n-l, free coordinates n-l..n-k,
    // remaining coordinates zero.
    let lo = (1usize << (n - ty.l)) - 1;
    let verts: Vec<usize> = (0..1usize << ty.dimension())
        .map(|j| lo | (j << (n - ty.l)))
        .collect();
    Ok(verts
        .iter()
        .map(|&a| verts.iter().map(|&b| cube.distance(a, b)).collect())
        .collect())
}

/// Deviation of the upward-link edge lengths from a right angle, maximised
/// over all vertices of `C^r_eps` for `2 <= r <= max_rank`.
pub fn upward_link_margin(max_rank: usize, eps: f64) -> Result<Option<f64>, HypError> {
    let mut worst: Option<f64> = None;
    for r in 2..=max_rank {
        let cube = HyperbolicCube::new(r, eps)?;
        for v in 0..1usize << r {
            let links = cube.vertex_link_angles(v)?;
            for a in links.pairs(Direction::Up, Direction::Up) {
                let d = (a - FRAC_PI_2).abs();
                worst = Some(worst.map_or(d, |w: f64| w.max(d)));
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_examples() {
        let p = LorentzVector::origin(1);
        assert_eq!(hyp_distance(&p, &p).unwrap(), 0.0);
        let t: f64 = 0.73;
        let q = LorentzVector(vec![t.sinh(), t.cosh()]);
        assert!((hyp_distance(&p, &q).unwrap() - t).abs() < 1e-12);
        let off = LorentzVector(vec![1.0, 1.0]);
        assert!(matches!(
            hyp_distance(&p, &off),
            Err(HypError::OffHyperboloid(_))
        ));
    }

    #[test]
    fn apex_examples() {
        let p = cube_apex(2, 0.5);
        assert!((p.0[0] - 0.521095305493747).abs() < 1e-12);
        assert!((p.0[1] - 0.521095305493747).abs() < 1e-12);
        assert!((p.0[2] - 1.242_207_967_618_644_6).abs() < 1e-12);
        let p = cube_apex(1, 1.0);
        assert!((p.0[0] - 1f64.sinh()).abs() < 1e-15 && (p.0[1] - 1f64.cosh()).abs() < 1e-12);
        let p = cube_apex(3, 1e-12);
        assert!(hyp_distance(&p, &LorentzVector::origin(3)).unwrap() < 1e-9);
    }

    #[test]
    fn cube_vertices_on_hyperboloid() {
        for n in 1..=5 {
            let c = HyperbolicCube::new(n, 0.7).unwrap();
            assert!(c.vertices().iter().all(LorentzVector::on_hyperboloid));
            assert_eq!(c.vertex(c.base_vertex()), &LorentzVector::origin(n));
            assert_eq!(c.vertex(c.apex_vertex()), &cube_apex(n, 0.7));
            assert_eq!(c.vertex_type(c.base_vertex()), n);
            assert_eq!(c.vertex_type(c.apex_vertex()), 0);
        }
        assert!(HyperbolicCube::new(2, 0.0).is_err());
        assert!(HyperbolicCube::new(0, 0.1).is_err());
    }

    #[test]
    fn cube_edges_from_apex_have_length_eps() {
        // Each edge of Y^n_eps has length 2 eps and is halved by the orthant.
        let c = HyperbolicCube::new(3, 0.4).unwrap();
        for i in 0..3 {
            let d = c.distance(c.apex_vertex(), c.apex_vertex() ^ (1 << i));
            assert!((d - 0.4).abs() < 1e-12);
        }
    }

    #[test]
    fn dihedral_examples() {
        let theta = dihedral_angle(0.5);
        assert!((theta.cos() - 0.213_552_267_034_072_6).abs() < 1e-12);
        assert!((theta - 1.355_586_655_992_634_6).abs() < 1e-12);
        assert!((dihedral_angle(1e-8) - FRAC_PI_2).abs() < 1e-12);
        for n in 2..=5 {
            assert!((dihedral_angle_by_tangents(n, 0.3) - dihedral_angle(0.3)).abs() < 1e-9);
        }
    }

    #[test]
    fn face_type_examples() {
        let c = HyperbolicCube::new(2, 0.5).unwrap();
        assert_eq!(c.face_type(&[0, 1, 2, 3]).unwrap(), FaceType { k: 0, l: 2 });
        assert_eq!(c.face_type(&[0]).unwrap(), FaceType { k: 2, l: 2 });
        assert_eq!(c.face_type(&[3, 2]).unwrap(), FaceType { k: 0, l: 1 });
        assert_eq!(c.face_type(&[0, 3]), Err(HypError::NotAFace));
        assert_eq!(c.face_type(&[0, 1, 2]), Err(HypError::NotAFace));
    }

    #[test]
    fn face_matrix_examples() {
        let m = face_distance_matrix(3, 0.5, FaceType { k: 1, l: 1 }).unwrap();
        assert_eq!(m, vec![vec![0.0]]);
        let a = face_distance_matrix(3, 0.5, FaceType { k: 1, l: 2 }).unwrap();
        let b = face_distance_matrix(2, 0.5, FaceType { k: 1, l: 2 }).unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x - y).abs() < 1e-9);
            }
        }
        assert!(face_distance_matrix(2, 0.5, FaceType { k: 2, l: 1 }).is_err());
        assert!(face_distance_matrix(2, 0.5, FaceType { k: 0, l: 3 }).is_err());
    }

    #[test]
    fn link_examples() {
        let c = HyperbolicCube::new(3, 0.5).unwrap();
        let at_base = c.vertex_link_angles(c.base_vertex()).unwrap();
        assert!(at_base.edges.iter().all(|e| e.direction == Direction::Down));
        assert!(at_base
            .pairs(Direction::Down, Direction::Down)
            .iter()
            .all(|a| (a - FRAC_PI_2).abs() < 1e-9));
        let at_apex = c.vertex_link_angles(c.apex_vertex()).unwrap();
        let theta = dihedral_angle(0.5);
        assert!(at_apex
            .pairs(Direction::Up, Direction::Up)
            .iter()
            .all(|a| (a - theta).abs() < 1e-9));

        let links = vertex_link_angles(2, 0.5, 0b01).unwrap();
        assert_eq!(links.edges.len(), 2);
        assert_eq!(links.pairs(Direction::Up, Direction::Down).len(), 1);
        assert!((links.angles[0][1] - FRAC_PI_2).abs() < 1e-9);
    }

    #[test]
    fn margin_is_attained_at_the_apex() {
        let m = upward_link_margin(3, 0.1).unwrap().unwrap();
        assert!((m - (FRAC_PI_2 - dihedral_angle(0.1))).abs() < 1e-9);
        assert_eq!(upward_link_margin(1, 0.1).unwrap(), None);
    }
}

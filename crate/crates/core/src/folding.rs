//! Dynkin graph automorphisms, folding of the simply-laced systems to the
//! BCFG systems, the reflection product formula, and the extended McKay
//! correspondence data.
//!
//! A graph automorphism `tau` of the diagram qualifies for folding when no
//! vertex is adjacent to its image. Folding sums each `tau`-orbit of roots
//! into the fixed subspace; the folded simple system consists of the orbit
//! sums of the simple roots, ordered by the smallest source index. In that
//! order the folded Cartan matrix comes out in the Bourbaki ordering of the
//! target, which is what disambiguates the rank-2 label (A3 folds to B2,
//! D3 folds to C2, isomorphic systems with swapped node order).
//!
//! McKay data for the non-cyclic binary groups is table-driven; exact
//! character arithmetic for binary polyhedral groups would need cyclotomic
//! fields, out of proportion for the order bookkeeping it enables. The
//! orders are gated by the invariant `|Gamma'| = |Gamma| * |C|` and by the
//! folding table itself.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::exact::{dot, vec_add, Rat, RatMatrix, RatVec};
use crate::rootsys::{classify_cartan, reflect_in, DynkinType, Family, RootSystem};
use crate::weyl::reflection_matrix;

/// A permutation of the simple-root indices preserving the diagram, with
/// no vertex adjacent to its image.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism { perm: (0..rank).collect() }
    }

    pub fn from_perm(perm: Vec<usize>) -> Self {
        DiagramAutomorphism { perm }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn compose(&self, other: &Self) -> Self {
        DiagramAutomorphism {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        DiagramAutomorphism { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoldError {
    NotSimplyLaced(DynkinType),
    NotAnAutomorphism,
    AdjacentOrbit { node: usize, image: usize },
    NotASubgroup,
    AmbiguousFold,
    UnclassifiedResult,
    GraphTooSmall,
}

impl fmt::Display for FoldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoldError::NotSimplyLaced(t) => write!(f, "{t} is not simply laced"),
            FoldError::NotAnAutomorphism => write!(f, "permutation does not preserve the diagram"),
            FoldError::AdjacentOrbit { node, image } => write!(
                f,
                "nodes {node} and {image} are adjacent but swapped; not a Dynkin automorphism",
            ),
            FoldError::NotASubgroup => write!(f, "automorphism list is not closed as a subgroup"),
            FoldError::AmbiguousFold => {
                write!(f, "maximal-order elements disagree on the folded root set")
            }
            FoldError::UnclassifiedResult => write!(f, "folded Cartan matrix matches no type"),
            FoldError::GraphTooSmall => write!(f, "cyclic group order must be at least 2"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FoldError {}

fn diagram_adjacent(cartan: &RatMatrix, i: usize, j: usize) -> bool {
    i != j && !cartan[(i, j)].is_zero()
}

fn preserves_cartan(cartan: &RatMatrix, perm: &[usize]) -> bool {
    let r = cartan.rows();
    for i in 0..r {
        for j in 0..r {
            if cartan[(perm[i], perm[j])] != cartan[(i, j)] {
                return false;
            }
        }
    }
    true
}

fn dynkin_condition(cartan: &RatMatrix, perm: &[usize]) -> Result<(), FoldError> {
    for (i, &pi) in perm.iter().enumerate() {
        if pi != i && diagram_adjacent(cartan, i, pi) {
            return Err(FoldError::AdjacentOrbit { node: i, image: pi });
        }
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(n, cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All Dynkin graph automorphisms of the diagram: graph automorphisms such
/// that no vertex is adjacent to its image. Always contains the identity.
pub fn dynkin_automorphisms(t: DynkinType) -> Vec<DiagramAutomorphism> {
    let rs = RootSystem::build(t);
    let cartan = rs.cartan_matrix();
    permutations(t.rank())
        .into_iter()
        .filter(|p| preserves_cartan(&cartan, p))
        .filter(|p| dynkin_condition(&cartan, p).is_ok())
        .map(|perm| DiagramAutomorphism { perm })
        .collect()
}

/// The canonical folding subgroup of order 1, 2 or 6: trivial, the standard
/// involution, or all of S3 on the D4 outer nodes.
pub fn canonical_subgroup(
    t: DynkinType,
    group_order: usize,
) -> Result<Vec<DiagramAutomorphism>, FoldError> {
    let autos = dynkin_automorphisms(t);
    match group_order {
        1 => Ok(vec![DiagramAutomorphism::identity(t.rank())]),
        2 => {
            let invol = autos
                .iter()
                .filter(|a| a.order() == 2)
                .min()
                .cloned()
                .ok_or(FoldError::NotAnAutomorphism)?;
            Ok(vec![DiagramAutomorphism::identity(t.rank()), invol])
        }
        6 => {
            if autos.len() == 6 {
                Ok(autos)
            } else {
                Err(FoldError::NotAnAutomorphism)
            }
        }
        _ => Err(FoldError::NotAnAutomorphism),
    }
}

fn check_subgroup(rank: usize, c: &[DiagramAutomorphism]) -> Result<(), FoldError> {
    let set: BTreeSet<&DiagramAutomorphism> = c.iter().collect();
    if !set.contains(&DiagramAutomorphism::identity(rank)) {
        return Err(FoldError::NotASubgroup);
    }
    for a in c {
        if !set.contains(&a.inverse()) {
            return Err(FoldError::NotASubgroup);
        }
        for b in c {
            if !set.contains(&a.compose(b)) {
                return Err(FoldError::NotASubgroup);
            }
        }
    }
    Ok(())
}

/// Result of folding an ADE system by a Dynkin subgroup.
#[derive(Debug, Clone)]
pub struct FoldingResult {
    pub source: DynkinType,
    pub group_order: usize,
    pub folded_roots: Vec<RatVec>,
    pub folded_simple: Vec<RatVec>,
    pub folded_type: DynkinType,
}

/// Apply `tau` (a permutation of simple-root indices) to a vector given in
/// simple-root coordinates.
fn tau_on_coords(tau: &DiagramAutomorphism, c: &[Rat]) -> RatVec {
    let mut out = vec![Rat::zero(); c.len()];
    for (i, ci) in c.iter().enumerate() {
        out[tau.apply(i)] = ci.clone();
    }
    out
}

/// Orbit of a simple-coordinate vector under `tau`, in traversal order.
fn tau_orbit(tau: &DiagramAutomorphism, c: &RatVec) -> Vec<RatVec> {
    let mut orb = vec![c.clone()];
    let mut cur = tau_on_coords(tau, c);
    while &cur != c {
        orb.push(cur.clone());
        cur = tau_on_coords(tau, &cur);
    }
    orb
}

fn folded_root_set(rs: &RootSystem, tau: &DiagramAutomorphism) -> BTreeSet<RatVec> {
    let mut out = BTreeSet::new();
    for root in rs.roots() {
        let c = rs
            .simple_coordinates(root)
            .expect("roots lie in the simple-root span");
        let orbit = tau_orbit(tau, &c);
        let mut sum = vec![Rat::zero(); c.len()];
        for member in &orbit {
            sum = vec_add(&sum, member);
        }
        out.insert(rs.from_simple_coordinates(&sum));
    }
    out
}

/// Orbit sums of the simple roots under `tau`, ordered by the smallest
/// source index; this is a simple system for the folded roots and spans the
/// fixed subspace.
fn folded_simple_system(rs: &RootSystem, tau: &DiagramAutomorphism) -> Vec<RatVec> {
    let rank = rs.rank();
    let mut seen = vec![false; rank];
    let mut out: Vec<RatVec> = Vec::new();
    for i in 0..rank {
        if seen[i] {
            continue;
        }
        let mut sum = vec![Rat::zero(); rs.ambient_dim()];
        let mut j = i;
        loop {
            seen[j] = true;
            sum = vec_add(&sum, &rs.simple_roots()[j]);
            j = tau.apply(j);
            if j == i {
                break;
            }
        }
        out.push(sum);
    }
    out
}

/// Fold an ADE root system by a Dynkin subgroup: sum each orbit of a
/// maximal-order element, classify the result by its Cartan matrix.
///
/// The folded root set is computed for every maximal-order element of the
/// subgroup; a disagreement is a hard error (it never happens for the
/// admissible pairs, and the check is cheap).
pub fn fold(t: DynkinType, c: &[DiagramAutomorphism]) -> Result<FoldingResult, FoldError> {
    if !t.is_simply_laced() {
        return Err(FoldError::NotSimplyLaced(t));
    }
    let rs = RootSystem::build(t);
    let cartan = rs.cartan_matrix();
    for a in c {
        if a.perm.len() != t.rank() || !preserves_cartan(&cartan, &a.perm) {
            return Err(FoldError::NotAnAutomorphism);
        }
        dynkin_condition(&cartan, &a.perm)?;
    }
    check_subgroup(t.rank(), c)?;

    let max_order = c.iter().map(|a| a.order()).max().unwrap_or(1);
    let maximal: Vec<&DiagramAutomorphism> =
        c.iter().filter(|a| a.order() == max_order).collect();
    let tau = maximal[0];

    let folded = folded_root_set(&rs, tau);
    for other in &maximal[1..] {
        if folded_root_set(&rs, other) != folded {
            return Err(FoldError::AmbiguousFold);
        }
    }

    let folded_simple = folded_simple_system(&rs, tau);
    let k = folded_simple.len();
    let mut folded_cartan = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            folded_cartan[(i, j)] = rs.cartan_pairing(&folded_simple[i], &folded_simple[j]);
        }
    }
    let folded_type = classify_cartan(&folded_cartan).ok_or(FoldError::UnclassifiedResult)?;

    let folded_roots: Vec<RatVec> = folded.into_iter().collect();
    if folded_roots.len() != folded_type.root_count() {
        return Err(FoldError::UnclassifiedResult);
    }
    Ok(FoldingResult {
        source: t,
        group_order: c.len(),
        folded_roots,
        folded_simple,
        folded_type,
    })
}

/// Check `s_{alpha_O} = prod_{alpha' in O(alpha)} s_{alpha'}` restricted to
/// the fixed subspace of `tau`, by exact matrix comparison on the basis of
/// orbit sums of simple roots.
///
/// The reflections in one orbit commute (orbit members are pairwise
/// orthogonal; verified), so the product order does not matter.
pub fn verify_reflection_formula(
    t: DynkinType,
    c: &[DiagramAutomorphism],
    alpha: &[Rat],
) -> Result<bool, FoldError> {
    if !t.is_simply_laced() {
        return Err(FoldError::NotSimplyLaced(t));
    }
    let rs = RootSystem::build(t);
    if !rs.is_root(alpha) {
        return Err(FoldError::NotAnAutomorphism);
    }
    let cartan = rs.cartan_matrix();
    for a in c {
        dynkin_condition(&cartan, &a.perm)?;
    }
    check_subgroup(t.rank(), c)?;
    let max_order = c.iter().map(|a| a.order()).max().unwrap_or(1);
    let tau = c.iter().find(|a| a.order() == max_order).unwrap();

    let coords = rs
        .simple_coordinates(alpha)
        .expect("root lies in the simple-root span");
    let orbit: Vec<RatVec> = tau_orbit(tau, &coords)
        .iter()
        .map(|cc| rs.from_simple_coordinates(cc))
        .collect();
    for (i, a) in orbit.iter().enumerate() {
        for b in orbit.iter().skip(i + 1) {
            if !dot(a, b).is_zero() {
                return Ok(false);
            }
        }
    }
    let mut alpha_o = vec![Rat::zero(); rs.ambient_dim()];
    for member in &orbit {
        alpha_o = vec_add(&alpha_o, member);
    }

    let basis = folded_simple_system(&rs, tau);
    let dim = rs.ambient_dim();
    let product: RatMatrix = orbit.iter().fold(RatMatrix::identity(dim), |acc, a| {
        reflection_matrix(dim, a).mul(&acc)
    });

    for b in &basis {
        let lhs = reflect_in(&alpha_o, b);
        let rhs = product.mul_vec(b);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// McKay correspondence data for an irreducible type: the homogeneous
/// diagram, the symmetry order, and the orders of the two finite subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayDatum {
    pub delta: DynkinType,
    pub delta_h: DynkinType,
    pub symmetry_order: u64,
    pub gamma_order: u64,
    pub gamma_prime_order: u64,
}

/// The extended McKay correspondence at the level of group orders.
///
/// ADE rows carry the classical bijection (cyclic, binary dihedral, binary
/// tetrahedral/octahedral/icosahedral); BCFG rows compose with the folding
/// table and multiply orders.
pub fn mckay_datum(t: DynkinType) -> McKayDatum {
    let n = t.rank() as u64;
    let (delta_h, symmetry_order, gamma_order) = match t.family() {
        Family::A => (t, 1, n + 1),
        Family::D => (t, 1, 4 * (n - 2)),
        Family::E => {
            let g = match t.rank() {
                6 => 24,
                7 => 48,
                _ => 120,
            };
            (t, 1, g)
        }
        // B_k folds from A_{2k-1} (cyclic of order 2k)
        Family::B => (
            DynkinType::new(Family::A, 2 * t.rank() - 1).unwrap(),
            2,
            2 * n,
        ),
        // C_k folds from D_{k+1} (binary dihedral of order 4(k-1))
        Family::C => (
            DynkinType::new(Family::D, t.rank() + 1).unwrap(),
            2,
            4 * (n - 1),
        ),
        // F4 folds from E6 (binary tetrahedral)
        Family::F => (DynkinType::new(Family::E, 6).unwrap(), 2, 24),
        // G2 folds from D4 (binary dihedral of order 8, symmetry S3)
        Family::G => (DynkinType::new(Family::D, 4).unwrap(), 6, 8),
    };
    McKayDatum {
        delta: t,
        delta_h,
        symmetry_order,
        gamma_order,
        gamma_prime_order: gamma_order * symmetry_order,
    }
}

/// Multigraph on the characters of Z/n produced by tensoring with the
/// two-dimensional representation diag(zeta, zeta^{-1}): character k is
/// joined to k+1 and k-1 (mod n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayGraph {
    pub nodes: usize,
    /// adjacency[i][j] = number of edges between characters i and j
    pub adjacency: Vec<Vec<usize>>,
}

impl McKayGraph {
    /// The graph is the affine A_{n-1} cycle: every node has total degree 2,
    /// concentrated on its two cyclic neighbours (which coincide at n = 2).
    pub fn is_affine_a_cycle(&self) -> bool {
        let n = self.nodes;
        for i in 0..n {
            for j in 0..n {
                let expected = if n == 2 {
                    if i != j {
                        2
                    } else {
                        0
                    }
                } else if j == (i + 1) % n || (j + 1) % n == i {
                    1
                } else {
                    0
                };
                if self.adjacency[i][j] != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// McKay graph of the cyclic subgroup of order `n >= 2`.
pub fn cyclic_mckay_graph(n: usize) -> Result<McKayGraph, FoldError> {
    if n < 2 {
        return Err(FoldError::GraphTooSmall);
    }
    let mut adjacency = vec![vec![0usize; n]; n];
    for k in 0..n {
        adjacency[k][(k + 1) % n] += 1;
        adjacency[k][(k + n - 1) % n] += 1;
    }
    Ok(McKayGraph { nodes: n, adjacency })
}

//! Weyl group actions: reflections, orbits, stabilizers, parabolic
//! subgroups, and full enumeration under a size cap.
//!
//! Orbits never enumerate the group: a breadth-first closure under the
//! simple reflections with exact deduplication handles even E-type orbits
//! cheaply. Full enumeration is kept behind an explicit cap since the large
//! exceptional groups are out of reach (and out of need).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::exact::{dot, rint, Rat, RatMatrix, RatVec};
use crate::rootsys::{classify_cartan, reflect_in, RootSystem};

/// An exact orthogonal transformation of the ambient space, tagged with a
/// word in the simple reflections when one is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: RatMatrix,
    pub word: Vec<usize>,
}

/// Parabolic subgroup `W_J`, recorded by the generating simple-root indices
/// (0-based) together with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSubgroup {
    pub generator_indices: Vec<usize>,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeylError {
    NotARoot,
    NotDominant,
    CapExceeded { order: u64, cap: u64 },
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::NotARoot => write!(f, "reflection vector is not a root"),
            WeylError::NotDominant => write!(f, "weight is not dominant"),
            WeylError::CapExceeded { order, cap } => {
                write!(f, "Weyl group order {order} exceeds enumeration cap {cap}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WeylError {}

/// Reflection of a weight in a root of the system.
pub fn reflect(rs: &RootSystem, alpha: &[Rat], v: &[Rat]) -> Result<RatVec, WeylError> {
    if !rs.is_root(alpha) {
        return Err(WeylError::NotARoot);
    }
    Ok(reflect_in(alpha, v))
}

/// Ambient matrix of the reflection in `alpha`.
pub fn reflection_matrix(dim: usize, alpha: &[Rat]) -> RatMatrix {
    let norm = dot(alpha, alpha);
    let mut m = RatMatrix::identity(dim);
    for r in 0..dim {
        for c in 0..dim {
            let corr = rint(2) * &alpha[r] * &alpha[c] / &norm;
            m[(r, c)] = &m[(r, c)] - &corr;
        }
    }
    m
}

/// Weyl orbit of a weight: breadth-first closure under the simple
/// reflections with exact deduplication. Returned sorted for determinism.
pub fn orbit(rs: &RootSystem, v: &[Rat]) -> Vec<RatVec> {
    let mut seen: BTreeSet<RatVec> = BTreeSet::new();
    seen.insert(v.to_vec());
    let mut frontier = vec![v.to_vec()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for alpha in rs.simple_roots() {
                let r = reflect_in(alpha, w);
                if seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// The dominant representative of the orbit of `v`.
pub fn dominantize(rs: &RootSystem, v: &[Rat]) -> RatVec {
    let mut w = v.to_vec();
    'outer: loop {
        for alpha in rs.simple_roots() {
            if dot(&w, alpha).is_negative() {
                w = reflect_in(alpha, &w);
                continue 'outer;
            }
        }
        return w;
    }
}

/// Stabilizer of a dominant weight as a parabolic subgroup:
/// `J = { i : <lambda, alpha_i> = 0 }`.
pub fn stabilizer_face(rs: &RootSystem, lambda: &[Rat]) -> Result<ParabolicSubgroup, WeylError> {
    if !rs.is_dominant(lambda) {
        return Err(WeylError::NotDominant);
    }
    let indices: Vec<usize> = rs
        .simple_roots()
        .iter()
        .enumerate()
        .filter(|(_, a)| dot(lambda, a).is_zero())
        .map(|(i, _)| i)
        .collect();
    let order = parabolic_order(rs, &indices);
    Ok(ParabolicSubgroup { generator_indices: indices, order })
}

/// Order of the parabolic subgroup generated by the simple reflections in
/// `J`, computed by classifying the sub-root-system on those nodes and
/// multiplying the component Weyl orders. No subgroup enumeration.
pub fn parabolic_order(rs: &RootSystem, j: &[usize]) -> u64 {
    if j.is_empty() {
        return 1;
    }
    let cartan = rs.cartan_matrix();
    let mut remaining: Vec<usize> = j.to_vec();
    let mut order = 1u64;
    while let Some(start) = remaining.first().copied() {
        // connected component of the induced subdiagram containing `start`
        let mut component = vec![start];
        let mut frontier = vec![start];
        remaining.retain(|&x| x != start);
        while let Some(node) = frontier.pop() {
            let linked: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&other| !cartan[(node, other)].is_zero())
                .collect();
            for l in linked {
                remaining.retain(|&x| x != l);
                component.push(l);
                frontier.push(l);
            }
        }
        component.sort_unstable();
        let k = component.len();
        let mut sub = RatMatrix::zeros(k, k);
        for (a, &ia) in component.iter().enumerate() {
            for (b, &ib) in component.iter().enumerate() {
                sub[(a, b)] = cartan[(ia, ib)].clone();
            }
        }
        let t = classify_cartan(&sub).expect("parabolic component is an admissible type");
        order *= t.weyl_order();
    }
    order
}

/// Weyl group order via the product of the invariant degrees.
pub fn order(rs: &RootSystem) -> u64 {
    rs.dynkin().weyl_order()
}

/// Enumerate the whole group by breadth-first closure over right
/// multiplication by the simple reflections, refusing when the order
/// exceeds `cap`.
pub fn enumerate(rs: &RootSystem, cap: u64) -> Result<Vec<WeylElement>, WeylError> {
    let n = order(rs);
    if n > cap {
        return Err(WeylError::CapExceeded { order: n, cap });
    }
    let dim = rs.ambient_dim();
    let gens: Vec<RatMatrix> = rs
        .simple_roots()
        .iter()
        .map(|a| reflection_matrix(dim, a))
        .collect();
    let id = RatMatrix::identity(dim);
    let mut seen: BTreeSet<RatMatrix> = BTreeSet::new();
    seen.insert(id.clone());
    let mut out = vec![WeylElement { matrix: id, word: Vec::new() }];
    let mut frontier = vec![out[0].clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for (i, g) in gens.iter().enumerate() {
                let m = w.matrix.mul(g);
                if seen.insert(m.clone()) {
                    let mut word = w.word.clone();
                    word.push(i);
                    let elem = WeylElement { matrix: m, word };
                    out.push(elem.clone());
                    next.push(elem);
                }
            }
        }
        frontier = next;
    }
    debug_assert_eq!(out.len() as u64, n);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{vec_neg, vec_sub};
    use crate::rootsys::{all_types, DynkinType, Family};

    fn sys(name: &str) -> RootSystem {
        RootSystem::build(DynkinType::parse(name).unwrap())
    }

    #[test]
    fn reflect_root_to_negative() {
        let rs = sys("A1");
        let a = rs.simple_roots()[0].clone();
        assert_eq!(reflect(&rs, &a, &a).unwrap(), vec_neg(&a));
    }

    #[test]
    fn reflect_fixes_orthogonal() {
        let rs = sys("A2");
        // v = alpha_1 + 2 alpha_2 is orthogonal to alpha_1 in A2
        let a1 = rs.simple_roots()[0].clone();
        let a2 = rs.simple_roots()[1].clone();
        let v: RatVec = (0..rs.ambient_dim())
            .map(|d| &a1[d] + rint(2) * &a2[d])
            .collect();
        assert!(dot(&v, &a1).is_zero());
        assert_eq!(reflect(&rs, &a1, &v).unwrap(), v);
    }

    #[test]
    fn reflect_omega1_a2() {
        let rs = sys("A2");
        let w1 = rs.fundamental_weights()[0].clone();
        let a1 = rs.simple_roots()[0].clone();
        assert_eq!(reflect(&rs, &a1, &w1).unwrap(), vec_sub(&w1, &a1));
    }

    #[test]
    fn reflect_rejects_non_root() {
        let rs = sys("A2");
        let v = rs.fundamental_weights()[0].clone();
        assert_eq!(reflect(&rs, &v, &v), Err(WeylError::NotARoot));
    }

    #[test]
    fn orbit_sizes() {
        let a2 = sys("A2");
        assert_eq!(orbit(&a2, &a2.fundamental_weights()[0]).len(), 3);
        let zero = vec![rint(0); a2.ambient_dim()];
        assert_eq!(orbit(&a2, &zero).len(), 1);
        let b2 = sys("B2");
        assert_eq!(orbit(&b2, &b2.fundamental_weights()[0]).len(), 4);
        assert_eq!(orbit(&b2, &b2.fundamental_weights()[1]).len(), 4);
    }

    #[test]
    fn stabilizer_examples() {
        let a2 = sys("A2");
        let w1 = a2.fundamental_weights()[0].clone();
        let p = stabilizer_face(&a2, &w1).unwrap();
        assert_eq!(p.generator_indices, vec![1]);
        assert_eq!(p.order, 2);

        // strictly dominant: rho = omega_1 + omega_2
        let ws = a2.fundamental_weights();
        let rho: RatVec = (0..a2.ambient_dim()).map(|d| &ws[0][d] + &ws[1][d]).collect();
        let p = stabilizer_face(&a2, &rho).unwrap();
        assert!(p.generator_indices.is_empty());
        assert_eq!(p.order, 1);
    }

    #[test]
    fn stabilizer_an_omega1_is_symmetric_group() {
        for n in 2..=5usize {
            let rs = RootSystem::build(DynkinType::new(Family::A, n).unwrap());
            let w1 = rs.fundamental_weights()[0].clone();
            let p = stabilizer_face(&rs, &w1).unwrap();
            let factorial: u64 = (1..=n as u64).product();
            assert_eq!(p.order, factorial, "A{n}: W_J = S_{n}");
        }
    }

    #[test]
    fn stabilizer_rejects_non_dominant() {
        let rs = sys("A2");
        let w1 = rs.fundamental_weights()[0].clone();
        assert_eq!(stabilizer_face(&rs, &vec_neg(&w1)), Err(WeylError::NotDominant));
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(&sys("A1"), 10).unwrap().len(), 2);
        assert_eq!(enumerate(&sys("A2"), 100).unwrap().len(), 6);
        assert_eq!(enumerate(&sys("A3"), 100).unwrap().len(), 24);
    }

    #[test]
    fn enumerate_cap() {
        let rs = sys("B4");
        assert!(matches!(
            enumerate(&rs, 100),
            Err(WeylError::CapExceeded { order: 384, cap: 100 })
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(order(&sys("B2")), 8);
        assert_eq!(order(&sys("G2")), 12);
        assert_eq!(order(&sys("E6")), 51840);
    }

    #[test]
    fn order_matches_enumeration_low_rank() {
        for t in all_types(3) {
            let rs = RootSystem::build(t);
            let n = order(&rs);
            assert_eq!(enumerate(&rs, 1_000_000).unwrap().len() as u64, n, "{t}");
        }
    }

    #[test]
    fn every_element_permutes_roots_rank2() {
        for name in ["A2", "B2", "G2"] {
            let rs = sys(name);
            for w in enumerate(&rs, 1000).unwrap() {
                for r in rs.roots() {
                    assert!(rs.is_root(&w.matrix.mul_vec(r)), "{name}");
                }
            }
        }
    }

    #[test]
    fn reflections_are_involutions() {
        for name in ["A2", "B2", "G2", "A3"] {
            let rs = sys(name);
            let dim = rs.ambient_dim();
            for a in rs.roots() {
                let m = reflection_matrix(dim, a);
                assert_eq!(m.mul(&m), RatMatrix::identity(dim), "{name}");
            }
        }
    }

    #[test]
    fn orbit_stabilizer_rank_up_to_4() {
        for t in all_types(4) {
            let rs = RootSystem::build(t);
            for w in rs.fundamental_weights() {
                let orb = orbit(&rs, &w).len() as u64;
                let p = stabilizer_face(&rs, &w).unwrap();
                assert_eq!(orb * p.order, order(&rs), "{t}: orbit-stabilizer");
            }
        }
    }

    #[test]
    fn orbit_fixed_setwise_by_simple_reflections() {
        let rs = sys("B3");
        let orb: BTreeSet<RatVec> =
            orbit(&rs, &rs.fundamental_weights()[1]).into_iter().collect();
        for a in rs.simple_roots() {
            for v in &orb {
                assert!(orb.contains(&reflect_in(a, v)));
            }
        }
    }
}

use num_traits::{One, Zero};

use super::offsets::OffsetSet;
use super::poly::RatPoly;
use super::rational::{factorial, int, Rational};

/// Lagrange basis on the offsets: `L_i(x) = ∏_{j≠i} (x − k_j)/(k_i − k_j)`,
/// one polynomial of degree `N − 1` per offset, in offset order.
pub fn lagrange_basis(offsets: &OffsetSet) -> Vec<RatPoly> {
    let nodes = offsets.as_slice();
    let full = RatPoly::from_roots(nodes.iter().copied());
    nodes
        .iter()
        .map(|&ki| {
            let numerator = divide_by_linear(&full, ki);
            let denominator =
                nodes.iter().filter(|&&kj| kj != ki).fold(Rational::one(), |acc, &kj| acc * int(ki - kj));
            numerator.scale(&denominator.recip())
        })
        .collect()
}

/// Synthetic division of `poly` by `(x − root)`; `root` must be a root.
fn divide_by_linear(poly: &RatPoly, root: i64) -> RatPoly {
    let coeffs = poly.coeffs();
    let degree = coeffs.len() - 1;
    let root = int(root);
    let mut quotient = vec![Rational::zero(); degree];
    let mut carry = Rational::zero();
    for p in (1..=degree).rev() {
        carry = &coeffs[p] + carry * &root;
        quotient[p - 1] = carry.clone();
    }
    debug_assert!((&coeffs[0] + carry * &root).is_zero(), "not a root");
    RatPoly::from_coeffs(quotient)
}

/// `L_i^{(ℓ)}(0) = ℓ! · [x^ℓ] L_i` for every basis polynomial. Orders beyond
/// the degree give zeros.
pub fn derivatives_at_zero(basis: &[RatPoly], ell: u32) -> Vec<Rational> {
    let scale = Rational::from_integer(factorial(ell));
    basis.iter().map(|l| l.coeff(ell as usize) * &scale).collect()
}

/// `s(x) = ∏(x − k_i)`, `P(x) = x^N − s(x)` and
/// `Q(x) = x^{N+1} − (x + Σk_i)·s(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxPolynomials {
    pub s: RatPoly,
    pub p: RatPoly,
    pub q: RatPoly,
}

pub fn aux_polynomials(offsets: &OffsetSet) -> AuxPolynomials {
    let n = offsets.len();
    let s = RatPoly::from_roots(offsets.iter());
    let p = &RatPoly::monomial(Rational::one(), n) - &s;
    let shift = RatPoly::from_coeffs(vec![int(offsets.iter().sum()), Rational::one()]);
    let q = &RatPoly::monomial(Rational::one(), n + 1) - &(&shift * &s);
    AuxPolynomials { s, p, q }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// Brute-force product of linear factors, independent of the synthetic
    /// division path.
    fn product_oracle(nodes: &[i64], i: usize) -> RatPoly {
        let mut poly = RatPoly::one();
        for (j, &kj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let factor =
                RatPoly::from_coeffs(vec![int(-kj), Rational::one()]).scale(&int(nodes[i] - kj).recip());
            poly = &poly * &factor;
        }
        poly
    }

    fn set(v: &[i64]) -> OffsetSet {
        OffsetSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn three_point_basis_node_zero() {
        let basis = lagrange_basis(&set(&[-1, 0, 1]));
        assert_eq!(basis[1], RatPoly::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn single_node_basis_is_one() {
        assert_eq!(lagrange_basis(&set(&[0])), vec![RatPoly::one()]);
    }

    #[test]
    fn four_point_basis_node_minus_two() {
        let basis = lagrange_basis(&set(&[-2, -1, 0, 1]));
        let expected = RatPoly::from_coeffs(vec![int(0), rat(1, 6), int(0), rat(-1, 6)]);
        assert_eq!(basis[0], expected);
        assert_eq!(derivatives_at_zero(&basis, 2)[0], int(0));
    }

    #[test]
    fn basis_matches_product_oracle() {
        for nodes in [&[-3, -1, 0, 2, 5][..], &[-2, -1, 1, 2], &[0, 1, 2, 3, 4, 5, 6]] {
            let basis = lagrange_basis(&set(nodes));
            for (i, l) in basis.iter().enumerate() {
                assert_eq!(*l, product_oracle(nodes, i), "nodes {nodes:?}, i={i}");
            }
        }
    }

    #[test]
    fn kronecker_at_nodes() {
        let offsets = set(&[-4, -1, 0, 3]);
        let basis = lagrange_basis(&offsets);
        for (i, l) in basis.iter().enumerate() {
            assert_eq!(l.degree(), Some(3));
            for (j, k) in offsets.iter().enumerate() {
                let expected = if i == j { int(1) } else { int(0) };
                assert_eq!(l.eval(&int(k)), expected);
            }
        }
    }

    #[test]
    fn second_derivatives_three_point() {
        let basis = lagrange_basis(&set(&[-1, 0, 1]));
        assert_eq!(derivatives_at_zero(&basis, 2), vec![int(1), int(-2), int(1)]);
        assert_eq!(derivatives_at_zero(&basis, 3), vec![int(0); 3]);
    }

    #[test]
    fn first_derivatives_four_point() {
        let basis = lagrange_basis(&set(&[-2, -1, 0, 1]));
        assert_eq!(derivatives_at_zero(&basis, 1), vec![rat(1, 6), int(-1), rat(1, 2), rat(1, 3)]);
    }

    #[test]
    fn zeroth_derivative_is_node_zero_indicator() {
        for nodes in [&[-1, 0, 1][..], &[-5, -2, 0, 3], &[0, 1, 2]] {
            let offsets = set(nodes);
            let values = derivatives_at_zero(&lagrange_basis(&offsets), 0);
            for (k, v) in offsets.iter().zip(values) {
                assert_eq!(v, if k == 0 { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn aux_polynomials_three_point() {
        let aux = aux_polynomials(&set(&[-1, 0, 1]));
        assert_eq!(aux.s, RatPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(aux.p, RatPoly::from_ints(&[0, 1]));
        assert_eq!(aux.q, RatPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn aux_polynomials_single_node() {
        let aux = aux_polynomials(&set(&[0]));
        assert_eq!(aux.s, RatPoly::x());
        assert!(aux.p.is_zero());
        assert!(aux.q.is_zero());
    }

    #[test]
    fn aux_p_interpolates_next_power() {
        let offsets = set(&[-2, -1, 0, 1]);
        let aux = aux_polynomials(&offsets);
        assert!(aux.p.degree().unwrap() <= 3);
        assert!(aux.q.degree().unwrap() <= 3);
        for k in offsets.iter() {
            assert_eq!(aux.p.eval(&int(k)), int(k.pow(4)));
            assert_eq!(aux.q.eval(&int(k)), int(k.pow(5)));
        }
    }
}

use fdscheme::exact::{
    aux_polynomials, derivatives_at_zero, factorial, int, lagrange_basis, OffsetSet, RatPoly, Rational,
};
use fdscheme::scheme::{
    error_term, first_order_scheme, master_scheme, nonlinear_layers, Scheme, SchemeDump, SchemeSpec,
};
use proptest::prelude::*;

fn offset_set(size: usize) -> impl Strategy<Value = OffsetSet> {
    prop::collection::btree_set(-9i64..=9, size)
        .prop_map(|set| OffsetSet::new(set.into_iter().collect()).unwrap())
}

fn kpow(k: i64, p: usize) -> Rational {
    int(k.pow(p as u32))
}

fn factorial_ratio(num: u32, den: u32) -> Rational {
    Rational::from_integer(factorial(num)) / Rational::from_integer(factorial(den))
}

fn build(m: u32, n: u32, offsets: OffsetSet) -> Scheme {
    master_scheme(&SchemeSpec::new(m, n, offsets).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vandermonde_and_beyond_range(offsets in (1usize..=9).prop_flat_map(offset_set)) {
        let ks = offsets.as_slice();
        let n = ks.len();
        let basis = lagrange_basis(&offsets);
        let aux = aux_polynomials(&offsets);
        let weighted = |p: usize| -> RatPoly { basis.iter().zip(ks).map(|(l, &k)| l.scale(&kpow(k, p))).sum() };
        for p in 0..n {
            prop_assert_eq!(weighted(p), RatPoly::monomial(int(1), p));
        }
        prop_assert_eq!(weighted(n), aux.p);
        prop_assert_eq!(weighted(n + 1), aux.q);
    }

    #[test]
    fn kronecker(offsets in (1usize..=9).prop_flat_map(offset_set)) {
        let ks = offsets.as_slice();
        let basis = lagrange_basis(&offsets);
        for ell in 0..ks.len() {
            let d = derivatives_at_zero(&basis, ell as u32);
            for j in 0..ks.len() {
                let sum: Rational = d.iter().zip(ks).map(|(w, &k)| w * kpow(k, j)).sum();
                let expected = if j == ell { factorial_ratio(ell as u32, 0) } else { int(0) };
                prop_assert_eq!(sum, expected);
            }
        }
    }

    #[test]
    fn basis_interpolates_nodes(offsets in (1usize..=9).prop_flat_map(offset_set)) {
        let basis = lagrange_basis(&offsets);
        for (i, l) in basis.iter().enumerate() {
            for (j, k) in offsets.iter().enumerate() {
                prop_assert_eq!(l.eval(&int(k)), int(i64::from(i == j)));
            }
        }
    }

    #[test]
    fn advection_collapses_to_lagrange_basis(offsets in (2usize..=11).prop_flat_map(offset_set)) {
        let n = offsets.len() as u32 - 1;
        let scheme = build(1, n, offsets.clone());
        let basis = lagrange_basis(&offsets);
        prop_assert_eq!(scheme.coeffs(), basis.as_slice());
        let table = nonlinear_layers(n, &offsets).unwrap();
        prop_assert_eq!(table.layers(), scheme.layers());
    }

    #[test]
    fn higher_derivative_layers_come_from_advection(
        (m, n, offsets) in (2u32..=3, 1u32..=3)
            .prop_flat_map(|(m, n)| (Just(m), Just(n), offset_set((m * n + 1) as usize)))
    ) {
        let scheme = build(m, n, offsets.clone());
        let advection = build(1, m * n, offsets);
        for j in 0..=n {
            let factor = factorial_ratio(j * m, j);
            let picked: Vec<Rational> =
                advection.layers()[(j * m) as usize].iter().map(|w| w * &factor).collect();
            prop_assert_eq!(&scheme.layers()[j as usize], &picked);
        }
    }

    #[test]
    fn order_conditions_hold(
        (m, n, offsets) in (1u32..=4, 1u32..=3)
            .prop_flat_map(|(m, n)| (Just(m), Just(n), offset_set((m * n + 1) as usize)))
    ) {
        let scheme = build(m, n, offsets);
        let ks = scheme.offsets().as_slice().to_vec();
        for p in 0..=(m * n) as usize {
            let sum: RatPoly =
                scheme.coeffs().iter().zip(&ks).map(|(c, &k)| c.scale(&kpow(k, p))).sum();
            let expected = if p % m as usize == 0 {
                let j = (p / m as usize) as u32;
                RatPoly::monomial(factorial_ratio(j * m, j), j as usize)
            } else {
                RatPoly::zero()
            };
            prop_assert_eq!(sum, expected);
        }
    }

    #[test]
    fn advection_error_is_minus_node_product(offsets in (2usize..=8).prop_flat_map(offset_set)) {
        let n = offsets.len() as u32 - 1;
        let term = error_term(&build(1, n, offsets.clone()));
        prop_assert_eq!(term.component(offsets.len()).coefficient, -RatPoly::from_roots(offsets.iter()));
    }

    #[test]
    fn dump_round_trips(
        (m, n, offsets) in (1u32..=3, 1u32..=3)
            .prop_flat_map(|(m, n)| (Just(m), Just(n), offset_set((m * n + 1) as usize)))
    ) {
        let scheme = build(m, n, offsets);
        let text = SchemeDump::from_scheme(&scheme).to_toml();
        let back = SchemeDump::from_toml(&text).unwrap().to_scheme().unwrap();
        prop_assert_eq!(back.coeffs(), scheme.coeffs());
    }
}

#[test]
fn closed_form_matches_master_formula_up_to_m_8() {
    for m in 1..=8 {
        for r in 0..=m {
            let closed = first_order_scheme(m, r).unwrap();
            let master = master_scheme(closed.spec()).unwrap();
            assert_eq!(closed.coeffs(), master.coeffs(), "m={m} r={r}");
        }
    }
}

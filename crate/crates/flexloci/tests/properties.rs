//! Randomized property tests: oracle equivalences, ring identities and
//! classification laws over generated inputs.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use flexloci::{
    catalan_closed, catalan_recursive, classify_locus, contact_order, is_kflex_line,
    mul_sigma1_power_closed, mul_sigma1_power_iter, n_k_lambda, n_k_mu, phi_mul, taylor_coeffs,
    taylor_coeffs_via_derivatives, ContactOrder, LocusClass, MultiPoly, PhiElement, ProjPoint,
    Rational, SchubertIndex,
};

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A random homogeneous polynomial together with two distinct projective
/// points of matching dimension.
fn poly_with_points() -> impl Strategy<Value = (MultiPoly, ProjPoint, ProjPoint)> {
    (2usize..=4, 1u32..=5).prop_flat_map(|(n, degree)| {
        let nvars = n + 1;
        let term = (prop::collection::vec(0u32..=degree, nvars), -5i64..=5)
            .prop_map(move |(mut exps, c)| {
                // force the exponent vector onto the degree-d simplex
                let mut total: u32 = exps.iter().sum();
                let mut i = 0;
                while total > degree {
                    let cut = (total - degree).min(exps[i]);
                    exps[i] -= cut;
                    total -= cut;
                    i += 1;
                }
                exps[0] += degree - total;
                (exps, c)
            });
        let coords = || prop::collection::vec(-4i64..=4, nvars);
        (
            prop::collection::vec(term, 1..=6),
            coords(),
            coords(),
        )
            .prop_filter_map("degenerate instance", move |(terms, p, q)| {
                let mut f = MultiPoly::zero(nvars);
                for (exps, c) in terms {
                    f.add_term(exps, Rational::from(BigInt::from(c)));
                }
                if f.is_zero() {
                    return None;
                }
                let nonzero = |v: &[i64]| v.iter().any(|&c| c != 0);
                if !nonzero(&p) || !nonzero(&q) {
                    return None;
                }
                let to_point = |v: Vec<i64>| {
                    ProjPoint::new(v.into_iter().map(|c| Rational::from(BigInt::from(c))).collect())
                        .unwrap()
                };
                let (p, q) = (to_point(p), to_point(q));
                if p.proj_eq(&q) {
                    return None;
                }
                Some((f, p, q))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn catalan_closed_matches_recursive(a in 1u64..=5, u in 0u64..=20, v in 0u64..=24) {
        prop_assert_eq!(catalan_closed(a, u, v).unwrap(), catalan_recursive(a, u, v).unwrap());
    }

    #[test]
    fn pieri_power_closed_matches_iter(n in 2u32..=7, a in 0u32..=6, b in 0u32..=6, m in 0u32..=12) {
        prop_assume!(b <= a && a < n);
        prop_assert_eq!(
            mul_sigma1_power_closed(n, SchubertIndex::new(a, b), m).unwrap(),
            mul_sigma1_power_iter(n, SchubertIndex::new(a, b), m).unwrap()
        );
    }

    #[test]
    fn lambda_and_mu_routes_agree(n in 2i64..=6, d in 1i64..=14, k in 1i64..=14) {
        prop_assume!(k > n && k <= (2 * n - 1).min(d + 1));
        prop_assert_eq!(n_k_lambda(n, d, k).unwrap(), n_k_mu(n, d, k).unwrap());
    }

    #[test]
    fn classification_partitions_parameter_space(n in 2i64..=10, d in 1i64..=25, k in 1i64..=30) {
        let k_eff = k.min(d + 1);
        let got = classify_locus(n, d, k).unwrap();
        match got {
            LocusClass::WholeHypersurface => prop_assert!(k_eff <= n),
            LocusClass::Empty => {
                prop_assert!(k_eff > 2 * n - 1 || (k_eff == 2 * n - 1 && k_eff == d + 1))
            }
            LocusClass::Proper(dim) => {
                prop_assert!(k_eff > n && k_eff < 2 * n);
                prop_assert_eq!(dim, 2 * n - k_eff - 1);
                prop_assert!((0..n).contains(&dim));
            }
        }
        // stabilization: any k beyond d+1 reports the same class
        prop_assert_eq!(got, classify_locus(n, d, k_eff).unwrap());
    }

    #[test]
    fn incidence_ring_is_commutative_and_associative(
        n in 2u32..=5,
        c in 0i64..=4, s in 0i64..=4, z in 0i64..=3,
        c2 in 0i64..=4, s2 in 0i64..=4, z2 in 0i64..=3,
    ) {
        // elements generated by scalars, sigma_1 and zeta stay inside the
        // supported multiplication fragment
        let gen_elem = |c: i64, s: i64, z: i64| {
            let mut sigma_part = flexloci::ChowElement::zero(n);
            sigma_part.add_term(SchubertIndex::new(1, 0), BigInt::from(s));
            let sigma = PhiElement::from_chow(sigma_part);
            let e = PhiElement::one(n).scale(&BigInt::from(c)).add(&sigma).unwrap();
            e.add(&PhiElement::zeta(n).scale(&BigInt::from(z))).unwrap()
        };
        let x = gen_elem(c, s, z);
        let y = gen_elem(c2, s2, z2);
        let zet = PhiElement::zeta(n);
        prop_assert_eq!(phi_mul(&x, &y).unwrap(), phi_mul(&y, &x).unwrap());
        let left = phi_mul(&phi_mul(&x, &y).unwrap(), &zet).unwrap();
        let right = phi_mul(&x, &phi_mul(&y, &zet).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn taylor_paths_agree_and_reconstruct(
        (f, p, q) in poly_with_points(),
        t_num in -6i64..=6,
        t_den in 1i64..=4,
    ) {
        let substitution = taylor_coeffs(&f, &p, &q).unwrap();
        let derivatives = taylor_coeffs_via_derivatives(&f, &p, &q).unwrap();
        prop_assert_eq!(&substitution, &derivatives);

        let t0 = rational(t_num, t_den);
        let shifted: Vec<Rational> = p
            .coords()
            .iter()
            .zip(q.coords())
            .map(|(a, b)| a + &t0 * b)
            .collect();
        let mut sum = Rational::zero();
        let mut t_pow = Rational::one();
        let mut factorial = BigInt::one();
        for (l, coeff) in substitution.iter().enumerate() {
            if l > 0 {
                factorial *= BigInt::from(l);
            }
            sum += coeff * &t_pow / Rational::from(factorial.clone());
            t_pow *= &t0;
        }
        prop_assert_eq!(sum, f.eval(&shifted));
    }

    #[test]
    fn contact_order_laws((f, p, q) in poly_with_points(), k in 1u32..=8) {
        let order = contact_order(&f, &p, &q).unwrap();
        // order >= 1 iff p lies on the hypersurface
        let on_hypersurface = f.eval(p.coords()).is_zero();
        prop_assert_eq!(order.at_least(1), on_hypersurface);
        // k-flex predicate is consistent with the order
        prop_assert_eq!(is_kflex_line(&f, &p, &q, k).unwrap(), order.at_least(k));
        // scale invariance of the projective order
        let scaled = ProjPoint::new(
            p.coords().iter().map(|c| c * rational(-3, 2)).collect(),
        ).unwrap();
        prop_assert_eq!(contact_order(&f, &scaled, &q).unwrap(), order);
        // an infinite order means every Taylor coefficient vanishes
        if order == ContactOrder::Infinite {
            prop_assert!(taylor_coeffs(&f, &p, &q).unwrap().iter().all(|c| c.is_zero()));
        }
    }
}

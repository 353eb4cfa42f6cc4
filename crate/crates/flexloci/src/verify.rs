//! Cross-route verification suites surfaced by the `verify` CLI command.
//!
//! Each suite re-runs the library's internal consistency properties
//! (closed form vs recurrence, closed Pieri powers vs iterated Pieri,
//! the three degree routes, Taylor identities) and reports counterexamples.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalan::{binomial, catalan_closed, catalan_recursive};
use crate::chow_phi::degree_vk_chern;
use crate::contact::{
    contact_order, is_kflex_line, taylor_coeffs, taylor_coeffs_via_derivatives, ContactOrder,
};
use crate::formulas::{flex_degree_closed, lambda_coeffs, mu_coeffs, mu_direct, n_k_lambda, n_k_mu};
use crate::poly::{MultiPoly, ProjPoint, Rational};
use crate::schubert::{
    mul_sigma1_power_closed, mul_sigma1_power_iter, ChowElement, SchubertIndex,
};

/// Outcome of one named suite.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult {
            name: name.to_string(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(describe());
        }
    }
}

/// Closed formula vs recurrence for Catalan trapezoids, plus the
/// Catalan-number diagonal.
pub fn verify_catalan() -> SuiteResult {
    let mut result = SuiteResult::new("catalan");
    for a in 1..=6u64 {
        for u in 0..=30u64 {
            for v in 0..=30u64 {
                let closed = catalan_closed(a, u, v).unwrap();
                let recursive = catalan_recursive(a, u, v).unwrap();
                result.check(closed == recursive, || {
                    format!("C_{a}({u},{v}): closed {closed} != recursive {recursive}")
                });
            }
        }
    }
    for m in 0..=20i64 {
        let diag = catalan_closed(1, m as u64, m as u64).unwrap();
        let catalan_number = binomial(2 * m, m) / BigInt::from(m + 1);
        result.check(diag == catalan_number, || {
            format!("C_1({m},{m}) = {diag} != Catalan number {catalan_number}")
        });
    }
    result
}

/// Closed Pieri powers vs iterated Pieri, term by term.
pub fn verify_pieri() -> SuiteResult {
    let mut result = SuiteResult::new("pieri");
    for n in 2..=8u32 {
        for a in 0..n {
            for b in 0..=a {
                for m in 0..=2 * n {
                    let idx = SchubertIndex::new(a, b);
                    let closed = mul_sigma1_power_closed(n, idx, m).unwrap();
                    let iter = mul_sigma1_power_iter(n, idx, m).unwrap();
                    result.check(closed == iter, || {
                        format!("n={n} s[{a},{b}]*s1^{m}: closed {closed} != iter {iter}")
                    });
                }
            }
        }
    }
    result
}

/// Triple-route degree agreement and the explicit-degree specialization
/// of the Schubert product.
pub fn verify_routes() -> SuiteResult {
    let mut result = SuiteResult::new("routes");
    for n in 2..=7i64 {
        for k in (n + 1)..=(2 * n - 1) {
            for d in (k - 1)..=15 {
                let lambda = n_k_lambda(n, d, k).unwrap();
                let mu = n_k_mu(n, d, k).unwrap();
                let chern = degree_vk_chern(n as u32, d, k).unwrap();
                result.check(lambda == mu && mu == chern, || {
                    format!(
                        "(n={n}, d={d}, k={k}): lambda {lambda}, mu {mu}, chern {chern}"
                    )
                });
            }
        }
    }
    // sigma_{2n-k-1+l} * s1^(k-1-l) = C_1(n-1, k-n-l) * point class
    for n in 2..=7u32 {
        let n_i = n as i64;
        for k in (n_i + 1)..=(2 * n_i - 1) {
            for l in 0..=(k - n_i) {
                let idx = SchubertIndex::new((2 * n_i - k - 1 + l) as u32, 0);
                let product = mul_sigma1_power_iter(n, idx, (k - 1 - l) as u32).unwrap();
                let coeff = catalan_closed(1, (n_i - 1) as u64, (k - n_i - l) as u64).unwrap();
                let expected = ChowElement::from_class(
                    n,
                    SchubertIndex::new(n - 1, n - 1),
                    coeff.clone(),
                );
                result.check(product == expected, || {
                    format!("n={n} k={k} l={l}: got {product}, expected {coeff} * point")
                });
            }
        }
    }
    result
}

/// Coefficient identities: reversal, the direct elementary-symmetric
/// oracle, the closed flex degree, and the factorization fixture.
pub fn verify_formulas() -> SuiteResult {
    let mut result = SuiteResult::new("formulas");
    for d in 1..=20i64 {
        for k in 1..=12i64 {
            let lambda = lambda_coeffs(d, k).unwrap();
            let mu = mu_coeffs(d, k).unwrap();
            for l in 0..k {
                let direct = mu_direct(d, k, l as u32).unwrap();
                let ok = mu[l as usize] == lambda[(k - 1 - l) as usize]
                    && mu[l as usize] == direct;
                result.check(ok, || {
                    format!(
                        "(d={d}, k={k}, l={l}): mu {} lambda-rev {} direct {direct}",
                        mu[l as usize],
                        lambda[(k - 1 - l) as usize]
                    )
                });
            }
        }
    }
    for n in 2..=8i64 {
        for d in n..=20 {
            let closed = flex_degree_closed(n, d).unwrap();
            let general = n_k_lambda(n, d, n + 1).unwrap();
            result.check(closed == general, || {
                format!("flex degree (n={n}, d={d}): closed {closed} != N_k {general}")
            });
        }
    }
    let anchor = n_k_lambda(5, 53, 8).unwrap();
    let expected = BigInt::from(42436258837u64);
    result.check(anchor == expected, || {
        format!("N_8(5, 53) = {anchor} != 42436258837")
    });
    let product = BigInt::from(7) * BigInt::from(53) * BigInt::from(114383447u64);
    result.check(product == expected, || {
        format!("7 * 53 * 114383447 = {product} != 42436258837")
    });
    result
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer = rng.gen_range(-6i64..=6);
    let denom = rng.gen_range(1i64..=4);
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_homogeneous_poly(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> MultiPoly {
    loop {
        let mut p = MultiPoly::zero(nvars);
        let terms = rng.gen_range(2..=5);
        for _ in 0..terms {
            let mut exps = vec![0u32; nvars];
            for _ in 0..degree {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            let coeff = Rational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)));
            p.add_term(exps, coeff);
        }
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, nvars: usize) -> ProjPoint {
    loop {
        let coords: Vec<Rational> = (0..nvars).map(|_| random_rational(rng)).collect();
        if let Ok(p) = ProjPoint::new(coords) {
            return p;
        }
    }
}

fn pow_rational(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Randomized Taylor identities: reconstruction, trihomogeneity, the
/// two-path agreement, scale invariance of the contact order, and the
/// k-flex consistency.
pub fn verify_contact(instances: usize) -> SuiteResult {
    let mut result = SuiteResult::new("contact");
    let mut rng = ChaCha8Rng::seed_from_u64(0xf1ec_5eed);
    let mut done = 0usize;
    while done < instances {
        let nvars = rng.gen_range(2..=4usize);
        let degree = rng.gen_range(1..=6u32);
        let f = random_homogeneous_poly(&mut rng, nvars, degree);
        let x = random_point(&mut rng, nvars);
        let y = random_point(&mut rng, nvars);
        let t0 = random_rational(&mut rng);
        let scalar = random_nonzero_rational(&mut rng);

        let taylor = taylor_coeffs(&f, &x, &y).unwrap();

        // reconstruction: sum F_l t0^l / l! = f(x + t0 y)
        let mut factorial = BigInt::one();
        let mut reconstructed = Rational::zero();
        for (l, coeff) in taylor.iter().enumerate() {
            if l > 0 {
                factorial *= BigInt::from(l);
            }
            reconstructed += coeff * pow_rational(&t0, l as u32)
                / Rational::from_integer(factorial.clone());
        }
        let shifted: Vec<Rational> = x
            .coords()
            .iter()
            .zip(y.coords())
            .map(|(a, b)| a + b * &t0)
            .collect();
        let direct = f.eval(&shifted);
        result.check(reconstructed == direct, || {
            format!("reconstruction failed for f={f}, x={:?}, y={:?}, t0={t0}", x, y)
        });

        // trihomogeneity in y and in x
        let scaled_y =
            ProjPoint::new(y.coords().iter().map(|c| c * &scalar).collect()).unwrap();
        let taylor_scaled_y = taylor_coeffs(&f, &x, &scaled_y).unwrap();
        let scaled_x =
            ProjPoint::new(x.coords().iter().map(|c| c * &scalar).collect()).unwrap();
        let taylor_scaled_x = taylor_coeffs(&f, &scaled_x, &y).unwrap();
        for l in 0..taylor.len() {
            let expected_y = &taylor[l] * pow_rational(&scalar, l as u32);
            result.check(taylor_scaled_y[l] == expected_y, || {
                format!("F_{l}(x, c*y) != c^{l} F_{l}(x, y) for f={f}")
            });
            let expected_x = &taylor[l] * pow_rational(&scalar, degree - l as u32);
            result.check(taylor_scaled_x[l] == expected_x, || {
                format!("F_{l}(c*x, y) != c^(d-{l}) F_{l}(x, y) for f={f}")
            });
        }

        // two-path agreement
        let oracle = taylor_coeffs_via_derivatives(&f, &x, &y).unwrap();
        result.check(taylor == oracle, || {
            format!("substitution vs derivative path disagree for f={f}")
        });

        if !x.proj_eq(&y) {
            let order = contact_order(&f, &x, &y).unwrap();
            // scale invariance
            let order_scaled = contact_order(&f, &scaled_x, &scaled_y).unwrap();
            result.check(order == order_scaled, || {
                format!("contact order changed under rescaling for f={f}")
            });
            // order >= 1 iff f(x) = 0
            let vanishes = f.eval(x.coords()).is_zero();
            result.check(order.at_least(1) == vanishes, || {
                format!("order >= 1 vs f(x) = 0 mismatch for f={f}")
            });
            // k-flex consistency
            for k in 1..=(degree + 2) {
                let flex = is_kflex_line(&f, &x, &y, k).unwrap();
                result.check(flex == order.at_least(k), || {
                    format!("is_kflex_line({k}) != (order >= {k}) for f={f}, order={order:?}")
                });
            }
            // infinite order means the restriction vanishes identically
            if order == ContactOrder::Infinite {
                result.check(taylor.iter().all(|c| c.is_zero()), || {
                    format!("infinite order but nonzero Taylor coefficients for f={f}")
                });
            }
        }
        done += 1;
    }
    result
}

/// Which suite(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Catalan,
    Pieri,
    Routes,
    Formulas,
    Contact,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "catalan" => Ok(Suite::Catalan),
            "pieri" => Ok(Suite::Pieri),
            "routes" => Ok(Suite::Routes),
            "formulas" => Ok(Suite::Formulas),
            "contact" => Ok(Suite::Contact),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected catalan|pieri|routes|formulas|contact|all)"
            )),
        }
    }
}

/// Run the requested suite(s).
pub fn run_suite(suite: Suite) -> Vec<SuiteResult> {
    match suite {
        Suite::Catalan => vec![verify_catalan()],
        Suite::Pieri => vec![verify_pieri()],
        Suite::Routes => vec![verify_routes()],
        Suite::Formulas => vec![verify_formulas()],
        Suite::Contact => vec![verify_contact(200)],
        Suite::All => vec![
            verify_catalan(),
            verify_pieri(),
            verify_routes(),
            verify_formulas(),
            verify_contact(200),
        ],
    }
}

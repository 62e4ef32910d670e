//! Closed forms and oracles against frozen 40-digit quadratures of the
//! confluent-hypergeometric radial functions.

use dce_core::expect::{abc_nu, abc_traditional, Kind};
use dce_core::oracle::{integrate_termwise, termwise_triple};
use dce_core::{ExpectationTriple, State};

struct Case {
    n: u32,
    kappa: i32,
    mu: f64,
    eps: f64,
    rows: &'static [(i32, f64, f64, f64)],
}

const CASES: &[Case] = &[
    Case {
        n: 2,
        kappa: 2,
        mu: 1.2,
        eps: 0.948_683_298_050_513_803_99,
        rows: &[
            (
                -2,
                0.019926322014411118676,
                0.011488615643107527561,
                0.0059778966043233353815,
            ),
            (
                -1,
                0.098821176880261847954,
                0.083333333333333329478,
                0.01647019614671030723,
            ),
            (
                1,
                14.661827201491726166,
                14.342763918291239283,
                0.69868329805051380399,
            ),
            (
                3,
                4723.7216699186121819,
                4686.8458528910695606,
                59.882740619615877089,
            ),
        ],
    },
    Case {
        n: 3,
        kappa: -2,
        mu: 0.4,
        eps: 0.996_763_424_879_455_210_75,
        rows: &[
            (
                -2,
                0.0009207515299412751194,
                0.00089300368348797764965,
                -0.000092075152994127517051,
            ),
            (0, 1.0, 0.99676342487945521075, -0.016156687056446621573),
            (
                2,
                9143.2757348217496392,
                9134.373203451133336,
                -134.96097991854682652,
            ),
            (
                4,
                111935200.47698007416,
                111838100.06818268262,
                -1976389.1655789107731,
            ),
        ],
    },
    Case {
        n: 1,
        kappa: -1,
        mu: 0.5,
        eps: 0.965_925_826_289_068_286_75,
        rows: &[
            (
                -1,
                0.14942924536134225402,
                0.13397459621556135324,
                -0.020019722810081872843,
            ),
            (
                1,
                10.848726953872188867,
                10.662078248995700167,
                -0.73296291314453414337,
            ),
            (
                2,
                139.51903301766434229,
                137.40399568440391436,
                -10.755402601433944517,
            ),
        ],
    },
    Case {
        n: 4,
        kappa: 3,
        mu: 0.05,
        eps: 0.999_974_487_734_853_890_3,
        rows: &[
            (
                -3,
                8.6853995371992057598e-9,
                8.6798612972881359343e-9,
                1.1962392806576186843e-10,
            ),
            (
                1,
                1349.8647886800928833,
                1349.8507584225451902,
                1.2499617316022808354,
            ),
            // C/A ≈ 2e-9 here: the power sits next to the nonrelativistic zero of C.
            (
                6,
                1.7433722714835054670e19,
                1.7433688501605517670e19,
                -35047727656.575267864,
            ),
        ],
    },
];

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

fn check(what: &str, c: &Case, got: &ExpectationTriple, tol: f64) {
    let (p, a, b, cc) = *c.rows.iter().find(|r| r.0 == got.p).unwrap();
    for (kind, want) in [(Kind::A, a), (Kind::B, b), (Kind::C, cc)] {
        let err = rel(got.get(kind), want);
        assert!(
            err < tol,
            "{what} {kind}{p} n={} kappa={} mu={}: {} vs {want} ({err:.1e})",
            c.n,
            c.kappa,
            c.mu,
            got.get(kind)
        );
    }
}

#[test]
fn energies() {
    for c in CASES {
        let s = State::new(c.n, c.kappa, c.mu).unwrap();
        assert!(rel(s.cp.eps, c.eps) < 1e-15);
    }
}

#[test]
fn closed_forms_match_quadrature() {
    for c in CASES {
        let s = State::new(c.n, c.kappa, c.mu).unwrap();
        for &(p, ..) in c.rows {
            check("traditional", c, &abc_traditional(&s, p).unwrap(), 1e-13);
            check("Laguerre-pair", c, &abc_nu(&s, p).unwrap(), 1e-13);
        }
    }
}

#[test]
fn termwise_matches_quadrature() {
    for c in CASES {
        let s = State::new(c.n, c.kappa, c.mu).unwrap();
        for &(p, ..) in c.rows {
            check("termwise", c, &termwise_triple(&s, p).unwrap(), 1e-12);
            let est = integrate_termwise(&s, p, Kind::A).unwrap().est_error;
            assert!(est < 1e-12 * c.rows.iter().find(|r| r.0 == p).unwrap().1);
        }
    }
}

//! Verification reports: every identity, inversion, recurrence and
//! oracle comparison for each state of the grid.

use dce_core::expect::{
    ab_matrix_chebyshev, abc_nu, abc_traditional, hypervirial_residuals, identity_suite,
    invert_reflect1, invert_reflect3, recur_up, reflect1_c, special_value, Kind,
};
use dce_core::oracle::{
    appendix_a_suite, hellmann_feynman_dkappa, hellmann_feynman_dz, termwise_triple, AppendixGrid,
};
use dce_core::{ConvergenceWindow, Error, ExpectationTriple, State, Units, VerificationRecord};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::Result;

/// Highest power reached by the sweeps.
pub const P_TOP: i32 = 5;

/// Finite-difference step for the Hellmann-Feynman checks.
pub const HF_STEP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub identity: f64,
    pub virial: f64,
    pub representation: f64,
    pub oracle: f64,
    pub inversion: f64,
    pub gamma_ratio: f64,
    pub recurrence: f64,
    pub chain: f64,
    pub linear: f64,
    pub special: f64,
    pub special_variant: f64,
    pub hellmann_feynman: f64,
    pub appendix: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            identity: 1e-10,
            virial: 1e-12,
            representation: 1e-10,
            oracle: 1e-9,
            inversion: 1e-9,
            gamma_ratio: 1e-10,
            recurrence: 1e-10,
            chain: 1e-9,
            linear: 1e-10,
            special: 1e-10,
            special_variant: 1e-12,
            hellmann_feynman: 1e-8,
            appendix: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn uniform(tol: f64) -> Self {
        Self {
            identity: tol,
            virial: tol,
            representation: tol,
            oracle: tol,
            inversion: tol,
            gamma_ratio: tol,
            recurrence: tol,
            chain: tol,
            linear: tol,
            special: tol,
            special_variant: tol,
            hellmann_feynman: tol,
            appendix: tol,
        }
    }

    pub fn for_config(cfg: &RunConfig) -> Self {
        cfg.tol_override.map_or_else(Self::default, Self::uniform)
    }
}

fn ctx(state: &State, p: i32) -> String {
    format!(
        "n={} kappa={} mu={} p={p}",
        state.qn.n_r, state.qn.kappa, state.cp.mu
    )
}

fn compare(
    out: &mut Vec<VerificationRecord>,
    name: &str,
    anchor: &str,
    state: &State,
    x: &ExpectationTriple,
    y: &ExpectationTriple,
    tol: f64,
) {
    for kind in Kind::ALL {
        out.push(VerificationRecord::new(
            format!("{name}_{kind}"),
            anchor,
            ctx(state, x.p),
            x.get(kind),
            y.get(kind),
            tol,
        ));
    }
}

fn linear(
    out: &mut Vec<VerificationRecord>,
    path: &str,
    state: &State,
    t: &ExpectationTriple,
    tol: f64,
) {
    let (r, scale) = t.linear_residual(state);
    out.push(VerificationRecord::with_scale(
        format!("linear_relation_{path}"),
        "2 kappa (A - eps B) - (p+1)(B - eps A) = 4 mu C",
        ctx(state, t.p),
        r,
        0.0,
        tol,
        scale,
    ));
}

/// All per-state records. `perturb` is applied to every closed-form
/// triple before it is checked.
pub fn verify_state(
    state: &State,
    tols: &Tolerances,
    units: &Units,
    perturb: Option<&dyn Fn(&mut ExpectationTriple)>,
) -> Result<Vec<VerificationRecord>> {
    let w = ConvergenceWindow::for_state(state);
    let mut closed = Vec::new();
    for p in w.p_min..=P_TOP {
        let mut t = abc_traditional(state, p)?;
        if let Some(f) = perturb {
            f(&mut t);
        }
        closed.push(t);
    }
    let at = |p: i32| closed[(p - w.p_min) as usize];
    let mut out = identity_suite(state, tols.identity)?;
    for r in out.iter_mut().filter(|r| r.identity_name == "virial") {
        *r = VerificationRecord::new(
            &r.identity_name,
            &r.anchor,
            &r.context,
            r.lhs,
            r.rhs,
            tols.virial,
        );
    }

    for t in &closed {
        let p = t.p;
        linear(&mut out, "closed", state, t, tols.linear);
        let nu_form = abc_nu(state, p)?;
        compare(
            &mut out,
            "representation",
            "traditional form = Laguerre-pair form",
            state,
            t,
            &nu_form,
            tols.representation,
        );
        linear(&mut out, "laguerre_pair", state, &nu_form, tols.linear);
        if p != -1 {
            let (a, b) = ab_matrix_chebyshev(state, p)?;
            for (kind, v) in [(Kind::A, a), (Kind::B, b)] {
                out.push(VerificationRecord::new(
                    format!("matrix_chebyshev_{kind}"),
                    "matrix form with discrete Chebyshev polynomials",
                    ctx(state, p),
                    v,
                    t.get(kind),
                    tols.representation,
                ));
            }
        }
        let oracle = termwise_triple(state, p)?;
        compare(
            &mut out,
            "oracle_termwise",
            "closed form = termwise Gamma integration",
            state,
            t,
            &oracle,
            tols.oracle,
        );
        linear(&mut out, "oracle", state, &oracle, tols.oracle);

        if p < P_TOP {
            let h = hypervirial_residuals(state, t, &at(p + 1))?;
            for i in 0..3 {
                out.push(VerificationRecord::with_scale(
                    format!("hypervirial_r{}", i + 1),
                    "hypervirial relation between p and p+1",
                    ctx(state, p),
                    h.r[i],
                    0.0,
                    tols.recurrence,
                    h.scale[i],
                ));
            }
        }

        let q = -p - 1;
        if w.contains(q) && q <= P_TOP {
            out.push(VerificationRecord::new(
                "reflect1_c_gamma_ratio",
                "C_-p-1 = (2a beta)^(2p+1) Gamma(2nu-p)/Gamma(2nu+p+1) C_p",
                ctx(state, p),
                reflect1_c(state, p, t.c)?,
                at(q).c,
                tols.gamma_ratio,
            ));
            match invert_reflect1(state, p, t) {
                Ok(r) => {
                    compare(
                        &mut out,
                        "invert_reflect1",
                        "triple at -p-1 from triple at p",
                        state,
                        &r,
                        &at(q),
                        tols.inversion,
                    );
                    linear(&mut out, "invert_reflect1", state, &r, tols.linear);
                }
                Err(Error::ExcludedPower { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
        let q = -p - 3;
        if w.contains(q) && q <= P_TOP {
            match invert_reflect3(state, p, t) {
                Ok(r) => {
                    compare(
                        &mut out,
                        "invert_reflect3",
                        "triple at -p-3 from triple at p",
                        state,
                        &r,
                        &at(q),
                        tols.inversion,
                    );
                    linear(&mut out, "invert_reflect3", state, &r, tols.linear);
                }
                Err(Error::ExcludedPower { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }

        if (-3..=2).contains(&p) {
            for kind in Kind::ALL {
                let sv = match special_value(state, kind, p) {
                    Ok(sv) => sv,
                    Err(Error::Divergent { .. }) => continue,
                    Err(e) => return Err(e.into()),
                };
                out.push(
                    VerificationRecord::new(
                        format!("special_value_{kind}"),
                        "explicit rational form = closed form",
                        ctx(state, p),
                        sv.value,
                        t.get(kind),
                        tols.special,
                    )
                    .flag_ill_conditioned(sv.ill_conditioned),
                );
                if let Some(alt) = sv.alt {
                    out.push(
                        VerificationRecord::new(
                            format!("special_value_variant_{kind}"),
                            "both displayed forms agree",
                            ctx(state, p),
                            sv.value,
                            alt,
                            tols.special_variant,
                        )
                        .flag_ill_conditioned(sv.ill_conditioned),
                    );
                }
            }
        }
    }

    let mut t = at(0);
    for _ in 0..4 {
        t = recur_up(state, t.p, &t)?;
        compare(
            &mut out,
            "recur_up_chain",
            "upward recurrence from p = 0",
            state,
            &t,
            &at(t.p),
            tols.chain,
        );
        linear(&mut out, "recurrence", state, &t, tols.linear);
    }

    let (n, k, mu) = (state.qn.n_r, state.qn.kappa, state.cp.mu);
    let hf_z = hellmann_feynman_dz(n, k, mu, HF_STEP, units, tols.hellmann_feynman);
    let hf_k = hellmann_feynman_dkappa(n, k, mu, HF_STEP, tols.hellmann_feynman);
    for rec in [hf_z, hf_k] {
        match rec {
            Ok(r) => out.push(r),
            Err(Error::Domain { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}

/// Records for the configured grid followed by the Hahn and Laguerre
/// checks, in a fixed order.
pub fn run_verify(cfg: &RunConfig) -> Result<Vec<VerificationRecord>> {
    cfg.validate()?;
    let tols = Tolerances::for_config(cfg);
    let units = Units::new(cfg.alpha_fs);
    let corrupt = cfg
        .corrupt_c
        .map(|f| move |t: &mut ExpectationTriple| t.c *= f);
    let per_state: Vec<Result<Vec<VerificationRecord>>> = cfg
        .states()
        .into_par_iter()
        .map(|(n, k)| {
            let state = State::from_charge(n, k, cfg.z, &units)?;
            verify_state(
                &state,
                &tols,
                &units,
                corrupt
                    .as_ref()
                    .map(|f| f as &dyn Fn(&mut ExpectationTriple)),
            )
        })
        .collect();
    let mut out = Vec::new();
    for r in per_state {
        out.extend(r?);
    }
    let grid = AppendixGrid {
        tol: tols.appendix,
        ..AppendixGrid::default()
    };
    out.extend(appendix_a_suite(&grid)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_states_pass() {
        let units = Units::default();
        for (n, k, mu) in [(0, -1, 0.5), (2, 3, 2.0), (1, -1, 0.9), (3, 2, 0.1)] {
            let s = State::new(n, k, mu).unwrap();
            let recs = verify_state(&s, &Tolerances::default(), &units, None).unwrap();
            let bad: Vec<_> = recs.iter().filter(|r| !r.pass).collect();
            assert!(bad.is_empty(), "{bad:#?}");
        }
    }

    #[test]
    fn corrupted_c_fails_linear_relation() {
        let s = State::new(1, -2, 0.5).unwrap();
        let corrupt = |t: &mut ExpectationTriple| t.c *= 1.001;
        let recs = verify_state(
            &s,
            &Tolerances::default(),
            &Units::default(),
            Some(&corrupt),
        )
        .unwrap();
        assert!(recs
            .iter()
            .any(|r| r.identity_name == "linear_relation_closed" && !r.pass));
    }
}

use super::{pushout_free, FreeCofibrationDatum, PushoutResult};
use crate::report::{CheckReport, Law};
use crate::smfunctor::{check_equivalence, SectionDatum, Verdict};

pub const PROPERNESS_LAWS: [&str; 4] = [
    "square_commutes",
    "cobase_fully_faithful",
    "cobase_essentially_surjective",
    "coherence_matches_transport",
];

fn verdict_law(name: &str, depth: usize, v: Verdict) -> Law {
    let mut law = Law::new(name, depth);
    match v {
        Verdict::Yes => {
            law.check(true, String::new);
        }
        Verdict::No(w) | Verdict::NotWithinDepth(w) => law.fail(w),
    }
    law
}

/// Checks of a constructed pushout: the square, the cobase change `P` being
/// an equivalence, and `λ^{S^F}(P c1, P c2) = λ^{S_C}(c1, c2)`.
pub fn check_pushout(res: &PushoutResult, depth: usize) -> CheckReport {
    let mut report = CheckReport::new();
    report.push(res.square_law(depth));
    let eq = check_equivalence(&res.p, depth);
    report.push(verdict_law(PROPERNESS_LAWS[1], depth, eq.fully_faithful));
    report.push(verdict_law(PROPERNESS_LAWS[2], depth, eq.essentially_surjective));

    let mut law = Law::new(PROPERNESS_LAWS[3], depth);
    let c = &res.p.domain;
    let objs = c.objects().enumerate(depth);
    for c1 in &objs {
        for c2 in &objs {
            let ok = (|| -> crate::Result<bool> {
                let via_q = (res.lambda)(&res.p.obj(c1)?, &res.p.obj(c2)?)?;
                Ok(via_q == res.s_c.lambda_at(c1, c2)?)
            })();
            law.check(ok == Ok(true), || {
                format!("at ({}, {})", c.objects().show(c1), c.objects().show(c2))
            });
        }
    }
    report.push(law);
    report
}

/// Builds the pushout of `section.fibration` along `cofibration` and checks
/// that the cobase change is a weak equivalence.
pub fn properness_check(
    section: &SectionDatum,
    cofibration: &FreeCofibrationDatum,
    depth: usize,
) -> CheckReport {
    match pushout_free(section, cofibration, depth) {
        Ok(res) => check_pushout(&res, depth),
        Err(e) => {
            let mut report = CheckReport::new();
            let mut law = Law::new("pushout_constructed", depth);
            law.fail(e.to_string());
            report.push(law);
            report
        }
    }
}

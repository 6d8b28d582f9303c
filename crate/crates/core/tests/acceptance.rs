use std::collections::BTreeMap;

use vecr_core::checks::{self, RunConfig};
use vecr_core::{CheckReport, Status};

struct Criterion {
    number: usize,
    summary: &'static str,
    checks: &'static [&'static str],
}

const CRITERIA: [Criterion; 12] = [
    Criterion {
        number: 1,
        summary: "step constants, ad(e_-1)Z = Q, ad(e_1)Y = Qe2 e_-1/2, transpose parities",
        checks: &[
            "core/Q-from-S-stated",
            "core/Qe2-from-S-stated",
            "u2/ad-Z-eq-Q",
            "core/ad-e1-Y",
            "core/transpose-parity",
        ],
    },
    Criterion {
        number: 2,
        summary: "density images of Q, Z, Y, Qe2 and the lowest weight action table",
        checks: &["core/rep-identities", "core/lowest-weight-action-table"],
    },
    Criterion {
        number: 3,
        summary: "lowest and highest weight dimensions in degrees 2 and 3",
        checks: &["dims/lws-sym2", "dims/lws-U3", "dims/hws-sym3"],
    },
    Criterion {
        number: 4,
        summary: "partition and binomial difference identities, slice dimensions",
        checks: &["dims/count-identities", "dims/sym-slice-dims"],
    },
    Criterion {
        number: 5,
        summary: "adjoint Casimir diagonal on sym_2, Jordan block on sym_3",
        checks: &["u2/casimir-diagonal", "u3/casimir-jordan"],
    },
    Criterion {
        number: 6,
        summary: "constant-density annihilator: machine conditions and ideal slices",
        checks: &["thm-i0/machine-conditions", "thm-i0/ann-eq-ideal"],
    },
    Criterion {
        number: 7,
        summary: "universal annihilator: symbol independence and H_2 slices",
        checks: &["thm-i2/symbols", "thm-i2/ann-eq-H2"],
    },
    Criterion {
        number: 8,
        summary: "generic densities: two-degree machine, ideal slices, X identity, degree-3 necessity",
        checks: &[
            "thm-il/machine-conditions",
            "thm-il/ann-eq-ideal",
            "thm-il/aug-eq-ideal",
            "thm-il/X-identity",
            "thm-il/degree3-necessity",
        ],
    },
    Criterion {
        number: 9,
        summary: "lowering identities for g, h0, h1",
        checks: &["related-sw/g-to-Qe2", "related-sw/h0-to-Z", "related-sw/h1-identity"],
    },
    Criterion {
        number: 10,
        summary: "two-factor operators: recursion, bottoms, span of H_2l",
        checks: &["related-bf/omega-recursion", "related-bf/omega-bottom", "related-bf/h-omega-span"],
    },
    Criterion {
        number: 11,
        summary: "sl2 machine conditions at weight 2",
        checks: &["sl2-verma/machine-conditions"],
    },
    Criterion {
        number: 12,
        summary: "transpose duality and module-variant agreement",
        checks: &["thm-i0/transpose-duality", "thm-i0/no-a-agreement"],
    },
];

/// Checks that fail by design: they assert constants that do not hold for
/// any step element.
const KNOWN_FAILURES: [&str; 2] = ["core/Q-from-S-stated", "core/Qe2-from-S-stated"];

#[test]
fn acceptance_criteria() {
    let reports = checks::run(&RunConfig::default()).expect("default configuration is valid");
    let by_id: BTreeMap<&str, &CheckReport> = reports.iter().map(|r| (r.check_id.as_str(), r)).collect();

    let mut failing_checks = Vec::new();
    for c in &CRITERIA {
        let mut failed = Vec::new();
        for id in c.checks {
            let report = by_id.get(id).unwrap_or_else(|| panic!("check {id} is not registered"));
            assert_ne!(report.status, Status::Skipped, "{id} was skipped under the defaults");
            if report.status == Status::Fail {
                failed.push(*id);
            }
        }
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        let detail = if failed.is_empty() { String::new() } else { format!(" (failing: {})", failed.join(", ")) };
        println!("criterion {:>2} {verdict}: {}{detail}", c.number, c.summary);
        failing_checks.extend(failed);
    }
    assert_eq!(failing_checks, KNOWN_FAILURES);
}

use std::path::PathBuf;

use gm_hilb_cli::{Format, Job, JobSpec};
use proptest::prelude::*;

fn text() -> impl Strategy<Value = String> {
    "[ -~\n]{0,24}"
}

fn job() -> impl Strategy<Value = Job> {
    let vars = proptest::option::of(1usize..6);
    prop_oneof![
        (text(), text(), vars.clone()).prop_map(|(ideal, weights, vars)| Job::Limit { ideal, weights, vars }),
        (text(), vars.clone()).prop_map(|(ideal, vars)| Job::Monomialize { ideal, vars }),
        (text(), vars.clone()).prop_map(|(ideal, vars)| Job::OriginTest { ideal, vars }),
        (text(), text(), any::<i64>(), proptest::collection::vec(text(), 0..3))
            .prop_map(|(point, weights, truncation, at)| Job::Trajectory { point, weights, truncation, at }),
        (text(), proptest::option::of(text()), vars.clone()).prop_map(|(ideal, params, vars)| Job::Distract {
            ideal,
            params,
            vars
        }),
        (text(), text(), vars).prop_map(|(source, target, vars)| Job::Chain { source, target, vars }),
        text().prop_map(|p| Job::Verify { certificate: PathBuf::from(p) }),
        text().prop_map(|weights| Job::Bb { weights }),
        (text(), any::<usize>()).prop_map(|(weights, cut)| Job::Attractor { weights, cut }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn job_specs_round_trip(
        job in job(),
        out in proptest::option::of("[a-z/._]{1,12}"),
        structured in any::<bool>(),
        samples in any::<usize>(),
        max_c in any::<u64>(),
        verbose in any::<u8>(),
    ) {
        let spec = JobSpec {
            job,
            out: out.map(PathBuf::from),
            format: if structured { Format::Structured } else { Format::Text },
            samples,
            max_c,
            verbose,
        };
        let text = spec.to_json();
        prop_assert_eq!(JobSpec::from_json(&text).unwrap(), spec);
    }
}

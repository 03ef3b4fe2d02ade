//! Stratified 10-fold evaluation of BoW, DOR, TCOR and SSR with
//! Wilcoxon tests against the BoW baseline.

use std::time::Instant;

use dtrprof::corpus::synthetic::{generate, SyntheticSpec};
use dtrprof::evaluation::{cross_validate, fold_accuracy_csv, ClassifierConfig, RepresentationConfig};

fn main() -> dtrprof::Result<()> {
    let corpus = generate(&SyntheticSpec::default());
    let clf = ClassifierConfig::default();
    let seed = 42;

    let start = Instant::now();
    let baseline = cross_validate(&corpus, "gender", &RepresentationConfig::bow(), &clf, 10, seed)?;
    let mut reports = vec![baseline.clone()];
    for rep in [RepresentationConfig::dor(), RepresentationConfig::tcor(), RepresentationConfig::ssr()] {
        let mut report = cross_validate(&corpus, "gender", &rep, &clf, 10, seed)?;
        report.compare_to(&baseline, 0.05)?;
        reports.push(report);
    }

    for r in &reports {
        let sig = r
            .significance
            .first()
            .map(|s| format!("W={} p={:?}", s.test.statistic, s.test.p_value))
            .unwrap_or_default();
        println!("{:<6} {:.3}  {sig}", r.representation, r.mean_accuracy);
    }
    print!("{}", fold_accuracy_csv(&reports));
    println!("elapsed {:.1?}", start.elapsed());
    Ok(())
}

//! Dual coordinate descent linear SVM on a separable 2-D problem.

use dtrprof::classifier::{predict, solve_binary, train_linear_svm, FeatureVector, SvmConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> dtrprof::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut x = Vec::new();
    let mut y = Vec::new();
    while x.len() < 200 {
        let p: [f64; 2] = [rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0)];
        let side = p[0] + p[1] - 0.5;
        if side.abs() < 0.5 {
            continue;
        }
        x.push(FeatureVector::from_dense(&p));
        y.push(if side > 0.0 { "pos" } else { "neg" }.to_string());
    }

    let model = train_linear_svm(&x, &y, 10.0)?;
    let pred = predict(&model, &x)?;
    let correct = pred.iter().zip(&y).filter(|(p, t)| p == t).count();
    println!("training accuracy {}/{}", correct, y.len());
    println!("w = {:.3?} (bias last), {} epochs", model.weights[0], model.epochs[0]);

    let signs: Vec<f64> = y.iter().map(|l| if l == "neg" { 1.0 } else { -1.0 }).collect();
    let sol = solve_binary(&x, &signs, &SvmConfig { c: 10.0, ..SvmConfig::default() })?;
    let first = sol.dual_objective.first().copied().unwrap_or_default();
    let last = sol.dual_objective.last().copied().unwrap_or_default();
    println!("dual objective {first:.4} -> {last:.4}");
    print!("{}", model.to_text()?);
    Ok(())
}

//! Element-wise activations and loss primitives.

use crate::error::{Result, SeaError};
use crate::numeric::Matrix;

/// Numerically stable logistic function on a scalar.
#[inline]
pub fn sigmoid_scalar(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Element-wise logistic function.
pub fn sigmoid(x: &Matrix) -> Matrix {
    x.map(sigmoid_scalar)
}

/// Element-wise hyperbolic tangent.
pub fn tanh(x: &Matrix) -> Matrix {
    x.map(f64::tanh)
}

/// Row-wise softmax with max subtraction, so each output row sums to one
/// even for inputs around +-1e6.
pub fn softmax_rows(x: &Matrix) -> Matrix {
    let mut out = x.clone();
    for r in 0..out.rows() {
        let row = out.row_mut(r);
        let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut total = 0.0;
        for v in row.iter_mut() {
            *v = (*v - max).exp();
            total += *v;
        }
        for v in row.iter_mut() {
            *v /= total;
        }
    }
    out
}

/// Probability clip used by the log-loss metric (Kaggle convention).
pub const PROB_CLIP: f64 = 1e-15;

/// Mean negative log probability of the true class, with probabilities
/// clipped to `[PROB_CLIP, 1 - PROB_CLIP]`.
///
/// This is both the training loss definition and the evaluation log loss;
/// the two must never drift apart.
pub fn cross_entropy(probs: &Matrix, labels: &[usize]) -> Result<f64> {
    if probs.rows() != labels.len() {
        return Err(SeaError::shape(
            "cross_entropy",
            probs.shape_string(),
            format!("{} labels", labels.len()),
        ));
    }
    let mut total = 0.0;
    for (r, &label) in labels.iter().enumerate() {
        if label >= probs.cols() {
            return Err(SeaError::IndexOutOfRange {
                what: "cross_entropy label",
                index: label,
                bound: probs.cols(),
            });
        }
        let p = probs.get(r, label).clamp(PROB_CLIP, 1.0 - PROB_CLIP);
        total -= p.ln();
    }
    Ok(total / labels.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigmoid_at_zero_is_half() {
        let x = Matrix::zeros(1, 1);
        assert_eq!(sigmoid(&x).get(0, 0), 0.5);
    }

    #[test]
    fn sigmoid_saturates_without_nan() {
        let x = Matrix::from_vec(1, 2, vec![-1e6, 1e6]).unwrap();
        let y = sigmoid(&x);
        assert_eq!(y.get(0, 0), 0.0);
        assert_eq!(y.get(0, 1), 1.0);
        assert!(y.is_finite());
    }

    #[test]
    fn tanh_at_zero_is_zero() {
        let x = Matrix::zeros(1, 1);
        assert_eq!(tanh(&x).get(0, 0), 0.0);
    }

    #[test]
    fn softmax_uniform_on_equal_inputs() {
        let x = Matrix::zeros(1, 3);
        let y = softmax_rows(&x);
        for c in 0..3 {
            assert!((y.get(0, c) - 1.0 / 3.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn softmax_rows_sum_to_one_with_huge_entries() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let cols = rng.gen_range(1..9);
            let data: Vec<f64> = (0..cols).map(|_| rng.gen_range(-1e6..1e6)).collect();
            let y = softmax_rows(&Matrix::from_vec(1, cols, data).unwrap());
            let sum: f64 = y.row(0).iter().sum();
            assert!((sum - 1.0).abs() <= 1e-12, "sum {sum}");
            assert!(y.row(0).iter().all(|&p| p >= 0.0));
        }
    }

    #[test]
    fn cross_entropy_perfect_prediction_hits_clip_floor() {
        let probs = Matrix::from_vec(2, 2, vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let loss = cross_entropy(&probs, &[0, 1]).unwrap();
        assert!(loss <= 1.12e-15, "loss {loss}");
        assert!(loss >= 0.0);
    }

    #[test]
    fn cross_entropy_uniform_nine_classes_is_ln9() {
        let probs = Matrix::filled(4, 9, 1.0 / 9.0);
        let loss = cross_entropy(&probs, &[0, 3, 8, 5]).unwrap();
        assert!((loss - 9.0f64.ln()).abs() <= 1e-12);
        assert!((loss - 2.1972245773).abs() <= 1e-9);
    }

    #[test]
    fn cross_entropy_single_sample_analytic() {
        let probs = Matrix::from_vec(1, 3, vec![0.7, 0.2, 0.1]).unwrap();
        let loss = cross_entropy(&probs, &[0]).unwrap();
        assert!((loss - 0.35667494).abs() <= 1e-8);
    }

    #[test]
    fn cross_entropy_label_out_of_range() {
        let probs = Matrix::filled(1, 3, 1.0 / 3.0);
        assert!(matches!(
            cross_entropy(&probs, &[3]),
            Err(crate::error::SeaError::IndexOutOfRange { .. })
        ));
    }
}

//! Adam optimizer over a flat list of parameter tensors.

use crate::error::{Result, SeaError};
use crate::numeric::Matrix;

/// Moment accumulators and hyperparameters for Adam.
///
/// `m` and `v` always mirror the shapes of the parameter list the state was
/// created for; `step` advances by exactly one per `adam_step` call.
#[derive(Clone, Debug)]
pub struct AdamState {
    pub step: u64,
    pub m: Vec<Matrix>,
    pub v: Vec<Matrix>,
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub epsilon: f64,
}

impl AdamState {
    /// Fresh state with the given learning rate and standard defaults
    /// beta1=0.9, beta2=0.999, epsilon=1e-8.
    pub fn new(params: &[Matrix], lr: f64) -> AdamState {
        AdamState {
            step: 0,
            m: params
                .iter()
                .map(|p| Matrix::zeros(p.rows(), p.cols()))
                .collect(),
            v: params
                .iter()
                .map(|p| Matrix::zeros(p.rows(), p.cols()))
                .collect(),
            lr,
            beta1: 0.9,
            beta2: 0.999,
            epsilon: 1e-8,
        }
    }
}

/// One Adam update with bias correction. Deterministic: identical inputs
/// produce bit-identical parameters and state.
pub fn adam_step(params: &mut [Matrix], grads: &[Matrix], state: &mut AdamState) -> Result<()> {
    if params.len() != grads.len() || params.len() != state.m.len() {
        return Err(SeaError::shape(
            "adam_step",
            format!("{} params", params.len()),
            format!("{} grads, {} moments", grads.len(), state.m.len()),
        ));
    }
    for ((p, g), (m, v)) in params
        .iter()
        .zip(grads.iter())
        .zip(state.m.iter().zip(state.v.iter()))
    {
        if p.shape() != g.shape() {
            return Err(SeaError::shape("adam_step", p.shape_string(), g.shape_string()));
        }
        debug_assert_eq!(p.shape(), m.shape());
        debug_assert_eq!(p.shape(), v.shape());
    }

    state.step += 1;
    let t = state.step as f64;
    let bias1 = 1.0 - state.beta1.powf(t);
    let bias2 = 1.0 - state.beta2.powf(t);

    for ((p, g), (m, v)) in params
        .iter_mut()
        .zip(grads.iter())
        .zip(state.m.iter_mut().zip(state.v.iter_mut()))
    {
        let pd = p.data_mut();
        let gd = g.data();
        let md = m.data_mut();
        let vd = v.data_mut();
        for i in 0..pd.len() {
            md[i] = state.beta1 * md[i] + (1.0 - state.beta1) * gd[i];
            vd[i] = state.beta2 * vd[i] + (1.0 - state.beta2) * gd[i] * gd[i];
            let m_hat = md[i] / bias1;
            let v_hat = vd[i] / bias2;
            pd[i] -= state.lr * m_hat / (v_hat.sqrt() + state.epsilon);
        }
    }
    Ok(())
}

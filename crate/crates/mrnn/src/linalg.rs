//! Dense kernels over row-major `f64` slices.
//!
//! Matrices are flat slices of length `rows * cols`; every caller carries the
//! shape. All model math is 64-bit so finite-difference gradient checks stay
//! decisive.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `out = A . x`
pub fn matvec(out: &mut [f64], a: &[f64], rows: usize, cols: usize, x: &[f64]) {
    debug_assert_eq!(a.len(), rows * cols);
    debug_assert_eq!(out.len(), rows);
    debug_assert_eq!(x.len(), cols);
    for (o, row) in out.iter_mut().zip(a.chunks_exact(cols)) {
        *o = dot(row, x);
    }
}

/// `out += A . x`
pub fn matvec_add(out: &mut [f64], a: &[f64], rows: usize, cols: usize, x: &[f64]) {
    debug_assert_eq!(a.len(), rows * cols);
    debug_assert_eq!(out.len(), rows);
    debug_assert_eq!(x.len(), cols);
    for (o, row) in out.iter_mut().zip(a.chunks_exact(cols)) {
        *o += dot(row, x);
    }
}

/// `out += A^T . x` where `A` is `rows x cols`, `x` has length `rows`.
pub fn matvec_t_add(out: &mut [f64], a: &[f64], rows: usize, cols: usize, x: &[f64]) {
    debug_assert_eq!(a.len(), rows * cols);
    debug_assert_eq!(out.len(), cols);
    debug_assert_eq!(x.len(), rows);
    for (xi, row) in x.iter().zip(a.chunks_exact(cols)) {
        if *xi != 0.0 {
            axpy(out, *xi, row);
        }
    }
}

/// `A += u . v^T`
pub fn outer_add(a: &mut [f64], rows: usize, cols: usize, u: &[f64], v: &[f64]) {
    debug_assert_eq!(a.len(), rows * cols);
    debug_assert_eq!(u.len(), rows);
    debug_assert_eq!(v.len(), cols);
    for (ui, row) in u.iter().zip(a.chunks_exact_mut(cols)) {
        if *ui != 0.0 {
            axpy(row, *ui, v);
        }
    }
}

/// `y += alpha * x`
pub fn axpy(y: &mut [f64], alpha: f64, x: &[f64]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn scale(y: &mut [f64], alpha: f64) {
    for yi in y.iter_mut() {
        *yi *= alpha;
    }
}

pub fn l2_norm_sq(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// In-place softmax with max-subtraction so large logits cannot overflow.
pub fn softmax_in_place(z: &mut [f64]) {
    let max = z.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for v in z.iter_mut() {
        *v = (*v - max).exp();
        sum += *v;
    }
    for v in z.iter_mut() {
        *v /= sum;
    }
}

/// log(sum(exp(x_i))) computed stably.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max.is_infinite() {
        return max;
    }
    let sum: f64 = xs.iter().map(|x| (x - max).exp()).sum();
    max + sum.ln()
}

/// Cosine similarity; 0 when either vector has zero norm.
pub fn cosine_similarity(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let na = l2_norm_sq(a).sqrt();
    let nb = l2_norm_sq(b).sqrt();
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    dot(a, b) / (na * nb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_matches_triple_loop() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]; // 2x3
        let x = [7.0, 8.0, 9.0];
        let mut out = [0.0; 2];
        matvec(&mut out, &a, 2, 3, &x);
        assert_eq!(out, [50.0, 122.0]);
    }

    #[test]
    fn transpose_matvec_accumulates() {
        let a = [1.0, 2.0, 3.0, 4.0]; // 2x2
        let x = [5.0, 6.0];
        let mut out = [1.0, 1.0];
        matvec_t_add(&mut out, &a, 2, 2, &x);
        // A^T x = [1*5+3*6, 2*5+4*6] = [23, 34]
        assert_eq!(out, [24.0, 35.0]);
    }

    #[test]
    fn outer_add_rank_one_update() {
        let mut a = [0.0; 6];
        outer_add(&mut a, 2, 3, &[1.0, 2.0], &[3.0, 4.0, 5.0]);
        assert_eq!(a, [3.0, 4.0, 5.0, 6.0, 8.0, 10.0]);
    }

    #[test]
    fn softmax_uniform_and_shift_invariant() {
        let mut z = vec![3.0; 5];
        softmax_in_place(&mut z);
        for v in &z {
            assert!((v - 0.2).abs() < 1e-12);
        }
        let mut a = vec![0.1, -2.0, 4.0];
        let mut b: Vec<f64> = a.iter().map(|v| v + 123.0).collect();
        softmax_in_place(&mut a);
        softmax_in_place(&mut b);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn log_sum_exp_is_stable() {
        let xs = [-1000.0, -1000.1];
        let got = log_sum_exp(&xs);
        let expected = -1000.0 + (1.0 + (-0.1f64).exp()).ln();
        assert!((got - expected).abs() < 1e-12);
    }

    #[test]
    fn cosine_handles_zero_vectors() {
        assert_eq!(cosine_similarity(&[0.0, 0.0], &[1.0, 2.0]), 0.0);
        let s = cosine_similarity(&[1.0, 2.0], &[2.0, 4.0]);
        assert!((s - 1.0).abs() < 1e-12);
    }
}

//! Tridiagonal linear solves.

/// Solves a symmetric tridiagonal system by eliminating from both ends
/// towards the middle row.
///
/// For a persymmetric matrix and a mirror-symmetric (or antisymmetric)
/// right-hand side the floating-point operations on either half are
/// mirror images, so an even system with an odd number of rows produces an
/// exactly even solution. Returns `None` on a zero or non-finite pivot.
pub(crate) fn solve_symmetric_twisted(diag: &[f64], off: &[f64], rhs: &[f64]) -> Option<Vec<f64>> {
    let n = diag.len();
    debug_assert_eq!(off.len() + 1, n.max(1));
    debug_assert_eq!(rhs.len(), n);
    if n == 0 {
        return Some(Vec::new());
    }
    let m = (n - 1) / 2;
    let mut top_d = vec![0.0; n];
    let mut top_r = vec![0.0; n];
    let mut bot_d = vec![0.0; n];
    let mut bot_r = vec![0.0; n];

    for i in 0..m {
        if i == 0 {
            top_d[0] = diag[0];
            top_r[0] = rhs[0];
        } else {
            let w = off[i - 1] / top_d[i - 1];
            top_d[i] = diag[i] - w * off[i - 1];
            top_r[i] = rhs[i] - w * top_r[i - 1];
        }
        if !(top_d[i].is_finite() && top_d[i] != 0.0) {
            return None;
        }
    }
    for i in (m + 1..n).rev() {
        if i == n - 1 {
            bot_d[i] = diag[i];
            bot_r[i] = rhs[i];
        } else {
            let w = off[i] / bot_d[i + 1];
            bot_d[i] = diag[i] - w * off[i];
            bot_r[i] = rhs[i] - w * bot_r[i + 1];
        }
        if !(bot_d[i].is_finite() && bot_d[i] != 0.0) {
            return None;
        }
    }

    let (mut wd, mut wr) = (0.0, 0.0);
    let (mut vd, mut vr) = (0.0, 0.0);
    if m > 0 {
        let w = off[m - 1] / top_d[m - 1];
        wd = w * off[m - 1];
        wr = w * top_r[m - 1];
    }
    if m + 1 < n {
        let w = off[m] / bot_d[m + 1];
        vd = w * off[m];
        vr = w * bot_r[m + 1];
    }
    let pivot = diag[m] - (wd + vd);
    if !(pivot.is_finite() && pivot != 0.0) {
        return None;
    }
    let mut x = vec![0.0; n];
    x[m] = (rhs[m] - (wr + vr)) / pivot;
    for i in (0..m).rev() {
        x[i] = (top_r[i] - off[i] * x[i + 1]) / top_d[i];
    }
    for i in m + 1..n {
        x[i] = (bot_r[i] - off[i - 1] * x[i - 1]) / bot_d[i];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

/// Gaussian elimination with partial pivoting for a general tridiagonal
/// system (`lower`/`upper` have `n − 1` entries). Exactly zero pivots are
/// replaced by `tiny`, which is what inverse iteration at a converged shift
/// needs.
pub(crate) fn solve_pivoted(
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &[f64],
    tiny: f64,
) -> Vec<f64> {
    let n = diag.len();
    let mut dl = lower.to_vec();
    let mut d = diag.to_vec();
    let mut du = upper.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut b = rhs.to_vec();
    if n == 0 {
        return b;
    }
    for i in 0..n - 1 {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let tmp = d[i + 1];
            d[i + 1] = du[i] - fact * tmp;
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = tmp;
            let tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - fact * b[i + 1];
        }
        dl[i] = 0.0;
    }
    if d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = b[n - 1] / d[n - 1];
    if n > 1 {
        x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
    x
}

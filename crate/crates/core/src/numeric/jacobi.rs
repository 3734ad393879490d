use super::SymMat;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
///
/// Iterates until the off-diagonal Frobenius norm drops below `eps * scale`, where
/// `scale` is the Frobenius norm of the input. The eigenvalue error is bounded by the
/// remaining off-diagonal norm.
pub fn eigenvalues_sym(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let mut a: Vec<Vec<f64>> = a.to_vec();
    let scale = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let threshold = f64::EPSILON * scale.max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.total_cmp(y));
    eig
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                s += v * v;
            }
        }
    }
    s.sqrt()
}

// Annihilates a[p][q] with a plane rotation applied from both sides.
fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for row in a.iter_mut() {
        let (akp, akq) = (row[p], row[q]);
        row[p] = c * akp - s * akq;
        row[q] = s * akp + c * akq;
    }
    let (lo, hi) = a.split_at_mut(p.max(q));
    let (row_p, row_q) = if p < q { (&mut lo[p], &mut hi[0]) } else { (&mut hi[0], &mut lo[q]) };
    for (apk, aqk) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let (vp, vq) = (*apk, *aqk);
        *apk = c * vp - s * vq;
        *aqk = s * vp + c * vq;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
}

pub fn min_eig_f64(a: &[Vec<f64>]) -> f64 {
    eigenvalues_sym(a).first().copied().unwrap_or(0.0)
}

/// Smallest eigenvalue of `m`, accurate to `tol * (1 + max |entry|)`.
pub fn min_eig_approx(m: &SymMat, tol: f64) -> f64 {
    assert!(tol > 0.0, "tolerance must be positive");
    min_eig_f64(&m.to_f64())
}

use num_complex::Complex;

use crate::{Error, Real, Result};

/// Extrapolates samples v(h) to h → 0 under v(h) = v0 + Σ_j c_j h^{order+j},
/// using as many correction terms as the samples allow.
pub fn richardson_extrapolate<T: Real>(values: &[(T, Complex<T>)], order: u32) -> Result<Complex<T>> {
    let m = values.len();
    if m < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got: m });
    }
    for i in 0..m {
        for j in 0..i {
            if values[i].0 == values[j].0 {
                return Err(Error::InvalidParameters("sample spacings must be distinct".into()));
            }
        }
    }
    // Scale h so the Vandermonde-type system stays well conditioned.
    let hmax = values.iter().fold(T::zero(), |a, v| a.max(v.0.abs()));
    let mut a = vec![vec![T::zero(); m]; m];
    let mut rhs: Vec<Complex<T>> = Vec::with_capacity(m);
    for (i, (h, v)) in values.iter().enumerate() {
        let x = *h / hmax;
        a[i][0] = T::one();
        for (j, slot) in a[i].iter_mut().enumerate().skip(1) {
            *slot = x.powi((order as usize + j - 1) as i32);
        }
        rhs.push(*v);
    }
    // Gaussian elimination with partial pivoting.
    for col in 0..m {
        let piv = (col..m)
            .max_by(|&r1, &r2| {
                a[r1][col]
                    .abs()
                    .partial_cmp(&a[r2][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("non-empty");
        if a[piv][col].abs() == T::zero() {
            return Err(Error::InvalidParameters("singular extrapolation system".into()));
        }
        a.swap(col, piv);
        rhs.swap(col, piv);
        for r in col + 1..m {
            let factor = a[r][col] / a[col][col];
            for c in col..m {
                let sub = factor * a[col][c];
                a[r][c] = a[r][c] - sub;
            }
            let sub = rhs[col] * factor;
            rhs[r] = rhs[r] - sub;
        }
    }
    let mut sol = vec![Complex::new(T::zero(), T::zero()); m];
    for r in (0..m).rev() {
        let mut acc = rhs[r];
        for c in r + 1..m {
            acc = acc - sol[c] * a[r][c];
        }
        sol[r] = acc / a[r][r];
    }
    Ok(sol[0])
}

/// Least-squares slope of ln|err| against ln h.
pub fn fitted_order<T: Real>(samples: &[(T, T)]) -> Option<T> {
    let pts: Vec<(T, T)> = samples
        .iter()
        .filter(|(h, e)| *h > T::zero() && *e > T::zero())
        .map(|(h, e)| (h.ln(), e.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = T::lit(pts.len() as f64);
    let mx = pts.iter().fold(T::zero(), |a, p| a + p.0) / n;
    let my = pts.iter().fold(T::zero(), |a, p| a + p.1) / n;
    let sxx = pts.iter().fold(T::zero(), |a, p| a + (p.0 - mx) * (p.0 - mx));
    let sxy = pts.iter().fold(T::zero(), |a, p| a + (p.0 - mx) * (p.1 - my));
    if sxx == T::zero() {
        None
    } else {
        Some(sxy / sxx)
    }
}

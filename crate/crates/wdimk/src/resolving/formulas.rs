//! Closed-form values for Hamming graphs.

use super::ResolvingError;

/// `κ` of a Hamming product with clique sizes `n_1 >= n_2 >= ... >= n_r >= 2`:
/// twice the product of all sizes except the largest. For hypercubes this
/// specialises to `κ(Q_r) = 2^r`.
pub fn kappa_hamming_formula(dims: &[u16]) -> Result<u64, ResolvingError> {
    if dims.len() < 2 || dims.iter().any(|&d| d < 2) {
        return Err(ResolvingError::BadDims);
    }
    if dims.windows(2).any(|w| w[0] < w[1]) {
        return Err(ResolvingError::BadDims);
    }
    let mut out: u64 = 2;
    for &d in &dims[1..] {
        out = out.checked_mul(d as u64).ok_or(ResolvingError::BadDims)?;
    }
    Ok(out)
}

/// `wdim_k(K_n □ K_n)` for `n >= 3` and `2 <= k <= 2n`:
///
/// * `k = 2` — `ceil(4n/3)`;
/// * `k = 3` or `k` even — `n * ceil(k/2)`;
/// * otherwise (odd `k >= 5`) — `n * ceil(k/2) - 1`.
pub fn wdim_formula_knkn(n: u16, k: u32) -> Result<u64, ResolvingError> {
    if n < 3 {
        return Err(ResolvingError::OutOfRange(format!(
            "square formula needs n >= 3, got {n}"
        )));
    }
    if k < 2 || k > 2 * n as u32 {
        return Err(ResolvingError::OutOfRange(format!(
            "square formula needs 2 <= k <= 2n = {}, got {k}",
            2 * n as u32
        )));
    }
    let n = n as u64;
    let half_up = (k as u64).div_ceil(2);
    Ok(if k == 2 {
        (4 * n).div_ceil(3)
    } else if k == 3 || k.is_multiple_of(2) {
        n * half_up
    } else {
        n * half_up - 1
    })
}

/// `wdim_1(K_n □ K_n) = floor((4n - 2) / 3)`, the metric dimension of the
/// square rook's graph. Kept separate because the three-case formula above
/// starts at `k = 2`.
pub fn wdim1_knkn(n: u16) -> Result<u64, ResolvingError> {
    if n < 2 {
        return Err(ResolvingError::OutOfRange(format!(
            "wdim_1 formula needs n >= 2, got {n}"
        )));
    }
    Ok((4 * n as u64 - 2) / 3)
}

/// Conjectured `wdim_k(K_n □ K_m)` for the rectangular case `m >= n + 1`,
/// `n >= 3`, `3 <= k <= 2n`: `m * ceil(k/2)`, minus one when `k` is odd.
/// Also accepts `k = 2` when `m >= 2n`, where the believed value is `m`.
///
/// This value is conjectural; exact solvers are the ground truth wherever
/// they run.
pub fn conjecture_formula(n: u16, m: u16, k: u32) -> Result<u64, ResolvingError> {
    if n < 3 || m < n + 1 {
        return Err(ResolvingError::OutOfRange(format!(
            "conjecture needs n >= 3 and m >= n + 1, got n={n} m={m}"
        )));
    }
    if k == 2 {
        if m as u32 >= 2 * n as u32 {
            return Ok(m as u64);
        }
        return Err(ResolvingError::OutOfRange(format!(
            "k = 2 is conjectured only for m >= 2n = {}, got m={m}",
            2 * n
        )));
    }
    if k < 3 || k > 2 * n as u32 {
        return Err(ResolvingError::OutOfRange(format!(
            "conjecture needs 3 <= k <= 2n = {}, got {k}",
            2 * n as u32
        )));
    }
    let half_up = (k as u64).div_ceil(2);
    Ok(if k.is_multiple_of(2) {
        m as u64 * half_up
    } else {
        m as u64 * half_up - 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_formula_values() {
        assert_eq!(kappa_hamming_formula(&[4, 3]).unwrap(), 6);
        assert_eq!(kappa_hamming_formula(&[2, 2, 2]).unwrap(), 8);
        assert_eq!(kappa_hamming_formula(&[5, 5]).unwrap(), 10);
    }

    #[test]
    fn kappa_formula_rejects_bad_dims() {
        assert!(kappa_hamming_formula(&[5]).is_err());
        assert!(kappa_hamming_formula(&[3, 4]).is_err());
        assert!(kappa_hamming_formula(&[3, 1]).is_err());
    }

    #[test]
    fn square_formula_values() {
        assert_eq!(wdim_formula_knkn(6, 2).unwrap(), 8);
        assert_eq!(wdim_formula_knkn(5, 5).unwrap(), 14);
        assert_eq!(wdim_formula_knkn(4, 3).unwrap(), 8);
        assert_eq!(wdim_formula_knkn(5, 10).unwrap(), 25);
    }

    #[test]
    fn square_formula_domain() {
        assert!(wdim_formula_knkn(2, 2).is_err());
        assert!(wdim_formula_knkn(5, 1).is_err());
        assert!(wdim_formula_knkn(5, 11).is_err());
    }

    #[test]
    fn wdim1_values() {
        assert_eq!(wdim1_knkn(3).unwrap(), 3);
        assert_eq!(wdim1_knkn(4).unwrap(), 4);
        assert_eq!(wdim1_knkn(5).unwrap(), 6);
    }

    #[test]
    fn conjecture_values() {
        assert_eq!(conjecture_formula(5, 7, 7).unwrap(), 27);
        assert_eq!(conjecture_formula(6, 10, 12).unwrap(), 60);
        assert_eq!(conjecture_formula(5, 10, 2).unwrap(), 10);
    }

    #[test]
    fn conjecture_domain() {
        assert!(conjecture_formula(5, 5, 5).is_err());
        assert!(conjecture_formula(5, 6, 2).is_err());
        assert!(conjecture_formula(5, 6, 11).is_err());
        assert!(conjecture_formula(2, 6, 3).is_err());
    }
}

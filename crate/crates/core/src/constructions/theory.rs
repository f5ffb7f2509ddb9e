use serde::Serialize;

use super::smallest_prime_factor;
use crate::combinatorics::binomial;
use crate::domination::mantel_lower_bound_f3;
use crate::error::{invalid, Result};
use crate::graph::Family;

/// Known value or bracket for `γ(F_k(G))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaBounds {
    /// Set only where the value is proven in closed form.
    pub exact: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    pub source: &'static str,
    /// `⌈|V| / (1 + Δ)⌉`.
    pub degree_lower: u64,
    /// Leading term of the residue construction's size for stars, `k >= 3`.
    pub asymptotic_upper: Option<f64>,
}

/// Smallest integer strictly greater than `num / den`.
fn strictly_above(num: u64, den: u64) -> u64 {
    num / den + 1
}

/// Closed-form knowledge of `γ(F_k(S_n))` or `γ(F_k(K_n))`.
///
/// `k` is replaced by `min(k, N − k)` (with `N` base vertices) since
/// `F_k(G) ≅ F_{N−k}(G)`.
pub fn theoretical_gamma(family: Family, n: u32, k: u32) -> Result<GammaBounds> {
    match family {
        Family::Star => star(n, k),
        Family::Complete => complete(n, k),
        Family::Custom => invalid("closed forms exist only for the star and complete families"),
    }
}

fn star(n: u32, k: u32) -> Result<GammaBounds> {
    let big = n as u64 + 1;
    if n == 0 || k == 0 || k as u64 > big {
        return invalid(format!("F_k(S_n) needs n >= 1 and 1 <= k <= n+1, got n={n}, k={k}"));
    }
    let k = (k as u64).min(big - k as u64);
    let n = n as u64;
    // Δ(F_k(S_n)) = n − k + 1
    let degree_lower = binomial(big, k).div_ceil(n - k + 2);
    Ok(match k {
        0 => exact(1, "single-vertex", 1),
        1 => exact(1, "star-k1", degree_lower),
        2 => exact(n - 1, "star-f2-exact", degree_lower),
        _ => {
            let base = binomial(n, k - 1);
            let p = smallest_prime_factor(k - 1)? as f64;
            let kf = k as f64;
            GammaBounds {
                exact: None,
                lower: strictly_above(base, k).max(degree_lower),
                upper: base,
                source: "star-fk-bounds",
                degree_lower,
                asymptotic_upper: Some((1.0 - 1.0 / p + 1.0 / (kf + p - 1.0)) * base as f64),
            }
        }
    })
}

fn complete(n: u32, k: u32) -> Result<GammaBounds> {
    if n == 0 || k == 0 || k > n {
        return invalid(format!("F_k(K_n) needs 1 <= k <= n, got n={n}, k={k}"));
    }
    let k = k.min(n - k) as u64;
    let n64 = n as u64;
    // every vertex has degree k(n − k)
    let degree_lower = binomial(n64, k).div_ceil(1 + k * (n64 - k));
    Ok(match k {
        0 => exact(1, "single-vertex", 1),
        1 => exact(1, "complete-k1", degree_lower),
        2 => exact(n64 / 2, "complete-f2-exact", degree_lower),
        _ => {
            let base = binomial(n64, k - 1);
            let printed = strictly_above(base, k * k);
            let upper = base / k;
            if k == 3 {
                let mantel = mantel_lower_bound_f3(n)?;
                if n % 12 == 2 || n % 12 == 6 {
                    exact(mantel, "complete-f3-exact", degree_lower)
                } else {
                    GammaBounds {
                        exact: None,
                        lower: mantel.max(printed),
                        upper,
                        source: "complete-f3-mantel",
                        degree_lower,
                        asymptotic_upper: None,
                    }
                }
            } else {
                GammaBounds {
                    exact: None,
                    lower: printed,
                    upper,
                    source: "complete-fk-bounds",
                    degree_lower,
                    asymptotic_upper: None,
                }
            }
        }
    })
}

fn exact(value: u64, source: &'static str, degree_lower: u64) -> GammaBounds {
    GammaBounds {
        exact: Some(value),
        lower: value,
        upper: value,
        source,
        degree_lower,
        asymptotic_upper: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = theoretical_gamma(Family::Star, 9, 2).unwrap();
        assert_eq!(s.exact, Some(8));

        let c = theoretical_gamma(Family::Complete, 14, 3).unwrap();
        assert_eq!(c.exact, Some(14));

        let c = theoretical_gamma(Family::Complete, 10, 4).unwrap();
        assert_eq!((c.lower, c.upper), (8, 30));
        assert_eq!(c.degree_lower, 9); // ⌈210 / 25⌉
        assert_eq!(c.exact, None);

        assert!(theoretical_gamma(Family::Custom, 5, 2).is_err());
        assert!(theoretical_gamma(Family::Complete, 5, 6).is_err());
        assert_eq!(theoretical_gamma(Family::Complete, 2, 2).unwrap().exact, Some(1));
        assert_eq!(theoretical_gamma(Family::Star, 3, 4).unwrap().exact, Some(1));
    }

    #[test]
    fn strict_lower_when_integral() {
        // C(8,3)/16 = 3.5 → 4; C(6,2)/9 → 2
        assert_eq!(theoretical_gamma(Family::Complete, 8, 4).unwrap().lower, 4);
        assert_eq!(strictly_above(16, 4), 5);
        assert_eq!(strictly_above(15, 4), 4);
    }

    #[test]
    fn symmetric_k() {
        let a = theoretical_gamma(Family::Complete, 9, 2).unwrap();
        let b = theoretical_gamma(Family::Complete, 9, 7).unwrap();
        assert_eq!(a, b);
        let a = theoretical_gamma(Family::Star, 7, 3).unwrap();
        let b = theoretical_gamma(Family::Star, 7, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn star_fk_bracket() {
        let s = theoretical_gamma(Family::Star, 12, 3).unwrap();
        assert_eq!(s.upper, 66);
        // C(13,3) / (12 − 3 + 2) = 286 / 11 = 26
        assert_eq!(s.degree_lower, 26);
        assert_eq!(s.lower, 26);
        let asym = s.asymptotic_upper.unwrap();
        assert!((asym - 0.75 * 66.0).abs() < 1e-9);
    }
}

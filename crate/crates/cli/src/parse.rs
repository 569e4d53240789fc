//! Command-line value syntax: complex numbers as `re,im`, zeros as
//! `re,im[:m]`.

use num_complex::Complex64;

/// A zero of a Blaschke product with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSpec {
    pub zero: Complex64,
    pub mult: usize,
}

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// Parse `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected `re,im`, got `{s}`"))?;
    Ok(Complex64::new(parse_real(re)?, parse_real(im)?))
}

/// Parse `re,im` or `re,im:m` with `m ≥ 1`.
pub fn parse_zero(s: &str) -> Result<ZeroSpec, String> {
    let (z, mult) = match s.split_once(':') {
        Some((z, m)) => {
            let m: usize = m.trim().parse().map_err(|_| format!("bad multiplicity in `{s}`"))?;
            if m == 0 {
                return Err(format!("multiplicity must be positive in `{s}`"));
            }
            (z, m)
        }
        None => (s, 1),
    };
    Ok(ZeroSpec { zero: parse_complex(z)?, mult })
}

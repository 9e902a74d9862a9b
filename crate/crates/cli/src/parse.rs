//! Parsers for flag values that clap cannot handle on its own.

use num_complex::Complex64;

/// Parses a complex gain. Accepted forms: `3`, `-1.5`, `2j`, `j`, `-j`,
/// `3+4j`, `1-1j`, `1e-3-2e-1j`; `i` works in place of `j`.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex number {s:?} (expected forms like 3, 2j, 3+4j)");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix(['j', 'i']) else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re.is_empty() {
        0.0
    } else {
        re.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

/// Ascending SNR values in dB.
#[derive(Debug, Clone, PartialEq)]
pub struct DbGrid(pub Vec<f64>);

/// Parses an SNR grid in dB: `start:step:stop` (inclusive), a comma list,
/// or a single value.
pub fn snr_grid_db(s: &str) -> Result<DbGrid, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("invalid SNR value {x:?}"))
    };
    let parts: Vec<&str> = s.split(':').collect();
    let grid = match parts.as_slice() {
        [start, step, stop] => {
            let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
            if !(step > 0.0) || stop < start {
                return Err(format!(
                    "invalid SNR range {s:?}: need step > 0 and stop >= start"
                ));
            }
            let n = ((stop - start) / step + 1e-9).floor() as usize;
            (0..=n).map(|i| start + step * i as f64).collect()
        }
        [list] => list.split(',').map(num).collect::<Result<Vec<_>, _>>()?,
        _ => {
            return Err(format!(
                "invalid SNR grid {s:?}: use start:step:stop or a list"
            ))
        }
    };
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("SNR grid {s:?} must be strictly ascending"));
    }
    Ok(DbGrid(grid))
}

/// Parses `a,b,c` into three positive reals.
pub fn triple(s: &str) -> Result<[f64; 3], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid number {x:?}"))
        })
        .collect::<Result<_, _>>()?;
    match v.as_slice() {
        &[a, b, c] => Ok([a, b, c]),
        _ => Err(format!("expected three comma-separated values, got {s:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(complex("3+4j").unwrap(), c(3.0, 4.0));
        assert_eq!(complex("1-1j").unwrap(), c(1.0, -1.0));
        assert_eq!(complex("2j").unwrap(), c(0.0, 2.0));
        assert_eq!(complex("-j").unwrap(), c(0.0, -1.0));
        assert_eq!(complex("j").unwrap(), c(0.0, 1.0));
        assert_eq!(complex("0.5").unwrap(), c(0.5, 0.0));
        assert_eq!(complex("-2.5e-1+1e1i").unwrap(), c(-0.25, 10.0));
        assert_eq!(complex(" 1 + 2j ").unwrap(), c(1.0, 2.0));
        for bad in ["", "x", "1+", "3+4k", "1++2j"] {
            assert!(complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn snr_forms() {
        assert_eq!(snr_grid_db("0:5:40").unwrap().0.len(), 9);
        assert_eq!(snr_grid_db("0:0.1:1").unwrap().0.len(), 11);
        assert_eq!(snr_grid_db("120").unwrap().0, vec![120.0]);
        assert!(snr_grid_db("10,0").is_err());
        assert!(snr_grid_db("0:0:5").is_err());
        assert!(snr_grid_db("a").is_err());
    }

    #[test]
    fn triples() {
        assert_eq!(triple("1,2,3").unwrap(), [1.0, 2.0, 3.0]);
        assert!(triple("1,2").is_err());
    }
}

//! Grid specifications for sweeps.
//!
//! Accepted forms: a single value `4`, an inclusive range `2..10` (step 1),
//! a stepped range `2..6:0.5`, and a log-spaced range `0.1..30:log50` with
//! the given number of points.

pub fn parse_f64_grid(spec: &str) -> Result<Vec<f64>, String> {
    let bad = |msg: &str| format!("bad grid {spec:?}: {msg}");
    let Some((lo, rest)) = spec.split_once("..") else {
        let x: f64 = spec.parse().map_err(|_| bad("not a number"))?;
        return Ok(vec![x]);
    };
    let lo: f64 = lo.parse().map_err(|_| bad("bad lower bound"))?;
    let (hi, step) = match rest.split_once(':') {
        None => (rest, None),
        Some((hi, step)) => (hi, Some(step)),
    };
    let hi: f64 = hi.parse().map_err(|_| bad("bad upper bound"))?;
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(bad("lower bound exceeds upper bound"));
    }
    match step {
        Some(s) if s.starts_with("log") => {
            let n: usize = s[3..].parse().map_err(|_| bad("bad log point count"))?;
            if n < 2 {
                return Err(bad("log grids need at least 2 points"));
            }
            if lo <= 0.0 {
                return Err(bad("log grids need a positive lower bound"));
            }
            Ok((0..n)
                .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
                .collect())
        }
        Some(s) => {
            let step: f64 = s.parse().map_err(|_| bad("bad step"))?;
            if step <= 0.0 {
                return Err(bad("step must be positive"));
            }
            let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
            Ok((0..count).map(|i| lo + i as f64 * step).collect())
        }
        None => {
            let count = (hi - lo + 1e-9).floor() as usize + 1;
            Ok((0..count).map(|i| lo + i as f64).collect())
        }
    }
}

pub fn parse_genus_grid(spec: &str) -> Result<Vec<u32>, String> {
    let bad = |msg: &str| format!("bad genus grid {spec:?}: {msg}");
    let Some((lo, rest)) = spec.split_once("..") else {
        let g: u32 = spec.parse().map_err(|_| bad("not an integer"))?;
        return Ok(vec![g]);
    };
    let lo: u32 = lo.parse().map_err(|_| bad("bad lower bound"))?;
    let (hi, step) = match rest.split_once(':') {
        None => (rest, 1u32),
        Some((hi, s)) => (hi, s.parse().map_err(|_| bad("bad step"))?),
    };
    let hi: u32 = hi.parse().map_err(|_| bad("bad upper bound"))?;
    if lo > hi {
        return Err(bad("lower bound exceeds upper bound"));
    }
    if step == 0 {
        return Err(bad("step must be positive"));
    }
    Ok((lo..=hi).step_by(step as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singletons_and_ranges() {
        assert_eq!(parse_f64_grid("4").unwrap(), vec![4.0]);
        assert_eq!(parse_f64_grid("2..4").unwrap(), vec![2.0, 3.0, 4.0]);
        assert_eq!(parse_f64_grid("2..6:0.5").unwrap().len(), 9);
        assert_eq!(parse_genus_grid("2..10").unwrap().len(), 9);
        assert_eq!(parse_genus_grid("2..10:2").unwrap(), vec![2, 4, 6, 8, 10]);
    }

    #[test]
    fn log_grids_hit_both_endpoints() {
        let g = parse_f64_grid("0.1..30:log50").unwrap();
        assert_eq!(g.len(), 50);
        assert!((g[0] - 0.1).abs() < 1e-12);
        assert!((g[49] - 30.0).abs() < 1e-9);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(parse_f64_grid("x").is_err());
        assert!(parse_f64_grid("4..2").is_err());
        assert!(parse_f64_grid("1..2:log1").is_err());
        assert!(parse_f64_grid("0..2:log5").is_err());
        assert!(parse_f64_grid("1..2:-1").is_err());
        assert!(parse_genus_grid("2..3:0").is_err());
    }
}

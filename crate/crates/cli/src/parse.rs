//! Coefficient lists, complex literals and matrix files.

use num_complex::Complex64;
use polybound::{CoefficientOrder, ComplexMatrix64, Polynomial64};

use crate::CliError;

/// Stands in for a leading `-` so the argument parser does not mistake a
/// negative coefficient for a flag.
pub const MINUS_SIGN: char = '\u{2212}';

/// Rewrites negative coefficient literals (`-1+2i`, `-i`, `-3`) among the
/// positional arguments of the coefficient-taking subcommands.
pub fn protect_negative_literals(args: Vec<String>, value_flags: &[&str]) -> Vec<String> {
    let takes_coefficients = matches!(args.get(1).map(String::as_str), Some("bounds" | "roots"));
    if !takes_coefficients {
        return args;
    }
    let mut out = Vec::with_capacity(args.len());
    let mut after_separator = false;
    for (k, arg) in args.iter().enumerate() {
        let flag_value = k > 0 && value_flags.contains(&args[k - 1].as_str());
        after_separator |= arg == "--";
        let rewrite = !after_separator && !flag_value && arg.starts_with('-') && parse_complex(arg).is_some();
        out.push(if rewrite { format!("{MINUS_SIGN}{}", &arg[1..]) } else { arg.clone() });
    }
    out
}

/// Parses `3`, `-2.5`, `1+2i`, `1e-3-4i`, `2i`, `-i` and the like.
pub fn parse_complex(token: &str) -> Option<Complex64> {
    let trimmed = token.trim();
    let restored;
    let s = match trimmed.strip_prefix(MINUS_SIGN) {
        Some(rest) => {
            restored = format!("-{rest}");
            restored.as_str()
        }
        None => trimmed,
    };
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return parse_real(s).map(|re| Complex64::new(re, 0.0));
    };
    // The imaginary part starts at the last sign that is not an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (parse_real(&body[..k])?, parse_unit(&body[k..])?),
        None => (0.0, parse_unit(body)?),
    };
    Some(Complex64::new(re, im))
}

fn parse_real(s: &str) -> Option<f64> {
    let x: f64 = s.parse().ok()?;
    x.is_finite().then_some(x)
}

/// Imaginary coefficient; a bare sign means one.
fn parse_unit(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => parse_real(s),
    }
}

pub fn parse_polynomial(tokens: &[String], ascending: bool) -> Result<Polynomial64, CliError> {
    if tokens.is_empty() {
        return Err(CliError::Input("no coefficients given".into()));
    }
    let coeffs = tokens
        .iter()
        .enumerate()
        .map(|(k, t)| {
            parse_complex(t).ok_or_else(|| CliError::Input(format!("coefficient {} ({t:?}) is not a number", k + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let order = if ascending { CoefficientOrder::Ascending } else { CoefficientOrder::Descending };
    Ok(Polynomial64::from_coefficients(&coeffs, order)?)
}

/// Reads the `rows cols` header followed by row-major `re` or `re,im` entries.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix64, CliError> {
    let mut tokens = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    let mut dim = |what: &str| -> Result<usize, CliError> {
        let t = tokens.next().ok_or_else(|| CliError::Input(format!("matrix file is missing the {what} count")))?;
        t.parse().map_err(|_| CliError::Input(format!("bad {what} count {t:?}")))
    };
    let rows = dim("row")?;
    let cols = dim("column")?;
    let mut data = Vec::with_capacity(rows * cols);
    for (k, t) in tokens.enumerate() {
        let z = match t.split_once(',') {
            Some((re, im)) => parse_real(re).zip(parse_real(im)).map(|(a, b)| Complex64::new(a, b)),
            None => parse_real(t).map(|a| Complex64::new(a, 0.0)),
        };
        data.push(z.ok_or_else(|| CliError::Input(format!("matrix entry {} ({t:?}) is not a number", k + 1)))?);
    }
    if data.len() != rows * cols {
        return Err(CliError::Input(format!(
            "expected {} entries for a {rows}x{cols} matrix, found {}",
            rows * cols,
            data.len()
        )));
    }
    Ok(ComplexMatrix64::new(rows, cols, data)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Option<Complex64> {
        Some(Complex64::new(re, im))
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("3"), c(3.0, 0.0));
        assert_eq!(parse_complex("-1+2i"), c(-1.0, 2.0));
        assert_eq!(parse_complex("1-2i"), c(1.0, -2.0));
        assert_eq!(parse_complex("2.5i"), c(0.0, 2.5));
        assert_eq!(parse_complex("-i"), c(0.0, -1.0));
        assert_eq!(parse_complex("i"), c(0.0, 1.0));
        assert_eq!(parse_complex("1e-3+2e+1i"), c(1e-3, 20.0));
        assert_eq!(parse_complex("-1e-3-i"), c(-1e-3, -1.0));
        assert_eq!(parse_complex("\u{2212}1+2i"), c(-1.0, 2.0));
        for bad in ["", "x", "1+", "1+2j", "nan", "inf", "1++2i", "--1"] {
            assert_eq!(parse_complex(bad), None, "{bad}");
        }
    }

    #[test]
    fn negative_literals_survive_flag_parsing() {
        let args = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
        let out = protect_negative_literals(args("pb bounds 1 -i -2+3i --with-roots --tol -1"), &["--tol"]);
        assert_eq!(out[3], "\u{2212}i");
        assert_eq!(out[4], "\u{2212}2+3i");
        assert_eq!(out[5], "--with-roots");
        assert_eq!(out[7], "-1");
        let untouched = args("pb verify-ineq --seed -3");
        assert_eq!(protect_negative_literals(untouched.clone(), &[]), untouched);
    }

    #[test]
    fn polynomial_tokens() {
        let toks = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
        let p = parse_polynomial(&toks("1 0 -1+2i"), false).unwrap();
        assert_eq!(p.coeffs(), &[Complex64::new(-1.0, 2.0), Complex64::new(0.0, 0.0)]);
        let q = parse_polynomial(&toks("6 -5 1"), true).unwrap();
        assert_eq!(q.to_string(), parse_polynomial(&toks("1 -5 6"), false).unwrap().to_string());
        let err = parse_polynomial(&toks("1 2 x"), false).unwrap_err();
        assert!(err.to_string().contains("coefficient 3"));
        assert!(parse_polynomial(&toks("0 1 2"), false).unwrap_err().to_string().contains("leading"));
    }

    #[test]
    fn matrix_files() {
        let m = parse_matrix("# shift\n2 2\n0 0 # first row\n1,0 0,-1\n").unwrap();
        assert_eq!(m[(1, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(m[(1, 1)], Complex64::new(0.0, -1.0));
        assert!(parse_matrix("2 2\n1 2 3").is_err());
        assert!(parse_matrix("2 x\n").is_err());
        assert!(parse_matrix("1 1\n1,q").is_err());
    }
}

//! Flag validation shared by the subcommands.

/// A domain error; reported as JSON on stderr with exit status 2.
#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn domain(m: impl Into<String>) -> Self {
        Failure { kind: "domain", message: m.into() }
    }

    pub fn io(e: std::io::Error) -> Self {
        Failure { kind: "io", message: e.to_string() }
    }
}

impl From<ramyip::Error> for Failure {
    fn from(e: ramyip::Error) -> Self {
        let kind = match e {
            ramyip::Error::Parse(_) => "parse",
            ramyip::Error::WalkBudget { .. } => "walk-budget",
            ramyip::Error::SingularFactor { .. } => "singular-factor",
            ramyip::Error::BadEvaluationPoint(_) => "bad-evaluation-point",
            _ => "domain",
        };
        Failure { kind, message: e.to_string() }
    }
}

/// Parses `μ` as comma-separated integers, padding missing trailing coordinates with 0.
/// Half-integer coordinates are refused: every weight here lies in `P_{C_n} = ℤ^n`.
pub fn parse_mu(s: &str, n: usize) -> Result<Vec<i32>, Failure> {
    let mut out = Vec::with_capacity(n);
    for tok in s.split(',').map(str::trim) {
        if tok.is_empty() {
            return Err(Failure::domain(format!("empty coordinate in mu {s:?}")));
        }
        match tok.parse::<i32>() {
            Ok(v) => out.push(v),
            Err(_) if tok.contains('/') || tok.contains('.') => {
                return Err(Failure::domain(format!(
                    "mu coordinate {tok:?} is not an integer; weights must lie in P_{{C_n}} = Z^n, half-integer weights are not accepted"
                )))
            }
            Err(_) => return Err(Failure::domain(format!("mu coordinate {tok:?} is not an integer"))),
        }
    }
    if out.len() > n {
        return Err(Failure::domain(format!("mu has {} coordinates but n = {n}", out.len())));
    }
    out.resize(n, 0);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pads_and_parses() {
        assert_eq!(parse_mu("0", 2).unwrap(), vec![0, 0]);
        assert_eq!(parse_mu("1,-2", 3).unwrap(), vec![1, -2, 0]);
        assert_eq!(parse_mu(" -1 , 1 ", 2).unwrap(), vec![-1, 1]);
    }

    #[test]
    fn rejects_half_integers_and_overlong() {
        assert!(parse_mu("1/2,0", 2).unwrap_err().message.contains("half-integer"));
        assert!(parse_mu("0.5", 2).is_err());
        assert!(parse_mu("1,2,3", 2).is_err());
        assert!(parse_mu("1,,2", 3).is_err());
    }
}

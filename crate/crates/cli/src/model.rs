//! Model-spec parsing: `<DYNKIN>["|crossed=" <idx> ("," <idx>)*]`, plus the
//! sigma and eigenvalue input grammars.

use parhopf::hopf::Eigenvalue;
use parhopf::rat::{parse_rat, Rat};
use parhopf::rootsys::DynkinSpec;
use parhopf::{Error, Result};

/// A parsed model: Dynkin spec plus optional crossed-node set.
#[derive(Debug, Clone)]
pub struct ModelSpec {
    pub dynkin: DynkinSpec,
    pub crossed: Option<Vec<usize>>,
}

impl ModelSpec {
    /// Parse e.g. `"A2"`, `"B3|crossed=1,3"`. Indices are 1-based.
    pub fn parse(input: &str) -> Result<ModelSpec> {
        match input.split_once('|') {
            None => Ok(ModelSpec { dynkin: DynkinSpec::parse(input)?, crossed: None }),
            Some((dynkin_str, rest)) => {
                let dynkin = DynkinSpec::parse(dynkin_str)?;
                let base = dynkin_str.len() + 1;
                let Some(list) = rest.strip_prefix("crossed=") else {
                    return Err(Error::Parse {
                        pos: base,
                        token: rest.chars().take(8).collect(),
                        msg: "expected \"crossed=\" after '|'".into(),
                    });
                };
                if list.is_empty() {
                    return Err(Error::Parse {
                        pos: input.len(),
                        token: String::new(),
                        msg: "expected at least one node index after \"crossed=\"".into(),
                    });
                }
                let mut crossed = Vec::new();
                let mut pos = base + "crossed=".len();
                for tok in list.split(',') {
                    let node: usize = tok.parse().map_err(|_| Error::Parse {
                        pos,
                        token: tok.into(),
                        msg: "expected a 1-based node index".into(),
                    })?;
                    crossed.push(node);
                    pos += tok.len() + 1;
                }
                Ok(ModelSpec { dynkin, crossed: Some(crossed) })
            }
        }
    }
}

/// Parse a comma-separated rational coefficient list, e.g. `"1,1/2,-3"`.
pub fn parse_sigma(input: &str) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in input.split(',') {
        let q = parse_rat(tok).ok_or_else(|| Error::Parse {
            pos,
            token: tok.into(),
            msg: "expected a rational coefficient".into(),
        })?;
        out.push(q);
        pos += tok.len() + 1;
    }
    Ok(out)
}

/// Parse the eigenvalue input grammar: a JSON array of `[re, im]` pairs, or
/// a comma-separated list of exact polar values `modulus∠degrees`.
pub fn parse_eigenvalues(input: &str) -> Result<Vec<Eigenvalue>> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('[') {
        let pairs: Vec<[f64; 2]> = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            pos: e.column().saturating_sub(1),
            token: trimmed.chars().skip(e.column().saturating_sub(1)).take(8).collect(),
            msg: format!("invalid eigenvalue JSON: expected [[re,im],...]: {e}"),
        })?;
        Ok(pairs.into_iter().map(|[re, im]| Eigenvalue::Float { re, im }).collect())
    } else {
        input.split(',').map(|tok| Eigenvalue::parse_polar(tok.trim())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use parhopf::rat::ratio;

    #[test]
    fn model_forms() {
        let m = ModelSpec::parse("A2").unwrap();
        assert_eq!(m.dynkin.name(), "A2");
        assert!(m.crossed.is_none());

        let m = ModelSpec::parse("a3|crossed=1,3").unwrap();
        assert_eq!(m.dynkin.name(), "A3");
        assert_eq!(m.crossed, Some(vec![1, 3]));
    }

    #[test]
    fn model_errors_carry_positions() {
        match ModelSpec::parse("A2|cross=1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match ModelSpec::parse("A2|crossed=x") {
            Err(Error::Parse { pos, token, .. }) => {
                assert_eq!(pos, 11);
                assert_eq!(token, "x");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(ModelSpec::parse("A2|crossed=").is_err());
    }

    #[test]
    fn sigma_list() {
        assert_eq!(parse_sigma("1,1/2").unwrap(), vec![ratio(1, 1), ratio(1, 2)]);
        assert!(parse_sigma("1,x").is_err());
    }

    #[test]
    fn eigenvalue_forms() {
        let v = parse_eigenvalues("[[0.5,0],[0.25,0]]").unwrap();
        assert_eq!(v.len(), 2);
        assert!(matches!(v[0], Eigenvalue::Float { re, im } if re == 0.5 && im == 0.0));

        let v = parse_eigenvalues("1/2∠0,1/4∠90").unwrap();
        assert_eq!(v.len(), 2);
        assert!(matches!(v[1], Eigenvalue::ExactPolar { .. }));

        assert!(parse_eigenvalues("[[0.5]]").is_err());
        assert!(parse_eigenvalues("oops").is_err());
    }
}

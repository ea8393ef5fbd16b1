use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Exp, Polynomial, VarTable};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<Exp>,
    pub coeff: String,
}

/// Wire form of a polynomial. Terms are listed from the grlex-largest monomial down
/// and every exponent vector has one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolynomialJson {
        let n = self.vars.len();
        PolynomialJson {
            vars: self.vars.names().to_vec(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.padded(n),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolynomialJson) -> Result<Polynomial> {
        let table: Arc<VarTable> = VarTable::new(j.vars.iter().cloned())?;
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let c = BigInt::from_str(&t.coeff)
                    .map_err(|_| Error::Usage(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.exp.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(&table, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_order() {
        let t = VarTable::new(["z", "x"]).unwrap();
        let p = &Polynomial::var(&t, "z").unwrap().pow(2) - &Polynomial::var(&t, "x").unwrap();
        let j = p.to_json();
        assert_eq!(j.terms[0].exp, vec![2, 0]);
        assert_eq!(j.terms[1].coeff, "-1");
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["z","x"],"terms":[{"exp":[2,0],"coeff":"1"},{"exp":[0,1],"coeff":"-1"}]}"#
        );
        let back: PolynomialJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Polynomial::from_json(&back).unwrap(), p);
    }
}

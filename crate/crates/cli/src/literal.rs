//! Textual field elements: `g^k`, `0`, `1`, `-1`, or `c0,c1,...` over F_p.

use std::fmt;
use std::str::FromStr;

use tracecurve_core::{Error, FieldContext, FieldElement, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementLiteral {
    /// g^k, k may be negative
    GenPow(i128),
    /// power-basis coefficients, constant term first
    Coeffs(Vec<i64>),
}

impl FromStr for ElementLiteral {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let t = s.trim();
        if let Some(k) = t.strip_prefix("g^") {
            let k = k.trim().parse::<i128>().map_err(|e| format!("bad exponent in {t:?}: {e}"))?;
            return Ok(ElementLiteral::GenPow(k));
        }
        if t.is_empty() {
            return Err("empty element literal".into());
        }
        let coeffs = t
            .split(',')
            .map(|c| c.trim().parse::<i64>().map_err(|e| format!("bad coefficient {c:?} in {t:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ElementLiteral::Coeffs(coeffs))
    }
}

impl fmt::Display for ElementLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementLiteral::GenPow(k) => write!(f, "g^{k}"),
            ElementLiteral::Coeffs(c) => {
                let parts: Vec<String> = c.iter().map(i64::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl ElementLiteral {
    pub fn resolve(&self, ctx: &FieldContext) -> Result<FieldElement> {
        match self {
            ElementLiteral::GenPow(k) => {
                let k = k.rem_euclid(ctx.group_order() as i128);
                Ok(ctx.gen_pow(k as u64))
            }
            ElementLiteral::Coeffs(c) if c.len() == 1 => Ok(ctx.from_int(c[0])),
            ElementLiteral::Coeffs(c) => {
                if c.len() > ctx.degree() {
                    return Err(Error::InvalidParameter(format!(
                        "{} coefficients given, field degree over F_p is {}",
                        c.len(),
                        ctx.degree()
                    )));
                }
                ctx.from_coeffs(c)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tracecurve_core::DEFAULT_SIZE_CAP;

    fn lit(s: &str) -> ElementLiteral {
        s.parse().unwrap()
    }

    #[test]
    fn parses_forms() {
        assert_eq!(lit("g^3"), ElementLiteral::GenPow(3));
        assert_eq!(lit("g^-1"), ElementLiteral::GenPow(-1));
        assert_eq!(lit("-1"), ElementLiteral::Coeffs(vec![-1]));
        assert_eq!(lit("1, 2"), ElementLiteral::Coeffs(vec![1, 2]));
        assert!("".parse::<ElementLiteral>().is_err());
        assert!("g^x".parse::<ElementLiteral>().is_err());
        assert!("1,,2".parse::<ElementLiteral>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["g^7", "g^-2", "0", "-1", "1,0,2"] {
            assert_eq!(lit(s).to_string(), s);
        }
    }

    #[test]
    fn resolves_in_context() {
        let ctx = FieldContext::new(3, 1, 2, DEFAULT_SIZE_CAP).unwrap();
        let g = ctx.generator();
        assert_eq!(lit("g^1").resolve(&ctx).unwrap(), g);
        assert_eq!(lit("g^8").resolve(&ctx).unwrap(), FieldElement::ONE);
        assert_eq!(lit("g^-1").resolve(&ctx).unwrap(), ctx.inv(g).unwrap());
        assert_eq!(lit("0").resolve(&ctx).unwrap(), FieldElement::ZERO);
        assert_eq!(lit("-1").resolve(&ctx).unwrap(), ctx.from_int(2));
        assert_eq!(lit("0,1").resolve(&ctx).unwrap(), ctx.from_coeffs(&[0, 1]).unwrap());
        assert!(lit("1,1,1").resolve(&ctx).is_err());
    }
}

use std::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// One printable monomial: a coefficient times a product of variable powers.
pub(crate) struct Term<'a> {
    pub coeff: &'a Rational,
    pub vars: [(&'static str, usize); 2],
}

/// Writes `terms` as `c1*X^a + c2*Y - c3`, omitting unit coefficients and
/// zero exponents. Prints `0` for an empty sum.
pub(crate) fn write_sum<'a, W: Write>(
    out: &mut W,
    terms: impl IntoIterator<Item = Term<'a>>,
) -> fmt::Result {
    let mut first = true;
    for term in terms {
        if term.coeff.is_zero() {
            continue;
        }
        let negative = term.coeff.is_negative();
        match (first, negative) {
            (true, true) => out.write_char('-')?,
            (true, false) => {}
            (false, true) => out.write_str(" - ")?,
            (false, false) => out.write_str(" + ")?,
        }
        first = false;

        let magnitude = term.coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        let has_vars = term.vars.iter().any(|&(_, p)| p > 0);
        if !magnitude.is_one() || !has_vars {
            factors.push(magnitude.to_string());
        }
        for &(name, power) in &term.vars {
            match power {
                0 => {}
                1 => factors.push(name.to_string()),
                p => factors.push(format!("{name}^{p}")),
            }
        }
        out.write_str(&factors.join("*"))?;
    }
    if first {
        out.write_char('0')?;
    }
    Ok(())
}

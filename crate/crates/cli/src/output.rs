//! JSON encodings. Rationals are always strings `"p/q"`; polynomials are
//! maps from exponent to coefficient; classes are arrays of polynomials
//! indexed by codimension.

use indexcalc::{CompleteIntersection, GradedClass, Rational, TwistPoly};
use serde_json::{json, Map, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn poly(p: &TwistPoly) -> Value {
    let map: Map<String, Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| *c != &Rational::from_integer(0.into()))
        .map(|(e, c)| (e.to_string(), rational(c)))
        .collect();
    Value::Object(map)
}

pub fn class(c: &GradedClass) -> Value {
    Value::Array(c.parts().iter().map(poly).collect())
}

pub fn variety(x: &CompleteIntersection) -> Value {
    json!({
        "name": x.to_string(),
        "ambient_dim": x.ambient_dim(),
        "multidegrees": x.multidegrees(),
        "dim": x.dim(),
        "degree": x.degree().to_string(),
    })
}

/// The three-field envelope shared by every subcommand.
pub fn envelope(variety: Value, query: Value, result: Value) -> Value {
    json!({ "variety": variety, "query": query, "result": result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use indexcalc::algebra::{int, rat};

    #[test]
    fn encodings() {
        assert_eq!(rational(&rat(-3, 2)), json!("-3/2"));
        assert_eq!(rational(&int(4)), json!("4/1"));
        let p = TwistPoly::new(vec![int(-20), int(0), int(6)]);
        assert_eq!(poly(&p), json!({"0": "-20/1", "2": "6/1"}));
        assert_eq!(poly(&TwistPoly::zero()), json!({}));
        let c = GradedClass::from_rationals(1, vec![int(1), rat(1, 2)]);
        assert_eq!(class(&c), json!([{"0": "1/1"}, {"0": "1/2"}]));
    }
}

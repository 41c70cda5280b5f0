//! Evaluation of bundle expressions on a variety.

use indexcalc::{principal_parts_ch, CompleteIntersection, Result, TwistPoly, VirtualBundle};

use crate::ast::{BundleExpr, Twist};

pub fn twist_poly(t: Twist) -> TwistPoly {
    TwistPoly::affine(i64::from(t.with_n), t.offset)
}

pub fn evaluate(expr: &BundleExpr, x: &CompleteIntersection) -> Result<VirtualBundle> {
    Ok(match expr {
        BundleExpr::Line(t) => x.line_bundle(&twist_poly(*t)),
        BundleExpr::Omega => x.cotangent_ch(),
        BundleExpr::Tangent => x.tangent_ch(),
        BundleExpr::Canonical => x.cotangent_ch().determinant(),
        BundleExpr::Jet(n, e) => principal_parts_ch(x, *n)?.tensor(&evaluate(e, x)?)?,
        BundleExpr::Sym(k, e) => evaluate(e, x)?.sym_power(*k)?,
        BundleExpr::Dual(e) => evaluate(e, x)?.dual(),
        BundleExpr::Det(e) => evaluate(e, x)?.determinant(),
        BundleExpr::Add(a, b) => evaluate(a, x)?.sum(&evaluate(b, x)?)?,
        BundleExpr::Sub(a, b) => evaluate(a, x)?.difference(&evaluate(b, x)?)?,
        BundleExpr::Mul(a, b) => evaluate(a, x)?.tensor(&evaluate(b, x)?)?,
    })
}

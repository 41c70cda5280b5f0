//! Bundle expressions and their canonical printed form.

use std::fmt;

/// A twist `O(t)` with `t` affine in `N`: either an integer or `N + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Twist {
    pub with_n: bool,
    pub offset: i64,
}

impl Twist {
    pub fn constant(offset: i64) -> Self {
        Twist { with_n: false, offset }
    }

    pub fn n_plus(offset: i64) -> Self {
        Twist { with_n: true, offset }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.with_n, self.offset) {
            (false, c) => write!(f, "{c}"),
            (true, 0) => f.write_str("N"),
            (true, c) if c > 0 => write!(f, "N+{c}"),
            (true, c) => write!(f, "N-{}", c.unsigned_abs()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    Line(Twist),
    Omega,
    Tangent,
    /// `det(Omega)`.
    Canonical,
    /// `P^n ⊗ E`, principal parts of order `n` tensored with `E`.
    Jet(u32, Box<BundleExpr>),
    Sym(u32, Box<BundleExpr>),
    Dual(Box<BundleExpr>),
    Det(Box<BundleExpr>),
    Add(Box<BundleExpr>, Box<BundleExpr>),
    Sub(Box<BundleExpr>, Box<BundleExpr>),
    Mul(Box<BundleExpr>, Box<BundleExpr>),
}

impl BundleExpr {
    fn precedence(&self) -> u8 {
        match self {
            BundleExpr::Add(..) | BundleExpr::Sub(..) => 1,
            BundleExpr::Mul(..) => 2,
            _ => 3,
        }
    }

    /// Operands are printed with parentheses exactly when reparsing would
    /// otherwise associate them differently (all operators are left
    /// associative).
    fn write_operand(&self, f: &mut fmt::Formatter<'_>, parent: u8, right: bool) -> fmt::Result {
        let p = self.precedence();
        if p < parent || (right && p == parent) {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Line(t) => write!(f, "O({t})"),
            BundleExpr::Omega => f.write_str("Omega"),
            BundleExpr::Tangent => f.write_str("T"),
            BundleExpr::Canonical => f.write_str("K"),
            BundleExpr::Jet(n, e) => write!(f, "Jet({n}, {e})"),
            BundleExpr::Sym(k, e) => write!(f, "Sym({k}, {e})"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Det(e) => write!(f, "det({e})"),
            BundleExpr::Add(a, b) | BundleExpr::Sub(a, b) | BundleExpr::Mul(a, b) => {
                let (op, prec) = match self {
                    BundleExpr::Add(..) => ("+", 1),
                    BundleExpr::Sub(..) => ("-", 1),
                    _ => ("*", 2),
                };
                a.write_operand(f, prec, false)?;
                write!(f, " {op} ")?;
                b.write_operand(f, prec, true)
            }
        }
    }
}

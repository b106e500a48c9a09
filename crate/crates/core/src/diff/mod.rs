//! Differentiation: dual numbers, the `α(y)` / `f(y)` expression language and
//! Richardson-extrapolated finite differences.

pub mod dual;
pub mod expr;
pub mod fd;

pub use dual::Dual;
pub use expr::{eval_dual, parse_expr, Expr};
pub use fd::{FdScheme, Jet, Partial};

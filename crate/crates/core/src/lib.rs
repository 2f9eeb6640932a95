//! Exact Jordan-Kronecker invariants of matrix pencils `A + λB` over the
//! rationals, representation pencils of classical Lie algebras, and closed-form
//! predictions for them.

pub mod arith;
pub mod check;
pub mod linalg;
pub mod oracle;
pub mod pencil;
pub mod rep;

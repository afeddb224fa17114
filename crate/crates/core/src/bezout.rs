//! Cofactors `f~`, `g~` with `f*g~ + g*f~ = h`.
//!
//! The pair is unique up to adding `lambda*(-f, g)`; the canonical
//! representative reduces `f~` modulo `f`, so `deg f~ < deg f` (and `f~ = 0`
//! when `f` is constant).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutCofactors {
    pub ftilde: Polynomial,
    pub gtilde: Polynomial,
}

pub fn compute_cofactors(f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Result<BezoutCofactors> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (d, _, g_inv) = f.xgcd(g);
    if !d.is_constant() {
        return Err(Error::CommonZero(d.to_string()));
    }
    let ftilde = (h * &g_inv).rem(f)?;
    let gtilde = (h - &(g * &ftilde))
        .exact_div(f)?
        .expect("f divides h - g*f~ by construction of g^-1 mod f");
    Ok(BezoutCofactors { ftilde, gtilde })
}

//! The counting inequality behind the lower bound for products of trees and
//! cop-win hypergraphs.

use crate::error::{Error, Result};

/// Both sides of the inequality for `p` trees and `q` hypergraph factors of
/// the given orders.
///
/// The left side, `(ceil(p/2) + q - 1) * (1 + sum(|T_i| - 1) + sum(|H_j| - 1))`,
/// bounds how many vertices that many cops can dominate in the product; the
/// right side is the product's order.
pub fn cover_inequality_sides(tree_orders: &[usize], hg_orders: &[usize]) -> Result<(u128, u128)> {
    let (p, q) = (tree_orders.len(), hg_orders.len());
    if q == 0 {
        return Err(Error::param("need at least one hypergraph factor"));
    }
    if (p, q) == (0, 1) {
        return Err(Error::param(
            "the case of a single hypergraph factor is excluded",
        ));
    }
    if let Some(bad) = tree_orders.iter().chain(hg_orders).find(|&&o| o < 2) {
        return Err(Error::param(format!("factor order {bad} is below 2")));
    }
    let overflow = || Error::param("factor orders overflow 128-bit arithmetic");
    let cops = (p as u128).div_ceil(2) + q as u128 - 1;
    let dominated = tree_orders
        .iter()
        .chain(hg_orders)
        .try_fold(1u128, |acc, &o| acc.checked_add(o as u128 - 1))
        .ok_or_else(overflow)?;
    let lhs = cops.checked_mul(dominated).ok_or_else(overflow)?;
    let rhs = tree_orders
        .iter()
        .chain(hg_orders)
        .try_fold(1u128, |acc, &o| acc.checked_mul(o as u128))
        .ok_or_else(overflow)?;
    Ok((lhs, rhs))
}

/// Whether the left side is strictly below the right side.
pub fn check_cover_inequality(tree_orders: &[usize], hg_orders: &[usize]) -> Result<bool> {
    let (lhs, rhs) = cover_inequality_sides(tree_orders, hg_orders)?;
    Ok(lhs < rhs)
}

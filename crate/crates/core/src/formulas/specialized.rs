//! Simplified sums obtained from the general modular formulas at `m = 1`
//! and `m = 2`. Each must agree with the general formula at that modulus.

use super::index::{sum_over, Var};
use super::{b, p2, to_count};
use crate::error::Result;
use crate::numbers::{binom, Count};

/// `pc_+(n,1) = Σ_{2i+j=n} 2^i C(i+j-1,j)`.
pub fn pc_plus_m1(n: u32) -> Result<Count> {
    to_count(sum_over(n as i64, &[Var::new(2), Var::new(1)], |x| {
        p2(x[0]) * b(x[0] + x[1] - 1, x[1])
    }))
}

/// `rpc(n,1) = Σ_{2i+j+2r=n} C(i+j,j) C(i+r-1,r)`.
pub fn rpc_total_m1(n: u32) -> Result<Count> {
    to_count(sum_over(
        n as i64,
        &[Var::new(2), Var::new(1), Var::new(2)],
        |x| {
            let (i, j, r) = (x[0], x[1], x[2]);
            b(i + j, j) * b(i + r - 1, r)
        },
    ))
}

/// `ac_+^k(n,1) = Σ_{2i+c+d=n-2k} C(i+k,k) C(k,c) C(k+d-1,d)`.
pub fn ac_plus_k_m1(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    to_count(sum_over(
        n as i64 - 2 * k,
        &[Var::new(2), Var::new(1), Var::new(1)],
        |x| {
            let (i, c, d) = (x[0], x[1], x[2]);
            b(i + k, k) * b(k, c) * b(k + d - 1, d)
        },
    ))
}

/// `ac^k(n,1) = C(n,2k)`.
pub fn ac_total_k_m1(n: u32, k: u32) -> Count {
    binom(n as i64, 2 * k as i64)
}

/// `rac_+^k(n,1) = Σ_{2i+j=n-2k} C(i+k,k) C(j+k-1,j)`.
pub fn rac_plus_k_m1(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    to_count(sum_over(
        n as i64 - 2 * k,
        &[Var::new(2), Var::new(1)],
        |x| b(x[0] + k, k) * b(x[1] + k - 1, x[1]),
    ))
}

/// `rac^k(n,1) = Σ_{2i+j=n-2k} C(i+k-1,i) C(j+k,j)`.
pub fn rac_total_k_m1(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    to_count(sum_over(
        n as i64 - 2 * k,
        &[Var::new(2), Var::new(1)],
        |x| b(x[0] + k - 1, x[0]) * b(x[1] + k, x[1]),
    ))
}

/// `pc_+^k(n,2) = Σ_{2i+2j=n-k} 2^i C(i,k) C(i+j-1,j)`.
pub fn pc_plus_k_m2(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    to_count(sum_over(n as i64 - k, &[Var::new(2), Var::new(2)], |x| {
        let (i, j) = (x[0], x[1]);
        p2(i) * b(i, k) * b(i + j - 1, j)
    }))
}

/// `rpc_+^k(n,2) = Σ_{2i+2j=n-k} C(i,k) C(2i+j,j)`.
pub fn rpc_plus_k_m2(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    to_count(sum_over(n as i64 - k, &[Var::new(2), Var::new(2)], |x| {
        let (i, j) = (x[0], x[1]);
        b(i, k) * b(2 * i + j, j)
    }))
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use FormulaVariant::*;

    #[test]
    fn m1_forms_match_general() {
        for n in 0..=18 {
            assert_eq!(pc_plus_m1(n).unwrap(), pc_plus_mod_k0(n, 1).unwrap());
            assert_eq!(
                rpc_total_m1(n).unwrap(),
                total_from_plus(|x| rpc_plus_mod_k0(x, 1), n).unwrap()
            );
            for k in 0..=5 {
                assert_eq!(
                    ac_plus_k_m1(n, k).unwrap(),
                    ac_plus_k_mod(n, k, 1, V1).unwrap()
                );
                assert_eq!(ac_total_k_m1(n, k), ac_total_k_mod(n, k, 1).unwrap());
                assert_eq!(
                    rac_plus_k_m1(n, k).unwrap(),
                    rac_plus_k_mod(n, k, 1, V1).unwrap()
                );
                assert_eq!(
                    rac_total_k_m1(n, k).unwrap(),
                    rac_total_k_mod(n, k, 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn m2_forms_match_general() {
        for n in 0..=18 {
            for k in 0..=5 {
                assert_eq!(
                    pc_plus_k_m2(n, k).unwrap(),
                    pc_plus_k_mod(n, k, 2, V1).unwrap()
                );
                assert_eq!(
                    rpc_plus_k_m2(n, k).unwrap(),
                    rpc_plus_k_mod(n, k, 2, V1).unwrap()
                );
            }
        }
    }
}

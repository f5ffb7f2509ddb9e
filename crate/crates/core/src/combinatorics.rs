//! Binomial coefficients, colex ranking of subsets and bitmask helpers.
//!
//! Subsets of a ground set `{0, .., n-1}` of at most 64 positions are held as
//! `u64` bitmasks. For masks of equal popcount, numeric order coincides with
//! colex order on the sorted member lists, so `Ord` on masks is the canonical
//! ordering used throughout the crate.

use crate::error::{invalid, Result};

/// Largest ground set representable by a bitmask.
pub const MAX_GROUND: u32 = 64;

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Colex rank of a mask: the number of equal-size masks below it.
pub fn rank_mask(mask: u64) -> u64 {
    let mut rank = 0;
    let mut rest = mask;
    let mut i = 1;
    while rest != 0 {
        let c = rest.trailing_zeros() as u64;
        rank += binomial(c, i);
        i += 1;
        rest &= rest - 1;
    }
    rank
}

/// Inverse of [`rank_mask`] for `k`-subsets of `{0, .., n-1}`.
pub fn unrank_mask(rank: u64, n: u32, k: u32) -> Result<u64> {
    if n > MAX_GROUND || k > n {
        return invalid(format!("cannot unrank a {k}-subset of a {n}-set"));
    }
    let total = binomial(n as u64, k as u64);
    if rank >= total {
        return invalid(format!("rank {rank} out of range [0, {total}) for C({n},{k})"));
    }
    let mut mask = 0u64;
    let mut rank = rank;
    let mut top = n as u64;
    for i in (1..=k as u64).rev() {
        // largest c with C(c, i) <= rank
        let mut c = top - 1;
        while binomial(c, i) > rank {
            c -= 1;
        }
        mask |= 1 << c;
        rank -= binomial(c, i);
        top = c;
    }
    Ok(mask)
}

/// Colex rank of a strictly increasing list of positions.
pub fn rank_subset(members: &[u32]) -> Result<u64> {
    Ok(rank_mask(members_mask(members)?))
}

/// Sorted positions of the `rank`-th `k`-subset of `{0, .., n-1}` in colex order.
pub fn unrank_subset(rank: u64, n: u32, k: u32) -> Result<Vec<u32>> {
    unrank_mask(rank, n, k).map(mask_members)
}

/// Sorted member list of a mask.
pub fn mask_members(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    out
}

/// Mask of a strictly increasing member list.
pub fn members_mask(members: &[u32]) -> Result<u64> {
    let mut mask = 0u64;
    for (idx, &m) in members.iter().enumerate() {
        if m >= MAX_GROUND {
            return invalid(format!("member {m} does not fit a 64-bit subset"));
        }
        if idx > 0 && members[idx - 1] >= m {
            return invalid(format!("members {members:?} are not strictly increasing"));
        }
        mask |= 1 << m;
    }
    Ok(mask)
}

/// All `k`-subsets of `{0, .., n-1}` as masks, in colex order.
#[derive(Debug, Clone)]
pub struct Combinations {
    next: Option<u64>,
    n: u32,
}

impl Combinations {
    pub fn new(n: u32, k: u32) -> Self {
        assert!(n <= MAX_GROUND, "ground set of {n} exceeds 64");
        let next = if k > n {
            None
        } else if k == 64 {
            Some(u64::MAX)
        } else {
            Some((1u64 << k) - 1)
        };
        Combinations { next, n }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let low = cur & cur.wrapping_neg();
            match cur.checked_add(low) {
                None => None,
                Some(ripple) => {
                    let succ = (((ripple ^ cur) >> 2) / low) | ripple;
                    if self.n < 64 && succ >> self.n != 0 {
                        None
                    } else {
                        Some(succ)
                    }
                }
            }
        };
        Some(cur)
    }
}

/// Spreads the low bits of `compact` onto the set bits of `support`, in order.
pub fn deposit_bits(compact: u64, support: u64) -> u64 {
    let mut out = 0;
    let mut rest = support;
    let mut bit = 0;
    while rest != 0 {
        let low = rest & rest.wrapping_neg();
        if compact >> bit & 1 == 1 {
            out |= low;
        }
        bit += 1;
        rest &= rest - 1;
    }
    out
}

/// Inverse of [`deposit_bits`] on masks contained in `support`.
pub fn extract_bits(mask: u64, support: u64) -> u64 {
    let mut out = 0;
    let mut rest = support;
    let mut bit = 0;
    while rest != 0 {
        let low = rest & rest.wrapping_neg();
        if mask & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        rest &= rest - 1;
    }
    out
}

/// Formats a member list as `{a,b,c}`.
pub fn format_members(members: &[u32]) -> String {
    let inner: Vec<String> = members.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

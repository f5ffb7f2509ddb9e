//! `(n, k, l)` covering designs on the ground set `{1, .., n}`.
//!
//! Blocks are label bitmasks (bit `x` for point `x`), kept sorted in colex
//! order. Steiner triple systems come from the Bose (`n ≡ 3 mod 6`) and
//! Skolem (`n ≡ 1 mod 6`) quasigroup constructions; everything else from a
//! greedy cover.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, deposit_bits, format_members, mask_members, rank_mask, Combinations};
use crate::error::{invalid, Error, Result};
use crate::par;

/// Cap on `C(n,k)` and `C(n,l)` enumerated by greedy covers and verification.
pub const DEFAULT_COVER_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringDesign {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    blocks: Vec<u64>,
    pub exact: bool,
}

/// Per-`l`-set coverage of a design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    /// Multiplicity of every `l`-subset, indexed by colex rank.
    pub multiplicities: Vec<u32>,
    pub covering: bool,
    pub exact: bool,
    /// Colex-least `l`-subset lying in no block.
    pub first_uncovered: Option<Vec<u32>>,
}

fn ground_mask(n: u32) -> u64 {
    ((1u64 << n) - 1) << 1
}

fn check_order(n: u32, k: u32, l: u32) -> Result<()> {
    if !(2 <= l && l < k && k < n) {
        return invalid(format!("covering parameters need 2 <= l < k < n, got (n,k,l)=({n},{k},{l})"));
    }
    if n > 63 {
        return invalid(format!("ground set of {n} points exceeds 63"));
    }
    Ok(())
}

impl CoveringDesign {
    /// Wraps raw blocks after checking their shape; `exact` is computed.
    pub fn from_blocks(n: u32, k: u32, l: u32, blocks: &[Vec<u32>]) -> Result<Self> {
        if n == 0 || n > 63 || l == 0 || l > k {
            return invalid(format!("bad design parameters (n,k,l)=({n},{k},{l})"));
        }
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut sorted = block.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let bad = sorted.len() != block.len()
                || block.len() != k as usize
                || sorted.iter().any(|&x| x == 0 || x > n);
            if bad {
                return invalid(format!(
                    "malformed block {} for a ({n},{k},{l}) design",
                    format_members(block)
                ));
            }
            masks.push(sorted.iter().fold(0u64, |m, &x| m | 1 << x));
        }
        Ok(Self::from_masks(n, k, l, masks))
    }

    fn from_masks(n: u32, k: u32, l: u32, mut blocks: Vec<u64>) -> Self {
        blocks.sort_unstable();
        let mut design = CoveringDesign {
            n,
            k,
            l,
            blocks,
            exact: false,
        };
        design.exact = design.verify().map(|r| r.exact).unwrap_or(false);
        design
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks as label masks, colex order.
    pub fn block_masks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn blocks(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(|&b| mask_members(b)).collect()
    }

    pub fn verify(&self) -> Result<CoverReport> {
        verify_cover(self)
    }

    pub fn to_json(&self) -> DesignJson {
        DesignJson {
            n: self.n,
            k: self.k,
            l: self.l,
            exact: self.exact,
            blocks: self.blocks(),
        }
    }

    /// One block per line, points separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for block in self.blocks() {
            let line: Vec<String> = block.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the plain-text format; `k` is taken from the first block.
    pub fn from_text(text: &str, n: u32, l: u32) -> Result<Self> {
        let mut blocks = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let block = line
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidParameter(format!("line {}: {e}", lineno + 1)))?;
            blocks.push(block);
        }
        let k = blocks.first().map_or(l, |b| b.len() as u32);
        Self::from_blocks(n, k, l, &blocks)
    }

    /// Relabels points through `map` (point `x` becomes `map[x - 1]`).
    pub fn relabel(&self, map: &[u32]) -> Vec<Vec<u32>> {
        self.blocks()
            .into_iter()
            .map(|b| {
                let mut out: Vec<u32> = b.into_iter().map(|x| map[x as usize - 1]).collect();
                out.sort_unstable();
                out
            })
            .collect()
    }
}

/// Serialized design.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignJson {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    pub exact: bool,
    pub blocks: Vec<Vec<u32>>,
}

impl DesignJson {
    pub fn into_design(self) -> Result<CoveringDesign> {
        CoveringDesign::from_blocks(self.n, self.k, self.l, &self.blocks)
    }
}

/// `⌈C(n,l) / C(k,l)⌉`.
pub fn trivial_cover_lower_bound(n: u32, k: u32, l: u32) -> Result<u64> {
    check_order(n, k, l)?;
    Ok(binomial(n as u64, l as u64).div_ceil(binomial(k as u64, l as u64)))
}

/// Coverage multiplicities of every `l`-subset of `{1, .., n}`.
pub fn verify_cover(design: &CoveringDesign) -> Result<CoverReport> {
    let (n, k, l) = (design.n, design.k, design.l);
    let ground = ground_mask(n);
    for &b in &design.blocks {
        if b.count_ones() != k || b & !ground != 0 {
            return invalid(format!("malformed block {}", format_members(&mask_members(b))));
        }
    }
    let subsets = binomial(n as u64, l as u64);
    if subsets > DEFAULT_COVER_BUDGET {
        return Err(Error::ResourceLimit {
            resource: format!("C({n},{l})"),
            budget: "cover enumeration budget",
            requested: subsets,
            limit: DEFAULT_COVER_BUDGET,
        });
    }
    let mut multiplicities = vec![0u32; subsets as usize];
    for &b in &design.blocks {
        for sub in Combinations::new(k, l) {
            let m = deposit_bits(sub, b);
            multiplicities[rank_mask(m >> 1) as usize] += 1;
        }
    }
    let first = multiplicities.iter().position(|&m| m == 0);
    let first_uncovered = first.map(|r| {
        let m = crate::combinatorics::unrank_mask(r as u64, n, l).expect("rank in range");
        mask_members(m << 1)
    });
    Ok(CoverReport {
        covering: first.is_none(),
        exact: multiplicities.iter().all(|&m| m == 1),
        multiplicities,
        first_uncovered,
    })
}

/// Greedy `(n,k,l)` cover with `2 <= l < k < n`.
pub fn greedy_cover(n: u32, k: u32, l: u32) -> Result<CoveringDesign> {
    check_order(n, k, l)?;
    greedy_cover_general(n, k, l, DEFAULT_COVER_BUDGET)
}

/// Greedy cover of the `l`-subsets of `{1, .., n}` by `k`-subsets for any
/// `1 <= l < k <= n`. Each step adds the block covering the most uncovered
/// `l`-sets; ties go to the colex-least block.
pub fn greedy_cover_general(n: u32, k: u32, l: u32, budget: u64) -> Result<CoveringDesign> {
    if !(1 <= l && l < k && k <= n) || n > 63 {
        return invalid(format!("greedy cover needs 1 <= l < k <= n <= 63, got ({n},{k},{l})"));
    }
    let candidates = binomial(n as u64, k as u64);
    let subsets = binomial(n as u64, l as u64);
    for (what, count) in [("C(n,k)", candidates), ("C(n,l)", subsets)] {
        if count > budget {
            return Err(Error::ResourceLimit {
                resource: format!("{what} for ({n},{k},{l})"),
                budget: "cover enumeration budget",
                requested: count,
                limit: budget,
            });
        }
    }
    let all = (1u64 << n) - 1;
    let per_block = binomial(k as u64, l as u64);
    let mut gain = vec![per_block; candidates as usize];
    let mut covered = vec![false; subsets as usize];
    let mut left = subsets;
    let mut chosen = Vec::new();
    while left > 0 {
        let (best, g) = par::argmax(gain.len(), |c| gain[c]).expect("candidates exist");
        debug_assert!(g > 0);
        let block = crate::combinatorics::unrank_mask(best as u64, n, k)?;
        chosen.push(block << 1);
        for sub in Combinations::new(k, l) {
            let small = deposit_bits(sub, block);
            let r = rank_mask(small) as usize;
            if covered[r] {
                continue;
            }
            covered[r] = true;
            left -= 1;
            let outside = all & !small;
            for extra in Combinations::new(n - l, k - l) {
                let sup = small | deposit_bits(extra, outside);
                gain[rank_mask(sup) as usize] -= 1;
            }
        }
    }
    Ok(CoveringDesign::from_masks(n, k, l, chosen))
}

/// Bose Steiner triple system for `n ≡ 3 (mod 6)`.
///
/// Points `(x, i)` with `x ∈ Z_t`, `t = n/3`, `i ∈ Z_3` map to `x + i·t + 1`.
/// Uses the idempotent commutative quasigroup `x∘y = (x+y)(t+1)/2 mod t`.
pub fn bose_sts(n: u32) -> Result<CoveringDesign> {
    if n % 6 != 3 {
        return invalid(format!("Bose construction needs n ≡ 3 (mod 6), got {n}"));
    }
    if n > 63 {
        return invalid(format!("ground set of {n} points exceeds 63"));
    }
    let t = n / 3;
    let half = t.div_ceil(2); // (t+1)/2, inverse of 2 mod t
    let op = |x: u32, y: u32| ((x + y) * half) % t;
    let point = |x: u32, i: u32| x + (i % 3) * t + 1;
    let mut blocks = Vec::new();
    for x in 0..t {
        blocks.push(triple(point(x, 0), point(x, 1), point(x, 2)));
    }
    for i in 0..3 {
        for x in 0..t {
            for y in x + 1..t {
                blocks.push(triple(point(x, i), point(y, i), point(op(x, y), i + 1)));
            }
        }
    }
    Ok(CoveringDesign::from_masks(n, 3, 2, blocks))
}

/// Skolem Steiner triple system for `n ≡ 1 (mod 6)`, `n >= 7`.
///
/// Points `(x, i)` with `x ∈ Z_{2t}`, `t = (n−1)/6`, `i ∈ Z_3` map to
/// `x + i·2t + 1`, and the extra point is `n`. Uses the half-idempotent
/// commutative quasigroup on `Z_{2t}` where `x∘y` halves `x+y mod 2t`,
/// sending odd sums to the upper half.
pub fn skolem_sts(n: u32) -> Result<CoveringDesign> {
    if n % 6 != 1 || n < 7 {
        return invalid(format!("Skolem construction needs n ≡ 1 (mod 6), n >= 7, got {n}"));
    }
    if n > 63 {
        return invalid(format!("ground set of {n} points exceeds 63"));
    }
    let t = (n - 1) / 6;
    let order = 2 * t;
    let op = |x: u32, y: u32| {
        let s = (x + y) % order;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            (s - 1) / 2 + t
        }
    };
    let point = |x: u32, i: u32| x + (i % 3) * order + 1;
    let infinity = n;
    let mut blocks = Vec::new();
    for x in 0..t {
        blocks.push(triple(point(x, 0), point(x, 1), point(x, 2)));
    }
    for i in 0..3 {
        for x in 0..t {
            blocks.push(triple(infinity, point(x + t, i), point(x, i + 1)));
        }
        for x in 0..order {
            for y in x + 1..order {
                blocks.push(triple(point(x, i), point(y, i), point(op(x, y), i + 1)));
            }
        }
    }
    Ok(CoveringDesign::from_masks(n, 3, 2, blocks))
}

/// Steiner triple system on `n ≡ 1, 3 (mod 6)` points, `None` otherwise.
pub fn steiner_triple_system(n: u32) -> Option<CoveringDesign> {
    match n % 6 {
        3 => bose_sts(n).ok(),
        1 if n >= 7 => skolem_sts(n).ok(),
        _ => None,
    }
}

fn triple(a: u32, b: u32, c: u32) -> u64 {
    debug_assert!(a != b && b != c && a != c);
    1 << a | 1 << b | 1 << c
}

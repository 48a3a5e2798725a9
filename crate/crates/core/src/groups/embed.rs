//! Signed permutations as ordinary permutations of 2n letters, and Bruhat
//! order comparison between the intrinsic covering structure and rank-matrix
//! dominance in the symmetric group.
//!
//! A window value v in {-n..-1, 1..n} sits at letter v+n+1 (negatives) or
//! v+n (positives), so the letters read -n,...,-1,1,...,n from left to right.

use crate::error::GroupError;
use crate::family::Family;
use crate::groups::table::GroupTable;
use crate::groups::window::Window;

fn letter(v: i8, n: i8) -> u8 {
    if v > 0 {
        (v + n) as u8
    } else {
        (v + n + 1) as u8
    }
}

/// The permutation of 1..2n induced by a signed window acting on values.
pub fn embed_signed(w: &Window) -> Vec<u8> {
    let n = w.len() as i8;
    let mut out = Vec::with_capacity(2 * n as usize);
    for k in 1..=2 * n {
        let v = if k <= n { k - n - 1 } else { k - n };
        let image = if v > 0 {
            w.at(v as usize)
        } else {
            -w.at((-v) as usize)
        };
        out.push(letter(image, n));
    }
    out
}

/// Prefix rank matrix: r[i][j] = #{k <= i : sigma(k) <= j}, 1-based in both
/// slots, stored flat at (i-1)*m + (j-1).
fn rank_matrix(sigma: &[u8]) -> Vec<u8> {
    let m = sigma.len();
    let mut r = vec![0u8; m * m];
    for i in 0..m {
        for j in 0..m {
            let above = if i == 0 { 0 } else { r[(i - 1) * m + j] };
            r[i * m + j] = above + u8::from(sigma[i] as usize <= j + 1);
        }
    }
    r
}

/// Bruhat order on the symmetric group by rank dominance:
/// a <= b iff r_a(i,j) >= r_b(i,j) everywhere.
pub fn rank_leq(a: &[u8], b: &[u8]) -> bool {
    rank_dominates(&rank_matrix(a), &rank_matrix(b))
}

fn rank_dominates(ra: &[u8], rb: &[u8]) -> bool {
    ra.iter().zip(rb).all(|(x, y)| x >= y)
}

/// Reachability closure of the covering relation. Row w holds the set of
/// elements below or equal to w; down-cover ids are strictly smaller than w
/// because ids are assigned in length order.
pub struct BruhatOrder {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BruhatOrder {
    pub fn from_table(table: &GroupTable) -> BruhatOrder {
        let n = table.size();
        let wpr = (n + 63) / 64;
        let mut bits = vec![0u64; n * wpr];
        for w in 0..n {
            bits[w * wpr + w / 64] |= 1 << (w % 64);
            let (_, downs) = table.generic_covers(w as u32);
            for d in downs {
                let d = d as usize;
                debug_assert!(d < w);
                let (lower, upper) = bits.split_at_mut(w * wpr);
                for k in 0..wpr {
                    upper[k] |= lower[d * wpr + k];
                }
            }
        }
        BruhatOrder {
            words_per_row: wpr,
            bits,
        }
    }

    pub fn leq(&self, u: u32, w: u32) -> bool {
        let u = u as usize;
        self.bits[w as usize * self.words_per_row + u / 64] >> (u % 64) & 1 == 1
    }
}

#[derive(Debug, Clone)]
pub struct OrderComparison {
    pub pairs: u64,
    pub disagreements: u64,
    pub first_disagreement: Option<(Window, Window)>,
}

impl OrderComparison {
    pub fn agrees(&self) -> bool {
        self.disagreements == 0
    }
}

/// Compare the group's own Bruhat order against rank dominance of the
/// embedded permutations, over every ordered pair of elements.
pub fn compare_with_symmetric_dominance(
    table: &GroupTable,
) -> Result<OrderComparison, GroupError> {
    let windows = table.windows.as_ref().ok_or_else(|| {
        GroupError::InvalidWindow("order comparison needs a window family".into())
    })?;
    let embedded: Vec<Vec<u8>> = match table.spec.family {
        Family::A => windows
            .iter()
            .map(|w| w.entries().iter().map(|&v| v as u8).collect())
            .collect(),
        Family::B | Family::D => windows.iter().map(embed_signed).collect(),
        _ => unreachable!("window families only"),
    };
    let ranks: Vec<Vec<u8>> = embedded.iter().map(|s| rank_matrix(s)).collect();
    let order = BruhatOrder::from_table(table);

    let mut pairs = 0u64;
    let mut disagreements = 0u64;
    let mut first = None;
    for u in 0..table.size() as u32 {
        for w in 0..table.size() as u32 {
            pairs += 1;
            let intrinsic = order.leq(u, w);
            let dominance = rank_dominates(&ranks[u as usize], &ranks[w as usize]);
            if intrinsic != dominance {
                disagreements += 1;
                if first.is_none() {
                    first = Some((windows[u as usize].clone(), windows[w as usize].clone()));
                }
            }
        }
    }
    Ok(OrderComparison {
        pairs,
        disagreements,
        first_disagreement: first,
    })
}

/// Check that signed Bruhat order is induced from the symmetric group for
/// small ranks. Quadratic in the group order, so capped.
pub fn verify_embedding(table: &GroupTable) -> Result<OrderComparison, GroupError> {
    if table.size() > 5_000 {
        return Err(GroupError::BudgetExceeded(table.spec.rank));
    }
    compare_with_symmetric_dominance(table)
}

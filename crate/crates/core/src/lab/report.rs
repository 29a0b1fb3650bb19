use std::fmt;

use num_rational::Ratio;

use crate::error::Result;
use crate::subgroup::Subgroup;

/// Ranks of `H`, `K`, `H ∩ K`, `H ∨ K` and the verdict of each inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub rk_h: usize,
    pub rk_k: usize,
    pub rk_meet: usize,
    pub rk_join: usize,
    pub rr_h: usize,
    pub rr_k: usize,
    pub rr_meet: usize,
    pub rr_join: usize,
    /// Sum of reduced ranks of `H ∩ gKg⁻¹` over double cosets.
    pub shnc_sum: usize,
    /// `rr_meet * rr_join`
    pub iehnc_lhs: usize,
    /// `rr_h * rr_k`
    pub iehnc_rhs: usize,
    pub holds_hnc: bool,
    pub holds_shnc: bool,
    pub holds_iehnc: bool,
    pub guzman_applicable: bool,
    /// Vacuously true when not applicable.
    pub holds_guzman: bool,
}

pub fn analyze_pair(h: &Subgroup, k: &Subgroup) -> Result<ConjectureReport> {
    let meet = h.intersect(k)?;
    let join = h.join(k)?;
    let shnc_sum = h.shnc_left_side(k)?;
    Ok(ConjectureReport::from_ranks(
        h.rank(),
        k.rank(),
        meet.rank(),
        join.rank(),
        shnc_sum,
    ))
}

impl ConjectureReport {
    pub fn from_ranks(
        rk_h: usize,
        rk_k: usize,
        rk_meet: usize,
        rk_join: usize,
        shnc_sum: usize,
    ) -> Self {
        let reduce = |r: usize| r.saturating_sub(1);
        let (rr_h, rr_k, rr_meet, rr_join) =
            (reduce(rk_h), reduce(rk_k), reduce(rk_meet), reduce(rk_join));
        let iehnc_lhs = rr_meet * rr_join;
        let iehnc_rhs = rr_h * rr_k;
        let m = rk_h;
        let guzman_applicable = rk_h == rk_k && m >= 2 && rk_meet >= m;
        ConjectureReport {
            rk_h,
            rk_k,
            rk_meet,
            rk_join,
            rr_h,
            rr_k,
            rr_meet,
            rr_join,
            shnc_sum,
            iehnc_lhs,
            iehnc_rhs,
            holds_hnc: rr_meet <= iehnc_rhs,
            holds_shnc: shnc_sum <= iehnc_rhs,
            holds_iehnc: iehnc_lhs <= iehnc_rhs,
            guzman_applicable,
            holds_guzman: !guzman_applicable || rk_join <= m,
        }
    }

    /// `iehnc_lhs / iehnc_rhs`, or `None` when the right side vanishes.
    pub fn iehnc_ratio(&self) -> Option<Ratio<usize>> {
        (self.iehnc_rhs > 0).then(|| Ratio::new(self.iehnc_lhs, self.iehnc_rhs))
    }

    /// Both reduced ranks positive, so the IEHNC is not trivially true.
    pub fn is_nondegenerate(&self) -> bool {
        self.rr_h > 0 && self.rr_k > 0
    }

    /// The report of `(K, H)`.
    pub fn swapped(&self) -> Self {
        ConjectureReport::from_ranks(self.rk_k, self.rk_h, self.rk_meet, self.rk_join, self.shnc_sum)
    }
}

/// `key=value` lines in a fixed order.
impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields: [(&str, String); 16] = [
            ("rk_H", self.rk_h.to_string()),
            ("rk_K", self.rk_k.to_string()),
            ("rk_meet", self.rk_meet.to_string()),
            ("rk_join", self.rk_join.to_string()),
            ("rr_H", self.rr_h.to_string()),
            ("rr_K", self.rr_k.to_string()),
            ("rr_meet", self.rr_meet.to_string()),
            ("rr_join", self.rr_join.to_string()),
            ("shnc_sum", self.shnc_sum.to_string()),
            ("iehnc_lhs", self.iehnc_lhs.to_string()),
            ("iehnc_rhs", self.iehnc_rhs.to_string()),
            ("holds_hnc", self.holds_hnc.to_string()),
            ("holds_shnc", self.holds_shnc.to_string()),
            ("holds_iehnc", self.holds_iehnc.to_string()),
            ("guzman_applicable", self.guzman_applicable.to_string()),
            ("holds_guzman", self.holds_guzman.to_string()),
        ];
        for (key, value) in fields {
            writeln!(f, "{key}={value}")?;
        }
        Ok(())
    }
}

//! Finite color posets.
//!
//! Colors are the integers `1..=l`. The two posets that matter in practice
//! are the discrete poset `D_l` (only trivial comparisons) and the linear
//! order `L_l`; arbitrary finite posets are accepted as long as the given
//! strict pairs form a partial order.

use crate::error::{Error, Result};

/// A color, `1..=l`.
pub type Color = u8;

/// A finite poset on the colors `1..=l`, stored as a dense `l x l`
/// less-or-equal table. Immutable after construction, so it can be shared
/// freely across worker threads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorPoset {
    size: u8,
    leq: Vec<bool>,
}

impl ColorPoset {
    /// Builds a poset from strict comparability pairs `(a, b)` meaning `a < b`.
    /// The reflexive closure is applied automatically; the pairs themselves
    /// must already be transitive and antisymmetric.
    pub fn new(size: u8, pairs: &[(Color, Color)]) -> Result<ColorPoset> {
        if size == 0 {
            return Err(Error::InvalidPoset("size must be at least 1".into()));
        }
        let l = size as usize;
        let mut leq = vec![false; l * l];
        for a in 0..l {
            leq[a * l + a] = true;
        }
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > size || b > size {
                return Err(Error::InvalidPoset(format!(
                    "pair ({a},{b}) out of range 1..={size}"
                )));
            }
            if a == b {
                continue; // reflexive pairs are implied
            }
            leq[(a as usize - 1) * l + (b as usize - 1)] = true;
        }
        // antisymmetry
        for a in 0..l {
            for b in (a + 1)..l {
                if leq[a * l + b] && leq[b * l + a] {
                    return Err(Error::InvalidPoset(format!(
                        "antisymmetry violated on ({},{})",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        // transitivity of the given relation
        for a in 0..l {
            for b in 0..l {
                if !leq[a * l + b] {
                    continue;
                }
                for c in 0..l {
                    if leq[b * l + c] && !leq[a * l + c] {
                        return Err(Error::InvalidPoset(format!(
                            "transitivity violated: {}<={}<={} but not {}<={}",
                            a + 1,
                            b + 1,
                            c + 1,
                            a + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(ColorPoset { size, leq })
    }

    /// The discrete poset `D_l`: only `a <= a`.
    pub fn discrete(size: u8) -> ColorPoset {
        ColorPoset::new(size, &[]).expect("discrete poset is always valid")
    }

    /// The linear order `L_l`: `1 < 2 < ... < l`.
    pub fn linear(size: u8) -> ColorPoset {
        let mut pairs = Vec::new();
        for a in 1..=size {
            for b in (a + 1)..=size {
                pairs.push((a, b));
            }
        }
        ColorPoset::new(size, &pairs).expect("chain is always valid")
    }

    /// Number of colors `l`.
    pub fn size(&self) -> u8 {
        self.size
    }

    /// True iff `a <= b` in the poset. Colors out of `1..=l` are a contract
    /// violation.
    #[inline]
    pub fn leq(&self, a: Color, b: Color) -> bool {
        debug_assert!(a >= 1 && a <= self.size && b >= 1 && b <= self.size);
        let l = self.size as usize;
        self.leq[(a as usize - 1) * l + (b as usize - 1)]
    }

    /// True iff the poset has no nontrivial comparisons.
    pub fn is_discrete(&self) -> bool {
        let l = self.size as usize;
        (0..l).all(|a| (0..l).all(|b| a == b || !self.leq[a * l + b]))
    }

    /// The discrete poset `D_P` on the same color set: keeps only the
    /// reflexive pairs. Idempotent.
    pub fn discretize(&self) -> ColorPoset {
        ColorPoset::discrete(self.size)
    }

    /// The strict pairs `(a, b)` with `a < b` in the poset, sorted.
    pub fn strict_pairs(&self) -> Vec<(Color, Color)> {
        let l = self.size as usize;
        let mut out = Vec::new();
        for a in 0..l {
            for b in 0..l {
                if a != b && self.leq[a * l + b] {
                    out.push((a as Color + 1, b as Color + 1));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Colors `c` with `a <=_P c`, including `a` itself.
    pub fn up_set(&self, a: Color) -> Vec<Color> {
        (1..=self.size).filter(|&c| self.leq(a, c)).collect()
    }

    /// Colors `c` with `c <=_P a`, including `a` itself.
    pub fn down_set(&self, a: Color) -> Vec<Color> {
        (1..=self.size).filter(|&c| self.leq(c, a)).collect()
    }

    /// Parses a builtin poset name: `D<l>` (discrete) or `L<l>` (chain).
    pub fn builtin(name: &str) -> Result<ColorPoset> {
        let (kind, num) = name.split_at(1);
        let l: u8 = num
            .parse()
            .map_err(|_| Error::InvalidPoset(format!("unknown builtin `{name}`")))?;
        if l == 0 {
            return Err(Error::InvalidPoset("builtin size must be >= 1".into()));
        }
        match kind {
            "D" | "d" => Ok(ColorPoset::discrete(l)),
            "L" | "l" => Ok(ColorPoset::linear(l)),
            _ => Err(Error::InvalidPoset(format!("unknown builtin `{name}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_two_colors() {
        let p = ColorPoset::new(2, &[]).unwrap();
        assert_eq!(p.size(), 2);
        assert!(p.leq(1, 1));
        assert!(!p.leq(1, 2));
        assert!(!p.leq(2, 1));
        assert!(p.is_discrete());
    }

    #[test]
    fn linear_two_colors() {
        let p = ColorPoset::new(2, &[(1, 2)]).unwrap();
        assert!(p.leq(1, 2));
        assert!(!p.leq(2, 1));
        assert!(p.leq(2, 2));
        assert_eq!(p, ColorPoset::linear(2));
    }

    #[test]
    fn trivial_poset() {
        let p = ColorPoset::new(1, &[]).unwrap();
        assert_eq!(p.size(), 1);
        assert!(p.leq(1, 1));
    }

    #[test]
    fn rejects_antisymmetry_violation() {
        assert!(ColorPoset::new(2, &[(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn rejects_missing_transitivity() {
        assert!(ColorPoset::new(3, &[(1, 2), (2, 3)]).is_err());
        assert!(ColorPoset::new(3, &[(1, 2), (2, 3), (1, 3)]).is_ok());
    }

    #[test]
    fn rejects_out_of_range_pairs() {
        assert!(ColorPoset::new(2, &[(1, 3)]).is_err());
        assert!(ColorPoset::new(2, &[(0, 1)]).is_err());
        assert!(ColorPoset::new(0, &[]).is_err());
    }

    #[test]
    fn discretize_is_idempotent_and_shrinking() {
        let l2 = ColorPoset::linear(2);
        let d = l2.discretize();
        assert_eq!(d, ColorPoset::discrete(2));
        assert_eq!(d.discretize(), d);
        assert_eq!(ColorPoset::discrete(7).discretize(), ColorPoset::discrete(7));
        // discretize(P).leq is a subset of P.leq
        for a in 1..=2 {
            for b in 1..=2 {
                if d.leq(a, b) {
                    assert!(l2.leq(a, b));
                }
            }
        }
    }

    #[test]
    fn builtin_names() {
        assert_eq!(ColorPoset::builtin("D2").unwrap(), ColorPoset::discrete(2));
        assert_eq!(ColorPoset::builtin("L3").unwrap(), ColorPoset::linear(3));
        assert!(ColorPoset::builtin("Q2").is_err());
        assert!(ColorPoset::builtin("D0").is_err());
    }

    #[test]
    fn up_and_down_sets() {
        let l3 = ColorPoset::linear(3);
        assert_eq!(l3.up_set(2), vec![2, 3]);
        assert_eq!(l3.down_set(2), vec![1, 2]);
        assert_eq!(l3.strict_pairs(), vec![(1, 2), (1, 3), (2, 3)]);
    }
}

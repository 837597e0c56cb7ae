//! Structural certificates: rich, simple, wealthy and tame colorings,
//! interval decompositions, and the two kinds of fib strings.
//!
//! Rich colorings witness at-least-linear growth, simple ideals witness
//! eventual constancy, wealthy colorings witness Fibonacci growth, and
//! bounded tameness caps the count polynomially.

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, Homogeneity};
use crate::matrix::{
    alternations, bipartite_matrix, change_rows, half_matrix, similarity, Transform, ZeroOneMatrix,
};
use crate::poset::Color;

/// Witness that a coloring of size `2r - 1` is r-rich.
///
/// Type 1: the consecutive edges `{i, i+1}`, `i <= r-1`, share a color `a`
/// and `{r, r+1}` has a different color `b`. Type 2: the star edges
/// `{1, i}`, `2 <= i <= r`, share `a` and `{1, r+1}` has `b != a`. Either
/// may hold in the coloring itself or in its reversal; the remaining edges
/// are unconstrained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichCertificate {
    pub r: usize,
    pub cert_type: u8,
    pub reversed: bool,
    pub color_a: Color,
    pub color_b: Color,
    /// Text literal of the witness coloring.
    pub witness: String,
}

fn rich_type1(k: &Coloring, r: usize) -> Option<(Color, Color)> {
    // needs edges {i, i+1} for i <= r-1 and {r, r+1}; size 2r-1 >= r+1 iff r >= 2
    if r < 2 {
        return None;
    }
    let a = k.color(1, 2);
    for i in 2..r {
        if k.color(i, i + 1) != a {
            return None;
        }
    }
    let b = k.color(r, r + 1);
    (b != a).then_some((a, b))
}

fn rich_type2(k: &Coloring, r: usize) -> Option<(Color, Color)> {
    if r < 2 {
        return None;
    }
    let a = k.color(1, 2);
    for i in 3..=r {
        if k.color(1, i) != a {
            return None;
        }
    }
    let b = k.color(1, r + 1);
    (b != a).then_some((a, b))
}

/// Detects whether `k` is r-rich. Requires `|k| = 2r - 1`. At `r = 1` the
/// defining edge conditions are empty and no second color exists, so the
/// detector reports absent by convention; ideal-level queries treat r = 1 as
/// satisfied by any nonempty level.
pub fn is_r_rich(k: &Coloring, r: usize) -> Option<RichCertificate> {
    assert_eq!(k.size(), 2 * r - 1, "r-rich colorings have size 2r - 1");
    let rev = k.reversal();
    let candidates = [
        (1u8, false, rich_type1(k, r)),
        (1u8, true, rich_type1(&rev, r)),
        (2u8, false, rich_type2(k, r)),
        (2u8, true, rich_type2(&rev, r)),
    ];
    for (cert_type, reversed, found) in candidates {
        if let Some((a, b)) = found {
            return Some(RichCertificate {
                r,
                cert_type,
                reversed,
                color_a: a,
                color_b: b,
                witness: crate::literal::coloring_to_text(k),
            });
        }
    }
    None
}

/// Scans an enumerated level `X_{2r-1}` (in canonical order) for an r-rich
/// member. For an ideal, a member being r-rich is equivalent to the ideal
/// containing an r-rich coloring.
pub fn level_contains_rich(level: &[Coloring], r: usize) -> Option<RichCertificate> {
    level.iter().find_map(|k| is_r_rich(k, r))
}

/// True iff `k` is r-simple: the middle interval `[r+1, n-r]` is
/// homogeneous and every boundary vertex `v` in `[r] ∪ [n-r+1, n]` sees the
/// deep middle `[2r+1, n-2r]` in a single color. Vacuously true for
/// `n <= 2r + 2`.
pub fn is_r_simple(k: &Coloring, r: usize) -> bool {
    assert!(r >= 1);
    let n = k.size();
    if n <= 2 * r + 2 {
        return true;
    }
    if !k.interval_homogeneity(r + 1, n - r).is_homogeneous() {
        return false;
    }
    let deep_lo = 2 * r + 1;
    let deep_hi = n.saturating_sub(2 * r);
    if deep_lo > deep_hi {
        return true;
    }
    let boundary = (1..=r).chain(n - r + 1..=n);
    for v in boundary {
        let first = k.color(v, deep_lo);
        for w in deep_lo + 1..=deep_hi {
            if k.color(v, w) != first {
                return false;
            }
        }
    }
    true
}

/// The least `r` for which `k` is r-simple. Bounded by `max(1, ceil((n-2)/2))`
/// since every coloring with `n <= 2r + 2` is r-simple.
pub fn simplicity_level(k: &Coloring) -> usize {
    (1..).find(|&r| is_r_simple(k, r)).unwrap()
}

/// Greedy interval decomposition `I_1 < I_2 < ... < I_s`: each `I_t` is the
/// longest monochromatic interval starting where `I_{t-1}` ended. Returned
/// as inclusive bounds. This greedy partition attains the minimum number of
/// monochromatic intervals.
pub fn interval_decomposition(k: &Coloring) -> Vec<(usize, usize)> {
    let n = k.size();
    let mut out = Vec::new();
    let mut lo = 1;
    while lo <= n {
        let mut hi = lo;
        while hi < n && k.interval_homogeneity(lo, hi + 1).is_homogeneous() {
            hi += 1;
        }
        out.push((lo, hi));
        lo = hi + 1;
    }
    out
}

/// `I(K)`: the number of intervals in the greedy decomposition.
pub fn interval_count(k: &Coloring) -> usize {
    interval_decomposition(k).len()
}

/// Witness that a coloring is r-wealthy of one of the four types.
///
/// Type 1 (`|K| = r`): the star colors `{1, i}` alternate, in `K` or its
/// reversal. Type 2 (`|K| = 3r`): none of the consecutive triangles
/// `{3i-2, 3i-1, 3i}` is homogeneous. Types 3 and 4 (`|K| = 2r`,
/// two-colored): the half matrix `M_K` is similar to the identity `I_r`,
/// respectively the upper triangular `U_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WealthCertificate {
    pub r: usize,
    pub cert_type: u8,
    pub reversed: bool,
    /// The similarity transform, for types 3 and 4.
    pub transform: Option<Transform>,
    /// Set when the witness was found in a two-color projection `R_b` of a
    /// coloring with more than two colors.
    pub recolor: Option<Color>,
    pub witness: String,
}

fn wealthy_type1_direct(k: &Coloring, r: usize) -> bool {
    // vacuous for r <= 2
    (2..r).all(|i| k.color(1, i) != k.color(1, i + 1))
}

/// Detects whether `k` is r-wealthy of the given type (1..=4). Sizes are
/// enforced: r for type 1, 3r for type 2, 2r for types 3 and 4. Types 3 and
/// 4 require a two-colored graph; project with [`Coloring::recolor`] first
/// for more colors.
pub fn is_r_wealthy(k: &Coloring, r: usize, cert_type: u8) -> Option<WealthCertificate> {
    assert!(r >= 1);
    let witness = || crate::literal::coloring_to_text(k);
    match cert_type {
        1 => {
            assert_eq!(k.size(), r, "type 1 wealthy colorings have size r");
            if wealthy_type1_direct(k, r) {
                return Some(WealthCertificate {
                    r,
                    cert_type,
                    reversed: false,
                    transform: None,
                    recolor: None,
                    witness: witness(),
                });
            }
            if wealthy_type1_direct(&k.reversal(), r) {
                return Some(WealthCertificate {
                    r,
                    cert_type,
                    reversed: true,
                    transform: None,
                    recolor: None,
                    witness: witness(),
                });
            }
            None
        }
        2 => {
            assert_eq!(k.size(), 3 * r, "type 2 wealthy colorings have size 3r");
            let all_broken = (1..=r).all(|i| {
                let t = [3 * i - 2, 3 * i - 1, 3 * i];
                matches!(k.homogeneity(&t), Homogeneity::Mixed)
            });
            all_broken.then(|| WealthCertificate {
                r,
                cert_type,
                reversed: false,
                transform: None,
                recolor: None,
                witness: witness(),
            })
        }
        3 | 4 => {
            assert_eq!(k.size(), 2 * r, "type 3/4 wealthy colorings have size 2r");
            let m = half_matrix(k).expect("even size checked");
            let pattern = if cert_type == 3 {
                ZeroOneMatrix::identity(r)
            } else {
                ZeroOneMatrix::upper_triangular(r)
            };
            similarity(&pattern, &m).map(|t| WealthCertificate {
                r,
                cert_type,
                reversed: false,
                transform: Some(t),
                recolor: None,
                witness: witness(),
            })
        }
        other => panic!("wealth type must be 1..=4, got {other}"),
    }
}

/// Scans a level for an r-wealthy member of the given type. For colorings
/// with more than two colors, types 3 and 4 are checked on every two-color
/// projection `R_b`, matching the reduction the dichotomy rests on.
pub fn level_contains_wealthy(level: &[Coloring], r: usize, cert_type: u8) -> Option<WealthCertificate> {
    for k in level {
        if cert_type <= 2 || k.colors() == 2 {
            if let Some(c) = is_r_wealthy(k, r, cert_type) {
                return Some(c);
            }
        } else {
            for b in 1..=k.colors() {
                if let Some(mut c) = is_r_wealthy(&k.recolor(b), r, cert_type) {
                    c.recolor = Some(b);
                    c.witness = crate::literal::coloring_to_text(k);
                    return Some(c);
                }
            }
        }
    }
    None
}

/// Violation reported by the tameness check, with the witnessing
/// subintervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TameViolation {
    /// Condition 1: the minimum monochromatic interval partition has more
    /// than `m` parts.
    TooManyIntervals { count: usize },
    /// Condition 2: `al(M_{I,J}) > m` for the given subintervals.
    Alternations { i: (usize, usize), j: (usize, usize), al: usize },
    /// Condition 3: `|C(M_{I,J})| > m` for the given subintervals.
    ChangeRows { i: (usize, usize), j: (usize, usize), c: usize },
}

/// Outcome of an m-tameness check on a two-colored graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TameReport {
    pub tame: bool,
    /// The least m for which the coloring is tame, when the check passed.
    pub level: Option<usize>,
    /// First violation in condition order, when the check failed.
    pub violation: Option<TameViolation>,
    /// Greedy interval decomposition.
    pub decomposition: Vec<(usize, usize)>,
}

fn subinterval_pairs(n: usize) -> impl Iterator<Item = ((usize, usize), (usize, usize))> {
    (1..=n).flat_map(move |a| {
        (a..=n).flat_map(move |b| {
            (b + 1..=n).flat_map(move |c| (c..=n).map(move |d| ((a, b), (c, d))))
        })
    })
}

/// Checks the three tameness conditions for a two-colored graph: a
/// monochromatic interval partition with at most `m` parts, and
/// `al(M_{I,J}) <= m`, `|C(M_{I,J})| <= m` over every pair of subintervals
/// `I < J`. Returns the first violation in condition order, or the minimal
/// tameness level.
pub fn is_m_tame(k: &Coloring, m: usize) -> TameReport {
    assert!(m >= 1);
    assert_eq!(k.colors(), 2, "tameness is defined for two-colored graphs");
    let decomposition = interval_decomposition(k);
    let n = k.size();
    if decomposition.len() > m {
        return TameReport {
            tame: false,
            level: None,
            violation: Some(TameViolation::TooManyIntervals {
                count: decomposition.len(),
            }),
            decomposition,
        };
    }
    // condition 2 before condition 3, each over all pairs
    for ((a, b), (c, d)) in subinterval_pairs(n) {
        let i: Vec<usize> = (a..=b).collect();
        let j: Vec<usize> = (c..=d).collect();
        let mat = bipartite_matrix(k, &i, &j).expect("valid subinterval pair");
        let al = alternations(&mat);
        if al > m {
            return TameReport {
                tame: false,
                level: None,
                violation: Some(TameViolation::Alternations { i: (a, b), j: (c, d), al }),
                decomposition,
            };
        }
    }
    let mut worst = decomposition.len().max(1);
    for ((a, b), (c, d)) in subinterval_pairs(n) {
        let i: Vec<usize> = (a..=b).collect();
        let j: Vec<usize> = (c..=d).collect();
        let mat = bipartite_matrix(k, &i, &j).expect("valid subinterval pair");
        let cs = change_rows(&mat).1.len();
        if cs > m {
            return TameReport {
                tame: false,
                level: None,
                violation: Some(TameViolation::ChangeRows { i: (a, b), j: (c, d), c: cs }),
                decomposition,
            };
        }
        worst = worst.max(alternations(&mat)).max(cs);
    }
    TameReport {
        tame: true,
        level: Some(worst),
        violation: None,
        decomposition,
    }
}

/// The least m for which a two-colored graph is m-tame:
/// `max(I(K), max al(M_{I,J}), max |C(M_{I,J})|)` over all subinterval
/// pairs. Every coloring is n-tame, so this is at most `n` for `n >= 1`.
pub fn tameness_level(k: &Coloring) -> usize {
    assert_eq!(k.colors(), 2);
    let n = k.size();
    let mut level = interval_count(k).max(1);
    for ((a, b), (c, d)) in subinterval_pairs(n) {
        let i: Vec<usize> = (a..=b).collect();
        let j: Vec<usize> = (c..=d).collect();
        let mat = bipartite_matrix(k, &i, &j).expect("valid subinterval pair");
        level = level.max(alternations(&mat)).max(change_rows(&mat).1.len());
    }
    level
}

/// Tameness level of a coloring with any number of colors: the maximum of
/// [`tameness_level`] over the two-color projections `R_b`, `b` in `1..=l`.
pub fn tameness_level_multicolor(k: &Coloring) -> usize {
    if k.colors() == 2 {
        return tameness_level(k);
    }
    (1..=k.colors())
        .map(|b| tameness_level(&k.recolor(b)))
        .max()
        .unwrap_or(1)
}

/// The two fib string families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FibKind {
    /// 0-1 strings with no two consecutive 1s.
    Fib1,
    /// 0-1 strings avoiding `01` at positions `(2i-1, 2i)` and `10` at
    /// positions `(2i, 2i+1)`.
    Fib2,
}

/// All fib strings of the given kind for size parameter `n >= 1`: the
/// strings have length `n - 1` and there are exactly `F_n` of them.
pub fn fib_strings(n: usize, kind: FibKind) -> Vec<String> {
    assert!(n >= 1);
    let len = n - 1;
    let mut out = Vec::new();
    let mut buf = vec![b'0'; len];
    fn ok(buf: &[u8], pos: usize, kind: FibKind) -> bool {
        if pos == 0 {
            return true;
        }
        let prev = buf[pos - 1];
        let cur = buf[pos];
        match kind {
            FibKind::Fib1 => !(prev == b'1' && cur == b'1'),
            FibKind::Fib2 => {
                // byte pos is string position pos+1 (1-based); the pair
                // (pos, pos+1) starts at an odd position iff pos is odd
                if pos % 2 == 1 {
                    !(prev == b'0' && cur == b'1')
                } else {
                    !(prev == b'1' && cur == b'0')
                }
            }
        }
    }
    fn rec(buf: &mut Vec<u8>, pos: usize, kind: FibKind, out: &mut Vec<String>) {
        if pos == buf.len() {
            out.push(String::from_utf8(buf.clone()).unwrap());
            return;
        }
        for bit in [b'0', b'1'] {
            buf[pos] = bit;
            if ok(buf, pos, kind) {
                rec(buf, pos + 1, kind, out);
            }
        }
        buf[pos] = b'0';
    }
    rec(&mut buf, 0, kind, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{contains, edge_count};
    use crate::poset::ColorPoset;
    use itertools::Itertools;

    fn all_colorings(n: usize, l: u8) -> Vec<Coloring> {
        let e = edge_count(n);
        let mut out = Vec::new();
        let total = (l as u64).pow(e as u32);
        for code in 0..total {
            let mut c = code;
            out.push(Coloring::from_fn(n, l, |_, _| {
                let d = (c % l as u64) as u8 + 1;
                c /= l as u64;
                d
            }));
        }
        out
    }

    #[test]
    fn rich_type1_example() {
        // r = 3, n = 5: path 1-2, 2-3 colored 1, 3-4 colored 2, rest arbitrary
        let k = Coloring::from_edges(5, 2, 1, &[(3, 4, 2), (1, 5, 2)]);
        let cert = is_r_rich(&k, 3).expect("type 1 certificate");
        assert_eq!(cert.cert_type, 1);
        assert!(!cert.reversed);
        assert_eq!((cert.color_a, cert.color_b), (1, 2));
    }

    #[test]
    fn rich_absent_cases() {
        for r in 1..=3usize {
            let mono = Coloring::monochromatic(2 * r - 1, 2, 1);
            assert!(is_r_rich(&mono, r).is_none());
        }
        // r = 1: exhaustive over all single-vertex colorings (there is one)
        for k in all_colorings(1, 2) {
            assert!(is_r_rich(&k, 1).is_none());
        }
    }

    #[test]
    fn rich_type2_and_reversal() {
        // star at 1: {1,2},{1,3} colored 1, {1,4} colored 2 (r = 3, n = 5)
        let k = Coloring::from_edges(5, 2, 1, &[(1, 4, 2)]);
        let cert = is_r_rich(&k, 3).unwrap();
        assert_eq!(cert.cert_type, 2);
        assert!(!cert.reversed);
        // its reversal is caught through the reversed branch
        let cert = is_r_rich(&k.reversal(), 3).unwrap();
        assert!(cert.reversed);
    }

    #[test]
    fn rich_detector_matches_brute_force_over_small_colorings() {
        // brute force: try all (type, reversed, a, b) combinations directly
        fn brute(k: &Coloring, r: usize) -> bool {
            if r < 2 {
                return false;
            }
            for kk in [k.clone(), k.reversal()] {
                let t1 = (1..r).map(|i| kk.color(i, i + 1)).all_equal()
                    && kk.color(r, r + 1) != kk.color(1, 2);
                let t2 = (2..=r).map(|i| kk.color(1, i)).all_equal()
                    && kk.color(1, r + 1) != kk.color(1, 2);
                if t1 || t2 {
                    return true;
                }
            }
            false
        }
        for r in [2usize, 3] {
            for k in all_colorings(2 * r - 1, 2) {
                assert_eq!(is_r_rich(&k, r).is_some(), brute(&k, r), "{k:?} r={r}");
            }
        }
    }

    #[test]
    fn every_r_rich_coloring_contains_s_rich_ones() {
        // closure under decreasing r, via detector + containment
        let d2 = ColorPoset::discrete(2);
        for k in all_colorings(5, 2) {
            if is_r_rich(&k, 3).is_none() {
                continue;
            }
            for s in 2..3usize {
                let target = 2 * s - 1;
                let found = (1..=k.size())
                    .combinations(target)
                    .any(|b| is_r_rich(&k.restrict(&b), s).is_some());
                assert!(found, "{k:?} should contain an {s}-rich restriction");
                // and each restriction embeds back
                for b in (1..=k.size()).combinations(target) {
                    assert!(contains(&d2, &k.restrict(&b), &k));
                }
            }
        }
    }

    #[test]
    fn type1_windows_are_mutually_distinct() {
        // the r windows [i, i+r-1] of a type-1 r-rich coloring are distinct
        // regardless of the unconstrained edges
        let r = 3;
        for free in all_colorings(5, 2) {
            let mut k = free;
            // overwrite the designated edges: path color 1, break color 2
            k = Coloring::from_fn(5, 2, |i, j| {
                if j == i + 1 {
                    if i < r {
                        1
                    } else if i == r {
                        2
                    } else {
                        k.color(i, j)
                    }
                } else {
                    k.color(i, j)
                }
            });
            assert!(is_r_rich(&k, r).is_some());
            let windows: Vec<Coloring> = (1..=r)
                .map(|i| k.restrict(&(i..i + r).collect::<Vec<_>>()))
                .collect();
            for a in 0..windows.len() {
                for b in a + 1..windows.len() {
                    assert_ne!(windows[a], windows[b]);
                }
            }
        }
    }

    #[test]
    fn simple_cases() {
        // any coloring with n <= 2r + 2 is r-simple
        for k in all_colorings(4, 2) {
            assert!(is_r_simple(&k, 1));
        }
        // monochromatic colorings are r-simple for every r
        for r in 1..4 {
            assert!(is_r_simple(&Coloring::monochromatic(9, 2, 1), r));
        }
        // n = 4r + 4 with a bi-colored middle interval is not r-simple
        let r = 1;
        let n = 4 * r + 4;
        let k = Coloring::from_edges(n, 2, 1, &[(3, 4, 2)]); // middle [2, 7]
        assert!(!is_r_simple(&k, r));
    }

    #[test]
    fn simplicity_is_monotone_in_r() {
        for k in all_colorings(6, 2).into_iter().step_by(23) {
            let lvl = simplicity_level(&k);
            for r in lvl..lvl + 3 {
                assert!(is_r_simple(&k, r));
            }
            if lvl > 1 {
                assert!(!is_r_simple(&k, lvl - 1));
            }
        }
    }

    #[test]
    fn simple_restrictions_stay_distinct() {
        // distinct r-simple colorings with n >= 4r + 2 stay distinct after
        // deleting vertex 2r + 1; exhaustive at r = 1, n = 6
        let r = 1;
        let n = 6;
        let simple: Vec<Coloring> = all_colorings(n, 2)
            .into_iter()
            .filter(|k| is_r_simple(k, r))
            .collect();
        let mut seen = std::collections::HashSet::new();
        for k in &simple {
            let restricted = k.delete_vertex(2 * r + 1);
            assert!(seen.insert(restricted), "collision for {k:?}");
        }
    }

    #[test]
    fn interval_decomposition_cases() {
        let mono = Coloring::monochromatic(5, 2, 1);
        assert_eq!(interval_decomposition(&mono), vec![(1, 5)]);
        assert_eq!(interval_count(&mono), 1);

        // edges inside {1,2,3} colored 1, edge {3,4} colored 2, rest 1:
        // greedy takes {1,2,3} then {4}
        let k = Coloring::from_edges(4, 2, 1, &[(3, 4, 2)]);
        assert_eq!(interval_decomposition(&k), vec![(1, 3), (4, 4)]);

        // alternating consecutive edges: intervals of size 2 then trailing
        let alt = Coloring::from_fn(6, 2, |i, j| if j == i + 1 { (i % 2) as u8 + 1 } else { 1 });
        let dec = interval_decomposition(&alt);
        assert_eq!(dec[0], (1, 2));
        assert!(dec.windows(2).all(|w| w[0].1 + 1 == w[1].0));
        // all but the last interval have at least 2 elements
        for &(a, b) in &dec[..dec.len() - 1] {
            assert!(b - a + 1 >= 2);
        }
    }

    #[test]
    fn greedy_decomposition_is_minimum() {
        // compare against brute-force minimum monochromatic partition
        fn min_partition(k: &Coloring) -> usize {
            let n = k.size();
            let mut best = vec![usize::MAX; n + 1];
            best[0] = 0;
            for hi in 1..=n {
                for lo in 1..=hi {
                    if k.interval_homogeneity(lo, hi).is_homogeneous() && best[lo - 1] != usize::MAX
                    {
                        best[hi] = best[hi].min(best[lo - 1] + 1);
                    }
                }
            }
            best[n]
        }
        for k in all_colorings(5, 2).into_iter().step_by(7) {
            assert_eq!(interval_count(&k), min_partition(&k), "{k:?}");
        }
    }

    #[test]
    fn wealthy_type1() {
        // r = 4: star colors at vertex 1 alternate 1, 2, 1
        let k = Coloring::from_edges(4, 2, 1, &[(1, 3, 2)]);
        let cert = is_r_wealthy(&k, 4, 1).expect("alternating star");
        assert_eq!(cert.cert_type, 1);
        // constant star is not wealthy for r >= 4
        let mono = Coloring::monochromatic(4, 2, 1);
        assert!(is_r_wealthy(&mono, 4, 1).is_none());
    }

    #[test]
    fn wealthy_type2() {
        let r = 2;
        // all triangles monochromatic: absent
        let mono = Coloring::monochromatic(3 * r, 2, 1);
        assert!(is_r_wealthy(&mono, r, 2).is_none());
        // break every triangle
        let k = Coloring::from_edges(3 * r, 2, 1, &[(1, 2, 2), (4, 5, 2)]);
        assert!(is_r_wealthy(&k, r, 2).is_some());
    }

    #[test]
    fn wealthy_types_3_and_4() {
        let r = 3;
        // M_K = I_r: diagonal black edges {i, r+i}
        let diag: Vec<(usize, usize, u8)> = (1..=r).map(|i| (i, r + i, 2)).collect();
        let k = Coloring::from_edges(2 * r, 2, 1, &diag);
        let cert = is_r_wealthy(&k, r, 3).expect("identity block");
        assert_eq!(cert.transform, Some(Transform::Identity));
        assert!(is_r_wealthy(&k, r, 4).is_none());

        // complemented identity is similar via swap
        let kc = Coloring::from_fn(2 * r, 2, |i, j| {
            if i <= r && j > r {
                if j - r == i {
                    1
                } else {
                    2
                }
            } else {
                1
            }
        });
        let cert = is_r_wealthy(&kc, r, 3).expect("swapped identity block");
        assert_eq!(cert.transform, Some(Transform::Swap));

        // M_K = U_r
        let ku = Coloring::from_fn(2 * r, 2, |i, j| {
            if i <= r && j > r && j - r >= i {
                2
            } else {
                1
            }
        });
        assert!(is_r_wealthy(&ku, r, 4).is_some());
        assert!(is_r_wealthy(&ku, r, 3).is_none());
    }

    #[test]
    fn tame_cases() {
        let mono = Coloring::monochromatic(5, 2, 1);
        let rep = is_m_tame(&mono, 1);
        assert!(rep.tame);
        assert_eq!(rep.level, Some(1));

        // identity-block coloring: al(M) = 3 trips condition 2 at m = 2,
        // |C(M)| = r - 1 trips condition 3 at m = 3 for r >= 5
        let r = 6;
        let diag: Vec<(usize, usize, u8)> = (1..=r).map(|i| (i, r + i, 2)).collect();
        let k = Coloring::from_edges(2 * r, 2, 1, &diag);
        let rep2 = is_m_tame(&k, 2);
        assert!(!rep2.tame);
        assert!(matches!(rep2.violation, Some(TameViolation::Alternations { al: 3, .. })));
        let rep3 = is_m_tame(&k, 3);
        assert!(!rep3.tame);
        match rep3.violation {
            Some(TameViolation::ChangeRows { c, .. }) => assert!(c > 3),
            other => panic!("expected a change-row violation, got {other:?}"),
        }

        // every coloring is n-tame
        for k in all_colorings(5, 2).into_iter().step_by(31) {
            let n = k.size();
            assert!(is_m_tame(&k, n).tame);
            assert!(tameness_level(&k) <= n);
        }
    }

    #[test]
    fn tameness_level_is_the_threshold() {
        for k in all_colorings(5, 2).into_iter().step_by(13) {
            let lvl = tameness_level(&k);
            assert!(is_m_tame(&k, lvl).tame);
            if lvl > 1 {
                assert!(!is_m_tame(&k, lvl - 1).tame);
            }
            assert_eq!(is_m_tame(&k, lvl).level, Some(lvl));
        }
    }

    #[test]
    fn fib_string_cases() {
        let f4 = fib_strings(4, FibKind::Fib1);
        assert_eq!(f4.len(), 5);
        let set: std::collections::BTreeSet<&str> = f4.iter().map(|s| s.as_str()).collect();
        assert_eq!(
            set,
            ["000", "001", "010", "100", "101"].into_iter().collect()
        );
        assert_eq!(fib_strings(2, FibKind::Fib2).len(), 2);
        assert_eq!(fib_strings(1, FibKind::Fib1), vec![String::new()]);
        assert_eq!(
            fib_strings(4, FibKind::Fib2)
                .iter()
                .map(|s| s.as_str())
                .collect::<std::collections::BTreeSet<_>>(),
            ["000", "001", "100", "101", "111"].into_iter().collect()
        );
    }

    #[test]
    fn fib_string_counts_follow_the_recurrence() {
        for kind in [FibKind::Fib1, FibKind::Fib2] {
            let counts: Vec<usize> = (1..=15).map(|n| fib_strings(n, kind).len()).collect();
            assert_eq!(counts[0], 1);
            assert_eq!(counts[1], 2);
            for n in 2..counts.len() {
                assert_eq!(counts[n], counts[n - 1] + counts[n - 2]);
            }
        }
    }
}

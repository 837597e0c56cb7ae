//! Edge-colored complete graphs `(n, chi)` and their containment order.
//!
//! A coloring assigns every 2-element subset of `[n] = {1, .., n}` a color
//! from `1..=l`. Containment of `pattern` in `host` is witnessed by an
//! increasing vertex map `f` with `pattern({i,j}) <=_P host({f(i), f(j)})`
//! for every pattern edge.
//!
//! Edge colors are stored in a flat array in colexicographic order of the
//! pair `{i, j}`: rank `{i,j} = C(j-1, 2) + i - 1` for `i < j`. With this
//! layout appending a vertex appends a block of `n` entries, and restricting
//! to an initial segment `[m]` is a prefix slice; both matter for the
//! enumeration kernel.

use crate::poset::{Color, ColorPoset};

/// Colex rank of the pair `{i, j}` with `1 <= i < j`.
#[inline]
pub fn edge_index(i: usize, j: usize) -> usize {
    debug_assert!(i >= 1 && i < j);
    (j - 1) * (j - 2) / 2 + i - 1
}

/// Number of edges of a coloring on `n` vertices.
#[inline]
pub fn edge_count(n: usize) -> usize {
    n.saturating_sub(1) * n / 2
}

/// An edge-colored complete graph. Vertices are `1..=n`. Immutable value;
/// the derived `Ord` (size, then color count, then colex edge colors) is the
/// canonical order used everywhere deterministic output is required.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    n: u32,
    colors: u8,
    chi: Vec<Color>,
}

/// Result of a homogeneity query on a vertex subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// All internal edges share this color.
    Uniform(Color),
    /// No internal edge at all (`|A| <= 1`): homogeneous but without a color.
    Vacuous,
    /// At least two internal edge colors.
    Mixed,
}

impl Homogeneity {
    pub fn is_homogeneous(self) -> bool {
        !matches!(self, Homogeneity::Mixed)
    }

    /// The common color, when there is one.
    pub fn color(self) -> Option<Color> {
        match self {
            Homogeneity::Uniform(c) => Some(c),
            _ => None,
        }
    }
}

impl Coloring {
    /// The empty coloring `0` over `l` colors.
    pub fn empty(colors: u8) -> Coloring {
        Coloring {
            n: 0,
            colors,
            chi: Vec::new(),
        }
    }

    /// The coloring on `n` vertices with every edge colored `c`.
    pub fn monochromatic(n: usize, colors: u8, c: Color) -> Coloring {
        assert!(c >= 1 && c <= colors, "color {c} out of range 1..={colors}");
        Coloring {
            n: n as u32,
            colors,
            chi: vec![c; edge_count(n)],
        }
    }

    /// Builds a coloring from a function on vertex pairs `i < j`.
    pub fn from_fn(n: usize, colors: u8, mut f: impl FnMut(usize, usize) -> Color) -> Coloring {
        let mut chi = Vec::with_capacity(edge_count(n));
        for j in 2..=n {
            for i in 1..j {
                let c = f(i, j);
                assert!(c >= 1 && c <= colors, "color {c} out of range 1..={colors}");
                chi.push(c);
            }
        }
        Coloring {
            n: n as u32,
            colors,
            chi,
        }
    }

    /// Builds a coloring from explicit non-default edges.
    pub fn from_edges(n: usize, colors: u8, default: Color, edges: &[(usize, usize, Color)]) -> Coloring {
        let mut k = Coloring::monochromatic(n, colors, default);
        for &(i, j, c) in edges {
            k.set(i, j, c);
        }
        k
    }

    fn set(&mut self, i: usize, j: usize, c: Color) {
        assert!(c >= 1 && c <= self.colors);
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i >= 1 && j <= self.n as usize && i != j, "edge {{{i},{j}}} out of range");
        self.chi[edge_index(i, j)] = c;
    }

    /// Vertex count `n`.
    #[inline]
    pub fn size(&self) -> usize {
        self.n as usize
    }

    /// Number of available colors `l`.
    #[inline]
    pub fn colors(&self) -> u8 {
        self.colors
    }

    /// Color of the edge `{i, j}`, `i != j`, both in `1..=n`.
    #[inline]
    pub fn color(&self, i: usize, j: usize) -> Color {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        debug_assert!(i >= 1 && j <= self.n as usize);
        self.chi[edge_index(i, j)]
    }

    /// Flat colex-ordered edge colors.
    pub fn edge_colors(&self) -> &[Color] {
        &self.chi
    }

    /// For two-colored graphs with at most 128 edges, the bitmask with bit
    /// `edge_index(i,j)` set iff the edge has color 2.
    pub fn two_color_mask(&self) -> Option<u128> {
        if self.colors != 2 || self.chi.len() > 128 {
            return None;
        }
        let mut mask = 0u128;
        for (r, &c) in self.chi.iter().enumerate() {
            if c == 2 {
                mask |= 1 << r;
            }
        }
        Some(mask)
    }

    /// Number of edges with the given color.
    pub fn count_color(&self, c: Color) -> usize {
        self.chi.iter().filter(|&&x| x == c).count()
    }

    /// Appends vertex `n+1`, coloring the new edges `{i, n+1}` with
    /// `new_edges[i-1]`. This is the extension step of the enumeration kernel.
    pub fn extend(&self, new_edges: &[Color]) -> Coloring {
        assert_eq!(new_edges.len(), self.n as usize);
        let mut chi = Vec::with_capacity(self.chi.len() + new_edges.len());
        chi.extend_from_slice(&self.chi);
        chi.extend_from_slice(new_edges);
        Coloring {
            n: self.n + 1,
            colors: self.colors,
            chi,
        }
    }

    /// Restriction `K|B` to a vertex subset, relabeled along the unique
    /// increasing bijection `B -> [|B|]`. `B` must be strictly increasing.
    pub fn restrict(&self, b: &[usize]) -> Coloring {
        debug_assert!(b.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(b.iter().all(|&v| v >= 1 && v <= self.n as usize));
        let m = b.len();
        // initial segments are prefix slices in colex layout
        if b.iter().enumerate().all(|(t, &v)| v == t + 1) {
            return Coloring {
                n: m as u32,
                colors: self.colors,
                chi: self.chi[..edge_count(m)].to_vec(),
            };
        }
        Coloring::from_fn(m, self.colors, |i, j| self.color(b[i - 1], b[j - 1]))
    }

    /// Restriction to `[n] \ {v}`.
    pub fn delete_vertex(&self, v: usize) -> Coloring {
        let b: Vec<usize> = (1..=self.n as usize).filter(|&x| x != v).collect();
        self.restrict(&b)
    }

    /// The reversal `(n, psi)` with `psi({i,j}) = chi({n-i+1, n-j+1})`.
    pub fn reversal(&self) -> Coloring {
        let n = self.n as usize;
        Coloring::from_fn(n, self.colors, |i, j| self.color(n - i + 1, n - j + 1))
    }

    /// Two-color projection `R_b`: an edge gets color 1 iff its color is `b`,
    /// color 2 otherwise. Size-preserving.
    pub fn recolor(&self, b: Color) -> Coloring {
        assert!(b >= 1 && b <= self.colors);
        Coloring {
            n: self.n,
            colors: 2,
            chi: self.chi.iter().map(|&c| if c == b { 1 } else { 2 }).collect(),
        }
    }

    /// Homogeneity of the vertex subset `A` (strictly increasing).
    pub fn homogeneity(&self, a: &[usize]) -> Homogeneity {
        debug_assert!(a.windows(2).all(|w| w[0] < w[1]));
        if a.len() <= 1 {
            return Homogeneity::Vacuous;
        }
        let first = self.color(a[0], a[1]);
        for (s, &x) in a.iter().enumerate() {
            for &y in &a[s + 1..] {
                if self.color(x, y) != first {
                    return Homogeneity::Mixed;
                }
            }
        }
        Homogeneity::Uniform(first)
    }

    /// Homogeneity of the interval `[lo, hi]`.
    pub fn interval_homogeneity(&self, lo: usize, hi: usize) -> Homogeneity {
        if lo > hi {
            return Homogeneity::Vacuous;
        }
        let a: Vec<usize> = (lo..=hi).collect();
        self.homogeneity(&a)
    }
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Coloring({})", crate::literal::coloring_to_text(self))
    }
}

/// Per-vertex counts of incident edge colors, used as a pruning signature by
/// the containment search.
fn color_degrees(k: &Coloring) -> Vec<Vec<u16>> {
    let n = k.size();
    let l = k.colors() as usize;
    let mut deg = vec![vec![0u16; l]; n];
    for j in 2..=n {
        for i in 1..j {
            let c = k.color(i, j) as usize - 1;
            deg[i - 1][c] += 1;
            deg[j - 1][c] += 1;
        }
    }
    deg
}

/// Host-side signature: for vertex `v` and color `c`, the number of incident
/// edges whose color is `>=_P c`.
fn up_degrees(k: &Coloring, poset: &ColorPoset) -> Vec<Vec<u16>> {
    let n = k.size();
    let l = k.colors() as usize;
    let mut deg = vec![vec![0u16; l]; n];
    for j in 2..=n {
        for i in 1..j {
            let col = k.color(i, j);
            for c in 1..=l as u8 {
                if poset.leq(c, col) {
                    deg[i - 1][c as usize - 1] += 1;
                    deg[j - 1][c as usize - 1] += 1;
                }
            }
        }
    }
    deg
}

struct Search<'a> {
    poset: &'a ColorPoset,
    pattern: &'a Coloring,
    host: &'a Coloring,
    pat_deg: Vec<Vec<u16>>,
    host_updeg: Vec<Vec<u16>>,
    assignment: Vec<usize>,
}

impl<'a> Search<'a> {
    fn feasible(&self, pv: usize, hv: usize) -> bool {
        // signature prune: every color class at the pattern vertex needs at
        // least as many host edges with a color above it
        let pd = &self.pat_deg[pv - 1];
        let hd = &self.host_updeg[hv - 1];
        for c in 0..pd.len() {
            if pd[c] > hd[c] {
                return false;
            }
        }
        // edges back to the already placed pattern vertices
        for prev in 1..self.assignment.len() + 1 {
            let placed = self.assignment[prev - 1];
            if !self
                .poset
                .leq(self.pattern.color(prev, pv), self.host.color(placed, hv))
            {
                return false;
            }
        }
        true
    }

    fn extend_from(&mut self, pv: usize, lo: usize) -> bool {
        let m = self.pattern.size();
        let n = self.host.size();
        if pv > m {
            return true;
        }
        // capacity prune: leave room for the remaining pattern vertices
        for hv in lo..=(n - (m - pv)) {
            if self.feasible(pv, hv) {
                self.assignment.push(hv);
                if self.extend_from(pv + 1, hv + 1) {
                    return true;
                }
                self.assignment.pop();
            }
        }
        false
    }
}

/// Searches for an increasing injection `f: [m] -> [n]` witnessing
/// `pattern <= host` over the poset. Returns the lexicographically first
/// witness (1-based vertex images), or `None`. The empty pattern always
/// embeds via the empty map.
pub fn find_embedding(poset: &ColorPoset, pattern: &Coloring, host: &Coloring) -> Option<Vec<usize>> {
    find_embedding_inner(poset, pattern, host, false)
}

/// Like [`find_embedding`] but only accepts witnesses whose image includes
/// the last host vertex (equivalently `f(m) = n`, as `f` is increasing).
/// This is the sound check for one-vertex extensions of avoiders.
pub fn find_embedding_using_last(
    poset: &ColorPoset,
    pattern: &Coloring,
    host: &Coloring,
) -> Option<Vec<usize>> {
    find_embedding_inner(poset, pattern, host, true)
}

fn find_embedding_inner(
    poset: &ColorPoset,
    pattern: &Coloring,
    host: &Coloring,
    anchor_last: bool,
) -> Option<Vec<usize>> {
    let m = pattern.size();
    let n = host.size();
    if m == 0 {
        return if anchor_last && n != 0 { None } else { Some(Vec::new()) };
    }
    if m > n {
        return None;
    }
    // same size: the identity is the only increasing injection
    if m == n {
        let ok = (2..=n).all(|j| (1..j).all(|i| poset.leq(pattern.color(i, j), host.color(i, j))));
        return ok.then(|| (1..=n).collect());
    }
    // cheap global prune for two-colored graphs over a discrete poset
    if pattern.colors() == 2 && host.colors() == 2 && poset.is_discrete() {
        if let (Some(pm), Some(hm)) = (pattern.two_color_mask(), host.two_color_mask()) {
            let p2 = pm.count_ones() as usize;
            let h2 = hm.count_ones() as usize;
            let pe = pattern.edge_colors().len();
            let he = host.edge_colors().len();
            if p2 > h2 || pe - p2 > he - h2 {
                return None;
            }
        }
    }
    let mut search = Search {
        poset,
        pattern,
        host,
        pat_deg: color_degrees(pattern),
        host_updeg: up_degrees(host, poset),
        assignment: Vec::with_capacity(m),
    };
    if anchor_last {
        // place the last pattern vertex on the last host vertex first
        if !search.feasible(m, n) {
            return None;
        }
        // remaining vertices are assigned below n; temporarily treat the
        // anchored vertex as placed by searching prefixes only
        return anchored_search(&mut search, m, n);
    }
    if search.extend_from(1, 1) {
        Some(search.assignment)
    } else {
        None
    }
}

fn anchored_search(search: &mut Search<'_>, m: usize, n: usize) -> Option<Vec<usize>> {
    fn rec(search: &mut Search<'_>, pv: usize, lo: usize, m: usize, n: usize) -> bool {
        if pv == m {
            // all of [1, m-1] placed; the anchor edge checks
            for prev in 1..m {
                let placed = search.assignment[prev - 1];
                if !search
                    .poset
                    .leq(search.pattern.color(prev, m), search.host.color(placed, n))
                {
                    return false;
                }
            }
            return true;
        }
        for hv in lo..=(n - 1 - (m - 1 - pv)) {
            if search.feasible(pv, hv) {
                search.assignment.push(hv);
                if rec(search, pv + 1, hv + 1, m, n) {
                    return true;
                }
                search.assignment.pop();
            }
        }
        false
    }
    if m == 1 {
        return Some(vec![n]);
    }
    if rec(search, 1, 1, m, n) {
        let mut a = search.assignment.clone();
        a.push(n);
        Some(a)
    } else {
        None
    }
}

/// True iff `pattern <= host` over the poset.
pub fn contains(poset: &ColorPoset, pattern: &Coloring, host: &Coloring) -> bool {
    find_embedding(poset, pattern, host).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    /// Independent oracle: exhaustive scan over all increasing injections.
    fn embeds_brute(poset: &ColorPoset, pattern: &Coloring, host: &Coloring) -> bool {
        let m = pattern.size();
        let n = host.size();
        if m > n {
            return false;
        }
        (1..=n).combinations(m).any(|img| {
            (2..=m).all(|j| {
                (1..j).all(|i| poset.leq(pattern.color(i, j), host.color(img[i - 1], img[j - 1])))
            })
        })
    }

    fn all_colorings(n: usize, l: u8) -> Vec<Coloring> {
        let e = edge_count(n);
        let mut out = Vec::new();
        let mut digits = vec![1u8; e];
        loop {
            out.push(Coloring {
                n: n as u32,
                colors: l,
                chi: digits.clone(),
            });
            let mut pos = 0;
            loop {
                if pos == e {
                    return out;
                }
                if digits[pos] < l {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 1;
                pos += 1;
            }
        }
    }

    #[test]
    fn edge_index_is_colex() {
        assert_eq!(edge_index(1, 2), 0);
        assert_eq!(edge_index(1, 3), 1);
        assert_eq!(edge_index(2, 3), 2);
        assert_eq!(edge_index(1, 4), 3);
        assert_eq!(edge_index(3, 4), 5);
    }

    #[test]
    fn single_edge_pattern_embeds_with_direct_witness() {
        let d2 = ColorPoset::discrete(2);
        let pattern = Coloring::monochromatic(2, 2, 2);
        let host = Coloring::from_edges(3, 2, 1, &[(1, 3, 2)]);
        assert_eq!(find_embedding(&d2, &pattern, &host), Some(vec![1, 3]));
    }

    #[test]
    fn no_edge_of_color_two_means_absent() {
        let d2 = ColorPoset::discrete(2);
        let pattern = Coloring::monochromatic(2, 2, 2);
        let host = Coloring::monochromatic(5, 2, 1);
        assert_eq!(find_embedding(&d2, &pattern, &host), None);
    }

    #[test]
    fn linear_poset_raises_edge_colors() {
        let l2 = ColorPoset::linear(2);
        let pattern = Coloring::monochromatic(2, 2, 1);
        let host = Coloring::monochromatic(2, 2, 2);
        assert!(contains(&l2, &pattern, &host));
        assert!(!contains(&ColorPoset::discrete(2), &pattern, &host));
    }

    #[test]
    fn empty_pattern_always_embeds() {
        let d2 = ColorPoset::discrete(2);
        let host = Coloring::monochromatic(4, 2, 1);
        assert_eq!(find_embedding(&d2, &Coloring::empty(2), &host), Some(vec![]));
    }

    #[test]
    fn search_agrees_with_brute_force_oracle() {
        let d2 = ColorPoset::discrete(2);
        let l2 = ColorPoset::linear(2);
        let patterns = all_colorings(3, 2);
        let hosts = all_colorings(5, 2);
        for p in &patterns {
            for h in hosts.iter().step_by(7) {
                for poset in [&d2, &l2] {
                    let got = find_embedding(poset, p, h);
                    assert_eq!(got.is_some(), embeds_brute(poset, p, h));
                    if let Some(f) = got {
                        // the witness is valid
                        assert!(f.windows(2).all(|w| w[0] < w[1]));
                        for j in 2..=p.size() {
                            for i in 1..j {
                                assert!(poset.leq(p.color(i, j), h.color(f[i - 1], f[j - 1])));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anchored_search_agrees_with_last_vertex_filter() {
        let d2 = ColorPoset::discrete(2);
        let patterns = all_colorings(3, 2);
        let hosts = all_colorings(4, 2);
        for p in &patterns {
            for h in &hosts {
                let anchored = find_embedding_using_last(&d2, p, h);
                let brute = (1..=h.size())
                    .combinations(p.size())
                    .filter(|img| img.last() == Some(&h.size()))
                    .any(|img| {
                        (2..=p.size()).all(|j| {
                            (1..j).all(|i| {
                                d2.leq(p.color(i, j), h.color(img[i - 1], img[j - 1]))
                            })
                        })
                    });
                assert_eq!(anchored.is_some(), brute, "pattern {p:?} host {h:?}");
                if let Some(f) = anchored {
                    assert_eq!(*f.last().unwrap(), h.size());
                }
            }
        }
    }

    #[test]
    fn restriction_is_contained_and_prefix_fast_path_matches() {
        let d2 = ColorPoset::discrete(2);
        for k in all_colorings(5, 2).iter().step_by(17) {
            for b in (1..=5usize).powerset() {
                let r = k.restrict(&b);
                assert_eq!(r.size(), b.len());
                assert!(contains(&d2, &r, k));
            }
            let pre = k.restrict(&[1, 2, 3]);
            let gen = Coloring::from_fn(3, 2, |i, j| k.color(i, j));
            assert_eq!(pre, gen);
        }
    }

    #[test]
    fn restrict_spec_cases() {
        let k = Coloring::from_edges(3, 2, 1, &[(1, 3, 2)]);
        let r = k.restrict(&[1, 3]);
        assert_eq!(r.color(1, 2), 2);
        assert_eq!(k.restrict(&[1, 2, 3]), k);
        assert_eq!(k.restrict(&[]), Coloring::empty(2));
    }

    #[test]
    fn reversal_is_involution_and_moves_edges() {
        let k = Coloring::from_edges(3, 2, 1, &[(1, 2, 2)]);
        let r = k.reversal();
        assert_eq!(r.color(2, 3), 2);
        assert_eq!(r.color(1, 2), 1);
        assert_eq!(r.reversal(), k);
        let mono = Coloring::monochromatic(4, 3, 2);
        assert_eq!(mono.reversal(), mono);
    }

    #[test]
    fn recolor_cases() {
        // two colors: b = 1 keeps the color classes in place
        let k = Coloring::from_edges(3, 2, 1, &[(1, 2, 2)]);
        assert_eq!(k.recolor(1), k);
        // uniform b goes to all-1
        let allb = Coloring::monochromatic(4, 3, 2);
        assert_eq!(allb.recolor(2), Coloring::monochromatic(4, 2, 1));
        // three colors, b = 2: only former 2-edges become 1
        let k3 = Coloring::from_edges(3, 3, 1, &[(1, 2, 2), (1, 3, 3)]);
        let r = k3.recolor(2);
        assert_eq!(r.color(1, 2), 1);
        assert_eq!(r.color(1, 3), 2);
        assert_eq!(r.color(2, 3), 2);
    }

    #[test]
    fn recolor_tuple_determines_coloring() {
        // over a discrete poset, the tuple (R_b(K))_b is injective
        let cols = all_colorings(4, 3);
        let mut seen = std::collections::HashMap::new();
        for k in &cols {
            let key: Vec<Coloring> = (1..=3).map(|b| k.recolor(b)).collect();
            assert!(seen.insert(key, k.clone()).is_none());
        }
    }

    #[test]
    fn containment_is_a_partial_order_on_small_colorings() {
        let d2 = ColorPoset::discrete(2);
        let small = all_colorings(3, 2);
        // reflexive
        for k in &small {
            assert!(contains(&d2, k, k));
        }
        // antisymmetric at equal size
        for a in &small {
            for b in &small {
                if contains(&d2, a, b) && contains(&d2, b, a) {
                    assert_eq!(a, b);
                }
            }
        }
        // transitive across sizes
        let mid = all_colorings(4, 2);
        for a in small.iter().step_by(3) {
            for b in mid.iter().step_by(11) {
                if !contains(&d2, a, b) {
                    continue;
                }
                for c in all_colorings(5, 2).iter().step_by(41) {
                    if contains(&d2, b, c) {
                        assert!(contains(&d2, a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn discrete_witness_works_over_finer_poset() {
        let d2 = ColorPoset::discrete(2);
        let l2 = ColorPoset::linear(2);
        for p in all_colorings(3, 2).iter().step_by(2) {
            for h in all_colorings(4, 2).iter().step_by(5) {
                if contains(&d2, p, h) {
                    assert!(contains(&l2, p, h));
                }
            }
        }
    }

    #[test]
    fn recolor_preserves_discrete_containment() {
        let d2 = ColorPoset::discrete(2);
        let d3 = ColorPoset::discrete(3);
        for p in all_colorings(3, 3).iter().step_by(5) {
            for h in all_colorings(4, 3).iter().step_by(19) {
                if contains(&d3, p, h) {
                    for b in 1..=3 {
                        assert!(contains(&d2, &p.recolor(b), &h.recolor(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn homogeneity_cases() {
        let mono = Coloring::monochromatic(4, 2, 1);
        assert_eq!(mono.homogeneity(&[1, 2, 3, 4]), Homogeneity::Uniform(1));
        let k = Coloring::from_edges(4, 2, 1, &[(2, 3, 2)]);
        assert_eq!(k.homogeneity(&[1, 2, 3]), Homogeneity::Mixed);
        assert_eq!(k.homogeneity(&[2, 3]), Homogeneity::Uniform(2));
        assert_eq!(k.homogeneity(&[2]), Homogeneity::Vacuous);
        assert_eq!(k.homogeneity(&[]), Homogeneity::Vacuous);
    }
}

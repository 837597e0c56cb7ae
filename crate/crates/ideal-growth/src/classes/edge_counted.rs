//! Classes whose atoms are edges rather than vertices: simple graphs,
//! multigraphs, and k-uniform hypergraphs, all without isolated vertices
//! and measured by (multiplicity-weighted) edge count. Atoms are ordered
//! lexicographically; the color of an atom pair is the relabeled
//! two-edge configuration.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use super::{increasing_injection, ClassAdapter, NativeObject};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::poset::ColorPoset;

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for t in 0..k {
        r = r * (n - t) as u64 / (t + 1) as u64;
    }
    r
}

/// Closed-form count of two-edge configurations of a k-uniform hypergraph.
pub fn hypergraph_two_object_count(k: usize) -> usize {
    assert!(k >= 2);
    let mut twice = 0u64;
    for m in 0..k {
        twice += binom(k - 1, m)
            * (2 * binom(2 * k - m - 1, k - 1) + binom(2 * k - m - 2, k - 1));
    }
    ((twice - 1) / 2) as usize
}

/// All pairs `A <_lex B` of distinct k-subsets with `A ∪ B = [r]` for some
/// `r`, relabeled canonically and sorted. The position in this list fixes
/// the color legend of the edge-counted classes.
fn two_edge_configs(k: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let mut out = Vec::new();
    for r in k..=2 * k {
        for pair in (1..=r as u8).combinations(k).combinations(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let mut cover = vec![false; r];
            for &v in a.iter().chain(b.iter()) {
                cover[v as usize - 1] = true;
            }
            if cover.iter().all(|&c| c) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Relabels a pair of edges along the increasing bijection from their
/// vertex union to an initial segment.
fn relabel_pair(a: &[u8], b: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let mut vs: Vec<u8> = a.iter().chain(b.iter()).copied().collect();
    vs.sort_unstable();
    vs.dedup();
    let rank = |v: u8| vs.binary_search(&v).unwrap() as u8 + 1;
    (
        a.iter().map(|&v| rank(v)).collect(),
        b.iter().map(|&v| rank(v)).collect(),
    )
}

/// All sets of `m` distinct k-subsets of `[r]` covering `[r]`, edges in
/// lexicographic order. Backtracking with a cover-feasibility prune.
fn covering_edge_sets(r: usize, k: usize, m: usize) -> Vec<Vec<Vec<u8>>> {
    if m == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    if r < k || r > k * m {
        return Vec::new();
    }
    let all: Vec<Vec<u8>> = (1..=r as u8).combinations(k).collect();
    // last index of an edge containing each vertex
    let mut last_idx = vec![0usize; r + 1];
    for (t, e) in all.iter().enumerate() {
        for &v in e {
            last_idx[v as usize] = t;
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut cover_count = vec![0u8; r + 1];
    fn rec(
        all: &[Vec<u8>],
        last_idx: &[usize],
        r: usize,
        k: usize,
        m: usize,
        next: usize,
        chosen: &mut Vec<usize>,
        cover_count: &mut Vec<u8>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if chosen.len() == m {
            if (1..=r).all(|v| cover_count[v] > 0) {
                out.push(chosen.iter().map(|&t| all[t].clone()).collect());
            }
            return;
        }
        let remaining = m - chosen.len();
        if all.len() < next + remaining {
            return;
        }
        let uncovered: Vec<usize> = (1..=r).filter(|&v| cover_count[v] == 0).collect();
        if uncovered.len() > remaining * k {
            return;
        }
        // every uncovered vertex must still appear in a choosable edge
        let cap = uncovered.iter().map(|&v| last_idx[v]).min();
        let hi = all.len() - remaining;
        for t in next..=hi {
            if let Some(cap) = cap {
                if t > cap {
                    break;
                }
            }
            for &v in &all[t] {
                cover_count[v as usize] += 1;
            }
            chosen.push(t);
            rec(all, last_idx, r, k, m, t + 1, chosen, cover_count, out);
            chosen.pop();
            for &v in &all[t] {
                cover_count[v as usize] -= 1;
            }
        }
    }
    rec(
        &all,
        &last_idx,
        r,
        k,
        m,
        0,
        &mut chosen,
        &mut cover_count,
        &mut out,
    );
    out
}

fn parse_edge_sets(s: &str, k: usize) -> Result<Vec<Vec<u8>>> {
    let mut edges = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let vs: Vec<u8> = if part.contains('.') {
            part.split('.')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::InvalidObject(format!("bad vertex `{t}`")))
                })
                .collect::<Result<_>>()?
        } else {
            super::parse_digit_word(part)?
        };
        if vs.len() != k || !vs.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidObject(format!(
                "`{part}` is not a sorted {k}-set"
            )));
        }
        edges.push(vs);
    }
    edges.sort();
    Ok(edges)
}

fn check_edge_cover(edges: &[Vec<u8>]) -> Result<()> {
    let r = edges
        .iter()
        .flat_map(|e| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let mut cover = vec![false; r];
    for e in edges {
        for &v in e {
            cover[v as usize - 1] = true;
        }
    }
    if let Some(v) = cover.iter().position(|&c| !c) {
        return Err(Error::InvalidObject(format!("vertex {} is isolated", v + 1)));
    }
    for w in edges.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidObject(format!("edge {:?} repeated", w[0])));
        }
    }
    Ok(())
}

/// Simple graphs without isolated vertices, ordered by the plain subgraph
/// relation and measured by edge count. Atoms are the edges in
/// lexicographic order; the six colors are the relabeled two-edge shapes.
pub struct EdgeGraphAdapter {
    color_of: HashMap<(Vec<u8>, Vec<u8>), u8>,
    configs: Vec<(Vec<u8>, Vec<u8>)>,
}

impl EdgeGraphAdapter {
    pub fn new() -> EdgeGraphAdapter {
        let configs = two_edge_configs(2);
        let color_of = configs
            .iter()
            .enumerate()
            .map(|(t, c)| (c.clone(), t as u8 + 1))
            .collect();
        EdgeGraphAdapter { color_of, configs }
    }
}

impl Default for EdgeGraphAdapter {
    fn default() -> Self {
        Self::new()
    }
}

fn edges_as_vecs(edges: &[(u8, u8)]) -> Vec<Vec<u8>> {
    edges.iter().map(|&(i, j)| vec![i, j]).collect()
}

fn config_literal(c: &(Vec<u8>, Vec<u8>)) -> String {
    let fmt = |e: &[u8]| e.iter().map(|v| v.to_string()).collect::<String>();
    format!("{}+{}", fmt(&c.0), fmt(&c.1))
}

impl ClassAdapter for EdgeGraphAdapter {
    fn name(&self) -> &str {
        "edge-graph"
    }

    fn atom_count(&self) -> usize {
        1
    }

    fn two_object_count(&self) -> usize {
        6
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(6)
    }

    fn legend(&self) -> Vec<String> {
        self.configs.iter().map(config_literal).collect()
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        let mut edges = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            edges.push(super::graphs::parse_edge(part, u8::MAX as usize)?);
        }
        edges.sort_unstable();
        let obj = NativeObject::EdgeGraph { edges };
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::EdgeGraph { edges } => edges
                .iter()
                .map(|(i, j)| format!("{i}-{j}"))
                .collect::<Vec<_>>()
                .join(", "),
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::EdgeGraph { edges } => edges.len(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::EdgeGraph { edges } => {
                if !edges.windows(2).all(|w| w[0] < w[1]) {
                    return Err(Error::InvalidObject("edges must be sorted".into()));
                }
                if edges.iter().any(|&(i, j)| i >= j || i < 1) {
                    return Err(Error::InvalidObject("malformed edge".into()));
                }
                check_edge_cover(&edges_as_vecs(edges))
            }
            _ => Err(Error::InvalidObject("expected an edge-counted graph".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::EdgeGraph { edges } = obj else {
            unreachable!()
        };
        Ok(Coloring::from_fn(edges.len(), 6, |i, j| {
            let (ei, ej) = (edges[i - 1], edges[j - 1]);
            let key = relabel_pair(&[ei.0, ei.1], &[ej.0, ej.1]);
            self.color_of[&key]
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (NativeObject::EdgeGraph { edges: e1 }, NativeObject::EdgeGraph { edges: e2 }) =
            (small, large)
        else {
            panic!("wrong variant");
        };
        let r1 = e1.iter().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let r2 = e2.iter().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        // increasing vertex map sending every edge to an edge
        increasing_injection(r1, r2, |prefix, cand| {
            let t = prefix.len();
            prefix.iter().enumerate().all(|(s, &h)| {
                !e1.binary_search(&(s as u8 + 1, t as u8 + 1)).is_ok()
                    || e2.binary_search(&(h as u8 + 1, cand as u8 + 1)).is_ok()
            })
        })
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "edge-counted graph generation capped at size {}",
                self.max_size()
            )));
        }
        let mut out = Vec::new();
        if size == 0 {
            out.push(NativeObject::EdgeGraph { edges: Vec::new() });
            return Ok(out);
        }
        for r in 2..=2 * size {
            for edges in covering_edge_sets(r, 2, size) {
                out.push(NativeObject::EdgeGraph {
                    edges: edges.into_iter().map(|e| (e[0], e[1])).collect(),
                });
            }
        }
        Ok(out)
    }

    fn max_size(&self) -> usize {
        6
    }
}

/// Multigraphs without isolated vertices, measured by total edge
/// multiplicity. Atoms are the pairs (edge, copy); two copies of one edge
/// get the parallel color 1, other pairs get the simple two-edge shape
/// shifted by one.
pub struct MultigraphAdapter {
    color_of: HashMap<(Vec<u8>, Vec<u8>), u8>,
    configs: Vec<(Vec<u8>, Vec<u8>)>,
}

impl MultigraphAdapter {
    pub fn new() -> MultigraphAdapter {
        let configs = two_edge_configs(2);
        let color_of = configs
            .iter()
            .enumerate()
            .map(|(t, c)| (c.clone(), t as u8 + 2))
            .collect();
        MultigraphAdapter { color_of, configs }
    }

    fn atoms(mult: &BTreeMap<(u8, u8), u32>) -> Vec<(u8, u8)> {
        // one entry per copy; copies of an edge are consecutive
        let mut out = Vec::new();
        for (&e, &m) in mult {
            for _ in 0..m {
                out.push(e);
            }
        }
        out
    }
}

impl Default for MultigraphAdapter {
    fn default() -> Self {
        Self::new()
    }
}

impl ClassAdapter for MultigraphAdapter {
    fn name(&self) -> &str {
        "multigraph"
    }

    fn atom_count(&self) -> usize {
        1
    }

    fn two_object_count(&self) -> usize {
        7
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(7)
    }

    fn legend(&self) -> Vec<String> {
        let mut out = vec!["parallel copies of one edge".into()];
        out.extend(self.configs.iter().map(config_literal));
        out
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        let mut mult = BTreeMap::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (edge, count) = match part.split_once(':') {
                Some((e, c)) => {
                    let count: u32 = c.trim().parse().map_err(|_| {
                        Error::InvalidObject(format!("bad multiplicity `{c}` in `{part}`"))
                    })?;
                    (e, count)
                }
                None => (part, 1),
            };
            let e = super::graphs::parse_edge(edge, u8::MAX as usize)?;
            if count == 0 || mult.insert(e, count).is_some() {
                return Err(Error::InvalidObject(format!("bad edge entry `{part}`")));
            }
        }
        let obj = NativeObject::Multigraph { mult };
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::Multigraph { mult } => mult
                .iter()
                .map(|(&(i, j), &m)| format!("{i}-{j}:{m}"))
                .collect::<Vec<_>>()
                .join(", "),
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::Multigraph { mult } => mult.values().map(|&m| m as usize).sum(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::Multigraph { mult } => {
                if mult.iter().any(|(&(i, j), &m)| i >= j || i < 1 || m == 0) {
                    return Err(Error::InvalidObject("malformed multigraph entry".into()));
                }
                let edges: Vec<Vec<u8>> = mult.keys().map(|&(i, j)| vec![i, j]).collect();
                check_edge_cover(&edges)
            }
            _ => Err(Error::InvalidObject("expected a multigraph".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::Multigraph { mult } = obj else {
            unreachable!()
        };
        let atoms = Self::atoms(mult);
        Ok(Coloring::from_fn(atoms.len(), 7, |i, j| {
            let (ei, ej) = (atoms[i - 1], atoms[j - 1]);
            if ei == ej {
                1
            } else {
                let key = relabel_pair(&[ei.0, ei.1], &[ej.0, ej.1]);
                self.color_of[&key]
            }
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (NativeObject::Multigraph { mult: m1 }, NativeObject::Multigraph { mult: m2 }) =
            (small, large)
        else {
            panic!("wrong variant");
        };
        let r1 = m1.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let r2 = m2.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        // increasing vertex map with dominating multiplicities
        increasing_injection(r1, r2, |prefix, cand| {
            let t = prefix.len();
            prefix.iter().enumerate().all(|(s, &h)| {
                let need = m1.get(&(s as u8 + 1, t as u8 + 1)).copied().unwrap_or(0);
                need == 0 || m2.get(&(h as u8 + 1, cand as u8 + 1)).copied().unwrap_or(0) >= need
            })
        })
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "multigraph generation capped at size {}",
                self.max_size()
            )));
        }
        let mut out = Vec::new();
        if size == 0 {
            out.push(NativeObject::Multigraph { mult: BTreeMap::new() });
            return Ok(out);
        }
        for r in 2..=2 * size {
            for s in 1..=size {
                for support in covering_edge_sets(r, 2, s) {
                    // distribute `size` copies over s edges, each at least one
                    for comp in compositions(size, s) {
                        let mult = support
                            .iter()
                            .zip(&comp)
                            .map(|(e, &m)| ((e[0], e[1]), m as u32))
                            .collect();
                        out.push(NativeObject::Multigraph { mult });
                    }
                }
            }
        }
        Ok(out)
    }

    fn max_size(&self) -> usize {
        5
    }
}

/// All `s`-tuples of positive integers summing to `m`.
fn compositions(m: usize, s: usize) -> Vec<Vec<usize>> {
    if s == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    if m < s {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(s);
    fn rec(m: usize, s: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if s == 1 {
            buf.push(m);
            out.push(buf.clone());
            buf.pop();
            return;
        }
        for first in 1..=m - (s - 1) {
            buf.push(first);
            rec(m - first, s - 1, buf, out);
            buf.pop();
        }
    }
    rec(m, s, &mut buf, &mut out);
    out
}

/// k-uniform hypergraphs without isolated vertices under the ordered
/// subhypergraph relation, measured by edge count. The color count follows
/// the closed two-object formula.
pub struct HypergraphAdapter {
    k: usize,
    color_of: HashMap<(Vec<u8>, Vec<u8>), u8>,
    configs: Vec<(Vec<u8>, Vec<u8>)>,
}

impl HypergraphAdapter {
    pub fn new(k: usize) -> HypergraphAdapter {
        assert!((2..=4).contains(&k), "hypergraph adapter ships for k in 2..=4");
        let configs = two_edge_configs(k);
        assert_eq!(configs.len(), hypergraph_two_object_count(k));
        let color_of = configs
            .iter()
            .enumerate()
            .map(|(t, c)| (c.clone(), t as u8 + 1))
            .collect();
        HypergraphAdapter { k, color_of, configs }
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }
}

impl ClassAdapter for HypergraphAdapter {
    fn name(&self) -> &str {
        match self.k {
            2 => "hypergraph2",
            3 => "hypergraph3",
            _ => "hypergraph4",
        }
    }

    fn atom_count(&self) -> usize {
        1
    }

    fn two_object_count(&self) -> usize {
        hypergraph_two_object_count(self.k)
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(self.two_object_count() as u8)
    }

    fn legend(&self) -> Vec<String> {
        self.configs.iter().map(config_literal).collect()
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        let edges = parse_edge_sets(s, self.k)?;
        let obj = NativeObject::Hypergraph { k: self.k, edges };
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::Hypergraph { edges, .. } => edges
                .iter()
                .map(|e| e.iter().map(|v| v.to_string()).collect::<String>())
                .collect::<Vec<_>>()
                .join(", "),
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::Hypergraph { edges, .. } => edges.len(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::Hypergraph { k, edges } => {
                if *k != self.k {
                    return Err(Error::InvalidObject(format!(
                        "uniformity mismatch: adapter k={}, object k={k}",
                        self.k
                    )));
                }
                for e in edges {
                    if e.len() != self.k || !e.windows(2).all(|w| w[0] < w[1]) || e[0] < 1 {
                        return Err(Error::InvalidObject(format!("bad edge {e:?}")));
                    }
                }
                if !edges.windows(2).all(|w| w[0] < w[1]) {
                    return Err(Error::InvalidObject("edges must be sorted".into()));
                }
                check_edge_cover(edges)
            }
            _ => Err(Error::InvalidObject("expected a hypergraph".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::Hypergraph { edges, .. } = obj else {
            unreachable!()
        };
        let l = self.two_object_count() as u8;
        Ok(Coloring::from_fn(edges.len(), l, |i, j| {
            let key = relabel_pair(&edges[i - 1], &edges[j - 1]);
            self.color_of[&key]
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (
            NativeObject::Hypergraph { edges: e1, .. },
            NativeObject::Hypergraph { edges: e2, .. },
        ) = (small, large)
        else {
            panic!("wrong variant");
        };
        let r1 = e1.iter().flatten().copied().max().unwrap_or(0) as usize;
        let r2 = e2.iter().flatten().copied().max().unwrap_or(0) as usize;
        increasing_injection(r1, r2, |prefix, cand| {
            let t = prefix.len();
            // check every small edge whose maximum vertex is t+1
            let mut mapped = vec![0u8; t + 1];
            for (s, &h) in prefix.iter().enumerate() {
                mapped[s] = h as u8 + 1;
            }
            mapped[t] = cand as u8 + 1;
            e1.iter()
                .filter(|e| *e.last().unwrap() as usize == t + 1)
                .all(|e| {
                    let image: Vec<u8> = e.iter().map(|&v| mapped[v as usize - 1]).collect();
                    e2.binary_search(&image).is_ok()
                })
        })
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "hypergraph generation capped at size {}",
                self.max_size()
            )));
        }
        let mut out = Vec::new();
        if size == 0 {
            out.push(NativeObject::Hypergraph { k: self.k, edges: Vec::new() });
            return Ok(out);
        }
        for r in self.k..=self.k * size {
            for edges in covering_edge_sets(r, self.k, size) {
                out.push(NativeObject::Hypergraph { k: self.k, edges });
            }
        }
        Ok(out)
    }

    fn max_size(&self) -> usize {
        if self.k == 2 {
            6
        } else {
            4
        }
    }
}

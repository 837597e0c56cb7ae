//! Adapters for the binary classes of objects that embed into edge-colored
//! complete graphs: permutations, signed permutations, ordered words, set
//! partitions, ordered graphs under the induced and plain subgraph orders,
//! graphs / multigraphs / uniform hypergraphs counted by edges, and words
//! over a finite alphabet.
//!
//! Each adapter fixes a color legend, encodes native objects into colorings
//! over its color poset, provides an independent native containment oracle,
//! and exhaustively generates objects of a given size. The encoding is size
//! preserving, order preserving in both directions, and injective on objects
//! of size at least 2; its image is an ideal.

mod edge_counted;
mod graphs;
mod partitions;
mod permutations;
mod words;

pub use edge_counted::{EdgeGraphAdapter, HypergraphAdapter, MultigraphAdapter};
pub use graphs::{OrderedGraphAdapter, SubgraphOrderAdapter};
pub use partitions::SetPartitionAdapter;
pub use permutations::{PermutationAdapter, SignedPermutationAdapter};
pub use words::{OrderedWordAdapter, WordAdapter};

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::poset::ColorPoset;

/// A native object of one of the supported classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NativeObject {
    /// One-line notation, a bijection word over `[n]`.
    Permutation(Vec<u8>),
    /// Permutation word plus a sign per position (`true` = minus).
    SignedPermutation { word: Vec<u8>, negative: Vec<bool> },
    /// A map `[n] -> [m]` whose image is exactly `[m]`.
    OrderedWord(Vec<u8>),
    /// Block index per element, numbered by first appearance (a restricted
    /// growth string).
    SetPartition(Vec<u8>),
    /// A simple graph on `[n]`, isolated vertices allowed.
    Graph { n: usize, edges: BTreeSet<(u8, u8)> },
    /// A simple graph without isolated vertices, measured by edge count;
    /// edges sorted lexicographically cover `[max]`.
    EdgeGraph { edges: Vec<(u8, u8)> },
    /// A multigraph without isolated vertices, measured by total edge
    /// multiplicity.
    Multigraph { mult: BTreeMap<(u8, u8), u32> },
    /// A k-uniform hypergraph without isolated vertices, measured by edge
    /// count; edges are sorted k-sets.
    Hypergraph { k: usize, edges: Vec<Vec<u8>> },
    /// A word over the alphabet `1..=a`.
    Word(Vec<u8>),
}

/// An adapter realizing one binary class of objects. Stateless and safe to
/// share across threads.
pub trait ClassAdapter: Send + Sync {
    /// Registry name.
    fn name(&self) -> &str;

    /// Number of size-1 objects (atoms).
    fn atom_count(&self) -> usize;

    /// Number of size-2 objects; equals the color count of the poset. Where
    /// a closed formula exists (uniform hypergraphs) this evaluates it.
    fn two_object_count(&self) -> usize;

    /// The color poset the class embeds into. Discrete for every class
    /// except the plain subgraph order, which is the two-element chain.
    fn color_poset(&self) -> ColorPoset;

    /// Human-readable description per color, index `c - 1`.
    fn legend(&self) -> Vec<String>;

    /// Parses a native literal.
    fn parse(&self, s: &str) -> Result<NativeObject>;

    /// Canonical native literal.
    fn literal(&self, obj: &NativeObject) -> String;

    /// Object size: the atom count of the object (length, vertex count, or
    /// edge count depending on the class).
    fn size(&self, obj: &NativeObject) -> usize;

    /// Validates variant and well-formedness.
    fn validate(&self, obj: &NativeObject) -> Result<()>;

    /// Encodes a native object as a coloring on `size(obj)` vertices whose
    /// edge colors are the pairwise atom restrictions under the legend.
    fn encode(&self, obj: &NativeObject) -> Result<Coloring>;

    /// Native containment oracle, implemented directly from the class
    /// definition, independent of `encode`.
    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool;

    /// Exhaustive, duplicate-free list of objects of the given size.
    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>>;

    /// Largest size `generate_all` accepts.
    fn max_size(&self) -> usize;
}

/// Generic backtracking search for an increasing injection of `m` positions
/// into `n` positions. `ok(prefix, cand)` decides whether pattern position
/// `prefix.len()` (0-based) may map to host position `cand` given the
/// already chosen prefix.
pub(crate) fn increasing_injection(
    m: usize,
    n: usize,
    mut ok: impl FnMut(&[usize], usize) -> bool,
) -> bool {
    if m > n {
        return false;
    }
    fn rec(
        prefix: &mut Vec<usize>,
        m: usize,
        n: usize,
        lo: usize,
        ok: &mut impl FnMut(&[usize], usize) -> bool,
    ) -> bool {
        let t = prefix.len();
        if t == m {
            return true;
        }
        for cand in lo..=(n - (m - t)) {
            if ok(prefix, cand) {
                prefix.push(cand);
                if rec(prefix, m, n, cand + 1, ok) {
                    return true;
                }
                prefix.pop();
            }
        }
        false
    }
    rec(&mut Vec::with_capacity(m), m, n, 0, &mut ok)
}

/// Parses a small positive integer sequence: either plain digits (`"231"`)
/// or comma separated (`"2,3,1"`, used above 9).
pub(crate) fn parse_digit_word(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::InvalidObject(format!("bad entry `{t}` in `{s}`")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d >= 1)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidObject(format!("bad digit `{c}` in `{s}`")))
            })
            .collect()
    }
}

pub(crate) fn format_digit_word(w: &[u8]) -> String {
    if w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Looks up an adapter by registry name.
pub fn adapter_by_name(name: &str) -> Result<Arc<dyn ClassAdapter>> {
    let a: Arc<dyn ClassAdapter> = match name {
        "permutation" => Arc::new(PermutationAdapter),
        "signed-permutation" => Arc::new(SignedPermutationAdapter),
        "ordered-word" => Arc::new(OrderedWordAdapter),
        "set-partition" => Arc::new(SetPartitionAdapter),
        "ordered-graph" => Arc::new(OrderedGraphAdapter),
        "subgraph-order" => Arc::new(SubgraphOrderAdapter),
        "edge-graph" => Arc::new(EdgeGraphAdapter::new()),
        "multigraph" => Arc::new(MultigraphAdapter::new()),
        "hypergraph2" => Arc::new(HypergraphAdapter::new(2)),
        "hypergraph3" => Arc::new(HypergraphAdapter::new(3)),
        "word2" => Arc::new(WordAdapter::new(2)),
        "word3" => Arc::new(WordAdapter::new(3)),
        other => return Err(Error::UnknownAdapter(other.to_string())),
    };
    Ok(a)
}

/// All registered adapters, one instance each, in registry order.
pub fn all_adapters() -> Vec<Arc<dyn ClassAdapter>> {
    [
        "permutation",
        "signed-permutation",
        "ordered-word",
        "set-partition",
        "ordered-graph",
        "subgraph-order",
        "edge-graph",
        "multigraph",
        "hypergraph2",
        "hypergraph3",
        "word2",
        "word3",
    ]
    .iter()
    .map(|n| adapter_by_name(n).expect("registered"))
    .collect()
}

//! Ordered graphs on `[n]` under the induced subgraph order (discrete
//! two-color poset) and under the plain subgraph order (where a non-edge
//! may map onto an edge, giving the two-element chain).

use std::collections::BTreeSet;

use super::{increasing_injection, ClassAdapter, NativeObject};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::poset::ColorPoset;

fn parse_graph(s: &str) -> Result<NativeObject> {
    // "n: i-j, i-j, ..." with the vertex count up front
    let s = s.trim();
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidObject(format!("expected `n: edges` in `{s}`")))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::InvalidObject(format!("bad vertex count `{head}`")))?;
    let mut edges = BTreeSet::new();
    for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (i, j) = parse_edge(part, n)?;
        if !edges.insert((i, j)) {
            return Err(Error::InvalidObject(format!("edge `{part}` listed twice")));
        }
    }
    Ok(NativeObject::Graph { n, edges })
}

pub(super) fn parse_edge(part: &str, n: usize) -> Result<(u8, u8)> {
    let (i, j) = part
        .split_once('-')
        .ok_or_else(|| Error::InvalidObject(format!("bad edge `{part}`")))?;
    let i: usize = i
        .trim()
        .parse()
        .map_err(|_| Error::InvalidObject(format!("bad vertex `{i}`")))?;
    let j: usize = j
        .trim()
        .parse()
        .map_err(|_| Error::InvalidObject(format!("bad vertex `{j}`")))?;
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(Error::InvalidObject(format!("edge `{part}` out of range")));
    }
    Ok((i.min(j) as u8, i.max(j) as u8))
}

fn graph_literal(n: usize, edges: &BTreeSet<(u8, u8)>) -> String {
    let list: Vec<String> = edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
    format!("{n}: {}", list.join(", "))
}

fn encode_graph(n: usize, edges: &BTreeSet<(u8, u8)>) -> Coloring {
    Coloring::from_fn(n, 2, |i, j| {
        if edges.contains(&(i as u8, j as u8)) {
            2
        } else {
            1
        }
    })
}

fn generate_graphs(n: usize) -> Vec<NativeObject> {
    let pairs: Vec<(u8, u8)> = (1..=n as u8)
        .flat_map(|i| (i + 1..=n as u8).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(t, _)| mask >> t & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        out.push(NativeObject::Graph { n, edges });
    }
    out
}

fn validate_graph(obj: &NativeObject) -> Result<()> {
    match obj {
        NativeObject::Graph { n, edges } => {
            for &(i, j) in edges {
                if i >= j || i < 1 || j as usize > *n {
                    return Err(Error::InvalidObject(format!("edge ({i},{j}) out of range")));
                }
            }
            Ok(())
        }
        _ => Err(Error::InvalidObject("expected a graph".into())),
    }
}

fn graph_contains(
    small: &NativeObject,
    large: &NativeObject,
    induced: bool,
) -> bool {
    let (NativeObject::Graph { n: n1, edges: e1 }, NativeObject::Graph { n: n2, edges: e2 }) =
        (small, large)
    else {
        panic!("wrong variant");
    };
    increasing_injection(*n1, *n2, |prefix, cand| {
        let t = prefix.len();
        prefix.iter().enumerate().all(|(s, &h)| {
            let pat = e1.contains(&(s as u8 + 1, t as u8 + 1));
            let hos = e2.contains(&(h as u8 + 1, cand as u8 + 1));
            if induced {
                pat == hos
            } else {
                !pat || hos
            }
        })
    })
}

macro_rules! graph_adapter_common {
    () => {
        fn atom_count(&self) -> usize {
            1
        }

        fn two_object_count(&self) -> usize {
            2
        }

        fn legend(&self) -> Vec<String> {
            vec!["non-edge".into(), "edge".into()]
        }

        fn parse(&self, s: &str) -> Result<NativeObject> {
            parse_graph(s)
        }

        fn literal(&self, obj: &NativeObject) -> String {
            match obj {
                NativeObject::Graph { n, edges } => graph_literal(*n, edges),
                _ => panic!("wrong variant"),
            }
        }

        fn size(&self, obj: &NativeObject) -> usize {
            match obj {
                NativeObject::Graph { n, .. } => *n,
                _ => panic!("wrong variant"),
            }
        }

        fn validate(&self, obj: &NativeObject) -> Result<()> {
            validate_graph(obj)
        }

        fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
            self.validate(obj)?;
            let NativeObject::Graph { n, edges } = obj else {
                unreachable!()
            };
            Ok(encode_graph(*n, edges))
        }

        fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
            if size > self.max_size() {
                return Err(Error::BoundExceeded(format!(
                    "graph generation capped at size {}",
                    self.max_size()
                )));
            }
            Ok(generate_graphs(size))
        }

        fn max_size(&self) -> usize {
            7
        }
    };
}

/// Graphs with the ordered induced subgraph relation; this class coincides
/// with the two-colored complete graphs over the discrete poset.
pub struct OrderedGraphAdapter;

impl ClassAdapter for OrderedGraphAdapter {
    fn name(&self) -> &str {
        "ordered-graph"
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(2)
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        graph_contains(small, large, true)
    }

    graph_adapter_common!();
}

/// Graphs with the ordered (not necessarily induced) subgraph relation:
/// edges must map onto edges, non-edges are unconstrained. The two size-2
/// objects are comparable, so the poset is the chain `1 < 2`.
pub struct SubgraphOrderAdapter;

impl ClassAdapter for SubgraphOrderAdapter {
    fn name(&self) -> &str {
        "subgraph-order"
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::linear(2)
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        graph_contains(small, large, false)
    }

    graph_adapter_common!();
}

//! Set partitions of `[n]` with the induced pattern order: `P <= Q` iff
//! some increasing selection of elements of `Q` reproduces the block
//! structure of `P` exactly.

use super::{ClassAdapter, NativeObject, increasing_injection};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::poset::ColorPoset;

/// Canonical form: `blocks[i]` is the block index of element `i + 1`,
/// blocks numbered by first appearance. Legend: color 1 = separate blocks,
/// color 2 = same block; the same-block color is transitive on the image.
pub struct SetPartitionAdapter;

fn canonicalize(blocks: &[u8]) -> Vec<u8> {
    let mut map = std::collections::HashMap::new();
    let mut next = 1u8;
    blocks
        .iter()
        .map(|&b| {
            *map.entry(b).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        })
        .collect()
}

impl ClassAdapter for SetPartitionAdapter {
    fn name(&self) -> &str {
        "set-partition"
    }

    fn atom_count(&self) -> usize {
        1
    }

    fn two_object_count(&self) -> usize {
        2
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(2)
    }

    fn legend(&self) -> Vec<String> {
        vec!["separate blocks".into(), "same block".into()]
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        // block list form: "13|2" puts 1 and 3 together, 2 alone
        let s = s.trim();
        if s.is_empty() {
            return Ok(NativeObject::SetPartition(Vec::new()));
        }
        let mut assignment: Vec<Option<u8>> = Vec::new();
        for (b, block) in s.split('|').enumerate() {
            for c in block.trim().chars() {
                let d = c
                    .to_digit(10)
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::InvalidObject(format!("bad element `{c}` in `{s}`")))?
                    as usize;
                if assignment.len() < d {
                    assignment.resize(d, None);
                }
                if assignment[d - 1].is_some() {
                    return Err(Error::InvalidObject(format!(
                        "element {d} listed twice in `{s}`"
                    )));
                }
                assignment[d - 1] = Some(b as u8 + 1);
            }
        }
        let blocks: Vec<u8> = assignment
            .iter()
            .enumerate()
            .map(|(i, a)| {
                a.ok_or_else(|| Error::InvalidObject(format!("element {} missing in `{s}`", i + 1)))
            })
            .collect::<Result<_>>()?;
        let obj = NativeObject::SetPartition(canonicalize(&blocks));
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::SetPartition(blocks) => {
                let m = blocks.iter().copied().max().unwrap_or(0);
                let mut parts = vec![String::new(); m as usize];
                for (i, &b) in blocks.iter().enumerate() {
                    parts[b as usize - 1].push_str(&(i + 1).to_string());
                }
                parts.join("|")
            }
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::SetPartition(blocks) => blocks.len(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::SetPartition(blocks) => {
                if blocks == &canonicalize(blocks) {
                    Ok(())
                } else {
                    Err(Error::InvalidObject(
                        "blocks must be numbered by first appearance".into(),
                    ))
                }
            }
            _ => Err(Error::InvalidObject("expected a set partition".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::SetPartition(blocks) = obj else {
            unreachable!()
        };
        Ok(Coloring::from_fn(blocks.len(), 2, |i, j| {
            if blocks[i - 1] == blocks[j - 1] {
                2
            } else {
                1
            }
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (NativeObject::SetPartition(p), NativeObject::SetPartition(q)) = (small, large) else {
            panic!("wrong variant");
        };
        increasing_injection(p.len(), q.len(), |prefix, cand| {
            let t = prefix.len();
            prefix
                .iter()
                .enumerate()
                .all(|(s, &h)| (p[s] == p[t]) == (q[h] == q[cand]))
        })
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "set partition generation capped at size {}",
                self.max_size()
            )));
        }
        let mut out = Vec::new();
        fn rec(buf: &mut Vec<u8>, max: u8, size: usize, out: &mut Vec<NativeObject>) {
            if buf.len() == size {
                out.push(NativeObject::SetPartition(buf.clone()));
                return;
            }
            for b in 1..=max + 1 {
                buf.push(b);
                rec(buf, max.max(b), size, out);
                buf.pop();
            }
        }
        rec(&mut Vec::with_capacity(size), 0, size, &mut out);
        Ok(out)
    }

    fn max_size(&self) -> usize {
        9
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_block_lists() {
        let a = SetPartitionAdapter;
        let p = a.parse("13|2").unwrap();
        assert_eq!(p, NativeObject::SetPartition(vec![1, 2, 1]));
        assert_eq!(a.literal(&p), "13|2");
        assert!(a.parse("12|1").is_err());
        assert!(a.parse("13").is_err()); // element 2 missing
    }

    #[test]
    fn together_pattern_gets_the_same_block_color() {
        let a = SetPartitionAdapter;
        let together = a.parse("12").unwrap();
        assert_eq!(a.encode(&together).unwrap().color(1, 2), 2);
        let apart = a.parse("1|2").unwrap();
        assert_eq!(a.encode(&apart).unwrap().color(1, 2), 1);
    }

    #[test]
    fn apart_does_not_embed_into_together() {
        let a = SetPartitionAdapter;
        let apart = a.parse("1|2").unwrap();
        let together = a.parse("12").unwrap();
        assert!(!a.native_contains(&apart, &together));
        assert!(a.native_contains(&together, &a.parse("134|2").unwrap()));
    }

    #[test]
    fn bell_counts() {
        let a = SetPartitionAdapter;
        let counts: Vec<usize> = (0..=6).map(|n| a.generate_all(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }
}

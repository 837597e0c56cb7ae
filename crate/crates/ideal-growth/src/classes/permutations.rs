//! Permutations and signed permutations with the classical pattern
//! containment order.

use itertools::Itertools;

use super::{format_digit_word, increasing_injection, parse_digit_word, ClassAdapter, NativeObject};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::poset::ColorPoset;

fn check_permutation_word(word: &[u8]) -> Result<()> {
    let n = word.len();
    let mut seen = vec![false; n];
    for &v in word {
        if v < 1 || v as usize > n || seen[v as usize - 1] {
            return Err(Error::InvalidObject(format!(
                "`{}` is not a permutation word",
                format_digit_word(word)
            )));
        }
        seen[v as usize - 1] = true;
    }
    Ok(())
}

/// Plain permutations. Legend: color 1 = the increasing 2-pattern, color 2
/// = the decreasing one.
pub struct PermutationAdapter;

impl ClassAdapter for PermutationAdapter {
    fn name(&self) -> &str {
        "permutation"
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
        vec!["ascent (pattern 12)".into(), "descent (pattern 21)".into()]
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        let obj = NativeObject::Permutation(parse_digit_word(s)?);
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::Permutation(w) => format_digit_word(w),
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::Permutation(w) => w.len(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::Permutation(w) => check_permutation_word(w),
            _ => Err(Error::InvalidObject("expected a permutation".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::Permutation(w) = obj else {
            unreachable!()
        };
        Ok(Coloring::from_fn(w.len(), 2, |i, j| {
            if w[i - 1] < w[j - 1] {
                1
            } else {
                2
            }
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (NativeObject::Permutation(p), NativeObject::Permutation(q)) = (small, large) else {
            panic!("wrong variant");
        };
        increasing_injection(p.len(), q.len(), |prefix, cand| {
            let t = prefix.len();
            prefix
                .iter()
                .enumerate()
                .all(|(s, &h)| (p[s] < p[t]) == (q[h] < q[cand]))
        })
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "permutation generation capped at size {}",
                self.max_size()
            )));
        }
        Ok((1..=size as u8)
            .permutations(size)
            .map(NativeObject::Permutation)
            .collect())
    }

    fn max_size(&self) -> usize {
        10
    }
}

/// Permutations with a white/black sign on every position; embeddings must
/// preserve signs. Legend index packs (pattern, sign of the smaller
/// position, sign of the larger position).
pub struct SignedPermutationAdapter;

fn signed_color(pattern_desc: bool, neg_i: bool, neg_j: bool) -> u8 {
    1 + 4 * pattern_desc as u8 + 2 * neg_i as u8 + neg_j as u8
}

impl ClassAdapter for SignedPermutationAdapter {
    fn name(&self) -> &str {
        "signed-permutation"
    }

    fn atom_count(&self) -> usize {
        2
    }

    fn two_object_count(&self) -> usize {
        8
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(8)
    }

    fn legend(&self) -> Vec<String> {
        let mut out = Vec::new();
        for desc in [false, true] {
            for ni in [false, true] {
                for nj in [false, true] {
                    out.push(format!(
                        "pattern {}, signs {}{}",
                        if desc { "21" } else { "12" },
                        if ni { '-' } else { '+' },
                        if nj { '-' } else { '+' },
                    ));
                }
            }
        }
        out
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        let s = s.trim();
        let mut word = Vec::new();
        let mut negative = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let d = c
                .to_digit(10)
                .filter(|&d| d >= 1)
                .ok_or_else(|| Error::InvalidObject(format!("bad digit `{c}` in `{s}`")))?;
            let sign = chars.next().ok_or_else(|| {
                Error::InvalidObject(format!("missing sign after `{c}` in `{s}`"))
            })?;
            word.push(d as u8);
            negative.push(match sign {
                '+' => false,
                '-' => true,
                other => {
                    return Err(Error::InvalidObject(format!("bad sign `{other}` in `{s}`")))
                }
            });
        }
        let obj = NativeObject::SignedPermutation { word, negative };
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::SignedPermutation { word, negative } => word
                .iter()
                .zip(negative)
                .map(|(v, &n)| format!("{v}{}", if n { '-' } else { '+' }))
                .collect(),
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::SignedPermutation { word, .. } => word.len(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::SignedPermutation { word, negative } => {
                if word.len() != negative.len() {
                    return Err(Error::InvalidObject("sign vector length mismatch".into()));
                }
                check_permutation_word(word)
            }
            _ => Err(Error::InvalidObject("expected a signed permutation".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::SignedPermutation { word, negative } = obj else {
            unreachable!()
        };
        Ok(Coloring::from_fn(word.len(), 8, |i, j| {
            signed_color(word[i - 1] > word[j - 1], negative[i - 1], negative[j - 1])
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (
            NativeObject::SignedPermutation { word: p, negative: pn },
            NativeObject::SignedPermutation { word: q, negative: qn },
        ) = (small, large)
        else {
            panic!("wrong variant");
        };
        increasing_injection(p.len(), q.len(), |prefix, cand| {
            let t = prefix.len();
            pn[t] == qn[cand]
                && prefix
                    .iter()
                    .enumerate()
                    .all(|(s, &h)| (p[s] < p[t]) == (q[h] < q[cand]))
        })
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "signed permutation generation capped at size {}",
                self.max_size()
            )));
        }
        let mut out = Vec::new();
        for word in (1..=size as u8).permutations(size) {
            for mask in 0u32..(1 << size) {
                let negative = (0..size).map(|i| mask >> i & 1 == 1).collect();
                out.push(NativeObject::SignedPermutation {
                    word: word.clone(),
                    negative,
                });
            }
        }
        Ok(out)
    }

    fn max_size(&self) -> usize {
        7
    }
}

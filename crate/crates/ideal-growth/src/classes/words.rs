//! Ordered words (surjections onto an initial segment with the pattern
//! order) and plain words over a finite alphabet with the subsequence order.

use super::{format_digit_word, increasing_injection, parse_digit_word, ClassAdapter, NativeObject};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::poset::ColorPoset;

/// Ordered words: maps `q: [n] -> [m]` with image exactly `[m]`, compared by
/// the `<, >, =` pattern of subsequences. Legend: 1 = rises, 2 = falls,
/// 3 = repeats.
pub struct OrderedWordAdapter;

impl ClassAdapter for OrderedWordAdapter {
    fn name(&self) -> &str {
        "ordered-word"
    }

    fn atom_count(&self) -> usize {
        1
    }

    fn two_object_count(&self) -> usize {
        3
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(3)
    }

    fn legend(&self) -> Vec<String> {
        vec![
            "rise (pattern 12)".into(),
            "fall (pattern 21)".into(),
            "repeat (pattern 11)".into(),
        ]
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        let obj = NativeObject::OrderedWord(parse_digit_word(s)?);
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::OrderedWord(w) => format_digit_word(w),
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::OrderedWord(w) => w.len(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::OrderedWord(w) => {
                let m = w.iter().copied().max().unwrap_or(0);
                let mut seen = vec![false; m as usize];
                for &v in w {
                    if v < 1 {
                        return Err(Error::InvalidObject("entries must be positive".into()));
                    }
                    seen[v as usize - 1] = true;
                }
                if seen.iter().all(|&s| s) {
                    Ok(())
                } else {
                    Err(Error::InvalidObject(format!(
                        "image of `{}` is not an initial segment",
                        format_digit_word(w)
                    )))
                }
            }
            _ => Err(Error::InvalidObject("expected an ordered word".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::OrderedWord(w) = obj else {
            unreachable!()
        };
        Ok(Coloring::from_fn(w.len(), 3, |i, j| {
            match w[i - 1].cmp(&w[j - 1]) {
                std::cmp::Ordering::Less => 1,
                std::cmp::Ordering::Greater => 2,
                std::cmp::Ordering::Equal => 3,
            }
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (NativeObject::OrderedWord(p), NativeObject::OrderedWord(q)) = (small, large) else {
            panic!("wrong variant");
        };
        increasing_injection(p.len(), q.len(), |prefix, cand| {
            let t = prefix.len();
            prefix
                .iter()
                .enumerate()
                .all(|(s, &h)| p[s].cmp(&p[t]) == q[h].cmp(&q[cand]))
        })
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "ordered word generation capped at size {}",
                self.max_size()
            )));
        }
        if size == 0 {
            return Ok(vec![NativeObject::OrderedWord(Vec::new())]);
        }
        let mut out = Vec::new();
        let mut buf = vec![1u8; size];
        // words over [m] for every m, kept when surjective
        for m in 1..=size as u8 {
            loop {
                let mut seen = vec![false; m as usize];
                for &v in &buf {
                    seen[v as usize - 1] = true;
                }
                if seen.iter().all(|&s| s) {
                    out.push(NativeObject::OrderedWord(buf.clone()));
                }
                let mut pos = 0;
                loop {
                    if pos == size {
                        break;
                    }
                    if buf[pos] < m {
                        buf[pos] += 1;
                        break;
                    }
                    buf[pos] = 1;
                    pos += 1;
                }
                if pos == size {
                    buf.fill(1);
                    break;
                }
            }
        }
        Ok(out)
    }

    fn max_size(&self) -> usize {
        7
    }
}

/// Words over the alphabet `1..=a` with the subsequence relation. Literals
/// use letters (`a` = 1, `b` = 2, ...). Legend packs the ordered letter
/// pair of the two positions.
pub struct WordAdapter {
    alphabet: u8,
}

impl WordAdapter {
    pub fn new(alphabet: u8) -> WordAdapter {
        assert!(alphabet >= 1 && alphabet <= 26);
        WordAdapter { alphabet }
    }
}

impl ClassAdapter for WordAdapter {
    fn name(&self) -> &str {
        match self.alphabet {
            2 => "word2",
            3 => "word3",
            _ => "word",
        }
    }

    fn atom_count(&self) -> usize {
        self.alphabet as usize
    }

    fn two_object_count(&self) -> usize {
        (self.alphabet as usize).pow(2)
    }

    fn color_poset(&self) -> ColorPoset {
        ColorPoset::discrete(self.alphabet * self.alphabet)
    }

    fn legend(&self) -> Vec<String> {
        let mut out = Vec::new();
        for x in 0..self.alphabet {
            for y in 0..self.alphabet {
                out.push(format!(
                    "letters {}{}",
                    (b'a' + x) as char,
                    (b'a' + y) as char
                ));
            }
        }
        out
    }

    fn parse(&self, s: &str) -> Result<NativeObject> {
        let mut w = Vec::new();
        for c in s.trim().chars() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidObject(format!("bad letter `{c}` in `{s}`")));
            }
            w.push(c as u8 - b'a' + 1);
        }
        let obj = NativeObject::Word(w);
        self.validate(&obj)?;
        Ok(obj)
    }

    fn literal(&self, obj: &NativeObject) -> String {
        match obj {
            NativeObject::Word(w) => w.iter().map(|&x| (b'a' + x - 1) as char).collect(),
            _ => panic!("wrong variant"),
        }
    }

    fn size(&self, obj: &NativeObject) -> usize {
        match obj {
            NativeObject::Word(w) => w.len(),
            _ => panic!("wrong variant"),
        }
    }

    fn validate(&self, obj: &NativeObject) -> Result<()> {
        match obj {
            NativeObject::Word(w) => {
                if w.iter().all(|&x| x >= 1 && x <= self.alphabet) {
                    Ok(())
                } else {
                    Err(Error::InvalidObject(format!(
                        "letters must lie in 1..={}",
                        self.alphabet
                    )))
                }
            }
            _ => Err(Error::InvalidObject("expected a word".into())),
        }
    }

    fn encode(&self, obj: &NativeObject) -> Result<Coloring> {
        self.validate(obj)?;
        let NativeObject::Word(w) = obj else {
            unreachable!()
        };
        let a = self.alphabet;
        Ok(Coloring::from_fn(w.len(), a * a, |i, j| {
            (w[i - 1] - 1) * a + w[j - 1]
        }))
    }

    fn native_contains(&self, small: &NativeObject, large: &NativeObject) -> bool {
        let (NativeObject::Word(p), NativeObject::Word(q)) = (small, large) else {
            panic!("wrong variant");
        };
        // greedy subsequence scan
        let mut it = q.iter();
        p.iter().all(|c| it.any(|x| x == c))
    }

    fn generate_all(&self, size: usize) -> Result<Vec<NativeObject>> {
        if size > self.max_size() {
            return Err(Error::BoundExceeded(format!(
                "word generation capped at size {}",
                self.max_size()
            )));
        }
        let mut out = Vec::new();
        let total = (self.alphabet as u64).pow(size as u32);
        for code in 0..total {
            let mut c = code;
            let w = (0..size)
                .map(|_| {
                    let d = (c % self.alphabet as u64) as u8 + 1;
                    c /= self.alphabet as u64;
                    d
                })
                .collect();
            out.push(NativeObject::Word(w));
        }
        Ok(out)
    }

    fn max_size(&self) -> usize {
        12
    }
}

//! `CYCLEFREE v1` text format.
//!
//! ```text
//! CYCLEFREE v1
//! n=<n> d=<d> q=<q>
//! <x> <y> <digits>      (n² lines, lexicographic in (x, y))
//! ```

use std::fmt;
use std::str::FromStr;

use super::{Label, Labeling};
use crate::error::{Error, Result};

const MAGIC: &str = "CYCLEFREE v1";

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{MAGIC}")?;
        writeln!(f, "n={} d={} q={}", self.n, self.d, self.q)?;
        for x in 1..=self.n {
            for y in 1..=self.n {
                writeln!(f, "{x} {y} {}", self.get(x, y))?;
            }
        }
        Ok(())
    }
}

impl Labeling {
    pub fn encode(&self) -> String {
        self.to_string()
    }

    pub fn decode(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, l)) if l.trim_end() == MAGIC => {}
            _ => return Err(Error::parse(1, format!("expected header {MAGIC:?}"))),
        }
        let (lno, params) = lines
            .next()
            .ok_or_else(|| Error::parse(2, "missing parameter line"))?;
        let fields = parse_fields(lno, params, &["n", "d", "q"])?;
        let (n, d) = (fields[0], fields[1]);
        let q = u32::try_from(fields[2]).map_err(|_| Error::parse(lno, "q out of range"))?;
        if n < 1 || !(2..=36).contains(&q) {
            return Err(Error::parse(lno, format!("unsupported n={n} q={q}")));
        }

        let mut entries = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                let expect = 3 + entries.len();
                let (lno, line) = lines
                    .next()
                    .ok_or_else(|| Error::parse(expect, format!("missing entry for ({x},{y})")))?;
                let mut parts = line.split_whitespace();
                let px = parts.next().and_then(|t| t.parse::<usize>().ok());
                let py = parts.next().and_then(|t| t.parse::<usize>().ok());
                if (px, py) != (Some(x), Some(y)) {
                    return Err(Error::parse(lno, format!("expected edge ({x},{y})")));
                }
                let digits = parts.next().unwrap_or("");
                if parts.next().is_some() || digits.chars().count() != d {
                    return Err(Error::parse(lno, format!("expected {d} digits")));
                }
                let label = Label::from_digit_string(digits, q)
                    .map_err(|e| Error::parse(lno, e.to_string()))?;
                entries.push(label);
            }
        }
        if let Some((lno, l)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(lno, format!("trailing content {l:?}")));
        }
        Ok(Labeling { n, d, q, entries })
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Labeling::decode(s)
    }
}

/// Parses `a=<int> b=<int> ...` with exactly the given keys in order.
pub(crate) fn parse_fields(lno: usize, line: &str, keys: &[&str]) -> Result<Vec<usize>> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != keys.len() {
        return Err(Error::parse(lno, format!("expected fields {keys:?}")));
    }
    toks.iter()
        .zip(keys)
        .map(|(tok, key)| {
            tok.strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| Error::parse(lno, format!("expected {key}=<integer>, got {tok:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{construct_random, construct_recursive};
    use proptest::prelude::*;

    #[test]
    fn gamma2_file() {
        let text = construct_recursive(2).unwrap().encode();
        assert_eq!(
            text,
            "CYCLEFREE v1\nn=2 d=6 q=2\n1 1 100000\n1 2 010000\n2 1 001000\n2 2 000100\n"
        );
    }

    #[test]
    fn rejects_malformed() {
        let good = construct_recursive(2).unwrap().encode();
        assert!(Labeling::decode(&good.replace("v1", "v2")).is_err());
        assert!(Labeling::decode(&good.replace("1 2 010000", "2 1 010000")).is_err());
        assert!(Labeling::decode(&good.replace("010000", "01000")).is_err());
        assert!(Labeling::decode(&good.replace("010000", "012000")).is_err());
        assert!(Labeling::decode(&good.replace("2 2 000100\n", "")).is_err());
        assert!(Labeling::decode(&(good.clone() + "junk\n")).is_err());
        assert!(Labeling::decode(&good.replace("d=6", "d=six")).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 2usize..6, d in 1usize..80, q in 2u32..12, seed: u64) {
            let l = construct_random(n, d, q, seed).unwrap();
            prop_assert_eq!(Labeling::decode(&l.encode()).unwrap(), l);
        }
    }
}

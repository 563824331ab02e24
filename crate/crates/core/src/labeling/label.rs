use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An element of Z_q^d.
///
/// Binary labels (q = 2) are bit-packed: coordinate 1 is the least significant
/// bit of the first word. Other moduli keep one residue per coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Label {
    d: usize,
    q: u32,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Bits(Vec<u64>),
    Residues(Vec<u32>),
}

impl Label {
    pub fn zero(d: usize, q: u32) -> Self {
        assert!(q >= 2, "modulus must be at least 2");
        let repr = if q == 2 {
            Repr::Bits(vec![0; d.div_ceil(64)])
        } else {
            Repr::Residues(vec![0; d])
        };
        Label { d, q, repr }
    }

    /// The unit vector with a one in coordinate `i` (0-based).
    pub fn unit(d: usize, q: u32, i: usize) -> Self {
        let mut l = Label::zero(d, q);
        l.set(i, 1);
        l
    }

    /// Builds a label from residues, coordinate 1 first. Entries must lie in `[0, q)`.
    pub fn from_coords(coords: &[u32], q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::invalid(format!("modulus q={q} must be at least 2")));
        }
        let mut l = Label::zero(coords.len(), q);
        for (i, &c) in coords.iter().enumerate() {
            if c >= q {
                return Err(Error::invalid(format!(
                    "coordinate {} = {c} not below q={q}",
                    i + 1
                )));
            }
            l.set(i, c);
        }
        Ok(l)
    }

    pub fn len(&self) -> usize {
        self.d
    }

    pub fn is_empty(&self) -> bool {
        self.d == 0
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn get(&self, i: usize) -> u32 {
        assert!(i < self.d, "coordinate {i} out of range for d={}", self.d);
        match &self.repr {
            Repr::Bits(w) => ((w[i / 64] >> (i % 64)) & 1) as u32,
            Repr::Residues(r) => r[i],
        }
    }

    pub fn set(&mut self, i: usize, value: u32) {
        assert!(i < self.d, "coordinate {i} out of range for d={}", self.d);
        let value = value % self.q;
        match &mut self.repr {
            Repr::Bits(w) => {
                let mask = 1u64 << (i % 64);
                if value == 1 {
                    w[i / 64] |= mask;
                } else {
                    w[i / 64] &= !mask;
                }
            }
            Repr::Residues(r) => r[i] = value,
        }
    }

    pub fn coords(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.d).map(move |i| self.get(i))
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bits(w) => w.iter().all(|&x| x == 0),
            Repr::Residues(r) => r.iter().all(|&x| x == 0),
        }
    }

    fn check_compatible(&self, other: &Label) {
        assert!(
            self.d == other.d && self.q == other.q,
            "label shape mismatch: (d={}, q={}) vs (d={}, q={})",
            self.d,
            self.q,
            other.d,
            other.q
        );
    }

    pub fn add_assign(&mut self, other: &Label) {
        self.check_compatible(other);
        let q = self.q;
        match (&mut self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => a.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
            (Repr::Residues(a), Repr::Residues(b)) => {
                a.iter_mut().zip(b).for_each(|(x, y)| *x = (*x + y) % q)
            }
            _ => unreachable!("labels with equal q share a representation"),
        }
    }

    pub fn sub_assign(&mut self, other: &Label) {
        self.check_compatible(other);
        let q = self.q;
        match (&mut self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => a.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
            (Repr::Residues(a), Repr::Residues(b)) => {
                a.iter_mut().zip(b).for_each(|(x, y)| *x = (*x + q - y) % q)
            }
            _ => unreachable!("labels with equal q share a representation"),
        }
    }

    pub fn neg(&self) -> Label {
        let mut z = Label::zero(self.d, self.q);
        z.sub_assign(self);
        z
    }

    /// Overwrites `self` with `a + b` without allocating.
    pub(crate) fn set_sum(&mut self, a: &Label, b: &Label) {
        match (&mut self.repr, &a.repr, &b.repr) {
            (Repr::Bits(out), Repr::Bits(x), Repr::Bits(y)) => {
                for ((o, x), y) in out.iter_mut().zip(x).zip(y) {
                    *o = x ^ y;
                }
            }
            (Repr::Residues(out), Repr::Residues(x), Repr::Residues(y)) => {
                let q = self.q;
                for ((o, x), y) in out.iter_mut().zip(x).zip(y) {
                    *o = (x + y) % q;
                }
            }
            _ => unreachable!("labels with equal q share a representation"),
        }
    }

    /// The label as a single machine word, when it is binary and fits.
    pub(crate) fn as_u64(&self) -> Option<u64> {
        match &self.repr {
            Repr::Bits(w) if w.len() <= 1 => Some(w.first().copied().unwrap_or(0)),
            _ => None,
        }
    }

    pub(crate) fn as_u128(&self) -> Option<u128> {
        match &self.repr {
            Repr::Bits(w) if w.len() <= 2 => Some(
                w.first().copied().unwrap_or(0) as u128
                    | (w.get(1).copied().unwrap_or(0) as u128) << 64,
            ),
            _ => None,
        }
    }

    /// Digit string over `0..q`, coordinate 1 first. Moduli above 10 use
    /// letters `a..z` for digits 10 and up (q ≤ 36).
    pub fn to_digit_string(&self) -> String {
        self.coords()
            .map(|c| std::char::from_digit(c, 36).expect("q <= 36 for digit strings"))
            .collect()
    }

    pub fn from_digit_string(s: &str, q: u32) -> Result<Self> {
        if !(2..=36).contains(&q) {
            return Err(Error::invalid(format!(
                "digit strings need 2 <= q <= 36, got {q}"
            )));
        }
        let coords = s
            .chars()
            .map(|ch| {
                ch.to_digit(36)
                    .filter(|&v| v < q)
                    .ok_or_else(|| Error::invalid(format!("digit {ch:?} not valid for q={q}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Label::from_coords(&coords, q)
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the coordinate sequence, coordinate 1 first.
impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q, self.d)
            .cmp(&(other.q, other.d))
            .then_with(|| self.coords().cmp(other.coords()))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digit_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_layout_is_lsb_first() {
        let l = Label::unit(70, 2, 0);
        assert_eq!(l.as_u128(), Some(1));
        let l = Label::unit(70, 2, 65);
        assert_eq!(l.as_u128(), Some(1u128 << 65));
        assert_eq!(l.as_u64(), None);
        assert_eq!(l.to_digit_string().find('1'), Some(65));
    }

    #[test]
    fn modular_arithmetic() {
        let a = Label::from_coords(&[1, 2, 0], 3).unwrap();
        let b = Label::from_coords(&[2, 2, 1], 3).unwrap();
        let mut s = a.clone();
        s.add_assign(&b);
        assert_eq!(s.coords().collect::<Vec<_>>(), vec![0, 1, 1]);
        s.sub_assign(&b);
        assert_eq!(s, a);
        let mut z = a.clone();
        z.add_assign(&a.neg());
        assert!(z.is_zero());
    }

    #[test]
    fn rejects_out_of_range_coords() {
        assert!(Label::from_coords(&[0, 3], 3).is_err());
        assert!(Label::from_coords(&[0], 1).is_err());
        assert!(Label::from_digit_string("012", 2).is_err());
    }

    #[test]
    fn ordering_is_coordinate_lexicographic() {
        let a = Label::from_digit_string("0110", 2).unwrap();
        let b = Label::from_digit_string("1000", 2).unwrap();
        assert!(a < b);
        assert_eq!(
            Label::from_digit_string("0110", 2).unwrap().to_string(),
            "0110"
        );
    }
}

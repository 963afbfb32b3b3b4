//! Permutations of the three prong slots of a triple edge.

use std::fmt;

/// A bijection on `{0, 1, 2}`, stored as the images of 0, 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([u8; 3]);

/// Conjugacy class of an element of Sym(3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermClass {
    Identity,
    ThreeCycle,
    Transposition,
}

impl PermClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PermClass::Identity => "identity",
            PermClass::ThreeCycle => "3-cycle",
            PermClass::Transposition => "transposition",
        }
    }
}

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    pub fn new(images: [u8; 3]) -> Option<Perm3> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm3(images))
    }

    /// Parses the 3-digit encoding used by the text formats, e.g. `120`.
    pub fn parse(s: &str) -> Option<Perm3> {
        let b = s.as_bytes();
        if b.len() != 3 || !b.iter().all(|c| c.is_ascii_digit()) {
            return None;
        }
        Perm3::new([b[0] - b'0', b[1] - b'0', b[2] - b'0'])
    }

    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([0, 2, 1]),
            Perm3([1, 0, 2]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
            Perm3([2, 1, 0]),
        ]
    }

    pub fn images(&self) -> [u8; 3] {
        self.0
    }

    pub fn apply(&self, slot: u8) -> u8 {
        self.0[slot as usize]
    }

    /// `self.then(other)` applies `self` first, then `other`.
    pub fn then(&self, other: &Perm3) -> Perm3 {
        Perm3([other.apply(self.0[0]), other.apply(self.0[1]), other.apply(self.0[2])])
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Perm3(inv)
    }

    pub fn sign(&self) -> i8 {
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn class(&self) -> PermClass {
        let fixed = (0..3).filter(|&i| self.0[i] == i as u8).count();
        match fixed {
            3 => PermClass::Identity,
            0 => PermClass::ThreeCycle,
            _ => PermClass::Transposition,
        }
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_matches_class() {
        for p in Perm3::all() {
            let even = p.sign() == 1;
            assert_eq!(even, p.class() != PermClass::Transposition, "{p}");
        }
    }

    #[test]
    fn composition_and_inverse() {
        let c = Perm3::parse("120").unwrap();
        assert_eq!(c.then(&c).then(&c), Perm3::IDENTITY);
        assert_eq!(c.then(&c.inverse()), Perm3::IDENTITY);
        let t = Perm3::parse("102").unwrap();
        assert_eq!(c.then(&t).sign(), -1);
    }

    #[test]
    fn rejects_bad_encodings() {
        assert!(Perm3::parse("112").is_none());
        assert!(Perm3::parse("013").is_none());
        assert!(Perm3::parse("01").is_none());
    }
}

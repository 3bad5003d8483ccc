use std::fmt::Write as _;

/// A monomial in the free algebra: a sequence of generator indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: usize) -> Self {
        Word(vec![g as u8])
    }

    pub fn from_letters(letters: impl Into<Vec<u8>>) -> Self {
        Word(letters.into())
    }

    /// `g^n`
    pub fn power(g: usize, n: usize) -> Self {
        Word(vec![g as u8; n])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left * self * right`
    pub fn wrap(&self, left: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0..n)
    }

    pub fn suffix_from(&self, i: usize) -> Word {
        self.slice(i..self.len())
    }

    pub fn starts_with(&self, w: &Word) -> bool {
        self.0.starts_with(&w.0)
    }

    pub fn ends_with(&self, w: &Word) -> bool {
        self.0.ends_with(&w.0)
    }

    /// Leftmost occurrence of `pat` as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.is_empty() {
            return Some(0);
        }
        self.0.windows(pat.len()).position(|w| w == pat.0.as_slice())
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    /// Start positions of all occurrences of `pat`.
    pub fn occurrences(&self, pat: &Word) -> Vec<usize> {
        if pat.is_empty() || pat.len() > self.len() {
            return Vec::new();
        }
        self.0
            .windows(pat.len())
            .enumerate()
            .filter(|(_, w)| *w == pat.0.as_slice())
            .map(|(i, _)| i)
            .collect()
    }

    fn runs(&self) -> Vec<(u8, usize)> {
        let mut runs: Vec<(u8, usize)> = Vec::new();
        for &g in &self.0 {
            match runs.last_mut() {
                Some((h, n)) if *h == g => *n += 1,
                _ => runs.push((g, 1)),
            }
        }
        runs
    }

    /// Compact rendering by juxtaposition, e.g. `b^3a^2`; the empty word is `1`.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (g, n) in self.runs() {
            s.push_str(&names[g as usize]);
            if n > 1 {
                let _ = write!(s, "^{n}");
            }
        }
        s
    }

    /// Rendering as a product expression, e.g. `b^3*a^2`.
    pub fn to_expr(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.runs()
            .into_iter()
            .map(|(g, n)| {
                if n > 1 {
                    format!("{}^{n}", names[g as usize])
                } else {
                    names[g as usize].clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    #[test]
    fn concatenation_and_search() {
        let ab = Word::from_letters([0, 1]);
        let w = Word::power(1, 2).concat(&ab);
        assert_eq!(w.letters(), &[1, 1, 0, 1]);
        assert_eq!(w.find(&Word::from_letters([1, 0])), Some(1));
        assert_eq!(w.occurrences(&Word::letter(1)), vec![0, 1, 3]);
        assert!(Word::empty().concat(&ab) == ab);
        assert!(!ab.contains(&Word::from_letters([1, 0])));
    }

    #[test]
    fn rendering() {
        let w = Word::from_letters([1, 1, 1, 0, 0]);
        assert_eq!(w.display(&names()), "b^3a^2");
        assert_eq!(w.to_expr(&names()), "b^3*a^2");
        assert_eq!(Word::empty().display(&names()), "1");
        assert_eq!(Word::from_letters([1, 0]).display(&names()), "ba");
    }
}

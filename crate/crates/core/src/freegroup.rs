//! Words in the free group on `a, b`, with `A = a⁻¹` and `B = b⁻¹`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fatgraph::gcd;

/// Letters are `1 = a`, `-1 = A`, `2 = b`, `-2 = B`.
pub type Letter = i8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid letter {0:?}")]
pub struct WordError(char);

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: &[Letter]) -> Self {
        reduce(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        reduce(&v)
    }

    pub fn pow(&self, n: usize) -> Self {
        reduce(&self.0.repeat(n))
    }

    pub fn cyclically_reduced(&self) -> Self {
        let w = &self.0;
        let mut i = 0;
        while i + 1 < w.len() - i && w[i] == -w[w.len() - 1 - i] {
            i += 1;
        }
        Word(w[i..w.len() - i].to_vec())
    }

    /// Lexicographically least rotation of the cyclic reduction.
    pub fn cyclic_normal_form(&self) -> Self {
        let w = self.cyclically_reduced().0;
        let n = w.len();
        (0..n.max(1))
            .map(|s| Word(w[s.min(n)..].iter().chain(&w[..s.min(n)]).copied().collect()))
            .min()
            .unwrap_or_default()
    }

    /// Image under the endomorphism sending `a` to `img_a` and `b` to `img_b`.
    pub fn substitute(&self, img_a: &Word, img_b: &Word) -> Self {
        let (ia, ib) = (img_a.inverse(), img_b.inverse());
        let mut v = Vec::new();
        for &x in &self.0 {
            let part = match x {
                1 => img_a,
                -1 => &ia,
                2 => img_b,
                _ => &ib,
            };
            v.extend_from_slice(&part.0);
        }
        reduce(&v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            let c = match x {
                1 => 'a',
                -1 => 'A',
                2 => 'b',
                _ => 'B',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let letters = s
            .chars()
            .map(|c| match c {
                'a' => Ok(1),
                'A' => Ok(-1),
                'b' => Ok(2),
                'B' => Ok(-2),
                c => Err(WordError(c)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(reduce(&letters))
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = WordError;

    fn try_from(s: String) -> Result<Self, WordError> {
        s.parse()
    }
}

pub fn reduce(letters: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &x in letters {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    Word(out)
}

/// Exponent sums of `a` and `b`.
pub fn abelianize(w: &Word) -> (i64, i64) {
    w.0.iter().fold((0, 0), |(p, q), &x| match x {
        1 => (p + 1, q),
        -1 => (p - 1, q),
        2 => (p, q + 1),
        _ => (p, q - 1),
    })
}

fn letter(x: Letter) -> Word {
    Word(vec![x])
}

/// The nontrivial Whitehead automorphisms of the second kind in rank two:
/// for a multiplier `m`, the other generator `x` goes to `xm`, `m⁻¹x` or
/// `m⁻¹xm`.
fn whitehead_automorphisms() -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for m in [1i8, -1, 2, -2] {
        let x = if m.abs() == 1 { 2 } else { 1 };
        let (mw, mi, xw) = (letter(m), letter(-m), letter(x));
        for img in [xw.concat(&mw), mi.concat(&xw), mi.concat(&xw).concat(&mw)] {
            if x == 1 {
                out.push((img, letter(2)));
            } else {
                out.push((letter(1), img));
            }
        }
    }
    out
}

/// Whitehead's algorithm: apply length-reducing automorphisms to the cyclic
/// reduction until none helps. The word is primitive iff a single letter
/// remains.
pub fn is_primitive(w: &Word) -> bool {
    let mut w = w.cyclically_reduced();
    if w.is_empty() {
        return false;
    }
    let (p, q) = abelianize(&w);
    if gcd(p.unsigned_abs(), q.unsigned_abs()) != 1 {
        return false;
    }
    let autos = whitehead_automorphisms();
    while w.len() > 1 {
        let shorter = autos
            .iter()
            .map(|(a, b)| w.substitute(a, b).cyclically_reduced())
            .find(|v| v.len() < w.len());
        match shorter {
            Some(v) => w = v,
            None => return false,
        }
    }
    true
}

/// Elementary Nielsen moves: `x -> xy^±`, `x -> y^±x`, `x -> x⁻¹`, and the swap.
fn nielsen_moves() -> Vec<(Word, Word)> {
    let (a, b) = (letter(1), letter(2));
    let mut out = vec![(b.clone(), a.clone()), (a.inverse(), b.clone()), (a.clone(), b.inverse())];
    for y in [2i8, -2] {
        out.push((a.concat(&letter(y)), b.clone()));
        out.push((letter(y).concat(&a), b.clone()));
    }
    for y in [1i8, -1] {
        out.push((a.clone(), b.concat(&letter(y))));
        out.push((a.clone(), letter(y).concat(&b)));
    }
    out
}

/// Cyclic normal forms reachable from `start` by elementary Nielsen moves
/// without ever exceeding `max_len` letters.
pub fn nielsen_orbit(start: &Word, max_len: usize) -> HashSet<Word> {
    let moves = nielsen_moves();
    let s = start.cyclic_normal_form();
    let mut seen = HashSet::from([s.clone()]);
    let mut queue = VecDeque::from([s]);
    while let Some(w) = queue.pop_front() {
        for (a, b) in &moves {
            let v = w.substitute(a, b).cyclic_normal_form();
            if v.len() <= max_len && seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Brute-force check: breadth-first search over elementary Nielsen moves
/// from `w`, at most `depth` moves deep and never longer than `2|w| + 2`
/// letters, looking for a single letter.
pub fn primitivity_oracle(w: &Word, depth: usize) -> bool {
    let s = w.cyclic_normal_form();
    if s.is_empty() {
        return false;
    }
    let cap = 2 * s.len() + 2;
    let moves = nielsen_moves();
    let mut seen = HashSet::from([s.clone()]);
    let mut frontier = vec![s];
    for _ in 0..=depth {
        if frontier.iter().any(|w| w.len() == 1) {
            return true;
        }
        let mut next = Vec::new();
        for w in &frontier {
            for (a, b) in &moves {
                let v = w.substitute(a, b).cyclic_normal_form();
                if v.len() <= cap && seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(w("aA"), Word::empty());
        assert_eq!(w("abBA"), Word::empty());
        assert_eq!(w("abab").to_string(), "abab");
        assert_eq!(w("Aaba"), w("ba"));
        assert!("abc".parse::<Word>().is_err());
    }

    #[test]
    fn cyclic_forms() {
        assert_eq!(w("Abba").cyclically_reduced(), w("bb"));
        assert_eq!(w("bab").cyclic_normal_form(), w("abb"));
        assert_eq!(Word::empty().cyclic_normal_form(), Word::empty());
    }

    #[test]
    fn abelian() {
        assert_eq!(abelianize(&w("bababb")), (2, 4));
        assert_eq!(abelianize(&Word::empty()), (0, 0));
        assert_eq!(abelianize(&w("aB")), (1, -1));
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&w("a")));
        assert!(is_primitive(&w("ab")));
        assert!(is_primitive(&w("BA")));
        assert!(is_primitive(&w("aab")));
        assert!(!is_primitive(&w("bababb")));
        assert!(!is_primitive(&w("bababbb")));
        assert!(!is_primitive(&w("abAB")));
        assert!(!is_primitive(&w("aa")));
    }

    #[test]
    fn oracle_examples() {
        assert!(primitivity_oracle(&w("ab"), 3));
        assert!(primitivity_oracle(&w("BA"), 3));
        assert!(!primitivity_oracle(&w("bababb"), 6));
    }

    #[test]
    fn serde_as_string() {
        assert_eq!(serde_json::to_string(&w("abAB")).unwrap(), "\"abAB\"");
    }
}

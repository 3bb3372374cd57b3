//! The right-angled Coxeter group on the 5-cycle.
//!
//! Generators `s1..s5` are reflections in the sides of the base pentagon.
//! `si` and `sj` commute exactly when sides `i` and `j` are adjacent, and
//! there are no other relations besides `si^2 = 1`. Elements are stored as
//! ShortLex-least reduced words, so equality of elements is equality of
//! normal forms.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::hypgeo::{Isometry, Parity};
use crate::tiling;

/// Largest ball radius `enumerate_ball` accepts by default.
pub const DEFAULT_BALL_CAP: usize = 16;

/// A side label of the base pentagon, `1..=5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u8);

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator(1),
        Generator(2),
        Generator(3),
        Generator(4),
        Generator(5),
    ];

    pub fn new(index: u8) -> Option<Self> {
        (1..=5).contains(&index).then_some(Generator(index))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Zero-based side index.
    pub fn side(self) -> usize {
        usize::from(self.0 - 1)
    }

    pub fn from_side(side: usize) -> Self {
        Generator((side % 5) as u8 + 1)
    }

    /// Distinct generators commute iff their sides are adjacent.
    pub fn commutes_with(self, other: Generator) -> bool {
        let d = (5 + self.0 - other.0) % 5;
        d == 1 || d == 4
    }

    pub fn isometry(self) -> Isometry {
        Isometry::reflect_in(&tiling::side_geodesic(self.side()))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unexpected {found:?} at byte {position} in word literal")]
    Parse { position: usize, found: char },
    #[error("ball radius {requested} exceeds the cap of {cap}")]
    BallTooLarge { requested: usize, cap: usize },
}

/// An arbitrary, possibly unreduced, word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Accepts `"s1s3s1s3"`, `"1 3 1 3"`, and `"e"`, `"id"` or `""` for the
    /// identity.
    fn from_str(s: &str) -> Result<Self, WordError> {
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "id" {
            return Ok(Word::default());
        }
        let mut out = Vec::new();
        for (position, c) in t.char_indices() {
            match c {
                's' | 'S' | ' ' | ',' | '\t' => {}
                '1'..='5' => out.push(Generator(c as u8 - b'0')),
                found => return Err(WordError::Parse { position, found }),
            }
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Generator]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("e");
    }
    for g in letters {
        write!(f, "{g}")?;
    }
    Ok(())
}

/// A group element as its ShortLex-least reduced word.
///
/// The derived order is ShortLex: shorter words first, then lexicographic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm(Vec<Generator>);

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    pub fn generator(g: Generator) -> Self {
        NormalForm(alloc::vec![g])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    /// Word length in the generators.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> Parity {
        if self.0.len().is_multiple_of(2) {
            Parity::Preserving
        } else {
            Parity::Reversing
        }
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    /// `self * g`.
    pub fn append(&self, g: Generator) -> NormalForm {
        let mut reduced = self.0.clone();
        push_reduced(&mut reduced, g);
        NormalForm(shortlex(reduced))
    }

    /// `g * self`.
    pub fn prepend(&self, g: Generator) -> NormalForm {
        let mut reduced = Vec::with_capacity(self.0.len() + 1);
        push_reduced(&mut reduced, g);
        for &h in &self.0 {
            push_reduced(&mut reduced, h);
        }
        NormalForm(shortlex(reduced))
    }

    /// `self^n` for any integer `n`.
    pub fn power(&self, n: i64) -> NormalForm {
        let base = if n < 0 { invert(self) } else { self.clone() };
        let mut reduced = Vec::new();
        for _ in 0..n.unsigned_abs() {
            for &g in &base.0 {
                push_reduced(&mut reduced, g);
            }
        }
        NormalForm(shortlex(reduced))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for NormalForm {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        Ok(normalize(&s.parse()?))
    }
}

/// Appends `g` to a reduced word, cancelling it against an earlier `g` when
/// everything in between commutes with it.
fn push_reduced(reduced: &mut Vec<Generator>, g: Generator) {
    for k in (0..reduced.len()).rev() {
        let h = reduced[k];
        if h == g {
            reduced.remove(k);
            return;
        }
        if !h.commutes_with(g) {
            break;
        }
    }
    reduced.push(g);
}

/// Lexicographically least rearrangement of a reduced word under the
/// commutation relations.
fn shortlex(mut rest: Vec<Generator>) -> Vec<Generator> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        // A letter can move to the front iff it commutes with every letter
        // before its first occurrence.
        let mut best: Option<(Generator, usize)> = None;
        for (k, &g) in rest.iter().enumerate() {
            if best.is_some_and(|(b, _)| b <= g) {
                continue;
            }
            let free = rest[..k].iter().all(|&h| h != g && h.commutes_with(g));
            if free {
                best = Some((g, k));
            }
        }
        let (g, k) = best.expect("the first letter is always movable");
        rest.remove(k);
        out.push(g);
    }
    out
}

pub fn normalize(w: &Word) -> NormalForm {
    let mut reduced = Vec::with_capacity(w.len());
    for &g in w.letters() {
        push_reduced(&mut reduced, g);
    }
    NormalForm(shortlex(reduced))
}

pub fn multiply(a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut reduced = a.0.clone();
    for &g in &b.0 {
        push_reduced(&mut reduced, g);
    }
    NormalForm(shortlex(reduced))
}

pub fn invert(a: &NormalForm) -> NormalForm {
    let mut rev = a.0.clone();
    rev.reverse();
    NormalForm(shortlex(rev))
}

/// `a * b * a^-1`.
pub fn conjugate(a: &NormalForm, b: &NormalForm) -> NormalForm {
    multiply(&multiply(a, b), &invert(a))
}

/// The product of the generator reflections, in word order.
pub fn word_to_isometry(a: &NormalForm) -> Isometry {
    let gens: [Isometry; 5] = core::array::from_fn(|i| Generator::from_side(i).isometry());
    a.0.iter()
        .fold(Isometry::IDENTITY, |acc, g| acc.compose(&gens[g.side()]))
}

/// All elements of word length at most `n`, in ShortLex order.
pub fn enumerate_ball(n: usize) -> Result<Vec<NormalForm>, WordError> {
    enumerate_ball_capped(n, DEFAULT_BALL_CAP)
}

pub fn enumerate_ball_capped(n: usize, cap: usize) -> Result<Vec<NormalForm>, WordError> {
    if n > cap {
        return Err(WordError::BallTooLarge { requested: n, cap });
    }
    let mut seen: BTreeSet<NormalForm> = BTreeSet::new();
    seen.insert(NormalForm::identity());
    let mut frontier = alloc::vec![NormalForm::identity()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &frontier {
            for g in Generator::ALL {
                let v = w.append(g);
                if v.len() > w.len() && seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Renders a list of normal forms as `"s1s3, s2"`.
pub fn join_words(words: &[NormalForm]) -> String {
    let mut out = String::new();
    for (i, w) in words.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&alloc::format!("{w}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypgeo::{classify, ClassTag};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn nf(s: &str) -> NormalForm {
        s.parse().unwrap()
    }

    fn gen_word(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(1u8..=5, 0..=max)
            .prop_map(|v| Word(v.into_iter().map(Generator).collect()))
    }

    #[test]
    fn normalize_examples() {
        assert!(nf("s1s1").is_identity());
        assert_eq!(nf("s2s1").to_string(), "s1s2");
        assert_eq!(nf("s3s1").to_string(), "s3s1");
        assert_eq!(nf("s5s1").to_string(), "s1s5");
        assert_eq!(nf("s1s2s1").to_string(), "s2");
    }

    #[test]
    fn multiply_and_invert_examples() {
        assert_eq!(multiply(&nf("s1"), &nf("s2")).to_string(), "s1s2");
        assert!(multiply(&nf("s1s3"), &nf("s3s1")).is_identity());
        assert!(invert(&NormalForm::identity()).is_identity());
        assert_eq!(invert(&nf("s1s3")).to_string(), "s3s1");
        assert_eq!(invert(&nf("s1s2")).to_string(), "s1s2");
    }

    #[test]
    fn parse_and_format() {
        assert_eq!("1 3 1 3".parse::<Word>().unwrap().to_string(), "s1s3s1s3");
        assert_eq!("s1s3s1s3".parse::<Word>().unwrap().len(), 4);
        assert_eq!("e".parse::<Word>().unwrap(), Word::default());
        assert_eq!(NormalForm::identity().to_string(), "e");
        assert!(matches!(
            "s1s6".parse::<Word>(),
            Err(WordError::Parse { found: '6', .. })
        ));
    }

    #[test]
    fn small_balls() {
        let sizes: Vec<usize> = (0..=3).map(|n| enumerate_ball(n).unwrap().len()).collect();
        assert_eq!(&sizes[..3], &[1, 6, 21]);
        assert!(enumerate_ball(17).is_err());
        assert!(enumerate_ball_capped(3, 2).is_err());
        assert_eq!(enumerate_ball_capped(3, 3).unwrap().len(), enumerate_ball(3).unwrap().len());
    }

    #[test]
    fn word_to_isometry_examples() {
        assert!(word_to_isometry(&NormalForm::identity()).is_identity(1e-15));
        let r = word_to_isometry(&nf("s1s2"));
        assert_eq!(classify(&r).unwrap().tag, ClassTag::Elliptic);
        assert!(r.compose(&r).is_identity(1e-10));
        for g in Generator::ALL {
            let s = g.isometry();
            assert!(s.compose(&s).is_identity(1e-10));
            assert_eq!(s.parity(), Parity::Reversing);
        }
    }

    #[test]
    fn length_two_elements_against_matrices() {
        // 20 ordered pairs of distinct letters, commuting pairs coincide.
        let mut mats: Vec<Isometry> = Vec::new();
        for a in Generator::ALL {
            for b in Generator::ALL {
                if a == b {
                    continue;
                }
                let m = a.isometry().compose(&b.isometry());
                if !mats.iter().any(|x| x.approx_eq(&m, 1e-8)) {
                    mats.push(m);
                }
            }
        }
        assert_eq!(mats.len(), 15);
        let two: Vec<_> = enumerate_ball(2).unwrap().into_iter().filter(|w| w.len() == 2).collect();
        assert_eq!(two.len(), 15);
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(w in gen_word(24)) {
            let n = normalize(&w);
            prop_assert_eq!(normalize(&n.to_word()), n);
        }

        #[test]
        fn normal_forms_are_reduced(w in gen_word(24)) {
            let n = normalize(&w);
            for pair in n.letters().windows(2) {
                prop_assert_ne!(pair[0], pair[1]);
                // a commuting descent could be swapped into a smaller word
                prop_assert!(!(pair[0] > pair[1] && pair[0].commutes_with(pair[1])));
            }
        }

        #[test]
        fn multiply_is_associative(a in gen_word(10), b in gen_word(10), c in gen_word(10)) {
            let (a, b, c) = (normalize(&a), normalize(&b), normalize(&c));
            prop_assert_eq!(multiply(&multiply(&a, &b), &c), multiply(&a, &multiply(&b, &c)));
        }

        #[test]
        fn inverse_cancels(a in gen_word(16)) {
            let a = normalize(&a);
            prop_assert!(multiply(&a, &invert(&a)).is_identity());
            prop_assert_eq!(invert(&invert(&a)), a);
        }

        #[test]
        fn homomorphism(a in gen_word(8), b in gen_word(8)) {
            let (a, b) = (normalize(&a), normalize(&b));
            let lhs = word_to_isometry(&multiply(&a, &b));
            let rhs = word_to_isometry(&a).compose(&word_to_isometry(&b));
            // entries grow with word length, so compare relatively
            let scale = 1.0 + lhs.top_row().0.norm_sqr();
            prop_assert!(lhs.approx_eq(&rhs, 1e-11 * scale));
        }

        #[test]
        fn append_and_prepend_agree_with_multiply(a in gen_word(12), i in 1u8..=5) {
            let a = normalize(&a);
            let g = NormalForm::generator(Generator(i));
            prop_assert_eq!(a.append(Generator(i)), multiply(&a, &g));
            prop_assert_eq!(a.prepend(Generator(i)), multiply(&g, &a));
        }
    }
}

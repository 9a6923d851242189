//! Noncommutative polynomials in the letters a, b and c, d; the rewrite of
//! ab-polynomials in terms of c = a + b and d = ab + ba; and the substitution
//! taking the ab-index of a geometric lattice to the c-2d-index of the
//! associated zonotope.
//!
//! Degrees follow the usual convention deg a = deg b = deg c = 1, deg d = 2;
//! a polynomial keeps all its words at one degree. Coefficients are
//! arbitrary-precision integers since chain counts grow factorially.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{LatgeomError, Result};
use crate::lattice::GeometricLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    Ab,
    Cd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Letter::A | Letter::B => Alphabet::Ab,
            Letter::C | Letter::D => Alphabet::Cd,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Letter::D => 2,
            _ => 1,
        }
    }

    fn ch(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }
}

/// A word in noncommuting letters. Ordering is lexicographic on the letter
/// sequence with a < b and c < d.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.degree()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The length-`r` ab-word with `b` exactly at the positions `1..=r`
    /// where `is_descent` holds.
    pub fn ab_from_descents(r: usize, is_descent: impl Fn(usize) -> bool) -> Word {
        Word(
            (1..=r)
                .map(|i| if is_descent(i) { Letter::B } else { Letter::A })
                .collect(),
        )
    }

    fn prepend(&self, letter: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.ch())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = LatgeomError;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                'c' => Ok(Letter::C),
                'd' => Ok(Letter::D),
                other => Err(LatgeomError::Parse(format!("bad letter `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// An integer-coefficient polynomial in noncommuting letters, homogeneous in
/// the degree convention above. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPolynomial {
    alphabet: Alphabet,
    terms: BTreeMap<Word, BigInt>,
}

impl NcPolynomial {
    pub fn zero(alphabet: Alphabet) -> NcPolynomial {
        NcPolynomial {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree of the polynomial, `None` when zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|w| w.degree())
    }

    pub fn coeff(&self, word: &Word) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    /// Adds `coeff * word`, enforcing the alphabet and homogeneity.
    pub fn add_term(&mut self, word: Word, coeff: BigInt) {
        assert!(
            word.letters().iter().all(|l| l.alphabet() == self.alphabet),
            "word {word} does not belong to the polynomial's alphabet"
        );
        if let Some(d) = self.degree() {
            assert_eq!(word.degree(), d, "mixed degrees in one polynomial");
        }
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NcPolynomial) -> NcPolynomial {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPolynomial) -> NcPolynomial {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.alphabet);
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// The lex-least word and its coefficient.
    fn leading(&self) -> Option<(&Word, &BigInt)> {
        self.terms.iter().next()
    }

    /// Expands a cd-polynomial into ab letters via c -> a+b, d -> ab+ba.
    pub fn expand_cd(&self) -> NcPolynomial {
        assert_eq!(self.alphabet, Alphabet::Cd, "expand_cd needs a cd-polynomial");
        let mut out = NcPolynomial::zero(Alphabet::Ab);
        for (w, c) in self.terms() {
            for ab in expand_cd_word(w) {
                out.add_term(ab, c.clone());
            }
        }
        out
    }

    /// Rewrites an ab-polynomial in terms of c and d by greedy leading-term
    /// elimination. On failure returns the residual ab-polynomial that has
    /// no cd-preimage, as a certificate.
    pub fn to_cd(&self) -> std::result::Result<NcPolynomial, NcPolynomial> {
        assert_eq!(self.alphabet, Alphabet::Ab, "to_cd needs an ab-polynomial");
        let mut residual = self.clone();
        let mut out = NcPolynomial::zero(Alphabet::Cd);
        while let Some((word, coeff)) = residual.leading() {
            let Some(preimage) = cd_preimage(word) else {
                return Err(residual);
            };
            let coeff = coeff.clone();
            for ab in expand_cd_word(&preimage) {
                residual.add_term(ab, -&coeff);
            }
            out.add_term(preimage, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() && !w.is_empty() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}{w}")?;
            }
        }
        Ok(())
    }
}

/// All ab-words in the expansion of one cd-word (each with coefficient 1).
fn expand_cd_word(word: &Word) -> Vec<Word> {
    let mut acc: Vec<Vec<Letter>> = vec![Vec::new()];
    for &l in word.letters() {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for prefix in &acc {
            match l {
                Letter::C => {
                    for tail in [Letter::A, Letter::B] {
                        let mut w = prefix.clone();
                        w.push(tail);
                        next.push(w);
                    }
                }
                Letter::D => {
                    for tail in [[Letter::A, Letter::B], [Letter::B, Letter::A]] {
                        let mut w = prefix.clone();
                        w.extend_from_slice(&tail);
                        next.push(w);
                    }
                }
                _ => unreachable!("cd word contains ab letter"),
            }
        }
        acc = next;
    }
    acc.into_iter().map(Word::from_letters).collect()
}

/// The unique cd-word whose expansion has `word` as its lex-least term, if
/// any: scanning left to right, an `ab` factor must come from d, a lone `a`
/// from c, and a leading `b` has no preimage.
fn cd_preimage(word: &Word) -> Option<Word> {
    let ls = word.letters();
    let mut out = Vec::new();
    let mut i = 0;
    while i < ls.len() {
        match ls[i] {
            Letter::A if i + 1 < ls.len() && ls[i + 1] == Letter::B => {
                out.push(Letter::D);
                i += 2;
            }
            Letter::A => {
                out.push(Letter::C);
                i += 1;
            }
            _ => return None,
        }
    }
    Some(Word::from_letters(out))
}

/// The substitution on a single ab-word: each leftmost non-overlapping `ab`
/// factor becomes d and doubles the coefficient, remaining letters become c.
/// Returns the coefficient multiplier and the cd-word.
pub fn omega_word(word: &Word) -> (BigInt, Word) {
    let ls = word.letters();
    let mut out = Vec::new();
    let mut doublings = 0usize;
    let mut i = 0;
    while i < ls.len() {
        if ls[i] == Letter::A && i + 1 < ls.len() && ls[i + 1] == Letter::B {
            out.push(Letter::D);
            doublings += 1;
            i += 2;
        } else {
            out.push(Letter::C);
            i += 1;
        }
    }
    (BigInt::one() << doublings, Word::from_letters(out))
}

/// Linear extension of [`omega_word`] to ab-polynomials.
pub fn omega(p: &NcPolynomial) -> NcPolynomial {
    assert_eq!(p.alphabet(), Alphabet::Ab, "omega acts on ab-polynomials");
    let mut out = NcPolynomial::zero(Alphabet::Cd);
    for (w, c) in p.terms() {
        let (mult, cd) = omega_word(w);
        out.add_term(cd, c * mult);
    }
    out
}

/// The c-2d-index of the zonotope associated to the lattice: omega applied
/// to `a * Psi(L)` termwise. The factor 2 on each d is absorbed into the
/// integer coefficients.
pub fn zonotope_c2d(l: &GeometricLattice) -> NcPolynomial {
    let ab = l.ab_index();
    let mut out = NcPolynomial::zero(Alphabet::Cd);
    for (w, c) in ab.terms() {
        let (mult, cd) = omega_word(&w.prepend(Letter::A));
        out.add_term(cd, c * mult);
    }
    out
}

/// Result of a coefficientwise comparison of two equal-degree polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffCmp {
    Equal,
    /// Every coefficient of the left is <= the right's, at least one strictly.
    Leq,
    /// Every coefficient of the left is >= the right's, at least one strictly.
    Geq,
    Incomparable,
}

impl fmt::Display for CoeffCmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoeffCmp::Equal => "eq",
            CoeffCmp::Leq => "leq",
            CoeffCmp::Geq => "geq",
            CoeffCmp::Incomparable => "incomparable",
        };
        write!(f, "{s}")
    }
}

/// Coefficientwise partial-order comparison.
pub fn compare_coefficientwise(p: &NcPolynomial, q: &NcPolynomial) -> Result<CoeffCmp> {
    if p.alphabet() != q.alphabet() {
        return Err(LatgeomError::Precondition(
            "cannot compare polynomials over different alphabets".into(),
        ));
    }
    if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
        if dp != dq {
            return Err(LatgeomError::Precondition(format!(
                "cannot compare polynomials of degrees {dp} and {dq}"
            )));
        }
    }
    let mut some_less = false;
    let mut some_greater = false;
    let words: std::collections::BTreeSet<&Word> =
        p.terms.keys().chain(q.terms.keys()).collect();
    for w in words {
        match p.coeff(w).cmp(&q.coeff(w)) {
            std::cmp::Ordering::Less => some_less = true,
            std::cmp::Ordering::Greater => some_greater = true,
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok(match (some_less, some_greater) {
        (false, false) => CoeffCmp::Equal,
        (true, false) => CoeffCmp::Leq,
        (false, true) => CoeffCmp::Geq,
        (true, true) => CoeffCmp::Incomparable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::AtomOrder;
    use crate::lattice::build_lattice;
    use crate::matroid::{make_boolean, make_near_pencil, make_uniform};

    fn ab(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn poly(alphabet: Alphabet, terms: &[(i64, &str)]) -> NcPolynomial {
        let mut p = NcPolynomial::zero(alphabet);
        for (c, w) in terms {
            p.add_term(w.parse().unwrap(), (*c).into());
        }
        p
    }

    #[test]
    fn to_cd_basics() {
        let p = poly(Alphabet::Ab, &[(1, "a"), (1, "b")]);
        assert_eq!(p.to_cd().unwrap().to_string(), "c");
        let p = poly(Alphabet::Ab, &[(1, "ab"), (1, "ba")]);
        assert_eq!(p.to_cd().unwrap().to_string(), "d");
        let b3 = poly(Alphabet::Ab, &[(1, "aa"), (2, "ab"), (2, "ba"), (1, "bb")]);
        assert_eq!(b3.to_cd().unwrap().to_string(), "cc + d");
    }

    #[test]
    fn to_cd_round_trip_on_boolean_lattices() {
        for n in 2..=6usize {
            let l = build_lattice(&make_boolean(n).unwrap(), AtomOrder::natural(n)).unwrap();
            let psi = l.ab_index();
            let cd = psi.to_cd().unwrap_or_else(|res| {
                panic!("Psi(B_{n}) should be cd-expressible, residual {res}")
            });
            assert_eq!(cd.expand_cd(), psi, "round trip at n = {n}");
        }
    }

    #[test]
    fn to_cd_rejects_non_eulerian_index() {
        let l = build_lattice(&make_near_pencil(3, 4).unwrap(), AtomOrder::natural(4)).unwrap();
        let psi = l.ab_index(); // aa + 3ab + 3ba + 2bb
        let residual = psi.to_cd().unwrap_err();
        assert_eq!(residual.to_string(), "bb");
    }

    #[test]
    fn omega_word_examples() {
        let (c, w) = omega_word(&ab("aab"));
        assert_eq!((c, w.to_string()), (2.into(), "cd".into()));
        let (c, w) = omega_word(&ab("aba"));
        assert_eq!((c, w.to_string()), (2.into(), "dc".into()));
        let (c, w) = omega_word(&ab("abb"));
        assert_eq!((c, w.to_string()), (2.into(), "dc".into()));
        let (c, w) = omega_word(&ab("bbb"));
        assert_eq!((c, w.to_string()), (1.into(), "ccc".into()));
        let (c, w) = omega_word(&ab("abab"));
        assert_eq!((c, w.to_string()), (4.into(), "dd".into()));
    }

    #[test]
    fn omega_is_linear() {
        let p = poly(Alphabet::Ab, &[(2, "aab"), (1, "bba")]);
        let q = poly(Alphabet::Ab, &[(3, "aba"), (-1, "bba")]);
        assert_eq!(omega(&p.add(&q)), omega(&p).add(&omega(&q)));
        assert_eq!(omega(&p.scale(&5.into())), omega(&p).scale(&5.into()));
    }

    #[test]
    fn zonotope_examples() {
        let square = build_lattice(&make_boolean(2).unwrap(), AtomOrder::natural(2)).unwrap();
        assert_eq!(zonotope_c2d(&square).to_string(), "cc + 2d");
        let cube = build_lattice(&make_boolean(3).unwrap(), AtomOrder::natural(3)).unwrap();
        assert_eq!(zonotope_c2d(&cube).to_string(), "ccc + 4cd + 6dc");
        let np = build_lattice(&make_near_pencil(3, 4).unwrap(), AtomOrder::natural(4)).unwrap();
        assert_eq!(zonotope_c2d(&np).to_string(), "ccc + 6cd + 10dc");
    }

    #[test]
    fn coefficientwise_comparison() {
        let nat = AtomOrder::natural(4);
        let np = build_lattice(&make_near_pencil(3, 4).unwrap(), nat.clone()).unwrap();
        let u = build_lattice(&make_uniform(3, 4).unwrap(), nat).unwrap();
        let znp = zonotope_c2d(&np);
        let zu = zonotope_c2d(&u);
        assert_eq!(compare_coefficientwise(&znp, &zu).unwrap(), CoeffCmp::Leq);
        assert_eq!(compare_coefficientwise(&zu, &znp).unwrap(), CoeffCmp::Geq);
        assert_eq!(compare_coefficientwise(&znp, &znp).unwrap(), CoeffCmp::Equal);
        let ab = np.ab_index();
        assert!(compare_coefficientwise(&ab, &znp).is_err());
    }
}

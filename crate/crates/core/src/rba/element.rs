use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::TensorWord;
use crate::Rational;

/// A finite exact linear combination of tensor words.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RBAElement {
    terms: BTreeMap<TensorWord, Rational>,
}

impl RBAElement {
    pub fn zero() -> Self {
        RBAElement::default()
    }

    pub fn unit() -> Self {
        RBAElement::from_word(TensorWord::unit())
    }

    pub fn one(k: usize) -> Self {
        RBAElement::from_word(TensorWord::one(k))
    }

    pub fn from_word(w: TensorWord) -> Self {
        RBAElement::term(w, Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        RBAElement::term(TensorWord::unit(), c)
    }

    pub fn term(w: TensorWord, c: Rational) -> Self {
        let mut e = RBAElement::zero();
        e.add_term(w, c);
        e
    }

    /// Sums the given terms, merging repeated words.
    pub fn from_terms<I: IntoIterator<Item = (TensorWord, Rational)>>(terms: I) -> Self {
        let mut e = RBAElement::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    /// Builds `Σ coeffs[k]·1_k`.
    pub fn from_scalar_coeffs(coeffs: &[Rational]) -> Self {
        RBAElement::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (TensorWord::one(k), c.clone())),
        )
    }

    pub fn add_term(&mut self, w: TensorWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &TensorWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn one_coeff(&self, k: usize) -> Rational {
        self.coeff(&TensorWord::one(k))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(TensorWord::is_scalar)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(TensorWord::degree).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(TensorWord::degree).min()
    }

    /// Drops every word of degree above `trunc`.
    pub fn truncated(mut self, trunc: usize) -> Self {
        self.terms.retain(|w, _| w.degree() <= trunc);
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RBAElement::zero();
        }
        RBAElement {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Scalar part as a dense coefficient vector `[c_0, …, c_trunc]`.
    /// Non-scalar words are ignored.
    pub fn scalar_coeffs(&self, trunc: usize) -> Vec<Rational> {
        (0..=trunc).map(|k| self.one_coeff(k)).collect()
    }
}

impl Add<&RBAElement> for &RBAElement {
    type Output = RBAElement;

    fn add(self, rhs: &RBAElement) -> RBAElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Add for RBAElement {
    type Output = RBAElement;

    fn add(self, rhs: RBAElement) -> RBAElement {
        &self + &rhs
    }
}

impl Neg for &RBAElement {
    type Output = RBAElement;

    fn neg(self) -> RBAElement {
        RBAElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Sub<&RBAElement> for &RBAElement {
    type Output = RBAElement;

    fn sub(self, rhs: &RBAElement) -> RBAElement {
        self + &(-rhs)
    }
}

impl Sub for RBAElement {
    type Output = RBAElement;

    fn sub(self, rhs: RBAElement) -> RBAElement {
        &self - &rhs
    }
}

impl fmt::Display for RBAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{w}")?;
        }
        Ok(())
    }
}

#[derive(serde::Serialize)]
struct TermRecord<'a> {
    word: &'a [u32],
    coeff: String,
}

/// Serializes as `[{"word":[e0,…],"coeff":"p/q"}, …]` in word order.
impl Serialize for RBAElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                word: w.exponents(),
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn add_zero_and_cancel() {
        let e = &RBAElement::one(1) + &RBAElement::one(3);
        assert_eq!(&e + &RBAElement::zero(), e);
        let cancel = &RBAElement::one(2) + &RBAElement::one(2).scale(&rat(-1));
        assert!(cancel.is_zero());
        assert_eq!(cancel.len(), 0);
    }

    #[test]
    fn scale_is_linear() {
        let e = &RBAElement::one(1) + &RBAElement::one(3);
        let s = e.scale(&rat(3));
        assert_eq!(s.one_coeff(1), rat(3));
        assert_eq!(s.one_coeff(3), rat(3));
        assert_eq!(s.len(), 2);
        assert!(e.scale(&rat(0)).is_zero());
    }

    #[test]
    fn truncation_drops_high_words() {
        let e = RBAElement::from_scalar_coeffs(&[rat(1), rat(2), rat(3)]);
        assert_eq!(e.clone().truncated(1).len(), 2);
        assert_eq!(e.max_degree(), Some(2));
    }

    #[test]
    fn json_shape() {
        let e = &RBAElement::one(2).scale(&rat(2)) + &RBAElement::one(1);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(
            s,
            r#"[{"word":[0,0],"coeff":"1"},{"word":[0,0,0],"coeff":"2"}]"#
        );
    }
}

//! Sparse univariate Laurent polynomials over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Marker for the variable a [`Laurent`] polynomial is written in.
pub trait Variable: Clone + Copy + fmt::Debug + PartialEq + Eq + std::hash::Hash + Default {
    /// Renders `var^exp` (never called with `exp == 0`).
    fn power(exp: i64) -> String;
}

/// `s = q^{1/2}`; exponents are stored in `s`, rendered in `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct QHalf;

impl Variable for QHalf {
    fn power(exp: i64) -> String {
        match (exp % 2 == 0, exp / 2) {
            (true, 1) => "q".to_string(),
            (true, e) => format!("q^{e}"),
            (false, _) => format!("q^({exp}/2)"),
        }
    }
}

/// The HOMFLY variable `z = q^{1/2} - q^{-1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZVar;

impl Variable for ZVar {
    fn power(exp: i64) -> String {
        if exp == 1 {
            "z".to_string()
        } else {
            format!("z^{exp}")
        }
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in a sparse map from exponent to coefficient; zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<V: Variable> {
    terms: BTreeMap<i64, BigInt>,
    _var: PhantomData<V>,
}

/// Laurent polynomial in `s = q^{1/2}`.
pub type HalfLaurent = Laurent<QHalf>;

/// Laurent polynomial in `z`.
pub type ZLaurent = Laurent<ZVar>;

impl<V: Variable> Laurent<V> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            _var: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `c * var^exp` in place.
    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_term(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            _var: PhantomData,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
            _var: PhantomData,
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The image under `var -> var^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
            _var: PhantomData,
        }
    }

    /// Reinterprets the exponents in a different variable.
    pub fn relabel<W: Variable>(&self) -> Laurent<W> {
        Laurent {
            terms: self.terms.clone(),
            _var: PhantomData,
        }
    }
}

impl HalfLaurent {
    /// `c * q^e`.
    pub fn q_monomial(c: impl Into<BigInt>, q_exp: i64) -> Self {
        Self::monomial(c, 2 * q_exp)
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Long division from the top term. The quotient of a Laurent division
    /// has its exponents inside `[min(P) - min(Q), deg(P) - deg(Q)]`, which
    /// bounds the loop.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (d_top, d_lead) = divisor.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let d_low = divisor.min_degree().unwrap_or(d_top);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let Some(p_low) = self.min_degree() else {
            return Ok(quot);
        };
        let floor = p_low - d_low;
        while let Some((top, lead)) = rem.leading_term() {
            let exp = top - d_top;
            if exp < floor {
                break;
            }
            let (q, r) = lead.div_rem(d_lead);
            if !r.is_zero() {
                break;
            }
            let step = Self::monomial(q, exp);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(AlgebraError::DivisionInexact {
                remainder: Box::new(rem),
            })
        }
    }
}

impl<V: Variable> fmt::Display for Laurent<V> {
    /// Terms printed in increasing exponent order, e.g. `2 - q + 3q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e == 0, mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", V::power(*e))?,
                (false, false) => write!(f, "{mag}{}", V::power(*e))?,
            }
        }
        Ok(())
    }
}

impl<V: Variable> fmt::Debug for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<V: Variable> AddAssign<&Laurent<V>> for Laurent<V> {
    fn add_assign(&mut self, rhs: &Laurent<V>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<V: Variable> SubAssign<&Laurent<V>> for Laurent<V> {
    fn sub_assign(&mut self, rhs: &Laurent<V>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<V: Variable> Add for &Laurent<V> {
    type Output = Laurent<V>;
    fn add(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<V: Variable> Sub for &Laurent<V> {
    type Output = Laurent<V>;
    fn sub(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<V: Variable> Mul for &Laurent<V> {
    type Output = Laurent<V>;
    fn mul(self, rhs: &Laurent<V>) -> Laurent<V> {
        let mut out = Laurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl<V: Variable> Neg for &Laurent<V> {
    type Output = Laurent<V>;
    fn neg(self) -> Laurent<V> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            _var: PhantomData,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<V: Variable> $tr for Laurent<V> {
            type Output = Laurent<V>;
            fn $m(self, rhs: Laurent<V>) -> Laurent<V> {
                (&self).$m(&rhs)
            }
        }
        impl<V: Variable> $tr<&Laurent<V>> for Laurent<V> {
            type Output = Laurent<V>;
            fn $m(self, rhs: &Laurent<V>) -> Laurent<V> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<V: Variable> Neg for Laurent<V> {
    type Output = Laurent<V>;
    fn neg(self) -> Laurent<V> {
        -&self
    }
}

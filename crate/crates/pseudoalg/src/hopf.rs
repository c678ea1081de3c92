//! The Hopf algebra H = k[s] in the divided-power basis `s^(n) = s^n / n!`.
//!
//! In this basis the structure maps are
//!
//! * product: `s^(i) s^(j) = C(i+j, i) s^(i+j)`,
//! * coproduct: `Δ s^(n) = Σ_{i=0}^{n} s^(i) ⊗ s^(n-i)`,
//! * counit: `ε(s^(n)) = δ_{n,0}`,
//! * antipode: `S(s^(n)) = (-1)^n s^(n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rat::{binomial, factorial, Rat};
use crate::tensor::Tensor2;

/// A polynomial `Σ c_n s^(n)` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct HPoly {
    coeffs: BTreeMap<u32, Rat>,
}

impl HPoly {
    pub fn zero() -> HPoly {
        HPoly::default()
    }

    pub fn one() -> HPoly {
        HPoly::basis(0)
    }

    /// The basis element `s^(n)`.
    pub fn basis(n: u32) -> HPoly {
        HPoly::term(n, Rat::one())
    }

    /// The element `c s^(n)`.
    pub fn term(n: u32, c: Rat) -> HPoly {
        let mut p = HPoly::zero();
        p.add_term(n, c);
        p
    }

    /// The constant `c`.
    pub fn constant(c: Rat) -> HPoly {
        HPoly::term(0, c)
    }

    /// Builds from `(degree, coefficient)` pairs; repeated degrees are summed.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(terms: I) -> HPoly {
        let mut p = HPoly::zero();
        for (n, c) in terms {
            p.add_term(n, c);
        }
        p
    }

    /// Converts from coefficients in the ordinary monomial basis `s^n`.
    pub fn from_monomial_coeffs(mono: &[Rat]) -> HPoly {
        HPoly::from_terms(mono.iter().enumerate().map(|(n, c)| (n as u32, c * Rat::from_bigint(factorial(n as u64)))))
    }

    /// Coefficients in the ordinary monomial basis `s^n`, index = power.
    pub fn to_monomial_coeffs(&self) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.degree().map_or(0, |d| d as usize + 1)];
        for (&n, c) in &self.coeffs {
            out[n as usize] = c / Rat::from_bigint(factorial(n as u64));
        }
        out
    }

    pub fn add_term(&mut self, n: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(n).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest stored degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of `s^(n)`.
    pub fn coeff(&self, n: u32) -> Rat {
        self.coeffs.get(&n).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterates `(degree, coefficient)` in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> HPoly {
        if c.is_zero() {
            return HPoly::zero();
        }
        HPoly { coeffs: self.coeffs.iter().map(|(&n, v)| (n, v * c)).collect() }
    }

    /// Product in H.
    pub fn mul(&self, other: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let w = Rat::from_bigint(binomial((i + j) as u64, i as u64));
                out.add_term(i + j, a * b * w);
            }
        }
        out
    }

    /// Coproduct `Δ: H → H ⊗ H`.
    pub fn coproduct(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&n, c) in &self.coeffs {
            for i in 0..=n {
                out.add_term(i, n - i, c.clone());
            }
        }
        out
    }

    /// Counit: the coefficient of `s^(0)`.
    pub fn counit(&self) -> Rat {
        self.coeff(0)
    }

    /// Antipode `S(s^(n)) = (-1)^n s^(n)`.
    pub fn antipode(&self) -> HPoly {
        HPoly { coeffs: self.coeffs.iter().map(|(&n, c)| (n, if n % 2 == 0 { c.clone() } else { -c })).collect() }
    }

    /// Derivative `d/ds`; in the divided-power basis `s^(n) ↦ s^(n-1)`.
    pub fn derivative(&self) -> HPoly {
        HPoly::from_terms(self.coeffs.iter().filter(|(&n, _)| n > 0).map(|(&n, c)| (n - 1, c.clone())))
    }

    /// Evaluates at `s = x`.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.to_monomial_coeffs().iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }
}

// JSON form: a list of `[n, "coeff"]` entries.
impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, &Rat)> = self.coeffs.iter().map(|(&n, c)| (n, c)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<HPoly, D::Error> {
        let v: Vec<(u32, Rat)> = Vec::deserialize(d)?;
        Ok(HPoly::from_terms(v))
    }
}

/// Product in H (free-function form).
pub fn hp_mul(a: &HPoly, b: &HPoly) -> HPoly {
    a.mul(b)
}

/// Coproduct `Δ(a)`.
pub fn hp_coproduct(a: &HPoly) -> Tensor2 {
    a.coproduct()
}

/// Counit `ε(a)`.
pub fn hp_counit(a: &HPoly) -> Rat {
    a.counit()
}

/// Antipode `S(a)`.
pub fn hp_antipode(a: &HPoly) -> HPoly {
    a.antipode()
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, o: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (&n, c) in &o.coeffs {
            out.add_term(n, c.clone());
        }
        out
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, o: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (&n, c) in &o.coeffs {
            out.add_term(n, -c);
        }
        out
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        self.scale(&Rat::int(-1))
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, o: &HPoly) -> HPoly {
        HPoly::mul(self, o)
    }
}

/// Formats a divided power in the text notation: `1`, `s`, `s(n)`.
pub fn mono_str(n: u32) -> String {
    match n {
        0 => "1".to_string(),
        1 => "s".to_string(),
        n => format!("s({n})"),
    }
}

/// Writes a signed linear combination `c1 X1 + c2 X2 - …`, or `0` if empty.
pub(crate) fn write_combination<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rat, String)>,
{
    let mut first = true;
    for (c, label) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        if label == "1" {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{label}")?;
        } else {
            write!(f, "{mag} {label}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.coeffs.iter().map(|(&n, c)| (c, mono_str(n))))
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> HPoly {
        HPoly::basis(n)
    }

    #[test]
    fn products() {
        assert_eq!(s(1).mul(&s(1)), HPoly::term(2, Rat::int(2)));
        assert_eq!(s(2).mul(&s(3)), HPoly::term(5, Rat::int(10)));
        assert!(HPoly::zero().mul(&s(4)).is_zero());
    }

    #[test]
    fn coproduct_examples() {
        let d = s(2).coproduct();
        let mut want = Tensor2::zero();
        want.add_term(0, 2, Rat::one());
        want.add_term(1, 1, Rat::one());
        want.add_term(2, 0, Rat::one());
        assert_eq!(d, want);
        assert_eq!(HPoly::one().coproduct(), Tensor2::basis(0, 0));
        let mut want = Tensor2::zero();
        want.add_term(0, 1, Rat::one());
        want.add_term(1, 0, Rat::one());
        want.add_term(0, 0, Rat::one());
        assert_eq!((&s(1) + &s(0)).coproduct(), want);
    }

    #[test]
    fn counit_antipode() {
        assert_eq!(s(3).counit(), Rat::zero());
        assert_eq!(HPoly::constant(Rat::new(5, 2)).counit(), Rat::new(5, 2));
        let p = &HPoly::constant(Rat::int(2)) + &HPoly::term(1, Rat::int(3));
        assert_eq!(p.counit(), Rat::int(2));
        assert_eq!(s(3).antipode(), -&s(3));
        assert_eq!(s(2).antipode(), s(2));
        assert_eq!(HPoly::one().antipode(), HPoly::one());
    }

    #[test]
    fn monomial_conversion() {
        // s^(2) = s^2/2
        assert_eq!(s(2).to_monomial_coeffs(), vec![Rat::zero(), Rat::zero(), Rat::new(1, 2)]);
        let p = HPoly::from_monomial_coeffs(&[Rat::int(1), Rat::zero(), Rat::int(1)]);
        assert_eq!(p, &HPoly::one() + &HPoly::term(2, Rat::int(2)));
        assert_eq!(s(2).eval(&Rat::int(3)), Rat::new(9, 2));
    }

    #[test]
    fn display() {
        let p = HPoly::from_terms([(0, Rat::int(-1)), (1, Rat::one()), (3, Rat::new(3, 2))]);
        assert_eq!(p.to_string(), "-1 + s + 3/2 s(3)");
        assert_eq!(HPoly::zero().to_string(), "0");
    }
}

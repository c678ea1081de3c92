//! Elements of H⊗H and H⊗H⊗H, the composition operators that express
//! iterated pseudobrackets, and the canonical form of `H⊗H ⊗_H M`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hopf::{mono_str, write_combination, HPoly};
use crate::rat::{binomial, Rat};

const BINOM_TABLE: usize = 96;

/// `C(n, k)` as a rational, served from a table for small `n`.
pub(crate) fn binom_rat(n: u32, k: u32) -> Rat {
    static TABLE: OnceLock<Vec<Vec<Rat>>> = OnceLock::new();
    if k > n {
        return Rat::zero();
    }
    if (n as usize) < BINOM_TABLE {
        let t = TABLE.get_or_init(|| {
            (0..BINOM_TABLE as u64).map(|n| (0..=n).map(|k| Rat::from_bigint(binomial(n, k))).collect()).collect()
        });
        t[n as usize][k as usize].clone()
    } else {
        Rat::from_bigint(binomial(n as u64, k as u64))
    }
}

/// An element `Σ c_ab s^(a) ⊗ s^(b)` of H⊗H.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Tensor2 {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl Tensor2 {
    pub fn zero() -> Tensor2 {
        Tensor2::default()
    }

    /// `s^(a) ⊗ s^(b)`.
    pub fn basis(a: u32, b: u32) -> Tensor2 {
        Tensor2::term(a, b, Rat::one())
    }

    /// `c s^(a) ⊗ s^(b)`.
    pub fn term(a: u32, b: u32, c: Rat) -> Tensor2 {
        let mut t = Tensor2::zero();
        t.add_term(a, b, c);
        t
    }

    /// Builds from `(a, b, c)` triples; repeated keys are summed.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rat)>>(it: I) -> Tensor2 {
        let mut t = Tensor2::zero();
        for (a, b, c) in it {
            t.add_term(a, b, c);
        }
        t
    }

    /// The pure tensor `f ⊗ g`.
    pub fn pure(f: &HPoly, g: &HPoly) -> Tensor2 {
        let mut t = Tensor2::zero();
        for (a, x) in f.terms() {
            for (b, y) in g.terms() {
                t.add_term(a, b, x * y);
            }
        }
        t
    }

    /// The CK-type element `λ s⊗1 − 1⊗s + κ 1⊗1`.
    pub fn ck(lambda: &Rat, kappa: &Rat) -> Tensor2 {
        Tensor2::from_terms([(1, 0, lambda.clone()), (0, 1, Rat::int(-1)), (0, 0, kappa.clone())])
    }

    /// The Virasoro element `α = s⊗1 − 1⊗s`.
    pub fn alpha() -> Tensor2 {
        Tensor2::ck(&Rat::one(), &Rat::zero())
    }

    /// `s^(a)⊗s^(b) − s^(b)⊗s^(a)`.
    pub fn antisym(a: u32, b: u32) -> Tensor2 {
        Tensor2::from_terms([(a, b, Rat::one()), (b, a, Rat::int(-1))])
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, other: &Tensor2, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (&(a, b), v) in &other.terms {
            self.add_term(a, b, v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterates `((a, b), c)` in lexicographic order of `(a, b)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rat)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum first-slot degree (`None` when zero).
    pub fn max_a(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Maximum second-slot degree (`None` when zero).
    pub fn max_b(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn scale(&self, c: &Rat) -> Tensor2 {
        if c.is_zero() {
            return Tensor2::zero();
        }
        Tensor2 { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// The transposition (12): `s^(a)⊗s^(b) ↦ s^(b)⊗s^(a)`.
    pub fn swap(&self) -> Tensor2 {
        Tensor2 { terms: self.terms.iter().map(|(&(a, b), v)| ((b, a), v.clone())).collect() }
    }

    /// Slotwise product `(f⊗g)(f'⊗g') = ff' ⊗ gg'`.
    pub fn mul(&self, other: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                let w = binom_rat(a + c, a) * binom_rat(b + d, b);
                out.add_term(a + c, b + d, x * y * w);
            }
        }
        out
    }

    /// `x · Δ(h)`.
    pub fn right_delta_action(&self, h: &HPoly) -> Tensor2 {
        self.mul(&h.coproduct())
    }

    /// `(h ⊗ 1) · x`.
    pub fn mul_first(&self, h: &HPoly) -> Tensor2 {
        self.mul(&Tensor2::pure(h, &HPoly::one()))
    }

    /// `(1 ⊗ h) · x`.
    pub fn mul_second(&self, h: &HPoly) -> Tensor2 {
        self.mul(&Tensor2::pure(&HPoly::one(), h))
    }

    /// True when `x = −(12)x`.
    pub fn is_antisymmetric(&self) -> bool {
        (self + &self.swap()).is_zero()
    }

    /// Applies ε to the first or second slot (`slot` ∈ {1, 2}).
    pub fn partial_counit(&self, slot: u8) -> HPoly {
        let mut out = HPoly::zero();
        for (&(a, b), c) in &self.terms {
            match slot {
                1 if a == 0 => out.add_term(b, c.clone()),
                2 if b == 0 => out.add_term(a, c.clone()),
                1 | 2 => {}
                _ => panic!("slot must be 1 or 2"),
            }
        }
        out
    }

    /// Embeds as `x ⊗ h` in H⊗3.
    pub fn tensor_right(&self, h: &HPoly) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (&(a, b), x) in &self.terms {
            for (c, y) in h.terms() {
                out.add_term(a, b, c, x * y);
            }
        }
        out
    }

    /// Writes the tensor using the file notation `c s(a)|s(b)`.
    pub fn to_expr(&self) -> String {
        self.to_string()
    }
}

/// (12) on H⊗2.
pub fn t2_swap(x: &Tensor2) -> Tensor2 {
    x.swap()
}

/// Slotwise product on H⊗2.
pub fn t2_mul(x: &Tensor2, y: &Tensor2) -> Tensor2 {
    x.mul(y)
}

/// `x · Δ(h)`.
pub fn right_delta_action(x: &Tensor2, h: &HPoly) -> Tensor2 {
    x.right_delta_action(h)
}

impl Add for &Tensor2 {
    type Output = Tensor2;
    fn add(self, o: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        out.add_scaled(o, &Rat::one());
        out
    }
}

impl Sub for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, o: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        out.add_scaled(o, &Rat::int(-1));
        out
    }
}

impl Neg for &Tensor2 {
    type Output = Tensor2;
    fn neg(self) -> Tensor2 {
        self.scale(&Rat::int(-1))
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter().map(|(&(a, b), c)| (c, format!("{}|{}", mono_str(a), mono_str(b)))))
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor2({self})")
    }
}

/// An element `Σ c_abc s^(a) ⊗ s^(b) ⊗ s^(c)` of H⊗3.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Tensor3 {
    terms: BTreeMap<(u32, u32, u32), Rat>,
}

impl Tensor3 {
    pub fn zero() -> Tensor3 {
        Tensor3::default()
    }

    pub fn basis(a: u32, b: u32, c: u32) -> Tensor3 {
        let mut t = Tensor3::zero();
        t.add_term(a, b, c, Rat::one());
        t
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, u32, u32, Rat)>>(it: I) -> Tensor3 {
        let mut t = Tensor3::zero();
        for (a, b, c, v) in it {
            t.add_term(a, b, c, v);
        }
        t
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: u32, v: Rat) {
        if v.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b, c)).or_insert_with(Rat::zero);
        *e += v;
        if e.is_zero() {
            self.terms.remove(&(a, b, c));
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor3, k: &Rat) {
        if k.is_zero() {
            return;
        }
        for (&(a, b, c), v) in &other.terms {
            self.add_term(a, b, c, v * k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32, c: u32) -> Rat {
        self.terms.get(&(a, b, c)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), &Rat)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rat) -> Tensor3 {
        if k.is_zero() {
            return Tensor3::zero();
        }
        Tensor3 { terms: self.terms.iter().map(|(&t, v)| (t, v * k)).collect() }
    }

    /// The transposition (12) of the first two slots.
    pub fn swap12(&self) -> Tensor3 {
        Tensor3 { terms: self.terms.iter().map(|(&(a, b, c), v)| ((b, a, c), v.clone())).collect() }
    }

    /// Slotwise product.
    pub fn mul(&self, other: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (&(a, b, c), x) in &self.terms {
            for (&(d, e, f), y) in &other.terms {
                let w = binom_rat(a + d, a) * binom_rat(b + e, b) * binom_rat(c + f, c);
                out.add_term(a + d, b + e, c + f, x * y * w);
            }
        }
        out
    }

    /// Applies ε to `slot` (1, 2 or 3) and keeps the other slots in order.
    pub fn partial_counit(&self, slot: u8) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&(a, b, c), v) in &self.terms {
            let kept = match slot {
                1 => (a == 0).then_some((b, c)),
                2 => (b == 0).then_some((a, c)),
                3 => (c == 0).then_some((a, b)),
                _ => panic!("slot must be 1, 2 or 3"),
            };
            if let Some((x, y)) = kept {
                out.add_term(x, y, v.clone());
            }
        }
        out
    }
}

/// (12) on H⊗3.
pub fn t3_swap12(x: &Tensor3) -> Tensor3 {
    x.swap12()
}

/// Applies ε to one slot of a Tensor3.
pub fn partial_counit(x: &Tensor3, slot: u8) -> Tensor2 {
    x.partial_counit(slot)
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, o: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        out.add_scaled(o, &Rat::one());
        out
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, o: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        out.add_scaled(o, &Rat::int(-1));
        out
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        self.scale(&Rat::int(-1))
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(
            f,
            self.terms.iter().map(|(&(a, b, c), v)| (v, format!("{}|{}|{}", mono_str(a), mono_str(b), mono_str(c)))),
        )
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3({self})")
    }
}

// JSON form: a list of `[a, b, "coeff"]` (resp. `[a, b, c, "coeff"]`) entries.
impl Serialize for Tensor2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32, &Rat)> = self.terms.iter().map(|(&(a, b), c)| (a, b, c)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tensor2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Tensor2, D::Error> {
        let v: Vec<(u32, u32, Rat)> = Vec::deserialize(d)?;
        Ok(Tensor2::from_terms(v))
    }
}

impl Serialize for Tensor3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32, u32, &Rat)> = self.terms.iter().map(|(&(a, b, c), v)| (a, b, c, v)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tensor3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Tensor3, D::Error> {
        let v: Vec<(u32, u32, u32, Rat)> = Vec::deserialize(d)?;
        Ok(Tensor3::from_terms(v))
    }
}

/// `(γΔ ⊗ 1) δ`: the H⊗3 coefficient of `[(γ ⊗_H u), v]` when `[u, v] = δ ⊗_H w`.
pub fn comp_left(gamma: &Tensor2, delta: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), x) in gamma.terms() {
        for ((c, d), y) in delta.terms() {
            let xy = x * y;
            for t in 0..=c {
                let w = binom_rat(a + t, t) * binom_rat(b + c - t, b);
                out.add_term(a + t, b + c - t, d, &xy * &w);
            }
        }
    }
    out
}

/// `(1 ⊗ γΔ) δ`: the H⊗3 coefficient of `[u, (γ ⊗_H v)]` when `[u, v] = δ ⊗_H w`.
pub fn comp_right(gamma: &Tensor2, delta: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((a, b), x) in gamma.terms() {
        for ((c, d), y) in delta.terms() {
            let xy = x * y;
            for t in 0..=d {
                let w = binom_rat(a + t, t) * binom_rat(b + d - t, b);
                out.add_term(c, a + t, b + d - t, &xy * &w);
            }
        }
    }
    out
}

/// Canonical representative of `x ⊗_H e` in the free H-module with basis
/// `{s^(d) ⊗ 1}`: a list of `(d, h_d)` meaning `Σ (s^(d) ⊗ 1) ⊗_H h_d e`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CanonicalPair {
    terms: Vec<(u32, HPoly)>,
}

impl CanonicalPair {
    /// Builds from `(degree, action)` pairs, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u32, HPoly)>>(it: I) -> CanonicalPair {
        let mut acc: BTreeMap<u32, HPoly> = BTreeMap::new();
        for (d, h) in it {
            let e = acc.entry(d).or_default();
            *e = &*e + &h;
        }
        CanonicalPair { terms: acc.into_iter().filter(|(_, h)| !h.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(u32, HPoly)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ (s^(d) ⊗ 1) · Δ(h_d)`.
    pub fn reconstruct(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (d, h) in &self.terms {
            out.add_scaled(&Tensor2::basis(*d, 0).mul(&h.coproduct()), &Rat::one());
        }
        out
    }
}

impl fmt::Debug for CanonicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter().map(|(d, h)| format!("({d}, {h})"))).finish()
    }
}

/// Rewrites `x ⊗_H e` canonically:
/// `s^(a)⊗s^(b) ↦ Σ_{t=0}^{b} (−1)^t C(a+t,t) (s^(a+t)⊗1) ⊗_H s^(b−t) e`.
pub fn normal_form(x: &Tensor2) -> CanonicalPair {
    let mut acc: BTreeMap<u32, HPoly> = BTreeMap::new();
    for ((a, b), c) in x.terms() {
        for t in 0..=b {
            let mut w = binom_rat(a + t, t) * c;
            if t % 2 == 1 {
                w = -w;
            }
            acc.entry(a + t).or_default().add_term(b - t, w);
        }
    }
    CanonicalPair { terms: acc.into_iter().filter(|(_, h)| !h.is_zero()).collect() }
}

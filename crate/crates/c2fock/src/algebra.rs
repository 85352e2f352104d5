//! Exact Laurent-polynomial arithmetic over ℤ, quantum integers, and the
//! Cartan datum of type C₂⁽¹⁾ together with weight bookkeeping.
//!
//! Every coefficient in the library lives in ℤ[q, q⁻¹]. Polynomials are kept
//! sparse and normalised (no zero coefficients are ever stored), so structural
//! equality coincides with mathematical equality.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A Laurent polynomial in `q` with unbounded integer coefficients.
///
/// The textual form lists terms by ascending exponent, e.g. `-q^-2+3+q^4`,
/// and [`FromStr`] accepts exactly the grammar that [`fmt::Display`] emits
/// (plus optional whitespace and a leading `+`).
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `c·q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `q^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Non-zero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at `q = 0` when the polynomial has no negative powers.
    pub fn at_zero(&self) -> Option<BigInt> {
        match self.min_exponent() {
            Some(e) if e < 0 => None,
            _ => Some(self.coeff(0)),
        }
    }

    /// Whether every exponent is at least one, i.e. the polynomial lies in `qℤ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 1)
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + s, c.clone())).collect() }
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplies every coefficient by the integer `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in ℤ[q, q⁻¹].
    ///
    /// Returns [`Error::NonDivisible`] when no Laurent polynomial `t` with
    /// `t·d = self` exists, and [`Error::DivisionByZero`] for `d = 0`.
    pub fn exact_div(&self, d: &Self) -> Result<Self, Error> {
        let (d_lo, d_hi) = match (d.min_exponent(), d.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::DivisionByZero),
        };
        let lead = d.coeffs[&d_hi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; the remainder's span shrinks each step,
        // so the loop ends once it is narrower than the divisor's.
        while let (Some(r_lo), Some(r_hi)) = (rem.min_exponent(), rem.max_exponent()) {
            if r_hi - r_lo < d_hi - d_lo {
                return Err(Error::NonDivisible);
            }
            let (q_c, r_c) = rem.coeffs[&r_hi].div_rem(&lead);
            if !r_c.is_zero() {
                return Err(Error::NonDivisible);
            }
            let step = Self::monomial(q_c, r_hi - d_hi);
            rem -= &(&step * d);
            quot += &step;
        }
        Ok(quot)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: String::from(msg) };
        if chars.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let mut p = Self::zero();
        let mut i = 0;
        let digits = |i: &mut usize| -> Option<BigInt> {
            let start = *i;
            while *i < chars.len() && chars[*i].1.is_ascii_digit() {
                *i += 1;
            }
            if start == *i {
                return None;
            }
            let text: String = chars[start..*i].iter().map(|(_, c)| *c).collect();
            text.parse().ok()
        };
        while i < chars.len() {
            let term_pos = chars[i].0;
            let mut sign = BigInt::one();
            match chars[i].1 {
                '+' => i += 1,
                '-' => {
                    sign = -sign;
                    i += 1;
                }
                _ if i > 0 => return Err(err(term_pos, "expected '+' or '-' between terms")),
                _ => {}
            }
            let pos = chars.get(i).map_or(s.len(), |c| c.0);
            let coeff = digits(&mut i);
            let has_q = if coeff.is_some() {
                if i < chars.len() && chars[i].1 == '*' {
                    i += 1;
                    if i >= chars.len() || chars[i].1 != 'q' {
                        return Err(err(chars.get(i).map_or(s.len(), |c| c.0), "expected 'q' after '*'"));
                    }
                    true
                } else {
                    false
                }
            } else if i < chars.len() && chars[i].1 == 'q' {
                true
            } else {
                return Err(err(pos, "expected a coefficient or 'q'"));
            };
            let mut exp = 0i64;
            if has_q {
                i += 1; // the 'q'
                exp = 1;
                if i < chars.len() && chars[i].1 == '^' {
                    i += 1;
                    let epos = chars.get(i).map_or(s.len(), |c| c.0);
                    let mut eneg = false;
                    if i < chars.len() && chars[i].1 == '-' {
                        eneg = true;
                        i += 1;
                    }
                    let e = digits(&mut i).ok_or_else(|| err(epos, "expected an exponent"))?;
                    let e: i64 = i64::try_from(e).map_err(|_| err(epos, "exponent out of range"))?;
                    exp = if eneg { -e } else { e };
                }
            }
            let c = coeff.unwrap_or_else(BigInt::one) * sign;
            p.add_term(exp, c);
        }
        Ok(p)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out += b;
    out
});
forward_binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out -= b;
    out
});
forward_binop!(Mul, mul, |a, b| {
    let mut out = LaurentPoly::zero();
    for (ea, ca) in &a.coeffs {
        for (eb, cb) in &b.coeffs {
            out.add_term(ea + eb, ca * cb);
        }
    }
    out
});

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Self { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// The bar-symmetric correction used by the global-basis recursion.
///
/// Writing `p = Σ aᵢ q⁻ⁱ`, returns `a₀ + Σ_{i≥1} aᵢ(qⁱ + q⁻ⁱ)`; terms with
/// positive exponent are dropped, so `p` minus the result lies in `qℤ[q]`.
pub fn bar_symmetrize(p: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in p.terms() {
        match e {
            0 => out.add_term(0, c.clone()),
            e if e < 0 => {
                out.add_term(e, c.clone());
                out.add_term(-e, c.clone());
            }
            _ => {}
        }
    }
    out
}

/// A color / simple-root index in `I = {0, 1, 2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Index(u8);

impl Index {
    pub const ZERO: Index = Index(0);
    pub const ONE: Index = Index(1);
    pub const TWO: Index = Index(2);
    /// All of `I` in increasing order.
    pub const ALL: [Index; 3] = [Index(0), Index(1), Index(2)];

    pub fn new(i: u8) -> Option<Self> {
        (i < 3).then_some(Index(i))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn idx(self) -> usize {
        self.0 as usize
    }

    /// Exponent `e` with `q_i = q^e`.
    pub fn qi_exponent(self) -> i64 {
        QI_EXPONENT[self.idx()]
    }

    /// Swaps the two cube colors 0 ↔ 2; the index 1 is fixed.
    pub fn cube_partner(self) -> Self {
        Index(2 - self.0)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The generalized Cartan matrix `A = (a_ij)`, with `α_j(h_i) = a_ij`.
pub const CARTAN: [[i64; 3]; 3] = [[2, -1, 0], [-2, 2, -2], [0, -1, 2]];

/// `q_i = q^{QI_EXPONENT[i]}`: `q₀ = q₂ = q²`, `q₁ = q`.
pub const QI_EXPONENT: [i64; 3] = [2, 1, 2];

/// Coefficients of the null root `δ = α₀ + 2α₁ + α₂`.
pub const DELTA: [u32; 3] = [1, 2, 1];

/// `q_i`-integer `[k]_i = Σ_{j=0}^{k-1} q_i^{k-1-2j}`.
pub fn quantum_int(k: i64, i: Index) -> Result<LaurentPoly, Error> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    Ok(quantum_int_signed(k, i))
}

/// `(q_i^k − q_i^{-k}) / (q_i − q_i^{-1})` for any integer `k`.
pub fn quantum_int_signed(k: i64, i: Index) -> LaurentPoly {
    let e = i.qi_exponent();
    let (sign, k) = if k < 0 { (-1, -k) } else { (1, k) };
    LaurentPoly::from_terms((0..k).map(|j| (e * (k - 1 - 2 * j), sign)))
}

/// `[n]_i! = Π_{k=1}^{n} [k]_i`.
pub fn quantum_factorial(n: i64, i: Index) -> Result<LaurentPoly, Error> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    Ok((1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_int_signed(k, i)))
}

/// The `q_i`-binomial coefficient `[n choose k]_i`.
pub fn quantum_binomial(n: i64, k: i64, i: Index) -> Result<LaurentPoly, Error> {
    if k < 0 || k > n {
        return Ok(LaurentPoly::zero());
    }
    let num = quantum_factorial(n, i)?;
    let den = &quantum_factorial(k, i)? * &quantum_factorial(n - k, i)?;
    num.exact_div(&den)
}

/// A weight `Λ_λ − Σ kᵢαᵢ` of a level-one module.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight {
    pub lambda: Index,
    pub k: [u32; 3],
}

impl Weight {
    /// The dominant weight `Λ_λ` itself.
    pub fn dominant(lambda: Index) -> Self {
        Self { lambda, k: [0; 3] }
    }

    /// `Λ_λ − m·δ`.
    pub fn minus_delta(lambda: Index, m: u32) -> Self {
        Self { lambda, k: DELTA.map(|d| d * m) }
    }

    /// Total number of simple roots subtracted.
    pub fn depth(&self) -> u32 {
        self.k.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.lambda)?;
        for (i, k) in self.k.iter().enumerate() {
            if *k > 0 {
                write!(f, "-{k}a{i}")?;
            }
        }
        Ok(())
    }
}

/// `⟨h_j, w⟩ = δ_{jλ} − Σᵢ kᵢ a_{ji}`.
pub fn pairing(j: Index, w: &Weight) -> i64 {
    let base = i64::from(j == w.lambda);
    base - (0..3).map(|i| i64::from(w.k[i]) * CARTAN[j.idx()][i]).sum::<i64>()
}

/// `⟨d, w⟩`, where the scaling element pairs to 1 with `α₀` and to 0 with the
/// fundamental weights.
pub fn pairing_d(w: &Weight) -> i64 {
    -i64::from(w.k[0])
}

/// `w − r·αᵢ`.
pub fn weight_sub_alpha(w: &Weight, i: Index, r: u32) -> Weight {
    let mut out = *w;
    out.k[i.idx()] += r;
    out
}

/// Returns `m` when `w1 − w2 = m·δ` (as elements `Λ − Σkα`, so `w2` is higher).
pub fn is_delta_shift(w1: &Weight, w2: &Weight) -> Option<u32> {
    if w1.lambda != w2.lambda {
        return None;
    }
    let d: [i64; 3] = core::array::from_fn(|i| i64::from(w1.k[i]) - i64::from(w2.k[i]));
    let m = d[0];
    (m >= 0 && d == [m, 2 * m, m]).then_some(m as u32)
}

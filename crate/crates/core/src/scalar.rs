//! Exact scalars in Q or a cyclotomic field Q(zeta_n).
//!
//! Q(zeta_n) is stored as Q[t]/Phi_n(t) in the power basis `1, t, .., t^(phi(n)-1)`.
//! An element whose coordinates beyond the constant term vanish is always
//! normalized to a plain rational, so rationals combine freely with every
//! field; two genuinely cyclotomic elements of different orders do not.

use crate::error::{Error, Result};
use crate::poly::UPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

pub type Rat = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rat),
    /// Order `n >= 3` and `phi(n)` coordinates, at least one non-constant one nonzero.
    Cyc { n: u32, c: Vec<Rat> },
}

pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi as usize
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // t^n - 1 divided by Phi_d for every proper divisor d
    let mut num = UPoly::monomial(Rat::one(), n as usize).sub(&UPoly::constant(Rat::one()));
    for d in 1..n {
        if n % d == 0 {
            let pd = UPoly::new(cyclotomic_poly(d).to_vec());
            num = num.divrem(&pd).0;
        }
    }
    let p = Arc::new(num.coeffs().to_vec());
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduce a coefficient vector modulo Phi_n (monic), in place.
fn reduce_mod_phi(n: u32, c: &mut Vec<Rat>) {
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    while c.len() > d {
        let k = c.len() - 1;
        let f = c[k].clone();
        if !f.is_zero() {
            for i in 0..d {
                let t = &f * &phi[i];
                c[k - d + i] -= t;
            }
        }
        c.pop();
    }
    c.resize(d, Rat::zero());
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(rat(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Rat(Rat::new(num.into(), den.into()))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::Rat(r)
    }

    /// The primitive root `zeta_n = exp(2 pi i / n)`.
    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1, "cyclotomic order must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        if n <= 2 {
            return if n == 2 && k == 1 { Self::from_int(-1) } else { Self::one() };
        }
        let mut c = vec![Rat::zero(); k + 1];
        c[k] = Rat::one();
        Self::from_coeffs(n, c)
    }

    /// Build from power-basis coordinates (any length; reduced mod Phi_n).
    pub fn from_coeffs(n: u32, mut c: Vec<Rat>) -> Self {
        if n <= 2 {
            // Q(zeta_1) = Q(zeta_2) = Q with t = +-1
            let t = if n == 2 { rat(-1) } else { rat(1) };
            let v = UPoly::new(c).eval(&t);
            return Scalar::Rat(v);
        }
        reduce_mod_phi(n, &mut c);
        Self::normalize(n, c)
    }

    fn normalize(n: u32, mut c: Vec<Rat>) -> Self {
        if c.iter().skip(1).all(|x| x.is_zero()) {
            Scalar::Rat(c.swap_remove(0))
        } else {
            Scalar::Cyc { n, c }
        }
    }

    /// Cyclotomic order this element genuinely lives in (1 for rationals).
    pub fn order(&self) -> u32 {
        match self {
            Scalar::Rat(_) => 1,
            Scalar::Cyc { n, .. } => *n,
        }
    }

    /// Power-basis coordinates in Q(zeta_n), padded to phi(n).
    pub fn coeffs_in(&self, n: u32) -> Vec<Rat> {
        let phi = euler_phi(n.max(1));
        match self {
            Scalar::Rat(r) => {
                let mut v = vec![Rat::zero(); phi];
                v[0] = r.clone();
                v
            }
            Scalar::Cyc { c, .. } => c.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    fn common_order(&self, o: &Self) -> Result<u32> {
        match (self, o) {
            (Scalar::Cyc { n, .. }, Scalar::Cyc { n: m, .. }) if n != m => {
                Err(Error::IncompatibleCyclotomicOrder { left: *n, right: *m })
            }
            _ => Ok(self.order().max(o.order())),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (self, o) {
            return Ok(Scalar::Rat(a + b));
        }
        let n = self.common_order(o)?;
        let (a, b) = (self.coeffs_in(n), o.coeffs_in(n));
        Ok(Self::normalize(n, a.iter().zip(&b).map(|(x, y)| x + y).collect()))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => return Ok(Scalar::Rat(a * b)),
            (Scalar::Rat(a), Scalar::Cyc { n, c }) | (Scalar::Cyc { n, c }, Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Ok(Self::zero());
                }
                return Ok(Scalar::Cyc { n: *n, c: c.iter().map(|x| x * a).collect() });
            }
            _ => {}
        }
        let n = self.common_order(o)?;
        let (a, b) = (self.coeffs_in(n), o.coeffs_in(n));
        let mut c = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        reduce_mod_phi(n, &mut c);
        Ok(Self::normalize(n, c))
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Cyc { n, c } => {
                let a = UPoly::new(c.clone());
                let m = UPoly::new(cyclotomic_poly(*n).to_vec());
                // Phi_n is irreducible, so gcd(a, Phi_n) = 1 and s*a = 1 mod Phi_n
                let (_, s, _) = UPoly::ext_gcd(&a, &m);
                Ok(Self::from_coeffs(*n, s.coeffs().to_vec()))
            }
        }
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Smallest `k >= 1` with `self^k = 1`, searched up to `bound`.
    pub fn multiplicative_order(&self, bound: u32) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_one() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, o) {
            *a += b;
            return;
        }
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, o) {
            *a -= b;
            return;
        }
        *self = &*self - o;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc { n, c } => Scalar::Cyc { n: *n, c: c.iter().map(|x| -x).collect() },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rat(r)),
            Scalar::Cyc { n, c } => {
                let mut first = true;
                for (k, a) in c.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let neg = a.is_negative();
                    let abs = a.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if neg { '-' } else { '+' })?;
                    }
                    first = false;
                    let mono = match k {
                        0 => String::new(),
                        1 => format!("z{n}"),
                        _ => format!("z{n}^{k}"),
                    };
                    if k == 0 {
                        write!(f, "{}", fmt_rat(&abs))?;
                    } else if abs.is_one() {
                        write!(f, "{mono}")?;
                    } else {
                        write!(f, "{}*{mono}", fmt_rat(&abs))?;
                    }
                }
                Ok(())
            }
        }
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(a, b))
        }
        None => Ok(Rat::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// One unsigned term: `q`, `z<n>[^k]`, `zeta<n>[^k]`, `i`, or `q*<root>`.
fn parse_term(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (coef, root) = match s.split_once('*') {
        Some((a, b)) => (Scalar::Rat(parse_rat(a)?), b.trim()),
        None if s.starts_with('z') || s == "i" => (Scalar::one(), s),
        None => return Ok(Scalar::Rat(parse_rat(s)?)),
    };
    let root = if root == "i" { "z4" } else { root };
    let body = root
        .strip_prefix("zeta")
        .or_else(|| root.strip_prefix('z'))
        .ok_or_else(|| Error::Parse(format!("bad root of unity {root:?}")))?;
    let (n, k) = match body.split_once('^') {
        Some((n, k)) => (n, k.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {root:?}")))?),
        None => (body, 1),
    };
    let n: u32 = n.parse().map_err(|_| Error::Parse(format!("bad order in {root:?}")))?;
    if n == 0 {
        return Err(Error::Parse("cyclotomic order must be positive".into()));
    }
    coef.try_mul(&Scalar::zeta_pow(n, k))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts sums such as `-1`, `3/4`, `i`, `z8^3`, `1/2 - 2*z3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut acc = Scalar::zero();
        let mut sign = 1;
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut i = 0;
        let flush = |from: usize, to: usize, sign: i32, acc: &mut Scalar| -> Result<()> {
            let t = s[from..to].trim();
            if t.is_empty() {
                return Err(Error::Parse(format!("bad scalar {s:?}")));
            }
            let v = parse_term(t)?;
            *acc = acc.try_add(&if sign < 0 { -v } else { v })?;
            Ok(())
        };
        // a leading sign belongs to the first term
        if bytes[0] == b'-' || bytes[0] == b'+' {
            sign = if bytes[0] == b'-' { -1 } else { 1 };
            start = 1;
            i = 1;
        }
        while i < bytes.len() {
            let ch = bytes[i];
            let after_caret = i > 0 && bytes[i - 1] == b'^';
            if (ch == b'+' || ch == b'-') && !after_caret {
                flush(start, i, sign, &mut acc)?;
                sign = if ch == b'-' { -1 } else { 1 };
                start = i + 1;
            }
            i += 1;
        }
        flush(start, bytes.len(), sign, &mut acc)?;
        Ok(acc)
    }
}

fn int_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

impl Scalar {
    /// `{"n": order, "coeffs": [[num, den], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.order();
        let coeffs: Vec<serde_json::Value> = self
            .coeffs_in(n)
            .iter()
            .map(|r| serde_json::Value::Array(vec![int_json(r.numer()), int_json(r.denom())]))
            .collect();
        serde_json::json!({ "n": n, "coeffs": coeffs })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("scalar JSON: {m}"));
        match v {
            serde_json::Value::Number(_) | serde_json::Value::String(_) => {
                let s = match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                s.parse()
            }
            serde_json::Value::Object(o) => {
                let n = o.get("n").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing n"))? as u32;
                if n == 0 {
                    return Err(bad("n must be positive"));
                }
                let arr = o.get("coeffs").and_then(|x| x.as_array()).ok_or_else(|| bad("missing coeffs"))?;
                let mut c = Vec::with_capacity(arr.len());
                for pair in arr {
                    let p = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("coefficient must be [num, den]"))?;
                    let get = |x: &serde_json::Value| -> Result<BigInt> {
                        match x {
                            serde_json::Value::Number(n) => n.to_string().parse().map_err(|_| bad("bad integer")),
                            serde_json::Value::String(s) => s.parse().map_err(|_| bad("bad integer")),
                            _ => Err(bad("bad integer")),
                        }
                    };
                    let (a, b) = (get(&p[0])?, get(&p[1])?);
                    if b.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    c.push(Rat::new(a, b));
                }
                if c.len() > euler_phi(n) {
                    return Err(bad("more coefficients than phi(n)"));
                }
                Ok(Self::from_coeffs(n, c))
            }
            _ => Err(bad("expected object, number or string")),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Scalar::from_json(&v).map_err(D::Error::custom)
    }
}

/// Least common multiple helper used when validating character orders.
pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(s("1/2") + s("1/3"), s("5/6"));
    }

    #[test]
    fn zeta2_squared_is_one() {
        let z = Scalar::zeta(2);
        assert!((&z * &z).is_one());
    }

    #[test]
    fn inverse_of_zeta4() {
        let z = Scalar::zeta(4);
        // z^3 = -z since z^2 = -1
        assert_eq!(z.inv().unwrap(), -&z);
        assert_eq!(z.inv().unwrap(), Scalar::zeta_pow(4, 3));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_orders_rejected() {
        let e = Scalar::zeta(3).try_add(&Scalar::zeta(5));
        assert_eq!(e, Err(Error::IncompatibleCyclotomicOrder { left: 3, right: 5 }));
        // rationals embed everywhere
        assert!(Scalar::zeta(3).try_add(&s("2")).is_ok());
    }

    #[test]
    fn cyclotomic_polys() {
        let as_i: Vec<i64> = cyclotomic_poly(12).iter().map(|r| r.to_integer().to_i64().unwrap()).collect();
        assert_eq!(as_i, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(8).len() - 1, euler_phi(8));
    }

    #[test]
    fn primitive_roots() {
        for n in 1..=12u32 {
            let z = Scalar::zeta(n);
            assert_eq!(z.multiplicative_order(100), Some(n), "zeta_{n}");
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for t in ["-1", "3/4", "z4", "-z8^3", "1/2 - 2*z3", "z5 + z5^2"] {
            let v = s(t);
            assert_eq!(s(&v.to_string()), v, "{t}");
        }
        assert_eq!(s("i"), Scalar::zeta(4));
        assert_eq!(s("z6^3"), s("-1"));
    }

    #[test]
    fn json_roundtrip() {
        let v = s("1/2 - 2*z3");
        let j = v.to_json();
        assert_eq!(j["n"], 3);
        assert_eq!(Scalar::from_json(&j).unwrap(), v);
        assert_eq!(s("5/6").to_json().to_string(), r#"{"coeffs":[[5,6]],"n":1}"#);
    }
}

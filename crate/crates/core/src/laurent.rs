//! Multivariate Laurent polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent vector; entries may be negative.
pub type Exponents = Vec<i32>;

/// A Laurent polynomial in `x_1, ..., x_nvars`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::term(vec![0; nvars], c)
    }

    /// The monomial `x^exps` with coefficient 1.
    pub fn monomial(exps: Exponents) -> Self {
        Self::term(exps, BigInt::one())
    }

    pub fn term(exps: Exponents, c: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        if i < 1 || i > nvars {
            return Err(Error::IndexOutOfRange { index: i, max: nvars });
        }
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Ok(Self::monomial(e))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    fn shift(&self, by: &[i32]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms.
    fn min_exponents(&self) -> Exponents {
        let mut min = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            min.iter_mut().zip(e).for_each(|(m, &x)| *m = (*m).min(x));
        }
        min
    }

    fn divisibility_error(a: &Self, b: &Self) -> Error {
        Error::Divisibility { dividend: a.canonical_string(), divisor: b.canonical_string() }
    }

    /// The quotient `q` with `q * b = a`, by lex-ordered reduction after clearing
    /// monomial factors; errors when the remainder is nonzero.
    pub fn exact_div(&self, b: &Self) -> Result<Self> {
        self.same_ring(b)?;
        if b.is_zero() {
            return Err(Self::divisibility_error(self, b));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let neg = |v: &[i32]| -> Exponents { v.iter().map(|x| -x).collect() };
        let (beta, alpha) = (b.min_exponents(), self.min_exponents());
        let divisor = b.shift(&neg(&beta));
        let mut rem = self.shift(&neg(&alpha));
        let (lead_e, lead_c) = divisor.terms.last_key_value().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
        let mut quotient = Self::zero(self.nvars);
        while let Some((e, c)) = rem.terms.last_key_value().map(|(e, c)| (e.clone(), c.clone())) {
            let fits = e.iter().zip(&lead_e).all(|(x, y)| x >= y);
            let (q, r) = c.div_rem(&lead_c);
            if !fits || !r.is_zero() {
                return Err(Self::divisibility_error(self, b));
            }
            let te: Exponents = e.iter().zip(&lead_e).map(|(x, y)| x - y).collect();
            let t = Self::term(te, q);
            rem = rem.sub(&t.mul(&divisor)?)?;
            quotient = quotient.add(&t)?;
        }
        let back: Exponents = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
        Ok(quotient.shift(&back))
    }

    /// Splits into a numerator with nonnegative exponents and the smallest monomial denominator.
    pub fn numerator_denominator(&self) -> (Self, Exponents) {
        let den: Exponents = if self.is_zero() {
            vec![0; self.nvars]
        } else {
            self.min_exponents().iter().map(|&m| (-m).max(0)).collect()
        };
        (self.shift(&den), den)
    }

    /// Numerator coefficients are all positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Deterministic rendering: numerator terms ascending in degree, ties broken
    /// lexicographically with `x_1 > x_2 > ...`, followed by `/` and the
    /// monomial denominator when there is one.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (num, den) = self.numerator_denominator();
        let mut terms: Vec<(&Exponents, &BigInt)> = num.terms.iter().collect();
        terms.sort_by(|a, b| degree_lex(a.0, b.0));
        let mut s = String::new();
        for (k, (e, c)) in terms.iter().enumerate() {
            let body = render_term(e, &c.abs());
            match (k, c.is_negative()) {
                (0, false) => s.push_str(&body),
                (0, true) => {
                    s.push('-');
                    s.push_str(&body);
                }
                (_, false) => {
                    s.push_str(" + ");
                    s.push_str(&body);
                }
                (_, true) => {
                    s.push_str(" - ");
                    s.push_str(&body);
                }
            }
        }
        let factors = den.iter().filter(|&&d| d > 0).count();
        if factors == 0 {
            return s;
        }
        let numer = if terms.len() > 1 { format!("({s})") } else { s };
        let denom = render_monomial(&den);
        if factors > 1 {
            format!("{numer}/({denom})")
        } else {
            format!("{numer}/{denom}")
        }
    }

    /// Parses the output of [`LaurentPoly::canonical_string`] (and sums written with `+`/`-`).
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        Parser { src: s.as_bytes(), pos: 0, nvars }.parse_all()
    }
}

fn degree_lex(a: &Exponents, b: &Exponents) -> Ordering {
    let (da, db): (i64, i64) = (a.iter().map(|&x| i64::from(x)).sum(), b.iter().map(|&x| i64::from(x)).sum());
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn render_monomial(e: &[i32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
        .collect::<Vec<_>>()
        .join("*")
}

fn render_term(e: &[i32], c: &BigInt) -> String {
    let mono = render_monomial(e);
    match (mono.is_empty(), c.is_one()) {
        (true, _) => c.to_string(),
        (false, true) => mono,
        (false, false) => format!("{c}*{mono}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.canonical_string())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected a number"))
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let i: usize = self.number()?.try_into().map_err(|_| self.err("variable index"))?;
                let mut v = LaurentPoly::var(self.nvars, i)?;
                if self.eat(b'^') {
                    let e: u32 = self.number()?.try_into().map_err(|_| self.err("exponent"))?;
                    v = v.pow(e);
                }
                Ok(v)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(d) if d.is_ascii_digit() => Ok(LaurentPoly::constant(self.nvars, self.number()?)),
            _ => Err(self.err("expected a factor")),
        }
    }

    fn product(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?)?;
            } else if self.eat(b'/') {
                acc = acc.exact_div(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn sum(&mut self) -> Result<LaurentPoly> {
        let mut acc = if self.eat(b'-') { self.product()?.neg() } else { self.product()? };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.product()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.product()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_all(mut self) -> Result<LaurentPoly> {
        let p = self.sum()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }
}

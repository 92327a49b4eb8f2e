//! Sparse bigraded polynomials in `X0, X1, Y0, Y1` over the rationals.
//!
//! `X0, X1` carry degree `(1,0)` and `Y0, Y1` carry degree `(0,1)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scheme::PointP1P1;

/// Exact rational coefficients.
pub type Q = BigRational;

/// Builds the rational `n`.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Builds the rational `n/d`. Panics when `d == 0`.
pub fn qq(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A bidegree `(i, j)`; components may be negative for shifted indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiDegree {
    pub i: i64,
    pub j: i64,
}

impl BiDegree {
    pub const fn new(i: i64, j: i64) -> Self {
        BiDegree { i, j }
    }

    pub fn is_nonnegative(self) -> bool {
        self.i >= 0 && self.j >= 0
    }

    /// Componentwise order `self ⪯ other`.
    pub fn precedes(self, other: BiDegree) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    /// `self ⪯ other` and `self != other`.
    pub fn strictly_precedes(self, other: BiDegree) -> bool {
        self.precedes(other) && self != other
    }

    /// `dim S_{i,j}`, zero off the first quadrant.
    pub fn dim(self) -> usize {
        if self.is_nonnegative() {
            ((self.i + 1) * (self.j + 1)) as usize
        } else {
            0
        }
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.i + o.i, self.j + o.j)
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.i - o.i, self.j - o.j)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// One of the four variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X0,
    X1,
    Y0,
    Y1,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X0, Var::X1, Var::Y0, Var::Y1];

    fn index(self) -> usize {
        match self {
            Var::X0 => 0,
            Var::X1 => 1,
            Var::Y0 => 2,
            Var::Y1 => 3,
        }
    }

    /// `(1,0)` for the X-variables, `(0,1)` for the Y-variables.
    pub fn bidegree(self) -> BiDegree {
        match self {
            Var::X0 | Var::X1 => BiDegree::new(1, 0),
            Var::Y0 | Var::Y1 => BiDegree::new(0, 1),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Var::X0 => "X0",
            Var::X1 => "X1",
            Var::Y0 => "Y0",
            Var::Y1 => "Y1",
        }
    }
}

/// `X0^a0 X1^a1 Y0^b0 Y1^b1`, stored as `[a0, a1, b0, b1]`.
///
/// The `Ord` impl is reversed lexicographic order on the exponent tuple, so
/// sorted collections list monomials from the lexicographically largest
/// exponent tuple down. This is the global monomial order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn new(a0: u32, a1: u32, b0: u32, b1: u32) -> Self {
        Monomial([a0, a1, b0, b1])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn bidegree(&self) -> BiDegree {
        BiDegree::new((self.0[0] + self.0[1]) as i64, (self.0[2] + self.0[3]) as i64)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2], self.0[3] + o.0[3]])
    }

    /// Position of this monomial inside `monomial_basis(self.bidegree())`.
    pub fn basis_index(&self) -> usize {
        let j = (self.0[2] + self.0[3]) as usize;
        self.0[1] as usize * (j + 1) + self.0[3] as usize
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of bidegree `deg` in the global order; empty off the first
/// quadrant. Index `p*(j+1) + q` holds `X0^(i-p) X1^p Y0^(j-q) Y1^q`.
pub fn monomial_basis(deg: BiDegree) -> Vec<Monomial> {
    if !deg.is_nonnegative() {
        return Vec::new();
    }
    let (i, j) = (deg.i as u32, deg.j as u32);
    let mut out = Vec::with_capacity(deg.dim());
    for p in 0..=i {
        for q in 0..=j {
            out.push(Monomial::new(i - p, p, j - q, q));
        }
    }
    out
}

/// Sparse polynomial with nonzero rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        BiPoly::term(Monomial::default(), c)
    }

    pub fn var(v: Var) -> Self {
        BiPoly::term(Monomial::var(v), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { terms }
    }

    /// Reads a coefficient vector indexed by `monomial_basis(deg)`.
    pub fn from_coefficients(deg: BiDegree, coeffs: &[Q]) -> Self {
        let terms = monomial_basis(deg)
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, c.clone()))
            .collect();
        BiPoly { terms }
    }

    /// Coefficient vector indexed by `monomial_basis(deg)`; terms of other
    /// bidegrees are ignored.
    pub fn coefficients(&self, deg: BiDegree) -> Vec<Q> {
        let mut out = vec![Q::zero(); deg.dim()];
        for (m, c) in &self.terms {
            if m.bidegree() == deg {
                out[m.basis_index()] = c.clone();
            }
        }
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The common bidegree of all terms, or `None` for zero or mixed input.
    pub fn bidegree(&self) -> Option<BiDegree> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Zero counts as bihomogeneous.
    pub fn is_bihomogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    pub fn scale(&self, c: &Q) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> BiPoly {
        let k = v.index();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut d = *m;
            d.0[k] -= 1;
            terms.insert(d, c * q(e as i64));
        }
        BiPoly { terms }
    }

    /// Value at explicit homogeneous coordinates.
    pub fn evaluate_at(&self, x: &[Q; 2], y: &[Q; 2]) -> Q {
        let vals = [&x[0], &x[1], &y[0], &y[1]];
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, v) in vals.iter().enumerate() {
                for _ in 0..m.0[k] {
                    t *= *v;
                }
            }
            acc += t;
        }
        acc
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Q::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $f(self, o: BiPoly) -> BiPoly {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Value of a bihomogeneous `f` at the normalized coordinates of `p`.
pub fn evaluate(f: &BiPoly, p: &PointP1P1) -> Result<Q> {
    if !f.is_bihomogeneous() {
        return Err(Error::Precondition("evaluation needs a bihomogeneous polynomial".into()));
    }
    Ok(f.evaluate_at(p.x(), p.y()))
}

/// An invertible linear substitution acting separately on `(X0, X1)` and
/// `(Y0, Y1)`: `X_k -> xmat[k][0] X0 + xmat[k][1] X1`, likewise for `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    xmat: [[Q; 2]; 2],
    ymat: [[Q; 2]; 2],
}

fn det2(m: &[[Q; 2]; 2]) -> Q {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn inv2(m: &[[Q; 2]; 2]) -> [[Q; 2]; 2] {
    let d = det2(m);
    [[&m[1][1] / &d, -&m[0][1] / &d], [-&m[1][0] / &d, &m[0][0] / &d]]
}

fn mat2(m: [[i64; 2]; 2]) -> [[Q; 2]; 2] {
    m.map(|r| r.map(q))
}

impl LinearChange {
    pub fn new(xmat: [[Q; 2]; 2], ymat: [[Q; 2]; 2]) -> Result<Self> {
        if det2(&xmat).is_zero() || det2(&ymat).is_zero() {
            return Err(Error::SingularChange);
        }
        Ok(LinearChange { xmat, ymat })
    }

    pub fn from_integers(xmat: [[i64; 2]; 2], ymat: [[i64; 2]; 2]) -> Result<Self> {
        LinearChange::new(mat2(xmat), mat2(ymat))
    }

    pub fn identity() -> Self {
        LinearChange { xmat: mat2([[1, 0], [0, 1]]), ymat: mat2([[1, 0], [0, 1]]) }
    }

    pub fn xmat(&self) -> &[[Q; 2]; 2] {
        &self.xmat
    }

    pub fn ymat(&self) -> &[[Q; 2]; 2] {
        &self.ymat
    }

    pub fn inverse(&self) -> Self {
        LinearChange { xmat: inv2(&self.xmat), ymat: inv2(&self.ymat) }
    }

    /// The substitution for one pair of coordinates taking `[1:0]` to the
    /// projective point `c` (assumed normalized): a shear when `c0 != 0`,
    /// otherwise the swap.
    pub fn pair_to_origin(c: &[Q; 2]) -> [[Q; 2]; 2] {
        if c[0].is_zero() {
            mat2([[0, 1], [1, 0]])
        } else {
            [[c[0].clone(), Q::zero()], [c[1].clone(), Q::one()]]
        }
    }

    /// Substitution after which `p` sits at `[1:0]×[1:0]`.
    pub fn to_origin(p: &PointP1P1) -> Self {
        LinearChange { xmat: LinearChange::pair_to_origin(p.x()), ymat: LinearChange::pair_to_origin(p.y()) }
    }

    fn image(&self, v: Var) -> BiPoly {
        let (row, a, b) = match v {
            Var::X0 => (&self.xmat[0], Var::X0, Var::X1),
            Var::X1 => (&self.xmat[1], Var::X0, Var::X1),
            Var::Y0 => (&self.ymat[0], Var::Y0, Var::Y1),
            Var::Y1 => (&self.ymat[1], Var::Y0, Var::Y1),
        };
        &BiPoly::var(a).scale(&row[0]) + &BiPoly::var(b).scale(&row[1])
    }

    /// Substitutes the images of the four variables into `f`.
    pub fn apply(&self, f: &BiPoly) -> BiPoly {
        let images = Var::ALL.map(|v| self.image(v));
        let mut powers: [Vec<BiPoly>; 4] = Default::default();
        let mut out = BiPoly::zero();
        for (m, c) in f.terms() {
            let mut t = BiPoly::constant(c.clone());
            for k in 0..4 {
                let e = m.0[k] as usize;
                while powers[k].len() <= e {
                    let next = match powers[k].last() {
                        None => BiPoly::one(),
                        Some(last) => last * &images[k],
                    };
                    powers[k].push(next);
                }
                t = &t * &powers[k][e];
            }
            out = &out + &t;
        }
        out
    }
}

/// Substitutes the images of `c` into `f`.
pub fn apply_change(c: &LinearChange, f: &BiPoly) -> BiPoly {
    c.apply(f)
}

fn fmt_rational(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = *m == Monomial::default();
            if is_const {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}

/// Parses `p`, `-p` or `p/q` with decimal integers.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn factor(&mut self, mono: &mut Monomial, coeff: &mut Q) -> Result<()> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.number()?;
                let mut c = Q::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.number()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    c /= Q::from_integer(d);
                }
                *coeff *= c;
            }
            Some(b'X') | Some(b'Y') => {
                let letter = self.src[self.pos];
                self.pos += 1;
                let v = match (letter, self.src.get(self.pos)) {
                    (b'X', Some(b'0')) => Var::X0,
                    (b'X', Some(b'1')) => Var::X1,
                    (b'Y', Some(b'0')) => Var::Y0,
                    (b'Y', Some(b'1')) => Var::Y1,
                    _ => return Err(self.err("unknown variable")),
                };
                self.pos += 1;
                let mut e = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = self.number()?.try_into().map_err(|_| self.err("exponent too large"))?;
                }
                mono.0[v.index()] += e;
            }
            _ => return Err(self.err("expected a coefficient or variable")),
        }
        Ok(())
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    /// Syntax: `3/2*X0^2*X1*Y1 - Y0^3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut lx = Lexer { src: s.as_bytes(), pos: 0 };
        let mut out = BiPoly::zero();
        let mut first = true;
        loop {
            let mut sign = Q::one();
            match lx.peek() {
                None if first => return Err(lx.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    lx.pos += 1;
                }
                Some(b'-') => {
                    lx.pos += 1;
                    sign = -sign;
                }
                Some(_) if first => {}
                Some(_) => return Err(lx.err("expected + or -")),
            }
            first = false;
            let mut mono = Monomial::default();
            let mut coeff = sign;
            lx.factor(&mut mono, &mut coeff)?;
            while lx.peek() == Some(b'*') {
                lx.pos += 1;
                lx.factor(&mut mono, &mut coeff)?;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

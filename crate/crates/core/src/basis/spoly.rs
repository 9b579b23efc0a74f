//! Polynomials in named variables `S_w = T^w - 1` and `δ`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{q, Character, ClassFraction, CoeffFrac, LaurentPoly, QPoly, Rational};

use super::BasisError;

/// An ordered alphabet of characters `w_1, …, w_N` with display names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SVariableSet {
    weights: Vec<Character>,
    names: Vec<String>,
}

impl SVariableSet {
    /// Letters named `S[w]` after their characters.
    pub fn new(weights: Vec<Character>) -> Result<Self, BasisError> {
        let names = weights.iter().map(|w| format!("S{}", w.render())).collect();
        Self::with_names(weights, names)
    }

    pub fn with_names(weights: Vec<Character>, names: Vec<String>) -> Result<Self, BasisError> {
        if weights.len() != names.len() {
            return Err(BasisError::InvalidArgument("one name per letter".into()));
        }
        let Some(rank) = weights.first().map(Character::rank) else {
            return Err(BasisError::InvalidArgument("empty alphabet".into()));
        };
        for (i, w) in weights.iter().enumerate() {
            if w.rank() != rank {
                return Err(BasisError::InvalidArgument(format!(
                    "letter {} has rank {}",
                    w.render(),
                    w.rank()
                )));
            }
            if w.is_zero() {
                return Err(BasisError::InvalidArgument("zero letter".into()));
            }
            if weights[..i].contains(w) {
                return Err(BasisError::InvalidArgument(format!("repeated letter {}", w.render())));
            }
            if names[..i].contains(&names[i]) || names[i] == "d" {
                return Err(BasisError::InvalidArgument(format!(
                    "bad or repeated name {}",
                    names[i]
                )));
            }
        }
        Ok(SVariableSet { weights, names })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.weights[0].rank()
    }

    pub fn weights(&self) -> &[Character] {
        &self.weights
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, w: &Character) -> Option<usize> {
        self.weights.iter().position(|x| x == w)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// The same letters in the order `perm[0], perm[1], …`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, BasisError> {
        check_perm(perm, self.len())?;
        Ok(SVariableSet {
            weights: perm.iter().map(|&i| self.weights[i].clone()).collect(),
            names: perm.iter().map(|&i| self.names[i].clone()).collect(),
        })
    }
}

fn check_perm(perm: &[usize], n: usize) -> Result<(), BasisError> {
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
        return Err(BasisError::InvalidArgument("not a permutation".into()));
    }
    Ok(())
}

/// `Π S_i^{s_i} · δ^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SMonomial {
    pub s: Vec<u32>,
    pub d: u32,
}

impl SMonomial {
    pub fn one(n: usize) -> Self {
        SMonomial { s: vec![0; n], d: 0 }
    }

    pub fn s_degree(&self) -> u32 {
        self.s.iter().sum()
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &SMonomial) -> bool {
        self.d <= other.d && self.s.iter().zip(&other.s).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &SMonomial) -> SMonomial {
        SMonomial {
            s: self.s.iter().zip(&other.s).map(|(a, b)| a + b).collect(),
            d: self.d + other.d,
        }
    }

    pub fn render(&self, vars: &SVariableSet) -> String {
        let mut parts = Vec::new();
        for (e, name) in self.s.iter().zip(vars.names()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        match self.d {
            0 => {}
            1 => parts.push("d".into()),
            e => parts.push(format!("d^{e}")),
        }
        parts.join("*")
    }
}

/// Graded by S-degree, then lexicographic with earlier letters first, then
/// by δ-degree.
impl Ord for SMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.s_degree()
            .cmp(&other.s_degree())
            .then_with(|| other.s.cmp(&self.s))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl PartialOrd for SMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `S_{w_1}, …, S_{w_N}` and `δ` with rational
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SPolynomial {
    nvars: usize,
    terms: BTreeMap<SMonomial, Rational>,
}

impl SPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(SMonomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn term(m: SMonomial, c: Rational) -> Self {
        let mut p = Self::zero(m.s.len());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = SMonomial::one(nvars);
        m.s[i] = 1;
        Self::term(m, Rational::one())
    }

    pub fn delta(nvars: usize) -> Self {
        let mut m = SMonomial::one(nvars);
        m.d = 1;
        Self::term(m, Rational::one())
    }

    /// A polynomial in `δ` as an S-polynomial.
    pub fn from_delta_poly(nvars: usize, p: &QPoly) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut m = SMonomial::one(nvars);
            m.d = k as u32;
            out.add_term(m, c.clone());
        }
        out
    }

    pub(crate) fn from_map(nvars: usize, terms: HashMap<SMonomial, Rational>) -> Self {
        SPolynomial {
            nvars,
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&SMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: SMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    fn check(&self, other: &SPolynomial) -> Result<(), BasisError> {
        if self.nvars != other.nvars {
            return Err(BasisError::InvalidArgument(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub(crate) fn add_assign(&mut self, other: &SPolynomial) -> Result<(), BasisError> {
        self.check(other)?;
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
        Ok(())
    }

    pub fn add(&self, other: &SPolynomial) -> Result<SPolynomial, BasisError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SPolynomial {
        self.scale(&q(-1))
    }

    pub fn sub(&self, other: &SPolynomial) -> Result<SPolynomial, BasisError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> SPolynomial {
        let mut out = Self::zero(self.nvars);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &SPolynomial) -> Result<SPolynomial, BasisError> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> SPolynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self).expect("same variables");
        }
        acc
    }

    /// Renames variable `i` to `perm`-position: the result uses the alphabet
    /// `vars.permuted(perm)`.
    pub fn permuted(&self, perm: &[usize]) -> Result<SPolynomial, BasisError> {
        check_perm(perm, self.nvars)?;
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let s = perm.iter().map(|&i| m.s[i]).collect();
            out.add_term(SMonomial { s, d: m.d }, c.clone());
        }
        Ok(out)
    }

    /// The Laurent polynomial obtained by substituting `S_w = T^w - 1`.
    pub fn to_laurent(&self, vars: &SVariableSet) -> Result<LaurentPoly, BasisError> {
        if vars.len() != self.nvars {
            return Err(BasisError::InvalidArgument("alphabet size mismatch".into()));
        }
        let rank = vars.rank();
        // Π (T^{w_i} - 1)^{e_i} = Σ_j Π C(e_i, j_i) (-1)^{e_i - j_i} T^{Σ j_i w_i},
        // expanded once per distinct S-exponent vector
        let mut by_s: HashMap<&[u32], Vec<(u32, &Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            by_s.entry(&m.s).or_default().push((m.d, c));
        }
        let mut coeffs: HashMap<Vec<i64>, Vec<Rational>> = HashMap::new();
        for (s, ds) in by_s {
            let mut exp: Vec<(Vec<i64>, BigInt)> = vec![(vec![0; rank], BigInt::one())];
            for (i, &e) in s.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let w = vars.weights()[i].coords();
                let mut next = Vec::with_capacity(exp.len() * (e as usize + 1));
                let mut binom = BigInt::one();
                for j in 0..=e {
                    let signed = if (e - j) % 2 == 0 {
                        binom.clone()
                    } else {
                        -binom.clone()
                    };
                    for (m, b) in &exp {
                        let m: Vec<i64> = m.iter().zip(w).map(|(a, x)| a + i64::from(j) * x).collect();
                        next.push((m, b * &signed));
                    }
                    binom = binom * BigInt::from(e - j) / BigInt::from(j + 1);
                }
                exp = next;
            }
            for (m, b) in exp {
                let slot = coeffs.entry(m).or_default();
                for &(d, c) in &ds {
                    if slot.len() <= d as usize {
                        slot.resize(d as usize + 1, Rational::zero());
                    }
                    slot[d as usize] += c * Rational::from_integer(b.clone());
                }
            }
        }
        let terms = coeffs
            .into_iter()
            .map(|(k, v)| (Character::from(k), CoeffFrac::poly(QPoly::from_coeffs(v))));
        Ok(LaurentPoly::from_terms(rank, terms)?)
    }

    /// The class obtained by substituting `S_w = T^w - 1`.
    pub fn to_class(&self, vars: &SVariableSet) -> Result<ClassFraction, BasisError> {
        Ok(ClassFraction::from_laurent(self.to_laurent(vars)?))
    }

    /// `3*S[2,0]^2*S[1,1]*d^2 - d + 1`, terms in canonical order.
    pub fn render(&self, vars: &SVariableSet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = m.render(vars);
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for SPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(m, c)| ((&m.s, m.d), c.to_string())))
            .finish()
    }
}

/// `Π S_i^{e_i}` as a class: `Π (T^{w_i} - 1)^{e_i}`.
pub fn monomial_class(exps: &[u32], vars: &SVariableSet) -> Result<ClassFraction, BasisError> {
    SPolynomial::term(SMonomial { s: exps.to_vec(), d: 0 }, Rational::one()).to_class(vars)
}

/// Parses an expression in the letters of `vars`, `d` (or `δ`), integers,
/// `+ - * / ^` and parentheses; only numbers may follow `/`. Letters are referred to by name or as
/// `S[a,b,…]`; juxtaposition multiplies.
pub fn parse_spoly(src: &str, vars: &SVariableSet) -> Result<SPolynomial, BasisError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected token"));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, BasisError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut n: i64 = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(i64::from(chars[i].1.to_digit(10).unwrap())))
                    .ok_or(BasisError::Parse {
                        at,
                        msg: "number too large".into(),
                    })?;
                i += 1;
            }
            out.push((at, Tok::Num(n)));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                s.push(chars[i].1);
                i += 1;
            }
            if i < chars.len() && chars[i].1 == '[' {
                while i < chars.len() && chars[i].1 != ']' {
                    if !chars[i].1.is_whitespace() {
                        s.push(chars[i].1);
                    }
                    i += 1;
                }
                if i == chars.len() {
                    return Err(BasisError::Parse {
                        at,
                        msg: "unclosed '['".into(),
                    });
                }
                s.push(']');
                i += 1;
            }
            out.push((at, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((at, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(BasisError::Parse {
                at,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a SVariableSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn err(&self, msg: &str) -> BasisError {
        let at = self.toks.get(self.pos).map_or(usize::MAX, |t| t.0);
        BasisError::Parse { at, msg: msg.into() }
    }

    fn expr(&mut self) -> Result<SPolynomial, BasisError> {
        let n = self.vars.len();
        let mut acc = SPolynomial::zero(n);
        let mut sign = q(1);
        if self.peek() == Some(&Tok::Sym('-')) {
            sign = q(-1);
            self.pos += 1;
        } else if self.peek() == Some(&Tok::Sym('+')) {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign))?;
            match self.peek() {
                Some(Tok::Sym('+')) => sign = q(1),
                Some(Tok::Sym('-')) => sign = q(-1),
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<SPolynomial, BasisError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.pos += 1;
                }
                Some(Tok::Sym('/')) => {
                    self.pos += 1;
                    let at = self.pos;
                    let divisor = self.factor()?;
                    let c = match divisor.terms().collect::<Vec<_>>()[..] {
                        [(m, c)] if m.d == 0 && m.s.iter().all(|&e| e == 0) => c.clone(),
                        _ => {
                            self.pos = at;
                            return Err(self.err("can only divide by a nonzero number"));
                        }
                    };
                    acc = acc.scale(&(Rational::one() / c));
                    continue;
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Sym('(')) => {}
                _ => return Ok(acc),
            }
            acc = acc.mul(&self.factor()?)?;
        }
    }

    fn factor(&mut self) -> Result<SPolynomial, BasisError> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Sym('^')) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(k)) => {
                    let k = u32::try_from(*k).map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return Err(self.err("expected an exponent")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<SPolynomial, BasisError> {
        let n = self.vars.len();
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Num(k) => Ok(SPolynomial::constant(n, q(k))),
            Tok::Ident(name) if name == "d" || name == "δ" => Ok(SPolynomial::delta(n)),
            Tok::Ident(name) => {
                if let Some(i) = self.vars.index_of_name(&name) {
                    return Ok(SPolynomial::var(n, i));
                }
                if let Some(w) = bracket_character(&name) {
                    if let Some(i) = self.vars.index_of(&w) {
                        return Ok(SPolynomial::var(n, i));
                    }
                }
                self.pos -= 1;
                Err(self.err(&format!("unknown variable {name}")))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Sym(_) => {
                self.pos -= 1;
                Err(self.err("unexpected symbol"))
            }
        }
    }
}

fn bracket_character(name: &str) -> Option<Character> {
    let inner = name.strip_prefix("S[")?.strip_suffix(']')?;
    let coords: Result<Vec<i64>, _> = inner.split(',').map(str::parse).collect();
    coords.ok().map(Character::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> SVariableSet {
        SVariableSet::new(vec![[1, 0].into(), [0, 1].into(), [1, 1].into()]).unwrap()
    }

    #[test]
    fn render_grammar() {
        let v = abc();
        let p = parse_spoly("3*S[1,0]^2*S[1,1]*d^2 - d + 1", &v).unwrap();
        assert_eq!(p.render(&v), "1 - d + 3*S[1,0]^2*S[1,1]*d^2");
        assert_eq!(parse_spoly(&p.render(&v), &v).unwrap(), p);
    }

    #[test]
    fn parse_with_names_and_juxtaposition() {
        let w = vec![Character::from([1])];
        let v = SVariableSet::with_names(w, vec!["S".into()]).unwrap();
        let p = parse_spoly("9δ S^5 (2+3 S)", &v).unwrap();
        assert_eq!(p.render(&v), "18*S^5*d + 27*S^6*d");
        assert!(parse_spoly("S +", &v).is_err());
        assert!(parse_spoly("X", &v).is_err());
        assert!(parse_spoly("(S", &v).is_err());
    }

    #[test]
    fn division_by_numbers() {
        let w = vec![Character::from([1])];
        let v = SVariableSet::with_names(w, vec!["S".into()]).unwrap();
        let p = parse_spoly("(1+d)^2/2 - S/3", &v).unwrap();
        assert_eq!(p.render(&v), "1/2 + d + 1/2*d^2 - 1/3*S");
        assert_eq!(parse_spoly(&p.render(&v), &v).unwrap(), p);
        assert!(parse_spoly("1/S", &v).is_err());
        assert!(parse_spoly("1/0", &v).is_err());
        assert!(parse_spoly("1/(2-2)", &v).is_err());
    }

    #[test]
    fn class_round_trip() {
        let v = abc();
        let p = parse_spoly("S[1,0]*S[0,1] + S[1,0] + S[0,1]", &v).unwrap();
        assert_eq!(p.to_class(&v).unwrap(), ClassFraction::s_var(&[1, 1].into()));
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(SVariableSet::new(vec![[1].into(), [1].into()]).is_err());
        assert!(SVariableSet::new(vec![[0].into()]).is_err());
        assert!(SVariableSet::new(vec![]).is_err());
    }
}

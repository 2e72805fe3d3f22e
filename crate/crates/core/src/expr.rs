//! Text syntax for elements of every algebra, shared by the CLI and the FFI.
//!
//! ```text
//! expr     := ["-"] term (("+" | "-") term)*
//! term     := rational ["*"] atom | atom | rational
//! rational := int | int "/" posint
//! atom     := M(comp) | S(comp) | e(comp) | h(part) | m(part) | p(part)
//!           | W(word) | T[tree] | [tree] | K[forest] | K() | F[forest] | F()
//! ```
//!
//! `e(...)` is an NSym elementary element unless the expression also uses
//! `h`, `m` or `p`, in which case it is the symmetric function `e_λ`.
//! A bare rational is that multiple of the unit.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};
use crate::hopf::{Tensor2, TensorDisplay};
use crate::hopf_trees::{HFElement, HKElement, TElement, GL, HF, HK};
use crate::lincomb::{LinComb, Rational};
use crate::qsym::{NSym, NSymElement, QSym, QSymElement};
use crate::series::TruncatedPoly;
use crate::sym::{SymBasis, SymElement};
use crate::trees::{Forest, PlanarForest, PlanarTree, RootedTree};
use crate::words::{Letter, Word};

/// The algebras an expression can live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    QSym,
    NSym,
    Sym,
    Word,
    T,
    HK,
    HF,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::QSym => "QSym",
            Algebra::NSym => "NSym",
            Algebra::Sym => "Sym",
            Algebra::Word => "Word",
            Algebra::T => "T",
            Algebra::HK => "HK",
            Algebra::HF => "HF",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "QSym" => Algebra::QSym,
            "NSym" => Algebra::NSym,
            "Sym" => Algebra::Sym,
            "Word" => Algebra::Word,
            "T" => Algebra::T,
            "HK" => Algebra::HK,
            "HF" => Algebra::HF,
            other => return Err(Error::InvalidArgument(format!("unknown algebra {:?}", other))),
        })
    }
}

/// A parsed element.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    QSym(QSymElement),
    NSym(NSymElement),
    Sym(SymElement),
    Word(LinComb<Word>),
    T(TElement),
    HK(HKElement),
    HF(HFElement),
}

impl Value {
    pub fn algebra(&self) -> Algebra {
        match self {
            Value::QSym(_) => Algebra::QSym,
            Value::NSym(_) => Algebra::NSym,
            Value::Sym(_) => Algebra::Sym,
            Value::Word(_) => Algebra::Word,
            Value::T(_) => Algebra::T,
            Value::HK(_) => Algebra::HK,
            Value::HF(_) => Algebra::HF,
        }
    }

    fn mismatch(&self, other: &Value) -> Error {
        Error::AlgebraMismatch(format!("cannot combine {} with {}", self.algebra(), other.algebra()))
    }

    pub fn add(&self, other: &Value) -> Result<Value> {
        Ok(match (self, other) {
            (Value::QSym(a), Value::QSym(b)) => Value::QSym(a + b),
            (Value::NSym(a), Value::NSym(b)) => Value::NSym(a + b),
            (Value::Sym(a), Value::Sym(b)) => Value::Sym(a.add(b)),
            (Value::Word(a), Value::Word(b)) => Value::Word(a + b),
            (Value::T(a), Value::T(b)) => Value::T(a + b),
            (Value::HK(a), Value::HK(b)) => Value::HK(a + b),
            (Value::HF(a), Value::HF(b)) => Value::HF(a + b),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn scale(&self, c: &Rational) -> Value {
        match self {
            Value::QSym(a) => Value::QSym(a.scale(c)),
            Value::NSym(a) => Value::NSym(a.scale(c)),
            Value::Sym(a) => Value::Sym(a.scale(c)),
            Value::Word(a) => Value::Word(a.scale(c)),
            Value::T(a) => Value::T(a.scale(c)),
            Value::HK(a) => Value::HK(a.scale(c)),
            Value::HF(a) => Value::HF(a.scale(c)),
        }
    }

    /// Algebra product. Words have no product here; use the shuffle.
    pub fn mul(&self, other: &Value) -> Result<Value> {
        Ok(match (self, other) {
            (Value::QSym(a), Value::QSym(b)) => Value::QSym(a.mul(b)),
            (Value::NSym(a), Value::NSym(b)) => Value::NSym(a.mul(b)),
            (Value::Sym(a), Value::Sym(b)) => Value::Sym(a.mul(b)),
            (Value::T(a), Value::T(b)) => Value::T(a.mul(b)),
            (Value::HK(a), Value::HK(b)) => Value::HK(a.mul(b)),
            (Value::HF(a), Value::HF(b)) => Value::HF(a.mul(b)),
            (Value::Word(_), Value::Word(_)) => {
                return Err(Error::InvalidArgument("words have no product here; use the shuffle".into()))
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn antipode(&self) -> Result<Value> {
        Ok(match self {
            Value::QSym(a) => Value::QSym(a.antipode()),
            Value::NSym(a) => Value::NSym(a.antipode()),
            Value::Sym(a) => Value::Sym(sym_antipode(a)),
            Value::T(a) => Value::T(a.antipode()),
            Value::HK(a) => Value::HK(a.antipode()),
            Value::HF(a) => Value::HF(a.antipode()),
            Value::Word(_) => return Err(Error::InvalidArgument("words carry no antipode here".into())),
        })
    }

    pub fn coproduct(&self) -> Result<TensorValue> {
        Ok(match self {
            Value::QSym(a) => TensorValue::QSym(a.coproduct()),
            Value::NSym(a) => TensorValue::NSym(a.coproduct()),
            Value::Sym(a) => TensorValue::Sym(a.coproduct_e()),
            Value::T(a) => TensorValue::T(a.coproduct()),
            Value::HK(a) => TensorValue::HK(a.coproduct()),
            Value::HF(a) => TensorValue::HF(a.coproduct()),
            Value::Word(_) => return Err(Error::InvalidArgument("words carry no coproduct here".into())),
        })
    }

    /// The truncated series of a QSym or Sym element.
    pub fn expand(&self, num_vars: usize, max_deg: u32) -> Result<TruncatedPoly> {
        match self {
            Value::QSym(a) => Ok(a.expand(num_vars, max_deg)),
            Value::Sym(a) => Ok(a.to_qsym().expand(num_vars, max_deg)),
            other => Err(Error::InvalidArgument(format!("cannot expand an element of {}", other.algebra()))),
        }
    }
}

/// `S(e_n) = (-1)^n h_n`, extended multiplicatively; result in the input's basis.
fn sym_antipode(a: &SymElement) -> SymElement {
    let mut out = SymElement::zero(SymBasis::H);
    for (lambda, c) in a.to_basis(SymBasis::E).terms().iter() {
        let sign = if lambda.weight() % 2 == 0 { c.clone() } else { -c.clone() };
        let image = SymElement::basis_element(SymBasis::H, lambda.clone()).scale(&sign);
        out = out.add(&image);
    }
    out.to_basis(a.basis())
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::QSym(a) => a.fmt(f),
            Value::NSym(a) => a.fmt(f),
            Value::Sym(a) => a.fmt(f),
            Value::Word(a) => a.fmt_with(f, |w, f| write!(f, "W({})", w)),
            Value::T(a) => a.fmt(f),
            Value::HK(a) => a.fmt(f),
            Value::HF(a) => a.fmt(f),
        }
    }
}

/// An element of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq)]
pub enum TensorValue {
    QSym(Tensor2<Composition>),
    NSym(Tensor2<Composition>),
    /// In the `e` basis.
    Sym(Tensor2<Partition>),
    T(Tensor2<RootedTree>),
    HK(Tensor2<Forest>),
    HF(Tensor2<PlanarForest>),
}

impl fmt::Display for TensorValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorValue::QSym(t) => TensorDisplay::<QSym>(t).fmt(f),
            TensorValue::NSym(t) => TensorDisplay::<NSym>(t).fmt(f),
            TensorValue::Sym(t) => t.fmt_with(f, |(x, y), f| write!(f, "e{} ⊗ e{}", x, y)),
            TensorValue::T(t) => TensorDisplay::<GL>(t).fmt(f),
            TensorValue::HK(t) => TensorDisplay::<HK>(t).fmt(f),
            TensorValue::HF(t) => TensorDisplay::<HF>(t).fmt(f),
        }
    }
}

/// Parses an expression, inferring its algebra from the basis tokens.
pub fn parse(text: &str) -> Result<Value> {
    parse_impl(text, None)
}

/// Parses an expression that must lie in `algebra`.
pub fn parse_in(text: &str, algebra: Algebra) -> Result<Value> {
    parse_impl(text, Some(algebra))
}

fn parse_impl(text: &str, expected: Option<Algebra>) -> Result<Value> {
    let terms = Parser::new(text).expression()?;
    let uses_sym = terms.iter().any(|t| matches!(t.atom, Atom::Sym(..)));
    let mut algebra = expected;
    for t in &terms {
        let found = match &t.atom {
            Atom::Unit => continue,
            Atom::E(_) if expected.is_none() => {
                if uses_sym {
                    Algebra::Sym
                } else {
                    Algebra::NSym
                }
            }
            Atom::E(_) => match expected {
                Some(a @ (Algebra::Sym | Algebra::NSym)) => a,
                _ => Algebra::NSym,
            },
            other => other.algebra(),
        };
        match algebra {
            None => algebra = Some(found),
            Some(a) if a == found => {}
            Some(a) => {
                return Err(Error::Parse {
                    pos: t.pos,
                    msg: format!("a {} term cannot appear in an element of {}", found, a),
                })
            }
        }
    }
    let Some(algebra) = algebra else {
        return Err(Error::Parse { pos: 0, msg: "a bare scalar needs a basis term to fix its algebra".into() });
    };
    let mut acc = zero_of(algebra);
    for t in terms {
        let v = t.atom.into_value(algebra, t.pos)?;
        acc = acc.add(&v.scale(&t.coeff))?;
    }
    Ok(acc)
}

fn zero_of(algebra: Algebra) -> Value {
    match algebra {
        Algebra::QSym => Value::QSym(QSymElement::zero()),
        Algebra::NSym => Value::NSym(NSymElement::zero()),
        Algebra::Sym => Value::Sym(SymElement::zero(SymBasis::E)),
        Algebra::Word => Value::Word(LinComb::zero()),
        Algebra::T => Value::T(TElement::zero()),
        Algebra::HK => Value::HK(HKElement::zero()),
        Algebra::HF => Value::HF(HFElement::zero()),
    }
}

#[derive(Debug)]
enum Atom {
    Unit,
    M(Composition),
    S(Composition),
    E(Composition),
    Sym(SymBasis, Partition),
    Word(Word),
    T(RootedTree),
    K(Forest),
    F(PlanarForest),
}

impl Atom {
    fn algebra(&self) -> Algebra {
        match self {
            Atom::M(_) => Algebra::QSym,
            Atom::S(_) | Atom::E(_) | Atom::Unit => Algebra::NSym,
            Atom::Sym(..) => Algebra::Sym,
            Atom::Word(_) => Algebra::Word,
            Atom::T(_) => Algebra::T,
            Atom::K(_) => Algebra::HK,
            Atom::F(_) => Algebra::HF,
        }
    }

    fn into_value(self, algebra: Algebra, pos: usize) -> Result<Value> {
        Ok(match self {
            Atom::Unit => match algebra {
                Algebra::QSym => Value::QSym(QSymElement::one()),
                Algebra::NSym => Value::NSym(NSymElement::one()),
                Algebra::Sym => Value::Sym(SymElement::one(SymBasis::E)),
                Algebra::Word => Value::Word(LinComb::basis(Word::empty())),
                Algebra::T => Value::T(TElement::one()),
                Algebra::HK => Value::HK(HKElement::one()),
                Algebra::HF => Value::HF(HFElement::one()),
            },
            Atom::M(c) => Value::QSym(QSymElement::basis(c)),
            Atom::S(c) => Value::NSym(NSymElement::basis(c)),
            Atom::E(c) if algebra == Algebra::Sym => {
                Value::Sym(SymElement::basis_element(SymBasis::E, c.sorted_partition()))
            }
            Atom::E(c) => Value::NSym(NSymElement::elementary(c.parts()).map_err(|e| at(pos, e))?),
            Atom::Sym(b, lambda) => Value::Sym(SymElement::basis_element(b, lambda)),
            Atom::Word(w) => Value::Word(LinComb::basis(w)),
            Atom::T(t) => Value::T(TElement::basis(t)),
            Atom::K(f) => Value::HK(HKElement::basis(f)),
            Atom::F(f) => Value::HF(HFElement::basis(f)),
        })
    }
}

fn at(pos: usize, e: Error) -> Error {
    match e {
        Error::Parse { pos: inner, msg } => Error::Parse { pos: pos + inner, msg },
        other => Error::Parse { pos, msg: other.to_string() },
    }
}

struct Term {
    coeff: Rational,
    atom: Atom,
    pos: usize,
}

/// Positions in errors count characters from the start of the input.
struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self { chars: text.chars().collect(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected {:?}, found {:?}", c, found)),
                None => self.err(format!("expected {:?}, found end of input", c)),
            }
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-' | '−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn expression(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let mut negate = self.sign() == Some(true);
        loop {
            self.skip_ws();
            let mut t = self.term()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            self.skip_ws();
            match self.peek() {
                None => return Ok(terms),
                Some(_) => match self.sign() {
                    Some(n) => negate = n,
                    None => return self.err(format!("expected '+' or '-', found {:?}", self.peek().unwrap_or(' '))),
                },
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let start = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let coeff = self.rational()?;
            self.skip_ws();
            let explicit = self.eat('*');
            self.skip_ws();
            match self.peek() {
                Some(c) if explicit || is_atom_start(c) => {
                    let pos = self.pos;
                    let atom = self.atom()?;
                    Ok(Term { coeff, atom, pos })
                }
                _ => Ok(Term { coeff, atom: Atom::Unit, pos: start }),
            }
        } else {
            let atom = self.atom()?;
            Ok(Term { coeff: Rational::one(), atom, pos: start })
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.eat('/') {
            let at = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn atom(&mut self) -> Result<Atom> {
        let Some(c) = self.peek() else {
            return self.err("expected a basis element, found end of input");
        };
        if c == '[' {
            return Ok(Atom::T(self.single_tree()?));
        }
        self.pos += 1;
        match c {
            'M' => Ok(Atom::M(self.composition()?)),
            'S' => Ok(Atom::S(self.composition()?)),
            'e' => Ok(Atom::E(self.composition()?)),
            'h' | 'm' | 'p' => {
                let basis = SymBasis::from_tag(c).expect("sym tag");
                Ok(Atom::Sym(basis, self.composition()?.sorted_partition()))
            }
            'W' => {
                self.expect('(')?;
                let mut letters = Vec::new();
                loop {
                    match self.peek() {
                        Some('x') => letters.push(Letter::X),
                        Some('y') => letters.push(Letter::Y),
                        Some(')') => break,
                        Some(other) => return self.err(format!("expected 'x', 'y' or ')', found {:?}", other)),
                        None => return self.err("expected ')', found end of input"),
                    }
                    self.pos += 1;
                }
                self.pos += 1;
                Ok(Atom::Word(Word::new(letters)))
            }
            'T' => Ok(Atom::T(self.single_tree()?)),
            'K' => Ok(Atom::K(self.forest()?.to_rooted())),
            'F' => Ok(Atom::F(self.forest()?)),
            other => {
                self.pos -= 1;
                self.err(format!("expected a basis element, found {:?}", other))
            }
        }
    }

    fn composition(&mut self) -> Result<Composition> {
        self.expect('(')?;
        let mut parts = Vec::new();
        self.skip_ws();
        if self.eat(')') {
            return Ok(Composition::empty());
        }
        loop {
            self.skip_ws();
            let at = self.pos;
            let n = self.integer()?;
            let part = u32::try_from(&n).ok().filter(|&p| p > 0);
            let Some(part) = part else {
                return Err(Error::Parse { pos: at, msg: format!("parts must be positive integers, found {}", n) });
            };
            parts.push(part);
            self.skip_ws();
            if self.eat(')') {
                return Ok(Composition::new(parts).expect("positive parts"));
            }
            self.expect(',')?;
        }
    }

    fn single_tree(&mut self) -> Result<RootedTree> {
        if self.peek() != Some('[') {
            return self.err("expected '['");
        }
        Ok(self.planar_tree()?.to_rooted())
    }

    fn forest(&mut self) -> Result<PlanarForest> {
        if self.eat('(') {
            self.expect(')')?;
            return Ok(PlanarForest::empty());
        }
        if self.peek() != Some('[') {
            return self.err("expected '[' or '()'");
        }
        let mut trees = Vec::new();
        while self.peek() == Some('[') {
            trees.push(self.planar_tree()?);
        }
        Ok(PlanarForest::new(trees))
    }

    fn planar_tree(&mut self) -> Result<PlanarTree> {
        self.expect('[')?;
        let mut children = Vec::new();
        while self.peek() == Some('[') {
            children.push(self.planar_tree()?);
        }
        self.expect(']')?;
        Ok(PlanarTree::from_children(children))
    }
}

fn is_atom_start(c: char) -> bool {
    matches!(c, 'M' | 'S' | 'e' | 'h' | 'm' | 'p' | 'W' | 'T' | 'K' | 'F' | '[')
}

/// Reads a plain composition argument such as `2,1` or `(2,1)`.
pub fn parse_composition(text: &str) -> Result<Composition> {
    text.parse()
}

/// Reads a single tree, with or without the `T` tag.
pub fn parse_tree(text: &str) -> Result<RootedTree> {
    match parse_in(text, Algebra::T)? {
        Value::T(t) => {
            let mut it = t.terms().iter();
            match (it.next(), it.next()) {
                (Some((tree, c)), None) if c.is_one() => Ok(tree.clone()),
                _ => Err(Error::Parse { pos: 0, msg: "expected a single tree".into() }),
            }
        }
        _ => unreachable!("parse_in returns the requested algebra"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rational;

    fn round_trip(text: &str) {
        let v = parse(text).unwrap();
        let printed = v.to_string();
        assert_eq!(parse_in(&printed, v.algebra()).unwrap(), v, "{} -> {}", text, printed);
    }

    #[test]
    fn parses_each_algebra() {
        assert_eq!(parse("2*M(1,1) + M(2)").unwrap().to_string(), "2*M(1,1) + M(2)");
        assert_eq!(parse("M(2) + 2M(1,1)").unwrap().to_string(), "2*M(1,1) + M(2)");
        assert_eq!(parse("e(2)").unwrap().to_string(), "S(1,1) - S(2)");
        assert_eq!(parse("e(2) + 0*h(1)").unwrap().to_string(), "e(2)");
        assert_eq!(parse("W(xy) - 1/2*W(xxy)").unwrap().to_string(), "W(xy) - 1/2*W(xxy)");
        assert_eq!(parse("[[]]").unwrap().to_string(), "T[[]]");
        assert_eq!(parse("K[][[]] + K()").unwrap().to_string(), "K() + K[][[]]");
        assert_eq!(parse("F[[]][]").unwrap().to_string(), "F[[]][]");
        assert_eq!(parse("T[[[]][]]").unwrap(), parse("T[[][[]]]").unwrap());
        assert_eq!(parse("−M(3)").unwrap().to_string(), "-M(3)");
    }

    #[test]
    fn scalars_follow_the_algebra() {
        assert_eq!(parse("M(1) + 3").unwrap().to_string(), "3*M() + M(1)");
        assert_eq!(parse_in("1/2", Algebra::T).unwrap(), Value::T(TElement::one().scale(&rational(1, 2))));
        assert!(parse("3").is_err());
        assert!(parse("0").is_err());
    }

    #[test]
    fn zero_round_trips_in_context() {
        let zero = parse("M(1) - M(1)").unwrap();
        assert_eq!(zero.to_string(), "0");
        assert_eq!(parse_in("0", Algebra::QSym).unwrap(), zero);
    }

    #[test]
    fn errors_carry_positions() {
        let cases = [
            ("M(1,", 4),
            ("M(1,0)", 4),
            ("M(1) + ", 7),
            ("M(1) + X(2)", 7),
            ("M(1) + S(1)", 7),
            ("T[[]", 4),
            ("W(xz)", 3),
            ("2/0*M(1)", 2),
            ("M(1) M(2)", 5),
        ];
        for (text, pos) in cases {
            match parse(text) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{}", text),
                other => panic!("{}: unexpected {:?}", text, other),
            }
        }
    }

    #[test]
    fn printed_values_reparse() {
        for text in [
            "2*M(1,1) + M(2) - 1/3*M()",
            "S(2,1) - e(1,2)",
            "e(2,1) + h(3) + 1/2*p(1,1,1)",
            "m(2,1) + m(1,1,1)",
            "W() + 4*W(xxyy) + 2*W(xyxy)",
            "T[] + 1/2*T[[][]]",
            "K() - K[[]][]",
            "F[][[]] - F[[]][]",
            "0*M(1)",
        ] {
            round_trip(text);
        }
    }

    #[test]
    fn operations() {
        let a = parse("M(1)").unwrap();
        assert_eq!(a.mul(&a).unwrap().to_string(), "2*M(1,1) + M(2)");
        assert_eq!(parse("M(1,1)").unwrap().antipode().unwrap().to_string(), "M(1,1) + M(2)");
        assert_eq!(parse("M(1)").unwrap().coproduct().unwrap().to_string(), "M() ⊗ M(1) + M(1) ⊗ M()");
        assert!(a.mul(&parse("S(1)").unwrap()).is_err());
        let e2 = parse("e(2) + 0*h(1)").unwrap();
        let s = e2.antipode().unwrap();
        assert_eq!(s.to_string(), "e(1,1) - e(2)");
        assert_eq!(s.antipode().unwrap(), e2);
        assert_eq!(parse("e(1) + 0*h(1)").unwrap().coproduct().unwrap().to_string(), "e() ⊗ e(1) + e(1) ⊗ e()");
        assert_eq!(parse_tree("[[][[]]]").unwrap().to_string(), "[[][[]]]");
        assert!(parse_tree("2*[[]]").is_err());
    }
}

//! C ABI over `hopf-core`.
//!
//! Elements are opaque `HopfElement` handles created by the parse functions
//! and released with `hopf_element_free`. Every function returns a
//! `HopfStatus`; on failure `hopf_last_error` describes the problem. Strings
//! handed out by the library are released with `hopf_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hopf_core::expr::{self, Algebra, Value};
use hopf_core::hopf_trees::tree_multiplicity;
use hopf_core::mzv::ZetaEvaluator;
use hopf_core::Error;
use num_traits::ToPrimitive;

/// Status codes returned by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    DivergentSeries = 5,
    AlgebraMismatch = 6,
    Overflow = 7,
    Panic = 8,
}

/// The algebra an element lives in.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfAlgebra {
    Qsym = 0,
    Nsym = 1,
    Sym = 2,
    Word = 3,
    T = 4,
    Hk = 5,
    Hf = 6,
}

impl From<Algebra> for HopfAlgebra {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::QSym => HopfAlgebra::Qsym,
            Algebra::NSym => HopfAlgebra::Nsym,
            Algebra::Sym => HopfAlgebra::Sym,
            Algebra::Word => HopfAlgebra::Word,
            Algebra::T => HopfAlgebra::T,
            Algebra::HK => HopfAlgebra::Hk,
            Algebra::HF => HopfAlgebra::Hf,
        }
    }
}

impl From<HopfAlgebra> for Algebra {
    fn from(a: HopfAlgebra) -> Self {
        match a {
            HopfAlgebra::Qsym => Algebra::QSym,
            HopfAlgebra::Nsym => Algebra::NSym,
            HopfAlgebra::Sym => Algebra::Sym,
            HopfAlgebra::Word => Algebra::Word,
            HopfAlgebra::T => Algebra::T,
            HopfAlgebra::Hk => Algebra::HK,
            HopfAlgebra::Hf => Algebra::HF,
        }
    }
}

/// Opaque element handle.
pub struct HopfElement {
    value: Value,
}

/// A truncated multiple zeta value.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HopfZeta {
    pub value: f64,
    /// `|value(N) - value(N/2)|`.
    pub error_estimate: f64,
    pub truncation_n: u64,
    /// Set by `hopf_verify_relation` only.
    pub pass: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(HopfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => HopfStatus::ParseError,
            Error::InvalidArgument(_) => HopfStatus::InvalidArgument,
            Error::DivergentSeries(_) => HopfStatus::DivergentSeries,
            Error::AlgebraMismatch(_) => HopfStatus::AlgebraMismatch,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(HopfStatus::NullPointer, format!("{} is NULL", what))
}

/// Runs `f`, converting errors and panics into a status and the last-error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HopfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            HopfStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            HopfStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| Failure(HopfStatus::InvalidUtf8, format!("{} is not valid UTF-8", what)))
}

unsafe fn read_elem<'a>(e: *const HopfElement, what: &str) -> Result<&'a Value, Failure> {
    e.as_ref().map(|h| &h.value).ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(v);
    Ok(())
}

fn boxed(value: Value) -> *mut HopfElement {
    Box::into_raw(Box::new(HopfElement { value }))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("printed elements contain no NUL").into_raw()
}

/// Parses `text`, inferring the algebra. On success `*out` owns a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_parse(text: *const c_char, out: *mut *mut HopfElement) -> HopfStatus {
    guard(|| {
        let v = expr::parse(read_str(text, "text")?)?;
        write_out(out, boxed(v))
    })
}

/// Parses `text` as an element of `algebra`, which must be a `HopfAlgebra` value.
///
/// # Safety
/// As `hopf_element_parse`.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_parse_in(
    text: *const c_char,
    algebra: HopfAlgebra,
    out: *mut *mut HopfElement,
) -> HopfStatus {
    guard(|| {
        let v = expr::parse_in(read_str(text, "text")?, algebra.into())?;
        write_out(out, boxed(v))
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `elem` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_free(elem: *mut HopfElement) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_algebra(elem: *const HopfElement, out: *mut HopfAlgebra) -> HopfStatus {
    guard(|| write_out(out, read_elem(elem, "elem")?.algebra().into()))
}

/// Prints an element in the parser's syntax. Free the result with `hopf_string_free`.
///
/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_to_string(elem: *const HopfElement, out: *mut *mut c_char) -> HopfStatus {
    guard(|| write_out(out, c_string(read_elem(elem, "elem")?.to_string())))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_add(
    a: *const HopfElement,
    b: *const HopfElement,
    out: *mut *mut HopfElement,
) -> HopfStatus {
    guard(|| {
        let v = read_elem(a, "a")?.add(read_elem(b, "b")?)?;
        write_out(out, boxed(v))
    })
}

/// Product in the common algebra of `a` and `b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_mul(
    a: *const HopfElement,
    b: *const HopfElement,
    out: *mut *mut HopfElement,
) -> HopfStatus {
    guard(|| {
        let v = read_elem(a, "a")?.mul(read_elem(b, "b")?)?;
        write_out(out, boxed(v))
    })
}

/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_antipode(elem: *const HopfElement, out: *mut *mut HopfElement) -> HopfStatus {
    guard(|| {
        let v = read_elem(elem, "elem")?.antipode()?;
        write_out(out, boxed(v))
    })
}

/// The coproduct as text, `x ⊗ y` terms. Free with `hopf_string_free`.
///
/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_coproduct(elem: *const HopfElement, out: *mut *mut c_char) -> HopfStatus {
    guard(|| {
        let t = read_elem(elem, "elem")?.coproduct()?;
        write_out(out, c_string(t.to_string()))
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_element_equal(a: *const HopfElement, b: *const HopfElement, out: *mut bool) -> HopfStatus {
    guard(|| {
        let eq = read_elem(a, "a")? == read_elem(b, "b")?;
        write_out(out, eq)
    })
}

unsafe fn zeta_of(elem: *const HopfElement, n: u64, tol: Option<f64>) -> Result<HopfZeta, Failure> {
    let mut z = ZetaEvaluator::new(n)?;
    let value = read_elem(elem, "elem")?;
    let report = |v: f64, e: f64, pass: bool| HopfZeta { value: v, error_estimate: e, truncation_n: n, pass };
    match (value, tol) {
        (Value::QSym(a), None) => z.eval(a.terms()).map(|r| report(r.value, r.error_estimate, false)),
        (Value::Word(w), None) => z.eval(w).map(|r| report(r.value, r.error_estimate, false)),
        (Value::QSym(a), Some(t)) => z.verify(a.terms(), t).map(|r| report(r.value, r.error_estimate, r.pass)),
        (Value::Word(w), Some(t)) => z.verify(w, t).map(|r| report(r.value, r.error_estimate, r.pass)),
        (other, _) => {
            return Err(Failure(
                HopfStatus::InvalidArgument,
                format!("zeta is defined on QSym and words, not {}", other.algebra()),
            ))
        }
    }
    .map_err(Failure::from)
}

/// Truncated multiple zeta value of a QSym or word element at `n`.
///
/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_zeta(elem: *const HopfElement, n: u64, out: *mut HopfZeta) -> HopfStatus {
    guard(|| write_out(out, zeta_of(elem, n, None)?))
}

/// As `hopf_zeta`, setting `pass` iff `|value| <= max(tol, 3*error_estimate)`.
///
/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_verify_relation(
    elem: *const HopfElement,
    n: u64,
    tol: f64,
    out: *mut HopfZeta,
) -> HopfStatus {
    guard(|| {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Failure(HopfStatus::InvalidArgument, "tol must be a positive number".into()));
        }
        write_out(out, zeta_of(elem, n, Some(tol))?)
    })
}

/// Tree multiplicity of a tree given in bracket syntax, e.g. `[[][[]]]`.
///
/// # Safety
/// `tree` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_tree_multiplicity(tree: *const c_char, out: *mut u64) -> HopfStatus {
    guard(|| {
        let t = expr::parse_tree(read_str(tree, "tree")?)?;
        let m = tree_multiplicity(&t)
            .to_u64()
            .ok_or_else(|| Failure(HopfStatus::Overflow, "multiplicity exceeds 64 bits".into()))?;
        write_out(out, m)
    })
}

/// Message for the most recent failure on this thread, or "" after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn hopf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hopf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

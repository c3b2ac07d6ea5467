//! C interface to `flagorbits`.
//!
//! Every entry point returns an [`FoStatus`]. On failure a message is kept
//! per thread and can be read with [`fo_last_error`]. Objects are opaque and
//! must be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use flagorbits::error::FieldError;
use flagorbits::finite_field::{enumerate_orbits, PrimeField, StandardForm};
use flagorbits::orbit_combinatorics::{count_double_orbits, MarginPair};
use flagorbits::{
    classify, GeneralizedFlagDescriptor, LieType, ParabolicSignature, TruncatedFlagShape, Verdict,
};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    BudgetExceeded = 4,
    Panic = 5,
}

/// A parsed parabolic signature.
pub struct FoSignature(ParabolicSignature);

/// The outcome of a classification.
pub struct FoVerdict(Verdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(FoStatus, String);

impl Failure {
    fn invalid(e: impl ToString) -> Self {
        Failure(FoStatus::InvalidArgument, e.to_string())
    }

    fn null(what: &str) -> Self {
        Failure(FoStatus::NullPointer, format!("`{what}` is null"))
    }
}

impl From<FieldError> for Failure {
    fn from(e: FieldError) -> Self {
        let status = match e {
            FieldError::BudgetExceeded { .. } => FoStatus::BudgetExceeded,
            _ => FoStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure> + UnwindSafe) -> FoStatus {
    clear_error();
    match catch_unwind(f) {
        Ok(Ok(())) => FoStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            FoStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(FoStatus::InvalidUtf8, format!("`{name}`: {e}")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, name: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::null(name));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn fo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a typed signature such as `C:1,inf,1`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fo_signature_parse(
    text: *const c_char,
    out: *mut *mut FoSignature,
) -> FoStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        let sig: ParabolicSignature = str_arg(text, "text")?.parse().map_err(Failure::invalid)?;
        *out = Box::into_raw(Box::new(FoSignature(sig)));
        Ok(())
    })
}

/// # Safety
/// `sig` must come from [`fo_signature_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fo_signature_free(sig: *mut FoSignature) {
    if !sig.is_null() {
        drop(Box::from_raw(sig));
    }
}

/// Whether the signature has exactly one infinite block.
///
/// # Safety
/// `sig` must be a live signature and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fo_signature_is_large(
    sig: *const FoSignature,
    out: *mut bool,
) -> FoStatus {
    guard(|| {
        let sig = sig.as_ref().ok_or_else(|| Failure::null("sig"))?;
        let out = out.as_mut().ok_or_else(|| Failure::null("out"))?;
        *out = sig.0.is_large();
        Ok(())
    })
}

/// Classifies the product of the flag varieties of `sigs`, which must share
/// one type.
///
/// # Safety
/// `sigs` must point to `len` live signatures and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fo_classify(
    sigs: *const *const FoSignature,
    len: usize,
    out: *mut *mut FoVerdict,
) -> FoStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        let sigs = slice_arg(sigs, len, "sigs")?;
        let flags = sigs
            .iter()
            .map(|p| {
                p.as_ref()
                    .map(|s| GeneralizedFlagDescriptor::from(s.0.clone()))
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Failure::null("sigs[i]"))?;
        let t = flags.first().map_or(LieType::A, |f| f.lie_type());
        let v = classify(t, &flags).map_err(Failure::invalid)?;
        *out = Box::into_raw(Box::new(FoVerdict(v)));
        Ok(())
    })
}

/// # Safety
/// `verdict` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn fo_verdict_is_finite(
    verdict: *const FoVerdict,
    out: *mut bool,
) -> FoStatus {
    guard(|| {
        let v = verdict.as_ref().ok_or_else(|| Failure::null("verdict"))?;
        let out = out.as_mut().ok_or_else(|| Failure::null("out"))?;
        *out = v.0.is_finite();
        Ok(())
    })
}

/// The verdict as JSON. Release the string with [`fo_string_free`].
///
/// # Safety
/// `verdict` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn fo_verdict_to_json(
    verdict: *const FoVerdict,
    out: *mut *mut c_char,
) -> FoStatus {
    guard(|| {
        let v = verdict.as_ref().ok_or_else(|| Failure::null("verdict"))?;
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        *out = into_c_string(serde_json::to_string(&v.0).expect("serializable"));
        Ok(())
    })
}

/// # Safety
/// `verdict` must come from [`fo_classify`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fo_verdict_free(verdict: *mut FoVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}

/// # Safety
/// `s` must be a string returned by this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of orbits on a pair of type-A flag varieties with block
/// dimensions `c` and `d`, as a decimal string.
///
/// # Safety
/// `c` and `d` must point to `c_len` and `d_len` integers, `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fo_count_double(
    c: *const u32,
    c_len: usize,
    d: *const u32,
    d_len: usize,
    out: *mut *mut c_char,
) -> FoStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        let c = slice_arg(c, c_len, "c")?;
        let d = slice_arg(d, d_len, "d")?;
        let mp = MarginPair::new(c.to_vec(), d.to_vec()).map_err(Failure::invalid)?;
        *out = into_c_string(count_double_orbits(&mp).to_string());
        Ok(())
    })
}

/// Counts orbits on a product of flag varieties over `GF(p)`.
///
/// `lie_type` is one of `'A'`, `'B'`, `'C'`, `'D'`. The block dimensions of
/// all factors are concatenated in `dims`; `lens[i]` is the number of blocks
/// of factor `i`.
///
/// # Safety
/// `dims` must hold the sum of `lens` entries, `lens` must hold `factors`
/// entries, and `orbits` and `points` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fo_enumerate_orbits(
    lie_type: c_char,
    dims: *const usize,
    lens: *const usize,
    factors: usize,
    p: u32,
    budget: u64,
    orbits: *mut u64,
    points: *mut u64,
) -> FoStatus {
    guard(|| {
        let orbits = orbits.as_mut().ok_or_else(|| Failure::null("orbits"))?;
        let points = points.as_mut().ok_or_else(|| Failure::null("points"))?;
        let t: LieType = (lie_type as u8 as char)
            .to_string()
            .parse()
            .map_err(Failure::invalid)?;
        let lens = slice_arg(lens, factors, "lens")?;
        if lens.is_empty() {
            return Err(Failure::invalid("at least one factor is required"));
        }
        let dims = slice_arg(dims, lens.iter().sum(), "dims")?;
        let mut shapes = Vec::with_capacity(lens.len());
        let mut at = 0;
        for &l in lens {
            shapes.push(
                TruncatedFlagShape::from_dims(t, dims[at..at + l].to_vec())
                    .map_err(Failure::invalid)?,
            );
            at += l;
        }
        let f = PrimeField::new(p)?;
        let form = StandardForm::new(t, shapes[0].total(), f)?;
        let (summary, _, _) = enumerate_orbits(&shapes, &form, budget)?;
        *orbits = summary.orbits as u64;
        *points = summary.points as u64;
        Ok(())
    })
}

//! C ABI for the equalrank library.
//!
//! Conventions:
//! - Pairs are opaque handles created with `er_pair_new` and released with
//!   `er_pair_free`.
//! - Every function returns an `ErStatus` code; `ER_STATUS_OK` is `0`.
//! - Structured results are returned as malloc-style C strings holding
//!   canonical JSON (every mathematical value an exact rational/integer
//!   string); release them with `er_string_free`.
//! - On failure, `er_last_error` returns a copy of a human-readable message
//!   for the current thread (also to be released with `er_string_free`).

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use serde_json::json;

use equalrank::charring::{branch, verify_pair, DEFAULT_SUPPORT_CAP};
use equalrank::cli::{parse_coeffs, parse_lambda};
use equalrank::multiplet::{casimir_value, multiplet};
use equalrank::pair::{EqualRankPair, Registry};
use equalrank::rootspace::{
    fundamental_weight_basis, rat_string, WeightVector,
};
use equalrank::weyl::{coset_section, CosetElement, DEFAULT_ORBIT_CAP};
use equalrank::{Error, Result};

/// Status codes returned by every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    NotFound = 4,
    Singular = 5,
    ResourceCap = 6,
    VerificationFailed = 7,
    Internal = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let cleaned = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(cleaned).expect("no interior NUL"));
    });
}

fn status_of(err: &Error) -> ErStatus {
    match err {
        Error::ResourceCap { .. } => ErStatus::ResourceCap,
        Error::Singular(_) => ErStatus::Singular,
        Error::Registry(m) if m.contains("unknown pair") => ErStatus::NotFound,
        Error::Internal(_) => ErStatus::Internal,
        _ => ErStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> ErStatus {
    set_error(&err.to_string());
    status_of(&err)
}

/// An opaque equal-rank pair plus its lazily computed coset section.
pub struct ErPair {
    pair: EqualRankPair,
    section: Option<Vec<CosetElement>>,
}

impl ErPair {
    fn section(&mut self) -> Result<&[CosetElement]> {
        if self.section.is_none() {
            self.section = Some(coset_section(&self.pair, DEFAULT_ORBIT_CAP)?);
        }
        Ok(self.section.as_deref().unwrap())
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> std::result::Result<&'a str, ErStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(ErStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        ErStatus::InvalidUtf8
    })
}

fn give_string(out: *mut *mut c_char, value: String) -> ErStatus {
    let cleaned = value.replace('\0', " ");
    let cstring = CString::new(cleaned).expect("no interior NUL");
    unsafe { *out = cstring.into_raw() };
    ErStatus::Ok
}

/// Library version as a static string (do not free).
#[no_mangle]
pub extern "C" fn er_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// A copy of the last error message on this thread, or NULL if none.
/// Release with `er_string_free`.
#[no_mangle]
pub extern "C" fn er_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. NULL is accepted.
#[no_mangle]
pub extern "C" fn er_string_free(s: *mut c_char) {
    if !s.is_null() {
        unsafe { drop(CString::from_raw(s)) };
    }
}

/// Resolves a pair from the built-in registry (or a registry file when
/// `registry_path` is non-NULL). `rank` is used by parameterized names such
/// as `Bn-Dn`; pass 0 when not needed.
///
/// # Safety
/// `name` (and `registry_path` when non-NULL) must be NUL-terminated
/// strings; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn er_pair_new(
    name: *const c_char,
    rank: usize,
    registry_path: *const c_char,
    out: *mut *mut ErPair,
) -> ErStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ErStatus::NullPointer;
    }
    let name = match read_str(name) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let registry = if registry_path.is_null() {
        Registry::builtin()
    } else {
        let path = match read_str(registry_path) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match Registry::load(std::path::Path::new(path)) {
            Ok(r) => r,
            Err(e) => return fail(e),
        }
    };
    let rank = if rank == 0 { None } else { Some(rank) };
    match registry.resolve(name, rank) {
        Ok(pair) => {
            *out = Box::into_raw(Box::new(ErPair { pair, section: None }));
            ErStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Releases a pair handle. NULL is accepted.
#[no_mangle]
pub extern "C" fn er_pair_free(pair: *mut ErPair) {
    if !pair.is_null() {
        unsafe { drop(Box::from_raw(pair)) };
    }
}

unsafe fn with_pair<F>(pair: *mut ErPair, body: F) -> ErStatus
where
    F: FnOnce(&mut ErPair) -> std::result::Result<(), ErStatus>,
{
    if pair.is_null() {
        set_error("null pair handle");
        return ErStatus::NullPointer;
    }
    match body(&mut *pair) {
        Ok(()) => ErStatus::Ok,
        Err(status) => status,
    }
}

/// The index m = |W(F)| / |W(B)| (also the multiplet size).
///
/// # Safety
/// `pair` must be a live handle from `er_pair_new`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn er_pair_index(pair: *mut ErPair, out: *mut u64) -> ErStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ErStatus::NullPointer;
    }
    with_pair(pair, |p| {
        let m = p.pair.predicted_index().map_err(fail)?;
        let m: u64 = m.try_into().map_err(|_| {
            set_error("index does not fit in 64 bits");
            ErStatus::Internal
        })?;
        *out = m;
        Ok(())
    })
}

/// The coset section as JSON `{pair, count, section:[{word, sign, image}]}`.
///
/// # Safety
/// `pair` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn er_cosets_json(pair: *mut ErPair, out: *mut *mut c_char) -> ErStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ErStatus::NullPointer;
    }
    with_pair(pair, |p| {
        let name = p.pair.display_name();
        let section = p.section().map_err(fail)?;
        let value = json!({
            "pair": name,
            "count": section.len(),
            "section": section.iter().map(|c| json!({
                "word": c.word,
                "sign": c.sign,
                "image": c.image_of_rho_f.to_strings(),
            })).collect::<Vec<_>>(),
        });
        give_string(out, value.to_string());
        Ok(())
    })
}

/// The multiplet at λ (comma-separated fundamental-weight coefficients of
/// F) as JSON `{lambda, members:[{sign, weight, dim, casimir}],
/// signed_dimension_sum}`.
///
/// # Safety
/// `pair` must be a live handle; `lambda_csv` a NUL-terminated string;
/// `out` valid.
#[no_mangle]
pub unsafe extern "C" fn er_multiplet_json(
    pair: *mut ErPair,
    lambda_csv: *const c_char,
    out: *mut *mut c_char,
) -> ErStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ErStatus::NullPointer;
    }
    let lambda_csv = match read_str(lambda_csv) {
        Ok(s) => s.to_string(),
        Err(status) => return status,
    };
    with_pair(pair, |p| {
        let lambda = parse_lambda(&p.pair, &lambda_csv).map_err(fail)?;
        let pair_ref = p.pair.clone();
        let section = p.section().map_err(fail)?;
        let mult = multiplet(&pair_ref, section, &lambda).map_err(fail)?;
        let members = mult
            .members
            .iter()
            .map(|m| {
                let cas = casimir_value(&pair_ref, &m.highest_weight)?;
                Ok(json!({
                    "sign": m.sign,
                    "weight": m.highest_weight.to_strings(),
                    "dim": m.dimension.to_string(),
                    "casimir": rat_string(&cas),
                }))
            })
            .collect::<Result<Vec<_>>>()
            .map_err(fail)?;
        let value = json!({
            "pair": pair_ref.display_name(),
            "lambda": lambda.weight.to_strings(),
            "members": members,
            "signed_dimension_sum": mult.signed_dimension_sum().to_string(),
        });
        give_string(out, value.to_string());
        Ok(())
    })
}

/// Verifies the five character identities at λ. Returns `Ok` when all pass,
/// `VerificationFailed` when a check fails (the JSON report is still
/// written), and `ResourceCap` when a check had to be skipped.
///
/// # Safety
/// Same contract as `er_multiplet_json`.
#[no_mangle]
pub unsafe extern "C" fn er_verify_json(
    pair: *mut ErPair,
    lambda_csv: *const c_char,
    out: *mut *mut c_char,
) -> ErStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ErStatus::NullPointer;
    }
    let lambda_csv = match read_str(lambda_csv) {
        Ok(s) => s.to_string(),
        Err(status) => return status,
    };
    with_pair(pair, |p| {
        let lambda = parse_lambda(&p.pair, &lambda_csv).map_err(fail)?;
        let pair_ref = p.pair.clone();
        let section = p.section().map_err(fail)?;
        let report =
            verify_pair(&pair_ref, section, &lambda, DEFAULT_SUPPORT_CAP).map_err(fail)?;
        let failed = report.checks.iter().any(|c| !c.passed);
        let skipped = !report.skipped.is_empty();
        give_string(
            out,
            serde_json::to_string(&report).expect("report serializes"),
        );
        if failed {
            set_error("a character-identity check failed; see the report");
            return Err(ErStatus::VerificationFailed);
        }
        if skipped {
            set_error("a check was skipped due to a resource cap; see the report");
            return Err(ErStatus::ResourceCap);
        }
        Ok(())
    })
}

/// Branches V_λ to B as JSON `{lambda, entries:[{highest_weight,
/// multiplicity, dim}], total_dimension}`.
///
/// # Safety
/// Same contract as `er_multiplet_json`.
#[no_mangle]
pub unsafe extern "C" fn er_branch_json(
    pair: *mut ErPair,
    lambda_csv: *const c_char,
    out: *mut *mut c_char,
) -> ErStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ErStatus::NullPointer;
    }
    let lambda_csv = match read_str(lambda_csv) {
        Ok(s) => s.to_string(),
        Err(status) => return status,
    };
    with_pair(pair, |p| {
        let lambda = parse_lambda(&p.pair, &lambda_csv).map_err(fail)?;
        let pair_ref = p.pair.clone();
        let section = p.section().map_err(fail)?;
        let report = branch(&pair_ref, section, &lambda, DEFAULT_SUPPORT_CAP).map_err(fail)?;
        let value = json!({
            "pair": pair_ref.display_name(),
            "lambda": lambda.weight.to_strings(),
            "entries": report.entries.iter().map(|e| json!({
                "highest_weight": e.highest_weight.to_strings(),
                "multiplicity": e.multiplicity.to_string(),
                "dim": e.dimension.to_string(),
            })).collect::<Vec<_>>(),
            "total_dimension": report.total_dimension().to_string(),
        });
        give_string(out, value.to_string());
        Ok(())
    })
}

/// The exact irreducible character of one side of the pair. `rep` is `'F'`
/// or `'B'`; `mu_csv` gives fundamental-weight coefficients of that side
/// (empty for a torus). JSON `{rep, mu, dimension, terms:[{weight, coeff}]}`
/// with terms in canonical sorted order.
///
/// # Safety
/// Same contract as `er_multiplet_json`.
#[no_mangle]
pub unsafe extern "C" fn er_character_json(
    pair: *mut ErPair,
    rep: c_char,
    mu_csv: *const c_char,
    out: *mut *mut c_char,
) -> ErStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ErStatus::NullPointer;
    }
    let mu_csv = match read_str(mu_csv) {
        Ok(s) => s.to_string(),
        Err(status) => return status,
    };
    with_pair(pair, |p| {
        let (sub, mu) = match rep as u8 {
            b'F' => {
                let coeffs = parse_coeffs(&mu_csv, p.pair.f.rank).map_err(fail)?;
                let w = p
                    .pair
                    .f
                    .weight_from_fundamental_coeffs(&coeffs)
                    .map_err(fail)?;
                (p.pair.f_subsystem(), w)
            }
            b'B' => {
                let sub = p.pair.b_subsystem();
                let coeffs = parse_coeffs(&mu_csv, sub.simple_roots.len()).map_err(fail)?;
                let basis = fundamental_weight_basis(&sub.simple_roots, sub.ambient_dim)
                    .map_err(fail)?;
                let mut w = WeightVector::zero(sub.ambient_dim);
                for (c, omega) in coeffs.iter().zip(&basis) {
                    w = w.add(&omega.scale(c));
                }
                (sub, w)
            }
            _ => {
                set_error("rep must be 'F' or 'B'");
                return Err(ErStatus::InvalidArgument);
            }
        };
        let ch = equalrank::charring::irrep_character(&sub, &mu, DEFAULT_SUPPORT_CAP)
            .map_err(fail)?;
        let value = json!({
            "rep": (rep as u8 as char).to_string(),
            "mu": mu.to_strings(),
            "dimension": ch.dimension().to_string(),
            "terms": ch.to_json_terms(),
        });
        give_string(out, value.to_string());
        Ok(())
    })
}

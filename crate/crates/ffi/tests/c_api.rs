use std::ffi::{CStr, CString};
use std::ptr;

use invhol_ffi::*;

fn name(s: &str) -> *mut InvholSemigroup {
    let c = CString::new(s).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { invhol_semigroup_from_name(c.as_ptr(), &mut h) }, InvholStatus::Ok);
    h
}

fn last_error() -> String {
    let p = invhol_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn counts_for_z3() {
    let h = name("z3");
    unsafe {
        assert_eq!(invhol_semigroup_size(h), 3);
        let (mut p, mut full, mut u, mut sha) = (0, 0, 0, 0);
        assert_eq!(invhol_count_premorphisms(h, 0, &mut p), InvholStatus::Ok);
        assert_eq!(invhol_count_holomorph(h, 0, &mut full, &mut u), InvholStatus::Ok);
        assert_eq!(invhol_count_sha(h, 0, &mut sha), InvholStatus::Ok);
        // End(Z3) has 3 elements, Aut(Z3) has 2
        assert_eq!((p, full, u, sha), (3, 9, 6, 9));
        invhol_semigroup_free(h);
    }
}

#[test]
fn table_round_trip() {
    let table: [usize; 4] = [0, 1, 1, 1];
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(invhol_semigroup_from_table(2, table.as_ptr(), &mut h), InvholStatus::Ok);
        let mut v = 9;
        assert_eq!(invhol_semigroup_mul(h, 1, 0, &mut v), InvholStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(invhol_semigroup_mul(h, 2, 0, &mut v), InvholStatus::InvalidArgument);
        let mut json = ptr::null_mut();
        assert_eq!(invhol_semigroup_to_json(h, &mut json), InvholStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(invhol_semigroup_from_json(json, &mut again), InvholStatus::Ok);
        assert_eq!(invhol_semigroup_size(again), 2);
        invhol_string_free(json);
        invhol_semigroup_free(again);
        invhol_semigroup_free(h);
    }
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    unsafe {
        // left zero semigroup on two elements: no inverses
        let table: [usize; 4] = [0, 0, 1, 1];
        assert_eq!(invhol_semigroup_from_table(2, table.as_ptr(), &mut h), InvholStatus::NotInverse);
        assert!(last_error().contains("inverse"));
        let table: [usize; 4] = [1, 0, 0, 0];
        assert_eq!(invhol_semigroup_from_table(2, table.as_ptr(), &mut h), InvholStatus::NotAssociative);
        assert_eq!(invhol_semigroup_from_table(2, ptr::null(), &mut h), InvholStatus::NullPointer);
        let bad = CString::new("{\"names\": [").unwrap();
        assert_eq!(invhol_semigroup_from_json(bad.as_ptr(), &mut h), InvholStatus::ParseError);
        let unknown = CString::new("nope").unwrap();
        assert_eq!(invhol_semigroup_from_name(unknown.as_ptr(), &mut h), InvholStatus::InvalidArgument);
        assert!(h.is_null());
        assert_eq!(invhol_semigroup_size(ptr::null()), 0);
        invhol_semigroup_free(ptr::null_mut());

        let i2 = name("i2");
        let mut n = 0;
        assert_eq!(invhol_count_premorphisms(i2, 5, &mut n), InvholStatus::BudgetExceeded);
        invhol_semigroup_free(i2);
    }
}

#[test]
fn polycyclic_eval() {
    let mut out = ptr::null_mut();
    for (src, want) in [("(ab)^-1 a * b^-1", "0"), ("ab * b^-1", "a"), ("b^-1 a^-1 * ab", "(ab)^-1 ab")] {
        let expr = CString::new(src).unwrap();
        unsafe {
            assert_eq!(invhol_poly_eval(2, expr.as_ptr(), &mut out), InvholStatus::Ok);
            assert_eq!(CStr::from_ptr(out).to_str().unwrap(), want, "{src}");
            invhol_string_free(out);
        }
    }
    unsafe {
        let bad = CString::new("a c").unwrap();
        assert_eq!(invhol_poly_eval(2, bad.as_ptr(), &mut out), InvholStatus::ParseError);
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/invhol.h")).unwrap();
    for f in ["invhol_semigroup_from_table", "invhol_count_holomorph", "invhol_poly_eval", "INVHOL_STATUS_OK"] {
        assert!(header.contains(f), "{f} missing from header");
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(&src, "#include \"invhol.h\"\nint main(void) { return invhol_semigroup_size(0) == 0 ? 0 : 1; }\n").unwrap();
    match std::process::Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-I"]).arg(format!("{dir}/include")).arg(&src).status() {
        Ok(status) => assert!(status.success()),
        Err(_) => eprintln!("no C compiler; skipped"),
    }
}

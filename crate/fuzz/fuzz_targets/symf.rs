#![no_main]
use libfuzzer_sys::fuzz_target;
use umbral::symfunc::{eval_single, sym_shift, SymF};

fuzz_target!(|data: &[u8]| {
    let Ok(f) = serde_json::from_slice::<SymF>(data) else {
        return;
    };
    let s = serde_json::to_string(&f).unwrap();
    assert_eq!(serde_json::from_str::<SymF>(&s).unwrap(), f);
    if f.max_weight().unwrap_or(0) <= 32 {
        // Setting y = 0 after the shift gives back f.
        let shifted = sym_shift(&f);
        assert_eq!(shifted.y_coeff(0), f);
        let _ = eval_single(&f);
    }
});

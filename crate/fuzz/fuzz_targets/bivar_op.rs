#![no_main]
use libfuzzer_sys::fuzz_target;
use umbral::analysis::{bialgebra_detect, coassociativity_check};
use umbral::operators::BivarOp;

fuzz_target!(|data: &[u8]| {
    let Ok(f) = serde_json::from_slice::<BivarOp>(data) else {
        return;
    };
    let s = serde_json::to_string(&f).unwrap();
    assert_eq!(serde_json::from_str::<BivarOp>(&s).unwrap(), f);
    if f.trunc() <= 4 && f.images().iter().all(|p| p.total_degree().unwrap_or(0) <= 8) {
        let _ = coassociativity_check(&f);
        // A multiplicative F that is not a shift would contradict the theory.
        assert!(bialgebra_detect(&f).is_ok());
    }
});

#![no_main]
use libfuzzer_sys::fuzz_target;
use umbral::operators::EndoOp;

fuzz_target!(|data: &[u8]| {
    let Ok(t) = serde_json::from_slice::<EndoOp>(data) else {
        return;
    };
    if t.trunc() > 16 {
        return;
    }
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<EndoOp>(&s).unwrap(), t);
    if let Ok(inv) = t.invert() {
        assert_eq!(t.compose(&inv).unwrap(), EndoOp::identity(t.trunc()));
    }
});

#![no_main]
use libfuzzer_sys::fuzz_target;
use umbral::exactalg::Poly1;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<Poly1>(data) {
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Poly1>(&s).unwrap(), p);
    }
});

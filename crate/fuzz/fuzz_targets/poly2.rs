#![no_main]
use libfuzzer_sys::fuzz_target;
use umbral::exactalg::Poly2;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<Poly2>(data) {
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Poly2>(&s).unwrap(), p);
        assert_eq!(p.swap().swap(), p);
    }
});

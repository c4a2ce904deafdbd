#![no_main]
use libfuzzer_sys::fuzz_target;
use umbral::exactalg::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Rational>() {
        // Display is canonical, so it must parse back to the same value.
        assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }
});

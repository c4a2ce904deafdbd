#![no_main]
use libfuzzer_sys::fuzz_target;
use umbral::symfunc::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(p) = serde_json::from_slice::<Partition>(data) else {
        return;
    };
    let s = serde_json::to_string(&p).unwrap();
    assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), p);
    if p.weight() <= 64 {
        assert_eq!(p.conjugate().conjugate(), p);
    }
});

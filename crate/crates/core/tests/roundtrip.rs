use serde_json::Value;
use spoly::codec::{emit_report_json, emit_spoly, emit_tri3, parse_spoly, parse_tri3, ReportJson};
use spoly::decisions::{analyze, DecisionOptions};
use spoly::model::{catalog, validate, CATALOG_NAMES};
use spoly::monodromy::check_compatibility;
use spoly::thickening::{inverse_perm3, thicken};

#[test]
fn spoly_is_byte_stable() {
    for name in CATALOG_NAMES {
        let p = catalog(name).unwrap();
        let once = emit_spoly(&p).unwrap();
        let q = parse_spoly(&once).unwrap();
        assert_eq!(q, p, "{name}");
        let twice = emit_spoly(&q).unwrap();
        assert_eq!(once, twice, "{name}");
        assert!(once.ends_with('\n') && !once.ends_with("\n\n"), "{name}");
    }
}

#[test]
fn tri3_round_trips_and_gluings_are_involutive() {
    for name in CATALOG_NAMES {
        let p = catalog(name).unwrap();
        if !check_compatibility(&p).unwrap().compatible {
            continue;
        }
        let t = thicken(&p).unwrap();
        for (i, tet) in t.tets.iter().enumerate() {
            for (f, g) in tet.gluings.iter().enumerate() {
                let Some(g) = g else { continue };
                let back = t.tets[g.tet].gluings[g.face as usize].expect("glued both ways");
                assert_eq!((back.tet, back.face as usize), (i, f), "{name}");
                assert_eq!(back.perm, inverse_perm3(&g.perm), "{name}");
            }
        }
        let text = emit_tri3(&t).unwrap();
        let u = parse_tri3(&text).unwrap();
        assert_eq!(u, t, "{name}");
        assert_eq!(emit_tri3(&u).unwrap(), text, "{name}");
    }
}

#[test]
fn json_reports_round_trip() {
    for name in CATALOG_NAMES {
        let p = catalog(name).unwrap();
        for m in [3, 4, 5, 7] {
            let b = analyze(&p, m, &DecisionOptions::default()).unwrap();
            let text = emit_report_json(&b);
            let v: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(v, b.to_json(), "{name} m={m}");
            assert_eq!(emit_report_json(&b), text, "{name} m={m}");
        }
        let r = validate(&p);
        let v: Value = serde_json::from_str(&emit_report_json(&r)).unwrap();
        assert_eq!(v["ok"], Value::Bool(true), "{name}");
    }
}

//! Parsers must reject garbage with diagnostics, never panic.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spoly::codec::{emit_spoly, emit_tri3, parse_spoly, parse_tri3};
use spoly::model::{catalog, validate, CATALOG_NAMES};
use spoly::thickening::thicken;

const ALPHABET: &[u8] = b"polyhedronregiogenusbaryfctxv0123456789 ()+->.\n\t#";

fn random_text(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(0..120);
    let bytes: Vec<u8> = if rng.gen_bool(0.5) {
        (0..n).map(|_| rng.gen()).collect()
    } else {
        (0..n).map(|_| *ALPHABET.choose(rng).unwrap()).collect()
    };
    String::from_utf8_lossy(&bytes).into_owned()
}

fn mutate(rng: &mut ChaCha8Rng, text: &str) -> String {
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    for _ in 0..rng.gen_range(1..4) {
        let i = rng.gen_range(0..lines.len());
        match rng.gen_range(0..5) {
            0 => {
                lines.remove(i);
                if lines.is_empty() {
                    lines.push(String::new());
                }
            }
            1 => {
                let l = lines[i].clone();
                lines.insert(i, l);
            }
            2 => {
                let toks: Vec<&str> = lines[i].split(' ').collect();
                let mut toks: Vec<String> = toks.iter().map(|s| s.to_string()).collect();
                let k = rng.gen_range(0..toks.len());
                toks[k] = ["0", "3", "9", "-", "+", "(", "x", "99999999999999999999", ""][rng.gen_range(0..9)].to_string();
                lines[i] = toks.join(" ");
            }
            3 => {
                let j = rng.gen_range(0..lines.len());
                lines.swap(i, j);
            }
            _ => {
                let mut b = lines[i].clone().into_bytes();
                if !b.is_empty() {
                    let k = rng.gen_range(0..b.len());
                    b[k] = *ALPHABET.choose(rng).unwrap();
                }
                lines[i] = String::from_utf8_lossy(&b).into_owned();
            }
        }
    }
    lines.join("\n") + "\n"
}

#[test]
fn random_bytes_never_panic() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100_000 {
        let text = random_text(&mut rng);
        if let Err(errs) = parse_spoly(&text) {
            assert!(!errs.is_empty());
        }
        if let Err(errs) = parse_tri3(&text) {
            assert!(!errs.is_empty());
        }
    }
}

#[test]
fn mutated_spoly_never_panics() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let sources: Vec<String> = CATALOG_NAMES.iter().map(|n| emit_spoly(&catalog(n).unwrap()).unwrap()).collect();
    let mut accepted = 0;
    for _ in 0..20_000 {
        let src = sources.choose(&mut rng).unwrap();
        let text = mutate(&mut rng, src);
        match parse_spoly(&text) {
            Ok(p) => {
                accepted += 1;
                let r = validate(&p);
                if r.ok {
                    let again = parse_spoly(&emit_spoly(&p).unwrap()).unwrap();
                    assert_eq!(again, p);
                } else {
                    assert!(!r.errors.is_empty());
                }
            }
            Err(errs) => assert!(!errs.is_empty()),
        }
    }
    assert!(accepted > 0);
}

#[test]
fn mutated_tri3_never_panics() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let text = emit_tri3(&thicken(&catalog("disc").unwrap()).unwrap()).unwrap();
    for _ in 0..3_000 {
        let m = mutate(&mut rng, &text);
        if let Err(errs) = parse_tri3(&m) {
            assert!(!errs.is_empty());
        }
    }
}

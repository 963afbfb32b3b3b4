//! Built-in example polyhedra.

use super::SimplePolyhedron;
use crate::codec::spoly::parse_spoly;
use crate::Error;

pub const CATALOG_NAMES: [&str; 7] =
    ["disc", "round_bundle", "round_sum2", "suzuoka", "bing_house", "incompatible_circle", "two_crossings"];

const DISC: &str = "\
polyhedron disc
region d genus 0 orientable yes
  boundary free c0
";

// An annulus and two discs sharing one triple circle.
const ROUND_BUNDLE: &str = "\
polyhedron round_bundle
edge t circle ident 012
region a genus 0 orientable yes
  boundary free c0
  boundary attached (t 0 +)
region b genus 0 orientable yes
  boundary attached (t 1 +)
region c genus 0 orientable yes
  boundary attached (t 2 +)
";

const ROUND_SUM2: &str = "\
polyhedron round_sum2
edge t1 circle ident 012
edge t2 circle ident 012
region a genus 0 orientable yes
  boundary free c0
  boundary attached (t1 0 +)
  boundary attached (t2 0 +)
region b1 genus 0 orientable yes
  boundary attached (t1 1 +)
region b2 genus 0 orientable yes
  boundary attached (t1 2 +)
region c1 genus 0 orientable yes
  boundary attached (t2 1 +)
region c2 genus 0 orientable yes
  boundary attached (t2 2 +)
";

const SUZUOKA: &str = "\
polyhedron suzuoka
edge t1 circle ident 012
edge t2 circle ident 012
region a genus 0 orientable yes
  boundary free c0
  boundary attached (t1 0 +)
region b genus 0 orientable yes
  boundary attached (t1 1 +)
  boundary attached (t2 0 +)
region c genus 0 orientable yes
  boundary attached (t1 2 +)
region d genus 0 orientable yes
  boundary attached (t2 1 +)
region e genus 0 orientable yes
  boundary attached (t2 2 +)
  boundary free c1
";

const BING_HOUSE: &str = "\
polyhedron bing_house
vertex v chart x pairs (0 1) (2 3) trans 102 012
vertex w chart x pairs (0 1) (2 3) trans 102 012
edge lv interval v.3 v.2
edge lw interval w.3 w.2
edge p1 interval v.1 w.0
edge p2 interval w.1 v.0
region r0 genus 0 orientable yes
  boundary attached (lv 0 +) (v 2>0) (p2 0 -) (w 1>0) (p1 1 -) (v 1>2) (lv 1 -) (v 3>1) (p1 2 +) (w 0>3) (lw 0 +) (w 2>0) (p1 0 -) (v 1>0) (p2 1 -) (w 1>2) (lw 1 -) (w 3>1) (p2 2 +) (v 0>3)
region r1 genus 0 orientable yes
  boundary attached (lv 2 +) (v 2>3)
region r2 genus 0 orientable yes
  boundary attached (lw 2 +) (w 2>3)
";

// A triple circle whose collar swaps two sheets.
const INCOMPATIBLE_CIRCLE: &str = "\
polyhedron incompatible_circle
edge t circle ident 102
region a genus 0 orientable yes
  boundary free c0
  boundary attached (t 0 +) (t 1 +)
region b genus 0 orientable yes
  boundary attached (t 2 +)
";

const TWO_CROSSINGS: &str = "\
polyhedron two_crossings
vertex v chart x pairs (0 1) (2 3) trans 021 102
vertex w chart x pairs (0 1) (2 3) trans 021 102
edge e1 interval v.1 w.0
edge e2 interval w.1 v.0
edge e3 interval v.3 w.2
edge e4 interval w.3 v.2
region r0 genus 0 orientable yes
  boundary attached (e1 0 +) (w 0>1) (e2 0 +) (v 0>1)
region r1 genus 0 orientable yes
  boundary attached (e1 1 +) (w 0>3) (e4 0 +) (v 2>1)
region r2 genus 0 orientable yes
  boundary attached (e1 2 +) (w 0>2) (e3 1 -) (v 3>1)
region r3 genus 0 orientable yes
  boundary attached (e2 1 +) (v 0>3) (e3 0 +) (w 2>1)
region r4 genus 0 orientable yes
  boundary attached (e2 2 +) (v 0>2) (e4 1 -) (w 3>1)
region r5 genus 0 orientable yes
  boundary attached (e3 2 +) (w 2>3) (e4 2 +) (v 2>3)
";

pub fn catalog_names() -> &'static [&'static str] {
    &CATALOG_NAMES
}

pub(crate) fn catalog_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "disc" => DISC,
        "round_bundle" => ROUND_BUNDLE,
        "round_sum2" => ROUND_SUM2,
        "suzuoka" => SUZUOKA,
        "bing_house" => BING_HOUSE,
        "incompatible_circle" => INCOMPATIBLE_CIRCLE,
        "two_crossings" => TWO_CROSSINGS,
        _ => return None,
    })
}

pub fn catalog(name: &str) -> Result<SimplePolyhedron, Error> {
    let src = catalog_source(name).ok_or_else(|| Error::UnknownExample(name.to_string()))?;
    parse_spoly(src).map_err(|errs| {
        Error::InvalidInput(errs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        for name in catalog_names() {
            let p = catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(p.name, *name);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(catalog("nope"), Err(Error::UnknownExample(_))));
    }
}

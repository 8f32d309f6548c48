//! Text encodings shared by the CLI and the table files.
//!
//! * integer lists: `1,3` (CLI flags)
//! * beta labels: `1.3`, bi-symbol labels: `0.1/2` (table row headers)
//! * signed cycle types: `pos:1.1;neg:2`

use std::str::FromStr;

use crate::combinatorics::{join_dots, BetaSequence, BiSymbol, SignedCycleType, SnClass};
use crate::error::{Error, Result};

fn parse_separated<T: FromStr>(s: &str, sep: char, what: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(sep)
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad {what} {tok:?} in {s:?}")))
        })
        .collect()
}

/// Parses `"1,3"` into `[1, 3]`; the empty string is the empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    parse_separated(s, ',', "integer")
}

/// Comma-separated cycle lengths, each at least 1.
pub fn parse_cycle_list(s: &str) -> Result<Vec<u32>> {
    let v: Vec<u32> = parse_separated(s, ',', "cycle length")?;
    if v.contains(&0) {
        return Err(Error::Parse(format!("zero cycle length in {s:?}")));
    }
    Ok(v)
}

pub fn beta_label(beta: &BetaSequence) -> String {
    beta.entries()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

pub fn parse_beta_label(s: &str) -> Result<BetaSequence> {
    Ok(BetaSequence::new(parse_separated(s, '.', "entry")?))
}

pub fn bisymbol_label(sym: &BiSymbol) -> String {
    format!("{}/{}", beta_label(&sym.top), beta_label(&sym.bottom))
}

pub fn parse_bisymbol_label(s: &str) -> Result<BiSymbol> {
    let (top, bottom) = s
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("bi-symbol label {s:?} lacks '/'")))?;
    Ok(BiSymbol {
        top: parse_beta_label(top)?,
        bottom: parse_beta_label(bottom)?,
    })
}

pub fn sn_class_label(cls: &SnClass) -> String {
    join_dots(cls.cycles())
}

pub fn parse_sn_class_label(s: &str) -> Result<SnClass> {
    let cycles: Vec<u32> = parse_separated(s, '.', "cycle length")?;
    SnClass::new(cycles).map_err(|e| Error::Parse(e.to_string()))
}

impl FromStr for SignedCycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (pos, neg) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("class label {s:?} lacks ';'")))?;
        let pos = pos
            .strip_prefix("pos:")
            .ok_or_else(|| Error::Parse(format!("class label {s:?} lacks 'pos:'")))?;
        let neg = neg
            .strip_prefix("neg:")
            .ok_or_else(|| Error::Parse(format!("class label {s:?} lacks 'neg:'")))?;
        SignedCycleType::new(
            parse_separated(pos, '.', "cycle length")?,
            parse_separated(neg, '.', "cycle length")?,
        )
        .map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn int_lists() {
        assert_eq!(parse_int_list("1,3").unwrap(), vec![1, 3]);
        assert_eq!(parse_int_list(" 2, -1 ,0").unwrap(), vec![2, -1, 0]);
        assert_eq!(parse_int_list("").unwrap(), Vec::<i64>::new());
        assert!(parse_int_list("1,,3").is_err());
        assert!(parse_int_list("1;3").is_err());
        assert!(parse_cycle_list("0,2").is_err());
        assert!(parse_cycle_list("-1").is_err());
    }

    #[test]
    fn class_labels() {
        let c: SignedCycleType = "pos:1.1;neg:2".parse().unwrap();
        assert_eq!(c, SignedCycleType::new(vec![1, 1], vec![2]).unwrap());
        assert_eq!(c.to_string(), "pos:1.1;neg:2");
        let e: SignedCycleType = "pos:;neg:".parse().unwrap();
        assert_eq!(e.weight(), 0);
        assert!("neg:1;pos:2".parse::<SignedCycleType>().is_err());
        assert!("pos:0;neg:".parse::<SignedCycleType>().is_err());
        assert!("pos:1".parse::<SignedCycleType>().is_err());
    }

    #[test]
    fn symbol_labels() {
        let s = parse_bisymbol_label("0.1/2").unwrap();
        assert_eq!(s, BiSymbol::new(vec![0, 1], vec![2]));
        assert_eq!(bisymbol_label(&s), "0.1/2");
        assert_eq!(parse_bisymbol_label("3/").unwrap(), BiSymbol::new(vec![3], vec![]));
        assert!(parse_bisymbol_label("3").is_err());
    }

    proptest! {
        #[test]
        fn class_label_roundtrip(p in proptest::collection::vec(1u32..9, 0..5), n in proptest::collection::vec(1u32..9, 0..5)) {
            let c = SignedCycleType::new(p, n).unwrap();
            prop_assert_eq!(c.to_string().parse::<SignedCycleType>().unwrap(), c);
        }

        #[test]
        fn bisymbol_label_roundtrip(t in proptest::collection::vec(-3i64..20, 0..5), b in proptest::collection::vec(-3i64..20, 0..5)) {
            let s = BiSymbol::new(t, b);
            prop_assert_eq!(parse_bisymbol_label(&bisymbol_label(&s)).unwrap(), s);
        }
    }
}

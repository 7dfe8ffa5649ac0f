//! Text persistence of the Masur–Veech coefficient table.
//!
//! Header `mvvol-cache <version> <theory>`, then one record per line:
//! `g n d1,...,dn grade:p/q[;grade:p/q...]`.

use std::fmt::Write as _;

use mvvol::arith::parse_rational;
use mvvol::coeff::MultiIndex;
use mvvol::virasoro::{self, mv_polynomial};
use mvvol::{CoeffTable, PiPoly, Theory};

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub index: MultiIndex,
    pub value: PiPoly,
}

fn render_value(value: &PiPoly) -> String {
    if value.is_zero() {
        return "0:0".into();
    }
    value
        .terms()
        .map(|(k, r)| format!("{k}:{r}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_value(s: &str) -> Result<PiPoly, String> {
    let mut terms = Vec::new();
    for part in s.split(';') {
        let (k, r) = part.split_once(':').ok_or_else(|| format!("bad term {part:?}"))?;
        let k: u32 = k.parse().map_err(|_| format!("bad grade {k:?}"))?;
        let r = parse_rational(r).ok_or_else(|| format!("bad rational {r:?}"))?;
        terms.push((k, r));
    }
    Ok(PiPoly::from_terms(terms))
}

/// Records of every complete level `(g, n)` with `g ≤ max_g`, `1 ≤ n ≤ max_n`.
pub fn complete_levels(max_g: u32, max_n: u32) -> Vec<Record> {
    let mut out = Vec::new();
    for g in 0..=max_g {
        for n in 1..=max_n {
            let Ok(poly) = mv_polynomial(g, n) else { continue };
            for (d, value) in poly.terms() {
                out.push(Record {
                    index: MultiIndex::new(g, d).expect("stable level"),
                    value: value.clone(),
                });
            }
        }
    }
    out
}

pub fn serialize(theory: Theory, records: &[Record]) -> String {
    let mut s = format!("mvvol-cache {VERSION} {}\n", theory.tag());
    for r in records {
        let d: Vec<String> = r.index.exponents().iter().map(u32::to_string).collect();
        writeln!(
            s,
            "{} {} {} {}",
            r.index.g(),
            r.index.n(),
            d.join(","),
            render_value(&r.value)
        )
        .unwrap();
    }
    s
}

pub fn parse(text: &str) -> Result<(Theory, Vec<Record>), String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty cache file")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    match fields.as_slice() {
        ["mvvol-cache", v, tag] if *v == VERSION.to_string() => {
            let theory = Theory::from_tag(tag).ok_or_else(|| format!("unknown theory {tag:?}"))?;
            let mut records = Vec::new();
            for (i, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                let at = |e: String| format!("line {}: {e}", i + 2);
                let parts: Vec<&str> = line.split_whitespace().collect();
                let [g, n, d, value] = parts.as_slice() else {
                    return Err(at("expected 4 fields".into()));
                };
                let g: u32 = g.parse().map_err(|_| at(format!("bad genus {g:?}")))?;
                let n: u32 = n.parse().map_err(|_| at(format!("bad arity {n:?}")))?;
                let d: Vec<u32> = d
                    .split(',')
                    .map(|x| x.parse().map_err(|_| at(format!("bad exponent {x:?}"))))
                    .collect::<Result<_, _>>()?;
                if d.len() != n as usize {
                    return Err(at("arity mismatch".into()));
                }
                let index = MultiIndex::new(g, &d).map_err(|e| at(e.to_string()))?;
                let value = parse_value(value).map_err(at)?;
                records.push(Record { index, value });
            }
            Ok((theory, records))
        }
        _ => Err(format!("unsupported cache header {header:?}")),
    }
}

pub fn load_into(table: &CoeffTable, records: &[Record]) -> Result<(), String> {
    for r in records {
        table
            .insert(r.index.clone(), &r.value)
            .map_err(|_| format!("grade mismatch for {:?}", r.index))?;
    }
    Ok(())
}

pub fn load_global(text: &str) -> Result<usize, String> {
    let (theory, records) = parse(text)?;
    if theory != Theory::MasurVeech {
        return Err(format!("cache holds {} coefficients", theory.tag()));
    }
    load_into(virasoro::global().table(), &records)?;
    Ok(records.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let records = complete_levels(1, 3);
        let text = serialize(Theory::MasurVeech, &records);
        let (theory, parsed) = parse(&text).unwrap();
        assert_eq!(theory, Theory::MasurVeech);
        assert_eq!(parsed, records);
        assert!(text.lines().any(|l| l == "1 1 1 0:1/8"));
        let table = CoeffTable::new(Theory::MasurVeech);
        load_into(&table, &parsed).unwrap();
        assert_eq!(table.len(), records.len());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("").is_err());
        assert!(parse("mvvol-cache 9 mv\n").is_err());
        assert!(parse("mvvol-cache 1 mv\n1 1 0\n").is_err());
        assert!(parse("mvvol-cache 1 mv\n1 2 0 1:1/12\n").is_err());
    }
}

//! Reader for `(Z/pZ)^n` value tables.
//!
//! One entry per line, `x1,...,xn: value`. Values use the canonical
//! `CycloNum` text form, so plain integers work. Blank lines and lines
//! starting with `#` are skipped. Points not listed are 0.

use primefourier::applications::MultiSignal;
use primefourier::{CycloNum, Error, PrimeModulus, Result};

pub fn parse_values(p: PrimeModulus, n: usize, text: &str) -> Result<MultiSignal> {
    let mut table = MultiSignal::zero(p, n)?;
    let mut seen = vec![false; table.len()];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let (coords, value) = line
            .split_once(':')
            .ok_or_else(|| bad("expected `x1,...,xn: value`".into()))?;
        let point = coords
            .split(',')
            .map(|c| c.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| bad(format!("bad coordinate: {e}")))?;
        if point.len() != n {
            return Err(bad(format!("expected {n} coordinates, found {}", point.len())));
        }
        let index = table.index(&point).map_err(|e| bad(e.to_string()))?;
        if std::mem::replace(&mut seen[index], true) {
            return Err(bad(format!("point {coords} listed twice")));
        }
        let value = CycloNum::parse(p, value.trim()).map_err(|e| bad(e.to_string()))?;
        table.set(&point, value)?;
    }
    Ok(table)
}

//! Parsing of `--pairs` lists such as `mono>T,jacobi:2,7>jacobi:1,8`.
//!
//! Commas both separate pairs and parameters, so each token consumes exactly
//! as many comma-separated parameters as its basis name takes.

use cobasis::{BasisSpec, Error};

fn arity(name: &str) -> usize {
    match name {
        "jacobi" | "shiftmono" => 2,
        "gegenbauer" | "laguerre" => 1,
        _ => 0,
    }
}

/// Reads one basis token from the front of `text`, returning the rest.
fn take_basis(text: &str) -> Result<(BasisSpec, &str), Error> {
    let name_end = text.find([':', '>', ',']).unwrap_or(text.len());
    let name = &text[..name_end];
    let mut end = name_end;
    if text[end..].starts_with(':') {
        let mut params = arity(name).max(1);
        end += 1;
        loop {
            let stop = text[end..].find([',', '>']).map_or(text.len(), |i| end + i);
            end = stop;
            params -= 1;
            if params == 0 || !text[end..].starts_with(',') {
                break;
            }
            end += 1;
        }
    }
    let token = &text[..end];
    Ok((token.parse()?, &text[end..]))
}

pub fn parse_pairs(text: &str) -> Result<Vec<(BasisSpec, BasisSpec)>, Error> {
    let mut rest = text.trim();
    let mut pairs = Vec::new();
    loop {
        let (from, after) = take_basis(rest)?;
        let after = after
            .strip_prefix('>')
            .ok_or_else(|| Error::Parse(format!("expected '>' after '{from}' in pair list '{text}'")))?;
        let (to, after) = take_basis(after)?;
        pairs.push((from, to));
        if after.is_empty() {
            return Ok(pairs);
        }
        rest = after
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("unexpected '{after}' in pair list '{text}'")))?;
    }
}

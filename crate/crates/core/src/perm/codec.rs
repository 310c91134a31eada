//! One-line notation: `"2143"` for degree ≤ 9, `"10,2,0,4"` otherwise.
//! A `0` entry marks a point where a partial permutation is undefined.

use crate::error::{Error, Result};

pub(crate) fn format_one_line(images: &[u8]) -> String {
    if images.len() <= 9 {
        images.iter().map(|&v| char::from(b'0' + v)).collect()
    } else {
        images
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn parse_one_line(input: &str) -> Result<Vec<u8>> {
    let s = input.trim();
    let bad = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(bad("empty string"));
    }
    let values: Vec<u8> = if s.contains(',') {
        s.split(',')
            .map(|tok| tok.trim().parse::<u8>().map_err(|_| bad("bad entry")))
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| bad("non-digit character"))
            })
            .collect::<Result<_>>()?
    };
    if values.len() > u8::MAX as usize {
        return Err(bad("degree too large"));
    }
    if values.iter().any(|&v| v as usize > values.len()) {
        return Err(bad("entry exceeds degree"));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_and_long_forms() {
        assert_eq!(format_one_line(&[0, 2, 5, 0, 1]), "02501");
        let long = [10, 2, 0, 4, 1, 3, 5, 6, 7, 8];
        assert_eq!(format_one_line(&long), "10,2,0,4,1,3,5,6,7,8");
        assert_eq!(parse_one_line("10,2,0,4,1,3,5,6,7,8").unwrap(), long);
        assert_eq!(parse_one_line("02501").unwrap(), vec![0, 2, 5, 0, 1]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_one_line("").is_err());
        assert!(parse_one_line("1a3").is_err());
        assert!(parse_one_line("15").is_err());
        assert!(parse_one_line("1,,2").is_err());
    }
}

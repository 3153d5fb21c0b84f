use num_bigint::BigInt;

use crate::contfrac::ContinuedFraction;
use crate::error::{Error, Result};

/// Parses Conway notation such as `C(2,3,-2)`, `[2, 3, -2]` or `2 3 -2`.
///
/// Integers are separated by commas and/or whitespace; the `C( )` or `[ ]`
/// wrapper is optional. Columns in errors are 1-based character positions.
pub fn parse_notation(text: &str) -> Result<ContinuedFraction> {
    let chars: Vec<char> = text.chars().collect();
    let syntax = |column: usize, message: String| Error::Syntax { column, message };

    let first = chars.iter().position(|c| !c.is_whitespace());
    let last = chars.iter().rposition(|c| !c.is_whitespace());
    let (Some(first), Some(last)) = (first, last) else {
        return Err(syntax(1, "empty notation".into()));
    };

    let (start, end) = match chars[first] {
        'C' | 'c' => {
            let open = (first + 1..=last).find(|&i| !chars[i].is_whitespace());
            if open.map(|i| chars[i]) != Some('(') {
                return Err(syntax(
                    open.unwrap_or(first + 1) + 1,
                    "expected '(' after 'C'".into(),
                ));
            }
            if chars[last] != ')' || last == open.unwrap() {
                return Err(syntax(last + 1, "expected closing ')'".into()));
            }
            (open.unwrap() + 1, last)
        }
        '[' => {
            if chars[last] != ']' || last == first {
                return Err(syntax(last + 1, "expected closing ']'".into()));
            }
            (first + 1, last)
        }
        _ => (first, last + 1),
    };

    let mut quotients = Vec::new();
    let mut i = start;
    let mut expect_value = true;
    let mut after_comma = false;
    while i < end {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == ',' {
            if expect_value {
                return Err(syntax(i + 1, "expected an integer before ','".into()));
            }
            expect_value = true;
            after_comma = true;
            i += 1;
        } else if c == '-' || c == '+' || c.is_ascii_digit() {
            let begin = i;
            i += 1;
            while i < end && chars[i].is_ascii_digit() {
                i += 1;
            }
            let token: String = chars[begin..i].iter().collect();
            let value: BigInt = token
                .parse()
                .map_err(|_| syntax(begin + 1, format!("invalid integer {token:?}")))?;
            if i < end && !(chars[i].is_whitespace() || chars[i] == ',') {
                return Err(syntax(
                    i + 1,
                    format!("unexpected character {:?}", chars[i]),
                ));
            }
            quotients.push(value);
            expect_value = false;
            after_comma = false;
        } else {
            return Err(syntax(i + 1, format!("unexpected character {c:?}")));
        }
    }
    if after_comma {
        return Err(syntax(end + 1, "trailing ','".into()));
    }
    ContinuedFraction::new(quotients)
}

//! Signed Gauss-code text: `O<label><sign>` / `U<label><sign>` tokens per
//! circle, circles separated by `|`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{Endpoint, GaussDiagram, Role};
use crate::error::{Error, Result};
use crate::poly::{ChordId, Sign};

struct Token {
    endpoint: Endpoint,
    sign: Sign,
}

fn parse_circle(text: &str, base_offset: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    loop {
        while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
        let Some((start, head)) = chars.next() else {
            return Ok(out);
        };
        let malformed = |end: usize| Error::MalformedToken {
            token: text[start..end].split_whitespace().next().unwrap_or("").to_string(),
            offset: base_offset + start,
        };
        let role = match head {
            'O' => Role::Over,
            'U' => Role::Under,
            _ => return Err(malformed(text.len())),
        };
        let mut digits = String::new();
        while let Some((_, c)) = chars.next_if(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
        }
        let sign = match chars.next() {
            Some((_, '+')) => Sign::Plus,
            Some((_, '-' | '\u{2212}')) => Sign::Minus,
            _ => return Err(malformed(text.len())),
        };
        let chord = digits
            .parse::<u32>()
            .ok()
            .and_then(ChordId::new)
            .ok_or_else(|| malformed(text.len()))?;
        out.push(Token { endpoint: Endpoint { chord, role }, sign });
    }
}

impl FromStr for GaussDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split('|').collect();
        if parts.len() > 2 {
            return Err(Error::TooManyCircles(parts.len()));
        }
        let mut offset = 0;
        let mut circles = Vec::new();
        for part in &parts {
            circles.push(parse_circle(part, offset)?);
            offset += part.len() + 1;
        }

        let mut signs: BTreeMap<ChordId, Sign> = BTreeMap::new();
        let mut over: BTreeMap<ChordId, ()> = BTreeMap::new();
        let mut under: BTreeMap<ChordId, ()> = BTreeMap::new();
        for t in circles.iter().flatten() {
            let id = t.endpoint.chord;
            let dup = match t.endpoint.role {
                Role::Over => over.insert(id, ()),
                Role::Under => under.insert(id, ()),
            };
            if dup.is_some() {
                return Err(Error::DuplicateRole(id));
            }
            if let Some(prev) = signs.insert(id, t.sign) {
                if prev != t.sign {
                    return Err(Error::SignMismatch(id));
                }
            }
        }
        let circles = circles
            .into_iter()
            .map(|c| c.into_iter().map(|t| t.endpoint).collect())
            .collect();
        GaussDiagram::from_parts(circles, &signs)
    }
}

impl GaussDiagram {
    pub fn parse_gauss_code(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn to_gauss_code(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, circle) in self.circles.iter().enumerate() {
            if i > 0 {
                write!(f, " |")?;
                if !circle.is_empty() {
                    write!(f, " ")?;
                }
            }
            for (j, e) in circle.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                let r = match e.role {
                    Role::Over => 'O',
                    Role::Under => 'U',
                };
                write!(f, "{r}{}{}", e.chord, self.chords[&e.chord].sign.as_char())?;
            }
        }
        Ok(())
    }
}

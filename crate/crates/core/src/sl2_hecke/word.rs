use std::fmt;

use serde::Serialize;

use super::{hecke_generators, HeckeError, SL2Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    A,
    B,
    J,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum WordItem {
    Gen(Generator, i64),
    Group(Word, i64),
}

/// A product of generators, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Word(pub Vec<WordItem>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|it| {
                let (body, e) = match it {
                    WordItem::Gen(g, e) => (format!("{g:?}"), *e),
                    WordItem::Group(w, e) => (format!("({w})"), *e),
                };
                if e == 1 {
                    body
                } else {
                    format!("{body}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses words such as `A B A^-1 J` or `(A B)^5`. Whitespace is optional.
pub fn parse_word(s: &str) -> Result<Word, HeckeError> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let w = parse_seq(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(HeckeError::Parse(format!("unexpected '{}' at {pos}", chars[pos])));
    }
    Ok(w)
}

fn parse_seq(c: &[char], pos: &mut usize) -> Result<Word, HeckeError> {
    let mut items = Vec::new();
    while *pos < c.len() && c[*pos] != ')' {
        let item = match c[*pos] {
            '(' => {
                *pos += 1;
                let inner = parse_seq(c, pos)?;
                if c.get(*pos) != Some(&')') {
                    return Err(HeckeError::Parse("unclosed '('".into()));
                }
                *pos += 1;
                WordItem::Group(inner, parse_exp(c, pos)?)
            }
            ch => {
                let g = match ch.to_ascii_uppercase() {
                    'A' => Generator::A,
                    'B' => Generator::B,
                    'J' => Generator::J,
                    _ => return Err(HeckeError::Parse(format!("unknown symbol '{ch}'"))),
                };
                *pos += 1;
                WordItem::Gen(g, parse_exp(c, pos)?)
            }
        };
        items.push(item);
    }
    Ok(Word(items))
}

fn parse_exp(c: &[char], pos: &mut usize) -> Result<i64, HeckeError> {
    if c.get(*pos) != Some(&'^') {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    if matches!(c.get(*pos), Some('-') | Some('+')) {
        *pos += 1;
    }
    while c.get(*pos).is_some_and(char::is_ascii_digit) {
        *pos += 1;
    }
    let text: String = c[start..*pos].iter().collect();
    text.parse()
        .map_err(|_| HeckeError::Parse(format!("bad exponent '{text}'")))
}

/// The exact product in Γ̃_q.
pub fn eval_word(word: &Word, q: u32) -> Result<SL2Matrix, HeckeError> {
    let gens = hecke_generators(q)?;
    Ok(eval_with(word, &gens))
}

fn eval_with(word: &Word, gens: &(SL2Matrix, SL2Matrix, SL2Matrix)) -> SL2Matrix {
    let mut acc = SL2Matrix::identity(gens.0.order());
    for item in &word.0 {
        let m = match item {
            WordItem::Gen(Generator::A, e) => gens.0.pow(*e),
            WordItem::Gen(Generator::B, e) => gens.1.pow(*e),
            WordItem::Gen(Generator::J, e) => gens.2.pow(*e),
            WordItem::Group(w, e) => eval_with(w, gens).pow(*e),
        };
        acc = acc.mul(&m);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let w = parse_word("A B A^-1 J").unwrap();
        assert_eq!(w.0.len(), 4);
        assert_eq!(w.to_string(), "A B A^-1 J");
        assert_eq!(parse_word("(AB)^5").unwrap().to_string(), "(A B)^5");
        assert!(parse_word("A C").is_err());
        assert!(parse_word("(A B").is_err());
        assert!(parse_word("A^x").is_err());
    }

    #[test]
    fn known_words() {
        assert!(eval_word(&Word::default(), 5).unwrap().is_identity());
        assert!(eval_word(&parse_word("(AB)^5").unwrap(), 5).unwrap().is_minus_identity());
        assert!(eval_word(&parse_word("(AB)^10").unwrap(), 5).unwrap().is_identity());
        assert!(eval_word(&parse_word("A A^-1 B^3 B^-3").unwrap(), 7).unwrap().is_identity());
    }
}

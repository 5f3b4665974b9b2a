//! ASCII drawing of a word as a lattice path.

use crate::word::{Letter, Word};

/// One text row per level, highest first. A rise from height `h` is drawn as
/// `/` in row `h`, a fall to height `h` as `\` in row `h`; trailing blanks
/// are trimmed. The empty word renders as the empty string.
pub fn render(w: &Word) -> String {
    if w.is_empty() {
        return String::new();
    }
    let heights = w.heights();
    // row index of each step
    let rows: Vec<i64> = w
        .letters()
        .iter()
        .zip(&heights)
        .map(|(l, &h)| match l {
            Letter::A => h,
            Letter::B => h - 1,
        })
        .collect();
    let top = *rows.iter().max().unwrap();
    let bottom = *rows.iter().min().unwrap();

    let mut lines = Vec::new();
    for row in (bottom..=top).rev() {
        let line: String = w
            .letters()
            .iter()
            .zip(&rows)
            .map(|(l, &r)| match (r == row, l) {
                (false, _) => ' ',
                (true, Letter::A) => '/',
                (true, Letter::B) => '\\',
            })
            .collect();
        lines.push(line.trim_end().to_string());
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> String {
        render(&s.parse().unwrap())
    }

    #[test]
    fn render_examples() {
        assert_eq!(r("ab"), "/\\");
        assert_eq!(r("aabb"), " /\\\n/  \\");
        assert_eq!(r("abab"), "/\\/\\");
        assert_eq!(r(""), "");
    }

    #[test]
    fn dn_words_dip_below_the_axis() {
        assert_eq!(r("abb"), "/\\\n  \\");
    }
}

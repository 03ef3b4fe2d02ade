//! Rule-based tokenizer.
//!
//! Maximal runs of letters, digits and apostrophes become word tokens.
//! Every other non-whitespace character is a token of its own, so
//! punctuation and emoticon symbols survive into the vocabulary. An emoji
//! together with its modifiers (variation selectors, skin tones, keycaps,
//! zero-width-joined sequences) counts as one symbol.

const ZWJ: char = '\u{200D}';

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '\'' | '\u{2019}' | '\u{0300}'..='\u{036F}')
}

fn is_symbol_modifier(c: char) -> bool {
    matches!(c, '\u{FE0E}' | '\u{FE0F}' | '\u{20E3}' | '\u{1F3FB}'..='\u{1F3FF}')
}

fn push_normalized(buf: &mut String, c: char) {
    buf.push(if c == '\u{2019}' { '\'' } else { c });
}

/// Splits `text` into lowercased tokens. Nothing is dropped except whitespace.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    let lowered = text.to_lowercase();
    let mut chars = lowered.chars().peekable();

    while let Some(c) = chars.next() {
        if is_word_char(c) {
            push_normalized(&mut word, c);
            continue;
        }
        if !word.is_empty() {
            tokens.push(std::mem::take(&mut word));
        }
        if c.is_whitespace() {
            continue;
        }

        let mut symbol = String::new();
        push_normalized(&mut symbol, c);
        loop {
            match chars.peek() {
                Some(&m) if is_symbol_modifier(m) => {
                    symbol.push(m);
                    chars.next();
                }
                Some(&ZWJ) => {
                    symbol.push(ZWJ);
                    chars.next();
                    if let Some(&next) = chars.peek() {
                        if !next.is_whitespace() && !is_word_char(next) {
                            symbol.push(next);
                            chars.next();
                        }
                    }
                }
                _ => break,
            }
        }
        tokens.push(symbol);
    }
    if !word.is_empty() {
        tokens.push(word);
    }
    tokens
}

/// True when the token carries no letter or digit (punctuation, emoticons).
pub fn is_symbolic(token: &str) -> bool {
    !token.chars().any(char::is_alphanumeric)
}

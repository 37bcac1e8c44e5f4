/// Words that end in a period without ending a sentence (compared lowercase, period stripped).
const ABBREVIATIONS: &[&str] = &[
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "mt", "gen", "gov", "sen", "rep", "col",
    "lt", "sgt", "capt", "rev", "hon", "inc", "ltd", "co", "corp", "vs", "etc", "no", "jan", "feb",
    "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec", "e.g", "i.e", "u.s",
    "u.k", "u.n", "a.m", "p.m",
];

const CLOSERS: &[char] = &['"', '\'', ')', ']', '\u{201d}', '\u{2019}'];

fn is_abbreviation(word: &str) -> bool {
    let word = word.trim_start_matches(|c: char| !c.is_alphanumeric());
    let word = word.trim_end_matches('.');
    let mut chars = word.chars();
    // single capital initial, as in "J. Smith"
    if let (Some(c), None) = (chars.next(), chars.next()) {
        if c.is_uppercase() {
            return true;
        }
    }
    ABBREVIATIONS.contains(&word.to_lowercase().as_str())
}

/// Splits text at `.`, `!` or `?` (plus closing quotes/brackets) when followed by
/// whitespace and an uppercase letter or digit. A period ending a known
/// abbreviation or a single-letter initial does not split.
pub fn split_sentences(text: &str) -> Vec<String> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut sentences = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;
    while i < chars.len() {
        let (_, c) = chars[i];
        if !matches!(c, '.' | '!' | '?') {
            i += 1;
            continue;
        }
        let mut end = i + 1;
        while end < chars.len() && (matches!(chars[end].1, '.' | '!' | '?') || CLOSERS.contains(&chars[end].1)) {
            end += 1;
        }
        let mut next = end;
        while next < chars.len() && chars[next].1.is_whitespace() {
            next += 1;
        }
        let boundary = next > end
            && next < chars.len()
            && (chars[next].1.is_uppercase() || chars[next].1.is_ascii_digit());
        if boundary && c == '.' {
            let byte_end = chars[i].0;
            let word_start = text[start..byte_end]
                .rfind(char::is_whitespace)
                .map_or(start, |p| start + p + 1);
            if is_abbreviation(&text[word_start..byte_end]) {
                i = end;
                continue;
            }
        }
        if boundary {
            let byte_end = chars.get(end).map_or(text.len(), |&(b, _)| b);
            push_trimmed(&mut sentences, &text[start..byte_end]);
            start = chars[next].0;
            i = next;
        } else {
            i = end;
        }
    }
    push_trimmed(&mut sentences, &text[start..]);
    sentences
}

fn push_trimmed(out: &mut Vec<String>, segment: &str) {
    let s = segment.split_whitespace().collect::<Vec<_>>().join(" ");
    if !s.is_empty() {
        out.push(s);
    }
}

/// Lowercased alphanumeric runs.
pub fn tokenize(sentence: &str) -> Vec<String> {
    sentence
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Integer or decimal literal.
pub fn is_numeric(token: &str) -> bool {
    let mut parts = token.splitn(2, '.');
    let int = parts.next().unwrap_or("");
    let int_ok = !int.is_empty() && int.bytes().all(|b| b.is_ascii_digit());
    match parts.next() {
        None => int_ok,
        Some(frac) => int_ok && !frac.is_empty() && frac.bytes().all(|b| b.is_ascii_digit()),
    }
}

/// Number of whitespace-separated words, the unit of the summary word budget.
pub fn word_count(text: &str) -> usize {
    text.split_whitespace().count()
}

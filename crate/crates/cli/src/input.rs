//! Morphism files, generator strings and word sources.

use std::collections::BTreeMap;
use std::fs;

use binmorph::word::{Substitution, WordStream};
use binmorph::{BinaryMorphism, Word};
use clap::Args;
use serde_json::Value;

/// A usage problem, reported with the flag it concerns.
#[derive(Debug)]
pub struct UsageError {
    pub flag: &'static str,
    pub message: String,
}

impl UsageError {
    pub fn new(flag: &'static str, message: impl Into<String>) -> Self {
        UsageError {
            flag,
            message: message.into(),
        }
    }
}

/// Exactly one way of naming a word.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct WordSource {
    /// Word given inline as raw ASCII.
    #[arg(long)]
    pub input: Option<String>,
    /// File whose contents (trailing newline stripped) are the word.
    #[arg(long)]
    pub input_file: Option<String>,
    /// thue-morse | fibonacci | up:Y:Z | morphic:FILE:SEED (needs --length).
    #[arg(long)]
    pub generator: Option<String>,
}

impl WordSource {
    /// The source as a stream; inline and file words become explicit streams.
    pub fn stream(&self) -> Result<WordStream, UsageError> {
        if let Some(s) = &self.input {
            return Ok(WordStream::Explicit(Word::from(s.as_str())));
        }
        if let Some(path) = &self.input_file {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError::new("--input-file", format!("cannot read {path}: {e}")))?;
            let text = text.strip_suffix('\n').unwrap_or(&text);
            let text = text.strip_suffix('\r').unwrap_or(text);
            return Ok(WordStream::Explicit(Word::from(text)));
        }
        let spec = self.generator.as_deref().expect("clap enforces one source");
        parse_generator(spec)
    }

    /// The word itself; generators need `length`, explicit words ignore it
    /// unless it asks for a prefix.
    pub fn word(&self, length: Option<usize>) -> Result<Word, UsageError> {
        let stream = self.stream()?;
        let n = match (&stream, length) {
            (_, Some(n)) => n,
            (WordStream::Explicit(w), None) => w.len(),
            (_, None) => return Err(UsageError::new("--length", "required with --generator")),
        };
        stream
            .prefix(n)
            .map_err(|e| UsageError::new("--length", e.to_string()))
    }
}

pub fn parse_generator(spec: &str) -> Result<WordStream, UsageError> {
    const FLAG: &str = "--generator";
    if let Some(stream) = WordStream::builtin(spec) {
        return Ok(stream);
    }
    if let Some(rest) = spec.strip_prefix("up:") {
        let (y, z) = rest
            .split_once(':')
            .ok_or_else(|| UsageError::new(FLAG, "expected up:PREPERIOD:PERIOD"))?;
        return WordStream::ultimately_periodic(Word::from(y), Word::from(z))
            .map_err(|e| UsageError::new(FLAG, e.to_string()));
    }
    if let Some(rest) = spec.strip_prefix("morphic:") {
        let (path, seed) = rest
            .rsplit_once(':')
            .ok_or_else(|| UsageError::new(FLAG, "expected morphic:FILE:SEED"))?;
        let [seed] = seed.as_bytes() else {
            return Err(UsageError::new(FLAG, "seed must be a single symbol"));
        };
        let generator = read_substitution(path)?;
        return WordStream::morphic(generator, *seed).map_err(|e| UsageError::new(FLAG, e.to_string()));
    }
    Err(UsageError::new(FLAG, format!("unknown generator {spec:?}")))
}

fn read_json(flag: &'static str, path: &str) -> Result<serde_json::Map<String, Value>, UsageError> {
    let text =
        fs::read_to_string(path).map_err(|e| UsageError::new(flag, format!("cannot read {path}: {e}")))?;
    match serde_json::from_str(&text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(UsageError::new(flag, format!("{path}: expected a JSON object"))),
        Err(e) => Err(UsageError::new(flag, format!("{path}: malformed JSON: {e}"))),
    }
}

fn ascii_image(flag: &'static str, key: &str, value: &Value) -> Result<Word, UsageError> {
    match value {
        Value::String(s) if s.bytes().all(|c| c.is_ascii_graphic() || c == b' ') => Ok(Word::from(s.as_str())),
        Value::String(_) => Err(UsageError::new(flag, format!("image of {key:?} must be printable ASCII"))),
        _ => Err(UsageError::new(flag, format!("image of {key:?} must be a string"))),
    }
}

/// `{"0": "...", "1": "..."}` with exactly those keys.
pub fn read_morphism(path: &str) -> Result<BinaryMorphism, UsageError> {
    const FLAG: &str = "--morphism";
    let map = read_json(FLAG, path)?;
    if let Some(extra) = map.keys().find(|k| *k != "0" && *k != "1") {
        return Err(UsageError::new(FLAG, format!("unexpected key {extra:?}")));
    }
    let image = |key: &str| -> Result<Word, UsageError> {
        let value = map
            .get(key)
            .ok_or_else(|| UsageError::new(FLAG, format!("missing key {key:?}")))?;
        ascii_image(FLAG, key, value)
    };
    Ok(BinaryMorphism::new(image("0")?, image("1")?))
}

/// Like a morphism file, but any single-symbol keys are allowed.
pub fn read_substitution(path: &str) -> Result<Substitution, UsageError> {
    const FLAG: &str = "--generator";
    let map = read_json(FLAG, path)?;
    let mut images = BTreeMap::new();
    for (key, value) in &map {
        let [symbol] = key.as_bytes() else {
            return Err(UsageError::new(FLAG, format!("key {key:?} is not a single symbol")));
        };
        images.insert(*symbol, ascii_image(FLAG, key, value)?);
    }
    Ok(Substitution::new(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn temp_json(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn morphism_file_validation() {
        let ok = temp_json(r#"{"0": "ab", "1": ""}"#);
        let h = read_morphism(ok.path().to_str().unwrap()).unwrap();
        assert_eq!(h, BinaryMorphism::new("ab", ""));
        for bad in [
            r#"{"0": "ab"}"#,
            r#"{"0": "ab", "1": "a", "2": "b"}"#,
            r#"{"0": 1, "1": "a"}"#,
            r#"["ab", "a"]"#,
            r#"{"0": "ab", "1": "#,
            "{\"0\": \"\u{e9}\", \"1\": \"a\"}",
        ] {
            let f = temp_json(bad);
            let err = read_morphism(f.path().to_str().unwrap()).unwrap_err();
            assert_eq!(err.flag, "--morphism", "{bad}");
        }
        assert!(read_morphism("/nonexistent/m.json").is_err());
    }

    #[test]
    fn generators() {
        let tm = parse_generator("thue-morse").unwrap();
        assert_eq!(tm.prefix(4).unwrap(), Word::from("0110"));
        let up = parse_generator("up:a:bc").unwrap();
        assert_eq!(up.prefix(5).unwrap(), Word::from("abcbc"));
        assert!(parse_generator("up:a:").is_err());
        assert!(parse_generator("tribonacci").is_err());

        let f = temp_json(r#"{"a": "ab", "b": "ac", "c": "a"}"#);
        let spec = format!("morphic:{}:a", f.path().display());
        let s = parse_generator(&spec).unwrap();
        assert_eq!(s.prefix(7).unwrap(), Word::from("abacaba"));
        let spec = format!("morphic:{}:b", f.path().display());
        assert!(parse_generator(&spec).is_err());
    }
}

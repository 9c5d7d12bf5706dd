//! Reading command inputs from inline flags or an `--input` document.

use std::fmt;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::{Map, Value};

use extbranch::wire::{self, WireError, SCHEMA};

/// Anything that should end the run with exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    /// The flag or file the bad value came from.
    pub source: String,
    pub pointer: String,
    pub message: String,
}

impl InputError {
    pub fn new(source: impl Into<String>, pointer: impl Into<String>, message: impl Into<String>) -> Self {
        InputError { source: source.into(), pointer: pointer.into(), message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        InputError::new("arguments", "", message)
    }

    pub fn wire(source: &str, e: WireError) -> Self {
        InputError::new(source, e.pointer, e.message)
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pointer.is_empty() {
            write!(f, "{}: {}", self.source, self.message)
        } else {
            write!(f, "{} {}: {}", self.source, self.pointer, self.message)
        }
    }
}

pub type Result<T> = std::result::Result<T, InputError>;

/// The optional `--input` document, an object with `"schema": "v1"`.
#[derive(Default)]
pub struct Inputs {
    path: String,
    doc: Option<Map<String, Value>>,
}

impl Inputs {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Inputs::default());
        };
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| InputError::new(&name, "", e.to_string()))?;
        let value: Value = wire::from_str(&text).map_err(|e| InputError::wire(&name, e))?;
        let Value::Object(doc) = value else {
            return Err(InputError::new(&name, "", "the input document must be a JSON object"));
        };
        match doc.get("schema") {
            Some(Value::String(s)) if s == SCHEMA => {}
            Some(_) => return Err(InputError::new(&name, "/schema", format!("unsupported schema, expected {SCHEMA:?}"))),
            None => return Err(InputError::new(&name, "/schema", "missing field `schema`")),
        }
        Ok(Inputs { path: name, doc: Some(doc) })
    }

    /// Rejects document fields the command does not read.
    pub fn allow(&self, fields: &[&str]) -> Result<()> {
        if let Some(doc) = &self.doc {
            for k in doc.keys() {
                if k != "schema" && !fields.contains(&k.as_str()) {
                    let expected = fields.join(", ");
                    return Err(InputError::new(&self.path, format!("/{k}"), format!("unknown field `{k}`, expected one of {expected}")));
                }
            }
        }
        Ok(())
    }

    /// `--flag` if given inline, otherwise the document field of the same name.
    pub fn get<T: DeserializeOwned>(&self, field: &str, inline: Option<&str>) -> Result<Option<T>> {
        if let Some(s) = inline {
            let flag = format!("--{}", field.replace('_', "-"));
            return wire::from_str(s).map(Some).map_err(|e| InputError::wire(&flag, e));
        }
        match self.doc.as_ref().and_then(|d| d.get(field)) {
            Some(v) => wire::from_value(v.clone())
                .map(Some)
                .map_err(|e| InputError::wire(&self.path, e.under(&format!("/{field}")))),
            None => Ok(None),
        }
    }

    pub fn has(&self, field: &str) -> bool {
        self.doc.as_ref().is_some_and(|d| d.contains_key(field))
    }

    pub fn require<T: DeserializeOwned>(&self, field: &str, inline: Option<&str>) -> Result<T> {
        self.get(field, inline)?.ok_or_else(|| {
            let flag = field.replace('_', "-");
            InputError::usage(format!("missing input `{field}`: pass --{flag} or put it in the --input document"))
        })
    }

    /// Where a field's value came from, for locating semantic errors.
    pub fn origin(&self, field: &str, inline: Option<&str>) -> (String, String) {
        match inline {
            Some(_) => (format!("--{}", field.replace('_', "-")), String::new()),
            None => (self.path.clone(), format!("/{field}")),
        }
    }

    /// Converts a semantic [`WireError`] on a field into an input error at the right place.
    pub fn locate(&self, field: &str, inline: Option<&str>, e: WireError) -> InputError {
        let (source, prefix) = self.origin(field, inline);
        InputError::new(source, format!("{prefix}{}", e.pointer), e.message)
    }
}

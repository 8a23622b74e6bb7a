//! Serde helpers rendering big integers as decimal strings, so JSON consumers
//! never lose precision.

use std::fmt::Display;

use serde::ser::{SerializeSeq, Serializer};

pub(crate) fn serialize<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn serialize_opt_seq<T: Display, S: Serializer>(
    values: &[Option<T>],
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.as_ref().map(ToString::to_string))?;
    }
    seq.end()
}

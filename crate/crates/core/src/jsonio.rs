//! JSON serialization with fixed-width float formatting.
//!
//! Machine-readable artifacts (distributions, score tables) are written with
//! 17 significant digits per float: enough decimal digits to reconstruct any
//! f64 bit-exactly on read-back.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, Serializer};

struct SigDigits17;

impl Formatter for SigDigits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        // {:.16e} prints one leading digit plus 16 fractional digits.
        write!(writer, "{value:.16e}")
    }
}

/// Serializes `value` to compact JSON with 17-significant-digit floats.
pub fn to_json_17sig<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::with_capacity(256);
    let mut ser = Serializer::with_formatter(&mut out, SigDigits17);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out).expect("serde_json emits UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_carry_17_significant_digits() {
        let s = to_json_17sig(&vec![0.25_f64, 0.69140625]).unwrap();
        assert_eq!(s, "[2.5000000000000000e-1,6.9140625000000000e-1]");
    }

    #[test]
    fn formatted_floats_round_trip_bit_exactly() {
        let values = vec![
            1.0 / 3.0,
            f64::MIN_POSITIVE,
            1e300,
            -0.1234567890123456789,
            2.0_f64.sqrt(),
        ];
        let s = to_json_17sig(&values).unwrap();
        let back: Vec<f64> = serde_json::from_str(&s).unwrap();
        for (a, b) in values.iter().zip(&back) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn integers_are_untouched() {
        let s = to_json_17sig(&serde_json::json!({"n_labels": 3})).unwrap();
        assert_eq!(s, r#"{"n_labels":3}"#);
    }
}

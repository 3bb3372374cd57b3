//! Floats in reports are written with 17 significant digits.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// An `f64` that serializes as a JSON number with 17 significant digits,
/// or `null` when it is not finite.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Real(pub f64);

impl Real {
    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real(x)
    }
}

pub fn format_real(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match format_real(self.0) {
            Some(text) => {
                let raw = RawValue::from_string(text).map_err(serde::ser::Error::custom)?;
                raw.serialize(s)
            }
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_real(1.0).unwrap(), "1.0000000000000000e0");
        let text = format_real(std::f64::consts::PI).unwrap();
        assert_eq!(text.parse::<f64>().unwrap(), std::f64::consts::PI);
        let digits = text.split('e').next().unwrap().replace('.', "");
        assert_eq!(digits.len(), 17);
        assert_eq!(serde_json::to_string(&Real(f64::NAN)).unwrap(), "null");
        assert_eq!(serde_json::to_string(&Real(-0.5)).unwrap(), "-5.0000000000000000e-1");
    }
}

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Initial profiles. Shapes are fixed conventions: the triangle peaks at 1
/// at `x = 0` and falls linearly to 0 at `x = ±1`; the rectangle is 1 on
/// `[−1, 1]`; the Gaussian is `exp(−x²)`; the sine is `sin(2πx/period)`;
/// the Burgers ramp is 1 for `x < 0`, `1 − x` on `[0, 1]` and 0 beyond.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Profile {
    Triangle,
    Rectangle,
    Gaussian,
    Sine { period: f64 },
    BurgersRamp,
}

impl Profile {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Profile::Triangle => (1.0 - x.abs()).max(0.0),
            Profile::Rectangle => {
                if x.abs() <= 1.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Profile::Gaussian => (-x * x).exp(),
            Profile::Sine { period } => (2.0 * PI * x / period).sin(),
            Profile::BurgersRamp => {
                if x < 0.0 {
                    1.0
                } else if x <= 1.0 {
                    1.0 - x
                } else {
                    0.0
                }
            }
        }
    }

    /// The profile translated by `shift` and re-wrapped into the periodic box
    /// `[left, left + length)`.
    pub fn periodic_translate(self, x: f64, shift: f64, left: f64, length: f64) -> f64 {
        let wrapped = (x - shift - left).rem_euclid(length) + left;
        self.eval(wrapped)
    }

    pub fn name(self) -> &'static str {
        match self {
            Profile::Triangle => "triangle",
            Profile::Rectangle => "rectangle",
            Profile::Gaussian => "gaussian",
            Profile::Sine { .. } => "sine",
            Profile::BurgersRamp => "ramp",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "triangle" => Ok(Profile::Triangle),
            "rectangle" => Ok(Profile::Rectangle),
            "gaussian" => Ok(Profile::Gaussian),
            "sine" => Ok(Profile::Sine { period: 10.0 }),
            "ramp" => Ok(Profile::BurgersRamp),
            other => Err(Error::Parse(format!("unknown profile {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(Profile::Triangle.eval(0.0), 1.0);
        assert_eq!(Profile::Triangle.eval(0.5), 0.5);
        assert_eq!(Profile::Triangle.eval(-1.5), 0.0);
        assert_eq!(Profile::Rectangle.eval(1.0), 1.0);
        assert_eq!(Profile::Rectangle.eval(1.01), 0.0);
        assert_eq!(Profile::BurgersRamp.eval(-3.0), 1.0);
        assert_eq!(Profile::BurgersRamp.eval(0.25), 0.75);
        assert_eq!(Profile::BurgersRamp.eval(1.5), 0.0);
    }

    #[test]
    fn translation_wraps() {
        // peak moved from 0 to 4.5 in [−5, 5)
        assert_eq!(Profile::Triangle.periodic_translate(4.5, 4.5, -5.0, 10.0), 1.0);
        // and one more cell wraps to −5 + 0.5
        let v = Profile::Triangle.periodic_translate(-4.5, 5.5, -5.0, 10.0);
        assert!((v - 1.0).abs() < 1e-12);
    }
}

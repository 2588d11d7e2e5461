//! CSV formatting shared by the table, grid, estimate, and experiment exports.
//!
//! Floats are always rendered with 17 significant digits in scientific
//! notation so every `f64` round-trips exactly and output is byte-stable
//! across runs and worker-pool sizes.

/// Full-precision float field: 17 significant digits, scientific notation.
pub fn float17(x: f64) -> String {
    format!("{:.16e}", x)
}

#[cfg(test)]
mod tests {
    use super::float17;

    #[test]
    fn float17_round_trips() {
        for &x in &[
            4.0 / 3.0,
            33.0 / 20.0,
            51.0 / 35.0,
            0.0,
            -1.25e-7,
            6.02e23,
            f64::MIN_POSITIVE,
        ] {
            let s = float17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s} did not round-trip");
        }
    }

    #[test]
    fn float17_is_stable_text() {
        assert_eq!(float17(4.0 / 3.0), "1.3333333333333333e0");
        assert_eq!(float17(48.0 / 25.0), "1.9199999999999999e0");
    }
}

//! Bundled instances in the text file format, so the fixtures exercise the
//! parser on every run.

/// Quartic in four variables written as a sum of four squares. Serves as the
/// seed for the five-variable family construction.
pub const FOUR_VAR_FOUR_SQUARES: &str = "\
# quartic form in four variables, sum of four squares
vars: n=4
p1 = x1^2 - x4^2
p2 = x2^2 - x4^2
p3 = x3^2 - x4^2
p4 = -x1^2 - x1*x2 - x1*x3 + x1*x4 - x2*x3 + x2*x4 + x3*x4
";

/// Quartic in five variables written as a sum of eight squares: the four
/// seed generators plus the four products with the new variable.
pub const FIVE_VAR_EIGHT_SQUARES: &str = "\
# quartic form in five variables, sum of eight squares
vars: n=5
p1 = x1^2 - x4^2
p2 = x2^2 - x4^2
p3 = x3^2 - x4^2
p4 = -x1^2 - x1*x2 - x1*x3 + x1*x4 - x2*x3 + x2*x4 + x3*x4
p5 = x1*x5
p6 = x2*x5
p7 = x3*x5
p8 = x4*x5
";

/// Names accepted by `--builtin`.
pub const BUILTIN_NAMES: [&str; 2] = ["example-2.1", "example-2.2"];

/// Instance text for a builtin name.
pub fn builtin_text(name: &str) -> Option<&'static str> {
    match name {
        "example-2.1" => Some(FOUR_VAR_FOUR_SQUARES),
        "example-2.2" => Some(FIVE_VAR_EIGHT_SQUARES),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_instance;

    #[test]
    fn builtins_parse() {
        for name in BUILTIN_NAMES {
            let text = builtin_text(name).unwrap();
            let inst = parse_instance(text).unwrap();
            assert!(!inst.generators.is_empty());
        }
        assert!(builtin_text("example-9.9").is_none());
    }

    #[test]
    fn builtin_generator_counts() {
        assert_eq!(
            parse_instance(FOUR_VAR_FOUR_SQUARES)
                .unwrap()
                .generators
                .len(),
            4
        );
        assert_eq!(
            parse_instance(FIVE_VAR_EIGHT_SQUARES)
                .unwrap()
                .generators
                .len(),
            8
        );
    }
}

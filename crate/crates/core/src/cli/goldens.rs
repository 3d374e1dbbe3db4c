//! Expected renderings of the bundled fixtures, one file per (fixture, command).

macro_rules! goldens {
    ($($fixture:literal : [$($cmd:literal),*]),* $(,)?) => {
        /// `(fixture, subcommand, expected output)`.
        pub const GOLDENS: &[(&str, &str, &str)] = &[
            $($(($fixture, $cmd, include_str!(concat!("../../fixtures/golden/", $fixture, ".", $cmd, ".txt")))),*),*
        ];
    };
}

goldens!(
    "loop": ["p", "h", "g", "tutte", "f"],
    "coloop": ["p", "h", "g", "tutte", "f"],
    "mgon3": ["p", "h", "g", "tutte", "f"],
    "mgon4": ["p", "h", "g", "tutte", "f"],
    "mgon5": ["p", "h", "g", "tutte", "f"],
    "mgon6": ["p", "h", "g", "tutte", "f"],
    "multiedge2": ["p", "h", "g", "tutte", "f"],
    "multiedge3": ["p", "h", "g", "tutte", "f"],
    "multiedge4": ["p", "h", "g", "tutte", "f"],
    "multiedge5": ["p", "h", "g", "tutte", "f"],
    "gray1": ["p", "h", "g", "tutte", "f"],
    "gray2": ["p", "h", "g", "tutte", "f"],
    "six_x": ["p", "h", "g", "tutte", "f"],
    "six_y": ["p", "h", "g", "tutte", "f"],
    "seven_x": ["p", "h", "g", "tutte", "f"],
    "seven_y": ["p", "h", "g", "tutte", "f"],
    "u24_split": ["decomp-check"],
    "u24_split_broken": ["decomp-check"],
);

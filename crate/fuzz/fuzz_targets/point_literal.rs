#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| tamagawa_cli::fuzzing::point_literal(data));

//! Holds no code; the gate lives in `tests/acceptance.rs` and runs with
//! `cargo test -p hfsc-workspace-acceptance`. A separate package keeps its
//! expected failures from stopping the other crates' tests.

// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    let stdout = std::io::stdout();
    let code = rindler_spin::cli::run(std::env::args_os(), &mut stdout.lock(), &mut std::io::stderr());
    std::process::exit(code);
}

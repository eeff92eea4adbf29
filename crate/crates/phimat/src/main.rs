use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = phimat::cli::run_command(std::env::args_os(), &mut out);
    out.flush().ok();
    std::process::exit(code);
}

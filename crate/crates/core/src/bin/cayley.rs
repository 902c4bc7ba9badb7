use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out, err) = cayley_lie::cli::main_with_args(std::env::args_os());
    if !out.is_empty() {
        let mut stdout = std::io::stdout().lock();
        let _ = writeln!(stdout, "{}", out.trim_end());
    }
    if !err.is_empty() {
        eprintln!("{}", err.trim_end());
    }
    ExitCode::from(code as u8)
}

use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (out_path, outcome) = norlund_cli::run(std::env::args_os());
    let mut code = outcome.code;
    if let Some(path) = out_path {
        if let Err(e) = std::fs::write(&path, outcome.stdout.as_bytes()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            code = norlund_cli::EXIT_USAGE;
        }
    }
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    eprint!("{}", outcome.stderr);
    ExitCode::from(code as u8)
}

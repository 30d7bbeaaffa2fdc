use std::io::Write;

fn main() {
    let result = revgate::cli::run(std::env::args());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(result.stdout.as_bytes());
    let _ = stdout.flush();
    if !result.stderr.is_empty() {
        let mut stderr = std::io::stderr().lock();
        let _ = stderr.write_all(result.stderr.as_bytes());
        let _ = stderr.flush();
    }
    std::process::exit(result.exit_code);
}

use std::process::ExitCode;

fn main() -> ExitCode {
    let code = dyckanyon_cli::execute(std::env::args_os(), &mut std::io::stdout().lock());
    ExitCode::from(code)
}

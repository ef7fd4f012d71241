use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let budget = std::env::var(braidwrench::BUDGET_ENV).ok();
    let code = braidwrench::run(
        std::env::args_os(),
        budget.as_deref(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}

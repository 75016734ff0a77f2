fn main() {
    let code = gamma_zeta_lab_run();
    std::process::exit(code);
}

fn gamma_zeta_lab_run() -> i32 {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    gamma_zeta_cli::run(std::env::args_os(), &mut out, &mut err)
}

use std::io::Write;

fn main() {
    let out = bfg_cli::run_cli(std::env::args_os().skip(1));
    std::io::stdout().write_all(&out.stdout).expect("write stdout");
    std::io::stderr().write_all(&out.stderr).expect("write stderr");
    std::process::exit(out.code);
}

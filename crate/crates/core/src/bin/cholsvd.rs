use std::io;

fn main() {
    let code =
        cholsvd::cli::main_with_io(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}

use symquartic::cli::{dispatch, EXIT_USAGE};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, output) = dispatch(&args);
    if code == EXIT_USAGE {
        eprint!("{output}");
    } else {
        print!("{output}");
    }
    std::process::exit(code);
}

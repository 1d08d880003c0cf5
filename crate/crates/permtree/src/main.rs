use std::process::exit;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = permtree::cli::run(&args, &mut std::io::stdout(), &mut std::io::stderr());
    exit(code);
}

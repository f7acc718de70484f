use std::collections::HashMap;
use std::io;

fn main() {
    let env: HashMap<String, String> = std::env::vars().collect();
    let (mut stdin, mut stdout, mut stderr) = (io::stdin().lock(), io::stdout().lock(), io::stderr().lock());
    let mut streams = clearread::cli::Io { stdin: &mut stdin, stdout: &mut stdout, stderr: &mut stderr };
    let code = clearread::cli::run(std::env::args_os(), &env, &mut streams);
    std::process::exit(code);
}

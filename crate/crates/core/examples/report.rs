//! Run the command line in-process and print the report it produces.

fn main() {
    let out = qadjoint::cli::run(["qadj", "verify", "alexander 5 T=2", "--suite", "homotopy"]);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    println!("exit code {}", out.code);
}

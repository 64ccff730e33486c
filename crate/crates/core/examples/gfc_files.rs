// Writing and reading codes in the GFC text format, and driving the CLI.

use kasami::kasami::KasamiConfig;
use kasami::{gfc, Result};

pub fn run() -> Result<()> {
    let code = KasamiConfig::new(4, 2)?.build_mds()?;
    let text = gfc::write(&code);
    print!("{text}");
    let back = gfc::parse(&text)?;
    println!("round trip equal: {}", back.same_code(&code));

    let out = kasami::cli::run(["kasami", "verify-paper", "--q", "4", "--p", "2"]);
    print!("{}", out.output);
    println!("exit code {}", out.code);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}

use std::io::Write;

fn main() {
    let out = cliffdeg_cli::run(std::env::args_os());
    let text = match &out.document {
        serde_json::Value::String(text) if out.code == 0 => text.clone(),
        doc => serde_json::to_string_pretty(doc).expect("JSON values serialize") + "\n",
    };
    // A closed pipe is not an error worth reporting.
    let _ = std::io::stdout().write_all(text.as_bytes());
    std::process::exit(out.code);
}

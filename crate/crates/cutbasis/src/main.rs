fn main() {
    // CLI wired up after the engine modules.
    eprintln!("cutbasis: not yet assembled");
    std::process::exit(2);
}

use rust_stemmers::{Algorithm, Stemmer};
use std::io::{self, BufRead};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let algo = match args.get(1).map(|s| s.as_str()) {
        Some("ru") => Algorithm::Russian,
        Some("en") => Algorithm::English,
        _ => {
            eprintln!("usage: stemoracle ru|en  (reads words on stdin, prints word\\tstem)");
            std::process::exit(2);
        }
    };
    let stemmer = Stemmer::create(algo);
    let stdin = io::stdin();
    for line in stdin.lock().lines() {
        let w = line.unwrap();
        let w = w.trim();
        if w.is_empty() {
            continue;
        }
        println!("{}\t{}", w, stemmer.stem(w));
    }
}

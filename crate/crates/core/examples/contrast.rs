//! Colour contrast ratios for a few foreground/background pairs.
//!
//! cargo run --example contrast [FG BG]

use clearread::deck::contrast_ratio;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [fg, bg] => vec![(fg.clone(), bg.clone())],
        _ => [("#FFFFFF", "#000000"), ("#FFFF00", "#000000"), ("#777777", "#FFFFFF"), ("#999999", "#FFFFFF")]
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .to_vec(),
    };
    for (fg, bg) in pairs {
        match contrast_ratio(&fg, &bg) {
            Ok(r) => println!("{fg} on {bg}: {r:.2}:1 {}", if r >= 4.5 { "ok" } else { "too low" }),
            Err(e) => println!("{fg} on {bg}: {e}"),
        }
    }
}

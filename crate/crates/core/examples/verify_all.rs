//! Every check in order, as a scoreboard.

use artin_monodromy::curves::SearchConfig;
use artin_monodromy::pipeline;

fn main() -> artin_monodromy::Result<()> {
    let (board, ms) = pipeline::verify_all_timed(&SearchConfig::default())?;
    print!("{}", board.render());
    println!("{ms} ms");
    std::process::exit(board.exit_code());
}

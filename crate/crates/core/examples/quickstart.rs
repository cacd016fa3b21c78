use hypercut::generators::gen_random_3graph;
use hypercut::{brute_force_max_kcut, solve_3cut_auto, SamplePlan};

fn main() -> Result<(), hypercut::Error> {
    let h = gen_random_3graph(12, 0.2, 42)?;
    let cut = solve_3cut_auto(&h, &SamplePlan::with_seed(1))?;
    println!("cut {} surplus {}", cut.cut_value(), cut.surplus());
    assert!(cut.cut_value() <= brute_force_max_kcut(&h, 3)?.cut_value());
    Ok(())
}

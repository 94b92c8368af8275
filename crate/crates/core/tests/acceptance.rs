//! Runs the fourteen acceptance criteria and prints one line for each.
//! Exits nonzero on any failure outside the documented known failures.

fn main() {
    let outcomes = diamon::acceptance::run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let unexpected = outcomes.iter().filter(|o| o.unexpected()).count();
    let known = outcomes.len() - passed - unexpected;
    println!("acceptance: {passed} passed, {known} known failures, {unexpected} unexpected failures");
    if unexpected > 0 {
        std::process::exit(1);
    }
}

// From raw samples to a kink report: piecewise-linear reconstruction,
// detection, and the indicator at every kink.

use fracknot::{characterize_signal, SampleSeries};

pub fn run_example() -> fracknot::Result<()> {
    // a lead trace with one sharp peak, as it might come out of a CSV file
    let csv = "x,y\n2,4\n2.25,6.5\n2.5,9\n2.75,5\n3,1\n";
    let samples = SampleSeries::from_csv_reader(csv.as_bytes())?;
    let report = characterize_signal(&samples, 0.5, None, 1e-9)?;
    println!("{}", report.to_json());

    let flat = SampleSeries::sample(|x| 2.0 * x + 1.0, &[0.0, 0.5, 1.0, 1.5])?;
    let report = characterize_signal(&flat, 0.5, None, 1e-9)?;
    println!("straight line: {} findings", report.findings.len());
    Ok(())
}

fn main() -> fracknot::Result<()> {
    run_example()
}

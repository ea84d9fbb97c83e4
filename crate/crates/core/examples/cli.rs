// Usage: cargo run --example cli
//
// Drives the command-line front end in-process: generate networks, verify
// them, run a short benchmark and build its reports.

use netsort::cli::run;

fn main() {
    let dir = std::env::temp_dir().join(format!("netsort-cli-example-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let csv = format!("{d}/bench.csv");
    let steps: [Vec<String>; 4] = [
        vec!["gen".into(), "--family".into(), "bn-l".into(), "--sizes".into(), "2..8".into(), "--out".into(), format!("{d}/nets")],
        vec!["verify".into(), "--sizes".into(), "2..16".into(), "--trials".into(), "1000".into()],
        vec![
            "bench".into(),
            "--sorters".into(),
            "SN Best 4CmS, IS *".into(),
            "--sizes".into(),
            "8,16".into(),
            "--iterations".into(),
            "20".into(),
            "--measures".into(),
            "10".into(),
            "--out".into(),
            csv.clone(),
        ],
        vec!["report".into(), csv, "--format".into(), "text".into(), "--statistic".into(), "median".into(), "--out".into(), d.into()],
    ];
    for step in steps {
        println!("$ netsort {}", step.join(" "));
        let code = run(std::iter::once("netsort".to_string()).chain(step));
        assert_eq!(code, 0);
    }
    std::fs::remove_dir_all(&dir).ok();
}

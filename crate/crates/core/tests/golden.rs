use edge_ideal_lab::families::{build, random_dimvd_graph, FamilySpec};
use edge_ideal_lab::io::write_graph6;
use edge_ideal_lab::structure::dimvd_class_check;

const GOLDEN: &str = include_str!("golden/families.txt");

fn specs() -> Vec<(String, FamilySpec)> {
    let lines = GOLDEN.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    lines
        .filter_map(|l| l.split_once(" => ").map(|(spec, _)| spec.to_string()))
        .map(|spec| {
            let mut words = spec.split_whitespace();
            let name = words.next().unwrap().to_string();
            let args: Vec<String> = words.map(str::to_string).collect();
            let parsed = FamilySpec::from_args(&name, &args).unwrap();
            (spec, parsed)
        })
        .collect()
}

fn render(spec: &str, f: &FamilySpec) -> String {
    let g = build(f).unwrap();
    let mut line = format!("{spec} => {}", write_graph6(&g));
    if let FamilySpec::DimVdRandom { seed, n_max } = *f {
        let (_, d) = random_dimvd_graph(seed, n_max);
        let pairs: Vec<String> = d.pairs.iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        line.push_str(&format!(" pairs {}", pairs.join(" ")));
    }
    line
}

#[test]
fn builds_match_golden() {
    let expected: Vec<&str> = GOLDEN.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).collect();
    let got: Vec<String> = specs().iter().map(|(s, f)| render(s, f)).collect();
    assert_eq!(got, expected);
}

#[test]
fn pinned_dimvd_instance_is_in_class() {
    let (g, d) = random_dimvd_graph(42, 10);
    assert!(g.n() <= 10);
    assert!(dimvd_class_check(&g, &d).in_class);
}

//! Writing a builtin generating set to JSON, reading it back, and building
//! new sets from cycle strings.

use altdiam::gensets::{builtin, load_genset, save_genset};
use altdiam::{hall_check, GenSet, PowerElement};

fn main() {
    let dir = std::env::temp_dir().join("altdiam-example");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a5-power-3.json");
    let g = builtin("a5-power:3").unwrap();
    save_genset(&g, &path).unwrap();
    println!("{}", std::fs::read_to_string(&path).unwrap());
    assert_eq!(load_genset(&path).unwrap(), g);

    let custom = GenSet::alternating(
        "custom",
        "two 5-cycles and a double transposition",
        vec![
            PowerElement::from_cycle_strings(&["(1 2 3 4 5)", "(1 2)(3 4)"], 5).unwrap(),
            PowerElement::from_cycle_strings(&["(1 2)(3 4)", "(1 3 5 2 4)"], 5).unwrap(),
        ],
    )
    .unwrap();
    println!("{}", custom.to_json());
    println!("generates A_5^2: {}", hall_check(&custom).unwrap().verdict);
}

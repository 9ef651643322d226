use linksig::exact::{rat, Angle};
use linksig::splice::{CablingRecipe, CablingStep};

fn main() {
    let recipe = CablingRecipe {
        start: "c0".into(),
        steps: vec![
            CablingStep { target: "c0".into(), p: 1, q: 1, retain_core: true, new_names: vec!["a".into(), "b".into()] },
            CablingStep { target: "a".into(), p: 3, q: 2, retain_core: false, new_names: vec!["x".into()] },
            CablingStep { target: "b".into(), p: 3, q: 2, retain_core: false, new_names: vec!["y".into()] },
        ],
    };
    let tree = recipe.to_tree().unwrap();
    println!("lk(x,y) = {}", tree.linking("x", "y"));
    for (n, d) in [(1i64, 3i64), (2, 3), (1, 15), (2, 15), (4, 15), (7, 15), (8, 15), (11, 15), (13, 15), (14, 15), (1, 7), (3, 11)] {
        let th = Angle::new(rat(n, d)).unwrap();
        match tree.lt_of_tree(&th) {
            Ok((s, nl)) => println!("theta = {n}/{d}: sigma = {s}, nullity = {nl}"),
            Err(e) => println!("theta = {n}/{d}: {e}"),
        }
    }
    let norm = tree.normalize();
    println!("normalized: {norm}");
}

//! Chern character round trip and twisting by a line bundle, in the formal
//! classes `s1, s11, s2, s3`.
//!
//! ```text
//! cargo run --example chern_twist
//! ```

use fanocert::schubert::{
    character_to_chern, chern_to_character, class, degree, evaluate, twist, ChernVector,
};

fn main() {
    // the universal quotient bundle Q on Gr(2,5)
    let q = ChernVector::from_strs(3, &["s1", "s2", "s3"]).expect("weighted classes");
    let ch = chern_to_character(&q);
    for k in 1..=3 {
        println!("ch{k}(Q) = {}", ch.part(k));
    }
    assert_eq!(character_to_chern(&ch, 3).expect("rank 3"), q);

    let q1 = twist(&q, &class("s1")).expect("twist");
    for k in 1..=3 {
        println!("c{k}(Q(1)) = {}", q1.c(k));
    }

    let top = &(&q1.c(3) * &q1.c(2)) * &class("s1");
    let on_gr = evaluate(&top, 5).expect("Gr(2,5)");
    println!("c3·c2·σ1 of Q(1) on Gr(2,5) = {on_gr}, degree {}", degree(&on_gr).expect("top degree"));
}

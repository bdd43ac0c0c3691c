//! The exact arithmetic layer: polynomials over Q and finite fields,
//! rational functions, linear algebra, integer determinants and graded
//! pieces of ideals.
//!
//! ```text
//! cargo run --example exact_arithmetic
//! ```

use fanocert::exactcore::{
    ideal_contains, ideal_graded_dimension, int, rat, IntMatrix, Matrix, PolyRing, Polynomial, Rational,
    RationalFunction, F4,
};

type Q = Rational;

fn main() {
    let r = PolyRing::new(&["x", "y", "z"]);
    let f: Polynomial<Q> = r.parse("(x + 2*y)^3 - 1/2*z*x").unwrap();
    println!("f = {f}");
    println!("∂f/∂x = {}", f.partial_derivative(0));
    println!("f(1, -1, 4) = {}", f.eval(&[int(1), int(-1), int(4)]));

    let g: Polynomial<Q> = r.parse("x - y").unwrap();
    let h = RationalFunction::new(f.clone(), g.clone()).unwrap();
    println!("f / (x − y) + 1 = {}", h.add(&RationalFunction::from_poly(Polynomial::one(&r))));

    let m = Matrix::from_rows(vec![
        vec![int(1), int(2), int(3)],
        vec![int(2), int(4), int(6)],
        vec![rat(1, 2), int(0), int(1)],
    ]);
    println!("rank {} with kernel {:?}", m.rank(), m.kernel().iter().map(|v| v.iter().map(|q| q.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    let a = IntMatrix::from_rows(&[vec![1, 0, -1], vec![0, 1, 0], vec![-1, 3, 0]]);
    println!("det = {}", a.determinant().unwrap());

    let ideal: Vec<Polynomial<Q>> = vec![r.parse("x*y - z^2").unwrap(), r.parse("x^2 - y*z").unwrap()];
    for d in 0..=4 {
        println!("dim (I)_{d} = {}", ideal_graded_dimension(&ideal, d).unwrap());
    }
    let member: Polynomial<Q> = r.parse("x^3 - x*y*z").unwrap();
    println!("{member} ∈ I: {}", ideal_contains(&ideal, &member).unwrap());

    let s = PolyRing::new(&["u", "v"]);
    let u: Polynomial<F4> = s.var("u");
    let v: Polynomial<F4> = s.var("v");
    let sum = &u + &v;
    println!("over F4, (u + v)² = {}", &sum * &sum);
}

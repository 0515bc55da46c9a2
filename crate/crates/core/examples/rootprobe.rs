fn main() {
    use wave_nonuniq_core::poly::Polynomial;
    // peek at raw aberth output via poly_roots on perturbation-prone cases
    for (name, coeffs) in [
        ("(p+1)^2", vec![1.0, 2.0, 1.0]),
        ("(p+2)^3", vec![8.0, 12.0, 6.0, 1.0]),
        ("(p^2+16)^2", vec![256.0, 0.0, 32.0, 0.0, 1.0]),
    ] {
        let q = Polynomial::new(coeffs);
        match wave_nonuniq_core::roots::poly_roots(&q) {
            Ok(ps) => {
                println!("{name}:");
                for p in ps.poles() {
                    println!("  ({:+.16e}, {:+.16e}) x{}", p.location.re, p.location.im, p.multiplicity);
                }
            }
            Err(e) => println!("{name}: error {e}"),
        }
    }
}

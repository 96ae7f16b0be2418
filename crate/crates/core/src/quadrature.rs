/// Composite Simpson rule on `[a, b]` with `points` abscissae (odd, ≥ 3).
pub fn simpson<F>(f: F, a: f64, b: f64, points: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    assert!(
        points >= 3 && points % 2 == 1,
        "Simpson needs an odd point count ≥ 3"
    );
    let intervals = points - 1;
    let h = (b - a) / intervals as f64;
    let inner: f64 = (1..intervals)
        .map(|i| {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            w * f(a + i as f64 * h)
        })
        .sum();
    (f(a) + inner + f(b)) * h / 3.0
}

use num_integer::Integer;

/// Bezout coefficients `(g, r, s)` with `g = gcd(p, q) > 0` and `r*p + s*q = g`.
///
/// Among all valid pairs the one with the smallest `|s|` is returned, ties
/// broken by smaller `|r|`. Panics when `p = q = 0`.
pub fn extended_gcd(p: i64, q: i64) -> (i64, i64, i64) {
    assert!(p != 0 || q != 0, "extended_gcd(0, 0) is undefined");
    let e = (p as i128).extended_gcd(&(q as i128));
    let (mut g, mut r0, mut s0) = (e.gcd, e.x, e.y);
    if g < 0 {
        g = -g;
        r0 = -r0;
        s0 = -s0;
    }
    // all solutions: (r0 + k*q/g, s0 - k*p/g)
    let dr = q as i128 / g;
    let ds = p as i128 / g;
    let key = |k: i128| {
        let r = r0 + k * dr;
        let s = s0 - k * ds;
        ((s.abs(), r.abs()), (r, s))
    };
    let center = if ds != 0 {
        Integer::div_floor(&s0, &ds)
    } else if dr != 0 {
        Integer::div_floor(&-r0, &dr)
    } else {
        0
    };
    let (_, (r, s)) = (center - 2..=center + 2).map(key).min().unwrap();
    (g as i64, r as i64, s as i64)
}

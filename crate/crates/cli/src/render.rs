//! JSON and TSV renderings. Numbers are exact `num`/`den` strings.

use polya_core::{Cyclotomic, MonomialPoly, OrbitRecord, PowerSumPoly, Rational};
use serde_json::{json, Value};

pub fn rational(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

/// Rational values as `{num, den}`; anything else as its coordinates in
/// the power basis of `Q(ζ_m)`.
pub fn cyclotomic(c: &Cyclotomic) -> Value {
    match c.as_rational() {
        Some(q) => rational(&q),
        None => json!({
            "conductor": c.conductor(),
            "power_basis": c.coeffs().iter().map(rational).collect::<Vec<_>>(),
        }),
    }
}

pub fn power_sum_poly(p: &PowerSumPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "exponents": e, "coeff": cyclotomic(c) }))
        .collect();
    json!({ "weight": p.weight(), "text": p.to_string(), "terms": terms })
}

pub fn monomial_poly(p: &MonomialPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "multidegree": e, "coeff": cyclotomic(c) }))
        .collect();
    json!({ "nvars": p.nvars(), "text": p.to_string(), "terms": terms })
}

/// `p1^3*p2` style name of an exponent vector; `1` when empty.
pub fn monomial_name(var: &str, exps: &[u32], offset: usize) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("{var}{}", i + offset)
            } else {
                format!("{var}{}^{e}", i + offset)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn power_sum_tsv(p: &PowerSumPoly) -> String {
    let mut s = String::from("monomial\tcoefficient\n");
    for (e, c) in p.terms() {
        s += &format!("{}\t{}\n", monomial_name("p", e, 1), c);
    }
    s
}

pub fn monomial_tsv(p: &MonomialPoly) -> String {
    let mut s = String::from("monomial\tcoefficient\n");
    for (e, c) in p.terms() {
        s += &format!("{}\t{}\n", monomial_name("x", e, 0), c);
    }
    s
}

pub const ORBIT_HEADER: &str = "rep\tsize\tstab_order\ttau_H\th_len\tchi_orbit";

pub fn orbit_row(r: &OrbitRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        r.rep,
        r.size,
        r.stabilizer_order(),
        r.tau_h,
        r.h_orbit_length,
        r.is_chi_orbit
    )
}

pub fn orbit_json(r: &OrbitRecord) -> Value {
    json!({
        "rep": r.rep.coords(),
        "size": r.size,
        "stab_order": r.stabilizer_order(),
        "tau_H": r.tau_h,
        "h_len": r.h_orbit_length,
        "chi_orbit": r.is_chi_orbit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let q = Rational::new((-3).into(), 6.into());
        assert_eq!(rational(&q), json!({"num": "-1", "den": "2"}));
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(
            cyclotomic(&i),
            json!({"conductor": 4, "power_basis": [{"num": "0", "den": "1"}, {"num": "1", "den": "1"}]})
        );
        assert_eq!(monomial_name("p", &[3, 0, 1], 1), "p1^3*p3");
        assert_eq!(monomial_name("x", &[], 0), "1");
    }
}

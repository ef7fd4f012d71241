//! JSON and CSV rendering. Rationals are always `{"num": .., "den": ..}`.

use braidwrench_core::rational::Rational;
use braidwrench_core::upsilon::PLFunction;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
fn integer<T: ToPrimitive + ToString>(v: &T) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn rational(r: &Rational) -> Value {
    json!({ "num": integer(r.numer()), "den": integer(r.denom()) })
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

pub fn pl_function(f: &PLFunction) -> Value {
    json!({
        "domain_end": rational(f.domain_end()),
        "breakpoints": rationals(f.breakpoints()),
        "values": rationals(f.values()),
        "slopes": rationals(&f.slopes()),
    })
}

/// Rows at every breakpoint plus `samples + 1` uniform points, sorted and
/// deduplicated.
pub fn pl_csv(f: &PLFunction, samples: usize) -> String {
    let end = f.domain_end().clone();
    let mut ts: Vec<Rational> = f.breakpoints().to_vec();
    if samples > 0 {
        let k = Rational::from_integer((samples as i64).into());
        for j in 0..=samples {
            ts.push(&end * Rational::from_integer((j as i64).into()) / &k);
        }
    }
    ts.sort();
    ts.dedup();
    let mut out = String::from("t_num,t_den,v_num,v_den\n");
    for t in ts {
        let v = f.eval(&t).expect("sample inside the domain");
        out.push_str(&format!(
            "{},{},{},{}\n",
            t.numer(),
            t.denom(),
            v.numer(),
            v.denom()
        ));
    }
    out
}

use std::collections::HashMap;

use cherednik::characters::{self, lowest_weight, lowest_weight_by_contents};
use cherednik::dunkl::{self, EngineConfig};
use cherednik::fock;
use cherednik::hecke;
use cherednik::partitions::{
    dominance, enumerate_m_regular, enumerate_partitions, label_from_pair, stratum_description, support_level,
    DominanceRelation, Regularity,
};
use cherednik::rational::format_rational;
use cherednik::{CSign, Partition, Rational, Result};
use num_traits::Signed;
use serde_json::json;

use crate::output::{Report, Table};

/// The `(μ, ν)` pair whose label is `λ`: `μ ⊢ q`, `ν` `m`-regular.
fn pair_of(lambda: &Partition, m: u32, sign: CSign) -> Result<(Partition, Partition)> {
    let base = match sign {
        CSign::Positive => lambda.clone(),
        CSign::Negative => lambda.conjugate(),
    };
    let d = base.decompose(m, Regularity::Conjugate)?;
    Ok((d.mu, d.nu.conjugate()))
}

pub fn support(lambda: &Partition, m: u32, sign: CSign) -> Result<Report> {
    let q = support_level(lambda, m, sign)?;
    let (mu, nu) = pair_of(lambda, m, sign)?;
    let ok = mu.size() == q && label_from_pair(&mu, &nu, m, sign)? == *lambda;
    let stratum = stratum_description(lambda.size(), m, q);
    let mut table = Table::new(&["lambda", "m", "sign", "q", "stratum", "mu", "nu"]);
    table.push(vec![
        lambda.to_string(),
        m.to_string(),
        sign.to_string(),
        q.to_string(),
        stratum.clone(),
        mu.to_string(),
        nu.to_string(),
    ]);
    let json = json!({
        "lambda": lambda, "m": m, "sign": sign, "q": q, "stratum": stratum, "mu": mu, "nu": nu, "ok": ok,
    });
    Ok(Report { json, table, ok })
}

pub fn decompose(lambda: &Partition, m: u32, convention: Regularity) -> Result<Report> {
    let d = lambda.decompose(m, convention)?;
    let recombined = d.recombine();
    let regular = match convention {
        Regularity::Conjugate => d.nu.conjugate().is_m_regular(m)?,
        Regularity::Direct => d.nu.is_m_regular(m)?,
    };
    let ok = recombined == *lambda && regular;
    let mut table = Table::new(&["lambda", "m", "convention", "mu", "nu"]);
    let conv = serde_json::to_value(convention).expect("enum serializes");
    table.push(vec![
        lambda.to_string(),
        m.to_string(),
        conv.as_str().unwrap_or_default().to_string(),
        d.mu.to_string(),
        d.nu.to_string(),
    ]);
    let json = json!({
        "lambda": lambda, "m": m, "convention": convention, "mu": d.mu, "nu": d.nu, "recombined": recombined, "ok": ok,
    });
    Ok(Report { json, table, ok })
}

pub fn census(n: usize, m: u32, sign: CSign) -> Result<Report> {
    // Every label must be hit exactly once, at its own support level.
    let mut labels: HashMap<Partition, (usize, Partition, Partition)> = HashMap::new();
    let mut ok = true;
    for q in 0..=n / m as usize {
        for mu in enumerate_partitions(q) {
            for nu in enumerate_m_regular(n - q * m as usize, m)? {
                let label = label_from_pair(&mu, &nu, m, sign)?;
                ok &= support_level(&label, m, sign)? == q;
                ok &= labels.insert(label, (q, mu.clone(), nu)).is_none();
            }
        }
    }
    let all = enumerate_partitions(n);
    ok &= labels.len() == all.len();
    let mut table = Table::new(&["q", "lambda", "mu", "nu"]);
    let mut strata = Vec::new();
    for q in 0..=n / m as usize {
        let mut members = Vec::new();
        for lambda in &all {
            let Some((lq, mu, nu)) = labels.get(lambda) else {
                ok = false;
                continue;
            };
            if *lq == q {
                table.push(vec![q.to_string(), lambda.to_string(), mu.to_string(), nu.to_string()]);
                members.push(json!({ "lambda": lambda, "mu": mu, "nu": nu }));
            }
        }
        strata.push(json!({
            "q": q, "stratum": stratum_description(n, m, q), "size": members.len(), "members": members,
        }));
    }
    let json = json!({ "n": n, "m": m, "sign": sign, "strata": strata, "ok": ok });
    Ok(Report { json, table, ok })
}

pub fn bo_verify(n_max: usize, ms: &[u32]) -> Result<Report> {
    let mut table =
        Table::new(&["n", "m", "q", "count_qm", "count_product", "dim_eigenspace", "coeff_N", "coeff_trace", "ok"]);
    let mut reports = Vec::new();
    let mut ok = true;
    for &m in ms {
        for report in fock::verify_bo_range(n_max, m)? {
            ok &= report.ok();
            for r in &report.rows {
                table.push(vec![
                    report.n.to_string(),
                    m.to_string(),
                    r.q.to_string(),
                    r.count_qm.to_string(),
                    r.count_product.to_string(),
                    r.dim_eigenspace.to_string(),
                    r.coeff_n.to_string(),
                    r.coeff_trace.to_string(),
                    r.ok.to_string(),
                ]);
            }
            reports.push(report);
        }
    }
    let json = json!({ "n_max": n_max, "m": ms, "reports": reports, "ok": ok });
    Ok(Report { json, table, ok })
}

pub fn weights(n: usize, c: &Rational) -> Result<Report> {
    let all = enumerate_partitions(n);
    let h: Vec<Rational> = all.iter().map(|l| lowest_weight(l, c)).collect();
    let mut ok = all.iter().zip(&h).all(|(l, x)| lowest_weight_by_contents(l, c) == *x);
    let mut pairs = 0usize;
    let mut violations = Vec::new();
    for (a, ha) in all.iter().zip(&h) {
        for (b, hb) in all.iter().zip(&h) {
            if dominance(a, b)? != DominanceRelation::Greater {
                continue;
            }
            pairs += 1;
            let holds = if c.is_positive() {
                ha < hb
            } else if c.is_negative() {
                ha > hb
            } else {
                ha == hb
            };
            if !holds {
                violations.push(json!([a, b]));
            }
        }
    }
    ok &= violations.is_empty();
    let mut order: Vec<usize> = (0..all.len()).collect();
    order.sort_by(|&x, &y| h[x].cmp(&h[y]));
    let mut table = Table::new(&["lambda", "content_sum", "h"]);
    let mut rows = Vec::new();
    for k in order {
        let cs = characters::content_sum(&all[k]);
        table.push(vec![all[k].to_string(), cs.to_string(), format_rational(&h[k])]);
        rows.push(json!({ "lambda": all[k], "content_sum": cs, "h": format_rational(&h[k]) }));
    }
    let json = json!({
        "n": n, "c": format_rational(c), "weights": rows, "dominance_pairs": pairs, "violations": violations, "ok": ok,
    });
    Ok(Report { json, table, ok })
}

pub fn lr(lambda: &Partition, mu: &Partition, c: &Rational) -> Result<Report> {
    let product = characters::lr_induce(lambda, mu);
    let sum = lambda.add(mu);
    let (leading, leading_weight) = characters::leading_term_of_induction(lambda, mu, c)?;
    let n = lambda.size() + mu.size();
    let binom = (0..lambda.size()).fold(1u128, |acc, k| acc * (n - k) as u128 / (k + 1) as u128);
    let expected_dim = binom * u128::from(characters::dimension(lambda)) * u128::from(characters::dimension(mu));
    let dimension_ok = i128::from(product.dimension()) == expected_dim as i128;
    let ok = leading == sum && product.get(&sum) == 1 && dimension_ok;
    let mut table = Table::new(&["constituent", "multiplicity", "h"]);
    for (nu, k) in product.iter() {
        table.push(vec![nu.to_string(), k.to_string(), format_rational(&lowest_weight(nu, c))]);
    }
    let json = json!({
        "lambda": lambda, "mu": mu, "c": format_rational(c), "constituents": product,
        "leading": leading, "leading_weight": format_rational(&leading_weight), "dimension_ok": dimension_ok, "ok": ok,
    });
    Ok(Report { json, table, ok })
}

pub fn dunkl_check(n: usize, c: &Rational, degree: u32) -> Result<Report> {
    let cfg = EngineConfig::new(n, c.clone())?;
    let relations = dunkl::verify_relations(&cfg, degree)?;
    let euler = dunkl::verify_euler(&cfg, degree)?;
    let ok = relations.ok() && euler.ok();
    let mut table = Table::new(&["check", "degree", "detail", "ok"]);
    table.push(vec![
        "relations".into(),
        format!("<={degree}"),
        format!("{} checks on {} monomials, {} violations", relations.checks, relations.basis_size, relations.violations.len()),
        relations.ok().to_string(),
    ]);
    for v in relations.violations.iter().chain(&euler.violations) {
        table.push(vec![v.relation.clone(), v.input.degree().map_or_else(String::new, |d| d.to_string()), v.input.to_string(), "false".into()]);
    }
    for layer in &euler.spectrum {
        table.push(vec![
            "euler".into(),
            layer.degree.to_string(),
            format!("eigenvalue {} on {} monomials", format_rational(&layer.eigenvalue), layer.monomials),
            euler.ok().to_string(),
        ]);
    }
    let json = json!({ "relations": relations, "euler": euler, "ok": ok });
    Ok(Report { json, table, ok })
}

pub fn singular(n: usize, c: &Rational, degree: u32) -> Result<Report> {
    let cfg = EngineConfig::new(n, c.clone())?;
    let vectors = cfg.singular_vectors(degree)?;
    let mut ok = true;
    for f in &vectors {
        for i in 0..n {
            ok &= cfg.dunkl(i, f)?.is_zero();
        }
    }
    let mut table = Table::new(&["index", "vector"]);
    for (k, f) in vectors.iter().enumerate() {
        table.push(vec![(k + 1).to_string(), f.to_string()]);
    }
    let json = json!({
        "n": n, "c": format_rational(c), "degree": degree, "dim": vectors.len(), "vectors": vectors, "ok": ok,
    });
    Ok(Report { json, table, ok })
}

pub fn ideal_check(n: usize, m: u32, q: usize, degree: u32, c: Option<&Rational>) -> Result<Report> {
    let report = match c {
        Some(c) => dunkl::ideal_stability_check_with(n, m, q, degree, c.clone())?,
        None => dunkl::ideal_stability_check(n, m, q, degree)?,
    };
    let mut table = Table::new(&["degree", "generator", "stable", "failing_dunkl"]);
    for g in &report.generators {
        let failing: Vec<String> = g.failing_dunkl.iter().map(ToString::to_string).collect();
        table.push(vec![g.degree.to_string(), g.generator.to_string(), g.stable.to_string(), failing.join(" ")]);
    }
    let ok = report.stable;
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Report { json, table, ok })
}

pub fn fock_trace(m: u32, truncation: usize) -> Result<Report> {
    let trace = fock::trace_series(m, truncation)?;
    let product = fock::product_series_n(m, truncation)?;
    let ok = trace == product;
    let mut table = Table::new(&["deg_s", "deg_t", "coeff"]);
    let mut coefficients = Vec::new();
    for (s, t, x) in trace.entries() {
        table.push(vec![s.to_string(), t.to_string(), x.to_string()]);
        if x != 0 {
            coefficients.push(json!([s, t, x]));
        }
    }
    let json = json!({ "m": m, "truncation": truncation, "agree": ok, "coefficients": coefficients, "ok": ok });
    Ok(Report { json, table, ok })
}

pub fn hecke_simples(p: usize, m: u32, samples: usize, seed: u64) -> Result<Report> {
    let count = hecke::count_simples(p, m)?;
    let presentation_ok = p < 2 || hecke::verify_presentation(p, m)?.ok();
    let assoc = hecke::check_associativity(p, m, samples, seed)?;
    let ok = count.ok && presentation_ok && assoc.ok();
    let mut table = Table::new(&["p", "m", "dim", "rad_dim", "simples", "expected_m_regular", "ok"]);
    table.push(vec![
        p.to_string(),
        m.to_string(),
        count.dim.to_string(),
        count.rad_dim.to_string(),
        count.simples.to_string(),
        count.expected_m_regular.to_string(),
        ok.to_string(),
    ]);
    let json = json!({
        "p": p, "m": m, "dim": count.dim, "rad_dim": count.rad_dim, "simples": count.simples,
        "expected_m_regular": count.expected_m_regular, "ok": ok,
        "audit": count.audit, "presentation_ok": presentation_ok, "associativity": assoc,
    });
    Ok(Report { json, table, ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cherednik::rational::rat;
    use num_traits::Zero;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn support_examples() {
        let q = |l: &str, m: u32, s: CSign| support(&p(l), m, s).unwrap().json["q"].as_u64().unwrap();
        assert_eq!(q("3,1", 2, CSign::Positive), 1);
        assert_eq!(q("1", 5, CSign::Positive), 0);
        assert_eq!(q("2", 2, CSign::Negative), 0);
    }

    #[test]
    fn census_examples() {
        let sizes = |n, m| -> Vec<u64> {
            let r = census(n, m, CSign::Positive).unwrap();
            assert!(r.ok);
            r.json["strata"].as_array().unwrap().iter().map(|s| s["size"].as_u64().unwrap()).collect()
        };
        assert_eq!(sizes(4, 2), vec![2, 1, 2]);
        assert_eq!(sizes(1, 2), vec![1]);
        assert_eq!(sizes(6, 3).iter().sum::<u64>(), 11);
        assert!(census(5, 2, CSign::Negative).unwrap().ok);
    }

    #[test]
    fn weights_and_lr() {
        assert!(weights(4, &rat(1, 2)).unwrap().ok);
        assert!(weights(4, &rat(-1, 3)).unwrap().ok);
        assert!(weights(3, &Rational::zero()).unwrap().ok);
        assert!(lr(&p("2,1"), &p("1"), &rat(1, 1)).unwrap().ok);
    }
}

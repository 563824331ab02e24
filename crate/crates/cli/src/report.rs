use std::io::Write;

use num_bigint::BigUint;

use cyclefree::birkhoff::{bound_check, verify_independent, PermSet};
use cyclefree::labeling::Mode;
use cyclefree::repcheck::{
    all_characters_nonnegative, duality_check, hook_values, ip_characters, ip_direct, lemma_bound,
    mn_character, phi_from_set, uniformity, CharacterTable, Partition,
};
use cyclefree::Error;

use crate::pass_fail;

/// Largest n accepted by `chars`.
const MAX_CHARS_N: usize = 20;

pub fn chars(out: &mut impl Write, n: usize, table: bool) -> anyhow::Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("chars needs n >= 1".into()).into());
    }
    if n > MAX_CHARS_N {
        return Err(Error::BudgetExceeded {
            what: "character table",
            needed: format!("n={n}"),
            limit: format!("n={MAX_CHARS_N}"),
        }
        .into());
    }
    if table {
        let t = CharacterTable::new(n);
        let classes: Vec<String> = t.partitions().iter().map(Partition::to_string).collect();
        writeln!(out, "classes={}", classes.join(" "))?;
        for l in t.partitions() {
            let row: Vec<String> = t.row(l).iter().map(i64::to_string).collect();
            writeln!(out, "chi[{l}]={}", row.join(" "))?;
        }
    } else {
        let cycle = Partition::full_cycle(n);
        let id = Partition::identity_type(n);
        for m in 0..n {
            let h = Partition::hook(n, m)?;
            writeln!(
                out,
                "h{m}={h} chi_ncycle={} dim={}",
                mn_character(&h, &cycle)?,
                mn_character(&h, &id)?
            )?;
        }
    }
    Ok(())
}

/// Prints the character report; returns `false` if any property fails.
pub fn analyze(out: &mut impl Write, set: &PermSet, k_max: usize) -> anyhow::Result<bool> {
    let n = set.n();
    let phi = phi_from_set(set)?;
    let hooks = hook_values(&phi);
    writeln!(out, "n={n} size={}", set.len())?;
    for (m, v) in hooks.iter().enumerate() {
        writeln!(out, "chi[h_{m}]={v}")?;
    }
    let ip_chars = ip_characters(&phi);
    let ip_dir = ip_direct(set)?;
    writeln!(out, "ip_chars={ip_chars}")?;
    writeln!(out, "ip_direct={ip_dir}")?;
    let ip_ok = ip_chars == ip_dir;
    writeln!(out, "ip_match={}", pass_fail(ip_ok))?;

    let mut lemma_ok = true;
    for k in (2..=k_max.min(n.saturating_sub(1))).step_by(2) {
        let (max_prob, c_emp) = uniformity(set, k)?;
        writeln!(out, "c_emp[{k}]={c_emp:.6}")?;
        for (m, chi) in hooks.iter().enumerate().take(k + 1).skip(1) {
            lemma_ok &= *chi <= lemma_bound(&max_prob, n, k, m)?;
        }
    }

    let nonneg = all_characters_nonnegative(&phi);
    let duality = match duality_check(set) {
        Ok(ok) => Some(ok),
        Err(Error::MixedSign) => None,
        Err(e) => return Err(e.into()),
    };
    let independence = verify_independent(set, Mode::Exhaustive)?;
    let bound = bound_check(&BigUint::from(set.len()), n);

    writeln!(out, "lemma={}", pass_fail(lemma_ok))?;
    writeln!(out, "duality={}", duality.map_or("skip", pass_fail))?;
    writeln!(out, "nonneg={}", pass_fail(nonneg))?;
    writeln!(out, "independent={}", pass_fail(independence.passed))?;
    writeln!(out, "bound={}", pass_fail(bound))?;
    // the bound only constrains independent sets
    let bound_ok = bound || !independence.passed;
    Ok(ip_ok && lemma_ok && nonneg && duality != Some(false) && bound_ok)
}

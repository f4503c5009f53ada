use std::io::Write;

use anyhow::{bail, ensure, Context, Result};
use serde_json::json;

use tworow::alpha::{alpha_table, alpha_table_direct, last_table, last_table_recursive};
use tworow::character::mn_character;
use tworow::immanant::{
    extract_a_coeffs, immanant_bruteforce, immanant_tree, normalize, BRUTE_FORCE_MAX_N,
};
use tworow::poly::{parse_rational, Rational};
use tworow::suite::{run_claims, Summary, SuiteConfig, CLAIM_IDS};
use tworow::tree::q_laplacian;
use tworow::verify::{check_general_sr, check_hook_chain, check_two_row_chain, InequalityVerdict, CSV_HEADER};
use tworow::{CycleType, Partition, RatPoly};

use crate::args::{AlgorithmArg, AlphaMethod, Cli, Command, Format, LastMethod, Target, VerifyArgs};
use crate::treearg::parse_tree;

/// Returns `Ok(false)` when some requested verdict fails.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let fmt = |default| cli.format.unwrap_or(default);
    match &cli.command {
        Command::AlphaTable { n, method } => {
            let table = match method {
                AlphaMethod::Recursive => alpha_table(*n),
                AlphaMethod::Characters => alpha_table_direct(*n)?,
            };
            match fmt(Format::Text) {
                Format::Json => writeln!(out, "{}", table.to_json())?,
                Format::Csv => write!(out, "{}", table.to_csv())?,
                Format::Text => {
                    writeln!(out, "alpha_{{{n},k,i}}: rows i, columns k")?;
                    write_grid(out, table.rows())?;
                }
            }
            Ok(true)
        }
        Command::LastTable { l, method } => {
            let (table, agree) = match method {
                LastMethod::Trinomial => (last_table(*l), None),
                LastMethod::Recursion => (last_table_recursive(*l), None),
                LastMethod::Both => {
                    let t = last_table(*l);
                    let agree = t == last_table_recursive(*l);
                    (t, Some(agree))
                }
            };
            match fmt(Format::Text) {
                Format::Json => {
                    let mut v = table.to_json();
                    if let Some(a) = agree {
                        v["methods_agree"] = json!(a);
                    }
                    writeln!(out, "{v}")?;
                }
                Format::Csv => write!(out, "{}", table.to_csv())?,
                Format::Text => {
                    writeln!(out, "last_{{l,k}}: rows l, columns k")?;
                    write_grid(out, table.rows())?;
                    if let Some(a) = agree {
                        writeln!(out, "trinomial and recursion agree: {a}")?;
                    }
                }
            }
            Ok(agree.unwrap_or(true))
        }
        Command::Char { shape, cycle_type } => {
            let shape: Partition = shape.parse()?;
            let cycles: CycleType = cycle_type.parse()?;
            let value = mn_character(&shape, &cycles)?;
            match fmt(Format::Text) {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "shape": shape.to_string(), "cycle_type": cycles.to_string(), "value": value.to_string() })
                )?,
                Format::Csv => writeln!(out, "shape,cycle_type,value\n\"{shape}\",\"{cycles}\",{value}")?,
                Format::Text => writeln!(out, "{value}")?,
            }
            Ok(true)
        }
        Command::Immanant { tree, shape, normalized, algorithm } => {
            let tree = parse_tree(tree)?;
            let shape: Partition = shape.parse()?;
            let raw = match algorithm {
                AlgorithmArg::Matching => immanant_tree(&tree, &shape)?,
                AlgorithmArg::Bruteforce => {
                    ensure!(
                        tree.n() <= BRUTE_FORCE_MAX_N,
                        "brute force is capped at n <= {BRUTE_FORCE_MAX_N}; use --algorithm matching"
                    );
                    immanant_bruteforce(&q_laplacian(&tree), &shape)?
                }
            };
            let poly = if *normalized { normalize(&raw, &shape) } else { raw };
            match fmt(Format::Text) {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "tree": tree.to_string(),
                        "partition": shape.to_string(),
                        "normalized": normalized,
                        "algorithm": format!("{algorithm:?}").to_lowercase(),
                        "coeffs": poly.to_coeff_strings(),
                        "text": poly.to_string(),
                    })
                )?,
                Format::Csv => {
                    writeln!(out, "degree,coeff")?;
                    for (d, c) in poly.to_coeff_strings().iter().enumerate() {
                        writeln!(out, "{d},{c}")?;
                    }
                }
                Format::Text => writeln!(out, "{poly}")?,
            }
            Ok(true)
        }
        Command::ACoeffs { tree } => {
            let tree = parse_tree(tree)?;
            let a = extract_a_coeffs(&tree);
            match fmt(Format::Text) {
                Format::Json => {
                    let list: Vec<Vec<String>> = a.iter().map(RatPoly::to_coeff_strings).collect();
                    writeln!(out, "{}", json!({ "tree": tree.to_string(), "a": list }))?
                }
                Format::Csv => {
                    writeln!(out, "i,poly")?;
                    for (i, p) in a.iter().enumerate() {
                        writeln!(out, "{i},{p}")?;
                    }
                }
                Format::Text => {
                    for (i, p) in a.iter().enumerate() {
                        writeln!(out, "a_{i} = {p}")?;
                    }
                }
            }
            Ok(true)
        }
        Command::Verify(args) => verify(args, fmt(Format::Json), out),
    }
}

fn write_grid(out: &mut dyn Write, rows: &[Vec<impl ToString>]) -> Result<()> {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for (i, row) in cells.iter().enumerate() {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "{i:>3} | {}", line.join(" "))?;
    }
    Ok(())
}

pub fn parse_grid(spec: &str) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = spec.split(':').collect();
    ensure!(parts.len() == 3, "q grid must be lo:hi:step, got `{spec}`");
    let lo = parse_rational(parts[0])?;
    let hi = parse_rational(parts[1])?;
    let step = parse_rational(parts[2])?;
    ensure!(step > Rational::from_integer(0.into()), "q grid step must be positive");
    ensure!(lo <= hi, "q grid needs lo <= hi");
    let mut grid = Vec::new();
    let mut x = lo;
    while x <= hi {
        grid.push(x.clone());
        x += &step;
        ensure!(grid.len() <= 100_000, "q grid has more than 100000 points");
    }
    Ok(grid)
}

fn claims_for(target: Target) -> Vec<&'static str> {
    match target {
        Target::TwoRow => vec!["thm2"],
        Target::Hook => vec!["thm1-weak", "thm1-strong"],
        Target::AlphaRatios => vec!["lem6", "lem9", "cor10", "lem11", "lem13"],
        Target::GeneralSr => vec!["rem12"],
        Target::Paths => vec!["lem15-bij", "lem16-bij", "lem18", "lem19"],
        Target::Probability => vec!["lem20", "lem21"],
        Target::Identities => vec!["lem17-conv", "lem22", "rem20", "a0-identity", "oracle-equivalence"],
        Target::All => CLAIM_IDS.to_vec(),
    }
}

fn verify(args: &VerifyArgs, format: Format, out: &mut dyn Write) -> Result<bool> {
    ensure!(args.n_max <= 9, "exhaustive tree sweeps are capped at --n-max 9");
    let cfg = SuiteConfig {
        n_max: args.n_max,
        deep: args.deep,
        seed: args.seed,
        random_trees: args.random_trees,
        q_grid: parse_grid(&args.q_grid)?,
        ..SuiteConfig::default()
    };
    let single_sr = [args.l, args.s, args.r];
    let verdicts: Vec<InequalityVerdict> = match (args.target, &args.tree) {
        (Target::TwoRow, Some(t)) => check_two_row_chain(&parse_tree(t)?),
        (Target::Hook, Some(t)) => check_hook_chain(&parse_tree(t)?, &cfg.q_grid),
        (_, Some(_)) => bail!("--tree only applies to `verify two-row` and `verify hook`"),
        (Target::GeneralSr, None) if single_sr.iter().any(Option::is_some) => {
            let (Some(l), Some(s), Some(r)) = (args.l, args.s, args.r) else {
                bail!("--l, --s and --r must be given together");
            };
            ensure!(s >= 1 && r >= 1, "s and r must be positive");
            check_general_sr(l, s, r)
        }
        (_, None) if single_sr.iter().any(Option::is_some) && args.target != Target::GeneralSr => {
            bail!("--l, --s and --r only apply to `verify general-sr`")
        }
        (target, None) => run_claims(&cfg, &claims_for(target)),
    };
    let summary = Summary::of(&verdicts);
    let shown = verdicts.iter().filter(|v| !args.quiet || v.is_failure());
    match format {
        Format::Json => {
            for v in shown {
                writeln!(out, "{}", v.to_json())?;
            }
            writeln!(out, "{}", summary.to_json())?;
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for v in shown {
                writeln!(out, "{}", v.csv_row())?;
            }
        }
        Format::Text => {
            for v in shown {
                let tag = if v.degenerate {
                    "DEGEN"
                } else if v.holds {
                    "PASS"
                } else {
                    "FAIL"
                };
                let detail = if v.detail.is_empty() { String::new() } else { format!("  ({})", v.detail) };
                writeln!(out, "{tag:<5} {} {}{detail}", v.claim, v.params_string())?;
            }
            write_text_summary(out, &summary)?;
        }
    }
    if format == Format::Csv {
        let mut err = std::io::stderr().lock();
        write_text_summary(&mut err, &summary).context("writing summary")?;
    }
    Ok(summary.all_pass())
}

fn write_text_summary(out: &mut dyn Write, s: &Summary) -> Result<()> {
    writeln!(out, "{} verdicts: {} passed, {} failed, {} degenerate", s.total, s.passed, s.failed, s.degenerate)?;
    for (claim, t) in &s.claims {
        writeln!(out, "  {claim:<20} total {:>6}  failed {:>4}  degenerate {:>4}", t.total, t.failed, t.degenerate)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("-10:10:1/2").unwrap().len(), 41);
        assert_eq!(parse_grid("0:1:1/3").unwrap().len(), 4);
        assert!(parse_grid("1:0:1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("0:1").is_err());
    }

    #[test]
    fn every_claim_has_a_target() {
        let mut covered: Vec<&str> = [
            Target::TwoRow,
            Target::Hook,
            Target::AlphaRatios,
            Target::GeneralSr,
            Target::Paths,
            Target::Probability,
            Target::Identities,
        ]
        .into_iter()
        .flat_map(claims_for)
        .collect();
        covered.sort();
        let mut all = CLAIM_IDS.to_vec();
        all.sort();
        assert_eq!(covered, all);
    }
}

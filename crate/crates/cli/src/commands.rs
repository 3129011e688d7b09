use std::fmt::Write as _;

use anyhow::Context;
use serde::Serialize;
use serde_json::json;

use coxinv_core::excess::{excess_distribution_with, excess_scoped, spartan_pairs_in};
use coxinv_core::verify::{self, VerifyOptions};
use coxinv_core::witness::{zero_excess_witness_in, CertificateReport, MinimizeMode, WitnessCertificate};
use coxinv_core::{
    class_representatives, CoxeterMatrix, Element, Group, InvolutionTable, ReverserScope, SpartanReport, TypeA,
    DEFAULT_ELEMENT_CAP,
};

use crate::args::{Cli, Command, Format, GroupArgs};
use crate::Failure;

type Outcome = Result<String, Failure>;

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {e}"))
}

fn load_group(args: &GroupArgs) -> Result<(String, Group), Failure> {
    let (label, matrix) = match (&args.symbol, &args.matrix) {
        (Some(sym), None) => (
            sym.clone(),
            sym.parse::<CoxeterMatrix>().map_err(|e| usage("--type", e))?,
        ),
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| usage("--matrix", format!("{}: {e}", path.display())))?;
            let m = CoxeterMatrix::from_json(&text).map_err(|e| usage("--matrix", e))?;
            (path.display().to_string(), m)
        }
        _ => return Err(Failure::Usage("exactly one of --type or --matrix is required".into())),
    };
    if args.root_cap == 0 {
        return Err(usage("--root-cap", "must be positive"));
    }
    let g = Group::build_with_caps(matrix, args.root_cap, DEFAULT_ELEMENT_CAP)?;
    Ok((label, g))
}

fn parse_element(g: &Group, word: &str) -> Result<Element, Failure> {
    g.parse_element(word).map_err(|e| usage("--element", e))
}

fn to_json<T: Serialize>(value: &T) -> Outcome {
    let mut s = serde_json::to_string_pretty(value).context("serializing report")?;
    s.push('\n');
    Ok(s)
}

fn unsupported(format: Format, verb: &str) -> Failure {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
    };
    Failure::Usage(format!("--format: {name} is not available for `{verb}`"))
}

/// Text form of a word; the identity prints as `e`.
fn show(g: &Group, w: &Element) -> String {
    let word = g.reduced_word(w);
    if word.is_empty() {
        "e".into()
    } else {
        word.to_string()
    }
}

/// Word plus cycle notation when `--cycles` applies.
fn annotate(ta: Option<&TypeA<'_>>, g: &Group, w: &Element) -> String {
    match ta {
        Some(ta) => format!("{}  {}", show(g, w), ta.permutation(w)),
        None => show(g, w),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let (label, g) = load_group(&cli.group)?;
    let type_a = if cli.cycles {
        Some(TypeA::new(&g).map_err(|_| usage("--cycles", "needs a type A group"))?)
    } else {
        None
    };
    let ta = type_a.as_ref();
    let fmt = cli.format;
    match &cli.command {
        Command::Info => info(&label, &g, fmt),
        Command::Length(e) => length(&g, &parse_element(&g, &e.element)?, fmt, ta),
        Command::Excess {
            element,
            nontrivial_reversers,
        } => {
            let scope = scope(*nontrivial_reversers);
            excess_cmd(&g, &parse_element(&g, &element.element)?, scope, fmt, ta)
        }
        Command::Pairs(e) => pairs(&g, &parse_element(&g, &e.element)?, fmt, ta),
        Command::Distribution {
            parallel,
            nontrivial_reversers,
        } => distribution(&label, &g, *parallel as usize, scope(*nontrivial_reversers), fmt),
        Command::Witness { element, greedy } => {
            let w = element.as_deref().map(|e| parse_element(&g, e)).transpose()?;
            witness(&g, w.as_ref(), mode(*greedy), fmt, ta)
        }
        Command::Classes => classes(&g, fmt, ta),
        Command::Verify { samples, seed, greedy } => {
            let opts = VerifyOptions {
                seed: *seed,
                samples: *samples,
                mode: mode(*greedy),
            };
            verify_cmd(&label, &g, &opts, fmt)
        }
    }
}

fn scope(nontrivial: bool) -> ReverserScope {
    if nontrivial {
        ReverserScope::NonIdentity
    } else {
        ReverserScope::All
    }
}

fn mode(greedy: bool) -> MinimizeMode {
    if greedy {
        MinimizeMode::Greedy
    } else {
        MinimizeMode::Global
    }
}

fn info(label: &str, g: &Group, fmt: Format) -> Outcome {
    let table = InvolutionTable::new(g);
    let involutions = table.involutions().len();
    match fmt {
        Format::Text => Ok(format!(
            "group           {label}\nrank            {}\norder           {}\npositive roots  {}\ninvolutions     {involutions}\nlongest element {}\n",
            g.rank(),
            g.order(),
            g.num_positive_roots(),
            show(g, g.longest_element()),
        )),
        Format::Json => to_json(&json!({
            "group": label,
            "rank": g.rank(),
            "matrix": g.matrix(),
            "order": g.order(),
            "positive_roots": g.num_positive_roots(),
            "involutions": involutions,
            "longest_element": g.reduced_word(g.longest_element()),
        })),
        Format::Csv => Err(unsupported(fmt, "info")),
    }
}

fn length(g: &Group, w: &Element, fmt: Format, ta: Option<&TypeA<'_>>) -> Outcome {
    match fmt {
        Format::Text => Ok(format!("{}\t{}\n", w.length(), annotate(ta, g, w))),
        Format::Json => to_json(&json!({
            "w": g.reduced_word(w),
            "length": w.length(),
            "inversions": w.inversion_set().iter().collect::<Vec<_>>(),
        })),
        Format::Csv => Err(unsupported(fmt, "length")),
    }
}

fn excess_cmd(g: &Group, w: &Element, scope: ReverserScope, fmt: Format, ta: Option<&TypeA<'_>>) -> Outcome {
    let table = InvolutionTable::new(g);
    let e = excess_scoped(&table, w, scope)?;
    match fmt {
        Format::Text if ta.is_some() => Ok(format!("{e}\t{}\n", annotate(ta, g, w))),
        Format::Text => Ok(format!("{e}\n")),
        Format::Json => to_json(&json!({ "w": g.reduced_word(w), "excess": e })),
        Format::Csv => Err(unsupported(fmt, "excess")),
    }
}

fn pairs(g: &Group, w: &Element, fmt: Format, ta: Option<&TypeA<'_>>) -> Outcome {
    let table = InvolutionTable::new(g);
    let found = spartan_pairs_in(&table, w)?;
    match fmt {
        Format::Text => {
            let mut out = format!("w = {}\nexcess {}\n", annotate(ta, g, w), found[0].defect);
            for p in &found {
                let _ = writeln!(
                    out,
                    "x = {} (length {})   y = {} (length {})",
                    annotate(ta, g, &p.x),
                    p.x.length(),
                    annotate(ta, g, &p.y),
                    p.y.length()
                );
            }
            if let Some(ta) = ta {
                out.push_str("as products applied left to right:\n");
                for p in &found {
                    let (a, b) = ta.factors_left_to_right(p);
                    let _ = writeln!(out, "  ({a}, {b})");
                }
            }
            Ok(out)
        }
        Format::Json => to_json(&SpartanReport::new(g, w, &found)),
        Format::Csv => Err(unsupported(fmt, "pairs")),
    }
}

fn distribution(label: &str, g: &Group, threads: usize, scope: ReverserScope, fmt: Format) -> Outcome {
    let d = excess_distribution_with(g, scope, threads)?;
    match fmt {
        Format::Text => {
            let mut out = String::from("excess  count\n");
            for (e, c) in &d.counts {
                let _ = writeln!(out, "{e:>6}  {c}");
            }
            let _ = writeln!(out, " total  {}", d.total());
            Ok(out)
        }
        Format::Json => to_json(&json!({ "group": label, "total": d.total(), "counts": d.counts })),
        Format::Csv => Ok(d.to_csv()?),
    }
}

fn certificate_text(g: &Group, c: &WitnessCertificate, ta: Option<&TypeA<'_>>) -> String {
    format!(
        "w          {}\nw*         {}\nsigma      {}\ntau        {}\nconjugator {}\nJ          {{{}}}\nK          {{{}}}\nlengths    {} = {} + {}\n",
        annotate(ta, g, &c.input),
        annotate(ta, g, &c.w_star),
        annotate(ta, g, &c.sigma),
        annotate(ta, g, &c.tau),
        annotate(ta, g, &c.conjugator),
        c.j,
        c.k,
        c.w_star.length(),
        c.sigma.length(),
        c.tau.length()
    )
}

fn witness(g: &Group, w: Option<&Element>, mode: MinimizeMode, fmt: Format, ta: Option<&TypeA<'_>>) -> Outcome {
    let table = InvolutionTable::new(g);
    let targets: Vec<Element> = match w {
        Some(w) => vec![w.clone()],
        None => class_representatives(g).into_iter().map(|c| c.representative).collect(),
    };
    let certs: Vec<WitnessCertificate> = targets
        .iter()
        .map(|t| zero_excess_witness_in(g, &table, t, mode))
        .collect::<Result<_, _>>()?;
    match fmt {
        Format::Text => Ok(certs
            .iter()
            .map(|c| certificate_text(g, c, ta))
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Json if w.is_some() => to_json(&certs[0].report(g)),
        Format::Json => to_json(&certs.iter().map(|c| c.report(g)).collect::<Vec<CertificateReport>>()),
        Format::Csv => Err(unsupported(fmt, "witness")),
    }
}

fn classes(g: &Group, fmt: Format, ta: Option<&TypeA<'_>>) -> Outcome {
    let classes = class_representatives(g);
    match fmt {
        Format::Text => {
            let mut out = String::from("size  cuspidal  representative\n");
            for c in &classes {
                let flag = if c.cuspidal { "yes" } else { "no" };
                let _ = writeln!(
                    out,
                    "{:>4}  {flag:<8}  {}",
                    c.size(),
                    annotate(ta, g, &c.representative)
                );
            }
            let _ = writeln!(out, "{} classes", classes.len());
            Ok(out)
        }
        Format::Json => to_json(&classes.iter().map(|c| c.report(g)).collect::<Vec<_>>()),
        Format::Csv => {
            let mut out = String::from("representative,size,cuspidal\n");
            for c in &classes {
                let _ = writeln!(out, "{},{},{}", g.reduced_word(&c.representative), c.size(), c.cuspidal);
            }
            Ok(out)
        }
    }
}

fn verify_cmd(label: &str, g: &Group, opts: &VerifyOptions, fmt: Format) -> Outcome {
    let report = verify::run(g, opts);
    let text = match fmt {
        Format::Text => format!("group {label}\n{report}\n"),
        Format::Json => to_json(&json!({ "group": label, "passed": report.passed(), "checks": report.checks }))?,
        Format::Csv => return Err(unsupported(fmt, "verify")),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Checks(text))
    }
}

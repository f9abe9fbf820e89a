use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use shpl_core::enumerate::skew_standard_fillings;
use shpl_core::rewriting::{
    enumerate_plactic_classes, enumerate_shifted_classes, DEFAULT_MAX_WORDS,
};
use shpl_core::symfunc::{
    boxadd_witnesses, g_coeff_plactic, g_coeff_rectify, g_expand, lr_coeff, schur_p_poly,
    schur_q_poly, schur_s_poly, skew_pschur_expand, LrMethod, SparsePolynomial,
};
use shpl_core::{
    delta, mixed_insertion, mread, phi, psi, rsk_insertion, shifted_jdt_rectify, sk_insertion,
    skew_rect, special_recording_tableau, stan_ssdt, stan_tableau, stan_word, DecompositionTableau,
    Error, Partition, ShiftedTableau, SkewShiftedTableau, SkewStandardShiftedTableau,
    StrictPartition, Word,
};

use crate::appendix::{emit_appendix_table, render_table};
use crate::suites::{self, SuiteReport};
use crate::{
    Basis, ClassKind, Cli, CliError, Command, GMethodArg, LrMethodArg, Report, StanKind, Suite,
};

const MAX_SKEW_TABLEAUX: usize = 200_000;

type CmdResult = Result<Report, CliError>;

fn report(json: Value, text: String) -> CmdResult {
    Ok(Report {
        json,
        text,
        ok: true,
    })
}

fn within(size: usize, max_size: usize, what: impl Into<String>) -> Result<(), CliError> {
    if size > max_size {
        return Err(Error::Budget {
            what: what.into(),
            limit: max_size,
        }
        .into());
    }
    Ok(())
}

fn usage<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, CliError> {
    r.map_err(|e| CliError::Usage(format!("invalid {what}: {e}")))
}

pub(crate) fn dispatch(cli: &Cli) -> CmdResult {
    let max = cli.max_size;
    match &cli.command {
        Command::InsertMixed { word } => {
            let res = mixed_insertion(word);
            report(
                json!({"word": word.to_string(), "p": res.p.to_string(), "q": res.q.to_string(),
                       "shape": res.p.shape().parts()}),
                format!("P_mix: {}\nQ_mix: {}", res.p, res.q),
            )
        }
        Command::InsertSk { word } => {
            let res = sk_insertion(word);
            report(
                json!({"word": word.to_string(), "p": res.p.to_string(), "q": res.q.to_string(),
                       "shape": res.p.shape().parts()}),
                format!("P_sk: {}\nQ_sk: {}", res.p, res.q),
            )
        }
        Command::Rsk { word } => {
            let res = rsk_insertion(word);
            report(
                json!({"word": word.to_string(), "p": res.p.to_string(), "q": res.q.to_string(),
                       "shape": res.p.shape().parts()}),
                format!("P_rsk: {}\nQ_rsk: {}", res.p, res.q),
            )
        }
        Command::Mread { tableau } => {
            let w = mread(tableau);
            report(
                json!({"tableau": tableau.to_string(), "word": w.to_string()}),
                w.to_string(),
            )
        }
        Command::Phi { ssdt } => {
            let t = phi(ssdt);
            report(
                json!({"ssdt": ssdt.to_string(), "tableau": t.to_string()}),
                t.to_string(),
            )
        }
        Command::Psi { tableau } => {
            let r = psi(tableau);
            report(
                json!({"tableau": tableau.to_string(), "ssdt": r.to_string()}),
                r.to_string(),
            )
        }
        Command::Classes { content, kind } => classes(content, *kind, max),
        Command::Lrcoef {
            lambda,
            mu,
            nu,
            method,
        } => {
            within(lambda.size(), max, format!("|λ| for λ = {lambda}"))?;
            lrcoef(lambda, mu, nu, *method)
        }
        Command::Gcoef { lambda, mu, method } => {
            within(lambda.size(), max, format!("|λ| for λ = {lambda}"))?;
            gcoef(lambda, mu.as_ref(), *method)
        }
        Command::Schur { basis, shape, vars } => schur(*basis, shape, *vars, max),
        Command::Rectify { tableau } => rectify(tableau),
        Command::Delta { tableau } => {
            let d = delta(tableau)?;
            report(
                json!({"tableau": tableau.to_string(), "delta": d.to_string()}),
                d.to_string(),
            )
        }
        Command::Stan { input, kind } => stan(input, *kind),
        Command::Verify {
            suite,
            ops,
            vars,
            degree,
        } => verify(*suite, max, *ops, *vars, *degree),
        Command::Appendix => {
            let rows = emit_appendix_table();
            report(json!(rows), render_table(&rows))
        }
        Command::SkewExpand {
            lambda,
            mu,
            max_letter,
        } => {
            within(lambda.size(), max, format!("|λ| for λ = {lambda}"))?;
            skew_expand(lambda, mu, *max_letter)
        }
    }
}

#[derive(Serialize)]
struct Block {
    tableau: String,
    words: Vec<String>,
}

fn render_blocks(out: &mut String, title: &str, blocks: &[Block]) {
    let width = blocks
        .iter()
        .map(|b| b.tableau.chars().count())
        .max()
        .unwrap_or(0);
    let _ = writeln!(out, "{title}: {}", blocks.len());
    for b in blocks {
        let pad = width - b.tableau.chars().count();
        let _ = writeln!(
            out,
            "  {}{} | {}",
            b.tableau,
            " ".repeat(pad),
            b.words.join(" ")
        );
    }
}

fn classes(content: &[usize], kind: ClassKind, max: usize) -> CmdResult {
    let size: usize = content.iter().sum();
    within(size, max, "total content")?;
    let content_str: Vec<String> = content.iter().map(|c| c.to_string()).collect();
    let mut json = json!({"content": content});
    let mut text = String::new();
    if matches!(kind, ClassKind::Shifted | ClassKind::Both) {
        let blocks: Vec<Block> = enumerate_shifted_classes(content, DEFAULT_MAX_WORDS)?
            .into_iter()
            .map(|c| Block {
                tableau: c.tableau.to_string(),
                words: c.words.iter().map(Word::to_string).collect(),
            })
            .collect();
        render_blocks(
            &mut text,
            &format!(
                "shifted plactic classes of content ({})",
                content_str.join(",")
            ),
            &blocks,
        );
        json["shifted"] = json!(blocks);
    }
    if matches!(kind, ClassKind::Plactic | ClassKind::Both) {
        let blocks: Vec<Block> = enumerate_plactic_classes(content, DEFAULT_MAX_WORDS)?
            .into_iter()
            .map(|c| Block {
                tableau: c.tableau.to_string(),
                words: c.words.iter().map(Word::to_string).collect(),
            })
            .collect();
        render_blocks(
            &mut text,
            &format!("plactic classes of content ({})", content_str.join(",")),
            &blocks,
        );
        json["plactic"] = json!(blocks);
    }
    report(json, text)
}

fn lr_witnesses(
    method: LrMethod,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> Option<Vec<String>> {
    match method {
        LrMethod::Plactic => None,
        LrMethod::Rectify => {
            if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
                return Some(Vec::new());
            }
            let target = special_recording_tableau(nu);
            Some(
                skew_standard_fillings(lambda, mu)
                    .iter()
                    .filter(|t| shifted_jdt_rectify(t) == target)
                    .map(|t| t.to_string())
                    .collect(),
            )
        }
        LrMethod::BoxAdd => Some(
            boxadd_witnesses(lambda, mu, nu)
                .iter()
                .map(|t| t.to_string())
                .collect(),
        ),
    }
}

fn lrcoef(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    method: LrMethodArg,
) -> CmdResult {
    let head = format!("b^{lambda}_{{{mu},{nu}}}");
    let single = match method {
        LrMethodArg::Plactic => Some(LrMethod::Plactic),
        LrMethodArg::Rectify => Some(LrMethod::Rectify),
        LrMethodArg::Boxadd => Some(LrMethod::BoxAdd),
        LrMethodArg::All => None,
    };
    let mut text = String::new();
    let json = if let Some(m) = single {
        let b = lr_coeff(m, lambda, mu, nu);
        let witnesses = lr_witnesses(m, lambda, mu, nu);
        let _ = writeln!(text, "{head} = {b} ({m})");
        for w in witnesses.iter().flatten() {
            let _ = writeln!(text, "  {w}");
        }
        json!({"coefficient": b, "method": m.name(), "witnesses": witnesses})
    } else {
        let values: Vec<(LrMethod, u64)> = LrMethod::ALL
            .iter()
            .map(|&m| (m, lr_coeff(m, lambda, mu, nu)))
            .collect();
        let b = values[0].1;
        if let Some((m, other)) = values.iter().find(|(_, v)| *v != b) {
            return Err(Error::Internal(format!(
                "{head}: plactic gives {b} but {m} gives {other}"
            ))
            .into());
        }
        let witnesses = lr_witnesses(LrMethod::BoxAdd, lambda, mu, nu);
        let _ = writeln!(text, "{head} = {b}");
        for (m, v) in &values {
            let _ = writeln!(text, "  {:<8}{v}", m.name());
        }
        for w in witnesses.iter().flatten() {
            let _ = writeln!(text, "  witness {w}");
        }
        let mut obj = json!({"coefficient": b, "method": "all", "witnesses": witnesses});
        for (m, v) in &values {
            obj[m.name()] = json!(v);
        }
        obj
    };
    report(json, text)
}

fn gcoef(lambda: &StrictPartition, mu: Option<&Partition>, method: GMethodArg) -> CmdResult {
    let Some(mu) = mu else {
        let expansion = g_expand(lambda);
        let terms: Vec<String> = expansion
            .iter()
            .rev()
            .map(|(m, &g)| {
                if g == 1 {
                    format!("s_{m}")
                } else {
                    format!("{g}*s_{m}")
                }
            })
            .collect();
        let json_terms: Vec<Value> = expansion
            .iter()
            .rev()
            .map(|(m, g)| json!({"mu": m.parts(), "coefficient": g}))
            .collect();
        return report(
            json!({"lambda": lambda.parts(), "expansion": json_terms}),
            format!("P_{lambda} = {}", terms.join(" + ")),
        );
    };
    let head = format!("g^{lambda}_{mu}");
    let json = match method {
        GMethodArg::Plactic | GMethodArg::Rectify => {
            let (name, g) = if method == GMethodArg::Plactic {
                ("plactic", g_coeff_plactic(lambda, mu))
            } else {
                ("rectify", g_coeff_rectify(lambda, mu))
            };
            return report(
                json!({"coefficient": g, "method": name}),
                format!("{head} = {g} ({name})"),
            );
        }
        GMethodArg::All => {
            let p = g_coeff_plactic(lambda, mu);
            let r = g_coeff_rectify(lambda, mu);
            if p != r {
                return Err(Error::Internal(format!(
                    "{head}: plactic gives {p} but rectify gives {r}"
                ))
                .into());
            }
            json!({"coefficient": p, "method": "all", "plactic": p, "rectify": r})
        }
    };
    let g = json["coefficient"].clone();
    report(json, format!("{head} = {g}"))
}

fn poly_json(p: &SparsePolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .rev()
        .map(|(e, c)| json!({"exponents": e, "coefficient": c}))
        .collect();
    json!({"polynomial": p.to_string(), "terms": terms})
}

fn schur(basis: Basis, shape: &str, vars: usize, max: usize) -> CmdResult {
    if vars == 0 {
        return Err(CliError::Usage("--vars must be positive".into()));
    }
    let (name, parts, p) = match basis {
        Basis::P | Basis::Q => {
            let s: StrictPartition = usage(shape.parse(), "strict partition")?;
            within(s.size(), max, format!("|λ| for λ = {s}"))?;
            let (name, p) = if basis == Basis::P {
                ("P", schur_p_poly(&s, vars))
            } else {
                ("Q", schur_q_poly(&s, vars))
            };
            (name, s.to_string(), p)
        }
        Basis::S => {
            let s: Partition = usage(shape.parse(), "partition")?;
            within(s.size(), max, format!("|μ| for μ = {s}"))?;
            ("s", s.to_string(), schur_s_poly(&s, vars))
        }
    };
    let xs: Vec<String> = (1..=vars).map(|i| format!("x{i}")).collect();
    let mut json = poly_json(&p);
    json["basis"] = json!(name);
    json["shape"] = json!(parts);
    json["vars"] = json!(vars);
    report(json, format!("{name}_{parts}({}) = {p}", xs.join(",")))
}

fn rectify(input: &str) -> CmdResult {
    let rectified = match input.parse::<SkewStandardShiftedTableau>() {
        Ok(t) => shifted_jdt_rectify(&t).to_string(),
        Err(standard_err) => match input.parse::<SkewShiftedTableau>() {
            Ok(t) => skew_rect(&t).to_string(),
            Err(e) => {
                return Err(CliError::Usage(format!(
                    "invalid skew tableau: {e} (as a standard filling: {standard_err})"
                )))
            }
        },
    };
    report(
        json!({"tableau": input.trim(), "rectified": rectified}),
        rectified,
    )
}

fn stan(input: &str, kind: StanKind) -> CmdResult {
    let out = match kind {
        StanKind::Word => stan_word(&usage(input.parse::<Word>(), "word")?).to_string(),
        StanKind::Tableau => {
            stan_tableau(&usage(input.parse::<ShiftedTableau>(), "shifted tableau")?).to_string()
        }
        StanKind::Ssdt => stan_ssdt(&usage(
            input.parse::<DecompositionTableau>(),
            "decomposition tableau",
        )?)
        .to_string(),
    };
    report(json!({"input": input.trim(), "standardized": out}), out)
}

fn verify(suite: Suite, max: usize, ops: usize, vars: usize, degree: u32) -> CmdResult {
    let (name, result): (&str, SuiteReport) = match suite {
        Suite::Niltlb => ("niltlb", suites::nil_tl_b(max)),
        Suite::Relations => ("relations", suites::plactic_relations(max)),
        Suite::Pieri => ("pieri", suites::pieri(max)),
        Suite::LrAgreement => ("lr-agreement", suites::lr_agreement(max)),
        Suite::Cauchy => {
            within(ops + degree as usize, max.max(8), "operators plus degree")?;
            ("cauchy", suites::cauchy(ops, vars, degree)?)
        }
    };
    let status = if result.passed() { "PASS" } else { "FAIL" };
    let mut text = format!("{name}: {status} ({} cases checked)\n", result.checked);
    for f in &result.failures {
        let _ = writeln!(text, "  {f}");
    }
    Ok(Report {
        json: json!({"suite": name, "passed": result.passed(), "checked": result.checked,
                     "failures": result.failures}),
        text,
        ok: result.passed(),
    })
}

fn skew_expand(lambda: &StrictPartition, mu: &StrictPartition, max_letter: u32) -> CmdResult {
    let expansion = skew_pschur_expand(lambda, mu, max_letter, MAX_SKEW_TABLEAUX)?;
    let mut text = format!(
        "EXPERIMENTAL: rectifications of the {} skew tableaux of {lambda}/{mu} over 1..{max_letter}\n",
        expansion.tableaux
    );
    for (shape, count) in expansion.counts_by_shape() {
        let _ = writeln!(text, "  {shape}: {count}");
    }
    let classes: Vec<Value> = expansion
        .classes
        .iter()
        .map(|(t, c)| json!({"tableau": t.to_string(), "count": c}))
        .collect();
    let by_shape: Vec<Value> = expansion
        .counts_by_shape()
        .iter()
        .map(|(s, c)| json!({"shape": s.parts(), "count": c}))
        .collect();
    report(
        json!({"experimental": true, "lambda": lambda.parts(), "mu": mu.parts(),
               "max_letter": max_letter, "tableaux": expansion.tableaux,
               "classes": classes, "by_shape": by_shape}),
        text,
    )
}

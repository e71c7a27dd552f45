use std::io::{self, BufWriter, Write};

use adjdom::domination::{
    build_surjection, canonicalize, enumerate_canonical, enumerate_surjections, gamma_bruteforce,
    gamma_exact, private_neighbors, DominationCertificate, Surjection, TieBreak,
};
use adjdom::graph6::{read_graph6_lines, to_graph6, Graph6Line};
use adjdom::harness::{
    check_choice, write_sweep, ChoiceSpace, Record, ReportStatus, SweepConfig, SweepSummary,
};
use adjdom::product::{
    build_adjoint, cartesian_product, minimality_witnesses, verify_dominates, verify_minimal,
};
use adjdom::{Graph, Result as CoreResult};
use anyhow::Result;
use serde_json::{json, Value};

use crate::input::{label, read_input};
use crate::Command;

const EXIT_OK: u8 = 0;
const EXIT_INPUT_ERROR: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

struct Output {
    out: BufWriter<io::StdoutLock<'static>>,
    failed: bool,
    worst: u8,
}

impl Output {
    fn new() -> Self {
        Output {
            out: BufWriter::new(io::stdout().lock()),
            failed: false,
            worst: EXIT_OK,
        }
    }

    fn emit(&mut self, record: &Value) -> Result<()> {
        serde_json::to_writer(&mut self.out, record)?;
        self.out.write_all(b"\n")?;
        Ok(())
    }

    fn diag(&mut self, msg: String) {
        self.failed = true;
        eprintln!("{msg}");
    }

    fn raise(&mut self, code: u8) {
        self.worst = self.worst.max(code);
    }

    fn finish(mut self) -> Result<u8> {
        self.out.flush()?;
        Ok(match (self.worst, self.failed) {
            (EXIT_OK, true) => EXIT_INPUT_ERROR,
            (code, _) => code,
        })
    }
}

fn graphs(arg: &str, out: &mut Output) -> Result<Vec<(Graph6Line, Graph)>> {
    let text = read_input(arg)?;
    let mut good = Vec::new();
    for line in read_graph6_lines(&text) {
        match line.graph.clone() {
            Ok(g) => good.push((line, g)),
            Err(e) => out.diag(format!(
                "{}:{}: {e} (input {:?})",
                label(arg),
                line.line_no,
                line.text
            )),
        }
    }
    Ok(good)
}

fn map_pairs(f: &Surjection) -> Vec<[usize; 2]> {
    f.pairs().map(|(v, u)| [v, u]).collect()
}

pub fn run(command: Command, cfg: &SweepConfig) -> Result<u8> {
    match command {
        Command::Gamma { input, oracle } => gamma(&input, oracle, cfg),
        Command::Canonical { input } => canonical(&input, cfg),
        Command::Surjection { input } => surjection(&input, cfg),
        Command::Product { g, h } => product(&g, &h, cfg),
        Command::Adjoint {
            g,
            h,
            choice_id,
            witnesses,
        } => adjoint(&g, &h, choice_id, witnesses, cfg),
        Command::CheckPair { g, h, choice_id } => match choice_id {
            Some(id) => check_one_choice(&g, &h, id, cfg),
            None => sweep(&g, Some(&h), cfg),
        },
        Command::Sweep { g, h } => sweep(&g, h.as_deref(), cfg),
    }
}

fn gamma(input: &str, oracle: bool, cfg: &SweepConfig) -> Result<u8> {
    let mut out = Output::new();
    for (line, g) in graphs(input, &mut out)? {
        let (k, witness) = gamma_exact(&g);
        let oracle_value = if oracle {
            match gamma_bruteforce(&g, cfg.oracle_limit) {
                Ok(v) => {
                    if v != k {
                        out.diag(format!(
                            "{}:{}: solver gave {k}, oracle {v}",
                            label(input),
                            line.line_no
                        ));
                        out.raise(EXIT_INVARIANT);
                    }
                    Some(v)
                }
                Err(e) => {
                    out.diag(format!("{}:{}: {e}", label(input), line.line_no));
                    None
                }
            }
        } else {
            None
        };
        out.emit(&json!({
            "record": "gamma",
            "g6": line.text,
            "n": g.n(),
            "edges": g.edge_count(),
            "gamma": k,
            "witness": witness.set().to_vec(),
            "oracle": oracle_value,
        }))?;
    }
    out.finish()
}

fn private_lists(g: &Graph, d: &DominationCertificate) -> CoreResult<Vec<Vec<usize>>> {
    d.set()
        .iter()
        .map(|u| private_neighbors(g, d.set(), u).map(|p| p.to_vec()))
        .collect()
}

fn canonical(input: &str, cfg: &SweepConfig) -> Result<u8> {
    let mut out = Output::new();
    for (line, g) in graphs(input, &mut out)? {
        let (k, seed) = gamma_exact(&g);
        let result: CoreResult<Vec<Value>> = (|| {
            if cfg.choice_policy == adjdom::harness::ChoicePolicy::First {
                let c = canonicalize(&g, &seed)?;
                Ok(vec![json!({
                    "record": "canonical",
                    "g6": line.text,
                    "gamma": k,
                    "seed_set": seed.set().to_vec(),
                    "canonical": c.certificate.set().to_vec(),
                    "swaps": c.swaps.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
                    "induced_edges": c.induced_edges,
                    "private_neighbors": private_lists(&g, &c.certificate)?,
                })])
            } else {
                enumerate_canonical(&g, cfg.canonical_cap, cfg.oracle_limit)?
                    .iter()
                    .enumerate()
                    .map(|(i, d)| {
                        Ok(json!({
                            "record": "canonical",
                            "g6": line.text,
                            "gamma": k,
                            "index": i,
                            "canonical": d.set().to_vec(),
                            "private_neighbors": private_lists(&g, d)?,
                        }))
                    })
                    .collect()
            }
        })();
        match result {
            Ok(records) => records.iter().try_for_each(|r| out.emit(r))?,
            Err(e) => {
                if matches!(e, adjdom::Error::InternalContradiction(_)) {
                    out.raise(EXIT_INVARIANT);
                }
                out.diag(format!("{}:{}: {e}", label(input), line.line_no));
            }
        }
    }
    out.finish()
}

fn surjection(input: &str, cfg: &SweepConfig) -> Result<u8> {
    let mut out = Output::new();
    for (line, g) in graphs(input, &mut out)? {
        let result: CoreResult<Vec<Value>> = (|| {
            if cfg.choice_policy == adjdom::harness::ChoicePolicy::First {
                let d = canonicalize(&g, &gamma_exact(&g).1)?.certificate;
                let f = build_surjection(&g, &d, TieBreak::Lowest)?;
                Ok(vec![json!({
                    "record": "surjection",
                    "g6": line.text,
                    "d": d.set().to_vec(),
                    "map": map_pairs(&f),
                })])
            } else {
                let mut records = Vec::new();
                for (i, d) in enumerate_canonical(&g, cfg.canonical_cap, cfg.oracle_limit)?
                    .iter()
                    .enumerate()
                {
                    for (j, f) in enumerate_surjections(&g, d, cfg.surjection_cap)?
                        .iter()
                        .enumerate()
                    {
                        records.push(json!({
                            "record": "surjection",
                            "g6": line.text,
                            "d_index": i,
                            "f_index": j,
                            "d": d.set().to_vec(),
                            "map": map_pairs(f),
                        }));
                    }
                }
                Ok(records)
            }
        })();
        match result {
            Ok(records) => records.iter().try_for_each(|r| out.emit(r))?,
            Err(e) => out.diag(format!("{}:{}: {e}", label(input), line.line_no)),
        }
    }
    out.finish()
}

fn product(g_arg: &str, h_arg: &str, cfg: &SweepConfig) -> Result<u8> {
    let mut out = Output::new();
    let gs = graphs(g_arg, &mut out)?;
    let hs = graphs(h_arg, &mut out)?;
    for (gl, g) in &gs {
        for (hl, h) in &hs {
            match cartesian_product(g, h, cfg.max_product_vertices) {
                Ok(p) => out.emit(&json!({
                    "record": "product",
                    "g6_g": gl.text,
                    "g6_h": hl.text,
                    "n": p.n(),
                    "edges": p.edge_count(),
                    "g6": to_graph6(&p),
                }))?,
                Err(e) => out.diag(format!("pair ({}, {}): {e}", gl.text, hl.text)),
            }
        }
    }
    out.finish()
}

fn adjoint(
    g_arg: &str,
    h_arg: &str,
    id: adjdom::harness::ChoiceId,
    witnesses: bool,
    cfg: &SweepConfig,
) -> Result<u8> {
    let mut out = Output::new();
    let gs = graphs(g_arg, &mut out)?;
    let hs = graphs(h_arg, &mut out)?;
    for (gl, g) in &gs {
        for (hl, h) in &hs {
            let result: CoreResult<Value> = (|| {
                if g.n().saturating_mul(h.n()) > cfg.max_product_vertices {
                    return Err(adjdom::Error::ProductTooLarge {
                        n_g: g.n(),
                        n_h: h.n(),
                        cap: cfg.max_product_vertices,
                    });
                }
                let space = ChoiceSpace::with_caps(
                    g,
                    h,
                    cfg.canonical_cap,
                    cfg.surjection_cap,
                    cfg.oracle_limit,
                )?;
                let (dg, dh, fg, fh) = space.get(id).ok_or_else(|| {
                    adjdom::Error::InvalidConfig(format!(
                        "choice id {id} is out of range for this pair"
                    ))
                })?;
                let a = build_adjoint(g, h, dg, dh, fg, fh, cfg.max_product_vertices)?;
                let dominates = verify_dominates(&a);
                let minimal = dominates && verify_minimal(&a)?;
                let mut record = json!({
                    "record": "adjoint",
                    "g6_g": gl.text,
                    "g6_h": hl.text,
                    "choice_id": id,
                    "d_g": dg.set().to_vec(),
                    "d_h": dh.set().to_vec(),
                    "f_g": map_pairs(fg),
                    "f_h": map_pairs(fh),
                    "e_s": a.adjoined_coords().iter().map(|&(s, t)| [[s.0, s.1], [t.0, t.1]]).collect::<Vec<_>>(),
                    "e_s_count": a.adjoined_count(),
                    "g6_combined": to_graph6(&a.combined),
                    "dominates": dominates,
                    "minimal": minimal,
                });
                if witnesses {
                    record["witnesses"] = serde_json::to_value(minimality_witnesses(g, h, &a)?)
                        .map_err(|e| adjdom::Error::Io(e.to_string()))?;
                }
                Ok(record)
            })();
            match result {
                Ok(record) => {
                    if record["minimal"] != json!(true) {
                        out.raise(EXIT_INVARIANT);
                    }
                    out.emit(&record)?;
                }
                Err(e) => out.diag(format!("pair ({}, {}): {e}", gl.text, hl.text)),
            }
        }
    }
    out.finish()
}

fn check_one_choice(
    g_arg: &str,
    h_arg: &str,
    id: adjdom::harness::ChoiceId,
    cfg: &SweepConfig,
) -> Result<u8> {
    let mut out = Output::new();
    let gs = graphs(g_arg, &mut out)?;
    let hs = graphs(h_arg, &mut out)?;
    for (gl, g) in &gs {
        for (hl, h) in &hs {
            match check_choice(g, h, id, cfg) {
                Ok(r) => {
                    match r.status {
                        ReportStatus::Ok => {}
                        ReportStatus::Counterexample => out.raise(EXIT_COUNTEREXAMPLE),
                        ReportStatus::InvariantViolation => out.raise(EXIT_INVARIANT),
                    }
                    out.emit(&serde_json::to_value(Record::Pair(&r))?)?;
                }
                Err(e) => out.diag(format!("pair ({}, {}): {e}", gl.text, hl.text)),
            }
        }
    }
    out.finish()
}

fn sweep(g_arg: &str, h_arg: Option<&str>, cfg: &SweepConfig) -> Result<u8> {
    let text_g = read_input(g_arg)?;
    let text_h = h_arg.map(read_input).transpose()?;
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let mut diag = io::stderr().lock();
    let summary: SweepSummary = write_sweep(&text_g, text_h.as_deref(), cfg, &mut out, &mut diag)?;
    Ok(summary.exit_status as u8)
}

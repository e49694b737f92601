use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use traid::harmonic::{self, EigenState, HalfInt};
use traid::pure::{self, check_pt4_relation, pt4_gamma, winding_vector};
use traid::reps::{self, AbelianRep, CoxeterLabel, CoxeterLabels};
use traid::worldlines::{render_strand_diagram, DiagramOptions};
use traid::{codimension, trajectory_to_word, word_to_choreography, Trajectory, Word};

use crate::{CliError, Command, RepCommand, Report, WordArg};

type Result<T> = std::result::Result<T, CliError>;

pub const OUT_DIR_VAR: &str = "TRAID_OUT_DIR";

pub fn run(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Normalize(w) => {
            let nf = parse(&w)?.normal_form();
            Ok(Report {
                text: nf.to_string(),
                json: word_json(&nf),
            })
        }
        Command::Equal { n, a, b } => {
            let (a, b) = (Word::parse(&a, n)?, Word::parse(&b, n)?);
            let eq = a.equals(&b)?;
            Ok(Report {
                text: eq.to_string(),
                json: json!({ "equal": eq, "n": n }),
            })
        }
        Command::Perm(w) => {
            let p = parse(&w)?.perm_image();
            Ok(Report {
                text: p.to_string(),
                json: json!({ "perm": p.images() }),
            })
        }
        Command::Pure(w) => {
            let w = parse(&w)?;
            let pure = w.is_pure();
            Ok(Report {
                text: pure.to_string(),
                json: json!({ "pure": pure, "perm": w.perm_image().images() }),
            })
        }
        Command::Decompose(w) => {
            let d = pure::transversal_decompose(&parse(&w)?);
            Ok(Report {
                text: format!(
                    "pure: {}\nperm: {}\ntransversal: {}",
                    d.pure_part, d.perm_part, d.transversal_word
                ),
                json: json!({
                    "pure_part": word_json(&d.pure_part),
                    "perm": d.perm_part.images(),
                    "transversal": word_json(&d.transversal_word),
                }),
            })
        }
        Command::Gamma { k, relation } => gamma(k, relation),
        Command::Winding(w) => {
            let wv = winding_vector(&parse(&w)?)?;
            let entries: Vec<String> = wv.entries.iter().map(|e| e.to_string()).collect();
            Ok(Report {
                text: entries.join(" "),
                json: json!({
                    "entries": wv.entries,
                    "puncture_labels": wv.puncture_labels,
                    "infinite_puncture": wv.infinite_puncture,
                    "infinite_puncture_winding": wv.infinite_puncture_winding(),
                }),
            })
        }
        Command::Betti { n } => {
            let b = pure::betti_lower_bound(n)?;
            Ok(Report {
                text: b.to_string(),
                json: json!({ "n": n, "betti_lower_bound": b }),
            })
        }
        Command::Rep(r) => rep(r),
        Command::Diagram {
            word,
            out,
            width,
            height,
            mono,
            no_labels,
        } => {
            let w = parse(&word)?;
            if !(width > 0.0 && height > 0.0) {
                return Err(CliError::Input("diagram size must be positive".into()));
            }
            let mut opts = DiagramOptions {
                width,
                height,
                show_labels: !no_labels,
                ..DiagramOptions::default()
            };
            if mono {
                opts.colors = None;
            }
            emit(render_strand_diagram(&w, &opts), out, "diagram")
        }
        Command::Choreography { word, out } => {
            let tr = word_to_choreography(&parse(&word)?);
            let body = serde_json::to_string_pretty(&tr).expect("trajectory serializes");
            emit(body + "\n", out, "choreography")
        }
        Command::ExtractWord { file } => {
            let text = fs::read_to_string(&file).map_err(|source| CliError::Io {
                path: file.clone(),
                source,
            })?;
            let tr: Trajectory = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{}: not a trajectory: {e}", file.display())))?;
            let w = trajectory_to_word(&tr)?;
            Ok(Report {
                text: w.to_string(),
                json: word_json(&w),
            })
        }
        Command::Spectrum { rep, emax } => spectrum(&rep, emax),
        Command::Field {
            rep,
            nu,
            lambda,
            half_width,
            resolution,
            out,
            svg,
            levels,
        } => field(&rep, nu, &lambda, half_width, resolution, out, svg, levels),
        Command::Codim { d, k } => {
            let c = codimension(d, k)?;
            Ok(Report {
                text: c.to_string(),
                json: json!({ "d": d, "k": k, "codimension": c }),
            })
        }
        Command::Selftest { seed, cases } => crate::selftest::run(seed, cases),
    }
}

fn parse(w: &WordArg) -> Result<Word> {
    Ok(Word::parse(&w.word, w.n)?)
}

fn word_json(w: &Word) -> Value {
    json!({ "n": w.n_strands(), "letters": w.letters(), "text": w.to_string() })
}

fn gamma(k: Option<usize>, relation: bool) -> Result<Report> {
    if relation {
        let c = check_pt4_relation();
        return Ok(Report {
            text: format!(
                "g8 ... g1 = e: {}\ng1 ... g8 = e: {}\nall pure: {}",
                c.descending, c.ascending, c.all_pure
            ),
            json: json!({ "descending": c.descending, "ascending": c.ascending, "all_pure": c.all_pure }),
        });
    }
    let loop_json = |k: usize, g: &Word| {
        let mut v = word_json(g);
        v["k"] = json!(k);
        v
    };
    if let Some(k) = k {
        let g = pt4_gamma(k)?;
        return Ok(Report {
            text: g.to_string(),
            json: loop_json(k, &g),
        });
    }
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for k in 1..=8 {
        let g = pt4_gamma(k)?;
        lines.push(format!("g{k}: {g}"));
        items.push(loop_json(k, &g));
    }
    Ok(Report {
        text: lines.join("\n"),
        json: Value::Array(items),
    })
}

fn rep(cmd: RepCommand) -> Result<Report> {
    match cmd {
        RepCommand::Abelian { n, signs, word } => match (signs, word) {
            (None, None) => {
                let all = reps::all_abelian_reps(n)?;
                let text = all
                    .iter()
                    .map(|r| format!("{r} {}", r.classify()))
                    .collect::<Vec<_>>()
                    .join("\n");
                let json = Value::Array(
                    all.iter()
                        .map(|r| json!({ "signs": r.to_string(), "statistics": r.classify().to_string() }))
                        .collect(),
                );
                Ok(Report { text, json })
            }
            (Some(s), word) => {
                let r: AbelianRep = s.parse()?;
                if r.n_strands() != n {
                    return Err(CliError::Input(format!(
                        "signs {s:?} describe {} strands, but --n is {n}",
                        r.n_strands()
                    )));
                }
                match word {
                    None => Ok(Report {
                        text: r.classify().to_string(),
                        json: json!({ "signs": r.to_string(), "statistics": r.classify().to_string() }),
                    }),
                    Some(w) => {
                        let v = r.eval(&Word::parse(&w, n)?)?;
                        Ok(Report {
                            text: format!("{v:+}"),
                            json: json!({ "signs": r.to_string(), "value": v }),
                        })
                    }
                }
            }
            (None, Some(_)) => Err(CliError::Input("--word needs --signs".into())),
        },
        RepCommand::Coxeter {
            labels,
            word,
            order,
            limit,
        } => {
            let labels: CoxeterLabels = labels.parse()?;
            let mut text = Vec::new();
            let mut json = json!({ "labels": labels.to_string(), "n": labels.n_strands() });
            if let Some(w) = word {
                let w = Word::parse(&w, labels.n_strands())?;
                let m = reps::eval_matrix(&labels, &w)?;
                let rows: Vec<Vec<f64>> = m.row_iter().map(|r| r.iter().map(|&x| clean(x)).collect()).collect();
                for r in &rows {
                    text.push(r.iter().map(|x| format!("{x:>10.6}")).collect::<Vec<_>>().join(" "));
                }
                json["matrix"] = json!(rows);
            }
            let infinite = labels.labels().iter().any(|l| matches!(l, CoxeterLabel::Infinite));
            if (order || text.is_empty()) && infinite {
                text.push("order inf".into());
                json["order"] = json!("inf");
            } else if order || text.is_empty() {
                let gens = reps::coxeter_generators(&labels);
                let group = reps::matrix_group_closure(&gens, limit)
                    .map_err(|_| CliError::Failed(format!("group {labels} has more than {limit} elements")))?;
                text.push(format!("order {}", group.len()));
                json["order"] = json!(group.len());
            }
            Ok(Report {
                text: text.join("\n"),
                json,
            })
        }
    }
}

// avoid printing "-0.000000"
fn clean(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

fn spectrum(rep: &str, emax: f64) -> Result<Report> {
    let rep: AbelianRep = rep.parse()?;
    let levels = harmonic::spectrum(&rep, emax)?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for level in &levels {
        for &(nu, lambda) in &level.states {
            lines.push(format!(
                "E = {:<5} ν = {:<3} λ = {:<5} degeneracy = {}",
                level.energy.value(),
                nu,
                lambda.to_string(),
                level.degeneracy
            ));
            rows.push(json!({
                "energy": level.energy.value(),
                "nu": nu,
                "lambda": lambda.to_string(),
                "degeneracy": level.degeneracy,
            }));
        }
    }
    Ok(Report {
        text: lines.iter().map(|l| l.trim_end()).collect::<Vec<_>>().join("\n"),
        json: json!({ "rep": rep.to_string(), "statistics": rep.classify().to_string(), "levels": rows }),
    })
}

#[allow(clippy::too_many_arguments)]
fn field(
    rep: &str,
    nu: u32,
    lambda: &str,
    half_width: f64,
    resolution: usize,
    out: Option<PathBuf>,
    svg: Option<PathBuf>,
    levels: usize,
) -> Result<Report> {
    let rep: AbelianRep = rep.parse()?;
    let lambda: HalfInt = lambda.parse()?;
    let state = EigenState::new(nu, lambda, rep)?;
    let grid = harmonic::field_grid(&state, half_width, resolution)?;
    let mut written = Vec::new();
    let csv = grid.to_csv();
    let to_stdout = out.is_none() && svg.is_none();
    if let Some(path) = out {
        written.push(write_file(&path, &csv)?);
    }
    if let Some(path) = svg {
        let picture = harmonic::render_field_svg(&state, &grid, 480.0, levels);
        written.push(write_file(&path, &picture)?);
    }
    if to_stdout {
        return Ok(Report {
            text: csv.trim_end().to_string(),
            json: json!({ "resolution": grid.resolution, "half_width": grid.half_width, "values": grid.values }),
        });
    }
    let names: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
    Ok(Report {
        text: format!("E = {} wrote {}", state.energy(), names.join(", ")),
        json: json!({ "energy": state.energy(), "written": names, "resolution": resolution }),
    })
}

/// Writes to `out` (resolved against `TRAID_OUT_DIR`) or returns the body
/// for stdout.
fn emit(body: String, out: Option<PathBuf>, what: &str) -> Result<Report> {
    match out {
        Some(path) => {
            let path = write_file(&path, &body)?;
            let shown = path.display().to_string();
            Ok(Report {
                text: format!("wrote {shown}"),
                json: json!({ "written": [shown], "kind": what }),
            })
        }
        None => {
            let json = serde_json::from_str::<Value>(&body).unwrap_or_else(|_| json!({ what: body }));
            Ok(Report {
                text: body.trim_end().to_string(),
                json,
            })
        }
    }
}

pub fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if path.is_relative() && !dir.is_empty() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn write_file(path: &Path, body: &str) -> Result<PathBuf> {
    let path = resolve(path);
    let io = |source| CliError::Io {
        path: path.clone(),
        source,
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(io)?;
    }
    fs::write(&path, body).map_err(io)?;
    Ok(path)
}

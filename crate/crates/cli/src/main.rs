use std::fmt::Display;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use shirshov::bracketing::{bracket_down_up, bracket_down_up_trace, bracket_std};
use shirshov::gsb_assoc::{
    complete_assoc_with, nontrivial_compositions_assoc, red_words, reduce_assoc,
};
use shirshov::gsb_lie::{
    complete_lie_with, nontrivial_compositions_lie, red_nlsw, red_nlsw_counts,
};
use shirshov::text::{parse_assoc, parse_lie, Relations};
use shirshov::words::{elimination_chain, enumerate_alsw, format_derived, lyndon_factorize};
use shirshov::{
    crosscheck_lie_assoc_gsb, lie_reduce, Alphabet, AssocPoly, CompletionOptions, LiePoly, Mode,
    Overlap, Presentation, Word,
};

#[derive(Parser)]
#[command(
    name = "shirshov",
    version,
    about = "Lyndon-Shirshov words and Groebner-Shirshov bases over Q"
)]
struct Cli {
    /// Ordered alphabet, e.g. "x1<x2<x3". Inferred from the input when absent.
    #[arg(long, global = true)]
    alphabet: Option<String>,
    /// Engine for presentations; overrides the `mode:` header.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Degree bound for completion and basis listings.
    #[arg(long, global = true)]
    max_deg: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads used while reducing compositions.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Lie,
    Assoc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List associative Lyndon-Shirshov words by length.
    Lsw {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Also print the standard bracketing of each word.
        #[arg(long)]
        bracket: bool,
        /// Print only the number of words of each length.
        #[arg(long)]
        count_only: bool,
    },
    /// Factor a word into nonincreasing Lyndon-Shirshov factors.
    Factor { word: String },
    /// Standard bracketing of a Lyndon-Shirshov word.
    Bracket {
        word: String,
        /// Build the bracketing bottom-up by joining minimal letters.
        #[arg(long)]
        down_up: bool,
        /// Print every intermediate row of the bottom-up construction.
        #[arg(long)]
        trace: bool,
    },
    /// Iterated elimination of the minimal letter.
    Eliminate { word: String },
    /// Normal form of a polynomial modulo a presentation.
    Nf {
        /// Presentation file; stdin when absent or `-`.
        presentation: Option<PathBuf>,
        #[arg(long)]
        poly: String,
        /// Complete the relations up to `--max-deg` before reducing.
        #[arg(long)]
        complete: bool,
    },
    /// Degree-bounded completion of a presentation.
    Complete { presentation: Option<PathBuf> },
    /// Test whether the relations already form a Groebner-Shirshov basis.
    Check { presentation: Option<PathBuf> },
    /// Irreducible basis elements up to `--max-deg`, after completion.
    Basis { presentation: Option<PathBuf> },
    /// Compare the Lie and associative basis criteria on a Lie presentation.
    Crosscheck { presentation: Option<PathBuf> },
}

enum Failure {
    Input(String),
    Negative,
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Run = Result<(), Failure>;

struct Ctx {
    alphabet: Option<String>,
    mode: Option<Mode>,
    max_deg: Option<usize>,
    json: bool,
    jobs: usize,
}

impl Ctx {
    fn alphabet_for(&self, text: &str) -> Result<Alphabet, Failure> {
        Ok(match &self.alphabet {
            Some(spec) => Alphabet::parse(spec)?,
            None => Alphabet::infer(text)?,
        })
    }

    fn word(&self, text: &str) -> Result<(Alphabet, Word), Failure> {
        let alphabet = self.alphabet_for(text)?;
        let word = alphabet.parse_word(text)?;
        if word.is_empty() {
            return Err(Failure::Input("empty word".into()));
        }
        Ok((alphabet, word))
    }

    fn presentation(&self, path: &Option<PathBuf>) -> Result<Presentation, Failure> {
        let mut text = match path {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
            _ => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            }
        };
        let body: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        if !body.iter().any(|l| l.starts_with("alphabet")) {
            // appended so that reported line numbers still match the input
            let relations: Vec<&str> = body.iter().filter(|l| !l.contains(':')).copied().collect();
            let alphabet = self.alphabet_for(&relations.join("\n"))?;
            text.push_str(&format!("\nalphabet: {alphabet}\n"));
        }
        let p = Presentation::parse(&text)?;
        Ok(match self.mode {
            Some(m) => p.with_mode(m)?,
            None => p,
        })
    }

    fn bound(&self, p: &Presentation) -> Result<usize, Failure> {
        self.max_deg.or(p.degree_bound).ok_or_else(|| {
            Failure::Input("no degree bound: pass --max-deg or add a `degree_bound:` header".into())
        })
    }

    fn options(&self, p: &Presentation) -> Result<CompletionOptions, Failure> {
        Ok(CompletionOptions {
            degree_bound: self.bound(p)?,
            jobs: self.jobs.max(1),
        })
    }

    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{value}");
        } else {
            print!("{}", text());
        }
    }
}

fn lines<T>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> String) -> String {
    items.into_iter().map(|i| f(i) + "\n").collect()
}

fn lsw(ctx: &Ctx, max_len: usize, bracket: bool, count_only: bool) -> Run {
    let alphabet = Alphabet::parse(ctx.alphabet.as_deref().unwrap_or("x1<x2"))?;
    let words = enumerate_alsw(&alphabet, max_len);
    let counts: Vec<usize> = (1..=max_len)
        .map(|n| words.iter().filter(|w| w.len() == n).count())
        .collect();
    let show = |w: &Word| alphabet.format_word(w);
    let bracketed = |w: &Word| {
        bracket_std(w)
            .expect("enumerated ALSW")
            .display(&alphabet)
            .to_string()
    };
    if count_only {
        ctx.emit(json!({ "counts": counts }), || {
            lines(counts.iter().enumerate(), |(i, c)| format!("{} {c}", i + 1))
        });
    } else if bracket {
        let rows: Vec<Value> = words
            .iter()
            .map(|w| json!({ "word": show(w), "bracket": bracketed(w) }))
            .collect();
        ctx.emit(json!({ "words": rows, "counts": counts }), || {
            lines(&words, |w| format!("{}\t{}", show(w), bracketed(w)))
        });
    } else {
        let rows: Vec<String> = words.iter().map(show).collect();
        ctx.emit(json!({ "words": rows, "counts": counts }), || {
            lines(&rows, String::clone)
        });
    }
    Ok(())
}

fn factor(ctx: &Ctx, text: &str) -> Run {
    let (alphabet, word) = ctx.word(text)?;
    let factors: Vec<String> = lyndon_factorize(&word)?
        .iter()
        .map(|f| alphabet.format_word(f))
        .collect();
    ctx.emit(json!({ "factors": factors }), || factors.join(" | ") + "\n");
    Ok(())
}

fn bracket(ctx: &Ctx, text: &str, down_up: bool, trace: bool) -> Run {
    let (alphabet, word) = ctx.word(text)?;
    if trace {
        let rows: Vec<String> = bracket_down_up_trace(&word)?
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| t.display(&alphabet).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        ctx.emit(json!({ "trace": rows }), || lines(&rows, String::clone));
        return Ok(());
    }
    let tree = if down_up {
        bracket_down_up(&word)?
    } else {
        bracket_std(&word)?
    };
    let shown = tree.display(&alphabet).to_string();
    ctx.emit(json!({ "bracket": shown }), || shown.clone() + "\n");
    Ok(())
}

fn eliminate(ctx: &Ctx, text: &str) -> Run {
    let (alphabet, word) = ctx.word(text)?;
    let chain: Vec<String> = elimination_chain(&word)
        .iter()
        .map(|c| format_derived(c, &alphabet))
        .collect();
    let alsw = chain.last().is_some_and(|c| !c.contains(' '));
    ctx.emit(json!({ "chain": chain, "alsw": alsw }), || {
        lines(&chain, String::clone)
    });
    Ok(())
}

fn monic_lie(rels: &[LiePoly]) -> Result<Vec<LiePoly>, Failure> {
    Ok(rels.iter().map(LiePoly::monic).collect::<Result<_, _>>()?)
}

fn monic_assoc(rels: &[AssocPoly]) -> Result<Vec<AssocPoly>, Failure> {
    Ok(rels
        .iter()
        .map(AssocPoly::monic)
        .collect::<Result<_, _>>()?)
}

fn nf(ctx: &Ctx, path: &Option<PathBuf>, poly: &str, complete: bool) -> Run {
    let p = ctx.presentation(path)?;
    let a = &p.alphabet;
    let shown = match &p.relations {
        Relations::Lie(rels) => {
            let h = parse_lie(poly, a)?;
            let rels = if complete {
                complete_lie_with(rels, ctx.options(&p)?)?.into_relations()
            } else {
                monic_lie(rels)?
            };
            lie_reduce(&h, &rels)?.normal_form().display(a).to_string()
        }
        Relations::Assoc(rels) => {
            let h = parse_assoc(poly, a)?;
            let rels = if complete {
                complete_assoc_with(rels, ctx.options(&p)?)?.into_relations()
            } else {
                monic_assoc(rels)?
            };
            reduce_assoc(&h, &rels).display(a).to_string()
        }
    };
    ctx.emit(json!({ "normal_form": shown }), || shown.clone() + "\n");
    Ok(())
}

fn complete(ctx: &Ctx, path: &Option<PathBuf>) -> Run {
    let p = ctx.presentation(path)?;
    let a = &p.alphabet;
    let (rels, status, mut extra) = match &p.relations {
        Relations::Lie(rels) => {
            let st = complete_lie_with(rels, ctx.options(&p)?)?;
            let shown: Vec<String> = st
                .relations()
                .iter()
                .map(|f| f.display(a).to_string())
                .collect();
            let counts = red_nlsw_counts(st.relations(), a, st.degree_bound());
            (shown, st.status(), json!({ "red_nlsw_counts": counts }))
        }
        Relations::Assoc(rels) => {
            let st = complete_assoc_with(rels, ctx.options(&p)?)?;
            let shown: Vec<String> = st
                .relations()
                .iter()
                .map(|f| f.display(a).to_string())
                .collect();
            (shown, st.status(), json!({}))
        }
    };
    extra["mode"] = json!(p.mode().to_string());
    extra["relations"] = json!(rels);
    extra["status"] = json!(status.to_string());
    ctx.emit(extra, || {
        lines(&rels, String::clone) + &format!("{status}\n")
    });
    if matches!(status, shirshov::Status::Complete) {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn check(ctx: &Ctx, path: &Option<PathBuf>) -> Run {
    let p = ctx.presentation(path)?;
    let a = &p.alphabet;
    let bad: Vec<Overlap> = match &p.relations {
        Relations::Lie(rels) => nontrivial_compositions_lie(&monic_lie(rels)?)?,
        Relations::Assoc(rels) => nontrivial_compositions_assoc(&monic_assoc(rels)?)?,
    };
    let shown: Vec<String> = bad
        .iter()
        .map(|o| {
            format!(
                "{:?} w={} a={} b={}",
                o.kind,
                a.format_word(&o.word),
                a.format_word(&o.a),
                a.format_word(&o.b)
            )
        })
        .collect();
    ctx.emit(
        json!({ "gsb": bad.is_empty(), "nontrivial": shown }),
        || {
            if bad.is_empty() {
                "gsb\n".into()
            } else {
                format!("not a gsb: {} nontrivial compositions\n", bad.len())
                    + &lines(&shown, String::clone)
            }
        },
    );
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn basis(ctx: &Ctx, path: &Option<PathBuf>) -> Run {
    let p = ctx.presentation(path)?;
    let a = &p.alphabet;
    let max = ctx.bound(&p)?;
    let options = ctx.options(&p)?;
    let (elements, counts, status) = match &p.relations {
        Relations::Lie(rels) => {
            let st = complete_lie_with(rels, options)?;
            let basis: Vec<String> = red_nlsw(st.relations(), a, max)
                .iter()
                .map(|t| t.display(a).to_string())
                .collect();
            (basis, red_nlsw_counts(st.relations(), a, max), st.status())
        }
        Relations::Assoc(rels) => {
            let st = complete_assoc_with(rels, options)?;
            let words = red_words(st.relations(), a, max);
            let counts = (0..=max)
                .map(|n| words.iter().filter(|w| w.len() == n).count())
                .collect();
            let shown = words
                .iter()
                .map(|w| {
                    if w.is_empty() {
                        "1".into()
                    } else {
                        a.format_word(w)
                    }
                })
                .collect();
            (shown, counts, st.status())
        }
    };
    let key = if p.mode() == Mode::Lie {
        "red_nlsw_counts"
    } else {
        "red_word_counts"
    };
    ctx.emit(
        json!({ "basis": elements, key: counts, "status": status.to_string() }),
        || lines(&elements, String::clone) + &format!("{status}\n"),
    );
    Ok(())
}

fn crosscheck(ctx: &Ctx, path: &Option<PathBuf>) -> Run {
    let p = ctx.presentation(path)?.with_mode(Mode::Lie)?;
    let Relations::Lie(rels) = &p.relations else {
        unreachable!("converted to lie")
    };
    let cc = crosscheck_lie_assoc_gsb(&monic_lie(rels)?)?;
    ctx.emit(
        json!({ "lie": cc.lie, "assoc": cc.assoc, "agree": cc.agree() }),
        || {
            format!(
                "lie: {}\nassoc: {}\n{}\n",
                cc.lie,
                cc.assoc,
                if cc.agree() { "agree" } else { "disagree" }
            )
        },
    );
    if cc.agree() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let ctx = Ctx {
        alphabet: cli.alphabet,
        mode: cli.mode.map(|m| match m {
            ModeArg::Lie => Mode::Lie,
            ModeArg::Assoc => Mode::Assoc,
        }),
        max_deg: cli.max_deg,
        json: cli.format == Format::Json,
        jobs: cli.jobs,
    };
    let result = match &cli.command {
        Command::Lsw {
            max_len,
            bracket: b,
            count_only,
        } => lsw(&ctx, *max_len, *b, *count_only),
        Command::Factor { word } => factor(&ctx, word),
        Command::Bracket {
            word,
            down_up,
            trace,
        } => bracket(&ctx, word, *down_up, *trace),
        Command::Eliminate { word } => eliminate(&ctx, word),
        Command::Nf {
            presentation,
            poly,
            complete: c,
        } => nf(&ctx, presentation, poly, *c),
        Command::Complete { presentation } => complete(&ctx, presentation),
        Command::Check { presentation } => check(&ctx, presentation),
        Command::Basis { presentation } => basis(&ctx, presentation),
        Command::Crosscheck { presentation } => crosscheck(&ctx, presentation),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

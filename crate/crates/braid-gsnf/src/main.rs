//! Command-line front end: normal forms, equality, permutations, rule-set
//! inspection, and basis verification.
//!
//! Exit codes: 0 success (and "yes" for the boolean subcommands `eq`,
//! `is-pure`, `oracle-eq`, and a passing `verify`); 1 "no" or a failed
//! verification; 2 usage or parse error; 3 index out of range or strand
//! mismatch; 4 step budget exceeded.

use std::collections::HashMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braid_gsnf::artin::oracle_equal;
use braid_gsnf::order::compare;
use braid_gsnf::rewrite::{
    decompose_normal_form, normal_form, RewriteError, DEFAULT_BUDGET,
};
use braid_gsnf::rules::RuleSet;
use braid_gsnf::sym::{is_pure, permutation_of, sym_normal_form};
use braid_gsnf::verify::verify_rule_set;
use braid_gsnf::word::{
    artin_to_band, band_to_artin, ArtinWord, BandLetter, BandWord, StrandCount, WordError,
};

/// JSON schema version stamped on every `--json` payload.
const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "braid-gsnf",
    version,
    about = "Normal forms and Gröbner–Shirshov verification for braid groups \
             in Artin–Burau (band) generators",
    after_help = "Word tokens, separated by spaces: `s3`/`S3` for σ₃ and \
                  σ₃⁻¹, `b1.4`/`B1.4` for the band generators s₁,₄ and \
                  s₁,₄⁻¹. An empty string is the identity."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Alphabet {
    /// Words over σ_k^{±1} (tokens `s<k>`, `S<k>`).
    Artin,
    /// Words over s_{i,j}^{±1} and σ_k^{-1} (tokens `b<i>.<j>`, `B<i>.<j>`, `S<k>`).
    Band,
}

#[derive(Args)]
struct Common {
    /// Number of strands; fixes the alphabet and the rule set.
    #[arg(short = 'n', long = "strands", value_name = "INT")]
    strands: usize,
    /// Alphabet the input words are written in.
    #[arg(long = "in", value_enum, value_name = "ALPHABET", default_value_t = Alphabet::Band)]
    input: Alphabet,
    /// Emit machine-readable JSON (schema version 1).
    #[arg(long)]
    json: bool,
    /// Maximum rewrite steps per reduction.
    #[arg(long, value_name = "INT", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce each word to its normal form.
    Nf {
        #[command(flatten)]
        common: Common,
        /// Also print the pure-part/tail decomposition as JSON.
        #[arg(long)]
        decompose: bool,
        #[arg(value_name = "WORD", required = true)]
        words: Vec<String>,
    },
    /// Decide whether two words are the same braid (exit 0 yes, 1 no).
    Eq {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "WORD")]
        left: String,
        #[arg(value_name = "WORD")]
        right: String,
    },
    /// Decide whether a word is a pure braid (exit 0 yes, 1 no).
    IsPure {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "WORD")]
        word: String,
    },
    /// Print the permutation a word induces on strands.
    Perm {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "WORD")]
        word: String,
    },
    /// Rewrite each word into the other alphabet.
    Convert {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "WORD", required = true)]
        words: Vec<String>,
    },
    /// Compare two band words in the inverse tower order.
    Cmp {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "WORD")]
        left: String,
        #[arg(value_name = "WORD")]
        right: String,
    },
    /// Print the instantiated rewriting system.
    Rules {
        #[command(flatten)]
        common: Common,
    },
    /// Check every composition and the minimality of the rule set
    /// (exit 0 iff no failures and no violations).
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Decide equality through the free-group action instead of
    /// rewriting (exit 0 yes, 1 no).
    OracleEq {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "WORD")]
        left: String,
        #[arg(value_name = "WORD")]
        right: String,
    },
}

/// Anything that stops a subcommand, tagged with its process exit code.
struct Fail {
    code: u8,
    message: String,
}

impl Fail {
    fn usage(message: impl Into<String>) -> Fail {
        Fail {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<WordError> for Fail {
    fn from(e: WordError) -> Fail {
        let code = match e {
            WordError::BadStrandCount(_)
            | WordError::MalformedToken(_)
            | WordError::WrongAlphabet(..) => 2,
            WordError::IndexOutOfRange { .. } | WordError::StrandMismatch(..) => 3,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

impl From<RewriteError> for Fail {
    fn from(e: RewriteError) -> Fail {
        match e {
            RewriteError::BudgetExceeded { budget, .. } => Fail {
                code: 4,
                message: format!("step budget of {budget} exceeded"),
            },
            RewriteError::Word(w) => w.into(),
            RewriteError::Shape { .. } => Fail {
                code: 1,
                message: format!("internal error: {e}"),
            },
        }
    }
}

/// One invocation's reduction context: the rule set, the step budget, and a
/// normal-form cache keyed by input letters (dropped when the process exits).
struct Session {
    strands: StrandCount,
    rules: RuleSet,
    budget: usize,
    cache: HashMap<Vec<BandLetter>, BandWord>,
}

impl Session {
    fn new(common: &Common) -> Result<Session, Fail> {
        let strands =
            StrandCount::new(common.strands).map_err(|e| Fail::usage(e.to_string()))?;
        if common.budget == 0 {
            return Err(Fail::usage("budget must be at least 1"));
        }
        Ok(Session {
            strands,
            rules: RuleSet::instantiate(strands),
            budget: common.budget,
            cache: HashMap::new(),
        })
    }

    /// Parses per the `--in` alphabet and converts to a band word.
    fn band_word(&self, text: &str, alphabet: Alphabet) -> Result<BandWord, Fail> {
        Ok(match alphabet {
            Alphabet::Band => BandWord::parse(text, self.strands)?,
            Alphabet::Artin => artin_to_band(&ArtinWord::parse(text, self.strands)?),
        })
    }

    fn normal_form(&mut self, w: &BandWord) -> Result<BandWord, Fail> {
        if let Some(nf) = self.cache.get(w.letters()) {
            return Ok(nf.clone());
        }
        let nf = normal_form(w, &self.rules, self.budget)?;
        self.cache.insert(w.letters().to_vec(), nf.clone());
        Ok(nf)
    }
}

fn emit(value: Value) {
    println!("{value}");
}

fn with_schema(mut value: Value) -> Value {
    value
        .as_object_mut()
        .expect("all JSON payloads are objects")
        .insert("schema".into(), json!(SCHEMA));
    value
}

fn yes_no(answer: bool, yes: &str, no: &str, key: &str, common: &Common) -> Result<u8, Fail> {
    if common.json {
        emit(with_schema(json!({
            "strands": common.strands,
            key: answer,
        })));
    } else {
        println!("{}", if answer { yes } else { no });
    }
    Ok(if answer { 0 } else { 1 })
}

fn run_nf(common: &Common, decompose: bool, words: &[String]) -> Result<u8, Fail> {
    let mut session = Session::new(common)?;
    for text in words {
        let word = session.band_word(text, common.input)?;
        let nf = session.normal_form(&word)?;
        let decomposition = if decompose {
            Some(decompose_normal_form(&nf)?.to_json())
        } else {
            None
        };
        if common.json {
            let mut payload = json!({
                "strands": common.strands,
                "input": text,
                "normal_form": tokens(&nf),
            });
            if let Some(d) = decomposition {
                payload.as_object_mut().unwrap().insert("decomposition".into(), d);
            }
            emit(with_schema(payload));
        } else {
            println!("{}", nf.render());
            if let Some(d) = decomposition {
                emit(with_schema(d));
            }
        }
    }
    Ok(0)
}

fn run_eq(common: &Common, left: &str, right: &str) -> Result<u8, Fail> {
    let mut session = Session::new(common)?;
    let l = session.band_word(left, common.input)?;
    let r = session.band_word(right, common.input)?;
    let equal = session.normal_form(&l)? == session.normal_form(&r)?;
    yes_no(equal, "equal", "distinct", "equal", common)
}

fn run_is_pure(common: &Common, word: &str) -> Result<u8, Fail> {
    let session = Session::new(common)?;
    let w = session.band_word(word, common.input)?;
    let pure = is_pure(&w, &session.rules);
    yes_no(pure, "pure", "not pure", "pure", common)
}

fn run_perm(common: &Common, word: &str) -> Result<u8, Fail> {
    let session = Session::new(common)?;
    let w = session.band_word(word, common.input)?;
    let p = permutation_of(&w);
    if common.json {
        emit(with_schema(json!({
            "strands": common.strands,
            "images": p.images(),
            "tail": sym_normal_form(&p).indices(),
        })));
    } else {
        let images: Vec<String> = p.images().iter().map(usize::to_string).collect();
        println!("{}", images.join(" "));
    }
    Ok(0)
}

fn run_convert(common: &Common, words: &[String]) -> Result<u8, Fail> {
    let session = Session::new(common)?;
    for text in words {
        let (rendered, toks) = match common.input {
            Alphabet::Artin => {
                let w = artin_to_band(&ArtinWord::parse(text, session.strands)?);
                (w.render(), tokens(&w))
            }
            Alphabet::Band => {
                let w = band_to_artin(&BandWord::parse(text, session.strands)?);
                (w.render(), artin_tokens(&w))
            }
        };
        if common.json {
            emit(with_schema(json!({
                "strands": common.strands,
                "input": text,
                "output": toks,
            })));
        } else {
            println!("{rendered}");
        }
    }
    Ok(0)
}

fn run_cmp(common: &Common, left: &str, right: &str) -> Result<u8, Fail> {
    let session = Session::new(common)?;
    let l = session.band_word(left, common.input)?;
    let r = session.band_word(right, common.input)?;
    let name = match compare(&l, &r)? {
        std::cmp::Ordering::Less => "less",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "greater",
    };
    if common.json {
        emit(with_schema(json!({
            "strands": common.strands,
            "ordering": name,
        })));
    } else {
        println!("{name}");
    }
    Ok(0)
}

fn run_rules(common: &Common) -> Result<u8, Fail> {
    let session = Session::new(common)?;
    let list = session.rules.rules();
    if common.json {
        let rules: Vec<Value> = list
            .iter()
            .enumerate()
            .map(|(id, r)| {
                json!({
                    "id": id,
                    "family": r.family().to_string(),
                    "lhs": letter_tokens(r.lhs()),
                    "rhs": letter_tokens(r.rhs()),
                })
            })
            .collect();
        emit(with_schema(json!({
            "strands": common.strands,
            "rule_count": list.len(),
            "rules": rules,
        })));
    } else {
        println!("{} rules over {} strands", list.len(), common.strands);
        for (id, r) in list.iter().enumerate() {
            println!(
                "{id:>4} {:<4} {} -> {}",
                r.family().to_string(),
                letter_tokens(r.lhs()).join(" "),
                letter_tokens(r.rhs()).join(" "),
            );
        }
    }
    Ok(0)
}

fn run_verify(common: &Common) -> Result<u8, Fail> {
    let session = Session::new(common)?;
    let report = verify_rule_set(&session.rules, session.budget).map_err(|e| Fail {
        code: 1,
        message: format!("internal error: {e}"),
    })?;
    if common.json {
        emit(with_schema(report.to_json()));
    } else {
        println!("{report}");
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn run_oracle_eq(common: &Common, left: &str, right: &str) -> Result<u8, Fail> {
    let session = Session::new(common)?;
    let parse = |text: &str| -> Result<ArtinWord, Fail> {
        Ok(match common.input {
            Alphabet::Artin => ArtinWord::parse(text, session.strands)?,
            Alphabet::Band => band_to_artin(&BandWord::parse(text, session.strands)?),
        })
    };
    let equal = oracle_equal(&parse(left)?, &parse(right)?)?;
    yes_no(equal, "equal", "distinct", "equal", common)
}

fn tokens(w: &BandWord) -> Vec<String> {
    letter_tokens(w.letters())
}

fn letter_tokens(letters: &[BandLetter]) -> Vec<String> {
    letters.iter().map(|l| l.to_string()).collect()
}

fn artin_tokens(w: &ArtinWord) -> Vec<String> {
    w.letters().iter().map(|l| l.to_string()).collect()
}

fn dispatch(cli: &Cli) -> Result<u8, Fail> {
    match &cli.command {
        Command::Nf {
            common,
            decompose,
            words,
        } => run_nf(common, *decompose, words),
        Command::Eq {
            common,
            left,
            right,
        } => run_eq(common, left, right),
        Command::IsPure { common, word } => run_is_pure(common, word),
        Command::Perm { common, word } => run_perm(common, word),
        Command::Convert { common, words } => run_convert(common, words),
        Command::Cmp {
            common,
            left,
            right,
        } => run_cmp(common, left, right),
        Command::Rules { common } => run_rules(common),
        Command::Verify { common } => run_verify(common),
        Command::OracleEq {
            common,
            left,
            right,
        } => run_oracle_eq(common, left, right),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(fail) => {
            eprintln!("error: {}", fail.message);
            ExitCode::from(fail.code)
        }
    }
}

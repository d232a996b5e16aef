//! Command-line driver behind the `hg2` binary.
//!
//! Exit codes: 0 on success, 1 on parse errors under `--strict` or on
//! validation violations, 2 on usage or I/O failures.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::document;
use crate::dot;
use crate::hg2::Hg2;
use crate::mapper::{self, IntegrationOptions, IntegrationReport};
use crate::ntriples::{self, Statement};
use crate::traversal::{self, QueryResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hg2",
    version,
    about = "Integrate N-Triples into a hypergraph-graph structure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and integrate inputs, then write the json-doc serialization.
    Build {
        #[command(flatten)]
        inputs: InputArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run one query and print one result per line.
    Query {
        #[command(flatten)]
        inputs: InputArgs,
        #[command(flatten)]
        query: QueryArgs,
        /// Print the result as a JSON document instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Render the built structure as DOT or json-doc.
    Export {
        #[command(flatten)]
        inputs: InputArgs,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check layering, mapping placement and domain/range constraints.
    Validate {
        #[command(flatten)]
        inputs: InputArgs,
    },
    /// Print entity counts.
    Stats {
        #[command(flatten)]
        inputs: InputArgs,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// N-Triples (`.nt`) or json-doc (`.json`) input; repeatable.
    #[arg(long = "input", short = 'i', value_name = "PATH")]
    input: Vec<PathBuf>,
    /// N-Triples schema file, always stratified; repeatable.
    #[arg(long = "schema", short = 's', value_name = "PATH")]
    schema: Vec<PathBuf>,
    /// Fail with exit code 1 if any line fails to parse.
    #[arg(long)]
    strict: bool,
    /// Keep RDFS statements in the hypergraph layer.
    #[arg(long)]
    no_stratify: bool,
    /// Skip rdf:subject/predicate/object/datatype connectors.
    #[arg(long)]
    no_role_connectors: bool,
    /// Give every literal occurrence its own hypernode.
    #[arg(long)]
    no_dedupe_literals: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("query").required(true).multiple(false)))]
struct QueryArgs {
    #[arg(long, value_name = "IRI", group = "query")]
    instances_of: Option<String>,
    #[arg(long, value_name = "IRI", group = "query")]
    statements_about: Option<String>,
    #[arg(long, value_name = "IRI", group = "query")]
    reachable: Option<String>,
    #[arg(long, num_args = 2, value_names = ["FROM", "TO"], group = "query")]
    path: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(name = "json-doc")]
    JsonDoc,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuerySpec {
    InstancesOf(String),
    StatementsAbout(String),
    Reachable(String),
    Path(String, String),
}

/// Resolved settings for one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub input_paths: Vec<PathBuf>,
    pub schema_paths: Vec<PathBuf>,
    pub output_path: Option<PathBuf>,
    pub format: Option<Format>,
    pub query: Option<QuerySpec>,
    pub strict: bool,
    pub options: IntegrationOptions,
}

impl CliConfig {
    fn from_inputs(inputs: InputArgs) -> Self {
        CliConfig {
            input_paths: inputs.input,
            schema_paths: inputs.schema,
            output_path: None,
            format: None,
            query: None,
            strict: inputs.strict,
            options: IntegrationOptions {
                stratify_schema: !inputs.no_stratify,
                generate_role_connectors: !inputs.no_role_connectors,
                dedupe_literals: !inputs.no_dedupe_literals,
            },
        }
    }
}

/// Accepts `<iri>` or a bare IRI.
fn strip_angles(iri: &str) -> String {
    iri.strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .unwrap_or(iri)
        .to_owned()
}

impl From<QueryArgs> for QuerySpec {
    fn from(q: QueryArgs) -> Self {
        if let Some(c) = q.instances_of {
            QuerySpec::InstancesOf(strip_angles(&c))
        } else if let Some(s) = q.statements_about {
            QuerySpec::StatementsAbout(strip_angles(&s))
        } else if let Some(r) = q.reachable {
            QuerySpec::Reachable(strip_angles(&r))
        } else {
            let p = q.path.unwrap_or_default();
            QuerySpec::Path(strip_angles(&p[0]), strip_angles(&p[1]))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Build { inputs, output } => {
            let mut config = CliConfig::from_inputs(inputs);
            config.output_path = output;
            cmd_build(&config, stdout, stderr)
        }
        Command::Query { inputs, query, json } => {
            let mut config = CliConfig::from_inputs(inputs);
            config.query = Some(query.into());
            cmd_query(&config, json, stdout, stderr)
        }
        Command::Export {
            inputs,
            format,
            output,
        } => {
            let mut config = CliConfig::from_inputs(inputs);
            config.format = Some(format);
            config.output_path = output;
            cmd_export(&config, stdout, stderr)
        }
        Command::Validate { inputs } => cmd_validate(&CliConfig::from_inputs(inputs), stdout, stderr),
        Command::Stats { inputs } => cmd_stats(&CliConfig::from_inputs(inputs), stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// A usage or I/O failure; always exit code 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

struct Loaded {
    hg2: Hg2,
    report: IntegrationReport,
    parse_errors: usize,
}

fn is_json_doc(path: &Path, bytes: &[u8]) -> bool {
    path.extension().is_some_and(|e| e == "json")
        || bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{')
}

fn read_statements(path: &Path, bytes: &[u8], stderr: &mut dyn Write) -> (Vec<Statement>, usize) {
    match ntriples::parse_document(bytes) {
        Ok(doc) => {
            for err in &doc.errors {
                let _ = writeln!(stderr, "{}: {err}", path.display());
            }
            (doc.statements, doc.errors.len())
        }
        Err(err) => {
            let _ = writeln!(stderr, "{}: {err}", path.display());
            (Vec::new(), 1)
        }
    }
}

fn load(config: &CliConfig, stderr: &mut dyn Write) -> Result<Loaded, Failure> {
    if config.input_paths.is_empty() && config.schema_paths.is_empty() {
        return Err(Failure("no input given; use --input or --schema".into()));
    }
    let mut base: Option<Hg2> = None;
    let mut instance = Vec::new();
    let mut schema = Vec::new();
    let mut parse_errors = 0;

    for path in &config.input_paths {
        let bytes = fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        if is_json_doc(path, &bytes) {
            if base.is_some() {
                return Err(Failure("at most one json-doc input is supported".into()));
            }
            let text = String::from_utf8(bytes)
                .map_err(|_| Failure(format!("{}: not valid UTF-8", path.display())))?;
            let hg2 =
                document::deserialize(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            base = Some(hg2);
        } else {
            let (stmts, errors) = read_statements(path, &bytes, stderr);
            instance.extend(stmts);
            parse_errors += errors;
        }
    }
    for path in &config.schema_paths {
        let bytes = fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        let (stmts, errors) = read_statements(path, &bytes, stderr);
        schema.extend(stmts);
        parse_errors += errors;
    }

    let had_base = base.is_some();
    let mut hg2 = base.unwrap_or_else(Hg2::with_builtin_vocabulary);
    let mut report = IntegrationReport::default();
    let integrate = |hg2: &mut Hg2, stmts: &[Statement], options: &IntegrationOptions| {
        mapper::integrate_into(hg2, stmts, options).map_err(|e| Failure(e.to_string()))
    };
    // A lone json-doc is taken as-is so validation sees exactly what was stored.
    if !schema.is_empty() || !had_base {
        let forced = IntegrationOptions {
            stratify_schema: true,
            ..config.options
        };
        report.merge(integrate(&mut hg2, &schema, &forced)?);
    }
    if !instance.is_empty() {
        report.merge(integrate(&mut hg2, &instance, &config.options)?);
    }
    Ok(Loaded {
        hg2,
        report,
        parse_errors,
    })
}

fn strict_failure(config: &CliConfig, loaded: &Loaded, stderr: &mut dyn Write) -> bool {
    if config.strict && loaded.parse_errors > 0 {
        let _ = writeln!(
            stderr,
            "error: {} line(s) failed to parse (--strict)",
            loaded.parse_errors
        );
        true
    } else {
        false
    }
}

fn emit(config: &CliConfig, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &config.output_path {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

pub fn cmd_build(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let loaded = load(config, stderr)?;
    if strict_failure(config, &loaded, stderr) {
        return Ok(EXIT_INVALID);
    }
    emit(config, &document::serialize(&loaded.hg2), stdout)?;
    let _ = writeln!(stderr, "{}", loaded.report);
    Ok(EXIT_OK)
}

fn node_lines(hg2: &Hg2, result: &QueryResult) -> Vec<String> {
    result
        .node_ids()
        .map(|n| {
            hg2.payload(n)
                .map(ToString::to_string)
                .unwrap_or_else(|| n.to_string())
        })
        .collect()
}

fn edge_lines(hg2: &Hg2, result: &QueryResult) -> Vec<String> {
    result
        .edge_ids()
        .map(|e| {
            traversal::edge_statement(hg2, e)
                .map(|s| s.to_string())
                .unwrap_or_else(|| e.to_string())
        })
        .collect()
}

pub fn cmd_query(
    config: &CliConfig,
    json: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let query = config
        .query
        .as_ref()
        .ok_or_else(|| Failure("no query given".into()))?;
    let loaded = load(config, stderr)?;
    if strict_failure(config, &loaded, stderr) {
        return Ok(EXIT_INVALID);
    }
    let hg2 = &loaded.hg2;
    let (found, result, lines) = match query {
        QuerySpec::InstancesOf(iri) => {
            let r = traversal::instances_of(hg2, iri);
            let lines = node_lines(hg2, &r);
            (None, r, lines)
        }
        QuerySpec::Reachable(iri) => {
            let r = traversal::reachable_from(hg2, iri);
            let lines = node_lines(hg2, &r);
            (None, r, lines)
        }
        QuerySpec::StatementsAbout(iri) => {
            let r = traversal::statements_about(hg2, iri);
            let lines = edge_lines(hg2, &r);
            (None, r, lines)
        }
        QuerySpec::Path(from, to) => match traversal::path_exists(hg2, from, to) {
            Some(r) => {
                let mut lines = vec!["true".to_owned()];
                lines.extend(edge_lines(hg2, &r));
                (Some(true), r, lines)
            }
            None => {
                let r = QueryResult {
                    kind: traversal::ResultKind::Path,
                    items: Vec::new(),
                    provenance: Vec::new(),
                };
                (Some(false), r, vec!["false".to_owned()])
            }
        },
    };
    if json {
        let value = serde_json::json!({ "found": found, "result": result, "lines": lines });
        let text = serde_json::to_string_pretty(&value).expect("plain data");
        writeln!(stdout, "{text}")?;
    } else {
        for line in lines {
            writeln!(stdout, "{line}")?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_export(
    config: &CliConfig,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let format = config
        .format
        .ok_or_else(|| Failure("--format is required".into()))?;
    let loaded = load(config, stderr)?;
    if strict_failure(config, &loaded, stderr) {
        return Ok(EXIT_INVALID);
    }
    let text = match format {
        Format::Dot => dot::to_dot(&loaded.hg2),
        Format::JsonDoc => document::serialize(&loaded.hg2),
    };
    emit(config, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_validate(
    config: &CliConfig,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let loaded = load(config, stderr)?;
    let hg2 = &loaded.hg2;
    let layering = hg2.validate_layering();
    let mapping = mapper::validate_mapping(hg2);
    for v in &layering {
        writeln!(stdout, "violation: {v}")?;
    }
    for v in &mapping {
        writeln!(stdout, "violation: {v}")?;
    }
    let conflicts = loaded
        .report
        .warnings
        .iter()
        .filter(|w| !matches!(w, mapper::Warning::Mapping(_)));
    for w in conflicts.chain(&mapper::check_domain_range(hg2)) {
        writeln!(stdout, "warning: {w}")?;
    }
    let violations = layering.len() + mapping.len();
    writeln!(stdout, "{violations} violation(s)")?;
    if strict_failure(config, &loaded, stderr) || violations > 0 {
        Ok(EXIT_INVALID)
    } else {
        Ok(EXIT_OK)
    }
}

pub fn cmd_stats(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let loaded = load(config, stderr)?;
    if strict_failure(config, &loaded, stderr) {
        return Ok(EXIT_INVALID);
    }
    writeln!(stdout, "{}", loaded.hg2.stats())?;
    Ok(EXIT_OK)
}

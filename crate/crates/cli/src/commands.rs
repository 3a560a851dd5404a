use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use edgeforge::analysis::{compare_operators, diff_maps, CompareSummary, Failure, StatsRow};
use edgeforge::canny::{canny_pipeline, gradient_with, ThresholdConfig};
use edgeforge::imgcore::io::{decode_gray, encode_edges, encode_gray, encode_rgb_png};
use edgeforge::imgcore::{gaussian_taps, Image};
use edgeforge::kernels::{derivation_weights, derive_kernel, registry_entries, registry_get, Axis, Operator};
use serde::Serialize;

use crate::args::{CompareArgs, KernelArgs, RunArgs};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::json;
use crate::output::{sha256_hex, write_atomic, write_json, CommandKind, InputRecord, Manifest};

/// File extensions picked up when `compare` is given a directory.
const IMAGE_EXTENSIONS: [&str; 6] = ["png", "pgm", "pnm", "ppm", "jpg", "jpeg"];

struct Resolved {
    input: PathBuf,
    config: RunConfig,
    /// Input hashes recorded by the manifest, when the run reuses its input.
    expected: Option<Vec<InputRecord>>,
}

fn resolve(kind: CommandKind, args: &RunArgs) -> CliResult<Resolved> {
    let (base, from_manifest) = match args.manifest.as_deref() {
        Some(path) => {
            let m = Manifest::load(path).map_err(CliError::input)?;
            if m.command != kind {
                return Err(CliError::input(anyhow!(
                    "manifest {} records a {:?} run, not {:?}",
                    path.display(),
                    m.command,
                    kind
                )));
            }
            (m.config.clone(), Some(m))
        }
        None => (RunConfig::default(), None),
    };
    let config = args.config.apply(base);
    let (input, expected) = match (args.input.as_deref(), &from_manifest) {
        (Some(p), _) => (p.to_path_buf(), None),
        (None, Some(m)) => (m.input.clone(), Some(m.inputs.clone())),
        (None, None) => return Err(CliError::input(anyhow!("no input given"))),
    };
    validate(&config)?;
    Ok(Resolved {
        input,
        config,
        expected,
    })
}

fn validate(cfg: &RunConfig) -> CliResult<()> {
    registry_get(cfg.operator, cfg.size)?;
    if let Some(b) = cfg.operator_b {
        registry_get(b, cfg.size)?;
    }
    ThresholdConfig::new(cfg.sigma_fraction)?;
    gaussian_taps(cfg.gaussian_sigma, cfg.gaussian_radius)?;
    if cfg.min_edge_size == 0 {
        return Err(CliError::input(anyhow!("--min-edge-size must be at least 1")));
    }
    Ok(())
}

fn check_inputs(expected: &Option<Vec<InputRecord>>, actual: &[InputRecord]) -> CliResult<()> {
    match expected {
        Some(e) if e != actual => Err(CliError::input(anyhow!(
            "inputs no longer match the manifest (files changed since the recorded run)"
        ))),
        _ => Ok(()),
    }
}

fn read_input(path: &Path) -> CliResult<(Image, InputRecord)> {
    let bytes = fs::read(path).map_err(|source| edgeforge::Error::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let image = decode_gray(&bytes).map_err(|e| edgeforge::Error::Decode {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    let record = InputRecord {
        path: path.to_path_buf(),
        sha256: sha256_hex(&bytes),
    };
    Ok((image, record))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "image".into())
}

/// Writes `bytes` as `name` in the output directory and records it.
fn emit(manifest: &mut Manifest, name: String, bytes: &[u8]) -> CliResult<()> {
    write_atomic(&manifest.config.out.join(&name), bytes)?;
    manifest.outputs.push(name);
    Ok(())
}

pub fn gradient(args: &RunArgs) -> CliResult<()> {
    let r = resolve(CommandKind::Gradient, args)?;
    let (image, record) = read_input(&r.input)?;
    check_inputs(&r.expected, std::slice::from_ref(&record))?;

    let cfg = &r.config;
    let pair = cfg.operator_spec().pair()?;
    let field = gradient_with(&image, &pair, cfg.norm, cfg.padding)?;

    let mut manifest = Manifest::new(CommandKind::Gradient, &r.input, cfg);
    manifest.inputs.push(record);
    let name = format!("{}.magnitude.{}", stem(&r.input), cfg.format.extension());
    emit(&mut manifest, name, &encode_gray(&field.magnitude, cfg.format)?)?;
    manifest.save()?;
    Ok(())
}

pub fn canny(args: &RunArgs) -> CliResult<()> {
    let r = resolve(CommandKind::Canny, args)?;
    let (image, record) = read_input(&r.input)?;
    check_inputs(&r.expected, std::slice::from_ref(&record))?;

    let cfg = &r.config;
    let op = cfg.operator_spec();
    let out = canny_pipeline(&image, &op, &cfg.canny_params())?;

    let mut manifest = Manifest::new(CommandKind::Canny, &r.input, cfg);
    manifest.inputs.push(record);
    let base = stem(&r.input);
    emit(
        &mut manifest,
        format!("{base}.edges.{}", cfg.format.extension()),
        &encode_edges(&out.edges, cfg.format)?,
    )?;
    emit(
        &mut manifest,
        format!("{base}.canny.json"),
        &json::to_bytes(&out.diagnostics(&op))?,
    )?;
    if cfg.timings {
        // deliberately left out of the manifest: timings never reproduce
        write_json(&cfg.out.join(format!("{base}.timings.json")), &out.timings)?;
    }
    manifest.save()?;
    Ok(())
}

fn collect_corpus(input: &Path) -> CliResult<Vec<PathBuf>> {
    let meta = fs::metadata(input).map_err(|source| edgeforge::Error::Read {
        path: input.to_path_buf(),
        source,
    })?;
    if !meta.is_dir() {
        return Ok(vec![input.to_path_buf()]);
    }
    let entries = fs::read_dir(input)
        .with_context(|| format!("failed to list {}", input.display()))
        .map_err(CliError::input)?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::input(e.into()))?.path();
        let is_image = path
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| IMAGE_EXTENSIONS.contains(&e.to_ascii_lowercase().as_str()));
        if path.is_file() && is_image {
            files.push(path);
        }
    }
    if files.is_empty() {
        return Err(CliError::input(anyhow!("no images found in {}", input.display())));
    }
    files.sort();
    Ok(files)
}

#[derive(Serialize)]
struct CompareJson<'a> {
    operator_a: &'a str,
    operator_b: &'a str,
    min_edge_size: usize,
    summary: CompareSummary,
    rows: Vec<StatsRow>,
    failures: &'a [Failure],
}

pub fn compare(args: &CompareArgs) -> CliResult<()> {
    let mut r = resolve(CommandKind::Compare, &args.run)?;
    if let Some(b) = args.operator_b {
        r.config.operator_b = Some(b);
    }
    r.config.operator_b.get_or_insert(Operator::Sobel);
    validate(&r.config)?;
    let cfg = &r.config;

    let corpus = collect_corpus(&r.input)?;
    // unreadable files are left out here and reported as failures below
    let records: Vec<InputRecord> = corpus
        .iter()
        .filter_map(|p| {
            fs::read(p).ok().map(|b| InputRecord {
                path: p.clone(),
                sha256: sha256_hex(&b),
            })
        })
        .collect();
    check_inputs(&r.expected, &records)?;

    let op_a = cfg.operator_spec();
    let op_b = cfg.operator_b_spec();
    let report = compare_operators(&corpus, &op_a, &op_b, &cfg.canny_params(), cfg.min_edge_size);

    let mut manifest = Manifest::new(CommandKind::Compare, &r.input, cfg);
    manifest.inputs = records;
    for c in &report.images {
        let diff = diff_maps(&c.edges_a, &c.edges_b)?;
        emit(
            &mut manifest,
            format!("{}.diff.png", stem(Path::new(&c.image))),
            &encode_rgb_png(&diff.composite())?,
        )?;
    }

    let rows = report.stats_rows();
    let mut csv = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        csv.serialize(row).context("writing stats row")?;
    }
    let csv = csv.into_inner().map_err(|e| anyhow!("flushing stats table: {e}"))?;
    emit(&mut manifest, "stats.csv".into(), &csv)?;

    let json = CompareJson {
        operator_a: &report.operator_a,
        operator_b: &report.operator_b,
        min_edge_size: cfg.min_edge_size,
        summary: report.summary,
        rows,
        failures: &report.failures,
    };
    emit(&mut manifest, "report.json".into(), &json::to_bytes(&json)?)?;
    manifest.save()?;

    for f in &report.failures {
        eprintln!("warning: skipped {}: {}", f.image, f.error);
    }
    let s = report.summary;
    println!(
        "{} vs {} over {} images ({} failed): more edge pixels on {}/{n}, at least as many on {}/{n}, \
         more edges on {}/{n}, longer edges on {}/{n}",
        report.operator_a,
        report.operator_b,
        s.images,
        s.failures,
        s.a_more_edge_pixels,
        s.a_at_least_edge_pixels,
        s.a_more_edges,
        s.a_longer_edges,
        n = s.images,
    );
    Ok(())
}

#[derive(Serialize)]
struct KernelJson {
    operator: Operator,
    aliases: Vec<Operator>,
    size: usize,
    gx: Vec<Vec<i64>>,
    gy: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    derived: Option<DerivedJson>,
}

#[derive(Serialize)]
struct DerivedJson {
    /// `match`, `mismatch`, or `none` for operators without a weight scheme.
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gx: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gy: Option<Vec<Vec<i64>>>,
}

fn derive_entry(op: Operator, size: usize, gx: &[Vec<i64>], gy: &[Vec<i64>]) -> CliResult<DerivedJson> {
    let Some(w) = derivation_weights(op, size)? else {
        return Ok(DerivedJson {
            status: "none",
            weights: None,
            gx: None,
            gy: None,
        });
    };
    let dx = derive_kernel(&w, Axis::X)?.rows();
    let dy = derive_kernel(&w, Axis::Y)?.rows();
    Ok(DerivedJson {
        status: if dx == gx && dy == gy { "match" } else { "mismatch" },
        weights: Some(w.rows()),
        gx: Some(dx),
        gy: Some(dy),
    })
}

fn aliases(op: Operator, size: usize) -> Vec<Operator> {
    match (op, size) {
        (Operator::ProposedA, 3) => vec![Operator::ProposedB],
        (Operator::ProposedB, 3) => vec![Operator::ProposedA],
        _ => Vec::new(),
    }
}

pub fn kernels(args: &KernelArgs) -> CliResult<()> {
    let selected: Vec<(Operator, usize)> = match args.name {
        Some(op) => match args.size {
            Some(size) => vec![(op, size)],
            None => vec![(op, 3), (op, 5)],
        },
        None => registry_entries()
            .into_iter()
            .filter(|e| args.size.is_none_or(|s| s == e.size))
            .map(|e| (e.operator, e.size))
            .collect(),
    };
    if selected.is_empty() {
        let size = args.size.unwrap_or_default();
        return Err(CliError::input(anyhow!(
            "no operator has a {size}x{size} kernel (valid sizes: 3, 5)"
        )));
    }

    let mut out = Vec::with_capacity(selected.len());
    for (op, size) in selected {
        let pair = registry_get(op, size)?;
        let (gx, gy) = (pair.gx.rows(), pair.gy.rows());
        let derived = if args.derive {
            Some(derive_entry(op, size, &gx, &gy)?)
        } else {
            None
        };
        out.push(KernelJson {
            operator: op,
            aliases: aliases(op, size),
            size,
            gx,
            gy,
            derived,
        });
    }
    let text = json::to_bytes(&out).context("serializing kernels")?;
    std::io::Write::write_all(&mut std::io::stdout().lock(), &text).context("writing to stdout")?;
    Ok(())
}

//! Command-line interface. Every subcommand's stdout is deterministic given
//! its flags (timings in `bench` excepted), file writes are atomic, and the
//! exit code is 2 for usage errors, 1 for computation or I/O failures, and
//! 0 otherwise.

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use shearlet_core::{render, Shape, ShearletVariant, SpectraCube};

use crate::error::{Error, Result};
use crate::framecheck::{self, FrameReport};
use crate::transform::{compensated_sum, variant_name, ShearletTransform, SpectraKey};
use crate::{cache, container, pgm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Classic,
    Smooth,
}

impl From<VariantArg> for ShearletVariant {
    fn from(arg: VariantArg) -> ShearletVariant {
        match arg {
            VariantArg::Classic => ShearletVariant::Classic,
            VariantArg::Smooth => ShearletVariant::Smooth,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Ball,
    Square,
    Rhombus,
    Picture,
}

#[derive(Debug, Parser)]
#[command(
    name = "shearlet",
    version,
    about = "Translation-invariant shearlet decomposition of square images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose a PGM image into a coefficient container.
    Transform {
        /// Input image, binary (P5) or text (P2) PGM.
        input: PathBuf,
        /// Output coefficient container (FFSC).
        #[arg(short, long)]
        output: PathBuf,
        /// Scale count; defaults to the largest the image size supports.
        #[arg(long)]
        scales: Option<u32>,
        #[arg(long, value_enum, default_value_t = VariantArg::Classic)]
        variant: VariantArg,
        /// Spectra container (FFSP) reused when present, written otherwise.
        #[arg(long)]
        spectra_cache: Option<PathBuf>,
    },
    /// Reconstruct a PGM image from a coefficient container.
    Inverse {
        /// Input coefficient container (FFSC).
        input: PathBuf,
        /// Output image (binary PGM).
        #[arg(short, long)]
        output: PathBuf,
        /// Spectra container (FFSP) reused when present, written otherwise.
        #[arg(long)]
        spectra_cache: Option<PathBuf>,
    },
    /// Build the spectra for a grid size and save them.
    Spectra {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        scales: Option<u32>,
        #[arg(long, value_enum, default_value_t = VariantArg::Classic)]
        variant: VariantArg,
        /// Output spectra container (FFSP).
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Verify frame tightness, roundtrip exactness, and energy preservation.
    Check {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        scales: Option<u32>,
        #[arg(long, value_enum, default_value_t = VariantArg::Classic)]
        variant: VariantArg,
        /// Random images per check.
        #[arg(long, default_value_t = 5)]
        trials: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Time cold and warm transform passes per size.
    Bench {
        /// Comma-separated grid sizes, for example 32,64,128.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        repeats: u32,
        /// Run per-plane work on all cores (results stay bitwise identical).
        #[arg(long)]
        parallel: bool,
        /// Emit every report column instead of the timing summary.
        #[arg(long)]
        full: bool,
    },
    /// Render a test image.
    Generate {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        #[arg(long)]
        size: usize,
        /// Output image (binary PGM).
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Per-band energy table of a coefficient or spectra container.
    Energy {
        /// Input container (FFSC or FFSP).
        input: PathBuf,
    },
}

/// Parses `argv` and runs the selected command. Usage errors exit with
/// code 2 (via clap), failures print to stderr and return 1.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        // A downstream consumer such as `head` closing stdout early is not a
        // failure; exit quietly.
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn execute(command: Command) -> Result<ExitCode> {
    match command {
        Command::Transform {
            input,
            output,
            scales,
            variant,
            spectra_cache,
        } => {
            let image = pgm::read_image(&input)?;
            let spectra =
                load_or_build_spectra(image.n(), scales, variant.into(), spectra_cache.as_deref())?;
            let coeffs = ShearletTransform::new(spectra).forward(&image)?;
            container::write_coefficients(&coeffs, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Inverse {
            input,
            output,
            spectra_cache,
        } => {
            let coeffs = container::read_coefficients(&input)?;
            let key = coeffs.key();
            let spectra = load_or_build_spectra(
                key.n,
                Some(key.scales),
                key.variant,
                spectra_cache.as_deref(),
            )?;
            let image = ShearletTransform::new(spectra).inverse(&coeffs)?;
            pgm::write_image(&image, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectra {
            size,
            scales,
            variant,
            output,
        } => {
            let spectra = cache::spectra_for(size, scales, variant.into())?;
            container::write_spectra(&spectra, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            size,
            scales,
            variant,
            trials,
            seed,
        } => {
            let report = framecheck::verify(size, scales, variant.into(), trials, seed)?;
            let mut out = io::stdout().lock();
            writeln!(out, "tiling_dev={:e}", report.max_tiling_deviation)?;
            writeln!(out, "roundtrip_err={:e}", report.roundtrip_max_error)?;
            writeln!(out, "parseval_rel={:e}", report.parseval_rel_error)?;
            Ok(if report.passes() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bench {
            sizes,
            repeats,
            parallel,
            full,
        } => {
            let reports = framecheck::bench(&sizes, repeats, parallel)?;
            let mut out = io::stdout().lock();
            if full {
                writeln!(out, "{}", FrameReport::tsv_header())?;
                for report in &reports {
                    writeln!(out, "{}", report.to_tsv())?;
                }
            } else {
                writeln!(out, "size\tcold_s\twarm_s\tinverse_s")?;
                for report in &reports {
                    writeln!(
                        out,
                        "{}\t{:.6}\t{:.6}\t{:.6}",
                        report.n,
                        report.cold_seconds,
                        report.forward_seconds,
                        report.inverse_seconds
                    )?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            shape,
            size,
            output,
        } => {
            let shape = match shape {
                ShapeArg::Ball => Shape::ball(0.5, 0.5, 0.5),
                ShapeArg::Square => Shape::square(0.5, 0.5, 0.5),
                ShapeArg::Rhombus => Shape::rhombus(0.5, 0.5, 0.5),
                ShapeArg::Picture => Shape::picture(),
            };
            let image = render(&shape, size)?;
            pgm::write_image(&image, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Energy { input } => {
            energy_table(&input)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Uses the spectra container at `path` when it exists (its key must match),
/// otherwise builds the spectra and, when a path was given, saves them.
fn load_or_build_spectra(
    n: usize,
    scales: Option<u32>,
    variant: ShearletVariant,
    path: Option<&Path>,
) -> Result<Arc<SpectraCube>> {
    if let Some(path) = path {
        if path.exists() {
            let cube = container::read_spectra(path)?;
            let expected = SpectraKey {
                n,
                scales: scales.unwrap_or_else(|| {
                    shearlet_core::FrequencyGrid::new(n, None)
                        .map(|g| g.scales())
                        .unwrap_or(0)
                }),
                variant,
            };
            let actual = SpectraKey::of(&cube);
            if actual != expected {
                return Err(Error::KeyMismatch { expected, actual });
            }
            return Ok(cache::insert(cube));
        }
        let spectra = cache::spectra_for(n, scales, variant)?;
        container::write_spectra(&spectra, path)?;
        return Ok(spectra);
    }
    cache::spectra_for(n, scales, variant)
}

/// Prints the per-band energy table for either container kind.
fn energy_table(input: &Path) -> Result<()> {
    let (key, energies): (SpectraKey, Vec<f64>) = match container::sniff_kind(input)? {
        container::ContainerKind::Coefficients => {
            let coeffs = container::read_coefficients(input)?;
            (coeffs.key(), coeffs.band_energy())
        }
        container::ContainerKind::Spectra => {
            let cube = container::read_spectra(input)?;
            let energies = cube
                .planes()
                .iter()
                .map(|p| compensated_sum(p.iter().map(|v| v * v)))
                .collect();
            (SpectraKey::of(&cube), energies)
        }
    };
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "# n={} scales={} variant={} eta={}",
        key.n,
        key.scales,
        variant_name(key.variant),
        energies.len()
    )?;
    writeln!(out, "flat\tkind\tj\tk\tenergy")?;
    for (i, energy) in energies.iter().enumerate() {
        let flat = (i + 1) as u32;
        let band = shearlet_core::Band::from_flat(flat, key.scales)?;
        let j = band.j().map_or_else(|| "-".into(), |j| j.to_string());
        let k = band.k().map_or_else(|| "-".into(), |k| k.to_string());
        writeln!(out, "{flat}\t{}\t{j}\t{k}\t{energy:e}", band.label())?;
    }
    Ok(())
}

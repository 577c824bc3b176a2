//! Files written by a run. Every float goes out as `{:.16e}`, which is 17
//! significant digits and round-trips exactly.

use crate::CliError;
use pauli_pse::pse::SpinorField;
use serde::Serialize;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

struct ExactFloats<'a>(serde_json::ser::PrettyFormatter<'a>);

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*);)*) => {
        $(
            fn $name<W: ?Sized + Write>(&mut self, w: &mut W $(, $arg: $ty)*) -> io::Result<()> {
                self.0.$name(w $(, $arg)*)
            }
        )*
    };
}

impl serde_json::ser::Formatter for ExactFloats<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        w.write_all(fmt_f64(v).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, v: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(v))
    }

    delegate! {
        begin_array();
        end_array();
        begin_array_value(first: bool);
        end_array_value();
        begin_object();
        end_object();
        begin_object_key(first: bool);
        begin_object_value();
        end_object_value();
    }
}

/// Pretty JSON with exact floats and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(
        &mut buf,
        ExactFloats(serde_json::ser::PrettyFormatter::new()),
    );
    value
        .serialize(&mut ser)
        .map_err(|e| CliError::Io(format!("cannot serialize report: {e}")))?;
    buf.push(b'\n');
    Ok(buf)
}

/// Collects output files under one directory.
pub struct OutputDir {
    root: PathBuf,
    written: Vec<String>,
}

impl OutputDir {
    pub fn create(root: &Path) -> Result<Self, CliError> {
        fs::create_dir_all(root).map_err(|e| io_error(root, e))?;
        Ok(Self {
            root: root.to_path_buf(),
            written: Vec::new(),
        })
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.root.join(name)
    }

    /// File names written so far, in order.
    pub fn written(&self) -> &[String] {
        &self.written
    }

    pub fn write_bytes(&mut self, name: &str, bytes: &[u8]) -> Result<(), CliError> {
        let path = self.path(name);
        fs::write(&path, bytes).map_err(|e| io_error(&path, e))?;
        self.written.push(name.to_string());
        Ok(())
    }

    /// Writes a CSV whose cells are floats.
    pub fn write_csv(&mut self, name: &str, header: &[&str], rows: &[Vec<f64>]) -> Result<(), CliError> {
        let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|v| fmt_f64(*v)).collect()).collect();
        self.write_table(name, header, &cells)
    }

    pub fn write_table(&mut self, name: &str, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| CliError::Io(format!("{name}: {e}"));
        w.write_record(header).map_err(csv_err)?;
        for row in rows {
            w.write_record(row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(format!("{name}: {e}")))?;
        self.write_bytes(name, &bytes)
    }

    /// Snapshot with columns `q,density,re_a,im_a,re_b,im_b`.
    pub fn write_snapshot(&mut self, name: &str, psi: &SpinorField) -> Result<(), CliError> {
        let rows: Vec<Vec<f64>> = psi
            .grid
            .positions()
            .into_iter()
            .zip(psi.density())
            .zip(psi.a.iter().zip(&psi.b))
            .map(|((q, d), (a, b))| vec![q, d, a.re, a.im, b.re, b.im])
            .collect();
        self.write_csv(name, &["q", "density", "re_a", "im_a", "re_b", "im_b"], &rows)
    }
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

pub const OUT_DIR_VAR: &str = "HIDESIGN_OUT_DIR";

pub enum Sink {
    Stdout(io::StdoutLock<'static>),
    File(BufWriter<File>),
}

impl Sink {
    pub fn open(path: Option<&Path>) -> io::Result<Sink> {
        match path {
            None => Ok(Sink::Stdout(io::stdout().lock())),
            Some(p) => {
                let full = resolve(p);
                if let Some(dir) = full.parent().filter(|d| !d.as_os_str().is_empty()) {
                    std::fs::create_dir_all(dir)?;
                }
                Ok(Sink::File(BufWriter::new(File::create(full)?)))
            }
        }
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self, "{s}")
    }

    pub fn finish(mut self) -> Result<(), String> {
        self.flush().map_err(|e| e.to_string())
    }
}

fn resolve(p: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if p.is_relative() => Path::new(&dir).join(p),
        _ => p.to_path_buf(),
    }
}

impl Write for Sink {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        match self {
            Sink::Stdout(s) => s.write(buf),
            Sink::File(f) => f.write(buf),
        }
    }

    fn flush(&mut self) -> io::Result<()> {
        match self {
            Sink::Stdout(s) => s.flush(),
            Sink::File(f) => f.flush(),
        }
    }
}

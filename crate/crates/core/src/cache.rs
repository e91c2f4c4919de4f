//! On-disk cache of Bruhat cover tables.
//!
//! Enabled by pointing `SCHUBERT_CACHE_DIR` at a writable directory. The
//! file layout is private to this crate and versioned; any file that does
//! not match the current version or the requested diagram is ignored and
//! rewritten.
//!
//! Layout (little endian): magic `SCBC`, `u32` version, `u32` type-string
//! length and bytes, `u32` marked node, `u32` element count, then per
//! element a `u32` cover count followed by `(u32 target, u16 root)` pairs.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const CACHE_ENV: &str = "SCHUBERT_CACHE_DIR";
const MAGIC: &[u8; 4] = b"SCBC";
const VERSION: u32 = 1;

/// Upward covers per element: `(target index, reflecting root id)`.
pub type CoverTable = Vec<Vec<(u32, u16)>>;

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|s| !s.is_empty())
        .map(PathBuf::from)
}

fn file_name(ty: &str, k: usize) -> String {
    format!("{ty}-{}.covers", k + 1)
}

fn encode(ty: &str, k: usize, table: &CoverTable) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(ty.len() as u32).to_le_bytes());
    out.extend_from_slice(ty.as_bytes());
    out.extend_from_slice(&(k as u32).to_le_bytes());
    out.extend_from_slice(&(table.len() as u32).to_le_bytes());
    for row in table {
        out.extend_from_slice(&(row.len() as u32).to_le_bytes());
        for &(t, r) in row {
            out.extend_from_slice(&t.to_le_bytes());
            out.extend_from_slice(&r.to_le_bytes());
        }
    }
    out
}

struct Reader<'a> {
    buf: &'a [u8],
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> Option<&[u8]> {
        if self.buf.len() < n {
            return None;
        }
        let (a, b) = self.buf.split_at(n);
        self.buf = b;
        Some(a)
    }

    fn u32(&mut self) -> Option<u32> {
        self.take(4).map(|b| u32::from_le_bytes(b.try_into().unwrap()))
    }

    fn u16(&mut self) -> Option<u16> {
        self.take(2).map(|b| u16::from_le_bytes(b.try_into().unwrap()))
    }
}

fn decode(buf: &[u8], ty: &str, k: usize, n: usize) -> Option<CoverTable> {
    let mut r = Reader { buf };
    if r.take(4)? != MAGIC || r.u32()? != VERSION {
        return None;
    }
    let tl = r.u32()? as usize;
    if r.take(tl)? != ty.as_bytes() || r.u32()? as usize != k || r.u32()? as usize != n {
        return None;
    }
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let c = r.u32()? as usize;
        let mut row = Vec::with_capacity(c);
        for _ in 0..c {
            let t = r.u32()?;
            if t as usize >= n {
                return None;
            }
            row.push((t, r.u16()?));
        }
        table.push(row);
    }
    r.buf.is_empty().then_some(table)
}

pub fn load(dir: &Path, ty: &str, k: usize, n: usize) -> Option<CoverTable> {
    let buf = fs::read(dir.join(file_name(ty, k))).ok()?;
    decode(&buf, ty, k, n)
}

/// Best effort: failures to write leave the cache untouched.
pub fn store(dir: &Path, ty: &str, k: usize, table: &CoverTable) {
    let _ = (|| -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let path = dir.join(file_name(ty, k));
        let tmp = dir.join(format!("{}.{}.tmp", file_name(ty, k), std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&encode(ty, k, table))?;
        f.sync_all()?;
        fs::rename(tmp, path)
    })();
}

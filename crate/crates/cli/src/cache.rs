//! On-disk memo tables, one file per class `μ`.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic      8 bytes  "SGMNCACH"
//! version    u16      FORMAT_VERSION
//! mu         u32 count, then count x u32 parts
//! entries    u64 count, then per entry:
//!              suffix_index u32
//!              shape        u32 count, then count x u32 parts
//!              value        i8 sign (-1, 0, 1), u32 byte count, magnitude bytes
//! checksum   32 bytes SHA-256 of everything above
//! ```
//!
//! Anything unreadable is reported on stderr and ignored, so the run falls
//! back to recomputation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::{BigInt, Sign};
use sha2::{Digest, Sha256};
use sign_classes::{CharValue, Evaluator, MemoKey, Partition};
use thiserror::Error;

const MAGIC: &[u8; 8] = b"SGMNCACH";
pub const FORMAT_VERSION: u16 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("truncated file")]
    Truncated,
    #[error("bad magic")]
    Magic,
    #[error("unsupported format version {0}")]
    Version(u16),
    #[error("checksum mismatch")]
    Checksum,
    #[error("malformed entry: {0}")]
    Malformed(&'static str),
    #[error("file belongs to class {0}")]
    WrongClass(Partition),
}

pub fn path_for(dir: &Path, mu: &Partition) -> PathBuf {
    dir.join(format!("col-{mu}.mnc"))
}

pub fn encode(ev: &Evaluator) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    put_parts(&mut out, ev.mu());
    let entries = ev.entries();
    out.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for (key, value) in entries {
        out.extend_from_slice(&(key.suffix_index as u32).to_le_bytes());
        put_parts(&mut out, &key.shape);
        let (sign, magnitude) = value.as_bigint().to_bytes_le();
        let sign: i8 = match sign {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        };
        out.push(sign as u8);
        out.extend_from_slice(&(magnitude.len() as u32).to_le_bytes());
        out.extend_from_slice(&magnitude);
    }
    let digest = Sha256::digest(&out);
    out.extend_from_slice(&digest);
    out
}

fn put_parts(out: &mut Vec<u8>, p: &Partition) {
    out.extend_from_slice(&(p.len() as u32).to_le_bytes());
    for &part in p.parts() {
        out.extend_from_slice(&(part as u32).to_le_bytes());
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], CacheError> {
        if self.bytes.len() < n {
            return Err(CacheError::Truncated);
        }
        let (head, rest) = self.bytes.split_at(n);
        self.bytes = rest;
        Ok(head)
    }

    fn u16(&mut self) -> Result<u16, CacheError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32, CacheError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, CacheError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn partition(&mut self) -> Result<Partition, CacheError> {
        let len = self.u32()? as usize;
        if len > self.bytes.len() / 4 {
            return Err(CacheError::Truncated);
        }
        let parts = (0..len)
            .map(|_| self.u32().map(|p| p as usize))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|_| CacheError::Malformed("shape is not a partition"))
    }
}

/// Decodes a memo table, returning the class it belongs to and its entries.
pub fn decode(bytes: &[u8]) -> Result<(Partition, Vec<(MemoKey, CharValue)>), CacheError> {
    if bytes.len() < MAGIC.len() + 2 + 32 {
        return Err(CacheError::Truncated);
    }
    let (body, digest) = bytes.split_at(bytes.len() - 32);
    if Sha256::digest(body).as_slice() != digest {
        return Err(CacheError::Checksum);
    }
    let mut r = Reader { bytes: body };
    if r.take(MAGIC.len())? != MAGIC {
        return Err(CacheError::Magic);
    }
    let version = r.u16()?;
    if version != FORMAT_VERSION {
        return Err(CacheError::Version(version));
    }
    let mu = r.partition()?;
    let count = r.u64()?;
    let mut entries = Vec::new();
    for _ in 0..count {
        let suffix_index = r.u32()? as usize;
        let shape = r.partition()?;
        let sign = match r.take(1)?[0] as i8 {
            -1 => Sign::Minus,
            0 => Sign::NoSign,
            1 => Sign::Plus,
            _ => return Err(CacheError::Malformed("sign byte")),
        };
        let len = r.u32()? as usize;
        let magnitude = r.take(len)?;
        let value = BigInt::from_bytes_le(sign, magnitude);
        entries.push((MemoKey { shape, suffix_index }, CharValue::new(value)));
    }
    if !r.bytes.is_empty() {
        return Err(CacheError::Malformed("trailing bytes"));
    }
    Ok((mu, entries))
}

fn try_load(dir: &Path, mu: &Partition) -> Result<Option<Evaluator>, CacheError> {
    let path = path_for(dir, mu);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let (stored, entries) = decode(&bytes)?;
    if &stored != mu {
        return Err(CacheError::WrongClass(stored));
    }
    let ev = Evaluator::new(mu.clone());
    ev.seed(entries)
        .map_err(|_| CacheError::Malformed("entry weight does not match the class"))?;
    Ok(Some(ev))
}

/// An evaluator for `μ`, warmed from `dir` when a valid table exists.
pub fn load(dir: Option<&Path>, mu: &Partition) -> Evaluator {
    let Some(dir) = dir else {
        return Evaluator::new(mu.clone());
    };
    match try_load(dir, mu) {
        Ok(Some(ev)) => ev,
        Ok(None) => Evaluator::new(mu.clone()),
        Err(e) => {
            eprintln!(
                "warning: ignoring cache {}: {e}",
                path_for(dir, mu).display()
            );
            Evaluator::new(mu.clone())
        }
    }
}

/// Writes the evaluator's memo table atomically. Failures are warnings.
pub fn store(dir: Option<&Path>, ev: &Evaluator) {
    let Some(dir) = dir else { return };
    let result = (|| -> Result<(), CacheError> {
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(&encode(ev))?;
        tmp.persist(path_for(dir, ev.mu())).map_err(|e| e.error)?;
        Ok(())
    })();
    if let Err(e) = result {
        eprintln!("warning: could not write cache for {}: {e}", ev.mu());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sign_classes::partition::p;

    fn warm(mu: &str) -> Evaluator {
        let ev = Evaluator::new(p(mu));
        ev.column();
        ev
    }

    #[test]
    fn round_trip() {
        let ev = warm("3,2,1,1");
        let bytes = encode(&ev);
        let (mu, entries) = decode(&bytes).unwrap();
        assert_eq!(mu, p("3,2,1,1"));
        assert_eq!(entries, ev.entries());
    }

    #[test]
    fn corruption_is_detected() {
        let bytes = encode(&warm("4,2,1"));
        for i in [0, 9, bytes.len() / 2, bytes.len() - 1] {
            let mut bad = bytes.clone();
            bad[i] ^= 0x40;
            assert!(decode(&bad).is_err(), "flip at {i}");
        }
        assert!(decode(&bytes[..bytes.len() - 5]).is_err());
        assert!(decode(&[]).is_err());
    }

    #[test]
    fn load_falls_back_on_garbage() {
        let dir = tempfile::tempdir().unwrap();
        let mu = p("4,2");
        fs::write(path_for(dir.path(), &mu), b"not a cache at all, definitely not").unwrap();
        let ev = load(Some(dir.path()), &mu);
        assert_eq!(ev.cache_len(), 0);
        assert_eq!(ev.value(&p("4,2")).unwrap().to_i64(), Some(1));
    }

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let ev = warm("5,3,1");
        store(Some(dir.path()), &ev);
        let back = load(Some(dir.path()), &p("5,3,1"));
        assert_eq!(back.entries(), ev.entries());
        // a table for another class is rejected
        fs::copy(path_for(dir.path(), &p("5,3,1")), path_for(dir.path(), &p("6,3"))).unwrap();
        assert_eq!(load(Some(dir.path()), &p("6,3")).cache_len(), 0);
    }
}

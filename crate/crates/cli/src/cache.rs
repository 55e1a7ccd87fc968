use std::fs;
use std::io::Write;
use std::path::PathBuf;

use ratpark::parking::parking_count;
use ratpark::sommers::{enumerate_m_restricted, SommersEnumeration};
use ratpark::{AffinePermutation, Error};
use serde::{Deserialize, Serialize};

use crate::error::CliResult;

pub const CACHE_ENV: &str = "RATIONAL_PARKING_CACHE";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: usize,
    m: usize,
    windows: Vec<Vec<i64>>,
}

/// `$RATIONAL_PARKING_CACHE`, else `<user cache dir>/rational-parking`.
pub fn cache_dir() -> Option<PathBuf> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => dirs::cache_dir().map(|d| d.join("rational-parking")),
    }
}

fn cache_path(dir: &std::path::Path, n: usize, m: usize) -> PathBuf {
    dir.join(format!("restricted-{n}-{m}.json"))
}

/// Reads a cache file, rejecting it unless it holds exactly `m^{n−1}` distinct m-restricted windows.
fn load(path: &std::path::Path, n: usize, m: usize) -> Option<SommersEnumeration> {
    let text = fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.n != n || file.m != m || Some(file.windows.len() as u64) != parking_count(n, m) {
        return None;
    }
    let perms: Vec<AffinePermutation> = file
        .windows
        .iter()
        .map(|w| AffinePermutation::from_window(n, w).ok().filter(|u| u.is_m_restricted(m)))
        .collect::<Option<_>>()?;
    let e = SommersEnumeration::from_parts(n, m, perms);
    (e.restricted.windows(2).all(|p| p[0] != p[1])).then_some(e)
}

fn store(path: &std::path::Path, e: &SommersEnumeration) -> CliResult<()> {
    let dir = path.parent().expect("cache files live in a directory");
    fs::create_dir_all(dir)?;
    let file = CacheFile { n: e.n, m: e.m, windows: e.restricted.iter().map(|u| u.window().to_vec()).collect() };
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        serde_json::to_writer(&mut f, &file)?;
        f.write_all(b"\n")?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// The m-restricted enumeration for `(n, m)`, read from or written to the cache when `use_cache`.
pub fn restricted(n: usize, m: usize, cap: u64, use_cache: bool) -> CliResult<SommersEnumeration> {
    let needed = parking_count(n, m).unwrap_or(u64::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap }.into());
    }
    let dir = if use_cache { cache_dir() } else { None };
    if let Some(dir) = &dir {
        if let Some(e) = load(&cache_path(dir, n, m), n, m) {
            return Ok(e);
        }
    }
    let e = enumerate_m_restricted(n, m, cap)?;
    if let Some(dir) = &dir {
        // a cache that cannot be written is not an error for the caller
        let _ = store(&cache_path(dir, n, m), &e);
    }
    Ok(e)
}

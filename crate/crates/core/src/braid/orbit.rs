//! Breadth-first closure of a seed under the braid and sign groups.
//!
//! States are fixed-width `i8` keys stored back to back in one append-only
//! arena, which doubles as the FIFO queue. A hash table of arena indices
//! provides insert-if-absent deduplication with full-key comparison.
//! Successors of a chunk of the frontier are computed in parallel and merged
//! sequentially in frontier order, so every run visits states in the same order.

use std::fs::File;
use std::hash::{Hash, Hasher};
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use hashbrown::HashTable;
use rayon::prelude::*;
use rustc_hash::FxHasher;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{is_connected, StokesMatrix};

/// Largest rank handled by the fixed-width orbit engine.
pub const MAX_ORBIT_MU: usize = 16;
const CHUNK: usize = 1 << 13;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitMode {
    /// Distinguished bases modulo signs.
    Bases,
    /// Stokes matrices modulo sign conjugation.
    Stokes,
}

impl FromStr for OrbitMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bases" => Ok(OrbitMode::Bases),
            "stokes" => Ok(OrbitMode::Stokes),
            _ => Err(Error::Parse(format!("unknown orbit mode {s:?} (expected bases|stokes)"))),
        }
    }
}

impl std::fmt::Display for OrbitMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OrbitMode::Bases => "bases",
            OrbitMode::Stokes => "stokes",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TruncationReason {
    StateBudget,
    MemoryBudget,
    /// A coordinate or Stokes entry left the `i8` key range.
    KeyOverflow,
}

#[derive(Clone, Debug)]
pub struct OrbitConfig {
    pub mode: OrbitMode,
    /// Label copied into the report.
    pub label: String,
    pub budget_states: Option<u64>,
    /// Approximate bound on arena plus table bytes.
    pub budget_mem: Option<u64>,
    /// Worker threads; `None` uses the global pool, `Some(1)` runs inline.
    pub jobs: Option<usize>,
    /// Write a restartable snapshot here every `checkpoint_every` expansions and at the end.
    pub checkpoint: Option<PathBuf>,
    pub checkpoint_every: u64,
    pub resume: Option<PathBuf>,
}

impl OrbitConfig {
    pub fn new(mode: OrbitMode) -> Self {
        OrbitConfig {
            mode,
            label: "custom".into(),
            budget_states: None,
            budget_mem: None,
            jobs: None,
            checkpoint: None,
            checkpoint_every: 1 << 22,
            resume: None,
        }
    }

    pub fn label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn budget_states(mut self, n: u64) -> Self {
        self.budget_states = Some(n);
        self
    }

    pub fn budget_mem(mut self, bytes: u64) -> Self {
        self.budget_mem = Some(bytes);
        self
    }

    pub fn jobs(mut self, n: usize) -> Self {
        self.jobs = Some(n);
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct OrbitReport {
    pub class: String,
    pub mode: OrbitMode,
    /// Distinct states found.
    pub count: u64,
    /// States whose successors were fully expanded.
    pub visited: u64,
    pub truncated: bool,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<TruncationReason>,
}

/// The states found by an enumeration, in discovery order.
pub struct OrbitStates {
    mu: usize,
    mode: OrbitMode,
    key_len: usize,
    arena: Vec<i8>,
}

impl OrbitStates {
    pub fn len(&self) -> usize {
        self.arena.len() / self.key_len
    }

    pub fn is_empty(&self) -> bool {
        self.arena.is_empty()
    }

    pub fn key(&self, k: usize) -> &[i8] {
        &self.arena[k * self.key_len..(k + 1) * self.key_len]
    }

    pub fn keys(&self) -> impl Iterator<Item = &[i8]> {
        self.arena.chunks_exact(self.key_len)
    }

    /// Stokes-mode state as a matrix.
    pub fn stokes(&self, k: usize) -> StokesMatrix {
        assert_eq!(self.mode, OrbitMode::Stokes);
        let mu = self.mu;
        let key = self.key(k);
        let mut upper = Vec::with_capacity(mu.saturating_sub(1));
        let mut pos = 0;
        for i in 0..mu.saturating_sub(1) {
            let len = mu - 1 - i;
            upper.push(key[pos..pos + len].iter().map(|&x| i64::from(x)).collect());
            pos += len;
        }
        StokesMatrix::from_upper(mu, &upper).expect("orbit states are Stokes-shaped")
    }

    /// Bases-mode state as a list of coordinate vectors.
    pub fn tuple(&self, k: usize) -> Vec<Vec<i64>> {
        assert_eq!(self.mode, OrbitMode::Bases);
        self.key(k).chunks_exact(self.mu).map(|v| v.iter().map(|&x| i64::from(x)).collect()).collect()
    }
}

/// Counts the orbit of `seed` in the configured mode.
pub fn orbit_enumerate(seed: &StokesMatrix, config: &OrbitConfig) -> Result<OrbitReport> {
    enumerate_states(seed, config).map(|(r, _)| r)
}

/// Like [`orbit_enumerate`] but also returns every state found.
pub fn enumerate_states(seed: &StokesMatrix, config: &OrbitConfig) -> Result<(OrbitReport, OrbitStates)> {
    let mu = seed.mu();
    if mu > MAX_ORBIT_MU {
        return Err(Error::Unsupported(format!("rank {mu}"), format!("orbit engine handles μ ≤ {MAX_ORBIT_MU}")));
    }
    if !is_connected(seed) {
        return Err(Error::Disconnected);
    }
    let dense = seed.matrix().to_i64_rows().ok_or_else(|| Error::Invalid("seed entries too large".into()))?;
    let space = Space::new(config.mode, mu, &dense);
    let run = || run_bfs(&space, seed, config);
    match config.jobs {
        Some(n) if n > 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?
            .install(run),
        _ => run(),
    }
}

struct Space {
    mode: OrbitMode,
    mu: usize,
    /// Seed intersection form I = S + Sᵗ, row-major.
    form: Vec<i64>,
}

type Dense = [i64; MAX_ORBIT_MU * MAX_ORBIT_MU];

impl Space {
    fn new(mode: OrbitMode, mu: usize, s: &[Vec<i64>]) -> Self {
        let mut form = vec![0; mu * mu];
        for i in 0..mu {
            for j in 0..mu {
                form[i * mu + j] = s[i][j] + s[j][i];
            }
        }
        Space { mode, mu, form }
    }

    fn key_len(&self) -> usize {
        match self.mode {
            OrbitMode::Bases => self.mu * self.mu,
            // μ = 1 still gets one (always zero) byte so that states are countable.
            OrbitMode::Stokes => (self.mu * (self.mu - 1) / 2).max(1),
        }
    }

    fn seed_key(&self, s: &[Vec<i64>]) -> Option<Vec<i8>> {
        let mu = self.mu;
        match self.mode {
            OrbitMode::Bases => Some((0..mu * mu).map(|k| i8::from(k / mu == k % mu)).collect()),
            OrbitMode::Stokes => {
                let mut d: Dense = [0; MAX_ORBIT_MU * MAX_ORBIT_MU];
                for i in 0..mu {
                    for j in 0..mu {
                        d[i * MAX_ORBIT_MU + j] = s[i][j];
                    }
                }
                let mut key = vec![0; self.key_len()];
                canonical_stokes_key(mu, &mut d, &mut key).then_some(key)
            }
        }
    }

    /// Appends the successors of `key` under `+1, −1, +2, −2, …`; `false` on key overflow.
    fn successors(&self, key: &[i8], out: &mut Vec<i8>) -> bool {
        match self.mode {
            OrbitMode::Bases => self.bases_successors(key, out),
            OrbitMode::Stokes => self.stokes_successors(key, out),
        }
    }

    fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        let mu = self.mu;
        let mut acc = 0;
        for (ai, row) in a.iter().zip(self.form.chunks(mu)) {
            if *ai == 0 {
                continue;
            }
            acc += ai * row.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        }
        acc
    }

    fn bases_successors(&self, key: &[i8], out: &mut Vec<i8>) -> bool {
        let mu = self.mu;
        let mut va = [0i64; MAX_ORBIT_MU];
        let mut vb = [0i64; MAX_ORBIT_MU];
        let mut img = [0i64; MAX_ORBIT_MU];
        for a in 0..mu - 1 {
            for (k, x) in key[a * mu..(a + 1) * mu].iter().enumerate() {
                va[k] = i64::from(*x);
            }
            for (k, x) in key[(a + 1) * mu..(a + 2) * mu].iter().enumerate() {
                vb[k] = i64::from(*x);
            }
            for positive in [true, false] {
                let start = out.len();
                out.extend_from_slice(key);
                // +: (δa, δb) ↦ (δb, δa − I(δb,δa)·δb);  −: (δa, δb) ↦ (δb − I(δa,δb)·δa, δa).
                let (first, base, refl) = if positive { (&vb, &va, &vb) } else { (&va, &vb, &va) };
                let c = self.pair(&refl[..mu], &base[..mu]);
                for k in 0..mu {
                    img[k] = base[k] - c * refl[k];
                }
                let (new_a, new_b): (&[i64], &[i64]) =
                    if positive { (&first[..mu], &img[..mu]) } else { (&img[..mu], &first[..mu]) };
                if !write_canonical_vector(new_a, &mut out[start + a * mu..start + (a + 1) * mu])
                    || !write_canonical_vector(new_b, &mut out[start + (a + 1) * mu..start + (a + 2) * mu])
                {
                    out.truncate(start);
                    return false;
                }
            }
        }
        true
    }

    fn stokes_successors(&self, key: &[i8], out: &mut Vec<i8>) -> bool {
        let mu = self.mu;
        let mut s: Dense = [0; MAX_ORBIT_MU * MAX_ORBIT_MU];
        unpack_upper(mu, key, &mut s);
        let klen = key.len();
        debug_assert_eq!(klen, self.key_len());
        for a in 0..mu - 1 {
            let b = a + 1;
            let sab = s[a * MAX_ORBIT_MU + b];
            for positive in [true, false] {
                // New basis vectors at positions a, b as sparse combinations of e_a, e_b:
                // +: (e_b, e_a − S_ab·e_b);  −: (e_b − S_ab·e_a, e_a).
                let (na, nb) = if positive {
                    ([(b, 1), (a, 0)], [(a, 1), (b, -sab)])
                } else {
                    ([(b, 1), (a, -sab)], [(a, 1), (b, 0)])
                };
                let mut t = s;
                let comb = |v: &[(usize, i64); 2], row: &dyn Fn(usize) -> i64| -> i64 {
                    v.iter().map(|&(k, c)| if c == 0 { 0 } else { c * row(k) }).sum()
                };
                // Rows a, b against untouched columns and vice versa.
                for k in 0..mu {
                    if k == a || k == b {
                        continue;
                    }
                    t[a * MAX_ORBIT_MU + k] = comb(&na, &|m| s[m * MAX_ORBIT_MU + k]);
                    t[b * MAX_ORBIT_MU + k] = comb(&nb, &|m| s[m * MAX_ORBIT_MU + k]);
                    t[k * MAX_ORBIT_MU + a] = comb(&na, &|m| s[k * MAX_ORBIT_MU + m]);
                    t[k * MAX_ORBIT_MU + b] = comb(&nb, &|m| s[k * MAX_ORBIT_MU + m]);
                }
                let bil = |x: &[(usize, i64); 2], y: &[(usize, i64); 2]| -> i64 {
                    let mut acc = 0;
                    for &(p, cp) in x {
                        for &(q, cq) in y {
                            acc += cp * cq * s[p * MAX_ORBIT_MU + q];
                        }
                    }
                    acc
                };
                t[a * MAX_ORBIT_MU + b] = bil(&na, &nb);
                debug_assert_eq!(bil(&nb, &na), 0);
                debug_assert_eq!(bil(&na, &na), 1);
                let start = out.len();
                out.resize(start + klen, 0);
                if !canonical_stokes_key(mu, &mut t, &mut out[start..]) {
                    out.truncate(start);
                    return false;
                }
            }
        }
        true
    }
}

fn write_canonical_vector(v: &[i64], out: &mut [i8]) -> bool {
    let neg = v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0);
    for (o, &x) in out.iter_mut().zip(v) {
        let y = if neg { -x } else { x };
        match i8::try_from(y) {
            Ok(z) => *o = z,
            Err(_) => return false,
        }
    }
    true
}

fn unpack_upper(mu: usize, key: &[i8], s: &mut Dense) {
    let mut pos = 0;
    for i in 0..mu {
        s[i * MAX_ORBIT_MU + i] = 1;
        for j in i + 1..mu {
            s[i * MAX_ORBIT_MU + j] = i64::from(key[pos]);
            pos += 1;
        }
    }
}

/// Greedy lex-min sign conjugation of a dense connected Stokes matrix, written as
/// the row-major strict upper triangle. `false` if an entry does not fit in `i8`.
fn canonical_stokes_key(mu: usize, s: &mut Dense, key: &mut [i8]) -> bool {
    let mut parent = [0u8; MAX_ORBIT_MU];
    let mut parity = [0u8; MAX_ORBIT_MU];
    for (k, p) in parent.iter_mut().enumerate().take(mu) {
        *p = k as u8;
    }
    let find = |parent: &[u8; MAX_ORBIT_MU], parity: &[u8; MAX_ORBIT_MU], mut x: usize| {
        let mut p = 0;
        while parent[x] as usize != x {
            p ^= parity[x];
            x = parent[x] as usize;
        }
        (x, p)
    };
    for i in 0..mu {
        for j in i + 1..mu {
            let v = s[i * MAX_ORBIT_MU + j];
            if v == 0 {
                continue;
            }
            let (ri, pi) = find(&parent, &parity, i);
            let (rj, pj) = find(&parent, &parity, j);
            if ri != rj {
                parent[rj] = ri as u8;
                parity[rj] = pi ^ pj ^ u8::from(v > 0);
            }
        }
    }
    let mut eps = [0u8; MAX_ORBIT_MU];
    for (k, e) in eps.iter_mut().enumerate().take(mu) {
        *e = find(&parent, &parity, k).1;
    }
    let mut pos = 0;
    for i in 0..mu {
        for j in i + 1..mu {
            let v = s[i * MAX_ORBIT_MU + j];
            let v = if eps[i] != eps[j] { -v } else { v };
            match i8::try_from(v) {
                Ok(z) => key[pos] = z,
                Err(_) => return false,
            }
            pos += 1;
        }
    }
    true
}

fn hash_key(key: &[i8]) -> u64 {
    let mut h = FxHasher::default();
    key.hash(&mut h);
    h.finish()
}

struct Store {
    key_len: usize,
    arena: Vec<i8>,
    table: HashTable<u32>,
}

impl Store {
    fn new(key_len: usize) -> Self {
        Store { key_len, arena: Vec::new(), table: HashTable::new() }
    }

    fn len(&self) -> usize {
        self.arena.len() / self.key_len
    }

    fn key(&self, k: usize) -> &[i8] {
        &self.arena[k * self.key_len..(k + 1) * self.key_len]
    }

    /// Bytes the store would occupy after one more insertion.
    fn projected_bytes(&self) -> u64 {
        let cap = self.table.capacity();
        let slots = if self.table.len() >= cap { (2 * cap).max(4) } else { cap };
        (self.arena.len() + self.key_len) as u64 + slots as u64 * (std::mem::size_of::<u32>() as u64 + 1)
    }

    fn contains(&self, hash: u64, key: &[i8]) -> bool {
        let (arena, kl) = (&self.arena, self.key_len);
        self.table.find(hash, |&idx| &arena[idx as usize * kl..(idx as usize + 1) * kl] == key).is_some()
    }

    fn insert_new(&mut self, hash: u64, key: &[i8]) {
        let idx = self.len() as u32;
        self.arena.extend_from_slice(key);
        let (arena, kl) = (&self.arena, self.key_len);
        self.table.insert_unique(hash, idx, |&i| hash_key(&arena[i as usize * kl..(i as usize + 1) * kl]));
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct CheckpointHeader {
    format: String,
    mode: OrbitMode,
    mu: usize,
    seed_upper: Vec<Vec<i64>>,
    key_len: usize,
    count: u64,
    head: u64,
}

const CHECKPOINT_FORMAT: &str = "stokeslab-orbit-v1";

fn write_checkpoint(path: &Path, header: &CheckpointHeader, arena: &[i8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(File::create(&tmp)?);
        serde_json::to_writer(&mut w, header)?;
        w.write_all(b"\n")?;
        let bytes: Vec<u8> = arena.iter().map(|&x| x as u8).collect();
        w.write_all(&bytes)?;
        w.flush()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn read_checkpoint(path: &Path) -> Result<(CheckpointHeader, Vec<i8>)> {
    let mut r = BufReader::new(File::open(path)?);
    let mut line = String::new();
    r.read_line(&mut line)?;
    let header: CheckpointHeader = serde_json::from_str(line.trim_end())?;
    if header.format != CHECKPOINT_FORMAT {
        return Err(Error::Parse(format!("unknown checkpoint format {:?}", header.format)));
    }
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    if bytes.len() as u64 != header.count * header.key_len as u64 {
        return Err(Error::Parse("checkpoint arena length does not match its header".into()));
    }
    Ok((header, bytes.into_iter().map(|b| b as i8).collect()))
}

fn run_bfs(space: &Space, seed: &StokesMatrix, config: &OrbitConfig) -> Result<(OrbitReport, OrbitStates)> {
    let started = Instant::now();
    let mu = space.mu;
    let key_len = space.key_len();
    let dense = seed.matrix().to_i64_rows().expect("checked by caller");
    let seed_upper = seed.upper();
    let mut store = Store::new(key_len);
    let mut head = 0usize;
    let mut reason = None;

    if let Some(path) = &config.resume {
        let (header, arena) = read_checkpoint(path)?;
        if header.mode != config.mode || header.mu != mu || header.seed_upper != seed_upper {
            return Err(Error::Invalid("checkpoint belongs to a different seed or mode".into()));
        }
        store.arena.reserve(arena.len());
        for key in arena.chunks_exact(key_len) {
            store.insert_new(hash_key(key), key);
        }
        head = header.head as usize;
    } else {
        match space.seed_key(&dense) {
            Some(key) => store.insert_new(hash_key(&key), &key),
            None => reason = Some(TruncationReason::KeyOverflow),
        }
    }

    // μ = 1 has no generators.
    let expandable = mu > 1;
    let mut last_checkpoint = head as u64;
    let checkpoint = |store: &Store, head: usize| -> Result<()> {
        if let Some(path) = &config.checkpoint {
            let header = CheckpointHeader {
                format: CHECKPOINT_FORMAT.into(),
                mode: config.mode,
                mu,
                seed_upper: seed_upper.clone(),
                key_len,
                count: store.len() as u64,
                head: head as u64,
            };
            write_checkpoint(path, &header, &store.arena)?;
        }
        Ok(())
    };

    'outer: while reason.is_none() && expandable && head < store.len() {
        let end = (head + CHUNK).min(store.len());
        let batch: Vec<(Vec<i8>, bool)> = {
            let keys: Vec<&[i8]> = (head..end).map(|k| store.key(k)).collect();
            let expand = |key: &&[i8]| {
                let mut out = Vec::with_capacity(2 * (mu - 1) * key_len);
                let ok = space.successors(key, &mut out);
                (out, ok)
            };
            if config.jobs == Some(1) {
                keys.iter().map(expand).collect()
            } else {
                keys.par_iter().map(expand).collect()
            }
        };
        for (succ, ok) in batch {
            for key in succ.chunks_exact(key_len) {
                let h = hash_key(key);
                if store.contains(h, key) {
                    continue;
                }
                if config.budget_states.is_some_and(|b| store.len() as u64 >= b) {
                    reason = Some(TruncationReason::StateBudget);
                    break 'outer;
                }
                if config.budget_mem.is_some_and(|b| store.projected_bytes() > b) {
                    reason = Some(TruncationReason::MemoryBudget);
                    break 'outer;
                }
                if store.len() >= u32::MAX as usize {
                    reason = Some(TruncationReason::StateBudget);
                    break 'outer;
                }
                store.insert_new(h, key);
            }
            if !ok {
                reason = Some(TruncationReason::KeyOverflow);
                break 'outer;
            }
            head += 1;
        }
        if config.checkpoint.is_some() && head as u64 - last_checkpoint >= config.checkpoint_every {
            checkpoint(&store, head)?;
            last_checkpoint = head as u64;
        }
    }
    if !expandable {
        head = store.len();
    }
    checkpoint(&store, head)?;

    let report = OrbitReport {
        class: config.label.clone(),
        mode: config.mode,
        count: store.len() as u64,
        visited: head as u64,
        truncated: reason.is_some(),
        seconds: started.elapsed().as_secs_f64(),
        reason,
    };
    let states = OrbitStates { mu, mode: config.mode, key_len, arena: store.arena };
    Ok((report, states))
}

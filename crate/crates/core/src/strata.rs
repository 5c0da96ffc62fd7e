//! Stratum signatures, genus and connectedness classification, and the
//! Masur-Veech volume provider abstraction.
//!
//! A signature is the tuple of zero orders of an Abelian differential.
//! Top-level inputs to the Siegel-Veech evaluators must have all orders
//! positive; intermediate signatures produced while degenerating a surface
//! may contain order-0 entries (marked points), and the volume backends
//! accept those too.
//!
//! Volumes come from a pluggable [`VolumeProvider`]: either the large-genus
//! asymptotic backend, which returns the leading term `4 / prod(m_i + 1)`
//! exactly, or a table backend fed from user data. Both return 0 for
//! signatures of odd total order, where no stratum exists.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactmath::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StratumError {
    /// No stratum: the zero orders of an Abelian differential sum to 2g-2.
    OddTotalOrder,
    EmptySignature,
    /// The operation is only defined for signatures with all orders >= 1.
    OrderZeroEntry,
    /// Table backend has no entry for this signature multiset.
    VolumeUnknown { orders: Vec<u32> },
    /// Two table entries for the same multiset disagree.
    ConflictingTableEntry { orders: Vec<u32> },
    /// The relative-error parameter of a volume interval must be >= 0.
    NegativeErrorParameter,
    Parse(String),
}

impl core::fmt::Display for StratumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            StratumError::OddTotalOrder => write!(f, "no stratum: odd total order"),
            StratumError::EmptySignature => write!(f, "signature must have at least one order"),
            StratumError::OrderZeroEntry => {
                write!(f, "operation requires all zero orders to be >= 1")
            }
            StratumError::VolumeUnknown { orders } => {
                write!(f, "volume unknown for signature {}", render_orders(orders))
            }
            StratumError::ConflictingTableEntry { orders } => write!(
                f,
                "conflicting table entries for signature {}",
                render_orders(orders)
            ),
            StratumError::NegativeErrorParameter => {
                write!(f, "volume interval parameter R must be nonnegative")
            }
            StratumError::Parse(msg) => write!(f, "bad signature: {msg}"),
        }
    }
}

impl core::error::Error for StratumError {}

fn render_orders(orders: &[u32]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, m) in orders.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{m}");
    }
    s
}

/// Ordered tuple of zero orders `m_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StratumSignature {
    orders: Vec<u32>,
}

impl StratumSignature {
    pub fn new(orders: Vec<u32>) -> Result<Self, StratumError> {
        if orders.is_empty() {
            return Err(StratumError::EmptySignature);
        }
        Ok(Self { orders })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of zeros `n`.
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Total order `|alpha| = sum m_i = 2g - 2`.
    pub fn size(&self) -> u64 {
        self.orders.iter().map(|&m| m as u64).sum()
    }

    pub fn all_positive(&self) -> bool {
        self.orders.iter().all(|&m| m >= 1)
    }

    /// Genus `g = |alpha|/2 + 1`; errors on odd total order.
    pub fn genus(&self) -> Result<u64, StratumError> {
        let size = self.size();
        if size % 2 != 0 {
            return Err(StratumError::OddTotalOrder);
        }
        Ok(size / 2 + 1)
    }

    /// Orders sorted nondecreasing: the key under which volumes are stored,
    /// since they depend only on the multiset.
    pub fn multiset_key(&self) -> Vec<u32> {
        multiset_key(&self.orders)
    }
}

impl core::fmt::Display for StratumSignature {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", render_orders(&self.orders))
    }
}

impl core::str::FromStr for StratumSignature {
    type Err = StratumError;

    /// Parse a comma-separated order list, e.g. `3,1,1,1`.
    fn from_str(s: &str) -> Result<Self, StratumError> {
        let mut orders = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let m: u32 = piece
                .parse()
                .map_err(|_| StratumError::Parse(String::from("orders must be nonnegative integers")))?;
            orders.push(m);
        }
        StratumSignature::new(orders)
    }
}

pub fn multiset_key(orders: &[u32]) -> Vec<u32> {
    let mut key = orders.to_vec();
    key.sort_unstable();
    key
}

/// Connectedness of a stratum.
///
/// For `g >= 3` the stratum is connected iff the signature is not
/// `(g-1, g-1)` as a multiset and at least one order is odd. The `g = 2`
/// strata are not covered by that classification, so we report `Unknown`
/// rather than guess.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    Disconnected,
    Unknown,
}

impl core::fmt::Display for Connectivity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Connectivity::Connected => write!(f, "connected"),
            Connectivity::Disconnected => write!(f, "disconnected"),
            Connectivity::Unknown => write!(f, "unknown"),
        }
    }
}

pub fn is_connected(sig: &StratumSignature) -> Result<Connectivity, StratumError> {
    if !sig.all_positive() {
        return Err(StratumError::OrderZeroEntry);
    }
    let g = sig.genus()?;
    if g == 2 {
        return Ok(Connectivity::Unknown);
    }
    let two_equal_halves =
        sig.len() == 2 && sig.orders[0] as u64 == g - 1 && sig.orders[1] as u64 == g - 1;
    let has_odd = sig.orders.iter().any(|&m| m % 2 == 1);
    if !two_equal_halves && has_odd {
        Ok(Connectivity::Connected)
    } else {
        Ok(Connectivity::Disconnected)
    }
}

/// A table entry: the stored volume plus whether it was derived from an
/// approximate (pi-power) input value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub value: ExactRational,
    pub approximate: bool,
}

/// Volume table keyed by signature multiset.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VolumeTable {
    entries: BTreeMap<Vec<u32>, TableEntry>,
}

impl VolumeTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert an entry. Re-inserting the same value is idempotent;
    /// conflicting values for the same multiset are rejected.
    pub fn insert(
        &mut self,
        orders: &[u32],
        value: ExactRational,
        approximate: bool,
    ) -> Result<(), StratumError> {
        let key = multiset_key(orders);
        if let Some(existing) = self.entries.get(&key) {
            if existing.value != value {
                return Err(StratumError::ConflictingTableEntry { orders: key });
            }
            return Ok(());
        }
        self.entries.insert(key, TableEntry { value, approximate });
        Ok(())
    }

    pub fn get(&self, orders: &[u32]) -> Option<&TableEntry> {
        self.entries.get(&multiset_key(orders))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &TableEntry)> {
        self.entries.iter()
    }
}

/// Strategy for evaluating Masur-Veech volumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VolumeProvider {
    /// Large-genus leading term `4 / prod(m_i + 1)`, exact as a rational.
    ///
    /// Signatures with order-0 entries are accepted by the same formula:
    /// the evaluators routinely produce marked points while splitting
    /// zeros, and the formula degrades gracefully there.
    Asymptotic,
    /// Stored values, errors on misses.
    Table(VolumeTable),
}

impl VolumeProvider {
    /// The volume of the stratum with the given zero orders. Zero whenever
    /// the total order is odd (no such stratum); permutation-invariant.
    pub fn volume(&self, orders: &[u32]) -> Result<ExactRational, StratumError> {
        let size: u64 = orders.iter().map(|&m| m as u64).sum();
        if size % 2 != 0 {
            return Ok(ExactRational::zero());
        }
        match self {
            VolumeProvider::Asymptotic => Ok(asymptotic_volume(orders)),
            VolumeProvider::Table(table) => match table.get(orders) {
                Some(entry) => Ok(entry.value.clone()),
                None => Err(StratumError::VolumeUnknown {
                    orders: multiset_key(orders),
                }),
            },
        }
    }
}

fn asymptotic_volume(orders: &[u32]) -> ExactRational {
    let mut denom = BigInt::one();
    for &m in orders {
        denom *= BigInt::from(m as u64 + 1);
    }
    ExactRational::new(BigInt::from(4), denom)
}

/// Two-sided volume bound `4/prod(m_i+1) * (1 -+ R/g)` with a caller-chosen
/// relative-error constant `R`.
///
/// The explicit constant the bound is proved with is `2^(2^200)`, which is
/// far too large to materialize (or to be useful at desk scale), so `R` is
/// a parameter rather than a default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeInterval {
    pub lower: ExactRational,
    pub upper: ExactRational,
    pub r: ExactRational,
}

pub fn volume_bounds(
    sig: &StratumSignature,
    r: &ExactRational,
) -> Result<VolumeInterval, StratumError> {
    if r.is_negative() {
        return Err(StratumError::NegativeErrorParameter);
    }
    if sig.size() % 2 != 0 {
        return Ok(VolumeInterval {
            lower: ExactRational::zero(),
            upper: ExactRational::zero(),
            r: r.clone(),
        });
    }
    let g = sig.genus()?;
    let center = asymptotic_volume(sig.orders());
    let rel = r / ExactRational::from(BigInt::from(g));
    let one = ExactRational::one();
    Ok(VolumeInterval {
        lower: &center * (&one - &rel),
        upper: &center * (&one + &rel),
        r: r.clone(),
    })
}

/// Caller-owned memo over a provider, keyed by signature multiset. The
/// intermediate signatures produced by the evaluators repeat massively
/// across configurations.
pub struct VolumeMemo<'a> {
    provider: &'a VolumeProvider,
    cache: BTreeMap<Vec<u32>, ExactRational>,
}

impl<'a> VolumeMemo<'a> {
    pub fn new(provider: &'a VolumeProvider) -> Self {
        Self {
            provider,
            cache: BTreeMap::new(),
        }
    }

    pub fn volume(&mut self, orders: &[u32]) -> Result<ExactRational, StratumError> {
        let key = multiset_key(orders);
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let v = self.provider.volume(&key)?;
        self.cache.insert(key, v.clone());
        Ok(v)
    }
}

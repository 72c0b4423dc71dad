//! Independent set partitions and the single-vertex move relation.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Default bound on the number of partitions a single enumeration may produce.
pub const DEFAULT_PARTITION_CAP: usize = 500_000;

/// A partition of `0..n` into blocks, held in canonical form.
///
/// Blocks are ordered by least element. The restricted-growth string
/// (`rgs[v]` = index of the block holding `v`) is the equality, hashing and
/// ordering key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u8>,
    blocks: Vec<u64>,
}

impl SetPartition {
    /// Canonicalize an arbitrary list of disjoint non-empty block masks
    /// covering `0..n`. Not validated.
    pub(crate) fn from_masks_unchecked(n: usize, mut blocks: Vec<u64>) -> Self {
        blocks.sort_unstable_by_key(|b| b.trailing_zeros());
        let mut rgs = vec![0u8; n];
        for (i, &b) in blocks.iter().enumerate() {
            for v in bits(b) {
                rgs[v] = i as u8;
            }
        }
        SetPartition { rgs, blocks }
    }

    /// Validate and canonicalize `blocks` as an independent set partition of `g`.
    pub fn new(g: &Graph, blocks: &[Vec<usize>]) -> Result<Self> {
        let n = g.order();
        let mut seen = 0u64;
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            let mut m = 0u64;
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if (seen | m) & bit(v) != 0 {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                m |= bit(v);
            }
            if !g.is_independent(m) {
                return Err(Error::InvalidPartition(format!(
                    "block {block:?} is not independent"
                )));
            }
            seen |= m;
            masks.push(m);
        }
        if seen != g.vertex_mask() {
            return Err(Error::InvalidPartition(
                "blocks do not cover every vertex".into(),
            ));
        }
        Ok(Self::from_masks_unchecked(n, masks))
    }

    /// The partition into singletons.
    pub fn singletons(n: usize) -> Self {
        Self::from_masks_unchecked(n, (0..n).map(bit).collect())
    }

    /// Parse the text form `"0,2|1"` and validate against `g`.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::new(g, &[]);
        }
        let blocks = text
            .split('|')
            .map(|blk| {
                blk.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::InvalidPartition(format!("{v:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, &blocks)
    }

    /// Number of vertices of the host graph.
    pub fn order(&self) -> usize {
        self.rgs.len()
    }

    pub fn part_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block masks ordered by least element.
    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// The block containing `v`, as a mask.
    pub fn block_of(&self, v: usize) -> u64 {
        self.blocks[self.rgs[v] as usize]
    }

    /// Index of the block containing `v`.
    pub fn block_index(&self, v: usize) -> usize {
        self.rgs[v] as usize
    }

    pub fn restricted_growth_string(&self) -> &[u8] {
        &self.rgs
    }

    /// Sizes of the blocks, in block order.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|b| b.count_ones() as usize)
            .collect()
    }

    /// Whether every block is independent in `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.order() == g.order() && self.blocks.iter().all(|&b| g.is_independent(b))
    }

    /// Remove `v` from its block, returning the remaining non-empty blocks.
    fn without(&self, v: usize) -> Vec<u64> {
        let mut rest: Vec<u64> = self
            .blocks
            .iter()
            .map(|&b| b & !bit(v))
            .filter(|&b| b != 0)
            .collect();
        rest.sort_unstable();
        rest
    }

    /// Every partition reachable by moving one vertex, with repeats, and
    /// without checking independence or part-count bounds.
    pub(crate) fn raw_moves(&self) -> impl Iterator<Item = (usize, Option<usize>)> + '_ {
        // (vertex, target block index) where None means "split off"
        (0..self.order()).flat_map(move |v| {
            let own = self.block_index(v);
            let split = (self.blocks[own].count_ones() > 1).then_some((v, None));
            split.into_iter().chain(
                (0..self.blocks.len())
                    .filter(move |&c| c != own)
                    .map(move |c| (v, Some(c))),
            )
        })
    }

    /// Apply a move produced by [`raw_moves`](Self::raw_moves).
    pub(crate) fn apply_move(&self, v: usize, target: Option<usize>) -> SetPartition {
        let own = self.block_index(v);
        let mut masks = self.blocks.clone();
        masks[own] &= !bit(v);
        match target {
            Some(c) => masks[c] |= bit(v),
            None => masks.push(bit(v)),
        }
        masks.retain(|&b| b != 0);
        Self::from_masks_unchecked(self.order(), masks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, v) in bits(b).enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All independent set partitions of `g` with between `min_parts` and
/// `max_parts` blocks, in restricted-growth-string order.
pub fn enumerate_partitions(
    g: &Graph,
    min_parts: usize,
    max_parts: usize,
) -> Result<Vec<SetPartition>> {
    enumerate_partitions_capped(g, min_parts, max_parts, DEFAULT_PARTITION_CAP)
}

/// As [`enumerate_partitions`] with an explicit result cap.
pub fn enumerate_partitions_capped(
    g: &Graph,
    min_parts: usize,
    max_parts: usize,
    cap: usize,
) -> Result<Vec<SetPartition>> {
    if min_parts > max_parts {
        return Err(Error::InvalidBounds {
            min: min_parts,
            max: max_parts,
        });
    }
    let n = g.order();
    let mut out = Vec::new();
    let mut rgs = vec![0u8; n];
    let mut blocks: Vec<u64> = Vec::with_capacity(n);
    fn rec(
        g: &Graph,
        v: usize,
        rgs: &mut Vec<u8>,
        blocks: &mut Vec<u64>,
        (lo, hi, cap): (usize, usize, usize),
        out: &mut Vec<SetPartition>,
    ) -> Result<()> {
        let n = g.order();
        if blocks.len() + (n - v) < lo {
            return Ok(());
        }
        if v == n {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    what: "partition count",
                    cap,
                });
            }
            out.push(SetPartition {
                rgs: rgs.clone(),
                blocks: blocks.clone(),
            });
            return Ok(());
        }
        let nb = g.neighbours(v);
        for c in 0..blocks.len() {
            if blocks[c] & nb == 0 {
                blocks[c] |= bit(v);
                rgs[v] = c as u8;
                rec(g, v + 1, rgs, blocks, (lo, hi, cap), out)?;
                blocks[c] &= !bit(v);
            }
        }
        if blocks.len() < hi {
            rgs[v] = blocks.len() as u8;
            blocks.push(bit(v));
            rec(g, v + 1, rgs, blocks, (lo, hi, cap), out)?;
            blocks.pop();
        }
        Ok(())
    }
    rec(
        g,
        0,
        &mut rgs,
        &mut blocks,
        (min_parts, max_parts, cap),
        &mut out,
    )?;
    Ok(out)
}

/// Whether `q` arises from `p` by moving exactly one vertex to another
/// (possibly new) block.
pub fn are_adjacent(p: &SetPartition, q: &SetPartition) -> Result<bool> {
    if p.order() != q.order() {
        return Err(Error::MismatchedPartitions(p.order(), q.order()));
    }
    if p == q {
        return Ok(false);
    }
    Ok((0..p.order()).any(|v| p.without(v) == q.without(v)))
}

/// All distinct independent set partitions within the bounds that differ from
/// `p` by one vertex move, sorted.
pub fn neighbors_of(
    g: &Graph,
    p: &SetPartition,
    min_parts: usize,
    max_parts: usize,
) -> Vec<SetPartition> {
    let mut out: Vec<SetPartition> = p
        .raw_moves()
        .filter(|&(v, target)| target.is_none_or(|c| p.blocks()[c] & g.neighbours(v) == 0))
        .map(|(v, target)| p.apply_move(v, target))
        .filter(|q| (min_parts..=max_parts).contains(&q.part_count()))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

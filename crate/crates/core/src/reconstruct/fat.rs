//! Partitions into `χ(G)` independent sets of size at least 4, for graphs of
//! small maximum degree, by local improvement from an optimal colouring.

use serde::Serialize;

use crate::coloring::optimal_colouring;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};
use crate::partition::SetPartition;

/// Smallest part size and the number of parts of that size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Potential {
    pub min_size: usize,
    pub min_count: usize,
}

impl Potential {
    fn of(blocks: &[u64]) -> Self {
        let min_size = blocks
            .iter()
            .map(|b| b.count_ones() as usize)
            .min()
            .unwrap_or(0);
        let min_count = blocks
            .iter()
            .filter(|b| b.count_ones() as usize == min_size)
            .count();
        Potential {
            min_size,
            min_count,
        }
    }

    /// Larger minimum first, then fewer minimal parts.
    pub fn improves_on(&self, other: &Potential) -> bool {
        (self.min_size, std::cmp::Reverse(self.min_count))
            > (other.min_size, std::cmp::Reverse(other.min_count))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FatPartition {
    pub partition: SetPartition,
    /// Potential before each move and after the last one.
    pub trace: Vec<Potential>,
}

/// Requires `Δ(g) < n/9 - 1/3`.
pub fn find_fat_partition(g: &Graph) -> Result<FatPartition> {
    let n = g.order();
    if 9 * g.max_degree() + 3 >= n {
        return Err(Error::PreconditionViolated(format!(
            "maximum degree {} is not below n/9 - 1/3 for n = {n}",
            g.max_degree()
        )));
    }
    let colours = optimal_colouring(g);
    let k = colours.iter().copied().max().map_or(0, |c| c + 1);
    let mut blocks = vec![0u64; k];
    for (v, &c) in colours.iter().enumerate() {
        blocks[c] |= bit(v);
    }
    let mut trace = vec![Potential::of(&blocks)];
    loop {
        let pot = *trace.last().expect("nonempty");
        if pot.min_size >= 4 {
            break;
        }
        if !(move_lone_vertex(g, &mut blocks, pot.min_size)
            || swap_into_large_part(g, &mut blocks, pot.min_size))
        {
            return Err(Error::Stuck {
                min_size: pot.min_size,
                min_count: pot.min_count,
            });
        }
        let next = Potential::of(&blocks);
        debug_assert!(next.improves_on(&pot));
        trace.push(next);
    }
    blocks.retain(|&b| b != 0);
    Ok(FatPartition {
        partition: SetPartition::from_masks_unchecked(n, blocks),
        trace,
    })
}

fn size(b: u64) -> usize {
    b.count_ones() as usize
}

fn neighbourhood_of(g: &Graph, set: u64) -> u64 {
    bits(set).fold(0, |acc, v| acc | g.neighbours(v))
}

/// A minimal part `A` and a part of size at least `m + 2` with a vertex
/// having no neighbour in `A`: move that vertex into `A`.
fn move_lone_vertex(g: &Graph, blocks: &mut [u64], m: usize) -> bool {
    for a in 0..blocks.len() {
        if size(blocks[a]) != m {
            continue;
        }
        let touched = neighbourhood_of(g, blocks[a]);
        for b in 0..blocks.len() {
            if size(blocks[b]) < m + 2 {
                continue;
            }
            if let Some(v) = bits(blocks[b] & !touched).next() {
                blocks[b] &= !bit(v);
                blocks[a] |= bit(v);
                return true;
            }
        }
    }
    false
}

/// A minimal part `A`, a part `B` of size `m + 1` joined to `A` by a single
/// edge `ab`, and a part `C` of size at least `2m + 1` with `m` vertices
/// not adjacent to `a`: form `{a} ∪ those m`, `B ∪ A \ {a}`, and the rest of `C`.
fn swap_into_large_part(g: &Graph, blocks: &mut [u64], m: usize) -> bool {
    for a in 0..blocks.len() {
        if size(blocks[a]) != m {
            continue;
        }
        for b in 0..blocks.len() {
            if b == a || size(blocks[b]) != m + 1 {
                continue;
            }
            let cross: Vec<usize> = bits(blocks[a])
                .filter(|&x| g.neighbours(x) & blocks[b] != 0)
                .collect();
            let single = cross.len() == 1 && size(g.neighbours(cross[0]) & blocks[b]) == 1;
            if !single {
                continue;
            }
            let x = cross[0];
            for c in 0..blocks.len() {
                if c == a || c == b || size(blocks[c]) < 2 * m + 1 {
                    continue;
                }
                let free: Vec<usize> = bits(blocks[c] & !g.neighbours(x)).take(m).collect();
                if free.len() < m {
                    continue;
                }
                let moved = free.iter().fold(0u64, |acc, &v| acc | bit(v));
                blocks[b] |= blocks[a] & !bit(x);
                blocks[a] = bit(x) | moved;
                blocks[c] &= !moved;
                return true;
            }
        }
    }
    false
}

/// Whether `p` is an independent partition of `g` into `chi` parts of size at least 4.
pub fn is_fat_partition(g: &Graph, p: &SetPartition, chi: usize) -> bool {
    p.is_valid_for(g) && p.part_count() == chi && p.blocks().iter().all(|&b| size(b) >= 4)
}

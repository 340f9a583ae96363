use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{DyckError, DyckPath};

/// Center of a unit box in the 45-degree rotated picture. Boxes directly
/// above one another differ by 2 in `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

/// The region between a lower and an upper Dyck path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    lower: DyckPath,
    upper: DyckPath,
    cells: BTreeSet<Cell>,
}

impl SkewShape {
    pub fn new(lower: &DyckPath, upper: &DyckPath) -> Result<Self, DyckError> {
        if lower.order() != upper.order() {
            return Err(DyckError::OrderMismatch(lower.order(), upper.order()));
        }
        if !upper.lies_above(lower) {
            return Err(DyckError::NotNested);
        }
        let lo = lower.heights();
        let hi = upper.heights();
        let mut cells = BTreeSet::new();
        for x in 1..lo.len().saturating_sub(1) {
            let mut y = lo[x] + 1;
            while y < hi[x] {
                cells.insert(Cell { x: x as i32, y });
                y += 2;
            }
        }
        Ok(SkewShape { lower: lower.clone(), upper: upper.clone(), cells })
    }

    pub fn lower(&self) -> &DyckPath {
        &self.lower
    }

    pub fn upper(&self) -> &DyckPath {
        &self.upper
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }
}

/// A partition of a skew shape into Dyck-shaped ribbon tiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckTiling {
    shape: SkewShape,
    tiles: Vec<Vec<Cell>>,
}

fn x_range(tile: &[Cell]) -> (i32, i32) {
    (tile[0].x, tile[tile.len() - 1].x)
}

fn nested(inner: (i32, i32), outer: (i32, i32)) -> bool {
    outer.0 <= inner.0 && inner.1 <= outer.1
}

impl DyckTiling {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn tiles(&self) -> &[Vec<Cell>] {
        &self.tiles
    }

    /// Tiles partition the shape and each tile is Dyck-shaped.
    pub fn is_valid(&self) -> bool {
        let mut seen = BTreeSet::new();
        for tile in &self.tiles {
            let Some(first) = tile.first() else { return false };
            let shaped = tile.windows(2).all(|w| w[1].x == w[0].x + 1 && (w[1].y - w[0].y).abs() == 1)
                && tile.iter().all(|c| c.y >= first.y)
                && tile[tile.len() - 1].y == first.y;
            if !shaped || !tile.iter().all(|c| self.shape.cells.contains(c) && seen.insert(*c)) {
                return false;
            }
        }
        seen.len() == self.shape.cells.len()
    }

    /// Whenever a tile holds a box directly above a box of another tile, its
    /// x-range sits inside the lower tile's x-range.
    pub fn is_cover_inclusive(&self) -> bool {
        let owner: BTreeMap<Cell, usize> =
            self.tiles.iter().enumerate().flat_map(|(i, t)| t.iter().map(move |c| (*c, i))).collect();
        owner.iter().all(|(c, &i)| match owner.get(&Cell { x: c.x, y: c.y - 2 }) {
            Some(&j) if j != i => nested(x_range(&self.tiles[i]), x_range(&self.tiles[j])),
            _ => true,
        })
    }

    /// Text picture, one letter per tile, highest row first.
    pub fn render(&self) -> String {
        let owner: BTreeMap<Cell, usize> =
            self.tiles.iter().enumerate().flat_map(|(i, t)| t.iter().map(move |c| (*c, i))).collect();
        let hi = self.shape.upper.heights();
        let width = hi.len();
        let top = hi.iter().copied().max().unwrap_or(0);
        let lo = self.shape.lower.heights();
        let mut out = String::new();
        for y in (0..=top).rev() {
            let row: String = (0..width)
                .map(|x| {
                    let cell = Cell { x: x as i32, y };
                    match owner.get(&cell) {
                        Some(&i) => (b'a' + (i % 26) as u8) as char,
                        None if hi[x] == y || lo[x] == y => '*',
                        None => ' ',
                    }
                })
                .collect();
            out.push_str(row.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DyckTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct Search<'a> {
    cells: &'a BTreeSet<Cell>,
    owner: BTreeMap<Cell, usize>,
    tiles: Vec<Vec<Cell>>,
}

impl Search<'_> {
    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<Cell>])) {
        let Some(start) =
            self.cells.iter().filter(|c| !self.owner.contains_key(c)).min_by_key(|c| (c.x, -c.y)).copied()
        else {
            visit(&self.tiles);
            return;
        };
        let mut candidates = Vec::new();
        self.grow(start, &mut vec![start], &mut candidates);
        for tile in candidates {
            if !self.compatible(&tile) {
                continue;
            }
            let id = self.tiles.len();
            for c in &tile {
                self.owner.insert(*c, id);
            }
            self.tiles.push(tile);
            self.run(visit);
            let tile = self.tiles.pop().expect("pushed above");
            for c in &tile {
                self.owner.remove(c);
            }
        }
    }

    // every Dyck-shaped ribbon starting at `start` through free cells
    fn grow(&self, start: Cell, cur: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
        let last = *cur.last().expect("nonempty");
        if last.y == start.y {
            out.push(cur.clone());
        }
        for dy in [1, -1] {
            let next = Cell { x: last.x + 1, y: last.y + dy };
            if next.y < start.y || !self.cells.contains(&next) || self.owner.contains_key(&next) {
                continue;
            }
            cur.push(next);
            self.grow(start, cur, out);
            cur.pop();
        }
    }

    // cover rule against tiles already placed above or below
    fn compatible(&self, tile: &[Cell]) -> bool {
        let range = x_range(tile);
        tile.iter().all(|c| {
            let below = self.owner.get(&Cell { x: c.x, y: c.y - 2 });
            let above = self.owner.get(&Cell { x: c.x, y: c.y + 2 });
            below.is_none_or(|&j| nested(range, x_range(&self.tiles[j])))
                && above.is_none_or(|&j| nested(x_range(&self.tiles[j]), range))
        })
    }
}

fn search(lower: &DyckPath, upper: &DyckPath, visit: &mut dyn FnMut(&[Vec<Cell>])) -> Result<SkewShape, DyckError> {
    let shape = SkewShape::new(lower, upper)?;
    Search { cells: &shape.cells, owner: BTreeMap::new(), tiles: Vec::new() }.run(visit);
    Ok(shape)
}

/// Number of cover-inclusive Dyck tilings of the region between the paths.
pub fn count_ci_tilings(lower: &DyckPath, upper: &DyckPath) -> Result<u64, DyckError> {
    let mut count = 0u64;
    search(lower, upper, &mut |_| count += 1)?;
    Ok(count)
}

/// The cover-inclusive Dyck tilings themselves.
pub fn list_ci_tilings(lower: &DyckPath, upper: &DyckPath) -> Result<Vec<DyckTiling>, DyckError> {
    let mut found = Vec::new();
    let shape = search(lower, upper, &mut |tiles| found.push(tiles.to_vec()))?;
    Ok(found.into_iter().map(|tiles| DyckTiling { shape: shape.clone(), tiles }).collect())
}

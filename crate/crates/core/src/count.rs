//! Counting SwissCheeses by size and characteristic.
//!
//! A cheese of positive size is an application, an abstraction that binds
//! one of the holes of its body, or (affine only) an abstraction that binds
//! nothing. Abstractions only produce cheeses without level-0 holes, and
//! binding a hole of level `l` under the new binder inserts the index `l`,
//! whose cost depends on the size model. [`Counter`] evaluates these
//! recurrences top-down with a memo keyed on canonical characteristics.

use std::cell::RefCell;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::Zero;
use hashbrown::HashTable;
use rustc_hash::FxHasher;

use crate::characteristic::Characteristic;
use crate::term::{Family, Kind, SizeModel, TermClass};

/// Which sort of cheese a memo entry counts. Neutral cheeses only appear
/// as an auxiliary of normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Sort {
    All,
    Normal,
    Neutral,
}

impl From<TermClass> for Sort {
    fn from(class: TermClass) -> Sort {
        match class {
            TermClass::All => Sort::All,
            TermClass::Normal => Sort::Normal,
        }
    }
}

/// Key of a count: what is counted, at which size, with which holes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountKey {
    pub class: TermClass,
    pub family: Family,
    pub model: SizeModel,
    pub n: usize,
    pub m: Characteristic,
}

/// An abstraction with binding at one level: the body has size
/// `inner_size` and characteristic `inner`, and `choices` of its holes at
/// `level` may be the bound one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Binding {
    pub level: usize,
    pub inner_size: usize,
    pub choices: usize,
    pub inner: Characteristic,
}

/// Binding abstractions that yield a cheese of size `n` and characteristic
/// `m`, levels ascending. Empty unless `m` has no level-0 hole.
pub(crate) fn bindings(model: SizeModel, n: usize, m: &Characteristic) -> Vec<Binding> {
    if n == 0 || m.head() != 0 {
        return Vec::new();
    }
    let outer = m.tail();
    let mut out = Vec::new();
    for level in 0.. {
        // one for the binder, the rest for the index
        let Some(inner_size) = n.checked_sub(1 + model.index_size(level)) else {
            break;
        };
        if level > inner_size {
            break;
        }
        let inner = outer.inc(level);
        out.push(Binding {
            level,
            inner_size,
            choices: inner.get(level),
            inner,
        });
    }
    out
}

/// Body of an abstraction with no binding yielding size `n` and
/// characteristic `m`, if there is one.
pub(crate) fn no_binding(n: usize, m: &Characteristic) -> Option<(usize, Characteristic)> {
    (n > 0 && m.head() == 0).then(|| (n - 1, m.tail()))
}

/// A lower bound on the size of a cheese with characteristic `m`.
///
/// Reaching level `L` takes `L` binders, and the leaves (holes plus bound
/// indices) need one application fewer than their number. In a linear
/// cheese each binder also brings its own index.
pub(crate) fn min_size(family: Family, model: SizeModel, m: &[usize]) -> usize {
    let m = canonical(m);
    bound(family, model, m.iter().sum(), m.len())
}

/// [`min_size`] from the number of holes and the canonical length.
fn bound(family: Family, model: SizeModel, holes: usize, len: usize) -> usize {
    let binders = len.saturating_sub(1);
    match family {
        Family::Affine => holes.saturating_sub(1) + binders,
        Family::Linear => {
            (holes + binders).saturating_sub(1) + binders + binders * model.index_size(0)
        }
    }
}

/// Drops trailing zeros.
fn canonical(m: &[usize]) -> &[usize] {
    let len = m.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    &m[..len]
}

const SORTS: usize = 3;
const FAMILIES: usize = 2;
const MODELS: usize = 3;
const NONE: u32 = u32::MAX;
/// Cells with this bit set point into the arena of large values.
const TAG: u64 = 1 << 63;

fn table_index(sort: Sort, family: Family, model: SizeModel) -> usize {
    (sort as usize * FAMILIES + family as usize) * MODELS + model as usize
}

/// Memoized counts. Entries are written once and never change.
///
/// Each table holds one row per characteristic: the counts of the sizes
/// from the smallest possible one up, all smaller sizes counting zero.
/// Counts below `2^63` are stored in place, larger ones in a shared arena.
///
/// A request first raises the size each row must reach (its need), largest
/// needs first, so that every row is planned once at its final need. The
/// rows are then filled top-down in increasing size.
#[derive(Debug)]
pub struct Counter {
    tables: Vec<Table>,
    big: Vec<BigUint>,
}

#[derive(Debug)]
struct Table {
    sort: Sort,
    family: Family,
    model: SizeModel,
    /// Row ids, hashed by characteristic.
    index: HashTable<u32>,
    /// Characteristics of all rows, one byte per level.
    keys: Vec<u8>,
    rows: Vec<Row>,
    cells: Vec<u64>,
}

#[derive(Debug)]
struct Row {
    key: u32,
    key_len: u32,
    /// Cells of sizes `start..start + len` begin at `cells`, with room for
    /// `cap` of them.
    cells: u32,
    start: u32,
    len: u32,
    cap: u32,
    need: u32,
    plan: Option<Box<Plan>>,
}

impl Row {
    /// One past the largest size filled in.
    fn end(&self) -> usize {
        (self.start + self.len) as usize
    }
}

/// What a row needs to grow, as rows of the tables it draws on.
#[derive(Debug, Default)]
struct Plan {
    upto: usize,
    splits: Vec<Split>,
    /// Body row per binding level, [`NONE`] where there is none.
    bodies: Vec<u32>,
    /// Body row of the abstraction binding nothing.
    free: u32,
    /// The neutral row of a normal one.
    neutral: u32,
}

/// `q ⊕ r` with the smallest sizes either side can have. `tied` marks
/// `q = r` when both sides are counted alike.
#[derive(Debug)]
struct Split {
    q: u32,
    r: u32,
    q_min: u16,
    r_min: u16,
    tied: bool,
}

/// Sum of products, in machine words while it fits.
#[derive(Default)]
struct Sum {
    word: u128,
    big: BigUint,
}

impl Sum {
    fn add_word(&mut self, x: u128) {
        match self.word.checked_add(x) {
            Some(w) => self.word = w,
            None => {
                self.big += self.word;
                self.word = x;
            }
        }
    }

    fn finish(mut self) -> BigUint {
        self.big += self.word;
        self.big
    }
}

/// Hole count and canonical length of one side of a partial split.
#[derive(Clone, Copy, Default)]
struct Side {
    holes: usize,
    len: usize,
}

impl Side {
    fn with(self, level: usize, x: usize) -> Side {
        Side {
            holes: self.holes + x,
            len: if x > 0 { level + 1 } else { self.len },
        }
    }
}

/// Scratch state of [`Counter::walk`].
struct Walk<'a> {
    left: usize,
    right: usize,
    m: &'a [usize],
    /// Levels holding holes, and the holes at or above each of them.
    levels: Vec<usize>,
    remaining: Vec<usize>,
    rest: usize,
    q: Vec<usize>,
    r: Vec<usize>,
    splits: Vec<Split>,
}

type Heap = BinaryHeap<(usize, Reverse<usize>, usize)>;

fn hash_key(key: &[u8]) -> u64 {
    let mut h = FxHasher::default();
    key.hash(&mut h);
    h.finish()
}

impl Table {
    fn key(&self, row: usize) -> &[u8] {
        let r = &self.rows[row];
        &self.keys[r.key as usize..(r.key + r.key_len) as usize]
    }

    fn cell(&self, row: usize, n: usize) -> u64 {
        let r = &self.rows[row];
        match n.checked_sub(r.start as usize) {
            Some(i) => self.cells[r.cells as usize + i],
            None => 0,
        }
    }
}

impl Default for Counter {
    fn default() -> Self {
        let mut tables = Vec::with_capacity(SORTS * FAMILIES * MODELS);
        for sort in [Sort::All, Sort::Normal, Sort::Neutral] {
            for family in Family::ALL {
                for model in SizeModel::ALL {
                    debug_assert_eq!(tables.len(), table_index(sort, family, model));
                    tables.push(Table {
                        sort,
                        family,
                        model,
                        index: HashTable::new(),
                        keys: Vec::new(),
                        rows: Vec::new(),
                        cells: Vec::new(),
                    });
                }
            }
        }
        Counter {
            tables,
            big: Vec::new(),
        }
    }
}

impl Counter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized entries.
    pub fn memo_len(&self) -> usize {
        self.tables
            .iter()
            .flat_map(|t| &t.rows)
            .map(|row| row.len as usize)
            .sum()
    }

    pub fn clear(&mut self) {
        *self = Counter::default();
    }

    /// Cheeses of the given family, size `n` and characteristic `m`.
    pub fn count(
        &mut self,
        family: Family,
        model: SizeModel,
        n: usize,
        m: &Characteristic,
    ) -> BigUint {
        self.get(Sort::All, family, model, n, m)
    }

    /// Closed terms of size `n`.
    pub fn count_closed(&mut self, family: Family, model: SizeModel, n: usize) -> BigUint {
        self.count(family, model, n, &Characteristic::empty())
    }

    pub fn count_key(&mut self, key: &CountKey) -> BigUint {
        self.get(key.class.into(), key.family, key.model, key.n, &key.m)
    }

    /// Cheeses of `kind` with size `n` and characteristic `m`.
    pub fn count_kind(&mut self, kind: Kind, n: usize, m: &Characteristic) -> BigUint {
        self.get(kind.class.into(), kind.family, kind.model, n, m)
    }

    /// Closed terms of `kind` for every size `0..=upto`.
    pub fn series(&mut self, kind: Kind, upto: usize) -> Vec<BigUint> {
        let closed = Characteristic::empty();
        // the largest size first, so that each row is planned once
        self.count_kind(kind, upto, &closed);
        (0..=upto).map(|n| self.count_kind(kind, n, &closed)).collect()
    }

    pub(crate) fn get(
        &mut self,
        sort: Sort,
        family: Family,
        model: SizeModel,
        n: usize,
        m: &Characteristic,
    ) -> BigUint {
        let m = m.as_slice();
        if n == 0 {
            return BigUint::from((m == [1]) as u8);
        }
        if min_size(family, model, m) > n {
            return BigUint::zero();
        }
        let table = table_index(sort, family, model);
        let row = self.row(table, m);
        if self.tables[table].rows[row].end() <= n {
            self.raise(table, row, n);
            self.fill(table, row, n);
        }
        self.value(self.tables[table].cell(row, n))
    }

    fn value(&self, cell: u64) -> BigUint {
        if cell & TAG == 0 {
            BigUint::from(cell)
        } else {
            self.big[(cell & !TAG) as usize].clone()
        }
    }

    /// Row of a canonical `m` in a table, created empty if missing.
    fn row(&mut self, table: usize, m: &[usize]) -> usize {
        let mut key = [0u8; 64];
        let mut long = Vec::new();
        let key: &[u8] = if m.len() <= key.len() {
            for (k, &x) in key.iter_mut().zip(m) {
                *k = u8::try_from(x).expect("more than 255 holes at one level");
            }
            &key[..m.len()]
        } else {
            long.extend(m.iter().map(|&x| u8::try_from(x).expect("more than 255 holes at one level")));
            &long
        };
        let hash = hash_key(key);
        let t = &mut self.tables[table];
        let (keys, rows) = (&t.keys, &t.rows);
        let found = t.index.find(hash, |&id| {
            let r = &rows[id as usize];
            &keys[r.key as usize..(r.key + r.key_len) as usize] == key
        });
        if let Some(&id) = found {
            return id as usize;
        }
        let id = t.rows.len();
        let start = min_size(t.family, t.model, m);
        t.rows.push(Row {
            key: u32::try_from(t.keys.len()).expect("memo key arena overflow"),
            key_len: key.len() as u32,
            cells: 0,
            start: u32::try_from(start).expect("size out of range"),
            len: 0,
            cap: 0,
            need: 0,
            plan: None,
        });
        t.keys.extend_from_slice(key);
        let (keys, rows) = (&t.keys, &t.rows);
        t.index.insert_unique(hash, u32::try_from(id).expect("too many characteristics"), |&id| {
            let r = &rows[id as usize];
            hash_key(&keys[r.key as usize..(r.key + r.key_len) as usize])
        });
        id
    }

    /// Makes a row need size `n`, then plans every row whose need grows as
    /// a consequence. A row only needs smaller sizes of other rows, except
    /// that a normal row needs the same size of its neutral row, so popping
    /// the largest need first (normal before neutral on ties) plans each
    /// row after its need is final.
    fn raise(&mut self, table: usize, row: usize, n: usize) {
        let mut heap = Heap::new();
        self.bump(&mut heap, table, row, n);
        while let Some((need, Reverse(table), row)) = heap.pop() {
            if self.tables[table].rows[row].need as usize != need {
                continue;
            }
            let plan = self.plan(table, row, need, &mut heap);
            let r = &mut self.tables[table].rows[row];
            r.plan = Some(Box::new(plan));
        }
    }

    fn bump(&mut self, heap: &mut Heap, table: usize, row: usize, n: usize) {
        let r = &mut self.tables[table].rows[row];
        if n > r.need as usize && n >= r.end() {
            r.need = n as u32;
            heap.push((n, Reverse(table), row));
        }
    }

    fn plan(&mut self, table: usize, row: usize, upto: usize, heap: &mut Heap) -> Plan {
        let t = &self.tables[table];
        let (sort, family, model) = (t.sort, t.family, t.model);
        let m: Vec<usize> = t.key(row).iter().map(|&x| x as usize).collect();
        let mut plan = Plan {
            upto,
            free: NONE,
            neutral: NONE,
            ..Plan::default()
        };
        if upto < min_size(family, model, &m).max(1) {
            return plan;
        }
        match sort {
            Sort::All | Sort::Neutral => {
                let (left, right) = match sort {
                    Sort::All => (Sort::All, Sort::All),
                    _ => (Sort::Neutral, Sort::Normal),
                };
                let levels: Vec<usize> = (0..m.len()).filter(|&l| m[l] > 0).collect();
                let mut remaining: Vec<usize> = levels.iter().map(|&l| m[l]).collect();
                remaining.push(0);
                for i in (0..levels.len()).rev() {
                    remaining[i] += remaining[i + 1];
                }
                let mut walk = Walk {
                    left: table_index(left, family, model),
                    right: table_index(right, family, model),
                    m: &m,
                    levels,
                    remaining,
                    rest: upto - 1,
                    q: vec![0; m.len()],
                    r: m.clone(),
                    splits: Vec::new(),
                };
                let tied = left == right;
                self.walk(&mut walk, 0, Side::default(), Side::default(), tied);
                for s in &walk.splits {
                    self.bump(heap, walk.left, s.q as usize, upto - 1 - s.r_min as usize);
                    self.bump(heap, walk.right, s.r as usize, upto - 1 - s.q_min as usize);
                }
                plan.splits = walk.splits;
            }
            Sort::Normal => {
                let neutral = table_index(Sort::Neutral, family, model);
                let row = self.row(neutral, &m);
                self.bump(heap, neutral, row, upto);
                plan.neutral = row as u32;
            }
        }
        if sort != Sort::Neutral && m.first().is_none_or(|&h| h == 0) {
            let outer = m.get(1..).unwrap_or_default();
            let mut inner = Vec::with_capacity(outer.len() + 1);
            for level in 0.. {
                let cost = 1 + model.index_size(level);
                if level + cost > upto {
                    break;
                }
                inner.clear();
                inner.extend_from_slice(outer);
                if inner.len() <= level {
                    inner.resize(level + 1, 0);
                }
                inner[level] += 1;
                let body = if min_size(family, model, &inner) + cost > upto {
                    NONE
                } else {
                    let body = self.row(table, &inner);
                    self.bump(heap, table, body, upto - cost);
                    body as u32
                };
                plan.bodies.push(body);
            }
            if family == Family::Affine && min_size(family, model, outer) < upto {
                let body = self.row(table, outer);
                self.bump(heap, table, body, upto - 1);
                plan.free = body as u32;
            }
        }
        plan
    }

    /// Collects the splits `q ⊕ r` of `walk.m` that fit in `walk.rest`,
    /// deciding the nonzero levels one at a time and dropping prefixes that
    /// already need more. With both sides of one sort, `(q, k)` and
    /// `(r, rest - k)` count the same, so only `q <= r` is kept.
    fn walk(&mut self, walk: &mut Walk<'_>, i: usize, qs: Side, rs: Side, tied: bool) {
        let t = &self.tables[walk.left];
        let (family, model) = (t.family, t.model);
        let q_min = bound(family, model, qs.holes, qs.len);
        let r_min = bound(family, model, rs.holes, rs.len);
        // every hole still to place adds one, bar the first on an empty
        // side, and some side must reach the top level
        let left = walk.remaining[i];
        let empty = (qs.holes == 0) as usize + (rs.holes == 0) as usize;
        let reach = walk.m.len().saturating_sub(qs.len.max(rs.len).max(1));
        if q_min + r_min + left.saturating_sub(empty) + reach > walk.rest {
            return;
        }
        if i == walk.levels.len() {
            let q = self.row(walk.left, &walk.q[..qs.len]) as u32;
            let r = self.row(walk.right, &walk.r[..rs.len]) as u32;
            walk.splits.push(Split {
                q,
                r,
                q_min: q_min as u16,
                r_min: r_min as u16,
                tied,
            });
            return;
        }
        let level = walk.levels[i];
        let total = walk.m[level];
        let top = if tied { total / 2 } else { total };
        for x in 0..=top {
            walk.q[level] = x;
            walk.r[level] = total - x;
            let (q, r) = (qs.with(level, x), rs.with(level, total - x));
            self.walk(walk, i + 1, q, r, tied && 2 * x == total);
        }
        walk.q[level] = 0;
        walk.r[level] = total;
    }

    /// Fills a row up to size `upto`, which its plan covers. Every size only
    /// depends on smaller sizes (or, for a normal row, on the same size of
    /// a neutral one), so a row that is still being filled already holds
    /// whatever the recursion asks of it and never needs its plan.
    fn fill(&mut self, table: usize, row: usize, upto: usize) {
        let t = &mut self.tables[table];
        let r = &mut t.rows[row];
        let have = r.end();
        if have > upto {
            return;
        }
        // make room for every size up to the need
        let room = (r.need.max(upto as u32) + 1 - r.start) as usize;
        if (r.cap as usize) < room {
            let old = r.cells as usize..r.cells as usize + r.len as usize;
            let at = t.cells.len();
            t.cells.extend_from_within(old);
            t.cells.resize(at + room, 0);
            let r = &mut t.rows[row];
            r.cells = u32::try_from(at).expect("memo cell arena overflow");
            r.cap = room as u32;
        }
        let r = &mut t.rows[row];
        let plan = r.plan.take();
        let (sort, family, model) = (t.sort, t.family, t.model);
        let key: Vec<u8> = t.key(row).to_vec();
        for n in have..=upto {
            let cell = if n == 0 {
                (key == [1]) as u64
            } else {
                let plan = plan.as_deref().filter(|p| p.upto >= n).expect("row filled past its plan");
                let value = self.compute(sort, family, model, &key, plan, n);
                self.store(value)
            };
            let t = &mut self.tables[table];
            let r = &mut t.rows[row];
            debug_assert_eq!(r.end(), n);
            t.cells[(r.cells + r.len) as usize] = cell;
            r.len += 1;
        }
        let r = &mut self.tables[table].rows[row];
        if r.end() <= r.need as usize {
            r.plan = plan;
        }
    }

    fn store(&mut self, value: BigUint) -> u64 {
        match u64::try_from(&value) {
            Ok(x) if x & TAG == 0 => x,
            _ => {
                self.big.push(value);
                (self.big.len() - 1) as u64 | TAG
            }
        }
    }

    /// The count at size `n >= 1` of the row with characteristic `key`.
    fn compute(
        &mut self,
        sort: Sort,
        family: Family,
        model: SizeModel,
        key: &[u8],
        plan: &Plan,
        n: usize,
    ) -> BigUint {
        let rest = n - 1;
        let mut twice = Sum::default();
        let mut once = Sum::default();
        let (left, right) = match sort {
            Sort::All => (Sort::All, Sort::All),
            Sort::Normal | Sort::Neutral => (Sort::Neutral, Sort::Normal),
        };
        let (lt, rt) = (table_index(left, family, model), table_index(right, family, model));
        for s in &plan.splits {
            let (lo, r_min) = (s.q_min as usize, s.r_min as usize);
            if lo + r_min > rest {
                continue;
            }
            let mut hi = rest - r_min;
            self.fill(lt, s.q as usize, hi);
            self.fill(rt, s.r as usize, rest - lo);
            if s.tied {
                hi = hi.min(rest / 2);
            }
            let (qt, rtab) = (&self.tables[lt], &self.tables[rt]);
            let (qr, rr) = (&qt.rows[s.q as usize], &rtab.rows[s.r as usize]);
            // sizes lo..=hi on the left, rest - lo down to rest - hi on the right
            let qcells = &qt.cells[qr.cells as usize + (lo - qr.start as usize)..];
            let rcells = &rtab.cells[rr.cells as usize..];
            let rbase = rest - rr.start as usize;
            for (i, &x) in qcells[..=hi - lo].iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let k = lo + i;
                let y = rcells[rbase - k];
                if y == 0 {
                    continue;
                }
                let acc = if s.tied && 2 * k == rest {
                    &mut once
                } else if left == right {
                    &mut twice
                } else {
                    &mut once
                };
                if (x | y) & TAG == 0 {
                    acc.add_word(x as u128 * y as u128);
                } else {
                    acc.big += self.value(x) * self.value(y);
                }
            }
        }
        if plan.neutral != NONE {
            let nt = table_index(Sort::Neutral, family, model);
            self.fill(nt, plan.neutral as usize, n);
            let x = self.tables[nt].cell(plan.neutral as usize, n);
            self.add(&mut once, x, 1);
        }
        let bt = table_index(sort, family, model);
        for (level, &body) in plan.bodies.iter().enumerate() {
            let cost = 1 + model.index_size(level);
            if body == NONE || n < cost + level {
                continue;
            }
            self.fill(bt, body as usize, n - cost);
            let x = self.tables[bt].cell(body as usize, n - cost);
            // the hole bound here and the ones already at its level
            let choices = key.get(level + 1).map_or(0, |&c| c as u64) + 1;
            self.add(&mut once, x, choices);
        }
        if plan.free != NONE {
            self.fill(bt, plan.free as usize, n - 1);
            let x = self.tables[bt].cell(plan.free as usize, n - 1);
            self.add(&mut once, x, 1);
        }
        let mut total = twice.finish();
        total <<= 1;
        total + once.finish()
    }

    fn add(&self, sum: &mut Sum, cell: u64, times: u64) {
        if cell & TAG == 0 {
            sum.add_word(cell as u128 * times as u128);
        } else {
            sum.big += self.value(cell) * times;
        }
    }
}

thread_local! {
    static COUNTER: RefCell<Counter> = RefCell::new(Counter::new());
}

/// Runs `f` on this thread's shared counter.
pub fn with_counter<R>(f: impl FnOnce(&mut Counter) -> R) -> R {
    COUNTER.with(|c| f(&mut c.borrow_mut()))
}

pub fn count(family: Family, model: SizeModel, n: usize, m: &Characteristic) -> BigUint {
    with_counter(|c| c.count(family, model, n, m))
}

pub fn count_closed(family: Family, model: SizeModel, n: usize) -> BigUint {
    with_counter(|c| c.count_closed(family, model, n))
}

pub fn count_kind(kind: Kind, n: usize, m: &Characteristic) -> BigUint {
    with_counter(|c| c.count_kind(kind, n, m))
}

pub fn series(family: Family, model: SizeModel, class: TermClass, upto: usize) -> Vec<BigUint> {
    with_counter(|c| c.series(Kind::new(family, model, class), upto))
}

pub(crate) fn count_sort(
    sort: Sort,
    family: Family,
    model: SizeModel,
    n: usize,
    m: &Characteristic,
) -> BigUint {
    with_counter(|c| c.get(sort, family, model, n, m))
}

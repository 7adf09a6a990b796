//! The container storage problem: a single bay of `n1 × n2 × n3` cells
//! holds `nc` containers, each with a delivery date `d`. Unloading a
//! container requires rehandling everything stacked above it, so the
//! objective is the sum over containers of `(1/d) · rehandles`, and the
//! search is over permutations assigning containers to a fixed canonical
//! set of occupied cells.
//!
//! Stacking is physical: floor occupancy counts never increase with
//! height, and every container above the ground rests on another one.

use std::collections::HashMap;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hs::{neighbor_index, PitchAdjustment, ProblemAdapter};
use crate::scalar::Scalar;

/// Container identifier, 1-based.
pub type ContainerId = u32;

/// A problem instance: bay dimensions plus one delivery date (days until
/// delivery, >= 1) per container.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n1: u32,
    n2: u32,
    n3: u32,
    delivery_dates: Vec<u32>,
}

impl Instance {
    pub fn new(n1: u32, n2: u32, n3: u32, delivery_dates: Vec<u32>) -> Result<Self> {
        if n1 == 0 || n2 == 0 || n3 == 0 {
            return Err(Error::InvalidParams(
                "bay dimensions must be positive".into(),
            ));
        }
        let capacity = n1 as u64 * n2 as u64 * n3 as u64;
        if delivery_dates.is_empty() {
            return Err(Error::InvalidParams(
                "an instance needs at least one container".into(),
            ));
        }
        if delivery_dates.len() as u64 > capacity {
            return Err(Error::CapacityExceeded {
                nc: delivery_dates.len() as u64,
                capacity,
            });
        }
        if delivery_dates.iter().any(|&d| d == 0) {
            return Err(Error::InvalidParams(
                "delivery dates must be >= 1 day".into(),
            ));
        }
        Ok(Self {
            n1,
            n2,
            n3,
            delivery_dates,
        })
    }

    pub fn dims(&self) -> (u32, u32, u32) {
        (self.n1, self.n2, self.n3)
    }

    pub fn capacity(&self) -> u64 {
        self.n1 as u64 * self.n2 as u64 * self.n3 as u64
    }

    pub fn container_count(&self) -> u32 {
        self.delivery_dates.len() as u32
    }

    pub fn delivery_dates(&self) -> &[u32] {
        &self.delivery_dates
    }

    /// Delivery date of container `id` (1-based).
    pub fn delivery_date(&self, id: ContainerId) -> u32 {
        self.delivery_dates[(id - 1) as usize]
    }
}

/// One bay cell; coordinates are 1-based and `z = 1` is the ground floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellCoord {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl CellCoord {
    /// Canonical slot ordering key: z, then y, then x, ascending.
    fn canonical_key(&self) -> (u32, u32, u32) {
        (self.z, self.y, self.x)
    }
}

/// The occupied cells of a bay in canonical slot order, with each slot's
/// rehandle count (number of occupied cells stacked above it) cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    cells: Vec<CellCoord>,
    rehandles: Vec<u32>,
}

impl Layout {
    /// Build a layout from an arbitrary cell set, sorting it into
    /// canonical order. Use [`check_constraints`] to validate it.
    pub fn from_cells(mut cells: Vec<CellCoord>) -> Self {
        cells.sort_by_key(CellCoord::canonical_key);
        let rehandles = rehandle_counts(&cells);
        Layout { cells, rehandles }
    }

    pub fn slots(&self) -> &[CellCoord] {
        &self.cells
    }

    pub fn slot_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, slot: usize) -> CellCoord {
        self.cells[slot]
    }
}

fn rehandle_counts(cells: &[CellCoord]) -> Vec<u32> {
    let mut columns: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for cell in cells {
        columns.entry((cell.x, cell.y)).or_default().push(cell.z);
    }
    cells
        .iter()
        .map(|cell| {
            columns[&(cell.x, cell.y)]
                .iter()
                .filter(|&&z| z > cell.z)
                .count() as u32
        })
        .collect()
}

/// The canonical occupied-cell set for an instance: floors are filled
/// bottom-up completely, and the topmost partial floor is filled in
/// (y, x) ascending order. Satisfies both stacking constraints by
/// construction.
pub fn build_canonical_layout(instance: &Instance) -> Layout {
    let (n1, n2, n3) = instance.dims();
    let nc = instance.container_count() as usize;
    let mut cells = Vec::with_capacity(nc);
    'fill: for z in 1..=n3 {
        for y in 1..=n2 {
            for x in 1..=n1 {
                if cells.len() == nc {
                    break 'fill;
                }
                cells.push(CellCoord { x, y, z });
            }
        }
    }
    let rehandles = rehandle_counts(&cells);
    Layout { cells, rehandles }
}

/// Number of containers stacked above `slot` (the rehandles needed to
/// unload whatever sits there).
pub fn rehandles(layout: &Layout, slot: usize) -> u32 {
    layout.rehandles[slot]
}

/// Priority of container `id`: the reciprocal of its delivery date.
pub fn priority<T: Scalar>(instance: &Instance, id: ContainerId) -> T {
    T::one() / T::from_u32(instance.delivery_date(id)).expect("date fits in scalar")
}

/// A container-to-slot assignment: `ids()[k]` is the container stored at
/// layout slot `k`. Always a permutation of `1..=nc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    ids: Vec<ContainerId>,
}

impl Arrangement {
    /// Validate and wrap a permutation of `1..=ids.len()`.
    pub fn new(ids: Vec<ContainerId>) -> Result<Self> {
        if !is_permutation(&ids, ids.len() as u32) {
            return Err(Error::Infeasible(
                "arrangement is not a permutation of container ids".into(),
            ));
        }
        Ok(Self { ids })
    }

    pub(crate) fn from_vec_unchecked(ids: Vec<ContainerId>) -> Self {
        debug_assert!(is_permutation(&ids, ids.len() as u32));
        Self { ids }
    }

    pub fn ids(&self) -> &[ContainerId] {
        &self.ids
    }

    pub fn into_vec(self) -> Vec<ContainerId> {
        self.ids
    }

    /// Exchange the containers of slots `a` and `b`; a permutation stays
    /// a permutation.
    pub fn swap_slots(&mut self, a: usize, b: usize) {
        self.ids.swap(a, b);
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

/// True iff `ids` is a permutation of `1..=nc`.
pub fn is_permutation(ids: &[ContainerId], nc: u32) -> bool {
    if ids.len() != nc as usize {
        return false;
    }
    let mut seen = vec![false; nc as usize];
    for &id in ids {
        if id == 0 || id > nc {
            return false;
        }
        let k = (id - 1) as usize;
        if seen[k] {
            return false;
        }
        seen[k] = true;
    }
    true
}

/// Deadline-weighted rehandle count of an arrangement: the sum over
/// slots of `priority(container) · rehandles(slot)`.
pub fn fitness<T: Scalar>(instance: &Instance, layout: &Layout, arrangement: &Arrangement) -> T {
    debug_assert_eq!(arrangement.len(), layout.slot_count());
    let mut total = T::zero();
    for (slot, &id) in arrangement.ids().iter().enumerate() {
        let m = layout.rehandles[slot];
        if m > 0 {
            total = total + priority::<T>(instance, id) * T::from_u32(m).expect("rehandles fit");
        }
    }
    total
}

/// Validation gate for externally supplied layouts: cells in bounds and
/// distinct, per-floor occupancy nonincreasing with height, and every
/// above-ground cell supported by the one below it.
pub fn check_constraints(instance: &Instance, layout: &Layout) -> bool {
    let (n1, n2, n3) = instance.dims();
    let index = |c: &CellCoord| -> usize {
        ((c.x - 1) + (c.y - 1) * n1 + (c.z - 1) * n1 * n2) as usize
    };
    let mut occupied = vec![false; (n1 * n2 * n3) as usize];
    for cell in layout.slots() {
        if cell.x < 1 || cell.x > n1 || cell.y < 1 || cell.y > n2 || cell.z < 1 || cell.z > n3 {
            return false;
        }
        let i = index(cell);
        if occupied[i] {
            return false;
        }
        occupied[i] = true;
    }
    let mut floor_counts = vec![0u32; n3 as usize];
    for cell in layout.slots() {
        floor_counts[(cell.z - 1) as usize] += 1;
    }
    for j in 1..n3 as usize {
        if floor_counts[j] > floor_counts[j - 1] {
            return false;
        }
    }
    for cell in layout.slots() {
        if cell.z > 1 {
            let below = CellCoord {
                x: cell.x,
                y: cell.y,
                z: cell.z - 1,
            };
            if !occupied[index(&below)] {
                return false;
            }
        }
    }
    true
}

/// Rebuild a permutation from a raw id sequence that may contain
/// duplicates: scanning in canonical slot order, the first occurrence of
/// each id is kept and later duplicates are replaced by the missing ids
/// in ascending order. Deterministic, idempotent, and the identity on
/// permutations.
pub fn repair_permutation(raw: Vec<ContainerId>, nc: u32) -> Arrangement {
    let n = nc as usize;
    debug_assert_eq!(raw.len(), n);
    debug_assert!(raw.iter().all(|&id| id >= 1 && id <= nc));
    let mut ids = raw;
    let mut seen = vec![false; n];
    let mut duplicate_slots = Vec::new();
    for (slot, id) in ids.iter().enumerate() {
        let k = (*id - 1) as usize;
        if seen[k] {
            duplicate_slots.push(slot);
        } else {
            seen[k] = true;
        }
    }
    if duplicate_slots.is_empty() {
        return Arrangement { ids };
    }
    let mut missing = seen
        .iter()
        .enumerate()
        .filter(|(_, &present)| !present)
        .map(|(k, _)| (k + 1) as ContainerId);
    for slot in duplicate_slots {
        ids[slot] = missing.next().expect("one missing id per duplicate");
    }
    Arrangement { ids }
}

/// Optimal arrangement for a fixed layout, by sorting: the assignment of
/// priorities to fixed rehandle counts is minimized by pairing the
/// largest priorities with the smallest counts. Ties are broken by id
/// and slot index so the result is deterministic.
pub fn oracle_optimal<T: Scalar>(instance: &Instance, layout: &Layout) -> (Arrangement, T) {
    let nc = instance.container_count();
    debug_assert_eq!(layout.slot_count(), nc as usize);
    // Priority descending == delivery date ascending; integer keys keep
    // the sort exact.
    let mut by_priority: Vec<ContainerId> = (1..=nc).collect();
    by_priority.sort_by_key(|&id| (instance.delivery_date(id), id));
    let mut slots: Vec<usize> = (0..layout.slot_count()).collect();
    slots.sort_by_key(|&s| (layout.rehandles[s], s));

    let mut ids = vec![0; nc as usize];
    for (&slot, &id) in slots.iter().zip(&by_priority) {
        ids[slot] = id;
    }
    let arrangement = Arrangement::from_vec_unchecked(ids);
    let value = fitness(instance, layout, &arrangement);
    (arrangement, value)
}

/// Brute-force minimum over every permutation. Factorial cost; intended
/// for instances with `nc <= 10`.
pub fn exhaustive_minimum<T: Scalar>(instance: &Instance, layout: &Layout) -> (Arrangement, T) {
    let nc = instance.container_count();
    assert!(nc <= 10, "exhaustive search over {nc}! arrangements");
    let priorities: Vec<T> = (1..=nc).map(|id| priority(instance, id)).collect();
    let mut best: Option<(Vec<ContainerId>, T)> = None;
    for perm in (1..=nc).permutations(nc as usize) {
        let mut value = T::zero();
        for (slot, &id) in perm.iter().enumerate() {
            let m = layout.rehandles[slot];
            if m > 0 {
                value = value + priorities[(id - 1) as usize] * T::from_u32(m).expect("fits");
            }
        }
        match &best {
            Some((_, current)) if value >= *current => {}
            _ => best = Some((perm, value)),
        }
    }
    let (ids, value) = best.expect("at least one permutation");
    (Arrangement::from_vec_unchecked(ids), value)
}

/// The storage problem as a harmony-search adapter: one decision
/// variable per canonical layout slot, every domain is `1..=nc`, repair
/// restores the permutation invariant, and a pitch adjustment of the
/// value `k` at a slot swaps the positions of containers `k` and
/// `k ± 1` so feasibility survives.
#[derive(Debug, Clone)]
pub struct StorageAdapter<T: Scalar> {
    instance: Instance,
    layout: Layout,
    domain: Vec<ContainerId>,
    priorities: Vec<T>,
}

/// Wire an instance to the engine over its canonical layout.
pub fn make_adapter<T: Scalar>(instance: Instance) -> StorageAdapter<T> {
    let layout = build_canonical_layout(&instance);
    let nc = instance.container_count();
    let domain: Vec<ContainerId> = (1..=nc).collect();
    let priorities = (1..=nc).map(|id| priority(&instance, id)).collect();
    StorageAdapter {
        instance,
        layout,
        domain,
        priorities,
    }
}

impl<T: Scalar> StorageAdapter<T> {
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn container_count(&self) -> u32 {
        self.instance.container_count()
    }
}

impl<T: Scalar> ProblemAdapter for StorageAdapter<T> {
    type Value = ContainerId;
    type Fitness = T;

    fn variable_count(&self) -> usize {
        self.domain.len()
    }

    fn domain(&self, _i: usize) -> &[ContainerId] {
        &self.domain
    }

    fn distinct_values(&self) -> bool {
        true
    }

    fn random_feasible<R: Rng>(&self, rng: &mut R) -> Vec<ContainerId> {
        let mut ids = self.domain.clone();
        ids.shuffle(rng);
        ids
    }

    fn repair<R: Rng>(&self, raw: Vec<ContainerId>, _rng: &mut R) -> Result<Vec<ContainerId>> {
        Ok(repair_permutation(raw, self.container_count()).into_vec())
    }

    fn is_feasible(&self, values: &[ContainerId]) -> bool {
        is_permutation(values, self.container_count())
    }

    fn fitness(&self, values: &[ContainerId]) -> T {
        debug_assert_eq!(values.len(), self.layout.slot_count());
        let mut total = T::zero();
        for (slot, &id) in values.iter().enumerate() {
            let m = self.layout.rehandles[slot];
            if m > 0 {
                total = total
                    + self.priorities[(id - 1) as usize] * T::from_u32(m).expect("rehandles fit");
            }
        }
        total
    }

    /// Adjusting the value `k` drawn for some slot swaps the positions
    /// of containers `k` and `k ± 1`, so the vector stays a permutation.
    fn apply_pitch_adjustments(
        &self,
        values: &mut [ContainerId],
        adjustments: &[PitchAdjustment<ContainerId>],
    ) {
        let nc = self.domain.len();
        // Inverse of the permutation: positions[id - 1] = slot.
        let mut positions = vec![0usize; nc];
        for (slot, &id) in values.iter().enumerate() {
            positions[(id - 1) as usize] = slot;
        }
        for adj in adjustments {
            let k = adj.value;
            let neighbor = neighbor_index((k - 1) as usize, nc, adj.direction) as u32 + 1;
            if neighbor == k {
                continue;
            }
            let a = positions[(k - 1) as usize];
            let b = positions[(neighbor - 1) as usize];
            values.swap(a, b);
            positions.swap((k - 1) as usize, (neighbor - 1) as usize);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn instance(n1: u32, n2: u32, n3: u32, dates: &[u32]) -> Instance {
        Instance::new(n1, n2, n3, dates.to_vec()).unwrap()
    }

    #[test]
    fn canonical_layout_full_cube() {
        let inst = instance(4, 4, 4, &[1; 64]);
        let layout = build_canonical_layout(&inst);
        assert_eq!(layout.slot_count(), 64);
        assert_eq!(layout.cell(0), CellCoord { x: 1, y: 1, z: 1 });
        assert_eq!(layout.cell(63), CellCoord { x: 4, y: 4, z: 4 });
        assert!(check_constraints(&inst, &layout));
    }

    #[test]
    fn canonical_layout_partial_top_floor() {
        let inst = instance(2, 2, 2, &[1; 5]);
        let layout = build_canonical_layout(&inst);
        let floor1: Vec<_> = layout.slots().iter().filter(|c| c.z == 1).collect();
        let floor2: Vec<_> = layout.slots().iter().filter(|c| c.z == 2).collect();
        assert_eq!(floor1.len(), 4);
        assert_eq!(floor2.len(), 1);
        assert_eq!(*floor2[0], CellCoord { x: 1, y: 1, z: 2 });
        assert!(check_constraints(&inst, &layout));
    }

    #[test]
    fn canonical_layout_keeps_two_containers_on_the_ground() {
        let inst = instance(2, 2, 2, &[1, 2]);
        let layout = build_canonical_layout(&inst);
        assert!(layout.slots().iter().all(|c| c.z == 1));
    }

    #[test]
    fn rehandle_counts_in_a_full_cube() {
        let inst = instance(4, 4, 4, &[1; 64]);
        let layout = build_canonical_layout(&inst);
        // Any ground slot has three containers above it.
        assert_eq!(rehandles(&layout, 0), 3);
        // Any top-floor slot has none.
        assert_eq!(rehandles(&layout, 63), 0);
    }

    #[test]
    fn rehandle_counts_single_stack() {
        let inst = instance(1, 1, 2, &[1, 2]);
        let layout = build_canonical_layout(&inst);
        assert_eq!(rehandles(&layout, 0), 1);
        assert_eq!(rehandles(&layout, 1), 0);
    }

    #[test]
    fn priority_is_reciprocal_date() {
        let inst = instance(2, 2, 1, &[1, 4, 2]);
        assert_eq!(priority::<f64>(&inst, 1), 1.0);
        assert_eq!(priority::<f64>(&inst, 2), 0.25);
        assert_eq!(priority::<f64>(&inst, 3), 0.5);
    }

    #[test]
    fn fitness_is_zero_on_a_single_floor() {
        let inst = instance(3, 2, 1, &[1, 2, 3, 4, 5]);
        let layout = build_canonical_layout(&inst);
        let arr = Arrangement::new(vec![3, 1, 4, 2, 5]).unwrap();
        assert_eq!(fitness::<f64>(&inst, &layout, &arr), 0.0);
    }

    #[test]
    fn fitness_two_high_stack_enumeration() {
        let inst = instance(1, 1, 2, &[1, 2]);
        let layout = build_canonical_layout(&inst);
        // Container 1 at the bottom: its priority 1.0 pays one rehandle.
        let bottom_first = Arrangement::new(vec![1, 2]).unwrap();
        assert_eq!(fitness::<f64>(&inst, &layout, &bottom_first), 1.0);
        // Container 1 on top: container 2's priority 0.5 pays instead.
        let top_first = Arrangement::new(vec![2, 1]).unwrap();
        assert_eq!(fitness::<f64>(&inst, &layout, &top_first), 0.5);
    }

    #[test]
    fn oracle_matches_exhaustive_on_the_full_two_cube() {
        let inst = instance(2, 2, 2, &[1, 2, 3, 4, 5, 6, 7, 8]);
        let layout = build_canonical_layout(&inst);
        let (_, oracle_value) = oracle_optimal::<f64>(&inst, &layout);
        let (_, brute_value) = exhaustive_minimum::<f64>(&inst, &layout);
        let expected = 1.0 / 5.0 + 1.0 / 6.0 + 1.0 / 7.0 + 1.0 / 8.0;
        assert!((oracle_value - expected).abs() < 1e-9);
        assert!((brute_value - expected).abs() < 1e-9);
    }

    #[test]
    fn oracle_puts_the_urgent_container_on_top() {
        let inst = instance(1, 1, 2, &[1, 2]);
        let layout = build_canonical_layout(&inst);
        let (arr, value) = oracle_optimal::<f64>(&inst, &layout);
        assert_eq!(arr.ids(), &[2, 1]);
        assert!((value - 0.5).abs() < 1e-9);
    }

    #[test]
    fn oracle_on_a_single_floor_is_zero() {
        let inst = instance(2, 2, 1, &[3, 1, 4, 1]);
        let layout = build_canonical_layout(&inst);
        let (_, value) = oracle_optimal::<f64>(&inst, &layout);
        assert_eq!(value, 0.0);
    }

    #[test]
    fn constraints_reject_floating_and_top_heavy_layouts() {
        let inst = instance(2, 2, 2, &[1, 2, 3]);
        let floating = Layout::from_cells(vec![CellCoord { x: 1, y: 1, z: 2 }]);
        assert!(!check_constraints(&inst, &floating));

        // Floor counts (2, 3): more containers above than below.
        let top_heavy = Layout::from_cells(vec![
            CellCoord { x: 1, y: 1, z: 1 },
            CellCoord { x: 2, y: 1, z: 1 },
            CellCoord { x: 1, y: 1, z: 2 },
            CellCoord { x: 2, y: 1, z: 2 },
            CellCoord { x: 1, y: 2, z: 2 },
        ]);
        assert!(!check_constraints(&inst, &top_heavy));
    }

    #[test]
    fn constraints_reject_out_of_bounds_and_duplicates() {
        let inst = instance(2, 2, 2, &[1, 2]);
        let out = Layout::from_cells(vec![CellCoord { x: 3, y: 1, z: 1 }]);
        assert!(!check_constraints(&inst, &out));
        let dup = Layout::from_cells(vec![
            CellCoord { x: 1, y: 1, z: 1 },
            CellCoord { x: 1, y: 1, z: 1 },
        ]);
        assert!(!check_constraints(&inst, &dup));
    }

    #[test]
    fn repair_keeps_first_occurrences_and_fills_ascending() {
        let repaired = repair_permutation(vec![2, 2, 3, 3], 4);
        assert_eq!(repaired.ids(), &[2, 1, 3, 4]);

        let repaired = repair_permutation(vec![1, 1, 1], 3);
        assert_eq!(repaired.ids(), &[1, 2, 3]);
    }

    #[test]
    fn repair_is_identity_on_permutations() {
        let perm = vec![4, 2, 1, 3];
        assert_eq!(repair_permutation(perm.clone(), 4).ids(), &perm[..]);
    }

    #[test]
    fn adapter_trivial_single_container() {
        let adapter = make_adapter::<f64>(instance(1, 1, 1, &[9]));
        assert_eq!(adapter.variable_count(), 1);
        assert_eq!(adapter.domain(0), &[1]);
        assert_eq!(adapter.fitness(&[1]), 0.0);
    }

    #[test]
    fn adapter_pitch_adjustment_swaps_and_inverts() {
        use crate::hs::Direction;
        let adapter = make_adapter::<f64>(instance(2, 2, 2, &[1, 2, 3, 4, 5]));
        let adjust_3_up = PitchAdjustment {
            variable: 0,
            value: 3u32,
            direction: Direction::Up,
        };
        let original = vec![3u32, 1, 4, 2, 5];
        let mut v = original.clone();
        // Adjusting container 3 up swaps the positions of ids 3 and 4.
        adapter.apply_pitch_adjustments(&mut v, &[adjust_3_up]);
        assert_eq!(v, vec![4, 1, 3, 2, 5]);
        // The same adjustment is an involution.
        adapter.apply_pitch_adjustments(&mut v, &[adjust_3_up]);
        assert_eq!(v, original);
    }

    #[test]
    fn adapter_pitch_adjustment_clamps_at_id_range() {
        use crate::hs::Direction;
        let adapter = make_adapter::<f64>(instance(2, 2, 1, &[1, 2, 3]));
        let mut v = vec![3u32, 2, 1];
        // Container 3 has no +1 neighbor; the single valid direction is
        // down, so ids 3 and 2 swap.
        adapter.apply_pitch_adjustments(
            &mut v,
            &[PitchAdjustment {
                variable: 0,
                value: 3u32,
                direction: Direction::Up,
            }],
        );
        assert_eq!(v, vec![2, 3, 1]);
    }

    #[test]
    fn adapter_fitness_agrees_with_module_fitness() {
        let inst = instance(2, 2, 2, &[5, 1, 44, 2, 9, 100, 3, 17]);
        let adapter = make_adapter::<f64>(inst.clone());
        let layout = build_canonical_layout(&inst);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let ids = adapter.random_feasible(&mut rng);
            let arr = Arrangement::new(ids.clone()).unwrap();
            let a = adapter.fitness(&ids);
            let b = fitness::<f64>(&inst, &layout, &arr);
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn instance_rejects_bad_input() {
        assert!(Instance::new(0, 2, 2, vec![1]).is_err());
        assert!(Instance::new(2, 2, 2, vec![]).is_err());
        assert!(Instance::new(2, 2, 2, vec![1, 0]).is_err());
        let err = Instance::new(2, 2, 2, vec![1; 9]).unwrap_err();
        assert!(matches!(
            err,
            Error::CapacityExceeded {
                nc: 9,
                capacity: 8
            }
        ));
    }
}

//! Exhaustive BFS enumeration of a finite Coxeter group into a `GroupTable`.
//!
//! Lengths are BFS depths in the Cayley graph under LEFT multiplication by
//! the simple generators. Element ids are assigned layer by layer, sorting
//! each layer by the element's canonical payload, so ids are deterministic
//! across runs, platforms, and thread counts.

use crate::error::GroupError;
use crate::family::{Family, GroupSpec};
use crate::groups::dihedral::{self, Dihedral};
use crate::groups::matrix_rep::{self, Scalar, SquareMat};
use crate::groups::window::{self, Reflection, Window};
use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;
use std::time::Instant;

/// Enumeration limits. The defaults keep accidental E7-sized requests from
/// eating the machine; both are overridable from the CLI.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_elements: u64,
    pub max_seconds: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 1_000_000,
            max_seconds: 1800,
        }
    }
}

/// A fully enumerated group: lengths, generator and reflection actions as
/// index permutations, and the canonical key of every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub spec: GroupSpec,
    /// Coxeter length of each element, non-decreasing in element id.
    pub lengths: Vec<u32>,
    /// Canonical textual payload of each element (cache format).
    pub keys: Vec<String>,
    /// gen_action[g][w] = id of s_g * w.
    pub gen_action: Vec<Vec<u32>>,
    /// Element ids of the reflections, ascending.
    pub reflections: Vec<u32>,
    /// refl_action[k][w] = id of t_k * w, parallel to `reflections`.
    pub refl_action: Vec<Vec<u32>>,
    /// Window payloads for the A/B/D families.
    pub windows: Option<Vec<Window>>,
}

impl GroupTable {
    pub fn size(&self) -> usize {
        self.lengths.len()
    }

    pub fn max_length(&self) -> u32 {
        *self.lengths.last().unwrap()
    }

    /// Human-readable label: window notation where available, else the key.
    pub fn label(&self, id: u32) -> String {
        match &self.windows {
            Some(ws) => ws[id as usize].to_string(),
            None => self.keys[id as usize].clone(),
        }
    }

    pub fn index_of_key(&self, key: &str) -> Option<u32> {
        self.keys.iter().position(|k| k == key).map(|i| i as u32)
    }

    pub fn index_of_window(&self, w: &Window) -> Option<u32> {
        self.windows
            .as_ref()
            .and_then(|ws| ws.iter().position(|x| x == w))
            .map(|i| i as u32)
    }

    /// Cover neighbors of `id` through the reflection table: all t*w with a
    /// length gap of exactly one. This is the generic oracle the local
    /// covering rules are tested against.
    pub fn generic_covers(&self, id: u32) -> (Vec<u32>, Vec<u32>) {
        let l = self.lengths[id as usize] as i64;
        let mut ups = Vec::new();
        let mut downs = Vec::new();
        for action in &self.refl_action {
            let other = action[id as usize];
            let lo = self.lengths[other as usize] as i64;
            if lo == l + 1 {
                ups.push(other);
            } else if lo == l - 1 {
                downs.push(other);
            }
        }
        ups.sort_unstable();
        downs.sort_unstable();
        (ups, downs)
    }
}

struct Enumerated<E> {
    elements: Vec<E>,
    lengths: Vec<u32>,
    index: HashMap<E, u32>,
}

fn bfs_layers<E, G>(
    identity: E,
    gens: &[G],
    apply: impl Fn(&G, &E) -> E,
    budget: &Budget,
) -> Result<Enumerated<E>, GroupError>
where
    E: Clone + Eq + Hash + Ord,
{
    let start = Instant::now();
    let mut index: HashMap<E, u32> = HashMap::new();
    let mut elements: Vec<E> = Vec::new();
    let mut lengths: Vec<u32> = Vec::new();
    let mut layer: Vec<E> = vec![identity.clone()];
    index.insert(identity.clone(), 0);
    elements.push(identity);
    lengths.push(0);
    let mut depth = 0u32;
    while !layer.is_empty() {
        if start.elapsed().as_secs() > budget.max_seconds {
            return Err(GroupError::OverflowBudget(format!(
                "enumeration exceeded {}s wall clock at {} elements",
                budget.max_seconds,
                elements.len()
            )));
        }
        depth += 1;
        let mut next: BTreeSet<E> = BTreeSet::new();
        for e in &layer {
            for g in gens {
                let e2 = apply(g, e);
                if !index.contains_key(&e2) {
                    next.insert(e2);
                }
            }
        }
        layer = Vec::with_capacity(next.len());
        for e in next {
            if elements.len() as u64 >= budget.max_elements {
                return Err(GroupError::OverflowBudget(format!(
                    "enumeration exceeded {} elements",
                    budget.max_elements
                )));
            }
            index.insert(e.clone(), elements.len() as u32);
            elements.push(e.clone());
            lengths.push(depth);
            layer.push(e);
        }
    }
    Ok(Enumerated {
        elements,
        lengths,
        index,
    })
}

fn build_table<E, G>(
    spec: GroupSpec,
    identity: E,
    gens: &[G],
    refls: &[G],
    apply: impl Fn(&G, &E) -> E,
    key_of: impl Fn(&E) -> String,
    budget: &Budget,
) -> Result<(GroupTable, Vec<E>), GroupError>
where
    E: Clone + Eq + Hash + Ord,
{
    let expected = spec.order();
    if expected > budget.max_elements as u128 {
        return Err(GroupError::OverflowBudget(format!(
            "{spec} has {expected} elements, over the budget of {}",
            budget.max_elements
        )));
    }
    let enumerated = bfs_layers(identity, gens, &apply, budget)?;
    assert_eq!(
        enumerated.elements.len() as u128,
        expected,
        "{spec}: BFS found a different order than the formula"
    );

    let id_of = |e: &E| -> u32 { enumerated.index[e] };
    let gen_action: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| enumerated.elements.iter().map(|e| id_of(&apply(g, e))).collect())
        .collect();

    let mut refl_pairs: Vec<(u32, Vec<u32>)> = refls
        .iter()
        .map(|t| {
            let tid = id_of(&apply(t, &enumerated.elements[0]));
            let action = enumerated.elements.iter().map(|e| id_of(&apply(t, e))).collect();
            (tid, action)
        })
        .collect();
    refl_pairs.sort_by_key(|(tid, _)| *tid);
    assert_eq!(
        refl_pairs.len(),
        spec.reflection_count(),
        "{spec}: reflection count mismatch"
    );
    let reflections: Vec<u32> = refl_pairs.iter().map(|(tid, _)| *tid).collect();
    let refl_action: Vec<Vec<u32>> = refl_pairs.into_iter().map(|(_, a)| a).collect();

    let max_len = *enumerated.lengths.last().unwrap();
    assert_eq!(
        max_len as usize,
        spec.reflection_count(),
        "{spec}: max length should equal |T|"
    );

    let keys = enumerated.elements.iter().map(key_of).collect();
    let table = GroupTable {
        spec,
        lengths: enumerated.lengths,
        keys,
        gen_action,
        reflections,
        refl_action,
        windows: None,
    };
    Ok((table, enumerated.elements))
}

/// Enumerate the group described by `spec` within `budget`.
pub fn enumerate(spec: GroupSpec, budget: &Budget) -> Result<GroupTable, GroupError> {
    match spec.family {
        Family::A | Family::B | Family::D => {
            let len = spec.window_len();
            let gens = window::generators(spec.family, len);
            let refls = match spec.family {
                Family::A => window::reflections_a(len),
                Family::B => window::reflections_b(len),
                _ => window::reflections_d(len),
            };
            let (mut table, elements) = build_table(
                spec,
                Window::identity(len),
                &gens,
                &refls,
                |t: &Reflection, w: &Window| t.apply(w),
                Window::key,
                budget,
            )?;
            table.windows = Some(elements);
            Ok(table)
        }
        Family::I2 => {
            let m = spec.m.unwrap();
            let gens = dihedral::generators().to_vec();
            let refls = dihedral::reflections(m);
            let (table, _) = build_table(
                spec,
                Dihedral::identity(),
                &gens,
                &refls,
                |g: &Dihedral, x: &Dihedral| g.mul(*x, m),
                Dihedral::key,
                budget,
            )?;
            Ok(table)
        }
        Family::H3 => {
            let gens = matrix_rep::h3_generators();
            enumerate_matrix(spec, gens, budget)
        }
        Family::F4 => {
            let gens = matrix_rep::f4_generators();
            enumerate_matrix(spec, gens, budget)
        }
        Family::E6 => {
            let gens = matrix_rep::e6_generators();
            enumerate_matrix(spec, gens, budget)
        }
    }
}

fn enumerate_matrix<T: Scalar>(
    spec: GroupSpec,
    gens: Vec<SquareMat<T>>,
    budget: &Budget,
) -> Result<GroupTable, GroupError> {
    let refls = matrix_rep::reflection_closure(&gens);
    let n = gens[0].n;
    let (table, _) = build_table(
        spec,
        SquareMat::identity(n),
        &gens,
        &refls,
        |g: &SquareMat<T>, x: &SquareMat<T>| g.mul(x),
        SquareMat::key,
        budget,
    )?;
    Ok(table)
}

/// Rebuild per-reflection actions from generator actions alone, by walking
/// each reflection down the length function to get a reduced word and
/// composing the generator permutations along it. Used when loading a
/// cached table; agrees with the directly computed actions (tested).
pub fn refl_actions_from_generators(
    lengths: &[u32],
    gen_action: &[Vec<u32>],
    reflections: &[u32],
) -> Vec<Vec<u32>> {
    let size = lengths.len();
    reflections
        .iter()
        .map(|&t| {
            // reduced word t = s_{g1} ... s_{gk}
            let mut word = Vec::new();
            let mut cur = t;
            while lengths[cur as usize] > 0 {
                let g = (0..gen_action.len())
                    .find(|&g| {
                        lengths[gen_action[g][cur as usize] as usize] < lengths[cur as usize]
                    })
                    .expect("no descent found; table is inconsistent");
                word.push(g);
                cur = gen_action[g][cur as usize];
            }
            // left-multiplication action composes right factor first
            let mut action: Vec<u32> = (0..size as u32).collect();
            for &g in word.iter().rev() {
                for slot in action.iter_mut() {
                    *slot = gen_action[g][*slot as usize];
                }
            }
            action
        })
        .collect()
}

//! Seeded random hb-graph generator.
//!
//! Vertices come from a pool of `n_max` ids split into an interconnect tier
//! and `n_components` groups, each group holding a small important tier and
//! a large ordinary tier. Every hb-edge belongs to one group: it draws 1 to
//! `max_important_per_edge` important vertices uniformly and fills up with
//! ordinary vertices picked by rank-based Zipf sampling, so a few ordinary
//! vertices recur across many hb-edges. Groups are then stitched into one
//! component (when requested) by inserting interconnect vertices into
//! hb-edges of two distinct groups along a random spanning tree.
//!
//! All randomness flows from one ChaCha8 generator seeded with `seed`, so
//! equal configs produce identical graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hbgraph::{HbEdge, HbGraph};
use crate::mset::Multiset;

fn default_powerlaw_exponent() -> f64 {
    2.5
}

fn default_max_multiplicity() -> u32 {
    3
}

fn default_connect_single() -> bool {
    true
}

/// Parameters of the random hb-graph generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    /// Size of the vertex id pool; only vertices that end up in some
    /// hb-edge are retained.
    pub n_max: usize,
    /// Number of groups (k).
    pub n_components: usize,
    /// Size of the interconnect tier used to stitch groups together.
    pub n_interconnect: usize,
    /// Important-tier size per group; must have `n_components` entries.
    pub important_per_group: Vec<usize>,
    /// Total hb-edge count, split as evenly as possible across groups.
    pub n_hbedges: usize,
    /// Upper bound on every hb-edge's support cardinality.
    pub max_support_cardinality: usize,
    /// Upper bound on important vertices per hb-edge (at least 1 is always
    /// included).
    pub max_important_per_edge: usize,
    /// Exponent of the rank-based Zipf law for ordinary-vertex selection.
    #[serde(default = "default_powerlaw_exponent")]
    pub powerlaw_exponent: f64,
    /// Multiplicities are uniform integers in `1..=max_multiplicity`.
    #[serde(default = "default_max_multiplicity")]
    pub max_multiplicity: u32,
    /// Insert interconnect vertices so the support hypergraph becomes one
    /// connected component.
    #[serde(default = "default_connect_single")]
    pub connect_single: bool,
    #[serde(default)]
    pub seed: u64,
}

impl Default for GeneratorConfig {
    /// The headline scale: a 10000-vertex pool, 5 groups with important
    /// tiers (6, 16, 12, 18, 2), 10 interconnect vertices, 300 hb-edges of
    /// support at most 15 with at most 2 important vertices each.
    fn default() -> Self {
        Self {
            n_max: 10_000,
            n_components: 5,
            n_interconnect: 10,
            important_per_group: vec![6, 16, 12, 18, 2],
            n_hbedges: 300,
            max_support_cardinality: 15,
            max_important_per_edge: 2,
            powerlaw_exponent: default_powerlaw_exponent(),
            max_multiplicity: default_max_multiplicity(),
            connect_single: true,
            seed: 0,
        }
    }
}

impl GeneratorConfig {
    /// Group sizes: the pool minus the interconnect tier, split as evenly
    /// as possible.
    fn group_sizes(&self) -> Vec<usize> {
        let remaining = self.n_max.saturating_sub(self.n_interconnect);
        let base = remaining / self.n_components;
        let extra = remaining % self.n_components;
        (0..self.n_components)
            .map(|j| base + usize::from(j < extra))
            .collect()
    }

    /// Hb-edge count per group: as even as possible, first groups get the
    /// remainder.
    fn edges_per_group(&self) -> Vec<usize> {
        let base = self.n_hbedges / self.n_components;
        let extra = self.n_hbedges % self.n_components;
        (0..self.n_components)
            .map(|j| base + usize::from(j < extra))
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InfeasibleConfig(msg));
        let k = self.n_components;
        if k == 0 {
            return fail("n_components must be at least 1".into());
        }
        if self.important_per_group.len() != k {
            return fail(format!(
                "important_per_group must have n_components = {k} entries, got {}",
                self.important_per_group.len()
            ));
        }
        let total_important: usize = self.important_per_group.iter().sum();
        if total_important + self.n_interconnect > self.n_max {
            return fail(format!(
                "important tiers ({total_important}) plus interconnect tier ({}) exceed the \
                 vertex pool n_max = {}",
                self.n_interconnect, self.n_max
            ));
        }
        if self.max_support_cardinality < 1 {
            return fail("max_support_cardinality must be at least 1".into());
        }
        if self.n_hbedges < k {
            return fail(format!(
                "n_hbedges = {} cannot cover {k} groups with at least one hb-edge each",
                self.n_hbedges
            ));
        }
        if self.max_important_per_edge < 1 {
            return fail("max_important_per_edge must be at least 1".into());
        }
        if self.max_multiplicity < 1 {
            return fail("max_multiplicity must be at least 1".into());
        }
        if !self.powerlaw_exponent.is_finite() || self.powerlaw_exponent < 0.0 {
            return fail(format!(
                "powerlaw_exponent must be finite and non-negative, got {}",
                self.powerlaw_exponent
            ));
        }
        for (j, (&imp, &size)) in self
            .important_per_group
            .iter()
            .zip(self.group_sizes().iter())
            .enumerate()
        {
            if imp == 0 {
                return fail(format!(
                    "important_per_group[{j}] must be at least 1 (every hb-edge includes an \
                     important vertex)"
                ));
            }
            if imp > size {
                return fail(format!(
                    "important_per_group[{j}] = {imp} exceeds the group capacity {size}"
                ));
            }
        }
        if self.connect_single && k >= 2 {
            if self.n_interconnect < k - 1 {
                return fail(format!(
                    "connecting {k} groups needs at least {} interconnect vertices, got {}",
                    k - 1,
                    self.n_interconnect
                ));
            }
            if self.max_support_cardinality < 3 {
                return fail(
                    "interconnection inserts vertices into existing hb-edges and needs \
                     max_support_cardinality of at least 3 for headroom"
                        .into(),
                );
            }
        }
        Ok(())
    }
}

/// Generation-time role of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    /// Member of group `j`'s important tier (0-based group index).
    Important(usize),
    /// Member of group `j`'s ordinary tier.
    Ordinary(usize),
    /// Member of the interconnect tier.
    Interconnect,
}

impl VertexLabel {
    pub fn is_important(&self) -> bool {
        matches!(self, VertexLabel::Important(_))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Important(j) => write!(f, "important:{j}"),
            VertexLabel::Ordinary(j) => write!(f, "ordinary:{j}"),
            VertexLabel::Interconnect => write!(f, "interconnect"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "interconnect" {
            return Ok(VertexLabel::Interconnect);
        }
        let bad = || Error::Parse(format!("invalid vertex label `{s}`"));
        let (kind, idx) = s.split_once(':').ok_or_else(bad)?;
        let j: usize = idx.parse().map_err(|_| bad())?;
        match kind {
            "important" => Ok(VertexLabel::Important(j)),
            "ordinary" => Ok(VertexLabel::Ordinary(j)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A generated hb-graph together with its ground-truth vertex labels and
/// the config that produced it.
#[derive(Debug, Clone)]
pub struct GeneratedGraph {
    pub graph: HbGraph,
    labels: BTreeMap<String, VertexLabel>,
    pub config: GeneratorConfig,
}

impl GeneratedGraph {
    /// Ground-truth label of every retained vertex.
    pub fn group_labels(&self) -> &BTreeMap<String, VertexLabel> {
        &self.labels
    }
}

/// Uniform sample of `amount` distinct indices from `0..n`, in selection
/// order (partial Fisher-Yates).
fn sample_uniform(rng: &mut ChaCha8Rng, n: usize, amount: usize) -> Vec<usize> {
    debug_assert!(amount <= n);
    let mut idx: Vec<usize> = (0..n).collect();
    for t in 0..amount {
        let r = rng.random_range(t..n);
        idx.swap(t, r);
    }
    idx.truncate(amount);
    idx
}

/// Zipf sample without replacement: index `i` (rank `i + 1`) carries weight
/// `(i + 1)^-s`; weights renormalize over the remaining candidates.
fn sample_zipf(rng: &mut ChaCha8Rng, n: usize, amount: usize, s: f64) -> Vec<usize> {
    debug_assert!(amount <= n);
    let mut candidates: Vec<(usize, f64)> =
        (0..n).map(|i| (i, ((i + 1) as f64).powf(-s))).collect();
    let mut picked = Vec::with_capacity(amount);
    for _ in 0..amount {
        let total: f64 = candidates.iter().map(|&(_, w)| w).sum();
        let mut x = rng.random_range(0.0..total);
        let mut chosen = candidates.len() - 1;
        for (pos, &(_, w)) in candidates.iter().enumerate() {
            if x < w {
                chosen = pos;
                break;
            }
            x -= w;
        }
        picked.push(candidates.swap_remove(chosen).0);
    }
    picked
}

/// Hb-edge under construction.
struct DraftEdge {
    members: BTreeMap<String, f64>,
    n_important: usize,
}

impl DraftEdge {
    fn support(&self) -> usize {
        self.members.len()
    }
}

struct Generator<'a> {
    cfg: &'a GeneratorConfig,
    rng: ChaCha8Rng,
    important: Vec<Vec<String>>,
    ordinary: Vec<Vec<String>>,
    interconnect: Vec<String>,
    edges: Vec<DraftEdge>,
    /// Hb-edge index range per group.
    ranges: Vec<(usize, usize)>,
}

impl<'a> Generator<'a> {
    fn new(cfg: &'a GeneratorConfig) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let width = cfg.n_max.saturating_sub(1).to_string().len();
        let mut pool: Vec<String> = (0..cfg.n_max).map(|i| format!("v{i:0width$}")).collect();
        pool.shuffle(&mut rng);

        let interconnect: Vec<String> = pool[..cfg.n_interconnect].to_vec();
        let mut important = Vec::with_capacity(cfg.n_components);
        let mut ordinary = Vec::with_capacity(cfg.n_components);
        let mut offset = cfg.n_interconnect;
        for (j, size) in cfg.group_sizes().into_iter().enumerate() {
            let group = &pool[offset..offset + size];
            offset += size;
            let n_imp = cfg.important_per_group[j];
            important.push(group[..n_imp].to_vec());
            ordinary.push(group[n_imp..].to_vec());
        }

        Self {
            cfg,
            rng,
            important,
            ordinary,
            interconnect,
            edges: Vec::with_capacity(cfg.n_hbedges),
            ranges: Vec::with_capacity(cfg.n_components),
        }
    }

    fn random_multiplicity(&mut self) -> f64 {
        self.rng.random_range(1..=self.cfg.max_multiplicity) as f64
    }

    /// Draws one hb-edge of group `j`: 1..=max_important_per_edge important
    /// vertices uniformly, the rest Zipf-sampled from the ordinary tier.
    fn draw_edge(&mut self, j: usize) -> DraftEdge {
        let cfg = self.cfg;
        let c_lo = 2.min(cfg.max_support_cardinality);
        let c = self
            .rng
            .random_range(c_lo..=cfg.max_support_cardinality);
        let q_hi = cfg
            .max_important_per_edge
            .min(self.important[j].len())
            .min(c);
        let q = self.rng.random_range(1..=q_hi);

        let mut edge = DraftEdge {
            members: BTreeMap::new(),
            n_important: q,
        };
        for idx in sample_uniform(&mut self.rng, self.important[j].len(), q) {
            let id = self.important[j][idx].clone();
            let m = self.random_multiplicity();
            edge.members.insert(id, m);
        }
        let n_ord = (c - q).min(self.ordinary[j].len());
        for idx in sample_zipf(
            &mut self.rng,
            self.ordinary[j].len(),
            n_ord,
            cfg.powerlaw_exponent,
        ) {
            let id = self.ordinary[j][idx].clone();
            let m = self.random_multiplicity();
            edge.members.insert(id, m);
        }
        edge
    }

    /// Connected components of one group's hb-edges (edges sharing a vertex
    /// are joined), each sorted, ordered by smallest edge index.
    fn components(&self, j: usize) -> Vec<Vec<usize>> {
        let (lo, hi) = self.ranges[j];
        let mut parent: Vec<usize> = (0..hi - lo).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        let mut first_edge: HashMap<&str, usize> = HashMap::new();
        for e in lo..hi {
            for v in self.edges[e].members.keys() {
                match first_edge.entry(v.as_str()) {
                    std::collections::hash_map::Entry::Occupied(o) => {
                        let a = find(&mut parent, e - lo);
                        let b = find(&mut parent, *o.get() - lo);
                        parent[a] = b;
                    }
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(e);
                    }
                }
            }
        }
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in lo..hi {
            let root = find(&mut parent, e - lo);
            comps.entry(root).or_default().push(e);
        }
        let mut out: Vec<Vec<usize>> = comps.into_values().collect();
        out.sort_by_key(|c| c[0]);
        out
    }

    /// Merges a group's hb-edge components by inserting a vertex from one
    /// component into an hb-edge of another until the group is connected.
    fn connect_group(&mut self, j: usize) -> Result<()> {
        loop {
            let comps = self.components(j);
            if comps.len() <= 1 {
                return Ok(());
            }
            let labels = self.tier_lookup(j);
            // Donate from the second component into the first. Ordinary
            // donors are preferred: they never hit the important cap.
            let mut ordinary_donors: BTreeSet<String> = BTreeSet::new();
            let mut important_donors: BTreeSet<String> = BTreeSet::new();
            for &e in &comps[1] {
                for v in self.edges[e].members.keys() {
                    if labels.get(v.as_str()).copied().unwrap_or(false) {
                        important_donors.insert(v.clone());
                    } else {
                        ordinary_donors.insert(v.clone());
                    }
                }
            }
            let (donors, need_important_headroom) = if ordinary_donors.is_empty() {
                (important_donors, true)
            } else {
                (ordinary_donors, false)
            };
            let targets: Vec<usize> = comps[0]
                .iter()
                .copied()
                .filter(|&e| {
                    self.edges[e].support() < self.cfg.max_support_cardinality
                        && (!need_important_headroom
                            || self.edges[e].n_important < self.cfg.max_important_per_edge)
                })
                .collect();
            if targets.is_empty() {
                return Err(Error::InfeasibleConfig(format!(
                    "cannot connect group {j}: no hb-edge has room for another vertex; \
                     raise max_support_cardinality or change the seed"
                )));
            }
            let target = targets[self.rng.random_range(0..targets.len())];
            let donors: Vec<String> = donors.into_iter().collect();
            let donor = donors[self.rng.random_range(0..donors.len())].clone();
            let m = self.random_multiplicity();
            if need_important_headroom {
                self.edges[target].n_important += 1;
            }
            self.edges[target].members.insert(donor, m);
        }
    }

    /// True per vertex id of group `j`: is it in the important tier?
    fn tier_lookup(&self, j: usize) -> HashMap<&str, bool> {
        let mut map = HashMap::new();
        for v in &self.important[j] {
            map.insert(v.as_str(), true);
        }
        for v in &self.ordinary[j] {
            map.insert(v.as_str(), false);
        }
        map
    }

    /// Inserts every interconnect vertex into one hb-edge of each of two
    /// distinct groups; the first k-1 vertices realize a random spanning
    /// tree over the groups, the rest add chords.
    fn interconnect_groups(&mut self) -> Result<()> {
        let k = self.cfg.n_components;
        let mut order: Vec<usize> = (0..k).collect();
        order.shuffle(&mut self.rng);
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(k - 1);
        for t in 1..k {
            let parent = order[self.rng.random_range(0..t)];
            pairs.push((parent, order[t]));
        }
        for idx in 0..self.interconnect.len() {
            let (ga, gb) = if idx < pairs.len() {
                pairs[idx]
            } else {
                let a = self.rng.random_range(0..k);
                let mut b = self.rng.random_range(0..k - 1);
                if b >= a {
                    b += 1;
                }
                (a, b)
            };
            let vertex = self.interconnect[idx].clone();
            for g in [ga, gb] {
                let (lo, hi) = self.ranges[g];
                let targets: Vec<usize> = (lo..hi)
                    .filter(|&e| {
                        self.edges[e].support() < self.cfg.max_support_cardinality
                    })
                    .collect();
                if targets.is_empty() {
                    return Err(Error::InfeasibleConfig(format!(
                        "cannot interconnect into group {g}: no hb-edge has room; \
                         raise max_support_cardinality or change the seed"
                    )));
                }
                let target = targets[self.rng.random_range(0..targets.len())];
                let m = self.random_multiplicity();
                self.edges[target].members.insert(vertex.clone(), m);
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<GeneratedGraph> {
        let mut used: BTreeSet<&String> = BTreeSet::new();
        for e in &self.edges {
            used.extend(e.members.keys());
        }
        let vertices: Vec<String> = used.iter().map(|v| (*v).to_string()).collect();

        let mut tier_of: HashMap<&str, VertexLabel> = HashMap::new();
        for v in &self.interconnect {
            tier_of.insert(v.as_str(), VertexLabel::Interconnect);
        }
        for (j, tier) in self.important.iter().enumerate() {
            for v in tier {
                tier_of.insert(v.as_str(), VertexLabel::Important(j));
            }
        }
        for (j, tier) in self.ordinary.iter().enumerate() {
            for v in tier {
                tier_of.insert(v.as_str(), VertexLabel::Ordinary(j));
            }
        }
        let labels: BTreeMap<String, VertexLabel> = vertices
            .iter()
            .map(|v| (v.clone(), tier_of[v.as_str()]))
            .collect();

        let width = self.cfg.n_hbedges.saturating_sub(1).to_string().len();
        let hbedges: Vec<HbEdge> = self
            .edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                let members = Multiset::from_pairs(e.members)?;
                HbEdge::unweighted(format!("e{i:0width$}"), members)
            })
            .collect::<Result<_>>()?;

        Ok(GeneratedGraph {
            graph: HbGraph::build(vertices, hbedges)?,
            labels,
            config: self.cfg.clone(),
        })
    }
}

/// Generates a random unweighted hb-graph from `cfg`. Identical configs
/// (seed included) produce identical graphs. Fails with `InfeasibleConfig`
/// when the config cannot be realized — including the unlikely case where
/// connectivity repairs find no hb-edge below the support cap.
pub fn generate(cfg: &GeneratorConfig) -> Result<GeneratedGraph> {
    cfg.validate()?;
    let mut gen = Generator::new(cfg);
    let per_group = cfg.edges_per_group();
    for (j, count) in per_group.into_iter().enumerate() {
        let lo = gen.edges.len();
        for _ in 0..count {
            let edge = gen.draw_edge(j);
            gen.edges.push(edge);
        }
        gen.ranges.push((lo, gen.edges.len()));
        gen.connect_group(j)?;
    }
    if cfg.connect_single && cfg.n_components >= 2 {
        gen.interconnect_groups()?;
    }
    gen.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg(seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            n_max: 60,
            n_components: 3,
            n_interconnect: 4,
            important_per_group: vec![2, 3, 2],
            n_hbedges: 12,
            max_support_cardinality: 6,
            max_important_per_edge: 2,
            powerlaw_exponent: 2.5,
            max_multiplicity: 3,
            connect_single: true,
            seed,
        }
    }

    #[test]
    fn default_config_is_valid() {
        GeneratorConfig::default().validate().unwrap();
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut c = small_cfg(0);
        c.important_per_group = vec![2, 3];
        assert!(matches!(c.validate(), Err(Error::InfeasibleConfig(_))));

        let mut c = small_cfg(0);
        c.n_max = 8;
        assert!(c.validate().is_err(), "tiers exceed the pool");

        let mut c = small_cfg(0);
        c.important_per_group = vec![2, 0, 2];
        assert!(c.validate().is_err(), "empty important tier");

        let mut c = small_cfg(0);
        c.n_hbedges = 2;
        assert!(c.validate().is_err(), "fewer hb-edges than groups");

        let mut c = small_cfg(0);
        c.n_interconnect = 1;
        assert!(c.validate().is_err(), "too few interconnect vertices");

        let mut c = small_cfg(0);
        c.max_support_cardinality = 2;
        assert!(c.validate().is_err(), "no headroom for interconnection");

        let mut c = small_cfg(0);
        c.important_per_group = vec![40, 3, 2];
        assert!(c.validate().is_err(), "important tier exceeds group size");
    }

    #[test]
    fn same_seed_reproduces_the_graph() {
        let a = generate(&small_cfg(7)).unwrap();
        let b = generate(&small_cfg(7)).unwrap();
        assert_eq!(a.graph.vertices(), b.graph.vertices());
        assert_eq!(a.graph.hbedges(), b.graph.hbedges());
        assert_eq!(a.group_labels(), b.group_labels());
    }

    #[test]
    fn distinct_seeds_yield_distinct_graphs() {
        let a = generate(&small_cfg(1)).unwrap();
        let b = generate(&small_cfg(2)).unwrap();
        assert_ne!(a.graph.hbedges(), b.graph.hbedges());
    }

    #[test]
    fn generated_graphs_satisfy_the_structural_bounds() {
        for seed in 0..5 {
            let out = generate(&small_cfg(seed)).unwrap();
            let labels = out.group_labels();
            for edge in out.graph.hbedges() {
                assert!(edge.support_cardinality() <= 6, "support cap violated");
                assert!(edge.weight() == 1.0, "generator output is unweighted");
                let n_imp = edge
                    .members()
                    .support()
                    .filter(|v| labels[*v].is_important())
                    .count();
                assert!(
                    (1..=2).contains(&n_imp),
                    "hb-edge must hold 1..=2 important vertices, got {n_imp}"
                );
                for (_, m) in edge.members().iter() {
                    assert!((1.0..=3.0).contains(&m) && m.fract() == 0.0);
                }
                assert!(
                    edge.m_cardinality() >= edge.support_cardinality() as f64
                );
            }
        }
    }

    #[test]
    fn connect_single_yields_one_component() {
        for seed in 0..5 {
            let out = generate(&small_cfg(seed)).unwrap();
            let evg = out.graph.extra_vertex_graph();
            assert!(evg.is_connected(), "seed {seed} not connected");
        }
    }

    #[test]
    fn without_interconnection_each_group_is_a_component() {
        for seed in 0..5 {
            let mut cfg = small_cfg(seed);
            cfg.connect_single = false;
            cfg.n_interconnect = 0;
            let out = generate(&cfg).unwrap();
            let evg = out.graph.extra_vertex_graph();
            assert_eq!(evg.component_count(), 3, "seed {seed}");
        }
    }

    #[test]
    fn labels_cover_exactly_the_retained_vertices() {
        let out = generate(&small_cfg(3)).unwrap();
        let labeled: Vec<&String> = out.group_labels().keys().collect();
        let retained: Vec<&String> = out.graph.vertices().iter().collect();
        assert_eq!(labeled, retained);
        let n_inter = out
            .group_labels()
            .values()
            .filter(|l| **l == VertexLabel::Interconnect)
            .count();
        assert!(n_inter <= 4);
    }

    #[test]
    fn ordinary_selection_is_rank_skewed() {
        // One group, many hb-edges: the most frequent ordinary vertex must
        // beat the median one.
        let cfg = GeneratorConfig {
            n_max: 400,
            n_components: 1,
            n_interconnect: 0,
            important_per_group: vec![3],
            n_hbedges: 150,
            max_support_cardinality: 8,
            max_important_per_edge: 1,
            powerlaw_exponent: 2.5,
            max_multiplicity: 3,
            connect_single: false,
            seed: 11,
        };
        let out = generate(&cfg).unwrap();
        let labels = out.group_labels();
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for edge in out.graph.hbedges() {
            for v in edge.members().support() {
                if labels[v] == VertexLabel::Ordinary(0) {
                    *counts.entry(v).or_default() += 1;
                }
            }
        }
        let mut freq: Vec<usize> = counts.values().copied().collect();
        freq.sort_unstable();
        let max = *freq.last().unwrap();
        let median = freq[freq.len() / 2];
        assert!(
            max > median,
            "expected rank skew, got max {max} vs median {median}"
        );
    }

    #[test]
    fn headline_scale_stays_connected_and_prunes_the_pool() {
        let cfg = GeneratorConfig {
            seed: 42,
            ..GeneratorConfig::default()
        };
        let out = generate(&cfg).unwrap();
        assert!(out.graph.extra_vertex_graph().is_connected());
        // A few hundred of the 10000 pooled vertices survive; the exact
        // count depends on the seed and the configured exponent.
        let n = out.graph.vertex_count();
        assert!(
            (150..=900).contains(&n),
            "retained vertex count {n} far from the expected scale"
        );
        assert_eq!(out.graph.hbedge_count(), 300);
        // Every hb-edge leans on its group's important tier.
        let labels = out.group_labels();
        for edge in out.graph.hbedges() {
            assert!(edge
                .members()
                .support()
                .any(|v| labels[v].is_important()));
        }
    }

    #[test]
    fn label_strings_round_trip() {
        for label in [
            VertexLabel::Important(3),
            VertexLabel::Ordinary(0),
            VertexLabel::Interconnect,
        ] {
            let s = label.to_string();
            assert_eq!(s.parse::<VertexLabel>().unwrap(), label);
        }
        assert!("imp:1".parse::<VertexLabel>().is_err());
        assert!("important:x".parse::<VertexLabel>().is_err());
    }
}

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// A general hypergraph on vertices `0..n` with a tensor order `k`.
///
/// Edges are nonempty sets of vertices, stored as strictly increasing index
/// sequences in lexicographic order. Edge cardinalities may differ; the rank
/// is the largest cardinality present. The tensor order `k` satisfies
/// `k >= max(rank, 2)` and defaults to that value. An order above the rank is
/// permitted and is reported as such by analysis routines.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    order: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.order == other.order
            && self.edges == other.edges
            && self.labels == other.labels
    }
}

impl Eq for Hypergraph {}

/// Options for constructing or parsing a hypergraph.
#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    /// Accept edges of cardinality one. Off by default: a singleton edge is
    /// almost always an input mistake, and it makes the expanded-edge weight
    /// degenerate.
    pub allow_singletons: bool,
    /// Explicit tensor order. `None` picks `max(rank, 2)`. A `%k=` directive
    /// in parsed text takes precedence over this field.
    pub order: Option<usize>,
}

/// Per-vertex degrees together with their extremes and mean.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub average: f64,
}

/// Vertex partition into connected components.
///
/// `component[v]` is the component id of vertex `v`; ids are dense and
/// assigned in order of the smallest vertex in each component.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectivityResult {
    pub component: Vec<usize>,
    pub count: usize,
}

impl ConnectivityResult {
    pub fn is_connected(&self) -> bool {
        self.count <= 1
    }
}

impl Hypergraph {
    /// Builds a hypergraph from an edge list with default options.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_options(n, edges, &BuildOptions::default())
    }

    /// Builds a hypergraph from an edge list.
    pub fn with_options(n: usize, edges: Vec<Vec<usize>>, opts: &BuildOptions) -> Result<Self> {
        Self::build(n, edges, None, opts)
    }

    fn build(
        n: usize,
        edges_in: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        opts: &BuildOptions,
    ) -> Result<Self> {
        let mut edges = Vec::with_capacity(edges_in.len());
        for (index, raw) in edges_in.into_iter().enumerate() {
            if raw.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            let mut e = raw;
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedVertex {
                        index,
                        vertex: w[0],
                    });
                }
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        index,
                        vertex: v,
                        n,
                    });
                }
            }
            if e.len() == 1 && !opts.allow_singletons {
                return Err(Error::SingletonEdge {
                    index,
                    vertex: e[0],
                });
            }
            edges.push(e);
        }

        let mut seen: BTreeMap<&[usize], usize> = BTreeMap::new();
        for (index, e) in edges.iter().enumerate() {
            if let Some(&first) = seen.get(e.as_slice()) {
                let shown: Vec<String> = e
                    .iter()
                    .map(|&v| match &labels {
                        Some(ls) => ls[v].clone(),
                        None => v.to_string(),
                    })
                    .collect();
                return Err(Error::DuplicateEdge {
                    edge: shown.join(" "),
                    first,
                    second: index,
                });
            }
            seen.insert(e.as_slice(), index);
        }
        drop(seen);

        edges.sort();
        let rank = edges.iter().map(|e| e.len()).max().unwrap_or(0);
        let order = opts.order.unwrap_or_else(|| rank.max(2));
        if order < 2 || order < rank {
            return Err(Error::OrderTooSmall { order, rank });
        }

        let mut incidence = vec![Vec::new(); n];
        for (j, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(j);
            }
        }

        Ok(Hypergraph {
            n,
            order,
            edges,
            labels,
            incidence,
        })
    }

    /// Parses the plain-text edge-list format with default options.
    ///
    /// One edge per line, vertices as whitespace-separated tokens. `#` starts
    /// a comment, blank lines are skipped. Directive lines come before the
    /// first edge: `%k=<int>` sets the tensor order, `%n=<int>` declares the
    /// vertex count and switches tokens to strict integer indices below `n`.
    /// Without `%n`, labels are arbitrary tokens mapped to dense indices in
    /// first-appearance order.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, &BuildOptions::default())
    }

    /// Parses the plain-text edge-list format.
    pub fn parse_with(text: &str, opts: &BuildOptions) -> Result<Self> {
        let mut declared_n: Option<usize> = None;
        let mut declared_k: Option<usize> = None;
        let mut labels: Vec<String> = Vec::new();
        let mut label_index: HashMap<String, usize> = HashMap::new();
        let mut edges: Vec<Vec<usize>> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix('%') {
                if !edges.is_empty() {
                    return Err(Error::BadDirective {
                        line,
                        text: content.to_string(),
                        reason: "directives must precede the first edge".to_string(),
                    });
                }
                let (key, value) = rest.split_once('=').ok_or_else(|| Error::BadDirective {
                    line,
                    text: content.to_string(),
                    reason: "expected %key=value".to_string(),
                })?;
                let parsed: usize =
                    value
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadDirective {
                            line,
                            text: content.to_string(),
                            reason: format!("`{}` is not a nonnegative integer", value.trim()),
                        })?;
                let slot = match key.trim() {
                    "k" => &mut declared_k,
                    "n" => &mut declared_n,
                    other => {
                        return Err(Error::BadDirective {
                            line,
                            text: content.to_string(),
                            reason: format!("unknown directive key `{other}`"),
                        })
                    }
                };
                if slot.replace(parsed).is_some() {
                    return Err(Error::BadDirective {
                        line,
                        text: content.to_string(),
                        reason: "directive given twice".to_string(),
                    });
                }
                continue;
            }
            let mut edge = Vec::new();
            for tok in content.split_whitespace() {
                let v = match declared_n {
                    Some(n) => tok
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v < n)
                        .ok_or_else(|| Error::UnknownLabel {
                            line,
                            label: tok.to_string(),
                            n,
                        })?,
                    None => match label_index.get(tok) {
                        Some(&v) => v,
                        None => {
                            let v = labels.len();
                            labels.push(tok.to_string());
                            label_index.insert(tok.to_string(), v);
                            v
                        }
                    },
                };
                edge.push(v);
            }
            edges.push(edge);
        }

        let (n, label_list) = match declared_n {
            Some(n) => (n, None),
            None => (labels.len(), Some(labels)),
        };
        let merged = BuildOptions {
            allow_singletons: opts.allow_singletons,
            order: declared_k.or(opts.order),
        };
        Self::build(n, edges, label_list, &merged)
    }

    /// Serializes to the plain-text format with dense integer labels.
    ///
    /// The header always carries `%n=` and `%k=`, so parsing the output
    /// reproduces the instance exactly, isolated vertices and explicit order
    /// included.
    pub fn to_text(&self) -> String {
        let mut out = format!("%n={}\n%k={}\n", self.n, self.order);
        for e in &self.edges {
            let toks: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
        out
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Tensor order `k`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Largest edge cardinality, or 0 for an edgeless hypergraph.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Edges as sorted index sequences, in lexicographic order.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Original vertex labels, if the instance was parsed from labeled text.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of vertex `v`: its original token, or the index itself.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    /// The same instance with labels dropped, as produced by a
    /// serialize-then-parse round trip.
    pub fn normalized(&self) -> Self {
        Hypergraph {
            labels: None,
            ..self.clone()
        }
    }

    /// Common edge cardinality if all edges share one, otherwise `None`.
    pub fn uniform_size(&self) -> Option<usize> {
        let mut sizes = self.edges.iter().map(|e| e.len());
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// True when every edge has cardinality equal to the tensor order.
    pub fn is_uniform(&self) -> bool {
        self.uniform_size() == Some(self.order)
    }

    /// Common degree if the hypergraph is regular, otherwise `None`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        (self.n > 0 && d.max == d.min).then_some(d.max)
    }

    /// Per-vertex degrees with extremes and mean.
    pub fn degrees(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.incidence.iter().map(|inc| inc.len()).collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        let min = degrees.iter().copied().min().unwrap_or(0);
        let average = if self.n == 0 {
            0.0
        } else {
            degrees.iter().sum::<usize>() as f64 / self.n as f64
        };
        DegreeProfile {
            degrees,
            max,
            min,
            average,
        }
    }

    /// Distinct vertices sharing an edge with `v`, excluding `v`, ascending.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for &j in &self.incidence[v] {
            for &w in &self.edges[j] {
                seen[w] = true;
            }
        }
        seen[v] = false;
        (0..self.n).filter(|&w| seen[w]).collect()
    }

    /// Connected components under "share an edge" adjacency.
    pub fn connectivity(&self) -> ConnectivityResult {
        let mut component = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if component[s] != usize::MAX {
                continue;
            }
            component[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &j in &self.incidence[v] {
                    for &w in &self.edges[j] {
                        if component[w] == usize::MAX {
                            component[w] = count;
                            stack.push(w);
                        }
                    }
                }
            }
            count += 1;
        }
        ConnectivityResult { component, count }
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity().is_connected()
    }
}

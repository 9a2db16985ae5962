//! Semantic graphs: the dependency structure the truth-determination
//! procedure walks. Every construction points at its components and every
//! truth atom points at the sentence it mentions, so self-reference shows
//! up as a cycle.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::eval::sk3_eval;
use crate::model::{Formula, NameId, SentenceSystem, Valuation};

/// A node is either a named sentence or one formula occurrence. Sentence
/// nodes have exactly one out-edge, to the root of their body; formula
/// nodes have out-edges matching their construction (truth atoms point at
/// the mentioned sentence's node).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Sentence(NameId),
    Formula(Formula),
}

#[derive(Clone, Debug)]
pub struct GraphNode {
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// Graph of everything the root sentence's truth value hereditarily
/// depends on. Node ids are depth-first discovery order from the root,
/// so identical systems build identical graphs.
#[derive(Clone, Debug)]
pub struct SemanticGraph {
    pub nodes: Vec<GraphNode>,
    pub root: usize,
}

/// Builds the semantic graph rooted at the named sentence.
pub fn semantic_graph(system: &SentenceSystem, name: &str) -> Result<SemanticGraph> {
    let root_id = system.lookup(name).ok_or_else(|| Error::UnknownName {
        name: name.to_string(),
        context: "no sentence with this name".into(),
    })?;
    let mut builder = Builder {
        system,
        nodes: Vec::new(),
        sentence_nodes: HashMap::new(),
    };
    let root = builder.sentence(root_id);
    Ok(SemanticGraph {
        nodes: builder.nodes,
        root,
    })
}

struct Builder<'a> {
    system: &'a SentenceSystem,
    nodes: Vec<GraphNode>,
    sentence_nodes: HashMap<NameId, usize>,
}

impl Builder<'_> {
    fn sentence(&mut self, id: NameId) -> usize {
        if let Some(&node) = self.sentence_nodes.get(&id) {
            return node;
        }
        let node = self.nodes.len();
        self.nodes.push(GraphNode {
            kind: NodeKind::Sentence(id),
            children: Vec::new(),
        });
        // register before descending so cycles close on this node
        self.sentence_nodes.insert(id, node);
        let body = self.system.body(id);
        let body_root = self.formula(body);
        self.nodes[node].children.push(body_root);
        node
    }

    fn formula(&mut self, f: &Formula) -> usize {
        let node = self.nodes.len();
        self.nodes.push(GraphNode {
            kind: NodeKind::Formula(f.clone()),
            children: Vec::new(),
        });
        let children = match f {
            Formula::TruthAtom(target) => vec![self.sentence(*target)],
            Formula::Not(g) => vec![self.formula(g)],
            Formula::And(a, b) | Formula::Or(a, b) => {
                vec![self.formula(a), self.formula(b)]
            }
            Formula::ConstTrue | Formula::ConstFalse | Formula::External(_) => vec![],
        };
        self.nodes[node].children = children;
        node
    }
}

impl SemanticGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of sentence nodes in the graph.
    pub fn sentence_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n.kind, NodeKind::Sentence(_)))
            .count()
    }

    fn label(&self, node: &GraphNode, system: &SentenceSystem) -> String {
        match &node.kind {
            NodeKind::Sentence(id) => system.sentence_name(*id).to_string(),
            NodeKind::Formula(f) => match f {
                Formula::ConstTrue => "true".into(),
                Formula::ConstFalse => "false".into(),
                Formula::External(a) => format!(
                    "{}={}",
                    system.external_name(*a),
                    if system.external_value(*a).as_bool() {
                        "true"
                    } else {
                        "false"
                    }
                ),
                Formula::TruthAtom(n) => format!("T({})", system.sentence_name(*n)),
                Formula::Not(_) => "not".into(),
                Formula::And(..) => "and".into(),
                Formula::Or(..) => "or".into(),
            },
        }
    }

    fn value_suffix(
        &self,
        node: &GraphNode,
        system: &SentenceSystem,
        valuation: Option<&Valuation>,
    ) -> String {
        let Some(v) = valuation else {
            return String::new();
        };
        let value = match &node.kind {
            NodeKind::Sentence(id) => v.get(*id),
            NodeKind::Formula(f) => sk3_eval(f, v, system),
        };
        format!(" [{value}]")
    }

    /// Renders the graph in DOT syntax. Sentence nodes are boxes; with a
    /// valuation supplied, every node label carries its three-valued
    /// value.
    pub fn to_dot(&self, system: &SentenceSystem, valuation: Option<&Valuation>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph semantic_graph {{");
        let _ = writeln!(out, "  rankdir=TB;");
        for (i, node) in self.nodes.iter().enumerate() {
            let label = format!(
                "{}{}",
                self.label(node, system),
                self.value_suffix(node, system, valuation)
            );
            let shape = match node.kind {
                NodeKind::Sentence(_) => ", shape=box",
                NodeKind::Formula(_) => "",
            };
            let _ = writeln!(out, "  n{i} [label=\"{}\"{shape}];", escape(&label));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            for &child in &node.children {
                let _ = writeln!(out, "  n{i} -> n{child};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

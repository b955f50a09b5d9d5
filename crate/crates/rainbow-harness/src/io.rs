//! JSON family/certificate schema and DOT export.
//!
//! Families serialize as `{"n": int, "members": [[[u,v], ...], ...]}`.
//! Certificates serialize as `{"kind": "...", ...}` where `kind` is one of
//! `prunedCactus`, `saguaro`, `linkleaf`, `monoCut`, `rainbowCycle`, and
//! recursive structure witnesses carry their subtrees under `children`.
//! Import validates eagerly and reports a JSON-path location on failure;
//! `import ∘ export` is the identity.

use std::fs;
use std::path::Path;

use rainbow_core::decide::{CutOrCycle, MonoCutCert};
use rainbow_core::graph::{CycleFamily, Edge, EdgeSet, Parity};
use rainbow_core::search::RainbowCycleCert;
use rainbow_core::structures::{LinkleafCert, PrunedCactusCert, SaguaroCert};
use serde::{Deserialize, Serialize};

use crate::Error;

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// Wire form of a [`CycleFamily`]: ambient vertex count plus one edge list
/// per member. Member edges are emitted sorted, so export is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDto {
    pub n: usize,
    pub members: Vec<Vec<[usize; 2]>>,
}

impl FamilyDto {
    pub fn from_family(family: &CycleFamily) -> Self {
        FamilyDto {
            n: family.n(),
            members: family
                .members()
                .iter()
                .map(|m| m.iter().map(|e| [e.u(), e.v()]).collect())
                .collect(),
        }
    }

    /// Validates vertex ranges and per-member edge multiplicity, then
    /// builds the family. Locations name the offending JSON element.
    pub fn to_family(&self) -> Result<CycleFamily, Error> {
        if self.n > rainbow_core::graph::MAX_VERTICES {
            return Err(Error::parse(
                "n",
                format!(
                    "ambient vertex count {} exceeds the supported {}",
                    self.n,
                    rainbow_core::graph::MAX_VERTICES
                ),
            ));
        }
        let mut members = Vec::with_capacity(self.members.len());
        for (i, member) in self.members.iter().enumerate() {
            let mut edges = EdgeSet::new(self.n);
            for (j, &[u, v]) in member.iter().enumerate() {
                let location = format!("members[{i}][{j}]");
                if u >= self.n || v >= self.n {
                    return Err(Error::parse(
                        location,
                        format!("vertex out of range: [{u},{v}] with n={}", self.n),
                    ));
                }
                if u == v {
                    return Err(Error::parse(location, format!("loop edge [{u},{v}]")));
                }
                if !edges.insert(Edge::new(u, v)) {
                    return Err(Error::parse(
                        location,
                        format!("duplicate edge [{u},{v}] within member {i}"),
                    ));
                }
            }
            members.push(edges);
        }
        Ok(CycleFamily::new(self.n, members))
    }
}

/// Reads and validates a family file.
pub fn import_family(path: impl AsRef<Path>) -> Result<CycleFamily, Error> {
    let text = fs::read_to_string(path)?;
    let dto: FamilyDto = serde_json::from_str(&text)?;
    dto.to_family()
}

/// Writes a family file (pretty-printed, canonical member edge order).
pub fn export_family(family: &CycleFamily, path: impl AsRef<Path>) -> Result<(), Error> {
    let dto = FamilyDto::from_family(family);
    fs::write(path, serde_json::to_string_pretty(&dto)?)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Wire form of every certificate the library can produce. `kind` selects
/// the witness type; recursive witnesses keep their subtrees in `children`
/// (two for a split/bridge/link node, one for a saguaro wrapping a cactus).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum CertificateDto {
    /// Pruned-cactus node: a leaf carries `cycle` + `multiplicity`; an
    /// internal node carries `sharedVertex` + two children.
    #[serde(rename_all = "camelCase")]
    PrunedCactus {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cycle: Option<Vec<[usize; 2]>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multiplicity: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shared_vertex: Option<usize>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        children: Vec<CertificateDto>,
    },
    /// Saguaro node: either one pruned-cactus child, or `separator` (an
    /// even cycle) and two saguaro children.
    #[serde(rename_all = "camelCase")]
    Saguaro {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        separator: Option<Vec<[usize; 2]>>,
        children: Vec<CertificateDto>,
    },
    /// Linkleaf node: a leaf carries `groundVertex`; an internal node
    /// carries the bipartite `bridge` member and two children.
    #[serde(rename_all = "camelCase")]
    Linkleaf {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ground_vertex: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bridge: Option<Vec<[usize; 2]>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        children: Vec<CertificateDto>,
    },
    /// Vertex bipartition crossed by edges of exactly one color.
    #[serde(rename_all = "camelCase")]
    MonoCut {
        side_a: Vec<usize>,
        side_b: Vec<usize>,
        crossing_color: usize,
    },
    /// Cycle edges with their injective color assignment, as `[u, v, color]`.
    #[serde(rename_all = "camelCase")]
    RainbowCycle {
        parity: ParityDto,
        edges: Vec<[usize; 3]>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityDto {
    Odd,
    Even,
}

impl From<Parity> for ParityDto {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Odd => ParityDto::Odd,
            Parity::Even => ParityDto::Even,
        }
    }
}

fn edge_list(e: &EdgeSet) -> Vec<[usize; 2]> {
    e.iter().map(|e| [e.u(), e.v()]).collect()
}

impl From<&PrunedCactusCert> for CertificateDto {
    fn from(cert: &PrunedCactusCert) -> Self {
        match cert {
            PrunedCactusCert::Leaf { cycle, multiplicity } => CertificateDto::PrunedCactus {
                cycle: Some(edge_list(cycle)),
                multiplicity: Some(*multiplicity),
                shared_vertex: None,
                children: Vec::new(),
            },
            PrunedCactusCert::Split {
                left,
                right,
                shared_vertex,
            } => CertificateDto::PrunedCactus {
                cycle: None,
                multiplicity: None,
                shared_vertex: Some(*shared_vertex),
                children: vec![Self::from(left.as_ref()), Self::from(right.as_ref())],
            },
        }
    }
}

impl From<&SaguaroCert> for CertificateDto {
    fn from(cert: &SaguaroCert) -> Self {
        match cert {
            SaguaroCert::Cactus(c) => CertificateDto::Saguaro {
                separator: None,
                children: vec![Self::from(c)],
            },
            SaguaroCert::Bridge {
                left,
                separator,
                right,
            } => CertificateDto::Saguaro {
                separator: Some(edge_list(separator)),
                children: vec![Self::from(left.as_ref()), Self::from(right.as_ref())],
            },
        }
    }
}

impl From<&LinkleafCert> for CertificateDto {
    fn from(cert: &LinkleafCert) -> Self {
        match cert {
            LinkleafCert::Empty { ground_vertex } => CertificateDto::Linkleaf {
                ground_vertex: Some(*ground_vertex),
                bridge: None,
                children: Vec::new(),
            },
            LinkleafCert::Link {
                left,
                bridge,
                right,
            } => CertificateDto::Linkleaf {
                ground_vertex: None,
                bridge: Some(edge_list(bridge)),
                children: vec![Self::from(left.as_ref()), Self::from(right.as_ref())],
            },
        }
    }
}

impl From<&MonoCutCert> for CertificateDto {
    fn from(cert: &MonoCutCert) -> Self {
        CertificateDto::MonoCut {
            side_a: cert.side_a.to_vec(),
            side_b: cert.side_b.to_vec(),
            crossing_color: cert.crossing_color,
        }
    }
}

impl From<&RainbowCycleCert> for CertificateDto {
    fn from(cert: &RainbowCycleCert) -> Self {
        CertificateDto::RainbowCycle {
            parity: cert.parity.into(),
            edges: cert
                .rainbow
                .iter()
                .map(|(e, color)| [e.u(), e.v(), color])
                .collect(),
        }
    }
}

impl From<&CutOrCycle> for CertificateDto {
    fn from(out: &CutOrCycle) -> Self {
        match out {
            CutOrCycle::Cut(c) => Self::from(c),
            CutOrCycle::Cycle(c) => Self::from(c),
        }
    }
}

/// Writes a certificate file (pretty-printed).
pub fn export_certificate(cert: &CertificateDto, path: impl AsRef<Path>) -> Result<(), Error> {
    fs::write(path, serde_json::to_string_pretty(cert)?)?;
    Ok(())
}

/// Reads a certificate file.
pub fn import_certificate(path: impl AsRef<Path>) -> Result<CertificateDto, Error> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
];

/// Renders a family as an undirected DOT graph. Each union edge is drawn
/// once, labeled with the list of colors (member indices) containing it and
/// stroked with the palette color of its first owner. When a certificate is
/// supplied, its recursive components become nested cluster subgraphs, so
/// `dot`/`fdp` draw the witness decomposition.
pub fn render_dot(family: &CycleFamily, cert: Option<&CertificateDto>) -> String {
    let mut out = String::from("graph rainbow {\n");
    out.push_str("  node [shape=circle fontsize=10 width=0.3 fixedsize=true];\n");
    let mut declared = vec![false; family.n()];
    if let Some(cert) = cert {
        let mut counter = 0;
        render_clusters(cert, &mut out, &mut counter, &mut declared, 1);
    }
    // Vertices not claimed by any cluster (or all of them, without a
    // certificate) are declared at top level if they carry any edge.
    let union = family.union();
    for v in union.vertices().iter() {
        if !declared[v] {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for e in union.iter() {
        let colors: Vec<String> = family.colors_of(e).map(|c| c.to_string()).collect();
        let first: usize = family.colors_of(e).next().unwrap_or(0);
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\" color=\"{}\"];\n",
            e.u(),
            e.v(),
            colors.join(","),
            PALETTE[first % PALETTE.len()]
        ));
    }
    out.push_str("}\n");
    out
}

/// Emits nested `cluster_k` subgraphs mirroring the certificate tree.
/// Each vertex is declared in the innermost cluster that first claims it.
fn render_clusters(
    cert: &CertificateDto,
    out: &mut String,
    counter: &mut usize,
    declared: &mut [bool],
    depth: usize,
) {
    let indent = "  ".repeat(depth);
    let id = *counter;
    *counter += 1;
    let (label, own_vertices, children): (String, Vec<usize>, &[CertificateDto]) = match cert {
        CertificateDto::PrunedCactus {
            cycle,
            multiplicity,
            children,
            ..
        } => match cycle {
            Some(edges) => (
                format!("cycle x{}", multiplicity.unwrap_or(0)),
                vertices_of(edges),
                &[],
            ),
            None => ("cactus".to_string(), Vec::new(), children),
        },
        CertificateDto::Saguaro {
            separator,
            children,
        } => match separator {
            Some(edges) => ("saguaro bridge".to_string(), vertices_of(edges), children),
            None => ("saguaro".to_string(), Vec::new(), children),
        },
        CertificateDto::Linkleaf {
            ground_vertex,
            bridge,
            children,
        } => match ground_vertex {
            Some(v) => ("leaf".to_string(), vec![*v], &[]),
            None => (
                "link".to_string(),
                bridge.as_deref().map(vertices_of).unwrap_or_default(),
                children,
            ),
        },
        CertificateDto::MonoCut {
            side_a,
            side_b,
            crossing_color,
        } => {
            out.push_str(&format!(
                "{indent}subgraph cluster_{id} {{ label=\"cut side A (color {crossing_color} crosses)\";\n"
            ));
            for &v in side_a {
                declare(out, declared, v, depth + 1);
            }
            out.push_str(&format!("{indent}}}\n"));
            out.push_str(&format!(
                "{indent}subgraph cluster_{id}b {{ label=\"cut side B\";\n"
            ));
            for &v in side_b {
                declare(out, declared, v, depth + 1);
            }
            out.push_str(&format!("{indent}}}\n"));
            return;
        }
        CertificateDto::RainbowCycle { parity, edges } => {
            let vs: Vec<usize> = {
                let mut vs: Vec<usize> = edges.iter().flat_map(|&[u, v, _]| [u, v]).collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            };
            let tag = match parity {
                ParityDto::Odd => "odd",
                ParityDto::Even => "even",
            };
            (format!("rainbow {tag} cycle"), vs, &[])
        }
    };
    out.push_str(&format!(
        "{indent}subgraph cluster_{id} {{ label=\"{label}\";\n"
    ));
    for child in children {
        render_clusters(child, out, counter, declared, depth + 1);
    }
    for v in own_vertices {
        declare(out, declared, v, depth + 1);
    }
    out.push_str(&format!("{indent}}}\n"));
}

fn declare(out: &mut String, declared: &mut [bool], v: usize, depth: usize) {
    if v < declared.len() && !declared[v] {
        declared[v] = true;
        out.push_str(&format!("{}{v};\n", "  ".repeat(depth)));
    }
}

fn vertices_of(edges: &[[usize; 2]]) -> Vec<usize> {
    let mut vs: Vec<usize> = edges.iter().flat_map(|&[u, v]| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Writes the DOT rendering of a family (and optional certificate) to a file.
pub fn export_dot(
    family: &CycleFamily,
    cert: Option<&CertificateDto>,
    path: impl AsRef<Path>,
) -> Result<(), Error> {
    fs::write(path, render_dot(family, cert))?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Generator scripts
// ---------------------------------------------------------------------------

use rainbow_core::structures::{
    CactusBlock, CactusScript, LinkleafScript, SaguaroScript, Side, SideVertex,
};

/// Wire form of a cactus build plan: `{"blocks": [{"len": 5, "glue": 2}]}`
/// (`glue` absent or null on the first block).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CactusScriptDto {
    pub blocks: Vec<CactusBlockDto>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CactusBlockDto {
    pub len: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub glue: Option<usize>,
}

impl CactusScriptDto {
    pub fn to_script(&self) -> CactusScript {
        CactusScript {
            blocks: self
                .blocks
                .iter()
                .map(|b| CactusBlock {
                    len: b.len,
                    glue: b.glue,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideDto {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideVertexDto {
    pub side: SideDto,
    pub index: usize,
}

impl SideVertexDto {
    fn to_core(self) -> SideVertex {
        SideVertex {
            side: match self.side {
                SideDto::Left => Side::Left,
                SideDto::Right => Side::Right,
            },
            index: self.index,
        }
    }
}

/// Wire form of a saguaro build plan:
/// `{"kind": "cactus", "blocks": [...]}` or
/// `{"kind": "bridge", "left": ..., "separator": [{"side": "left", "index": 0}, ...], "right": ...}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum SaguaroScriptDto {
    Cactus { blocks: Vec<CactusBlockDto> },
    Bridge {
        left: Box<SaguaroScriptDto>,
        separator: Vec<SideVertexDto>,
        right: Box<SaguaroScriptDto>,
    },
}

impl SaguaroScriptDto {
    pub fn to_script(&self) -> SaguaroScript {
        match self {
            SaguaroScriptDto::Cactus { blocks } => SaguaroScript::Cactus(
                CactusScriptDto {
                    blocks: blocks.clone(),
                }
                .to_script(),
            ),
            SaguaroScriptDto::Bridge {
                left,
                separator,
                right,
            } => SaguaroScript::Bridge {
                left: Box::new(left.to_script()),
                separator: separator.iter().map(|sv| sv.to_core()).collect(),
                right: Box::new(right.to_script()),
            },
        }
    }
}

/// Wire form of a linkleaf build plan:
/// `{"kind": "empty"}` or
/// `{"kind": "link", "left": ..., "bridge": [[{..}, {..}], ...], "right": ...}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum LinkleafScriptDto {
    Empty,
    Link {
        left: Box<LinkleafScriptDto>,
        bridge: Vec<[SideVertexDto; 2]>,
        right: Box<LinkleafScriptDto>,
    },
}

impl LinkleafScriptDto {
    pub fn to_script(&self) -> LinkleafScript {
        match self {
            LinkleafScriptDto::Empty => LinkleafScript::Empty,
            LinkleafScriptDto::Link {
                left,
                bridge,
                right,
            } => LinkleafScript::Link {
                left: Box::new(left.to_script()),
                bridge: bridge
                    .iter()
                    .map(|&[a, b]| (a.to_core(), b.to_core()))
                    .collect(),
                right: Box::new(right.to_script()),
            },
        }
    }
}

/// Wire form of the glued-squares plan: `{"copies": 3}`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluedSquaresScriptDto {
    pub copies: usize,
}

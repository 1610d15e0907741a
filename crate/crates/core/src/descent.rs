//! Descent diagrams over `I(G)`.
//!
//! Each vertex carries a chart (a trivialization of the 2-periodic structure
//! of its local model) and each compact edge a transition: an edge
//! autoequivalence with discrete part in the coset of `diag(-1, 1)`, twist
//! `n = n_e`, and the shift `[1]`. The scalar `lamU` of the transitions is the
//! clutching data of the twisting line bundle `L` on the singular locus, so
//! its cycle products together with the degrees `n_e` are the gauge
//! invariants.

use serde::{Deserialize, Serialize};

use crate::algebra::NonzeroRational;
use crate::error::{Error, Result};
use crate::graph::{orientation_gauge, DecoratedGraph};
use crate::local::{EdgeAut, TwoPerV};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexChart {
    pub trivialization: TwoPerV,
}

/// Transition of one compact edge, read from `direction[0]` to `direction[1]`.
///
/// A loop has both ends at one vertex, so its direction is always the stored
/// order of the edge ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub edge: usize,
    pub direction: [usize; 2],
    #[serde(flatten)]
    pub aut: EdgeAut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentDiagram {
    #[serde(flatten)]
    pub graph: DecoratedGraph,
    pub charts: Vec<VertexChart>,
    pub transitions: Vec<Transition>,
}

/// Degrees and cycle holonomies of the twisting line bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PicInvariants {
    /// Compact edge indices, the order of `degree_vector`.
    pub edges: Vec<usize>,
    pub degree_vector: Vec<i64>,
    pub beta_holonomies: Vec<NonzeroRational>,
    pub alpha_holonomies: Vec<NonzeroRational>,
}

impl PicInvariants {
    /// `L` is trivial: every degree vanishes and every `β` holonomy is 1.
    pub fn is_trivial(&self) -> bool {
        self.degree_vector.iter().all(|&n| n == 0) && self.beta_holonomies.iter().all(NonzeroRational::is_one)
    }

    fn same_class(&self, other: &PicInvariants) -> bool {
        self.degree_vector == other.degree_vector
            && self.beta_holonomies == other.beta_holonomies
            && self.alpha_holonomies == other.alpha_holonomies
    }
}

fn check_graph(g: &DecoratedGraph) -> Result<()> {
    g.ribbon()?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if orientation_gauge(g)?.is_none() {
        return Err(Error::NonOrientable);
    }
    Ok(())
}

fn check_transition(g: &DecoratedGraph, t: &Transition) -> Result<()> {
    let c = g.edges[t.edge].as_compact().ok_or_else(|| {
        Error::MalformedTransitions(format!("edge {} is a leg", t.edge))
    })?;
    if t.aut.eps != -1 {
        return Err(Error::TransitionNotInCoset { edge: t.edge });
    }
    if !t.aut.shift {
        return Err(Error::MissingShift { edge: t.edge });
    }
    // inverting an element of the coset keeps n, so this is direction-free
    if t.aut.n != c.twist {
        return Err(Error::TwistMismatch {
            edge: t.edge,
            expected: c.twist,
            found: t.aut.n,
        });
    }
    Ok(())
}

/// Builds the diagram with transitions `(-1, n_e, α_e, β_e, [1])` stored in
/// canonical direction (lower vertex first).
pub fn assemble(g: &DecoratedGraph, charts: Vec<TwoPerV>) -> Result<DescentDiagram> {
    check_graph(g)?;
    let ends = g.endpoints()?;
    let transitions = g
        .compact_edges()
        .map(|(e, c)| Transition {
            edge: e,
            direction: ends[&e],
            aut: EdgeAut::new(-1, c.twist, c.base_scalar.clone(), c.holonomy.clone(), true),
        })
        .collect();
    assemble_with(g, charts, transitions)
}

/// Assembles from explicit transitions, one per compact edge, in either direction.
pub fn assemble_with(g: &DecoratedGraph, charts: Vec<TwoPerV>, transitions: Vec<Transition>) -> Result<DescentDiagram> {
    check_graph(g)?;
    if charts.len() != g.vertices.len() {
        return Err(Error::ChartCount {
            expected: g.vertices.len(),
            found: charts.len(),
        });
    }
    let ends = g.endpoints()?;
    let mut seen = vec![false; g.edges.len()];
    for t in &transitions {
        let Some(&[a, b]) = ends.get(&t.edge) else {
            return Err(Error::MalformedTransitions(format!("edge {} is not a compact edge", t.edge)));
        };
        if seen[t.edge] {
            return Err(Error::MalformedTransitions(format!("edge {} has two transitions", t.edge)));
        }
        seen[t.edge] = true;
        if t.direction != [a, b] && t.direction != [b, a] {
            return Err(Error::MalformedTransitions(format!(
                "edge {} joins vertices {a} and {b}, not {:?}",
                t.edge, t.direction
            )));
        }
        check_transition(g, t)?;
    }
    if let Some(&e) = ends.keys().find(|&&e| !seen[e]) {
        return Err(Error::MalformedTransitions(format!("edge {e} has no transition")));
    }
    let mut transitions = transitions;
    transitions.sort_by_key(|t| t.edge);
    Ok(DescentDiagram {
        graph: g.clone(),
        charts: charts.into_iter().map(|trivialization| VertexChart { trivialization }).collect(),
        transitions,
    })
}

impl DescentDiagram {
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: DescentDiagram = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let charts = raw.charts.into_iter().map(|c| c.trivialization).collect();
        assemble_with(&raw.graph, charts, raw.transitions)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serializes")
    }

    pub fn transition(&self, edge: usize) -> Option<&Transition> {
        self.transitions.iter().find(|t| t.edge == edge)
    }

    fn is_canonical(&self, t: &Transition) -> bool {
        t.direction[0] <= t.direction[1]
    }

    /// Transition of `edge` read in canonical direction.
    pub fn canonical_transition(&self, edge: usize) -> Option<EdgeAut> {
        self.transition(edge)
            .map(|t| if self.is_canonical(t) { t.aut.clone() } else { t.aut.inverse() })
    }

    /// Stores the transition of `edge` in the opposite direction, replacing it
    /// by its inverse. Loops have a fixed direction and are rejected.
    pub fn reverse_stored_direction(&self, edge: usize) -> Result<DescentDiagram> {
        let mut d = self.clone();
        let t = d
            .transitions
            .iter_mut()
            .find(|t| t.edge == edge)
            .ok_or_else(|| Error::MalformedTransitions(format!("edge {edge} has no transition")))?;
        if t.direction[0] == t.direction[1] {
            return Err(Error::MalformedTransitions(format!("edge {edge} is a loop; its direction is fixed")));
        }
        t.direction.swap(0, 1);
        t.aut = t.aut.inverse();
        Ok(d)
    }

    /// Changes the vertex trivializations by `scalars`: chart `v` is scaled by
    /// `g_v` and a transition `s -> t` has `lamU ↦ g_s · lamU · g_t^-1`. The
    /// graph's holonomy decorations follow the canonical transitions.
    pub fn gauge(&self, scalars: &[NonzeroRational]) -> Result<DescentDiagram> {
        if scalars.len() != self.charts.len() {
            return Err(Error::ChartCount {
                expected: self.charts.len(),
                found: scalars.len(),
            });
        }
        let mut d = self.clone();
        for (chart, g) in d.charts.iter_mut().zip(scalars) {
            chart.trivialization = chart.trivialization.scale(g);
        }
        for t in &mut d.transitions {
            let [s, e] = t.direction;
            t.aut.lam_u = &(&scalars[s] * &t.aut.lam_u) / &scalars[e];
        }
        for i in 0..d.transitions.len() {
            let edge = d.transitions[i].edge;
            let beta = d.canonical_transition(edge).expect("present").lam_u;
            d.graph.compact_edge_mut(edge).expect("compact").holonomy = beta;
        }
        Ok(d)
    }

    pub fn pic_invariants(&self) -> Result<PicInvariants> {
        let cycles = self.graph.cycle_basis()?;
        let edges = self.graph.compact_edge_indices();
        let canonical: Vec<(usize, EdgeAut)> = edges
            .iter()
            .map(|&e| (e, self.canonical_transition(e).expect("every compact edge has a transition")))
            .collect();
        let lookup = |e: usize| &canonical.iter().find(|(x, _)| *x == e).expect("compact edge").1;
        let holonomy = |pick: fn(&EdgeAut) -> &NonzeroRational| -> Vec<NonzeroRational> {
            cycles
                .iter()
                .map(|c| {
                    c.iter().fold(NonzeroRational::one(), |acc, &(e, s)| {
                        &acc * &pick(lookup(e)).pow(i64::from(s))
                    })
                })
                .collect()
        };
        Ok(PicInvariants {
            degree_vector: canonical.iter().map(|(_, a)| a.n).collect(),
            beta_holonomies: holonomy(|a| &a.lam_u),
            alpha_holonomies: holonomy(|a| &a.lam_x),
            edges,
        })
    }

    pub fn is_two_periodic(&self) -> Result<bool> {
        Ok(self.pic_invariants()?.is_trivial())
    }

    /// Class of the autoequivalence "tensor with `L`"; trivial iff 2-periodic.
    pub fn global_twist_autoequivalence(&self) -> Result<PicInvariants> {
        self.pic_invariants()
    }

    /// Equivalence up to gauge, decided by comparing invariants.
    pub fn equivalent(&self, other: &DescentDiagram) -> Result<bool> {
        if !self.graph.same_structure(&other.graph) {
            return Err(Error::GraphMismatch);
        }
        Ok(self.pic_invariants()?.same_class(&other.pic_invariants()?))
    }

    /// A gauge making every transition scalar `lamU` equal to 1, when the
    /// `β` holonomies are all 1. Built by propagating along the spanning tree.
    pub fn trivializing_gauge(&self) -> Result<Option<Vec<NonzeroRational>>> {
        let inv = self.pic_invariants()?;
        if !inv.beta_holonomies.iter().all(NonzeroRational::is_one) {
            return Ok(None);
        }
        let n = self.charts.len();
        let mut gauge: Vec<Option<NonzeroRational>> = vec![None; n];
        if n > 0 {
            gauge[0] = Some(NonzeroRational::one());
        }
        let ends = self.graph.endpoints()?;
        // lowest-index edge leaving the tree first, as in the cycle basis
        loop {
            let next = ends.iter().find(|(_, [a, b])| gauge[*a].is_some() != gauge[*b].is_some());
            let Some((&e, &[a, b])) = next else { break };
            let beta = self.canonical_transition(e).expect("present").lam_u;
            // g_a · β / g_b = 1
            if let Some(ga) = gauge[a].clone() {
                gauge[b] = Some(&ga * &beta);
            } else {
                let gb = gauge[b].clone().expect("one end in the tree");
                gauge[a] = Some(&gb / &beta);
            }
        }
        Ok(Some(gauge.into_iter().map(|g| g.expect("connected")).collect()))
    }

    /// Composite of the transitions around a signed edge cycle, each edge
    /// traversed forwards (`+1`, canonical transition) or backwards (its inverse).
    pub fn cycle_composite(&self, cycle: &[(usize, i8)]) -> EdgeAut {
        cycle.iter().fold(EdgeAut::identity(), |acc, &(e, s)| {
            let t = self.canonical_transition(e).expect("compact edge");
            let step = if s > 0 { t } else { t.inverse() };
            step.compose(&acc)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn q(n: i64, d: i64) -> NonzeroRational {
        NonzeroRational::ratio(n, d).unwrap()
    }

    fn charts(g: &DecoratedGraph) -> Vec<TwoPerV> {
        vec![TwoPerV::one(); g.vertices.len()]
    }

    fn theta_with_betas(b: [i64; 3]) -> DecoratedGraph {
        let mut g = examples::theta();
        for (e, &x) in b.iter().enumerate() {
            g.compact_edge_mut(e).unwrap().holonomy = q(x, 1);
        }
        g
    }

    #[test]
    fn theta_trivial_diagram() {
        let g = examples::theta();
        let d = assemble(&g, charts(&g)).unwrap();
        for t in &d.transitions {
            assert_eq!(t.aut, EdgeAut::phi(0));
            assert_eq!(t.direction, [0, 1]);
        }
        assert!(d.is_two_periodic().unwrap());
    }

    #[test]
    fn theta_holonomies() {
        let g = theta_with_betas([2, 3, 5]);
        let d = assemble(&g, charts(&g)).unwrap();
        let p = d.pic_invariants().unwrap();
        assert_eq!(p.beta_holonomies, vec![q(2, 3), q(2, 5)]);
        assert_eq!(p.degree_vector, vec![0, 0, 0]);
        assert!(!d.is_two_periodic().unwrap());
    }

    #[test]
    fn single_bad_beta_breaks_periodicity() {
        let g = theta_with_betas([2, 1, 1]);
        assert!(!assemble(&g, charts(&g)).unwrap().is_two_periodic().unwrap());
    }

    #[test]
    fn gauge_at_one_vertex() {
        let g = examples::theta();
        let d = assemble(&g, charts(&g)).unwrap();
        let same = d.gauge(&[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(same, d);
        let gd = d.gauge(&[q(2, 1), q(1, 1)]).unwrap();
        assert!(gd.transitions.iter().all(|t| t.aut.lam_u == q(2, 1)));
        assert_eq!(gd.pic_invariants().unwrap(), d.pic_invariants().unwrap());
        assert!(d.equivalent(&gd).unwrap());
    }

    #[test]
    fn rejects_bad_transitions() {
        let g = examples::theta();
        let good = assemble(&g, charts(&g)).unwrap().transitions;
        let mut bad = good.clone();
        bad[1].aut.eps = 1;
        assert_eq!(assemble_with(&g, charts(&g), bad), Err(Error::TransitionNotInCoset { edge: 1 }));
        let mut bad = good.clone();
        bad[0].aut.shift = false;
        assert_eq!(assemble_with(&g, charts(&g), bad), Err(Error::MissingShift { edge: 0 }));
        let mut bad = good.clone();
        bad[2].aut.n = 3;
        assert!(matches!(
            assemble_with(&g, charts(&g), bad),
            Err(Error::TwistMismatch { edge: 2, expected: 0, found: 3 })
        ));
        assert!(matches!(
            assemble_with(&g, charts(&g), good[..2].to_vec()),
            Err(Error::MalformedTransitions(_))
        ));
    }

    #[test]
    fn rejects_nonorientable() {
        let mut g = examples::theta();
        g.compact_edge_mut(0).unwrap().reversing = true;
        assert_eq!(assemble(&g, charts(&g)), Err(Error::NonOrientable));
    }

    #[test]
    fn reversal_keeps_invariants() {
        let mut g = theta_with_betas([2, 3, 5]);
        g.compact_edge_mut(1).unwrap().base_scalar = q(7, 2);
        g.compact_edge_mut(1).unwrap().twist = 3;
        let d = assemble(&g, charts(&g)).unwrap();
        let r = d.reverse_stored_direction(1).unwrap();
        assert_eq!(r.transition(1).unwrap().direction, [1, 0]);
        assert_eq!(r.pic_invariants().unwrap(), d.pic_invariants().unwrap());
    }

    #[test]
    fn diagram_json_round_trip() {
        let g = theta_with_betas([2, 3, 5]);
        let d = assemble(&g, charts(&g)).unwrap();
        let s = d.to_json();
        assert!(s.contains(r#""transitions":[{"edge":0,"direction":[0,1],"eps":-1,"n":0"#));
        assert_eq!(DescentDiagram::from_json(&s).unwrap(), d);
    }

    #[test]
    fn inequivalent_holonomies() {
        let a = theta_with_betas([2, 3, 5]);
        let b = examples::theta();
        let da = assemble(&a, charts(&a)).unwrap();
        let db = assemble(&b, charts(&b)).unwrap();
        assert!(!da.equivalent(&db).unwrap());
        let mut other = examples::theta();
        other.compact_edge_mut(0).unwrap().twist = 1;
        let dother = assemble(&other, charts(&other)).unwrap();
        assert_eq!(da.equivalent(&dother), Err(Error::GraphMismatch));
    }
}

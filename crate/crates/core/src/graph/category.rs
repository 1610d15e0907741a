//! The index categories `J(G)` and `I(G)`.
//!
//! `J(G)` has an object per vertex and per edge, and an arrow `v -> e` for
//! every flag (vertex, half-edge). `I(G)` replaces each edge by its flags and
//! adds, for every compact edge, an inverse pair of isomorphisms between its
//! two flags; composites are generated by saturation.

use std::collections::{BTreeMap, HashMap};

use super::{DecoratedGraph, Ribbon};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
    /// generators applied in order; empty for identities
    word: Vec<usize>,
}

impl Arrow {
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// A finite category given by explicit arrows and composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    /// `(g, f) -> g ∘ f` for every composable pair
    pub composition: BTreeMap<(usize, usize), usize>,
    identities: Vec<usize>,
}

impl FiniteCategory {
    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    /// `g ∘ f`, if `f` ends where `g` starts.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.composition.get(&(g, f)).copied()
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].source == x && self.arrows[a].target == y)
            .collect()
    }

    pub fn is_iso(&self, f: usize) -> bool {
        let a = &self.arrows[f];
        self.hom(a.target, a.source).into_iter().any(|g| {
            self.compose(g, f) == Some(self.identity(a.source))
                && self.compose(f, g) == Some(self.identity(a.target))
        })
    }

    /// Checks closure, unit laws and associativity by enumeration.
    pub fn satisfies_axioms(&self) -> bool {
        let n = self.arrows.len();
        for f in 0..n {
            let (s, t) = (self.arrows[f].source, self.arrows[f].target);
            if self.compose(f, self.identity(s)) != Some(f) || self.compose(self.identity(t), f) != Some(f) {
                return false;
            }
        }
        for f in 0..n {
            for g in 0..n {
                let composable = self.arrows[f].target == self.arrows[g].source;
                if composable != self.composition.contains_key(&(g, f)) {
                    return false;
                }
            }
        }
        for (&(g, f), &gf) in &self.composition {
            let mid = self.arrows[g].target;
            for h in (0..n).filter(|&h| self.arrows[h].source == mid) {
                let left = self.compose(h, gf);
                let right = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                if left.is_none() || left != right {
                    return false;
                }
            }
        }
        true
    }

    /// Isomorphism classes of objects, as a class index per object.
    pub fn iso_classes(&self) -> Vec<usize> {
        let n = self.objects.len();
        let mut class: Vec<usize> = (0..n).collect();
        for f in 0..self.arrows.len() {
            let a = &self.arrows[f];
            if a.source != a.target && self.is_iso(f) {
                let (x, y) = (class[a.source], class[a.target]);
                let keep = x.min(y);
                let drop = x.max(y);
                for c in class.iter_mut() {
                    if *c == drop {
                        *c = keep;
                    }
                }
            }
        }
        class
    }
}

struct Generator {
    source: usize,
    target: usize,
    label: String,
    inverse: Option<usize>,
}

fn saturate(objects: Vec<String>, gens: Vec<Generator>) -> Result<FiniteCategory> {
    let reduce = |word: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = Vec::with_capacity(word.len());
        for &g in word {
            match out.last() {
                Some(&last) if gens[last].inverse == Some(g) => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        out
    };

    let mut arrows = Vec::new();
    let mut index: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    let mut identities = Vec::with_capacity(objects.len());
    for (o, name) in objects.iter().enumerate() {
        index.insert((o, o, Vec::new()), arrows.len());
        identities.push(arrows.len());
        arrows.push(Arrow {
            source: o,
            target: o,
            label: format!("id({name})"),
            word: Vec::new(),
        });
    }
    for (i, g) in gens.iter().enumerate() {
        index.insert((g.source, g.target, vec![i]), arrows.len());
        arrows.push(Arrow {
            source: g.source,
            target: g.target,
            label: g.label.clone(),
            word: vec![i],
        });
    }

    let cap = 10 * (objects.len() + arrows.len());
    let mut composition = BTreeMap::new();
    let mut passes = 0;
    loop {
        passes += 1;
        if passes > cap {
            return Err(Error::SaturationLimit(cap));
        }
        let before = arrows.len();
        let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); objects.len()];
        for (a, arrow) in arrows.iter().enumerate() {
            by_source[arrow.source].push(a);
        }
        for f in 0..before {
            for &g in &by_source[arrows[f].target] {
                if composition.contains_key(&(g, f)) {
                    continue;
                }
                let mut word = arrows[f].word.clone();
                word.extend_from_slice(&arrows[g].word);
                let word = reduce(&word);
                let key = (arrows[f].source, arrows[g].target, word);
                let gf = match index.get(&key) {
                    Some(&i) => i,
                    None => {
                        let label = key.2.iter().rev().map(|&i| gens[i].label.as_str()).collect::<Vec<_>>().join(" ∘ ");
                        let i = arrows.len();
                        arrows.push(Arrow {
                            source: key.0,
                            target: key.1,
                            label,
                            word: key.2.clone(),
                        });
                        index.insert(key, i);
                        i
                    }
                };
                composition.insert((g, f), gf);
            }
        }
        if arrows.len() == before && composition.len() == count_composable(&arrows) {
            break;
        }
    }
    Ok(FiniteCategory {
        objects,
        arrows,
        composition,
        identities,
    })
}

fn count_composable(arrows: &[Arrow]) -> usize {
    let mut into: HashMap<usize, usize> = HashMap::new();
    for a in arrows {
        *into.entry(a.target).or_default() += 1;
    }
    arrows.iter().map(|g| into.get(&g.source).copied().unwrap_or(0)).sum()
}

fn edge_label(e: usize) -> String {
    format!("e{e}")
}

/// `J(G)`: objects are vertices then edges.
pub fn build_j(g: &DecoratedGraph) -> Result<FiniteCategory> {
    let r = g.ribbon()?;
    let nv = g.vertices.len();
    let mut objects: Vec<String> = (0..nv).map(|v| format!("v{v}")).collect();
    objects.extend((0..g.edges.len()).map(edge_label));
    let gens = (0..3 * nv)
        .map(|h| Generator {
            source: Ribbon::vertex(h),
            target: nv + r.edge_of[h],
            label: flag_label(g, h),
            inverse: None,
        })
        .collect();
    saturate(objects, gens)
}

fn flag_label(g: &DecoratedGraph, h: usize) -> String {
    let v = Ribbon::vertex(h);
    format!("v{v}->h{}", g.vertices[v].half_edges[h % 3])
}

/// `I(G)`: objects are vertices then flags (dense half-edge order).
pub fn build_i(g: &DecoratedGraph) -> Result<FiniteCategory> {
    let r = g.ribbon()?;
    let nv = g.vertices.len();
    let mut objects: Vec<String> = (0..nv).map(|v| format!("v{v}")).collect();
    objects.extend((0..3 * nv).map(|h| {
        let v = Ribbon::vertex(h);
        format!("(v{v},h{})", g.vertices[v].half_edges[h % 3])
    }));
    let mut gens: Vec<Generator> = (0..3 * nv)
        .map(|h| Generator {
            source: Ribbon::vertex(h),
            target: nv + h,
            label: flag_label(g, h),
            inverse: None,
        })
        .collect();
    for (&e, &[a, b]) in &r.ends {
        let i = gens.len();
        gens.push(Generator {
            source: nv + a,
            target: nv + b,
            label: format!("{}+", edge_label(e)),
            inverse: Some(i + 1),
        });
        gens.push(Generator {
            source: nv + b,
            target: nv + a,
            label: format!("{}-", edge_label(e)),
            inverse: Some(i),
        });
    }
    saturate(objects, gens)
}

/// Object and arrow maps of a functor between finite categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    pub object_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl Functor {
    pub fn is_functor(&self, src: &FiniteCategory, dst: &FiniteCategory) -> bool {
        let ends_ok = src.arrows.iter().zip(&self.arrow_map).all(|(a, &fa)| {
            dst.arrows[fa].source == self.object_map[a.source] && dst.arrows[fa].target == self.object_map[a.target]
        });
        let ids_ok = (0..src.objects.len()).all(|o| self.arrow_map[src.identity(o)] == dst.identity(self.object_map[o]));
        let comp_ok = src.composition.iter().all(|(&(g, f), &gf)| {
            dst.compose(self.arrow_map[g], self.arrow_map[f]) == Some(self.arrow_map[gf])
        });
        ends_ok && ids_ok && comp_ok
    }

    /// Every hom-set map `src(x, y) -> dst(Fx, Fy)` is a bijection.
    pub fn is_fully_faithful(&self, src: &FiniteCategory, dst: &FiniteCategory) -> bool {
        let n = src.objects.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let mut image: Vec<usize> = src.hom(x, y).iter().map(|&a| self.arrow_map[a]).collect();
                image.sort_unstable();
                image.dedup();
                image == dst.hom(self.object_map[x], self.object_map[y])
                    && image.len() == src.hom(x, y).len()
            })
        })
    }

    /// The induced map on isomorphism classes of objects is a bijection.
    pub fn is_bijective_on_iso_classes(&self, src: &FiniteCategory, dst: &FiniteCategory) -> bool {
        let (cs, cd) = (src.iso_classes(), dst.iso_classes());
        let mut pairs: BTreeMap<usize, usize> = BTreeMap::new();
        for (o, &c) in cs.iter().enumerate() {
            let image = cd[self.object_map[o]];
            if *pairs.entry(c).or_insert(image) != image {
                return false;
            }
        }
        let mut images: Vec<usize> = pairs.values().copied().collect();
        images.sort_unstable();
        images.dedup();
        let mut all: Vec<usize> = cd.clone();
        all.sort_unstable();
        all.dedup();
        images.len() == pairs.len() && images == all
    }
}

/// The functor `I(G) -> J(G)` sending both flags of an edge to the edge and
/// each edge isomorphism to an identity.
pub fn collapse_functor(g: &DecoratedGraph) -> Result<(FiniteCategory, FiniteCategory, Functor)> {
    let r = g.ribbon()?;
    let i_cat = build_i(g)?;
    let j_cat = build_j(g)?;
    let nv = g.vertices.len();
    let object_map: Vec<usize> = (0..i_cat.objects.len())
        .map(|o| if o < nv { o } else { nv + r.edge_of[o - nv] })
        .collect();

    // generator images: flag arrows map to flag arrows, isomorphisms to identities
    let flag_arrow_in_j = |h: usize| nv + g.edges.len() + h;
    let image_of_gen = |gen: usize| -> usize {
        if gen < 3 * nv {
            flag_arrow_in_j(gen)
        } else {
            let e = r.ends.keys().nth((gen - 3 * nv) / 2).copied().expect("edge generator");
            j_cat.identity(nv + e)
        }
    };
    let arrow_map = i_cat
        .arrows
        .iter()
        .map(|a| {
            a.word.iter().fold(j_cat.identity(object_map[a.source]), |acc, &gen| {
                j_cat.compose(image_of_gen(gen), acc).expect("composable image")
            })
        })
        .collect();
    Ok((i_cat, j_cat, Functor { object_map, arrow_map }))
}

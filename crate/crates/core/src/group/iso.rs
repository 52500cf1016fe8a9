//! Isomorphism testing by backtracking over generator images.

use super::{FiniteGroup, GroupElement, GroupError, GroupRef, Homomorphism, SEARCH_LIMIT};

/// Per-element invariant used to prune the image search.
fn signature(g: &FiniteGroup, a: GroupElement) -> (usize, usize) {
    (g.element_order(a), g.centralizer(a).order())
}

fn signature_multiset(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = g.elements().map(|a| signature(g, a)).collect();
    v.sort();
    v
}

/// Expression of every element of the group as `parent * gen`, in BFS order
/// from the identity over a fixed generating sequence.
struct Expressions {
    /// (element, parent position, generator index); identity first.
    order: Vec<(GroupElement, usize, usize)>,
    /// Largest generator index (plus one) used on the path to each position.
    max_gen: Vec<usize>,
}

fn expressions(g: &FiniteGroup, gens: &[GroupElement]) -> Expressions {
    let mut seen = vec![false; g.order()];
    let mut order = vec![(g.identity(), 0usize, usize::MAX)];
    let mut max_gen = vec![0usize];
    seen[g.identity().index()] = true;
    let mut next = 0;
    while next < order.len() {
        let (x, _, _) = order[next];
        for (gi, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if !seen[y.index()] {
                seen[y.index()] = true;
                order.push((y, next, gi));
                max_gen.push(max_gen[next].max(gi + 1));
            }
        }
        next += 1;
    }
    Expressions { order, max_gen }
}

/// Extends `gens[i] -> images[i]` along the BFS expressions, over the prefix
/// of positions whose paths only use assigned generators. Fails on signature
/// mismatch or collision. Returns images in BFS-position order.
fn induced_prefix(
    h: &FiniteGroup,
    exprs: &Expressions,
    images: &[GroupElement],
    h_sig: &[(usize, usize)],
    g_sig: &[(usize, usize)],
) -> Option<Vec<GroupElement>> {
    let mut img: Vec<GroupElement> = Vec::new();
    let mut used = vec![false; h.order()];
    for pos in 0..exprs.order.len() {
        if exprs.max_gen[pos] > images.len() {
            break;
        }
        let (x, parent, gi) = exprs.order[pos];
        let y = if pos == 0 {
            h.identity()
        } else {
            h.mul(img[parent], images[gi])
        };
        if used[y.index()] || g_sig[x.index()] != h_sig[y.index()] {
            return None;
        }
        used[y.index()] = true;
        img.push(y);
    }
    Some(img)
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<GroupElement>,
    exprs: Expressions,
    g_sig: Vec<(usize, usize)>,
    h_sig: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn run(&self, images: &mut Vec<GroupElement>) -> Option<Vec<u16>> {
        if images.len() == self.gens.len() {
            return self.verify(images);
        }
        let want = self.g_sig[self.gens[images.len()].index()];
        for cand in self.h.elements() {
            if self.h_sig[cand.index()] != want {
                continue;
            }
            images.push(cand);
            if induced_prefix(self.h, &self.exprs, images, &self.h_sig, &self.g_sig)
                .is_some()
            {
                if let Some(map) = self.run(images) {
                    return Some(map);
                }
            }
            images.pop();
        }
        None
    }

    /// Full bijectivity plus homomorphism law on every pair.
    fn verify(&self, images: &[GroupElement]) -> Option<Vec<u16>> {
        let img = induced_prefix(self.h, &self.exprs, images, &self.h_sig, &self.g_sig)?;
        if img.len() != self.g.order() {
            return None;
        }
        let mut map = vec![0u16; self.g.order()];
        for (pos, &(x, _, _)) in self.exprs.order.iter().enumerate() {
            map[x.index()] = img[pos].0;
        }
        for a in self.g.elements() {
            for b in self.g.elements() {
                let lhs = self
                    .h
                    .mul(GroupElement(map[a.index()]), GroupElement(map[b.index()]));
                if lhs.0 != map[self.g.mul(a, b).index()] {
                    return None;
                }
            }
        }
        Some(map)
    }
}

/// Returns a verified isomorphism witness, or `None` when the groups are not
/// isomorphic. Candidate generator images are restricted to elements with
/// matching (order, centralizer size) signature, assigned by backtracking.
pub fn isomorphism(g: &GroupRef, h: &GroupRef) -> Result<Option<Homomorphism>, GroupError> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.order() > SEARCH_LIMIT {
        return Err(GroupError::Capacity {
            requested: g.order(),
            limit: SEARCH_LIMIT,
        });
    }
    if signature_multiset(g) != signature_multiset(h) {
        return Ok(None);
    }
    let gens = g.minimal_generating_set();
    let exprs = expressions(g, &gens);
    debug_assert_eq!(exprs.order.len(), g.order());
    let search = Search {
        g,
        h,
        g_sig: g.elements().map(|a| signature(g, a)).collect(),
        h_sig: h.elements().map(|a| signature(h, a)).collect(),
        gens,
        exprs,
    };
    match search.run(&mut Vec::new()) {
        None => Ok(None),
        Some(map) => {
            let hom = Homomorphism::new(g.clone(), h.clone(), map)?;
            assert!(hom.is_injective() && hom.is_surjective());
            Ok(Some(hom))
        }
    }
}

/// Convenience wrapper over [`isomorphism`].
pub fn is_isomorphic(g: &GroupRef, h: &GroupRef) -> Result<bool, GroupError> {
    Ok(isomorphism(g, h)?.is_some())
}

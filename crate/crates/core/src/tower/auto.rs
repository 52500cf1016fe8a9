//! Automorphism groups of towers, by level-wise embedding extension.
//!
//! An embedding of the tower into itself is determined by where each adjoined
//! radical goes; at each level the image of the radicand must acquire a
//! square root in the top field, and both signs extend. The count of complete
//! embeddings is at most the degree, with equality exactly for Galois towers.

use super::{TowerElement, TowerError, TowerField};
use crate::group::{FiniteGroup, GroupElement};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A tower automorphism, represented by the images of the adjoined radicals
/// and a precomputed table of basis-monomial images.
#[derive(Clone)]
pub struct TowerAutomorphism {
    radical_images: Vec<TowerElement>,
    monomial_images: Vec<TowerElement>,
}

impl TowerAutomorphism {
    pub fn radical_image(&self, i: usize) -> &TowerElement {
        &self.radical_images[i]
    }

    /// Applies the automorphism to an element of any level of the tower.
    pub fn apply(&self, t: &TowerField, x: &TowerElement) -> TowerElement {
        let mut acc = t.constant(num_rational::BigRational::zero());
        for (eps, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = t.add(&acc, &t.scale(&self.monomial_images[eps], c));
        }
        acc
    }

    /// `+` when the radical maps to itself, `-` for its negation, `*` for
    /// anything else.
    fn sign_label(&self, t: &TowerField) -> String {
        self.radical_images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let r = t.radical(i);
                if t.equals(img, &r) {
                    '+'
                } else if t.equals(img, &t.neg(&r)) {
                    '-'
                } else {
                    '*'
                }
            })
            .collect()
    }
}

pub struct AutomorphismGroup {
    pub group: FiniteGroup,
    pub maps: Vec<TowerAutomorphism>,
    /// Automorphism count equals the degree.
    pub is_galois: bool,
}

impl AutomorphismGroup {
    /// Indices of automorphisms fixing the given radical.
    pub fn fixing_radical(&self, t: &TowerField, i: usize) -> Vec<GroupElement> {
        let r = t.radical(i);
        self.maps
            .iter()
            .enumerate()
            .filter(|(_, m)| t.equals(m.radical_image(i), &r))
            .map(|(j, _)| GroupElement(j as u16))
            .collect()
    }

    /// Indices of automorphisms fixing the given element.
    pub fn fixing_element(&self, t: &TowerField, x: &TowerElement) -> Vec<GroupElement> {
        self.maps
            .iter()
            .enumerate()
            .filter(|(_, m)| t.equals(&m.apply(t, x), x))
            .map(|(j, _)| GroupElement(j as u16))
            .collect()
    }
}

fn element_key(x: &TowerElement) -> String {
    let parts: Vec<String> = x.coeffs().iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

fn images_key(images: &[TowerElement]) -> String {
    let parts: Vec<String> = images.iter().map(element_key).collect();
    parts.join(";")
}

impl TowerField {
    /// All field automorphisms, with their composition table as a
    /// [`FiniteGroup`]. Deterministic: embeddings are discovered level by
    /// level with the `+` square root before the `-` one.
    pub fn automorphisms(&self) -> Result<AutomorphismGroup, TowerError> {
        let n = self.levels();
        let top = self.degree();
        // Partial embeddings carry monomial images for the covered levels.
        let mut partial: Vec<TowerAutomorphism> = vec![TowerAutomorphism {
            radical_images: vec![],
            monomial_images: vec![self.constant(num_rational::BigRational::from_integer(
                1.into(),
            ))],
        }];
        for k in 0..n {
            let mut next = Vec::new();
            for phi in &partial {
                let image_of_radicand = phi.apply(self, &self.lift(self.radicand(k), k));
                let Some(root) = self.sqrt(&image_of_radicand) else {
                    continue; // this embedding does not extend
                };
                for s in [root.clone(), self.neg(&root)] {
                    debug_assert!(self.equals(&self.square(&s), &image_of_radicand));
                    let mut radical_images = phi.radical_images.clone();
                    radical_images.push(s.clone());
                    let mut monomial_images = phi.monomial_images.clone();
                    for eps in 0..(1 << k) {
                        let prod = self.mul(&phi.monomial_images[eps], &s);
                        monomial_images.push(prod);
                    }
                    next.push(TowerAutomorphism {
                        radical_images,
                        monomial_images,
                    });
                }
            }
            partial = next;
        }
        let maps = partial;
        let count = maps.len();
        assert!(count <= top && top % count.max(1) == 0);
        let is_galois = count == top;

        // Index automorphisms by their radical images.
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        for (i, m) in maps.iter().enumerate() {
            index.insert(images_key(&m.radical_images), i);
        }
        let identity = *index
            .get(&images_key(
                &(0..n).map(|i| self.radical(i)).collect::<Vec<_>>(),
            ))
            .expect("identity embedding is always found");

        let compose = |i: usize, j: usize| -> usize {
            let composed: Vec<TowerElement> = (0..n)
                .map(|k| maps[i].apply(self, maps[j].radical_image(k)))
                .collect();
            *index
                .get(&images_key(&composed))
                .expect("automorphisms are closed under composition")
        };

        // Left-translation rows for a greedy generating set, then closure by
        // permutation products: row(g.h) = row(g) o row(h).
        let mut rows: Vec<Option<Vec<u16>>> = vec![None; count];
        rows[identity] = Some((0..count as u16).collect());
        let mut generators: Vec<u16> = Vec::new();
        loop {
            let Some(missing) = rows.iter().position(|r| r.is_none()) else {
                break;
            };
            let fresh: Vec<u16> = (0..count).map(|j| compose(missing, j) as u16).collect();
            generators.push(fresh[identity]);
            debug_assert_eq!(fresh[identity] as usize, missing);
            rows[missing] = Some(fresh);
            // Close under products of known rows.
            loop {
                let mut added = false;
                let known: Vec<Vec<u16>> =
                    rows.iter().flatten().cloned().collect();
                for a in &known {
                    for b in &known {
                        let prod: Vec<u16> = (0..count).map(|j| a[b[j] as usize]).collect();
                        let e = prod[identity] as usize;
                        if rows[e].is_none() {
                            rows[e] = Some(prod);
                            added = true;
                        }
                    }
                }
                if !added {
                    break;
                }
            }
        }

        let mut table = vec![0u16; count * count];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref().expect("all rows filled");
            table[i * count..(i + 1) * count].copy_from_slice(row);
        }
        let labels: Vec<String> = maps.iter().map(|m| m.sign_label(self)).collect();
        if generators.is_empty() {
            generators.push(identity as u16); // trivial group
        }
        let group = FiniteGroup::from_table(count, table, identity as u16, generators, Some(labels))?;
        Ok(AutomorphismGroup {
            group,
            maps,
            is_galois,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::named_group;
    use crate::group::is_isomorphic;
    use std::sync::Arc;

    #[test]
    fn biquadratic_gives_klein() {
        let t = TowerField::rationals()
            .extend_rational(2)
            .unwrap()
            .extend_rational(7)
            .unwrap();
        let auts = t.automorphisms().unwrap();
        assert!(auts.is_galois);
        assert_eq!(auts.group.order(), 4);
        let klein = named_group("Klein").unwrap();
        assert!(is_isomorphic(&Arc::new(auts.group.clone()), &klein).unwrap());
    }

    #[test]
    fn non_normal_quartic_is_flagged() {
        let t2 = TowerField::rationals().extend_rational(2).unwrap();
        let nested = t2.extend(&t2.radical(0)).unwrap();
        let auts = nested.automorphisms().unwrap();
        assert!(!auts.is_galois);
        assert_eq!(auts.group.order(), 2);
    }

    #[test]
    fn gaussian_pair() {
        let t = TowerField::rationals()
            .extend_rational(-1)
            .unwrap()
            .extend_rational(2)
            .unwrap();
        let auts = t.automorphisms().unwrap();
        assert!(auts.is_galois);
        assert_eq!(auts.group.order(), 4);
    }

    #[test]
    fn automorphisms_preserve_products() {
        let t = TowerField::rationals()
            .extend_rational(2)
            .unwrap()
            .extend_rational(7)
            .unwrap();
        let auts = t.automorphisms().unwrap();
        for m in &auts.maps {
            // Spot-check multiplicativity on all basis monomial pairs.
            for i in 0..t.degree() {
                for j in 0..t.degree() {
                    let mi = &m.monomial_images[i];
                    let mj = &m.monomial_images[j];
                    let mut ei = vec![num_rational::BigRational::zero(); t.degree()];
                    ei[i] = num_rational::BigRational::from_integer(1.into());
                    let mut ej = vec![num_rational::BigRational::zero(); t.degree()];
                    ej[j] = num_rational::BigRational::from_integer(1.into());
                    let bi = TowerElement::from_coeffs(t.levels(), ei);
                    let bj = TowerElement::from_coeffs(t.levels(), ej);
                    let lhs = m.apply(&t, &t.mul(&bi, &bj));
                    let rhs = t.mul(mi, mj);
                    assert!(t.equals(&lhs, &rhs));
                }
            }
        }
    }

    #[test]
    fn trivial_tower() {
        let q = TowerField::rationals();
        let auts = q.automorphisms().unwrap();
        assert_eq!(auts.group.order(), 1);
        assert!(auts.is_galois);
    }
}

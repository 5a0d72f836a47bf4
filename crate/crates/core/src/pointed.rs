//! Pointed integral spaces: wedge, smash product, pointed hom-spaces and the
//! transposition between them.

use crate::constructions::{
    self, coproduct, for_each_function, quotient, subspace, tensor, HomSpace, Partition, PointMap,
};
use crate::error::{Error, Result};
use crate::space::{isomorphism_fixing, ConnSpace};
use crate::subset::Subset;

/// An integral space with a base point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedConnSpace {
    space: ConnSpace,
    base: usize,
}

impl PointedConnSpace {
    pub fn new(space: ConnSpace, base: usize) -> Result<Self> {
        if !space.is_integral() {
            return Err(Error::NotIntegral);
        }
        if base >= space.size() {
            return Err(Error::InvalidPoint {
                point: base,
                size: space.size(),
            });
        }
        Ok(PointedConnSpace { space, base })
    }

    /// The one-point space, both initial and terminal.
    pub fn zero() -> Self {
        PointedConnSpace {
            space: crate::catalog::discrete(1),
            base: 0,
        }
    }

    pub fn space(&self) -> &ConnSpace {
        &self.space
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn size(&self) -> usize {
        self.space.size()
    }
}

/// A bijection `perm[a_point] = b_point` carrying structure and base point.
pub fn pointed_isomorphism(
    a: &PointedConnSpace,
    b: &PointedConnSpace,
) -> Result<Option<Vec<usize>>> {
    isomorphism_fixing(&a.space, &b.space, Some((a.base, b.base)))
}

/// True iff `f` is a morphism preserving base points.
pub fn is_based_morphism(f: &PointMap, x: &PointedConnSpace, y: &PointedConnSpace) -> Result<bool> {
    Ok(constructions::is_morphism(f, &x.space, &y.space)? && f.apply(x.base) == y.base)
}

/// All based morphisms `x → y`, tables in lexicographic order.
pub fn based_morphisms(x: &PointedConnSpace, y: &PointedConnSpace) -> Result<Vec<PointMap>> {
    Ok(constructions::morphisms(&x.space, &y.space)?
        .into_iter()
        .filter(|f| f.apply(x.base) == y.base)
        .collect())
}

/// Product with base `(β₁, β₂)`.
pub fn pointed_product(x1: &PointedConnSpace, x2: &PointedConnSpace) -> Result<PointedConnSpace> {
    let space = constructions::product(&x1.space, &x2.space)?;
    Ok(PointedConnSpace {
        space,
        base: x1.base * x2.size() + x2.base,
    })
}

/// Coproduct with the two base points identified. Points of `x1` come
/// first, then those of `x2` other than its base.
pub fn wedge(x1: &PointedConnSpace, x2: &PointedConnSpace) -> Result<PointedConnSpace> {
    let sum = coproduct(&x1.space, &x2.space)?;
    let glue = Subset::from_points([x1.base, x1.size() + x2.base]);
    let partition = Partition::from_merges(sum.size(), &[glue])?;
    let base = partition.assignment().apply(x1.base);
    Ok(PointedConnSpace {
        space: quotient(&sum, &partition)?,
        base,
    })
}

/// The wedge subset `(|X₁| × {β₂}) ∪ ({β₁} × |X₂|)` of the product carrier.
pub fn wedge_subset(x1: &PointedConnSpace, x2: &PointedConnSpace) -> Subset {
    let n2 = x2.size();
    let row = (0..n2).map(|b| x1.base * n2 + b);
    let col = (0..x1.size()).map(|a| a * n2 + x2.base);
    Subset::from_points(row.chain(col))
}

/// The wedge as the subspace of `x1 ⊠ x2` on the wedge subset, points in
/// encoding order.
pub fn wedge_via_tensor(x1: &PointedConnSpace, x2: &PointedConnSpace) -> Result<PointedConnSpace> {
    let t = tensor(&x1.space, &x2.space)?;
    let w = wedge_subset(x1, x2);
    let corner = x1.base * x2.size() + x2.base;
    let base = w.points().position(|p| p == corner).expect("corner lies in the wedge");
    Ok(PointedConnSpace {
        space: subspace(&t, w)?,
        base,
    })
}

/// A smash product with its quotient map from the `x1 ⊠ x2` carrier.
#[derive(Clone, Debug)]
pub struct Smash {
    pub space: PointedConnSpace,
    pub quotient: PointMap,
}

/// `(x1 ⊠ x2) / |x1 ∨ x2|`; the collapsed wedge is the base point.
pub fn smash(x1: &PointedConnSpace, x2: &PointedConnSpace) -> Result<Smash> {
    let t = tensor(&x1.space, &x2.space)?;
    let partition = Partition::from_merges(t.size(), &[wedge_subset(x1, x2)])?;
    let q = partition.assignment();
    let base = q.apply(x1.base * x2.size() + x2.base);
    Ok(Smash {
        space: PointedConnSpace {
            space: quotient(&t, &partition)?,
            base,
        },
        quotient: q,
    })
}

/// Based morphisms `x → y` as a subspace of the hom-space, kept implicit.
#[derive(Clone, Debug)]
pub struct PointedHomSpace {
    hom: HomSpace,
    source_base: usize,
    target_base: usize,
    base: usize,
}

impl PointedHomSpace {
    pub fn new(x: &PointedConnSpace, y: &PointedConnSpace) -> Result<Self> {
        let hom = HomSpace::new(&x.space, &y.space)?.restricted(|f| f.apply(x.base) == y.base);
        let constant = PointMap::constant(x.size(), y.size(), y.base)?;
        let base = hom.index_of(&constant).expect("the constant map is based");
        Ok(PointedHomSpace {
            hom,
            source_base: x.base,
            target_base: y.base,
            base,
        })
    }

    pub fn hom(&self) -> &HomSpace {
        &self.hom
    }

    /// Index of the constant map to the target base point.
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.hom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hom.is_empty()
    }

    pub fn source_base(&self) -> usize {
        self.source_base
    }

    pub fn target_base(&self) -> usize {
        self.target_base
    }

    pub fn materialize(&self) -> Result<PointedConnSpace> {
        Ok(PointedConnSpace {
            space: self.hom.materialize()?,
            base: self.base,
        })
    }
}

/// The pointed hom-space `pCnct(x, y)` as an explicit space.
pub fn pointed_hom(x: &PointedConnSpace, y: &PointedConnSpace) -> Result<PointedConnSpace> {
    PointedHomSpace::new(x, y)?.materialize()
}

/// Transposes a based `psi : x ∧ y → z` into `y → pCnct(x, z)`,
/// `b ↦ psi((-, b)~)`. `phom` must be `pCnct(x, z)`.
pub fn pointed_curry(
    psi: &PointMap,
    sm: &Smash,
    y: &PointedConnSpace,
    phom: &PointedHomSpace,
) -> Result<PointMap> {
    let hom = phom.hom();
    let (nx, ny) = (hom.source().size(), y.size());
    if sm.quotient.source() != nx * ny || psi.source() != sm.space.size() {
        return Err(Error::GroundMismatch(format!(
            "map on {} points does not match a smash of {nx}×{ny} points",
            psi.source()
        )));
    }
    if psi.apply(sm.space.base) != phom.target_base {
        return Err(Error::NotBased);
    }
    let lifted = sm.quotient.then(psi)?;
    let phi = constructions::curry(&lifted, &y.space, hom)?;
    if phi.apply(y.base) != phom.base {
        return Err(Error::NotBased);
    }
    Ok(phi)
}

/// Inverse of [`pointed_curry`]: `(a, b)~ ↦ phi(b)(a)`.
pub fn pointed_uncurry(
    phi: &PointMap,
    sm: &Smash,
    y: &PointedConnSpace,
    phom: &PointedHomSpace,
) -> Result<PointMap> {
    if phi.apply(y.base) != phom.base {
        return Err(Error::NotBased);
    }
    let lifted = constructions::uncurry(phi, &y.space, phom.hom())?;
    let mut table = vec![usize::MAX; sm.space.size()];
    for (p, &v) in lifted.table().iter().enumerate() {
        let class = sm.quotient.apply(p);
        if table[class] == usize::MAX {
            table[class] = v;
        } else if table[class] != v {
            return Err(Error::InvalidMap("not constant on a smash class".into()));
        }
    }
    PointMap::new(sm.space.size(), lifted.target(), table)
}

/// All based morphisms `y → phom`, tables in lexicographic order.
pub fn based_morphisms_into(phom: &PointedHomSpace, y: &PointedConnSpace) -> Result<Vec<PointMap>> {
    Ok(phom
        .hom()
        .morphisms_from(&y.space)?
        .into_iter()
        .filter(|phi| phi.apply(y.base) == phom.base)
        .collect())
}

/// Calls `visit` with every based function table `x → y`, morphism or not.
pub fn for_each_based_function(
    x: &PointedConnSpace,
    y: &PointedConnSpace,
    mut visit: impl FnMut(&PointMap),
) {
    for_each_function(x.size(), y.size(), |t| {
        if t[x.base] == y.base {
            visit(&PointMap::new(x.size(), y.size(), t.to_vec()).expect("valid table"));
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{brunnian, discrete, v_space};
    use crate::subset::SubsetFamily;

    fn pointed(space: ConnSpace, base: usize) -> PointedConnSpace {
        PointedConnSpace::new(space, base).unwrap()
    }

    fn s(points: &[usize]) -> Subset {
        Subset::from_points(points.iter().copied())
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            PointedConnSpace::new(discrete(2), 2),
            Err(Error::InvalidPoint { point: 2, size: 2 })
        );
        let raw = ConnSpace::new(
            crate::space::GroundSet::new(1),
            [Subset::EMPTY].into_iter().collect(),
            false,
        )
        .unwrap();
        assert_eq!(PointedConnSpace::new(raw, 0), Err(Error::NotIntegral));
    }

    #[test]
    fn wedge_examples() {
        let b2 = pointed(brunnian(2), 0);
        let w = wedge(&b2, &b2).unwrap();
        assert_eq!(w.size(), 3);
        assert_eq!(w.base(), 0);
        let expected: SubsetFamily = [s(&[0, 1]), s(&[0, 2]), s(&[0, 1, 2])].into_iter().collect();
        assert_eq!(w.space().structure().nontrivial(), expected);

        let x = pointed(v_space(3), 2);
        let z = PointedConnSpace::zero();
        assert!(pointed_isomorphism(&wedge(&x, &z).unwrap(), &x).unwrap().is_some());
        assert!(pointed_isomorphism(&wedge(&z, &x).unwrap(), &x).unwrap().is_some());
        assert!(pointed_isomorphism(&wedge_via_tensor(&x, &z).unwrap(), &x)
            .unwrap()
            .is_some());
    }

    #[test]
    fn smash_examples() {
        let b2 = pointed(brunnian(2), 0);
        let sm = smash(&b2, &b2).unwrap();
        assert_eq!(sm.space.size(), 2);
        assert_eq!(sm.space.space().structure().nontrivial(), [s(&[0, 1])].into_iter().collect());

        let x = pointed(v_space(3), 1);
        let z = PointedConnSpace::zero();
        assert_eq!(smash(&x, &z).unwrap().space.size(), 1);
        assert_eq!(smash(&z, &x).unwrap().space.size(), 1);
    }

    #[test]
    fn pointed_hom_examples() {
        let b2 = pointed(brunnian(2), 0);
        let h = PointedHomSpace::new(&b2, &b2).unwrap();
        assert_eq!(h.len(), 2);
        let m = h.materialize().unwrap();
        assert_eq!(m.space(), &brunnian(2));
        assert_eq!(h.hom().morphisms()[m.base()], PointMap::constant(2, 2, 0).unwrap());

        let z = PointedConnSpace::zero();
        assert_eq!(pointed_hom(&z, &pointed(v_space(3), 0)).unwrap().size(), 1);
    }

    #[test]
    fn curry_collapse_everything() {
        let (x, y, z) = (pointed(brunnian(2), 0), pointed(v_space(2), 1), pointed(brunnian(3), 2));
        let sm = smash(&x, &y).unwrap();
        let phom = PointedHomSpace::new(&x, &z).unwrap();
        let psi = PointMap::constant(sm.space.size(), 3, 2).unwrap();
        let phi = pointed_curry(&psi, &sm, &y, &phom).unwrap();
        assert!(phi.table().iter().all(|&i| i == phom.base()));
        assert_eq!(pointed_uncurry(&phi, &sm, &y, &phom).unwrap(), psi);
    }

    #[test]
    fn product_does_not_distribute_over_wedge() {
        let p = pointed(brunnian(2), 0);
        let q = PointedConnSpace::zero();
        let left = pointed_product(&p, &wedge(&q, &q).unwrap()).unwrap();
        let pq = pointed_product(&p, &q).unwrap();
        let right = wedge(&pq, &pq).unwrap();
        assert_eq!(left.size(), 2);
        assert_eq!(right.size(), 3);
        assert!(pointed_isomorphism(&left, &p).unwrap().is_some());
    }
}

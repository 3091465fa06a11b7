use std::fmt;
use std::sync::{Arc, Mutex};

use super::buchberger::{buchberger, normal_form};
use crate::error::Result;
use crate::poly::{MonomialOrder, Poly, Ring};

/// An ideal given by generators, with reduced Gröbner bases cached per monomial order.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    cache: Mutex<Vec<(MonomialOrder, Arc<Vec<Poly>>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(self.cache.lock().unwrap().clone()) }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("ring", &self.ring).field("gens", &self.gens).finish()
    }
}

impl Ideal {
    /// The ideal generated by `gens`; zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<Self> {
        for g in &gens {
            ring.check_same(g.ring())?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: Mutex::new(Vec::new()) })
    }

    /// Convenience constructor for a non-empty generator list.
    pub fn from_gens(gens: Vec<Poly>) -> Result<Self> {
        let ring = gens.first().expect("at least one generator").ring().clone();
        Self::new(&ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), cache: Mutex::new(Vec::new()) }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: vec![ring.one()], cache: Mutex::new(Vec::new()) }
    }

    /// The ideal generated by the ring variables.
    pub fn maximal(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: ring.gens(), cache: Mutex::new(Vec::new()) }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced Gröbner basis under `order`, computed once and then cached.
    pub fn gb(&self, order: MonomialOrder) -> Arc<Vec<Poly>> {
        if let Some((_, b)) = self.cache.lock().unwrap().iter().find(|(o, _)| *o == order) {
            return b.clone();
        }
        let basis = Arc::new(buchberger(&self.gens, order));
        let mut cache = self.cache.lock().unwrap();
        if let Some((_, b)) = cache.iter().find(|(o, _)| *o == order) {
            return b.clone();
        }
        cache.push((order, basis.clone()));
        basis
    }

    /// Reduced Gröbner basis under the ring's own order.
    pub fn groebner_basis(&self) -> Arc<Vec<Poly>> {
        self.gb(self.ring.order())
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        self.ring.check_same(p.ring())?;
        let order = self.ring.order();
        Ok(normal_form(p, &self.gb(order), order))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(p.is_zero() || self.normal_form(p)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by mutual generator membership.
    pub fn ideal_equal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().is_some_and(|g| g.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The same ideal with its reduced Gröbner basis as generators.
    pub fn reduced(&self) -> Ideal {
        let gb = self.groebner_basis();
        Ideal { ring: self.ring.clone(), gens: gb.to_vec(), cache: Mutex::new(self.cache.lock().unwrap().clone()) }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a * b)).collect();
        Ideal::new(&self.ring, gens)
    }

    /// Adds generators.
    pub fn extended(&self, extra: &[Poly]) -> Result<Ideal> {
        Ideal::new(&self.ring, self.gens.iter().chain(extra).cloned().collect())
    }

    /// The ideal in another ring, with variables matched by name.
    pub fn to_ring(&self, target: &Ring) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Leading monomials of the reduced basis under `order`.
    pub fn leading_monomials(&self, order: MonomialOrder) -> Vec<Vec<u32>> {
        self.gb(order).iter().filter_map(|g| g.leading_term(order).map(|(e, _)| e.clone())).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

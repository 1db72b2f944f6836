//! Memoized construction of spaces, algebras and curvature spaces.

use std::collections::HashMap;
use std::sync::Arc;

use log::debug;

use crate::cache::{CacheKey, DiskCache};
use crate::curvature::{bianchi_kernel, CurvatureSpace};
use crate::error::Result;
use crate::liealg::{build_algebra, LieAlgebra};
use crate::quatspace::QuaternionicSpace;

type Sig = (usize, usize, usize);

/// Builds each object at most once per signature and, for curvature
/// spaces, consults an optional [`DiskCache`].
#[derive(Default)]
pub struct Context {
    cache: Option<DiskCache>,
    spaces: HashMap<Sig, Arc<QuaternionicSpace>>,
    algebras: HashMap<CacheKey, Arc<LieAlgebra>>,
    curvature: HashMap<CacheKey, Arc<CurvatureSpace>>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    pub fn with_cache(cache: Option<DiskCache>) -> Self {
        Context {
            cache,
            ..Context::default()
        }
    }

    pub fn space(&mut self, r: usize, s: usize, t: usize) -> Result<Arc<QuaternionicSpace>> {
        if let Some(sp) = self.spaces.get(&(r, s, t)) {
            return Ok(sp.clone());
        }
        let sp = Arc::new(QuaternionicSpace::new(r, s, t)?);
        self.spaces.insert((r, s, t), sp.clone());
        Ok(sp)
    }

    pub fn algebra(&mut self, r: usize, s: usize, t: usize, name: &str) -> Result<Arc<LieAlgebra>> {
        let key = CacheKey::new(r, s, t, name);
        if let Some(g) = self.algebras.get(&key) {
            return Ok(g.clone());
        }
        let sp = self.space(r, s, t)?;
        let g = Arc::new(build_algebra(name, &sp)?);
        self.algebras.insert(key, g.clone());
        Ok(g)
    }

    /// `𝓡(𝔤)` for a registered algebra.
    pub fn curvature(&mut self, r: usize, s: usize, t: usize, name: &str) -> Result<Arc<CurvatureSpace>> {
        let key = CacheKey::new(r, s, t, name);
        if let Some(rs) = self.curvature.get(&key) {
            return Ok(rs.clone());
        }
        let g = self.algebra(r, s, t, name)?;
        let cached = self.cache.as_ref().and_then(|c| c.get(&g));
        let rs = match cached {
            Some(rs) => {
                debug!("cache hit for {name} at ({r},{s},{t})");
                rs
            }
            None => {
                let rs = bianchi_kernel(&g);
                if let Some(c) = &self.cache {
                    c.put(&rs);
                }
                rs
            }
        };
        let rs = Arc::new(rs);
        self.curvature.insert(key, rs.clone());
        Ok(rs)
    }

    /// Every curvature space computed so far, ordered by key.
    pub fn computed_curvature(&self) -> Vec<(CacheKey, Arc<CurvatureSpace>)> {
        let mut out: Vec<_> = self.curvature.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

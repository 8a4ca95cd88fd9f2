use std::collections::HashMap;

use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// Subgroup as a group in its own right plus its embedding into the parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FiniteGroup,
    pub embed: Vec<usize>,
}

impl Subgroup {
    /// `elems` must contain the identity and be closed; the parent identity
    /// becomes index 0.
    pub fn from_elements(parent: &FiniteGroup, elems: &[usize]) -> Result<Self> {
        let mut embed: Vec<usize> = elems.to_vec();
        embed.sort_unstable();
        embed.dedup();
        if !parent.is_subgroup(&embed) {
            return Err(Error::NotSubgroup(format!("{} elements of {} are not closed", embed.len(), parent.name())));
        }
        let local: HashMap<usize, usize> = embed.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let n = embed.len();
        let mut table = vec![0u16; n * n];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                table[i * n + j] = local[&parent.mul(a, b)] as u16;
            }
        }
        let group = FiniteGroup::from_table(format!("sub({})", parent.name()), n, table)?;
        Ok(Subgroup { group, embed })
    }

    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Result<Self> {
        Self::from_elements(parent, &parent.closure(gens))
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Subgroup { group: parent.clone(), embed: (0..parent.order()).collect() }
    }

    pub fn order(&self) -> usize {
        self.embed.len()
    }

    pub fn index_in(&self, parent: &FiniteGroup) -> usize {
        parent.order() / self.order()
    }

    /// Parent-index to local-index map.
    pub fn local_index(&self) -> HashMap<usize, usize> {
        self.embed.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }

    pub fn contains(&self, parent_elem: usize) -> bool {
        self.embed.binary_search(&parent_elem).is_ok()
    }
}

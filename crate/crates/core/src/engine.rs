//! Interchangeable word-problem solvers, selectable by name.

use crate::artin::{artin_action_capped, DEFAULT_IMAGE_CAP};
use crate::braid::{check_strands, BraidWord};
use crate::dehornoy::{DehornoySign, OrderEngine};
use crate::error::{BraidError, Result};

pub trait WordProblemEngine: Send + Sync {
    fn name(&self) -> &'static str;

    fn is_identity(&self, w: &BraidWord) -> Result<bool>;

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        check_strands(a, b)?;
        self.is_identity(&a.inverse().concat(b)?)
    }
}

/// Handle reduction; a word is trivial iff it reduces to the empty word.
pub struct HandleReduction(pub OrderEngine);

impl WordProblemEngine for HandleReduction {
    fn name(&self) -> &'static str {
        "handle"
    }

    fn is_identity(&self, w: &BraidWord) -> Result<bool> {
        Ok(self.0.sign(w)? == DehornoySign::Zero)
    }
}

/// Faithful action on the free group.
pub struct ArtinAction {
    pub cap: usize,
}

impl Default for ArtinAction {
    fn default() -> Self {
        Self {
            cap: DEFAULT_IMAGE_CAP,
        }
    }
}

impl WordProblemEngine for ArtinAction {
    fn name(&self) -> &'static str {
        "artin"
    }

    fn is_identity(&self, w: &BraidWord) -> Result<bool> {
        Ok(artin_action_capped(w, self.cap)?.is_identity())
    }

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        check_strands(a, b)?;
        Ok(artin_action_capped(a, self.cap)? == artin_action_capped(b, self.cap)?)
    }
}

pub fn registry(order: OrderEngine) -> Vec<Box<dyn WordProblemEngine>> {
    vec![
        Box::new(HandleReduction(order)),
        Box::new(ArtinAction::default()),
    ]
}

pub fn lookup(name: &str, order: OrderEngine) -> Result<Box<dyn WordProblemEngine>> {
    registry(order)
        .into_iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| {
            BraidError::BadParams(format!("unknown engine {name:?}; known: handle, artin"))
        })
}

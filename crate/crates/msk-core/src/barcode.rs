//! Bars and barcodes, shared by the sublevel and level-set pipelines.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{cmp_scalar, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndpointType {
    Closed,
    Open,
}

impl EndpointType {
    pub fn as_str(self) -> &'static str {
        match self {
            EndpointType::Closed => "closed",
            EndpointType::Open => "open",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Endpoint<V> {
    pub value: V,
    pub ty: EndpointType,
}

impl<V: Scalar> Endpoint<V> {
    pub fn closed(value: V) -> Self {
        Endpoint { value, ty: EndpointType::Closed }
    }

    pub fn open(value: V) -> Self {
        Endpoint { value, ty: EndpointType::Open }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Death<V> {
    Finite(Endpoint<V>),
    /// Essential class; always of essential type, no endpoint data.
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bar<V> {
    pub dim: u8,
    pub birth: Endpoint<V>,
    pub death: Death<V>,
}

impl<V: Scalar> Bar<V> {
    pub fn finite(dim: u8, birth: Endpoint<V>, death: Endpoint<V>) -> Bar<V> {
        Bar { dim, birth, death: Death::Finite(death) }
    }

    pub fn essential(dim: u8, birth: V) -> Bar<V> {
        Bar { dim, birth: Endpoint::closed(birth), death: Death::Infinite }
    }

    pub fn death_value(&self) -> Option<V> {
        match self.death {
            Death::Finite(e) => Some(e.value),
            Death::Infinite => None,
        }
    }

    /// `true` when `other`'s value span is strictly contained in this bar's.
    /// Endpoint types are ignored; infinite bars contain every finite bar.
    pub fn strictly_contains(&self, other: &Bar<V>) -> bool {
        if self.birth.value >= other.birth.value {
            return false;
        }
        match (self.death_value(), other.death_value()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(d), Some(od)) => od < d,
        }
    }

}

impl<V: Scalar> fmt::Display for Bar<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lb = if self.birth.ty == EndpointType::Closed { '[' } else { '(' };
        match self.death {
            Death::Infinite => write!(f, "H{} {}{}, inf)", self.dim, lb, self.birth.value),
            Death::Finite(d) => {
                let rb = if d.ty == EndpointType::Closed { ']' } else { ')' };
                write!(f, "H{} {}{}, {}{}", self.dim, lb, self.birth.value, d.value, rb)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BarcodeFlavor {
    Sublevel,
    Levelset,
}

impl BarcodeFlavor {
    pub fn as_str(self) -> &'static str {
        match self {
            BarcodeFlavor::Sublevel => "sublevel",
            BarcodeFlavor::Levelset => "levelset",
        }
    }
}

/// How bars are compared. The default is endpoint-type-insensitive: the
/// worm and the shotglass have "the same barcode" even though their short
/// bars carry different endpoint types.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarMatch {
    TypeInsensitive,
    Strict,
}

/// A multiset of bars with a flavor tag.
#[derive(Debug, Clone, PartialEq)]
pub struct Barcode<V> {
    pub flavor: BarcodeFlavor,
    pub bars: Vec<Bar<V>>,
}

impl<V: Scalar> Barcode<V> {
    pub fn new(flavor: BarcodeFlavor, mut bars: Vec<Bar<V>>) -> Barcode<V> {
        sort_bars(&mut bars);
        Barcode { flavor, bars }
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn bars_of_dim(&self, dim: u8) -> impl Iterator<Item = &Bar<V>> {
        self.bars.iter().filter(move |b| b.dim == dim)
    }

    /// Bars in nesting order largest-to-smallest (bars contained in more
    /// others sort later), ties broken by birth value. This is the indexing
    /// used by the counting bound and the enumeration grammar.
    pub fn bars_by_decreasing_length(&self) -> Vec<Bar<V>> {
        let contained_by = |x: &Bar<V>| self.bars.iter().filter(|o| o.strictly_contains(x)).count();
        let mut bars = self.bars.clone();
        bars.sort_by(|a, b| {
            contained_by(a)
                .cmp(&contained_by(b))
                .then(cmp_scalar(&a.birth.value, &b.birth.value))
        });
        bars
    }

    /// Multiset equality under the given matching mode.
    pub fn matches(&self, other: &Barcode<V>, mode: BarMatch) -> bool {
        if self.flavor != other.flavor || self.bars.len() != other.bars.len() {
            return false;
        }
        let key = |b: &Bar<V>| -> (u8, String) {
            let s = match mode {
                BarMatch::Strict => format!("{b}"),
                BarMatch::TypeInsensitive => match b.death_value() {
                    None => format!("{} inf", b.birth.value),
                    Some(d) => format!("{} {}", b.birth.value, d),
                },
            };
            (b.dim, s)
        };
        let mut a: Vec<_> = self.bars.iter().map(key).collect();
        let mut b: Vec<_> = other.bars.iter().map(key).collect();
        a.sort();
        b.sort();
        a == b
    }

    /// All finite endpoint values plus births of infinite bars.
    pub fn endpoint_values(&self) -> Vec<V> {
        let mut out = Vec::new();
        for bar in &self.bars {
            out.push(bar.birth.value);
            if let Some(d) = bar.death_value() {
                out.push(d);
            }
        }
        out
    }

    /// Rejects non-excellent barcodes: every bar needs birth < death and all
    /// endpoint values must be pairwise distinct and comparable.
    pub fn check_excellent(&self) -> Result<()> {
        for bar in &self.bars {
            if let Some(d) = bar.death_value() {
                if !(bar.birth.value < d) {
                    return Err(Error::rejected(format!("bar {bar} has birth >= death")));
                }
            }
        }
        if !crate::scalar::all_distinct(&self.endpoint_values()) {
            return Err(Error::rejected(
                "barcode endpoint values must be pairwise distinct".to_string(),
            ));
        }
        Ok(())
    }
}

pub(crate) fn sort_bars<V: Scalar>(bars: &mut [Bar<V>]) {
    bars.sort_by(|a, b| {
        a.dim
            .cmp(&b.dim)
            .then(cmp_scalar(&a.birth.value, &b.birth.value))
            .then_with(|| match (a.death_value(), b.death_value()) {
                (None, None) => std::cmp::Ordering::Equal,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (Some(_), None) => std::cmp::Ordering::Less,
                (Some(x), Some(y)) => cmp_scalar(&x, &y),
            })
    });
}

//! Time frames `(T, R)`: a finite time set with an arbitrary relation.

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_CARRIER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeFrame {
    labels: Vec<String>,
    /// `succ[s]` = `{t | s R t}`
    succ: Vec<Subset>,
    /// `pred[t]` = `{s | s R t}`
    pred: Vec<Subset>,
    serial: bool,
    reflexive: bool,
}

/// Builds a frame from labels and label pairs `(s, t)` meaning `s R t`.
pub fn build_frame<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<TimeFrame> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let lookup = |s: &str| {
        labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    };
    let idx = pairs
        .iter()
        .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
        .collect::<Result<Vec<_>>>()?;
    TimeFrame::from_pairs(labels, &idx)
}

impl TimeFrame {
    pub fn from_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<TimeFrame> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::Relation("a time set needs at least one point".into()));
        }
        if m > MAX_CARRIER {
            return Err(Error::Size {
                what: "time set",
                size: m,
                cap: MAX_CARRIER,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut succ = vec![Subset::EMPTY; m];
        for &(s, t) in pairs {
            if s >= m || t >= m {
                return Err(Error::Mismatch(format!("time index out of range for {m} points")));
            }
            succ[s].insert(t);
        }
        Ok(TimeFrame::from_succ(labels, succ))
    }

    fn from_succ(labels: Vec<String>, succ: Vec<Subset>) -> TimeFrame {
        let m = labels.len();
        let mut pred = vec![Subset::EMPTY; m];
        for (s, row) in succ.iter().enumerate() {
            for t in row.iter() {
                pred[t].insert(s);
            }
        }
        let serial = (0..m).all(|s| !succ[s].is_empty() && !pred[s].is_empty());
        let reflexive = (0..m).all(|s| succ[s].contains(s));
        TimeFrame {
            labels,
            succ,
            pred,
            serial,
            reflexive,
        }
    }

    /// Points `1..=n` with `R` the usual non-strict order.
    pub fn chain(n: usize) -> TimeFrame {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let pairs: Vec<_> = (0..n).flat_map(|s| (s..n).map(move |t| (s, t))).collect();
        TimeFrame::from_pairs(labels, &pairs).expect("chain frame")
    }

    /// Points `1..=n` with `R` the diagonal.
    pub fn identity(n: usize) -> TimeFrame {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let pairs: Vec<_> = (0..n).map(|s| (s, s)).collect();
        TimeFrame::from_pairs(labels, &pairs).expect("identity frame")
    }

    /// The frame with the transposed relation.
    pub fn invert(&self) -> TimeFrame {
        TimeFrame {
            labels: self.labels.clone(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
            serial: self.serial,
            reflexive: self.reflexive,
        }
    }

    /// Same points, different relation rows.
    pub fn with_successors(&self, succ: Vec<Subset>) -> Result<TimeFrame> {
        if succ.len() != self.len() || succ.iter().any(|r| !r.is_subset(Subset::full(self.len()))) {
            return Err(Error::Mismatch("relation rows do not fit the time set".into()));
        }
        Ok(TimeFrame::from_succ(self.labels.clone(), succ))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, t: usize) -> &str {
        &self.labels[t]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `s R t`
    pub fn related(&self, s: usize, t: usize) -> bool {
        self.succ[s].contains(t)
    }

    /// `{t | s R t}`
    pub fn successors(&self, s: usize) -> Subset {
        self.succ[s]
    }

    /// `{t | t R s}`
    pub fn predecessors(&self, s: usize) -> Subset {
        self.pred[s]
    }

    pub fn successor_rows(&self) -> &[Subset] {
        &self.succ
    }

    pub fn is_serial(&self) -> bool {
        self.serial
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive
    }

    /// All pairs `(s, t)` with `s R t`, in row order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|s| self.succ[s].iter().map(move |t| (s, t)))
            .collect()
    }

    /// [`Error::NonSerial`] naming the first point without a predecessor or successor.
    pub fn check_serial(&self) -> Result<()> {
        match (0..self.len()).find(|&s| self.succ[s].is_empty() || self.pred[s].is_empty()) {
            None => Ok(()),
            Some(s) => Err(Error::NonSerial(self.labels[s].clone())),
        }
    }

    pub fn is_subrelation_of(&self, other: &TimeFrame) -> bool {
        self.len() == other.len()
            && self.succ.iter().zip(&other.succ).all(|(a, b)| a.is_subset(*b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_reflexive_and_serial() {
        let f = build_frame(
            &["1", "2", "3"],
            &[("1", "1"), ("2", "2"), ("3", "3"), ("1", "2"), ("2", "3"), ("1", "3")],
        )
        .unwrap();
        assert!(f.is_reflexive());
        assert!(f.is_serial());
        assert_eq!(f, TimeFrame::chain(3));
    }

    #[test]
    fn empty_relation_is_not_serial() {
        let f = build_frame::<&str>(&["t"], &[]).unwrap();
        assert!(!f.is_serial());
        assert_eq!(f.check_serial(), Err(Error::NonSerial("t".into())));
    }

    #[test]
    fn two_cycle() {
        let f = build_frame(&["s", "t"], &[("s", "t"), ("t", "s")]).unwrap();
        assert!(f.is_serial());
        assert!(!f.is_reflexive());
    }

    #[test]
    fn unknown_label() {
        assert!(matches!(
            build_frame(&["s"], &[("s", "u")]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn inversion() {
        let f = TimeFrame::chain(3);
        let g = f.invert();
        assert!(g.related(2, 0));
        assert!(!g.related(0, 2));
        assert_eq!(g.invert(), f);
        let cyc = build_frame(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert!(cyc.is_serial());
        assert!(cyc.invert().is_serial());
        assert_eq!(cyc.invert().pairs(), vec![(0, 2), (1, 0), (2, 1)]);
    }
}

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{ArithError, Field, Scalar};

/// A point of projective space in canonical form: the first nonzero coordinate is one.
///
/// Points are ordered by the position of the leading one, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<ProjectivePoint> {
        let field = match coords.first() {
            Some(c) => c.field(),
            None => return Err(Error::ZeroPoint),
        };
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(ArithError::FieldMismatch { left: field, right: bad.field() }.into());
        }
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let inv = lead.inv()?;
        let coords = coords.iter().map(|c| c * &inv).collect();
        Ok(ProjectivePoint { coords })
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Result<ProjectivePoint> {
        ProjectivePoint::new(coords.iter().map(|&c| Scalar::from_i64(field, c)).collect())
    }

    /// Parses a comma-separated list of field elements (`a` or `a/b`).
    pub fn parse(field: Field, text: &str, expected_len: usize) -> Result<ProjectivePoint> {
        let coords = text
            .split(',')
            .map(|s| Scalar::parse(field, s))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coords.len() != expected_len {
            return Err(Error::PointLength { expected: expected_len, got: coords.len() });
        }
        ProjectivePoint::new(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    /// Rescaled copy of the coordinates (not canonical).
    pub fn scaled(&self, lambda: &Scalar) -> Vec<Scalar> {
        self.coords.iter().map(|c| c * lambda).collect()
    }

    /// Image in `𝔽_p`, canonicalized again.
    pub fn reduce_mod(&self, p: u32) -> Result<ProjectivePoint> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.reduce_mod(p))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        ProjectivePoint::new(coords)
    }
}

impl ProjectivePoint {
    fn lead(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).unwrap_or(self.coords.len())
    }
}

impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lead().cmp(&other.lead()).then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(|c| c.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let p = ProjectivePoint::from_i64(Field::Rational, &[0, 2, -4, 6]).unwrap();
        assert_eq!(p.to_string(), "[0:1:-2:3]");
        let q = ProjectivePoint::from_i64(Field::Rational, &[0, -1, 2, -3]).unwrap();
        assert_eq!(p, q);
        let r = ProjectivePoint::from_i64(Field::Prime(5), &[3, 1]).unwrap();
        assert_eq!(r.to_string(), "[1:2]");
    }

    #[test]
    fn rejects_bad_points() {
        assert_eq!(ProjectivePoint::from_i64(Field::Rational, &[0, 0]), Err(Error::ZeroPoint));
        assert!(matches!(
            ProjectivePoint::parse(Field::Rational, "1,2", 3),
            Err(Error::PointLength { expected: 3, got: 2 })
        ));
        assert!(ProjectivePoint::parse(Field::Rational, "1,a,0", 3).is_err());
        let p = ProjectivePoint::parse(Field::Rational, "3, 1/2, 0", 3).unwrap();
        assert_eq!(p.to_string(), "[1:1/6:0]");
    }

    proptest! {
        #[test]
        fn canonicalization_is_idempotent(c in proptest::collection::vec(-6i64..7, 4), l in 1i64..9) {
            prop_assume!(c.iter().any(|&v| v != 0));
            let p = ProjectivePoint::from_i64(Field::Rational, &c).unwrap();
            let again = ProjectivePoint::new(p.coords().to_vec()).unwrap();
            prop_assert_eq!(&p, &again);
            let scaled: Vec<i64> = c.iter().map(|v| v * -l).collect();
            prop_assert_eq!(p, ProjectivePoint::from_i64(Field::Rational, &scaled).unwrap());
        }
    }
}

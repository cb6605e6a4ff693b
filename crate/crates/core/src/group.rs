//! Group modes and the Kottwitz point `X_*(A) / (coroot lattice)`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::affine::{AffineElement, Cocharacter};
use crate::coxeter::{CoxeterSystem, CoxeterType, FiniteElement};
use crate::error::{Error, Result};

/// Which reductive group the affine Weyl group belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupMode {
    /// `GL_n`; the argument is `n`.
    GL(usize),
    /// `SL_n`; translations must have coordinate sum 0.
    SL(usize),
    /// Adjoint `C_2`, cocharacters in the coweight basis.
    C2,
    /// `G_2`, cocharacters in the coweight basis.
    G2,
}

impl GroupMode {
    pub fn coxeter_type(self) -> CoxeterType {
        match self {
            GroupMode::GL(n) | GroupMode::SL(n) => CoxeterType::A(n.saturating_sub(1)),
            GroupMode::C2 => CoxeterType::C2,
            GroupMode::G2 => CoxeterType::G2,
        }
    }
}

impl fmt::Display for GroupMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupMode::GL(n) => write!(f, "GL{n}"),
            GroupMode::SL(n) => write!(f, "SL{n}"),
            GroupMode::C2 => f.write_str("C2"),
            GroupMode::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for GroupMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        let rank = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::UnsupportedGroup(s.to_string()))
        };
        match up.as_str() {
            "C2" => Ok(GroupMode::C2),
            "G2" => Ok(GroupMode::G2),
            _ if up.starts_with("GL") => Ok(GroupMode::GL(rank(&up[2..])?)),
            _ if up.starts_with("SL") => Ok(GroupMode::SL(rank(&up[2..])?)),
            _ => Err(Error::UnsupportedGroup(s.to_string())),
        }
    }
}

/// The image of an element in `Lambda_G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KottwitzPoint {
    /// `GL_n`: the coordinate sum.
    Integer(i64),
    /// `SL_n` and `G_2`: the trivial group.
    Trivial,
    /// `Z / order`, for the adjoint `C_2`.
    Cyclic { residue: i64, order: i64 },
}

impl KottwitzPoint {
    /// Integer representative used in JSON and on the command line.
    pub fn to_integer(self) -> i64 {
        match self {
            KottwitzPoint::Integer(n) => n,
            KottwitzPoint::Trivial => 0,
            KottwitzPoint::Cyclic { residue, .. } => residue,
        }
    }
}

/// Panics when adding points from different groups.
impl Add for KottwitzPoint {
    type Output = KottwitzPoint;

    fn add(self, rhs: KottwitzPoint) -> KottwitzPoint {
        use KottwitzPoint::*;
        match (self, rhs) {
            (Integer(a), Integer(b)) => Integer(a + b),
            (Trivial, Trivial) => Trivial,
            (Cyclic { residue: a, order }, Cyclic { residue: b, order: o }) if order == o => Cyclic {
                residue: (a + b).rem_euclid(order),
                order,
            },
            (a, b) => panic!("Kottwitz points from different groups: {a} and {b}"),
        }
    }
}

impl fmt::Display for KottwitzPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KottwitzPoint::Integer(n) => write!(f, "{n}"),
            KottwitzPoint::Trivial => f.write_str("0"),
            KottwitzPoint::Cyclic { residue, order } => write!(f, "{residue} mod {order}"),
        }
    }
}

/// A group mode with its Weyl group.
#[derive(Debug, Clone)]
pub struct Group {
    mode: GroupMode,
    weyl: CoxeterSystem,
}

impl Group {
    pub fn new(mode: GroupMode) -> Result<Self> {
        if let GroupMode::GL(n) | GroupMode::SL(n) = mode {
            if n < 2 {
                return Err(Error::UnsupportedGroup(mode.to_string()));
            }
        }
        Ok(Group {
            mode,
            weyl: CoxeterSystem::new(mode.coxeter_type())?,
        })
    }

    pub fn gl(n: usize) -> Result<Self> {
        Self::new(GroupMode::GL(n))
    }

    pub fn sl(n: usize) -> Result<Self> {
        Self::new(GroupMode::SL(n))
    }

    pub fn c2() -> Self {
        Self::new(GroupMode::C2).expect("C2 is supported")
    }

    pub fn g2() -> Self {
        Self::new(GroupMode::G2).expect("G2 is supported")
    }

    pub fn mode(&self) -> GroupMode {
        self.mode
    }

    pub fn weyl(&self) -> &CoxeterSystem {
        &self.weyl
    }

    pub fn name(&self) -> String {
        self.mode.to_string()
    }

    pub fn kottwitz_of(&self, lambda: &[i64]) -> KottwitzPoint {
        match self.mode {
            GroupMode::GL(_) => KottwitzPoint::Integer(lambda.iter().sum()),
            GroupMode::SL(_) | GroupMode::G2 => KottwitzPoint::Trivial,
            // the coroot lattice is {lambda : lambda_2 even}
            GroupMode::C2 => KottwitzPoint::Cyclic {
                residue: lambda[1].rem_euclid(2),
                order: 2,
            },
        }
    }

    /// `eta_G(x)`; the finite part contributes nothing.
    pub fn kottwitz_point(&self, x: &AffineElement) -> KottwitzPoint {
        self.kottwitz_of(x.translation())
    }

    /// The point with integer representative `k`.
    pub fn kappa_from_integer(&self, k: i64) -> Result<KottwitzPoint> {
        match self.mode {
            GroupMode::GL(_) => Ok(KottwitzPoint::Integer(k)),
            GroupMode::C2 => Ok(KottwitzPoint::Cyclic {
                residue: k.rem_euclid(2),
                order: 2,
            }),
            _ if k == 0 => Ok(KottwitzPoint::Trivial),
            _ => Err(Error::Parse(format!(
                "{} has trivial Kottwitz group; kappa must be 0, got {k}",
                self.mode
            ))),
        }
    }

    pub fn check_cocharacter(&self, lambda: &[i64]) -> Result<()> {
        self.weyl.check_dim(lambda)?;
        if let GroupMode::SL(_) = self.mode {
            let sum: i64 = lambda.iter().sum();
            if sum != 0 {
                return Err(Error::NonZeroSum(sum));
            }
        }
        Ok(())
    }

    pub fn check_element(&self, x: &AffineElement) -> Result<()> {
        let ty = x.finite().coxeter_type();
        if ty != self.weyl.coxeter_type() {
            return Err(Error::MismatchedSystems {
                left: self.weyl.coxeter_type(),
                right: ty,
            });
        }
        self.check_cocharacter(x.translation())
    }

    /// `pi^lambda w`, validated against this group.
    pub fn element(&self, lambda: Vec<i64>, w: FiniteElement) -> Result<AffineElement> {
        let x = AffineElement::new(Cocharacter::new(lambda), w);
        self.check_element(&x)?;
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn kottwitz_examples() {
        let sl5 = Group::sl(5).unwrap();
        let e5 = sl5.weyl().identity();
        let x = sl5.element(vec![2, 1, 0, -1, -2], e5.clone()).unwrap();
        assert_eq!(sl5.kottwitz_point(&x), KottwitzPoint::Trivial);
        assert_eq!(sl5.kottwitz_point(&x).to_integer(), 0);

        let gl2 = Group::gl(2).unwrap();
        let x = gl2.element(vec![3, 1], gl2.weyl().identity()).unwrap();
        assert_eq!(gl2.kottwitz_point(&x), KottwitzPoint::Integer(4));
        let x = gl2.element(vec![0, 0], gl2.weyl().identity()).unwrap();
        assert_eq!(gl2.kottwitz_point(&x), KottwitzPoint::Integer(0));

        let c2 = Group::c2();
        assert_eq!(c2.kottwitz_of(&[1, 3]).to_integer(), 1);
        assert_eq!(c2.kottwitz_of(&[5, -2]).to_integer(), 0);
        assert_eq!(Group::g2().kottwitz_of(&[1, 1]), KottwitzPoint::Trivial);
    }

    #[test]
    fn coroots_have_trivial_kottwitz_point() {
        for g in [
            Group::c2(),
            Group::g2(),
            Group::sl(4).unwrap(),
            Group::gl(4).unwrap(),
        ] {
            for c in g.weyl().simple_coroots() {
                assert_eq!(g.kottwitz_of(c), g.kottwitz_of(&vec![0; c.len()]), "{}", g.name());
            }
        }
        // the C2 Kottwitz group is not trivial
        assert_ne!(Group::c2().kottwitz_of(&[0, 1]), Group::c2().kottwitz_of(&[0, 0]));
    }

    #[test]
    fn sl_rejects_nonzero_sum() {
        let sl3 = Group::sl(3).unwrap();
        let err = sl3.element(vec![1, 0, 0], sl3.weyl().identity()).unwrap_err();
        assert_eq!(err, Error::NonZeroSum(1));
        let err = sl3.element(vec![1, 0], sl3.weyl().identity()).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        assert!(sl3.kappa_from_integer(2).is_err());
        assert_eq!(Group::c2().kappa_from_integer(3).unwrap().to_integer(), 1);
    }

    #[test]
    fn parse_modes() {
        assert_eq!("GL5".parse::<GroupMode>().unwrap(), GroupMode::GL(5));
        assert_eq!("sl3".parse::<GroupMode>().unwrap(), GroupMode::SL(3));
        assert_eq!("G2".parse::<GroupMode>().unwrap(), GroupMode::G2);
        assert!("B3".parse::<GroupMode>().is_err());
        assert!(Group::new(GroupMode::GL(1)).is_err());
        assert_eq!(GroupMode::SL(5).to_string(), "SL5");
    }

    proptest! {
        #[test]
        fn kottwitz_is_additive(
            a in proptest::collection::vec(-4i64..=4, 4),
            b in proptest::collection::vec(-4i64..=4, 4),
            i in 0usize..24,
            j in 0usize..24,
        ) {
            let g = Group::gl(4).unwrap();
            let sys = g.weyl();
            let els = sys.elements();
            let x = AffineElement::new(Cocharacter::new(a), els[i].clone());
            let y = AffineElement::new(Cocharacter::new(b), els[j].clone());
            let xy = sys.affine_mul(&x, &y);
            prop_assert_eq!(g.kottwitz_point(&xy), g.kottwitz_point(&x) + g.kottwitz_point(&y));
        }

        #[test]
        fn kottwitz_is_additive_rank2(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, d in -4i64..=4, i in 0usize..12, j in 0usize..12) {
            for g in [Group::c2(), Group::g2()] {
                let sys = g.weyl();
                let els = sys.elements();
                let x = AffineElement::new(Cocharacter::new(vec![a, b]), els[i % els.len()].clone());
                let y = AffineElement::new(Cocharacter::new(vec![c, d]), els[j % els.len()].clone());
                let xy = sys.affine_mul(&x, &y);
                prop_assert_eq!(g.kottwitz_point(&xy), g.kottwitz_point(&x) + g.kottwitz_point(&y));
            }
        }
    }
}

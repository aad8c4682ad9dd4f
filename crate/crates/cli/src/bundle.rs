use fqhg::constructions::Example;
use fqhg::duality::Fqh;
use fqhg::integrals::{solve_antipode, Hand};
use fqhg::{Algebra, DualPair, Error, Functional, Matrix, Result, Side, SCHEMA};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqhData {
    pub algebra: Algebra,
    pub coproduct: Matrix,
    pub counit: Functional,
    pub integral: Functional,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Matrix>,
}

/// The on-disk document: one side as an FQH candidate, plus optionally the
/// pair it belongs to and an integral for the other side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub schema: String,
    pub source: Value,
    pub fqh: FqhData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<DualPair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral_b: Option<Functional>,
}

/// One side of a bundle, ready for verification.
pub struct SideData {
    pub algebra: Algebra,
    pub coproduct: Matrix,
    pub counit: Functional,
    pub integral: Functional,
    /// The pair with this side first.
    pub pair: Option<DualPair>,
}

impl Bundle {
    pub fn from_example(source: Value, ex: &Example) -> Result<Bundle> {
        let a = ex.algebra(Side::A).clone();
        let coproduct = ex.coproduct(Side::A)?;
        let antipode = match &ex.antipode_a {
            Some(s) => Some(s.clone()),
            None => solve_antipode(&a, &coproduct, &ex.integral_a, Hand::Left)?.s,
        };
        Ok(Bundle {
            schema: SCHEMA.into(),
            source,
            fqh: FqhData { algebra: a, coproduct, counit: ex.counit(Side::A), integral: ex.integral_a.clone(), antipode },
            pair: Some(ex.pair.clone()),
            integral_b: ex.integral_b.clone(),
        })
    }

    pub fn from_fqh(source: Value, f: &Fqh, pair: Option<DualPair>, integral_b: Option<Functional>) -> Bundle {
        Bundle {
            schema: SCHEMA.into(),
            source,
            fqh: FqhData {
                algebra: f.algebra.clone(),
                coproduct: f.coproduct.clone(),
                counit: f.counit.clone(),
                integral: f.integral.clone(),
                antipode: Some(f.antipode.clone()),
            },
            pair,
            integral_b,
        }
    }

    pub fn parse(text: &str) -> Result<Bundle> {
        let b: Bundle = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if b.schema != SCHEMA {
            return Err(Error::Parse(format!("schema {:?}, expected {SCHEMA:?}", b.schema)));
        }
        let d = b.fqh.algebra.dim();
        let f = &b.fqh;
        if f.coproduct.rows() != d * d || f.coproduct.cols() != d {
            return Err(Error::DimensionMismatch(format!("coproduct must be {}×{d}", d * d)));
        }
        if f.counit.len() != d || f.integral.len() != d {
            return Err(Error::DimensionMismatch(format!("counit and integral need length {d}")));
        }
        if f.antipode.as_ref().is_some_and(|s| s.rows() != d || s.cols() != d) {
            return Err(Error::DimensionMismatch(format!("antipode must be {d}×{d}")));
        }
        if let Some(p) = &b.pair {
            if p.a() != &f.algebra {
                return Err(Error::Parse("pair.algebra_a differs from fqh.algebra".into()));
            }
        }
        if b.integral_b.as_ref().is_some_and(|w| w.len() != d) {
            return Err(Error::DimensionMismatch(format!("integral_b needs length {d}")));
        }
        Ok(b)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn side(&self, side: Side) -> Result<SideData> {
        match side {
            Side::A => Ok(SideData {
                algebra: self.fqh.algebra.clone(),
                coproduct: self.fqh.coproduct.clone(),
                counit: self.fqh.counit.clone(),
                integral: self.fqh.integral.clone(),
                pair: self.pair.clone(),
            }),
            Side::B => {
                let pair = self.pair.as_ref().ok_or_else(|| Error::Precondition("bundle has no pair".into()))?;
                let integral = self
                    .integral_b
                    .clone()
                    .ok_or_else(|| Error::Precondition("bundle has no integral for B".into()))?;
                Ok(SideData {
                    algebra: pair.b().clone(),
                    coproduct: pair.induced_coproduct(Side::B)?,
                    counit: pair.induced_counit(Side::B),
                    integral,
                    pair: Some(pair.flipped()),
                })
            }
        }
    }
}

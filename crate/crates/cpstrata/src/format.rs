//! JSON and CSV representations of core types.
//!
//! Rationals are always written as `"p/q"` strings (or plain integers as
//! strings when the denominator is one).

use std::collections::BTreeMap;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use cpstrata_core::dga::{CohomologyReport, DgaSpec};
use cpstrata_core::gradedalg::{GPolynomial, Generator, GeneratorTable, PresentedAlgebra};
use cpstrata_core::lattice::H2Element;
use cpstrata_core::rational::{self, Rational};
use serde::{Deserialize, Serialize};

pub fn rational_str(r: &Rational) -> String {
    rational::to_string(r)
}

pub fn rational_list(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational_str).collect()
}

/// A homology class `aL − Σ rᵢEᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct H2Json {
    pub a: i64,
    pub r: Vec<i64>,
}

impl From<&H2Element> for H2Json {
    fn from(u: &H2Element) -> Self {
        Self { a: u.degree(), r: u.multiplicities().to_vec() }
    }
}

impl TryFrom<&H2Json> for H2Element {
    type Error = anyhow::Error;
    fn try_from(j: &H2Json) -> Result<Self> {
        Ok(H2Element::new(j.a, j.r.clone())?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: u32,
    #[serde(default)]
    pub nilpotence: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub generators: Vec<GeneratorJson>,
    #[serde(default)]
    pub relations: Vec<String>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &PresentedAlgebra) -> Self {
        let generators = a
            .table()
            .generators()
            .iter()
            .map(|g| GeneratorJson { name: g.name.clone(), degree: g.degree, nilpotence: g.nilpotence })
            .collect();
        Self { generators, relations: a.relations().iter().map(|r| r.to_string()).collect() }
    }

    pub fn table(&self) -> Result<Arc<GeneratorTable>> {
        let gens = self
            .generators
            .iter()
            .map(|g| match g.nilpotence {
                Some(k) => Generator::nilpotent(&g.name, g.degree, k),
                None => Generator::new(&g.name, g.degree),
            })
            .collect();
        Ok(GeneratorTable::new(gens)?)
    }

    pub fn to_algebra(&self) -> Result<PresentedAlgebra> {
        let table = self.table()?;
        let rels: Vec<&str> = self.relations.iter().map(String::as_str).collect();
        PresentedAlgebra::parse(table, &rels).context("invalid relation")
    }
}

/// A DGA: the algebra, `d` on generators (omitted generators map to zero),
/// and the degree cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DgaJson {
    pub algebra: AlgebraJson,
    pub differential: BTreeMap<String, String>,
    pub degree_cap: u32,
}

impl DgaJson {
    pub fn from_spec(spec: &DgaSpec) -> Self {
        let differential = spec
            .algebra()
            .table()
            .generators()
            .iter()
            .zip(spec.differential_of_generators())
            .filter(|(_, d)| !d.is_zero())
            .map(|(g, d)| (g.name.clone(), d.to_string()))
            .collect();
        Self {
            algebra: AlgebraJson::from_algebra(spec.algebra()),
            differential,
            degree_cap: spec.degree_cap(),
        }
    }

    pub fn to_spec(&self) -> Result<DgaSpec> {
        let algebra = self.algebra.to_algebra()?;
        let table = algebra.table().clone();
        for name in self.differential.keys() {
            table.index_of(name).map_err(|_| anyhow!("differential of unknown generator `{name}`"))?;
        }
        let diff = table
            .generators()
            .iter()
            .map(|g| match self.differential.get(&g.name) {
                Some(s) => GPolynomial::parse(&table, s).with_context(|| format!("d({})", g.name)),
                None => Ok(GPolynomial::zero(&table)),
            })
            .collect::<Result<Vec<_>>>()?;
        if self.degree_cap < 2 {
            bail!("degree_cap must be at least 2");
        }
        Ok(DgaSpec::new(algebra, diff, self.degree_cap)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyJson {
    pub degree_cap: u32,
    pub ranks: Vec<usize>,
    pub euler_characteristic: i64,
    pub representatives: Vec<Vec<String>>,
    pub d_squared_ok: bool,
    pub ideal_stable_ok: bool,
    pub top_degrees_vanish: bool,
}

impl From<&CohomologyReport> for CohomologyJson {
    fn from(r: &CohomologyReport) -> Self {
        Self {
            degree_cap: r.degree_cap,
            ranks: r.ranks.clone(),
            euler_characteristic: r.euler_characteristic(),
            representatives: r
                .representatives
                .iter()
                .map(|v| v.iter().map(|p| p.to_string()).collect())
                .collect(),
            d_squared_ok: r.d_squared_ok,
            ideal_stable_ok: r.ideal_stable_ok,
            top_degrees_vanish: r.top_degrees_vanish,
        }
    }
}

/// CSV text from a header and rows.
pub fn csv_table<I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?)
}

pub fn ranks_csv(ranks: &[usize]) -> Result<String> {
    csv_table(&["degree", "rank"], ranks.iter().enumerate().map(|(q, r)| [q.to_string(), r.to_string()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cpstrata_core::kriz::{kriz_model, KrizParams};

    #[test]
    fn dga_round_trip() {
        let spec = kriz_model(KrizParams::new(2, 3).unwrap(), 9);
        let json = DgaJson::from_spec(&spec);
        let text = serde_json::to_string(&json).unwrap();
        let back: DgaJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
        let rebuilt = back.to_spec().unwrap();
        assert_eq!(DgaJson::from_spec(&rebuilt), json);
    }

    #[test]
    fn h2_shape() {
        let u = H2Element::line_through(3, &[1, 2, 3]);
        assert_eq!(serde_json::to_string(&H2Json::from(&u)).unwrap(), r#"{"a":1,"r":[1,1,1]}"#);
    }

    #[test]
    fn rank_csv() {
        assert_eq!(ranks_csv(&[1, 0, 2]).unwrap(), "degree,rank\n0,1\n1,0\n2,2\n");
    }
}

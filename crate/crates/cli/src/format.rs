//! The arrangement file: a JSON document `{"mu": .., "disks": [{"x": .., "y": .., "r": ..}]}`.

use muarr_core::{Disk, MuArrangement, Point};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskRecord {
    pub x: f64,
    pub y: f64,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub mu: f64,
    pub disks: Vec<DiskRecord>,
}

impl ArrangementFile {
    /// Parses a document, naming the offending field and its position on failure.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut de = serde_json::Deserializer::from_str(text);
        let file: ArrangementFile = serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let path = e.path().to_string();
            if path == "." {
                CliError::Parse(e.into_inner().to_string())
            } else {
                CliError::Parse(format!("field `{path}`: {}", e.into_inner()))
            }
        })?;
        de.end().map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(file)
    }

    pub fn from_disks(mu: f64, disks: &[Disk]) -> Self {
        ArrangementFile {
            mu,
            disks: disks.iter().map(|d| DiskRecord { x: d.center.x, y: d.center.y, r: d.radius }).collect(),
        }
    }

    pub fn disks(&self) -> Result<Vec<Disk>, CliError> {
        self.disks
            .iter()
            .enumerate()
            .map(|(k, d)| {
                Disk::new(Point::new(d.x, d.y), d.r).map_err(|source| CliError::Field { field: format!("disks[{k}]"), source })
            })
            .collect()
    }

    /// The family as an arrangement; the pairwise condition is not checked here.
    pub fn arrangement(&self) -> Result<MuArrangement, CliError> {
        let disks = self.disks()?;
        if !(self.mu > 0.0 && self.mu < 1.0) {
            return Err(CliError::Field { field: "mu".into(), source: muarr_core::Error::MuOutOfRange(self.mu) });
        }
        Ok(MuArrangement::new(self.mu, disks)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_doubles_exactly() {
        let disks = [Disk::new(Point::new(0.1 + 0.2, -1e-300), 1.0 / 3.0).unwrap()];
        let file = ArrangementFile::from_disks(3f64.sqrt() - 1.0, &disks);
        let back = ArrangementFile::parse(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.disks().unwrap(), disks);
    }

    #[test]
    fn names_the_bad_field() {
        let text = "{\n  \"mu\": 0.5,\n  \"disks\": [\n    {\"x\": 0, \"y\": 0, \"r\": 1},\n    {\"x\": 1, \"y\": 0, \"r\": \"one\"}\n  ]\n}";
        let msg = ArrangementFile::parse(text).unwrap_err().to_string();
        assert!(msg.contains("disks[1].r"), "{msg}");
        assert!(msg.contains("line 5"), "{msg}");
        let msg = ArrangementFile::parse("{\"mu\": 0.5, \"disks\": [], \"extra\": 1}").unwrap_err().to_string();
        assert!(msg.contains("extra"), "{msg}");
    }

    #[test]
    fn rejects_bad_values_with_location() {
        let file = ArrangementFile::parse("{\"mu\": 0.5, \"disks\": [{\"x\": 0, \"y\": 0, \"r\": -1}]}").unwrap();
        assert!(file.arrangement().unwrap_err().to_string().starts_with("disks[0]"));
        let file = ArrangementFile::parse("{\"mu\": 1.2, \"disks\": [{\"x\": 0, \"y\": 0, \"r\": 1}]}").unwrap();
        assert!(file.arrangement().unwrap_err().to_string().starts_with("mu"));
    }
}

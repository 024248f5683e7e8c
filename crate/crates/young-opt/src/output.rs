//! Machine-readable result record shared by the CLI's json output paths.

use serde::{Deserialize, Serialize};

use crate::solver::SolveResult;

/// One solve answer as emitted in json mode. Field declaration order is the
/// serialized key order and is part of the output contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u32,
    pub k: u32,
    pub partition: Vec<u32>,
    pub conjugate: Vec<u32>,
    pub value: i64,
    /// Which engine produced the answer: `"dp"` or `"oracle"`.
    pub solver: String,
}

impl OutputRecord {
    pub fn new(n: u32, result: &SolveResult, solver: &str) -> Self {
        OutputRecord {
            n,
            k: result.k,
            partition: result.partition.parts().to_vec(),
            conjugate: result.conjugate.parts().to_vec(),
            value: result.value,
            solver: solver.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functable::FuncTable;
    use crate::solver::solve;

    #[test]
    fn serializes_with_fixed_key_order() {
        let f = FuncTable::new(vec![1, 4, 9, 16, 25, 36]).unwrap();
        let r = solve(6, &f, &f).unwrap();
        let record = OutputRecord::new(6, &r, "dp");
        let json = serde_json::to_string(&record).unwrap();
        assert_eq!(
            json,
            r#"{"n":6,"k":3,"partition":[3,2,1],"conjugate":[3,2,1],"value":28,"solver":"dp"}"#
        );
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, record);
    }
}

use std::path::Path;

use siglat::PrimePartition;

use crate::corpus::GroupSpec;
use crate::error::CliError;

/// Reads a group file: `{"name": ..., "degree": ..., "generators": [...]}`
/// with generators in 1-based cycle notation.
pub fn parse_group_file(path: &Path) -> Result<GroupSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_group_text(&text)
}

pub fn parse_group_text(text: &str) -> Result<GroupSpec, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse_partition(text: &str) -> Result<PrimePartition, CliError> {
    text.parse::<PrimePartition>().map_err(|e| match e {
        siglat::Error::Parse { line, column, message } => CliError::Parse { line, column, message },
        other => CliError::Usage(other.to_string()),
    })
}

/// Splits a comma-separated partition list. A comma only starts a new
/// entry when it sits outside brackets and is followed by a letter, so
/// `sigma0,pi:2,pi:2,3` is three entries.
pub fn parse_partition_list(text: &str) -> Result<Vec<PrimePartition>, CliError> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let bytes = text.as_bytes();
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            b'[' => depth += 1,
            b']' => depth = depth.saturating_sub(1),
            b',' if depth == 0 && bytes.get(i + 1).is_some_and(|n| n.is_ascii_alphabetic()) => {
                pieces.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in pieces {
        match parse_partition(piece) {
            Ok(p) => out.push(p),
            Err(CliError::Parse { line, column, message }) => {
                return Err(CliError::Parse {
                    line,
                    column: column + offset,
                    message,
                })
            }
            Err(e) => return Err(e),
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

pub const DEFAULT_PARTITIONS: &str = "sigma0,pi:2,pi:2,3,blocks:[2,5][3];rest=singletons";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_file_example() {
        let spec = parse_group_text(r#"{"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]}"#).unwrap();
        assert_eq!(spec, GroupSpec::new("S3", 3, &["(1 2)", "(1 2 3)"]));
    }

    #[test]
    fn group_file_errors_carry_positions() {
        match parse_group_text("{\n  \"name\": \"S3\",\n  \"degree\": x\n}") {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (3, 13)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn list_splitting() {
        let names: Vec<String> = parse_partition_list("sigma0,pi:2,pi:2,3")
            .unwrap()
            .iter()
            .map(|p| p.name().to_string())
            .collect();
        assert_eq!(names, ["sigma0", "pi:2", "pi:2,3"]);
        let all = parse_partition_list(DEFAULT_PARTITIONS).unwrap();
        assert_eq!(all.len(), 4);
        assert_eq!(all[3].name(), "blocks:[2,5][3];rest=singletons");
    }

    #[test]
    fn list_error_columns_are_absolute() {
        match parse_partition_list("sigma0,pi:2,9") {
            Err(CliError::Parse { column, .. }) => assert_eq!(column, 13),
            other => panic!("{other:?}"),
        }
    }
}

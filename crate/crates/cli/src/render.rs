use serde::Serialize;

use crate::{CliError, Format};

/// One report in every format it supports.
pub struct Doc {
    text: String,
    json: Result<String, String>,
    csv: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Doc {
    pub fn new<T: Serialize>(text: String, value: &T) -> Self {
        Self {
            text,
            json: serde_json::to_string(value).map_err(|e| e.to_string()),
            csv: None,
        }
    }

    pub fn with_csv(mut self, header: &[&'static str], rows: Vec<Vec<String>>) -> Self {
        self.csv = Some((header.to_vec(), rows));
        self
    }

    pub fn render(self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text),
            Format::Json => self.json.map(|j| j + "\n").map_err(CliError::Output),
            Format::Csv => {
                let (header, rows) = self.csv.ok_or_else(|| {
                    CliError::Usage("csv output is available for enumerate and counts".into())
                })?;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header)
                    .map_err(|e| CliError::Output(e.to_string()))?;
                for row in rows {
                    w.write_record(&row)
                        .map_err(|e| CliError::Output(e.to_string()))?;
                }
                let bytes = w
                    .into_inner()
                    .map_err(|e| CliError::Output(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
            }
        }
    }
}

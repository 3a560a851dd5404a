use std::fmt;

/// Exit status for usage and input problems.
pub const EXIT_INPUT: u8 = 2;
/// Exit status for failures while processing valid input.
pub const EXIT_PROCESSING: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub error: anyhow::Error,
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn input(error: anyhow::Error) -> Self {
        Self {
            code: EXIT_INPUT,
            error,
        }
    }
}

impl From<edgeforge::Error> for CliError {
    fn from(e: edgeforge::Error) -> Self {
        let code = if e.is_input_error() {
            EXIT_INPUT
        } else {
            EXIT_PROCESSING
        };
        Self { code, error: e.into() }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(error: anyhow::Error) -> Self {
        Self {
            code: EXIT_PROCESSING,
            error,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // some causes are already spelled out in their parent's message
        let mut msg = self.error.to_string();
        for cause in self.error.chain().skip(1) {
            let text = cause.to_string();
            if !msg.contains(&text) {
                msg.push_str(": ");
                msg.push_str(&text);
            }
        }
        f.write_str(&msg)
    }
}

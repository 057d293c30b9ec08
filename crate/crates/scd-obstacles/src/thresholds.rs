use crate::error::ObstacleError;

/// Multipliers of k used by extraction and by the solvers built on it.
/// Defaults are the values under which the constructions are proven to work;
/// lowering them makes extraction fail with `InternalContradiction` or
/// `PreconditionUnmet` rather than produce wrong certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thresholds {
    /// A (c·k, k)-degree tangle yields a (k,3)-short jungle.
    pub degree_jungle: usize,
    /// A (s·k, g·k)-matching tangle yields a (k,4)-short jungle.
    pub matching_jungle_size: usize,
    pub matching_jungle_gap: usize,
    /// An (a·k)-backward tangle yields a (k,4)-short immersion jungle.
    pub backward_arcs: usize,
    /// Side size (·k) of the tails or heads of forward arcs needed to proceed.
    pub backward_side: usize,
    /// Size (·k) at which the high-outdegree tails form a degree tangle.
    pub backward_delegate: usize,
    /// Containment runs approximate pathwidth with (w·k, l·k).
    pub containment_width: usize,
    pub containment_window: usize,
    /// Exact cutwidth window length (·k).
    pub cutwidth_window: usize,
    /// Approximate pathwidth default window (·k).
    pub pathwidth_window: usize,
    /// Overrides m(k) in approximate cutwidth.
    pub cutwidth_m: Option<usize>,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            degree_jungle: 26,
            matching_jungle_size: 5,
            matching_jungle_gap: 3,
            backward_arcs: 109 * 109,
            backward_side: 109,
            backward_delegate: 104,
            containment_width: 20,
            containment_window: 520,
            cutwidth_window: 10,
            pathwidth_window: 5,
            cutwidth_m: None,
        }
    }
}

impl Thresholds {
    pub const KEYS: [&'static str; 11] = [
        "degree_jungle",
        "matching_jungle_size",
        "matching_jungle_gap",
        "backward_arcs",
        "backward_side",
        "backward_delegate",
        "containment_width",
        "containment_window",
        "cutwidth_window",
        "pathwidth_window",
        "cutwidth_m",
    ];

    pub fn set(&mut self, key: &str, value: usize) -> Result<(), ObstacleError> {
        let slot = match key {
            "degree_jungle" => &mut self.degree_jungle,
            "matching_jungle_size" => &mut self.matching_jungle_size,
            "matching_jungle_gap" => &mut self.matching_jungle_gap,
            "backward_arcs" => &mut self.backward_arcs,
            "backward_side" => &mut self.backward_side,
            "backward_delegate" => &mut self.backward_delegate,
            "containment_width" => &mut self.containment_width,
            "containment_window" => &mut self.containment_window,
            "cutwidth_window" => &mut self.cutwidth_window,
            "pathwidth_window" => &mut self.pathwidth_window,
            "cutwidth_m" => {
                self.cutwidth_m = Some(value);
                return Ok(());
            }
            _ => return Err(ObstacleError::BadConstant(key.to_string())),
        };
        *slot = value;
        Ok(())
    }

    /// m(k) or its override.
    pub fn cutwidth_bound(&self, k: usize) -> usize {
        self.cutwidth_m.unwrap_or_else(|| crate::tangle::cutwidth_m(k))
    }
}

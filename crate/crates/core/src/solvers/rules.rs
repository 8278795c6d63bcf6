//! Per-task closed-form rules from the relaxed problem: the min-finish-time
//! tier choice and the transmit-power regime classification.

use crate::model::{RadioLink, Tier};

/// Tier with the earliest finish time; ties prefer Local, then Fog.
pub fn decision_rule(tf_local: f64, tf_fog: f64, tf_cloud: f64) -> Tier {
    if tf_local <= tf_fog && tf_local <= tf_cloud {
        Tier::Local
    } else if tf_fog <= tf_cloud {
        Tier::Fog
    } else {
        Tier::Cloud
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerRegime {
    /// Fog ready time set by the task's own upload.
    FogCaseI,
    /// Fog ready time set by a fog-placed predecessor.
    FogCaseII,
    /// Fog ready time set by a cloud-placed predecessor.
    FogCaseIII,
    /// Cloud ready time set by upload plus forwarding.
    CloudCaseI,
    /// Cloud ready time set by a cloud-placed predecessor.
    CloudCaseII,
    /// Cloud ready time set by forwarding after fog-placed predecessors.
    CloudCaseIII,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerCase {
    pub regime: PowerRegime,
    pub recommended_power: f64,
}

/// The three competing terms of the ready time at the offload target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PowerTerms {
    Fog {
        finish_tx: f64,
        max_pre_fog: f64,
        max_pre_cloud: f64,
    },
    Cloud {
        finish_tx_plus_fwd: f64,
        max_pre_cloud: f64,
        finish_fwd: f64,
    },
}

/// Index of the largest of three values; exact ties go to the earliest.
fn dominant(values: [f64; 3]) -> usize {
    let mut best = 0;
    for i in 1..3 {
        if values[i] > values[best] {
            best = i;
        }
    }
    best
}

/// Which term dominates the ready time. Every regime recommends transmitting
/// at full power: the objective is non-increasing in transmit power in each.
pub fn classify_power_case(terms: PowerTerms, link: &RadioLink) -> PowerCase {
    let regime = match terms {
        PowerTerms::Fog { finish_tx, max_pre_fog, max_pre_cloud } => {
            [PowerRegime::FogCaseI, PowerRegime::FogCaseII, PowerRegime::FogCaseIII]
                [dominant([finish_tx, max_pre_fog, max_pre_cloud])]
        }
        PowerTerms::Cloud { finish_tx_plus_fwd, max_pre_cloud, finish_fwd } => {
            [PowerRegime::CloudCaseI, PowerRegime::CloudCaseII, PowerRegime::CloudCaseIII]
                [dominant([finish_tx_plus_fwd, max_pre_cloud, finish_fwd])]
        }
    };
    PowerCase {
        regime,
        recommended_power: link.tx_power_max,
    }
}

pub mod density;
pub mod multichannel;
pub mod params;
pub mod scan;
pub mod schmidt;

use biphoton::amplitude::{AmplitudeMode, AmplitudeModel};
use biphoton::crystal::{derive_scales, ExperimentConfig, SellmeierSet};
use biphoton::{AmplitudeModelF64, DerivedScalesF64, ExperimentConfigF64};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Sink;

/// Everything a command needs: the resolved configuration, the loaded
/// crystal and the output sink.
pub struct Context {
    pub config: RunConfig,
    pub experiment: ExperimentConfigF64,
    pub sink: Sink,
}

impl Context {
    pub fn new(config: RunConfig) -> Result<Self, CliError> {
        let crystal = SellmeierSet::load(&config.crystal)?;
        let experiment = ExperimentConfig::new(crystal, config.lambda_p, config.waist, config.length, config.phi0)?;
        let sink = Sink::new(config.out.clone())?;
        Ok(Context { config, experiment, sink })
    }

    pub fn scales(&self) -> Result<DerivedScalesF64, CliError> {
        Ok(derive_scales(&self.experiment)?)
    }

    pub fn gauss_coefficient(&self) -> f64 {
        if self.config.exact_paper_constants {
            biphoton::amplitude::PRINTED_DENSITY_COEFFICIENT
        } else {
            biphoton::amplitude::SINC_GAUSS_COEFFICIENT
        }
    }

    pub fn model(&self, mode: AmplitudeMode) -> Result<AmplitudeModelF64, CliError> {
        Ok(AmplitudeModel::new(mode, self.scales()?)
            .with_gauss_coefficient(self.gauss_coefficient())
            .with_walkoff(self.config.walkoff))
    }
}

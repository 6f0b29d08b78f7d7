//! Parameter sets behind the four figures.
//!
//! Caption parameters are fixed; the swept value grids are our own choice
//! since the captions do not list them. Every figure uses delays up to
//! 3000 ps in 5 ps steps, which resolves the fastest (S = 8 μeV) period
//! with 100 points.

use std::fmt;
use std::path::Path;

use lgdot_core::{DotParameters, SweepAxis};

use crate::config::{RunConfig, SweepSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FigureId {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl FigureId {
    pub const ALL: [FigureId; 4] = [FigureId::Fig2, FigureId::Fig3, FigureId::Fig4, FigureId::Fig5];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            FigureId::Fig2 => "K+ and K− at S = 3 μeV, g = 0",
            FigureId::Fig3 => "K− versus fine-structure splitting (g = 0.3)",
            FigureId::Fig4 => "K− versus background noise (S = 3 μeV)",
            FigureId::Fig5 => "K− versus temperature (S = 2.5 μeV, g = 0.2)",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub id: FigureId,
    pub config: RunConfig,
}

pub fn resolve(id: FigureId, output_dir: &Path) -> FigureSpec {
    let base = DotParameters::default();
    let (dot, sweep) = match id {
        FigureId::Fig2 => (
            DotParameters {
                s_fss: 3.0,
                g_noise: 0.0,
                gate_width: 50.0,
                temperature: 5.0,
                ..base
            },
            None,
        ),
        FigureId::Fig3 => (
            DotParameters {
                g_noise: 0.3,
                gate_width: 50.0,
                temperature: 5.0,
                ..base
            },
            Some(SweepSpec {
                axis: SweepAxis::SFss,
                values: vec![0.5, 1.0, 2.0, 3.0, 5.0, 8.0],
            }),
        ),
        FigureId::Fig4 => (
            DotParameters {
                s_fss: 3.0,
                gate_width: 50.0,
                temperature: 5.0,
                ..base
            },
            Some(SweepSpec {
                axis: SweepAxis::GNoise,
                values: vec![0.0, 0.1, 0.3, 0.6, 1.0],
            }),
        ),
        FigureId::Fig5 => (
            DotParameters {
                s_fss: 2.5,
                g_noise: 0.2,
                gate_width: 50.0,
                ..base
            },
            Some(SweepSpec {
                axis: SweepAxis::Temperature,
                values: vec![4.0, 10.0, 20.0, 40.0, 80.0],
            }),
        ),
    };
    FigureSpec {
        id,
        config: RunConfig {
            dot,
            t_max: 3000.0,
            t_steps: 601,
            output_dir: output_dir.to_path_buf(),
            sweep,
            ..RunConfig::default()
        },
    }
}

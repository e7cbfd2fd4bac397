//! Short exact sequences of cochain complexes and the long exact sequences they induce.

mod les;
mod ses;

pub use les::{connecting_hom, les_report, verify_les, LesNode, LesReport, LesRow};
pub use ses::{build_ses, verify_levelwise_exact, LevelwiseReport, SesTag, ShortExactSeq};

//! Factor criteria and constructive factor finders.

mod certificate;
mod criteria;
mod gadget;
mod matching;

pub use certificate::FactorCertificate;
pub use criteria::{
    check_forced_criterion, check_gf_criterion, check_near_f_criterion, check_one_f_factor, check_one_factor,
    check_restricted_criterion, omega_gf,
};
pub use gadget::{find_f_factor, find_gf_factor, find_near_f_factor};
pub use matching::max_matching;

pub(crate) use criteria::{PairKind, PairScan};

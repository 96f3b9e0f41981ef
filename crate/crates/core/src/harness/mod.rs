//! Graph supply and verification campaigns.

pub mod builders;
pub mod cache;
pub mod campaign;
pub mod canon;
pub mod enumerate;

pub use builders::{build_h_example, build_k2m};
pub use cache::{default_cache_path, ResultsCache, CACHE_ENV};
pub use campaign::{family, run_campaign, CampaignConfig, Property};
pub use canon::{canonical_code, canonical_form, canonical_labelling};
pub use enumerate::{enumerate_2connected, enumerate_block_chains, enumerate_connected, Filter};

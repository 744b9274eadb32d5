#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "drazinkit/json_io.hpp"

namespace drazinkit::cli {

/// One manifest entry: `count` instances of every listed property, instance k
/// drawn from spec.child(k) with a size uniform in [1, spec.size]. When n / m
/// are absent each instance draws them from {1, 2, 3}.
struct CampaignEntry {
  GenSpec spec;
  std::vector<std::string> properties;
  std::size_t count = 1;
  std::optional<unsigned> n;
  std::optional<unsigned> m;
  Tolerance tol = Tolerance::verdict_default();
};

struct Manifest {
  std::vector<CampaignEntry> campaigns;
};

/// {"campaigns":[{"spec":{...},"properties":[...],"count":N,"n":1,"m":1,"tol":1e-9}]}
/// Throws Error(Schema) for malformed input or an unknown property name.
Manifest manifest_from_json(const json& j);

struct PropertyOutcome {
  bool passed = false;
  json detail;
};

const std::vector<std::string>& property_names();

/// Generates the instance described by (spec, q, instance) and checks the named
/// property. Library errors are caught and reported as a failed outcome.
PropertyOutcome evaluate_property(const std::string& name, const GenSpec& spec, const ClassQuery& q,
                                  std::uint64_t instance);

struct CampaignSummary {
  std::size_t evaluated = 0;
  std::size_t failed = 0;
};

/// Runs every (entry, instance, property) on `jobs` workers; each result is
/// one JSON line written to `out` under a lock. `seed_override` replaces every
/// entry's seed.
CampaignSummary run_campaign(const Manifest& manifest, unsigned jobs, std::ostream& out,
                             std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace drazinkit::cli

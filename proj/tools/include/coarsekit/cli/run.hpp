#pragma once

#include <optional>
#include <string>

#include "coarsekit/cli/codec.hpp"

namespace coarsekit::cli {

inline constexpr const char* kSchema = "coarsekit/1";
inline constexpr const char* kToolVersion = "0.1.0";
/// Largest radius, window, or ball any scenario may request by default.
inline constexpr Distance kDefaultCap = 200;

struct RunOptions {
  /// Replaces every scenario's window size.
  std::optional<Distance> window;
  Distance cap = kDefaultCap;
};

/// Shipped actions by identifier: z-on-z, z2-on-z, z3-on-z, lamplighter-on-z,
/// z*z-on-z, even-extension.
CoarseQuasiAction make_action(const std::string& id, Distance group_cap, Distance x_window,
                              const std::string& ptr);
std::vector<std::string> action_ids();
/// The shipped action of a group identifier.
std::string default_action(const std::string& group_id, const std::string& ptr);

/// One scenario object to one report object (without the schema envelope).
/// Throws InputError for malformed input.
Json run_scenario(const Json& scenario, const RunOptions& options, const std::string& ptr = "");

/// A scenario or an array of scenarios. Array items run concurrently; the
/// report keeps their order.
Json run_document(const Json& document, const RunOptions& options);

/// True when every report in the document has verdict "pass".
bool document_passes(const Json& report);

struct ReplayOutcome {
  bool pass = true;
  std::string first_mismatch;
  Json witness;  // null when there is none
  Json summary;
};

/// Re-referees the families and transcripts stored in a report document.
/// Throws InputError when the document has nothing to replay.
ReplayOutcome replay_document(const Json& report, Distance cap = kDefaultCap);

/// Catalogue printed by `list-models`.
Json list_models();

}  // namespace coarsekit::cli

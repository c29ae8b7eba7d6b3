#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coarsekit/coarsekit.hpp"

namespace coarsekit::cli {

using Json = nlohmann::json;

/// Malformed scenario or report input. `pointer` is a JSON pointer into the
/// offending document.
class InputError : public Error {
 public:
  InputError(std::string pointer, const std::string& message)
      : Error((pointer.empty() ? "/" : pointer) + ": " + message), pointer_(std::move(pointer)) {}
  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Field lookup with pointered errors.
const Json& field(const Json& object, const std::string& key, const std::string& ptr);
std::int64_t get_int(const Json& object, const std::string& key, const std::string& ptr);
std::int64_t get_int_or(const Json& object, const std::string& key, std::int64_t fallback,
                        const std::string& ptr);
std::string get_string(const Json& object, const std::string& key, const std::string& ptr);

// Scales are integers when whole and "p/q" strings otherwise.
Json encode_scale(const Scale& value);
Scale decode_scale(const Json& value, const std::string& ptr);
Json encode_scales(const std::vector<Scale>& values);
std::vector<Scale> decode_scales(const Json& value, const std::string& ptr);

/// Groups by identifier: z, z2, z3, z4, f2, f3, z*z, lamplighter.
GroupPtr make_group(const std::string& id, Distance cap, const std::string& ptr);
std::vector<std::string> group_ids();

/// Space descriptors:
///   {"kind":"line","lo":a,"hi":b}
///   {"kind":"grid-box","dimension":d,"lo":a,"hi":b}
///   {"kind":"grid-ball","dimension":d,"radius":r}
///   {"kind":"cayley","group":id,"radius":r}
///   {"kind":"table","matrix":[[...]]}
/// `cap` bounds every radius and Cayley ball.
MetricSpace build_space(const Json& descriptor, Distance cap, const std::string& ptr);

// Element encodings: Z^d and plain spaces as integer arrays, free groups and
// free products as words, the lamplighter as {"lamps":{pos:value},"shift":k}.
Json encode_point(const MetricSpace& space, const Point& p);
Point decode_point(const MetricSpace& space, const Json& value, const std::string& ptr);

Json encode_subset(const MetricSpace& space, const Subset& s);
Subset decode_subset(const MetricSpace& space, const Json& value, const std::string& ptr);
Json encode_family(const MetricSpace& space, const SubsetFamily& family);
SubsetFamily decode_family(const MetricSpace& space, const Json& value, const std::string& ptr);
Json encode_families(const MetricSpace& space, const std::vector<SubsetFamily>& families);
std::vector<SubsetFamily> decode_families(const MetricSpace& space, const Json& value,
                                          const std::string& ptr);

Json encode_violation(const MetricSpace& space, const Violation& v);
Json encode_witness_report(const MetricSpace& space, const WitnessReport& report);

Json encode_assignment(const DecompositionAssignment& assignment);
DecompositionAssignment decode_assignment(const Json& value, const std::string& ptr);

Json encode_transcript(const MetricSpace& space, const GameTranscript& transcript);
GameTranscript decode_transcript(const MetricSpace& space, const Json& value,
                                 const std::string& ptr);

}  // namespace coarsekit::cli

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coarsekit/metric.hpp"

namespace coarsekit {

enum class GroupKind { Lattice, FreeGroup, FreeProduct, Lamplighter };

[[nodiscard]] std::string to_string(GroupKind kind);

/// A generator or inverse generator with its one-letter name. Lowercase
/// letters are generators, uppercase letters their inverses.
struct Generator {
  char letter = 'a';
  GroupElement element;
};

/// A finitely generated group with a solvable normal form.
///
/// Payload encodings:
///   Z^d          coordinates
///   F_k          reduced word, letter i encoded as +-(i+1)
///   lamplighter  [shift, p1, v1, p2, v2, ...] with increasing lamp positions
///                and nonzero values
///   A*B          per syllable: factor index, payload length, factor payload
class GroupModel {
 public:
  explicit GroupModel(Distance cap) : cap_(cap) {}
  GroupModel(const GroupModel&) = delete;
  GroupModel& operator=(const GroupModel&) = delete;
  virtual ~GroupModel() = default;

  [[nodiscard]] virtual GroupKind kind() const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual GroupElement identity() const = 0;
  /// True iff the payload is a normal form of this model.
  [[nodiscard]] virtual bool is_element(const GroupElement& g) const = 0;
  /// Word length with respect to the model's generators, in closed form.
  [[nodiscard]] virtual Distance geodesic_length(const GroupElement& g) const = 0;
  /// A shortest word spelling g.
  [[nodiscard]] virtual std::string word(const GroupElement& g) const = 0;
  /// Throws PreconditionError("norm undefined") except for the lamplighter.
  [[nodiscard]] virtual Distance norm(const GroupElement& g) const;

  /// Both throw ModelMismatch for payloads of another model.
  [[nodiscard]] GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  [[nodiscard]] GroupElement inverse(const GroupElement& g) const;
  /// d(g, h) = |g^-1 h|.
  [[nodiscard]] Distance distance(const GroupElement& g, const GroupElement& h) const;
  /// Product of the letters; throws PreconditionError for unknown letters.
  [[nodiscard]] GroupElement evaluate(std::string_view word) const;

  [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
  /// Lowercase generator letters in order, e.g. "at".
  [[nodiscard]] std::string alphabet() const;
  [[nodiscard]] Distance cap() const { return cap_; }

  void require_element(const GroupElement& g) const;

 protected:
  [[nodiscard]] virtual GroupElement do_multiply(const GroupElement& g,
                                                 const GroupElement& h) const = 0;
  [[nodiscard]] virtual GroupElement do_inverse(const GroupElement& g) const = 0;
  void add_generator(char letter, const GroupElement& element);

 private:
  std::vector<Generator> generators_;
  Distance cap_;
};

using GroupPtr = std::shared_ptr<const GroupModel>;

inline constexpr Distance kLatticeCap = 50;
inline constexpr Distance kFreeGroupCap = 10;
inline constexpr Distance kFreeProductCap = 10;
inline constexpr Distance kLamplighterCap = 8;

[[nodiscard]] GroupPtr make_lattice(int dimension, Distance cap = kLatticeCap);
[[nodiscard]] GroupPtr make_free_group(int rank, Distance cap = kFreeGroupCap);
[[nodiscard]] GroupPtr make_free_product(GroupPtr left, GroupPtr right,
                                         Distance cap = kFreeProductCap);
[[nodiscard]] GroupPtr make_lamplighter(Distance cap = kLamplighterCap);

// Lamplighter payload helpers.
struct LampConfiguration {
  std::vector<std::pair<std::int64_t, std::int64_t>> lamps;  // (position, value), sorted
  std::int64_t shift = 0;
};
[[nodiscard]] GroupElement lamplighter_element(const LampConfiguration& config);
[[nodiscard]] LampConfiguration lamp_configuration(const GroupElement& g);

// Free product payload helpers.
struct Syllable {
  int factor = 0;
  GroupElement element;
};
[[nodiscard]] std::vector<Syllable> syllables(const GroupElement& g);
[[nodiscard]] GroupElement from_syllables(const std::vector<Syllable>& parts);
/// The two factors of a free product model; throws ModelMismatch otherwise.
[[nodiscard]] std::pair<GroupPtr, GroupPtr> free_product_factors(const GroupModel& model);

struct BallEntry {
  GroupElement element;
  Distance length = 0;
};

/// Breadth-first enumeration of all elements of word length <= radius, sorted
/// canonically. Throws CapExceeded when radius exceeds the model's cap.
[[nodiscard]] std::vector<BallEntry> ball(const GroupModel& model, Distance radius);

/// Breadth-first word length, or nullopt when longer than cap.
[[nodiscard]] std::optional<Distance> word_length(const GroupModel& model, const GroupElement& g,
                                                  Distance cap);

/// Canonical element order: (word length, payload).
[[nodiscard]] bool canonical_less(const GroupModel& model, const GroupElement& a,
                                  const GroupElement& b);
void canonical_sort(const GroupModel& model, std::vector<GroupElement>& elements);

/// The word metric on the whole group, windowed at ball(radius).
[[nodiscard]] MetricSpace cayley_space(const GroupPtr& model, Distance radius);
/// The same universe with an arbitrary finite window.
[[nodiscard]] MetricSpace cayley_space(const GroupPtr& model, std::vector<GroupElement> window,
                                       std::string window_id);

}  // namespace coarsekit

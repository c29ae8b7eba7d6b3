#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsekit/quasi_action.hpp"
#include "coarsekit/witness.hpp"

namespace coarsekit {

struct GameState {
  std::size_t round = 1;
  /// The family the next response must decompose.
  std::vector<Subset> family;
  /// Radii played so far, including the current one.
  std::vector<Scale> radii;
};

struct StrategyResponse {
  std::vector<Subset> family;
  DecompositionAssignment assignment;
  /// Set when the strategy claims its family is bounded by this value.
  std::optional<Scale> declared_bound;
  std::string phase;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  [[nodiscard]] virtual std::string name() const = 0;
  /// Called once before the first round when the radii are disclosed up front.
  virtual void announce(std::span<const Scale> radii) { (void)radii; }
  virtual StrategyResponse respond(const GameState& state, const Scale& R) = 0;
};

using StrategyPtr = std::unique_ptr<Strategy>;

/// The first player: a deterministic radius rule or an explicit sequence.
class Adversary {
 public:
  static Adversary constant(Scale R);
  static Adversary doubling(Scale first);
  static Adversary fibonacci(Scale first, Scale second);
  static Adversary sequence(std::vector<Scale> radii);

  /// Radius of a 1-based round, or nullopt once a sequence is exhausted.
  [[nodiscard]] std::optional<Scale> radius(std::size_t round) const;
  [[nodiscard]] std::string describe() const;

 private:
  enum class Rule { Constant, Doubling, Fibonacci, Sequence };
  Rule rule_ = Rule::Constant;
  std::vector<Scale> values_;
};

enum class GameOutcome { Won, Lost, CapHit };

[[nodiscard]] std::string to_string(GameOutcome outcome);

struct RoundRecord {
  std::size_t round = 0;
  Scale R;
  std::string phase;
  std::vector<Subset> family;
  DecompositionAssignment assignment;
  std::optional<Scale> declared_bound;
  std::size_t member_count = 0;
  Distance max_diameter = 0;
  WitnessReport verdict;
  std::string failure;
};

struct GameTranscript {
  std::string mode;  // "fdc" or "sfdc"
  std::string strategy;
  std::string adversary;
  std::string window_id;
  std::vector<Subset> initial_family;
  std::vector<RoundRecord> rounds;
  GameOutcome outcome = GameOutcome::CapHit;
  std::optional<std::size_t> won_round;
  std::optional<Scale> final_bound;
  std::string detail;
};

/// Plays from the one-member family {window}.
[[nodiscard]] GameTranscript play_fdc(const MetricSpace& ambient, Strategy& strategy,
                                      const Adversary& adversary, std::size_t round_cap);
[[nodiscard]] GameTranscript play_fdc(const MetricSpace& ambient,
                                      std::vector<Subset> initial_family, Strategy& strategy,
                                      const Adversary& adversary, std::size_t round_cap);

/// Discloses the whole sequence first. Throws PreconditionError unless it is
/// nondecreasing and positive.
[[nodiscard]] GameTranscript run_sfdc(const MetricSpace& ambient, Strategy& strategy,
                                      std::span<const Scale> radii);
[[nodiscard]] GameTranscript run_sfdc(const MetricSpace& ambient,
                                      std::vector<Subset> initial_family, Strategy& strategy,
                                      std::span<const Scale> radii);

struct ReplayResult {
  bool pass = true;
  std::string first_mismatch;
  std::optional<Violation> witness;
};

/// Re-referees every recorded round from the transcript data alone and checks
/// that the recorded outcome follows.
[[nodiscard]] ReplayResult replay_transcript(const MetricSpace& ambient,
                                             const GameTranscript& transcript);

// Built-in strategies. Block length at radius R is max(1, floor(10 R)).

[[nodiscard]] std::int64_t block_length(const Scale& R);

/// Alternating blocks along one axis in two collections. Declares the bound
/// L - 1 + transverse after one round.
[[nodiscard]] StrategyPtr interval_strategy(std::size_t axis = 0, Distance transverse = 0);
/// Z^d: round i splits coordinate d - i; wins after d rounds with bound
/// Σ (L_i - 1).
[[nodiscard]] StrategyPtr slab_strategy(int dimension);
/// Responds with the family itself and declares its diameter.
[[nodiscard]] StrategyPtr bounded_strategy(MetricSpace ambient);
/// "interval", "slab", or "bounded"; throws PreconditionError otherwise.
[[nodiscard]] StrategyPtr builtin_strategy(const std::string& kind, const MetricSpace& ambient);

/// Builds the W-phase strategy from the phase-1 bound T and the stabilizer
/// radius.
using WStrategyFactory = std::function<StrategyPtr(const Scale& T, const Scale& rho)>;

/// Strategy over the acting group: plays the X strategy at radius
/// max(1, ℓ(λ)) R and pulls the answers back along the orbit map, then plays
/// the W strategy on the translated pieces and pushes its answers forward.
[[nodiscard]] StrategyPtr lifted_strategy(const CoarseQuasiAction& action,
                                          const MetricSpace& group_space, StrategyPtr x_strategy,
                                          WStrategyFactory w_factory);

/// The W factory used for Z^d on Z: interval blocks along axis 1 of width
/// 2·rho across.
[[nodiscard]] WStrategyFactory strip_interval_factory(std::size_t axis = 1);

}  // namespace coarsekit

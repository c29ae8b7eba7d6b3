#include "coarsekit/game.hpp"

namespace coarsekit {

Adversary Adversary::constant(Scale R) {
  Adversary a;
  a.rule_ = Rule::Constant;
  a.values_ = {R};
  return a;
}

Adversary Adversary::doubling(Scale first) {
  Adversary a;
  a.rule_ = Rule::Doubling;
  a.values_ = {first};
  return a;
}

Adversary Adversary::fibonacci(Scale first, Scale second) {
  Adversary a;
  a.rule_ = Rule::Fibonacci;
  a.values_ = {first, second};
  return a;
}

Adversary Adversary::sequence(std::vector<Scale> radii) {
  Adversary a;
  a.rule_ = Rule::Sequence;
  a.values_ = std::move(radii);
  return a;
}

std::optional<Scale> Adversary::radius(std::size_t round) const {
  if (round == 0) {
    return std::nullopt;
  }
  switch (rule_) {
    case Rule::Constant:
      return values_[0];
    case Rule::Doubling: {
      Scale r = values_[0];
      for (std::size_t i = 1; i < round; ++i) {
        r *= 2;
      }
      return r;
    }
    case Rule::Fibonacci: {
      Scale a = values_[0];
      Scale b = values_[1];
      for (std::size_t i = 1; i < round; ++i) {
        Scale c = a + b;
        a = b;
        b = c;
      }
      return a;
    }
    case Rule::Sequence:
      break;
  }
  if (round > values_.size()) {
    return std::nullopt;
  }
  return values_[round - 1];
}

std::string Adversary::describe() const {
  auto list = [this]() {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      out += (i ? "," : "") + to_string(values_[i]);
    }
    return out;
  };
  switch (rule_) {
    case Rule::Constant:
      return "constant(" + list() + ")";
    case Rule::Doubling:
      return "doubling(" + list() + ")";
    case Rule::Fibonacci:
      return "fibonacci(" + list() + ")";
    case Rule::Sequence:
      break;
  }
  return "sequence(" + list() + ")";
}

std::string to_string(GameOutcome outcome) {
  switch (outcome) {
    case GameOutcome::Won:
      return "won";
    case GameOutcome::Lost:
      return "lost";
    case GameOutcome::CapHit:
      return "cap-hit";
  }
  return "unknown";
}

namespace {

SubsetFamily as_family(const std::vector<Subset>& members) {
  SubsetFamily f;
  f.members = members;
  return f;
}

// Referees one response against its parent family; fills verdict, size data,
// and failure text. Returns true when the round stands.
bool referee_round(const MetricSpace& ambient, const std::vector<Subset>& parent,
                   RoundRecord& rec) {
  rec.member_count = rec.family.size();
  try {
    rec.verdict = verify_decomposition(ambient, as_family(parent), as_family(rec.family), rec.R,
                                       rec.assignment);
  } catch (const PreconditionError& e) {
    rec.failure = e.what();
    return false;
  }
  rec.max_diameter = rec.verdict.measured_bound;
  if (!rec.verdict.pass()) {
    rec.failure = rec.verdict.violations.front().detail;
    return false;
  }
  // Checked after the referee so a lost point is reported as uncovered.
  for (std::size_t i = 0; i < rec.family.size(); ++i) {
    if (rec.family[i].empty()) {
      rec.failure = "response member " + std::to_string(i) + " is empty";
      return false;
    }
  }
  if (rec.declared_bound && !within(rec.max_diameter, *rec.declared_bound)) {
    rec.failure = "family diameter " + std::to_string(rec.max_diameter) +
                  " exceeds declared bound " + to_string(*rec.declared_bound);
    return false;
  }
  return true;
}

GameTranscript run_game(const MetricSpace& ambient, std::vector<Subset> family,
                        Strategy& strategy, const Adversary& adversary, std::size_t round_cap,
                        std::string mode) {
  if (round_cap < 1) {
    throw PreconditionError("round cap must be at least 1");
  }
  GameTranscript t;
  t.mode = std::move(mode);
  t.strategy = strategy.name();
  t.adversary = adversary.describe();
  t.window_id = ambient.window_id();
  t.initial_family = family;
  GameState state;
  state.family = std::move(family);
  for (std::size_t round = 1; round <= round_cap; ++round) {
    auto R = adversary.radius(round);
    if (!R) {
      t.outcome = GameOutcome::CapHit;
      t.detail = "adversary exhausted after round " + std::to_string(round - 1);
      return t;
    }
    state.round = round;
    state.radii.push_back(*R);
    RoundRecord rec;
    rec.round = round;
    rec.R = *R;
    try {
      auto response = strategy.respond(state, *R);
      rec.family = std::move(response.family);
      rec.assignment = std::move(response.assignment);
      rec.declared_bound = response.declared_bound;
      rec.phase = std::move(response.phase);
    } catch (const Error& e) {
      rec.failure = std::string("strategy failed: ") + e.what();
      t.rounds.push_back(std::move(rec));
      t.outcome = GameOutcome::Lost;
      t.detail = t.rounds.back().failure;
      return t;
    }
    bool ok = referee_round(ambient, state.family, rec);
    t.rounds.push_back(rec);
    if (!ok) {
      t.outcome = GameOutcome::Lost;
      t.detail = rec.failure;
      return t;
    }
    if (rec.declared_bound) {
      t.outcome = GameOutcome::Won;
      t.won_round = round;
      t.final_bound = rec.declared_bound;
      return t;
    }
    state.family = std::move(rec.family);
  }
  t.outcome = GameOutcome::CapHit;
  t.detail = "round cap " + std::to_string(round_cap) + " reached";
  return t;
}

std::vector<Subset> whole_window(const MetricSpace& ambient) {
  return {Subset(std::vector<Point>(ambient.window().begin(), ambient.window().end()))};
}

}  // namespace

GameTranscript play_fdc(const MetricSpace& ambient, Strategy& strategy, const Adversary& adversary,
                        std::size_t round_cap) {
  return play_fdc(ambient, whole_window(ambient), strategy, adversary, round_cap);
}

GameTranscript play_fdc(const MetricSpace& ambient, std::vector<Subset> initial_family,
                        Strategy& strategy, const Adversary& adversary, std::size_t round_cap) {
  return run_game(ambient, std::move(initial_family), strategy, adversary, round_cap, "fdc");
}

GameTranscript run_sfdc(const MetricSpace& ambient, Strategy& strategy,
                        std::span<const Scale> radii) {
  return run_sfdc(ambient, whole_window(ambient), strategy, radii);
}

GameTranscript run_sfdc(const MetricSpace& ambient, std::vector<Subset> initial_family,
                        Strategy& strategy, std::span<const Scale> radii) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] <= 0) {
      throw PreconditionError("sFDC radii must be positive");
    }
    if (i > 0 && radii[i] < radii[i - 1]) {
      throw PreconditionError("sFDC radii must be nondecreasing");
    }
  }
  if (radii.empty()) {
    throw PreconditionError("sFDC needs at least one radius");
  }
  strategy.announce(radii);
  return run_game(ambient, std::move(initial_family), strategy,
                  Adversary::sequence({radii.begin(), radii.end()}), radii.size(), "sfdc");
}

ReplayResult replay_transcript(const MetricSpace& ambient, const GameTranscript& transcript) {
  ReplayResult out;
  auto mismatch = [&out](std::string text, std::optional<Violation> witness = std::nullopt) {
    out.pass = false;
    out.first_mismatch = std::move(text);
    out.witness = std::move(witness);
    return out;
  };
  std::vector<Subset> parent = transcript.initial_family;
  bool lost = false;
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    const auto& recorded = transcript.rounds[i];
    RoundRecord rec;
    rec.round = recorded.round;
    rec.R = recorded.R;
    rec.family = recorded.family;
    rec.assignment = recorded.assignment;
    rec.declared_bound = recorded.declared_bound;
    bool ok = referee_round(ambient, parent, rec);
    bool recorded_ok = recorded.failure.empty();
    if (ok != recorded_ok) {
      std::optional<Violation> w;
      if (!rec.verdict.violations.empty()) {
        w = rec.verdict.violations.front();
      }
      return mismatch("round " + std::to_string(rec.round) + ": recorded " +
                          (recorded_ok ? "valid" : "invalid") + ", referee says " +
                          (ok ? "valid" : "invalid: " + rec.failure),
                      w);
    }
    if (ok && rec.max_diameter != recorded.max_diameter) {
      return mismatch("round " + std::to_string(rec.round) + ": recorded diameter " +
                      std::to_string(recorded.max_diameter) + ", measured " +
                      std::to_string(rec.max_diameter));
    }
    if (!ok) {
      lost = true;
      break;
    }
    parent = rec.family;
  }
  GameOutcome expected = GameOutcome::CapHit;
  if (lost) {
    expected = GameOutcome::Lost;
  } else if (!transcript.rounds.empty() && transcript.rounds.back().declared_bound) {
    expected = GameOutcome::Won;
  }
  if (expected != transcript.outcome) {
    return mismatch("recorded outcome " + to_string(transcript.outcome) + ", replay gives " +
                    to_string(expected));
  }
  if (expected == GameOutcome::Won && transcript.final_bound != transcript.rounds.back().declared_bound) {
    return mismatch("final bound does not match the last declared bound");
  }
  return out;
}

}  // namespace coarsekit

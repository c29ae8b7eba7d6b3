#pragma once

// Brute-force reference implementations. None of these call into the library
// beyond its value types, so they can referee the referee.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Random integer metric on n points: shortest paths over random edge weights.
inline Matrix random_metric(std::mt19937& rng, std::size_t n, std::int64_t max_weight) {
  std::uniform_int_distribution<std::int64_t> w(1, max_weight);
  Matrix d(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = w(rng);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

// Random partition-like family: each point joins a random member or none.
inline std::vector<std::vector<std::size_t>> random_members(std::mt19937& rng, std::size_t n,
                                                            std::size_t members) {
  std::vector<std::vector<std::size_t>> out(members);
  std::uniform_int_distribution<std::size_t> pick(0, members);
  for (std::size_t x = 0; x < n; ++x) {
    auto m = pick(rng);
    if (m < members) {
      out[m].push_back(x);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& v) { return v.empty(); }),
            out.end());
  return out;
}

inline std::int64_t set_distance(const Matrix& d, const std::vector<std::size_t>& a,
                                 const std::vector<std::size_t>& b) {
  std::int64_t best = INT64_MAX;
  for (auto x : a) {
    for (auto y : b) {
      best = std::min(best, d[x][y]);
    }
  }
  return best;
}

// Pairwise distance > num/den.
inline bool r_disjoint(const Matrix& d, const std::vector<std::vector<std::size_t>>& fam,
                       std::int64_t num, std::int64_t den) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      if (set_distance(d, fam[i], fam[j]) * den <= num) {
        return false;
      }
    }
  }
  return true;
}

inline std::int64_t diameter(const Matrix& d, const std::vector<std::vector<std::size_t>>& fam) {
  std::int64_t best = 0;
  for (const auto& m : fam) {
    for (auto x : m) {
      for (auto y : m) {
        best = std::max(best, d[x][y]);
      }
    }
  }
  return best;
}

// Lamplighter arithmetic written from scratch on std::map.
struct Lamp {
  std::map<std::int64_t, std::int64_t> lamps;
  std::int64_t shift = 0;
  auto operator<=>(const Lamp&) const = default;
};

inline Lamp lamp_apply(Lamp g, char letter) {
  switch (letter) {
    case 'a':
      g.lamps[g.shift] += 1;
      break;
    case 'A':
      g.lamps[g.shift] -= 1;
      break;
    case 't':
      g.shift += 1;
      break;
    case 'T':
      g.shift -= 1;
      break;
    default:
      break;
  }
  if (auto it = g.lamps.find(g.shift); it != g.lamps.end() && it->second == 0) {
    g.lamps.erase(it);
  }
  return g;
}

// Shortest word length of every element reachable by words of length <=
// max_len, found by enumerating all words.
inline std::map<Lamp, std::int64_t> lamplighter_lengths(int max_len) {
  std::map<Lamp, std::int64_t> best;
  std::vector<Lamp> layer{Lamp{}};
  best[Lamp{}] = 0;
  const std::string letters = "aAtT";
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Lamp> next;
    for (const auto& g : layer) {
      for (char c : letters) {
        Lamp h = lamp_apply(g, c);
        next.push_back(h);
        auto it = best.find(h);
        if (it == best.end() || it->second > len) {
          best[h] = len;
        }
      }
    }
    layer = std::move(next);
  }
  return best;
}

// Independent evaluation of the lamplighter action on Z.
inline std::int64_t lamp_act(const Lamp& g, std::int64_t t) {
  std::int64_t out = t + g.shift;
  if (g.lamps.empty()) {
    return out;
  }
  std::int64_t excluded = 0;
  for (const auto& [x, n] : g.lamps) {
    if (x < -std::abs(t) || x > std::abs(t)) {
      excluded += std::abs(n);
    }
  }
  return out + (g.lamps.begin()->second > 0 ? excluded : -excluded);
}

inline Lamp lamp_multiply(const Lamp& g, const Lamp& h) {
  Lamp out = g;
  for (const auto& [x, n] : h.lamps) {
    out.lamps[x + g.shift] += n;
    if (out.lamps[x + g.shift] == 0) {
      out.lamps.erase(x + g.shift);
    }
  }
  out.shift += h.shift;
  return out;
}

inline std::int64_t lamp_norm(const Lamp& g) {
  std::int64_t total = std::abs(g.shift);
  for (const auto& [x, n] : g.lamps) {
    total += std::abs(n);
  }
  return total;
}

// Free group words as strings, reduced by a stack.
inline std::string free_reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    char inv = static_cast<char>(std::islower(static_cast<unsigned char>(c))
                                     ? std::toupper(static_cast<unsigned char>(c))
                                     : std::tolower(static_cast<unsigned char>(c)));
    if (!out.empty() && out.back() == inv) {
      out.pop_back();
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace oracle

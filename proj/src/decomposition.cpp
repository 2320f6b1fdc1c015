// Copyright 2026 The qnoise authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnoise/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <string_view>
#include <set>
#include <string>

#include "qnoise/detail/kernels.hpp"
#include "qnoise/errors.hpp"
#include "qnoise/parallel.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

namespace {

// --- counting --------------------------------------------------------------

std::optional<std::uint64_t> checked_binomial(int n, int m) {
  if (m < 0 || m > n) return 0;
  m = std::min(m, n - m);
  unsigned __int128 value = 1;
  for (int i = 0; i < m; ++i) {
    value = value * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    if (value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(value);
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent) {
  unsigned __int128 value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= base;
    if (value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(value);
}

// Table of binomial(i, j) for unranking slot combinations. Only built when a
// level is small enough to enumerate, so entries fit 64 bits.
std::vector<std::vector<std::uint64_t>> binomial_table(int n) {
  std::vector<std::vector<std::uint64_t>> table(n + 1);
  for (int i = 0; i <= n; ++i) {
    table[i].resize(i + 1);
    table[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      table[i][j] = table[i - 1][j - 1] + (j <= i - 1 ? table[i - 1][j] : 0);
    }
  }
  return table;
}

std::uint64_t binom_at(const std::vector<std::vector<std::uint64_t>>& table, int n, int m) {
  if (m < 0 || m > n || n < 0) return 0;
  return table[n][m];
}

// --- pattern enumeration -----------------------------------------------------
//
// Patterns at level m are indexed t in [0, M^m * binomial(S, m)): the high
// part selects the lexicographic m-subset of the S slots, the low part is a
// base-M odometer over the entries' operator choices. Slot s covers layer
// s / N + 1, qubit s % N.

class PatternIterator {
 public:
  PatternIterator(int n_slots, int m, int kraus_count)
      : n_slots_(n_slots),
        m_(m),
        kraus_count_(kraus_count),
        table_(binomial_table(n_slots)),
        slots_(m),
        kraus_(m) {}

  void seek(std::uint64_t index) {
    std::uint64_t kraus_combos = 1;
    for (int i = 0; i < m_; ++i) kraus_combos *= kraus_count_;
    std::uint64_t comb_rank = index / kraus_combos;
    std::uint64_t kraus_rank = index % kraus_combos;
    // Lexicographic unranking of the slot subset.
    int next_slot = 0;
    for (int i = 0; i < m_; ++i) {
      int candidate = next_slot;
      for (;;) {
        const std::uint64_t block = binom_at(table_, n_slots_ - 1 - candidate, m_ - 1 - i);
        if (comb_rank < block) break;
        comb_rank -= block;
        ++candidate;
      }
      slots_[i] = candidate;
      next_slot = candidate + 1;
    }
    for (int i = 0; i < m_; ++i) {
      kraus_[i] = static_cast<int>(kraus_rank % kraus_count_);
      kraus_rank /= kraus_count_;
    }
  }

  void next() {
    for (int i = 0; i < m_; ++i) {
      if (++kraus_[i] < kraus_count_) return;
      kraus_[i] = 0;
    }
    // Odometer wrapped: advance the slot combination lexicographically.
    for (int i = m_ - 1; i >= 0; --i) {
      if (slots_[i] < n_slots_ - m_ + i) {
        ++slots_[i];
        for (int j = i + 1; j < m_; ++j) slots_[j] = slots_[j - 1] + 1;
        return;
      }
    }
  }

  const std::vector<int>& slots() const { return slots_; }
  const std::vector<int>& kraus() const { return kraus_; }

 private:
  int n_slots_;
  int m_;
  int kraus_count_;
  std::vector<std::vector<std::uint64_t>> table_;
  std::vector<int> slots_;
  std::vector<int> kraus_;
};

// --- trajectory evaluation ---------------------------------------------------

// Caches the ideal state after each round so a trajectory only recomputes
// the suffix starting at its first insertion.
class TrajectoryEvaluator {
 public:
  TrajectoryEvaluator(std::vector<double> diag, int n_qubits, AngleSchedule angles,
                      std::vector<Eigen::Matrix2cd> kraus)
      : diag_(std::move(diag)),
        n_qubits_(n_qubits),
        angles_(std::move(angles)),
        kraus_(std::move(kraus)) {
    const int depth = angles_.depth();
    prefixes_.reserve(depth + 1);
    PureState state = plus_state(n_qubits_);
    prefixes_.push_back(state.amplitudes);
    for (int k = 0; k < depth; ++k) {
      detail::apply_cost_inplace(state.amplitudes, diag_, angles_.gammas[k]);
      detail::apply_mixer_inplace(state.amplitudes, n_qubits_, angles_.betas[k]);
      prefixes_.push_back(state.amplitudes);
    }
  }

  int n_qubits() const { return n_qubits_; }
  int depth() const { return angles_.depth(); }
  int n_slots() const { return n_qubits_ * angles_.depth(); }
  const std::vector<double>& diag() const { return diag_; }
  const Eigen::VectorXcd& ideal() const { return prefixes_.back(); }

  // slots/kraus as produced by PatternIterator (slots ascending).
  void state_for_slots(const std::vector<int>& slots, const std::vector<int>& kraus,
                       Eigen::VectorXcd& out) const {
    const int depth = angles_.depth();
    const int first_layer = slots.empty() ? depth : slots.front() / n_qubits_ + 1;
    out = prefixes_[first_layer];
    std::size_t e = 0;
    for (int layer = first_layer; layer <= depth; ++layer) {
      if (layer > first_layer) {
        detail::apply_cost_inplace(out, diag_, angles_.gammas[layer - 1]);
        detail::apply_mixer_inplace(out, n_qubits_, angles_.betas[layer - 1]);
      }
      while (e < slots.size() && slots[e] / n_qubits_ + 1 == layer) {
        detail::apply_op_inplace(out, kraus_[kraus[e]], slots[e] % n_qubits_);
        ++e;
      }
    }
  }

  void state_for_pattern(const NoisePattern& pattern, Eigen::VectorXcd& out) const {
    std::vector<int> slots(pattern.entries.size());
    std::vector<int> kraus(pattern.entries.size());
    for (std::size_t i = 0; i < pattern.entries.size(); ++i) {
      slots[i] = (pattern.entries[i].layer - 1) * n_qubits_ + pattern.entries[i].qubit;
      kraus[i] = pattern.entries[i].kraus;
    }
    state_for_slots(slots, kraus, out);
  }

 private:
  std::vector<double> diag_;
  int n_qubits_;
  AngleSchedule angles_;
  std::vector<Eigen::Matrix2cd> kraus_;
  std::vector<Eigen::VectorXcd> prefixes_;  // ideal state after k rounds
};

// Draw m distinct slots (sorted) plus uniform operator indices.
void sample_pattern(Rng& rng, int n_slots, int m, int kraus_count, std::vector<int>& slots,
                    std::vector<int>& kraus, std::vector<int>& pool) {
  pool.resize(n_slots);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.integer(n_slots - i);
    std::swap(pool[i], pool[j]);
  }
  slots.assign(pool.begin(), pool.begin() + m);
  std::sort(slots.begin(), slots.end());
  kraus.resize(m);
  for (int i = 0; i < m; ++i) kraus[i] = static_cast<int>(rng.integer(kraus_count));
}

struct LevelSums {
  long double overlap = 0;
  long double cost = 0;
};

// Mean overlap^2 and cost over all (or sampled) patterns at one level.
LevelSums level_sums(const TrajectoryEvaluator& eval, int m, std::uint64_t count, bool exact,
                     std::uint64_t budget, std::uint64_t seed, int kraus_count, int jobs) {
  const std::uint64_t total = exact ? count : budget;
  auto per_chunk = [&](std::uint64_t begin, std::uint64_t end) {
    LevelSums sums;
    Eigen::VectorXcd state;
    std::vector<int> slots, kraus, pool;
    PatternIterator it(eval.n_slots(), m, kraus_count);
    if (exact) it.seek(begin);
    for (std::uint64_t t = begin; t < end; ++t) {
      if (exact) {
        if (t > begin) it.next();
        eval.state_for_slots(it.slots(), it.kraus(), state);
      } else {
        Rng rng(derive_seed(seed, 0x6d00 + m, t));
        sample_pattern(rng, eval.n_slots(), m, kraus_count, slots, kraus, pool);
        eval.state_for_slots(slots, kraus, state);
      }
      sums.overlap += std::norm(eval.ideal().dot(state));
      double cost = 0.0;
      for (std::int64_t z = 0; z < state.size(); ++z) {
        cost += std::norm(state[z]) * eval.diag()[z];
      }
      sums.cost += cost;
    }
    return sums;
  };
  return chunked_reduce<LevelSums>(total, 1024, jobs, LevelSums{}, per_chunk,
                                   [](LevelSums& acc, LevelSums part) {
                                     acc.overlap += part.overlap;
                                     acc.cost += part.cost;
                                   });
}

}  // namespace

NoisePattern make_pattern(std::vector<PatternEntry> entries, int n_qubits, int depth,
                          int kraus_count) {
  std::set<std::pair<int, int>> slots;
  for (const auto& entry : entries) {
    if (entry.layer < 1 || entry.layer > depth) {
      throw ValidationError("pattern layer " + std::to_string(entry.layer) +
                            " out of range [1, " + std::to_string(depth) + "]");
    }
    if (entry.qubit < 0 || entry.qubit >= n_qubits) {
      throw ValidationError("pattern qubit " + std::to_string(entry.qubit) + " out of range");
    }
    if (entry.kraus < 0 || entry.kraus >= kraus_count) {
      throw ValidationError("pattern Kraus index " + std::to_string(entry.kraus) +
                            " out of range");
    }
    if (!slots.insert({entry.layer, entry.qubit}).second) {
      throw ValidationError("pattern has duplicate (layer, qubit) slot");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const PatternEntry& a, const PatternEntry& b) {
    return std::tie(a.layer, a.qubit) < std::tie(b.layer, b.qubit);
  });
  return NoisePattern{std::move(entries)};
}

std::optional<std::uint64_t> pattern_count(int n_qubits, int depth, int m, int kraus_count) {
  if (n_qubits < 1 || depth < 1 || kraus_count < 1) {
    throw ValidationError("pattern_count requires n_qubits, depth, kraus_count >= 1");
  }
  const int n_slots = n_qubits * depth;
  if (m < 0 || m > n_slots) {
    throw ValidationError("m must lie in [0, N*d]");
  }
  const auto choose = checked_binomial(n_slots, m);
  if (!choose) return std::nullopt;
  const auto power = checked_power(kraus_count, m);
  if (!power) return std::nullopt;
  const unsigned __int128 total = static_cast<unsigned __int128>(*choose) * *power;
  if (total > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(total);
}

PureState trajectory_state(const IsingInstance& instance, const AngleSchedule& angles,
                           const NoiseModel& noise, const NoisePattern& pattern) {
  validate(angles);
  require_unitary_kraus(noise);
  // Re-validate: patterns may be hand-built rather than from make_pattern.
  make_pattern(pattern.entries, instance.n_qubits, angles.depth(), noise.kraus_count());

  TrajectoryEvaluator eval(diagonal(instance), instance.n_qubits, angles, noise.kraus);
  PureState state;
  state.n_qubits = instance.n_qubits;
  eval.state_for_pattern(pattern, state.amplitudes);
  return state;
}

MLevelCurves mlevel_curves(const IsingInstance& instance, const AngleSchedule& angles,
                           const NoiseModel& noise, const CurveOptions& options) {
  validate(angles);
  require_unitary_kraus(noise);
  const TrajectoryEvaluator eval(diagonal(instance), instance.n_qubits, angles, noise.kraus);
  const int n_slots = eval.n_slots();
  const int kraus_count = noise.kraus_count();

  MLevelCurves curves;
  curves.fidelity.n_slots = n_slots;
  curves.fidelity.levels.resize(n_slots + 1);
  curves.cost.n_slots = n_slots;
  curves.cost.levels.resize(n_slots + 1);

  // m = 0 is the ideal trajectory itself: overlap 1 by definition.
  double ideal_cost = 0.0;
  for (std::int64_t z = 0; z < eval.ideal().size(); ++z) {
    ideal_cost += std::norm(eval.ideal()[z]) * eval.diag()[z];
  }
  curves.fidelity.levels[0] = MLevel{1.0, 1, true};
  curves.cost.levels[0] = MLevel{ideal_cost, 1, true};

  for (int m = 1; m <= n_slots; ++m) {
    const auto count = pattern_count(instance.n_qubits, angles.depth(), m, kraus_count);
    const bool exact = count.has_value() && *count <= options.budget_per_m;
    const std::uint64_t samples = exact ? *count : options.budget_per_m;
    const LevelSums sums = level_sums(eval, m, count.value_or(0), exact, options.budget_per_m,
                                      options.seed, kraus_count, options.jobs);
    curves.fidelity.levels[m] =
        MLevel{static_cast<double>(sums.overlap / samples), samples, exact};
    curves.cost.levels[m] = MLevel{static_cast<double>(sums.cost / samples), samples, exact};
  }
  return curves;
}

MLevelCurve f_curve(const IsingInstance& instance, const AngleSchedule& angles,
                    const NoiseModel& noise, const CurveOptions& options) {
  return mlevel_curves(instance, angles, noise, options).fidelity;
}

MLevelCurve c_curve(const IsingInstance& instance, const AngleSchedule& angles,
                    const NoiseModel& noise, const CurveOptions& options) {
  return mlevel_curves(instance, angles, noise, options).cost;
}

PatternSums pattern_sums(const IsingInstance& instance, const AngleSchedule& angles,
                         const NoiseModel& noise, std::uint64_t max_terms, int jobs) {
  validate(angles);
  require_unitary_kraus(noise);
  if (instance.n_qubits > kMaxDensityQubits) {
    throw ResourceError("pattern sums capped at " + std::to_string(kMaxDensityQubits) +
                        " qubits");
  }
  const int kraus_count = noise.kraus_count();
  const int n_slots = instance.n_qubits * angles.depth();

  unsigned __int128 total = 0;
  std::vector<std::uint64_t> counts(n_slots + 1);
  for (int m = 0; m <= n_slots; ++m) {
    const auto count = pattern_count(instance.n_qubits, angles.depth(), m, kraus_count);
    if (!count || (total += *count) > max_terms) {
      throw ResourceError("pattern enumeration exceeds max_terms=" + std::to_string(max_terms));
    }
    counts[m] = *count;
  }

  const TrajectoryEvaluator eval(diagonal(instance), instance.n_qubits, angles, noise.kraus);
  const std::int64_t dim = std::int64_t{1} << instance.n_qubits;

  PatternSums sums;
  sums.n_qubits = instance.n_qubits;
  sums.n_slots = n_slots;
  sums.kraus_count = kraus_count;
  sums.per_m.resize(n_slots + 1);

  for (int m = 0; m <= n_slots; ++m) {
    auto per_chunk = [&](std::uint64_t begin, std::uint64_t end) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
      Eigen::VectorXcd state;
      PatternIterator it(n_slots, m, kraus_count);
      it.seek(begin);
      for (std::uint64_t t = begin; t < end; ++t) {
        if (t > begin) it.next();
        eval.state_for_slots(it.slots(), it.kraus(), state);
        acc.noalias() += state * state.adjoint();
      }
      return acc;
    };
    sums.per_m[m] = chunked_reduce<Eigen::MatrixXcd>(
        counts[m], 4096, jobs, Eigen::MatrixXcd::Zero(dim, dim).eval(), per_chunk,
        [](Eigen::MatrixXcd& acc, Eigen::MatrixXcd part) { acc += part; });
  }
  return sums;
}

DensityMatrix assemble_from_sums(const PatternSums& sums, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  const std::int64_t dim = std::int64_t{1} << sums.n_qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m <= sums.n_slots; ++m) {
    const double weight = std::pow(1.0 - p, sums.n_slots - m) *
                          std::pow(p / sums.kraus_count, m);
    if (weight != 0.0) rho.noalias() += weight * sums.per_m[m];
  }
  return DensityMatrix{sums.n_qubits, std::move(rho)};
}

DensityMatrix assemble_density_matrix(const IsingInstance& instance, const AngleSchedule& angles,
                                      const NoiseModel& noise, std::uint64_t max_terms,
                                      int jobs) {
  return assemble_from_sums(pattern_sums(instance, angles, noise, max_terms, jobs), noise.p);
}

namespace {

double reconstruct(const MLevelCurve& curve, double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  if (curve.levels.size() != static_cast<std::size_t>(curve.n_slots) + 1) {
    throw ValidationError("curve levels do not match n_slots");
  }
  for (const auto& level : curve.levels) {
    if (!level.exact) {
      throw ValidationError(std::string(what) + " requires an exact curve at every m");
    }
  }
  const int n = curve.n_slots;
  long double binom = 1.0L;  // binomial(n, m), updated incrementally
  long double total = 0.0L;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) binom = binom * (n - m + 1) / m;
    total += binom * std::pow(static_cast<long double>(1.0 - p), n - m) *
             std::pow(static_cast<long double>(p), m) *
             static_cast<long double>(curve.levels[m].mean);
  }
  return static_cast<double>(total);
}

}  // namespace

double reconstruct_fidelity(const MLevelCurve& curve, double p) {
  return reconstruct(curve, p, "reconstruct_fidelity");
}

double reconstruct_cost(const MLevelCurve& curve, double p) {
  return reconstruct(curve, p, "reconstruct_cost");
}

void write_curve_csv(const MLevelCurve& curve, std::ostream& out) {
  out << "m,mean,samples,exact\n";
  char buffer[64];
  for (int m = 0; m < static_cast<int>(curve.levels.size()); ++m) {
    const MLevel& level = curve.levels[m];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), level.mean);
    out << m << ',' << std::string_view(buffer, result.ptr - buffer) << ',' << level.samples
        << ',' << (level.exact ? 1 : 0) << '\n';
  }
}

void write_curve_file(const MLevelCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_curve_csv(curve, out);
}

}  // namespace qnoise

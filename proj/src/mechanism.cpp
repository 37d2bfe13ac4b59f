// Copyright 2026 The permit-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permit_games/mechanism.hpp"

#include <algorithm>
#include <map>

#include "permit_games/errors.hpp"

namespace permit_games {

namespace {

Partition singletons(std::size_t n) {
  Partition p;
  for (std::size_t i = 0; i < n; ++i) p.blocks.push_back(Coalition::singleton(i));
  return p;
}

void check_config(const LppSituation& situation, const MechanismConfig& config,
                  const RationalVector& demands) {
  check_partition(config.claimants, situation.num_firms());
  if (config.grid.size() != config.claimants.blocks.size()) {
    throw StructuralError("report grid needs one level list per claimant");
  }
  for (std::size_t k = 0; k < config.grid.size(); ++k) {
    if (config.grid[k].empty()) throw PreconditionError("report grid for a claimant is empty");
    for (const auto& level : config.grid[k]) {
      if (sgn(level) < 0) throw PreconditionError("report levels must be nonnegative");
    }
    if (std::find(config.grid[k].begin(), config.grid[k].end(), demands[k]) ==
        config.grid[k].end()) {
      throw PreconditionError("report grid for claimant " +
                              config.claimants.blocks[k].to_string() +
                              " lacks its true demand " + to_fraction_string(demands[k]));
    }
  }
}

// Payoffs recur across profiles; memoized per (claimant, allocation).
class PayoffCache {
 public:
  PayoffCache(const LppSituation& situation, const MechanismConfig& config)
      : situation_(situation), config_(config) {}

  Rational payoff(const RationalVector& reports, std::size_t claimant) {
    RationalVector allocation = mechanism_allocation(config_.rule, situation_.cap, reports);
    auto& entries = cache_[claimant];
    for (const auto& [z, v] : entries) {
      if (z == allocation[claimant]) return v;
    }
    Rational v = coalition_value(situation_, config_.claimants.blocks[claimant],
                                 allocation[claimant]);
    entries.emplace_back(allocation[claimant], v);
    return v;
  }

 private:
  const LppSituation& situation_;
  const MechanismConfig& config_;
  std::map<std::size_t, std::vector<std::pair<Rational, Rational>>> cache_;
};

}  // namespace

RationalVector true_demands(const LppSituation& situation, const Partition& claimants) {
  RationalVector out;
  for (Coalition block : claimants.blocks) out.push_back(optimal_demand(situation, block));
  return out;
}

MechanismConfig make_config(const LppSituation& situation, Rule rule, RationalVector levels,
                            std::optional<Partition> claimants) {
  MechanismConfig config;
  config.rule = rule;
  config.claimants = claimants ? *claimants : singletons(situation.num_firms());
  RationalVector demands = true_demands(situation, config.claimants);
  for (const auto& d : demands) {
    RationalVector own = levels;
    own.push_back(d);
    std::sort(own.begin(), own.end());
    own.erase(std::unique(own.begin(), own.end()), own.end());
    config.grid.push_back(std::move(own));
  }
  return config;
}

RationalVector mechanism_allocation(Rule rule, const Rational& cap, const RationalVector& reports) {
  if (sum(reports) <= cap) return reports;
  return apply_rule(rule, BankruptcyProblem{cap, reports});
}

Rational mechanism_payoff(const LppSituation& situation, const MechanismConfig& config,
                          const RationalVector& reports, std::size_t claimant) {
  if (reports.size() != config.claimants.blocks.size()) {
    throw StructuralError("report profile does not match the claimant structure");
  }
  if (claimant >= reports.size()) throw StructuralError("claimant index out of range");
  for (const auto& r : reports) {
    if (sgn(r) < 0) throw PreconditionError("reports must be nonnegative");
  }
  RationalVector allocation = mechanism_allocation(config.rule, situation.cap, reports);
  return coalition_value(situation, config.claimants.blocks[claimant], allocation[claimant]);
}

DominanceReport dominance_check(const LppSituation& situation, const MechanismConfig& config) {
  RationalVector demands = true_demands(situation, config.claimants);
  check_config(situation, config, demands);
  const std::size_t k_count = config.claimants.blocks.size();

  std::size_t cells = 0;
  for (std::size_t k = 0; k < k_count; ++k) {
    std::size_t product = config.grid[k].size();
    for (std::size_t j = 0; j < k_count; ++j) {
      if (j == k) continue;
      if (product > config.profile_limit / config.grid[j].size() + 1) {
        throw SizeLimitError("report grid exceeds the profile limit of " +
                             std::to_string(config.profile_limit));
      }
      product *= config.grid[j].size();
    }
    cells += product;
    if (cells > config.profile_limit) {
      throw SizeLimitError("report grid has more than " + std::to_string(config.profile_limit) +
                           " cells");
    }
  }

  PayoffCache cache(situation, config);
  DominanceReport report;
  for (std::size_t k = 0; k < k_count; ++k) {
    std::vector<std::size_t> odometer(k_count, 0);
    while (true) {
      RationalVector profile(k_count);
      for (std::size_t j = 0; j < k_count; ++j) {
        profile[j] = j == k ? demands[k] : config.grid[j][odometer[j]];
      }
      Rational truthful = cache.payoff(profile, k);
      for (const auto& level : config.grid[k]) {
        ++report.cells_checked;
        RationalVector deviated = profile;
        deviated[k] = level;
        Rational payoff = cache.payoff(deviated, k);
        if (payoff > truthful) {
          report.truthful_dominant = false;
          report.counterexample = Deviation{k, profile, level, truthful, payoff};
          return report;
        }
      }
      std::size_t j = 0;
      for (; j < k_count; ++j) {
        if (j == k) continue;
        if (++odometer[j] < config.grid[j].size()) break;
        odometer[j] = 0;
      }
      if (j == k_count) break;
    }
  }
  return report;
}

EquilibriumReport equilibrium_check(const LppSituation& situation, const MechanismConfig& config,
                                    const RationalVector& profile) {
  RationalVector demands = true_demands(situation, config.claimants);
  check_config(situation, config, demands);
  if (profile.size() != config.claimants.blocks.size()) {
    throw StructuralError("report profile does not match the claimant structure");
  }
  PayoffCache cache(situation, config);
  EquilibriumReport report;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    Rational current = cache.payoff(profile, k);
    for (const auto& level : config.grid[k]) {
      RationalVector deviated = profile;
      deviated[k] = level;
      Rational payoff = cache.payoff(deviated, k);
      if (payoff > current) {
        report.equilibrium = false;
        report.deviation = Deviation{k, profile, level, current, payoff};
        return report;
      }
    }
  }
  return report;
}

}  // namespace permit_games

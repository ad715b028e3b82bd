// Copyright 2026 The kkmds Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kkmds/graph.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

// Literals are signed 1-based variable indices: +v is t_v, -v its negation.
using Literal = int;
using Clause = std::vector<Literal>;

struct SatInstance {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const SatInstance&, const SatInstance&) = default;
};

// Text form:
//   c comment
//   p aeq <vars> <clauses>
//   1 -2 3 0
// One clause per line; the trailing 0 is optional.
SatInstance parse_sat(std::string_view text);
std::string format_sat(const SatInstance& inst);

Clause complement(const Clause& c);

// Clauses whose literals all evaluate to the same value.
std::size_t all_equal_count(const SatInstance& inst, const std::vector<bool>& assignment);

// Clause multiset equals its image under complementation.
bool is_balanced(const SatInstance& inst);

struct RegularityCheck {
  bool exactly_three = true;
  bool distinct_variables = true;
  bool occurrence_six = true;  // every variable in exactly six clauses
  bool balanced = true;
  std::string failure;  // first violated check, empty when all pass

  bool ok() const { return failure.empty(); }
};

RegularityCheck check_regular(const SatInstance& inst);

// Pads clauses to three literals with fresh variables, triplicates every
// clause, replaces each variable occurrence by its own copy tied together by
// a ring of all-equal clauses, and appends the complement of every clause.
// Instances that already pass check_regular are returned unchanged.
SatInstance regularize(const SatInstance& inst);

struct GadgetParams {
  std::size_t nv = 16;  // anchor clique
  std::size_t nt = 4;   // per literal
  std::size_t nc = 2;   // per clause

  void validate() const;
};

enum class Role : std::uint8_t { anchor = 0, literal = 1, clause = 2 };

struct VertexRole {
  Role role = Role::anchor;
  std::size_t index = 0;  // literal slot 2(v-1) + negated, or clause index
};

// Vertex order: anchor clique, then one clique per literal slot, then one
// clique per clause.
struct Gadget {
  Graph graph;
  std::vector<VertexRole> roles;
};

std::size_t literal_slot(Literal lit);

// All pairs are edges except literal t vs literal not-t and literal t vs a
// clause containing t. The instance must be balanced.
Gadget build_reduction_graph(const SatInstance& inst, const GadgetParams& p);

struct GadgetCheck {
  std::size_t expected_vertices = 0;
  std::size_t vertices = 0;
  std::size_t missing_non_edges = 0;  // expected non-edges present as edges
  std::size_t extra_non_edges = 0;    // edges absent that should be present
  double diameter = 0.0;
  std::string failure;

  bool ok() const { return failure.empty(); }
  std::string to_json() const;
};

// Recomputes the expected non-edge set from the instance and compares.
GadgetCheck verify_gadget(const Graph& g, const SatInstance& inst, const GadgetParams& p);

struct GoodLayout {
  Layout layout;  // 1-D
  double stress = 0.0;
};

// The 1-D layout built from a truth assignment: anchor clique in the middle,
// true literals right, false literals left, clauses on the side opposite the
// majority of their literals. Coordinates follow y_i = (2i - (n + 1)) / n
// with per-group offsets.
GoodLayout assignment_to_layout(const SatInstance& inst, const std::vector<bool>& assignment, const GadgetParams& p);

// ceil((n-1)(n-2)/6 - l Nt^2 - 2(2m + p) Nt Nc + 200 m^2 Nc^2) for 2m clauses
// of which 2p are all-equal.
double gap_threshold(const SatInstance& inst, const GadgetParams& p, std::size_t all_equal);

struct ProbeRow {
  std::vector<bool> assignment;
  std::size_t all_equal = 0;
  double initial_stress = 0.0;
  double refined_stress = 0.0;
  double threshold = 0.0;
};

struct ProbeReport {
  std::size_t vertices = 0;
  std::vector<ProbeRow> rows;
  std::optional<double> spearman;  // all_equal vs -refined_stress
  bool consistent = true;          // more all-equal clauses never costs more stress

  std::string to_json() const;
};

struct ProbeOptions {
  std::size_t trials = 1024;  // all 2^l assignments when 2^l <= trials
  std::uint64_t seed = 0;
  std::size_t refine_steps = 500;
  double lr = 0.005;
};

inline constexpr std::size_t kProbeVertexLimit = 400;

ProbeReport gap_probe(const SatInstance& inst, const GadgetParams& p, const ProbeOptions& opt = {});

// Pearson correlation of average ranks; nullopt when either side is constant.
std::optional<double> spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace kkmds

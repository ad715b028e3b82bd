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

#include "kkmds/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kkmds/baselines.hpp"
#include "kkmds/error.hpp"
#include "kkmds/random.hpp"
#include "text.hpp"

namespace kkmds {

namespace {

std::size_t var_of(Literal lit) { return static_cast<std::size_t>(std::abs(lit)); }

bool literal_value(Literal lit, const std::vector<bool>& assignment) {
  const bool v = assignment[var_of(lit) - 1];
  return lit > 0 ? v : !v;
}

Clause sorted_clause(Clause c) {
  std::sort(c.begin(), c.end());
  return c;
}

void check_assignment(const SatInstance& inst, const std::vector<bool>& assignment) {
  if (assignment.size() != inst.num_vars)
    throw_parameter("assignment has " + std::to_string(assignment.size()) + " values for " +
                    std::to_string(inst.num_vars) + " variables");
}

}  // namespace

SatInstance parse_sat(std::string_view text) {
  using namespace kkmds::text;
  SatInstance inst;
  std::optional<std::size_t> declared_clauses;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (is_blank_or_comment(lines[li])) continue;
    const auto tokens = split_ws(lines[li]);
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (declared_clauses) throw_parse("second header at line " + std::to_string(line_no));
      if (tokens.size() != 4 || tokens[1] != "aeq")
        throw_parse("expected 'p aeq <vars> <clauses>' at line " + std::to_string(line_no));
      const auto vars = parse_int(tokens[2], line_no);
      const auto clauses = parse_int(tokens[3], line_no);
      if (vars < 0 || clauses < 0) throw_parse("negative count in header at line " + std::to_string(line_no));
      inst.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!declared_clauses) throw_parse("clause before header at line " + std::to_string(line_no));
    Clause c;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const auto lit = parse_int(tokens[t], line_no);
      if (lit == 0) {
        if (t + 1 != tokens.size()) throw_parse("literal after terminating 0 at line " + std::to_string(line_no));
        break;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > inst.num_vars)
        throw_parse("variable " + std::to_string(std::llabs(lit)) + " out of range at line " + std::to_string(line_no));
      c.push_back(static_cast<Literal>(lit));
    }
    if (c.empty()) throw_parse("empty clause at line " + std::to_string(line_no));
    inst.clauses.push_back(std::move(c));
  }
  if (!declared_clauses) throw_parse("missing 'p aeq' header");
  if (*declared_clauses != inst.clauses.size())
    throw_parse("header declares " + std::to_string(*declared_clauses) + " clauses but " +
                std::to_string(inst.clauses.size()) + " were read");
  return inst;
}

std::string format_sat(const SatInstance& inst) {
  std::ostringstream out;
  out << "p aeq " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const auto& c : inst.clauses) {
    for (Literal l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

Clause complement(const Clause& c) {
  Clause out(c.size());
  std::transform(c.begin(), c.end(), out.begin(), [](Literal l) { return -l; });
  return out;
}

std::size_t all_equal_count(const SatInstance& inst, const std::vector<bool>& assignment) {
  check_assignment(inst, assignment);
  std::size_t count = 0;
  for (const auto& c : inst.clauses) {
    bool equal = true;
    for (Literal l : c) equal = equal && literal_value(l, assignment) == literal_value(c.front(), assignment);
    if (equal) ++count;
  }
  return count;
}

bool is_balanced(const SatInstance& inst) {
  std::map<Clause, long> count;
  for (const auto& c : inst.clauses) {
    ++count[sorted_clause(c)];
    --count[sorted_clause(complement(c))];
  }
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 0; });
}

RegularityCheck check_regular(const SatInstance& inst) {
  RegularityCheck r;
  std::vector<std::size_t> occurrences(inst.num_vars + 1, 0);
  for (std::size_t ci = 0; ci < inst.clauses.size(); ++ci) {
    const auto& c = inst.clauses[ci];
    if (c.size() != 3 && r.exactly_three) {
      r.exactly_three = false;
      if (r.failure.empty()) r.failure = "clause " + std::to_string(ci) + " does not have exactly 3 literals";
    }
    std::set<std::size_t> vars;
    for (Literal l : c) {
      if (!vars.insert(var_of(l)).second && r.distinct_variables) {
        r.distinct_variables = false;
        if (r.failure.empty()) r.failure = "clause " + std::to_string(ci) + " repeats variable " + std::to_string(var_of(l));
      }
      ++occurrences[var_of(l)];
    }
  }
  for (std::size_t v = 1; v <= inst.num_vars; ++v) {
    if (occurrences[v] != 6) {
      r.occurrence_six = false;
      if (r.failure.empty())
        r.failure = "variable " + std::to_string(v) + " occurs " + std::to_string(occurrences[v]) + " times, expected 6";
      break;
    }
  }
  if (!is_balanced(inst)) {
    r.balanced = false;
    if (r.failure.empty()) r.failure = "clause multiset is not closed under complement";
  }
  return r;
}

SatInstance regularize(const SatInstance& inst) {
  for (std::size_t ci = 0; ci < inst.clauses.size(); ++ci)
    if (inst.clauses[ci].size() > 3)
      throw_parameter("clause " + std::to_string(ci) + " has " + std::to_string(inst.clauses[ci].size()) +
                      " literals; at most 3 are supported");
  if (inst.clauses.empty()) return SatInstance{};
  if (check_regular(inst).ok()) return inst;

  std::size_t vars = inst.num_vars;
  std::vector<Clause> padded;
  padded.reserve(inst.clauses.size());
  for (const auto& c : inst.clauses) {
    Clause p = c;
    while (p.size() < 3) p.push_back(static_cast<Literal>(++vars));
    padded.push_back(std::move(p));
  }

  std::vector<Clause> tripled;
  tripled.reserve(3 * padded.size());
  for (const auto& c : padded)
    for (int rep = 0; rep < 3; ++rep) tripled.push_back(c);

  // Occurrence lists per variable in clause order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occ(vars + 1);
  for (std::size_t ci = 0; ci < tripled.size(); ++ci)
    for (std::size_t s = 0; s < tripled[ci].size(); ++s) occ[var_of(tripled[ci][s])].emplace_back(ci, s);

  SatInstance out;
  std::vector<Clause> rings;
  std::size_t next = 0;
  for (std::size_t v = 1; v <= vars; ++v) {
    const auto& list = occ[v];
    if (list.empty()) continue;
    std::vector<Literal> copies(list.size());
    for (std::size_t j = 0; j < list.size(); ++j) {
      copies[j] = static_cast<Literal>(++next);
      auto [ci, s] = list[j];
      tripled[ci][s] = tripled[ci][s] > 0 ? copies[j] : -copies[j];
    }
    const std::size_t d = list.size();
    for (std::size_t j = 0; j + 2 < d; j += 3) {
      rings.push_back({copies[j], copies[j + 1], copies[j + 2]});
      rings.push_back({copies[j + 1], copies[j + 2], copies[(j + 3) % d]});
    }
  }
  out.num_vars = next;
  out.clauses = std::move(tripled);
  out.clauses.insert(out.clauses.end(), rings.begin(), rings.end());
  const std::size_t base = out.clauses.size();
  for (std::size_t ci = 0; ci < base; ++ci) out.clauses.push_back(complement(out.clauses[ci]));
  return out;
}

void GadgetParams::validate() const {
  if (!(nv >= nt && nt >= nc && nc >= 1))
    throw_parameter("gadget sizes must satisfy Nv >= Nt >= Nc >= 1 (got " + std::to_string(nv) + ", " +
                    std::to_string(nt) + ", " + std::to_string(nc) + ")");
}

std::size_t literal_slot(Literal lit) { return 2 * (var_of(lit) - 1) + (lit < 0 ? 1 : 0); }

namespace {

struct Offsets {
  std::size_t literal_base;
  std::size_t clause_base;
  std::size_t total;
};

Offsets offsets(const SatInstance& inst, const GadgetParams& p) {
  const std::size_t lit = p.nv;
  const std::size_t cl = lit + 2 * inst.num_vars * p.nt;
  return {lit, cl, cl + inst.clauses.size() * p.nc};
}

void check_literals(const SatInstance& inst) {
  for (const auto& c : inst.clauses)
    for (Literal l : c)
      if (l == 0 || var_of(l) > inst.num_vars) throw_parameter("literal " + std::to_string(l) + " out of range");
}

}  // namespace

Gadget build_reduction_graph(const SatInstance& inst, const GadgetParams& p) {
  p.validate();
  check_literals(inst);
  if (!is_balanced(inst)) throw_parameter("reduction graph needs a balanced instance");
  const Offsets off = offsets(inst, p);

  Gadget g;
  g.roles.resize(off.total);
  for (std::size_t s = 0; s < 2 * inst.num_vars; ++s)
    for (std::size_t i = 0; i < p.nt; ++i) g.roles[off.literal_base + s * p.nt + i] = {Role::literal, s};
  for (std::size_t c = 0; c < inst.clauses.size(); ++c)
    for (std::size_t i = 0; i < p.nc; ++i) g.roles[off.clause_base + c * p.nc + i] = {Role::clause, c};

  // Clause membership per literal slot.
  std::vector<std::vector<char>> in_clause(2 * inst.num_vars, std::vector<char>(inst.clauses.size(), 0));
  for (std::size_t c = 0; c < inst.clauses.size(); ++c)
    for (Literal l : inst.clauses[c]) in_clause[literal_slot(l)][c] = 1;

  auto joined = [&](const VertexRole& a, const VertexRole& b) {
    if (a.role == Role::literal && b.role == Role::literal) return (a.index ^ 1u) != b.index;
    if (a.role == Role::literal && b.role == Role::clause) return !in_clause[a.index][b.index];
    if (a.role == Role::clause && b.role == Role::literal) return !in_clause[b.index][a.index];
    return true;
  };

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < off.total; ++u)
    for (std::size_t v = u + 1; v < off.total; ++v)
      if (joined(g.roles[u], g.roles[v])) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  g.graph = Graph(off.total, std::move(edges));
  std::vector<int> labels(off.total);
  for (std::size_t v = 0; v < off.total; ++v) labels[v] = static_cast<int>(g.roles[v].role);
  g.graph.set_labels(std::move(labels));
  return g;
}

GadgetCheck verify_gadget(const Graph& g, const SatInstance& inst, const GadgetParams& p) {
  p.validate();
  check_literals(inst);
  const Offsets off = offsets(inst, p);
  GadgetCheck r;
  r.expected_vertices = off.total;
  r.vertices = g.vertex_count();
  if (r.vertices != r.expected_vertices) {
    r.failure = "vertex count " + std::to_string(r.vertices) + " differs from expected " +
                std::to_string(r.expected_vertices);
    return r;
  }

  // Expected non-edges, enumerated clique pair by clique pair.
  std::set<Edge> expected;
  auto add_block = [&](std::size_t a0, std::size_t na, std::size_t b0, std::size_t nb) {
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        auto u = static_cast<Vertex>(a0 + i), v = static_cast<Vertex>(b0 + j);
        expected.insert({std::min(u, v), std::max(u, v)});
      }
  };
  for (std::size_t var = 1; var <= inst.num_vars; ++var)
    add_block(off.literal_base + 2 * (var - 1) * p.nt, p.nt, off.literal_base + (2 * (var - 1) + 1) * p.nt, p.nt);
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    std::set<std::size_t> slots;
    for (Literal l : inst.clauses[c]) slots.insert(literal_slot(l));
    for (std::size_t s : slots) add_block(off.literal_base + s * p.nt, p.nt, off.clause_base + c * p.nc, p.nc);
  }

  std::set<Edge> present(g.edges().begin(), g.edges().end());
  for (const Edge& e : expected)
    if (present.count(e)) ++r.missing_non_edges;
  const std::size_t n = off.total;
  const std::size_t all_pairs = n * (n - 1) / 2;
  const std::size_t absent = all_pairs - present.size();
  r.extra_non_edges = absent - (expected.size() - r.missing_non_edges);
  if (r.missing_non_edges > 0) {
    r.failure = std::to_string(r.missing_non_edges) + " pairs that must be non-adjacent are joined";
    return r;
  }
  if (r.extra_non_edges > 0) {
    r.failure = std::to_string(r.extra_non_edges) + " pairs that must be adjacent are not joined";
    return r;
  }
  if (!is_connected(g)) {
    r.failure = "graph is disconnected";
    return r;
  }
  r.diameter = apsp(g).diameter();
  const bool has_literals = inst.num_vars > 0;
  if (has_literals && r.diameter != 2.0) r.failure = "diameter is " + std::to_string(r.diameter) + ", expected 2";
  return r;
}

std::string GadgetCheck::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["ok"] = ok();
  j["vertices"] = vertices;
  j["expected_vertices"] = expected_vertices;
  j["missing_non_edges"] = missing_non_edges;
  j["extra_non_edges"] = extra_non_edges;
  j["diameter"] = diameter;
  j["failure"] = failure.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(failure);
  return j.dump(2) + "\n";
}

GoodLayout assignment_to_layout(const SatInstance& inst, const std::vector<bool>& assignment, const GadgetParams& p) {
  p.validate();
  check_literals(inst);
  check_assignment(inst, assignment);
  const Offsets off = offsets(inst, p);
  const std::size_t n = off.total;
  const std::size_t slots = 2 * inst.num_vars;

  auto slot_true = [&](std::size_t s) { return assignment[s / 2] != (s % 2 == 1); };

  // Side per clause: -1 unless a strict majority of its literals is false.
  // Groups: 1 all true, 2 rest of the -1 side, 6 rest of the +1 side, 7 all false.
  std::vector<int> clause_group(inst.clauses.size());
  std::vector<int> clause_side(inst.clauses.size());
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    std::size_t trues = 0;
    for (Literal l : inst.clauses[c]) trues += literal_value(l, assignment) ? 1 : 0;
    const std::size_t size = inst.clauses[c].size();
    const bool plus = 2 * (size - trues) > size;
    clause_side[c] = plus ? 1 : -1;
    clause_group[c] = plus ? (trues == 0 ? 7 : 6) : (trues == size ? 1 : 2);
  }

  // phi per literal slot: clauses containing it that sit on the literal's side.
  std::vector<std::size_t> phi(slots, 0), occurrences(slots, 0);
  for (std::size_t c = 0; c < inst.clauses.size(); ++c)
    for (Literal l : inst.clauses[c]) {
      const std::size_t s = literal_slot(l);
      ++occurrences[s];
      if (clause_side[c] == (slot_true(s) ? 1 : -1)) ++phi[s];
    }
  const std::size_t k = slots == 0 ? 0 : *std::max_element(occurrences.begin(), occurrences.end());

  const double nn = static_cast<double>(n);
  const double nt = static_cast<double>(p.nt);
  const double nc = static_cast<double>(p.nc);

  struct Block {
    std::size_t first;
    std::size_t size;
    double offset;
  };
  std::vector<Block> order;
  auto push_clauses = [&](int group, double offset) {
    for (std::size_t c = 0; c < inst.clauses.size(); ++c)
      if (clause_group[c] == group) order.push_back({off.clause_base + c * p.nc, p.nc, offset});
  };
  auto literal_offset = [&](std::size_t f) { return (nt + (static_cast<double>(k) - static_cast<double>(f) / 2.0) * nc) / nn; };

  push_clauses(1, -3.0 * nt / nn);
  push_clauses(2, -3.0 * nt / (2.0 * nn));
  for (std::size_t f = 0; f <= k; ++f)
    for (std::size_t s = 0; s < slots; ++s)
      if (!slot_true(s) && phi[s] == f) order.push_back({off.literal_base + s * p.nt, p.nt, -literal_offset(f)});
  order.push_back({0, p.nv, 0.0});
  for (std::size_t f = k + 1; f-- > 0;)
    for (std::size_t s = 0; s < slots; ++s)
      if (slot_true(s) && phi[s] == f) order.push_back({off.literal_base + s * p.nt, p.nt, literal_offset(f)});
  push_clauses(6, 3.0 * nt / (2.0 * nn));
  push_clauses(7, 3.0 * nt / nn);

  GoodLayout out{Layout(n, 1), 0.0};
  std::size_t rank = 0;
  for (const Block& b : order)
    for (std::size_t i = 0; i < b.size; ++i) {
      ++rank;
      const double y = (2.0 * static_cast<double>(rank) - (nn + 1.0)) / nn;
      out.layout(b.first + i, 0) = y + b.offset;
    }
  if (rank != n) throw_invariant("good layout placed " + std::to_string(rank) + " of " + std::to_string(n) + " vertices");
  out.stress = stress(out.layout, apsp(build_reduction_graph(inst, p).graph));
  return out;
}

double gap_threshold(const SatInstance& inst, const GadgetParams& p, std::size_t all_equal) {
  const double n = static_cast<double>(offsets(inst, p).total);
  const double l = static_cast<double>(inst.num_vars);
  const double m = static_cast<double>(inst.clauses.size()) / 2.0;
  const double pp = static_cast<double>(all_equal) / 2.0;
  const double nt = static_cast<double>(p.nt);
  const double nc = static_cast<double>(p.nc);
  return std::ceil((n - 1.0) * (n - 2.0) / 6.0 - l * nt * nt - 2.0 * (2.0 * m + pp) * nt * nc + 200.0 * m * m * nc * nc);
}

std::optional<double> spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw_parameter("spearman inputs differ in length");
  const std::size_t n = a.size();
  if (n < 2) return std::nullopt;
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t t = i; t <= j; ++t) r[idx[t]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / static_cast<double>(n);
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  return sab / std::sqrt(saa * sbb);
}

ProbeReport gap_probe(const SatInstance& inst, const GadgetParams& p, const ProbeOptions& opt) {
  p.validate();
  check_literals(inst);
  ProbeReport report;
  report.vertices = offsets(inst, p).total;
  if (report.vertices > kProbeVertexLimit)
    throw_resource("gadget has " + std::to_string(report.vertices) + " vertices; probes are capped at " +
                   std::to_string(kProbeVertexLimit));
  if (opt.trials == 0) return report;

  const Gadget gadget = build_reduction_graph(inst, p);
  const DistanceMatrix d = apsp(gadget.graph);
  const std::size_t l = inst.num_vars;

  std::vector<std::vector<bool>> assignments;
  if (l < 63 && (std::uint64_t{1} << l) <= opt.trials) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
      std::vector<bool> a(l);
      for (std::size_t v = 0; v < l; ++v) a[v] = (mask >> v) & 1u;
      assignments.push_back(std::move(a));
    }
  } else {
    Rng rng(opt.seed);
    for (std::size_t t = 0; t < opt.trials; ++t) {
      std::vector<bool> a(l);
      for (std::size_t v = 0; v < l; ++v) a[v] = rng.below(2) == 1;
      assignments.push_back(std::move(a));
    }
  }

  GdParams gd;
  gd.lr = opt.lr;
  gd.steps = opt.refine_steps;
  gd.trace_every = 0;
  std::vector<double> counts, neg_stress;
  for (auto& a : assignments) {
    ProbeRow row;
    row.all_equal = all_equal_count(inst, a);
    GoodLayout good = assignment_to_layout(inst, a, p);
    row.initial_stress = good.stress;
    gd.init = std::move(good.layout);
    row.refined_stress = gradient_descent(d, 1, gd).stress;
    row.threshold = gap_threshold(inst, p, row.all_equal);
    row.assignment = std::move(a);
    counts.push_back(static_cast<double>(row.all_equal));
    neg_stress.push_back(-row.refined_stress);
    report.rows.push_back(std::move(row));
  }
  report.spearman = spearman(counts, neg_stress);
  for (const auto& x : report.rows)
    for (const auto& y : report.rows)
      if (x.all_equal > y.all_equal && x.refined_stress >= y.refined_stress) report.consistent = false;
  return report;
}

std::string ProbeReport::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["vertices"] = vertices;
  j["spearman"] = spearman ? nlohmann::ordered_json(*spearman) : nlohmann::ordered_json();
  j["consistent"] = consistent;
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    std::string bits;
    for (bool b : r.assignment) bits += b ? '1' : '0';
    rows_json.push_back({{"assignment", bits},
                         {"all_equal", r.all_equal},
                         {"initial_stress", r.initial_stress},
                         {"refined_stress", r.refined_stress},
                         {"threshold", r.threshold}});
  }
  j["rows"] = rows_json;
  return j.dump(2) + "\n";
}

}  // namespace kkmds

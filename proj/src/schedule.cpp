// Copyright 2026 The planesched Authors
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


#include "planesched/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "planesched/error.hpp"
#include "planesched/graphcheck.hpp"
#include "planesched/parallel.hpp"

namespace planesched {

using circuits::Gate;
using circuits::GateName;
using circuits::MeasCircuit;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "planesched-schedule";
constexpr int kVersion = 1;

const char* kind_name(plane::PointKind k) {
  switch (k) {
    case plane::PointKind::kAlpha: return "alpha";
    case plane::PointKind::kBeta: return "beta";
    case plane::PointKind::kGamma: return "gamma";
  }
  return "?";
}

plane::PointKind parse_kind(const std::string& s) {
  if (s == "alpha") return plane::PointKind::kAlpha;
  if (s == "beta") return plane::PointKind::kBeta;
  if (s == "gamma") return plane::PointKind::kGamma;
  fail(ErrorCode::kParse, "unknown point kind '" + s + "'");
}

json op_json(const HoppingOp& op) { return json::array({to_string(op.spin), op.p, op.q}); }

HoppingOp parse_op(const json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorCode::kParse, "op must be [spin, p, q]");
  return HoppingOp(j.at(1).get<int>(), j.at(2).get<int>(), parse_spin(j.at(0).get<std::string>()));
}

json matrix_json(const pauli::DenseMatrix& m) {
  json rows = json::array();
  for (const auto& v : m.data) rows.push_back(json::array({v.real(), v.imag()}));
  return rows;
}

pauli::DenseMatrix parse_matrix(const json& j, int qubits) {
  pauli::DenseMatrix m(qubits);
  if (!j.is_array() || j.size() != m.data.size()) {
    fail(ErrorCode::kParse, "gate matrix has the wrong number of entries");
  }
  for (std::size_t k = 0; k < m.data.size(); ++k) {
    m.data[k] = {j[k].at(0).get<double>(), j[k].at(1).get<double>()};
  }
  return m;
}

json network_json(const swapnet::SwapNetwork& net) {
  json layers = json::array();
  for (const auto& l : net.layers) {
    layers.push_back({{"parity", l.parity == swapnet::LayerParity::kOdd ? "odd" : "even"},
                      {"swaps", l.swaps}});
  }
  return {{"layers", layers}, {"permutation", net.permutation}};
}

swapnet::SwapNetwork parse_network(const json& j) {
  swapnet::SwapNetwork net;
  for (const auto& l : j.at("layers")) {
    swapnet::SwapLayer layer;
    const auto parity = l.at("parity").get<std::string>();
    if (parity != "odd" && parity != "even") fail(ErrorCode::kParse, "bad layer parity");
    layer.parity = parity == "odd" ? swapnet::LayerParity::kOdd : swapnet::LayerParity::kEven;
    layer.swaps = l.at("swaps").get<std::vector<int>>();
    net.layers.push_back(std::move(layer));
  }
  net.permutation = j.at("permutation").get<std::vector<int>>();
  return net;
}

json clique_json(const MeasurementClique& c, const MeasCircuit& circ) {
  json ops = json::array();
  for (const auto& op : c.ops) ops.push_back(op_json(op));
  json source = {{"rounds", c.source.rounds}, {"anchor", nullptr}};
  if (c.source.anchor) {
    const auto& a = *c.source.anchor;
    source["anchor"] = {{"kind", kind_name(a.kind)}, {"x", a.x}, {"y", a.y}};
  }
  json gates = json::array();
  for (const auto& g : circ.gates) {
    json gj = {{"name", circuits::to_string(g.name)}, {"qubits", g.qubits}};
    if (g.matrix) gj["matrix"] = matrix_json(*g.matrix);
    gates.push_back(std::move(gj));
  }
  json decode = json::array();
  for (const auto& d : circ.decode) {
    decode.push_back({{"op", op_json(d.op)}, {"qubits", d.qubits}, {"table", d.table}});
  }
  return {{"id", c.id},
          {"family", to_string(c.family)},
          {"degenerate", c.degenerate},
          {"source", source},
          {"ops", ops},
          {"depth", circ.depth},
          {"swap_depth", circ.swap_depth},
          {"networks", {{"up", network_json(circ.networks[0])},
                        {"down", network_json(circ.networks[1])}}},
          {"gates", gates},
          {"decode", decode}};
}

}  // namespace

int Schedule::route(const TermKey& term) const {
  const auto it = std::lower_bound(routing.begin(), routing.end(), term,
                                   [](const RoutedTerm& r, const TermKey& t) { return r.term < t; });
  if (it == routing.end() || it->term != term) return -1;
  return it->clique;
}

Schedule build_schedule(int n, circuits::Mapping mapping) {
  const Universe universe = build_universe(n);
  Schedule s;
  s.n_orbitals = n;
  s.mapping = mapping;
  s.prime = static_cast<int>(universe.prime().value());
  s.round_count = universe.round_count();
  s.cliques = universe.cliques();
  s.circuits.resize(s.cliques.size());
  parallel_for(s.cliques.size(), [&](std::size_t i) {
    s.circuits[i] = circuits::emit(s.cliques[i], mapping, n);
  });
  for (const auto& t : classify_terms(n)) s.routing.push_back({t, universe.route(t)});
  std::sort(s.routing.begin(), s.routing.end(),
            [](const RoutedTerm& a, const RoutedTerm& b) { return a.term < b.term; });
  return s;
}

std::string schedule_to_json(const Schedule& s) {
  if (s.circuits.size() != s.cliques.size()) {
    fail(ErrorCode::kInternalConsistency, "schedule has a circuit count mismatch");
  }
  json cliques = json::array();
  for (std::size_t i = 0; i < s.cliques.size(); ++i) {
    cliques.push_back(clique_json(s.cliques[i], s.circuits[i]));
  }
  json terms = json::array();
  for (const auto& r : s.routing) {
    json ops = json::array();
    for (const auto& op : r.term.ops()) ops.push_back(op_json(op));
    terms.push_back({{"type", type_label(r.term.type())}, {"ops", ops}, {"clique", r.clique}});
  }
  const json root = {{"format", kFormat},
                     {"version", kVersion},
                     {"n_orbitals", s.n_orbitals},
                     {"mapping", circuits::to_string(s.mapping)},
                     {"prime", s.prime},
                     {"round_count", s.round_count},
                     {"qubits", s.qubits()},
                     {"cliques", cliques},
                     {"terms", terms}};
  return root.dump(1) + "\n";
}

Schedule parse_schedule(const std::string& text) {
  Schedule s;
  std::string where = "document";
  try {
    const json root = json::parse(text);
    if (root.at("format").get<std::string>() != kFormat) {
      fail(ErrorCode::kParse, "not a schedule file");
    }
    if (root.at("version").get<int>() != kVersion) fail(ErrorCode::kParse, "unsupported version");
    s.n_orbitals = root.at("n_orbitals").get<int>();
    if (s.n_orbitals < 2) fail(ErrorCode::kParse, "n_orbitals must be at least 2");
    s.mapping = circuits::parse_mapping(root.at("mapping").get<std::string>());
    s.prime = root.at("prime").get<int>();
    s.round_count = root.at("round_count").get<int>();

    for (const auto& cj : root.at("cliques")) {
      where = "clique " + std::to_string(s.cliques.size());
      MeasurementClique c;
      c.id = cj.at("id").get<int>();
      c.family = parse_family(cj.at("family").get<std::string>());
      c.degenerate = cj.at("degenerate").get<bool>();
      c.source.rounds = cj.at("source").at("rounds").get<std::vector<int>>();
      const auto& anchor = cj.at("source").at("anchor");
      if (!anchor.is_null()) {
        c.source.anchor = plane::Point{parse_kind(anchor.at("kind").get<std::string>()),
                                       anchor.at("x").get<int>(), anchor.at("y").get<int>()};
      }
      for (const auto& oj : cj.at("ops")) c.ops.push_back(parse_op(oj));

      MeasCircuit circ;
      circ.mapping = s.mapping;
      circ.n_orbitals = s.n_orbitals;
      circ.depth = cj.at("depth").get<int>();
      circ.swap_depth = cj.at("swap_depth").get<int>();
      circ.networks[0] = parse_network(cj.at("networks").at("up"));
      circ.networks[1] = parse_network(cj.at("networks").at("down"));
      for (const auto& gj : cj.at("gates")) {
        Gate g;
        g.name = circuits::parse_gate_name(gj.at("name").get<std::string>());
        g.qubits = gj.at("qubits").get<std::vector<int>>();
        if (gj.contains("matrix")) {
          g.matrix = parse_matrix(gj.at("matrix"), static_cast<int>(g.qubits.size()));
        }
        circ.gates.push_back(std::move(g));
      }
      for (const auto& dj : cj.at("decode")) {
        circ.decode.push_back({parse_op(dj.at("op")), dj.at("qubits").get<std::vector<int>>(),
                               dj.at("table").get<std::vector<int>>()});
      }
      s.cliques.push_back(std::move(c));
      s.circuits.push_back(std::move(circ));
    }

    where = "terms";
    for (const auto& tj : root.at("terms")) {
      const auto& ops = tj.at("ops");
      TermKey key = ops.size() == 1 ? TermKey::one_body(parse_op(ops.at(0)))
                                    : TermKey::two_body(parse_op(ops.at(0)), parse_op(ops.at(1)));
      s.routing.push_back({key, tj.at("clique").get<int>()});
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, "schedule " + where + ": " + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    fail(ErrorCode::kParse, "schedule " + where + ": " + e.what());
  }
  std::sort(s.routing.begin(), s.routing.end(),
            [](const RoutedTerm& a, const RoutedTerm& b) { return a.term < b.term; });
  return s;
}

void write_schedule(const Schedule& schedule, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << schedule_to_json(schedule);
  if (!out) fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

Schedule load_schedule(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_schedule(buf.str());
}

ScheduleStats compute_stats(const Schedule& s) {
  ScheduleStats st;
  st.n_orbitals = s.n_orbitals;
  st.mapping = circuits::to_string(s.mapping);
  st.prime = s.prime;
  st.qubits = s.qubits();
  st.total = static_cast<int>(s.cliques.size());
  st.formula = formula_clique_count(s.n_orbitals);
  st.lower_bound = graphcheck::lower_bound(s.n_orbitals);
  st.terms = static_cast<int>(s.routing.size());
  for (const auto& c : s.cliques) {
    ++st.family_counts[static_cast<int>(c.family)];
    st.degenerate += c.degenerate ? 1 : 0;
  }
  for (const auto& circ : s.circuits) {
    st.max_depth = std::max(st.max_depth, circ.depth);
    st.max_swap_depth = std::max(st.max_swap_depth, circ.swap_depth);
    st.max_gates = std::max(st.max_gates, static_cast<int>(circ.gates.size()));
    st.total_gates += static_cast<std::int64_t>(circ.gates.size());
    ++st.depth_histogram[circ.depth];
    for (const auto& g : circ.gates) ++st.gate_counts[circuits::to_string(g.name)];
  }
  return st;
}

std::string stats_text(const ScheduleStats& st) {
  std::ostringstream os;
  os << "orbitals: " << st.n_orbitals << '\n'
     << "qubits: " << st.qubits << '\n'
     << "mapping: " << st.mapping << '\n'
     << "plane_order: " << st.prime << '\n';
  for (Family f : {Family::kPart, Family::kOneBody, Family::kDiffSpin, Family::kSameSpin}) {
    os << "cliques." << to_string(f) << ": " << st.family_counts[static_cast<int>(f)] << '\n';
  }
  os << "cliques.total: " << st.total << '\n'
     << "cliques.degenerate: " << st.degenerate << '\n'
     << "formula_2n2_2n_1: " << st.formula << '\n'
     << "lower_bound_same_spin: " << st.lower_bound << '\n'
     << "terms: " << st.terms << '\n'
     << "depth.max: " << st.max_depth << '\n'
     << "swap_depth.max: " << st.max_swap_depth << '\n';
  for (const auto& [d, count] : st.depth_histogram) os << "depth.hist." << d << ": " << count << '\n';
  os << "gates.total: " << st.total_gates << '\n' << "gates.max_per_circuit: " << st.max_gates << '\n';
  for (const auto& [name, count] : st.gate_counts) os << "gates." << name << ": " << count << '\n';
  return os.str();
}

}  // namespace planesched

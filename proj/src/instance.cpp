#include "bondzeta/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bondzeta/error.hpp"

namespace bondzeta {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError(field + ": " + what);
}

const json& need(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path + "." + key, "missing");
  return *it;
}

double real_of(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path, "expected a number");
  return v.get<double>();
}

std::size_t index_of(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

// Names may be written as strings or bare integers.
std::string name_of(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad(path, "expected a name");
}

cplx complex_of(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) bad(path, "expected [re, im]");
  return {real_of(v[0], path + "[0]"), real_of(v[1], path + "[1]")};
}

FiniteGroup parse_group(const json& j, std::optional<std::size_t>& cyclic) {
  if (!j.is_object()) bad("group", "expected an object");
  if (j.contains("cyclic")) {
    const std::size_t n = index_of(j["cyclic"], "group.cyclic");
    if (n == 0) bad("group.cyclic", "order must be positive");
    cyclic = n;
    return cyclic_group(n).first;
  }
  const json& elems = need(j, "elements", "group");
  const json& tab = need(j, "table", "group");
  if (!elems.is_array() || elems.empty()) bad("group.elements", "expected a non-empty list");
  std::vector<std::string> names;
  std::map<std::string, GroupElement> lookup;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(name_of(elems[i], "group.elements[" + std::to_string(i) + "]"));
    lookup[names.back()] = i;
  }
  const std::size_t p = names.size();
  if (!tab.is_array() || tab.size() != p) bad("group.table", "expected " + std::to_string(p) + " rows");
  std::vector<std::vector<GroupElement>> table(p, std::vector<GroupElement>(p));
  for (std::size_t r = 0; r < p; ++r) {
    const std::string rp = "group.table[" + std::to_string(r) + "]";
    if (!tab[r].is_array() || tab[r].size() != p) bad(rp, "expected " + std::to_string(p) + " entries");
    for (std::size_t c = 0; c < p; ++c) {
      const std::string cp = rp + "[" + std::to_string(c) + "]";
      const json& e = tab[r][c];
      if (e.is_string()) {
        auto it = lookup.find(e.get<std::string>());
        if (it == lookup.end()) bad(cp, "unknown element '" + e.get<std::string>() + "'");
        table[r][c] = it->second;
      } else {
        table[r][c] = index_of(e, cp);
        if (table[r][c] >= p) bad(cp, "element index out of range");
      }
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

UnitaryRep parse_rep(const json& j, const FiniteGroup& group, const std::string& path) {
  UnitaryRep rep;
  rep.name = name_of(need(j, "name", path), path + ".name");
  rep.degree = index_of(need(j, "degree", path), path + ".degree");
  if (rep.degree == 0) bad(path + ".degree", "must be positive");
  const json& mats = need(j, "matrices", path);
  if (!mats.is_array() || mats.size() != group.order())
    bad(path + ".matrices", "expected one matrix per group element");
  const std::size_t d = rep.degree;
  for (std::size_t g = 0; g < mats.size(); ++g) {
    const std::string mp = path + ".matrices[" + std::to_string(g) + "]";
    const json& mj = mats[g];
    if (!mj.is_array() || mj.size() != d) bad(mp, "expected " + std::to_string(d) + " rows");
    ComplexMatrix mat(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const std::string rp = mp + "[" + std::to_string(r) + "]";
      if (!mj[r].is_array() || mj[r].size() != d) bad(rp, "expected " + std::to_string(d) + " entries");
      for (std::size_t c = 0; c < d; ++c)
        mat(r, c) = complex_of(mj[r][c], rp + "[" + std::to_string(c) + "]");
    }
    rep.matrices.push_back(std::move(mat));
  }
  try {
    rep.validate(group);
  } catch (const Error& e) {
    bad(path, e.what());
  }
  return rep;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

IrrepSet Instance::irreps() const {
  if (!reps.empty()) return IrrepSet{reps};
  if (cyclic_order) return cyclic_group(*cyclic_order).second;
  throw InputError("reps: required unless the group is cyclic");
}

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("parse: ") + e.what());
  }
  if (!j.is_object()) bad("<root>", "expected an object");

  const json& verts = need(j, "vertices", "<root>");
  if (!verts.is_array() || verts.empty()) bad("vertices", "expected a non-empty list");
  std::vector<std::string> names;
  std::map<std::string, VertexId> vindex;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    names.push_back(name_of(verts[i], "vertices[" + std::to_string(i) + "]"));
    if (!vindex.emplace(names.back(), i).second)
      bad("vertices[" + std::to_string(i) + "]", "duplicate name '" + names.back() + "'");
  }

  const json& edges = need(j, "edges", "<root>");
  if (!edges.is_array()) bad("edges", "expected a list");
  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<double> h, gamma;
  std::vector<std::string> ids;
  std::map<std::string, std::size_t> eindex;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string ep = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    auto vertex = [&](const char* key) {
      const std::string n = name_of(need(e, key, ep), ep + "." + key);
      auto it = vindex.find(n);
      if (it == vindex.end()) bad(ep + "." + key, "unknown vertex '" + n + "'");
      return it->second;
    };
    ends.emplace_back(vertex("u"), vertex("v"));
    h.push_back(real_of(need(e, "h", ep), ep + ".h"));
    gamma.push_back(real_of(need(e, "gamma", ep), ep + ".gamma"));
    ids.push_back(e.contains("id") ? name_of(e["id"], ep + ".id") : "e" + std::to_string(k + 1));
    if (!eindex.emplace(ids.back(), k).second) bad(ep + ".id", "duplicate edge id '" + ids.back() + "'");
  }

  std::vector<double> diag(names.size(), 0.0);
  if (j.contains("diag")) {
    const json& d = j["diag"];
    if (!d.is_object()) bad("diag", "expected a map vertex -> real");
    for (auto it = d.begin(); it != d.end(); ++it) {
      auto v = vindex.find(it.key());
      if (v == vindex.end()) bad("diag." + it.key(), "unknown vertex");
      diag[v->second] = real_of(it.value(), "diag." + it.key());
    }
  }

  Graph g = Graph::build(names, ends);
  EdgeWeightSystem w = EdgeWeightSystem::from_edges(g, h, gamma, diag);
  Instance inst{std::move(g), std::move(w), std::move(ids), {}, {}, {}, {}};

  if (j.contains("group")) inst.group = parse_group(j["group"], inst.cyclic_order);
  if (j.contains("voltages")) {
    if (!inst.group) bad("voltages", "a group is required");
    const json& vj = j["voltages"];
    if (!vj.is_object()) bad("voltages", "expected a map edge -> element");
    std::vector<GroupElement> per_edge(inst.graph.num_edges(), inst.group->identity());
    for (auto it = vj.begin(); it != vj.end(); ++it) {
      auto e = eindex.find(it.key());
      if (e == eindex.end()) bad("voltages." + it.key(), "unknown edge id");
      const std::string el = name_of(it.value(), "voltages." + it.key());
      try {
        per_edge[e->second] = inst.group->find(el);
      } catch (const Error&) {
        bad("voltages." + it.key(), "unknown element '" + el + "'");
      }
    }
    inst.voltages = VoltageAssignment::from_edges(inst.graph, *inst.group, per_edge);
  } else if (inst.group) {
    inst.voltages = VoltageAssignment::trivial(inst.graph, *inst.group);
  }
  if (j.contains("reps")) {
    if (!inst.group) bad("reps", "a group is required");
    const json& rj = j["reps"];
    if (!rj.is_array()) bad("reps", "expected a list");
    for (std::size_t i = 0; i < rj.size(); ++i)
      inst.reps.push_back(parse_rep(rj[i], *inst.group, "reps[" + std::to_string(i) + "]"));
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string emit_instance(const Instance& inst) {
  const Graph& g = inst.graph;
  const std::size_t m = g.num_edges();
  const auto& names = g.vertex_names();
  json j;
  j["vertices"] = names;
  json edges = json::array();
  for (std::size_t k = 0; k < m; ++k) {
    edges.push_back({{"id", inst.edge_ids[k]},
                     {"u", names[g.origin(k)]},
                     {"v", names[g.terminus(k)]},
                     {"h", inst.weights.h(k)},
                     {"gamma", inst.weights.gamma(k)}});
  }
  j["edges"] = edges;
  json diag = json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) diag[names[v]] = inst.weights.diag(v);
  j["diag"] = diag;
  if (inst.group) {
    const FiniteGroup& grp = *inst.group;
    if (inst.cyclic_order) {
      j["group"] = {{"cyclic", *inst.cyclic_order}};
    } else {
      json table = json::array();
      for (const auto& row : grp.table()) {
        json r = json::array();
        for (GroupElement e : row) r.push_back(grp.names()[e]);
        table.push_back(r);
      }
      j["group"] = {{"elements", grp.names()}, {"table", table}};
    }
    if (inst.voltages) {
      json v = json::object();
      for (std::size_t k = 0; k < m; ++k) v[inst.edge_ids[k]] = grp.names()[(*inst.voltages)(k)];
      j["voltages"] = v;
    }
  }
  if (!inst.reps.empty()) {
    json reps = json::array();
    for (const auto& r : inst.reps) {
      json mats = json::array();
      for (const auto& mat : r.matrices) {
        json rows = json::array();
        for (std::size_t a = 0; a < mat.rows(); ++a) {
          json row = json::array();
          for (std::size_t b = 0; b < mat.cols(); ++b) row.push_back(complex_json(mat(a, b)));
          rows.push_back(row);
        }
        mats.push_back(rows);
      }
      reps.push_back({{"name", r.name}, {"degree", r.degree}, {"matrices", mats}});
    }
    j["reps"] = reps;
  }
  return j.dump(2);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write");
  out << emit_instance(inst) << '\n';
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string instance_digest(const Instance& inst) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(emit_instance(inst))));
  return buf;
}

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  auto number = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) throw InputError("lambda: cannot parse '" + text + "'");
    return v;
  };
  if (t.empty()) throw InputError("lambda: empty value");
  if (t.back() != 'i') return {number(t), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(t)};
  return {number(t.substr(0, split)), number(t.substr(split))};
}

double sampling_radius(const Graph& g, const EdgeWeightSystem& w) {
  const VertexGamma vg = vertex_gammas(g, w);
  double r = 0.0;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    r = std::max(r, std::abs(w.diag(u)) + vg.gamma[u]);
  return 2.0 * r;
}

std::vector<cplx> sample_lambdas(const Graph& g, const EdgeWeightSystem& w, std::size_t count,
                                 std::uint64_t seed, SampleRegion region) {
  const double radius = sampling_radius(g, w);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (region == SampleRegion::real_segment) {
      out.emplace_back(radius * (2.0 * unit(rng) - 1.0), 0.0);
      continue;
    }
    const double r = radius * std::sqrt(unit(rng));
    const double span = region == SampleRegion::disk ? 2.0 * std::numbers::pi : std::numbers::pi;
    out.push_back(std::polar(r, span * unit(rng)));
  }
  return out;
}

Instance k3_instance(double a, double b, double alpha) {
  Graph g = Graph::build({"1", "2", "3"}, {{0, 1}, {1, 2}, {2, 0}});
  EdgeWeightSystem w = EdgeWeightSystem::from_edges(g, {b, b, b}, {alpha, alpha, -alpha}, {a, a, a});
  auto [group, irreps] = cyclic_group(3);
  VoltageAssignment v = VoltageAssignment::from_edges(g, group, {1, 0, 0});
  return Instance{std::move(g), std::move(w), {"e1", "e2", "e3"}, std::move(group), 3,
                  std::move(v), {}};
}

Instance cover_instance(const Instance& base) {
  if (!base.has_covering()) throw InputError("group/voltages: required to build a cover");
  DerivedGraph cover = derived_graph(base.graph, *base.group, *base.voltages);
  EdgeWeightSystem w = lift_weights(cover, base.weights);
  std::vector<std::string> ids;
  const auto& gnames = base.group->names();
  for (std::size_t k = 0; k < cover.graph.num_edges(); ++k)
    ids.push_back(base.edge_ids[k % base.graph.num_edges()] + "@" + gnames[k / base.graph.num_edges()]);
  return Instance{std::move(cover.graph), std::move(w), std::move(ids), {}, {}, {}, {}};
}

}  // namespace bondzeta

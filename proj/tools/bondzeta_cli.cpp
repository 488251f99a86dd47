// bondzeta: verify determinant identities for graph scattering matrices.

#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bondzeta/covering.hpp"
#include "bondzeta/error.hpp"
#include "bondzeta/euler.hpp"
#include "bondzeta/instance.hpp"
#include "bondzeta/lfunction.hpp"
#include "bondzeta/scattering.hpp"

using namespace bondzeta;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::size_t samples = 32;
  std::optional<double> tol;
  std::size_t max_len = 10;
  std::string lambda;
  std::uint64_t seed = 42;
  bool json = true;
};

void add_common(CLI::App* cmd, Options& o, bool needs_input = true) {
  auto* in = cmd->add_option("--input", o.input, "instance file (JSON)");
  if (needs_input) in->required()->check(CLI::ExistingFile);
  cmd->add_option("--samples", o.samples, "number of lambda samples")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "tolerance");
  cmd->add_option("--max-len", o.max_len, "cycle length cutoff N");
  cmd->add_option("--lambda", o.lambda, "single lambda, e.g. \"0.5+1i\"");
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_flag("--json,!--no-json", o.json, "JSON report (default on)");
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::vector<cplx> lambdas(const Instance& inst, const Options& o, SampleRegion region) {
  if (!o.lambda.empty()) return {parse_complex(o.lambda)};
  return sample_lambdas(inst.graph, inst.weights, o.samples, o.seed, region);
}

double tol_or(const Options& o, double fallback) { return o.tol.value_or(fallback); }

struct Outcome {
  Report report;
  json data = json::object();
};

int emit(const std::string& command, const std::string& digest, const Outcome& out,
         double millis, bool as_json) {
  const Report& rep = out.report;
  if (as_json) {
    json checks = json::array();
    for (const auto& r : rep.records) {
      checks.push_back({{"name", r.name},
                        {"lhs", cplx_json(r.lhs)},
                        {"rhs", cplx_json(r.rhs)},
                        {"error", r.error},
                        {"pass", r.pass},
                        {"note", r.note}});
    }
    json j{{"command", command},
           {"instance_digest", digest},
           {"tolerance", rep.tolerance},
           {"checks", checks},
           {"pass", rep.pass()},
           {"timings", {{"total_ms", millis}}},
           {"warnings", rep.warnings}};
    if (!out.data.empty()) j["data"] = out.data;
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : rep.records)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  error=" << r.error << '\n';
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << '\n';
    std::cout << command << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << millis
              << " ms)\n";
  }
  return rep.pass() ? kExitPass : kExitFail;
}

const FiniteGroup& need_group(const Instance& inst) {
  if (!inst.has_covering()) throw InputError("group: required for this command");
  return *inst.group;
}

Outcome run_verify(const std::string& kind, const Instance& inst, const Options& o) {
  const Graph& g = inst.graph;
  const EdgeWeightSystem& w = inst.weights;
  Outcome out;
  if (kind == "theorem4") {
    const auto s = lambdas(inst, o, SampleRegion::disk);
    out.report = verify_theorem4(g, w, s, tol_or(o, 1e-9));
  } else if (kind == "theorem5" || kind == "trace") {
    const bool t5 = kind == "theorem5";
    out.report = Report(kind, tol_or(o, t5 ? 1e-8 : 1e-9));
    const auto s = lambdas(inst, o, SampleRegion::upper_half_disk);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string prefix = "sample " + std::to_string(i) + ": ";
      if (t5) {
        out.report.merge(verify_theorem5(g, w, s[i], o.max_len, out.report.tolerance), prefix);
      } else {
        for (std::size_t k = 1; k <= o.max_len; ++k)
          out.report.merge(trace_identity_check(g, w, s[i], k, out.report.tolerance), prefix);
      }
    }
  } else if (kind == "theorem6" || kind == "corollary1") {
    const FiniteGroup& grp = need_group(inst);
    const IrrepSet irreps = inst.irreps();
    const bool t6 = kind == "theorem6";
    out.report = Report(kind, tol_or(o, 1e-8));
    out.data["factors"] = json::array();
    const auto s = lambdas(inst, o, SampleRegion::disk);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string prefix = "sample " + std::to_string(i) + ": ";
      out.report.merge(t6 ? verify_theorem6(g, w, grp, *inst.voltages, irreps, s[i],
                                            out.report.tolerance)
                          : verify_corollary1(g, w, grp, *inst.voltages, irreps, s[i],
                                              out.report.tolerance),
                       prefix);
      if (!t6) {
        json f = json::object();
        for (const auto& rho : irreps.reps)
          f[rho.name] = cplx_json(l_function_reciprocal(g, w, *inst.voltages, rho, s[i]));
        out.data["factors"].push_back({{"lambda", cplx_json(s[i])}, {"reciprocals", f}});
      }
    }
    if (t6) out.data.erase("factors");
  } else if (kind == "theorem7") {
    const FiniteGroup& grp = need_group(inst);
    out.report = Report(kind, tol_or(o, 1e-9));
    const auto s = lambdas(inst, o, SampleRegion::disk);
    const IrrepSet irreps = inst.irreps();
    for (const auto& rho : irreps.reps)
      out.report.merge(
          verify_theorem7(g, w, grp, *inst.voltages, rho, s, out.report.tolerance),
          rho.name + " ");
  } else if (kind == "proof-identities") {
    out.report = Report(kind, tol_or(o, 1e-10));
    const auto s = lambdas(inst, o, SampleRegion::disk);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string prefix = "sample " + std::to_string(i) + ": ";
      try {
        out.report.merge(verify_proof_identities(g, w, s[i], out.report.tolerance), prefix);
        if (inst.has_covering() && (!inst.reps.empty() || inst.cyclic_order)) {
          const IrrepSet irreps = inst.irreps();
          for (const auto& rho : irreps.reps)
            out.report.merge(verify_twisted_identities(g, w, *inst.voltages, rho, s[i],
                                                       out.report.tolerance),
                             prefix + rho.name + " ");
        }
      } catch (const PoleError& e) {
        out.report.warnings.push_back(prefix + "skipped: " + e.what());
      }
    }
  } else if (kind == "unitarity") {
    std::vector<double> reals;
    for (cplx z : lambdas(inst, o, SampleRegion::real_segment)) {
      if (z.imag() != 0.0) throw InputError("lambda: unitarity needs a real value");
      reals.push_back(z.real());
    }
    out.report = verify_unitarity(g, w, reals, tol_or(o, 1e-10));
  } else {
    throw InputError("verify: unknown kind '" + kind + "'");
  }
  return out;
}

Outcome run_spectrum(const Instance& inst, const Options& o) {
  SpectrumComparison cmp = compare_spectra(inst.graph, inst.weights, tol_or(o, 1e-6));
  Outcome out{cmp.report};
  out.data = {{"jacobi", cmp.jacobi},
              {"secular", cmp.secular},
              {"max_deviation", cmp.max_deviation}};
  return out;
}

Outcome run_euler(const Instance& inst, const Options& o) {
  const cplx lambda = lambdas(inst, o, SampleRegion::upper_half_disk).front();
  if (o.max_len > kMaxCycleLength)
    throw InputError("max-len: at most " + std::to_string(kMaxCycleLength));
  Outcome out{verify_theorem5(inst.graph, inst.weights, lambda, o.max_len, tol_or(o, 1e-8))};
  const PolyCoeffs direct = secular_poly(inst.graph, inst.weights, lambda, o.max_len);
  const PolyCoeffs product = truncated_euler_product(inst.graph, inst.weights, lambda, o.max_len);
  std::vector<std::size_t> counts(o.max_len + 1, 0);
  for (const auto& c : prime_cycle_classes(inst.graph, o.max_len)) ++counts[c.length()];
  json dj = json::array();
  json pj = json::array();
  for (std::size_t k = 0; k <= o.max_len; ++k) {
    dj.push_back(cplx_json(direct[k]));
    pj.push_back(cplx_json(product[k]));
  }
  out.data = {{"lambda", cplx_json(lambda)},
              {"determinant_coefficients", dj},
              {"euler_coefficients", pj},
              {"prime_classes_by_length", counts}};
  return out;
}

bool is_cycle_graph(const Graph& g) {
  if (!g.connected() || g.num_edges() != g.num_vertices()) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

Outcome run_cover(const Instance& inst, const Options& o, const std::string& path) {
  const FiniteGroup& grp = need_group(inst);
  const Instance cover = cover_instance(inst);
  save_instance(cover, path);
  Outcome out{Report("cover", tol_or(o, 1e-8))};
  const bool same = load_instance(path) == cover;
  out.report.add("emitted file reparses identically", 1.0, same ? 1.0 : 0.0, same ? 0.0 : 1.0);
  if (!cover.graph.connected()) {
    out.report.warnings.push_back("derived graph is disconnected");
  } else if (!inst.reps.empty() || inst.cyclic_order) {
    out.report.merge(verify_spectrum_union(inst.graph, inst.weights, grp, *inst.voltages,
                                           inst.irreps(), out.report.tolerance));
  }
  out.data = {{"path", path},
              {"vertices", cover.graph.num_vertices()},
              {"edges", cover.graph.num_edges()},
              {"connected", cover.graph.connected()},
              {"cycle_graph", is_cycle_graph(cover.graph)}};
  return out;
}

Outcome run_lfunction(const Instance& inst, const Options& o, const std::string& rep_name) {
  const FiniteGroup& grp = need_group(inst);
  const IrrepSet irreps = inst.irreps();
  const UnitaryRep& rho = irreps.find(rep_name);
  const auto s = lambdas(inst, o, SampleRegion::disk);
  Outcome out{verify_theorem7(inst.graph, inst.weights, grp, *inst.voltages, rho, s,
                              tol_or(o, 1e-9))};
  json values = json::array();
  for (const cplx& z : s) {
    const cplx r = l_function_reciprocal(inst.graph, inst.weights, *inst.voltages, rho, z);
    values.push_back({{"lambda", cplx_json(z)}, {"reciprocal", cplx_json(r)}});
  }
  out.data = {{"rep", rho.name}, {"degree", rho.degree}, {"values", values}};
  return out;
}

// (lambda - a)^3 - 3 b^2 (lambda - a) - 2 b^3 cos(2 theta)
cplx k3_cubic(double a, double b, double theta, cplx lambda) {
  const cplx y = lambda - a;
  return y * y * y - 3.0 * b * b * y - 2.0 * b * b * b * std::cos(2.0 * theta);
}

Outcome run_example_k3(double a, double b, double alpha, const Options& o,
                       const Instance& inst) {
  const Graph& g = inst.graph;
  const EdgeWeightSystem& w = inst.weights;
  const IrrepSet irreps = inst.irreps();
  const DerivedGraph cover = derived_graph(g, *inst.group, *inst.voltages);
  const EdgeWeightSystem lifted = lift_weights(cover, w);
  Outcome out{Report("example-k3", tol_or(o, 1e-9))};
  const auto s = lambdas(inst, o, SampleRegion::disk);
  json values = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const cplx lambda = s[i];
    const cplx pole = a - lambda - 2.0 * kI * b;
    const cplx base = -8.0 / (pole * pole * pole);
    cplx cover_closed = -512.0 / int_pow(pole, 9);
    const std::string prefix = "sample " + std::to_string(i) + ": ";
    const cplx det6 = secular_det(g, w, lambda);
    out.report.add_relative(prefix + "det(I6 - U)", det6, base * k3_cubic(a, b, alpha, lambda));
    for (std::size_t k = 0; k < 3; ++k) {
      const double theta = alpha + static_cast<double>(k) * std::numbers::pi / 3.0;
      const cplx closed = base * k3_cubic(a, b, theta, lambda);
      cover_closed *= k3_cubic(a, b, theta, lambda);
      out.report.add_relative(prefix + irreps.reps[k].name + " reciprocal",
                              l_function_reciprocal(g, w, *inst.voltages, irreps.reps[k], lambda),
                              closed);
    }
    const cplx det18 = secular_det(cover.graph, lifted, lambda);
    out.report.add_relative(prefix + "det(I18 - U~)", det18, cover_closed);
    values.push_back({{"lambda", cplx_json(lambda)},
                      {"det6", cplx_json(det6)},
                      {"det18", cplx_json(det18)}});
  }
  const bool cycle9 = cover.graph.num_vertices() == 9 && is_cycle_graph(cover.graph);
  out.report.add("derived graph is a 9-cycle", 1.0, cycle9 ? 1.0 : 0.0, cycle9 ? 0.0 : 1.0);
  out.data = {{"a", a}, {"b", b}, {"alpha", alpha}, {"values", values}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bond scattering matrices, secular determinants and zeta functions"};
  app.require_subcommand(1);
  Options o;

  std::string kind;
  auto* verify = app.add_subcommand("verify", "check one identity on an instance");
  verify->add_option("kind", kind,
                     "theorem4|theorem5|theorem6|theorem7|corollary1|proof-identities|"
                     "unitarity|trace")
      ->required()
      ->check(CLI::IsMember({"theorem4", "theorem5", "theorem6", "theorem7", "corollary1",
                             "proof-identities", "unitarity", "trace"}));
  add_common(verify, o);

  auto* spectrum = app.add_subcommand("spectrum", "Jacobi eigenvalues vs secular roots");
  add_common(spectrum, o);

  auto* euler = app.add_subcommand("euler", "det(I - uU) against the Euler product");
  add_common(euler, o);

  std::string emit_path;
  auto* cover = app.add_subcommand("cover", "write the derived graph instance");
  cover->add_option("--emit", emit_path, "output file")->required();
  add_common(cover, o);

  std::string rep_name;
  auto* lfun = app.add_subcommand("lfunction", "L-function values for one representation");
  lfun->add_option("--rep", rep_name, "representation name")->required();
  add_common(lfun, o);

  std::string which;
  double a = 0.0;
  double b = 1.0;
  double alpha = 0.0;
  auto* example = app.add_subcommand("example", "worked triangle example");
  example->add_option("name", which, "k3")->required()->check(CLI::IsMember({"k3"}));
  example->add_option("--a", a, "diagonal entry");
  example->add_option("--b", b, "edge modulus")->check(CLI::PositiveNumber);
  example->add_option("--alpha", alpha, "edge phase");
  add_common(example, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  const auto start = std::chrono::steady_clock::now();
  try {
    const Instance inst = example->parsed() ? k3_instance(a, b, alpha) : load_instance(o.input);
    Outcome out;
    if (verify->parsed()) out = run_verify(kind, inst, o);
    else if (spectrum->parsed()) out = run_spectrum(inst, o);
    else if (euler->parsed()) out = run_euler(inst, o);
    else if (cover->parsed()) out = run_cover(inst, o, emit_path);
    else if (lfun->parsed()) out = run_lfunction(inst, o, rep_name);
    else out = run_example_k3(a, b, alpha, o, inst);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit(command, instance_digest(inst), out, ms, o.json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

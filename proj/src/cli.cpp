#include "monorel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monorel/decomposition.hpp"
#include "monorel/gallery.hpp"
#include "monorel/spec_io.hpp"
#include "monorel/splitting.hpp"

namespace monorel::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::optional<double> tol;
  std::string format = "json";
  bool assert_verdicts = false;
  std::string spec_path;

  double lambda = 1.0;
  int max_iter = 10000;
  double solve_tol = 1e-6;
  std::string method = "pp";
  std::vector<double> x0;

  Index n = 4;
  Index dim_dom = -1;
  double psd_scale = 1.0;
  double skew_scale = 1.0;
  std::uint64_t seed = 0;
  std::string example_name;
};

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<double> r(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) r[static_cast<std::size_t>(j)] = m(i, j);
    rows.push_back(std::move(r));
  }
  return rows;
}

json vector_json(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json basis_json(const Subspace& s) { return matrix_json(s.basis().transpose()); }

json verdict_json(const Certificate& c) {
  if (c.verdict == Verdict::kInconclusive) return "inconclusive";
  return c.holds();
}

double resolve_tol(const Flags& flags, const RelationSpec* spec) {
  if (flags.tol) return *flags.tol;
  if (spec && spec->tol) return *spec->tol;
  if (const char* env = std::getenv("MONOREL_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0.0) return v;
    throw ValidationError(std::string("MONOREL_TOL is not a nonnegative number: ") + env);
  }
  return kRankTol;
}

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open spec file '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void render_text(const json& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
}

void emit(const json& report, const Flags& flags, std::ostream& out) {
  if (flags.format == "text") {
    render_text(report, "", out);
  } else {
    out << report.dump(2) << "\n";
  }
}

json header(const std::string& command, double tol) {
  json r;
  r["command"] = command;
  r["version"] = kVersion;
  r["tol"] = tol;
  return r;
}

int cmd_check(const LinearRelation& a, json& r) {
  const Certificate mono = is_monotone(a);
  const Certificate maximal = is_maximal_monotone(a);
  const Certificate bb = brezis_browder_report(a);
  r["monotone"] = mono.holds();
  r["skew"] = is_skew(a).holds();
  r["symmetric"] = is_symmetric(a).holds();
  r["maximal"] = maximal.holds();
  r["paramonotone"] = mono ? json(is_paramonotone(a).holds()) : json(nullptr);
  std::optional<Certificate> bw;
  if (maximal) bw = bw_decomposable(a);
  r["bw_decomposable"] = bw ? json(bw->holds()) : json(nullptr);
  r["irreducible_by_skew_criterion"] = verdict_json(irreducible_by_skew_criterion(a));
  r["brezis_browder"] = bb.holds();
  r["brezis_browder_detail"] = bb.detail;
  const RelationParts p = parts(a);
  r["dims"] = {{"n", a.n()},
               {"graph", a.graph().dim()},
               {"dom", p.dom.dim()},
               {"ran", p.ran.dim()},
               {"ker", p.ker.dim()},
               {"image_of_zero", p.image_of_zero.dim()}};
  const bool ok = mono && maximal && bb && bw && bw->holds();
  return ok ? kExitOk : kExitAssert;
}

int cmd_decompose(const LinearRelation& a, json& r) {
  const BWDecomposition dec = bw_decompose(a);
  r["domain_basis"] = basis_json(dec.f.domain);
  r["H"] = matrix_json(dec.f.h);
  r["S"] = matrix_json(dec.skew);
  r["reconstruction_distance"] = dec.report.metrics.at("reconstruction_distance");
  r["verified"] = dec.report.holds();
  if (!dec.report) r["detail"] = dec.report.detail;
  return dec.report ? kExitOk : kExitAssert;
}

int cmd_conjugate(const LinearRelation& a, json& r) {
  const BWDecomposition dec = bw_decompose(a);
  const QuadraticOnSubspace conj = quad_conjugate(dec.f);
  r["domain_basis"] = basis_json(conj.domain);
  r["H"] = matrix_json(conj.h);
  r["offset"] = conj.offset;
  return kExitOk;
}

int cmd_solve(const LinearRelation& a, const Flags& flags, json& r) {
  Vector x0 = Vector::Zero(a.n());
  if (flags.x0.empty()) {
    x0(0) = 1.0;
  } else {
    if (static_cast<Index>(flags.x0.size()) != a.n()) {
      throw ValidationError("--x0 has " + std::to_string(flags.x0.size()) + " entries, n = " +
                            std::to_string(a.n()));
    }
    for (Index i = 0; i < a.n(); ++i) x0(i) = flags.x0[static_cast<std::size_t>(i)];
  }
  const SolverOptions opts{flags.lambda, flags.solve_tol, flags.max_iter};
  IterateTrace trace;
  if (flags.method == "pp") {
    trace = proximal_point(a, x0, opts);
  } else {
    const BWDecomposition dec = bw_decompose(a);
    trace = douglas_rachford(dec.f, dec.skew, x0, opts);
  }
  r["method"] = flags.method;
  r["lambda"] = flags.lambda;
  r["solve_tol"] = flags.solve_tol;
  r["max_iter"] = flags.max_iter;
  r["converged"] = trace.converged;
  r["iterations"] = trace.iterations_used;
  r["final_residual"] = trace.residuals.back();
  r["final_iterate"] = vector_json(trace.iterates.back());
  r["residuals"] = trace.residuals;
  return trace.converged ? kExitOk : kExitAssert;
}

json spec_with_meta(const RelationSpec& spec, json meta) {
  json doc = json::parse(serialize_spec(spec));
  meta["version"] = kVersion;
  doc["meta"] = std::move(meta);
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Monotone linear relations: certificates, decompositions, resolvents."};
  app.name(args.empty() ? "monorel" : args.front());
  app.require_subcommand(1, 1);
  Flags flags;
  // Whole-run flags accepted on every subcommand.
  auto add_common = [&](CLI::App* sub, bool with_spec) {
    if (with_spec) sub->add_option("spec", flags.spec_path, "relation spec file ('-' for stdin)")->required();
    sub->add_option("--tol", flags.tol, "rank tolerance (overrides spec tol and MONOREL_TOL)");
    sub->add_option("--format", flags.format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--assert", flags.assert_verdicts, "exit 2 when a verdict is false");
  };

  auto* check = app.add_subcommand("check", "all certificates for a relation");
  add_common(check, true);
  auto* adj = app.add_subcommand("adjoint", "adjoint relation as a graph spec");
  add_common(adj, true);
  auto* dec = app.add_subcommand("decompose", "canonical Borwein-Wiersma decomposition");
  add_common(dec, true);
  auto* conj = app.add_subcommand("conjugate", "Fenchel conjugate of the subdifferential part");
  add_common(conj, true);
  auto* res = app.add_subcommand("resolvent", "resolvent matrix (I + lambda A)^-1");
  add_common(res, true);
  res->add_option("--lambda", flags.lambda, "step size")->check(CLI::PositiveNumber);
  auto* solve = app.add_subcommand("solve", "find a zero by proximal point or Douglas-Rachford");
  add_common(solve, true);
  solve->add_option("--method", flags.method, "pp or dr")->check(CLI::IsMember({"pp", "dr"}));
  solve->add_option("--lambda", flags.lambda, "step size")->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", flags.max_iter, "iteration budget")->check(CLI::NonNegativeNumber);
  solve->add_option("--solve-tol", flags.solve_tol, "residual tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--x0", flags.x0, "start point (default e1)")->delimiter(',');
  auto* gen = app.add_subcommand("gen", "random maximal monotone relation as a graph spec");
  add_common(gen, false);
  gen->add_option("--n", flags.n, "space dimension")->check(CLI::PositiveNumber);
  gen->add_option("--dim-dom", flags.dim_dom, "domain dimension (default n)");
  gen->add_option("--psd-scale", flags.psd_scale, "scale of G G^T");
  gen->add_option("--skew-scale", flags.skew_scale, "scale of K - K^T");
  gen->add_option("--seed", flags.seed, "generator seed");
  auto* example = app.add_subcommand("example", "gallery spec (volterra, derivative, shift_skew)");
  add_common(example, false);
  example->add_option("name", flags.example_name, "gallery name")->required();
  example->add_option("--n", flags.n, "space dimension")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (command == "gen" || command == "example") {
      RelationSpec spec;
      json meta;
      if (command == "gen") {
        const Index dim_dom = flags.dim_dom < 0 ? flags.n : flags.dim_dom;
        const LinearRelation a =
            gallery::random_maximal_monotone(flags.n, dim_dom, flags.psd_scale, flags.skew_scale, flags.seed);
        spec = graph_spec(a);
        meta = {{"generator", "random_maximal_monotone"}, {"dim_dom", dim_dom},
                {"psd_scale", flags.psd_scale}, {"skew_scale", flags.skew_scale},
                {"seed", flags.seed}};
      } else {
        spec.kind = SpecKind::kGallery;
        spec.name = flags.example_name;
        spec.n = flags.n;
        meta = {{"generator", "gallery"}};
        spec = parse_spec(serialize_spec(spec));
      }
      spec.tol = resolve_tol(flags, nullptr);
      out << spec_with_meta(spec, std::move(meta)).dump(2) << "\n";
      return kExitOk;
    }

    const RelationSpec spec = parse_spec(read_text(flags.spec_path, in));
    const double tol = resolve_tol(flags, &spec);
    const LinearRelation a = build_relation(spec, tol);
    json report = header(command, tol);
    int verdict_code = kExitOk;
    if (command == "check") {
      verdict_code = cmd_check(a, report);
    } else if (command == "adjoint") {
      const LinearRelation b = adjoint(a);
      report["relation"] = json::parse(serialize_spec(graph_spec(b)));
      report["graph_dim"] = b.graph().dim();
    } else if (command == "decompose") {
      verdict_code = cmd_decompose(a, report);
    } else if (command == "conjugate") {
      verdict_code = cmd_conjugate(a, report);
    } else if (command == "resolvent") {
      report["lambda"] = flags.lambda;
      report["matrix"] = matrix_json(resolvent(a, flags.lambda));
    } else if (command == "solve") {
      verdict_code = cmd_solve(a, flags, report);
    }
    emit(report, flags, out);
    return flags.assert_verdicts ? verdict_code : kExitOk;
  } catch (const ParseError& e) {
    err << "parse error";
    if (!e.field().empty()) err << " in field '" << e.field() << "'";
    err << ": " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitValidation;
}

}  // namespace monorel::cli

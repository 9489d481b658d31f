#include "anglebound/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "anglebound/bounds.hpp"
#include "anglebound/convexity.hpp"
#include "anglebound/curvature.hpp"
#include "anglebound/erdos_furedi.hpp"
#include "anglebound/errors.hpp"
#include "anglebound/io.hpp"
#include "anglebound/lines.hpp"
#include "anglebound/search.hpp"
#include "anglebound/serialization.hpp"

namespace anglebound::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Radians or degrees flag pair resolved into one angle.
struct AngleFlag {
  explicit AngleFlag(std::string n) : name(std::move(n)) {}

  std::string name;
  std::optional<double> radians;
  std::optional<double> degrees;

  void attach(CLI::App* app, const std::string& what) {
    auto* r = app->add_option("--" + name, radians, what + " (radians)");
    auto* d = app->add_option("--" + name + "-deg", degrees, what + " (degrees)");
    r->excludes(d);
  }
  bool given() const { return radians || degrees; }
  Angle get() const {
    if (radians) return Angle(*radians);
    if (degrees) return Angle::from_degrees(*degrees);
    throw Error(ErrorCode::InvalidInput, "--" + name + " or --" + name + "-deg is required");
  }
};

std::string format_double(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(std::string_view s) {
  double value = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidInput, "not a number: '" + std::string(s) + "'");
  }
  return value;
}

fs::path manifest_path(const fs::path& out) {
  return out.parent_path() / (out.stem().string() + ".manifest.json");
}

json collect_parameters(const CLI::App* sub) {
  json params = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
    const std::string& key = opt->get_lnames().front();
    if (opt->get_expected_min() == 0) {
      if (opt->count() > 0) params[key] = "true";
    } else if (opt->count() > 0) {
      params[key] = opt->results().front();
    } else if (!opt->get_default_str().empty()) {
      params[key] = opt->get_default_str();
    }
  }
  return params;
}

}  // namespace

Range parse_range(std::string_view text) {
  Range r;
  std::string_view body = text;
  if (const auto colon = body.find(':'); colon != std::string_view::npos) {
    r.step = parse_number(body.substr(colon + 1));
    body = body.substr(0, colon);
  }
  if (const auto dots = body.find(".."); dots != std::string_view::npos) {
    r.first = parse_number(body.substr(0, dots));
    r.last = parse_number(body.substr(dots + 2));
  } else {
    r.first = r.last = parse_number(body);
  }
  if (!(r.step > 0.0) || r.last < r.first) {
    throw Error(ErrorCode::InvalidInput, "bad range '" + std::string(text) + "'");
  }
  return r;
}

std::string table_bound_grid(const Range& dims, const Range& theta_deg) {
  std::ostringstream csv;
  csv << "dim,theta_deg,theta,eta,f_value,f_abs_error,f_panels,bound,theorem_applicable,status\n";
  const auto count = [](const Range& r) {
    return static_cast<long>(std::floor((r.last - r.first) / r.step + 1e-9)) + 1;
  };
  for (long i = 0; i < count(dims); ++i) {
    const int dim = static_cast<int>(std::lround(dims.first + i * dims.step));
    if (dim < 2) throw Error(ErrorCode::OutOfRange, "table dimensions must be >= 2");
    for (long j = 0; j < count(theta_deg); ++j) {
      const double deg = theta_deg.first + j * theta_deg.step;
      const Angle theta = Angle::from_degrees(deg);
      csv << dim << ',' << format_double(deg) << ',' << format_double(theta.radians()) << ',';
      // The formula needs theta below theta_{D-1}; beyond it the cell is left empty.
      if (!(theta.radians() > 0.0) || theta.radians() >= theta_d(dim - 1).radians() - kBoundaryTolerance) {
        csv << ",,,,,false,not_applicable\n";
        continue;
      }
      const BoundReport r = cardinality_bound(theta, dim);
      const double boundary_gap = std::abs(theta.radians() - theta_d(dim).radians());
      const char* status = r.theorem_applicable          ? "applicable"
                           : boundary_gap <= kBoundaryTolerance ? "boundary"
                                                                 : "formula_only";
      csv << format_double(r.eta.radians()) << ',' << format_double(r.f_value.value) << ','
          << format_double(r.f_value.abs_error_estimate) << ',' << r.f_value.panels << ','
          << format_double(r.bound) << ',' << (r.theorem_applicable ? "true" : "false") << ','
          << status << '\n';
    }
  }
  return csv.str();
}

std::vector<std::string> replay_arguments(const json& manifest, const std::string& out) {
  std::vector<std::string> args;
  try {
    args.push_back(manifest.at("subcommand").get<std::string>());
    for (const auto& [key, value] : manifest.at("parameters").items()) {
      args.push_back("--" + key);
      const std::string v = value.get<std::string>();
      if (v != "true") args.push_back(v);
    }
    std::string target = out;
    if (target.empty() && manifest.contains("outputs") && !manifest.at("outputs").empty()) {
      target = manifest.at("outputs").front().get<std::string>();
    }
    if (!target.empty()) {
      args.insert(args.begin(), {"--out", target});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed manifest: ") + e.what());
  }
  return args;
}

namespace {

struct Emitter {
  std::ostream& out;
  std::string out_path;
  std::vector<std::string> written;

  void text(const std::string& body) {
    if (out_path.empty()) {
      out << body;
    } else {
      io::write_text(out_path, body);
      written.push_back(out_path);
    }
  }
  void document(const json& doc) { text(doc.dump(2) + "\n"); }
  void point_set(const PointSet& points) {
    if (out_path.empty()) {
      out << io::point_set_to_json(points).dump(2) << "\n";
    } else {
      io::write_point_set(out_path, points);
      written.push_back(out_path);
    }
  }
};

LineArrangement read_arrangement(const std::string& path) {
  try {
    return line_arrangement_from_json(json::parse(io::read_text(path)));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

/// Largest packing with separation >= rho found by growing m, and the
/// rho-covering; both feed the constants c_d and C_d.
std::pair<double, double> derived_constants(Angle rho, int d, int iters, std::uint64_t seed) {
  std::optional<LineArrangement> best;
  for (int m = 2; m <= 256; ++m) {
    LineArrangement packing = pack_lines(m, d, iters, seed);
    if (packing.min_pairwise_angle().radians() < rho.radians()) break;
    best = std::move(packing);
  }
  const double c = best ? packing_constant(*best) : rho.radians();
  const CoverReport cover = cover_lines(rho, d, seed);
  return {c, covering_constant(cover.arrangement, rho)};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const CapTooSmallError& e) {
    json diag{{"error", std::string(to_string(e.code()))},
              {"vertex", e.vertex()},
              {"required_radius", e.required_radius()},
              {"message", e.what()}};
    out << diag.dump(2) << "\n";
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Angle-bounded point set toolkit", "anglebound"};
  app.require_subcommand(0, 1);
  std::string out_path;
  std::string replay_path;
  unsigned threads = 1;
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--threads", threads, "Worker thread cap")->check(CLI::PositiveNumber);
  app.add_option("--replay", replay_path, "Re-run the command recorded in a manifest");

  std::uint64_t seed = kDefaultSeed;
  std::string in_path;
  std::string lines_path;
  int dim = 0;
  int n = 0;
  int m = 0;
  int pack_iters = 2000;
  int pack_restarts = 8;
  int ef_iters = 2000;
  int nb_iters = 500;
  int alpha_iters = 4000;
  int alpha_restarts = 4;
  std::int64_t samples = 1000000;
  std::int64_t budget = 20000;
  std::size_t probes = 100000;
  std::optional<std::size_t> vertex;
  std::optional<double> c_d;
  std::optional<double> C_d;
  double slack = 1.0;
  int max_doublings = 60;
  bool bound_grid = false;
  std::string dims_text = "2..6";
  std::string thetas_text = "91..119";
  AngleFlag theta{"theta"};
  AngleFlag eta{"eta"};
  AngleFlag rho{"rho"};

  const auto add_seed = [&](CLI::App* s) {
    s->add_option("--seed", seed, "Random seed")->capture_default_str();
  };
  const auto add_in = [&](CLI::App* s) {
    s->add_option("--in", in_path, "Point set file (.json or .csv)")->required()->check(CLI::ExistingFile);
  };

  std::map<std::string, std::function<void(Emitter&)>> handlers;

  auto* bound = app.add_subcommand("bound", "Cardinality bound for max angle theta in R^D");
  theta.attach(bound, "angle bound");
  bound->add_option("--dim", dim, "Ambient dimension D")->required();
  handlers["bound"] = [&](Emitter& e) { e.document(to_json(cardinality_bound(theta.get(), dim))); };

  auto* angle = app.add_subcommand("angle", "Largest angle of a point set");
  add_in(angle);
  handlers["angle"] = [&](Emitter& e) {
    const PointSet pts = io::read_point_set(in_path);
    const Angle a = max_angle(pts);
    const Angle threshold = theta_d(static_cast<int>(pts.dim()));
    e.document({{"size", pts.size()},
                {"dim", pts.dim()},
                {"max_angle", a.radians()},
                {"max_angle_deg", a.degrees()},
                {"theta_D", threshold.radians()},
                {"below_theta_D", a.radians() < threshold.radians()}});
  };

  auto* convex = app.add_subcommand("convex-position", "Convex position test with witnesses");
  add_in(convex);
  handlers["convex-position"] = [&](Emitter& e) {
    const PointSet pts = io::read_point_set(in_path);
    const ConvexPositionVerdict v = is_convex_position(pts);
    json doc = to_json(v);
    if (v.witness_point && v.witness_simplex) {
      doc["obtuse_witness"] = to_json(obtuse_witness(*v.witness_point, *v.witness_simplex));
    }
    e.document(doc);
  };

  auto* curvature = app.add_subcommand("curvature", "Monte Carlo normal-cone fractions");
  add_in(curvature);
  curvature->add_option("--samples", samples, "Direction samples")->capture_default_str();
  curvature->add_option("--vertex", vertex, "Estimate a single vertex only");
  add_seed(curvature);
  handlers["curvature"] = [&](Emitter& e) {
    const PointSet pts = io::read_point_set(in_path);
    if (vertex) {
      const FractionEstimate f = normal_cone_fraction_mc(pts, *vertex, samples, seed, threads);
      e.document({{"vertex", *vertex},
                  {"fraction", f.fraction},
                  {"std_error", f.std_error},
                  {"samples", samples},
                  {"seed", seed}});
    } else {
      e.document(to_json(gauss_bonnet_sum(pts, samples, seed, threads)));
    }
  };

  auto* cone = app.add_subcommand("cone-cover", "Cone covering certificate of a vertex set");
  add_in(cone);
  eta.attach(cone, "cone half-angle");
  theta.attach(cone, "max angle; half-angle derived as eta_{D-1}(theta)");
  handlers["cone-cover"] = [&](Emitter& e) {
    const PointSet pts = io::read_point_set(in_path);
    const Angle half = eta.given() ? eta.get()
                                   : dekster_radius(theta.get(), static_cast<int>(pts.dim()) - 1);
    json cones = json::array();
    for (const Cone& c : cone_cover_certificate(pts, half)) cones.push_back(to_json(c));
    e.document({{"eta", half.radians()}, {"cones", cones}});
  };

  auto* pack = app.add_subcommand("pack-lines", "Spread m lines through the origin");
  pack->add_option("--m", m, "Number of lines")->required();
  pack->add_option("--dim", dim, "Dimension")->required();
  pack->add_option("--iters", pack_iters, "Descent steps per restart")->capture_default_str();
  pack->add_option("--restarts", pack_restarts, "Random restarts")->capture_default_str();
  add_seed(pack);
  handlers["pack-lines"] = [&](Emitter& e) {
    const LineArrangement a = pack_lines(m, dim, pack_iters, seed, PackOptions{pack_restarts, threads});
    json doc = to_json(a);
    if (dim >= 2) doc["packing_constant"] = packing_constant(a);
    e.document(doc);
  };

  auto* cover = app.add_subcommand("cover-lines", "Lines covering all directions within rho/2");
  rho.attach(cover, "covering angle");
  cover->add_option("--dim", dim, "Dimension")->required();
  cover->add_option("--probes", probes, "Probe directions")->capture_default_str();
  add_seed(cover);
  handlers["cover-lines"] = [&](Emitter& e) {
    CoverOptions opts;
    opts.probes = probes;
    const CoverReport r = cover_lines(rho.get(), dim, seed, opts);
    json doc = to_json(r);
    doc["covering_constant"] = covering_constant(r.arrangement, r.rho);
    e.document(doc);
  };

  auto* ef = app.add_subcommand("ef-construct", "Doubling construction of 2^m points");
  ef->add_option("--lines", lines_path, "Line arrangement JSON")->check(CLI::ExistingFile);
  ef->add_option("--m", m, "Pack this many lines instead of reading --lines");
  ef->add_option("--dim", dim, "Dimension for packed lines");
  ef->add_option("--iters", ef_iters, "Packing descent steps")->capture_default_str();
  rho.attach(ef, "separation below the line angles");
  ef->add_option("--slack", slack, "Initial translation in diameters")->capture_default_str();
  ef->add_option("--max-doublings", max_doublings, "Scale doublings per step")->capture_default_str();
  add_seed(ef);
  handlers["ef-construct"] = [&](Emitter& e) {
    const LineArrangement lines = !lines_path.empty() ? read_arrangement(lines_path)
                                                      : pack_lines(m, dim, ef_iters, seed);
    e.point_set(ef_doubling(lines, rho.get(), slack, max_doublings));
  };

  auto* witness = app.add_subcommand("witness", "Obtuse triple from a covering coloring");
  add_in(witness);
  witness->add_option("--lines", lines_path, "Covering arrangement JSON")->required()->check(CLI::ExistingFile);
  rho.attach(witness, "covering angle");
  handlers["witness"] = [&](Emitter& e) {
    e.document(to_json(obtuse_triple_witness(io::read_point_set(in_path), read_arrangement(lines_path),
                                             rho.get())));
  };

  auto* nb = app.add_subcommand("n-bounds", "Two-sided bounds from packing and covering constants");
  theta.attach(nb, "obtuse angle bound");
  nb->add_option("--dim", dim, "Dimension d")->required();
  nb->add_option("--c-d", c_d, "Packing constant (derived when omitted)");
  nb->add_option("--C-d", C_d, "Covering constant (derived when omitted)");
  nb->add_option("--iters", nb_iters, "Packing descent steps when deriving")->capture_default_str();
  add_seed(nb);
  handlers["n-bounds"] = [&](Emitter& e) {
    const Angle t = theta.get();
    double c = c_d.value_or(0.0);
    double C = C_d.value_or(0.0);
    if (!c_d || !C_d) {
      if (!(t.radians() > std::numbers::pi / 2) || !(t.radians() < std::numbers::pi)) {
        throw Error(ErrorCode::OutOfRange, "theta must lie in (pi/2, pi)");
      }
      const auto [dc, dC] = derived_constants(Angle(std::numbers::pi - t.radians()), dim, nb_iters, seed);
      if (!c_d) c = dc;
      if (!C_d) C = dC;
    }
    e.document(to_json(n_bounds(t, dim, c, C)));
  };

  auto* alpha = app.add_subcommand("search-alpha", "Minimize the largest angle of n points");
  alpha->add_option("--n", n, "Number of points")->required();
  alpha->add_option("--dim", dim, "Dimension")->required();
  alpha->add_option("--iters", alpha_iters, "Annealing steps per run")->capture_default_str();
  alpha->add_option("--restarts", alpha_restarts, "Random restarts")->capture_default_str();
  add_seed(alpha);
  handlers["search-alpha"] = [&](Emitter& e) {
    AnnealOptions opts;
    opts.threads = threads;
    e.document(to_json(minimize_max_angle(n, dim, alpha_iters, alpha_restarts, seed, opts)));
  };

  auto* smax = app.add_subcommand("search-max", "Grow a large set with max angle <= theta");
  theta.attach(smax, "angle bound");
  smax->add_option("--dim", dim, "Dimension")->required();
  smax->add_option("--budget", budget, "max_angle evaluations")->capture_default_str();
  add_seed(smax);
  handlers["search-max"] = [&](Emitter& e) {
    e.document(to_json(max_cardinality_search(theta.get(), dim, budget, seed)));
  };

  auto* table = app.add_subcommand("table", "CSV tables");
  table->add_flag("--bound-grid", bound_grid, "Cardinality bounds over dims x thetas");
  table->add_option("--dims", dims_text, "Dimension range a..b[:step]")->capture_default_str();
  table->add_option("--theta-deg", thetas_text, "Angle range in degrees a..b[:step]")->capture_default_str();
  handlers["table"] = [&](Emitter& e) {
    if (!bound_grid) throw Error(ErrorCode::InvalidInput, "table needs --bound-grid");
    e.text(table_bound_grid(parse_range(dims_text), parse_range(thetas_text)));
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (!replay_path.empty()) {
    if (!app.get_subcommands().empty()) {
      err << "error: --replay cannot be combined with a subcommand\n";
      return 2;
    }
    json manifest;
    try {
      manifest = json::parse(io::read_text(replay_path));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, replay_path + ": " + e.what());
    }
    std::vector<std::string> again = replay_arguments(manifest, out_path);
    if (threads != 1) {
      again.insert(again.begin(), {"--threads", std::to_string(threads)});
    }
    return run(again, out, err);
  }

  if (app.get_subcommands().empty()) {
    err << app.help();
    return 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  Emitter emitter{out, out_path, {}};
  handlers.at(sub->get_name())(emitter);

  if (!out_path.empty()) {
    json params = collect_parameters(sub);
    json manifest{{"subcommand", sub->get_name()},
                  {"parameters", params},
                  {"seed", params.contains("seed") ? json(seed) : json()},
                  {"tool_version", std::string(kToolVersion)},
                  {"outputs", emitter.written}};
    io::write_text(manifest_path(out_path), manifest.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

}  // namespace anglebound::cli

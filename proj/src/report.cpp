#include "report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "strata.hpp"
#include "zeroset.hpp"

namespace orbiquot {

using nlohmann::json;

WeightMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ';') c = '\n';
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream toks(line);
    std::vector<long> row;
    std::string tok;
    while (toks >> tok) {
      size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("not an integer: '" + tok + "'");
      }
      if (used != tok.size())
        throw ParseError("not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(row);
  }
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      throw ShapeError("ragged rows");
  if (rows.size() == 3 && rows[0].size() == 4) {
    ThetaMatrix t;
    for (int c = 0; c < 4; ++c) {
      t.p[c] = rows[0][c];
      t.q[c] = rows[1][c];
      t.l[c] = rows[2][c];
    }
    return t;
  }
  if (rows.size() == 2 && rows[0].size() == 3) {
    OmegaMatrix o;
    for (int c = 0; c < 3; ++c) {
      o.p[c] = rows[0][c];
      o.q[c] = rows[1][c];
    }
    return o;
  }
  throw ShapeError("expected a 3x4 or 2x3 integer matrix");
}

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_json(const WeightMatrix& m) {
  json j;
  if (const auto* t = std::get_if<ThetaMatrix>(&m)) {
    j["case"] = "theta";
    j["rows"] = {t->p, t->q, t->l};
  } else {
    const auto& o = std::get<OmegaMatrix>(m);
    j["case"] = "omega";
    j["rows"] = {o.p, o.q};
  }
  return j;
}

json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(rational_str(q));
  return arr;
}

json entry_json(const CatalogEntry& e) {
  json j;
  j["label"] = e.label;
  j["invariant"] = e.invariant.get_str();
  j["kind"] = e.kind == QuotientKind::Sphere ? "sphere" : "point";
  j["intersects"] = e.intersects;
  j["data"] = rationals_json(e.data);
  return j;
}

json catalog_json(const SingularLocusCatalog& cat) {
  json j;
  j["type1_spheres"] = json::array();
  for (const auto& e : cat.type1_spheres) j["type1_spheres"].push_back(entry_json(e));
  j["type2_spheres"] = json::array();
  for (const auto& e : cat.type2_spheres) j["type2_spheres"].push_back(entry_json(e));
  j["point_groups"] = json::array();
  for (const auto& g : cat.point_groups) {
    json gj;
    gj["joining"] = g.joining_labels;
    gj["points"] = json::array();
    for (const auto& e : g.points) gj["points"].push_back(entry_json(e));
    j["point_groups"].push_back(gj);
  }
  j["omega_sphere"] = json::array();
  for (const auto& e : cat.omega_sphere) j["omega_sphere"].push_back(entry_json(e));
  j["excluded"] = json::array();
  for (const auto& e : cat.excluded) j["excluded"].push_back(entry_json(e));
  j["notes"] = cat.notes;
  return j;
}

json check_json(const WeightMatrix& m, bool& ok) {
  json j;
  j["input"] = matrix_json(m);
  if (const auto* t = std::get_if<ThetaMatrix>(&m)) {
    const MinorSetTheta minors = minors_theta(*t);
    j["minors"] = {{"d123", minors.d123.get_str()},
                   {"d124", minors.d124.get_str()},
                   {"d134", minors.d134.get_str()},
                   {"d234", minors.d234.get_str()}};
    json bx;
    const BoxSet b = boxes(*t);
    for (const auto& s : SignTriple::all()) bx[s.str()] = b.at(s).get_str();
    j["boxes"] = bx;
    const AdmissibilityDecision adm = minor_sum_admissible(*t);
    j["admissibility"] = {{"admissible", adm.admissible},
                          {"failing_condition", adm.failing_condition}};
    const FreenessDecision fr = is_locally_free_theta(*t);
    j["freeness"] = {{"locally_free", fr.locally_free},
                     {"witness", fr.witness}};
    ok = adm.admissible;
  } else {
    const auto& o = std::get<OmegaMatrix>(m);
    const MinorSetOmega minors = minors_omega(o);
    j["minors"] = {{"d12", minors.d12.get_str()},
                   {"d13", minors.d13.get_str()},
                   {"d23", minors.d23.get_str()}};
    const OmegaFreeness fr = omega_freeness(o);
    j["admissibility"] = {{"admissible", fr.locally_free},
                          {"failing_condition", fr.locally_free ? "" : fr.witness}};
    j["freeness"] = {{"locally_free", fr.locally_free},
                     {"free_on_s1", fr.free_on_s1},
                     {"witness", fr.witness}};
    ok = fr.locally_free;
  }
  return j;
}

void render_text(const json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      if (val.is_object() || val.is_array()) {
        out += indent + key + ":\n";
        render_text(val, indent + "  ", out);
      } else {
        out += indent + key + ": " + (val.is_string() ? val.get<std::string>()
                                                      : val.dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& val : j) {
      if (val.is_object() || val.is_array()) {
        out += indent + "-\n";
        render_text(val, indent + "  ", out);
      } else {
        out += indent + "- " + (val.is_string() ? val.get<std::string>()
                                                : val.dump()) + "\n";
      }
    }
  }
}

RunResult finish(json j, const ReportOptions& opts, int status,
                 const char* command) {
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = opts.seed;
  j["status"] = status;
  RunResult r;
  r.status = status;
  if (opts.json) {
    r.output = j.dump(2) + "\n";
  } else {
    render_text(j, "", r.output);
  }
  return r;
}

}  // namespace

RunResult run_check(const WeightMatrix& m, const ReportOptions& opts) {
  bool ok = false;
  json j = check_json(m, ok);
  return finish(std::move(j), opts, ok ? 0 : 1, "check");
}

RunResult run_catalog(const WeightMatrix& m, const ReportOptions& opts) {
  bool ok = false;
  json j = check_json(m, ok);
  if (ok) {
    if (const auto* t = std::get_if<ThetaMatrix>(&m))
      j["catalog"] = catalog_json(catalog_theta(*t));
    else
      j["catalog"] = catalog_json(catalog_omega(std::get<OmegaMatrix>(m)));
  } else {
    j["catalog"] = nullptr;
  }
  return finish(std::move(j), opts, ok ? 0 : 1, "catalog");
}

RunResult run_sample(const WeightMatrix& m, const ReportOptions& opts) {
  bool ok = false;
  json j = check_json(m, ok);
  json runs = json::array();
  int converged = 0;
  for (int i = 0; i < opts.seeds; ++i) {
    SolveOptions so;
    so.tol = opts.tol;
    so.max_iter = opts.max_iter;
    so.seed = opts.seed + static_cast<std::uint64_t>(i);
    const SolveReport rep =
        std::holds_alternative<ThetaMatrix>(m)
            ? find_point(std::get<ThetaMatrix>(m), so)
            : find_point_omega(std::get<OmegaMatrix>(m), so);
    json rj;
    rj["seed"] = so.seed;
    rj["converged"] = rep.converged;
    rj["residual"] = fmt17(rep.residual);
    rj["iterations"] = rep.iterations;
    rj["rank"] = rep.rank;
    rj["min_pair_norm"] = fmt17(rep.min_pair_norm);
    runs.push_back(rj);
    if (rep.converged) ++converged;
  }
  j["solver"] = {{"runs", runs},
                 {"converged", converged},
                 {"requested", opts.seeds},
                 {"tol", fmt17(opts.tol)}};
  const int status = (converged > 0) ? 0 : 1;
  return finish(std::move(j), opts, status, "sample");
}

namespace {

long long rand_entry(std::uint64_t& state, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(splitmix64(state) % span);
}

}  // namespace

RunResult run_verify(const ReportOptions& opts) {
  json j;
  bool pass = true;

  std::uint64_t state = opts.seed ^ 0x7c3a9d15f0e42b61ULL;
  int identity_failures = 0;
  const int identity_draws = 2000;
  for (int i = 0; i < identity_draws; ++i) {
    ThetaMatrix t;
    for (int c = 0; c < 4; ++c) {
      t.p[c] = rand_entry(state, -20, 20);
      t.q[c] = rand_entry(state, -20, 20);
      t.l[c] = rand_entry(state, -20, 20);
    }
    const MinorSetTheta m = minors_theta(t);
    const BoxSet direct = boxes(t);
    const BoxSet via = boxes_via_minors(m);
    bool good = true;
    for (const auto& s : SignTriple::all())
      if (direct.at(s) != via.at(s)) good = false;
    const MinorSetTheta back = minors_via_boxes(
        direct.at({+1, +1, +1}), direct.at({+1, -1, +1}),
        direct.at({-1, +1, -1}), direct.at({+1, -1, -1}));
    if (back.as_array() != m.as_array()) good = false;
    if (!good) ++identity_failures;
  }
  j["identity_suite"] = {{"draws", identity_draws},
                         {"failures", identity_failures}};
  if (identity_failures > 0) pass = false;

  const ObstructionReport obs = freeness_obstruction();
  json nm = json::array();
  for (const auto& miss : obs.near_misses) {
    json mj;
    mj["minors"] = {miss.minors[0].get_str(), miss.minors[1].get_str(),
                    miss.minors[2].get_str(), miss.minors[3].get_str()};
    mj["violated_boxes"] = miss.violated_boxes;
    nm.push_back(mj);
  }
  j["obstruction"] = {{"assignments_checked", obs.assignments_checked},
                      {"refuted", obs.refuted},
                      {"near_misses", nm}};
  if (obs.refuted) pass = false;

  double max_err = 0;
  for (int i = 0; i < 200; ++i) {
    double g[4];
    for (double& v : g) v = 2.0 * (splitmix64(state) >> 11) * 0x1.0p-53 - 1.0;
    const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] +
                               g[3] * g[3]);
    if (n < 1e-6) continue;
    const std::complex<double> eps(g[0] / n, g[1] / n), sig(g[2] / n, g[3] / n);
    const double phi = 2.0 * 3.14159265358979323846 *
                       ((splitmix64(state) >> 11) * 0x1.0p-53);
    const double th = 2.0 * 3.14159265358979323846 *
                      ((splitmix64(state) >> 11) * 0x1.0p-53);
    const std::complex<double> rho(std::cos(phi), std::sin(phi));
    const DetMAlpha d = det_M_alpha(eps, sig, rho, th);
    max_err = std::max(max_err, std::abs(d.direct - d.factored));
  }
  j["det_block_suite"] = {{"draws", 200}, {"max_error", fmt17(max_err)}};
  if (max_err >= 1e-9) pass = false;

  return finish(std::move(j), opts, pass ? 0 : 1, "verify");
}

}  // namespace orbiquot

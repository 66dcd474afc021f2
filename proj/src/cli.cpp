// Copyright 2026 The semicayley Authors
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

#include "semicayley/cli.hpp"

#include <iomanip>
#include <sstream>
#include <variant>

#include "semicayley/error.hpp"

namespace semicayley {

namespace {

const char* const kCommands[] = {"spectrum", "evolve", "pst-check", "pst-find",
                                 "period"};

struct Report {
  Json json;
  std::string text;
};

void check_config(const JobConfig& c) {
  bool known = false;
  for (const char* k : kCommands) known = known || c.command == k;
  if (!known) throw ValidationError("unknown command '" + c.command + "'");
  if (c.format != "json" && c.format != "text") {
    throw ValidationError("format must be json or text");
  }
  if (!(c.tol > 0.0) || c.tol >= 1.0) {
    throw ValidationError("tolerance must lie in (0, 1)");
  }
  if (c.graph.is_null()) throw ValidationError("no graph given");
}

Json time_json(const std::variant<PiMultiple, double>& t) {
  if (const auto* pm = std::get_if<PiMultiple>(&t)) return Json(pm->str());
  return Json(std::get<double>(t));
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string verdict_line(const PstVerdict& v) {
  std::string out = v.from.str() + " -> " + v.to.str() + ": " +
                    to_string(v.status) + " (" + v.certificate.route + ", " +
                    to_string(v.certificate.rule);
  if (!v.certificate.detail.empty()) out += ", " + v.certificate.detail;
  out += ")";
  if (v.time) out += " at t = " + v.time->str();
  return out;
}

std::string period_line(const PeriodReport& p) {
  if (!p.periodic) return "not periodic";
  if (!p.min_period) return "periodic, H(t) = I for all t";
  return "periodic, minimum period " + p.min_period->str();
}

Report spectrum_report(const SemiCayleySpec& spec) {
  const Spectrum s = compute_spectrum(spec);
  Report r{Json{{"graph", to_json(spec)}, {"spectrum", to_json(s)}}, ""};
  std::ostringstream t;
  for (const auto& p : s.pairs) {
    t << "chi" << GroupElement(p.character.indices()).str()
      << ": lambda+ = " << fmt(p.plus.value)
      << ", lambda- = " << fmt(p.minus.value) << "\n";
  }
  t << (is_integral(s) ? "integral" : "not integral") << "\n";
  r.text = t.str();
  return r;
}

Report evolve_report(const SemiCayleySpec& spec, const JobConfig& c) {
  if (!c.time) throw ValidationError("evolve needs --time");
  const auto parsed = parse_time(*c.time);
  const double t = time_value(parsed);
  const TransferMatrix h = transfer_matrix(spec, t);
  const TransferMatrix o = oracle_expm(build(spec), t);
  const double gap = (h.entries - o.entries).cwiseAbs().maxCoeff();
  if (gap > 1e-8) {
    throw ConsistencyError("closed-form and exponential transfer matrices "
                           "differ by " + fmt(gap));
  }
  Report r;
  r.json = Json{{"t", t}, {"time", time_json(parsed)}};
  std::ostringstream text;
  if (c.from || c.to) {
    if (!c.from || !c.to) throw ValidationError("give both --from and --to");
    const Vertex u = parse_vertex(spec.group(), *c.from);
    const Vertex v = parse_vertex(spec.group(), *c.to);
    const auto z = h.entries(spec.vertex_index(u), spec.vertex_index(v));
    r.json["from"] = to_json(u);
    r.json["to"] = to_json(v);
    r.json["entry"] = to_json(z);
    r.json["magnitude"] = std::abs(z);
    text << "H(" << fmt(t) << ")" << u.str() << "," << v.str() << " = "
         << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ")
         << fmt(std::abs(z.imag())) << "i, |.| = " << fmt(std::abs(z)) << "\n";
  } else {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < h.entries.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < h.entries.cols(); ++j) {
        row.push_back(to_json(h.entries(i, j)));
        text << (j ? " " : "") << fmt(std::abs(h.entries(i, j)));
      }
      rows.push_back(std::move(row));
      text << "\n";
    }
    r.json["entries"] = std::move(rows);
  }
  r.text = text.str();
  return r;
}

Report pst_check_report(const SemiCayleySpec& spec, const JobConfig& c) {
  if (!c.from || !c.to) throw ValidationError("pst-check needs --from and --to");
  const Vertex u = parse_vertex(spec.group(), *c.from);
  const Vertex v = parse_vertex(spec.group(), *c.to);
  const PstVerdict verdict = decide(spec, u, v);
  Report r{Json{{"verdict", to_json(verdict)}}, verdict_line(verdict) + "\n"};
  if (c.time) {
    const auto parsed = parse_time(*c.time);
    const TimeCheck check =
        verify_at_time(spec, u, v, time_value(parsed), c.tol);
    r.json["time"] = time_json(parsed);
    r.json["check"] = to_json(check);
    r.json["pass"] = check.pass;
    r.json["magnitude"] = check.oracle_magnitude;
    r.text += std::string("at t = ") + fmt(check.time) + ": |H_uv| = " +
              fmt(check.oracle_magnitude) + (check.pass ? ", pass" : ", fail") +
              "\n";
  }
  return r;
}

Report pst_find_report(const SemiCayleySpec& spec, const JobConfig& c) {
  const auto found = find_pst(spec, c.tol);
  const PeriodReport period = periodicity(spec);
  Json verdicts = Json::array();
  std::string text;
  for (const auto& v : found) {
    verdicts.push_back(to_json(v));
    text += verdict_line(v) + "\n";
  }
  if (found.empty()) text += "no PST\n";
  text += period_line(period) + "\n";
  return {Json{{"graph", to_json(spec)},
               {"has_pst", !found.empty()},
               {"verdicts", std::move(verdicts)},
               {"periodicity", to_json(period)}},
          text};
}

Report period_report(const SemiCayleySpec& spec) {
  const Spectrum s = compute_spectrum(spec);
  const PeriodReport p = periodicity(spec, s);
  Json j = to_json(p);
  j["graph"] = to_json(spec);
  j["vertex"] = Json{{"layer0", to_json(vertex_periodicity(spec, s, 0))},
                     {"layer1", to_json(vertex_periodicity(spec, s, 1))}};
  return {j, period_line(p) + "\n"};
}

Report dispatch(const JobConfig& c) {
  check_config(c);
  const SemiCayleySpec spec = spec_from_json(c.graph);
  if (c.command == "spectrum") return spectrum_report(spec);
  if (c.command == "evolve") return evolve_report(spec, c);
  if (c.command == "pst-check") return pst_check_report(spec, c);
  if (c.command == "pst-find") return pst_find_report(spec, c);
  return period_report(spec);
}

int emit_error(std::ostream& out, const JobConfig& c, const char* kind,
               const std::string& message, int code) {
  if (c.format == "text") {
    out << kind << " error: " << message << "\n";
  } else {
    out << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump(2)
        << "\n";
  }
  return code;
}

}  // namespace

JobConfig job_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("job config must be an object");
  JobConfig c;
  Json graph = j;
  auto take = [&](const char* key) -> std::optional<Json> {
    if (!j.contains(key)) return std::nullopt;
    graph.erase(key);
    return j.at(key);
  };
  auto take_string = [&](const char* key) -> std::optional<std::string> {
    auto v = take(key);
    if (!v) return std::nullopt;
    if (v->is_string()) return v->get<std::string>();
    if (v->is_number() || v->is_array()) return v->dump();
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  };
  if (auto v = take_string("command")) c.command = *v;
  if (auto v = take("tol")) {
    if (!v->is_number()) throw ValidationError("tol must be a number");
    c.tol = v->get<double>();
  }
  if (auto v = take_string("format")) c.format = *v;
  c.time = take_string("time");
  c.from = take_string("from");
  c.to = take_string("to");
  if (auto g = take("graph")) {
    if (!graph.empty()) {
      throw ValidationError("give the graph either inline or under 'graph'");
    }
    c.graph = *g;
  } else {
    c.graph = graph;
  }
  return c;
}

int run(const JobConfig& config, std::ostream& out) {
  try {
    const Report r = dispatch(config);
    if (config.format == "text") {
      out << r.text;
    } else {
      out << r.json.dump(2) << "\n";
    }
    return 0;
  } catch (const ValidationError& e) {
    return emit_error(out, config, "validation", e.what(), 1);
  } catch (const Json::exception& e) {
    return emit_error(out, config, "validation", e.what(), 1);
  } catch (const ConsistencyError& e) {
    return emit_error(out, config, "consistency", e.what(), 2);
  }
}

}  // namespace semicayley

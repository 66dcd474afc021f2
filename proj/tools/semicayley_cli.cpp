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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "semicayley/cli.hpp"
#include "semicayley/error.hpp"

namespace {

semicayley::Json parse_json(const std::string& text, const std::string& what) {
  try {
    return semicayley::Json::parse(text);
  } catch (const semicayley::Json::exception& e) {
    throw semicayley::ValidationError("malformed JSON in " + what + ": " +
                                      e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-Cayley graph spectra, quantum walks and perfect state "
               "transfer"};
  std::string command;
  std::optional<std::string> config_file, graph, family, factors, y, time,
      format, from, to;
  std::optional<int> n, d;
  std::optional<double> tol;
  app.add_option("command", command,
                 "spectrum | evolve | pst-check | pst-find | period");
  app.add_option("--config", config_file, "job file (JSON)");
  app.add_option("--graph", graph, "inline JSON graph spec");
  app.add_option("--family", family, "named family");
  app.add_option("--n", n, "family size parameter");
  app.add_option("--d", d, "hypercube dimension");
  app.add_option("--factors,--A", factors,
                 "group factors for the dihedral/dicyclic families, e.g. 2,4");
  app.add_option("--y", y, "involution y of A for dicyclic families, e.g. 0,2");
  app.add_option("--tol", tol, "magnitude tolerance (default 1e-8)");
  app.add_option("--time", time, "time: \"p/q pi\", \"pi/q\" or a float");
  app.add_option("--format", format, "json | text");
  app.add_option("--from", from, "vertex [[exponents],layer]");
  app.add_option("--to", to, "vertex [[exponents],layer]");
  CLI11_PARSE(app, argc, argv);

  semicayley::JobConfig job;
  try {
    if (config_file) {
      std::ifstream in(*config_file);
      if (!in) throw semicayley::ValidationError("cannot read " + *config_file);
      std::stringstream buf;
      buf << in.rdbuf();
      job = semicayley::job_from_json(parse_json(buf.str(), *config_file));
    }
    if (!command.empty()) job.command = command;
    if (tol) job.tol = *tol;
    if (time) job.time = time;
    if (format) job.format = *format;
    if (from) job.from = from;
    if (to) job.to = to;
    const int sources = static_cast<int>(graph.has_value()) +
                        static_cast<int>(family.has_value());
    if (sources > 1 || (sources == 1 && !job.graph.is_null())) {
      throw semicayley::ValidationError("give exactly one graph source");
    }
    if (graph) job.graph = parse_json(*graph, "--graph");
    if (family) {
      auto list = [](const std::string& s) {
        return parse_json("[" + s + "]", "integer list");
      };
      job.graph = semicayley::Json{{"family", *family}};
      if (n) job.graph["n"] = *n;
      if (d) job.graph["d"] = *d;
      if (factors) job.graph["A"] = list(*factors);
      if (y) job.graph["y"] = list(*y);
    }
  } catch (const semicayley::ValidationError& e) {
    std::cout << semicayley::Json{{"error", {{"kind", "validation"},
                                             {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 1;
  }
  return semicayley::run(job, std::cout);
}

// Copyright 2026 The homocalc Authors
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

// Command-line front end: evaluate positively homogeneous functions, run the
// lattice functional calculus, build and evaluate saddle families, and run
// the verification checks. Results are written as JSON.
//
// Exit status: 0 success, 1 check failure, 2 input error, 3 numerical failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "homocalc/homocalc.hpp"
#include "homocalc/io.hpp"

namespace {

using homocalc::Error;
using homocalc::ErrorKind;
using homocalc::io::json;

struct Options {
  std::string builtin;
  std::string family_path;
  std::string saddle_path;
  std::string x;
  std::vector<std::string> f;
  std::string lattice = "rm";
  double tol = 1e-9;
  std::size_t budget = 0;
  std::uint64_t seed = 1;
  std::string out;
  int dim = 0;
  std::size_t angles = 32;
  std::string check;
  std::size_t trials = 0;
};

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, flag, "not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, flag, "empty vector");
  return out;
}

homocalc::Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const homocalc::Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "read", path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "read", path + ": " + e.what());
  }
}

template <class F>
auto in_file(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    throw Error(e.kind(), e.operation(), path + ": " + e.what());
  }
}

homocalc::PHFunction load_function(const Options& o) {
  if (o.builtin.empty() == o.family_path.empty()) {
    throw Error(ErrorKind::InvalidInput, "load", "give exactly one of --builtin or --family");
  }
  homocalc::PHFunction h;
  if (!o.builtin.empty()) {
    h = homocalc::builtin(o.builtin, o.dim);
  } else {
    const json doc = read_json_file(o.family_path);
    h = in_file(o.family_path, [&] { return homocalc::io::to_function(homocalc::io::family_document_from_json(doc)); });
  }
  if (o.budget > 0) {
    if (h.inf_family) h.inf_family = h.inf_family->with_budget(o.budget);
    if (h.sup_family) h.sup_family = h.sup_family->with_budget(o.budget);
  }
  return h;
}

homocalc::LatticeElement parse_element(const std::string& text, const std::string& lattice) {
  if (lattice == "rm") return homocalc::RmElement{to_vector(parse_list(text, "--f"))};
  if (lattice == "step") {
    const auto bar = text.find('|');
    if (bar == std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "--f", "step functions are written 't0,...,tk|v1,...,vk'");
    }
    return homocalc::StepFunction(parse_list(text.substr(0, bar), "--f"), parse_list(text.substr(bar + 1), "--f"));
  }
  throw Error(ErrorKind::InvalidInput, "--lattice", "expected rm or step, got '" + lattice + "'");
}

std::vector<homocalc::LatticeElement> parse_elements(const Options& o) {
  if (o.f.empty()) throw Error(ErrorKind::InvalidInput, "fc", "no --f given");
  std::vector<homocalc::LatticeElement> fs;
  for (const auto& text : o.f) fs.push_back(parse_element(text, o.lattice));
  return fs;
}

homocalc::Vector parse_point(const Options& o) {
  if (o.x.empty()) throw Error(ErrorKind::InvalidInput, "eval", "no --x given");
  return to_vector(parse_list(o.x, "--x"));
}

json reports_json(const std::vector<homocalc::CheckReport>& reports, bool& all_passed) {
  json arr = json::array();
  all_passed = true;
  for (const auto& r : reports) {
    arr.push_back(homocalc::io::to_json(r));
    all_passed = all_passed && r.passed();
  }
  return {{"reports", arr}, {"passed", all_passed}};
}

int run(const std::string& command, const Options& o, json& result) {
  if (command == "eval") {
    const auto h = load_function(o);
    const auto v = homocalc::eval_family(h, parse_point(o), o.tol);
    result = {{"value", v.value},
              {"family_terms_used", v.terms_used},
              {"representation_warning", v.representation_warning}};
    return 0;
  }
  if (command == "fc") {
    const auto h = load_function(o);
    const auto fs = parse_elements(o);
    result = homocalc::io::to_json(homocalc::fc_semicontinuous(h, fs, o.tol));
    return 0;
  }
  if (command == "saddle-build") {
    std::vector<homocalc::SublinearMap> phis;
    std::vector<homocalc::SuperlinearMap> psis;
    if (o.builtin == "square-mean") {
      phis = {homocalc::unit_disk_map()};
      psis = homocalc::angle_grid_maps(o.angles);
    } else {
      const auto h = load_function(o);
      if (!h.inf_family || !h.sup_family || h.inf_family->is_generated() || h.sup_family->is_generated()) {
        throw Error(ErrorKind::InvalidInput, "saddle-build", "needs a function with finite inf- and sup-families");
      }
      phis = h.inf_family->maps();
      psis = h.sup_family->maps();
    }
    result = homocalc::io::to_json(homocalc::saddle_build(phis, psis, o.tol));
    return 0;
  }
  if (command == "saddle-eval") {
    if (o.saddle_path.empty()) throw Error(ErrorKind::InvalidInput, "saddle-eval", "no --saddle given");
    const json doc = read_json_file(o.saddle_path);
    const auto s = in_file(o.saddle_path, [&] { return homocalc::io::saddle_from_json(doc); });
    if (!o.f.empty()) {
      const double gap_tol = o.tol > 1e-9 ? o.tol : 1e-6;
      result = {{"element", homocalc::io::to_json(homocalc::fc_saddle(s, parse_elements(o), gap_tol))}};
      return 0;
    }
    const auto v = homocalc::saddle_eval(s, parse_point(o));
    result = {{"infsup", v.infsup}, {"supinf", v.supinf}};
    return 0;
  }
  if (command == "check" || command == "suite") {
    std::vector<homocalc::CheckReport> reports;
    if (command == "suite") {
      reports = homocalc::default_suite(o.seed);
    } else {
      if (o.check.empty()) throw Error(ErrorKind::InvalidInput, "check", "no --name given");
      reports = homocalc::run_check(o.check, o.seed, o.trials);
    }
    bool passed = true;
    result = reports_json(reports, passed);
    return passed ? 0 : 1;
  }
  throw Error(ErrorKind::InvalidInput, "cli", "unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional calculus for semicontinuous positively homogeneous functions"};
  app.require_subcommand(1, 1);
  Options o;
  if (const char* env = std::getenv("HOMOCALC_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: HOMOCALC_SEED is not an unsigned integer\n";
      return 2;
    }
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--builtin", o.builtin, "Built-in function name");
    sub->add_option("--family", o.family_path, "Family JSON file");
    sub->add_option("--tol", o.tol, "Evaluation tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "Budget override for generated families");
    sub->add_option("--dim", o.dim, "Dimension for abs-sum and max-coord");
    sub->add_option("--seed", o.seed, "Random seed (default $HOMOCALC_SEED or 1)");
    sub->add_option("--out", o.out, "Write JSON here instead of stdout");
  };
  auto* eval = app.add_subcommand("eval", "h(x) through the representing family");
  add_common(eval);
  eval->add_option("--x", o.x, "Point, comma separated")->required();

  auto* fc = app.add_subcommand("fc", "h(f_1, ..., f_n) in a concrete lattice");
  add_common(fc);
  fc->add_option("--f", o.f, "Lattice element (repeat once per argument)")->required();
  fc->add_option("--lattice", o.lattice, "rm or step")->check(CLI::IsMember({"rm", "step"}));

  auto* build = app.add_subcommand("saddle-build", "Saddle family from finite families");
  add_common(build);
  build->add_option("--angles", o.angles, "Angle count for --builtin square-mean")->check(CLI::PositiveNumber);

  auto* seval = app.add_subcommand("saddle-eval", "Both orderings of a saddle family at --x, or fc_saddle on --f");
  add_common(seval);
  seval->add_option("--saddle", o.saddle_path, "Saddle family JSON file")->required();
  seval->add_option("--x", o.x, "Point, comma separated");
  seval->add_option("--f", o.f, "Lattice element (repeatable)");
  seval->add_option("--lattice", o.lattice, "rm or step")->check(CLI::IsMember({"rm", "step"}));

  auto* check = app.add_subcommand("check", "Run one named check");
  add_common(check);
  check->add_option("--name", o.check, "Check name")->required()->check(CLI::IsMember(homocalc::check_names()));
  check->add_option("--trials", o.trials, "Trial count override");

  auto* suite = app.add_subcommand("suite", "Run every check with default parameters");
  add_common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json result;
  int status = 0;
  try {
    status = run(command, o, result);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homocalc::is_numerical(e.kind()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << command << ": " << e.what() << "\n";
    return 2;
  }

  const std::string text = result.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    out << text;
  }
  return status;
}

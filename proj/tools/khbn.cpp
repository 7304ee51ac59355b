#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "khbn/khbn.hpp"

using json = nlohmann::ordered_json;

namespace {

// PD input is either a path to a readable file or an inline code.
std::string read_pd_input(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string cell_text(int free_rank, const std::map<int, int>* tors, int dim, bool kh) {
  if (kh) return dim > 0 ? std::to_string(dim) : "";
  std::string s;
  if (free_rank > 0) s += (free_rank > 1 ? std::to_string(free_rank) : "") + "F";
  if (tors)
    for (const auto& [order, count] : *tors) {
      if (!s.empty()) s += "+";
      if (count > 1) s += std::to_string(count) + "*";
      s += "H^" + std::to_string(order);
    }
  return s;
}

// Aligned table, rows i, columns q.
std::string module_table(const khbn::GradedModule& mod, bool kh) {
  std::set<int> is, qs;
  auto note = [&](const khbn::Bigrading& bg) {
    is.insert(bg.i);
    qs.insert(bg.q);
  };
  for (const auto& [bg, v] : mod.dims) note(bg);
  for (const auto& [bg, v] : mod.free_ranks) note(bg);
  for (const auto& [bg, v] : mod.torsion) note(bg);
  if (is.empty()) return "(zero module)\n";

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"i\\q"};
  for (int q : qs) header.push_back(std::to_string(q));
  cells.push_back(header);
  for (int i : is) {
    std::vector<std::string> row{std::to_string(i)};
    for (int q : qs) {
      const khbn::Bigrading bg{i, q};
      const auto d = mod.dims.count(bg) ? mod.dims.at(bg) : 0;
      const auto f = mod.free_ranks.count(bg) ? mod.free_ranks.at(bg) : 0;
      const auto* t = mod.torsion.count(bg) ? &mod.torsion.at(bg) : nullptr;
      row.push_back(cell_text(f, t, d, kh));
    }
    cells.push_back(row);
  }

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

json module_json(const khbn::GradedModule& mod, const std::string& theory, const std::string& diagram) {
  json j;
  j["theory"] = theory;
  j["diagram"] = diagram;
  j["free"] = json::array();
  for (const auto& [bg, r] : mod.free_ranks)
    for (int c = 0; c < r; ++c) j["free"].push_back({{"i", bg.i}, {"q", bg.q}});
  j["torsion"] = json::array();
  for (const auto& [bg, m] : mod.torsion)
    for (const auto& [order, count] : m)
      for (int c = 0; c < count; ++c) j["torsion"].push_back({{"i", bg.i}, {"q", bg.q}, {"k", order}});
  j["dims"] = json::array();
  for (const auto& [bg, d] : mod.dims) j["dims"].push_back({{"i", bg.i}, {"q", bg.q}, {"d", d}});
  return j;
}

json report_json(const khbn::CheckReport& rep, const std::string& diagram) {
  json j;
  j["check"] = rep.check;
  j["diagram"] = diagram;
  j["status"] = rep.pass ? "pass" : "fail";
  j["failures"] = json::array();
  for (const auto& f : rep.failures)
    j["failures"].push_back({{"alpha", f.alpha}, {"labels", f.labels}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov and Bar-Natan homology of links from PD codes"};
  app.require_subcommand(1);

  std::string pd_arg, pd_arg_b;
  std::string theory = "kh";
  std::string format = "table";
  std::string checks_arg = "all";
  int max_crossings = khbn::kDefaultMaxCrossings;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("pd", pd_arg, "PD code, inline or a file path")->required();
    cmd->add_option("--max-crossings", max_crossings, "crossing-count guard");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute a homology theory");
  add_common(compute);
  compute->add_option("--theory", theory, "kh, bn, reduced-x, or reduced-1")
      ->check(CLI::IsMember({"kh", "bn", "reduced-x", "reduced-1"}));
  compute->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run chain-level and module-level checks");
  add_common(verify);
  verify->add_option("--checks", checks_arg, "comma-separated subset of dsq,k0,ladder,full,iota,split,jones or all");
  verify->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  CLI::App* jones = app.add_subcommand("jones", "state-sum Jones polynomial");
  add_common(jones);

  CLI::App* dump = app.add_subcommand("dump", "cube of resolutions, one line per vertex and edge");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const khbn::LinkDiagram diagram = khbn::parse_pd(read_pd_input(pd_arg));
    const std::string diagram_text = khbn::serialize(diagram);

    if (jones->parsed()) {
      std::cout << khbn::jones_state_sum(diagram, max_crossings).to_string() << "\n";
      return 0;
    }

    khbn::Cube cube(diagram, max_crossings);

    if (dump->parsed()) {
      std::cout << cube.dump();
      return 0;
    }

    if (compute->parsed()) {
      khbn::GradedModule mod;
      if (theory == "kh")
        mod = khbn::kh_homology(cube);
      else if (theory == "bn")
        mod = khbn::bn_homology(cube, khbn::Reduction::full);
      else if (theory == "reduced-x")
        mod = khbn::bn_homology(cube, khbn::Reduction::x_sub);
      else
        mod = khbn::bn_homology(cube, khbn::Reduction::one_quot);
      if (format == "json")
        std::cout << module_json(mod, theory, diagram_text).dump(2) << "\n";
      else
        std::cout << module_table(mod, theory == "kh");
      return 0;
    }

    // verify
    std::vector<std::string> selected;
    {
      std::stringstream ss(checks_arg);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) selected.push_back(tok);
    }
    const std::vector<std::string> all = {"dsq", "k0", "ladder", "full", "iota", "split", "jones"};
    if (selected.size() == 1 && selected[0] == "all") selected = all;
    for (const auto& c : selected)
      if (std::find(all.begin(), all.end(), c) == all.end()) {
        std::cerr << "unknown check '" << c << "'\n";
        return 2;
      }

    std::vector<khbn::CheckReport> reports;
    for (const auto& c : selected) {
      if (c == "dsq")
        reports.push_back(khbn::check_d_squared(cube));
      else if (c == "k0")
        reports.push_back(khbn::check_k0(cube));
      else if (c == "ladder")
        reports.push_back(khbn::check_ladder(cube));
      else if (c == "full")
        reports.push_back(khbn::check_full_homotopy(cube));
      else if (c == "iota")
        reports.push_back(khbn::check_iota(cube));
      else if (c == "split")
        reports.push_back(khbn::check_splitting(cube));
      else
        reports.push_back(khbn::check_euler_jones(cube));
    }

    bool all_pass = true;
    if (format == "json") {
      json j = json::array();
      for (const auto& rep : reports) {
        j.push_back(report_json(rep, diagram_text));
        all_pass = all_pass && rep.pass;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& rep : reports) {
        std::cout << rep.line() << "\n";
        all_pass = all_pass && rep.pass;
      }
    }
    return all_pass ? 0 : 1;
  } catch (const khbn::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const khbn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

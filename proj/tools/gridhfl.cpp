// gridhfl: command-line front end.
//
// Exit codes: 0 ok, 1 bad input, 2 resource cap, 3 invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridhfl/acceptance.hpp"
#include "gridhfl/braid.hpp"
#include "gridhfl/complex.hpp"
#include "gridhfl/config.hpp"
#include "gridhfl/errors.hpp"
#include "gridhfl/flype_search.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/json.hpp"
#include "gridhfl/pentagon.hpp"
#include "gridhfl/registry.hpp"
#include "gridhfl/transverse.hpp"

namespace {

using gridhfl::json;

enum ExitCode { kOk = 0, kInput = 1, kResource = 2, kInvariant = 3 };

struct Inputs {
  std::string word;
  std::string example;
  std::string grid_file;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw gridhfl::InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

gridhfl::BraidWord word_from(const Inputs& in) {
  if (!in.example.empty()) {
    const auto& e = gridhfl::find_example(in.example);
    if (!e.word) throw gridhfl::InputError("example '" + in.example + "' is a grid, not a braid word");
    return *e.word;
  }
  if (in.word.empty()) throw gridhfl::InputError("give a braid word like \"2: 1 1 1\" or --example NAME");
  return gridhfl::parse_braid(in.word);
}

gridhfl::GridDiagram grid_from(const Inputs& in) {
  if (!in.grid_file.empty()) return gridhfl::parse_grid(read_text(in.grid_file));
  if (!in.example.empty()) return gridhfl::find_example(in.example).diagram();
  return gridhfl::braid_to_grid(word_from(in));
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void add_word_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("word", in.word, "braid word, e.g. \"3: 1 -2 1\"");
  cmd->add_option("--example", in.example, "named example (see `examples`)");
}

json sl_json(const gridhfl::BraidWord& w) {
  const auto parts = gridhfl::component_partition(w);
  return json{{"word", w},
              {"algebraic_length", gridhfl::algebraic_length(w)},
              {"self_linking", gridhfl::self_linking(w)},
              {"components", parts.component_count()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid homology and transverse braid invariants over F2"};
  app.require_subcommand(1);

  gridhfl::RunConfig cfg;
  std::string config_file;
  int max_k = 0;
  app.add_option("--config", config_file, "key=value configuration file");
  app.add_option("--max-k", max_k, "cap on the grid number for homology and boundary solves");
  app.add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  Inputs in;

  auto* validate_cmd = app.add_subcommand("validate", "check a grid file (`-` for stdin)");
  validate_cmd->add_option("grid", in.grid_file, "grid file")->required();

  auto* b2g = app.add_subcommand("braid2grid", "grid diagram of a braid word");
  add_word_inputs(b2g, in);

  auto* g2b = app.add_subcommand("grid2braid", "braid word read off a grid file");
  g2b->add_option("grid", in.grid_file, "grid file")->required();

  auto* sl_cmd = app.add_subcommand("sl", "algebraic length, self-linking number, components");
  add_word_inputs(sl_cmd, in);

  auto* sldata_cmd = app.add_subcommand("sldata", "self-linking numbers of all sublinks");
  add_word_inputs(sldata_cmd, in);

  auto* rank_cmd = app.add_subcommand("rank", "tilde homology ranks per bigrading");
  add_word_inputs(rank_cmd, in);
  rank_cmd->add_option("--grid", in.grid_file, "grid file instead of a word");

  auto* theta_cmd = app.add_subcommand("theta", "transverse invariant certificate");
  add_word_inputs(theta_cmd, in);
  bool check_negstab = false;
  std::vector<std::string> propagation;
  theta_cmd->add_flag("--check-negstab", check_negstab, "also certify theta after a negative stabilization");
  theta_cmd->add_option("--propagation", propagation, "G H: check theta(G), theta(H) nonzero => theta(HG) nonzero")
      ->expected(2);

  auto* pent_cmd = app.add_subcommand("pentagon", "pentagon map for a resolved positive letter");
  std::string pent_word;
  bool resolve_last = false;
  int letter = -1;
  pent_cmd->add_option("--word", pent_word, "braid word")->required();
  pent_cmd->add_flag("--resolve-last", resolve_last, "resolve the final letter");
  pent_cmd->add_option("--letter", letter, "resolve the letter at this 0-based index");

  auto* flype_cmd = app.add_subcommand("flype-search", "theta on small negative flype families");
  int flype_n = 3;
  int flype_len = 1;
  int flype_m = 1;
  int flype_k = 8;
  bool only_split = false;
  flype_cmd->add_option("--strands", flype_n, "strand count n");
  flype_cmd->add_option("--max-length", flype_len, "maximum fragment length");
  flype_cmd->add_option("--m", flype_m, "flype exponent");
  flype_cmd->add_option("--search-max-k", flype_k, "skip candidates whose grids exceed this size");
  flype_cmd->add_flag("--only-split", only_split, "print only pairs whose theta invariants differ");

  app.add_subcommand("examples", "list named examples");

  auto* report_cmd = app.add_subcommand("report", "run the acceptance suite");
  bool tamper = false;
  report_cmd->add_flag("--tamper-differential", tamper, "corrupt one differential entry (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    if (!config_file.empty()) gridhfl::apply_config_file(cfg, config_file);
    gridhfl::apply_environment(cfg);
    if (max_k > 0) gridhfl::apply_setting(cfg, "max_k", std::to_string(max_k));
    const auto& caps = cfg.caps;
    const bool table = cfg.format == "table";

    if (*validate_cmd) {
      const auto g = gridhfl::parse_grid(read_text(in.grid_file));
      std::cout << "ok: k=" << g.size << ", " << gridhfl::grid_component_count(g) << " component(s)\n";
    } else if (*b2g) {
      std::cout << gridhfl::format_grid(gridhfl::braid_to_grid(word_from(in)));
    } else if (*g2b) {
      std::cout << gridhfl::format_braid(gridhfl::grid_to_braid(gridhfl::parse_grid(read_text(in.grid_file))))
                << '\n';
    } else if (*sl_cmd) {
      const auto j = sl_json(word_from(in));
      if (table) {
        std::cout << "a(w) " << j["algebraic_length"] << "\nsl " << j["self_linking"] << "\ncomponents "
                  << j["components"] << '\n';
      } else {
        print(j);
      }
    } else if (*sldata_cmd) {
      const auto w = word_from(in);
      const auto parts = gridhfl::component_partition(w);
      print(json{{"word", w}, {"components", parts.cycles}, {"entries", gridhfl::self_linking_data(w)}});
    } else if (*rank_cmd) {
      const auto h = gridhfl::homology_ranks(grid_from(in), caps);
      if (table) {
        std::cout << "k=" << h.k << " components=" << h.components << " total=" << h.total
                  << " hat_total=" << h.hat_total << '\n';
        for (const auto& b : h.buckets) {
          std::cout << "M=" << b.grading.maslov << " A=";
          for (int a : b.grading.alexander2) std::cout << gridhfl::format_half(a) << ' ';
          std::cout << "rank=" << b.rank << '\n';
        }
      } else {
        print(h);
      }
    } else if (*theta_cmd) {
      if (!propagation.empty()) {
        const auto rep = gridhfl::check_nonzero_propagation(gridhfl::parse_braid(propagation[0]),
                                                            gridhfl::parse_braid(propagation[1]), caps);
        print(json{{"g", rep.g}, {"h", rep.h}, {"hg", rep.hg}, {"hypothesis", rep.hypothesis()},
                   {"holds", rep.holds()}});
        return rep.holds() ? kOk : kInvariant;
      }
      const auto w = word_from(in);
      if (check_negstab) {
        const auto rep = gridhfl::check_negative_stabilization(w, caps);
        print(json{{"original", rep.original}, {"stabilized", rep.stabilized}, {"holds", rep.holds()}});
        return rep.holds() ? kOk : kInvariant;
      }
      const auto cert = gridhfl::theta(w, caps);
      if (table) {
        std::cout << gridhfl::format_braid(w) << "  k=" << cert.grid.size
                  << (cert.vanishes ? "  theta = 0" : "  theta != 0") << '\n';
      } else {
        print(cert);
      }
    } else if (*pent_cmd) {
      const auto w = gridhfl::parse_braid(pent_word);
      if (resolve_last == (letter >= 0)) throw gridhfl::InputError("give exactly one of --resolve-last, --letter");
      const auto pair = resolve_last ? gridhfl::build_resolution_last(w)
                                     : gridhfl::build_resolution(w, static_cast<std::size_t>(letter));
      const auto rep = gridhfl::verify_theta_pentagon(pair, caps);
      const auto image = gridhfl::apply_phi_tilde(
          pair, {static_cast<std::uint32_t>(gridhfl::state_id(gridhfl::z_plus(pair.g_beta)))});
      print(json{{"pair", pair},
                 {"report", rep},
                 {"theta_image", image},
                 {"z_plus_gamma", gridhfl::state_id(gridhfl::z_plus(pair.g_gamma))}});
      return rep.passed() ? kOk : kInvariant;
    } else if (*flype_cmd) {
      const auto res = gridhfl::flype_search(flype_n, flype_len, flype_m, flype_k,
                                             [](const std::string& msg) { std::cerr << msg << '\n'; });
      json rows = json::array();
      for (const auto& c : res.candidates) {
        if (only_split && !c.split()) continue;
        json row{{"index", c.index},
                 {"a", gridhfl::format_braid(c.a)},
                 {"b", gridhfl::format_braid(c.b)},
                 {"c", gridhfl::format_braid(c.c)},
                 {"w1", gridhfl::format_braid(c.pair.w1)},
                 {"w2", gridhfl::format_braid(c.pair.w2)},
                 {"k1", c.k1},
                 {"k2", c.k2},
                 {"sl_data_equal", c.sl_data_equal},
                 {"sl_data_guaranteed", c.pair.sl_data_guaranteed},
                 {"split", c.split()}};
        row["w1_vanishes"] = c.w1_vanishes ? json(*c.w1_vanishes) : json(nullptr);
        row["w2_vanishes"] = c.w2_vanishes ? json(*c.w2_vanishes) : json(nullptr);
        rows.push_back(std::move(row));
      }
      if (table) {
        for (const auto& r : rows) {
          std::cout << r["index"] << "  " << r["w1"].get<std::string>() << "  |  " << r["w2"].get<std::string>()
                    << "  theta1=" << r["w1_vanishes"] << " theta2=" << r["w2_vanishes"]
                    << " sl_equal=" << r["sl_data_equal"] << '\n';
        }
      } else {
        print(json{{"strands", flype_n},
                   {"max_length", flype_len},
                   {"m", flype_m},
                   {"candidates", res.candidates.size()},
                   {"skipped", res.skipped},
                   {"pairs", rows}});
      }
    } else if (app.got_subcommand("examples")) {
      for (const auto& e : gridhfl::named_examples()) {
        std::cout << e.name << "  " << (e.word ? gridhfl::format_braid(*e.word) : "k=" + std::to_string(e.grid->size))
                  << "  (" << e.description << ")\n";
      }
    } else if (*report_cmd) {
      gridhfl::AcceptanceOptions opt{caps, tamper};
      bool ok = true;
      gridhfl::run_acceptance(opt, [&](const gridhfl::CriterionResult& r) {
        std::cout << gridhfl::format_result_line(r) << std::endl;
        if (r.status == gridhfl::CriterionStatus::fail) ok = false;
      });
      return ok ? kOk : kInvariant;
    }
    return kOk;
  } catch (const gridhfl::ResourceCapError& e) {
    std::cerr << json{{"error", "resource cap"},
                      {"message", e.what()},
                      {"grid_number", e.grid_number()},
                      {"cap", e.cap()},
                      {"generator_estimate", e.generator_estimate()}}
                     .dump()
              << '\n';
    return kResource;
  } catch (const gridhfl::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const gridhfl::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}

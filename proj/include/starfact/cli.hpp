#pragma once

// Command-line front end. Exit codes: 0 ok / valid; 1 verification failed or
// unreadable certificate (also an oracle search that ends without an answer);
// 2 inadmissible order or malformed arguments; 3 internal construction defect.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starfact/arrays.hpp"
#include "starfact/base_factor.hpp"
#include "starfact/construct.hpp"
#include "starfact/oracle.hpp"
#include "starfact/serialize.hpp"
#include "starfact/verifier.hpp"

namespace starfact {

enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_usage = 2, exit_defect = 3 };

namespace cli_detail {

inline std::string describe(const VerifyReport& rep) {
  std::ostringstream os;
  if (rep.valid()) {
    os << "valid: " << rep.factor_count << " factors, " << rep.edge_total << " edges\n";
    return os.str();
  }
  long long total = 0;
  for (const auto& [code, n] : rep.totals) total += n;
  os << "invalid: " << total << " problem(s)\n";
  for (const auto& [code, n] : rep.totals) os << "  " << to_string(code) << " x" << n << '\n';
  for (const auto& e : rep.errors) os << "  " << to_string(e.code) << ": " << e.message << '\n';
  return os.str();
}

inline std::string labeled(const LabeledStar& s) {
  std::string out = std::to_string(s.center) + ";";
  for (std::size_t k = 0; k < s.leaves.size(); ++k)
    out += " " + std::to_string(s.leaves[k]) + (s.labels[k] == EdgeLabel::prime ? "'" : "");
  return out;
}

inline std::string primed(const Star& s) {
  std::string out = std::to_string(s.center) + ";";
  for (Vertex l : s.leaves) out += " " + std::to_string(l) + "'";
  return out;
}

inline std::string render_base(const AlmostStarFactor& f, const DifferenceCensus& census) {
  std::ostringstream os;
  os << "g=" << f.g << " t=" << f.t << " m=" << f.m << " (v=" << 6 * f.g << ")\n";
  os << "pure stars (" << f.pure_stars.size() << ")\n";
  for (const Star& s : f.pure_stars) os << "  " << to_string(s) << '\n';
  if (f.mixed_star) os << "mixed star\n  " << labeled(*f.mixed_star) << '\n';
  os << "prime stars (" << f.prime_stars.size() << ")\n";
  for (const Star& s : f.prime_stars) os << "  " << primed(s) << '\n';
  if (f.little_star) os << "little star\n  " << primed(*f.little_star) << '\n';
  os << "isolated: " << (f.isolated.empty() ? "-" : vertex_list(f.isolated)) << '\n';
  os << "pure differences: " << vertex_list(census.pure_diffs()) << '\n';
  os << "prime differences: " << vertex_list(census.prime_diffs()) << '\n';
  return os.str();
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Construct and verify 5-star factorizations of K_v minus a perfect matching"};
  app.name("starfact");
  app.require_subcommand(1);

  int v = 0;
  int g = 0;
  std::string format = "json";
  std::string out_file;
  std::string cert_file;
  std::uint64_t budget = 10'000'000;

  auto* check = app.add_subcommand("check", "Admissibility and construction route for an order");
  check->add_option("V", v, "order")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build a verified decomposition");
  construct_cmd->add_option("V", v, "order")->required();
  construct_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  construct_cmd->add_option("--out", out_file, "write to FILE instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate (JSON or text)");
  verify_cmd->add_option("FILE", cert_file, "certificate path, '-' for stdin")->required();

  auto* base_cmd = app.add_subcommand("base", "Print the almost 5-star factor on G points");
  base_cmd->add_option("G", g, "base order")->required();

  auto* arrays_cmd = app.add_subcommand("arrays", "Print the balanced star arrays for an order");
  arrays_cmd->add_option("V", v, "order")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search at tiny orders");
  oracle_cmd->add_option("V", v, "order")->required();
  oracle_cmd->add_option("--budget", budget, "search node budget");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  auto reject = [&](int order) {
    const AdmissibilityResult a = admissible(order);
    err << "v=" << order << " is not admissible: " << to_string(a.reason) << '\n';
    return exit_usage;
  };

  try {
    if (*check) {
      const AdmissibilityResult a = admissible(v);
      if (!a.admissible) {
        out << "not admissible: " << to_string(a.reason) << '\n';
        return exit_usage;
      }
      const ConstructPlan p = plan(v);
      out << "admissible, g=" << p.g << ", t=" << p.t << ", route=" << p.route_name() << '\n';
      return exit_ok;
    }

    if (*construct_cmd) {
      if (!admissible(v).admissible) return reject(v);
      const Decomposition d = construct(v);
      const std::string body = format == "text" ? to_text(d) : to_json(d);
      if (out_file.empty()) {
        out << body;
      } else {
        std::ofstream f(out_file, std::ios::binary);
        f << body;
        if (!f) {
          err << "cannot write " << out_file << '\n';
          return exit_invalid;
        }
      }
      return exit_ok;
    }

    if (*verify_cmd) {
      std::string text;
      if (cert_file == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream f(cert_file, std::ios::binary);
        if (!f) {
          err << "cannot read " << cert_file << '\n';
          return exit_invalid;
        }
        text.assign(std::istreambuf_iterator<char>(f), {});
      }
      Decomposition d;
      try {
        d = parse_certificate(text);
      } catch (const ParseError& e) {
        err << "malformed certificate: " << e.what() << '\n';
        return exit_invalid;
      }
      const VerifyReport rep = verify_decomposition(d);
      out << "v=" << d.v << ' ' << cli_detail::describe(rep);
      return rep.valid() ? exit_ok : exit_invalid;
    }

    if (*base_cmd) {
      const auto params = base_params_for_order(g);
      if (!params) {
        err << "g=" << g << " is not a base order 30m+{12,7,2,27,22,17}\n";
        return exit_usage;
      }
      const AlmostStarFactor f = build_base_factor(*params);
      out << cli_detail::render_base(f, validate_base(f, declared_max_diff(f.t, f.m)));
      return exit_ok;
    }

    if (*arrays_cmd) {
      if (!admissible(v).admissible) return reject(v);
      const Construction c = build_construction(v);
      if (!c.arrays) {
        out << "v=" << v << " is built directly and uses no balanced star arrays\n";
        return exit_ok;
      }
      out << "v=" << v << ", route=" << c.plan.route_name() << ", Part I " << c.plan.part1_factors
          << ", Part II " << c.plan.part2_factors << '\n'
          << render_arrays(*c.arrays);
      return exit_ok;
    }

    if (*oracle_cmd) {
      SearchConfig cfg;
      cfg.v = v;
      cfg.budget = budget;
      const SearchResult r = exhaustive_search(cfg);
      out << "v=" << v << ' ' << to_string(r.status) << " after " << r.nodes << " nodes";
      if (!r.witness.empty()) out << " (" << r.witness << ')';
      out << '\n';
      if (r.status == SearchStatus::found) {
        Decomposition d = *r.decomposition;
        normalize(d);
        out << cli_detail::describe(verify_decomposition(d)) << to_text(d);
        return exit_ok;
      }
      return r.status == SearchStatus::nonexistent ? exit_usage : exit_invalid;
    }
  } catch (const StarfactError& e) {
    using K = StarfactError::Kind;
    err << "error: " << e.what() << '\n';
    if (e.kind() == K::inadmissible || e.kind() == K::unsupported_parameter) return exit_usage;
    return exit_defect;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace starfact

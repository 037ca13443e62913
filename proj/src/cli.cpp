#include "covgerm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "covgerm/acceptance.hpp"
#include "covgerm/constellation.hpp"
#include "covgerm/covering.hpp"
#include "covgerm/numeric.hpp"
#include "covgerm/poly_json.hpp"
#include "covgerm/ramdata.hpp"
#include "covgerm/resolution.hpp"
#include "covgerm/verify.hpp"

namespace covgerm {

namespace {

using nlohmann::json;

std::vector<long> parse_csv(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    long v = std::stol(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int emit_report(const VerificationReport& rep, std::ostream& out, std::ostream& err) {
  out << rep.to_json().dump(2) << '\n';
  for (const auto& name : rep.failures()) err << "failed: " << name << '\n';
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branched covering germs: construction, verification and search"};
  app.require_subcommand(1);
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "Seed for every randomized step")->capture_default_str();

  long max_n = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List canonical parameter tuples with N <= max-n");
  enumerate_cmd->add_option("--max-n", max_n)->required();

  std::string kase, method = "closed", sign = "+", builder;
  long k1 = 0, k2 = 0, l1 = 0, l2 = 0;
  unsigned bits = 256;
  auto* construct_cmd = app.add_subcommand("construct", "Build a covering map");
  construct_cmd->add_option("--case", kase)->required()->check(CLI::IsMember({"a", "b", "A", "B"}));
  construct_cmd->add_option("--k1", k1)->required();
  construct_cmd->add_option("--k2", k2)->required();
  construct_cmd->add_option("--l1", l1)->required();
  construct_cmd->add_option("--l2", l2)->required();
  construct_cmd->add_option("--method", method)->check(CLI::IsMember({"closed", "newton"}))->capture_default_str();
  construct_cmd->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}))->capture_default_str();
  construct_cmd->add_option("--builder", builder, "Closed form to use; default is the first available");
  construct_cmd->add_option("--bits", bits, "Precision for --method newton")->capture_default_str();

  std::string file;
  double eps = 1e-20;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a covering map JSON file");
  verify_cmd->add_option("--file", file)->required();
  verify_cmd->add_option("--eps", eps, "Tolerance for numeric maps")->capture_default_str();

  std::string alpha, beta, mode = "auto";
  long mid = 0;
  bool count_only = false;
  auto* belyi_cmd = app.add_subcommand("belyi", "Search constellations with a prescribed profile");
  belyi_cmd->add_option("--alpha", alpha)->required();
  belyi_cmd->add_option("--beta", beta)->required();
  belyi_cmd->add_option("--mid", mid)->required();
  belyi_cmd->add_flag("--count", count_only);
  belyi_cmd->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exhaustive", "random"}))->capture_default_str();

  long d1 = 0, d2 = 0;
  auto* resolve_cmd = app.add_subcommand("resolve", "Resolution chains of u^d1 = v^d2");
  resolve_cmd->add_option("--d1", d1)->required();
  resolve_cmd->add_option("--d2", d2)->required();

  long p = 0, q = 0;
  auto* extra_cmd = app.add_subcommand("extra", "Fiber-split and intersection identities for (p, q)");
  extra_cmd->add_option("--p", p)->required();
  extra_cmd->add_option("--q", q)->required();

  auto* self_test_cmd = app.add_subcommand("self-test", "Run the acceptance sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate_cmd) {
      json arr = json::array();
      for (const Params& t : enumerate(max_n))
        arr.push_back({{"params", to_json(t)}, {"derived", to_json(validate(t))},
                       {"table1", table1_name(table1_membership(t))}});
      out << arr.dump(2) << '\n';
      return kExitOk;
    }
    if (*construct_cmd) {
      Params prm{kase == "a" || kase == "A" ? Case::A : Case::B, k1, k2, l1, l2};
      validate(prm);
      if (method == "newton") {
        NumericOptions opts;
        opts.precision_bits = bits;
        opts.seed = seed;
        NumericBelyi nb = solve_belyi_numeric(prm, opts);
        PrecisionScope scope(bits);
        json j = to_json(numeric_from_belyi(nb));
        j["belyi"] = to_json(nb);
        out << j.dump(2) << '\n';
        return kExitOk;
      }
      auto avail = closed_forms(prm);
      if (avail.empty()) {
        err << "no closed form for " << prm.to_string() << "; try --method newton\n";
        return kExitUsage;
      }
      CoveringMap f = build_closed(prm, builder.empty() ? avail.front() : builder, sign == "-" ? -1 : 1);
      out << to_json(f).dump(2) << '\n';
      return kExitOk;
    }
    if (*verify_cmd) {
      std::ifstream in(file);
      if (!in) {
        err << "cannot open " << file << '\n';
        return kExitUsage;
      }
      json j = json::parse(in);
      if (j.value("numeric", false)) {
        PrecisionScope scope(256);
        return emit_report(verify_numeric(numeric_map_from_json(j), eps), out, err);
      }
      return emit_report(verify_covering(covering_from_json(j), seed), out, err);
    }
    if (*belyi_cmd) {
      ZannierProfile z{parse_csv(alpha), parse_csv(beta), mid, 0};
      for (long a : z.alpha) z.N += a;
      SearchOptions opts;
      opts.seed = seed;
      opts.mode = mode == "exhaustive" ? SearchMode::Exhaustive : mode == "random" ? SearchMode::Random : SearchMode::Auto;
      SearchResult res = search(z, opts);
      if (count_only)
        out << json{{"count", res.classes.size()}, {"exhaustive", res.exhaustive}}.dump(2) << '\n';
      else
        out << to_json(res).dump(2) << '\n';
      return kExitOk;
    }
    if (*resolve_cmd) {
      out << to_json(resolution_chains(d1, d2)).dump(2) << '\n';
      return kExitOk;
    }
    if (*extra_cmd) {
      VerificationReport rep = check_fiber_split(p, q);
      rep.append(check_extra_identity(p, q, seed));
      return emit_report(rep, out, err);
    }
    if (*self_test_cmd) {
      auto results = run_acceptance(seed);
      print_acceptance(results, out, err);
      return acceptance_ok(results) ? kExitOk : kExitVerifyFailed;
    }
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json_io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace covgerm

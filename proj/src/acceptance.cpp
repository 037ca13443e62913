#include "covgerm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "covgerm/constellation.hpp"
#include "covgerm/covering.hpp"
#include "covgerm/numeric.hpp"
#include "covgerm/ramdata.hpp"
#include "covgerm/resolution.hpp"
#include "covgerm/verify.hpp"

namespace covgerm {

namespace {

// Tolerances and budgets for the numeric criterion.
constexpr double kMatchTolerance = 1e-25;
constexpr double kResidualTolerance = 1e-20;
constexpr unsigned kNumericBits = 256;

struct Outcome {
  bool pass = false;
  std::string detail;
};

CriterionResult timed(std::string id, std::string title, double budget, const std::function<Outcome()>& body) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.budget = budget;
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = o.pass && r.seconds <= budget;
  r.detail = o.detail;
  if (o.pass && !r.pass) r.detail += "; over time budget";
  const auto& red = known_red();
  r.known_red = std::find(red.begin(), red.end(), r.id) != red.end();
  return r;
}

std::string sci(const Real& r) { return r.str(3, std::ios_base::scientific); }

Outcome closed_form_sweep(std::uint64_t seed) {
  long maps = 0, tuples = 0;
  std::string first_failure;
  for (const Params& p : enumerate(30)) {
    auto builders = closed_forms(p);
    if (builders.empty()) continue;
    ++tuples;
    for (const auto& name : builders) {
      bool signed_family = name == "a_n3" || name == "b_n3";
      for (int sign : signed_family ? std::vector<int>{1, -1} : std::vector<int>{1}) {
        CoveringMap f = build_closed(p, name, sign);
        VerificationReport rep = verify_covering(f, seed);
        ++maps;
        if (!rep.passed() && first_failure.empty()) {
          first_failure = p.to_string() + " " + name + ": " + rep.failures().front();
        }
      }
    }
  }
  std::ostringstream os;
  os << maps << " maps over " << tuples << " tuples";
  if (!first_failure.empty()) os << "; first failure " << first_failure;
  return {first_failure.empty() && maps > 0, os.str()};
}

Outcome formula_reproduction() {
  const std::vector<std::pair<long, long>> pairs{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7},
                                                 {3, 7}, {4, 5}, {5, 6}, {4, 7}, {5, 7}};
  int good = 0;
  std::string bad;
  for (auto [k1, k2] : pairs) {
    const int e1 = static_cast<int>(k1), e2 = static_cast<int>(k2);
    BiPoly u1 = BiPoly::monomial(Scalar(Rational(k1, k1 + k2)), 0, e2) +
                BiPoly::monomial(Scalar(Rational(k2, k1 + k2)), e1, 0);
    BiPoly v1 = BiPoly::monomial(1, 1, 1);
    BiPoly u2 = BiPoly::monomial(Scalar(Rational(k1 + 1, k1)), 1, e2) - BiPoly::monomial(Scalar(Rational(1, k1)), e1 + 1, 0);
    BiPoly v2 = BiPoly::y();
    CoveringMap r1 = build_row1(k1, k2, 1);
    CoveringMap r2 = build_row2(k1, k2, 1);
    bool ok = r1.u == u1 && r1.v == v1 && r2.u == u2 && r2.v == v2;
    good += ok ? 1 : 0;
    if (!ok && bad.empty()) bad = "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
  }
  std::string detail = std::to_string(good) + "/" + std::to_string(pairs.size()) + " pairs match";
  if (!bad.empty()) detail += "; first mismatch " + bad;
  return {good == static_cast<int>(pairs.size()), detail};
}

Outcome p_series(std::uint64_t seed) {
  CoveringMap f = build_p_series();
  BiPoly expected_j = BiPoly::monomial(2835, 0, 6);
  bool jac = jacobian(f) == expected_j;
  UniPoly fu = f.u.substitute_monomial(1, 1, 0, 0, "s");
  UniPoly fv = f.v.substitute_monomial(1, 1, 0, 0, "s");
  bool push = fu == UniPoly::monomial(1, 3, "s") && fv == UniPoly::monomial(1, 5, "s");
  long deg = covering_degree(f, seed);
  DerivedData d = validate(f.params);
  bool data = d.d1 == 5 && d.d2 == 3 && d.N == 15 && d.n == 7;
  bool row = table1_membership(f.params) == Table1Row::Row3;
  std::ostringstream os;
  os << "J=" << jacobian(f).to_string() << ", F(s,0)=(" << fu.to_string() << "," << fv.to_string()
     << "), degree " << deg << ", (d1,d2,N,n)=(" << d.d1 << "," << d.d2 << "," << d.N << "," << d.n << "), "
     << table1_name(table1_membership(f.params));
  return {jac && push && deg == 15 && data && row, os.str()};
}

Outcome lemma1_sweep() {
  long count = 0;
  std::string bad;
  for (const Params& p : enumerate(100)) {
    ++count;
    VerificationReport rep = check_lemma1(snc_model(p), validate(p));
    if (!rep.passed() && bad.empty()) bad = p.to_string() + ": " + rep.failures().front();
  }
  std::string detail = std::to_string(count) + " tuples";
  if (!bad.empty()) detail += "; first failure " + bad;
  return {bad.empty() && count > 0, detail};
}

Outcome zannier_existence(std::uint64_t seed) {
  SearchOptions opts;
  opts.mode = SearchMode::Exhaustive;
  opts.seed = seed;
  long profiles = 0, n2 = 0;
  std::string bad;
  for (const Params& p : enumerate(7)) {
    ZannierProfile z = zannier_profile(p);
    SearchResult res = search(z, opts);
    ++profiles;
    auto classes = static_cast<long>(res.classes.size());
    bool ok = res.exhaustive && classes >= 1;
    if (z.n == 2) {
      ++n2;
      ok = ok && classes == 1;
    }
    if (!ok && bad.empty()) bad = p.to_string() + " has " + std::to_string(classes) + " classes";
  }
  std::string detail = std::to_string(profiles) + " profiles, " + std::to_string(n2) + " with n=2";
  if (!bad.empty()) detail += "; " + bad;
  return {bad.empty() && profiles > 0, detail};
}

Outcome resolution_determinants() {
  long pairs = 0;
  std::string bad;
  for (long d1 = 3; d1 <= 50; ++d1)
    for (long d2 = 2; d2 < d1; ++d2) {
      if (std::gcd(d1, d2) != 1) continue;
      ++pairs;
      ResolutionData r = resolution_chains(d1, d2);
      if ((chain_determinant(r.chain_E1) != d1 || chain_determinant(r.chain_E2) != d2) && bad.empty())
        bad = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    }
  // Every chain of length 1..6 with weights in [-6, -1], blown up at every edge.
  long chains = 0;
  for (size_t len = 1; len <= 6; ++len) {
    LinearChain c(len, -1);
    while (true) {
      ++chains;
      long before = chain_determinant(c);
      for (size_t e = 0; e <= len; ++e)
        if (chain_determinant(blowup_chain(c, e)) != before && bad.empty()) bad = "blowup at edge " + std::to_string(e);
      size_t i = 0;
      while (i < len && c[i] == -6) c[i++] = -1;
      if (i == len) break;
      --c[i];
    }
  }
  std::string detail = std::to_string(pairs) + " pairs, " + std::to_string(chains) + " chains";
  if (!bad.empty()) detail += "; first failure " + bad;
  return {bad.empty(), detail};
}

Outcome extra_property(std::uint64_t seed) {
  long cases = 0;
  std::string bad;
  for (long q = 3; q <= 7; ++q)
    for (long p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++cases;
      bool ok = check_fiber_split(p, q).passed() && extra_rhs(p, q) == p * q - q &&
                check_extra_identity(p, q, seed).passed();
      if (!ok && bad.empty()) bad = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
  std::string detail = std::to_string(cases) + " pairs";
  if (!bad.empty()) detail += "; first failure " + bad;
  return {bad.empty(), detail};
}

NumericOptions numeric_options(std::uint64_t seed) {
  NumericOptions o;
  o.precision_bits = kNumericBits;
  o.seed = seed;
  return o;
}

// Best coefficient-wise distance from the Newton solution to one of the exact surd solutions.
Outcome match_exact(const Params& p, const std::string& builder, std::uint64_t seed) {
  NumericBelyi num = solve_belyi_numeric(p, numeric_options(seed));
  PrecisionScope scope(kNumericBits);
  Real best = -1;
  for (int sign : {1, -1}) {
    auto exact = extract_belyi(build_closed(p, builder, sign));
    if (!exact) throw std::logic_error("closed form for " + p.to_string() + " is not of Belyi shape");
    Real dist = std::max(max_abs_diff(num.g1, to_complex(exact->g1)), max_abs_diff(num.g2, to_complex(exact->g2)));
    if (best < 0 || dist < best) best = dist;
  }
  VerificationReport rep = check_belyi(num, kResidualTolerance);
  bool ok = best >= 0 && best <= Real(kMatchTolerance) && rep.passed();
  return {ok, "distance to exact " + sci(best) + " (tol 1e-25), Belyi residual " + sci(num.residual_belyi)};
}

Outcome residuals_only(const Params& p, std::uint64_t seed) {
  std::string validity = "valid";
  try {
    validate(p);
  } catch (const InvalidParams& e) {
    validity = std::string("invalid params (") + e.what() + ")";
  }
  NumericOptions opts = numeric_options(seed);
  opts.require_valid = false;
  try {
    NumericBelyi num = solve_belyi_numeric(p, opts);
    PrecisionScope scope(kNumericBits);
    VerificationReport rep = check_belyi(num, kResidualTolerance);
    bool ok = num.residual_belyi <= Real(kResidualTolerance) && num.residual_h <= Real(kResidualTolerance) &&
              rep.passed();
    return {ok, validity + "; residuals " + sci(num.residual_belyi) + ", " + sci(num.residual_h) + " (tol 1e-20)"};
  } catch (const NonConvergence& e) {
    return {false, validity + "; " + e.what()};
  }
}

Outcome round_trip() {
  long count = 0;
  std::string bad;
  for (const Params& p : enumerate(100)) {
    ++count;
    DerivedData d = validate(p);
    auto back = params_from_invariants(d.d1, d.d2, d.N, d.n);
    std::vector<Params> variants{p};
    if (p.kase == Case::A) variants.push_back({Case::A, p.k2, p.k1, p.l1, p.l2});
    else variants.push_back({Case::B, p.k2, p.k1, p.l2, p.l1});
    bool ok = back && *back == p;
    for (const Params& v : variants) {
      Params c = canonicalize(v);
      ok = ok && c == p && canonicalize(c) == c;
    }
    if (!ok && bad.empty()) bad = p.to_string();
  }
  std::string detail = std::to_string(count) + " tuples";
  if (!bad.empty()) detail += "; first failure " + bad;
  return {bad.empty() && count > 0, detail};
}

}  // namespace

const std::vector<std::string>& known_red() {
  static const std::vector<std::string> ids{"8c"};
  return ids;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(timed("1", "closed-form sweep N<=30", 60, [&] { return closed_form_sweep(seed); }));
  out.push_back(timed("2", "row1/row2 formulas at l1=1", 10, [] { return formula_reproduction(); }));
  out.push_back(timed("3", "P-series", 10, [&] { return p_series(seed); }));
  out.push_back(timed("4", "chain equations N<=100", 5, [] { return lemma1_sweep(); }));
  out.push_back(timed("5", "constellation existence N<=7", 120, [&] { return zannier_existence(seed); }));
  out.push_back(timed("6", "resolution determinants", 10, [] { return resolution_determinants(); }));
  out.push_back(timed("7", "extra property p<q<=7", 10, [&] { return extra_property(seed); }));
  out.push_back(timed("8a", "Newton B(1,2,1,1) vs exact", 20,
                      [&] { return match_exact({Case::B, 1, 2, 1, 1}, "b_n3", seed); }));
  out.push_back(timed("8b", "Newton A(1,2,1,1) vs exact", 20,
                      [&] { return match_exact({Case::A, 1, 2, 1, 1}, "a_n3", seed); }));
  out.push_back(timed("8c", "Newton B(1,2,2,1) residuals", 20,
                      [&] { return residuals_only({Case::B, 1, 2, 2, 1}, seed); }));
  out.push_back(timed("8c'", "Newton B(1,2,1,2) residuals", 20,
                      [&] { return residuals_only({Case::B, 1, 2, 1, 2}, seed); }));
  out.push_back(timed("9", "invariants round trip N<=100", 10, [] { return round_trip(); }));
  return out;
}

void print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out, std::ostream& log) {
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail;
    if (!r.pass && r.known_red) out << " (known red)";
    out << '\n';
    log << "[" << r.id << "] " << std::fixed << std::setprecision(2) << r.seconds << " s of " << r.budget << " s\n";
  }
}

bool acceptance_ok(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass || r.known_red; });
}

}  // namespace covgerm

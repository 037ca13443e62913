#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "covgerm/ramdata.hpp"

using namespace covgerm;

namespace {

// Independent restatement of the family constraints and derived formulas.
struct Oracle {
  long d1, d2, N, n;
};

std::optional<Oracle> oracle(Case c, long k1, long k2, long l1, long l2) {
  if (k1 < 1 || k2 < 1 || l2 < 0 || std::gcd(k1, k2) != 1) return std::nullopt;
  if (c == Case::A) {
    long d1 = k1 + k2 + l2 * k1 * k2;
    if (l1 < 1 || l1 * k1 * k2 < 2 || std::gcd(l1, d1) != 1) return std::nullopt;
    return Oracle{d1, l1 * k1 * k2, l1 * d1, l1 + l2 + 1};
  }
  long m1 = k2 * l2 + 1, m2 = k1 * l1 + 1;
  if (l1 < 0 || k1 + l2 <= 1 || k2 + l1 <= 1 || std::gcd(m1, m2) != 1) return std::nullopt;
  return Oracle{k1 * m1, k2 * m2, m1 * m2, l1 + l2 + 1};
}

}  // namespace

TEST_CASE("derived data examples") {
  DerivedData a = validate({Case::A, 2, 3, 1, 0});
  CHECK(a == DerivedData{5, 6, 3, 2, 5, 2, 0});
  DerivedData b = validate({Case::B, 1, 1, 2, 4});
  CHECK(b.d1 == 5);
  CHECK(b.d2 == 3);
  CHECK(b.N == 15);
  CHECK(b.n == 7);
  CHECK(b.nu == 1);
}

TEST_CASE("each violated clause is named") {
  auto violation = [](const Params& p) {
    try {
      validate(p);
    } catch (const InvalidParams& e) {
      return std::optional<Violation>(e.violation());
    }
    return std::optional<Violation>();
  };
  CHECK(violation({Case::B, 1, 1, 1, 1}) == Violation::M1M2Coprime);
  CHECK(violation({Case::B, 1, 2, 2, 1}) == Violation::M1M2Coprime);
  CHECK(violation({Case::B, 1, 2, 1, 0}) == Violation::K1PlusL2);
  CHECK(violation({Case::B, 2, 1, 0, 1}) == Violation::K2PlusL1);
  CHECK(violation({Case::A, 0, 3, 1, 0}) == Violation::K1Positive);
  CHECK(violation({Case::A, 2, 0, 1, 0}) == Violation::K2Positive);
  CHECK(violation({Case::A, 2, 3, 0, 0}) == Violation::L1Positive);
  CHECK(violation({Case::B, 2, 3, -1, 0}) == Violation::L1NonNegative);
  CHECK(violation({Case::A, 2, 3, 1, -1}) == Violation::L2NonNegative);
  CHECK(violation({Case::A, 1, 1, 1, 0}) == Violation::ProductAtLeast2);
  CHECK(violation({Case::A, 2, 4, 1, 0}) == Violation::KCoprime);
  CHECK(violation({Case::A, 2, 3, 5, 0}) == Violation::L1D1Coprime);
  CHECK(!violation({Case::A, 2, 3, 1, 0}));
}

TEST_CASE("snc model examples and chain equations") {
  SncModel a = snc_model({Case::A, 2, 3, 1, 0});
  CHECK(a.ell1 == 1);
  CHECK(a.ell2 == 2);
  CHECK(a.side1 == std::vector<ChainEntry>{{1, 5}});
  CHECK(a.side2 == std::vector<ChainEntry>{{2, 3}, {3, 2}});
  SncModel b = snc_model({Case::B, 2, 3, 1, 0});
  CHECK(b.ell1 == 2);
  CHECK(b.ell2 == 1);
  CHECK(b.side1 == std::vector<ChainEntry>{{2, 1}, {1, 2}});
  CHECK(b.side2 == std::vector<ChainEntry>{{3, 3}});
  CHECK(check_lemma1(a, validate({Case::A, 2, 3, 1, 0})).passed());
  CHECK(check_lemma1(b, validate({Case::B, 2, 3, 1, 0})).passed());

  SncModel bad = a;
  bad.side2[0].m += 1;
  VerificationReport rep = check_lemma1(bad, validate({Case::A, 2, 3, 1, 0}));
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.find("sum m side2 = N")->pass);
}

TEST_CASE("chain equations and profile sums hold on every enumerated tuple") {
  for (const Params& p : enumerate(40)) {
    DerivedData d = validate(p);
    CHECK(snc_model(p).m0 == d.n);
    CHECK(check_lemma1(snc_model(p), d).passed());
    ZannierProfile z = zannier_profile(p);
    CHECK(std::accumulate(z.alpha.begin(), z.alpha.end(), 0L) == d.N);
    CHECK(std::accumulate(z.beta.begin(), z.beta.end(), 0L) == d.N);
    CHECK(static_cast<long>(z.alpha.size() + z.beta.size()) == d.n + 1);
  }
}

TEST_CASE("zannier profile examples") {
  CHECK(zannier_profile({Case::A, 2, 3, 1, 0}) == ZannierProfile{{5}, {3, 2}, 2, 5});
  CHECK(zannier_profile({Case::B, 2, 3, 1, 0}) == ZannierProfile{{1, 2}, {3}, 2, 3});
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize({Case::A, 3, 2, 1, 0}) == Params{Case::A, 2, 3, 1, 0});
  Params converted = canonicalize({Case::A, 1, 4, 2, 1});
  CHECK(converted.kase == Case::B);
  CHECK(converted.k1 == 1);
  DerivedData from = validate({Case::A, 1, 4, 2, 1}), to = validate(converted);
  CHECK(std::tie(from.d1, from.d2, from.N, from.n) == std::tie(to.d1, to.d2, to.N, to.n));
  CHECK(canonicalize({Case::B, 1, 1, 4, 2}) == Params{Case::B, 1, 1, 2, 4});
  for (const Params& p : enumerate(30)) {
    CHECK(canonicalize(p) == p);
    CHECK(is_canonical(p));
  }
  // Every valid A(1, k2, l1, l2) lands on a valid B tuple with equal invariants.
  for (long k2 = 2; k2 <= 6; ++k2)
    for (long l1 = 1; l1 <= 5; ++l1)
      for (long l2 = 0; l2 <= 5; ++l2) {
        Params a{Case::A, 1, k2, l1, l2};
        if (!is_valid(a)) continue;
        Params c = canonicalize(a);
        REQUIRE(is_valid(c));
        DerivedData x = validate(a), y = validate(c);
        CHECK(std::tie(x.d1, x.d2, x.N, x.n) == std::tie(y.d1, y.d2, y.N, y.n));
        CHECK(canonicalize(c) == c);
      }
}

TEST_CASE("params from invariants") {
  CHECK(params_from_invariants(5, 6, 5, 2) == Params{Case::A, 2, 3, 1, 0});
  CHECK(params_from_invariants(2, 9, 3, 2) == Params{Case::B, 2, 3, 1, 0});
  CHECK(params_from_invariants(5, 3, 15, 7) == Params{Case::B, 1, 1, 2, 4});
  CHECK_FALSE(params_from_invariants(4, 6, 5, 2));
}

TEST_CASE("enumerate agrees with a brute-force scan") {
  const long max_n = 14;
  std::set<std::tuple<long, long, long, Params>> expected;
  for (Case c : {Case::A, Case::B})
    for (long k1 = 1; k1 <= max_n; ++k1)
      for (long k2 = 1; k2 <= max_n; ++k2)
        for (long l1 = 0; l1 <= max_n; ++l1)
          for (long l2 = 0; l2 <= max_n; ++l2) {
            auto o = oracle(c, k1, k2, l1, l2);
            if (!o || o->N < 2 || o->N > max_n) continue;
            Params p{c, k1, k2, l1, l2};
            if (canonicalize(p) != p) continue;
            expected.insert({o->N, o->n, 0, p});
          }
  std::vector<Params> expect_list;
  for (const auto& e : expected) expect_list.push_back(std::get<3>(e));
  CHECK(enumerate(max_n) == expect_list);
  CHECK(enumerate(1).empty());
  for (const Params& p : enumerate(3)) CHECK(is_valid(p));
  auto three = enumerate(3);
  CHECK(std::find(three.begin(), three.end(), Params{Case::B, 2, 3, 1, 0}) != three.end());
  CHECK(std::find(three.begin(), three.end(), Params{Case::B, 1, 2, 1, 0}) == three.end());
}

TEST_CASE("row membership") {
  CHECK(table1_membership({Case::A, 2, 3, 1, 0}) == Table1Row::Row1);
  CHECK(table1_membership({Case::B, 2, 3, 1, 0}) == Table1Row::Row2);
  CHECK(table1_membership({Case::B, 1, 1, 2, 4}) == Table1Row::Row3);
  CHECK(table1_membership({Case::B, 1, 2, 1, 1}) == Table1Row::None);
  for (const Params& p : enumerate(30))
    if (validate(p).n == 2) CHECK(table1_membership(p) != Table1Row::None);
}

TEST_CASE("params JSON round trip") {
  for (const Params& p : enumerate(10)) CHECK(params_from_json(to_json(p)) == p);
  CHECK_THROWS(params_from_json(nlohmann::json{{"case", "C"}, {"k1", 1}, {"k2", 1}, {"l1", 1}, {"l2", 1}}));
}

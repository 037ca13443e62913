#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "covgerm/report.hpp"

namespace covgerm {

enum class Case { A, B };

/// A parameter tuple (case, k1, k2, l1, l2). Ordered by case first (A < B).
struct Params {
  Case kase = Case::A;
  long k1 = 0, k2 = 0, l1 = 0, l2 = 0;
  auto operator<=>(const Params&) const = default;
  std::string to_string() const;
};

struct DerivedData {
  long d1 = 0, d2 = 0, m1 = 0, m2 = 0, N = 0, n = 0;
  int nu = 0;
  bool operator==(const DerivedData&) const = default;
};

/// One enumerator per constraint clause, so each failure is distinguishable.
enum class Violation {
  K1Positive,      // k1 >= 1
  K2Positive,      // k2 >= 1
  L1Positive,      // case A: l1 >= 1
  L1NonNegative,   // case B: l1 >= 0
  L2NonNegative,   // l2 >= 0
  ProductAtLeast2, // case A: l1 k1 k2 >= 2
  KCoprime,        // gcd(k1, k2) = 1
  L1D1Coprime,     // case A: gcd(l1, d1) = 1
  K1PlusL2,        // case B: k1 + l2 > 1
  K2PlusL1,        // case B: k2 + l1 > 1
  M1M2Coprime,     // case B: gcd(m1, m2) = 1
};

std::string violation_name(Violation v);

class InvalidParams : public std::invalid_argument {
 public:
  InvalidParams(Violation v, const std::string& detail);
  Violation violation() const { return v_; }

 private:
  Violation v_;
};

/// The derived-data formulas without any constraint checks.
DerivedData derive_unchecked(const Params& p);
DerivedData validate(const Params& p);
bool is_valid(const Params& p);

/// A component of the exceptional chain: the pair (d_i^(j), m_i^(j)).
struct ChainEntry {
  long d = 0;
  long m = 0;
  bool operator==(const ChainEntry&) const = default;
};

struct SncModel {
  long ell1 = 0, ell2 = 0;
  std::vector<ChainEntry> side1, side2;
  long m0 = 0;
  bool operator==(const SncModel&) const = default;
};

SncModel snc_model(const Params& p);

/// Checks the four chain equations plus positivity / coprimality of the d's.
VerificationReport check_lemma1(const SncModel& snc, const DerivedData& d);

struct ZannierProfile {
  std::vector<long> alpha, beta;
  long n = 0, N = 0;
  bool operator==(const ZannierProfile&) const = default;
};

ZannierProfile zannier_profile(const Params& p);

/// Representative of p under the relabelings: k-swap in case A, subscript
/// swap in case B, and (A, k1 = 1, k2, l1, l2) -> (B, 1, k2, l1 - 1, l2 + 1).
/// Canonical output has k1 <= k2, k1 >= 2 in case A, and l1 <= l2 when
/// k1 = k2 in case B.
Params canonicalize(const Params& p);
bool is_canonical(const Params& p);

/// Canonical params whose derived (d1, d2, N, n) match the given values, with
/// (d1, d2) taken in either order.
std::optional<Params> params_from_invariants(long d1, long d2, long N, long n);

/// Every canonical valid tuple with 2 <= N <= max_N and k1, k2, l1, l2 <= max_N,
/// sorted by (N, n, case, k1, k2, l1, l2).
std::vector<Params> enumerate(long max_N);

enum class Table1Row { Row1, Row2, Row3, None };
std::string table1_name(Table1Row r);
Table1Row table1_membership(const Params& p);

nlohmann::json to_json(const Params& p);
Params params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DerivedData& d);
nlohmann::json to_json(const SncModel& s);
nlohmann::json to_json(const ZannierProfile& z);

}  // namespace covgerm

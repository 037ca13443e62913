#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "covgerm/ramdata.hpp"

namespace covgerm {

/// images[i] is the image of point i; a bijection of {0, ..., N-1}.
using Permutation = std::vector<int>;
/// Cycle lengths, sorted in decreasing order.
using CycleType = std::vector<long>;

/// sigma_alpha ∘ sigma_mid ∘ sigma_beta = id, composed right to left.
struct Constellation {
  Permutation sigma_alpha, sigma_mid, sigma_beta;
  bool operator==(const Constellation&) const = default;
};

bool is_permutation(const Permutation& p);
Permutation identity_permutation(int n);
/// (a ∘ b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// p conjugated by the relabeling r: the permutation r ∘ p ∘ r⁻¹.
Permutation conjugate(const Permutation& p, const Permutation& r);
CycleType cycle_type(const Permutation& p);
int cycle_count(const Permutation& p);
bool is_transitive(const std::vector<Permutation>& gens);

/// Genus from 2 - 2g = cyc(σα) + cyc(σmid) + cyc(σβ) - N.
/// Throws if the product is not the identity or the count is odd.
int genus(const Constellation& c);

/// Label-invariant canonical encoding; equal iff simultaneously conjugate
/// (for transitive constellations).
std::vector<int> canonical_form(const Constellation& c);

enum class ProfileClause { NonPositivePart, AlphaSum, BetaSum, PartCount, MiddleTooLarge, Gcd };
std::string profile_clause_name(ProfileClause c);

class InvalidProfile : public std::invalid_argument {
 public:
  explicit InvalidProfile(ProfileClause c);
  ProfileClause clause() const { return c_; }

 private:
  ProfileClause c_;
};

/// Throws InvalidProfile naming the first failed hypothesis.
void check_profile(const ZannierProfile& z);

enum class SearchMode { Auto, Exhaustive, Random };

struct SearchOptions {
  SearchMode mode = SearchMode::Auto;
  std::uint64_t seed = 0x5eed;
  /// Auto switches to random sampling above this many candidate middles.
  double exhaustive_limit = 5e7;
  std::uint64_t random_samples = 2'000'000;
};

struct SearchResult {
  /// One canonical representative per class, sorted by canonical form.
  std::vector<Constellation> classes;
  /// False when the count is only a lower bound (random mode).
  bool exhaustive = true;
  std::uint64_t candidates = 0;
};

/// Number of candidate middle permutations of type (n, 1, ..., 1) on N points.
double middle_candidate_count(long N, long n);

SearchResult search(const ZannierProfile& z, const SearchOptions& opts = {});
bool verify_zannier(const ZannierProfile& z, const SearchOptions& opts = {});
long count_classes(const ZannierProfile& z, const SearchOptions& opts = {});

nlohmann::json to_json(const Constellation& c);
nlohmann::json to_json(const SearchResult& r);

}  // namespace covgerm

#include "covgerm/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace covgerm {

bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<size_t>(v) >= p.size() || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Permutation conjugate(const Permutation& p, const Permutation& r) { return compose(compose(r, p), inverse(r)); }

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

int cycle_count(const Permutation& p) { return static_cast<int>(cycle_type(p).size()); }

bool is_transitive(const std::vector<Permutation>& gens) {
  if (gens.empty() || gens[0].empty()) return true;
  const size_t n = gens[0].size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      auto w = static_cast<size_t>(g[static_cast<size_t>(v)]);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(static_cast<int>(w));
      }
    }
  }
  return reached == n;
}

int genus(const Constellation& c) {
  const size_t n = c.sigma_beta.size();
  if (compose(c.sigma_alpha, compose(c.sigma_mid, c.sigma_beta)) != identity_permutation(static_cast<int>(n)))
    throw std::invalid_argument("constellation product is not the identity");
  int chi = cycle_count(c.sigma_alpha) + cycle_count(c.sigma_mid) + cycle_count(c.sigma_beta) - static_cast<int>(n);
  if (chi % 2 != 0) throw std::logic_error("odd Euler characteristic");
  return (2 - chi) / 2;
}

namespace {

// Relabel points in BFS order from `start`, following σmid then σβ.
// Returns false if some point is unreachable.
bool bfs_labels(const Permutation& mid, const Permutation& beta, int start, std::vector<int>& label,
                std::vector<int>& order) {
  const size_t n = mid.size();
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  label[static_cast<size_t>(start)] = 0;
  order.push_back(start);
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (const Permutation* g : {&mid, &beta}) {
      int w = (*g)[static_cast<size_t>(v)];
      if (label[static_cast<size_t>(w)] < 0) {
        label[static_cast<size_t>(w)] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
  }
  return order.size() == n;
}

// σmid and σβ relabeled, concatenated; σα is determined by them.
void encode(const Permutation& mid, const Permutation& beta, const std::vector<int>& label,
            const std::vector<int>& order, std::vector<int>& out) {
  const size_t n = mid.size();
  out.resize(2 * n);
  for (size_t k = 0; k < n; ++k) {
    auto v = static_cast<size_t>(order[k]);
    out[k] = label[static_cast<size_t>(mid[v])];
    out[n + k] = label[static_cast<size_t>(beta[v])];
  }
}

}  // namespace

std::vector<int> canonical_form(const Constellation& c) {
  const size_t n = c.sigma_mid.size();
  std::vector<int> best, cur, label(n), order;
  for (size_t s = 0; s < n; ++s) {
    if (!bfs_labels(c.sigma_mid, c.sigma_beta, static_cast<int>(s), label, order))
      throw std::invalid_argument("canonical form needs a transitive constellation");
    encode(c.sigma_mid, c.sigma_beta, label, order, cur);
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::string profile_clause_name(ProfileClause c) {
  switch (c) {
    case ProfileClause::NonPositivePart: return "parts positive";
    case ProfileClause::AlphaSum: return "sum(alpha)=N";
    case ProfileClause::BetaSum: return "sum(beta)=N";
    case ProfileClause::PartCount: return "|alpha|+|beta|=n+1";
    case ProfileClause::MiddleTooLarge: return "1<=n<=N";
    case ProfileClause::Gcd: return "gcd(alpha,beta)=1";
  }
  return "?";
}

InvalidProfile::InvalidProfile(ProfileClause c)
    : std::invalid_argument("profile hypothesis fails: " + profile_clause_name(c)), c_(c) {}

void check_profile(const ZannierProfile& z) {
  long g = 0;
  for (const auto* part : {&z.alpha, &z.beta})
    for (long v : *part) {
      if (v < 1) throw InvalidProfile(ProfileClause::NonPositivePart);
      g = std::gcd(g, v);
    }
  if (std::accumulate(z.alpha.begin(), z.alpha.end(), 0L) != z.N) throw InvalidProfile(ProfileClause::AlphaSum);
  if (std::accumulate(z.beta.begin(), z.beta.end(), 0L) != z.N) throw InvalidProfile(ProfileClause::BetaSum);
  if (static_cast<long>(z.alpha.size() + z.beta.size()) != z.n + 1) throw InvalidProfile(ProfileClause::PartCount);
  if (z.n < 1 || z.n > z.N) throw InvalidProfile(ProfileClause::MiddleTooLarge);
  if (g != 1) throw InvalidProfile(ProfileClause::Gcd);
}

double middle_candidate_count(long N, long n) {
  if (n <= 1) return 1;
  // C(N, n) (n - 1)!  =  N! / ((N - n)! n)
  double c = 1;
  for (long k = N - n + 1; k <= N; ++k) c *= static_cast<double>(k);
  return c / static_cast<double>(n);
}

namespace {

class Searcher {
 public:
  explicit Searcher(const ZannierProfile& z) : N_(static_cast<int>(z.N)), n_(static_cast<int>(z.n)) {
    alpha_ = z.alpha;
    std::sort(alpha_.rbegin(), alpha_.rend());
    CycleType beta = z.beta;
    std::sort(beta.rbegin(), beta.rend());
    beta_.resize(static_cast<size_t>(N_));
    int at = 0;
    for (long len : beta) {
      for (int k = 0; k < len; ++k) beta_[static_cast<size_t>(at + k)] = at + (k + 1) % static_cast<int>(len);
      at += static_cast<int>(len);
    }
    mid_ = identity_permutation(N_);
    used_.assign(static_cast<size_t>(N_), 0);
  }

  void exhaustive() {
    if (n_ == 1) {
      test();
      return;
    }
    for (int start = 0; start + n_ <= N_; ++start) {
      cycle_ = {start};
      used_[static_cast<size_t>(start)] = 1;
      extend(start);
      used_[static_cast<size_t>(start)] = 0;
    }
  }

  void random(std::uint64_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> pts = identity_permutation(N_);
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::shuffle(pts.begin(), pts.end(), rng);
      cycle_.assign(pts.begin(), pts.begin() + n_);
      mid_ = identity_permutation(N_);
      if (n_ > 1)
        for (int k = 0; k < n_; ++k)
          mid_[static_cast<size_t>(cycle_[static_cast<size_t>(k)])] = cycle_[static_cast<size_t>((k + 1) % n_)];
      test();
    }
  }

  std::uint64_t candidates() const { return candidates_; }

  std::vector<Constellation> classes() const {
    std::vector<Constellation> out;
    for (const auto& code : found_) {
      const auto n = static_cast<size_t>(N_);
      Constellation c;
      c.sigma_mid.assign(code.begin(), code.begin() + static_cast<long>(n));
      c.sigma_beta.assign(code.begin() + static_cast<long>(n), code.end());
      c.sigma_alpha = inverse(compose(c.sigma_mid, c.sigma_beta));
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  void extend(int start) {
    if (static_cast<int>(cycle_.size()) == n_) {
      for (int k = 0; k < n_; ++k)
        mid_[static_cast<size_t>(cycle_[static_cast<size_t>(k)])] = cycle_[static_cast<size_t>((k + 1) % n_)];
      test();
      for (int v : cycle_) mid_[static_cast<size_t>(v)] = v;
      return;
    }
    for (int v = start + 1; v < N_; ++v) {
      if (used_[static_cast<size_t>(v)]) continue;
      used_[static_cast<size_t>(v)] = 1;
      cycle_.push_back(v);
      extend(start);
      cycle_.pop_back();
      used_[static_cast<size_t>(v)] = 0;
    }
  }

  void test() {
    ++candidates_;
    const auto n = static_cast<size_t>(N_);
    alpha_perm_.resize(n);
    for (size_t i = 0; i < n; ++i)
      alpha_perm_[static_cast<size_t>(mid_[static_cast<size_t>(beta_[i])])] = static_cast<int>(i);
    if (cycle_type(alpha_perm_) != alpha_) return;
    if (!is_transitive({mid_, beta_})) return;
    Constellation c{alpha_perm_, mid_, beta_};
    if (genus(c) != 0) return;
    found_.insert(canonical_form(c));
  }

  int N_, n_;
  CycleType alpha_;
  Permutation beta_, mid_, alpha_perm_;
  std::vector<int> cycle_;
  std::vector<char> used_;
  std::set<std::vector<int>> found_;
  std::uint64_t candidates_ = 0;
};

}  // namespace

SearchResult search(const ZannierProfile& z, const SearchOptions& opts) {
  check_profile(z);
  bool exhaustive = opts.mode == SearchMode::Exhaustive ||
                    (opts.mode == SearchMode::Auto && middle_candidate_count(z.N, z.n) <= opts.exhaustive_limit);
  Searcher s(z);
  if (exhaustive)
    s.exhaustive();
  else
    s.random(opts.random_samples, opts.seed);
  return SearchResult{s.classes(), exhaustive, s.candidates()};
}

bool verify_zannier(const ZannierProfile& z, const SearchOptions& opts) { return !search(z, opts).classes.empty(); }

long count_classes(const ZannierProfile& z, const SearchOptions& opts) {
  return static_cast<long>(search(z, opts).classes.size());
}

nlohmann::json to_json(const Constellation& c) {
  return nlohmann::json::array({c.sigma_alpha, c.sigma_mid, c.sigma_beta});
}

nlohmann::json to_json(const SearchResult& r) {
  auto arr = nlohmann::json::array();
  for (const auto& c : r.classes) arr.push_back(to_json(c));
  return {{"classes", arr}, {"count", r.classes.size()}, {"exhaustive", r.exhaustive}, {"candidates", r.candidates}};
}

}  // namespace covgerm

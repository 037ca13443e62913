#include "covgerm/ramdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace covgerm {

std::string Params::to_string() const {
  std::ostringstream os;
  os << (kase == Case::A ? "A" : "B") << "(" << k1 << "," << k2 << "," << l1 << "," << l2 << ")";
  return os.str();
}

std::string violation_name(Violation v) {
  switch (v) {
    case Violation::K1Positive: return "k1>=1";
    case Violation::K2Positive: return "k2>=1";
    case Violation::L1Positive: return "l1>=1";
    case Violation::L1NonNegative: return "l1>=0";
    case Violation::L2NonNegative: return "l2>=0";
    case Violation::ProductAtLeast2: return "l1*k1*k2>=2";
    case Violation::KCoprime: return "gcd(k1,k2)=1";
    case Violation::L1D1Coprime: return "gcd(l1,d1)=1";
    case Violation::K1PlusL2: return "k1+l2>1";
    case Violation::K2PlusL1: return "k2+l1>1";
    case Violation::M1M2Coprime: return "gcd(m1,m2)=1";
  }
  return "?";
}

InvalidParams::InvalidParams(Violation v, const std::string& detail)
    : std::invalid_argument("invalid params: " + violation_name(v) + " fails (" + detail + ")"), v_(v) {}

namespace {

void require(bool ok, Violation v, const Params& p) {
  if (!ok) throw InvalidParams(v, p.to_string());
}

}  // namespace

DerivedData derive_unchecked(const Params& p) {
  DerivedData d;
  if (p.kase == Case::A) {
    d.d1 = p.k1 + p.k2 + p.l2 * p.k1 * p.k2;
    d.d2 = p.l1 * p.k1 * p.k2;
    d.m1 = p.l1 * p.k2;
    d.m2 = p.l1 * p.k1;
    d.N = p.l1 * d.d1;
    d.nu = 0;
  } else {
    d.m1 = p.k2 * p.l2 + 1;
    d.m2 = p.k1 * p.l1 + 1;
    d.d1 = p.k1 * d.m1;
    d.d2 = p.k2 * d.m2;
    d.N = d.m1 * d.m2;
    d.nu = 1;
  }
  d.n = p.l1 + p.l2 + 1;
  return d;
}

DerivedData validate(const Params& p) {
  require(p.k1 >= 1, Violation::K1Positive, p);
  require(p.k2 >= 1, Violation::K2Positive, p);
  if (p.kase == Case::A) {
    require(p.l1 >= 1, Violation::L1Positive, p);
    require(p.l2 >= 0, Violation::L2NonNegative, p);
    require(p.l1 * p.k1 * p.k2 >= 2, Violation::ProductAtLeast2, p);
    require(std::gcd(p.k1, p.k2) == 1, Violation::KCoprime, p);
    require(std::gcd(p.l1, derive_unchecked(p).d1) == 1, Violation::L1D1Coprime, p);
  } else {
    require(p.l1 >= 0, Violation::L1NonNegative, p);
    require(p.l2 >= 0, Violation::L2NonNegative, p);
    require(p.k1 + p.l2 > 1, Violation::K1PlusL2, p);
    require(p.k2 + p.l1 > 1, Violation::K2PlusL1, p);
    require(std::gcd(p.k1, p.k2) == 1, Violation::KCoprime, p);
    DerivedData u = derive_unchecked(p);
    require(std::gcd(u.m1, u.m2) == 1, Violation::M1M2Coprime, p);
  }
  DerivedData d = derive_unchecked(p);
  if (std::gcd(d.d1, d.d2) != 1 || std::min(d.d1, d.d2) < 2)
    throw std::logic_error("derived (d1,d2) not coprime or < 2 for " + p.to_string());
  return d;
}

bool is_valid(const Params& p) {
  try {
    validate(p);
    return true;
  } catch (const InvalidParams&) {
    return false;
  }
}

SncModel snc_model(const Params& p) {
  DerivedData d = validate(p);
  SncModel s;
  if (p.kase == Case::A) {
    s.ell1 = p.l1;
    s.ell2 = p.l2 + 2;
    s.side1.assign(static_cast<size_t>(p.l1), {1, d.d1});
    s.side2 = {{p.k1, d.m1}, {p.k2, d.m2}};
    s.side2.insert(s.side2.end(), static_cast<size_t>(p.l2), {1, d.d2});
  } else {
    s.ell1 = p.l1 + 1;
    s.ell2 = p.l2 + 1;
    s.side1 = {{p.k1, d.m1}};
    s.side1.insert(s.side1.end(), static_cast<size_t>(p.l1), {1, d.d1});
    s.side2 = {{p.k2, d.m2}};
    s.side2.insert(s.side2.end(), static_cast<size_t>(p.l2), {1, d.d2});
  }
  s.m0 = d.n;
  return s;
}

VerificationReport check_lemma1(const SncModel& snc, const DerivedData& d) {
  VerificationReport r;
  auto sum_m = [](const std::vector<ChainEntry>& side) {
    long s = 0;
    for (const auto& e : side) s += e.m;
    return s;
  };
  long s1 = sum_m(snc.side1), s2 = sum_m(snc.side2);
  r.add("sum m side1 = N", s1 == d.N, "sum=" + std::to_string(s1) + " N=" + std::to_string(d.N));
  r.add("sum m side2 = N", s2 == d.N, "sum=" + std::to_string(s2) + " N=" + std::to_string(d.N));
  r.add("m0 = n", snc.m0 == d.n, "m0=" + std::to_string(snc.m0) + " n=" + std::to_string(d.n));

  bool lengths = static_cast<long>(snc.side1.size()) == snc.ell1 && static_cast<long>(snc.side2.size()) == snc.ell2;
  r.add("l1+l2 = n+1", lengths && snc.ell1 + snc.ell2 == d.n + 1,
        std::to_string(snc.ell1) + "+" + std::to_string(snc.ell2) + " vs " + std::to_string(d.n + 1));

  std::string bad;
  for (int side = 1; side <= 2; ++side) {
    const auto& entries = side == 1 ? snc.side1 : snc.side2;
    long target = side == 1 ? d.d1 : d.d2;
    for (size_t j = 0; j < entries.size(); ++j)
      if (entries[j].m * entries[j].d != target)
        bad += "side" + std::to_string(side) + "[" + std::to_string(j) + "] ";
  }
  r.add("m*d = d_i", bad.empty(), bad);

  long prod = d.N;
  std::vector<long> ds;
  for (const auto* side : {&snc.side1, &snc.side2})
    for (const auto& e : *side) {
      prod *= e.d;
      ds.push_back(e.d);
    }
  r.add("N*prod d = d1*d2", prod == d.d1 * d.d2,
        std::to_string(prod) + " vs " + std::to_string(d.d1 * d.d2));

  bool positive = std::all_of(ds.begin(), ds.end(), [](long v) { return v >= 1; });
  bool coprime = true;
  for (size_t a = 0; a < ds.size(); ++a)
    for (size_t b = a + 1; b < ds.size(); ++b)
      if (std::gcd(ds[a], ds[b]) != 1) coprime = false;
  long big = std::count_if(ds.begin(), ds.end(), [](long v) { return v > 1; });
  r.add("d positive", positive);
  r.add("d pairwise coprime", coprime);
  r.add("at most two d > 1", big <= 2, "count=" + std::to_string(big));
  return r;
}

ZannierProfile zannier_profile(const Params& p) {
  DerivedData d = validate(p);
  ZannierProfile z;
  if (p.kase == Case::A) {
    z.alpha.assign(static_cast<size_t>(p.l1), d.d1);
    z.beta = {d.m1, d.m2};
  } else {
    z.alpha = {d.m1};
    z.alpha.insert(z.alpha.end(), static_cast<size_t>(p.l1), d.d1);
    z.beta = {d.m2};
  }
  z.beta.insert(z.beta.end(), static_cast<size_t>(p.l2), d.d2);
  z.n = d.n;
  z.N = d.N;
  return z;
}

Params canonicalize(const Params& p) {
  validate(p);
  Params c = p;
  if (c.kase == Case::A && c.k1 > c.k2) std::swap(c.k1, c.k2);
  if (c.kase == Case::A && c.k1 == 1) c = Params{Case::B, 1, c.k2, c.l1 - 1, c.l2 + 1};
  if (c.kase == Case::B && (c.k1 > c.k2 || (c.k1 == c.k2 && c.l1 > c.l2))) {
    std::swap(c.k1, c.k2);
    std::swap(c.l1, c.l2);
  }
  return c;
}

bool is_canonical(const Params& p) { return is_valid(p) && canonicalize(p) == p; }

namespace {

bool matches(const Params& p, long d1, long d2, long N, long n) {
  if (!is_valid(p)) return false;
  DerivedData d = validate(p);
  return d.d1 == d1 && d.d2 == d2 && d.N == N && d.n == n;
}

}  // namespace

std::optional<Params> params_from_invariants(long d1, long d2, long N, long n) {
  if (d1 < 1 || d2 < 1 || N < 1 || n < 1) return std::nullopt;
  std::vector<Params> hits;
  for (auto [D1, D2] : {std::pair{d1, d2}, std::pair{d2, d1}}) {
    // Case A: N = l1 d1, d2 = l1 k1 k2, d1 = k1 + k2 + l2 k1 k2.
    if (N % D1 == 0) {
      long l1 = N / D1, l2 = n - l1 - 1;
      if (l2 >= 0 && D2 % l1 == 0) {
        long prod = D2 / l1, sum = D1 - l2 * prod;
        for (long k1 = 1; k1 * k1 <= prod; ++k1) {
          if (prod % k1 != 0 || k1 + prod / k1 != sum) continue;
          for (Params c : {Params{Case::A, k1, prod / k1, l1, l2}, Params{Case::A, prod / k1, k1, l1, l2}})
            if (matches(c, D1, D2, N, n)) hits.push_back(canonicalize(c));
        }
      }
    }
    // Case B: d1 = k1 m1, d2 = k2 m2, N = m1 m2, m1 = k2 l2 + 1, m2 = k1 l1 + 1.
    for (long k1 = 1; k1 <= D1; ++k1) {
      if (D1 % k1 != 0) continue;
      long m1 = D1 / k1;
      if (N % m1 != 0) continue;
      long m2 = N / m1;
      if (D2 % m2 != 0) continue;
      long k2 = D2 / m2;
      if ((m1 - 1) % k2 != 0 || (m2 - 1) % k1 != 0) continue;
      Params c{Case::B, k1, k2, (m2 - 1) / k1, (m1 - 1) / k2};
      if (matches(c, D1, D2, N, n)) hits.push_back(canonicalize(c));
    }
  }
  if (hits.empty()) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  // Distinct families never collide on (d1, d2, N, n); if they did, case B wins.
  for (const auto& h : hits)
    if (h.kase == Case::B) return h;
  return hits.front();
}

std::vector<Params> enumerate(long max_N) {
  struct Keyed {
    long N, n;
    Params p;
  };
  std::vector<Keyed> out;
  auto consider = [&](const Params& p) {
    if (!is_canonical(p)) return;
    DerivedData d = validate(p);
    if (d.N < 2 || d.N > max_N) return;
    out.push_back({d.N, d.n, p});
  };
  // Case A: N = l1 (k1 + k2 + l2 k1 k2) >= l1 (k1 + k2), and canonical k1 >= 2.
  for (long l1 = 1; l1 <= max_N; ++l1)
    for (long k1 = 2; l1 * (k1 + k1) <= max_N && k1 <= max_N; ++k1)
      for (long k2 = k1; l1 * (k1 + k2) <= max_N && k2 <= max_N; ++k2)
        for (long l2 = 0; l2 <= max_N && l1 * (k1 + k2 + l2 * k1 * k2) <= max_N; ++l2)
          consider(Params{Case::A, k1, k2, l1, l2});
  // Case B: N = (k2 l2 + 1)(k1 l1 + 1).
  for (long k1 = 1; k1 <= max_N; ++k1)
    for (long k2 = k1; k2 <= max_N; ++k2)
      for (long l1 = 0; l1 <= max_N && k1 * l1 + 1 <= max_N; ++l1)
        for (long l2 = 0; l2 <= max_N && (k2 * l2 + 1) * (k1 * l1 + 1) <= max_N; ++l2)
          consider(Params{Case::B, k1, k2, l1, l2});
  std::sort(out.begin(), out.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.N, a.n, a.p) < std::tie(b.N, b.n, b.p);
  });
  std::vector<Params> result;
  result.reserve(out.size());
  for (const auto& k : out) result.push_back(k.p);
  return result;
}

std::string table1_name(Table1Row r) {
  switch (r) {
    case Table1Row::Row1: return "row1";
    case Table1Row::Row2: return "row2";
    case Table1Row::Row3: return "row3";
    case Table1Row::None: return "none";
  }
  return "?";
}

Table1Row table1_membership(const Params& p) {
  validate(p);
  if (p.kase == Case::A) return p.l2 == 0 ? Table1Row::Row1 : Table1Row::None;
  if (p.l2 == 0 || p.l1 == 0) return Table1Row::Row2;
  if (p.k1 == 1 && p.k2 == 1 && ((p.l1 == 2 && p.l2 == 4) || (p.l1 == 4 && p.l2 == 2))) return Table1Row::Row3;
  return Table1Row::None;
}

nlohmann::json to_json(const Params& p) {
  return {{"case", p.kase == Case::A ? "A" : "B"}, {"k1", p.k1}, {"k2", p.k2}, {"l1", p.l1}, {"l2", p.l2}};
}

Params params_from_json(const nlohmann::json& j) {
  std::string c = j.at("case").get<std::string>();
  Params p;
  if (c == "A" || c == "a")
    p.kase = Case::A;
  else if (c == "B" || c == "b")
    p.kase = Case::B;
  else
    throw std::invalid_argument("case must be A or B, got '" + c + "'");
  p.k1 = j.at("k1").get<long>();
  p.k2 = j.at("k2").get<long>();
  p.l1 = j.at("l1").get<long>();
  p.l2 = j.at("l2").get<long>();
  return p;
}

nlohmann::json to_json(const DerivedData& d) {
  return {{"d1", d.d1}, {"d2", d.d2}, {"m1", d.m1}, {"m2", d.m2}, {"N", d.N}, {"n", d.n}, {"nu", d.nu}};
}

nlohmann::json to_json(const SncModel& s) {
  auto side = [](const std::vector<ChainEntry>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& e : v) arr.push_back({e.d, e.m});
    return arr;
  };
  return {{"ell1", s.ell1}, {"ell2", s.ell2}, {"side1", side(s.side1)}, {"side2", side(s.side2)}, {"m0", s.m0}};
}

nlohmann::json to_json(const ZannierProfile& z) {
  return {{"alpha", z.alpha}, {"beta", z.beta}, {"n", z.n}, {"N", z.N}};
}

}  // namespace covgerm

#include "gsp4/weyl/weyl.hpp"

#include <algorithm>
#include <deque>

#include "gsp4/errors.hpp"

namespace gsp4::weyl {

void validate_parity(const Weight& w) {
  if (((w.r1 + w.r2 - w.c) % 2 + 2) % 2 != 0)
    throw DomainError(Errc::ParityViolated, "weight (" + std::to_string(w.r1) + ", " + std::to_string(w.r2) + "; " +
                                                std::to_string(w.c) + ") has r1 + r2 != c mod 2");
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement r(0, 0, 0, 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m_[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j];
  return r;
}

const std::vector<std::pair<long, long>>& positive_roots(Group g) {
  static const std::vector<std::pair<long, long>> g_roots{{1, -1}, {1, 1}, {2, 0}, {0, 2}};
  static const std::vector<std::pair<long, long>> h_roots{{2, 0}, {0, 2}};
  return g == Group::G ? g_roots : h_roots;
}

int WeylElement::length(Group g) const {
  const auto& roots = positive_roots(g);
  int n = 0;
  for (const auto& [a, b] : roots) {
    auto img = apply(a, b);
    if (std::find(roots.begin(), roots.end(), img) == roots.end()) ++n;
  }
  return n;
}

std::string WeylElement::to_string() const {
  auto coord = [](int c0, int c1) -> std::string {
    if (c0 == 1) return "x";
    if (c0 == -1) return "-x";
    if (c1 == 1) return "y";
    return "-y";
  };
  return "(x,y)->(" + coord(m_[0][0], m_[0][1]) + "," + coord(m_[1][0], m_[1][1]) + ")";
}

std::vector<WeylElement> weyl_group(Group g) {
  std::vector<WeylElement> gens = g == Group::G
                                      ? std::vector<WeylElement>{WeylElement::swap(), WeylElement::flip_second()}
                                      : std::vector<WeylElement>{WeylElement::flip_first(), WeylElement::flip_second()};
  std::vector<WeylElement> out{WeylElement::identity()};
  std::deque<WeylElement> todo{WeylElement::identity()};
  while (!todo.empty()) {
    auto w = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      auto ws = s * w;
      if (std::find(out.begin(), out.end(), ws) == out.end()) {
        out.push_back(ws);
        todo.push_back(ws);
      }
    }
  }
  return out;
}

std::vector<KostantRep> kostant_reps(Group g) {
  std::vector<KostantRep> reps;
  if (g == Group::H) {
    for (const auto& w : weyl_group(Group::H)) {
      int i = w.entry(0, 0) < 0 ? 1 : 0;
      int j = w.entry(1, 1) < 0 ? 1 : 0;
      reps.push_back({"w" + std::to_string(i) + std::to_string(j), w, w.length(Group::H)});
    }
    // w10 before w01 so the order reads w00, w10, w01, w11.
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
      if (a.length != b.length) return a.length < b.length;
      return a.name > b.name;
    });
    return reps;
  }
  const auto all = weyl_group(Group::G);
  const auto s = WeylElement::swap();
  std::vector<WeylElement> seen;
  for (const auto& w : all) {
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
    WeylElement other = s * w;
    seen.push_back(w);
    seen.push_back(other);
    const WeylElement& best = w.length() <= other.length() ? w : other;
    reps.push_back({"", best, best.length()});
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.length < b.length; });
  for (std::size_t i = 0; i < reps.size(); ++i) reps[i].name = "w" + std::to_string(i);
  return reps;
}

bool is_h_dominant(const Weight& w) { return w.r1 >= 0 && w.r2 >= 0; }
bool is_m_dominant(const Weight& w) { return w.r1 >= w.r2; }
bool is_g_dominant(const Weight& w) { return is_h_dominant(w) && is_m_dominant(w); }

Weight kappa(int i, const Weight& nu) {
  if (i < 0 || i > 3) throw DomainError(Errc::IndexOutOfRange, "kappa index must be in 0..3");
  Weight shifted{nu.r1 + kRho.r1, nu.r2 + kRho.r2, nu.c};
  if (!(shifted.r1 >= shifted.r2 && shifted.r2 >= 0))
    throw DomainError(Errc::NotDominant, "nu + rho = (" + std::to_string(shifted.r1) + ", " +
                                             std::to_string(shifted.r2) + ") is not dominant");
  static const auto reps = kostant_reps(Group::G);
  Weight out = reps[static_cast<std::size_t>(i)].element.apply(shifted);
  out.r1 -= kRho.r1;
  out.r2 -= kRho.r2;
  return out;
}

KTypeParams ktype_params(long r1, long r2) {
  if (!(r1 >= r2 && r2 >= -1))
    throw DomainError(Errc::WeightOutOfRange,
                      "need r1 >= r2 >= -1, got (" + std::to_string(r1) + ", " + std::to_string(r2) + ")");
  KTypeParams k;
  k.lambda1 = r1 + 3;
  k.lambda2 = -1 - r2;
  k.d = k.lambda1 - k.lambda2;
  k.tau1 = {r1 + 3, -r2 - 1};
  k.tau2 = {r2 + 1, -r1 - 3};
  return k;
}

std::vector<std::pair<long, long>> branch_restriction(long k1, long k2) {
  if (!(k1 >= k2 && k2 >= 2))
    throw DomainError(Errc::WeightOutOfRange,
                      "need k1 >= k2 >= 2, got (" + std::to_string(k1) + ", " + std::to_string(k2) + ")");
  std::vector<std::pair<long, long>> out;
  for (long j = 0; j <= k1 + k2 - 4; ++j) out.emplace_back(k2 - 4 - j, j - k1);
  return out;
}

bool branch_contains(long k1, long k2, long c1, long c2) {
  auto summands = branch_restriction(k1, k2);
  return std::find(summands.begin(), summands.end(), std::make_pair(c1 - 2, -c2)) != summands.end();
}

long moriyama_index(MoriyamaRegion region, long r1, long r2, long c1, long c2) {
  auto fail = [&](const std::string& why) {
    return DomainError(Errc::InconsistentWeights, why + " for (r1, r2, c1, c2) = (" + std::to_string(r1) + ", " +
                                                      std::to_string(r2) + ", " + std::to_string(c1) + ", " +
                                                      std::to_string(c2) + ")");
  };
  const long d = r1 + r2 + 4;
  long k = 0;
  if (region == MoriyamaRegion::F) {
    if (c1 < 1 || c2 < 1) throw fail("region F needs c1, c2 >= 1");
    if (c1 + c2 != r1 - r2 + 2) throw fail("region F needs c1 + c2 = r1 - r2 + 2");
    k = r1 + 3 - c1;
    if (k != r2 + 1 + c2) throw fail("the two expressions for k disagree");
  } else {
    if (c1 < 1) throw fail("region D needs c1 >= 1");
    if (c2 - c1 != r1 - r2 + 2) throw fail("region D needs c2 - c1 = r1 - r2 + 2");
    if (c2 > r1 + 3) throw fail("region D needs c2 <= r1 + 3");
    k = r1 + 3 + c1;
    if (k != c2 + r2 + 1) throw fail("the two expressions for k disagree");
  }
  if (k < 0 || k > d) throw fail("k = " + std::to_string(k) + " outside [0, " + std::to_string(d) + "]");
  return k;
}

}  // namespace gsp4::weyl

#include "hysturm/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hysturm {

namespace {

constexpr int kMaxFact = 400;

const long double* factorial_table() {
  static const auto table = [] {
    auto t = new std::array<long double, kMaxFact + 1>;
    (*t)[0] = 1.0L;
    for (int i = 1; i <= kMaxFact; ++i) (*t)[i] = (*t)[i - 1] * i;
    return t;
  }();
  return table->data();
}

long double fact(int n) { return factorial_table()[n]; }

int to_two(double j, const char* what) {
  const double t = 2.0 * j;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9)
    throw std::invalid_argument(std::string(what) +
                                ": arguments must be integer or half-integer");
  return static_cast<int>(r);
}

bool triangle_ok(int ta, int tb, int tc) {
  if ((ta + tb + tc) % 2 != 0) return false;
  return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

// sqrt of (a! b! c!) / (a+b+c+1)! for twice-integer triads
long double delta_factor(int ta, int tb, int tc) {
  const int x1 = (ta + tb - tc) / 2;
  const int x2 = (ta - tb + tc) / 2;
  const int x3 = (-ta + tb + tc) / 2;
  const int x4 = (ta + tb + tc) / 2 + 1;
  return std::sqrt(fact(x1) * fact(x2) * fact(x3) / fact(x4));
}

long double three_j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
  if (tm1 + tm2 + tm3 != 0) return 0.0L;
  if (tj1 < 0 || tj2 < 0 || tj3 < 0) return 0.0L;
  if (!triangle_ok(tj1, tj2, tj3)) return 0.0L;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3)
    return 0.0L;
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj3 + tm3) % 2 != 0)
    return 0.0L;

  const int a1 = (tj1 + tm1) / 2, a2 = (tj1 - tm1) / 2;
  const int b1 = (tj2 + tm2) / 2, b2 = (tj2 - tm2) / 2;
  const int c1 = (tj3 + tm3) / 2, c2 = (tj3 - tm3) / 2;

  const long double pre =
      delta_factor(tj1, tj2, tj3) *
      std::sqrt(fact(a1) * fact(a2) * fact(b1) * fact(b2) * fact(c1) * fact(c2));

  const int j1pj2mj3 = (tj1 + tj2 - tj3) / 2;
  const int j3mj2pm1 = (tj3 - tj2 + tm1) / 2;
  const int j3mj1mm2 = (tj3 - tj1 - tm2) / 2;
  const int tmin = std::max({0, -j3mj2pm1, -j3mj1mm2});
  const int tmax = std::min({j1pj2mj3, a2, b1});

  long double sum = 0.0L;
  for (int t = tmin; t <= tmax; ++t) {
    const long double den = fact(t) * fact(j1pj2mj3 - t) * fact(a2 - t) *
                            fact(b1 - t) * fact(j3mj2pm1 + t) *
                            fact(j3mj1mm2 + t);
    sum += ((t % 2 == 0) ? 1.0L : -1.0L) / den;
  }
  const int phase_exp = (tj1 - tj2 - tm3) / 2;
  const long double phase = (((phase_exp % 2) + 2) % 2 == 0) ? 1.0L : -1.0L;
  return phase * pre * sum;
}

long double six_j(int tj1, int tj2, int tj3, int tj4, int tj5, int tj6) {
  if (tj1 < 0 || tj2 < 0 || tj3 < 0 || tj4 < 0 || tj5 < 0 || tj6 < 0)
    return 0.0L;
  if (!triangle_ok(tj1, tj2, tj3) || !triangle_ok(tj1, tj5, tj6) ||
      !triangle_ok(tj4, tj2, tj6) || !triangle_ok(tj4, tj5, tj3))
    return 0.0L;

  const long double pre =
      delta_factor(tj1, tj2, tj3) * delta_factor(tj1, tj5, tj6) *
      delta_factor(tj4, tj2, tj6) * delta_factor(tj4, tj5, tj3);

  const int s1 = (tj1 + tj2 + tj3) / 2;
  const int s2 = (tj1 + tj5 + tj6) / 2;
  const int s3 = (tj4 + tj2 + tj6) / 2;
  const int s4 = (tj4 + tj5 + tj3) / 2;
  const int p1 = (tj1 + tj2 + tj4 + tj5) / 2;
  const int p2 = (tj2 + tj3 + tj5 + tj6) / 2;
  const int p3 = (tj3 + tj1 + tj6 + tj4) / 2;

  const int tmin = std::max({s1, s2, s3, s4});
  const int tmax = std::min({p1, p2, p3});

  long double sum = 0.0L;
  for (int t = tmin; t <= tmax; ++t) {
    const long double num = fact(t + 1);
    const long double den = fact(t - s1) * fact(t - s2) * fact(t - s3) *
                            fact(t - s4) * fact(p1 - t) * fact(p2 - t) *
                            fact(p3 - t);
    sum += ((t % 2 == 0) ? 1.0L : -1.0L) * num / den;
  }
  return pre * sum;
}

uint64_t pack6(int a, int b, int c, int d, int e, int f) {
  // two_j values stay well below 1024 here
  auto u = [](int x) { return static_cast<uint64_t>(x + 512) & 0x3FF; };
  return u(a) | (u(b) << 10) | (u(c) << 20) | (u(d) << 30) | (u(e) << 40) |
         (u(f) << 50);
}

}  // namespace

double wigner3j(double j1, double j2, double j3, double m1, double m2,
                double m3) {
  const int tj1 = to_two(j1, "wigner3j"), tj2 = to_two(j2, "wigner3j"),
            tj3 = to_two(j3, "wigner3j");
  const int tm1 = to_two(m1, "wigner3j"), tm2 = to_two(m2, "wigner3j"),
            tm3 = to_two(m3, "wigner3j");
  // each m must differ from its j by an integer
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj3 + tm3) % 2 != 0)
    throw std::invalid_argument("wigner3j: j and m differ by non-integer");
  thread_local std::unordered_map<uint64_t, double> cache;
  const uint64_t key = pack6(tj1, tj2, tj3, tm1, tm2, tm3);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const double val = static_cast<double>(three_j(tj1, tj2, tj3, tm1, tm2, tm3));
  cache.emplace(key, val);
  return val;
}

double wigner6j(double j1, double j2, double j3, double j4, double j5,
                double j6) {
  const int t1 = to_two(j1, "wigner6j"), t2 = to_two(j2, "wigner6j"),
            t3 = to_two(j3, "wigner6j"), t4 = to_two(j4, "wigner6j"),
            t5 = to_two(j5, "wigner6j"), t6 = to_two(j6, "wigner6j");
  thread_local std::unordered_map<uint64_t, double> cache;
  const uint64_t key = pack6(t1, t2, t3, t4, t5, t6);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const double val = static_cast<double>(six_j(t1, t2, t3, t4, t5, t6));
  cache.emplace(key, val);
  return val;
}

double clebsch_gordan(double l1, double m1, double l2, double m2, double L,
                      double M) {
  const int phase_exp = to_two(l1 - l2 + M, "clebsch_gordan");
  if (phase_exp % 2 != 0) return 0.0;  // non-integer phase implies zero
  const double sign = ((phase_exp / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(2.0 * L + 1.0) * wigner3j(l1, l2, L, m1, m2, -M);
}

}  // namespace hysturm

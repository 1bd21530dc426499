#include "charvar/poly/zfactor.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

// ---------------------------------------------------------------- helpers over ℤ/M

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly reduce(const ZPoly& a, const BigInt& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], m);
  trim(r);
  return r;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigInt x = i < a.size() ? a[i] : BigInt(0);
    if (i < b.size()) x += b[i];
    r[i] = mod(x, m);
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigInt x = i < a.size() ? a[i] : BigInt(0);
    if (i < b.size()) x -= b[i];
    r[i] = mod(x, m);
  }
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(r, m);
}

ZPoly scale(const ZPoly& a, const BigInt& c, const BigInt& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return reduce(r, m);
}

BigInt inv_mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InternalCheckError("non-invertible leading coefficient modulo " + m.get_str());
  }
  return r;
}

// a = q·b + r over ℤ/M; b's leading coefficient must be a unit.
std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r = reduce(a, m);
  if (deg(r) < deg(b)) return {{}, r};
  BigInt inv = inv_mod(b.back(), m);
  ZPoly q(static_cast<std::size_t>(deg(r) - deg(b) + 1), BigInt(0));
  for (int i = deg(r); i >= deg(b); --i) {
    BigInt c = mod(r[static_cast<std::size_t>(i)] * inv, m);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = r[static_cast<std::size_t>(i - deg(b) + j)];
      slot = mod(slot - c * b[static_cast<std::size_t>(j)], m);
    }
  }
  trim(r);
  trim(q);
  return {q, r};
}

ZPoly monic(const ZPoly& a, const BigInt& m) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), m), m);
}

ZPoly gcd_p(ZPoly a, ZPoly b, const BigInt& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.empty()) {
    ZPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// Extended Euclid mod p: s·a + t·b = 1 (a, b coprime).
std::pair<ZPoly, ZPoly> bezout_p(const ZPoly& a, const ZPoly& b, const BigInt& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{BigInt(1)}, s1{};
  ZPoly t0{}, t1{BigInt(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ZPoly s = sub(s0, mul(q, s1, p), p);
    ZPoly t = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (deg(r0) != 0) throw InternalCheckError("Hensel factors are not coprime");
  BigInt inv = inv_mod(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

ZPoly powmod(ZPoly base, BigInt e, const ZPoly& f, const BigInt& p) {
  ZPoly result{BigInt(1)};
  base = divmod(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = divmod(mul(result, base, p), f, p).second;
    e >>= 1;
    if (e > 0) base = divmod(mul(base, base, p), f, p).second;
  }
  return result;
}

ZPoly derivative(const ZPoly& a) {
  ZPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// ---------------------------------------------------------------- factoring mod p

// Equal-degree splitting of a monic square-free g whose factors all have degree d.
void equal_degree(const ZPoly& g, int d, const BigInt& p, std::mt19937_64& rng, std::vector<ZPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  BigInt e = (pd - 1) / 2;
  for (;;) {
    ZPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = BigInt(static_cast<unsigned long>(rng() % p.get_ui()));
    trim(a);
    if (deg(a) < 1) continue;
    ZPoly b = sub(powmod(a, e, g, p), ZPoly{BigInt(1)}, p);
    ZPoly h = gcd_p(g, b, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ZPoly> factor_mod_p(const ZPoly& f_in, const BigInt& p) {
  std::mt19937_64 rng(0x5eed1234ULL);
  ZPoly f = monic(reduce(f_in, p), p);
  std::vector<ZPoly> out;
  ZPoly x{BigInt(0), BigInt(1)};
  ZPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, p);
    ZPoly g = gcd_p(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------- Hensel lifting

// Lifts monic F ≡ g·h (mod p) to mod p^k; F monic modulo p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, ZPoly g, ZPoly h, const BigInt& p, int k) {
  auto [s, t] = bezout_p(g, h, p);
  BigInt pj = p;
  for (int j = 1; j < k; ++j) {
    BigInt pj1 = pj * p;
    ZPoly e = sub(reduce(F, pj1), mul(g, h, pj1), pj1);
    for (auto& c : e) c /= pj;
    e = reduce(e, p);
    auto [q, dg] = divmod(mul(t, e, p), g, p);
    ZPoly dh = add(mul(s, e, p), mul(q, h, p), p);
    g = add(g, scale(dg, pj, pj1), pj1);
    h = add(h, scale(dh, pj, pj1), pj1);
    pj = pj1;
  }
  return {g, h};
}

std::vector<ZPoly> hensel_multi(const ZPoly& F, const std::vector<ZPoly>& us, const BigInt& p, int k, const BigInt& M) {
  if (us.size() == 1) return {reduce(F, M)};
  ZPoly rest{BigInt(1)};
  for (std::size_t i = 1; i < us.size(); ++i) rest = mul(rest, us[i], p);
  auto [g, h] = hensel_pair(F, us[0], rest, p, k);
  std::vector<ZPoly> out{g};
  auto tail = hensel_multi(h, std::vector<ZPoly>(us.begin() + 1, us.end()), p, k, M);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// ---------------------------------------------------------------- recombination

ZPoly symmetric(const ZPoly& a, const BigInt& m) {
  BigInt half = m / 2;
  ZPoly r = a;
  for (auto& c : r) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(r);
  return r;
}

BigInt content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly a) {
  BigInt c = content(a);
  if (c == 0) return a;
  if (a.back() < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

// Exact division over ℤ; empty optional when b does not divide a.
std::optional<ZPoly> divide_z(const ZPoly& a, const ZPoly& b) {
  if (deg(a) < deg(b)) return std::nullopt;
  ZPoly r = a;
  ZPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1), BigInt(0));
  for (int i = deg(a); i >= deg(b); --i) {
    const BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()) == 0) return std::nullopt;
    BigInt c = top / b.back();
    q[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j) r[static_cast<std::size_t>(i - deg(b) + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

bool next_subset(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

bool is_squarefree_mod(const ZPoly& f, const BigInt& p) {
  ZPoly fr = reduce(f, p);
  if (deg(fr) != deg(f)) return false;
  return deg(gcd_p(fr, derivative(fr), p)) == 0;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_zpoly(const ZPoly& f_in) {
  ZPoly f = primitive(f_in);
  trim(f);
  if (deg(f) < 1) throw ShapeError("factorization of a constant");
  if (deg(f) == 1) return {f};

  // Choose the prime giving the fewest modular factors among a few candidates.
  BigInt best_p = 0;
  std::vector<ZPoly> best;
  int tried = 0;
  BigInt p = 2;
  while (tried < 6) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p == 2) continue;
    if (!is_squarefree_mod(f, p)) continue;
    auto fac = factor_mod_p(f, p);
    ++tried;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Mignotte-style bound on lc(f)·g/lc(g) for any factor g.
  BigInt norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  BigInt bound = abs(f.back()) * root;
  bound <<= static_cast<mp_bitcnt_t>(deg(f));
  bound *= 2;
  int k = 1;
  BigInt M = best_p;
  while (M <= bound) {
    M *= best_p;
    ++k;
  }

  ZPoly F = scale(f, inv_mod(f.back(), M), M);
  std::vector<ZPoly> lifted = hensel_multi(F, best, best_p, k, M);

  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::vector<ZPoly> pool = lifted;
  int s = 1;
  while (2 * s <= static_cast<int>(pool.size())) {
    bool found = false;
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      ZPoly prod{cur.back()};
      for (int i : idx) prod = mul(prod, pool[static_cast<std::size_t>(i)], M);
      ZPoly cand = primitive(symmetric(prod, M));
      if (deg(cand) < 1) continue;
      if (auto q = divide_z(cur, cand)) {
        result.push_back(cand);
        cur = primitive(*q);
        std::vector<ZPoly> rest;
        for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[static_cast<std::size_t>(i)]);
        }
        pool = std::move(rest);
        found = true;
        break;
      }
    } while (next_subset(idx, static_cast<int>(pool.size())));
    if (!found) ++s;
  }
  if (deg(cur) >= 1) result.push_back(primitive(cur));
  std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  return result;
}

}  // namespace charvar

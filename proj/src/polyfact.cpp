#include "prym/polyfact.hpp"

#include <algorithm>
#include <bitset>
#include <random>
#include <utility>

#include "prym/error.hpp"

namespace prym {

IntPoly Factorization::product() const {
  IntPoly out = IntPoly::constant(content);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) out = out * f.poly;
  return out;
}

namespace modp {

namespace {

using u64 = std::uint64_t;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
  trim(c);
  return c;
}

Poly scale(const Poly& a, u64 s, u64 p) {
  Poly c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s % p;
  trim(c);
  return c;
}

Poly make_monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p) {
  if (deg(a) < deg(b)) return {Poly{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  u64 li = inv_mod(b.back(), p);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    u64 c = r[static_cast<std::size_t>(k) + b.size() - 1] * li % p;
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      u64& x = r[static_cast<std::size_t>(k) + j];
      x = (x + p - c * b[j] % p) % p;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly quo(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).first; }

Poly powmod(Poly base, const Integer& e, const Poly& f, u64 p) {
  Poly result{1};
  base = rem(base, f, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), f, p);
  }
  return result;
}

}  // namespace

std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{};
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  check_internal(r0.size() == 1, "bezout inputs not coprime");
  u64 li = inv_mod(r0[0], p);
  return {scale(s0, li, p), scale(t0, li, p)};
}

namespace {

void equal_degree(const Poly& g, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly b = sub(powmod(a, e, g, p), Poly{1}, p);
    Poly u = gcd(b, g, p);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      equal_degree(u, d, p, rng, out);
      equal_degree(quo(g, u, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

Poly reduce(const IntPoly& f, std::uint64_t p) {
  Poly out(f.coefficients().size());
  Integer r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coefficients()[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

Poly gcd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly x = a, y = b;
  while (!y.empty()) {
    Poly r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x, p);
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
  Poly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * (i % p) % p);
  trim(df);
  if (df.empty()) return deg(f) <= 0;
  return deg(gcd(f, df, p)) == 0;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p) {
  std::vector<std::pair<Poly, int>> out;
  Poly cur = make_monic(f, p);
  const Poly x{0, 1};
  Poly h = rem(x, cur, p);
  for (int d = 1; 2 * d <= deg(cur); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), cur, p);
    Poly g = gcd(sub(h, x, p), cur, p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      cur = quo(cur, g, p);
      h = rem(h, cur, p);
    }
  }
  if (deg(cur) > 0) out.emplace_back(cur, deg(cur));
  return out;
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p) {
  check_internal(p > 2, "equal-degree splitting needs an odd prime");
  std::mt19937_64 rng(0x5eed0000u + p);
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  return out;
}

}  // namespace modp

namespace {

using modp::Poly;
using u64 = std::uint64_t;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> ps;
    for (u64 n = 2; ps.size() < 200; ++n) {
      bool prime = true;
      for (u64 q : ps) {
        if (q * q > n) break;
        if (n % q == 0) {
          prime = false;
          break;
        }
      }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

IntPoly lift_poly(const Poly& a) {
  std::vector<Integer> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<unsigned long>(a[i]);
  return IntPoly(std::move(c));
}

IntPoly mod_positive(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c = f.coefficients();
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly mod_symmetric(const IntPoly& f, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> c = f.coefficients();
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c));
}

// Lifts F = g*h mod p (all monic) to F = g*h mod p^k.
void hensel_pair(const IntPoly& F, IntPoly& g, IntPoly& h, u64 p, int k) {
  Poly gp = modp::reduce(g, p);
  Poly hp = modp::reduce(h, p);
  auto [s, t] = modp::bezout(gp, hp, p);

  Integer m = static_cast<unsigned long>(p);
  for (int j = 1; j < k; ++j) {
    IntPoly err = F - g * h;
    std::vector<Integer> ec = err.coefficients();
    for (auto& x : ec) {
      check_internal(mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0, "Hensel congruence lost");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    Poly e = modp::reduce(IntPoly(std::move(ec)), p);
    Poly dg = modp::rem(modp::mul(t, e, p), gp, p);
    Poly dh = modp::rem(modp::mul(s, e, p), hp, p);
    g = g + m * lift_poly(dg);
    h = h + m * lift_poly(dh);
    m *= static_cast<unsigned long>(p);
  }
}

// Lifts the modular factorization of monic F to p^k.
std::vector<IntPoly> hensel_lift(const IntPoly& F, const std::vector<Poly>& factors, u64 p, int k) {
  if (factors.size() == 1) {
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
    return {mod_positive(F, pk)};
  }
  std::size_t mid = factors.size() / 2;
  std::vector<Poly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(mid));
  std::vector<Poly> right(factors.begin() + static_cast<std::ptrdiff_t>(mid), factors.end());
  Poly gp{1}, hp{1};
  for (const auto& f : left) gp = modp::mul(gp, f, p);
  for (const auto& f : right) hp = modp::mul(hp, f, p);
  IntPoly g = lift_poly(gp);
  IntPoly h = lift_poly(hp);
  hensel_pair(F, g, h, p, k);
  std::vector<IntPoly> out = hensel_lift(g, left, p, k);
  std::vector<IntPoly> rest = hensel_lift(h, right, p, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Integer coefficient_bound(const IntPoly& f) {
  Integer sq = 0;
  for (const auto& c : f.coefficients()) sq += c * c;
  Integer norm = sqrt(sq) + 1;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return two_n * norm;
}

// Irreducible monic factors of a monic squarefree F of degree >= 2.
std::vector<IntPoly> zassenhaus_monic(const IntPoly& F) {
  const int n = F.degree();
  u64 best_p = 0;
  int best_count = n + 1;
  int tried = 0;
  for (u64 p : small_primes()) {
    if (p == 2) continue;
    Poly fp = modp::reduce(F, p);
    if (modp::reduce(IntPoly::constant(F.leading()), p).empty()) continue;
    if (!modp::is_squarefree(fp, p)) continue;
    int count = 0;
    for (const auto& [g, d] : modp::distinct_degree(fp, p)) count += (static_cast<int>(g.size()) - 1) / d;
    if (count < best_count) {
      best_count = count;
      best_p = p;
    }
    if (++tried == 5 || best_count == 1) break;
  }
  check_internal(best_p != 0, "no lucky prime for a squarefree polynomial");
  if (best_count == 1) return {F};

  const u64 p = best_p;
  std::vector<Poly> modular = modp::factor_squarefree(modp::reduce(F, p), p);
  Integer bound = 2 * coefficient_bound(F) + 1;
  int k = 1;
  Integer pk = static_cast<unsigned long>(p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<IntPoly> lifted = hensel_lift(F, modular, p, k);

  std::vector<IntPoly> result;
  IntPoly rest = F;
  std::vector<IntPoly> pool = lifted;
  for (std::size_t s = 1; 2 * s <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      IntPoly cand = IntPoly::constant(1);
      for (std::size_t i : idx) cand = mod_positive(cand * pool[i], pk);
      cand = mod_symmetric(cand, pk);
      Integer c0 = cand[0];
      bool plausible = (c0 == 0) ? rest[0] == 0 : mpz_divisible_p(rest[0].get_mpz_t(), c0.get_mpz_t()) != 0;
      IntPoly quotient;
      if (plausible && exact_divide(rest, cand, quotient)) {
        result.push_back(cand);
        rest = quotient;
        std::vector<IntPoly> kept;
        for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          kept.push_back(pool[i]);
        }
        pool = std::move(kept);
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == pool.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(rest);
  return result;
}

// Irreducible primitive factors of a primitive squarefree f with positive leading coefficient.
std::vector<IntPoly> factor_squarefree_Z(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  const Integer lc = f.leading();
  if (lc == 1) return zassenhaus_monic(f);
  // F(x) = lc^(n-1) f(x / lc) is monic; factors map back through G(lc x).
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  Integer power = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = f.coefficients()[static_cast<std::size_t>(i)] * power;
    power *= lc;
  }
  c[static_cast<std::size_t>(n)] = 1;
  std::vector<IntPoly> out;
  for (const IntPoly& g : zassenhaus_monic(IntPoly(std::move(c)))) {
    std::vector<Integer> b = g.coefficients();
    Integer pw = 1;
    for (auto& x : b) {
      x *= pw;
      pw *= lc;
    }
    out.push_back(IntPoly(std::move(b)).primitive_part());
  }
  return out;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

int totient(int n) {
  int result = n;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(int n) {
  int mu = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

const std::vector<IntPoly>& cached_cyclotomics() {
  static const std::vector<IntPoly> table = [] {
    std::vector<IntPoly> t;
    for (int n : cyclotomic_orders(kMaxFactorDegree)) t.push_back(cyclotomic(n));
    return t;
  }();
  return table;
}

// Integer roots of a monic polynomial with nonzero constant term, when feasible.
// Returns false if the constant term is too large to enumerate its divisors.
bool has_integer_root(const IntPoly& q, bool& feasible) {
  Integer c0 = abs(q[0]);
  feasible = true;
  if (c0 == 0) return true;
  if (c0 > Integer("1000000000000")) {
    feasible = false;
    return false;
  }
  unsigned long c = c0.get_ui();
  for (unsigned long d = 1; d * d <= c; ++d) {
    if (c % d) continue;
    for (unsigned long r : {d, c / d}) {
      Integer root = static_cast<long>(r);
      if (q.evaluate(root) == 0 || q.evaluate(-root) == 0) return true;
    }
  }
  return false;
}

}  // namespace

Factorization factor_over_Z(const IntPoly& q) {
  if (q.is_zero()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  if (q.degree() > kMaxFactorDegree) fail(ErrorCode::InvalidArgument, "degree exceeds factoring envelope");
  Factorization out;
  out.content = q.content();
  if (q.leading() < 0) out.content = -out.content;
  if (q.degree() == 0) {
    out.content = q[0];
    return out;
  }
  IntPoly f = q.primitive_part();
  IntPoly sqf = f;
  IntPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) {
    bool ok = exact_divide(f, g, sqf);
    check_internal(ok, "squarefree part division");
    sqf = sqf.primitive_part();
  }
  std::vector<IntPoly> irreducibles = factor_squarefree_Z(sqf);
  std::sort(irreducibles.begin(), irreducibles.end(), poly_less);
  IntPoly rest = f;
  for (const IntPoly& p : irreducibles) {
    int mult = 0;
    IntPoly quotient;
    while (exact_divide(rest, p, quotient)) {
      rest = quotient;
      ++mult;
    }
    check_internal(mult > 0, "factor does not divide input");
    out.factors.push_back({p, mult});
  }
  check_internal(rest.degree() == 0 && abs(rest[0]) == 1, "factorization lost a cofactor");
  out.content *= rest[0];
  check_internal(out.product() == q, "factorization does not multiply back");
  return out;
}

bool is_irreducible_Q(const IntPoly& q) {
  if (q.degree() < 1) fail(ErrorCode::InvalidArgument, "irreducibility needs degree >= 1");
  if (!q.is_monic()) fail(ErrorCode::InvalidArgument, "irreducibility test expects a monic polynomial");
  const int n = q.degree();
  if (n == 1) return true;
  bool feasible = true;
  if (has_integer_root(q, feasible)) return false;
  if (feasible && n <= 3) return true;
  if (gcd(q, q.derivative()).degree() > 0) return false;

  // Degree-pattern sieve: intersect the sets of achievable factor degrees mod p.
  if (n <= 63) {
    std::bitset<64> possible;
    possible.set();
    int used = 0;
    for (u64 p : small_primes()) {
      if (used == 15) break;
      Poly fp = modp::reduce(q, p);
      if (!modp::is_squarefree(fp, p)) continue;
      ++used;
      std::bitset<64> sums;
      sums.set(0);
      for (const auto& [g, d] : modp::distinct_degree(fp, p)) {
        int count = (static_cast<int>(g.size()) - 1) / d;
        for (int i = 0; i < count; ++i) sums |= sums << static_cast<std::size_t>(d);
      }
      possible &= sums;
      bool only_trivial = true;
      for (int k = 1; k < n; ++k)
        if (possible.test(static_cast<std::size_t>(k))) only_trivial = false;
      if (only_trivial) return true;
    }
  }
  Factorization f = factor_over_Z(q);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

IntPoly cyclotomic(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 0) continue;
    IntPoly term = IntPoly::monomial(1, d) - IntPoly::constant(1);
    if (mu == 1) num = num * term;
    else den = den * term;
  }
  IntPoly out;
  bool ok = exact_divide(num, den, out);
  check_internal(ok, "cyclotomic quotient");
  return out;
}

std::vector<int> cyclotomic_orders(int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "cyclotomic degree bound must be positive");
  std::vector<int> out;
  for (int n = 1; n <= 2 * d * d; ++n)
    if (totient(n) <= d) out.push_back(n);
  return out;
}

std::vector<IntPoly> cyclotomic_list(int d) {
  std::vector<IntPoly> out;
  if (d <= kMaxFactorDegree) {
    const auto& table = cached_cyclotomics();
    for (const auto& phi : table)
      if (phi.degree() <= d) out.push_back(phi);
    return out;
  }
  for (int n : cyclotomic_orders(d)) out.push_back(cyclotomic(n));
  return out;
}

bool has_root_of_unity_factor(const IntPoly& q) {
  if (q.degree() < 1) fail(ErrorCode::InvalidArgument, "root-of-unity test needs degree >= 1");
  IntPoly quotient;
  for (const IntPoly& phi : cyclotomic_list(q.degree()))
    if (exact_divide(q, phi, quotient)) return true;
  return false;
}

bool is_reciprocal(const IntPoly& q) {
  if (!q.is_monic()) fail(ErrorCode::InvalidArgument, "reciprocity test expects a monic polynomial");
  if (q.degree() % 2 != 0) fail(ErrorCode::InvalidArgument, "reciprocity test expects even degree");
  const int n = q.degree();
  for (int i = 0; i <= n / 2; ++i)
    if (q[i] != q[n - i]) return false;
  return true;
}

}  // namespace prym

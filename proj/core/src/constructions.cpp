#include "addcomp/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "addcomp/errors.hpp"
#include "addcomp/numtheory.hpp"

namespace addcomp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u128 kLimit = u128{1} << 63;

u64 pow_below_limit(u64 q, u64 e) {
  u128 v = 1;
  for (u64 i = 0; i < e; ++i) {
    v *= q;
    if (v >= kLimit) {
      throw DomainError(std::to_string(q) + "^" + std::to_string(e) + " exceeds 2^63");
    }
  }
  return static_cast<u64>(v);
}

std::string window(u64 lo, u64 hi) {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::string join(const std::vector<u64>& xs, std::size_t limit = 20) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  if (xs.size() > limit) out += ",...";
  return out;
}

Rational frac(u64 num, u64 den) { return Rational(BigInt(num), BigInt(den)); }

void require_open_unit(const Rational& alpha, const char* what) {
  if (alpha <= Rational(0) || alpha >= Rational(1)) {
    throw DomainError(std::string(what) + " requires 0 < alpha < 1, got " + alpha.str());
  }
}

void require_half_open_unit(const Rational& alpha, const char* what) {
  if (alpha <= Rational(0) || alpha > Rational(1)) {
    throw DomainError(std::string(what) + " requires 0 < alpha <= 1, got " + alpha.str());
  }
}

u64 to_u64(const BigInt& v) { return static_cast<u64>(v); }

void add_udap_check(Certificate& cert, const std::string& name, const UdapComposite& c,
                    u64 depth) {
  const u64 d = feasible_depth(c, depth);
  CompositeLevels lv = composite_levels(c, d);
  const bool ok = verify::udap_certificate(lv.levels, lv.residuals);
  cert.add(name, "depth " + std::to_string(d), ok,
           std::to_string(lv.levels.size()) + " progressions, " +
               std::to_string(lv.residuals.size()) + " residuals");
}

std::vector<u64> primes_in(const TruncatedSet& s) {
  const std::vector<bool> prime = nt::prime_sieve(s.bound());
  std::vector<u64> out;
  for (u64 x : s.elements()) {
    if (prime[x]) out.push_back(x);
  }
  return out;
}

Json u64_array(const std::vector<u64>& xs) {
  Json a = Json::array();
  for (u64 x : xs) a.push_back(x);
  return a;
}

Json ap_array(const std::vector<AP>& aps) {
  Json a = Json::array();
  for (const AP& ap : aps) a.push_back(to_json(ap));
  return a;
}

Json part_array(const std::vector<MComponent>& parts) {
  Json a = Json::array();
  for (const MComponent& p : parts) {
    a.push_back(Json{{"offset", p.offset},
                     {"base", p.set.base()},
                     {"digits", to_json(p.set.expansion())},
                     {"first_level", p.first_level}});
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------

Thm1Result thm1_avoider(const Thm1Plan& plan) {
  const auto& b = plan.s_prefix;
  if (b.empty()) throw PreconditionError("thm1: S prefix is empty");
  if (b.front() == 0) throw PreconditionError("thm1: S must lie in N");
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] <= b[i - 1]) throw PreconditionError("thm1: S prefix must be strictly ascending");
  }
  if (plan.seed.empty()) throw PreconditionError("thm1: seed X is empty");
  for (u64 x : plan.seed) {
    if (x == 0) throw PreconditionError("thm1: seed X must lie in N");
  }

  Thm1Result out{plan, TruncatedSet(std::max(b.back(), *std::max_element(plan.seed.begin(),
                                                                          plan.seed.end())))};
  TruncatedSet& a = out.set;
  for (u64 x : plan.seed) {
    a.insert(x);
    if (b[0] > x) a.insert(b[0] - x);
  }
  out.literal_stages = 1;

  // One stage: reflect the union so far through b_1..b_n.
  auto stage = [&](std::size_t n) {
    const std::vector<u64> prev = a.elements();
    for (std::size_t i = 0; i < n; ++i) {
      for (u64 y : prev) {
        if (y >= b[i]) break;
        a.insert(b[i] - y);
      }
    }
    return a.count() != prev.size();
  };
  for (std::size_t n = 2; n <= b.size(); ++n) {
    stage(n);
    ++out.literal_stages;
  }
  while (stage(b.size())) ++out.closure_rounds;
  return out;
}

Certificate certify_thm1(const Thm1Result& result, ExecConfig exec) {
  Certificate cert;
  const TruncatedSet& a = result.set;
  const u64 n = a.bound();
  cert.add("closure", window(1, n), verify::closure_check(a, result.plan.s_prefix, n),
           std::to_string(result.closure_rounds) + " rounds past the literal recursion");
  const std::vector<u64> hits = verify::avoidance_check(a, result.plan.s_prefix, exec);
  cert.add("avoidance", window(1, n), hits.empty(),
           hits.empty() ? "S prefix avoided" : "hit: " + join(hits));
  return cert;
}

// ---------------------------------------------------------------------------

std::vector<u64> geometric_avoider(u64 g, u64 n) {
  if (g <= 2) throw DomainError("geometric avoider requires g >= 3, got " + std::to_string(g));
  if (n == 0) throw PreconditionError("geometric avoider requires n >= 1");
  if (n > 30) throw PreconditionError("geometric avoider: 2^n elements is too many for n > 30");
  pow_below_limit(g, n);
  u64 power = g;
  std::vector<u64> a{1, g - 1};
  a.reserve(u64{1} << n);
  for (u64 k = 2; k <= n; ++k) {
    power *= g;
    const std::size_t half = a.size();
    for (std::size_t i = half; i-- > 0;) a.push_back(power - a[i]);
  }
  return a;
}

Certificate certify_geometric(u64 g, u64 n, u64 avoid_N, ExecConfig exec) {
  Certificate cert;
  const std::vector<u64> a = geometric_avoider(g, n);
  const u64 top = pow_below_limit(g, n);

  cert.add("cardinality", "A_" + std::to_string(n), a.size() == (u64{1} << n),
           "|A_n| = " + std::to_string(a.size()));
  cert.add("max_element", "A_" + std::to_string(n), a.back() == top - 1,
           "max = " + std::to_string(a.back()));

  // Direct definition, stage by stage, against prefixes of the recursion.
  bool direct_ok = true;
  std::string direct_details = "stages 1.." + std::to_string(n) + " agree";
  std::set<u64> uni;
  std::vector<u64> powers;
  for (u64 k = 1, pw = g; k <= n; ++k, pw *= g) {
    powers.push_back(pw);
    std::set<u64> stage;
    if (k == 1) {
      stage = {1, g - 1};
    } else {
      for (u64 p : powers) {
        for (u64 y : uni) {
          if (y < p) stage.insert(p - y);
        }
      }
    }
    uni.insert(stage.begin(), stage.end());
    const std::size_t expect = std::size_t{1} << k;
    if (uni.size() != expect || !std::equal(uni.begin(), uni.end(), a.begin())) {
      direct_ok = false;
      direct_details = "stage " + std::to_string(k) + " differs";
      break;
    }
    if (k == n) break;
  }
  cert.add("direct_definition", "A_1..A_" + std::to_string(n), direct_ok, direct_details);

  const u64 limit = avoid_N == 0 ? std::min<u64>(top, u64{1} << 20) : std::min(avoid_N, top);
  const TruncatedSet trunc = truncate(std::span<const u64>(a), limit);
  std::vector<u64> targets;
  for (u64 pw = g; pw <= limit; pw *= g) {
    targets.push_back(pw);
    if (pw > limit / g) break;
  }
  const std::vector<u64> hits = verify::avoidance_check(trunc, targets, exec);
  cert.add("avoidance", window(1, limit), hits.empty(),
           hits.empty() ? std::to_string(targets.size()) + " powers avoided" : "hit: " + join(hits));
  return cert;
}

// ---------------------------------------------------------------------------

RationalAvoider rational_avoider(u64 p, u64 q) {
  if (p == 0 || p >= q) {
    throw DomainError("rational avoider requires 1 <= p < q, got p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
  }
  RationalAvoider r;
  r.p = p;
  r.q = q;
  for (u64 i = 0; i < p; ++i) r.set.aps.push_back(AP::from_residue(i, q));
  r.missed_class = AP::from_residue(p - 1, q);
  return r;
}

Certificate certify_rational(const RationalAvoider& r, u64 N, ExecConfig exec) {
  Certificate cert;
  const TruncatedSet a = truncate(r.set, N);
  const TruncatedSet sums = sumset(a, complement_in_N(a), exec);
  const TruncatedSet predicted = complement_in_N(truncate(r.missed_class, N));
  const std::vector<u64> diff = (sums ^ predicted).elements();
  const u64 edge = r.p + r.q;
  const bool ok = diff.empty() || diff.back() < edge;
  cert.add("sumset_identity", window(edge, N), ok,
           diff.empty() ? "no exceptions" : "exceptions below " + std::to_string(edge) + ": " +
                                                join(diff));
  const Rational d = exact_density(UdapComposite{r.set.aps, {}});
  cert.add("density_exact", "exact", d == frac(r.p, r.q), "density " + d.str());
  cert.add("udap_disjoint", "exact", udap_disjoint(r.set.aps));
  return cert;
}

// ---------------------------------------------------------------------------

bool DyadicAvoider::member(u64 x) const {
  if (x == 0) return false;
  return mset_member(base, x) != complemented;
}

TruncatedSet DyadicAvoider::truncate(u64 N) const {
  TruncatedSet t = addcomp::truncate(base, N);
  return complemented ? complement_in_N(t) : t;
}

Rational DyadicAvoider::density() const {
  const Rational v = exact_density(base);
  return complemented ? Rational(1) - v : v;
}

WitnessSet DyadicAvoider::witness(u64 N) const {
  WitnessSet w;
  w.generator = "S_l = sum_{j<l} a_j 2^j, l >= 2, digits " + base.expansion().str();
  u128 s = 0;
  for (u64 l = 2; l < 64; ++l) {
    const u128 pw = u128{1} << (l - 1);
    if (pw > N) break;
    s += base.digit(l - 1) * pw;
    if (s <= N && (w.prefix.empty() || w.prefix.back() != s)) {
      w.prefix.push_back(static_cast<u64>(s));
    }
  }
  return w;
}

std::vector<AP> DyadicAvoider::blocks(u64 d) const {
  if (d >= 63) throw DomainError("dyadic blocks need d < 63");
  std::vector<AP> out;
  u64 s = 0;
  for (u64 l = 1; l <= d; ++l) {
    out.push_back(AP{s + (u64{1} << (l - 1)), u64{1} << l});
    s += base.digit(l) << l;
  }
  return out;
}

DyadicAvoider dyadic_avoider(const Rational& alpha) {
  require_open_unit(alpha, "dyadic avoider");
  const bool upper = alpha >= frac(1, 2);
  const Rational target = upper ? alpha : Rational(1) - alpha;
  return DyadicAvoider{alpha, MSet(2, expand(target, 2)), !upper};
}

Certificate certify_dyadic(const DyadicAvoider& a, u64 d, ExecConfig exec) {
  if (d == 0 || d > 40) throw PreconditionError("dyadic certificate needs 1 <= d <= 40");
  Certificate cert;
  const u64 N = u64{1} << d;
  const TruncatedSet set = a.truncate(N);
  const TruncatedSet sums = sumset(set, complement_in_N(set), exec);
  const WitnessSet w = a.witness(N);

  std::vector<u64> hits;
  for (u64 s : w.prefix) {
    if (sums.contains(s)) hits.push_back(s);
  }
  cert.add("witness_avoided", window(1, N), hits.empty(),
           hits.empty() ? "S prefix " + join(w.prefix) : "hit: " + join(hits));

  const std::vector<AP> blocks = a.blocks(d);
  TruncatedSet covered(N);
  for (const AP& t : blocks) covered.insert(t);
  const std::vector<u64> outside = (sums ^ (sums & covered)).elements();
  cert.add("block_containment", window(1, N), outside.empty(),
           outside.empty() ? std::to_string(blocks.size()) + " blocks"
                           : "outside: " + join(outside));

  std::vector<u64> in_block;
  for (u64 s : w.prefix) {
    for (const AP& t : blocks) {
      if (t.contains(s)) {
        in_block.push_back(s);
        break;
      }
    }
  }
  cert.add("witness_outside_blocks", "T_1..T_" + std::to_string(d), in_block.empty(),
           in_block.empty() ? "" : "in a block: " + join(in_block));

  const Rational dens = a.density();
  cert.add("density_exact", "exact", dens == a.alpha, "density " + dens.str());
  return cert;
}

// ---------------------------------------------------------------------------

Thm3aResult thm3a_complement(std::span<const u64> b, const Rational& alpha, u64 q) {
  if (b.empty()) throw PreconditionError("thm3a: B is empty");
  require_half_open_unit(alpha, "thm3a");
  if (q < 2) throw DomainError("thm3a requires q >= 2");

  Thm3aResult out;
  Thm3aPlan& plan = out.plan;
  plan.b.assign(b.begin(), b.end());
  std::sort(plan.b.begin(), plan.b.end());
  plan.b.erase(std::unique(plan.b.begin(), plan.b.end()), plan.b.end());
  plan.shift = plan.b.front();
  for (u64 x : plan.b) plan.b1.push_back(x - plan.shift);
  plan.k = plan.b1.back() + 1;
  plan.q = q;
  plan.alpha = alpha;

  const u64 need = std::max<u64>(2 * plan.k - 2, 1);
  u64 qr = 1;
  for (u64 r = 1;; ++r) {
    qr = pow_below_limit(q, r);
    const BigInt c = (Rational(BigInt(qr)) * alpha).floor();
    if (c >= need) {
      plan.r = r;
      plan.c = to_u64(c);
      break;
    }
  }

  const Rational rest = Rational(BigInt(qr)) * alpha - Rational(BigInt(plan.c));
  const DigitExpansion head = expand(rest, q);
  std::vector<Digit> pre(plan.r, 0);
  pre.insert(pre.end(), head.preperiod().begin(), head.preperiod().end());
  plan.tail = DigitExpansion(q, std::move(pre), head.period());

  const MSet m(q, plan.tail);
  for (u64 i = 0; i <= plan.c - plan.k; ++i) out.set.aps.push_back(AP::from_residue(i, qr));
  out.set.parts.push_back(MComponent{plan.c - plan.k + 1, m, 1});
  for (u64 i = 0; i < plan.c; ++i) out.predicted.aps.push_back(AP::from_residue(i, qr));
  out.predicted.parts.push_back(MComponent{plan.c, m, 1});
  return out;
}

Certificate certify_thm3a(const Thm3aResult& r, u64 N, u64 depth, ExecConfig exec) {
  Certificate cert;
  const Thm3aPlan& plan = r.plan;
  const TruncatedSet a = truncate(r.set, N);
  // B1 contains 0, which a bit-vector over N cannot hold: A + B1 = A ∪ (A + B1 \ {0}).
  const TruncatedSet shifts = truncate(std::span<const u64>(plan.b1), N);
  const TruncatedSet sums = a | sumset(a, shifts, exec);
  const TruncatedSet predicted = truncate(r.predicted, N);
  const auto diff = (sums ^ predicted).max_element();
  const u64 w = diff ? *diff + 1 : 1;
  const u128 limit = static_cast<u128>(plan.c) * pow_below_limit(plan.q, plan.r) + plan.b1.back();
  cert.add("sumset_identity", window(w, N), w < limit && w <= N / 2,
           "W = " + std::to_string(w) + ", bound c*q^r + max(B1) = " +
               std::to_string(static_cast<u64>(limit)));

  const Rational d = exact_density(r.predicted);
  cert.add("density_exact", "exact", d == plan.alpha, "density of A+B " + d.str());
  add_udap_check(cert, "udap_set", r.set, depth);
  add_udap_check(cert, "udap_predicted", r.predicted, depth);
  return cert;
}

// ---------------------------------------------------------------------------

Thm3bResult thm3b_prime_rich(const Rational& alpha) {
  require_open_unit(alpha, "thm3b");
  Thm3bResult out;
  out.alpha = alpha;
  for (u64 p = 2;; ++p) {
    if (p > (u64{1} << 32)) throw NotFoundError("thm3b: no prime window found below 2^32");
    if (!nt::is_prime(p)) continue;
    const Rational pa = Rational(BigInt(p)) * alpha;
    if (pa >= Rational(1) && pa < Rational(BigInt(p - 1))) {
      out.p = p;
      out.k = to_u64(pa.floor());
      break;
    }
  }
  out.digits = expand(alpha, out.p);
  if (out.digits.digit(1) != out.k) {
    throw LemmaViolation("thm3b: leading digit differs from floor(p alpha)");
  }
  for (u64 i = 1; i < out.k; ++i) out.set.aps.push_back(AP::from_residue(i, out.p));
  out.dirichlet_class = AP::from_residue(out.k + 1, out.p);
  out.set.aps.push_back(out.dirichlet_class);
  out.set.parts.push_back(MComponent{0, MSet(out.p, out.digits), 2});
  return out;
}

Certificate certify_thm3b(const Thm3bResult& r, u64 N, u64 depth, u64 min_primes) {
  Certificate cert;
  const Rational d = exact_density(r.set);
  cert.add("density_exact", "exact", d == r.alpha, "density " + d.str());
  cert.add("dirichlet_class_coprime", "exact", nt::gcd(r.k + 1, r.p) == 1,
           "class " + std::to_string(r.k + 1) + " mod " + std::to_string(r.p));
  const std::vector<u64> primes = primes_in(truncate(r.set, N));
  cert.add("primes_in_set", window(1, N), primes.size() >= min_primes,
           std::to_string(primes.size()) + " primes, first " + join(primes, 10));
  add_udap_check(cert, "udap_disjoint", r.set, depth);
  return cert;
}

// ---------------------------------------------------------------------------

Thm3cResult thm3c_prime_free(const Rational& alpha, u64 n_bound) {
  require_open_unit(alpha, "thm3c");
  const Rational co = Rational(1) - alpha;
  const u64 n = nt::search_primorial_family(n_bound, [&](u64 m) {
    const u64 phi = nt::totient(m);
    if (!(frac(phi, m) < co)) return false;
    const u64 k = to_u64((Rational(BigInt(m)) * alpha).floor());
    const u64 omega = nt::prime_divisors(m).size();
    return m - phi - omega - 1 >= k;
  });
  if (n == 0) {
    throw NotFoundError("thm3c: no admissible n <= " + std::to_string(n_bound) +
                        " (inconclusive)");
  }
  Thm3cResult out;
  out.alpha = alpha;
  out.n = n;
  out.k = to_u64((Rational(BigInt(n)) * alpha).floor());
  for (u64 i = 4; i < n && out.s.size() < out.k; ++i) {
    if (nt::gcd(i, n) != 1 && !nt::is_prime(i)) out.s.push_back(i);
  }
  if (out.s.size() != out.k) throw LemmaViolation("thm3c: composite slack miscounted");
  out.digits = expand(alpha, n);
  if (out.digits.digit(1) != out.k) {
    throw LemmaViolation("thm3c: leading digit differs from floor(n alpha)");
  }
  out.m_digits = out.digits.with_digit(1, 0);
  for (u64 i : out.s) out.set.aps.push_back(AP::from_residue(i, n));
  out.set.parts.push_back(MComponent{0, MSet(n, out.m_digits), 1});
  return out;
}

Certificate certify_thm3c(const Thm3cResult& r, u64 N, u64 depth) {
  Certificate cert;
  const Rational d = exact_density(r.set);
  cert.add("density_exact", "exact", d == r.alpha, "density " + d.str());
  const std::vector<u64> primes = primes_in(truncate(r.set, N));
  cert.add("prime_free", window(1, N), primes.empty(),
           primes.empty() ? "no primes" : "primes: " + join(primes));
  add_udap_check(cert, "udap_disjoint", r.set, depth);
  return cert;
}

// ---------------------------------------------------------------------------

Thm4Result thm4_geometric_complement(u64 a, u64 g, const Rational& alpha, u64 p_bound,
                                     std::optional<u64> m_override) {
  require_half_open_unit(alpha, "thm4");
  if (a == 0) throw DomainError("thm4 requires a >= 1");
  if (g < 2) throw DomainError("thm4 requires g >= 2");
  Thm4Plan plan;
  plan.a = a;
  plan.g = g;
  plan.alpha = alpha;
  if (alpha == Rational(1)) {
    plan.trivial = true;
    plan.digits = expand(alpha, 2);
    return Thm4Result{plan, MSet(2, plan.digits)};
  }

  bool any_candidate = false;
  for (u64 p = 3; p <= p_bound && !any_candidate; p += 2) {
    any_candidate = nt::is_prime(p) && a % p != 0;
  }
  if (!any_candidate) {
    throw DomainError("thm4: every odd prime <= " + std::to_string(p_bound) + " divides a = " +
                      std::to_string(a));
  }
  const nt::ArtinSearch found = nt::find_artin_pair(g, p_bound, a);
  plan.p = found.witness.p;
  plan.near_misses = found.near_misses;

  if (m_override) {
    if (*m_override == 0) throw PreconditionError("thm4: m must be >= 1");
    plan.m = *m_override;
  } else {
    plan.m = 3;
    while (Rational(BigInt(pow_below_limit(plan.p, plan.m))) * alpha <= Rational(2)) ++plan.m;
  }
  plan.modulus = pow_below_limit(plan.p, plan.m);
  plan.digits = expand(alpha, plan.modulus);
  return Thm4Result{plan, MSet(plan.modulus, plan.digits)};
}

std::vector<u64> thm4_residues(const Thm4Plan& plan) {
  if (plan.trivial || plan.modulus < 2) return {};
  const u64 mod = plan.modulus;
  const u64 phi = nt::totient(mod);
  std::vector<u64> out;
  out.reserve(phi);
  u64 x = plan.a % mod;
  const u64 g = plan.g % mod;
  for (u64 i = 1; i <= phi; ++i) {
    x = nt::mul_mod(x, g, mod);
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<u64> geometric_progression(u64 a, u64 g, u64 N) {
  if (a == 0 || g < 2) throw DomainError("geometric progression requires a >= 1, g >= 2");
  std::vector<u64> out;
  u128 x = static_cast<u128>(a) * g;
  while (x <= N) {
    out.push_back(static_cast<u64>(x));
    x *= g;
  }
  return out;
}

Certificate certify_thm4(const Thm4Result& r, u64 N, u64 depth, verify::CoverageReport* coverage,
                         ExecConfig exec) {
  Certificate cert;
  const Thm4Plan& plan = r.plan;
  if (!plan.trivial) {
    const bool m_ok = plan.m >= 3 && plan.digits.digit(1) >= 2;
    cert.add("plan_m", "exact", m_ok,
             "m = " + std::to_string(plan.m) + ", leading digit " +
                 std::to_string(plan.digits.digit(1)));

    const u64 mod = plan.modulus;
    const std::vector<u64> res = thm4_residues(plan);
    std::vector<bool> hit(mod, false);
    for (u64 x : res) {
      hit[x] = true;
      hit[(x + 1) % mod] = true;
    }
    const auto covered = static_cast<u64>(std::count(hit.begin(), hit.end(), true));
    cert.add("residue_identity", window(0, mod - 1), covered == mod,
             std::to_string(res.size()) + " residues, " + std::to_string(covered) + " of " +
                 std::to_string(mod) + " covered");

    std::vector<u64> missing;
    for (u64 base = mod; base <= N; base += mod) {
      if (!mset_member(r.set, base)) missing.push_back(base);
      if (base + 1 <= N && !mset_member(r.set, base + 1)) missing.push_back(base + 1);
      if (missing.size() >= 20) break;
    }
    cert.add("a0_contained", window(1, N), missing.empty(),
             missing.empty() ? "" : "missing: " + join(missing));

    UdapComposite single{{}, {MComponent{0, r.set, 1}}};
    add_udap_check(cert, "udap_disjoint", single, depth);
  }
  const Rational d = exact_density(r.set);
  cert.add("density_exact", "exact", d == plan.alpha, "density " + d.str());

  const TruncatedSet a = truncate(r.set, N);
  const TruncatedSet b = truncate(std::span<const u64>(geometric_progression(plan.a, plan.g, N)), N);
  verify::CoverageReport rep = verify::coverage_exceptions(a, b, exec);
  std::string details = std::to_string(rep.exceptions.size()) + " exceptions";
  if (rep.max_exception) details += ", T = " + std::to_string(*rep.max_exception);
  cert.add("coverage_stable", window(1, N), rep.stable, details);
  if (coverage) *coverage = std::move(rep);
  return cert;
}

// ---------------------------------------------------------------------------

Json to_json(const Thm1Plan& plan) {
  return Json{{"s_prefix", u64_array(plan.s_prefix)},
              {"seed", u64_array(plan.seed)},
              {"depth", plan.depth()}};
}

Json to_json(const RationalAvoider& r) {
  return Json{{"p", r.p},
              {"q", r.q},
              {"aps", ap_array(r.set.aps)},
              {"missed_class", to_json(r.missed_class)},
              {"density", frac(r.p, r.q).str()}};
}

Json to_json(const DyadicAvoider& a, u64 N) {
  const WitnessSet w = a.witness(N);
  return Json{{"alpha", a.alpha.str()},
              {"base_digits", to_json(a.base.expansion())},
              {"complemented", a.complemented},
              {"density", a.density().str()},
              {"witness", Json{{"generator", w.generator}, {"prefix", u64_array(w.prefix)}}}};
}

Json to_json(const Thm3aPlan& plan) {
  return Json{{"b", u64_array(plan.b)},   {"b1", u64_array(plan.b1)},
              {"shift", plan.shift},       {"k", plan.k},
              {"q", plan.q},               {"r", plan.r},
              {"c", plan.c},               {"alpha", plan.alpha.str()},
              {"tail", to_json(plan.tail)}};
}

Json to_json(const Thm3bResult& r) {
  return Json{{"alpha", r.alpha.str()},
              {"p", r.p},
              {"k", r.k},
              {"digits", to_json(r.digits)},
              {"dirichlet_class", to_json(r.dirichlet_class)},
              {"aps", ap_array(r.set.aps)},
              {"parts", part_array(r.set.parts)}};
}

Json to_json(const Thm3cResult& r) {
  return Json{{"alpha", r.alpha.str()},
              {"n", r.n},
              {"k", r.k},
              {"s", u64_array(r.s)},
              {"digits", to_json(r.digits)},
              {"m_digits", to_json(r.m_digits)},
              {"parts", part_array(r.set.parts)}};
}

Json to_json(const Thm4Plan& plan) {
  return Json{{"a", plan.a},
              {"g", plan.g},
              {"alpha", plan.alpha.str()},
              {"trivial", plan.trivial},
              {"p", plan.p},
              {"m", plan.m},
              {"modulus", plan.modulus},
              {"digits", to_json(plan.digits)},
              {"near_misses", u64_array(plan.near_misses)}};
}

}  // namespace addcomp

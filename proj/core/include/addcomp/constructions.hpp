#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addcomp/ap.hpp"
#include "addcomp/composite.hpp"
#include "addcomp/expansion.hpp"
#include "addcomp/mset.hpp"
#include "addcomp/rational.hpp"
#include "addcomp/set_io.hpp"
#include "addcomp/truncated_set.hpp"
#include "addcomp/verify.hpp"

/// The structured sets: avoiders (A + (N \ A) misses a target set) and UDAP
/// sets with a prescribed density. Every builder returns the set together
/// with the parameters it chose, and each has a certify_* companion that
/// replays the claimed properties on a finite window.
namespace addcomp {

using verify::Certificate;

// ---------------------------------------------------------------------------
// Avoider recursion for an arbitrary target S

struct Thm1Plan {
  std::vector<std::uint64_t> s_prefix;  ///< b_1 < b_2 < ... < b_depth
  std::vector<std::uint64_t> seed;      ///< X, finite and nonempty
  std::uint64_t depth() const { return s_prefix.size(); }
};

struct Thm1Result {
  Thm1Plan plan;
  TruncatedSet set;                 ///< bound max(b_depth, max X)
  std::uint64_t literal_stages = 0;  ///< A_1..A_depth
  std::uint64_t closure_rounds = 0;  ///< extra rounds A_{depth+1}, ... until no new element
};

/// A_1 = (X ∪ (b_1 - X)) ∩ N, A_n = ({b_1..b_n} - ∪_{i<n} A_i) ∩ N.
/// After the depth literal stages the recursion keeps running with the same
/// prefix until it stops growing, so the closure property holds on the window.
/// Throws PreconditionError for an unsorted prefix or an empty/zero seed.
Thm1Result thm1_avoider(const Thm1Plan& plan);

Certificate certify_thm1(const Thm1Result& result, ExecConfig exec = {});

// ---------------------------------------------------------------------------
// Geometric avoider: S = {g, g^2, ...}, X = {1}

/// A_1 = {1, g-1}, A_n = A_{n-1} ∪ (g^n - A_{n-1}); ascending, |A_n| = 2^n.
/// Throws DomainError for g <= 2 and when g^n does not fit below 2^63.
std::vector<std::uint64_t> geometric_avoider(std::uint64_t g, std::uint64_t n);

/// |A_n| = 2^n, max A_n = g^n - 1, the recursion agrees with the direct
/// definition A_k = ({g..g^k} - ∪_{i<k} A_i) ∩ N for every k <= n, and
/// (A + (N \ A)) misses every power of g on [1, avoid_N]. Since
/// A ∩ [1, g^n] = A_n, avoid_N is capped at g^n; 0 means min(g^n, 2^20).
Certificate certify_geometric(std::uint64_t g, std::uint64_t n, std::uint64_t avoid_N = 0,
                              ExecConfig exec = {});

// ---------------------------------------------------------------------------
// Rational avoider: A = ∪_{i < p} (i + qN_0) ∩ N

struct RationalAvoider {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  UdapSet set;
  AP missed_class;  ///< (p - 1) + qN_0 inside N
};

/// Throws DomainError unless 1 <= p < q.
RationalAvoider rational_avoider(std::uint64_t p, std::uint64_t q);

/// A + (N \ A) agrees with N \ ((p-1) + qN_0) on [p + q, N]; density p/q;
/// progressions disjoint.
Certificate certify_rational(const RationalAvoider& r, std::uint64_t N, ExecConfig exec = {});

// ---------------------------------------------------------------------------
// Dyadic avoider

struct WitnessSet {
  std::string generator;
  std::vector<std::uint64_t> prefix;  ///< distinct members up to the requested bound, ascending
};

struct DyadicAvoider {
  Rational alpha;
  /// M(2, expand(alpha', 2)) with alpha' = max(alpha, 1 - alpha) >= 1/2, so
  /// its first digit is 1.
  MSet base;
  /// A = N \ base when alpha < 1/2, A = base otherwise.
  bool complemented = false;

  bool member(std::uint64_t x) const;
  TruncatedSet truncate(std::uint64_t N) const;
  Rational density() const;

  /// S = {S_l : l >= 2}, S_l = sum_{j<l} a_j 2^j, members <= N.
  WitnessSet witness(std::uint64_t N) const;

  /// T_l = S_l + 2^{l-1} + 2^l N_0 for l = 1..d (S_1 = 0).
  std::vector<AP> blocks(std::uint64_t d) const;
};

/// Throws DomainError unless 0 < alpha < 1.
DyadicAvoider dyadic_avoider(const Rational& alpha);

/// On [1, N] with N = 2^d: S ∩ (A + (N \ A)) = ∅, A + (N \ A) ⊆ ∪_{l<=d} T_l,
/// S ∩ T_k = ∅ for k <= d, and density(A) = alpha.
Certificate certify_dyadic(const DyadicAvoider& a, std::uint64_t d, ExecConfig exec = {});

// ---------------------------------------------------------------------------
// UDAP set A with d(A + B) = alpha for a finite B

struct Thm3aPlan {
  std::vector<std::uint64_t> b;   ///< B as given, ascending
  std::vector<std::uint64_t> b1;  ///< B - min(B)
  std::uint64_t shift = 0;        ///< min(B)
  std::uint64_t k = 0;            ///< max(B1) + 1
  std::uint64_t q = 2;
  std::uint64_t r = 0;
  std::uint64_t c = 0;            ///< floor(q^r alpha)
  Rational alpha;
  DigitExpansion tail{2, {}, {0}};  ///< b_i = 0 for i <= r, then the digits of q^r alpha - c
};

struct Thm3aResult {
  Thm3aPlan plan;
  UdapComposite set;        ///< X_r ∪ (c - k + 1 + M(q, b))
  UdapComposite predicted;  ///< (∪_{i<c} (i + q^r N_0) \ {0}) ∪ (c + M(q, b)), equal to A + B1 up to finitely many elements
};

/// Smallest r >= 1 with c = floor(q^r alpha) >= max(2k - 2, 1).
/// Throws PreconditionError for empty B, DomainError for alpha outside (0,1]
/// or q < 2.
Thm3aResult thm3a_complement(std::span<const std::uint64_t> b, const Rational& alpha,
                             std::uint64_t q = 2);

/// A + B1 equals the predicted set on [W, N] (W reported, W < c q^r + max B1),
/// exact density of the prediction is alpha, and the progressions of A to
/// `depth` are disjoint.
Certificate certify_thm3a(const Thm3aResult& r, std::uint64_t N, std::uint64_t depth,
                          ExecConfig exec = {});

// ---------------------------------------------------------------------------
// Prime-rich UDAP set of density alpha

struct Thm3bResult {
  Rational alpha;
  std::uint64_t p = 0;
  std::uint64_t k = 0;  ///< floor(p alpha), in [1, p - 2]
  DigitExpansion digits{2, {}, {0}};
  UdapComposite set;    ///< (M(p, digits) \ pN_0) ∪ (k + 1 + pN_0)
  AP dirichlet_class;   ///< k + 1 + pN_0
};

/// p is the smallest prime with 1/p <= alpha < 1 - 1/p.
/// Throws DomainError unless 0 < alpha < 1.
Thm3bResult thm3b_prime_rich(const Rational& alpha);

/// Exact density alpha, at least `min_primes` primes of A below N, disjoint
/// progressions to `depth`.
Certificate certify_thm3b(const Thm3bResult& r, std::uint64_t N, std::uint64_t depth,
                          std::uint64_t min_primes = 10);

// ---------------------------------------------------------------------------
// Prime-free UDAP set of density alpha

struct Thm3cResult {
  Rational alpha;
  std::uint64_t n = 0;
  std::uint64_t k = 0;                ///< floor(n alpha)
  std::vector<std::uint64_t> s;       ///< k smallest composite residues sharing a factor with n, excluding n
  DigitExpansion digits{2, {}, {0}};  ///< expand(alpha, n)
  DigitExpansion m_digits{2, {}, {0}};  ///< digits with a_1 replaced by 0
  UdapComposite set;                  ///< M(n, m_digits) ∪ ∪_{i in S} (i + nN_0)
};

/// Searches the primorial-first family up to n_bound for n with
/// phi(n)/n < 1 - alpha and n - phi(n) - omega(n) - 1 >= floor(n alpha).
/// Throws DomainError unless 0 < alpha < 1, NotFoundError when n_bound is
/// exhausted.
Thm3cResult thm3c_prime_free(const Rational& alpha, std::uint64_t n_bound = 1'000'000);

/// Exact density alpha, no prime of A in [1, N], disjoint progressions.
Certificate certify_thm3c(const Thm3cResult& r, std::uint64_t N, std::uint64_t depth);

// ---------------------------------------------------------------------------
// UDAP additive complement of the geometric progression {a g^i : i >= 1}

struct Thm4Plan {
  std::uint64_t a = 1;
  std::uint64_t g = 2;
  Rational alpha;
  bool trivial = false;       ///< alpha = 1: A = N, no prime needed
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t modulus = 0;  ///< p^m
  DigitExpansion digits{2, {}, {1}};
  std::vector<std::uint64_t> near_misses;  ///< primes where g is primitive mod p only
};

struct Thm4Result {
  Thm4Plan plan;
  MSet set;  ///< M(p^m, expand(alpha, p^m))
};

/// p is the smallest odd prime <= p_bound with p ∤ a and g primitive mod p^2;
/// m the smallest m >= 3 with p^m alpha > 2 unless `m_override` is given (an
/// override is taken as-is so that a bad plan shows up in the certificate).
/// Throws DomainError for alpha outside (0,1] or when every odd prime
/// <= p_bound divides a, NotFoundError when the search is exhausted.
Thm4Result thm4_geometric_complement(std::uint64_t a, std::uint64_t g, const Rational& alpha,
                                     std::uint64_t p_bound,
                                     std::optional<std::uint64_t> m_override = std::nullopt);

/// Residues f(B_0) = {a g^i mod p^m : 1 <= i <= phi(p^m)}.
std::vector<std::uint64_t> thm4_residues(const Thm4Plan& plan);

/// {a g^i : i >= 1} ∩ [1, N], ascending.
std::vector<std::uint64_t> geometric_progression(std::uint64_t a, std::uint64_t g, std::uint64_t N);

/// f(B_0) ∪ (1 + f(B_0)) = [0, p^m - 1], A_0 = p^m N ∪ (1 + p^m N) ⊆ A on
/// [1, N], exact density alpha, disjoint levels, and coverage of
/// {a g^i} with a stable largest exception. `coverage` receives the report.
Certificate certify_thm4(const Thm4Result& r, std::uint64_t N, std::uint64_t depth,
                         verify::CoverageReport* coverage = nullptr, ExecConfig exec = {});

// ---------------------------------------------------------------------------
// Plan serialization

Json to_json(const Thm1Plan& plan);
Json to_json(const RationalAvoider& r);
Json to_json(const DyadicAvoider& a, std::uint64_t N);
Json to_json(const Thm3aPlan& plan);
Json to_json(const Thm3bResult& r);
Json to_json(const Thm3cResult& r);
Json to_json(const Thm4Plan& plan);

}  // namespace addcomp

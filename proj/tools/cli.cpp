#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "addcomp/constructions.hpp"
#include "addcomp/density.hpp"
#include "addcomp/errors.hpp"
#include "addcomp/numtheory.hpp"
#include "addcomp/set_io.hpp"
#include "addcomp/verify.hpp"
#include "set_spec.hpp"

namespace addcomp::cli {

namespace {

using u64 = std::uint64_t;

struct Output {
  explicit Output(std::string cmd = {}) : command(std::move(cmd)) {}

  std::string command;
  Json doc = Json::object();
  std::string set_export;
  std::optional<Certificate> cert;
  std::string failure;  ///< verdict failure outside a certificate
};

struct Options {
  std::string format = "json";
  std::string out_path;
  unsigned threads = 1;

  u64 N = 0;
  u64 depth = 0;
  u64 export_N = 1024;
  std::string alpha;
  std::string claim;
  std::string mset;
  std::string set_a;
  std::string set_b;
  std::string set_s;
  std::string seed = "1";
  std::string aps;
  std::string b_list;
  std::string checkpoints;
  std::int64_t g_signed = 0;
  u64 g = 2;
  u64 n = 0;
  u64 p = 0;
  u64 q = 0;
  u64 a = 1;
  u64 b = 0;
  u64 m = 0;
  u64 count = 10;
  u64 bound = 1'000'000;
  u64 p_bound = 100;
  u64 n_bound = 1'000'000;
  u64 min_primes = 10;
};

Json u64_array(const std::vector<u64>& xs) {
  Json a = Json::array();
  for (u64 x : xs) a.push_back(x);
  return a;
}

ExecConfig exec_of(const Options& o) { return ExecConfig{o.threads}; }

u64 depth_or(const Options& o, u64 fallback) { return o.depth == 0 ? fallback : o.depth; }

// -- construct ---------------------------------------------------------------

Output construct_thm1(const Options& o) {
  const SetSpec s = SetSpec::parse(o.set_s);
  const SetSpec x = SetSpec::parse(o.seed);
  if (!x.finite()) throw PreconditionError("--x must be a finite element list");
  Thm1Plan plan{s.first(depth_or(o, 3)), x.listed()};
  Thm1Result r = thm1_avoider(plan);
  Output out{"construct thm1"};
  out.doc["plan"] = to_json(plan);
  out.doc["literal_stages"] = r.literal_stages;
  out.doc["closure_rounds"] = r.closure_rounds;
  out.doc["elements"] = u64_array(r.set.elements());
  out.set_export = export_elements(r.set);
  out.cert = certify_thm1(r, exec_of(o));
  return out;
}

Output construct_geom(const Options& o) {
  const std::vector<u64> a = geometric_avoider(o.g, o.n);
  Output out{"construct geom"};
  out.doc["plan"] = Json{{"g", o.g}, {"n", o.n}};
  out.doc["size"] = a.size();
  out.doc["max"] = a.back();
  out.doc["elements"] = u64_array(a);
  out.set_export = export_elements(truncate(std::span<const u64>(a), a.back() + 1));
  out.cert = certify_geometric(o.g, o.n, o.N, exec_of(o));
  return out;
}

Output construct_rational(const Options& o) {
  const RationalAvoider r = rational_avoider(o.p, o.q);
  Output out{"construct rational"};
  out.doc["plan"] = to_json(r);
  out.set_export = export_udap(r.q, 1, r.set.aps, {});
  out.cert = certify_rational(r, o.N, exec_of(o));
  return out;
}

Output construct_dyadic(const Options& o) {
  const DyadicAvoider a = dyadic_avoider(parse_alpha(o.alpha));
  const u64 d = depth_or(o, 14);
  if (d == 0 || d > 40) throw PreconditionError("--depth must lie in [1, 40] for dyadic");
  const u64 N = u64{1} << d;
  Output out{"construct dyadic"};
  out.doc["plan"] = to_json(a, N);
  Json blocks = Json::array();
  for (const AP& t : a.blocks(d)) blocks.push_back(to_json(t));
  out.doc["blocks"] = std::move(blocks);
  out.set_export = export_elements(a.truncate(std::min(N, o.export_N)));
  out.cert = certify_dyadic(a, d, exec_of(o));
  return out;
}

Output construct_thm3a(const Options& o) {
  const std::vector<u64> b = parse_u64_list(o.b_list);
  const Thm3aResult r = thm3a_complement(b, parse_alpha(o.alpha), o.q == 0 ? 2 : o.q);
  const u64 d = feasible_depth(r.set, depth_or(o, 8));
  Output out{"construct thm3a"};
  out.doc["plan"] = to_json(r.plan);
  out.set_export = export_udap(r.set, r.plan.q, d);
  out.cert = certify_thm3a(r, o.N, d, exec_of(o));
  return out;
}

Output construct_thm3b(const Options& o) {
  const Thm3bResult r = thm3b_prime_rich(parse_alpha(o.alpha));
  const u64 d = feasible_depth(r.set, depth_or(o, 8));
  Output out{"construct thm3b"};
  out.doc["plan"] = to_json(r);
  out.set_export = export_udap(r.set, r.p, d);
  out.cert = certify_thm3b(r, o.N, d, o.min_primes);
  return out;
}

Output construct_thm3c(const Options& o) {
  const Thm3cResult r = thm3c_prime_free(parse_alpha(o.alpha), o.n_bound);
  const u64 d = feasible_depth(r.set, depth_or(o, 4));
  Output out{"construct thm3c"};
  out.doc["plan"] = to_json(r);
  out.set_export = export_udap(r.set, r.n, d);
  out.cert = certify_thm3c(r, o.N, d);
  return out;
}

Output construct_thm4(const Options& o) {
  std::optional<u64> m;
  if (o.m != 0) m = o.m;
  const Thm4Result r = thm4_geometric_complement(o.a, o.g, parse_alpha(o.alpha), o.p_bound, m);
  const UdapComposite single{{}, {MComponent{0, r.set, 1}}};
  const u64 d = feasible_depth(single, depth_or(o, 4));
  Output out{"construct thm4"};
  out.doc["plan"] = to_json(r.plan);
  verify::CoverageReport cov;
  out.cert = certify_thm4(r, o.N, d, &cov, exec_of(o));
  out.doc["coverage"] = verify::to_json(cov);
  out.set_export = export_udap(r.set, d);
  return out;
}

// -- verify ------------------------------------------------------------------

Output verify_coverage(const Options& o) {
  const verify::CoverageReport rep =
      verify::coverage_exceptions(SetSpec::parse(o.set_a).realize(o.N),
                                  SetSpec::parse(o.set_b).realize(o.N), exec_of(o));
  Output out{"verify coverage"};
  out.doc = verify::to_json(rep);
  if (!rep.stable) out.failure = "coverage_stable";
  return out;
}

Output verify_avoid(const Options& o) {
  const TruncatedSet a = SetSpec::parse(o.set_a).realize(o.N);
  const std::vector<u64> s = SetSpec::parse(o.set_s).realize(o.N).elements();
  const std::vector<u64> hits = verify::avoidance_check(a, s, exec_of(o));
  Output out{"verify avoid"};
  out.doc = Json{{"N", o.N}, {"violations", u64_array(hits)}, {"ok", hits.empty()}};
  if (!hits.empty()) out.failure = "avoidance";
  return out;
}

Output verify_closure(const Options& o) {
  const TruncatedSet a = SetSpec::parse(o.set_a).realize(o.N);
  const std::vector<u64> s = SetSpec::parse(o.set_s).realize(o.N).elements();
  const bool ok = verify::closure_check(a, s, o.N);
  Output out{"verify closure"};
  out.doc = Json{{"window", o.N}, {"ok", ok}};
  if (!ok) out.failure = "closure";
  return out;
}

Output verify_udap(const Options& o) {
  Output out{"verify udap"};
  std::vector<AP> levels;
  std::vector<AP> residuals;
  if (!o.mset.empty()) {
    const DigitExpansion e = DigitExpansion::parse(o.mset);
    const MSetLevels lv = mset_levels(MSet(e.base(), e), depth_or(o, 8));
    levels = lv.levels.aps;
    residuals.push_back(lv.residual);
  } else if (!o.aps.empty()) {
    levels = parse_ap_list(o.aps);
  } else {
    throw PreconditionError("verify udap needs --aps or --mset");
  }
  const bool ok = verify::udap_certificate(levels, residuals);
  out.doc = Json{{"progressions", levels.size()}, {"residuals", residuals.size()}, {"ok", ok}};
  if (!ok) out.failure = "udap_disjoint";
  return out;
}

// -- density and number theory -----------------------------------------------

std::vector<u64> checkpoints_of(const Options& o) {
  if (!o.checkpoints.empty()) return parse_u64_list(o.checkpoints);
  std::vector<u64> cps;
  for (u64 c : {o.N / 4, o.N / 2, o.N}) {
    if (c > 0 && (cps.empty() || cps.back() < c)) cps.push_back(c);
  }
  return cps;
}

Output density(const Options& o) {
  const Rational claimed = parse_alpha(o.claim);
  const std::vector<u64> cps = checkpoints_of(o);
  Output out{"density"};
  DensityReport rep;
  if (!o.mset.empty()) {
    const DigitExpansion e = DigitExpansion::parse(o.mset);
    const u64 d = depth_or(o, 10);
    rep = density_report(MSet(e.base(), e), cps, claimed, d);
    out.doc = to_json(rep);
    out.doc["depth"] = d;
    out.doc["exact_density"] = value(e).str();
    if (auto bad = rep.first_violation()) out.failure = "density_bound at n=" + std::to_string(bad->n);
  } else if (!o.set_a.empty()) {
    const u64 top = *std::max_element(cps.begin(), cps.end());
    rep = density_report(SetSpec::parse(o.set_a).realize(top), cps, claimed);
    out.doc = to_json(rep);
  } else {
    throw PreconditionError("density needs --mset or --a");
  }
  return out;
}

Output primroot_check(const Options& o) {
  Output out{"primroot check"};
  if (o.n < 2) throw DomainError("primroot check requires n >= 2");
  const auto n = static_cast<std::int64_t>(o.n);
  const auto g_mod = static_cast<u64>(((o.g_signed % n) + n) % n);
  const bool coprime = nt::gcd(g_mod, o.n) == 1;
  Json j{{"g", o.g_signed}, {"n", o.n}, {"totient", nt::totient(o.n)}};
  j["order"] = coprime ? Json(nt::multiplicative_order(o.g_signed, o.n)) : Json(nullptr);
  j["primitive_root"] = nt::is_primitive_root(o.g_signed, o.n);
  out.doc = std::move(j);
  return out;
}

Output primroot_find(const Options& o) {
  const nt::ArtinSearch r = nt::find_artin_pair(o.g, o.p_bound, o.a);
  Output out{"primroot find"};
  out.doc = Json{{"g", o.g},
                 {"a", o.a},
                 {"p", r.witness.p},
                 {"k", r.witness.k},
                 {"near_misses", u64_array(r.near_misses)}};
  return out;
}

Output totient(const Options& o) {
  if (o.n == 0) throw DomainError("totient requires n >= 1");
  Json factors = Json::array();
  for (auto [p, e] : nt::factorize(o.n)) factors.push_back(Json{{"p", p}, {"e", e}});
  Output out{"totient"};
  out.doc = Json{{"n", o.n}, {"totient", nt::totient(o.n)}, {"factorization", std::move(factors)}};
  return out;
}

Output primes_in_ap(const Options& o) {
  if (o.a == 0) throw DomainError("primes-in-ap requires a >= 1");
  const nt::PrimesInAp r = nt::primes_in_ap(o.a, o.b, o.count, o.bound);
  Output out{"primes-in-ap"};
  out.doc = Json{{"a", o.a},
                 {"b", o.b},
                 {"bound", o.bound},
                 {"primes", u64_array(r.primes)},
                 {"complete", r.complete}};
  return out;
}

// -- rendering ---------------------------------------------------------------

std::string render(const Output& r, const std::string& format) {
  if (format == "json") {
    Json top{{"command", r.command}};
    for (auto it = r.doc.begin(); it != r.doc.end(); ++it) top[it.key()] = it.value();
    if (!r.set_export.empty()) top["set"] = r.set_export;
    if (r.cert) {
      top["certificate"] = verify::to_json(*r.cert);
      top["ok"] = r.cert->ok();
    }
    return top.dump(2) + "\n";
  }
  std::string text = "# " + r.command + "\n" + r.doc.dump(2) + "\n";
  if (!r.set_export.empty()) text += r.set_export;
  if (r.cert) {
    for (const verify::Check& c : r.cert->checks) {
      text += std::string(c.ok ? "PASS " : "FAIL ") + c.name + " " + c.window;
      if (!c.details.empty()) text += " (" + c.details + ")";
      text += "\n";
    }
  }
  return text;
}

}  // namespace

Environment read_environment() {
  Environment env;
  if (const char* v = std::getenv("ADDCOMP_DEFAULT_N")) {
    const std::vector<u64> parsed = parse_u64_list(v);
    if (parsed.size() != 1 || parsed[0] == 0) {
      throw PreconditionError("ADDCOMP_DEFAULT_N must be a positive integer");
    }
    env.default_N = parsed[0];
  }
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  Options o;
  o.N = env.default_N;

  CLI::App app{"Additive complements, avoider sets and UDAP constructions", "addcomp"};
  app.set_version_flag("--version", "addcomp 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out_path, "write output to this file instead of stdout");
  app.add_option("--threads", o.threads, "worker threads, 0 = hardware");

  std::function<Output(const Options&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  Output (*fn)(const Options&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto add_N = [&](CLI::App* sub) {
    sub->add_option("--N", o.N, "verification bound")->check(CLI::PositiveNumber);
  };
  auto add_depth = [&](CLI::App* sub) {
    sub->add_option("--depth", o.depth, "levels to materialize")->check(CLI::PositiveNumber);
  };

  CLI::App* construct = app.add_subcommand("construct", "build a set and certify it");
  construct->require_subcommand(1);
  construct->fallthrough();
  {
    auto* s = leaf(construct, "thm1", "avoider for an arbitrary target S", construct_thm1);
    s->add_option("--s", o.set_s, "target set S")->required();
    s->add_option("--x", o.seed, "finite seed X");
    add_depth(s);

    s = leaf(construct, "geom", "avoider for the powers of g", construct_geom);
    s->add_option("--g", o.g)->required();
    s->add_option("--n", o.n)->required();
    s->add_option("--N", o.N, "avoidance window, capped at g^n");

    s = leaf(construct, "rational", "avoider with density p/q", construct_rational);
    s->add_option("--p", o.p)->required();
    s->add_option("--q", o.q)->required();
    add_N(s);

    s = leaf(construct, "dyadic", "avoider of density alpha with a witness set", construct_dyadic);
    s->add_option("--alpha", o.alpha)->required();
    add_depth(s);
    s->add_option("--export-N", o.export_N, "largest element listed in the export");

    s = leaf(construct, "thm3a", "UDAP set A with d(A + B) = alpha", construct_thm3a);
    s->add_option("--b", o.b_list, "finite set B")->required();
    s->add_option("--alpha", o.alpha)->required();
    s->add_option("--q", o.q, "base (default 2)");
    add_N(s);
    add_depth(s);

    s = leaf(construct, "thm3b", "prime-rich UDAP set of density alpha", construct_thm3b);
    s->add_option("--alpha", o.alpha)->required();
    s->add_option("--min-primes", o.min_primes);
    add_N(s);
    add_depth(s);

    s = leaf(construct, "thm3c", "prime-free UDAP set of density alpha", construct_thm3c);
    s->add_option("--alpha", o.alpha)->required();
    s->add_option("--n-bound", o.n_bound);
    add_N(s);
    add_depth(s);

    s = leaf(construct, "thm4", "UDAP complement of {a g^i}", construct_thm4);
    s->add_option("--a", o.a);
    s->add_option("--g", o.g)->required();
    s->add_option("--alpha", o.alpha)->required();
    s->add_option("--p-bound", o.p_bound);
    s->add_option("--m", o.m, "force the exponent m");
    add_N(s);
    add_depth(s);
  }

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a property on [1, N]");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  {
    auto* s = leaf(verify_cmd, "coverage", "exceptions of A + B", verify_coverage);
    s->add_option("--a", o.set_a)->required();
    s->add_option("--b", o.set_b)->required();
    add_N(s);

    s = leaf(verify_cmd, "avoid", "S against A + (N \\ A)", verify_avoid);
    s->add_option("--a", o.set_a)->required();
    s->add_option("--s", o.set_s)->required();
    add_N(s);

    s = leaf(verify_cmd, "closure", "b - x in A for x in A, b in S", verify_closure);
    s->add_option("--a", o.set_a)->required();
    s->add_option("--s", o.set_s)->required();
    add_N(s);

    s = leaf(verify_cmd, "udap", "pairwise disjointness of progressions", verify_udap);
    s->add_option("--aps", o.aps, "first:diff list");
    s->add_option("--mset", o.mset, "q:pre|period");
    add_depth(s);
  }

  {
    auto* s = leaf(&app, "density", "exact counts against a claimed density", density);
    s->add_option("--mset", o.mset, "q:pre|period");
    s->add_option("--a", o.set_a, "any set specification");
    s->add_option("--claim", o.claim)->required();
    s->add_option("--checkpoints", o.checkpoints, "comma-separated, ascending");
    add_N(s);
    add_depth(s);
  }

  CLI::App* primroot = app.add_subcommand("primroot", "primitive roots");
  primroot->require_subcommand(1);
  primroot->fallthrough();
  {
    auto* s = leaf(primroot, "check", "is g a primitive root mod n", primroot_check);
    s->add_option("--g", o.g_signed)->required();
    s->add_option("--n", o.n)->required();

    s = leaf(primroot, "find", "smallest odd p with g primitive mod p^2", primroot_find);
    s->add_option("--g", o.g)->required();
    s->add_option("--p-bound", o.p_bound);
    s->add_option("--a", o.a, "skip primes dividing a");
  }
  {
    auto* s = leaf(&app, "totient", "Euler phi", totient);
    s->add_option("--n", o.n)->required();

    s = leaf(&app, "primes-in-ap", "primes of the form a n + b below a bound", primes_in_ap);
    s->add_option("--a", o.a)->required();
    s->add_option("--b", o.b)->required();
    s->add_option("--count", o.count);
    s->add_option("--bound", o.bound);
  }

  // The geom subcommand reuses --N as an optional window with default 0;
  // every other command defaults to the environment's N.
  o.N = env.default_N;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }
  if (construct->got_subcommand("geom") && construct->get_subcommand("geom")->count("--N") == 0) {
    o.N = 0;
  }

  Output result;
  try {
    result = action(o);
  } catch (const LemmaViolation& e) {
    err << "certificate failed: internal lemma: " << e.what() << "\n";
    return kCertificateFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string text = render(result, o.format);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << "\n";
      return kUsageError;
    }
    file << text;
  }

  std::string failed = result.failure;
  if (failed.empty() && result.cert && !result.cert->ok()) failed = result.cert->first_failure();
  if (!failed.empty()) {
    err << "certificate failed: " << failed << "\n";
    return kCertificateFailed;
  }
  return kOk;
}

}  // namespace addcomp::cli

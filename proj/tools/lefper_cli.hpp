#pragma once

// Command-line front end: argv -> CommandRequest -> CommandReport -> text/JSON.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 failed cross-check.

#include "lefper/lefper.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefper::cli {

using nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitInvariant = 4;

enum class UsageKind { UnknownSubcommand, MissingDims, LengthMismatch, BadInteger, BadFlag };

inline std::string to_string(UsageKind k) {
  switch (k) {
    case UsageKind::UnknownSubcommand: return "UnknownSubcommand";
    case UsageKind::MissingDims: return "MissingDims";
    case UsageKind::LengthMismatch: return "LengthMismatch";
    case UsageKind::BadInteger: return "BadInteger";
    case UsageKind::BadFlag: return "BadFlag";
  }
  return "?";
}

class UsageError : public std::runtime_error {
 public:
  UsageError(UsageKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  UsageKind kind() const noexcept { return kind_; }

 private:
  UsageKind kind_;
};

enum class Format { Text, Json };

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"betti",      "lefschetz",   "ell",  "zeta",
                                              "series",     "mperl",       "hyperbolic",
                                              "transversal", "lie",        "verify"};
  return names;
}

struct CommandRequest {
  std::string subcommand;
  std::vector<int> dims;
  std::vector<std::int64_t> eigs;
  std::uint64_t horizon = 20;
  std::uint64_t order = 12;
  Format format = Format::Text;
  bool with_series = false;
  std::optional<LieGroupPreset> lie;

  MapDescriptor descriptor() const { return make_descriptor(dims, eigs); }
};

namespace detail {

template <typename Int>
Int parse_integer(const std::string& token, const std::string& flag) {
  Int value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw UsageError(UsageKind::BadInteger, flag + ": '" + token + "' is not an integer");
  return value;
}

template <typename Int>
std::vector<Int> parse_list(const std::string& text, const std::string& flag) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_integer<Int>(text.substr(start, comma - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::uint64_t parse_positive(const std::string& text, const std::string& flag) {
  const auto v = parse_integer<std::uint64_t>(text, flag);
  if (v == 0) throw UsageError(UsageKind::BadInteger, flag + ": must be a positive integer");
  return v;
}

}  // namespace detail

/// Parses and validates argv (without the program name). Usage problems
/// raise UsageError; invalid spaces raise lefper::Error from the homology layer.
inline CommandRequest parse_request(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError(UsageKind::UnknownSubcommand, "no subcommand given");
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), args.front()) == names.end())
    throw UsageError(UsageKind::UnknownSubcommand, "'" + args.front() + "'");

  CommandRequest req;
  req.subcommand = args.front();

  std::optional<std::string> dims, eigs, horizon, order, family, n, custom;
  std::string format = "text";
  CLI::App app{"lefper"};
  app.allow_extras(false);
  auto opt = [&](const char* name, std::optional<std::string>& target) {
    app.add_option_function<std::string>(name, [&target](const std::string& v) { target = v; });
  };
  opt("--dims", dims);
  opt("--eigs", eigs);
  opt("--horizon", horizon);
  opt("--order", order);
  opt("--family", family);
  opt("--n", n);
  opt("--custom", custom);
  app.add_option("--format", format);
  app.add_flag("--with-series", req.with_series);

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw UsageError(UsageKind::BadFlag, e.what());
  }

  if (format == "text") {
    req.format = Format::Text;
  } else if (format == "json") {
    req.format = Format::Json;
  } else {
    throw UsageError(UsageKind::BadFlag, "--format: expected text or json, got '" + format + "'");
  }
  if (horizon) req.horizon = detail::parse_positive(*horizon, "--horizon");
  if (order) req.order = detail::parse_positive(*order, "--order");
  if (eigs) req.eigs = detail::parse_list<std::int64_t>(*eigs, "--eigs");

  if (req.subcommand == "lie") {
    if (dims) throw UsageError(UsageKind::BadFlag, "--dims: not allowed with lie; use --family");
    if (!family) throw UsageError(UsageKind::BadFlag, "--family: required by lie (SU, Sp or CustomOdd)");
    if (*family == "SU" || *family == "Sp") {
      if (!n) throw UsageError(UsageKind::BadFlag, "--n: required by --family " + *family);
      const int k = detail::parse_integer<int>(*n, "--n");
      req.lie = (*family == "SU") ? LieGroupPreset::su(k) : LieGroupPreset::sp(k);
    } else if (*family == "CustomOdd") {
      if (!custom) throw UsageError(UsageKind::BadFlag, "--custom: required by --family CustomOdd");
      req.lie = LieGroupPreset::custom(detail::parse_list<int>(*custom, "--custom"));
    } else {
      throw UsageError(UsageKind::BadFlag, "--family: unknown family '" + *family + "'");
    }
    req.dims = lie_preset(*req.lie).dims();
  } else {
    if (family || n || custom)
      throw UsageError(UsageKind::BadFlag, "--family/--n/--custom: only valid with lie");
    if (!dims) throw UsageError(UsageKind::MissingDims, "--dims: required");
    req.dims = detail::parse_list<int>(*dims, "--dims");
    make_space(req.dims);
  }
  if (req.subcommand != "betti" && req.eigs.size() != req.dims.size())
    throw UsageError(UsageKind::LengthMismatch, "--eigs: expected " + std::to_string(req.dims.size()) +
                                                    " values, got " + std::to_string(req.eigs.size()));
  return req;
}

inline CommandRequest parse_request(int argc, const char* const* argv) {
  return parse_request(std::vector<std::string>(argv + 1, argv + argc));
}

// ---------------------------------------------------------------------------
// Reports

struct CommandReport {
  ordered_json request;
  ordered_json payload = ordered_json::object();
  std::vector<std::string> text;  // payload as plain-text lines
  std::vector<std::string> deviation_flags;
  std::string version = kVersion;
  int exit_code = kExitOk;
};

namespace detail {

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

inline ordered_json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline ordered_json to_json(const FactoredRationalFunction& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& [base, e] : f.factors()) arr.push_back({{"base", big(base)}, {"exponent", e}});
  return arr;
}

inline std::vector<std::size_t> one_based(const std::vector<std::size_t>& xs) {
  std::vector<std::size_t> out;
  for (auto x : xs) out.push_back(x + 1);
  return out;
}

inline std::string space_name(const std::vector<int>& dims) {
  std::string s;
  for (int n : dims) s += (s.empty() ? "S^" : " x S^") + std::to_string(n);
  return s;
}

inline std::string set_text(const std::vector<std::uint64_t>& xs) { return "{" + join(xs, ",") + "}"; }

inline ordered_json request_json(const CommandRequest& req) {
  ordered_json j;
  j["subcommand"] = req.subcommand;
  j["dims"] = req.dims;
  j["eigs"] = req.eigs;
  j["horizon"] = req.horizon;
  j["order"] = req.order;
  if (req.lie) {
    j["lie_family"] = lefper::to_string(req.lie->family);
    if (req.lie->family == LieFamily::CustomOdd) {
      j["lie_custom"] = req.lie->custom_dims;
    } else {
      j["lie_n"] = req.lie->n;
    }
  }
  return j;
}

inline void beta_flag(const MapDescriptor& desc, std::vector<std::string>& flags) {
  if (!is_quasi_unipotent(desc)) return;
  const auto q = quasi_unipotent_exponents(desc);
  if (q.beta_from_e_counts() != q.beta)
    flags.push_back("beta-exponent: counting e(k) gives beta = " + std::to_string(q.beta_from_e_counts()) +
                    ", but the (1+t) exponent is sum_k o(k)(-1)^{k+1} = " + std::to_string(q.beta));
}

inline void q_product_flag(const MapDescriptor& desc, std::uint64_t horizon,
                           std::vector<std::string>& flags) {
  const auto bad = oracle::q_product_disagreements(desc, horizon);
  if (bad.empty()) return;
  const auto& first = bad.front();
  flags.push_back("q-product-formula: prod_i (-1)^{n_i} Q_m(a_i) disagrees with Moebius inversion at " +
                  std::to_string(bad.size()) + " value(s) of m <= " + std::to_string(horizon) +
                  "; first m = " + std::to_string(first.m) + ": inversion " + first.inversion.str() +
                  ", product " + first.product.str());
}

inline void hyperbolic_flag(const HyperbolicVerdict& v, std::vector<std::string>& flags) {
  if (v.eigenvalue_condition_met && !v.lefschetz_unbounded)
    flags.push_back(
        "infinite-orbit-condition: the eigenvalue condition holds but L(f^m) is bounded"
        " (zeta = " + render(v.zeta) + "), so it does not force infinitely many periodic points");
}

inline void sequence_payload(const LefschetzProfile& prof, bool periodic, CommandReport& rep) {
  const auto& seq = periodic ? prof.periodic : prof.lefschetz;
  ordered_json arr = ordered_json::array();
  for (std::uint64_t m = 1; m <= prof.horizon; ++m) {
    arr.push_back(big(seq[m - 1]));
    rep.text.push_back(std::string(periodic ? "l" : "L") + "(f^" + std::to_string(m) + ") = " +
                       seq[m - 1].str());
  }
  rep.payload[periodic ? "ell" : "L"] = arr;
}

inline ordered_json series_json(const RationalSeries& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : s.coeffs) arr.push_back(lefper::to_string(c));
  return arr;
}

inline void mperl_payload(const MapDescriptor& desc, CommandReport& rep) {
  const auto r = mperl(desc);
  const bool one = r.verdict == MPerL::SetOne;
  rep.payload["mperl"] = one ? ordered_json::array({1}) : ordered_json::array();
  rep.payload["branch"] = r.branch == MPerLBranch::A ? "A" : "B";
  rep.text.push_back(one ? "MPer_L = {1}" : "MPer_L = {}");
  rep.text.push_back(std::string("branch: ") + (r.branch == MPerLBranch::A ? "A" : "B"));
}

inline ordered_json hyperbolic_json(const HyperbolicVerdict& v) {
  return {{"verdict", v.verdict == Hyperbolicity::InfinitelyManyPeriodicPoints ? "InfinitelyManyPeriodicPoints"
                                                                               : "Inconclusive"},
          {"eigenvalue_condition_met", v.eigenvalue_condition_met},
          {"lefschetz_unbounded", v.lefschetz_unbounded},
          {"franks_compatible", v.franks_compatible},
          {"zeta", render(v.zeta)}};
}

inline void hyperbolic_payload(const MapDescriptor& desc, CommandReport& rep, const std::string& key) {
  const auto v = hyperbolic_verdict(desc);
  const auto j = hyperbolic_json(v);
  if (key.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) rep.payload[it.key()] = it.value();
  } else {
    rep.payload[key] = j;
  }
  const std::string prefix = key.empty() ? "" : key + ".";
  rep.text.push_back(prefix + "verdict: " + j["verdict"].get<std::string>());
  rep.text.push_back(prefix + "zeta: " + render(v.zeta));
  rep.text.push_back(prefix + "franks_compatible: " + (v.franks_compatible ? "true" : "false"));
  rep.text.push_back(prefix + "lefschetz_unbounded: " + (v.lefschetz_unbounded ? "true" : "false"));
  rep.text.push_back(prefix + "eigenvalue_condition_met: " + (v.eigenvalue_condition_met ? "true" : "false"));
  hyperbolic_flag(v, rep.deviation_flags);
}

inline void transversal_payload(const MapDescriptor& desc, std::uint64_t horizon, CommandReport& rep,
                                const std::string& key) {
  const auto r = transversal_classify(desc, horizon);
  ordered_json j;
  j["case"] = lefper::to_string(r.case_tag);
  j["horizon"] = r.horizon;
  j["ell_support_window"] = r.ell_support_window;
  ordered_json g = ordered_json::array();
  for (const auto& a : r.guaranteed) {
    ordered_json e{{"claim", a.claim == PeriodClaim::InPer ? "m in Per(f)" : "m or m/2 in Per(f)"},
                   {"scope", lefper::to_string(a.scope)}};
    if (a.m != 0) e["m"] = a.m;
    g.push_back(e);
  }
  j["guaranteed"] = g;
  const std::string prefix = key.empty() ? "" : key + ".";
  rep.text.push_back(prefix + "case: " + lefper::to_string(r.case_tag));
  rep.text.push_back(prefix + "ell support (m <= " + std::to_string(horizon) + "): " + set_text(r.ell_support_window));
  for (const auto& a : r.guaranteed)
    rep.text.push_back(prefix + "guarantee [" + lefper::to_string(a.scope) + "]: " + describe(a));
  if (key.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) rep.payload[it.key()] = it.value();
  } else {
    rep.payload[key] = j;
  }
  for (const auto& f : r.deviation_flags) rep.deviation_flags.push_back(f);
}

inline void verify_payload(const MapDescriptor& desc, const CommandRequest& req, CommandReport& rep) {
  ordered_json checks = ordered_json::array();
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back({{"identity", name}, {"pass", ok}});
    rep.text.push_back(std::string(ok ? "PASS " : "FAIL ") + name);
    if (!ok) rep.exit_code = kExitInvariant;
  };

  bool traces = true;
  for (std::uint64_t m = 1; m <= req.horizon; ++m)
    traces = traces && oracle::lefschetz_via_traces(desc, m) == lefschetz_number(desc, m);
  check("trace-route L(f^m) = product formula, m <= " + std::to_string(req.horizon), traces);

  const auto closed = zeta_closed(desc);
  check("zeta: subset-product form = homology-spectrum form", closed == zeta_homological(desc));
  check("zeta: subset-product form = characteristic-polynomial form", closed == oracle::zeta_via_charpoly(desc));
  check("series: expansion of zeta = exp(sum L(f^m) t^m / m), order " + std::to_string(req.order),
        series_expand(closed, req.order) == series_from_lefschetz(desc, req.order));

  const auto prof = profile(desc, req.horizon);
  check("inversion: sum_{r|m} l(f^r) = L(f^m), m <= " + std::to_string(req.horizon), prof.satisfies_inversion());
  const auto logs = log_zeta_two_ways(profile(desc, req.order));
  check("euler product: log zeta from L = log zeta from l, order " + std::to_string(req.order),
        logs.direct == logs.euler);
  if (is_quasi_unipotent(desc))
    check("quasi-unipotent: (1-t)^alpha (1+t)^beta = zeta", quasi_unipotent_exponents(desc).as_zeta() == closed);
  if (franks_compatible(closed))
    check("franks: decomposition reconstructs zeta", franks_product(franks_decompose(closed)) == closed);

  ordered_json ledger = ordered_json::array();
  for (std::uint64_t m = 2; m <= req.horizon; ++m) {
    const auto c = oracle::adjudicate_q_product(desc, m);
    if (c.agree) continue;
    ledger.push_back({{"m", m}, {"inversion", big(c.inversion)}, {"product", big(c.product)}, {"agree", false}});
    rep.text.push_back("q-product disagree at m=" + std::to_string(m) + ": inversion " + c.inversion.str() +
                       ", product " + c.product.str());
  }
  if (ledger.empty()) rep.text.push_back("q-product agrees for 2 <= m <= " + std::to_string(req.horizon));
  rep.payload["checks"] = checks;
  rep.payload["q_product_disagreements"] = ledger;
  q_product_flag(desc, req.horizon, rep.deviation_flags);
  beta_flag(desc, rep.deviation_flags);
}

}  // namespace detail

/// Runs a validated request. Domain errors propagate as lefper::Error.
inline CommandReport dispatch(const CommandRequest& req) {
  using namespace detail;
  CommandReport rep;
  rep.request = request_json(req);
  const std::string& cmd = req.subcommand;

  if (cmd == "betti") {
    const auto space = make_space(req.dims);
    const auto b = betti_numbers(space);
    rep.payload["space"] = space_name(req.dims);
    rep.payload["total_dimension"] = total_dimension(space);
    rep.payload["betti"] = b;
    rep.text.push_back("space: " + space_name(req.dims));
    rep.text.push_back("betti: " + join(b, " "));
    return rep;
  }

  const MapDescriptor desc = req.descriptor();
  if (cmd == "lefschetz" || cmd == "ell") {
    const auto prof = profile(desc, req.horizon);
    sequence_payload(prof, cmd == "ell", rep);
    if (cmd == "ell") q_product_flag(desc, req.horizon, rep.deviation_flags);
  } else if (cmd == "zeta") {
    const auto z = zeta_closed(desc);
    rep.payload["zeta"] = render(z);
    rep.payload["factors"] = to_json(z);
    rep.text.push_back(render(z));
    if (req.with_series) {
      const auto s = series_expand(z, req.order);
      rep.payload["series"] = series_json(s);
      rep.text.push_back("series: " + join(series_json(s).get<std::vector<std::string>>(), " "));
    }
    beta_flag(desc, rep.deviation_flags);
  } else if (cmd == "series") {
    const auto s = series_expand(zeta_closed(desc), req.order);
    const bool agree = s == series_from_lefschetz(desc, req.order);
    rep.payload["order"] = req.order;
    rep.payload["coefficients"] = series_json(s);
    rep.payload["matches_lefschetz_exp"] = agree;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k)
      rep.text.push_back("t^" + std::to_string(k) + ": " + lefper::to_string(s.coeffs[k]));
    rep.text.push_back(std::string("matches exp(sum L(f^m) t^m / m): ") + (agree ? "true" : "false"));
    if (!agree) rep.exit_code = kExitInvariant;
  } else if (cmd == "mperl") {
    mperl_payload(desc, rep);
    beta_flag(desc, rep.deviation_flags);
  } else if (cmd == "hyperbolic") {
    hyperbolic_payload(desc, rep, "");
  } else if (cmd == "transversal") {
    transversal_payload(desc, req.horizon, rep, "");
  } else if (cmd == "lie") {
    const auto space = lie_preset(*req.lie);
    std::string group = lefper::to_string(req.lie->family);
    if (req.lie->family != LieFamily::CustomOdd) group += "(" + std::to_string(req.lie->n) + ")";
    rep.payload["group"] = group;
    rep.payload["dims"] = space.dims();
    rep.payload["rank"] = space.factors();
    rep.payload["dimension"] = total_dimension(space);
    const auto z = zeta_closed(desc);
    rep.payload["zeta"] = render(z);
    rep.text.push_back("group: " + group);
    rep.text.push_back("space: " + space_name(space.dims()));
    rep.text.push_back("rank: " + std::to_string(space.factors()));
    rep.text.push_back("dimension: " + std::to_string(total_dimension(space)));
    rep.text.push_back("zeta: " + render(z));
    if (is_quasi_unipotent(desc)) {
      const auto r = mperl(desc);
      rep.payload["mperl"] = r.verdict == MPerL::SetOne ? ordered_json::array({1}) : ordered_json::array();
      rep.text.push_back(r.verdict == MPerL::SetOne ? "MPer_L = {1}" : "MPer_L = {}");
      beta_flag(desc, rep.deviation_flags);
    }
    hyperbolic_payload(desc, rep, "hyperbolic");
    transversal_payload(desc, req.horizon, rep, "transversal");
  } else if (cmd == "verify") {
    verify_payload(desc, req, rep);
  }
  return rep;
}

inline std::string render_text(const CommandReport& rep) {
  std::string out;
  for (const auto& line : rep.text) out += line + "\n";
  for (const auto& flag : rep.deviation_flags) out += "deviation: " + flag + "\n";
  return out;
}

inline ordered_json report_json(const CommandReport& rep) {
  return {{"request", rep.request},
          {"payload", rep.payload},
          {"deviation_flags", rep.deviation_flags},
          {"version", rep.version}};
}

inline std::string render_json(const CommandReport& rep) { return report_json(rep).dump(2) + "\n"; }

inline int exit_code_for(ErrorCode code) {
  return code == ErrorCode::InvariantViolation ? kExitInvariant : kExitDomain;
}

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Full pipeline with the exit-code contract applied.
inline RunResult run(const std::vector<std::string>& args) {
  RunResult res;
  try {
    const CommandRequest req = parse_request(args);
    const CommandReport rep = dispatch(req);
    res.out = req.format == Format::Json ? render_json(rep) : render_text(rep);
    res.exit_code = rep.exit_code;
  } catch (const UsageError& e) {
    res.err = std::string("usage error: ") + e.what() + "\n";
    res.exit_code = kExitUsage;
  } catch (const Error& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = exit_code_for(e.code());
  }
  return res;
}

}  // namespace lefper::cli
